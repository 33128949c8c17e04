//! Dense row-major matrices of rationals and of intervals.

use std::fmt;

use crate::error::{MongeError, Result};
use crate::interval::Interval;
use crate::rational::Rational;

/// A zero-based matrix position, displayed one-based as `(row, col)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Position {
    pub row: usize,
    pub col: usize,
}

impl Position {
    pub fn new(row: usize, col: usize) -> Self {
        Self { row, col }
    }
}

impl fmt::Display for Position {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.row + 1, self.col + 1)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

pub type RealMatrix = Matrix<Rational>;
pub type IntervalMatrix = Matrix<Interval>;

impl<T> Matrix<T> {
    pub fn from_vec(rows: usize, cols: usize, data: Vec<T>) -> Result<Self> {
        if rows == 0 || cols == 0 {
            return Err(MongeError::EmptyMatrix { rows, cols });
        }
        if data.len() != rows * cols {
            return Err(MongeError::EntryCount {
                expected: rows * cols,
                actual: data.len(),
            });
        }
        Ok(Self { rows, cols, data })
    }

    pub fn from_rows(rows: Vec<Vec<T>>) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if let Some(bad) = rows.iter().find(|r| r.len() != n) {
            return Err(MongeError::EntryCount {
                expected: n,
                actual: bad.len(),
            });
        }
        Self::from_vec(m, n, rows.into_iter().flatten().collect())
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Result<Self> {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self::from_vec(rows, cols, data)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    #[inline]
    pub fn get(&self, row: usize, col: usize) -> &T {
        debug_assert!(row < self.rows && col < self.cols);
        &self.data[row * self.cols + col]
    }

    #[inline]
    pub fn get_mut(&mut self, row: usize, col: usize) -> &mut T {
        debug_assert!(row < self.rows && col < self.cols);
        &mut self.data[row * self.cols + col]
    }

    pub fn row(&self, row: usize) -> &[T] {
        &self.data[row * self.cols..(row + 1) * self.cols]
    }

    pub fn iter(&self) -> impl Iterator<Item = &T> {
        self.data.iter()
    }

    pub fn indexed(&self) -> impl Iterator<Item = (Position, &T)> {
        let cols = self.cols;
        self.data
            .iter()
            .enumerate()
            .map(move |(k, v)| (Position::new(k / cols, k % cols), v))
    }

    pub fn to_rows(&self) -> Vec<Vec<T>>
    where
        T: Clone,
    {
        self.data.chunks(self.cols).map(<[T]>::to_vec).collect()
    }

    pub fn map<U>(&self, f: impl FnMut(&T) -> U) -> Matrix<U> {
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(f).collect(),
        }
    }

    pub fn zip_with<U, V>(
        &self,
        other: &Matrix<U>,
        mut f: impl FnMut(&T, &U) -> V,
    ) -> Result<Matrix<V>> {
        check_same_shape(self.shape(), other.shape())?;
        Ok(Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| f(a, b))
                .collect(),
        })
    }

    pub fn transpose(&self) -> Self
    where
        T: Clone,
    {
        let mut data = Vec::with_capacity(self.data.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                data.push(self.get(i, j).clone());
            }
        }
        Self {
            rows: self.cols,
            cols: self.rows,
            data,
        }
    }

    /// Reorders rows and columns: entry `(p, q)` of the result is entry
    /// `(row_order[p], col_order[q])` of `self`.
    pub fn permute(&self, row_order: &[usize], col_order: &[usize]) -> Self
    where
        T: Clone,
    {
        assert_eq!(row_order.len(), self.rows, "row order length");
        assert_eq!(col_order.len(), self.cols, "column order length");
        let mut data = Vec::with_capacity(self.data.len());
        for &i in row_order {
            let row = self.row(i);
            data.extend(col_order.iter().map(|&j| row[j].clone()));
        }
        Self {
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }
}

pub(crate) fn check_same_shape(left: (usize, usize), right: (usize, usize)) -> Result<()> {
    if left != right {
        return Err(MongeError::DimensionMismatch {
            left: format!("{}x{}", left.0, left.1),
            right: format!("{}x{}", right.0, right.1),
        });
    }
    Ok(())
}

impl RealMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Result<Self> {
        Self::from_fn(rows, cols, |_, _| crate::rational::int(0))
    }

    pub fn from_integers(rows: &[&[i64]]) -> Result<Self> {
        Self::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&v| crate::rational::int(v)).collect())
                .collect(),
        )
    }

    pub fn to_interval(&self) -> IntervalMatrix {
        self.map(|v| Interval::point(v.clone()))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn scale(&self, alpha: &Rational) -> Self {
        self.map(|v| alpha * v)
    }
}

impl IntervalMatrix {
    pub fn from_bounds(lower: &RealMatrix, upper: &RealMatrix) -> Result<Self> {
        check_same_shape(lower.shape(), upper.shape())?;
        let mut data = Vec::with_capacity(lower.data.len());
        for (pos, lo) in lower.indexed() {
            let hi = upper.get(pos.row, pos.col);
            if lo > hi {
                return Err(MongeError::InvertedBounds(pos));
            }
            data.push(Interval::new(lo.clone(), hi.clone())?);
        }
        Self::from_vec(lower.rows, lower.cols, data)
    }

    pub fn from_integer_bounds(entries: &[&[(i64, i64)]]) -> Result<Self> {
        let rows = entries
            .iter()
            .map(|r| {
                r.iter()
                    .map(|&(lo, hi)| {
                        Interval::new(crate::rational::int(lo), crate::rational::int(hi))
                    })
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_rows(rows)
    }

    pub fn lower(&self) -> RealMatrix {
        self.map(|v| v.lo().clone())
    }

    pub fn upper(&self) -> RealMatrix {
        self.map(|v| v.hi().clone())
    }

    pub fn center(&self) -> RealMatrix {
        self.map(Interval::center)
    }

    pub fn radius(&self) -> RealMatrix {
        self.map(Interval::radius)
    }

    #[inline]
    pub fn lo(&self, row: usize, col: usize) -> &Rational {
        self.get(row, col).lo()
    }

    #[inline]
    pub fn hi(&self, row: usize, col: usize) -> &Rational {
        self.get(row, col).hi()
    }

    pub fn is_degenerate(&self) -> bool {
        self.iter().all(Interval::is_degenerate)
    }

    /// The real matrix when every entry is degenerate.
    pub fn to_real(&self) -> Option<RealMatrix> {
        self.is_degenerate().then(|| self.lower())
    }

    /// Whether `x` lies entrywise between the bound matrices.
    pub fn contains(&self, x: &RealMatrix) -> bool {
        self.shape() == x.shape() && self.data.iter().zip(&x.data).all(|(a, v)| a.contains(v))
    }

    /// First position where `x` leaves the bounds.
    pub fn first_violation(&self, x: &RealMatrix) -> Option<Position> {
        self.indexed()
            .find(|(p, a)| !a.contains(x.get(p.row, p.col)))
            .map(|(p, _)| p)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.zip_with(other, |a, b| a + b)
    }

    /// Reverses both axes.
    pub fn flip(&self) -> Self {
        let rows: Vec<usize> = (0..self.rows).rev().collect();
        let cols: Vec<usize> = (0..self.cols).rev().collect();
        self.permute(&rows, &cols)
    }
}

/// Outcome of an entrywise intersection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Intersection {
    Matrix(IntervalMatrix),
    EmptyAt(Vec<Position>),
}

impl Intersection {
    pub fn into_matrix(self) -> Result<IntervalMatrix> {
        match self {
            Intersection::Matrix(m) => Ok(m),
            Intersection::EmptyAt(positions) => Err(MongeError::EmptyIntersection(positions)),
        }
    }
}

pub fn intersection(a: &IntervalMatrix, b: &IntervalMatrix) -> Result<Intersection> {
    let entries = a.zip_with(b, Interval::intersect)?;
    let empty: Vec<Position> = entries
        .indexed()
        .filter(|(_, v)| v.is_none())
        .map(|(p, _)| p)
        .collect();
    if !empty.is_empty() {
        return Ok(Intersection::EmptyAt(empty));
    }
    Ok(Intersection::Matrix(entries.map(|v| {
        v.clone().expect("checked nonempty")
    })))
}

/// Entrywise hull of the union of two interval matrices.
pub fn union_envelope(a: &IntervalMatrix, b: &IntervalMatrix) -> Result<IntervalMatrix> {
    a.zip_with(b, Interval::hull)
}

/// The two corner matrices `(up, down)`.
///
/// `up` takes the upper bound where the one-based index sum `i + j` is even
/// and the lower bound where it is odd; `down` does the opposite.
pub fn corner_matrices(m: &IntervalMatrix) -> (RealMatrix, RealMatrix) {
    // Zero-based parity matches one-based parity since both indices shift by one.
    let pick = |upper_on_even: bool| {
        RealMatrix::from_fn(m.rows(), m.cols(), |i, j| {
            let even = (i + j) % 2 == 0;
            if even == upper_on_even {
                m.hi(i, j).clone()
            } else {
                m.lo(i, j).clone()
            }
        })
        .expect("same shape as input")
    };
    (pick(true), pick(false))
}

impl<T: fmt::Display> fmt::Display for Matrix<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.data.iter().map(ToString::to_string).collect();
        let width = cells.iter().map(String::len).max().unwrap_or(0);
        for (i, row) in cells.chunks(self.cols).enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let line: Vec<String> = row.iter().map(|c| format!("{c:>width$}")).collect();
            write!(f, "{}", line.join("  "))?;
        }
        Ok(())
    }
}
