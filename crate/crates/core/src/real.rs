//! Real Monge matrices: recognition, closure operations and the
//! decomposition into extremal rays of the cone of nonnegative Monge
//! matrices.
//!
//! A matrix is Monge when `m[i][j] + m[k][l] <= m[i][l] + m[k][j]` for all
//! `i < k` and `j < l`. The adjacent-cell form of the inequality is
//! equivalent and is what [`is_monge`] checks in `O(mn)`.

use num::traits::{Signed, Zero};

use crate::error::{MongeError, Result};
use crate::matrix::{Position, RealMatrix};
use crate::rational::Rational;
use crate::simplex::{self, BoundedSystem, Feasibility, LinearRow, Relation};

/// `m[i+1][j] + m[i][j+1] - m[i][j] - m[i+1][j+1]`, the slack of the adjacent
/// Monge inequality anchored at `(i, j)`.
#[inline]
pub fn adjacent_residual(m: &RealMatrix, i: usize, j: usize) -> Rational {
    m.get(i + 1, j) + m.get(i, j + 1) - m.get(i, j) - m.get(i + 1, j + 1)
}

pub fn is_monge(m: &RealMatrix) -> bool {
    (0..m.rows().saturating_sub(1))
        .all(|i| (0..m.cols() - 1).all(|j| !adjacent_residual(m, i, j).is_negative()))
}

/// First adjacent position whose inequality fails.
pub fn first_monge_violation(m: &RealMatrix) -> Option<Position> {
    for i in 0..m.rows().saturating_sub(1) {
        for j in 0..m.cols() - 1 {
            if adjacent_residual(m, i, j).is_negative() {
                return Some(Position::new(i, j));
            }
        }
    }
    None
}

/// Checks the defining inequality over every quadruple; `O(m^2 n^2)`.
pub fn is_monge_quadruples(m: &RealMatrix) -> bool {
    let (rows, cols) = m.shape();
    for i in 0..rows {
        for k in i + 1..rows {
            for j in 0..cols {
                for l in j + 1..cols {
                    if m.get(i, j) + m.get(k, l) > m.get(i, l) + m.get(k, j) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Submodularity of `f(i, j) = m[i][j]` on the product lattice, checked over
/// every pair of lattice points.
pub fn is_submodular(m: &RealMatrix) -> bool {
    let points: Vec<(usize, usize)> = (0..m.rows())
        .flat_map(|i| (0..m.cols()).map(move |j| (i, j)))
        .collect();
    points.iter().all(|&x| {
        points.iter().all(|&y| {
            let join = (x.0.max(y.0), x.1.max(y.1));
            let meet = (x.0.min(y.0), x.1.min(y.1));
            m.get(join.0, join.1) + m.get(meet.0, meet.1) <= m.get(x.0, x.1) + m.get(y.0, y.1)
        })
    })
}

/// The `(m-1) x (n-1)` matrix of adjacent residuals.
pub fn residual(m: &RealMatrix) -> Result<RealMatrix> {
    let (rows, cols) = m.shape();
    if rows < 2 || cols < 2 {
        return Err(MongeError::TooSmall { rows, cols });
    }
    RealMatrix::from_fn(rows - 1, cols - 1, |i, j| adjacent_residual(m, i, j))
}

pub fn transpose(m: &RealMatrix) -> RealMatrix {
    m.transpose()
}

pub fn scale(alpha: &Rational, m: &RealMatrix) -> Result<RealMatrix> {
    if alpha.is_negative() {
        return Err(MongeError::NegativeScalar);
    }
    Ok(m.scale(alpha))
}

pub fn sum(m: &RealMatrix, n: &RealMatrix) -> Result<RealMatrix> {
    m.add(n)
}

/// `c[i][j] = m[i][j] + u[i] + v[j]`.
pub fn add_potentials(m: &RealMatrix, u: &[Rational], v: &[Rational]) -> Result<RealMatrix> {
    if u.len() != m.rows() || v.len() != m.cols() {
        return Err(MongeError::DimensionMismatch {
            left: format!("{}x{}", m.rows(), m.cols()),
            right: format!("potentials of lengths {} and {}", u.len(), v.len()),
        });
    }
    RealMatrix::from_fn(m.rows(), m.cols(), |i, j| m.get(i, j) + &u[i] + &v[j])
}

/// Nonnegative coefficients over the extremal-ray generators.
///
/// * `kappa[i]` weights the matrix whose row `i` is all ones,
/// * `lambda[j]` weights the matrix whose column `j` is all ones,
/// * `mu[r][s]` weights the lower-left block of ones covering rows `r+1..m`
///   and columns `0..=s` (one-based: rows `r+2..=m`, columns `1..=s+1`),
/// * `nu[p][q]` weights the upper-right block covering rows `0..=p` and
///   columns `q+1..n` (one-based: rows `1..=p+1`, columns `q+2..=n`).
///
/// `mu` and `nu` both hold `m-1` rows of `n-1` coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MongeDecomposition {
    pub kappa: Vec<Rational>,
    pub lambda: Vec<Rational>,
    pub mu: Vec<Vec<Rational>>,
    pub nu: Vec<Vec<Rational>>,
}

/// One generator of the cone, with zero-based block parameters.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Generator {
    Row(usize),
    Col(usize),
    LowerLeft(usize, usize),
    UpperRight(usize, usize),
}

impl Generator {
    fn all(rows: usize, cols: usize) -> Vec<Generator> {
        let mut gens: Vec<Generator> = (0..rows).map(Generator::Row).collect();
        gens.extend((0..cols).map(Generator::Col));
        for r in 0..rows.saturating_sub(1) {
            for s in 0..cols.saturating_sub(1) {
                gens.push(Generator::LowerLeft(r, s));
            }
        }
        for p in 0..rows.saturating_sub(1) {
            for q in 0..cols.saturating_sub(1) {
                gens.push(Generator::UpperRight(p, q));
            }
        }
        gens
    }

    fn covers(self, i: usize, j: usize) -> bool {
        match self {
            Generator::Row(r) => i == r,
            Generator::Col(c) => j == c,
            Generator::LowerLeft(r, s) => i > r && j <= s,
            Generator::UpperRight(p, q) => i <= p && j > q,
        }
    }
}

impl MongeDecomposition {
    pub fn zero(rows: usize, cols: usize) -> Self {
        let block = vec![vec![Rational::zero(); cols.saturating_sub(1)]; rows.saturating_sub(1)];
        Self {
            kappa: vec![Rational::zero(); rows],
            lambda: vec![Rational::zero(); cols],
            mu: block.clone(),
            nu: block,
        }
    }

    fn validate(&self, rows: usize, cols: usize) -> Result<()> {
        let check = |name: &'static str, expected: usize, actual: usize| {
            if expected == actual {
                Ok(())
            } else {
                Err(MongeError::IndexRangeViolation {
                    name,
                    expected,
                    actual,
                })
            }
        };
        check("kappa", rows, self.kappa.len())?;
        check("lambda", cols, self.lambda.len())?;
        check("mu", rows - 1, self.mu.len())?;
        check("nu", rows - 1, self.nu.len())?;
        for r in &self.mu {
            check("mu row", cols - 1, r.len())?;
        }
        for r in &self.nu {
            check("nu row", cols - 1, r.len())?;
        }
        let negative = |name: &str, i: usize, v: &Rational| {
            v.is_negative().then(|| MongeError::NegativeCoefficient {
                name: format!("{name}[{}]", i + 1),
            })
        };
        for (i, v) in self.kappa.iter().enumerate() {
            negative("kappa", i, v).map_or(Ok(()), Err)?;
        }
        for (j, v) in self.lambda.iter().enumerate() {
            negative("lambda", j, v).map_or(Ok(()), Err)?;
        }
        for (r, row) in self.mu.iter().enumerate() {
            for (s, v) in row.iter().enumerate() {
                if v.is_negative() {
                    return Err(MongeError::NegativeCoefficient {
                        name: format!("mu[{},{}]", r + 2, s + 1),
                    });
                }
            }
        }
        for (p, row) in self.nu.iter().enumerate() {
            for (q, v) in row.iter().enumerate() {
                if v.is_negative() {
                    return Err(MongeError::NegativeCoefficient {
                        name: format!("nu[{},{}]", p + 1, q + 2),
                    });
                }
            }
        }
        Ok(())
    }

    fn coefficient_mut(&mut self, g: Generator) -> &mut Rational {
        match g {
            Generator::Row(r) => &mut self.kappa[r],
            Generator::Col(c) => &mut self.lambda[c],
            Generator::LowerLeft(r, s) => &mut self.mu[r][s],
            Generator::UpperRight(p, q) => &mut self.nu[p][q],
        }
    }
}

/// Sums the weighted generators into an `rows x cols` matrix.
pub fn reconstruct(d: &MongeDecomposition, rows: usize, cols: usize) -> Result<RealMatrix> {
    if rows == 0 || cols == 0 {
        return Err(MongeError::EmptyMatrix { rows, cols });
    }
    d.validate(rows, cols)?;
    // Block generators are accumulated with 2D prefix sums so this stays O(mn).
    let mut lower_left = vec![vec![Rational::zero(); cols]; rows];
    let mut upper_right = vec![vec![Rational::zero(); cols]; rows];
    for i in 0..rows {
        for j in (0..cols).rev() {
            // Lower-left blocks (r, s) cover (i, j) when r < i and s >= j.
            let mut acc = if i > 0 && j + 1 < cols {
                d.mu[i - 1][j].clone()
            } else {
                Rational::zero()
            };
            if i > 0 {
                acc += &lower_left[i - 1][j];
            }
            if j + 1 < cols {
                acc += &lower_left[i][j + 1];
            }
            if i > 0 && j + 1 < cols {
                acc -= &lower_left[i - 1][j + 1];
            }
            lower_left[i][j] = acc;
        }
    }
    for i in (0..rows).rev() {
        for j in 0..cols {
            // Upper-right blocks (p, q) cover (i, j) when p >= i and q < j.
            let mut acc = if i + 1 < rows && j > 0 {
                d.nu[i][j - 1].clone()
            } else {
                Rational::zero()
            };
            if i + 1 < rows {
                acc += &upper_right[i + 1][j];
            }
            if j > 0 {
                acc += &upper_right[i][j - 1];
            }
            if i + 1 < rows && j > 0 {
                acc -= &upper_right[i + 1][j - 1];
            }
            upper_right[i][j] = acc;
        }
    }
    RealMatrix::from_fn(rows, cols, |i, j| {
        &d.kappa[i] + &d.lambda[j] + &lower_left[i][j] + &upper_right[i][j]
    })
}

/// Finds nonnegative generator coefficients reproducing `m`.
///
/// The coefficients are a basic feasible solution of the exact linear system
/// `sum(coef * generator) = m`, `coef >= 0`.
pub fn decompose(m: &RealMatrix) -> Result<MongeDecomposition> {
    if let Some((pos, _)) = m.indexed().find(|(_, v)| v.is_negative()) {
        return Err(MongeError::NegativeEntry(pos));
    }
    if !is_monge(m) {
        return Err(MongeError::NotMonge);
    }
    let (rows, cols) = m.shape();
    let gens = Generator::all(rows, cols);
    let equations = (0..rows)
        .flat_map(|i| (0..cols).map(move |j| (i, j)))
        .map(|(i, j)| LinearRow {
            terms: gens
                .iter()
                .enumerate()
                .filter(|(_, g)| g.covers(i, j))
                .map(|(k, _)| (k, Rational::from_integer(1.into())))
                .collect(),
            relation: Relation::Equal,
            rhs: m.get(i, j).clone(),
        })
        .collect();
    let system = BoundedSystem {
        lower: vec![Rational::zero(); gens.len()],
        upper: vec![None; gens.len()],
        rows: equations,
    };
    let Feasibility::Feasible(x) = simplex::find_feasible_point(&system)? else {
        return Err(MongeError::Internal(
            "nonnegative Monge matrix has no generator decomposition".into(),
        ));
    };
    let mut d = MongeDecomposition::zero(rows, cols);
    for (g, v) in gens.iter().zip(x) {
        *d.coefficient_mut(*g) = v;
    }
    if reconstruct(&d, rows, cols)? != *m {
        return Err(MongeError::Internal("decomposition does not reconstruct".into()));
    }
    Ok(d)
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use proptest::prelude::*;

    pub(crate) fn monge_4x4() -> RealMatrix {
        RealMatrix::from_integers(&[
            &[3, 10, 17, 24],
            &[2, 7, 12, 17],
            &[2, 6, 10, 14],
            &[1, 3, 5, 7],
        ])
        .unwrap()
    }

    fn all_checks(m: &RealMatrix) -> [bool; 3] {
        [is_monge(m), is_monge_quadruples(m), is_submodular(m)]
    }

    #[test]
    fn recognizes_known_matrices() {
        assert_eq!(all_checks(&monge_4x4()), [true; 3]);
        let row = RealMatrix::from_integers(&[&[5, -1, 9]]).unwrap();
        assert_eq!(all_checks(&row), [true; 3]);
        assert_eq!(all_checks(&row.transpose()), [true; 3]);
        let bad = RealMatrix::from_integers(&[&[0, 0], &[0, 1]]).unwrap();
        assert_eq!(all_checks(&bad), [false; 3]);
        assert_eq!(first_monge_violation(&bad), Some(Position::new(0, 0)));
    }

    #[test]
    fn residual_examples() {
        let bad = RealMatrix::from_integers(&[&[0, 0], &[0, 1]]).unwrap();
        assert_eq!(residual(&bad).unwrap(), RealMatrix::from_integers(&[&[-1]]).unwrap());

        let constant = RealMatrix::from_fn(3, 4, |_, _| int(7)).unwrap();
        assert!(residual(&constant).unwrap().iter().all(Zero::is_zero));

        let r = residual(&monge_4x4()).unwrap();
        assert_eq!(r.shape(), (3, 3));
        assert_eq!(*r.get(0, 0), int(2));
        assert!(r.iter().all(|v| !v.is_negative()));

        let row = RealMatrix::from_integers(&[&[1, 2]]).unwrap();
        assert_eq!(residual(&row), Err(MongeError::TooSmall { rows: 1, cols: 2 }));
    }

    #[test]
    fn closure_operations_keep_monge() {
        let m = monge_4x4();
        assert!(is_monge(&transpose(&m)));
        let zero = scale(&int(0), &m).unwrap();
        assert!(zero.iter().all(Zero::is_zero) && is_monge(&zero));
        assert!(is_monge(&scale(&ratio(5, 3), &m).unwrap()));
        assert_eq!(scale(&int(-1), &m), Err(MongeError::NegativeScalar));
        assert!(is_monge(&sum(&m, &m.transpose()).unwrap()));

        let u = [int(4), int(-9), int(0), ratio(1, 2)];
        let v = [int(-3), int(8), int(1), int(100)];
        let shifted = add_potentials(&m, &u, &v).unwrap();
        assert!(is_monge(&shifted));
        assert_eq!(residual(&shifted).unwrap(), residual(&m).unwrap());
        assert!(add_potentials(&m, &u[..2], &v).is_err());
    }

    #[test]
    fn reconstruct_single_generators() {
        let mut d = MongeDecomposition::zero(2, 2);
        d.kappa[0] = int(1);
        assert_eq!(reconstruct(&d, 2, 2).unwrap(), RealMatrix::from_integers(&[&[1, 1], &[0, 0]]).unwrap());

        let mut d = MongeDecomposition::zero(2, 2);
        d.mu[0][0] = int(1);
        assert_eq!(reconstruct(&d, 2, 2).unwrap(), RealMatrix::from_integers(&[&[0, 0], &[1, 0]]).unwrap());

        let mut d = MongeDecomposition::zero(2, 2);
        d.nu[0][0] = int(1);
        assert_eq!(reconstruct(&d, 2, 2).unwrap(), RealMatrix::from_integers(&[&[0, 1], &[0, 0]]).unwrap());

        let mut d = MongeDecomposition::zero(2, 2);
        d.kappa[1] = int(3);
        d.mu[0][0] = int(5);
        assert_eq!(reconstruct(&d, 2, 2).unwrap(), RealMatrix::from_integers(&[&[0, 0], &[8, 3]]).unwrap());
    }

    #[test]
    fn reconstruct_rejects_bad_shapes_and_signs() {
        let d = MongeDecomposition::zero(2, 3);
        assert!(matches!(reconstruct(&d, 3, 3), Err(MongeError::IndexRangeViolation { .. })));
        let mut d = MongeDecomposition::zero(2, 2);
        d.nu[0][0] = int(-1);
        assert!(matches!(reconstruct(&d, 2, 2), Err(MongeError::NegativeCoefficient { .. })));
    }

    #[test]
    fn decompose_examples() {
        let m = RealMatrix::from_integers(&[&[1, 5], &[6, 0]]).unwrap();
        let d = decompose(&m).unwrap();
        assert_eq!(reconstruct(&d, 2, 2).unwrap(), m);

        let zero = RealMatrix::zeros(3, 4).unwrap();
        assert_eq!(decompose(&zero).unwrap(), MongeDecomposition::zero(3, 4));

        let row = RealMatrix::from_integers(&[&[2, 0, 7]]).unwrap();
        let d = decompose(&row).unwrap();
        assert!(d.mu.is_empty() && d.nu.is_empty());
        assert_eq!(reconstruct(&d, 1, 3).unwrap(), row);

        assert_eq!(
            decompose(&RealMatrix::from_integers(&[&[0, 0], &[0, 1]]).unwrap()),
            Err(MongeError::NotMonge)
        );
        assert_eq!(
            decompose(&RealMatrix::from_integers(&[&[0, -1]]).unwrap()),
            Err(MongeError::NegativeEntry(Position::new(0, 1)))
        );
    }

    // Matrix from an explicit generator sum, written out independently of
    // `reconstruct`.
    fn naive_sum(d: &MongeDecomposition, rows: usize, cols: usize) -> RealMatrix {
        RealMatrix::from_fn(rows, cols, |i, j| {
            let mut v = &d.kappa[i] + &d.lambda[j];
            for r in 0..rows - 1 {
                for s in 0..cols - 1 {
                    if i > r && j <= s {
                        v += &d.mu[r][s];
                    }
                    if i <= r && j > s {
                        v += &d.nu[r][s];
                    }
                }
            }
            v
        })
        .unwrap()
    }

    fn arb_decomposition() -> impl Strategy<Value = (MongeDecomposition, usize, usize)> {
        (1usize..6, 1usize..6).prop_flat_map(|(rows, cols)| {
            let k = rows + cols + 2 * (rows - 1) * (cols - 1);
            proptest::collection::vec(0i64..4, k).prop_map(move |c| {
                let mut d = MongeDecomposition::zero(rows, cols);
                let mut it = c.into_iter().map(int);
                d.kappa.iter_mut().for_each(|v| *v = it.next().unwrap());
                d.lambda.iter_mut().for_each(|v| *v = it.next().unwrap());
                d.mu.iter_mut().flatten().for_each(|v| *v = it.next().unwrap());
                d.nu.iter_mut().flatten().for_each(|v| *v = it.next().unwrap());
                (d, rows, cols)
            })
        })
    }

    fn arb_matrix() -> impl Strategy<Value = RealMatrix> {
        (1usize..7, 1usize..7).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-6i64..6, r * c)
                .prop_map(move |v| RealMatrix::from_vec(r, c, v.into_iter().map(int).collect()).unwrap())
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(200))]

        #[test]
        fn characterizations_agree(m in arb_matrix()) {
            let adjacent = is_monge(&m);
            prop_assert_eq!(adjacent, is_monge_quadruples(&m));
            prop_assert_eq!(adjacent, is_submodular(&m));
            if m.rows() >= 2 && m.cols() >= 2 {
                let r = residual(&m).unwrap();
                prop_assert_eq!(adjacent, r.iter().all(|v| !v.is_negative()));
            }
        }

        #[test]
        fn generator_sums_are_nonnegative_monge((d, rows, cols) in arb_decomposition()) {
            let m = reconstruct(&d, rows, cols).unwrap();
            prop_assert_eq!(&m, &naive_sum(&d, rows, cols));
            prop_assert!(is_monge(&m));
            prop_assert!(m.iter().all(|v| !v.is_negative()));
        }

        #[test]
        fn decomposition_round_trips((d, rows, cols) in arb_decomposition()) {
            let m = reconstruct(&d, rows, cols).unwrap();
            let again = decompose(&m).unwrap();
            prop_assert_eq!(reconstruct(&again, rows, cols).unwrap(), m);
        }
    }
}
