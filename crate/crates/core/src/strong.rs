//! Strong Monge property: every member of the interval matrix is Monge.
//!
//! Four equivalent recognizers are provided. [`is_strong_monge`] is the
//! `O(mn)` adjacent test on the bound matrices; the others exist as
//! independent routes to the same verdict.

use num::traits::{Signed, Zero};

use crate::error::{MongeError, Result};
use crate::interval::Interval;
use crate::matrix::{corner_matrices, IntervalMatrix, Position, RealMatrix};
use crate::rational::Rational;
use crate::real;

/// `lo[i][j+1] + lo[i+1][j] - hi[i][j] - hi[i+1][j+1]`; nonnegative for every
/// adjacent `(i, j)` exactly when the matrix is strongly Monge.
#[inline]
pub fn strong_slack(m: &IntervalMatrix, i: usize, j: usize) -> Rational {
    m.lo(i, j + 1) + m.lo(i + 1, j) - m.hi(i, j) - m.hi(i + 1, j + 1)
}

pub fn is_strong_monge(m: &IntervalMatrix) -> bool {
    first_strong_violation(m).is_none()
}

pub fn first_strong_violation(m: &IntervalMatrix) -> Option<Position> {
    for i in 0..m.rows().saturating_sub(1) {
        for j in 0..m.cols() - 1 {
            if strong_slack(m, i, j).is_negative() {
                return Some(Position::new(i, j));
            }
        }
    }
    None
}

/// `hi[i][j] + hi[k][l] <= lo[i][l] + lo[k][j]` over all `i < k`, `j < l`.
pub fn is_strong_monge_quadruples(m: &IntervalMatrix) -> bool {
    let (rows, cols) = m.shape();
    for i in 0..rows {
        for k in i + 1..rows {
            for j in 0..cols {
                for l in j + 1..cols {
                    if m.hi(i, j) + m.hi(k, l) > m.lo(i, l) + m.lo(k, j) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn is_strong_monge_corners(m: &IntervalMatrix) -> bool {
    let (up, down) = corner_matrices(m);
    real::is_monge(&up) && real::is_monge(&down)
}

/// Interval submodularity of `f(i, j) = m[i][j]`:
/// `hi(x v y) + hi(x ^ y) <= lo(x) + lo(y)`.
///
/// Only incomparable pairs `x`, `y` are checked. For a comparable pair the
/// join and meet are `x` and `y` themselves, and the inequality would force
/// `x` and `y` to be degenerate, so quantifying over all pairs would reject
/// every matrix with a proper interval entry.
pub fn is_interval_submodular(m: &IntervalMatrix) -> bool {
    let (rows, cols) = m.shape();
    for x0 in 0..rows {
        for y0 in x0 + 1..rows {
            for x1 in 0..cols {
                for y1 in 0..cols {
                    // Incomparable means one coordinate grows while the other shrinks.
                    if x1 <= y1 {
                        continue;
                    }
                    let (join, meet) = ((y0, x1), (x0, y1));
                    if m.hi(join.0, join.1) + m.hi(meet.0, meet.1) > m.lo(x0, x1) + m.lo(y0, y1) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn require_strong(m: &IntervalMatrix) -> Result<()> {
    if is_strong_monge(m) {
        Ok(())
    } else {
        Err(MongeError::NotStrongMonge)
    }
}

/// `alpha * M` for a real `alpha >= 0`; `M` must be strongly Monge.
pub fn ism_scale(alpha: &Rational, m: &IntervalMatrix) -> Result<IntervalMatrix> {
    require_strong(m)?;
    ism_scale_unchecked(alpha, m)
}

pub fn ism_scale_unchecked(alpha: &Rational, m: &IntervalMatrix) -> Result<IntervalMatrix> {
    if alpha.is_negative() {
        return Err(MongeError::NegativeScalar);
    }
    Ok(m.map(|a| a.scale(alpha)))
}

pub fn ism_add(m: &IntervalMatrix, n: &IntervalMatrix) -> Result<IntervalMatrix> {
    let sum = m.add(n)?;
    require_strong(m)?;
    require_strong(n)?;
    Ok(sum)
}

pub fn ism_add_unchecked(m: &IntervalMatrix, n: &IntervalMatrix) -> Result<IntervalMatrix> {
    m.add(n)
}

pub fn ism_transpose(m: &IntervalMatrix) -> Result<IntervalMatrix> {
    require_strong(m)?;
    Ok(m.transpose())
}

/// Admissibility of multiplying a nonnegative strongly Monge matrix by a
/// nonnegative interval scalar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntervalScaleCheck {
    /// Tightest ratio bound; `None` means no adjacent quadruple constrains it.
    pub phi: Option<Rational>,
    /// `radius(alpha) / center(alpha)`, `None` when `alpha = [0, 0]`.
    pub ratio: Option<Rational>,
    pub admissible: bool,
}

/// Computes `phi = min (lo[i][j+1] + lo[i+1][j] - hi[i][j] - hi[i+1][j+1]) /
/// (lo[i][j+1] + lo[i+1][j] + hi[i][j] + hi[i+1][j+1])` over adjacent cells
/// and decides whether `radius(alpha)/center(alpha) <= phi`.
///
/// Quadruples whose denominator vanishes are all-zero and satisfied by any
/// scalar, so they are skipped.
pub fn ism_interval_scale_check(alpha: &Interval, m: &IntervalMatrix) -> Result<IntervalScaleCheck> {
    if !alpha.is_nonnegative() {
        return Err(MongeError::NegativeScalar);
    }
    if !m.iter().all(Interval::is_nonnegative) {
        return Err(MongeError::NegativeEntries);
    }
    require_strong(m)?;

    let mut phi: Option<Rational> = None;
    for i in 0..m.rows() - 1 {
        for j in 0..m.cols() - 1 {
            let below = m.lo(i, j + 1) + m.lo(i + 1, j);
            let above = m.hi(i, j) + m.hi(i + 1, j + 1);
            let denominator = &below + &above;
            if denominator.is_zero() {
                continue;
            }
            let value = (below - above) / denominator;
            if phi.as_ref().is_none_or(|p| value < *p) {
                phi = Some(value);
            }
        }
    }

    let center = alpha.center();
    let ratio = (!center.is_zero()).then(|| alpha.radius() / center);
    let admissible = match (&ratio, &phi) {
        (None, _) | (_, None) => true,
        (Some(r), Some(p)) => r <= p,
    };
    Ok(IntervalScaleCheck {
        phi,
        ratio,
        admissible,
    })
}

/// Entrywise `alpha * m[i][j]` with interval multiplication.
pub fn interval_scale(alpha: &Interval, m: &IntervalMatrix) -> IntervalMatrix {
    m.map(|a| alpha * a)
}

/// Standard, Hadamard and Kronecker products of two real matrices, with the
/// Monge verdict of each. Monge matrices are not closed under any of them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductReport {
    pub standard: RealMatrix,
    pub standard_is_monge: bool,
    pub hadamard: RealMatrix,
    pub hadamard_is_monge: bool,
    pub kronecker: RealMatrix,
    pub kronecker_is_monge: bool,
}

pub fn non_closure_products(a: &RealMatrix, b: &RealMatrix) -> Result<ProductReport> {
    if a.cols() != b.rows() {
        return Err(MongeError::DimensionMismatch {
            left: format!("{}x{}", a.rows(), a.cols()),
            right: format!("{}x{}", b.rows(), b.cols()),
        });
    }
    let standard = RealMatrix::from_fn(a.rows(), b.cols(), |i, j| {
        (0..a.cols()).fold(Rational::zero(), |acc, k| acc + a.get(i, k) * b.get(k, j))
    })?;
    let hadamard = a.zip_with(b, |x, y| x * y)?;
    let kronecker = RealMatrix::from_fn(a.rows() * b.rows(), a.cols() * b.cols(), |i, j| {
        a.get(i / b.rows(), j / b.cols()) * b.get(i % b.rows(), j % b.cols())
    })?;
    Ok(ProductReport {
        standard_is_monge: real::is_monge(&standard),
        hadamard_is_monge: real::is_monge(&hadamard),
        kronecker_is_monge: real::is_monge(&kronecker),
        standard,
        hadamard,
        kronecker,
    })
}
