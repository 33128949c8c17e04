//! Weak Monge property: some member of the interval matrix is Monge.
//!
//! Recognition is exact through a feasibility LP over the matrix entries.
//! Cheaper necessary and sufficient conditions are provided alongside; every
//! sufficient condition returns a concrete Monge member (a witness) which is
//! revalidated before it is handed out.

pub mod closure;

use num::traits::{Signed, Zero};

use crate::error::{MongeError, Result};
use crate::interval::Interval;
use crate::matrix::{IntervalMatrix, Position, RealMatrix};
use crate::rational::{self, Rational};
use crate::real;
use crate::simplex::{self, BoundedSystem, Feasibility, LinearRow, Relation};

/// The feasibility LP whose solutions are exactly the Monge members.
///
/// Variable `(i, j)` is the entry `x[i][j]`, stored at column `i * cols + j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpProblem {
    rows: usize,
    cols: usize,
    /// `x[i][j] + x[i+1][j+1] - x[i][j+1] - x[i+1][j] <= 0` per adjacent cell.
    pub monge_rows: Vec<LinearRow>,
    /// `x[k][l] <= hi[k][l]` and `-x[k][l] <= -lo[k][l]` per entry.
    pub bound_rows: Vec<LinearRow>,
}

impl LpProblem {
    pub fn variable(&self, row: usize, col: usize) -> usize {
        row * self.cols + col
    }

    pub fn variable_count(&self) -> usize {
        self.rows * self.cols
    }

    /// Folds the single-variable bound rows into variable bounds.
    pub fn to_system(&self) -> Result<BoundedSystem> {
        let n = self.variable_count();
        let mut lower: Vec<Option<Rational>> = vec![None; n];
        let mut upper: Vec<Option<Rational>> = vec![None; n];
        for row in &self.bound_rows {
            let [(k, c)] = row.terms.as_slice() else {
                return Err(MongeError::Internal("bound row with several terms".into()));
            };
            let value = &row.rhs / c;
            if c.is_positive() {
                let slot = &mut upper[*k];
                if slot.as_ref().is_none_or(|u| value < *u) {
                    *slot = Some(value);
                }
            } else {
                let slot = &mut lower[*k];
                if slot.as_ref().is_none_or(|l| value > *l) {
                    *slot = Some(value);
                }
            }
        }
        let lower = lower
            .into_iter()
            .collect::<Option<Vec<_>>>()
            .ok_or_else(|| MongeError::Internal("variable without lower bound".into()))?;
        Ok(BoundedSystem {
            lower,
            upper,
            rows: self.monge_rows.clone(),
        })
    }
}

pub fn build_lp(m: &IntervalMatrix) -> LpProblem {
    let (rows, cols) = m.shape();
    let var = |i: usize, j: usize| i * cols + j;
    let one = || rational::int(1);
    let minus_one = || rational::int(-1);
    let mut monge_rows = Vec::with_capacity((rows - 1) * (cols - 1));
    for i in 0..rows - 1 {
        for j in 0..cols - 1 {
            monge_rows.push(LinearRow {
                terms: vec![
                    (var(i, j), one()),
                    (var(i + 1, j + 1), one()),
                    (var(i, j + 1), minus_one()),
                    (var(i + 1, j), minus_one()),
                ],
                relation: Relation::LessEq,
                rhs: Rational::zero(),
            });
        }
    }
    let mut bound_rows = Vec::with_capacity(2 * rows * cols);
    for (p, a) in m.indexed() {
        let k = var(p.row, p.col);
        bound_rows.push(LinearRow {
            terms: vec![(k, one())],
            relation: Relation::LessEq,
            rhs: a.hi().clone(),
        });
        bound_rows.push(LinearRow {
            terms: vec![(k, minus_one())],
            relation: Relation::LessEq,
            rhs: -a.lo().clone(),
        });
    }
    LpProblem {
        rows,
        cols,
        monge_rows,
        bound_rows,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityResult {
    pub feasible: bool,
    /// A Monge member of the interval matrix when `feasible`.
    pub witness: Option<RealMatrix>,
}

/// Checks that `w` lies in `m` and is Monge.
pub fn validate_witness(m: &IntervalMatrix, w: &RealMatrix) -> Result<()> {
    if m.shape() != w.shape() {
        return Err(MongeError::Internal("witness has the wrong shape".into()));
    }
    if let Some(p) = m.first_violation(w) {
        return Err(MongeError::Internal(format!("witness leaves the bounds at {p}")));
    }
    if let Some(p) = real::first_monge_violation(w) {
        return Err(MongeError::Internal(format!("witness is not Monge at {p}")));
    }
    Ok(())
}

/// Decides the weak Monge property exactly.
pub fn is_weak_monge(m: &IntervalMatrix) -> Result<FeasibilityResult> {
    let system = build_lp(m).to_system()?;
    match simplex::find_feasible_point(&system)? {
        Feasibility::Infeasible => Ok(FeasibilityResult {
            feasible: false,
            witness: None,
        }),
        Feasibility::Feasible(x) => {
            let w = RealMatrix::from_vec(m.rows(), m.cols(), x)?;
            validate_witness(m, &w)?;
            Ok(FeasibilityResult {
                feasible: true,
                witness: Some(w),
            })
        }
    }
}

fn require_two_by_two(m: &IntervalMatrix) -> Result<()> {
    let (rows, cols) = m.shape();
    if rows < 2 || cols < 2 {
        return Err(MongeError::TooSmall { rows, cols });
    }
    Ok(())
}

/// Interval residual: entry `(i, j)` is
/// `[lo(i+1,j) + lo(i,j+1) - hi(i,j) - hi(i+1,j+1), hi(i+1,j) + hi(i,j+1) - lo(i,j) - lo(i+1,j+1)]`.
pub fn interval_residual(m: &IntervalMatrix) -> Result<IntervalMatrix> {
    require_two_by_two(m)?;
    let entries = (0..m.rows() - 1)
        .flat_map(|i| (0..m.cols() - 1).map(move |j| (i, j)))
        .map(|(i, j)| {
            let a = m.get(i + 1, j) + m.get(i, j + 1);
            let b = m.get(i, j) + m.get(i + 1, j + 1);
            &a - &b
        })
        .collect();
    IntervalMatrix::from_vec(m.rows() - 1, m.cols() - 1, entries)
}

/// Whether the residual interval matrix has a nonnegative member. When this
/// is false the matrix is certainly not weakly Monge.
pub fn necessary_nonneg_residual(m: &IntervalMatrix) -> Result<bool> {
    Ok(interval_residual(m)?.iter().all(|r| !r.hi().is_negative()))
}

/// Constant-row or constant-column witness when every row (or every
/// column) has a common point. Rows are tried first; the smallest common
/// value is used.
pub fn sufficient_row_col_intersection(m: &IntervalMatrix) -> Result<Option<RealMatrix>> {
    fn common<'a>(mut cells: impl Iterator<Item = &'a Interval>) -> Option<Rational> {
        let first = cells.next()?.clone();
        cells
            .try_fold(first, |acc, a| acc.intersect(a))
            .map(|iv| iv.lo().clone())
    }
    let row_values: Option<Vec<Rational>> = (0..m.rows()).map(|i| common(m.row(i).iter())).collect();
    let witness = if let Some(values) = row_values {
        RealMatrix::from_fn(m.rows(), m.cols(), |i, _| values[i].clone())?
    } else {
        let col_values: Option<Vec<Rational>> = (0..m.cols())
            .map(|j| common((0..m.rows()).map(|i| m.get(i, j))))
            .collect();
        match col_values {
            Some(values) => RealMatrix::from_fn(m.rows(), m.cols(), |_, j| values[j].clone())?,
            None => return Ok(None),
        }
    };
    validate_witness(m, &witness)?;
    Ok(Some(witness))
}

/// True when every entry contains zero (radius at least the absolute
/// center), in which case the zero matrix is a witness.
pub fn sufficient_zero_containment(m: &IntervalMatrix) -> bool {
    m.iter().all(|a| a.radius() >= a.center().abs())
}

/// Inclusive-range rectangle sums over a residual matrix.
struct RectSums {
    cols: usize,
    // prefix[(k) * (cols + 1) + l] = sum of residual[0..k][0..l]
    prefix: Vec<Rational>,
}

impl RectSums {
    fn new(r: &RealMatrix) -> Self {
        let (rows, cols) = r.shape();
        let stride = cols + 1;
        let mut prefix = vec![Rational::zero(); (rows + 1) * stride];
        for k in 0..rows {
            for l in 0..cols {
                prefix[(k + 1) * stride + l + 1] = r.get(k, l) + &prefix[k * stride + l + 1]
                    + &prefix[(k + 1) * stride + l]
                    - &prefix[k * stride + l];
            }
        }
        Self { cols, prefix }
    }

    /// Sum over rows `k0..k1` and columns `l0..l1` (half-open).
    fn sum(&self, k0: usize, k1: usize, l0: usize, l1: usize) -> Rational {
        if k0 >= k1 || l0 >= l1 {
            return Rational::zero();
        }
        let s = self.cols + 1;
        &self.prefix[k1 * s + l1] - &self.prefix[k0 * s + l1] - &self.prefix[k1 * s + l0]
            + &self.prefix[k0 * s + l0]
    }
}

/// Total shift applied to cell `(r, s)` when every residual of the center is
/// eliminated outward from `pivot`. Cells in the pivot row or column never
/// move.
fn quadrant_shift(sums: &RectSums, pivot: Position, r: usize, s: usize) -> Rational {
    let (pi, pj) = (pivot.row, pivot.col);
    use std::cmp::Ordering::*;
    match (r.cmp(&pi), s.cmp(&pj)) {
        (Less, Less) => sums.sum(r, pi, s, pj),
        (Less, Greater) => -sums.sum(r, pi, pj, s),
        (Greater, Less) => -sums.sum(pi, r, s, pj),
        (Greater, Greater) => sums.sum(pi, r, pj, s),
        _ => Rational::zero(),
    }
}

/// Zeroes every adjacent residual of `start`, working outward from `pivot`
/// through the four quadrants. Each residual is cleared by moving the corner
/// of its 2x2 block farthest from the pivot, so cleared residuals are never
/// disturbed again and the quadrants do not interact.
pub fn eliminate_residuals(start: &RealMatrix, pivot: Position) -> RealMatrix {
    let mut w = start.clone();
    let (rows, cols) = w.shape();
    if rows < 2 || cols < 2 {
        return w;
    }
    let (pi, pj) = (pivot.row, pivot.col);
    let top: Vec<usize> = (0..pi.min(rows - 1)).rev().collect();
    let bottom: Vec<usize> = (pi..rows - 1).collect();
    let left: Vec<usize> = (0..pj.min(cols - 1)).rev().collect();
    let right: Vec<usize> = (pj..cols - 1).collect();
    // Row sweep, column sweep, offset of the moved corner within the block.
    let quadrants = [
        (&top, &left, (0, 0)),
        (&top, &right, (0, 1)),
        (&bottom, &left, (1, 0)),
        (&bottom, &right, (1, 1)),
    ];
    for (row_order, col_order, (dr, dc)) in quadrants {
        let diagonal = dr == dc;
        for &k in row_order {
            for &l in col_order {
                let alpha = real::adjacent_residual(&w, k, l);
                if alpha.is_zero() {
                    continue;
                }
                let cell = w.get_mut(k + dr, l + dc);
                // Diagonal corners enter the residual negatively, anti-diagonal positively.
                if diagonal {
                    *cell += alpha;
                } else {
                    *cell -= alpha;
                }
            }
        }
    }
    w
}

/// Shared check for the residual-sum conditions with a fixed pivot.
fn pivot_condition_holds(radius: &RealMatrix, sums: &RectSums, pivot: Position) -> bool {
    radius
        .indexed()
        .all(|(p, r)| quadrant_shift(sums, pivot, p.row, p.col).abs() <= *r)
}

/// Suffix-sum condition: every radius bounds the absolute sum of the center's
/// residuals below and to the right of its cell. When it holds, clearing the
/// residuals from the bottom-right corner gives a witness. A center that is
/// already Monge is returned as is.
pub fn sufficient_residual_sum(m: &IntervalMatrix) -> Result<Option<RealMatrix>> {
    require_two_by_two(m)?;
    let center = m.center();
    if real::is_monge(&center) {
        return Ok(Some(center));
    }
    let sums = RectSums::new(&real::residual(&center)?);
    let pivot = Position::new(m.rows() - 1, m.cols() - 1);
    if !pivot_condition_holds(&m.radius(), &sums, pivot) {
        return Ok(None);
    }
    let witness = eliminate_residuals(&center, pivot);
    validate_witness(m, &witness)?;
    Ok(Some(witness))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FourBlockWitness {
    pub pivot: Position,
    pub witness: RealMatrix,
}

/// Four-quadrant generalization of [`sufficient_residual_sum`]: pivots are
/// tried in row-major order and the first one whose quadrant sums fit inside
/// the radii wins. A Monge center is reported with the bottom-right pivot.
pub fn sufficient_four_block(m: &IntervalMatrix) -> Result<Option<FourBlockWitness>> {
    require_two_by_two(m)?;
    let center = m.center();
    let last = Position::new(m.rows() - 1, m.cols() - 1);
    if real::is_monge(&center) {
        return Ok(Some(FourBlockWitness {
            pivot: last,
            witness: center,
        }));
    }
    let sums = RectSums::new(&real::residual(&center)?);
    let radius = m.radius();
    for i in 0..m.rows() {
        for j in 0..m.cols() {
            let pivot = Position::new(i, j);
            if !pivot_condition_holds(&radius, &sums, pivot) {
                continue;
            }
            let witness = eliminate_residuals(&center, pivot);
            validate_witness(m, &witness)?;
            return Ok(Some(FourBlockWitness { pivot, witness }));
        }
    }
    Ok(None)
}

/// Which cheap conditions fire for a matrix, plus the witness of the first
/// sufficient one that did.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionReport {
    pub zero_containment: bool,
    pub row_col_intersection: bool,
    pub residual_sum: bool,
    pub four_block_pivot: Option<Position>,
    /// `None` for matrices with a single row or column, where it is vacuous.
    pub necessary_nonneg_residual: Option<bool>,
    pub witness: Option<RealMatrix>,
}

impl ConditionReport {
    pub fn sufficient(&self) -> bool {
        self.witness.is_some()
    }
}

pub fn evaluate_conditions(m: &IntervalMatrix) -> Result<ConditionReport> {
    let zero_containment = sufficient_zero_containment(m);
    let mut witness = zero_containment.then(|| RealMatrix::zeros(m.rows(), m.cols())).transpose()?;
    let row_col = sufficient_row_col_intersection(m)?;
    let small = m.rows() < 2 || m.cols() < 2;
    let (residual_sum, four_block, necessary) = if small {
        (None, None, None)
    } else {
        (
            sufficient_residual_sum(m)?,
            sufficient_four_block(m)?,
            Some(necessary_nonneg_residual(m)?),
        )
    };
    let report_flags = (row_col.is_some(), residual_sum.is_some());
    for candidate in [row_col, residual_sum, four_block.as_ref().map(|f| f.witness.clone())] {
        if witness.is_none() {
            witness = candidate;
        }
    }
    if let Some(w) = &witness {
        validate_witness(m, w)?;
    }
    Ok(ConditionReport {
        zero_containment,
        row_col_intersection: report_flags.0,
        residual_sum: report_flags.1,
        four_block_pivot: four_block.map(|f| f.pivot),
        necessary_nonneg_residual: necessary,
        witness,
    })
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn strong_2x2() -> IntervalMatrix {
        IntervalMatrix::from_integer_bounds(&[&[(0, 5), (5, 5)], &[(0, 8), (0, 0)]]).unwrap()
    }

    fn forced_violation() -> IntervalMatrix {
        IntervalMatrix::from_integer_bounds(&[&[(0, 0), (0, 0)], &[(0, 0), (1, 1)]]).unwrap()
    }

    pub(crate) fn bounded_4x4() -> IntervalMatrix {
        IntervalMatrix::from_integer_bounds(&[
            &[(3, 1000), (10, 120), (17, 20), (0, 24)],
            &[(2, 20), (7, 9), (0, 12), (17, 85)],
            &[(2, 5), (0, 6), (10, 14), (14, 100)],
            &[(0, 1), (3, 6), (5, 21), (7, 1000)],
        ])
        .unwrap()
    }

    fn monge_member() -> RealMatrix {
        RealMatrix::from_integers(&[&[3, 10, 17, 24], &[2, 7, 12, 17], &[2, 6, 10, 14], &[1, 3, 5, 7]])
            .unwrap()
    }

    #[test]
    fn lp_row_counts() {
        let lp = build_lp(&strong_2x2());
        assert_eq!((lp.monge_rows.len(), lp.bound_rows.len()), (1, 8));
        let lp = build_lp(&bounded_4x4());
        assert_eq!((lp.monge_rows.len(), lp.bound_rows.len()), (9, 32));
        assert_eq!(lp.variable(2, 3), 11);
        let row = IntervalMatrix::from_integer_bounds(&[&[(0, 1), (2, 3), (4, 5)]]).unwrap();
        let lp = build_lp(&row);
        assert_eq!((lp.monge_rows.len(), lp.bound_rows.len()), (0, 6));
    }

    #[test]
    fn lp_solutions_are_monge_members() {
        let x: Vec<Rational> = monge_member().iter().cloned().collect();
        let system = build_lp(&bounded_4x4()).to_system().unwrap();
        assert!(system.is_satisfied(&x));
    }

    #[test]
    fn bounded_4x4_is_weakly_monge() {
        let m = bounded_4x4();
        validate_witness(&m, &monge_member()).unwrap();
        let result = is_weak_monge(&m).unwrap();
        assert!(result.feasible);
        validate_witness(&m, result.witness.as_ref().unwrap()).unwrap();
    }

    #[test]
    fn forced_violation_is_infeasible() {
        let result = is_weak_monge(&forced_violation()).unwrap();
        assert_eq!(result, FeasibilityResult { feasible: false, witness: None });
        assert!(!necessary_nonneg_residual(&forced_violation()).unwrap());
    }

    #[test]
    fn strong_example_is_weak() {
        let result = is_weak_monge(&strong_2x2()).unwrap();
        assert!(result.feasible);
    }

    #[test]
    fn interval_residual_examples() {
        let r = interval_residual(&strong_2x2()).unwrap();
        assert_eq!(r, IntervalMatrix::from_integer_bounds(&[&[(0, 13)]]).unwrap());

        let real = monge_member();
        let r = interval_residual(&real.to_interval()).unwrap();
        assert_eq!(r, real::residual(&real).unwrap().to_interval());

        let constant = RealMatrix::from_fn(3, 3, |_, _| int(4)).unwrap().to_interval();
        assert!(interval_residual(&constant).unwrap().iter().all(|a| a == &Interval::zero()));

        let row = IntervalMatrix::from_integer_bounds(&[&[(0, 1), (2, 3)]]).unwrap();
        assert!(matches!(interval_residual(&row), Err(MongeError::TooSmall { .. })));
    }

    #[test]
    fn necessary_condition_examples() {
        assert!(necessary_nonneg_residual(&strong_2x2()).unwrap());
        assert!(necessary_nonneg_residual(&bounded_4x4()).unwrap());
    }

    #[test]
    fn row_col_intersection_examples() {
        let m = IntervalMatrix::from_integer_bounds(&[&[(1, 3), (2, 5)], &[(0, 9), (2, 4)]]).unwrap();
        assert_eq!(
            sufficient_row_col_intersection(&m).unwrap(),
            Some(RealMatrix::from_integers(&[&[2, 2], &[2, 2]]).unwrap())
        );

        let zeros = IntervalMatrix::from_integer_bounds(&[&[(-1, 2), (-3, 0)], &[(0, 0), (-1, 1)]]).unwrap();
        assert_eq!(
            sufficient_row_col_intersection(&zeros).unwrap(),
            Some(RealMatrix::from_integers(&[&[-1, -1], &[0, 0]]).unwrap())
        );

        let disjoint = IntervalMatrix::from_integer_bounds(&[&[(0, 1), (5, 6)], &[(5, 6), (0, 1)]]).unwrap();
        assert_eq!(sufficient_row_col_intersection(&disjoint).unwrap(), None);

        // Rows fail, columns succeed.
        let cols = IntervalMatrix::from_integer_bounds(&[&[(0, 1), (5, 6)], &[(1, 2), (4, 5)]]).unwrap();
        assert_eq!(
            sufficient_row_col_intersection(&cols).unwrap(),
            Some(RealMatrix::from_integers(&[&[1, 5], &[1, 5]]).unwrap())
        );
    }

    #[test]
    fn zero_containment_examples() {
        let zeros = IntervalMatrix::from_integer_bounds(&[&[(-1, 2), (-3, 0)], &[(0, 0), (-1, 1)]]).unwrap();
        assert!(sufficient_zero_containment(&zeros));
        assert!(!sufficient_zero_containment(&strong_2x2()));
        assert!(sufficient_zero_containment(&RealMatrix::zeros(3, 2).unwrap().to_interval()));
    }

    #[test]
    fn residual_sum_returns_monge_center() {
        let center = strong_2x2().center();
        assert_eq!(
            center,
            RealMatrix::from_rows(vec![vec![ratio(5, 2), int(5)], vec![int(4), int(0)]]).unwrap()
        );
        assert_eq!(sufficient_residual_sum(&strong_2x2()).unwrap(), Some(center));
    }

    #[test]
    fn residual_sum_constructs_witness() {
        // The center has negative residuals; wide intervals absorb the shift.
        let m = IntervalMatrix::from_integer_bounds(&[
            &[(-5, 5), (-5, 5), (0, 0)],
            &[(-5, 5), (-3, 7), (0, 0)],
            &[(0, 0), (0, 0), (0, 0)],
        ])
        .unwrap();
        let center = m.center();
        assert!(!real::is_monge(&center));
        let w = sufficient_residual_sum(&m).unwrap().expect("condition holds");
        validate_witness(&m, &w).unwrap();
        assert!(real::residual(&w).unwrap().iter().all(Zero::is_zero));
    }

    #[test]
    fn elimination_shifts_match_quadrant_sums() {
        let center = RealMatrix::from_integers(&[
            &[3, -1, 4, 1, -5],
            &[9, 2, -6, 5, 3],
            &[5, -8, 9, 7, 9],
            &[3, 2, -3, 8, 4],
        ])
        .unwrap();
        let sums = RectSums::new(&real::residual(&center).unwrap());
        for pi in 0..4 {
            for pj in 0..5 {
                let pivot = Position::new(pi, pj);
                let w = eliminate_residuals(&center, pivot);
                assert!(real::residual(&w).unwrap().iter().all(Zero::is_zero), "pivot {pivot}");
                for (p, v) in w.indexed() {
                    let shift = v - center.get(p.row, p.col);
                    assert_eq!(shift, quadrant_shift(&sums, pivot, p.row, p.col), "pivot {pivot} cell {p}");
                }
            }
        }
    }

    #[test]
    fn four_block_accepts_what_residual_sum_accepts() {
        let m = IntervalMatrix::from_integer_bounds(&[
            &[(-5, 5), (-5, 5), (0, 0)],
            &[(-5, 5), (-3, 7), (0, 0)],
            &[(0, 0), (0, 0), (0, 0)],
        ])
        .unwrap();
        let found = sufficient_four_block(&m).unwrap().expect("accepted");
        validate_witness(&m, &found.witness).unwrap();

        let found = sufficient_four_block(&strong_2x2()).unwrap().unwrap();
        assert_eq!(found.pivot, Position::new(1, 1));
        assert_eq!(found.witness, strong_2x2().center());
    }

    #[test]
    fn four_block_central_pivot_beats_one_direction() {
        // Negative center residuals at both ends of the diagonal; the bottom-
        // right sweep accumulates them while a central pivot splits them.
        let center = RealMatrix::from_integers(&[
            &[1, 0, 0],
            &[0, 0, 0],
            &[0, 0, 1],
        ])
        .unwrap();
        let radius = RealMatrix::from_integers(&[
            &[1, 0, 0],
            &[0, 0, 0],
            &[0, 0, 1],
        ])
        .unwrap();
        let m = IntervalMatrix::from_bounds(
            &center.zip_with(&radius, |c, r| c - r).unwrap(),
            &center.zip_with(&radius, |c, r| c + r).unwrap(),
        )
        .unwrap();
        assert_eq!(sufficient_residual_sum(&m).unwrap(), None);
        let found = sufficient_four_block(&m).unwrap().expect("central pivot works");
        assert_eq!(found.pivot, Position::new(1, 1));
        validate_witness(&m, &found.witness).unwrap();
        assert!(is_weak_monge(&m).unwrap().feasible);
    }

    #[test]
    fn condition_report_for_examples() {
        let report = evaluate_conditions(&strong_2x2()).unwrap();
        assert!(!report.zero_containment);
        assert!(report.residual_sum);
        assert_eq!(report.necessary_nonneg_residual, Some(true));
        assert!(report.sufficient());

        let report = evaluate_conditions(&forced_violation()).unwrap();
        assert_eq!(report.necessary_nonneg_residual, Some(false));
        assert!(!report.sufficient());
    }
}
