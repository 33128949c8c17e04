//! Exact phase-one simplex for bounded linear systems.
//!
//! Finds a point satisfying `lower <= x <= upper` together with a list of
//! `<=` and `=` rows, or proves that none exists. Variables with finite upper
//! bounds are handled by the bounded-variable method (a nonbasic variable
//! sits at either bound), so only the general rows enter the tableau. Entering
//! and leaving variables follow Bland's smallest-index rule, which rules out
//! cycling and makes the returned point deterministic.

use num::traits::{Signed, Zero};

use crate::error::{MongeError, Result};
use crate::rational::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    LessEq,
    Equal,
}

/// A sparse row `sum(coef * x[var]) <relation> rhs`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearRow {
    pub terms: Vec<(usize, Rational)>,
    pub relation: Relation,
    pub rhs: Rational,
}

impl LinearRow {
    pub fn evaluate(&self, x: &[Rational]) -> Rational {
        self.terms
            .iter()
            .fold(Rational::zero(), |acc, (k, c)| acc + c * &x[*k])
    }

    pub fn is_satisfied(&self, x: &[Rational]) -> bool {
        let lhs = self.evaluate(x);
        match self.relation {
            Relation::LessEq => lhs <= self.rhs,
            Relation::Equal => lhs == self.rhs,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundedSystem {
    pub lower: Vec<Rational>,
    /// `None` is an unbounded variable.
    pub upper: Vec<Option<Rational>>,
    pub rows: Vec<LinearRow>,
}

impl BoundedSystem {
    pub fn is_satisfied(&self, x: &[Rational]) -> bool {
        x.len() == self.lower.len()
            && x.iter().zip(&self.lower).all(|(v, lo)| v >= lo)
            && x.iter()
                .zip(&self.upper)
                .all(|(v, hi)| hi.as_ref().is_none_or(|h| v <= h))
            && self.rows.iter().all(|r| r.is_satisfied(x))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Feasibility {
    Feasible(Vec<Rational>),
    Infeasible,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Basic {
    Column(usize),
    Artificial(usize),
}

impl Basic {
    // Bland ordering key; artificials rank first so they leave early.
    fn key(self) -> (u8, usize) {
        match self {
            Basic::Artificial(r) => (0, r),
            Basic::Column(c) => (1, c),
        }
    }
}

const MAX_ITERATIONS: usize = 1_000_000;

pub fn find_feasible_point(system: &BoundedSystem) -> Result<Feasibility> {
    let nvars = system.lower.len();
    if system.upper.len() != nvars {
        return Err(MongeError::Solver("bound vectors differ in length".into()));
    }
    for (lo, hi) in system.lower.iter().zip(&system.upper) {
        if hi.as_ref().is_some_and(|h| h < lo) {
            return Ok(Feasibility::Infeasible);
        }
    }

    // Shift x = lower + y so every structural variable has lower bound 0.
    let mut caps: Vec<Option<Rational>> = system
        .lower
        .iter()
        .zip(&system.upper)
        .map(|(lo, hi)| hi.as_ref().map(|h| h - lo))
        .collect();
    let slack_count = system
        .rows
        .iter()
        .filter(|r| r.relation == Relation::LessEq)
        .count();
    caps.extend(std::iter::repeat_n(None, slack_count));
    let ncols = nvars + slack_count;

    let nrows = system.rows.len();
    let mut tableau: Vec<Vec<Rational>> = Vec::with_capacity(nrows);
    let mut values: Vec<Rational> = Vec::with_capacity(nrows);
    let mut basis: Vec<Basic> = Vec::with_capacity(nrows);
    let mut next_slack = nvars;
    for (r, row) in system.rows.iter().enumerate() {
        for (k, _) in &row.terms {
            if *k >= nvars {
                return Err(MongeError::Solver(format!("row {r} references variable {k}")));
            }
        }
        let mut coeffs = vec![Rational::zero(); ncols];
        let mut rhs = row.rhs.clone();
        for (k, c) in &row.terms {
            coeffs[*k] += c;
            rhs -= c * &system.lower[*k];
        }
        let slack = (row.relation == Relation::LessEq).then(|| {
            coeffs[next_slack] = Rational::from_integer(1.into());
            next_slack += 1;
            next_slack - 1
        });
        match slack {
            Some(s) if !rhs.is_negative() => basis.push(Basic::Column(s)),
            _ => {
                if rhs.is_negative() {
                    coeffs.iter_mut().for_each(|c| *c = -c.clone());
                    rhs = -rhs;
                }
                basis.push(Basic::Artificial(r));
            }
        }
        tableau.push(coeffs);
        values.push(rhs);
    }

    let mut at_upper = vec![false; ncols];
    let mut is_basic = vec![false; ncols];
    for b in &basis {
        if let Basic::Column(c) = b {
            is_basic[*c] = true;
        }
    }

    for _ in 0..MAX_ITERATIONS {
        let infeasibility: Rational = basis
            .iter()
            .zip(&values)
            .filter(|(b, _)| matches!(b, Basic::Artificial(_)))
            .fold(Rational::zero(), |acc, (_, v)| acc + v);
        if infeasibility.is_zero() {
            return Ok(Feasibility::Feasible(extract(
                system, &basis, &values, &at_upper, &caps,
            )));
        }

        // Reduced cost of column j for minimizing the sum of artificials.
        let reduced_cost = |j: usize| -> Rational {
            basis
                .iter()
                .zip(&tableau)
                .filter(|(b, _)| matches!(b, Basic::Artificial(_)))
                .fold(Rational::zero(), |acc, (_, row)| acc - &row[j])
        };
        let entering = (0..ncols).find_map(|j| {
            if is_basic[j] || caps[j].as_ref().is_some_and(Zero::is_zero) {
                return None;
            }
            let d = reduced_cost(j);
            if !at_upper[j] && d.is_negative() {
                Some((j, true))
            } else if at_upper[j] && d.is_positive() {
                Some((j, false))
            } else {
                None
            }
        });
        let Some((col, increasing)) = entering else {
            return Ok(Feasibility::Infeasible);
        };

        // Ratio test; basic i moves by -tableau[i][col] * step * direction.
        let mut best: Option<(Rational, usize)> = None;
        for (i, row) in tableau.iter().enumerate() {
            let a = &row[col];
            if a.is_zero() {
                continue;
            }
            let rate = if increasing { a.clone() } else { -a.clone() };
            let limit = if rate.is_positive() {
                &values[i] / &rate
            } else {
                match basis[i] {
                    Basic::Column(c) => match &caps[c] {
                        Some(cap) => (cap - &values[i]) / -rate,
                        None => continue,
                    },
                    Basic::Artificial(_) => continue,
                }
            };
            let better = match &best {
                None => true,
                Some((t, bi)) => limit < *t || (limit == *t && basis[i].key() < basis[*bi].key()),
            };
            if better {
                best = Some((limit, i));
            }
        }
        let flip = caps[col]
            .as_ref()
            .filter(|cap| best.as_ref().is_none_or(|(t, _)| *cap <= t));
        if let Some(cap) = flip {
            let step = cap.clone();
            for (i, row) in tableau.iter().enumerate() {
                if row[col].is_zero() {
                    continue;
                }
                let delta = &row[col] * &step;
                if increasing {
                    values[i] -= delta;
                } else {
                    values[i] += delta;
                }
            }
            at_upper[col] = increasing;
            continue;
        }
        let Some((step, leave)) = best else {
            return Err(MongeError::Solver("phase-one objective unbounded".into()));
        };

        let leaving_at_upper = {
            let a = &tableau[leave][col];
            if increasing {
                a.is_negative()
            } else {
                a.is_positive()
            }
        };
        for (i, row) in tableau.iter().enumerate() {
            if i == leave || row[col].is_zero() {
                continue;
            }
            let delta = &row[col] * &step;
            if increasing {
                values[i] -= delta;
            } else {
                values[i] += delta;
            }
        }
        values[leave] = if increasing {
            step.clone()
        } else {
            caps[col].as_ref().expect("decreasing from an upper bound") - &step
        };
        if let Basic::Column(c) = basis[leave] {
            is_basic[c] = false;
            at_upper[c] = leaving_at_upper;
        }
        basis[leave] = Basic::Column(col);
        is_basic[col] = true;
        at_upper[col] = false;
        pivot(&mut tableau, leave, col);
    }
    Err(MongeError::Solver(format!(
        "no convergence after {MAX_ITERATIONS} pivots"
    )))
}

fn pivot(tableau: &mut [Vec<Rational>], row: usize, col: usize) {
    let p = tableau[row][col].clone();
    for v in tableau[row].iter_mut() {
        if !v.is_zero() {
            *v /= &p;
        }
    }
    let pivot_row = tableau[row].clone();
    let support: Vec<usize> = (0..pivot_row.len())
        .filter(|&k| !pivot_row[k].is_zero())
        .collect();
    for (i, r) in tableau.iter_mut().enumerate() {
        if i == row || r[col].is_zero() {
            continue;
        }
        let factor = r[col].clone();
        for &k in &support {
            let delta = &factor * &pivot_row[k];
            r[k] -= delta;
        }
    }
}

fn extract(
    system: &BoundedSystem,
    basis: &[Basic],
    values: &[Rational],
    at_upper: &[bool],
    caps: &[Option<Rational>],
) -> Vec<Rational> {
    let nvars = system.lower.len();
    let mut y: Vec<Rational> = (0..nvars)
        .map(|k| {
            if at_upper[k] {
                caps[k].clone().expect("only capped variables rest at upper")
            } else {
                Rational::zero()
            }
        })
        .collect();
    for (b, v) in basis.iter().zip(values) {
        if let Basic::Column(c) = b {
            if *c < nvars {
                y[*c] = v.clone();
            }
        }
    }
    y.iter().zip(&system.lower).map(|(v, lo)| v + lo).collect()
}
