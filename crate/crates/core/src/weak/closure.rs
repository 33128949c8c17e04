//! Operations under which weak Monge matrices stay weak Monge, alone and
//! combined with strongly Monge matrices.

use std::fmt;
use std::str::FromStr;

use num::traits::Signed;

use crate::error::{MongeError, Result};
use crate::interval::Interval;
use crate::matrix::{self, IntervalMatrix, Intersection, RealMatrix};
use crate::rational::Rational;
use crate::strong;

use super::{interval_residual, is_weak_monge, validate_witness};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosureOp {
    AddWeakWeak,
    AddWeakAny,
    EnvelopeUnion,
    Scale,
    IntervalScale,
    MixedAdd,
    MixedIntersection,
    MixedEnvelope,
}

impl ClosureOp {
    pub const ALL: [ClosureOp; 8] = [
        ClosureOp::AddWeakWeak,
        ClosureOp::AddWeakAny,
        ClosureOp::EnvelopeUnion,
        ClosureOp::Scale,
        ClosureOp::IntervalScale,
        ClosureOp::MixedAdd,
        ClosureOp::MixedIntersection,
        ClosureOp::MixedEnvelope,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ClosureOp::AddWeakWeak => "add-weak-weak",
            ClosureOp::AddWeakAny => "add-weak-any",
            ClosureOp::EnvelopeUnion => "envelope-union",
            ClosureOp::Scale => "scale",
            ClosureOp::IntervalScale => "interval-scale",
            ClosureOp::MixedAdd => "mixed-add",
            ClosureOp::MixedIntersection => "mixed-intersection",
            ClosureOp::MixedEnvelope => "mixed-envelope",
        }
    }

    /// Whether the operation takes a scalar and one matrix rather than two
    /// matrices.
    pub fn is_scalar(self) -> bool {
        matches!(self, ClosureOp::Scale | ClosureOp::IntervalScale)
    }
}

impl fmt::Display for ClosureOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ClosureOp {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let normalized = s.replace('_', "-");
        ClosureOp::ALL
            .into_iter()
            .find(|op| op.name() == normalized)
            .ok_or_else(|| format!("unknown closure operation `{s}`"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosureOutcome {
    pub result: IntervalMatrix,
    /// Whether the result is weakly Monge. Always backed by the LP.
    pub weak_monge: bool,
    pub witness: Option<RealMatrix>,
    /// Verdict of the residual upper-bound criterion (`add_weak_any` only).
    pub criterion: Option<bool>,
}

impl ClosureOutcome {
    /// True when a residual criterion was evaluated and disagrees with the LP.
    pub fn disagreement(&self) -> bool {
        self.criterion.is_some_and(|c| c != self.weak_monge)
    }
}

fn weak_witness(m: &IntervalMatrix) -> Result<RealMatrix> {
    is_weak_monge(m)?.witness.ok_or(MongeError::NotWeakMonge)
}

fn require_strong(m: &IntervalMatrix) -> Result<()> {
    if strong::is_strong_monge(m) {
        Ok(())
    } else {
        Err(MongeError::NotStrongMonge)
    }
}

/// Validates an inherited witness and confirms it with the LP.
fn confirmed(result: IntervalMatrix, witness: RealMatrix) -> Result<ClosureOutcome> {
    validate_witness(&result, &witness)?;
    if !is_weak_monge(&result)?.feasible {
        return Err(MongeError::Internal("LP rejects a matrix with a valid witness".into()));
    }
    Ok(ClosureOutcome {
        result,
        weak_monge: true,
        witness: Some(witness),
        criterion: None,
    })
}

pub fn add_weak_weak(m: &IntervalMatrix, n: &IntervalMatrix) -> Result<ClosureOutcome> {
    let result = m.add(n)?;
    let witness = weak_witness(m)?.add(&weak_witness(n)?)?;
    confirmed(result, witness)
}

/// `M + P` for weakly Monge `M` and arbitrary `P`. Evaluates the criterion
/// `upper(M^R) + upper(P^R) >= 0` and reports it next to the exact LP
/// verdict on the sum.
pub fn add_weak_any(m: &IntervalMatrix, p: &IntervalMatrix) -> Result<ClosureOutcome> {
    let result = m.add(p)?;
    weak_witness(m)?;
    let criterion = residual_upper_criterion(m, p)?;
    let lp = is_weak_monge(&result)?;
    Ok(ClosureOutcome {
        result,
        weak_monge: lp.feasible,
        witness: lp.witness,
        criterion: Some(criterion),
    })
}

/// `upper(M^R) + upper(P^R) >= 0` entrywise; vacuous for a single row or
/// column.
pub fn residual_upper_criterion(m: &IntervalMatrix, p: &IntervalMatrix) -> Result<bool> {
    matrix::check_same_shape(m.shape(), p.shape())?;
    if m.rows() < 2 || m.cols() < 2 {
        return Ok(true);
    }
    let (rm, rp) = (interval_residual(m)?, interval_residual(p)?);
    let holds = rm.iter().zip(rp.iter()).all(|(a, b)| !(a.hi() + b.hi()).is_negative());
    Ok(holds)
}

pub fn envelope_union(m: &IntervalMatrix, p: &IntervalMatrix) -> Result<ClosureOutcome> {
    let result = matrix::union_envelope(m, p)?;
    confirmed(result, weak_witness(m)?)
}

pub fn scale(alpha: &Rational, m: &IntervalMatrix) -> Result<ClosureOutcome> {
    if alpha.is_negative() {
        return Err(MongeError::NegativeScalar);
    }
    let result = m.map(|a| a.scale(alpha));
    confirmed(result, weak_witness(m)?.scale(alpha))
}

/// Entrywise interval product with a nonnegative interval scalar; the
/// witness is the component witness scaled by the lower end of `alpha`.
pub fn interval_scale(alpha: &Interval, m: &IntervalMatrix) -> Result<ClosureOutcome> {
    if !alpha.is_nonnegative() {
        return Err(MongeError::NegativeScalar);
    }
    let result = strong::interval_scale(alpha, m);
    confirmed(result, weak_witness(m)?.scale(alpha.lo()))
}

/// `M + N` with `M` strongly Monge and `N` weakly Monge.
pub fn mixed_add(m: &IntervalMatrix, n: &IntervalMatrix) -> Result<ClosureOutcome> {
    let result = m.add(n)?;
    require_strong(m)?;
    let witness = m.lower().add(&weak_witness(n)?)?;
    confirmed(result, witness)
}

/// `M ∩ N` with `M` strongly Monge and `N` weakly Monge; every entrywise
/// intersection must be nonempty.
pub fn mixed_intersection(m: &IntervalMatrix, n: &IntervalMatrix) -> Result<ClosureOutcome> {
    let result = match matrix::intersection(m, n)? {
        Intersection::Matrix(result) => result,
        Intersection::EmptyAt(positions) => return Err(MongeError::EmptyIntersection(positions)),
    };
    require_strong(m)?;
    weak_witness(n)?;
    let lp = is_weak_monge(&result)?;
    let witness = lp
        .witness
        .ok_or_else(|| MongeError::Internal("intersection with a strongly Monge matrix is not weakly Monge".into()))?;
    confirmed(result, witness)
}

/// Envelope of `M ∪ N` with `M` strongly Monge and `N` weakly Monge.
pub fn mixed_envelope(m: &IntervalMatrix, n: &IntervalMatrix) -> Result<ClosureOutcome> {
    let result = matrix::union_envelope(m, n)?;
    require_strong(m)?;
    weak_witness(n)?;
    confirmed(result, m.lower())
}
