//! Closed intervals with exact rational endpoints.

use std::fmt;
use std::ops::{Add, Mul, Sub};

use num::traits::{Signed, Zero};

use crate::error::{MongeError, Result};
use crate::rational::{self, Rational};

/// A closed interval `[lo, hi]` with `lo <= hi`.
///
/// A degenerate interval (`lo == hi`) stands for a real number.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Interval {
    lo: Rational,
    hi: Rational,
}

impl Interval {
    pub fn new(lo: Rational, hi: Rational) -> Result<Self> {
        if lo > hi {
            return Err(MongeError::InvalidInterval {
                lo: rational::format(&lo),
                hi: rational::format(&hi),
            });
        }
        Ok(Self { lo, hi })
    }

    pub fn point(value: Rational) -> Self {
        Self {
            lo: value.clone(),
            hi: value,
        }
    }

    /// Interval from a center and a nonnegative radius.
    pub fn from_center_radius(center: &Rational, radius: &Rational) -> Result<Self> {
        Self::new(center - radius, center + radius)
    }

    pub fn zero() -> Self {
        Self::point(Rational::zero())
    }

    pub fn lo(&self) -> &Rational {
        &self.lo
    }

    pub fn hi(&self) -> &Rational {
        &self.hi
    }

    pub fn center(&self) -> Rational {
        (&self.lo + &self.hi) / rational::int(2)
    }

    pub fn radius(&self) -> Rational {
        (&self.hi - &self.lo) / rational::int(2)
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: &Rational) -> bool {
        &self.lo <= x && x <= &self.hi
    }

    pub fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    pub fn is_nonnegative(&self) -> bool {
        !self.lo.is_negative()
    }

    /// Intersection, or `None` when the intervals are disjoint.
    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let lo = rational::max(&self.lo, &other.lo);
        let hi = rational::min(&self.hi, &other.hi);
        (lo <= hi).then_some(Self { lo, hi })
    }

    /// Smallest interval containing both.
    pub fn hull(&self, other: &Self) -> Self {
        Self {
            lo: rational::min(&self.lo, &other.lo),
            hi: rational::max(&self.hi, &other.hi),
        }
    }

    pub fn scale(&self, alpha: &Rational) -> Self {
        let a = alpha * &self.lo;
        let b = alpha * &self.hi;
        if a <= b {
            Self { lo: a, hi: b }
        } else {
            Self { lo: b, hi: a }
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.contains_zero() {
            return Err(MongeError::DivisionByIntervalContainingZero);
        }
        let quotients = [
            &self.lo / &rhs.lo,
            &self.lo / &rhs.hi,
            &self.hi / &rhs.lo,
            &self.hi / &rhs.hi,
        ];
        Ok(Self::span(quotients))
    }

    fn span(values: [Rational; 4]) -> Self {
        let mut iter = values.into_iter();
        let first = iter.next().expect("four values");
        let (lo, hi) = iter.fold((first.clone(), first), |(lo, hi), v| {
            let lo = if v < lo { v.clone() } else { lo };
            let hi = if v > hi { v } else { hi };
            (lo, hi)
        });
        Self { lo, hi }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_degenerate() {
            write!(f, "{}", rational::format(&self.lo))
        } else {
            write!(
                f,
                "[{}, {}]",
                rational::format(&self.lo),
                rational::format(&self.hi)
            )
        }
    }
}

impl Add for &Interval {
    type Output = Interval;

    fn add(self, rhs: &Interval) -> Interval {
        Interval {
            lo: &self.lo + &rhs.lo,
            hi: &self.hi + &rhs.hi,
        }
    }
}

impl Sub for &Interval {
    type Output = Interval;

    fn sub(self, rhs: &Interval) -> Interval {
        Interval {
            lo: &self.lo - &rhs.hi,
            hi: &self.hi - &rhs.lo,
        }
    }
}

impl Mul for &Interval {
    type Output = Interval;

    fn mul(self, rhs: &Interval) -> Interval {
        Interval::span([
            &self.lo * &rhs.lo,
            &self.lo * &rhs.hi,
            &self.hi * &rhs.lo,
            &self.hi * &rhs.hi,
        ])
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Interval {
            type Output = Interval;

            fn $method(self, rhs: Interval) -> Interval {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
