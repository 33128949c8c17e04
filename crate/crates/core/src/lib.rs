//! Monge properties of interval matrices.
//!
//! An interval matrix is strongly Monge when every member is Monge and weakly
//! Monge when at least one member is. All arithmetic is exact over the
//! rationals.

pub mod error;
pub mod generate;
pub mod interval;
pub mod json;
pub mod matrix;
pub mod permutation;
pub mod rational;
pub mod real;
pub mod simplex;
pub mod strong;
pub mod weak;

pub use error::{MongeError, Result};
pub use interval::Interval;
pub use matrix::{IntervalMatrix, Matrix, Position, RealMatrix};
pub use rational::Rational;
