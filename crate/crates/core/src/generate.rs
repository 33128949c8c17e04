//! Seeded instance generators. Every generated instance is checked against
//! the class it advertises before it is returned.

use std::fmt;
use std::str::FromStr;

use num::traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{MongeError, Result};
use crate::interval::Interval;
use crate::matrix::{IntervalMatrix, RealMatrix};
use crate::rational::{int, min, ratio, Rational};
use crate::real::{self, MongeDecomposition};
use crate::strong::is_strong_monge;
use crate::weak;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InstanceKind {
    /// Strongly Monge with positive radii.
    Ism,
    /// Weakly but not strongly Monge.
    IwmOnly,
    /// Not weakly Monge.
    NotIwm,
    /// A strongly Monge matrix with rows and columns shuffled.
    Permutable,
    /// Small integer and half-integer bounds, some degenerate entries.
    Random,
}

impl InstanceKind {
    pub const ALL: [InstanceKind; 5] = [
        InstanceKind::Ism,
        InstanceKind::IwmOnly,
        InstanceKind::NotIwm,
        InstanceKind::Permutable,
        InstanceKind::Random,
    ];

    pub fn name(self) -> &'static str {
        match self {
            InstanceKind::Ism => "ism",
            InstanceKind::IwmOnly => "iwm-only",
            InstanceKind::NotIwm => "not-iwm",
            InstanceKind::Permutable => "permutable",
            InstanceKind::Random => "random",
        }
    }
}

impl fmt::Display for InstanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InstanceKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        let normalized = s.replace('_', "-");
        InstanceKind::ALL
            .into_iter()
            .find(|k| k.name() == normalized)
            .ok_or_else(|| format!("unknown instance kind `{s}`"))
    }
}

const MAX_ATTEMPTS: usize = 64;

pub struct Generator {
    rng: ChaCha8Rng,
}

impl Generator {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    /// Monge matrix from a random first row and column and random adjacent
    /// residuals in `min_residual..=max_residual`. Runs in O(mn).
    pub fn monge(&mut self, rows: usize, cols: usize, min_residual: i64, max_residual: i64) -> Result<RealMatrix> {
        let residual = RealMatrix::from_fn(rows.saturating_sub(1), cols.saturating_sub(1), |_, _| {
            int(self.rng.random_range(min_residual..=max_residual))
        });
        let residual = if rows > 1 && cols > 1 { Some(residual?) } else { None };
        let mut w = RealMatrix::zeros(rows, cols)?;
        for j in 0..cols {
            *w.get_mut(0, j) = int(self.rng.random_range(-10..=10));
        }
        for i in 1..rows {
            *w.get_mut(i, 0) = int(self.rng.random_range(-10..=10));
        }
        if let Some(r) = residual {
            for i in 0..rows - 1 {
                for j in 0..cols - 1 {
                    let next = w.get(i + 1, j) + w.get(i, j + 1) - w.get(i, j) - r.get(i, j);
                    *w.get_mut(i + 1, j + 1) = next;
                }
            }
        }
        Ok(w)
    }

    /// Nonnegative Monge matrix as a random nonnegative combination of the
    /// cone generators; roughly half the coefficients are zero.
    pub fn nonnegative_monge(&mut self, rows: usize, cols: usize) -> Result<RealMatrix> {
        let mut d = MongeDecomposition::zero(rows, cols);
        let draw = |rng: &mut ChaCha8Rng| {
            if rng.random_bool(0.5) {
                Rational::zero()
            } else {
                ratio(rng.random_range(1..=12), rng.random_range(1..=3))
            }
        };
        for c in d.kappa.iter_mut().chain(d.lambda.iter_mut()) {
            *c = draw(&mut self.rng);
        }
        for c in d.mu.iter_mut().chain(d.nu.iter_mut()).flatten() {
            *c = draw(&mut self.rng);
        }
        real::reconstruct(&d, rows, cols)
    }

    /// Strongly Monge matrix around a Monge center. Each radius is a random
    /// fraction of a quarter of the smallest residual touching its entry, so
    /// every adjacent block keeps its slack. With `positive` all radii are
    /// nonzero; otherwise about a third are zero.
    pub fn ism(&mut self, rows: usize, cols: usize, positive: bool) -> Result<IntervalMatrix> {
        let center = self.monge(rows, cols, 1, 6)?;
        self.inflate(&center, positive)
    }

    /// Inflates a Monge center into a strongly Monge interval matrix; see
    /// [`Generator::ism`].
    pub fn inflate(&mut self, center: &RealMatrix, positive: bool) -> Result<IntervalMatrix> {
        let (rows, cols) = center.shape();
        let residual = (rows > 1 && cols > 1).then(|| real::residual(center)).transpose()?;
        let entries = center
            .indexed()
            .map(|(p, c)| {
                let mut limit: Option<Rational> = None;
                if let Some(r) = &residual {
                    for k in p.row.saturating_sub(1)..=p.row.min(rows - 2) {
                        for l in p.col.saturating_sub(1)..=p.col.min(cols - 2) {
                            let v = r.get(k, l);
                            limit = Some(limit.map_or_else(|| v.clone(), |x| min(&x, v)));
                        }
                    }
                }
                let limit = limit.unwrap_or_else(|| int(4)) / int(4);
                let zero_allowed = !positive && self.rng.random_bool(1.0 / 3.0);
                let t = if zero_allowed {
                    Rational::zero()
                } else {
                    ratio(self.rng.random_range(1..=4), 4)
                };
                Interval::from_center_radius(c, &(limit * t))
            })
            .collect::<Result<Vec<_>>>()?;
        let m = IntervalMatrix::from_vec(rows, cols, entries)?;
        if !is_strong_monge(&m) {
            return Err(MongeError::Internal("inflated matrix lost the strong property".into()));
        }
        Ok(m)
    }

    /// Strongly Monge instance whose first upper bound is pushed past the
    /// slack of its block, keeping the Monge center inside.
    pub fn iwm_only(&mut self, rows: usize, cols: usize) -> Result<IntervalMatrix> {
        require_block(rows, cols)?;
        for _ in 0..MAX_ATTEMPTS {
            let m = self.ism(rows, cols, false)?;
            let slack = crate::strong::strong_slack(&m, 0, 0);
            let extra = slack + int(self.rng.random_range(1..=3));
            let mut widened = m.clone();
            let cell = widened.get_mut(0, 0);
            *cell = Interval::new(cell.lo().clone(), cell.hi() + extra)?;
            if !is_strong_monge(&widened) && weak::is_weak_monge(&widened)?.feasible {
                return Ok(widened);
            }
        }
        Err(MongeError::Internal("could not generate a weak-only instance".into()))
    }

    /// Instance with one adjacent block whose upper residual is -1.
    pub fn not_iwm(&mut self, rows: usize, cols: usize) -> Result<IntervalMatrix> {
        require_block(rows, cols)?;
        for _ in 0..MAX_ATTEMPTS {
            let mut m = self.random(rows, cols)?;
            let i = self.rng.random_range(0..rows - 1);
            let j = self.rng.random_range(0..cols - 1);
            let forced = m.hi(i + 1, j) + m.hi(i, j + 1) - m.lo(i + 1, j + 1) + int(1);
            *m.get_mut(i, j) = Interval::point(forced);
            if !weak::necessary_nonneg_residual(&m)? && !weak::is_weak_monge(&m)?.feasible {
                return Ok(m);
            }
        }
        Err(MongeError::Internal("could not generate a non-weak instance".into()))
    }

    /// Uniformly random row and column orders.
    pub fn shuffle_orders(&mut self, rows: usize, cols: usize) -> (Vec<usize>, Vec<usize>) {
        let mut sigma: Vec<usize> = (0..rows).collect();
        let mut pi: Vec<usize> = (0..cols).collect();
        sigma.shuffle(&mut self.rng);
        pi.shuffle(&mut self.rng);
        (sigma, pi)
    }

    pub fn shuffle(&mut self, m: &IntervalMatrix) -> IntervalMatrix {
        let (sigma, pi) = self.shuffle_orders(m.rows(), m.cols());
        m.permute(&sigma, &pi)
    }

    pub fn permutable(&mut self, rows: usize, cols: usize) -> Result<IntervalMatrix> {
        let m = self.ism(rows, cols, false)?;
        Ok(self.shuffle(&m))
    }

    /// Bounds drawn from small integers and halves; about a quarter of the
    /// entries are degenerate.
    pub fn random(&mut self, rows: usize, cols: usize) -> Result<IntervalMatrix> {
        let entries = (0..rows * cols)
            .map(|_| {
                let lo = ratio(self.rng.random_range(-12..=12), self.rng.random_range(1..=2));
                let width = if self.rng.random_bool(0.25) {
                    Rational::zero()
                } else {
                    ratio(self.rng.random_range(1..=8), self.rng.random_range(1..=2))
                };
                let hi = &lo + width;
                Interval::new(lo, hi)
            })
            .collect::<Result<Vec<_>>>()?;
        IntervalMatrix::from_vec(rows, cols, entries)
    }

    pub fn generate(&mut self, kind: InstanceKind, rows: usize, cols: usize) -> Result<IntervalMatrix> {
        if rows == 0 || cols == 0 {
            return Err(MongeError::EmptyMatrix { rows, cols });
        }
        match kind {
            InstanceKind::Ism => self.ism(rows, cols, true),
            InstanceKind::IwmOnly => self.iwm_only(rows, cols),
            InstanceKind::NotIwm => self.not_iwm(rows, cols),
            InstanceKind::Permutable => self.permutable(rows, cols),
            InstanceKind::Random => self.random(rows, cols),
        }
    }
}

fn require_block(rows: usize, cols: usize) -> Result<()> {
    if rows < 2 || cols < 2 {
        return Err(MongeError::TooSmall { rows, cols });
    }
    Ok(())
}
