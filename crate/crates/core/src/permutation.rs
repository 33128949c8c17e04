//! Monge permutability: row and column orders that make an interval matrix
//! strongly Monge.
//!
//! Permutations are stored as order arrays: `order[p]` is the original index
//! placed at position `p`, so the permuted matrix is
//! `m.permute(&sigma, &pi)`.

use itertools::Itertools;
use num::traits::Zero;
use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use crate::error::{MongeError, Result};
use crate::interval::Interval;
use crate::matrix::{IntervalMatrix, Position};
use crate::rational::Rational;
use crate::strong::is_strong_monge;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PermutationPair {
    pub sigma: Vec<usize>,
    pub pi: Vec<usize>,
    /// Column prepermutation used to locate the first and last columns.
    pub rho: Option<Vec<usize>>,
}

impl PermutationPair {
    pub fn identity(rows: usize, cols: usize) -> Self {
        Self {
            sigma: (0..rows).collect(),
            pi: (0..cols).collect(),
            rho: None,
        }
    }

    pub fn apply(&self, m: &IntervalMatrix) -> IntervalMatrix {
        m.permute(&self.sigma, &self.pi)
    }
}

/// Strongly connected components of the order digraph in topological order.
/// Indices inside a set are ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AmbiguityPartition {
    pub sets: Vec<Vec<usize>>,
}

impl AmbiguityPartition {
    pub fn first_size(&self) -> usize {
        self.sets.first().map_or(0, Vec::len)
    }

    pub fn last_size(&self) -> usize {
        self.sets.last().map_or(0, Vec::len)
    }

    pub fn order(&self) -> Vec<usize> {
        self.sets.concat()
    }
}

/// Reverses both the row and the column order.
pub fn flip(m: &IntervalMatrix) -> IntervalMatrix {
    let rows: Vec<usize> = (0..m.rows()).rev().collect();
    let cols: Vec<usize> = (0..m.cols()).rev().collect();
    m.permute(&rows, &cols)
}

/// Orders indices so that `x` precedes `y` only when
/// `hi(u[x]) - lo(v[x]) <= lo(u[y]) - hi(v[y])`. Returns `None` when some
/// pair can be placed in neither order.
pub fn order_permutation(u: &[Interval], v: &[Interval]) -> Option<(Vec<usize>, AmbiguityPartition)> {
    assert_eq!(u.len(), v.len(), "order vectors differ in length");
    let n = u.len();
    let ahead: Vec<Rational> = u.iter().zip(v).map(|(a, b)| a.hi() - b.lo()).collect();
    let behind: Vec<Rational> = u.iter().zip(v).map(|(a, b)| a.lo() - b.hi()).collect();

    let mut graph = DiGraph::<(), ()>::with_capacity(n, n * n.saturating_sub(1) / 2);
    let nodes: Vec<NodeIndex> = (0..n).map(|_| graph.add_node(())).collect();
    for x in 0..n {
        for y in x + 1..n {
            let forward = ahead[x] <= behind[y];
            let backward = ahead[y] <= behind[x];
            if !forward && !backward {
                return None;
            }
            if forward {
                graph.add_edge(nodes[x], nodes[y], ());
            }
            if backward {
                graph.add_edge(nodes[y], nodes[x], ());
            }
        }
    }

    // tarjan_scc lists components in reverse topological order.
    let mut sets: Vec<Vec<usize>> = tarjan_scc(&graph)
        .into_iter()
        .rev()
        .map(|component| {
            let mut set: Vec<usize> = component.into_iter().map(NodeIndex::index).collect();
            set.sort_unstable();
            set
        })
        .collect();
    sets.retain(|s| !s.is_empty());
    let partition = AmbiguityPartition { sets };
    Some((partition.order(), partition))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SplitRow {
    /// Rows 1 and `r` strictly order some pair of adjacent columns.
    SplitRow(usize),
    /// Every row admits both orders of every adjacent column pair.
    AllSingleSet,
    /// Columns `j` and `j + 1` cannot be ordered against row 1.
    Infeasible(usize),
}

/// Finds the first row (0-based, at least 1) whose comparison with row 0
/// strictly orders some pair of adjacent columns.
pub fn find_split_row(m: &IntervalMatrix) -> Result<SplitRow> {
    let (rows, cols) = m.shape();
    if rows < 2 || cols < 2 {
        return Err(MongeError::TooSmall { rows, cols });
    }
    for k in 1..rows {
        for j in 0..cols - 1 {
            let forward = m.hi(0, j) - m.lo(k, j) <= m.lo(0, j + 1) - m.hi(k, j + 1);
            let backward = m.hi(0, j + 1) - m.lo(k, j + 1) <= m.lo(0, j) - m.hi(k, j);
            match (forward, backward) {
                (false, false) => return Ok(SplitRow::Infeasible(j)),
                (true, false) | (false, true) => return Ok(SplitRow::SplitRow(k)),
                (true, true) => {}
            }
        }
    }
    Ok(SplitRow::AllSingleSet)
}

fn row_of(m: &IntervalMatrix, i: usize) -> Vec<Interval> {
    m.row(i).to_vec()
}

fn column_of(m: &IntervalMatrix, j: usize) -> Vec<Interval> {
    (0..m.rows()).map(|i| m.get(i, j).clone()).collect()
}

fn verified(m: &IntervalMatrix, pair: PermutationPair) -> Option<(PermutationPair, IntervalMatrix)> {
    let permuted = pair.apply(m);
    is_strong_monge(&permuted).then_some((pair, permuted))
}

/// Permutation search for matrices whose entries all have positive width.
pub fn permute_special(m: &IntervalMatrix) -> Result<Option<(PermutationPair, IntervalMatrix)>> {
    if let Some((p, _)) = m.indexed().find(|(_, a)| a.radius().is_zero()) {
        return Err(MongeError::TrivialIntervalPresent(p));
    }
    let (rows, cols) = m.shape();
    if rows < 2 || cols < 2 {
        return Ok(verified(m, PermutationPair::identity(rows, cols)));
    }
    let Some((rho, _)) = order_permutation(&row_of(m, 0), &row_of(m, 1)) else {
        return Ok(None);
    };
    let (first, last) = (rho[0], rho[cols - 1]);
    let Some((sigma, _)) = order_permutation(&column_of(m, first), &column_of(m, last)) else {
        return Ok(None);
    };
    Ok(verified(
        m,
        PermutationPair {
            sigma,
            pi: rho.clone(),
            rho: Some(rho),
        },
    ))
}

/// Row-wise aggregate `[scale * sum lo, scale * sum hi]` over `cols`.
fn aggregate(m: &IntervalMatrix, cols: &[usize], scale: usize) -> Vec<Interval> {
    let factor = Rational::from_integer(scale.into());
    (0..m.rows())
        .map(|i| {
            let (lo, hi) = cols.iter().fold(
                (Rational::zero(), Rational::zero()),
                |(lo, hi), &j| (lo + m.lo(i, j), hi + m.hi(i, j)),
            );
            Interval::new(lo * &factor, hi * &factor).expect("sum of ordered bounds is ordered")
        })
        .collect()
}

/// General permutation search. Returns the permutations and the permuted
/// strongly Monge matrix, or `None` when no such pair exists.
pub fn permute_general(m: &IntervalMatrix) -> Result<Option<(PermutationPair, IntervalMatrix)>> {
    let (rows, cols) = m.shape();
    if rows < 2 || cols < 2 {
        return Ok(verified(m, PermutationPair::identity(rows, cols)));
    }
    let r = match find_split_row(m)? {
        SplitRow::Infeasible(_) => return Ok(None),
        SplitRow::AllSingleSet => return Ok(verified(m, PermutationPair::identity(rows, cols))),
        SplitRow::SplitRow(r) => r,
    };
    let Some((rho, partition)) = order_permutation(&row_of(m, 0), &row_of(m, r)) else {
        return Ok(None);
    };
    let (Some(first), Some(last)) = (partition.sets.first(), partition.sets.last()) else {
        return Err(MongeError::Internal("empty ambiguity partition".into()));
    };
    if partition.sets.len() < 2 {
        return Err(MongeError::Internal("split row yields a single ambiguity set".into()));
    }
    let (b, big_b) = (first.len(), last.len());
    let u = aggregate(m, first, big_b);
    let v = aggregate(m, last, b);
    let Some((sigma, _)) = order_permutation(&u, &v) else {
        return Ok(None);
    };
    let (top, bottom) = (sigma[0], sigma[rows - 1]);
    let Some((pi, _)) = order_permutation(&row_of(m, top), &row_of(m, bottom)) else {
        return Ok(None);
    };
    Ok(verified(m, PermutationPair { sigma, pi, rho: Some(rho) }))
}

pub const BRUTE_FORCE_LIMIT: usize = 6;

/// Exhaustive search over all row and column orders, in lexicographic order.
pub fn is_monge_permutable_bruteforce(m: &IntervalMatrix) -> Result<Option<PermutationPair>> {
    let (rows, cols) = m.shape();
    if rows > BRUTE_FORCE_LIMIT || cols > BRUTE_FORCE_LIMIT {
        return Err(MongeError::TooLarge { rows, cols });
    }
    for sigma in (0..rows).permutations(rows) {
        for pi in (0..cols).permutations(cols) {
            if is_strong_monge(&m.permute(&sigma, &pi)) {
                return Ok(Some(PermutationPair { sigma, pi, rho: None }));
            }
        }
    }
    Ok(None)
}

/// For `i < k`, `j < l`: whether both orders of columns `j`, `l` satisfy the
/// strong condition on rows `i`, `k`.
pub fn both_orders_hold(m: &IntervalMatrix, i: usize, k: usize, j: usize, l: usize) -> bool {
    m.hi(i, j) + m.hi(k, l) <= m.lo(i, l) + m.lo(k, j) && m.hi(i, l) + m.hi(k, j) <= m.lo(i, j) + m.lo(k, l)
}

/// Entries of rows `i..=k` in columns `j` and `l`.
pub fn block_positions(i: usize, k: usize, j: usize, l: usize) -> impl Iterator<Item = Position> {
    (i..=k).flat_map(move |o| [Position::new(o, j), Position::new(o, l)])
}
