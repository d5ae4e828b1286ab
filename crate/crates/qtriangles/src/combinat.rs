//! Combinatorial oracles: weighted path counting on the triangle graph and
//! Bratteli path counts over two-row partitions.
//!
//! A triangle's rows define a leveled graph: the vertex `(c, n)` has one
//! edge of weight `weights[o]` down to `(c - o, n + 1)` for every rule
//! offset `o`, so the weighted path count from the initial row reproduces
//! the triangle entries. [`count_paths`] computes counts by dynamic
//! programming over rows; [`enumerate_paths`] recounts them by brute-force
//! enumeration of offset sequences and exists purely as an independent
//! cross-check.

use std::collections::BTreeMap;

use num_traits::Zero;

use crate::triangle::{next_row, InitRow, Row, StepRule};
use crate::{Coeff, Error, Exponent};

/// A vertex of the triangle graph: column `k` of row `n`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Vertex {
    pub k: Exponent,
    pub n: usize,
}

impl Vertex {
    pub fn new(k: Exponent, n: usize) -> Self {
        Vertex { k, n }
    }
}

/// Default ceiling on the number of offset sequences [`enumerate_paths`]
/// will walk.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1_000_000;

/// Weighted count of downward paths from `from` to `to`, each path counted
/// with the product of its step weights. Zero when `to` is unreachable.
pub fn count_paths(rule: &StepRule, from: Vertex, to: Vertex) -> Result<Coeff, Error> {
    if to.n < from.n {
        return Err(Error::InvalidDirection {
            from: from.n,
            to: to.n,
        });
    }
    let mut frontier: Row = BTreeMap::new();
    frontier.insert(from.k, Coeff::from(1));
    for _ in from.n..to.n {
        frontier = next_row(&frontier, rule);
    }
    Ok(frontier.get(&to.k).cloned().unwrap_or_else(Coeff::zero))
}

/// Brute-force recount of [`count_paths`]: walks every offset sequence of
/// the right length and sums the weight products of those that land on
/// `to`. Refuses to start when the number of sequences exceeds `cap`.
pub fn enumerate_paths(
    rule: &StepRule,
    from: Vertex,
    to: Vertex,
    cap: u64,
) -> Result<Coeff, Error> {
    if to.n < from.n {
        return Err(Error::InvalidDirection {
            from: from.n,
            to: to.n,
        });
    }
    let steps = to.n - from.n;
    let fanout = rule.offset_count() as u64;
    let mut sequences: u64 = 1;
    for _ in 0..steps {
        sequences = sequences.checked_mul(fanout).ok_or_else(|| {
            Error::ResourceLimit(format!(
                "{fanout}^{steps} offset sequences overflow the enumeration budget"
            ))
        })?;
        if sequences > cap {
            return Err(Error::ResourceLimit(format!(
                "{fanout}^{steps} offset sequences exceed the cap of {cap}"
            )));
        }
    }

    let offsets: Vec<(Exponent, Coeff)> = rule.iter().map(|(&o, w)| (o, w.clone())).collect();
    let mut total = Coeff::zero();
    // depth-first walk carrying the running column and weight product
    let mut stack: Vec<(usize, Exponent, Coeff)> = vec![(0, from.k, Coeff::from(1))];
    while let Some((depth, column, weight)) = stack.pop() {
        if depth == steps {
            if column == to.k {
                total += weight;
            }
            continue;
        }
        for (offset, w) in &offsets {
            stack.push((depth + 1, column - offset, &weight * w));
        }
    }
    Ok(total)
}

/// Signed path count from an initial row: `sum_j init[j] * |paths (j,0) ->
/// (k,n)|`. Equals the entry of the triangle built from the same data.
pub fn signed_path_value(rule: &StepRule, init: &InitRow, k: Exponent, n: usize) -> Coeff {
    init.entries()
        .iter()
        .map(|(&j, v)| {
            let paths = count_paths(rule, Vertex::new(j, 0), Vertex::new(k, n))
                .expect("downward query cannot fail");
            v * paths
        })
        .sum()
}

/// Partition with at most two rows, `first >= second`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct TwoRowPartition {
    first: u64,
    second: u64,
}

impl TwoRowPartition {
    pub fn new(first: u64, second: u64) -> Result<Self, Error> {
        if second > first {
            return Err(Error::InvalidIndex(format!(
                "({first},{second}) is not a partition: rows must be weakly decreasing"
            )));
        }
        Ok(TwoRowPartition { first, second })
    }

    pub fn empty() -> Self {
        TwoRowPartition {
            first: 0,
            second: 0,
        }
    }

    pub fn first(&self) -> u64 {
        self.first
    }

    pub fn second(&self) -> u64 {
        self.second
    }

    /// Dimension of the irreducible labelled by this partition:
    /// `first - second + 1`.
    pub fn rep_dimension(&self) -> u64 {
        self.first - self.second + 1
    }
}

impl std::fmt::Display for TwoRowPartition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "({},{})", self.first, self.second)
    }
}

/// All partitions reachable from `p` by adding `boxes` boxes with no two in
/// the same column (a horizontal strip), in lexicographic order. The strip
/// condition for two rows is exactly `second' <= first`.
pub fn pieri_successors(p: TwoRowPartition, boxes: u64) -> Vec<TwoRowPartition> {
    let total = p.first + p.second + boxes;
    let mut out = Vec::new();
    let second_max = p.first.min(p.second + boxes);
    for second in p.second..=second_max {
        let first = total - second;
        if first >= p.first && first >= second {
            out.push(TwoRowPartition { first, second });
        }
    }
    out.sort();
    out
}

/// Path counts from the empty partition through `n` levels of the Pieri
/// rule with `d - 1` boxes per step, keyed by the level-`n` partition.
pub fn bratteli_counts(d: u32, n: usize) -> Result<BTreeMap<TwoRowPartition, Coeff>, Error> {
    if d < 2 {
        return Err(Error::InvalidOrder(d));
    }
    let mut level: BTreeMap<TwoRowPartition, Coeff> = BTreeMap::new();
    level.insert(TwoRowPartition::empty(), Coeff::from(1));
    for _ in 0..n {
        let mut next: BTreeMap<TwoRowPartition, Coeff> = BTreeMap::new();
        for (p, count) in &level {
            for successor in pieri_successors(*p, (d - 1) as u64) {
                *next.entry(successor).or_insert_with(Coeff::zero) += count;
            }
        }
        level = next;
    }
    Ok(level)
}
