//! Exhaustive small-instance ground truth.
//!
//! Enumerates every graph on `n` labeled vertices with per-pair capacity `r`
//! (each unordered pair independently takes any split `a_uv + a_vu <= r`),
//! and derives from the enumeration: the exact set of achievable imbalance
//! sequences, minimum arc counts with all witnesses, and connectivity of the
//! move graph on a fixed imbalance vector.

use std::collections::{BTreeSet, HashMap, VecDeque};

use crate::error::{Error, Result};
use crate::graph::{RGraph, SortOrder, Vertex};
use crate::moves::{apply_move, find_moves, Direction, ALL_KINDS};

pub const DEFAULT_HARD_CAP: u64 = 10_000_000;

/// Bounds for an exhaustive run. The guard refuses universes larger than
/// `hard_cap` graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EnumerationLimits {
    pub n: usize,
    pub r: u32,
    pub hard_cap: u64,
}

impl EnumerationLimits {
    pub fn new(n: usize, r: u32) -> Self {
        EnumerationLimits {
            n,
            r,
            hard_cap: DEFAULT_HARD_CAP,
        }
    }
}

/// Number of graphs on `n` labeled vertices at capacity `r`:
/// `((r+1)(r+2)/2) ^ (n(n-1)/2)`. `None` when it exceeds `u128`.
pub fn universe_size(n: usize, r: u32) -> Option<u128> {
    let states = (u128::from(r) + 1) * (u128::from(r) + 2) / 2;
    let pairs = n as u128 * (n as u128 - 1) / 2;
    let exponent = u32::try_from(pairs).ok()?;
    states.checked_pow(exponent)
}

/// Streaming enumeration in odometer order: pair states advance
/// lexicographically, the last pair fastest. The first graph is arcless.
pub struct RGraphEnumeration {
    n: usize,
    r: u32,
    pairs: Vec<(Vertex, Vertex)>,
    states: Vec<(u32, u32)>,
    counters: Vec<usize>,
    exhausted: bool,
    started: bool,
}

impl Iterator for RGraphEnumeration {
    type Item = RGraph;

    fn next(&mut self) -> Option<RGraph> {
        if self.exhausted {
            return None;
        }
        if self.started {
            // advance the odometer from the last pair
            let mut i = self.counters.len();
            loop {
                if i == 0 {
                    self.exhausted = true;
                    return None;
                }
                i -= 1;
                self.counters[i] += 1;
                if self.counters[i] < self.states.len() {
                    break;
                }
                self.counters[i] = 0;
            }
        }
        self.started = true;
        let mut g = RGraph::new(self.n, self.r).expect("validated limits");
        for (idx, &(u, v)) in self.pairs.iter().enumerate() {
            let (fwd, bwd) = self.states[self.counters[idx]];
            if fwd > 0 {
                g.add_arcs(u, v, fwd).expect("state within cap");
            }
            if bwd > 0 {
                g.add_arcs(v, u, bwd).expect("state within cap");
            }
        }
        Some(g)
    }
}

/// Yields every graph within the limits exactly once.
pub fn enumerate_rgraphs(limits: &EnumerationLimits) -> Result<RGraphEnumeration> {
    if limits.n == 0 || limits.r == 0 {
        return Err(Error::InvalidParameter(
            "enumeration needs n >= 1 and r >= 1".into(),
        ));
    }
    match universe_size(limits.n, limits.r) {
        Some(count) if count <= u128::from(limits.hard_cap) => {}
        Some(count) => return Err(Error::EnumerationTooLarge(count.to_string())),
        None => return Err(Error::EnumerationTooLarge("more than 2^128".into())),
    }
    let mut pairs = Vec::new();
    for u in 0..limits.n {
        for v in (u + 1)..limits.n {
            pairs.push((u, v));
        }
    }
    let mut states = Vec::new();
    for fwd in 0..=limits.r {
        for bwd in 0..=(limits.r - fwd) {
            states.push((fwd, bwd));
        }
    }
    let counters = vec![0usize; pairs.len()];
    Ok(RGraphEnumeration {
        n: limits.n,
        r: limits.r,
        pairs,
        states,
        counters,
        exhausted: false,
        started: false,
    })
}

/// All distinct non-decreasing imbalance sequences over the universe.
pub fn enumerate_imbalance_sequences(limits: &EnumerationLimits) -> Result<BTreeSet<Vec<i64>>> {
    let mut out = BTreeSet::new();
    for g in enumerate_rgraphs(limits)? {
        out.insert(g.imbalance_sequence(SortOrder::NonDecreasing).values().to_vec());
    }
    Ok(out)
}

/// Minimum arc count over all realizations of a non-decreasing sequence,
/// together with every realization attaining it.
pub fn min_arcs_brute(values: &[i64], limits: &EnumerationLimits) -> Result<(u64, Vec<RGraph>)> {
    if values.len() != limits.n {
        return Err(Error::InvalidParameter(
            "sequence length must equal the enumerated vertex count".into(),
        ));
    }
    let mut best: Option<u64> = None;
    let mut witnesses = Vec::new();
    for g in enumerate_rgraphs(limits)? {
        if g.imbalance_sequence(SortOrder::NonDecreasing).values() != values {
            continue;
        }
        let count = g.arc_count();
        match best {
            Some(b) if count > b => {}
            Some(b) if count == b => witnesses.push(g),
            _ => {
                best = Some(count);
                witnesses = vec![g];
            }
        }
    }
    match best {
        Some(b) => Ok((b, witnesses)),
        None => Err(Error::NotRealizable),
    }
}

/// Whether single moves connect all realizations carrying the imbalance
/// vector `values` (vertex `i` holds `values[i]`). Moves preserve every
/// vertex's imbalance, so the vector — not just the sorted sequence — is the
/// natural node set.
pub fn move_graph_connected(values: &[i64], limits: &EnumerationLimits) -> Result<bool> {
    if values.len() != limits.n {
        return Err(Error::InvalidParameter(
            "sequence length must equal the enumerated vertex count".into(),
        ));
    }
    let mut universe: Vec<RGraph> = Vec::new();
    for g in enumerate_rgraphs(limits)? {
        if g.imbalance_vector() == values {
            universe.push(g);
        }
    }
    if universe.is_empty() {
        return Err(Error::NotRealizable);
    }
    let index: HashMap<&RGraph, usize> =
        universe.iter().enumerate().map(|(i, g)| (g, i)).collect();
    let mut seen = vec![false; universe.len()];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    let mut reached = 1usize;
    while let Some(i) = queue.pop_front() {
        let g = &universe[i];
        for direction in [Direction::Forward, Direction::Inverse] {
            for m in find_moves(g, &ALL_KINDS, direction) {
                let h = apply_move(g, &m).expect("move came from find_moves");
                let j = *index
                    .get(&h)
                    .expect("moves preserve the imbalance vector and caps");
                if !seen[j] {
                    seen[j] = true;
                    reached += 1;
                    queue.push_back(j);
                }
            }
        }
    }
    Ok(reached == universe.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn universe_sizes_match_the_closed_form() {
        assert_eq!(universe_size(2, 1), Some(3));
        assert_eq!(universe_size(3, 1), Some(27));
        assert_eq!(universe_size(3, 2), Some(216));
        assert_eq!(universe_size(4, 2), Some(46_656));
    }

    #[test]
    fn enumeration_counts_and_validity() {
        let graphs: Vec<RGraph> = enumerate_rgraphs(&EnumerationLimits::new(2, 1))
            .unwrap()
            .collect();
        assert_eq!(graphs.len(), 3);

        let graphs: Vec<RGraph> = enumerate_rgraphs(&EnumerationLimits::new(3, 1))
            .unwrap()
            .collect();
        assert_eq!(graphs.len(), 27);

        let count = enumerate_rgraphs(&EnumerationLimits::new(3, 2)).unwrap().count();
        assert_eq!(count, 216);
    }

    #[test]
    fn enumeration_is_duplicate_free() {
        let mut seen = BTreeSet::new();
        for g in enumerate_rgraphs(&EnumerationLimits::new(3, 2)).unwrap() {
            let key: Vec<(Vertex, Vertex, u32)> = g.arcs().collect();
            assert!(seen.insert(key));
        }
        assert_eq!(seen.len(), 216);
    }

    #[test]
    fn the_guard_rejects_large_universes() {
        let limits = EnumerationLimits::new(8, 4);
        assert!(matches!(
            enumerate_rgraphs(&limits),
            Err(Error::EnumerationTooLarge(_))
        ));
    }

    #[test]
    fn sequence_sets_for_tiny_universes() {
        let set = enumerate_imbalance_sequences(&EnumerationLimits::new(2, 1)).unwrap();
        let expect: BTreeSet<Vec<i64>> = [vec![-1, 1], vec![0, 0]].into_iter().collect();
        assert_eq!(set, expect);

        let set = enumerate_imbalance_sequences(&EnumerationLimits::new(1, 1)).unwrap();
        let expect: BTreeSet<Vec<i64>> = [vec![0]].into_iter().collect();
        assert_eq!(set, expect);
    }

    #[test]
    fn brute_minimum_examples() {
        let limits = EnumerationLimits::new(3, 1);
        let (count, wits) = min_arcs_brute(&[0, 0, 0], &limits).unwrap();
        assert_eq!(count, 0);
        assert_eq!(wits.len(), 1);

        let (count, wits) = min_arcs_brute(&[-1, 0, 1], &limits).unwrap();
        assert_eq!(count, 1);
        assert!(wits.iter().all(|g| g.arc_count() == 1));

        let limits = EnumerationLimits::new(3, 2);
        let (count, wits) = min_arcs_brute(&[-2, -2, 4], &limits).unwrap();
        assert_eq!(count, 4);
        assert!(wits.iter().all(|g| g.is_transitive()));
    }

    #[test]
    fn unrealizable_sequences_are_reported() {
        let limits = EnumerationLimits::new(3, 1);
        assert!(matches!(
            min_arcs_brute(&[-2, -2, 4], &limits),
            Err(Error::NotRealizable)
        ));
    }

    #[test]
    fn move_graph_examples() {
        assert!(move_graph_connected(&[0, 0], &EnumerationLimits::new(2, 2)).unwrap());
        assert!(move_graph_connected(&[0, 0, 0], &EnumerationLimits::new(3, 1)).unwrap());
        assert!(move_graph_connected(&[-1, 0, 1], &EnumerationLimits::new(3, 1)).unwrap());
    }
}
