//! Construction of a graph whose set of distinct imbalances is a prescribed
//! `P ∪ −Q` for positive integer sets `P` and `Q`.
//!
//! With `t` the gcd of all elements, `p_i = t·f_i` and `q_j = t·g_j`, the
//! construction lays out source blocks `X` and sink blocks `Y` and directs
//! `t` parallel arcs from every vertex of each `X` block to every vertex of
//! its paired `Y` block. A vertex in a source block of outreach `f` then has
//! imbalance `t·f`, and a vertex in a sink block fed by `g` sources has
//! imbalance `−t·g`. Arcs only run from `X` to `Y`, so the result is
//! transitive and every used pair carries exactly `t ≤ r` arcs.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{RGraph, Vertex};

/// Validated input for the construction: the prescribed sets, their gcd `t`,
/// and the quotients `f`, `g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImbalanceSetSpec {
    pub p: Vec<i64>,
    pub q: Vec<i64>,
    pub r: u32,
    pub t: i64,
    pub f: Vec<i64>,
    pub g: Vec<i64>,
}

fn gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn validate_set(name: &str, values: &[i64]) -> Result<()> {
    if values.is_empty() {
        return Err(Error::InvalidParameter(format!("{name} must be non-empty")));
    }
    if values[0] <= 0 {
        return Err(Error::InvalidParameter(format!(
            "{name} must contain positive integers"
        )));
    }
    if !values.windows(2).all(|w| w[0] < w[1]) {
        return Err(Error::InvalidParameter(format!(
            "{name} must be strictly increasing"
        )));
    }
    Ok(())
}

impl ImbalanceSetSpec {
    pub fn new(p: &[i64], q: &[i64], r: u32) -> Result<Self> {
        validate_set("P", p)?;
        validate_set("Q", q)?;
        if r == 0 {
            return Err(Error::InvalidParameter("capacity r must be positive".into()));
        }
        let mut t = 0i64;
        for &x in p.iter().chain(q) {
            t = gcd(t, x);
        }
        if t > i64::from(r) {
            return Err(Error::GcdExceedsCapacity { t, r });
        }
        Ok(ImbalanceSetSpec {
            p: p.to_vec(),
            q: q.to_vec(),
            r,
            t,
            f: p.iter().map(|&x| x / t).collect(),
            g: q.iter().map(|&x| x / t).collect(),
        })
    }
}

/// One contiguous vertex block of the layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub name: String,
    pub size: usize,
    pub first_vertex: Vertex,
}

impl Block {
    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        self.first_vertex..self.first_vertex + self.size
    }
}

/// The block decomposition of a constructed graph's vertex set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockLayout {
    pub blocks: Vec<Block>,
    pub total_vertices: usize,
}

fn to_size(v: i64) -> Result<usize> {
    usize::try_from(v).map_err(|_| Error::InvalidParameter("block size out of range".into()))
}

/// Builds a graph whose distinct-imbalance set is exactly
/// `{p_1, …, p_m} ∪ {−q_1, …, −q_n}`.
pub fn construct_from_imbalance_set(
    p: &[i64],
    q: &[i64],
    r: u32,
) -> Result<(RGraph, BlockLayout)> {
    let spec = ImbalanceSetSpec::new(p, q, r)?;
    let m = spec.f.len();
    let n = spec.g.len();

    // Source blocks X_i^1 (i = 1..m) pair with sink blocks Y_i^1 and carry
    // imbalance p_i = t·f_i each, so |Y_i^1| = f_i; their sinks absorb
    // −t·|X_i^1|, which must land in −Q, hence |X_i^1| = g_i (clamped to the
    // last element when P is longer than Q). Source blocks X_1^i (i = 2..n)
    // pair with Y_1^i, carry p_1 each (|Y_1^i| = f_1) and feed sinks of
    // imbalance −q_i (|X_1^i| = g_i).
    let mut blocks: Vec<Block> = Vec::with_capacity(2 * (m + n.saturating_sub(1)));
    let mut next = 0usize;
    let push = |name: String, size: usize, next: &mut usize| {
        let b = Block {
            name,
            size,
            first_vertex: *next,
        };
        *next += size;
        b
    };
    for i in 1..=m {
        let size = to_size(spec.g[i.min(n) - 1])?;
        blocks.push(push(format!("X{i}^1"), size, &mut next));
    }
    for i in 2..=n {
        let size = to_size(spec.g[i - 1])?;
        blocks.push(push(format!("X1^{i}"), size, &mut next));
    }
    for i in 1..=m {
        let size = to_size(spec.f[i - 1])?;
        blocks.push(push(format!("Y{i}^1"), size, &mut next));
    }
    for i in 2..=n {
        let size = to_size(spec.f[0])?;
        blocks.push(push(format!("Y1^{i}"), size, &mut next));
    }
    let total = next;
    let sources = m + n - 1; // X blocks precede Y blocks in the list

    let mut graph = RGraph::new(total, r)?;
    let t = u32::try_from(spec.t).expect("t <= r fits in u32");
    for k in 0..sources {
        let x = &blocks[k];
        let y = &blocks[sources + k];
        for u in x.vertices() {
            for v in y.vertices() {
                graph.add_arcs(u, v, t)?;
            }
        }
    }

    Ok((
        graph,
        BlockLayout {
            blocks,
            total_vertices: total,
        },
    ))
}

/// The set of distinct vertex imbalances.
pub fn imbalance_set_of(g: &RGraph) -> BTreeSet<i64> {
    g.imbalance_vector().into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(values: &[i64]) -> BTreeSet<i64> {
        values.iter().copied().collect()
    }

    #[test]
    fn equal_singletons_give_one_saturated_pair() {
        let (g, layout) = construct_from_imbalance_set(&[2], &[2], 2).unwrap();
        assert_eq!(layout.total_vertices, 2);
        assert_eq!(g.multiplicity(0, 1), 2);
        assert_eq!(imbalance_set_of(&g), set(&[2, -2]));
    }

    #[test]
    fn mixed_sets_lay_out_nine_vertices() {
        let (g, layout) = construct_from_imbalance_set(&[1, 2], &[3], 1).unwrap();
        assert_eq!(layout.total_vertices, 9);
        let names: Vec<&str> = layout.blocks.iter().map(|b| b.name.as_str()).collect();
        assert_eq!(names, vec!["X1^1", "X2^1", "Y1^1", "Y2^1"]);
        let sizes: Vec<usize> = layout.blocks.iter().map(|b| b.size).collect();
        assert_eq!(sizes, vec![3, 3, 1, 2]);
        assert_eq!(imbalance_set_of(&g), set(&[1, 2, -3]));
    }

    #[test]
    fn gcd_above_capacity_is_rejected() {
        match construct_from_imbalance_set(&[2], &[4], 1) {
            Err(Error::GcdExceedsCapacity { t, r }) => {
                assert_eq!((t, r), (2, 1));
            }
            other => panic!("expected gcd error, got {other:?}"),
        }
    }

    #[test]
    fn invalid_sets_are_rejected() {
        assert!(construct_from_imbalance_set(&[], &[1], 1).is_err());
        assert!(construct_from_imbalance_set(&[2, 1], &[1], 1).is_err());
        assert!(construct_from_imbalance_set(&[0], &[1], 1).is_err());
        assert!(construct_from_imbalance_set(&[-1, 2], &[1], 1).is_err());
    }

    #[test]
    fn set_of_examples() {
        let g = RGraph::new(3, 1).unwrap();
        assert_eq!(imbalance_set_of(&g), set(&[0]));
        let g = RGraph::from_arcs(2, 2, &[(0, 1, 2)]).unwrap();
        assert_eq!(imbalance_set_of(&g), set(&[2, -2]));
    }

    #[test]
    fn output_is_transitive_and_respects_caps() {
        let (g, _) = construct_from_imbalance_set(&[2, 4], &[2, 4], 2).unwrap();
        assert!(g.is_transitive());
        let t = 2;
        for (u, v, m) in g.arcs() {
            assert_eq!(m, t);
            assert_eq!(g.multiplicity(v, u), 0);
        }

        // Arcs only leave source blocks and only enter sink blocks, so no
        // two-path, cycle or double can appear at any prescription.
        for p in [&[1][..], &[3], &[1, 4], &[2, 3]] {
            for q in [&[1][..], &[2], &[1, 5]] {
                let (g, _) = construct_from_imbalance_set(p, q, 1).unwrap();
                assert!(g.is_transitive(), "intransitive for P={p:?} Q={q:?}");
            }
        }
    }
}
