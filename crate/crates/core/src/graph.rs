//! The directed-multigraph data model.
//!
//! An `RGraph` is a loopless directed multigraph on vertices `0..n` in which
//! every unordered pair `{u, v}` carries at most `r` arcs in total, counting
//! both directions. The imbalance of a vertex is its outdegree minus its
//! indegree, with arc multiplicities counted.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

pub type Vertex = usize;

/// Sort order declared for an imbalance sequence.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SortOrder {
    NonDecreasing,
    NonIncreasing,
}

impl fmt::Display for SortOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SortOrder::NonDecreasing => write!(f, "non-decreasing"),
            SortOrder::NonIncreasing => write!(f, "non-increasing"),
        }
    }
}

/// Returns true when `values` respects `order`.
pub fn is_sorted(values: &[i64], order: SortOrder) -> bool {
    match order {
        SortOrder::NonDecreasing => values.windows(2).all(|w| w[0] <= w[1]),
        SortOrder::NonIncreasing => values.windows(2).all(|w| w[0] >= w[1]),
    }
}

/// A loopless directed multigraph with at most `r` arcs per unordered pair.
///
/// Zero multiplicities are never stored, so two equal graphs have identical
/// internal maps and serialize identically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RGraph {
    n: usize,
    r: u32,
    mult: BTreeMap<(Vertex, Vertex), u32>,
}

impl RGraph {
    /// Creates an arcless graph on `n` vertices with per-pair capacity `r`.
    pub fn new(n: usize, r: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParameter("vertex count must be positive".into()));
        }
        if r == 0 {
            return Err(Error::InvalidParameter("capacity r must be positive".into()));
        }
        Ok(RGraph {
            n,
            r,
            mult: BTreeMap::new(),
        })
    }

    /// Builds a graph from `(u, v, multiplicity)` triples.
    pub fn from_arcs(n: usize, r: u32, arcs: &[(Vertex, Vertex, u32)]) -> Result<Self> {
        let mut g = RGraph::new(n, r)?;
        for &(u, v, m) in arcs {
            g.add_arcs(u, v, m)?;
        }
        Ok(g)
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn capacity(&self) -> u32 {
        self.r
    }

    /// Multiplicity of the ordered pair `(u, v)`; zero when absent.
    pub fn multiplicity(&self, u: Vertex, v: Vertex) -> u32 {
        self.mult.get(&(u, v)).copied().unwrap_or(0)
    }

    /// Total arcs on the unordered pair `{u, v}`, both directions.
    pub fn pair_load(&self, u: Vertex, v: Vertex) -> u32 {
        self.multiplicity(u, v) + self.multiplicity(v, u)
    }

    fn check_vertex(&self, v: Vertex) -> Result<()> {
        if v >= self.n {
            return Err(Error::InvalidParameter(format!(
                "vertex {v} out of range for n={}",
                self.n
            )));
        }
        Ok(())
    }

    /// Adds `m >= 1` arcs from `u` to `v`.
    pub fn add_arcs(&mut self, u: Vertex, v: Vertex, m: u32) -> Result<()> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::LoopArc(u));
        }
        if m == 0 {
            return Err(Error::InvalidParameter("arc multiplicity must be positive".into()));
        }
        let total = u64::from(self.pair_load(u, v)) + u64::from(m);
        if total > u64::from(self.r) {
            return Err(Error::CapExceeded {
                u,
                v,
                total,
                cap: self.r,
            });
        }
        *self.mult.entry((u, v)).or_insert(0) += m;
        Ok(())
    }

    /// Removes `m` arcs from `u` to `v`; the entry disappears when it hits zero.
    pub fn remove_arcs(&mut self, u: Vertex, v: Vertex, m: u32) -> Result<()> {
        let have = self.multiplicity(u, v);
        if m > have {
            return Err(Error::InvalidParameter(format!(
                "cannot remove {m} arcs from ({u},{v}) carrying {have}"
            )));
        }
        if m == have {
            self.mult.remove(&(u, v));
        } else {
            self.mult.insert((u, v), have - m);
        }
        Ok(())
    }

    /// All nonzero arcs as `(u, v, multiplicity)`, sorted by `(u, v)`.
    pub fn arcs(&self) -> impl Iterator<Item = (Vertex, Vertex, u32)> + '_ {
        self.mult.iter().map(|(&(u, v), &m)| (u, v, m))
    }

    /// Total number of arcs, counting multiplicities.
    pub fn arc_count(&self) -> u64 {
        self.mult.values().map(|&m| u64::from(m)).sum()
    }

    /// Outdegree minus indegree of `v`, counting multiplicities.
    pub fn imbalance(&self, v: Vertex) -> i64 {
        let mut b = 0i64;
        for (&(s, t), &m) in &self.mult {
            if s == v {
                b += i64::from(m);
            }
            if t == v {
                b -= i64::from(m);
            }
        }
        b
    }

    /// Per-vertex imbalances indexed by vertex id.
    pub fn imbalance_vector(&self) -> Vec<i64> {
        let mut b = vec![0i64; self.n];
        for (&(u, v), &m) in &self.mult {
            b[u] += i64::from(m);
            b[v] -= i64::from(m);
        }
        b
    }

    /// Vertex imbalances sorted in the requested order.
    pub fn imbalance_sequence(&self, order: SortOrder) -> ImbalanceSequence {
        let mut values = self.imbalance_vector();
        values.sort_unstable();
        if order == SortOrder::NonIncreasing {
            values.reverse();
        }
        ImbalanceSequence { values, order }
    }

    /// The graph with every arc reversed.
    pub fn converse(&self) -> RGraph {
        let mult = self
            .mult
            .iter()
            .map(|(&(u, v), &m)| ((v, u), m))
            .collect();
        RGraph {
            n: self.n,
            r: self.r,
            mult,
        }
    }

    /// Classifies the oriented triple induced by three distinct vertices.
    pub fn classify_oriented_triple(&self, u: Vertex, v: Vertex, w: Vertex) -> Result<TripleClass> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        self.check_vertex(w)?;
        if u == v || v == w || u == w {
            return Err(Error::InvalidParameter(
                "triple vertices must be pairwise distinct".into(),
            ));
        }
        let pairs = [(u, v), (v, w), (u, w)];
        let mut arcs: Vec<(Vertex, Vertex)> = Vec::with_capacity(3);
        for &(a, b) in &pairs {
            let fwd = self.multiplicity(a, b) > 0;
            let bwd = self.multiplicity(b, a) > 0;
            if fwd && bwd {
                return Ok(TripleClass {
                    kind: TripleKind::Intransitive,
                    pattern: "double-present",
                });
            }
            if fwd {
                arcs.push((a, b));
            } else if bwd {
                arcs.push((b, a));
            }
        }
        // Patterns are matched on the direction sign of each pair, up to
        // relabeling of the three vertices.
        let class = match arcs.len() {
            0 => (TripleKind::Transitive, "u(0-0)v(0-0)w(0-0)u"),
            1 => (TripleKind::Transitive, "u(1-0)v(0-0)w(0-0)u"),
            2 => {
                let (a, b) = arcs[0];
                let (c, d) = arcs[1];
                if a == c {
                    (TripleKind::Transitive, "u(1-0)v(0-0)w(0-1)u") // out-star
                } else if b == d {
                    (TripleKind::Transitive, "u(1-0)v(0-1)w(0-0)u") // in-star
                } else {
                    (TripleKind::Intransitive, "u(1-0)v(1-0)w(0-0)u") // 2-path
                }
            }
            _ => {
                let has_out2 = [u, v, w]
                    .iter()
                    .any(|&x| arcs.iter().filter(|&&(s, _)| s == x).count() == 2);
                if has_out2 {
                    (TripleKind::Transitive, "u(1-0)v(1-0)w(0-1)u")
                } else {
                    (TripleKind::Intransitive, "u(1-0)v(1-0)w(1-0)u") // 3-cycle
                }
            }
        };
        Ok(TripleClass {
            kind: class.0,
            pattern: class.1,
        })
    }

    /// True when no pair carries arcs both ways and every vertex triple
    /// classifies transitive.
    pub fn is_transitive(&self) -> bool {
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.multiplicity(u, v) > 0 && self.multiplicity(v, u) > 0 {
                    return false;
                }
            }
        }
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                for w in (v + 1)..self.n {
                    let class = self
                        .classify_oriented_triple(u, v, w)
                        .expect("vertices are distinct and in range");
                    if class.kind == TripleKind::Intransitive {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Vertex imbalances listed in a declared sort order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImbalanceSequence {
    values: Vec<i64>,
    order: SortOrder,
}

impl ImbalanceSequence {
    pub fn new(values: Vec<i64>, order: SortOrder) -> Result<Self> {
        if !is_sorted(&values, order) {
            return Err(Error::InvalidOrder { expected: order });
        }
        Ok(ImbalanceSequence { values, order })
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn order(&self) -> SortOrder {
        self.order
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TripleKind {
    Transitive,
    Intransitive,
}

/// Outcome of classifying one oriented triple.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TripleClass {
    pub kind: TripleKind,
    /// Tag of the matched form, written as the sign pattern around the
    /// triple, or "double-present" when some pair carries arcs both ways.
    pub pattern: &'static str,
}
