//! Construction of a minimum-arc graph realizing a feasible imbalance
//! sequence.
//!
//! Positions of the input sequence map to vertices directly: vertex `i`
//! realizes entry `i` of the non-decreasing input, so positive entries are
//! suppliers of outgoing arcs and negative entries consumers.
//!
//! The construction runs in two phases. A lexicographic greedy pass ships
//! `min(r, remaining supply, remaining demand)` arcs directly from each
//! supplier to each consumer in ascending vertex order. Whatever supply
//! remains is routed by successive shortest augmenting paths over the whole
//! vertex set, one arc of cost per pair traversed; this covers both the
//! rebalancing of direct shipments and routes through intermediate vertices,
//! which become necessary when a supplier's demand reach is capped (for
//! example `[-2, 0, 2]` at `r = 1`, where one unit must travel through the
//! zero-imbalance vertex). Every augmentation follows a minimum-cost residual
//! path, so the finished graph has the fewest arcs any realization of the
//! sequence can have, and is therefore transitive: any intransitive pattern
//! would admit an arc-reducing transformation.

use crate::checks::{self};
use crate::error::{Error, Result};
use crate::graph::{RGraph, Vertex};

/// A realization together with the position-to-vertex assignment.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realization {
    pub graph: RGraph,
    /// `vertex_map[k]` is the vertex realizing entry `k` (0-based) of the
    /// input sequence. The construction assigns positions identically.
    pub vertex_map: Vec<Vertex>,
    pub arc_count: u64,
}

/// Every arc raises one imbalance and lowers another, so any realization
/// needs at least `Σ max(b_i, 0)` arcs.
pub fn min_arc_lower_bound(values: &[i64]) -> Result<u64> {
    let mut total = 0i128;
    let mut positive = 0u64;
    for &b in values {
        total += i128::from(b);
        if b > 0 {
            positive = positive
                .checked_add(b as u64)
                .ok_or(Error::Overflow("positive imbalance total"))?;
        }
    }
    if total != 0 {
        return Err(Error::InvalidParameter(format!(
            "imbalances must sum to zero, got {total}"
        )));
    }
    Ok(positive)
}

const INF: i64 = i64::MAX / 4;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
enum Step {
    /// Add arcs on the ordered pair (pred, v).
    Forward,
    /// Remove arcs on the ordered pair (v, pred).
    Cancel,
}

/// Builds a minimum-arc realization of a feasible non-decreasing sequence.
pub fn realize(values: &[i64], r: u32) -> Result<Realization> {
    let verdict = checks::check_feasible_nondecreasing(values, r)?;
    if let Some(witness) = verdict.witness {
        return Err(Error::Infeasible(witness));
    }

    let n = values.len();
    let cap = u64::from(r);
    let mut ship = vec![0u64; n * n]; // arcs placed on each ordered pair
    let mut supply: Vec<u64> = values.iter().map(|&b| b.max(0) as u64).collect();
    let mut demand: Vec<u64> = values.iter().map(|&b| (-b).max(0) as u64).collect();

    // Greedy direct shipping in lexicographic (supplier, consumer) order.
    for u in 0..n {
        if supply[u] == 0 {
            continue;
        }
        for v in 0..n {
            if demand[v] == 0 {
                continue;
            }
            let amount = cap.min(supply[u]).min(demand[v]);
            if amount > 0 {
                ship[u * n + v] = amount;
                supply[u] -= amount;
                demand[v] -= amount;
            }
            if supply[u] == 0 {
                break;
            }
        }
    }

    // Successive shortest augmenting paths for whatever the greedy left over.
    while supply.iter().any(|&s| s > 0) {
        let (dist, pred) = shortest_residual_paths(n, cap, &ship, &supply)?;
        let sink = (0..n)
            .filter(|&v| demand[v] > 0 && dist[v] < INF)
            .min_by_key(|&v| (dist[v], v));
        let sink = match sink {
            Some(v) => v,
            None => {
                return Err(Error::InternalContradiction(
                    "no augmenting path although the feasibility check passed".into(),
                ))
            }
        };

        // Trace back to a supplier and find the bottleneck.
        let mut bottleneck = demand[sink];
        let mut v = sink;
        let mut steps = 0usize;
        while let Some((u, step)) = pred[v] {
            let room = match step {
                Step::Forward => cap - ship[u * n + v] - ship[v * n + u],
                Step::Cancel => ship[v * n + u],
            };
            bottleneck = bottleneck.min(room);
            v = u;
            steps += 1;
            if steps > n {
                return Err(Error::InternalContradiction(
                    "cycle in the augmenting-path predecessors".into(),
                ));
            }
        }
        bottleneck = bottleneck.min(supply[v]);
        debug_assert!(bottleneck > 0);

        let root = v;
        let mut v = sink;
        while let Some((u, step)) = pred[v] {
            match step {
                Step::Forward => ship[u * n + v] += bottleneck,
                Step::Cancel => ship[v * n + u] -= bottleneck,
            }
            v = u;
        }
        supply[root] -= bottleneck;
        demand[sink] -= bottleneck;
    }

    let mut graph = RGraph::new(n, r)?;
    for u in 0..n {
        for v in 0..n {
            let m = ship[u * n + v];
            if m == 0 {
                continue;
            }
            if ship[v * n + u] > 0 {
                return Err(Error::InternalContradiction(
                    "opposite arcs in a minimum-cost shipment".into(),
                ));
            }
            let m = u32::try_from(m).map_err(|_| {
                Error::InternalContradiction("pair shipment exceeds the capacity type".into())
            })?;
            graph
                .add_arcs(u, v, m)
                .map_err(|e| Error::InternalContradiction(format!("shipment breaks caps: {e}")))?;
        }
    }

    let arc_count = graph.arc_count();
    Ok(Realization {
        graph,
        vertex_map: (0..n).collect(),
        arc_count,
    })
}

/// Bellman-Ford over the residual network: adding an arc costs 1, canceling
/// one pays back 1, and each unordered pair holds `ship_uv + ship_vu <= cap`.
/// Edge scans run in a fixed order with strict improvement only, so the
/// predecessor forest is deterministic.
#[allow(clippy::type_complexity)]
fn shortest_residual_paths(
    n: usize,
    cap: u64,
    ship: &[u64],
    supply: &[u64],
) -> Result<(Vec<i64>, Vec<Option<(Vertex, Step)>>)> {
    let mut dist = vec![INF; n];
    let mut pred: Vec<Option<(Vertex, Step)>> = vec![None; n];
    for u in 0..n {
        if supply[u] > 0 {
            dist[u] = 0;
        }
    }
    for round in 0..=n {
        let mut changed = false;
        for u in 0..n {
            if dist[u] >= INF {
                continue;
            }
            for v in 0..n {
                if u == v {
                    continue;
                }
                if ship[u * n + v] + ship[v * n + u] < cap && dist[u] + 1 < dist[v] {
                    dist[v] = dist[u] + 1;
                    pred[v] = Some((u, Step::Forward));
                    changed = true;
                }
                if ship[v * n + u] > 0 && dist[u] - 1 < dist[v] {
                    dist[v] = dist[u] - 1;
                    pred[v] = Some((u, Step::Cancel));
                    changed = true;
                }
            }
        }
        if !changed {
            return Ok((dist, pred));
        }
        if round == n {
            return Err(Error::InternalContradiction(
                "negative cycle in the residual network".into(),
            ));
        }
    }
    Ok((dist, pred))
}
