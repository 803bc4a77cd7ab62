//! Imbalance-preserving transformation moves.
//!
//! Three local rewrites connect graphs with the same imbalances:
//!
//! * `triangle-cancel (u,v,w)`: delete one arc from each of `u→v`, `v→w`,
//!   `w→u` (a directed triangle), three arcs fewer;
//! * `path-shortcut (u,v,w)`: replace one `u→v` and one `v→w` arc by a single
//!   `u→w` arc, one arc fewer, applicable when `w→u` carries nothing and the
//!   `{u,w}` pair has room;
//! * `double-cancel (u,v)`: delete one arc in each direction of a pair, two
//!   arcs fewer.
//!
//! Each move has an inverse performing the opposite edits. Applicability is
//! stated on multiplicities, so the moves compose inside graphs that carry
//! several arcs per pair. Every vertex keeps its imbalance under every move.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{RGraph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum MoveKind {
    DoubleCancel,
    TriangleCancel,
    PathShortcut,
}

pub const ALL_KINDS: [MoveKind; 3] = [
    MoveKind::DoubleCancel,
    MoveKind::TriangleCancel,
    MoveKind::PathShortcut,
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    /// Arc-reducing.
    Forward,
    /// Arc-increasing.
    Inverse,
}

/// Vertices a move acts on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Site {
    Pair(Vertex, Vertex),
    Triple(Vertex, Vertex, Vertex),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Move {
    pub kind: MoveKind,
    pub site: Site,
    pub direction: Direction,
}

impl Move {
    /// The same move with its direction flipped.
    pub fn flipped(&self) -> Move {
        Move {
            direction: match self.direction {
                Direction::Forward => Direction::Inverse,
                Direction::Inverse => Direction::Forward,
            },
            ..*self
        }
    }

    /// Signed change in total arc count when this move is applied.
    pub fn arc_delta(&self) -> i64 {
        let forward = match self.kind {
            MoveKind::TriangleCancel => -3,
            MoveKind::PathShortcut => -1,
            MoveKind::DoubleCancel => -2,
        };
        match self.direction {
            Direction::Forward => forward,
            Direction::Inverse => -forward,
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let kind = match self.kind {
            MoveKind::DoubleCancel => "double-cancel",
            MoveKind::TriangleCancel => "triangle-cancel",
            MoveKind::PathShortcut => "path-shortcut",
        };
        let dir = match self.direction {
            Direction::Forward => "forward",
            Direction::Inverse => "inverse",
        };
        match self.site {
            Site::Pair(u, v) => write!(f, "{kind} ({u},{v}) {dir}"),
            Site::Triple(u, v, w) => write!(f, "{kind} ({u},{v},{w}) {dir}"),
        }
    }
}

fn room(g: &RGraph, u: Vertex, v: Vertex) -> bool {
    g.pair_load(u, v) < g.capacity()
}

fn applicable(g: &RGraph, m: &Move) -> std::result::Result<(), String> {
    match (m.kind, m.site, m.direction) {
        (MoveKind::DoubleCancel, Site::Pair(u, v), Direction::Forward) => {
            if g.multiplicity(u, v) < 1 || g.multiplicity(v, u) < 1 {
                return Err(format!("pair ({u},{v}) does not carry arcs both ways"));
            }
        }
        (MoveKind::DoubleCancel, Site::Pair(u, v), Direction::Inverse) => {
            if g.pair_load(u, v) + 2 > g.capacity() {
                return Err(format!("pair ({u},{v}) lacks room for two more arcs"));
            }
        }
        (MoveKind::TriangleCancel, Site::Triple(u, v, w), Direction::Forward) => {
            for (a, b) in [(u, v), (v, w), (w, u)] {
                if g.multiplicity(a, b) < 1 {
                    return Err(format!("no arc {a}->{b}"));
                }
            }
        }
        (MoveKind::TriangleCancel, Site::Triple(u, v, w), Direction::Inverse) => {
            for (a, b) in [(u, v), (v, w), (w, u)] {
                if !room(g, a, b) {
                    return Err(format!("pair ({a},{b}) lacks room for one more arc"));
                }
            }
        }
        (MoveKind::PathShortcut, Site::Triple(u, v, w), Direction::Forward) => {
            if g.multiplicity(u, v) < 1 {
                return Err(format!("no arc {u}->{v}"));
            }
            if g.multiplicity(v, w) < 1 {
                return Err(format!("no arc {v}->{w}"));
            }
            if g.multiplicity(w, u) != 0 {
                return Err(format!("arc {w}->{u} present"));
            }
            if !room(g, u, w) {
                return Err(format!("pair ({u},{w}) lacks room for one more arc"));
            }
        }
        (MoveKind::PathShortcut, Site::Triple(u, v, w), Direction::Inverse) => {
            if g.multiplicity(u, w) < 1 {
                return Err(format!("no arc {u}->{w}"));
            }
            if g.multiplicity(w, u) != 0 {
                return Err(format!("arc {w}->{u} present"));
            }
            if !room(g, u, v) {
                return Err(format!("pair ({u},{v}) lacks room for one more arc"));
            }
            if !room(g, v, w) {
                return Err(format!("pair ({v},{w}) lacks room for one more arc"));
            }
        }
        _ => return Err("site arity does not match the move kind".into()),
    }
    Ok(())
}

/// Lists applicable moves of the requested kinds and direction.
///
/// Moves are listed kind by kind in the order double-cancel, triangle-cancel,
/// path-shortcut, each in lexicographic vertex order. Triangle sites are
/// canonicalized so the smallest vertex comes first; the two orientations of
/// a triangle remain distinct sites.
pub fn find_moves(g: &RGraph, kinds: &[MoveKind], direction: Direction) -> Vec<Move> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    let mut push = |kind: MoveKind, site: Site| {
        let m = Move {
            kind,
            site,
            direction,
        };
        if applicable(g, &m).is_ok() {
            out.push(m);
        }
    };
    for &kind in ALL_KINDS.iter().filter(|k| kinds.contains(k)) {
        match kind {
            MoveKind::DoubleCancel => {
                for u in 0..n {
                    for v in (u + 1)..n {
                        push(kind, Site::Pair(u, v));
                    }
                }
            }
            MoveKind::TriangleCancel | MoveKind::PathShortcut => {
                for u in 0..n {
                    for v in 0..n {
                        for w in 0..n {
                            if u == v || v == w || u == w {
                                continue;
                            }
                            if kind == MoveKind::TriangleCancel && (v < u || w < u) {
                                continue; // one representative per rotation
                            }
                            push(kind, Site::Triple(u, v, w));
                        }
                    }
                }
            }
        }
    }
    out
}

/// Applies a move, returning the rewritten graph.
pub fn apply_move(g: &RGraph, m: &Move) -> Result<RGraph> {
    applicable(g, m).map_err(|why| Error::MoveNotApplicable(format!("{m}: {why}")))?;
    let mut out = g.clone();
    let edit = |g: &mut RGraph, u: Vertex, v: Vertex, delta: i64| -> Result<()> {
        if delta > 0 {
            g.add_arcs(u, v, delta as u32)
        } else {
            g.remove_arcs(u, v, (-delta) as u32)
        }
    };
    let sgn = match m.direction {
        Direction::Forward => -1i64,
        Direction::Inverse => 1i64,
    };
    match (m.kind, m.site) {
        (MoveKind::DoubleCancel, Site::Pair(u, v)) => {
            edit(&mut out, u, v, sgn)?;
            edit(&mut out, v, u, sgn)?;
        }
        (MoveKind::TriangleCancel, Site::Triple(u, v, w)) => {
            edit(&mut out, u, v, sgn)?;
            edit(&mut out, v, w, sgn)?;
            edit(&mut out, w, u, sgn)?;
        }
        (MoveKind::PathShortcut, Site::Triple(u, v, w)) => {
            edit(&mut out, u, v, sgn)?;
            edit(&mut out, v, w, sgn)?;
            edit(&mut out, u, w, -sgn)?;
        }
        _ => unreachable!("applicability already checked the site arity"),
    }
    Ok(out)
}

/// Repeatedly applies the first applicable forward move (double-cancels, then
/// triangle-cancels, then path-shortcuts, each in lexicographic order,
/// rescanning after every application) until none applies. The result has the
/// same imbalances and is transitive.
pub fn reduce(g: &RGraph) -> RGraph {
    reduce_with_log(g).0
}

/// [`reduce`], also returning the moves applied in order.
pub fn reduce_with_log(g: &RGraph) -> (RGraph, Vec<Move>) {
    let mut current = g.clone();
    let mut log = Vec::new();
    loop {
        let next = find_moves(&current, &ALL_KINDS, Direction::Forward)
            .into_iter()
            .next();
        match next {
            None => return (current, log),
            Some(m) => {
                current = apply_move(&current, &m).expect("move came from find_moves");
                log.push(m);
            }
        }
    }
}
