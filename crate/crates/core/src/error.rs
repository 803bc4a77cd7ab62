use thiserror::Error;

use crate::checks::Witness;
use crate::graph::{SortOrder, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("loop arcs are not allowed (vertex {0})")]
    LoopArc(Vertex),

    #[error("pair ({u},{v}) would carry {total} arcs, exceeding capacity r={cap}")]
    CapExceeded {
        u: Vertex,
        v: Vertex,
        total: u64,
        cap: u32,
    },

    #[error("sequence is not sorted in {expected} order")]
    InvalidOrder { expected: SortOrder },

    #[error("arithmetic overflow while evaluating {0}")]
    Overflow(&'static str),

    #[error("sequence is infeasible: {0}")]
    Infeasible(Witness),

    #[error("move not applicable: {0}")]
    MoveNotApplicable(String),

    #[error("gcd t={t} exceeds r={r}")]
    GcdExceedsCapacity { t: i64, r: u32 },

    #[error("enumeration too large: {0} graphs exceeds the configured cap")]
    EnumerationTooLarge(String),

    #[error("sequence is not realized by any enumerated graph")]
    NotRealizable,

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// A guarded impossibility fired. Any occurrence is a bug.
    #[error("internal contradiction: {0}")]
    InternalContradiction(String),
}

pub type Result<T> = std::result::Result<T, Error>;
