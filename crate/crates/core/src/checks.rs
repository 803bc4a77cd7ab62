//! Decision procedures for the imbalance-sequence inequalities.
//!
//! Every check returns a [`Verdict`] carrying a concrete witness on failure:
//! the 1-based index where a bound first breaks, together with both sides of
//! the violated inequality. Sorting is the caller's responsibility; unsorted
//! input is rejected rather than silently sorted, because each inequality is
//! specific to one ordering.
//!
//! All arithmetic is exact. Intermediate terms are evaluated in 128-bit
//! integers with overflow checks, so adversarially large inputs are rejected
//! instead of wrapping.

use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{is_sorted, SortOrder};

/// Which bound a witness refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BoundKind {
    /// Prefix sums must stay at or above `r·k·(k−n)` (non-decreasing order).
    PrefixLower,
    /// Prefix sums must stay at or below `r·k·(n−k)` (non-increasing order).
    PrefixUpper,
    /// The full sequence must sum to zero.
    ZeroSum,
    /// Entry `i` must be at least `r·(i−n)`.
    PositionLower,
    /// Entry `i` must be at most `r·(i−1)`.
    PositionUpper,
    /// Prefix sums of squares must not exceed the shifted-square prefix.
    SquarePrefix,
}

impl fmt::Display for BoundKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            BoundKind::PrefixLower => "prefix-sum lower bound",
            BoundKind::PrefixUpper => "prefix-sum upper bound",
            BoundKind::ZeroSum => "zero total",
            BoundKind::PositionLower => "positional lower bound",
            BoundKind::PositionUpper => "positional upper bound",
            BoundKind::SquarePrefix => "square-sum bound",
        };
        f.write_str(name)
    }
}

/// First point of failure of a check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    /// 1-based index `k` (or position `i`) where the bound first fails.
    pub index: usize,
    pub lhs: i128,
    pub rhs: i128,
    pub bound: BoundKind,
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "k={}: {} vs {} ({})",
            self.index, self.lhs, self.rhs, self.bound
        )
    }
}

/// Outcome of a check: passing, or failing with the first witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Verdict {
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn ok(&self) -> bool {
        self.witness.is_none()
    }

    fn pass() -> Self {
        Verdict { witness: None }
    }

    fn fail(index: usize, lhs: i128, rhs: i128, bound: BoundKind) -> Self {
        Verdict {
            witness: Some(Witness {
                index,
                lhs,
                rhs,
                bound,
            }),
        }
    }
}

fn validate(values: &[i64], r: u32, order: SortOrder) -> Result<()> {
    if values.is_empty() {
        return Err(Error::InvalidParameter("sequence must be non-empty".into()));
    }
    if r == 0 {
        return Err(Error::InvalidParameter("capacity r must be positive".into()));
    }
    if !is_sorted(values, order) {
        return Err(Error::InvalidOrder { expected: order });
    }
    Ok(())
}

fn mul(a: i128, b: i128, what: &'static str) -> Result<i128> {
    a.checked_mul(b).ok_or(Error::Overflow(what))
}

fn add(a: i128, b: i128, what: &'static str) -> Result<i128> {
    a.checked_add(b).ok_or(Error::Overflow(what))
}

/// Feasibility of a non-decreasing sequence as an imbalance sequence at
/// capacity `r`: every prefix sum at least `r·k·(k−n)`, with the total zero.
pub fn check_feasible_nondecreasing(values: &[i64], r: u32) -> Result<Verdict> {
    validate(values, r, SortOrder::NonDecreasing)?;
    let n = values.len() as i128;
    let r = i128::from(r);
    let mut prefix = 0i128;
    for (k, &b) in (1..).zip(values) {
        prefix = add(prefix, i128::from(b), "prefix sum")?;
        if k < n {
            let bound = mul(mul(r, k, "prefix bound")?, k - n, "prefix bound")?;
            if prefix < bound {
                return Ok(Verdict::fail(k as usize, prefix, bound, BoundKind::PrefixLower));
            }
        } else if prefix != 0 {
            return Ok(Verdict::fail(k as usize, prefix, 0, BoundKind::ZeroSum));
        }
    }
    Ok(Verdict::pass())
}

/// Feasibility of a non-increasing sequence: every prefix sum at most
/// `r·k·(n−k)`, with the total zero. Agrees with
/// [`check_feasible_nondecreasing`] on the reversed sequence.
pub fn check_feasible_nonincreasing(values: &[i64], r: u32) -> Result<Verdict> {
    validate(values, r, SortOrder::NonIncreasing)?;
    let n = values.len() as i128;
    let r = i128::from(r);
    let mut prefix = 0i128;
    for (k, &b) in (1..).zip(values) {
        prefix = add(prefix, i128::from(b), "prefix sum")?;
        if k < n {
            let bound = mul(mul(r, k, "prefix bound")?, n - k, "prefix bound")?;
            if prefix > bound {
                return Ok(Verdict::fail(k as usize, prefix, bound, BoundKind::PrefixUpper));
            }
        } else if prefix != 0 {
            return Ok(Verdict::fail(k as usize, prefix, 0, BoundKind::ZeroSum));
        }
    }
    Ok(Verdict::pass())
}

/// Feasibility for simple digraphs (at most one arc per ordered pair):
/// the `r = 1` case of [`check_feasible_nonincreasing`].
pub fn check_simple_feasible(values: &[i64]) -> Result<Verdict> {
    check_feasible_nonincreasing(values, 1)
}

/// Per-position bounds `r·(i−n) ≤ b_i ≤ r·(i−1)` for a non-decreasing
/// sequence, `i` 1-based.
pub fn positional_bounds(values: &[i64], r: u32) -> Result<Verdict> {
    validate(values, r, SortOrder::NonDecreasing)?;
    let n = values.len() as i128;
    let r = i128::from(r);
    for (i, &b) in (1..).zip(values) {
        let b = i128::from(b);
        let lower = mul(r, i - n, "positional bound")?;
        let upper = mul(r, i - 1, "positional bound")?;
        if b < lower {
            return Ok(Verdict::fail(i as usize, b, lower, BoundKind::PositionLower));
        }
        if b > upper {
            return Ok(Verdict::fail(i as usize, b, upper, BoundKind::PositionUpper));
        }
    }
    Ok(Verdict::pass())
}

/// Square-sum inequality for a non-increasing sequence:
/// `Σ_{i≤k} b_i² ≤ Σ_{i≤k} (2rn − 2rk − b_i)²` for every `k`, with exact
/// equality at `k = n` (where the shift term vanishes).
pub fn square_inequality(values: &[i64], r: u32) -> Result<Verdict> {
    validate(values, r, SortOrder::NonIncreasing)?;
    let n = values.len() as i128;
    let r = i128::from(r);
    let mut prefix = 0i128;
    let mut square_prefix = 0i128;
    for (k, &b) in (1..).zip(values) {
        let b = i128::from(b);
        prefix = add(prefix, b, "prefix sum")?;
        square_prefix = add(square_prefix, mul(b, b, "square term")?, "square prefix")?;
        // Expand Σ (c − b_i)² as k·c² − 2c·Σb_i + Σb_i² with c = 2r(n − k).
        let c = mul(mul(2, r, "shift term")?, n - k, "shift term")?;
        let rhs = add(
            add(
                mul(k, mul(c, c, "shift square")?, "square prefix")?,
                mul(-2, mul(c, prefix, "cross term")?, "cross term")?,
                "square prefix",
            )?,
            square_prefix,
            "square prefix",
        )?;
        if square_prefix > rhs || (k == n && square_prefix != rhs) {
            return Ok(Verdict::fail(k as usize, square_prefix, rhs, BoundKind::SquarePrefix));
        }
    }
    Ok(Verdict::pass())
}
