//! The combinatorial R-matrix on pairs of columns.
//!
//! [`theta`] swaps two finite columns of heights `k` and `l` by greedy letter
//! matching. [`psi`] lifts it to infinite columns by truncating both at a
//! common depth, swapping, and extending back.

use crate::column::{common_depth, FiniteColumn, InfiniteColumn};
use crate::error::{Error, Result};

/// `θ_{k,l}(C1 ⊗ C2) = C2' ⊗ C1'`, where `C2'` has height `l` and `C1'` height `k`.
pub fn theta(c1: &FiniteColumn, c2: &FiniteColumn) -> Result<(FiniteColumn, FiniteColumn)> {
    // Both pools ascending.
    let mut first: Vec<i64> = c1.letters().iter().rev().copied().collect();
    let mut second: Vec<i64> = c2.letters().iter().rev().copied().collect();
    let mut matched = Vec::new();

    let (new_second, new_first) = if c1.height() >= c2.height() {
        // For each x of C2 from the bottom, take the largest y <= x left in C1,
        // or the largest remaining letter when there is none.
        for &x in &second {
            let pick = match first.partition_point(|&z| z <= x) {
                0 => first.len() - 1,
                p => p - 1,
            };
            matched.push(first.remove(pick));
        }
        first.append(&mut second);
        (matched, first)
    } else {
        // Symmetric: for each x of C1 from the bottom, take the smallest y >= x
        // left in C2, or the smallest remaining letter.
        for &x in &first {
            let p = second.partition_point(|&z| z < x);
            let pick = if p == second.len() { 0 } else { p };
            matched.push(second.remove(pick));
        }
        second.append(&mut first);
        (second, matched)
    };

    Ok((finish(new_second)?, finish(new_first)?))
}

fn finish(mut letters: Vec<i64>) -> Result<FiniteColumn> {
    letters.sort_unstable_by(|a, b| b.cmp(a));
    if let Some(w) = letters.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::DuplicateLetter(w[0]));
    }
    Ok(FiniteColumn::from_sorted_unchecked(letters))
}

/// `ψ(P1 ⊗ P2) = P2' ⊗ P1'` at the default depth, the largest one at which
/// both columns contain every smaller integer. The output charges are those of
/// `p2` and `p1`, in that order.
pub fn psi(p1: &InfiniteColumn, p2: &InfiniteColumn) -> (InfiniteColumn, InfiniteColumn) {
    psi_at_depth(p1, p2, common_depth(p1, p2)).expect("default depth is deep enough")
}

/// [`psi`] computed at an explicit depth `a`, which must not exceed the default one.
pub fn psi_at_depth(
    p1: &InfiniteColumn,
    p2: &InfiniteColumn,
    a: i64,
) -> Result<(InfiniteColumn, InfiniteColumn)> {
    let limit = common_depth(p1, p2);
    if a > limit {
        return Err(Error::DepthTooShallow {
            depth: a,
            reason: format!(
                "some integer below {a} is missing from a column; use a depth <= {limit}"
            ),
        });
    }
    let (c2, c1) = theta(&p1.truncate(a), &p2.truncate(a))?;
    Ok((
        InfiniteColumn::extend(&c2, a)?,
        InfiniteColumn::extend(&c1, a)?,
    ))
}
