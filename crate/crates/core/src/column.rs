//! Finite columns and charged infinite columns.
//!
//! An infinite column of charge `s` is a strictly decreasing sequence
//! `x_1 > x_2 > ...` with `x_k = s - k + 1` for `k` large. It is stored as
//! `(s, λ)` with `x_k = λ_k + s - k + 1`.
//!
//! Truncating at depth `a` keeps the letters `>= a`. When
//! `a <= s - len(λ)` every integer below `a` is present, the truncated column
//! has height `s - a + 1`, and [`InfiniteColumn::extend`] recovers the column:
//! a finite column of height `h` whose tail continues with `a - 1, a - 2, ...`
//! has `x_{h+1} = a - 1 = s - h`, so `s = a - 1 + h`. For example
//! `(3, 1, -2, -3)` at `a = -3` has height 4, charge 0 and shape `(3, 2)`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::Partition;

/// A strictly decreasing list of integer letters, top to bottom.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct FiniteColumn {
    letters: Vec<i64>,
}

impl FiniteColumn {
    pub fn new(letters: Vec<i64>) -> Result<Self> {
        if letters.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::NotStrictlyDecreasing(letters));
        }
        Ok(Self { letters })
    }

    /// Builds a column from letters in any order; duplicates are an error.
    pub fn from_unordered(mut letters: Vec<i64>) -> Result<Self> {
        letters.sort_unstable_by(|a, b| b.cmp(a));
        Self::new(letters)
    }

    pub(crate) fn from_sorted_unchecked(letters: Vec<i64>) -> Self {
        debug_assert!(letters.windows(2).all(|w| w[0] > w[1]));
        Self { letters }
    }

    pub fn letters(&self) -> &[i64] {
        &self.letters
    }

    pub fn height(&self) -> usize {
        self.letters.len()
    }

    pub fn contains(&self, x: i64) -> bool {
        self.letters.binary_search_by(|y| x.cmp(y)).is_ok()
    }

    /// `C - {from} + {to}`; the caller guarantees `from ∈ C` and `to ∉ C`.
    pub(crate) fn replace(&self, from: i64, to: i64) -> Self {
        let mut letters: Vec<i64> = self
            .letters
            .iter()
            .map(|&x| if x == from { to } else { x })
            .collect();
        letters.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted_unchecked(letters)
    }
}

impl TryFrom<Vec<i64>> for FiniteColumn {
    type Error = Error;

    fn try_from(letters: Vec<i64>) -> Result<Self> {
        Self::new(letters)
    }
}

impl From<FiniteColumn> for Vec<i64> {
    fn from(c: FiniteColumn) -> Self {
        c.letters
    }
}

/// An infinite column of `B_∞(ω_s)`, encoded by its charge and partition.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InfiniteColumn {
    pub charge: i64,
    pub shape: Partition,
}

impl InfiniteColumn {
    pub fn new(charge: i64, shape: Partition) -> Self {
        Self { charge, shape }
    }

    /// The highest weight column `s, s-1, s-2, ...`.
    pub fn vacuum(charge: i64) -> Self {
        Self {
            charge,
            shape: Partition::empty(),
        }
    }

    /// `x_k = λ_k + s - k + 1` for 1-indexed `k`.
    pub fn letter(&self, k: usize) -> i64 {
        self.shape.row(k) as i64 + self.charge - k as i64 + 1
    }

    /// The top `n` letters.
    pub fn letters_of(&self, n: usize) -> FiniteColumn {
        FiniteColumn::from_sorted_unchecked((1..=n).map(|k| self.letter(k)).collect())
    }

    /// Largest depth at which the column still contains every smaller integer.
    pub fn stable_depth(&self) -> i64 {
        self.charge - self.shape.len() as i64
    }

    /// The finite column of letters `>= a` (`π_a`).
    pub fn truncate(&self, a: i64) -> FiniteColumn {
        let letters = (1..)
            .map(|k| self.letter(k))
            .take_while(|&x| x >= a)
            .collect();
        FiniteColumn::from_sorted_unchecked(letters)
    }

    /// Appends every integer `< a` below `fc` and reads off charge and shape.
    pub fn extend(fc: &FiniteColumn, a: i64) -> Result<Self> {
        if let Some(&low) = fc.letters.last() {
            if low < a {
                return Err(Error::LetterBelowDepth {
                    letter: low,
                    depth: a,
                });
            }
        }
        let height = fc.height() as i64;
        let charge = a - 1 + height;
        let parts = fc
            .letters
            .iter()
            .enumerate()
            .map(|(idx, &x)| (x - charge + idx as i64) as usize)
            .collect();
        let shape = Partition::new(parts).expect("strictly decreasing letters give a partition");
        Ok(Self { charge, shape })
    }

    /// 1-indexed row whose letter is `x`, if present.
    pub fn row_of(&self, x: i64) -> Option<usize> {
        if x <= self.stable_depth() {
            return Some((self.charge - x + 1) as usize);
        }
        (1..=self.shape.len()).find(|&k| self.letter(k) == x)
    }

    pub fn contains(&self, x: i64) -> bool {
        self.row_of(x).is_some()
    }
}

/// The default truncation depth for a pair: the smallest `a` such that both
/// columns contain every integer below `a`.
pub fn common_depth(c1: &InfiniteColumn, c2: &InfiniteColumn) -> i64 {
    c1.stable_depth().min(c2.stable_depth())
}
