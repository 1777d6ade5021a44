//! Partitions, multipartitions, multicharges and nodes.
//!
//! Young diagrams follow the French convention: row 1 is the bottom (longest)
//! row, rows and columns are 1-indexed, components are 0-indexed. The node
//! `(a, b, c)` sits in row `a`, column `b` of component `c` and has content
//! `b - a + s_c` for the multicharge `s`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A partition stored without trailing zeros.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from weakly decreasing parts. Trailing zeros are dropped.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::NotAPartition(parts));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of boxes.
    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    /// Row length of row `a` (1-indexed), zero beyond the last part.
    pub fn row(&self, a: usize) -> usize {
        if a == 0 {
            return usize::MAX;
        }
        self.parts.get(a - 1).copied().unwrap_or(0)
    }

    /// The addable and removable nodes of the diagram, bottom row first.
    ///
    /// Contents are computed with respect to `charge`. Nodes of equal content
    /// lie on one diagonal, so each content value occurs at most once.
    pub fn corners(&self, charge: i64) -> Vec<Corner> {
        let mut out = Vec::with_capacity(2 * self.parts.len() + 1);
        for a in 1..=self.parts.len() + 1 {
            let len = self.row(a);
            if len < self.row(a - 1) {
                out.push(Corner::new(a, len + 1, NodeKind::Addable, charge));
            }
            if len > 0 && self.row(a + 1) < len {
                out.push(Corner::new(a, len, NodeKind::Removable, charge));
            }
        }
        out
    }

    /// The corner of content `content`, if any.
    pub fn corner_with_content(&self, charge: i64, content: i64) -> Option<Corner> {
        self.corners(charge)
            .into_iter()
            .find(|c| c.content == content)
    }

    /// Adds a box at the end of row `a`. The result must still be a partition.
    pub(crate) fn with_box_added(&self, a: usize) -> Self {
        let mut parts = self.parts.clone();
        if a == parts.len() + 1 {
            parts.push(1);
        } else {
            parts[a - 1] += 1;
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Self { parts }
    }

    /// Removes the box at the end of row `a`.
    pub(crate) fn with_box_removed(&self, a: usize) -> Self {
        let mut parts = self.parts.clone();
        parts[a - 1] -= 1;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        Self { parts }
    }

    /// Transpose of the Young diagram.
    pub fn conjugate(&self) -> Self {
        let width = self.parts.first().copied().unwrap_or(0);
        let parts = (1..=width)
            .map(|b| self.parts.iter().take_while(|&&p| p >= b).count())
            .collect();
        Self { parts }
    }

    /// At most `e - 1` equal nonzero parts.
    pub fn is_e_regular(&self, e: usize) -> bool {
        self.parts.chunk_by(|x, y| x == y).all(|run| run.len() < e)
    }

    /// Consecutive parts differ by at most `e - 1` (the last part counts against 0).
    pub fn is_e_restricted(&self, e: usize) -> bool {
        (1..=self.parts.len()).all(|a| self.row(a) - self.row(a + 1) < e)
    }

    /// All partitions of `n`, in reverse lexicographic order.
    pub fn all_of_size(n: usize) -> Vec<Partition> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            for k in (1..=rest.min(max)).rev() {
                cur.push(k);
                go(rest - k, k, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Self::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.parts
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "∅");
        }
        write!(f, "(")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum NodeKind {
    Addable,
    Removable,
}

/// A node of a multipartition: row `a`, column `b`, component `c`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(usize, usize, usize)", into = "(usize, usize, usize)")]
pub struct Node {
    pub row: usize,
    pub col: usize,
    pub comp: usize,
}

impl Node {
    pub fn new(row: usize, col: usize, comp: usize) -> Self {
        Self { row, col, comp }
    }

    /// `b - a + s_c`.
    pub fn content(&self, charge: &Multicharge) -> Result<i64> {
        let s = charge.get(self.comp).ok_or(Error::ComponentOutOfRange {
            comp: self.comp,
            level: charge.level(),
        })?;
        Ok(self.col as i64 - self.row as i64 + s)
    }

    /// The content reduced into `[0, e)`.
    pub fn residue(&self, charge: &Multicharge, e: usize) -> Result<usize> {
        check_e(e)?;
        Ok(residue(self.content(charge)?, e))
    }
}

impl From<(usize, usize, usize)> for Node {
    fn from((row, col, comp): (usize, usize, usize)) -> Self {
        Self { row, col, comp }
    }
}

impl From<Node> for (usize, usize, usize) {
    fn from(n: Node) -> Self {
        (n.row, n.col, n.comp)
    }
}

/// An addable or removable node of a single partition, with its content.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Corner {
    pub row: usize,
    pub col: usize,
    pub kind: NodeKind,
    pub content: i64,
}

impl Corner {
    fn new(row: usize, col: usize, kind: NodeKind, charge: i64) -> Self {
        Self {
            row,
            col,
            kind,
            content: col as i64 - row as i64 + charge,
        }
    }

    pub fn node(&self, comp: usize) -> Node {
        Node::new(self.row, self.col, comp)
    }
}

/// Residue of an integer content, normalized into `[0, e)`.
pub fn residue(content: i64, e: usize) -> usize {
    content.rem_euclid(e as i64) as usize
}

pub(crate) fn check_e(e: usize) -> Result<()> {
    if e < 2 {
        Err(Error::InvalidE(e))
    } else {
        Ok(())
    }
}

/// An ordered tuple of partitions.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multipartition {
    components: Vec<Partition>,
}

impl Multipartition {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::EmptyLevel);
        }
        Ok(Self { components })
    }

    /// Convenience constructor from raw part lists.
    pub fn from_parts<I, P>(components: I) -> Result<Self>
    where
        I: IntoIterator<Item = P>,
        P: Into<Vec<usize>>,
    {
        let components = components
            .into_iter()
            .map(|p| Partition::new(p.into()))
            .collect::<Result<Vec<_>>>()?;
        Self::new(components)
    }

    /// The empty multipartition of level `level`.
    pub fn empty(level: usize) -> Self {
        assert!(level > 0, "level must be at least 1");
        Self {
            components: vec![Partition::empty(); level],
        }
    }

    pub fn level(&self) -> usize {
        self.components.len()
    }

    /// Total number of boxes.
    pub fn rank(&self) -> usize {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.components.iter().all(Partition::is_empty)
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, c: usize) -> &Partition {
        &self.components[c]
    }

    pub fn into_components(self) -> Vec<Partition> {
        self.components
    }

    pub(crate) fn with_component(&self, c: usize, p: Partition) -> Self {
        let mut components = self.components.clone();
        components[c] = p;
        Self { components }
    }

    pub(crate) fn with_box_added(&self, node: Node) -> Self {
        self.with_component(
            node.comp,
            self.components[node.comp].with_box_added(node.row),
        )
    }

    pub(crate) fn with_box_removed(&self, node: Node) -> Self {
        self.with_component(
            node.comp,
            self.components[node.comp].with_box_removed(node.row),
        )
    }

    /// Reverses the order of the components.
    pub fn diamond(&self) -> Self {
        Self {
            components: self.components.iter().rev().cloned().collect(),
        }
    }

    /// Conjugates every component in place.
    pub fn conjugate(&self) -> Self {
        Self {
            components: self.components.iter().map(Partition::conjugate).collect(),
        }
    }

    /// All multipartitions of the given level and rank exactly `n`.
    pub fn all_of_rank(level: usize, n: usize) -> Vec<Multipartition> {
        assert!(level > 0, "level must be at least 1");
        let by_size: Vec<Vec<Partition>> = (0..=n).map(Partition::all_of_size).collect();
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(level);
        fn go(
            level: usize,
            rest: usize,
            by_size: &[Vec<Partition>],
            cur: &mut Vec<Partition>,
            out: &mut Vec<Multipartition>,
        ) {
            if cur.len() + 1 == level {
                for p in &by_size[rest] {
                    cur.push(p.clone());
                    out.push(Multipartition {
                        components: cur.clone(),
                    });
                    cur.pop();
                }
                return;
            }
            for k in 0..=rest {
                for p in &by_size[k] {
                    cur.push(p.clone());
                    go(level, rest - k, by_size, cur, out);
                    cur.pop();
                }
            }
        }
        go(level, n, &by_size, &mut cur, &mut out);
        out
    }

    /// All multipartitions of the given level and rank at most `n`.
    pub fn all_up_to_rank(level: usize, n: usize) -> Vec<Multipartition> {
        (0..=n).flat_map(|m| Self::all_of_rank(level, m)).collect()
    }
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, p) in self.components.iter().enumerate() {
            if k > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// A multicharge `(s_0, ..., s_{l-1})`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Multicharge(Vec<i64>);

impl Multicharge {
    pub fn new(charges: Vec<i64>) -> Result<Self> {
        if charges.is_empty() {
            return Err(Error::EmptyLevel);
        }
        Ok(Self(charges))
    }

    pub fn level(&self) -> usize {
        self.0.len()
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.0
    }

    pub fn get(&self, k: usize) -> Option<i64> {
        self.0.get(k).copied()
    }

    /// `max |s_k|`.
    pub fn norm(&self) -> i64 {
        self.0.iter().map(|s| s.abs()).max().unwrap_or(0)
    }

    /// `(e - s_0, ..., e - s_{l-1})`.
    pub fn star(&self, e: usize) -> Self {
        Self(self.0.iter().map(|s| e as i64 - s).collect())
    }

    pub fn diamond(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    /// Residues of the charges, sorted; equal for two multicharges exactly when
    /// they lie in the same orbit of the extended affine symmetric group.
    pub fn sorted_residues(&self, e: usize) -> Vec<usize> {
        let mut r: Vec<usize> = self.0.iter().map(|&s| residue(s, e)).collect();
        r.sort_unstable();
        r
    }

    pub(crate) fn check_level(&self, mp: &Multipartition) -> Result<()> {
        if self.level() != mp.level() {
            return Err(Error::LevelMismatch {
                expected: self.level(),
                found: mp.level(),
            });
        }
        Ok(())
    }
}

impl std::ops::Index<usize> for Multicharge {
    type Output = i64;

    fn index(&self, k: usize) -> &i64 {
        &self.0[k]
    }
}

impl fmt::Display for Multicharge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, s) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// Conjugates every component and sends `s` to `s* = (e - s_k)_k`.
pub fn conjugate_mp(
    mp: &Multipartition,
    charge: &Multicharge,
    e: usize,
) -> (Multipartition, Multicharge) {
    (mp.conjugate(), charge.star(e))
}
