//! Type `A_∞` crystal operators on columns, tensor products of columns, and
//! charged multipartitions.
//!
//! Tensor factors are read left to right and each column top to bottom. For
//! the label `i` a column contributes `+` when it contains `i` but not `i+1`,
//! and `-` when it contains `i+1` but not `i`. Under the column dictionary a
//! `+` is an addable node of content `i` and a `-` a removable one.

use serde::{Deserialize, Serialize};

use crate::column::{FiniteColumn, InfiniteColumn};
use crate::error::{Error, Result};
use crate::partition::{Multicharge, Multipartition, NodeKind, Partition};
use crate::signature::{reduce_signature, Sign};

/// `C - {i} + {i+1}` when `i ∈ C` and `i+1 ∉ C`.
pub fn finite_f(i: i64, c: &FiniteColumn) -> Option<FiniteColumn> {
    (c.contains(i) && !c.contains(i + 1)).then(|| c.replace(i, i + 1))
}

/// `C - {i+1} + {i}` when `i+1 ∈ C` and `i ∉ C`.
pub fn finite_e(i: i64, c: &FiniteColumn) -> Option<FiniteColumn> {
    (c.contains(i + 1) && !c.contains(i)).then(|| c.replace(i + 1, i))
}

fn finite_sign(i: i64, c: &FiniteColumn) -> Option<Sign> {
    match (c.contains(i), c.contains(i + 1)) {
        (true, false) => Some(Sign::Plus),
        (false, true) => Some(Sign::Minus),
        _ => None,
    }
}

fn finite_signature(i: i64, cols: &[FiniteColumn]) -> crate::signature::Reduced<usize> {
    reduce_signature(
        cols.iter()
            .enumerate()
            .filter_map(|(k, c)| finite_sign(i, c).map(|s| (s, k))),
    )
}

/// `f_i` on a tensor product of finite columns.
pub fn finite_tensor_f(i: i64, cols: &[FiniteColumn]) -> Option<Vec<FiniteColumn>> {
    let k = *finite_signature(i, cols).lowering()?;
    let mut out = cols.to_vec();
    out[k] = out[k].replace(i, i + 1);
    Some(out)
}

/// `e_i` on a tensor product of finite columns.
pub fn finite_tensor_e(i: i64, cols: &[FiniteColumn]) -> Option<Vec<FiniteColumn>> {
    let k = *finite_signature(i, cols).raising()?;
    let mut out = cols.to_vec();
    out[k] = out[k].replace(i + 1, i);
    Some(out)
}

/// A vertex `C_0 ⊗ ... ⊗ C_{l-1}` of a tensor product of infinite column crystals.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct AinfVertex {
    factors: Vec<InfiniteColumn>,
}

impl AinfVertex {
    pub fn new(factors: Vec<InfiniteColumn>) -> Self {
        Self { factors }
    }

    /// The highest weight vertex with the given factor charges.
    pub fn highest_weight(charge: &Multicharge) -> Self {
        Self {
            factors: charge
                .as_slice()
                .iter()
                .map(|&s| InfiniteColumn::vacuum(s))
                .collect(),
        }
    }

    /// Pairs the `k`-th component with the `k`-th charge.
    pub fn from_mp(mp: &Multipartition, charge: &Multicharge) -> Result<Self> {
        charge.check_level(mp)?;
        let factors = mp
            .components()
            .iter()
            .zip(charge.as_slice())
            .map(|(p, &s)| InfiniteColumn::new(s, p.clone()))
            .collect();
        Ok(Self { factors })
    }

    pub fn factors(&self) -> &[InfiniteColumn] {
        &self.factors
    }

    pub fn charge(&self) -> Multicharge {
        Multicharge::new(self.factors.iter().map(|c| c.charge).collect()).expect("nonempty vertex")
    }

    pub fn to_mp(&self) -> Multipartition {
        Multipartition::new(self.factors.iter().map(|c| c.shape.clone()).collect())
            .expect("nonempty vertex")
    }

    fn signature(&self, i: i64) -> crate::signature::Reduced<usize> {
        let word = self.factors.iter().enumerate().filter_map(|(k, c)| {
            match (c.contains(i), c.contains(i + 1)) {
                (true, false) => Some((Sign::Plus, k)),
                (false, true) => Some((Sign::Minus, k)),
                _ => None,
            }
        });
        reduce_signature(word)
    }

    pub fn tensor_f(&self, i: i64) -> Option<Self> {
        let k = *self.signature(i).lowering()?;
        let col = &self.factors[k];
        let row = col.row_of(i).expect("a plus letter is present");
        Some(self.with_factor(k, col.shape.with_box_added(row)))
    }

    pub fn tensor_e(&self, i: i64) -> Option<Self> {
        let k = *self.signature(i).raising()?;
        let col = &self.factors[k];
        let row = col.row_of(i + 1).expect("a minus letter is present");
        Some(self.with_factor(k, col.shape.with_box_removed(row)))
    }

    fn with_factor(&self, k: usize, shape: Partition) -> Self {
        let mut factors = self.factors.clone();
        factors[k].shape = shape;
        Self { factors }
    }

    /// Applies `e_i` while any applies, always picking the smallest admissible
    /// label. Returns the terminal vertex and the lowering path from it, in
    /// replay order.
    pub fn reduce(&self) -> (Self, Vec<i64>) {
        let mut cur = self.clone();
        let mut path = Vec::new();
        loop {
            let mut labels: Vec<i64> = cur
                .factors
                .iter()
                .flat_map(|c| c.shape.corners(c.charge))
                .filter(|c| c.kind == NodeKind::Removable)
                .map(|c| c.content)
                .collect();
            labels.sort_unstable();
            labels.dedup();
            match labels.iter().find_map(|&i| cur.tensor_e(i).map(|v| (i, v))) {
                Some((i, v)) => {
                    path.push(i);
                    cur = v;
                }
                None => break,
            }
        }
        path.reverse();
        (cur, path)
    }
}

fn mp_signature(
    j: i64,
    mp: &Multipartition,
    charge: &Multicharge,
) -> Result<crate::signature::Reduced<usize>> {
    charge.check_level(mp)?;
    let word = mp.components().iter().enumerate().filter_map(|(k, p)| {
        p.corner_with_content(charge[k], j).map(|c| match c.kind {
            NodeKind::Addable => (Sign::Plus, k),
            NodeKind::Removable => (Sign::Minus, k),
        })
    });
    Ok(reduce_signature(word))
}

/// `f_j` on a multipartition whose components are listed in tensor factor order,
/// using the word of addable (`A`) and removable (`R`) content-`j` nodes.
pub fn mp_f_inf(
    j: i64,
    mp: &Multipartition,
    charge: &Multicharge,
) -> Result<Option<Multipartition>> {
    let reduced = mp_signature(j, mp, charge)?;
    Ok(reduced.lowering().map(|&k| {
        let corner = mp
            .component(k)
            .corner_with_content(charge[k], j)
            .expect("corner from the word");
        mp.with_box_added(corner.node(k))
    }))
}

/// `e_j` counterpart of [`mp_f_inf`].
pub fn mp_e_inf(
    j: i64,
    mp: &Multipartition,
    charge: &Multicharge,
) -> Result<Option<Multipartition>> {
    let reduced = mp_signature(j, mp, charge)?;
    Ok(reduced.raising().map(|&k| {
        let corner = mp
            .component(k)
            .corner_with_content(charge[k], j)
            .expect("corner from the word");
        mp.with_box_removed(corner.node(k))
    }))
}

/// Replays `path` from the highest weight vertex both on infinite columns and
/// on their truncations at depth `a` (heights `s_k + 1 - a`), and reports
/// whether the truncated endpoint equals the truncation of the true endpoint.
pub fn lem_pia_check(path: &[i64], charge: &Multicharge, a: i64) -> Result<bool> {
    if let Some(&low) = charge.as_slice().iter().min() {
        if a > low + 1 {
            return Err(Error::DepthTooShallow {
                depth: a,
                reason: format!("charge {low} gives a column of negative height"),
            });
        }
    }
    if let Some((step, &j)) = path.iter().enumerate().find(|(_, &j)| j < a) {
        return Err(Error::DepthTooShallow {
            depth: a,
            reason: format!("step {step} acts on letter {j}, below the depth"),
        });
    }
    let mut full = AinfVertex::highest_weight(charge);
    let mut cut: Vec<FiniteColumn> = full.factors.iter().map(|c| c.truncate(a)).collect();
    for (step, &j) in path.iter().enumerate() {
        full = full
            .tensor_f(j)
            .ok_or(Error::PathBlocked { step, content: j })?;
        match finite_tensor_f(j, &cut) {
            Some(next) => cut = next,
            None => return Ok(false),
        }
    }
    Ok(full
        .factors
        .iter()
        .zip(&cut)
        .all(|(c, t)| &c.truncate(a) == t))
}
