//! Crystals of level `l` Fock spaces in the two reading conventions, graph
//! generation, membership tests and path replay.

use std::collections::{BTreeSet, HashMap};
use std::fmt::Write as _;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ainf::mp_f_inf;
use crate::error::{Error, Result};
use crate::partition::{check_e, residue, Multicharge, Multipartition, Node, NodeKind};
use crate::signature::{reduce_signature, Sign};

/// Which total order on nodes of equal residue drives the signature.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Convention {
    /// Nodes read by decreasing `(content, component)`.
    Plus,
    /// Nodes read by increasing `(content, -component)`.
    Minus,
}

/// One lowering step: the residue used and the content of the node added.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Step {
    pub residue: usize,
    pub content: i64,
}

/// Order in which [`FockSpace::highest_weight_reduce_by`] tries residues.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidueOrder {
    SmallestFirst,
    LargestFirst,
}

/// The crystal `B_e^s` of the Fock space with multicharge `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FockSpace {
    charge: Multicharge,
    e: usize,
    conv: Convention,
}

#[derive(Debug, Clone, Copy)]
struct WordNode {
    node: Node,
    content: i64,
    kind: NodeKind,
}

impl FockSpace {
    pub fn new(charge: Multicharge, e: usize, conv: Convention) -> Result<Self> {
        check_e(e)?;
        Ok(Self { charge, e, conv })
    }

    pub fn charge(&self) -> &Multicharge {
        &self.charge
    }

    pub fn e(&self) -> usize {
        self.e
    }

    pub fn convention(&self) -> Convention {
        self.conv
    }

    pub fn level(&self) -> usize {
        self.charge.level()
    }

    fn check(&self, mp: &Multipartition, i: usize) -> Result<()> {
        self.charge.check_level(mp)?;
        if i >= self.e {
            return Err(Error::ResidueOutOfRange {
                residue: i,
                e: self.e,
            });
        }
        Ok(())
    }

    /// The `i`-nodes of `mp` in reading order.
    fn word(&self, mp: &Multipartition, i: usize) -> Vec<WordNode> {
        let mut word: Vec<WordNode> = mp
            .components()
            .iter()
            .enumerate()
            .flat_map(|(c, p)| {
                p.corners(self.charge[c])
                    .into_iter()
                    .filter(|corner| residue(corner.content, self.e) == i)
                    .map(move |corner| WordNode {
                        node: corner.node(c),
                        content: corner.content,
                        kind: corner.kind,
                    })
            })
            .collect();
        match self.conv {
            Convention::Plus => {
                word.sort_unstable_by_key(|w| std::cmp::Reverse((w.content, w.node.comp)))
            }
            Convention::Minus => {
                word.sort_unstable_by_key(|w| (w.content, std::cmp::Reverse(w.node.comp)))
            }
        }
        word
    }

    fn good(&self, mp: &Multipartition, i: usize, kind: NodeKind) -> Option<WordNode> {
        let reduced = reduce_signature(self.word(mp, i).into_iter().map(|w| {
            let sign = match w.kind {
                NodeKind::Addable => Sign::Plus,
                NodeKind::Removable => Sign::Minus,
            };
            (sign, w)
        }));
        match kind {
            NodeKind::Addable => reduced.lowering().copied(),
            NodeKind::Removable => reduced.raising().copied(),
        }
    }

    /// The good addable or removable `i`-node, if any.
    pub fn good_node(&self, mp: &Multipartition, i: usize, kind: NodeKind) -> Result<Option<Node>> {
        self.check(mp, i)?;
        Ok(self.good(mp, i, kind).map(|w| w.node))
    }

    /// `F_i`: adds the good addable `i`-node and reports its content.
    pub fn f(&self, mp: &Multipartition, i: usize) -> Result<Option<(Multipartition, i64)>> {
        self.check(mp, i)?;
        Ok(self.f_unchecked(mp, i))
    }

    /// `E_i`: removes the good removable `i`-node and reports its content.
    pub fn e_op(&self, mp: &Multipartition, i: usize) -> Result<Option<(Multipartition, i64)>> {
        self.check(mp, i)?;
        Ok(self.e_unchecked(mp, i))
    }

    fn f_unchecked(&self, mp: &Multipartition, i: usize) -> Option<(Multipartition, i64)> {
        self.good(mp, i, NodeKind::Addable)
            .map(|w| (mp.with_box_added(w.node), w.content))
    }

    fn e_unchecked(&self, mp: &Multipartition, i: usize) -> Option<(Multipartition, i64)> {
        self.good(mp, i, NodeKind::Removable)
            .map(|w| (mp.with_box_removed(w.node), w.content))
    }

    /// Applies `E_i` until none applies, trying the smallest residue first.
    /// Returns the terminal vertex and the path that lowers it back to `mp`.
    pub fn highest_weight_reduce(
        &self,
        mp: &Multipartition,
    ) -> Result<(Multipartition, Vec<Step>)> {
        self.highest_weight_reduce_by(mp, ResidueOrder::SmallestFirst)
    }

    pub fn highest_weight_reduce_by(
        &self,
        mp: &Multipartition,
        order: ResidueOrder,
    ) -> Result<(Multipartition, Vec<Step>)> {
        self.charge.check_level(mp)?;
        let residues: Vec<usize> = match order {
            ResidueOrder::SmallestFirst => (0..self.e).collect(),
            ResidueOrder::LargestFirst => (0..self.e).rev().collect(),
        };
        let mut cur = mp.clone();
        let mut path = Vec::with_capacity(mp.rank());
        'outer: loop {
            for &i in &residues {
                if let Some((next, content)) = self.e_unchecked(&cur, i) {
                    path.push(Step {
                        residue: i,
                        content,
                    });
                    cur = next;
                    continue 'outer;
                }
            }
            break;
        }
        path.reverse();
        Ok((cur, path))
    }

    /// Whether `mp` lies in the component of the empty multipartition.
    pub fn is_uglov(&self, mp: &Multipartition) -> Result<bool> {
        Ok(self.highest_weight_reduce(mp)?.0.is_empty())
    }

    /// The explicit characterization of the component of the empty
    /// multipartition, valid when the charges lie in the fundamental range
    /// of the convention: decreasing in `[0, e)` for `Plus`, increasing for
    /// `Minus`. `Plus` is evaluated through conjugation.
    pub fn is_flotw(&self, mp: &Multipartition) -> Result<bool> {
        self.charge.check_level(mp)?;
        let s = self.charge.as_slice();
        let top = self.e as i64 - 1;
        let in_range = |x: i64| (0..=top).contains(&x);
        match self.conv {
            Convention::Minus => {
                if !s.iter().all(|&x| in_range(x)) || s.windows(2).any(|w| w[0] > w[1]) {
                    return Err(Error::NotFlotwRange(format!(
                        "need 0 <= s_0 <= ... <= s_(l-1) <= {top}, got {}",
                        self.charge
                    )));
                }
                Ok(flotw_minus(mp, s, self.e))
            }
            Convention::Plus => {
                if !s.iter().all(|&x| in_range(x)) || s.windows(2).any(|w| w[0] < w[1]) {
                    return Err(Error::NotFlotwRange(format!(
                        "need 0 <= s_(l-1) <= ... <= s_0 <= {top}, got {}",
                        self.charge
                    )));
                }
                let star = self.charge.star(self.e);
                Ok(flotw_minus(&mp.conjugate(), star.as_slice(), self.e))
            }
        }
    }

    /// Breadth-first generation of the component of the empty multipartition
    /// up to rank `max_rank`. Each layer is expanded in parallel and merged in
    /// sorted order, so the result does not depend on scheduling.
    pub fn generate_crystal(&self, max_rank: usize) -> CrystalGraph {
        let mut layers = vec![vec![Multipartition::empty(self.level())]];
        let mut edges = Vec::new();
        let mut offset = 0;
        for _ in 0..max_rank {
            let layer = layers.last().expect("at least one layer");
            let arrows: Vec<Vec<(usize, i64, Multipartition)>> = layer
                .par_iter()
                .map(|v| {
                    (0..self.e)
                        .filter_map(|i| self.f_unchecked(v, i).map(|(w, j)| (i, j, w)))
                        .collect()
                })
                .collect();
            let next: Vec<Multipartition> = arrows
                .iter()
                .flatten()
                .map(|(_, _, w)| w.clone())
                .collect::<BTreeSet<_>>()
                .into_iter()
                .collect();
            let next_offset = offset + layer.len();
            let index: HashMap<&Multipartition, usize> = next
                .iter()
                .enumerate()
                .map(|(k, w)| (w, next_offset + k))
                .collect();
            for (k, out) in arrows.iter().enumerate() {
                for (i, j, w) in out {
                    edges.push(Edge {
                        source: offset + k,
                        residue: *i,
                        content: *j,
                        target: index[w],
                    });
                }
            }
            offset = next_offset;
            if next.is_empty() {
                break;
            }
            layers.push(next);
        }
        CrystalGraph { layers, edges }
    }

    /// Replays a lowering path given by contents from the empty
    /// multipartition. Fails softly when a step's good node has the wrong content.
    pub fn replay_contents(&self, path: &[i64]) -> Option<Multipartition> {
        let mut cur = Multipartition::empty(self.level());
        for &j in path {
            let (next, content) = self.f_unchecked(&cur, residue(j, self.e))?;
            if content != j {
                return None;
            }
            cur = next;
        }
        Some(cur)
    }

    /// Replays a path by residues only.
    pub fn replay_residues(
        &self,
        residues: impl IntoIterator<Item = usize>,
    ) -> Option<Multipartition> {
        let mut cur = Multipartition::empty(self.level());
        for i in residues {
            cur = self.f_unchecked(&cur, i % self.e)?.0;
        }
        Some(cur)
    }
}

/// Conditions of the explicit characterization for increasing charges.
/// Both conditions only see charge differences and residues, so any uniform
/// shift of the charges gives the same answer.
fn flotw_minus(mp: &Multipartition, s: &[i64], e: usize) -> bool {
    let l = s.len();
    let comps = mp.components();
    // λ^(k)_i >= λ^(k+1)_(i+d) for all i >= 1, with d = s_(k+1) - s_k.
    let cylindric = |upper: usize, lower: usize, d: i64| {
        let d = d as usize;
        let q = &comps[lower];
        (1..=q.len()).all(|i| i <= d || comps[upper].row(i - d) >= q.row(i))
    };
    for k in 0..l.saturating_sub(1) {
        if !cylindric(k, k + 1, s[k + 1] - s[k]) {
            return false;
        }
    }
    if !cylindric(l - 1, 0, e as i64 + s[0] - s[l - 1]) {
        return false;
    }
    let mut by_length: HashMap<usize, BTreeSet<usize>> = HashMap::new();
    for (c, p) in comps.iter().enumerate() {
        for (a, &r) in p.parts().iter().enumerate() {
            let content = r as i64 - (a as i64 + 1) + s[c];
            by_length.entry(r).or_default().insert(residue(content, e));
        }
    }
    by_length.values().all(|set| set.len() < e)
}

/// An arrow `source --i (j)--> target` between vertex indices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(
    into = "(usize, usize, i64, usize)",
    from = "(usize, usize, i64, usize)"
)]
pub struct Edge {
    pub source: usize,
    pub residue: usize,
    pub content: i64,
    pub target: usize,
}

impl From<Edge> for (usize, usize, i64, usize) {
    fn from(e: Edge) -> Self {
        (e.source, e.residue, e.content, e.target)
    }
}

impl From<(usize, usize, i64, usize)> for Edge {
    fn from((source, residue, content, target): (usize, usize, i64, usize)) -> Self {
        Self {
            source,
            residue,
            content,
            target,
        }
    }
}

/// Vertices grouped by rank, each layer sorted, indexed consecutively.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CrystalGraph {
    layers: Vec<Vec<Multipartition>>,
    edges: Vec<Edge>,
}

#[derive(Serialize, Deserialize)]
struct GraphJson {
    vertices: Vec<Multipartition>,
    edges: Vec<Edge>,
}

impl CrystalGraph {
    pub fn layers(&self) -> &[Vec<Multipartition>] {
        &self.layers
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn vertices(&self) -> impl Iterator<Item = &Multipartition> {
        self.layers.iter().flatten()
    }

    pub fn vertex_count(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    pub fn vertex(&self, index: usize) -> Option<&Multipartition> {
        self.vertices().nth(index)
    }

    pub fn contains(&self, mp: &Multipartition) -> bool {
        self.layers
            .get(mp.rank())
            .is_some_and(|layer| layer.binary_search(mp).is_ok())
    }

    pub fn to_json(&self) -> String {
        let doc = GraphJson {
            vertices: self.vertices().cloned().collect(),
            edges: self.edges.clone(),
        };
        serde_json::to_string(&doc).expect("graph serializes")
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::from("digraph crystal {\n");
        for (k, v) in self.vertices().enumerate() {
            let label = serde_json::to_string(v).expect("multipartition serializes");
            let _ = writeln!(out, "  v{k} [label=\"{label}\"];");
        }
        for e in &self.edges {
            let _ = writeln!(
                out,
                "  v{} -> v{} [label=\"{} ({})\"];",
                e.source, e.target, e.residue, e.content
            );
        }
        out.push_str("}\n");
        out
    }
}

/// Where [`replay_path`] lowers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReplayTarget {
    /// The Fock space crystal with this `e`, selecting residues `j mod e`.
    Affine(usize),
    /// The `A_∞` crystal on the reversed components with reversed charges.
    Infinite,
}

/// Lowers the empty multipartition along `path` (a list of contents). The
/// infinite target returns the multipartition in tensor factor order, that
/// is, with components reversed.
pub fn replay_path(
    path: &[i64],
    charge: &Multicharge,
    target: ReplayTarget,
    conv: Convention,
) -> Result<Option<Multipartition>> {
    match target {
        ReplayTarget::Affine(e) => {
            Ok(FockSpace::new(charge.clone(), e, conv)?.replay_contents(path))
        }
        ReplayTarget::Infinite => {
            let rev = charge.diamond();
            let mut cur = Multipartition::empty(charge.level());
            for &j in path {
                match mp_f_inf(j, &cur, &rev)? {
                    Some(next) => cur = next,
                    None => return Ok(None),
                }
            }
            Ok(Some(cur))
        }
    }
}

/// Membership in the Kleshchev crystal at rank at most `n`, computed as the
/// `Plus` component of the empty multipartition for a lift of the residues
/// whose consecutive gaps exceed `n - 1`.
pub fn kleshchev_rank_bounded(
    mp: &Multipartition,
    residues: &[usize],
    e: usize,
    n: usize,
) -> Result<bool> {
    kleshchev_with_lift(mp, &kleshchev_lift(residues, e, n)?, e, n)
}

/// `s_k = r_k + (l - 1 - k) e m` with `m = ceil((n + e - 1) / e)`; consecutive gaps are at least `n`.
pub fn kleshchev_lift(residues: &[usize], e: usize, n: usize) -> Result<Multicharge> {
    check_e(e)?;
    let l = residues.len();
    let m = (n + e - 1).div_ceil(e);
    let s = residues
        .iter()
        .enumerate()
        .map(|(k, &r)| (r % e) as i64 + ((l - 1 - k) * e * m) as i64)
        .collect();
    Multicharge::new(s)
}

/// [`kleshchev_rank_bounded`] with an explicit lift.
pub fn kleshchev_with_lift(
    mp: &Multipartition,
    lift: &Multicharge,
    e: usize,
    n: usize,
) -> Result<bool> {
    if mp.rank() > n {
        return Err(Error::RankExceedsBound {
            rank: mp.rank(),
            bound: n,
        });
    }
    if lift.as_slice().windows(2).any(|w| w[0] - w[1] < n as i64) {
        return Err(Error::LiftTooTight {
            lift: lift.as_slice().to_vec(),
            n,
        });
    }
    FockSpace::new(lift.clone(), e, Convention::Plus)?.is_uglov(mp)
}
