use std::time::{Duration, Instant};

use affine_crystals::{
    is_fundamental, Convention, CrystalGraph, FockSpace, Multicharge, Multipartition, Partition,
};
use rayon::prelude::*;

use crate::Outcome;

pub const MAX_RANK: usize = 6;
const SHAPES: [(usize, usize); 3] = [(2, 2), (2, 3), (3, 2)];

pub struct Entry {
    pub space: FockSpace,
    pub graph: CrystalGraph,
}

/// The crystals shared by criteria 6, 9 and 11: every fundamental charge in
/// the `Plus` convention (decreasing) and in the `Minus` one (increasing).
pub struct Crystals {
    pub entries: Vec<Entry>,
    pub build_time: Duration,
}

fn charges(l: usize, e: usize) -> Vec<Multicharge> {
    let mut out = vec![vec![]];
    for _ in 0..l {
        out = out
            .into_iter()
            .flat_map(|v: Vec<i64>| {
                (0..e as i64).map(move |x| {
                    let mut w = v.clone();
                    w.push(x);
                    w
                })
            })
            .collect();
    }
    out.into_iter()
        .map(|v| Multicharge::new(v).unwrap())
        .collect()
}

impl Crystals {
    pub fn build() -> Self {
        let start = Instant::now();
        let mut spaces = Vec::new();
        for (l, e) in SHAPES {
            for s in charges(l, e) {
                if is_fundamental(&s, e) {
                    spaces.push(FockSpace::new(s.clone(), e, Convention::Plus).unwrap());
                }
                if s.as_slice().windows(2).all(|w| w[0] <= w[1]) {
                    spaces.push(FockSpace::new(s, e, Convention::Minus).unwrap());
                }
            }
        }
        let entries = spaces
            .into_par_iter()
            .map(|space| {
                let graph = space.generate_crystal(MAX_RANK);
                Entry { space, graph }
            })
            .collect();
        Self {
            entries,
            build_time: start.elapsed(),
        }
    }
}

pub fn level_one() -> Outcome {
    let zero = Multicharge::new(vec![0]).unwrap();
    let mut checked = 0;
    let mut mismatches = Vec::new();
    for e in 2..=4 {
        let plus = FockSpace::new(zero.clone(), e, Convention::Plus).unwrap();
        let minus = FockSpace::new(zero.clone(), e, Convention::Minus).unwrap();
        for n in 0..=8 {
            for p in Partition::all_of_size(n) {
                let mp = Multipartition::new(vec![p.clone()]).unwrap();
                checked += 1;
                if plus.is_uglov(&mp).unwrap() != p.is_e_restricted(e) {
                    mismatches.push(format!("+ e={e} {p}"));
                }
                if minus.is_uglov(&mp).unwrap() != p.is_e_regular(e) {
                    mismatches.push(format!("- e={e} {p}"));
                }
            }
        }
    }
    Outcome::check(
        mismatches.is_empty(),
        format!("{checked} partitions, e in 2..=4, both conventions; mismatches {mismatches:?}"),
    )
}

pub fn flotw(crystals: &Crystals) -> Outcome {
    let results: Vec<(usize, Vec<String>)> = crystals
        .entries
        .par_iter()
        .map(|entry| {
            let sp = &entry.space;
            let mut bad = Vec::new();
            let all = Multipartition::all_up_to_rank(sp.level(), MAX_RANK);
            for mp in &all {
                if sp.is_flotw(mp).unwrap() != entry.graph.contains(mp) {
                    bad.push(format!(
                        "{:?} e={} s={} {mp}",
                        sp.convention(),
                        sp.e(),
                        sp.charge()
                    ));
                }
            }
            (all.len(), bad)
        })
        .collect();
    let checked: usize = results.iter().map(|r| r.0).sum();
    let bad: Vec<String> = results.into_iter().flat_map(|r| r.1).collect();
    Outcome::check(
        bad.is_empty(),
        format!(
            "{} crystals, {checked} multipartitions of rank <= {MAX_RANK}; {} mismatches {:?}",
            crystals.entries.len(),
            bad.len(),
            bad.iter().take(3).collect::<Vec<_>>()
        ),
    )
}
