//! Crystal isomorphisms between Fock space crystals whose multicharges lie in
//! one orbit of the extended affine symmetric group, all in the `Plus`
//! convention.
//!
//! The adjacent swap runs the R-matrix on two neighbouring components. The
//! plain left rotation of components realizes `s ↦ (s_1, ..., s_{l-1}, s_0 - e)`,
//! not `τ`; the isomorphism attached to `τ` is obtained by conjugating the
//! inverse rotation with a chain of swaps.

use std::collections::HashSet;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::column::InfiniteColumn;
use crate::error::{Error, Result};
use crate::fock::{Convention, FockSpace};
use crate::group::{reduce_to_fundamental, ChargeGroupElement, Generator};
use crate::partition::{Multicharge, Multipartition};
use crate::rmatrix::psi;

fn check(mp: &Multipartition, s: &Multicharge) -> Result<()> {
    s.check_level(mp)
}

fn with_charge(v: Vec<i64>) -> Multicharge {
    Multicharge::new(v).expect("nonempty level")
}

/// `(λ^(1), ..., λ^(l-1), λ^(0))` with charge `(s_1, ..., s_{l-1}, s_0 - e)`.
pub fn rotation_iso(
    mp: &Multipartition,
    s: &Multicharge,
    e: usize,
) -> Result<(Multipartition, Multicharge)> {
    check(mp, s)?;
    let mut comps = mp.components().to_vec();
    comps.rotate_left(1);
    let mut charge = s.as_slice().to_vec();
    charge.rotate_left(1);
    *charge.last_mut().expect("nonempty") -= e as i64;
    Ok((Multipartition::new(comps)?, with_charge(charge)))
}

/// `(λ^(l-1), λ^(0), ..., λ^(l-2))` with charge `(s_{l-1} + e, s_0, ..., s_{l-2})`.
pub fn rotation_iso_inv(
    mp: &Multipartition,
    s: &Multicharge,
    e: usize,
) -> Result<(Multipartition, Multicharge)> {
    check(mp, s)?;
    let mut comps = mp.components().to_vec();
    comps.rotate_right(1);
    let mut charge = s.as_slice().to_vec();
    charge.rotate_right(1);
    charge[0] += e as i64;
    Ok((Multipartition::new(comps)?, with_charge(charge)))
}

/// Swaps components `j` and `j + 1` through the R-matrix applied to
/// `(s_{j+1}, λ^(j+1)) ⊗ (s_j, λ^(j))`. The new charge swaps `s_j` and `s_{j+1}`.
pub fn swap_iso(
    mp: &Multipartition,
    s: &Multicharge,
    j: usize,
) -> Result<(Multipartition, Multicharge)> {
    check(mp, s)?;
    let l = s.level();
    if j + 1 >= l {
        return Err(Error::PositionOutOfRange {
            position: j,
            level: l,
        });
    }
    let upper = InfiniteColumn::new(s[j + 1], mp.component(j + 1).clone());
    let lower = InfiniteColumn::new(s[j], mp.component(j).clone());
    let (out_low, out_high) = psi(&upper, &lower);
    let out = mp
        .with_component(j, out_high.shape)
        .with_component(j + 1, out_low.shape);
    let mut charge = s.as_slice().to_vec();
    charge.swap(j, j + 1);
    Ok((out, with_charge(charge)))
}

fn swap_chain(
    mut mp: Multipartition,
    mut s: Multicharge,
    positions: impl Iterator<Item = usize>,
) -> Result<(Multipartition, Multicharge)> {
    for j in positions {
        (mp, s) = swap_iso(&mp, &s, j)?;
    }
    Ok((mp, s))
}

/// The isomorphism attached to `τ`, landing at `τ(s) = (s_1, ..., s_{l-1}, s_0 + e)`.
pub fn cycle_iso(
    mp: &Multipartition,
    s: &Multicharge,
    e: usize,
) -> Result<(Multipartition, Multicharge)> {
    check(mp, s)?;
    let l = s.level();
    let (mp, s) = swap_chain(mp.clone(), s.clone(), 0..l - 1)?;
    let (mp, s) = rotation_iso_inv(&mp, &s, e)?;
    swap_chain(mp, s, 0..l - 1)
}

/// Inverse of [`cycle_iso`], landing at `τ⁻¹(s)`.
pub fn cycle_iso_inv(
    mp: &Multipartition,
    s: &Multicharge,
    e: usize,
) -> Result<(Multipartition, Multicharge)> {
    check(mp, s)?;
    let l = s.level();
    let (mp, s) = swap_chain(mp.clone(), s.clone(), (0..l - 1).rev())?;
    let (mp, s) = rotation_iso(&mp, &s, e)?;
    swap_chain(mp, s, (0..l - 1).rev())
}

/// Pushes `(mp, s)` through the word of `g`, one generator at a time.
pub fn gamma(
    mp: &Multipartition,
    s: &Multicharge,
    e: usize,
    g: &ChargeGroupElement,
) -> Result<(Multipartition, Multicharge)> {
    check(mp, s)?;
    if g.level() != s.level() {
        return Err(Error::LevelMismatch {
            expected: s.level(),
            found: g.level(),
        });
    }
    let mut cur = (mp.clone(), s.clone());
    for &gen in g.word() {
        cur = match gen {
            Generator::Tau => cycle_iso(&cur.0, &cur.1, e)?,
            Generator::TauInv => cycle_iso_inv(&cur.0, &cur.1, e)?,
            Generator::Sigma(i) => swap_iso(&cur.0, &cur.1, i - 1)?,
        };
    }
    Ok(cur)
}

/// The isomorphism from the crystal at `s` to the one at `target`, routed
/// through the fundamental representative of their common orbit.
pub fn gamma_to(
    mp: &Multipartition,
    s: &Multicharge,
    target: &Multicharge,
    e: usize,
) -> Result<Multipartition> {
    let (base, up) = reduce_to_fundamental(s, e)?;
    let (other, down) = reduce_to_fundamental(target, e)?;
    if base != other {
        return Err(not_in_orbit(s, target, e));
    }
    let route = down.invert().compose(&up).simplified();
    Ok(gamma(mp, s, e, &route)?.0)
}

fn not_in_orbit(from: &Multicharge, to: &Multicharge, e: usize) -> Error {
    Error::NotInOrbit {
        from: from.as_slice().to_vec(),
        to: to.as_slice().to_vec(),
        e,
    }
}

/// Independent reference for [`gamma`]: lowers `mp` to the empty
/// multipartition at `s` and replays the same residues at `target`.
pub fn oracle_gamma(
    mp: &Multipartition,
    s: &Multicharge,
    target: &Multicharge,
    e: usize,
) -> Result<Multipartition> {
    check(mp, s)?;
    if s.level() != target.level() || s.sorted_residues(e) != target.sorted_residues(e) {
        return Err(not_in_orbit(s, target, e));
    }
    let source = FockSpace::new(s.clone(), e, Convention::Plus)?;
    let (hw, path) = source.highest_weight_reduce(mp)?;
    if !hw.is_empty() {
        return Err(Error::NotUglov);
    }
    let dest = FockSpace::new(target.clone(), e, Convention::Plus)?;
    let mut cur = Multipartition::empty(target.level());
    for (step, st) in path.iter().enumerate() {
        cur = dest
            .f(&cur, st.residue)?
            .ok_or(Error::PathBlocked {
                step,
                content: st.content,
            })?
            .0;
    }
    Ok(cur)
}

/// Moves `(mp, s)` to the fundamental representative `s̃ = w(s)`.
pub fn to_flotw(
    mp: &Multipartition,
    s: &Multicharge,
    e: usize,
) -> Result<(Multipartition, Multicharge, ChargeGroupElement)> {
    let (target, w) = reduce_to_fundamental(s, e)?;
    let (image, charge) = gamma(mp, s, e, &w)?;
    debug_assert_eq!(charge, target);
    Ok((image, target, w))
}

/// Inverse of [`to_flotw`]: carries a multipartition at the fundamental
/// charge `fundamental` back to the charge `target`.
pub fn uglov_from_flotw(
    flotw: &Multipartition,
    fundamental: &Multicharge,
    target: &Multicharge,
    e: usize,
) -> Result<Multipartition> {
    let (reduced, w) = reduce_to_fundamental(target, e)?;
    if &reduced != fundamental {
        return Err(not_in_orbit(fundamental, target, e));
    }
    Ok(gamma(flotw, fundamental, e, &w.invert())?.0)
}

/// The images of one multipartition in the crystals attached to the orbit
/// of its multicharge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IsoClass {
    pub base: (Multipartition, Multicharge),
    /// Distinct images, each with the first charge at which it appeared.
    pub members: Vec<(Multicharge, Multipartition)>,
    /// `p_j` minimal with `s̃_j + p_j e - s̃_{j+1} > n - 1` at the fundamental charge.
    pub exponents: Vec<usize>,
    /// `l! * prod(p_j + 1)`.
    pub bound: usize,
    /// Number of group elements pushed through [`gamma`].
    pub enumerated: usize,
}

fn min_exponent(gap: i64, e: usize, n: usize) -> usize {
    // Smallest p >= 0 with gap + p e >= n.
    let need = n as i64 - gap;
    if need <= 0 {
        0
    } else {
        need.div_euclid(e as i64) as usize + usize::from(need % e as i64 != 0)
    }
}

/// Enumerates every image of `mp` in the crystals of its orbit.
///
/// Working from the fundamental pair `(I(λ), s̃)`, the charges visited are
/// `π' z(a) π (s̃)`: a permutation `π`, then prefix shifts
/// `z(a) = z_1^{a_0} ... z_{l-1}^{a_{l-2}}` with `a_j` running up to the first
/// value making gap `j` of `π(s̃)` exceed `n - 1`, then any permutation `π'`.
/// Every charge of the orbit is, up to a global shift by `e`, of the form
/// `π' z(a) π (s̃)` with `a_j >= 0`, and once gap `j` exceeds `n - 1` a further
/// shift of the prefix ending at `j` leaves every multipartition of rank at
/// most `n` unchanged. The enumeration is therefore complete.
pub fn iso_class(mp: &Multipartition, s: &Multicharge, e: usize) -> Result<IsoClass> {
    iso_class_with_extra(mp, s, e, 0)
}

/// [`iso_class`] with every shift exponent range enlarged by `extra`.
pub fn iso_class_with_extra(
    mp: &Multipartition,
    s: &Multicharge,
    e: usize,
    extra: usize,
) -> Result<IsoClass> {
    check(mp, s)?;
    if !FockSpace::new(s.clone(), e, Convention::Plus)?.is_uglov(mp)? {
        return Err(Error::NotUglov);
    }
    let (flotw, fund, _) = to_flotw(mp, s, e)?;
    let l = s.level();
    let n = mp.rank();
    let exponents: Vec<usize> = (0..l.saturating_sub(1))
        .map(|j| min_exponent(fund[j] - fund[j + 1], e, n))
        .collect();
    let bound = (1..=l).product::<usize>() * exponents.iter().map(|p| p + 1).product::<usize>();

    let perms: Vec<ChargeGroupElement> = permutation_words(l)
        .iter()
        .map(|w| ChargeGroupElement::from_word(l, w))
        .collect::<Result<_>>()?;
    let zs: Vec<ChargeGroupElement> = (1..l)
        .map(|j| ChargeGroupElement::z(l, j))
        .collect::<Result<_>>()?;
    let mut elements = Vec::new();
    for first in &perms {
        let start = first.act(&fund, e)?;
        let ranges: Vec<usize> = (0..l - 1)
            .map(|j| min_exponent(start[j] - start[j + 1], e, n) + extra)
            .collect();
        for a in exponent_grid(&ranges) {
            let mut g = first.clone();
            for (z, &k) in zs.iter().zip(&a) {
                g = z.pow(k as i64).compose(&g);
            }
            for last in &perms {
                elements.push(last.compose(&g).simplified());
            }
        }
    }
    let images: Vec<(Multicharge, Multipartition)> = elements
        .par_iter()
        .map(|g| gamma(&flotw, &fund, e, g).map(|(m, c)| (c, m)))
        .collect::<Result<_>>()?;
    let mut seen = HashSet::new();
    let members = images
        .into_iter()
        .filter(|(_, m)| seen.insert(m.clone()))
        .collect();
    Ok(IsoClass {
        base: (mp.clone(), s.clone()),
        members,
        exponents,
        bound,
        enumerated: elements.len(),
    })
}

/// All vectors `a` with `0 <= a_j <= ranges[j]`, lexicographically.
fn exponent_grid(ranges: &[usize]) -> Vec<Vec<usize>> {
    ranges.iter().fold(vec![vec![]], |acc, &p| {
        acc.into_iter()
            .flat_map(|v| {
                (0..=p).map(move |a| {
                    let mut w = v.clone();
                    w.push(a);
                    w
                })
            })
            .collect()
    })
}

/// One word in the `σ_i` for each permutation of `0..l`, in lexicographic
/// order of the permutations.
fn permutation_words(l: usize) -> Vec<Vec<Generator>> {
    let mut perms: Vec<Vec<usize>> = vec![(0..l).collect()];
    let mut cur: Vec<usize> = (0..l).collect();
    // Lexicographic successor.
    while let Some(i) = (1..l).rev().find(|&i| cur[i - 1] < cur[i]) {
        let j = (i..l)
            .rev()
            .find(|&j| cur[j] > cur[i - 1])
            .expect("successor exists");
        cur.swap(i - 1, j);
        cur[i..].reverse();
        perms.push(cur.clone());
    }
    perms
        .into_iter()
        .map(|target| {
            // Bubble sort the identity arrangement into `target`, recording swaps.
            let mut arr: Vec<usize> = (0..l).collect();
            let pos = |v: usize| target.iter().position(|&t| t == v).expect("permutation");
            let mut word = Vec::new();
            for pass in 0..l {
                for p in 0..l.saturating_sub(1 + pass) {
                    if pos(arr[p]) > pos(arr[p + 1]) {
                        arr.swap(p, p + 1);
                        word.push(Generator::Sigma(p + 1));
                    }
                }
            }
            word
        })
        .collect()
}
