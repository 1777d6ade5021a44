//! The extended affine symmetric group acting on multicharges.
//!
//! An element is stored as `(src, shift)` with
//! `g(s)_i = s_{src[i]} + e * shift[i]`, together with a generator word in
//! application order (first generator applied first).
//!
//! `σ_i` (`1 <= i < l`) swaps positions `i-1` and `i`,
//! `τ(s) = (s_1, ..., s_{l-1}, s_0 + e)` and `τ⁻¹` undoes it.
//! `ξ = σ_{l-1} ... σ_1` rotates left, `z_i = ξ^{l-i} τ^i` adds `e` to
//! positions `0..i` and `y_i = z_{i-1}⁻¹ z_i` adds `e` to position `i-1`.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{check_e, residue, Multicharge};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Generator {
    Sigma(usize),
    Tau,
    TauInv,
}

impl Generator {
    pub fn inverse(self) -> Self {
        match self {
            Generator::Sigma(i) => Generator::Sigma(i),
            Generator::Tau => Generator::TauInv,
            Generator::TauInv => Generator::Tau,
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Sigma(i) => write!(f, "s{i}"),
            Generator::Tau => write!(f, "t"),
            Generator::TauInv => write!(f, "t^-1"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ChargeGroupElement {
    src: Vec<usize>,
    shift: Vec<i64>,
    word: Vec<Generator>,
}

impl ChargeGroupElement {
    pub fn identity(level: usize) -> Self {
        Self {
            src: (0..level).collect(),
            shift: vec![0; level],
            word: Vec::new(),
        }
    }

    pub fn generator(level: usize, g: Generator) -> Result<Self> {
        if level == 0 {
            return Err(Error::EmptyLevel);
        }
        let mut out = Self::identity(level);
        match g {
            Generator::Sigma(i) => {
                if i == 0 || i >= level {
                    return Err(Error::GeneratorOutOfRange { index: i, level });
                }
                out.src.swap(i - 1, i);
            }
            Generator::Tau => {
                out.src = (0..level).map(|k| (k + 1) % level).collect();
                out.shift[level - 1] = 1;
            }
            Generator::TauInv => {
                out.src = (0..level).map(|k| (k + level - 1) % level).collect();
                out.shift[0] = -1;
            }
        }
        out.word.push(g);
        Ok(out)
    }

    /// The product of a word given in application order.
    pub fn from_word(level: usize, word: &[Generator]) -> Result<Self> {
        word.iter().try_fold(Self::identity(level), |acc, &g| {
            Ok(Self::generator(level, g)?.compose(&acc))
        })
    }

    pub fn level(&self) -> usize {
        self.src.len()
    }

    /// Position each output coordinate is read from.
    pub fn src(&self) -> &[usize] {
        &self.src
    }

    /// The permutation sending position `src[i]` to `i`.
    pub fn perm(&self) -> Vec<usize> {
        let mut p = vec![0; self.src.len()];
        for (i, &j) in self.src.iter().enumerate() {
            p[j] = i;
        }
        p
    }

    pub fn shift(&self) -> &[i64] {
        &self.shift
    }

    pub fn word(&self) -> &[Generator] {
        &self.word
    }

    pub fn act(&self, s: &Multicharge, e: usize) -> Result<Multicharge> {
        check_e(e)?;
        if s.level() != self.level() {
            return Err(Error::LevelMismatch {
                expected: self.level(),
                found: s.level(),
            });
        }
        let out = self
            .src
            .iter()
            .zip(&self.shift)
            .map(|(&j, &d)| s[j] + e as i64 * d)
            .collect();
        Multicharge::new(out)
    }

    /// Applies the stored word one generator at a time.
    pub fn act_word(&self, s: &Multicharge, e: usize) -> Result<Multicharge> {
        self.word.iter().try_fold(s.clone(), |cur, &g| {
            Self::generator(self.level(), g)?.act(&cur, e)
        })
    }

    /// `self ∘ other`: `other` is applied first.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(
            self.level(),
            other.level(),
            "composing elements of different levels"
        );
        let src = self.src.iter().map(|&j| other.src[j]).collect();
        let shift = self
            .src
            .iter()
            .zip(&self.shift)
            .map(|(&j, &d)| other.shift[j] + d)
            .collect();
        let word = other.word.iter().chain(&self.word).copied().collect();
        Self { src, shift, word }
    }

    pub fn invert(&self) -> Self {
        let p = self.perm();
        let src = p.clone();
        let shift = p.iter().map(|&i| -self.shift[i]).collect();
        let word = self.word.iter().rev().map(|g| g.inverse()).collect();
        Self { src, shift, word }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.invert() } else { self.clone() };
        (0..k.unsigned_abs()).fold(Self::identity(self.level()), |acc, _| base.compose(&acc))
    }

    /// `ξ = σ_{l-1} ... σ_1`.
    pub fn xi(level: usize) -> Self {
        let word: Vec<Generator> = (1..level).map(Generator::Sigma).collect();
        Self::from_word(level, &word).expect("valid generators")
    }

    /// `z_i = ξ^{l-i} τ^i` for `0 <= i <= l`.
    pub fn z(level: usize, i: usize) -> Result<Self> {
        if i > level {
            return Err(Error::GeneratorOutOfRange { index: i, level });
        }
        let tau = Self::generator(level, Generator::Tau)?;
        Ok(Self::xi(level)
            .pow((level - i) as i64)
            .compose(&tau.pow(i as i64)))
    }

    /// `y_i = z_{i-1}⁻¹ z_i` for `1 <= i <= l`.
    pub fn y(level: usize, i: usize) -> Result<Self> {
        if i == 0 || i > level {
            return Err(Error::GeneratorOutOfRange { index: i, level });
        }
        Ok(Self::z(level, i - 1)?.invert().compose(&Self::z(level, i)?))
    }

    /// Same map with the word freely reduced (`σ_i σ_i` and `τ τ⁻¹` cancelled).
    pub fn simplified(&self) -> Self {
        let mut word: Vec<Generator> = Vec::with_capacity(self.word.len());
        for &g in &self.word {
            if word.last() == Some(&g.inverse()) {
                word.pop();
            } else {
                word.push(g);
            }
        }
        Self {
            src: self.src.clone(),
            shift: self.shift.clone(),
            word,
        }
    }

    /// Whether the two elements act identically.
    pub fn same_action(&self, other: &Self) -> bool {
        self.src == other.src && self.shift == other.shift
    }
}

/// `0 <= s_{l-1} <= ... <= s_0 <= e - 1`.
pub fn is_fundamental(s: &Multicharge, e: usize) -> bool {
    let v = s.as_slice();
    v.iter().all(|&x| (0..e as i64).contains(&x)) && v.windows(2).all(|w| w[0] >= w[1])
}

/// The fundamental representative of the orbit of `s` and an element taking
/// `s` to it. Each coordinate is first moved into `[0, e)` by powers of the
/// `y_i`, then the coordinates are bubble sorted into decreasing order.
pub fn reduce_to_fundamental(
    s: &Multicharge,
    e: usize,
) -> Result<(Multicharge, ChargeGroupElement)> {
    check_e(e)?;
    let l = s.level();
    let mut g = ChargeGroupElement::identity(l);
    for (k, &x) in s.as_slice().iter().enumerate() {
        let q = x.div_euclid(e as i64);
        if q != 0 {
            g = ChargeGroupElement::y(l, k + 1)?.pow(-q).compose(&g);
        }
    }
    let mut cur: Vec<i64> = s.as_slice().iter().map(|&x| residue(x, e) as i64).collect();
    for pass in 0..l {
        for p in 0..l.saturating_sub(1 + pass) {
            if cur[p] < cur[p + 1] {
                cur.swap(p, p + 1);
                g = ChargeGroupElement::generator(l, Generator::Sigma(p + 1))?.compose(&g);
            }
        }
    }
    let g = g.simplified();
    let target = Multicharge::new(cur)?;
    debug_assert_eq!(g.act(s, e).ok().as_ref(), Some(&target));
    Ok((target, g))
}
