//! Truncated Magnus expansion `γ ↦ 1 + X_γ` on dense coefficient arrays.
//!
//! Every kernel first runs on checked `i128` and is rerun on `BigInt` if any
//! coefficient overflows, so results are always exact.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{tensor_to_lie, Alphabet, LiePoly, TensorPoly};
use crate::freegroup::{GroupWord, Letter};
use crate::{Error, Result};

trait Coef: Clone {
    fn nil() -> Self;
    fn unit() -> Self;
    fn add_to(&mut self, o: &Self) -> bool;
    fn sub_to(&mut self, o: &Self) -> bool;
    fn is_zero(&self) -> bool;
    fn big(&self) -> BigInt;
}

impl Coef for i128 {
    fn nil() -> Self {
        0
    }
    fn unit() -> Self {
        1
    }
    #[inline]
    fn add_to(&mut self, o: &Self) -> bool {
        match self.checked_add(*o) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }
    #[inline]
    fn sub_to(&mut self, o: &Self) -> bool {
        match self.checked_sub(*o) {
            Some(v) => {
                *self = v;
                true
            }
            None => false,
        }
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn big(&self) -> BigInt {
        BigInt::from(*self)
    }
}

impl Coef for BigInt {
    fn nil() -> Self {
        Zero::zero()
    }
    fn unit() -> Self {
        num_traits::One::one()
    }
    fn add_to(&mut self, o: &Self) -> bool {
        *self += o;
        true
    }
    fn sub_to(&mut self, o: &Self) -> bool {
        *self -= o;
        true
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn big(&self) -> BigInt {
        self.clone()
    }
}

/// Truncated series; `levels[d]` holds the degree-`d` coefficients indexed by
/// words read as base-`n` numbers, first letter most significant.
#[derive(Clone)]
struct Dense<C> {
    n: usize,
    levels: Vec<Vec<C>>,
}

impl<C: Coef> Dense<C> {
    fn constant(n: usize, max: usize, c: C) -> Self {
        let mut levels = Vec::with_capacity(max + 1);
        levels.push(vec![c]);
        let mut size = 1;
        for _ in 1..=max {
            size *= n;
            levels.push(vec![C::nil(); size]);
        }
        Dense { n, levels }
    }

    fn max(&self) -> usize {
        self.levels.len() - 1
    }

    /// `self ← self · γ^{±1}`.
    fn right_mul(&mut self, l: Letter) -> bool {
        let (n, x) = (self.n, l.gen as usize);
        let max = self.max();
        if !l.inverse {
            for d in (1..=max).rev() {
                let (lo, hi) = self.levels.split_at_mut(d);
                let (prev, cur) = (&lo[d - 1], &mut hi[0]);
                for (u, c) in prev.iter().enumerate() {
                    if !c.is_zero() && !cur[u * n + x].add_to(c) {
                        return false;
                    }
                }
            }
        } else {
            for d in 1..=max {
                let (lo, hi) = self.levels.split_at_mut(d);
                let (prev, cur) = (&lo[d - 1], &mut hi[0]);
                for (u, c) in prev.iter().enumerate() {
                    if !c.is_zero() && !cur[u * n + x].sub_to(c) {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `self ← γ^{±1} · self`.
    fn left_mul(&mut self, l: Letter) -> bool {
        let x = l.gen as usize;
        let max = self.max();
        let order: Vec<usize> = if l.inverse { (1..=max).collect() } else { (1..=max).rev().collect() };
        for d in order {
            let (lo, hi) = self.levels.split_at_mut(d);
            let (prev, cur) = (&lo[d - 1], &mut hi[0]);
            let off = x * prev.len();
            for (u, c) in prev.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let ok = if l.inverse { cur[off + u].sub_to(c) } else { cur[off + u].add_to(c) };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    fn add_signed(&mut self, other: &Dense<C>, negate: bool) -> bool {
        for (a, b) in self.levels.iter_mut().zip(&other.levels) {
            for (x, y) in a.iter_mut().zip(b) {
                if y.is_zero() {
                    continue;
                }
                let ok = if negate { x.sub_to(y) } else { x.add_to(y) };
                if !ok {
                    return false;
                }
            }
        }
        true
    }

    fn to_tensor(&self, alphabet: Alphabet) -> TensorPoly {
        let mut t = TensorPoly::zero(alphabet);
        for (d, level) in self.levels.iter().enumerate() {
            for (idx, c) in level.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let mut w = vec![0u8; d];
                let mut r = idx;
                for slot in w.iter_mut().rev() {
                    *slot = (r % self.n) as u8;
                    r /= self.n;
                }
                t.add_term(w, &c.big());
            }
        }
        t
    }
}

fn expand_letters<C: Coef>(n: usize, max: usize, letters: &[Letter]) -> Option<Dense<C>> {
    let mut s = Dense::constant(n, max, C::unit());
    for &l in letters {
        if !s.right_mul(l) {
            return None;
        }
    }
    Some(s)
}

/// Magnus expansion of a raw letter sequence, truncated above degree `max`.
pub(crate) fn expand_raw(alphabet: Alphabet, letters: &[Letter], max: usize) -> TensorPoly {
    let n = alphabet.rank();
    match expand_letters::<i128>(n, max, letters) {
        Some(s) => s.to_tensor(alphabet),
        None => expand_letters::<BigInt>(n, max, letters).expect("BigInt never overflows").to_tensor(alphabet),
    }
}

/// Magnus expansion of `w`, truncated above degree `max`.
pub fn magnus_expand_word(w: &GroupWord, max: usize) -> TensorPoly {
    expand_raw(Alphabet::of(w.ambient(), w.genus()), w.letters(), max)
}

fn fox_letters<C: Coef>(n: usize, max: usize, letters: &[Letter], bar: bool) -> Option<Vec<Dense<C>>> {
    let mut acc = vec![Dense::constant(n, max, C::nil()); n];
    // Running expansion of the prefix (or of its inverse when `bar`).
    let mut p = Dense::constant(n, max, C::unit());
    for &l in letters {
        let i = l.gen as usize;
        if !l.inverse {
            if !acc[i].add_signed(&p, false) {
                return None;
            }
        }
        let ok = if bar { p.left_mul(l.inv()) } else { p.right_mul(l) };
        if !ok {
            return None;
        }
        if l.inverse && !acc[i].add_signed(&p, true) {
            return None;
        }
    }
    Some(acc)
}

/// Magnus expansions of the Fox derivatives `∂w/∂γ_i` (or of their bars),
/// truncated above degree `max`, one entry per generator.
///
/// Computed straight from the product rule: a letter `γ_i` at position `p`
/// contributes the prefix before it, a letter `γ_i⁻¹` minus the prefix
/// through it.
pub fn fox_expansion(w: &GroupWord, max: usize, bar: bool) -> Vec<TensorPoly> {
    let alphabet = Alphabet::of(w.ambient(), w.genus());
    let n = alphabet.rank();
    let to_t = |v: Vec<Dense<_>>| v.iter().map(|d: &Dense<_>| d.to_tensor(alphabet)).collect();
    match fox_letters::<i128>(n, max, w.letters(), bar) {
        Some(v) => to_t(v),
        None => {
            let v = fox_letters::<BigInt>(n, max, w.letters(), bar).expect("BigInt never overflows");
            v.iter().map(|d| d.to_tensor(alphabet)).collect()
        }
    }
}

/// Position of a word in the lower central series, up to a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LcsDegree {
    /// `w ∈ Γ_d \ Γ_{d+1}`.
    Degree(usize),
    /// `w ∈ Γ_{N+1}` for the bound `N` used.
    Exceeds(usize),
}

/// Lowest degree of a nonzero term of `M(w) - 1`, searched up to `max`.
pub fn lcs_degree(w: &GroupWord, max: usize) -> LcsDegree {
    let t = magnus_expand_word(w, max);
    match t.terms().keys().map(Vec::len).filter(|&d| d > 0).min() {
        Some(d) => LcsDegree::Degree(d),
        None => LcsDegree::Exceeds(max),
    }
}

/// Class of `w ∈ Γ_k` in `Γ_k/Γ_{k+1} ≅ L_k`.
pub fn lcs_class(w: &GroupWord, k: usize) -> Result<LiePoly> {
    let t = magnus_expand_word(w, k);
    if t.terms().keys().any(|x| !x.is_empty() && x.len() < k) {
        return Err(Error::NotInGamma(k));
    }
    tensor_to_lie(&t.homogeneous_part(k))
}
