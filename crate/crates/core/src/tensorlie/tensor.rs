use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::{Alphabet, SymPoly};

/// A word in the letters of an [`Alphabet`].
pub type Word = Vec<u8>;

/// Element of `T(H)` or `T(H')` with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorPoly {
    alphabet: Alphabet,
    terms: BTreeMap<Word, BigInt>,
}

pub(crate) fn add_coeff<K: Ord>(map: &mut BTreeMap<K, BigInt>, key: K, c: &BigInt) {
    if c.is_zero() {
        return;
    }
    use alloc::collections::btree_map::Entry;
    match map.entry(key) {
        Entry::Vacant(e) => {
            e.insert(c.clone());
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

impl TensorPoly {
    pub fn zero(alphabet: Alphabet) -> Self {
        TensorPoly { alphabet, terms: BTreeMap::new() }
    }

    pub fn one(alphabet: Alphabet) -> Self {
        Self::monomial(alphabet, Vec::new(), BigInt::one())
    }

    pub fn letter(alphabet: Alphabet, pos: usize) -> Self {
        Self::monomial(alphabet, vec![pos as u8], BigInt::one())
    }

    pub fn monomial(alphabet: Alphabet, word: Word, coeff: BigInt) -> Self {
        let mut t = Self::zero(alphabet);
        t.add_term(word, &coeff);
        t
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, BigInt)>>(alphabet: Alphabet, it: I) -> Self {
        let mut t = Self::zero(alphabet);
        for (w, c) in it {
            t.add_term(w, &c);
        }
        t
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn terms(&self) -> &BTreeMap<Word, BigInt> {
        &self.terms
    }

    pub fn coeff(&self, w: &[u8]) -> BigInt {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, w: Word, c: &BigInt) {
        debug_assert!(w.iter().all(|&l| (l as usize) < self.alphabet.rank()));
        add_coeff(&mut self.terms, w, c);
    }

    pub fn add_assign_scaled(&mut self, other: &TensorPoly, c: &BigInt) {
        debug_assert_eq!(self.alphabet, other.alphabet);
        for (w, d) in &other.terms {
            add_coeff(&mut self.terms, w.clone(), &(d * c));
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut t = Self::zero(self.alphabet);
        t.add_assign_scaled(self, c);
        t
    }

    /// Smallest degree with a nonzero term.
    pub fn min_degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).min()
    }

    pub fn max_degree(&self) -> Option<usize> {
        self.terms.keys().map(Vec::len).max()
    }

    /// `Some(d)` when every term has degree `d`; `None` for zero or mixed.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        let d = self.min_degree()?;
        (self.max_degree() == Some(d)).then_some(d)
    }

    pub fn homogeneous_part(&self, d: usize) -> Self {
        TensorPoly {
            alphabet: self.alphabet,
            terms: self.terms.iter().filter(|(w, _)| w.len() == d).map(|(w, c)| (w.clone(), c.clone())).collect(),
        }
    }

    /// Drops every term of degree above `n`.
    pub fn truncate(&self, n: usize) -> Self {
        TensorPoly {
            alphabet: self.alphabet,
            terms: self.terms.iter().filter(|(w, _)| w.len() <= n).map(|(w, c)| (w.clone(), c.clone())).collect(),
        }
    }

    /// Concatenation product.
    pub fn mul(&self, other: &TensorPoly) -> Self {
        debug_assert_eq!(self.alphabet, other.alphabet);
        let mut t = Self::zero(self.alphabet);
        for (u, c) in &self.terms {
            for (v, d) in &other.terms {
                let mut w = u.clone();
                w.extend_from_slice(v);
                t.add_term(w, &(c * d));
            }
        }
        t
    }

    /// `xy - yx`.
    pub fn bracket(&self, other: &TensorPoly) -> Self {
        let mut t = self.mul(other);
        t.add_assign_scaled(&other.mul(self), &-BigInt::one());
        t
    }

    /// Reverses every word.
    pub fn reverse(&self) -> Self {
        TensorPoly::from_terms(
            self.alphabet,
            self.terms.iter().map(|(w, c)| (w.iter().rev().copied().collect(), c.clone())),
        )
    }

    /// The involution induced on `I^k/I^{k+1}` by the bar of the group ring:
    /// word reversal times `(-1)^k` on the degree-`k` part.
    pub fn graded_bar(&self) -> Self {
        TensorPoly::from_terms(
            self.alphabet,
            self.terms.iter().map(|(w, c)| {
                let c = if w.len() % 2 == 1 { -c } else { c.clone() };
                (w.iter().rev().copied().collect(), c)
            }),
        )
    }

    /// Letter projection `H → H'`: `a_i ↦ 0`, `b_i ↦ b'_i`.
    pub fn project_to_handlebody(&self) -> Self {
        let g = self.alphabet.genus();
        match self.alphabet {
            Alphabet::Handlebody(_) => self.clone(),
            Alphabet::Surface(_) => TensorPoly::from_terms(
                Alphabet::Handlebody(g),
                self.terms
                    .iter()
                    .filter(|(w, _)| w.iter().all(|&l| l as usize >= g))
                    .map(|(w, c)| (w.iter().map(|&l| l - g as u8).collect(), c.clone())),
            ),
        }
    }

    /// Substitutes each letter by a degree-one element; `images[l]` is the
    /// image of letter `l` as a vector over `target`.
    pub fn substitute_linear(&self, target: Alphabet, images: &[Vec<BigInt>]) -> Self {
        let mut out = TensorPoly::zero(target);
        for (w, c) in &self.terms {
            let mut acc = TensorPoly::monomial(target, Vec::new(), c.clone());
            for &l in w {
                let img = TensorPoly::from_terms(
                    target,
                    images[l as usize].iter().enumerate().map(|(i, x)| (vec![i as u8], x.clone())),
                );
                acc = acc.mul(&img);
            }
            out.add_assign_scaled(&acc, &BigInt::one());
        }
        out
    }

    /// Splits off the first letter: `t = Σ_x x ⊗ result[x]` on terms of
    /// positive degree.
    pub fn first_letter_decompose(&self) -> Vec<TensorPoly> {
        let mut out = vec![TensorPoly::zero(self.alphabet); self.alphabet.rank()];
        for (w, c) in &self.terms {
            if let Some((&x, rest)) = w.split_first() {
                out[x as usize].add_term(rest.to_vec(), c);
            }
        }
        out
    }

    pub fn render(&self) -> String {
        render_terms(self.terms.iter().map(|(w, c)| {
            let mut s = String::new();
            for (i, &l) in w.iter().enumerate() {
                if i > 0 {
                    s.push('*');
                }
                s.push_str(&self.alphabet.letter_name(l as usize));
            }
            (s, c)
        }))
    }
}

/// `Σ ± c*m` with `1` for the empty monomial and `0` for no terms.
pub(crate) fn render_terms<'a, I: Iterator<Item = (String, &'a BigInt)>>(it: I) -> String {
    let mut out = String::new();
    for (m, c) in it {
        let neg = c.is_negative();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let a = c.abs();
        if m.is_empty() {
            out.push_str(&alloc::format!("{a}"));
        } else {
            if !a.is_one() {
                out.push_str(&alloc::format!("{a}*"));
            }
            out.push_str(&m);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

impl fmt::Display for TensorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &TensorPoly {
    type Output = TensorPoly;
    fn add(self, rhs: &TensorPoly) -> TensorPoly {
        let mut t = self.clone();
        t.add_assign_scaled(rhs, &BigInt::one());
        t
    }
}

impl Sub for &TensorPoly {
    type Output = TensorPoly;
    fn sub(self, rhs: &TensorPoly) -> TensorPoly {
        let mut t = self.clone();
        t.add_assign_scaled(rhs, &-BigInt::one());
        t
    }
}

impl Neg for &TensorPoly {
    type Output = TensorPoly;
    fn neg(self) -> TensorPoly {
        self.scale(&-BigInt::one())
    }
}

impl Mul for &TensorPoly {
    type Output = TensorPoly;
    fn mul(self, rhs: &TensorPoly) -> TensorPoly {
        TensorPoly::mul(self, rhs)
    }
}

/// Splits off the trailing letter: `t = Σ_x result[x] ⊗ x` on terms of
/// positive degree. This is the graded Fox derivative.
pub fn last_letter_decompose(t: &TensorPoly) -> Vec<TensorPoly> {
    let mut out = vec![TensorPoly::zero(t.alphabet); t.alphabet.rank()];
    for (w, c) in &t.terms {
        if let Some((&x, rest)) = w.split_last() {
            out[x as usize].add_term(rest.to_vec(), c);
        }
    }
    out
}

/// `T_k → S^k`: collects words with equal multidegree.
pub fn symmetrize(t: &TensorPoly) -> SymPoly {
    let n = t.alphabet.rank();
    SymPoly::from_terms(
        t.alphabet,
        t.terms.iter().map(|(w, c)| {
            let mut e = vec![0u32; n];
            for &l in w {
                e[l as usize] += 1;
            }
            (e, c.clone())
        }),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    const H2: Alphabet = Alphabet::Surface(2);

    fn t(words: &[(&[u8], i64)]) -> TensorPoly {
        TensorPoly::from_terms(H2, words.iter().map(|(w, c)| (w.to_vec(), BigInt::from(*c))))
    }

    #[test]
    fn last_letter_examples() {
        let hp = Alphabet::Handlebody(2);
        let x = TensorPoly::from_terms(hp, [(vec![1u8, 0], BigInt::from(1)), (vec![0u8, 1], BigInt::from(-1))]);
        let parts = last_letter_decompose(&x);
        assert_eq!(parts[0], TensorPoly::letter(hp, 1));
        assert_eq!(parts[1], -&TensorPoly::letter(hp, 0));
        let single = t(&[(&[0, 2], 1)]);
        assert_eq!(last_letter_decompose(&single)[2], t(&[(&[0], 1)]));
        assert_eq!(last_letter_decompose(&t(&[(&[3], 1)]))[3], TensorPoly::one(H2));
    }

    #[test]
    fn symmetrize_examples() {
        let s = symmetrize(&t(&[(&[0, 1], 1), (&[1, 0], 1)]));
        assert_eq!(s, SymPoly::from_terms(H2, [(vec![1, 1, 0, 0], BigInt::from(2))]));
        assert!(symmetrize(&t(&[(&[0, 1], 1), (&[1, 0], -1)])).is_zero());
        assert_eq!(symmetrize(&t(&[(&[0, 0], 1)])), SymPoly::from_terms(H2, [(vec![2, 0, 0, 0], BigInt::from(1))]));
    }

    #[test]
    fn graded_bar_signs() {
        let x = t(&[(&[0, 2], 1), (&[1], 3)]);
        assert_eq!(x.graded_bar(), t(&[(&[2, 0], 1), (&[1], -3)]));
        assert_eq!(x.graded_bar().graded_bar(), x);
    }

    #[test]
    fn projection_kills_alpha_words() {
        let x = t(&[(&[2, 3], 1), (&[0, 3], 5)]);
        let p = x.project_to_handlebody();
        assert_eq!(p.len(), 1);
        assert_eq!(p.coeff(&[0, 1]), BigInt::from(1));
    }

    #[test]
    fn render() {
        assert_eq!(t(&[(&[0, 2], 1), (&[2, 0], -2)]).render(), "a1*b1 - 2*b1*a1");
        assert_eq!(TensorPoly::zero(H2).render(), "0");
    }
}
