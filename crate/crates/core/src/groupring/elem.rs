use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::{LaurentElem, RingElem};
use crate::freegroup::{push_reduced, Ambient, FreeGroupMap, GroupWord, Letter};
use crate::tensorlie::{expand_raw, tensor_add_coeff, Alphabet, TensorPoly};
use crate::{Error, Result};

/// Element of `Z[π]` or `Z[π']`; keys are freely reduced words.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupRingElem {
    ambient: Ambient,
    genus: usize,
    terms: BTreeMap<Vec<Letter>, BigInt>,
}

impl GroupRingElem {
    pub fn zero(ambient: Ambient, genus: usize) -> Self {
        GroupRingElem { ambient, genus, terms: BTreeMap::new() }
    }

    pub fn one(ambient: Ambient, genus: usize) -> Self {
        Self::from_terms(ambient, genus, [(Vec::new(), BigInt::one())])
    }

    pub fn from_word(w: &GroupWord) -> Self {
        Self::from_terms(w.ambient(), w.genus(), [(w.letters().to_vec(), BigInt::one())])
    }

    fn from_terms<I: IntoIterator<Item = (Vec<Letter>, BigInt)>>(ambient: Ambient, genus: usize, it: I) -> Self {
        let mut x = Self::zero(ambient, genus);
        for (w, c) in it {
            tensor_add_coeff(&mut x.terms, w, &c);
        }
        x
    }

    /// Builds `Σ c_i w_i`; words must share one group.
    pub fn from_words<I: IntoIterator<Item = (GroupWord, BigInt)>>(
        ambient: Ambient,
        genus: usize,
        it: I,
    ) -> Result<Self> {
        let mut x = Self::zero(ambient, genus);
        for (w, c) in it {
            if w.ambient() != ambient || w.genus() != genus {
                return Err(Error::AmbientMismatch("group ring term from another group".into()));
            }
            tensor_add_coeff(&mut x.terms, w.letters().to_vec(), &c);
        }
        Ok(x)
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    /// `(word, coefficient)` pairs in word order.
    pub fn terms(&self) -> impl Iterator<Item = (GroupWord, &BigInt)> + '_ {
        self.terms.iter().map(|(w, c)| (GroupWord::from_reduced(self.ambient, self.genus, w.clone()), c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.ambient != other.ambient || self.genus != other.genus {
            return Err(Error::AmbientMismatch("group ring elements from different groups".into()));
        }
        Ok(())
    }

    pub fn add_assign_scaled(&mut self, other: &GroupRingElem, c: &BigInt) {
        debug_assert!(self.check(other).is_ok());
        for (w, d) in &other.terms {
            tensor_add_coeff(&mut self.terms, w.clone(), &(d * c));
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut x = self.clone();
        x.add_assign_scaled(other, &BigInt::one());
        Ok(x)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut x = Self::zero(self.ambient, self.genus);
        for (u, c) in &self.terms {
            for (v, d) in &other.terms {
                let mut w = u.clone();
                for &l in v {
                    push_reduced(&mut w, l);
                }
                tensor_add_coeff(&mut x.terms, w, &(c * d));
            }
        }
        Ok(x)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut x = Self::zero(self.ambient, self.genus);
        x.add_assign_scaled(self, c);
        x
    }

    /// Sum of coefficients; its kernel is the augmentation ideal.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// `Σ c_w w ↦ Σ c_w w⁻¹`.
    pub fn bar(&self) -> Self {
        Self::from_terms(
            self.ambient,
            self.genus,
            self.terms.iter().map(|(w, c)| (w.iter().rev().map(|l| l.inv()).collect(), c.clone())),
        )
    }

    /// Fox derivative with respect to the basis element at position `gen`.
    pub fn fox_derivative(&self, gen: usize) -> Result<Self> {
        let rank = self.ambient.rank(self.genus);
        if gen >= rank {
            return Err(Error::InvalidGenerator(format!("position {gen} out of range")));
        }
        let mut x = Self::zero(self.ambient, self.genus);
        for (w, c) in &self.terms {
            for (p, l) in w.iter().enumerate() {
                if l.gen as usize != gen {
                    continue;
                }
                if l.inverse {
                    tensor_add_coeff(&mut x.terms, w[..=p].to_vec(), &-c);
                } else {
                    tensor_add_coeff(&mut x.terms, w[..p].to_vec(), c);
                }
            }
        }
        Ok(x)
    }

    /// Coefficientwise abelianisation into `Z[H]` or `Z[H']`.
    pub fn abelianize(&self) -> LaurentElem {
        let alphabet = Alphabet::of(self.ambient, self.genus);
        let n = alphabet.rank();
        LaurentElem::from_terms(
            alphabet,
            self.terms.iter().map(|(w, c)| {
                let mut e = vec![0i32; n];
                for l in w {
                    e[l.gen as usize] += if l.inverse { -1 } else { 1 };
                }
                (e, c.clone())
            }),
        )
    }

    /// Coefficientwise image in `Z[π']`.
    pub fn project(&self) -> Result<Self> {
        let mut x = Self::zero(Ambient::Handlebody, self.genus);
        for (w, c) in self.terms() {
            let p = w.project_to_handlebody()?;
            tensor_add_coeff(&mut x.terms, p.letters().to_vec(), c);
        }
        Ok(x)
    }

    /// Applies a group endomorphism to every word.
    pub fn apply_map(&self, f: &FreeGroupMap) -> Result<Self> {
        if f.ambient() != self.ambient || f.genus() != self.genus {
            return Err(Error::AmbientMismatch("map and element live in different groups".into()));
        }
        let mut x = Self::zero(self.ambient, self.genus);
        for (w, c) in self.terms() {
            let img = f.apply(&w)?;
            tensor_add_coeff(&mut x.terms, img.letters().to_vec(), c);
        }
        Ok(x)
    }

    /// Magnus expansion truncated above degree `max`.
    pub fn magnus_expand(&self, max: usize) -> TensorPoly {
        let alphabet = Alphabet::of(self.ambient, self.genus);
        let mut t = TensorPoly::zero(alphabet);
        for (w, c) in &self.terms {
            t.add_assign_scaled(&expand_raw(alphabet, w, max), c);
        }
        t
    }

    /// `c*a1*b1^-1` monomials, `1` for the identity word.
    pub fn render(&self) -> String {
        crate::tensorlie::render_signed_terms(self.terms().map(|(w, c)| {
            let s = if w.is_identity() { String::new() } else { w.render("*") };
            (s, c)
        }))
    }
}

impl fmt::Display for GroupRingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl RingElem for GroupRingElem {
    fn zero_like(&self) -> Self {
        GroupRingElem::zero(self.ambient, self.genus)
    }
    fn one_like(&self) -> Self {
        GroupRingElem::one(self.ambient, self.genus)
    }
    fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("ring elements from different groups")
    }
    fn sub(&self, other: &Self) -> Self {
        self.try_add(&other.scale(&-BigInt::one())).expect("ring elements from different groups")
    }
    fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("ring elements from different groups")
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// Abelianised Fox derivative of a word, without forming `Z[π]`: one pass
/// over the letters with a running prefix exponent vector.
pub fn fox_laurent(w: &GroupWord, gen: usize) -> LaurentElem {
    let alphabet = Alphabet::of(w.ambient(), w.genus());
    let mut prefix = vec![0i32; alphabet.rank()];
    let mut acc: BTreeMap<Vec<i32>, BigInt> = BTreeMap::new();
    for l in w.letters() {
        let i = l.gen as usize;
        if l.inverse {
            prefix[i] -= 1;
            if i == gen {
                tensor_add_coeff(&mut acc, prefix.clone(), &-BigInt::one());
            }
        } else {
            if i == gen {
                tensor_add_coeff(&mut acc, prefix.clone(), &BigInt::one());
            }
            prefix[i] += 1;
        }
    }
    let x = LaurentElem::from_terms(alphabet, acc);
    debug_assert!(!x.is_zero() || x.augmentation().is_zero());
    x
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> GroupWord {
        GroupWord::parse(s, Ambient::Surface, 2).unwrap()
    }

    fn e(s: &str) -> GroupRingElem {
        GroupRingElem::from_word(&w(s))
    }

    #[test]
    fn fox_examples() {
        assert_eq!(e("a1").fox_derivative(0).unwrap(), e("1"));
        assert!(e("a1").fox_derivative(1).unwrap().is_zero());
        assert_eq!(e("a1^-1").fox_derivative(0).unwrap(), e("a1^-1").scale(&-BigInt::one()));
        assert_eq!(e("a1 b1 a1^-1").fox_derivative(0).unwrap(), e("1").sub(&e("a1 b1 a1^-1")));
    }

    #[test]
    fn ring_examples() {
        assert_eq!(e("a1").mul(&e("a1^-1")), e("1"));
        let one = e("1");
        let b1 = e("b1");
        assert_eq!(one.sub(&b1).mul(&one.add(&b1)), one.sub(&e("b1 b1")));
        let x = e("a1").scale(&BigInt::from(3)).sub(&e("b2").scale(&BigInt::from(2)));
        assert_eq!(x.augmentation(), BigInt::one());
        assert!(e("a1").sub(&one).augmentation().is_zero());
        assert!(GroupRingElem::zero(Ambient::Surface, 2).augmentation().is_zero());
    }

    #[test]
    fn bar_examples() {
        assert_eq!(e("a1 b1").bar(), e("b1^-1 a1^-1"));
        assert_eq!(e("1").sub(&e("b1")).bar(), e("1").sub(&e("b1^-1")));
    }

    #[test]
    fn projection_examples() {
        let ct = e("b2 a1 b1 a1^-1 b1^-1");
        let bp = GroupRingElem::from_word(&GroupWord::parse("B2", Ambient::Handlebody, 2).unwrap());
        assert_eq!(ct.project().unwrap(), bp);
        assert!(e("1").sub(&e("a1")).project().unwrap().is_zero());
        assert!(e("a1 b1 a1^-1 b1^-1").sub(&e("1")).abelianize().is_zero());
    }

    #[test]
    fn fox_laurent_matches_group_ring() {
        let x = w("a1 b2^-1 a1 b1 a1^-1 b2 b2 a2^-1 a1");
        for i in 0..4 {
            assert_eq!(fox_laurent(&x, i), GroupRingElem::from_word(&x).fox_derivative(i).unwrap().abelianize());
        }
    }

    #[test]
    fn render() {
        assert_eq!(e("1").sub(&e("a1 b1^-1")).render(), "1 - a1*b1^-1");
    }
}
