use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::tensor::{add_coeff, render_terms};
use super::{Alphabet, TensorPoly, Word};
use crate::{Error, Result};

/// Whether `w` is strictly smaller than each of its proper suffixes.
pub fn is_lyndon(w: &[u8]) -> bool {
    !w.is_empty() && (1..w.len()).all(|i| w < &w[i..])
}

/// `w = uv` with `v` the longest proper Lyndon suffix; `None` for letters.
pub fn standard_factorization(w: &[u8]) -> Option<(&[u8], &[u8])> {
    (1..w.len()).find(|&i| is_lyndon(&w[i..])).map(|i| w.split_at(i))
}

/// All Lyndon words of length exactly `k` over `n` letters, in
/// lexicographic order (Duval's generation).
pub fn lyndon_words(n: usize, k: usize) -> Vec<Word> {
    let mut out = Vec::new();
    if n == 0 || k == 0 {
        return out;
    }
    let top = (n - 1) as u8;
    let mut w: Vec<u8> = vec![0];
    loop {
        if w.len() == k {
            out.push(w.clone());
        }
        let m = w.len();
        while w.len() < k {
            w.push(w[w.len() - m]);
        }
        while w.last() == Some(&top) {
            w.pop();
        }
        match w.last_mut() {
            Some(l) => *l += 1,
            None => break,
        }
    }
    out
}

/// `(1/k) Σ_{d|k} μ(d) n^{k/d}`.
pub fn witt_dimension(n: usize, k: usize) -> BigInt {
    fn mobius(mut d: usize) -> i32 {
        let mut mu = 1;
        let mut p = 2;
        while p * p <= d {
            if d % p == 0 {
                d /= p;
                if d % p == 0 {
                    return 0;
                }
                mu = -mu;
            }
            p += 1;
        }
        if d > 1 {
            mu = -mu;
        }
        mu
    }
    let mut s = BigInt::zero();
    for d in (1..=k).filter(|d| k % d == 0) {
        s += BigInt::from(mobius(d)) * num_traits::pow(BigInt::from(n), k / d);
    }
    s.div_floor(&BigInt::from(k))
}

/// The standard bracketing `P_w` of a Lyndon word, expanded in `T`.
fn bracket_of_word(alphabet: Alphabet, w: &[u8]) -> TensorPoly {
    match standard_factorization(w) {
        None => TensorPoly::letter(alphabet, w[0] as usize),
        Some((u, v)) => bracket_of_word(alphabet, u).bracket(&bracket_of_word(alphabet, v)),
    }
}

fn render_word_bracket(alphabet: Alphabet, w: &[u8]) -> String {
    match standard_factorization(w) {
        None => alphabet.letter_name(w[0] as usize),
        Some((u, v)) => format!("[{},{}]", render_word_bracket(alphabet, u), render_word_bracket(alphabet, v)),
    }
}

/// Element of the free Lie algebra, in Lyndon coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LiePoly {
    alphabet: Alphabet,
    terms: BTreeMap<Word, BigInt>,
}

impl LiePoly {
    pub fn zero(alphabet: Alphabet) -> Self {
        LiePoly { alphabet, terms: BTreeMap::new() }
    }

    pub fn generator(alphabet: Alphabet, pos: usize) -> Self {
        Self::basis_element(alphabet, vec![pos as u8]).expect("letters are Lyndon")
    }

    pub fn basis_element(alphabet: Alphabet, w: Word) -> Result<Self> {
        if !is_lyndon(&w) || w.iter().any(|&l| l as usize >= alphabet.rank()) {
            return Err(Error::Dimension(format!("{w:?} is not a Lyndon word")));
        }
        let mut p = Self::zero(alphabet);
        p.terms.insert(w, BigInt::one());
        Ok(p)
    }

    /// Builds from Lyndon coordinates; keys are validated.
    pub fn from_terms<I: IntoIterator<Item = (Word, BigInt)>>(alphabet: Alphabet, it: I) -> Result<Self> {
        let mut p = Self::zero(alphabet);
        for (w, c) in it {
            if !is_lyndon(&w) || w.iter().any(|&l| l as usize >= alphabet.rank()) {
                return Err(Error::Dimension(format!("{w:?} is not a Lyndon word")));
            }
            add_coeff(&mut p.terms, w, &c);
        }
        Ok(p)
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

    /// `Some(k)` if homogeneous of degree `k`.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Vec::len);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    pub fn add_assign_scaled(&mut self, other: &LiePoly, c: &BigInt) {
        debug_assert_eq!(self.alphabet, other.alphabet);
        for (w, d) in &other.terms {
            add_coeff(&mut self.terms, w.clone(), &(d * c));
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut p = Self::zero(self.alphabet);
        p.add_assign_scaled(self, c);
        p
    }

    pub fn to_tensor(&self) -> TensorPoly {
        let mut t = TensorPoly::zero(self.alphabet);
        for (w, c) in &self.terms {
            t.add_assign_scaled(&bracket_of_word(self.alphabet, w), c);
        }
        t
    }

    pub fn bracket(&self, other: &LiePoly) -> LiePoly {
        tensor_to_lie(&self.to_tensor().bracket(&other.to_tensor())).expect("brackets of Lie elements are Lie")
    }

    /// The Lie algebra map induced by `a_i ↦ 0, b_i ↦ b'_i`. A Lyndon
    /// bracket survives only if all its letters are `b`'s.
    pub fn project_to_handlebody(&self) -> LiePoly {
        let g = self.alphabet.genus();
        match self.alphabet {
            Alphabet::Handlebody(_) => self.clone(),
            Alphabet::Surface(_) => LiePoly {
                alphabet: Alphabet::Handlebody(g),
                terms: self
                    .terms
                    .iter()
                    .filter(|(w, _)| w.iter().all(|&l| l as usize >= g))
                    .map(|(w, c)| (w.iter().map(|&l| l - g as u8).collect(), c.clone()))
                    .collect(),
            },
        }
    }

    /// Image under the Lie algebra map extending a linear map of letters.
    pub fn substitute_linear(&self, target: Alphabet, images: &[Vec<BigInt>]) -> LiePoly {
        tensor_to_lie(&self.to_tensor().substitute_linear(target, images))
            .expect("linear substitutions preserve Lie elements")
    }

    /// Renders as `2*[[a1,b1],b2] - [a1,b1]`.
    pub fn render(&self) -> String {
        render_terms(self.terms.iter().map(|(w, c)| (render_word_bracket(self.alphabet, w), c)))
    }

    /// Parses a signed sum of bracket expressions such as
    /// `2*[[a1,b1],b2] - [b1,[a1,b2]]` and rewrites it in the Lyndon basis.
    pub fn parse(s: &str, alphabet: Alphabet) -> Result<Self> {
        let mut p = BracketParser { s: s.as_bytes(), pos: 0, alphabet };
        let t = p.sum()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(p.err("trailing input"));
        }
        tensor_to_lie(&t).map_err(|_| p.err("not a Lie element"))
    }
}

struct BracketParser<'a> {
    s: &'a [u8],
    pos: usize,
    alphabet: Alphabet,
}

impl BracketParser<'_> {
    fn err(&self, message: &str) -> Error {
        Error::Parse { column: self.pos + 1, message: message.into() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn sum(&mut self) -> Result<TensorPoly> {
        let mut acc = TensorPoly::zero(self.alphabet);
        let mut sign = BigInt::one();
        match self.peek() {
            Some(b'-') => {
                sign = -sign;
                self.pos += 1;
            }
            Some(b'+') => self.pos += 1,
            _ => {}
        }
        loop {
            let t = self.term()?;
            acc.add_assign_scaled(&t, &sign);
            match self.peek() {
                Some(b'+') => sign = BigInt::one(),
                Some(b'-') => sign = -BigInt::one(),
                _ => return Ok(acc),
            }
            self.pos += 1;
        }
    }

    fn term(&mut self) -> Result<TensorPoly> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.s.len() && self.s[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if self.pos > start {
            let c: BigInt = core::str::from_utf8(&self.s[start..self.pos])
                .ok()
                .and_then(|x| x.parse().ok())
                .ok_or_else(|| self.err("bad coefficient"))?;
            if self.peek() == Some(b'*') {
                self.pos += 1;
                Ok(self.atom()?.scale(&c))
            } else if c.is_zero() {
                Ok(TensorPoly::zero(self.alphabet))
            } else {
                Err(self.err("constant terms are not Lie elements"))
            }
        } else {
            self.atom()
        }
    }

    fn atom(&mut self) -> Result<TensorPoly> {
        match self.peek() {
            Some(b'[') => {
                self.pos += 1;
                let x = self.sum()?;
                if self.peek() != Some(b',') {
                    return Err(self.err("expected `,`"));
                }
                self.pos += 1;
                let y = self.sum()?;
                if self.peek() != Some(b']') {
                    return Err(self.err("expected `]`"));
                }
                self.pos += 1;
                Ok(x.bracket(&y))
            }
            Some(_) => {
                let start = self.pos;
                while self.pos < self.s.len() && self.s[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let tok = core::str::from_utf8(&self.s[start..self.pos]).unwrap_or("");
                match self.alphabet.parse_letter(tok) {
                    Some(l) => Ok(TensorPoly::letter(self.alphabet, l)),
                    None => {
                        self.pos = start;
                        Err(self.err("expected a generator or `[`"))
                    }
                }
            }
            None => Err(self.err("unexpected end of input")),
        }
    }
}

impl fmt::Display for LiePoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &LiePoly {
    type Output = LiePoly;
    fn add(self, rhs: &LiePoly) -> LiePoly {
        let mut p = self.clone();
        p.add_assign_scaled(rhs, &BigInt::one());
        p
    }
}

impl Sub for &LiePoly {
    type Output = LiePoly;
    fn sub(self, rhs: &LiePoly) -> LiePoly {
        let mut p = self.clone();
        p.add_assign_scaled(rhs, &-BigInt::one());
        p
    }
}

impl Neg for &LiePoly {
    type Output = LiePoly;
    fn neg(self) -> LiePoly {
        self.scale(&-BigInt::one())
    }
}

/// Lyndon basis of `L_k`, each element a single standard bracketing.
pub fn lyndon_basis(alphabet: Alphabet, k: usize) -> Vec<LiePoly> {
    lyndon_words(alphabet.rank(), k)
        .into_iter()
        .map(|w| LiePoly { alphabet, terms: BTreeMap::from([(w, BigInt::one())]) })
        .collect()
}

pub fn lie_to_tensor(p: &LiePoly) -> TensorPoly {
    p.to_tensor()
}

pub fn lie_bracket(p: &LiePoly, q: &LiePoly) -> LiePoly {
    p.bracket(q)
}

/// Left-normed bracketing `x_1 ⋯ x_k ↦ [[x_1,x_2],…,x_k]`, extended linearly.
pub fn dynkin_operator(t: &TensorPoly) -> TensorPoly {
    let a = t.alphabet();
    let mut out = TensorPoly::zero(a);
    for (w, c) in t.terms() {
        let Some((&first, rest)) = w.split_first() else {
            continue;
        };
        let mut acc = TensorPoly::letter(a, first as usize);
        for &l in rest {
            acc = acc.bracket(&TensorPoly::letter(a, l as usize));
        }
        out.add_assign_scaled(&acc, c);
    }
    out
}

/// Certifies `t` as a Lie element (Dynkin criterion on each homogeneous
/// part) and rewrites it in the Lyndon basis.
pub fn tensor_to_lie(t: &TensorPoly) -> Result<LiePoly> {
    let a = t.alphabet();
    let mut out = LiePoly::zero(a);
    let (Some(lo), Some(hi)) = (t.min_degree(), t.max_degree()) else {
        return Ok(out);
    };
    if lo == 0 {
        return Err(Error::NotLieElement);
    }
    for k in lo..=hi {
        let part = t.homogeneous_part(k);
        if part.is_zero() {
            continue;
        }
        if dynkin_operator(&part) != part.scale(&BigInt::from(k)) {
            return Err(Error::NotLieElement);
        }
        // P_w = w + larger words, so the smallest word left is the next pivot.
        let mut rest = part;
        while let Some((w, c)) = rest.terms().iter().next().map(|(w, c)| (w.clone(), c.clone())) {
            if !is_lyndon(&w) {
                return Err(Error::NotLieElement);
            }
            rest.add_assign_scaled(&bracket_of_word(a, &w), &-c.clone());
            add_coeff(&mut out.terms, w, &c);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    const H2: Alphabet = Alphabet::Surface(2);

    #[test]
    fn duval_small_cases() {
        assert_eq!(lyndon_words(2, 2), vec![vec![0, 1]]);
        assert_eq!(lyndon_words(4, 3).len(), 20);
        assert_eq!(lyndon_words(4, 1).len(), 4);
        assert_eq!(lyndon_words(2, 3), vec![vec![0, 0, 1], vec![0, 1, 1]]);
    }

    #[test]
    fn standard_factorization_picks_longest_suffix() {
        assert_eq!(standard_factorization(&[0, 0, 1]), Some((&[0u8][..], &[0u8, 1][..])));
        assert_eq!(standard_factorization(&[0, 1, 1]), Some((&[0u8, 1][..], &[1u8][..])));
        assert_eq!(standard_factorization(&[0, 1, 0, 2]), Some((&[0u8, 1][..], &[0u8, 2][..])));
    }

    #[test]
    fn basis_words_are_leading_terms() {
        for w in lyndon_words(4, 4) {
            let t = bracket_of_word(H2, &w);
            let (first, c) = t.terms().iter().next().unwrap();
            assert_eq!(first, &w);
            assert!(c.is_one());
        }
    }

    #[test]
    fn bracket_examples() {
        let a1 = LiePoly::generator(H2, 0);
        let b1 = LiePoly::generator(H2, 2);
        let b2 = LiePoly::generator(H2, 3);
        assert!(a1.bracket(&a1).is_zero());
        assert_eq!(a1.bracket(&b1), LiePoly::basis_element(H2, vec![0, 2]).unwrap());
        let j = &(&a1.bracket(&b1).bracket(&b2) + &b1.bracket(&b2).bracket(&a1)) + &b2.bracket(&a1).bracket(&b1);
        assert!(j.is_zero());
    }

    #[test]
    fn tensor_round_trip_examples() {
        let t = TensorPoly::from_terms(H2, [(vec![0u8, 2], BigInt::one()), (vec![2u8, 0], -BigInt::one())]);
        assert_eq!(tensor_to_lie(&t).unwrap().render(), "[a1,b1]");
        let bad = TensorPoly::monomial(H2, vec![0, 2], BigInt::one());
        assert_eq!(tensor_to_lie(&bad), Err(Error::NotLieElement));
        let x = LiePoly::parse("[[a1,b1],b2]", H2).unwrap();
        assert_eq!(x.to_tensor().len(), 4);
    }

    #[test]
    fn parse_render_round_trip() {
        let x = LiePoly::parse("2*[[a1,b1],b2] - [b2,[a1,b1]] + [a1,a2]", H2).unwrap();
        assert_eq!(LiePoly::parse(&x.render(), H2).unwrap(), x);
        assert_eq!(LiePoly::parse("[b1,a1]", H2).unwrap().render(), "-[a1,b1]");
        assert!(matches!(LiePoly::parse("[a1,b9]", H2), Err(Error::Parse { column: 5, .. })));
    }

    #[test]
    fn witt_values() {
        assert_eq!(witt_dimension(4, 3), BigInt::from(20));
        assert_eq!(witt_dimension(2, 4), BigInt::from(3));
    }
}
