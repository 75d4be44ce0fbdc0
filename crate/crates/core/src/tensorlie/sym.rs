use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::tensor::{add_coeff, render_terms};
use super::Alphabet;
use crate::{Error, Result};

/// Element of the symmetric algebra `S(H)` or `S(H')`, keyed by multidegree.
/// Variable `x_{i+1}` stands for letter `i` of the alphabet.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SymPoly {
    alphabet: Alphabet,
    terms: BTreeMap<Vec<u32>, BigInt>,
}

impl SymPoly {
    pub fn zero(alphabet: Alphabet) -> Self {
        SymPoly { alphabet, terms: BTreeMap::new() }
    }

    pub fn one(alphabet: Alphabet) -> Self {
        Self::from_terms(alphabet, [(vec![0; alphabet.rank()], BigInt::one())])
    }

    pub fn variable(alphabet: Alphabet, i: usize) -> Self {
        let mut e = vec![0; alphabet.rank()];
        e[i] = 1;
        Self::from_terms(alphabet, [(e, BigInt::one())])
    }

    /// Degree-one element with the given integer coordinates.
    pub fn linear(alphabet: Alphabet, v: &[i64]) -> Self {
        let mut p = Self::zero(alphabet);
        for (i, &c) in v.iter().enumerate() {
            p.add_assign_scaled(&Self::variable(alphabet, i), &BigInt::from(c));
        }
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, BigInt)>>(alphabet: Alphabet, it: I) -> Self {
        let mut p = Self::zero(alphabet);
        for (e, c) in it {
            debug_assert_eq!(e.len(), alphabet.rank());
            add_coeff(&mut p.terms, e, &c);
        }
        p
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn terms(&self) -> &BTreeMap<Vec<u32>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(|e| e.iter().sum::<u32>() as usize);
        let d = it.next()?;
        it.all(|x| x == d).then_some(d)
    }

    pub fn add_assign_scaled(&mut self, other: &SymPoly, c: &BigInt) {
        debug_assert_eq!(self.alphabet, other.alphabet);
        for (e, d) in &other.terms {
            add_coeff(&mut self.terms, e.clone(), &(d * c));
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut p = Self::zero(self.alphabet);
        p.add_assign_scaled(self, c);
        p
    }

    pub fn mul(&self, other: &SymPoly) -> Self {
        let mut p = Self::zero(self.alphabet);
        for (e, c) in &self.terms {
            for (f, d) in &other.terms {
                let k = e.iter().zip(f).map(|(x, y)| x + y).collect();
                add_coeff(&mut p.terms, k, &(c * d));
            }
        }
        p
    }

    /// Substitutes `x_j ↦ Σ_i m[i][j] x_i`, i.e. acts by the matrix whose
    /// columns are the images of the variables.
    pub fn act(&self, m: &[Vec<i64>]) -> Self {
        let n = self.alphabet.rank();
        let images: Vec<SymPoly> = (0..n)
            .map(|j| {
                let col: Vec<i64> = (0..n).map(|i| m[i][j]).collect();
                SymPoly::linear(self.alphabet, &col)
            })
            .collect();
        let mut out = SymPoly::zero(self.alphabet);
        for (e, c) in &self.terms {
            let mut acc = SymPoly::one(self.alphabet).scale(c);
            for (j, &k) in e.iter().enumerate() {
                for _ in 0..k {
                    acc = acc.mul(&images[j]);
                }
            }
            out.add_assign_scaled(&acc, &BigInt::one());
        }
        out
    }

    /// Coordinates of a degree-one element; `None` if any other degree occurs.
    pub fn as_linear(&self) -> Option<Vec<BigInt>> {
        let mut v = vec![BigInt::zero(); self.alphabet.rank()];
        for (e, c) in &self.terms {
            if e.iter().sum::<u32>() != 1 {
                return None;
            }
            let i = e.iter().position(|&x| x == 1)?;
            v[i] = c.clone();
        }
        Some(v)
    }

    /// Renders as `3*x1^2*x2 - x3`.
    pub fn render(&self) -> String {
        render_terms(self.terms.iter().rev().map(|(e, c)| {
            let mut s = String::new();
            for (i, &k) in e.iter().enumerate() {
                if k == 0 {
                    continue;
                }
                if !s.is_empty() {
                    s.push('*');
                }
                s.push_str(&format!("x{}", i + 1));
                if k > 1 {
                    s.push_str(&format!("^{k}"));
                }
            }
            (s, c)
        }))
    }

    /// Inverse of [`render`](Self::render).
    pub fn parse(s: &str, alphabet: Alphabet) -> Result<Self> {
        let n = alphabet.rank();
        let mut out = SymPoly::zero(alphabet);
        let bytes = s.as_bytes();
        let mut pos = 0;
        let err = |pos: usize, m: &str| Error::Parse { column: pos + 1, message: m.into() };
        let skip = |pos: &mut usize| {
            while *pos < bytes.len() && bytes[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let mut first = true;
        loop {
            skip(&mut pos);
            if pos >= bytes.len() {
                if first {
                    return Err(err(pos, "empty polynomial"));
                }
                break;
            }
            let mut sign = BigInt::one();
            if bytes[pos] == b'-' || bytes[pos] == b'+' {
                if bytes[pos] == b'-' {
                    sign = -sign;
                }
                pos += 1;
                skip(&mut pos);
            } else if !first {
                return Err(err(pos, "expected `+` or `-`"));
            }
            first = false;
            let mut coeff = BigInt::one();
            let mut e = vec![0u32; n];
            let mut factors = 0;
            loop {
                skip(&mut pos);
                let start = pos;
                if pos < bytes.len() && bytes[pos].is_ascii_digit() {
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let c: BigInt = core::str::from_utf8(&bytes[start..pos])
                        .ok()
                        .and_then(|x| x.parse().ok())
                        .ok_or_else(|| err(start, "bad integer"))?;
                    coeff *= c;
                } else if pos < bytes.len() && bytes[pos] == b'x' {
                    pos += 1;
                    let s0 = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let i: usize = core::str::from_utf8(&bytes[s0..pos])
                        .ok()
                        .and_then(|x| x.parse().ok())
                        .filter(|&i: &usize| i >= 1 && i <= n)
                        .ok_or_else(|| err(start, "bad variable"))?;
                    let mut k = 1u32;
                    if pos < bytes.len() && bytes[pos] == b'^' {
                        pos += 1;
                        let s1 = pos;
                        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                            pos += 1;
                        }
                        k = core::str::from_utf8(&bytes[s1..pos])
                            .ok()
                            .and_then(|x| x.parse().ok())
                            .ok_or_else(|| err(s1, "bad exponent"))?;
                    }
                    e[i - 1] += k;
                } else {
                    return Err(err(pos, "expected a factor"));
                }
                factors += 1;
                skip(&mut pos);
                if pos < bytes.len() && bytes[pos] == b'*' {
                    pos += 1;
                } else {
                    break;
                }
            }
            debug_assert!(factors > 0);
            add_coeff(&mut out.terms, e, &(sign * coeff));
        }
        Ok(out)
    }
}

impl fmt::Display for SymPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl Add for &SymPoly {
    type Output = SymPoly;
    fn add(self, rhs: &SymPoly) -> SymPoly {
        let mut p = self.clone();
        p.add_assign_scaled(rhs, &BigInt::one());
        p
    }
}

impl Sub for &SymPoly {
    type Output = SymPoly;
    fn sub(self, rhs: &SymPoly) -> SymPoly {
        let mut p = self.clone();
        p.add_assign_scaled(rhs, &-BigInt::one());
        p
    }
}

impl Neg for &SymPoly {
    type Output = SymPoly;
    fn neg(self) -> SymPoly {
        self.scale(&-BigInt::one())
    }
}
