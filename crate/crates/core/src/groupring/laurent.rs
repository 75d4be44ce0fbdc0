use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::RingElem;
use crate::tensorlie::{Alphabet, SymPoly};
use crate::{Error, Result};

/// Element of `Z[H]` or `Z[H']`, keyed by exponent vectors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct LaurentElem {
    alphabet: Alphabet,
    terms: BTreeMap<Vec<i32>, BigInt>,
}

fn add_coeff(map: &mut BTreeMap<Vec<i32>, BigInt>, key: Vec<i32>, c: &BigInt) {
    crate::tensorlie::tensor_add_coeff(map, key, c)
}

impl LaurentElem {
    pub fn zero(alphabet: Alphabet) -> Self {
        LaurentElem { alphabet, terms: BTreeMap::new() }
    }

    pub fn one(alphabet: Alphabet) -> Self {
        Self::monomial(alphabet, vec![0; alphabet.rank()])
    }

    pub fn monomial(alphabet: Alphabet, exps: Vec<i32>) -> Self {
        debug_assert_eq!(exps.len(), alphabet.rank());
        Self::from_terms(alphabet, [(exps, BigInt::one())])
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<i32>, BigInt)>>(alphabet: Alphabet, it: I) -> Self {
        let mut x = Self::zero(alphabet);
        for (e, c) in it {
            add_coeff(&mut x.terms, e, &c);
        }
        x
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn terms(&self) -> &BTreeMap<Vec<i32>, BigInt> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_assign_scaled(&mut self, other: &LaurentElem, c: &BigInt) {
        debug_assert_eq!(self.alphabet, other.alphabet);
        for (e, d) in &other.terms {
            add_coeff(&mut self.terms, e.clone(), &(d * c));
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut x = Self::zero(self.alphabet);
        x.add_assign_scaled(self, c);
        x
    }

    pub fn mul(&self, other: &LaurentElem) -> Self {
        let mut x = Self::zero(self.alphabet);
        for (e, c) in &self.terms {
            for (f, d) in &other.terms {
                let k = e.iter().zip(f).map(|(a, b)| a + b).collect();
                add_coeff(&mut x.terms, k, &(c * d));
            }
        }
        x
    }

    /// `Σ c_e x^e ↦ Σ c_e x^{-e}`.
    pub fn bar(&self) -> Self {
        Self::from_terms(self.alphabet, self.terms.iter().map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone())))
    }

    /// Sum of coefficients.
    pub fn augmentation(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// `±x^e ↦ (e, ±1)`.
    pub fn as_group_element(&self) -> Result<(Vec<i64>, i8)> {
        if self.terms.len() != 1 {
            return Err(Error::NotMonomial);
        }
        let (e, c) = self.terms.iter().next().expect("one term");
        let sign = if c.is_one() {
            1
        } else if *c == -BigInt::one() {
            -1
        } else {
            return Err(Error::NotMonomial);
        };
        Ok((e.iter().map(|&x| x as i64).collect(), sign))
    }

    /// Acts on exponent vectors by the integer matrix `m` (columns are images
    /// of the basis), i.e. applies the induced automorphism of the group.
    pub fn act(&self, m: &[Vec<i64>]) -> Self {
        let n = self.alphabet.rank();
        Self::from_terms(
            self.alphabet,
            self.terms.iter().map(|(e, c)| {
                let img = (0..n).map(|i| (0..n).map(|j| m[i][j] * e[j] as i64).sum::<i64>() as i32).collect();
                (img, c.clone())
            }),
        )
    }

    /// Class in `I^k/I^{k+1} ≅ S^k`: substitutes `x_i ↦ 1 + x_i` and keeps the
    /// degree-`k` part, after checking that every lower part vanishes.
    pub fn graded_class(&self, k: usize) -> Result<SymPoly> {
        let n = self.alphabet.rank();
        let mut total: BTreeMap<Vec<u32>, BigInt> = BTreeMap::new();
        for (e, c) in &self.terms {
            let mut acc: BTreeMap<Vec<u32>, BigInt> = BTreeMap::from([(vec![0u32; n], c.clone())]);
            for (i, &ei) in e.iter().enumerate() {
                if ei == 0 {
                    continue;
                }
                let series = binomial_series(ei, k);
                let mut next = BTreeMap::new();
                for (m, a) in &acc {
                    let deg: u32 = m.iter().sum();
                    for (j, b) in series.iter().enumerate() {
                        if deg as usize + j > k {
                            break;
                        }
                        let mut m2 = m.clone();
                        m2[i] += j as u32;
                        add_coeff_u(&mut next, m2, &(a * b));
                    }
                }
                acc = next;
            }
            for (m, a) in acc {
                add_coeff_u(&mut total, m, &a);
            }
        }
        if total.keys().any(|m| (m.iter().sum::<u32>() as usize) < k) {
            return Err(Error::NotInFiltration(k));
        }
        Ok(SymPoly::from_terms(self.alphabet, total))
    }

    /// Exact quotient in the Laurent ring; `None` if `d` does not divide.
    pub fn div_exact(&self, d: &LaurentElem) -> Option<LaurentElem> {
        let (d_lead, d_lc) = d.terms.iter().next_back()?;
        let (d_low, _) = d.terms.iter().next()?;
        let mut q = LaurentElem::zero(self.alphabet);
        let Some((x_low, _)) = self.terms.iter().next() else {
            return Some(q);
        };
        // Every quotient monomial m satisfies m + d_low >= x_low.
        let floor: Vec<i32> = x_low.iter().zip(d_low).map(|(a, b)| a - b).collect();
        let mut r = self.clone();
        while let Some((r_lead, r_lc)) = r.terms.iter().next_back() {
            let m: Vec<i32> = r_lead.iter().zip(d_lead).map(|(a, b)| a - b).collect();
            if m < floor {
                return None;
            }
            let (c, rem) = r_lc.div_rem(d_lc);
            if !rem.is_zero() {
                return None;
            }
            let t = LaurentElem::from_terms(self.alphabet, [(m, c)]);
            r.add_assign_scaled(&t.mul(d), &-BigInt::one());
            q.add_assign_scaled(&t, &BigInt::one());
        }
        Some(q)
    }

    /// Monomials as `a1^2*b1'^-1`; constant `1`; zero `0`.
    pub fn render(&self) -> String {
        crate::tensorlie::render_signed_terms(self.terms.iter().rev().map(|(e, c)| (self.render_monomial(e), c)))
    }

    fn render_monomial(&self, e: &[i32]) -> String {
        let mut s = String::new();
        for (i, &x) in e.iter().enumerate() {
            if x == 0 {
                continue;
            }
            if !s.is_empty() {
                s.push('*');
            }
            s.push_str(&laurent_letter(self.alphabet, i));
            if x != 1 {
                s.push_str(&format!("^{x}"));
            }
        }
        s
    }

    /// Inverse of [`render`](Self::render).
    pub fn parse(s: &str, alphabet: Alphabet) -> Result<Self> {
        let n = alphabet.rank();
        let names: Vec<String> = (0..n).map(|i| laurent_letter(alphabet, i)).collect();
        let mut out = LaurentElem::zero(alphabet);
        let b = s.as_bytes();
        let mut pos = 0;
        let err = |pos: usize, m: &str| Error::Parse { column: pos + 1, message: m.into() };
        let ws = |pos: &mut usize| {
            while *pos < b.len() && b[*pos].is_ascii_whitespace() {
                *pos += 1;
            }
        };
        let mut first = true;
        loop {
            ws(&mut pos);
            if pos >= b.len() {
                if first {
                    return Err(err(pos, "empty element"));
                }
                return Ok(out);
            }
            let mut sign = BigInt::one();
            if b[pos] == b'+' || b[pos] == b'-' {
                if b[pos] == b'-' {
                    sign = -sign;
                }
                pos += 1;
            } else if !first {
                return Err(err(pos, "expected `+` or `-`"));
            }
            first = false;
            let mut coeff = BigInt::one();
            let mut e = vec![0i32; n];
            loop {
                ws(&mut pos);
                let start = pos;
                if pos < b.len() && b[pos].is_ascii_digit() {
                    while pos < b.len() && b[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    let c: BigInt = core::str::from_utf8(&b[start..pos])
                        .ok()
                        .and_then(|x| x.parse().ok())
                        .ok_or_else(|| err(start, "bad integer"))?;
                    coeff *= c;
                } else {
                    while pos < b.len() && (b[pos].is_ascii_alphanumeric() || b[pos] == b'\'') {
                        pos += 1;
                    }
                    let tok = core::str::from_utf8(&b[start..pos]).unwrap_or("");
                    let i = names.iter().position(|x| x == tok).ok_or_else(|| err(start, "unknown generator"))?;
                    let mut k = 1i32;
                    if pos < b.len() && b[pos] == b'^' {
                        pos += 1;
                        let s1 = pos;
                        if pos < b.len() && b[pos] == b'-' {
                            pos += 1;
                        }
                        while pos < b.len() && b[pos].is_ascii_digit() {
                            pos += 1;
                        }
                        k = core::str::from_utf8(&b[s1..pos])
                            .ok()
                            .and_then(|x| x.parse().ok())
                            .ok_or_else(|| err(s1, "bad exponent"))?;
                    }
                    e[i] += k;
                }
                ws(&mut pos);
                if pos < b.len() && b[pos] == b'*' {
                    pos += 1;
                } else {
                    break;
                }
            }
            add_coeff(&mut out.terms, e, &(sign * coeff));
        }
    }
}

/// An element of `H` or `H'` in additive notation, e.g. `2*a1 - b2'`.
pub fn render_additive(alphabet: Alphabet, v: &[BigInt]) -> String {
    crate::tensorlie::render_signed_terms(
        v.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(i, c)| (laurent_letter(alphabet, i), c)),
    )
}

fn laurent_letter(alphabet: Alphabet, i: usize) -> String {
    match alphabet {
        Alphabet::Surface(g) if i < g => format!("a{}", i + 1),
        Alphabet::Surface(g) => format!("b{}", i - g + 1),
        Alphabet::Handlebody(_) => format!("b{}'", i + 1),
    }
}

fn add_coeff_u(map: &mut BTreeMap<Vec<u32>, BigInt>, key: Vec<u32>, c: &BigInt) {
    crate::tensorlie::tensor_add_coeff(map, key, c)
}

/// Coefficients of `(1+x)^e` up to `x^k`, for any integer `e`.
fn binomial_series(e: i32, k: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(k + 1);
    let mut c = BigInt::one();
    out.push(c.clone());
    for m in 1..=k {
        c = c * BigInt::from(e - (m as i32 - 1)) / BigInt::from(m);
        out.push(c.clone());
    }
    out
}

impl fmt::Display for LaurentElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl RingElem for LaurentElem {
    fn zero_like(&self) -> Self {
        LaurentElem::zero(self.alphabet)
    }
    fn one_like(&self) -> Self {
        LaurentElem::one(self.alphabet)
    }
    fn add(&self, other: &Self) -> Self {
        let mut x = self.clone();
        x.add_assign_scaled(other, &BigInt::one());
        x
    }
    fn sub(&self, other: &Self) -> Self {
        let mut x = self.clone();
        x.add_assign_scaled(other, &-BigInt::one());
        x
    }
    fn mul(&self, other: &Self) -> Self {
        LaurentElem::mul(self, other)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const HP: Alphabet = Alphabet::Handlebody(2);

    fn p(s: &str) -> LaurentElem {
        LaurentElem::parse(s, HP).unwrap()
    }

    #[test]
    fn as_group_element_examples() {
        assert_eq!(p("b2'^-1").as_group_element().unwrap(), (vec![0, -1], 1));
        assert_eq!(p("1").as_group_element().unwrap(), (vec![0, 0], 1));
        assert_eq!(p("1 + b1'").as_group_element(), Err(Error::NotMonomial));
    }

    #[test]
    fn graded_class_examples() {
        let x1 = SymPoly::variable(HP, 0);
        let x2 = SymPoly::variable(HP, 1);
        assert_eq!(p("b1' - 1").graded_class(1).unwrap(), x1);
        assert_eq!(p("b2'^-1 - 1").graded_class(1).unwrap(), -&x2);
        let prod = p("b1' - 1").mul(&p("b2' - 1"));
        assert_eq!(prod.graded_class(2).unwrap(), x1.mul(&x2));
        assert_eq!(p("b1'").graded_class(1), Err(Error::NotInFiltration(1)));
    }

    #[test]
    fn bar_and_arith() {
        let x = p("1 - b1'");
        let y = p("1 + b1'");
        assert_eq!(x.mul(&y), p("1 - b1'^2"));
        assert_eq!(x.bar(), p("1 - b1'^-1"));
        assert_eq!(p("3*b1' - 2*b2'").augmentation(), BigInt::one());
    }

    #[test]
    fn render_round_trip() {
        let x = p("1 - b1'^-1 + 4*b1'^2*b2'^-3");
        assert_eq!(p(&x.render()), x);
        assert_eq!(p("1 - b1'^-1").render(), "1 - b1'^-1");
    }

    #[test]
    fn exact_division() {
        let a = p("1 - b1'^-1 + b2'");
        let b = p("b1'^2 - 3*b2'^-1");
        assert_eq!(a.mul(&b).div_exact(&b), Some(a.clone()));
        assert_eq!(p("1 + b1'").div_exact(&p("1 - b1'")), None);
    }
}
