//! Symplectic derivations `D_k(H)`, the subspaces `𝒢_k`, Morita's trace and
//! the Lagrangian traces, plus integer bases of `D_k` and `𝒢_k`.
//!
//! A degree-`k` derivation is stored by its values on the letters of `H`.
//! Its tensor form in `H ⊗ L_{k+1}(H)` uses the duality `x ↦ ω(x, -)`:
//! `Σ x ⊗ ℓ_x` corresponds to `d(y) = Σ ω(x, y) ℓ_x`. With
//! `ω(b_i, a_i) = 1` this means `ℓ_{a_i} = -d(b_i)` and `ℓ_{b_i} = d(a_i)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::tensorlie::{
    last_letter_decompose, lyndon_words, symmetrize, tensor_to_lie, Alphabet, LiePoly, SymPoly, TensorPoly,
};
use crate::{check_genus, Error, Result};

mod lattice;

/// The intersection pairing on `H` and its restriction `ω' : A ⊗ H' → Z`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymplecticForm {
    genus: usize,
}

impl SymplecticForm {
    pub fn new(genus: usize) -> Result<Self> {
        check_genus(genus)?;
        Ok(SymplecticForm { genus })
    }

    /// `ω(x, y)` on letter positions: `ω(b_i, a_i) = 1 = -ω(a_i, b_i)`.
    pub fn omega(&self, x: usize, y: usize) -> i64 {
        let g = self.genus;
        if x < g && y == x + g {
            -1
        } else if x >= g && y + g == x {
            1
        } else {
            0
        }
    }

    /// `ω'(a_i, b'_j) = ω(a_i, b_j)`.
    pub fn omega_prime(&self, a: usize, b_prime: usize) -> i64 {
        self.omega(a, b_prime + self.genus)
    }

    /// Gram matrix `J[x][y] = ω(x, y)`.
    pub fn matrix(&self) -> Vec<Vec<i64>> {
        let n = 2 * self.genus;
        (0..n).map(|x| (0..n).map(|y| self.omega(x, y)).collect()).collect()
    }

    /// Whether `mᵀ J m = J`.
    pub fn preserved_by(&self, m: &[Vec<i64>]) -> bool {
        let n = 2 * self.genus;
        if m.len() != n || m.iter().any(|r| r.len() != n) {
            return false;
        }
        (0..n).all(|p| {
            (0..n).all(|q| {
                let mut s = 0i128;
                for x in 0..n {
                    for y in 0..n {
                        s += m[x][p] as i128 * self.omega(x, y) as i128 * m[y][q] as i128;
                    }
                }
                s == self.omega(p, q) as i128
            })
        })
    }
}

/// A degree-`k` derivation of `L(H)`, by its values on `a_1..a_g, b_1..b_g`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Derivation {
    genus: usize,
    degree: usize,
    values: Vec<LiePoly>,
}

fn check_value(genus: usize, degree: usize, v: &LiePoly) -> Result<()> {
    if v.alphabet() != Alphabet::Surface(genus) {
        return Err(Error::AmbientMismatch("derivation value over the wrong alphabet".into()));
    }
    if !v.is_zero() && v.degree() != Some(degree + 1) {
        return Err(Error::Dimension(format!("value {v} is not of degree {}", degree + 1)));
    }
    Ok(())
}

impl Derivation {
    pub fn new(genus: usize, degree: usize, values: Vec<LiePoly>) -> Result<Self> {
        check_genus(genus)?;
        if degree == 0 {
            return Err(Error::Dimension("derivations have degree at least 1".into()));
        }
        if values.len() != 2 * genus {
            return Err(Error::Dimension(format!("expected {} values", 2 * genus)));
        }
        for v in &values {
            check_value(genus, degree, v)?;
        }
        Ok(Derivation { genus, degree, values })
    }

    pub fn zero(genus: usize, degree: usize) -> Result<Self> {
        Self::new(genus, degree, vec![LiePoly::zero(Alphabet::Surface(genus)); 2 * genus])
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn values(&self) -> &[LiePoly] {
        &self.values
    }

    pub fn value(&self, pos: usize) -> &LiePoly {
        &self.values[pos]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(LiePoly::is_zero)
    }

    pub fn add_assign_scaled(&mut self, other: &Derivation, c: &BigInt) {
        debug_assert_eq!((self.genus, self.degree), (other.genus, other.degree));
        for (v, w) in self.values.iter_mut().zip(&other.values) {
            v.add_assign_scaled(w, c);
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Derivation { genus: self.genus, degree: self.degree, values: self.values.iter().map(|v| v.scale(c)).collect() }
    }

    pub fn add(&self, other: &Derivation) -> Result<Self> {
        if (self.genus, self.degree) != (other.genus, other.degree) {
            return Err(Error::Dimension("adding derivations of different shape".into()));
        }
        let mut d = self.clone();
        d.add_assign_scaled(other, &BigInt::one());
        Ok(d)
    }

    pub fn sub(&self, other: &Derivation) -> Result<Self> {
        self.add(&other.scale(&-BigInt::one()))
    }

    /// Extends to `T(H)` by the Leibniz rule.
    pub fn apply_tensor(&self, t: &TensorPoly) -> TensorPoly {
        let a = Alphabet::Surface(self.genus);
        let vals: Vec<TensorPoly> = self.values.iter().map(LiePoly::to_tensor).collect();
        let mut out = TensorPoly::zero(a);
        for (w, c) in t.terms() {
            for p in 0..w.len() {
                let left = TensorPoly::monomial(a, w[..p].to_vec(), c.clone());
                let right = TensorPoly::monomial(a, w[p + 1..].to_vec(), BigInt::one());
                out.add_assign_scaled(&left.mul(&vals[w[p] as usize]).mul(&right), &BigInt::one());
            }
        }
        out
    }

    /// Extends to `L(H)` by the Leibniz rule.
    pub fn apply_lie(&self, p: &LiePoly) -> LiePoly {
        tensor_to_lie(&self.apply_tensor(&p.to_tensor())).expect("derivations preserve Lie elements")
    }

    /// `ψ·d = ψ ∘ d ∘ ψ⁻¹` for `ψ` acting on `H` by `m` (columns are images of
    /// the basis) with inverse `m_inv`.
    pub fn act(&self, m: &[Vec<i64>], m_inv: &[Vec<i64>]) -> Derivation {
        let n = 2 * self.genus;
        let a = Alphabet::Surface(self.genus);
        let images: Vec<Vec<BigInt>> = (0..n).map(|l| (0..n).map(|i| BigInt::from(m[i][l])).collect()).collect();
        let values = (0..n)
            .map(|y| {
                let mut v = LiePoly::zero(a);
                for x in 0..n {
                    if m_inv[x][y] != 0 {
                        v.add_assign_scaled(&self.values[x], &BigInt::from(m_inv[x][y]));
                    }
                }
                v.substitute_linear(a, &images)
            })
            .collect();
        Derivation { genus: self.genus, degree: self.degree, values }
    }

    /// `x -> ℓ` lines, one per generator.
    pub fn render(&self) -> String {
        let a = Alphabet::Surface(self.genus);
        let mut s = String::new();
        for (i, v) in self.values.iter().enumerate() {
            s.push_str(&format!("{} -> {}\n", a.letter_name(i), v));
        }
        s
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// Element `Σ_x x ⊗ parts[x]` of `H ⊗ L_{k+1}(H)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TensorForm {
    genus: usize,
    degree: usize,
    parts: Vec<LiePoly>,
}

impl TensorForm {
    pub fn new(genus: usize, degree: usize, parts: Vec<LiePoly>) -> Result<Self> {
        check_genus(genus)?;
        if parts.len() != 2 * genus {
            return Err(Error::Dimension(format!("expected {} parts", 2 * genus)));
        }
        for v in &parts {
            check_value(genus, degree, v)?;
        }
        Ok(TensorForm { genus, degree, parts })
    }

    pub fn parts(&self) -> &[LiePoly] {
        &self.parts
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// `Σ_x [x, parts[x]]` as a tensor.
    pub fn bracket_image(&self) -> TensorPoly {
        let a = Alphabet::Surface(self.genus);
        let mut t = TensorPoly::zero(a);
        for (x, p) in self.parts.iter().enumerate() {
            t.add_assign_scaled(&TensorPoly::letter(a, x).bracket(&p.to_tensor()), &BigInt::one());
        }
        t
    }
}

pub fn tensor_from_derivation(d: &Derivation) -> TensorForm {
    let g = d.genus;
    let mut parts = Vec::with_capacity(2 * g);
    for i in 0..g {
        parts.push(-&d.values[g + i]);
    }
    for i in 0..g {
        parts.push(d.values[i].clone());
    }
    TensorForm { genus: g, degree: d.degree, parts }
}

pub fn derivation_from_tensor(t: &TensorForm) -> Derivation {
    let w = SymplecticForm { genus: t.genus };
    let n = 2 * t.genus;
    let values = (0..n)
        .map(|y| {
            let mut v = LiePoly::zero(Alphabet::Surface(t.genus));
            for x in 0..n {
                let o = w.omega(x, y);
                if o != 0 {
                    v.add_assign_scaled(&t.parts[x], &BigInt::from(o));
                }
            }
            v
        })
        .collect();
    Derivation { genus: t.genus, degree: t.degree, values }
}

/// Whether `Σ_x [x, ℓ_x] = 0`.
pub fn is_symplectic(t: &TensorForm) -> bool {
    t.bracket_image().is_zero()
}

pub fn derivation_is_symplectic(d: &Derivation) -> bool {
    is_symplectic(&tensor_from_derivation(d))
}

/// Whether `d` lies in `𝒢_k`, the kernel of the projection to
/// `H' ⊗ L_{k+1}(H')`. The projected tensor form is `Σ b'_i ⊗ p(d(a_i))`.
pub fn is_in_g(d: &Derivation) -> Result<bool> {
    if !derivation_is_symplectic(d) {
        return Err(Error::NotSymplectic);
    }
    Ok(d.values[..d.genus].iter().all(|v| v.project_to_handlebody().is_zero()))
}

/// Integer combination of basis wedges `e_i ∧ e_j ∧ e_l`, `i < j < l`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct WedgeTriple {
    genus: usize,
    terms: BTreeMap<[u8; 3], BigInt>,
}

impl WedgeTriple {
    pub fn zero(genus: usize) -> Result<Self> {
        check_genus(genus)?;
        Ok(WedgeTriple { genus, terms: BTreeMap::new() })
    }

    /// `x ∧ y ∧ z` for letter positions in any order.
    pub fn basis(genus: usize, x: usize, y: usize, z: usize) -> Result<Self> {
        let mut w = Self::zero(genus)?;
        if x.max(y).max(z) >= 2 * genus {
            return Err(Error::InvalidGenerator(format!("letter out of range for genus {genus}")));
        }
        if x == y || y == z || x == z {
            return Ok(w);
        }
        let mut v = [x as u8, y as u8, z as u8];
        let mut sign = 1;
        for i in 0..3 {
            for j in 0..2 - i {
                if v[j] > v[j + 1] {
                    v.swap(j, j + 1);
                    sign = -sign;
                }
            }
        }
        w.terms.insert(v, BigInt::from(sign));
        Ok(w)
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn terms(&self) -> &BTreeMap<[u8; 3], BigInt> {
        &self.terms
    }

    pub fn add_assign_scaled(&mut self, other: &WedgeTriple, c: &BigInt) {
        for (k, d) in &other.terms {
            crate::tensorlie::tensor_add_coeff(&mut self.terms, *k, &(d * c));
        }
    }

    /// `2*a1^b1^b2 - a1^a2^b2`.
    pub fn render(&self) -> String {
        let a = Alphabet::Surface(self.genus);
        crate::tensorlie::render_signed_terms(self.terms.iter().map(|(k, c)| {
            let s = format!(
                "{}^{}^{}",
                a.letter_name(k[0] as usize),
                a.letter_name(k[1] as usize),
                a.letter_name(k[2] as usize)
            );
            (s, c)
        }))
    }
}

impl fmt::Display for WedgeTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// `e_i ∧ e_j ∧ e_l ↦ e_i ⊗ [e_j,e_l] + e_j ⊗ [e_l,e_i] + e_l ⊗ [e_i,e_j]`,
/// read back as a derivation.
pub fn wedge_to_derivation(w: &WedgeTriple) -> Derivation {
    let g = w.genus;
    let a = Alphabet::Surface(g);
    let mut parts = vec![LiePoly::zero(a); 2 * g];
    let gen = |i: u8| LiePoly::generator(a, i as usize);
    for (k, c) in &w.terms {
        let [i, j, l] = *k;
        parts[i as usize].add_assign_scaled(&gen(j).bracket(&gen(l)), c);
        parts[j as usize].add_assign_scaled(&gen(l).bracket(&gen(i)), c);
        parts[l as usize].add_assign_scaled(&gen(i).bracket(&gen(j)), c);
    }
    derivation_from_tensor(&TensorForm { genus: g, degree: 1, parts })
}

/// Inverse of [`wedge_to_derivation`] on `D_1(H) ≅ Λ³H`.
pub fn derivation_to_wedge(d: &Derivation) -> Result<WedgeTriple> {
    if d.degree != 1 {
        return Err(Error::Dimension("only degree-1 derivations are wedges".into()));
    }
    let t = tensor_from_derivation(d);
    let mut w = WedgeTriple::zero(d.genus)?;
    for (i, p) in t.parts.iter().enumerate() {
        for (word, c) in p.terms() {
            if (i as u8) < word[0] {
                w.terms.insert([i as u8, word[0], word[1]], c.clone());
            }
        }
    }
    if wedge_to_derivation(&w) != *d {
        return Err(Error::NotSymplectic);
    }
    Ok(w)
}

/// `a ∧ b ∧ c ↦ ω(a,b)c + ω(b,c)a + ω(c,a)b`, as a coordinate vector on `H`.
pub fn contraction_c(w: &WedgeTriple) -> Vec<BigInt> {
    let form = SymplecticForm { genus: w.genus };
    let mut v = vec![BigInt::zero(); 2 * w.genus];
    for (k, c) in &w.terms {
        let [x, y, z] = k.map(|t| t as usize);
        v[z] += c * form.omega(x, y);
        v[x] += c * form.omega(y, z);
        v[y] += c * form.omega(z, x);
    }
    v
}

/// The graded Fox matrix: entry `(i, j)` is the coefficient of the trailing
/// letter `i` in `d(γ_j)`.
pub fn norm_matrix(d: &Derivation) -> Vec<Vec<TensorPoly>> {
    let n = 2 * d.genus;
    let cols: Vec<Vec<TensorPoly>> = d.values.iter().map(|v| last_letter_decompose(&v.to_tensor())).collect();
    (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect()
}

/// The `g × g` handlebody block over `T_k(H')`.
pub fn norm_matrix_a(d: &Derivation) -> Result<Vec<Vec<TensorPoly>>> {
    if !is_in_g(d)? {
        return Err(Error::NotInG);
    }
    let g = d.genus;
    let cols: Vec<Vec<TensorPoly>> =
        d.values[g..].iter().map(|v| last_letter_decompose(&v.to_tensor().project_to_handlebody())).collect();
    Ok((0..g).map(|i| (0..g).map(|j| cols[j][i].clone()).collect()).collect())
}

/// Symmetrised abelian trace of [`norm_matrix`].
pub fn morita_trace(d: &Derivation) -> Result<SymPoly> {
    if !derivation_is_symplectic(d) {
        return Err(Error::NotSymplectic);
    }
    let a = Alphabet::Surface(d.genus);
    let mut t = TensorPoly::zero(a);
    for (i, v) in d.values.iter().enumerate() {
        t.add_assign_scaled(&last_letter_decompose(&v.to_tensor())[i], &BigInt::one());
    }
    Ok(symmetrize(&t))
}

/// Route (i): project the tensor form into `A ⊗ T_{k+1}(H')`, contract the
/// first two factors with `ω'`, symmetrise.
pub fn lagrangian_trace_contraction(d: &Derivation) -> Result<SymPoly> {
    if !is_in_g(d)? {
        return Err(Error::NotInG);
    }
    let g = d.genus;
    let form = SymplecticForm { genus: g };
    let t = tensor_from_derivation(d);
    let mut acc = TensorPoly::zero(Alphabet::Handlebody(g));
    for i in 0..g {
        let lead = t.parts[i].to_tensor().project_to_handlebody().first_letter_decompose();
        for (j, rest) in lead.iter().enumerate() {
            let o = form.omega_prime(i, j);
            if o != 0 {
                acc.add_assign_scaled(rest, &BigInt::from(o));
            }
        }
    }
    Ok(symmetrize(&acc))
}

/// Route (ii): trace of the graded bar of `‖d‖^{A,𝔞}`, i.e. `(-1)^k` times
/// the symmetrised trace of [`norm_matrix_a`].
pub fn lagrangian_trace_matrix(d: &Derivation) -> Result<SymPoly> {
    let m = norm_matrix_a(d)?;
    let mut t = TensorPoly::zero(Alphabet::Handlebody(d.genus));
    for (i, row) in m.iter().enumerate() {
        t.add_assign_scaled(&row[i].graded_bar(), &BigInt::one());
    }
    Ok(symmetrize(&t))
}

/// `Tr^A_k(d)`, computed by both routes; they must agree.
pub fn lagrangian_trace(d: &Derivation) -> Result<SymPoly> {
    let a = lagrangian_trace_contraction(d)?;
    let b = lagrangian_trace_matrix(d)?;
    if a != b {
        return Err(Error::RouteMismatch);
    }
    Ok(a)
}

/// `[d, e](γ) = d(e(γ)) - e(d(γ))`.
pub fn derivation_bracket(d: &Derivation, e: &Derivation) -> Result<Derivation> {
    if d.genus != e.genus {
        return Err(Error::Dimension("bracket of derivations of different genus".into()));
    }
    let values = d.values.iter().zip(&e.values).map(|(dv, ev)| &d.apply_lie(ev) - &e.apply_lie(dv)).collect();
    Ok(Derivation { genus: d.genus, degree: d.degree + e.degree, values })
}

/// Coordinates of `H ⊗ L_{k+1}(H)`: pairs (letter, Lyndon word).
fn tensor_coordinates(genus: usize, k: usize) -> Vec<(usize, Vec<u8>)> {
    let n = 2 * genus;
    let words = lyndon_words(n, k + 1);
    (0..n).flat_map(|x| words.iter().map(move |w| (x, w.clone()))).collect()
}

/// Largest number of unknowns the basis computations accept.
pub const BASIS_BUDGET: usize = 4000;

fn kernel_basis(genus: usize, k: usize, with_g: bool) -> Result<Vec<Derivation>> {
    check_genus(genus)?;
    if k == 0 {
        return Err(Error::Dimension("degree must be at least 1".into()));
    }
    let a = Alphabet::Surface(genus);
    let coords = tensor_coordinates(genus, k);
    if coords.len() > BASIS_BUDGET {
        return Err(Error::BudgetExceeded(format!(
            "{} unknowns exceed the basis budget of {BASIS_BUDGET}",
            coords.len()
        )));
    }
    let target: BTreeMap<Vec<u8>, usize> =
        lyndon_words(2 * genus, k + 2).into_iter().enumerate().map(|(i, w)| (w, i)).collect();
    let mut rows = vec![vec![BigInt::zero(); coords.len()]; target.len()];
    for (c, (x, w)) in coords.iter().enumerate() {
        let p = LiePoly::basis_element(a, w.clone())?;
        let img = LiePoly::generator(a, *x).bracket(&p);
        for (u, coeff) in img.terms() {
            rows[target[u]][c] = coeff.clone();
        }
    }
    if with_g {
        // Projection to H' ⊗ L_{k+1}(H') sends (b_i, all-b word) to a
        // distinct coordinate and everything else to zero.
        for (c, (x, w)) in coords.iter().enumerate() {
            if *x >= genus && w.iter().all(|&l| l as usize >= genus) {
                let mut row = vec![BigInt::zero(); coords.len()];
                row[c] = BigInt::one();
                rows.push(row);
            }
        }
    }
    let kernel = lattice::integer_kernel(&rows, coords.len());
    kernel
        .into_iter()
        .map(|v| {
            let mut parts = vec![LiePoly::zero(a); 2 * genus];
            for (c, coeff) in v.iter().enumerate() {
                if !coeff.is_zero() {
                    let (x, w) = &coords[c];
                    parts[*x].add_assign_scaled(&LiePoly::basis_element(a, w.clone())?, coeff);
                }
            }
            Ok(derivation_from_tensor(&TensorForm { genus, degree: k, parts }))
        })
        .collect()
}

/// Integer basis of `D_k(H)` in Hermite normal form on tensor coordinates.
pub fn basis_d(genus: usize, k: usize) -> Result<Vec<Derivation>> {
    kernel_basis(genus, k, false)
}

/// Integer basis of `𝒢_k`.
pub fn basis_g(genus: usize, k: usize) -> Result<Vec<Derivation>> {
    kernel_basis(genus, k, true)
}

/// Coordinates of a derivation in `H ⊗ L_{k+1}(H)`, in the order used by
/// [`basis_d`].
pub fn tensor_coordinates_of(d: &Derivation) -> Vec<BigInt> {
    let t = tensor_from_derivation(d);
    tensor_coordinates(d.genus, d.degree).iter().map(|(x, w)| t.parts[*x].coeff(w)).collect()
}

/// Rank over `Q` of a family of derivations of one shape.
pub fn rank_of(ds: &[Derivation]) -> usize {
    lattice::rank(&ds.iter().map(tensor_coordinates_of).collect::<Vec<_>>())
}

#[cfg(test)]
mod tests {
    use super::*;

    const G: usize = 2;
    const H2: Alphabet = Alphabet::Surface(G);

    fn lie(s: &str) -> LiePoly {
        LiePoly::parse(s, H2).unwrap()
    }

    fn a1b1b2() -> Derivation {
        wedge_to_derivation(&WedgeTriple::basis(G, 0, 2, 3).unwrap())
    }

    #[test]
    fn tensor_conventions() {
        let mut vals = vec![LiePoly::zero(H2); 4];
        vals[2] = lie("[a1,b2]");
        let d = Derivation::new(G, 1, vals).unwrap();
        let t = tensor_from_derivation(&d);
        assert_eq!(t.parts[0], lie("-[a1,b2]"));
        assert!(t.parts[1..].iter().all(LiePoly::is_zero));
        assert_eq!(derivation_from_tensor(&t), d);
        let mut parts = vec![LiePoly::zero(H2); 4];
        parts[2] = lie("[a1,b2]");
        let d = derivation_from_tensor(&TensorForm::new(G, 1, parts).unwrap());
        assert_eq!(d.values[0], lie("[a1,b2]"));
    }

    #[test]
    fn symplectic_examples() {
        assert!(derivation_is_symplectic(&a1b1b2()));
        let mut parts = vec![LiePoly::zero(H2); 4];
        parts[0] = lie("[a2,b2]");
        assert!(!is_symplectic(&TensorForm::new(G, 1, parts).unwrap()));
        assert!(derivation_is_symplectic(&Derivation::zero(G, 3).unwrap()));
    }

    #[test]
    fn wedge_values() {
        let d = a1b1b2();
        assert_eq!(d.values[0], lie("[b2,a1]"));
        assert_eq!(d.values[1], lie("[a1,b1]"));
        assert_eq!(d.values[2], lie("[b2,b1]"));
        assert!(d.values[3].is_zero());
        assert_eq!(derivation_to_wedge(&d).unwrap(), WedgeTriple::basis(G, 0, 2, 3).unwrap());
        assert!(is_in_g(&d).unwrap());
    }

    #[test]
    fn contraction_examples() {
        let b = |x, y, z| contraction_c(&WedgeTriple::basis(3, x, y, z).unwrap());
        let e = |i: usize, c: i64| {
            let mut v = vec![BigInt::zero(); 6];
            v[i] = BigInt::from(c);
            v
        };
        assert_eq!(b(0, 3, 4), e(4, -1));
        assert_eq!(b(0, 1, 4), e(0, -1));
        assert_eq!(b(0, 1, 2), vec![BigInt::zero(); 6]);
    }

    #[test]
    fn traces_of_the_anchor_wedge() {
        let d = a1b1b2();
        let x2 = SymPoly::variable(Alphabet::Handlebody(G), 1);
        assert_eq!(lagrangian_trace(&d).unwrap(), -&x2);
        let y2 = SymPoly::variable(H2, 3);
        assert_eq!(morita_trace(&d).unwrap(), y2.scale(&BigInt::from(2)));
        let m = norm_matrix_a(&d).unwrap();
        assert_eq!(m[0][0].render(), "B2");
        assert_eq!(m[1][0].render(), "-B1");
        assert!(m[0][1].is_zero() && m[1][1].is_zero());
    }

    #[test]
    fn zero_derivation() {
        let z = Derivation::zero(G, 2).unwrap();
        assert!(lagrangian_trace(&z).unwrap().is_zero());
        assert!(morita_trace(&z).unwrap().is_zero());
        assert!(norm_matrix(&z).iter().flatten().all(TensorPoly::is_zero));
    }

    #[test]
    fn bracket_antisymmetry() {
        let d = a1b1b2();
        let e = wedge_to_derivation(&WedgeTriple::basis(G, 1, 2, 3).unwrap());
        assert!(derivation_bracket(&d, &d).unwrap().is_zero());
        let de = derivation_bracket(&d, &e).unwrap();
        let ed = derivation_bracket(&e, &d).unwrap();
        assert_eq!(de, ed.scale(&-BigInt::one()));
        assert!(derivation_is_symplectic(&de));
    }

    #[test]
    fn basis_d_rank() {
        let b = basis_d(2, 1).unwrap();
        assert_eq!(b.len(), 4);
        assert!(b.iter().all(derivation_is_symplectic));
    }

    #[test]
    fn not_in_g_example() {
        assert!(is_in_g(&wedge_to_derivation(&WedgeTriple::basis(G, 1, 2, 3).unwrap())).unwrap());
        let d = wedge_to_derivation(&WedgeTriple::basis(3, 3, 4, 5).unwrap());
        assert_eq!(d.values[0], LiePoly::parse("[b2,b3]", Alphabet::Surface(3)).unwrap());
        assert!(!is_in_g(&d).unwrap());
        assert_eq!(lagrangian_trace(&d), Err(Error::NotInG));
    }
}
