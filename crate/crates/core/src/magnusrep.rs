//! Fox matrices, Magnus representations of the mapping class group and the
//! handlebody group, and exact checks of the identities relating them to
//! Johnson homomorphisms and traces.
//!
//! Matrices follow the convention `r(φ)_{ij} = bar(∂φ(γ_j)/∂γ_i)`, so with
//! `compose(φ, ψ) = φ ∘ ψ` the crossed law reads `r(φψ) = r(φ) · φ(r(ψ))`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::One;

use crate::derivations::{contraction_c, derivation_to_wedge, is_in_g, lagrangian_trace, norm_matrix, norm_matrix_a};
use crate::freegroup::{FreeGroupMap, MappingClassRep};
use crate::groupring::{fox_laurent, laurent_det, render_additive, GroupRingElem, LaurentElem, Matrix};
use crate::johnson::tau;
use crate::tensorlie::{fox_expansion, Alphabet, TensorPoly};
use crate::{Error, Result};

/// Outcome of one exact comparison.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Check {
    pub claim: String,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
}

impl Check {
    fn new(claim: impl Into<String>, lhs: String, rhs: String, equal: bool) -> Self {
        Check { claim: claim.into(), lhs, rhs, equal }
    }
}

/// Longest rendering kept verbatim in a [`Check`].
const RENDER_LIMIT: usize = 240;

fn summarize(s: String) -> String {
    if s.chars().count() <= RENDER_LIMIT {
        return s;
    }
    let head: String = s.chars().take(RENDER_LIMIT).collect();
    format!("{head}... ({} chars)", s.chars().count())
}

fn fox_of_map(f: &FreeGroupMap) -> Matrix<GroupRingElem> {
    let n = f.images().len();
    let cols: Vec<GroupRingElem> = f.images().iter().map(GroupRingElem::from_word).collect();
    let rows =
        (0..n).map(|i| (0..n).map(|j| cols[j].fox_derivative(i).expect("index is in range").bar()).collect()).collect();
    Matrix::new(rows).expect("square")
}

fn magnus_of_map(f: &FreeGroupMap) -> Matrix<LaurentElem> {
    let n = f.images().len();
    let rows = (0..n).map(|i| (0..n).map(|j| fox_laurent(f.image(j), i).bar()).collect()).collect();
    Matrix::new(rows).expect("square")
}

/// `r(φ)` over `Z[π]`.
pub fn fox_matrix(m: &MappingClassRep) -> Matrix<GroupRingElem> {
    fox_of_map(m.forward())
}

/// `r^𝔞(φ)` over `Z[H]`.
pub fn magnus_rep(m: &MappingClassRep) -> Matrix<LaurentElem> {
    magnus_of_map(m.forward())
}

/// `r^𝒜(φ)` over `Z[π']`, from the induced automorphism of `π'`.
pub fn handlebody_fox_matrix(m: &MappingClassRep) -> Result<Matrix<GroupRingElem>> {
    Ok(fox_of_map(&m.handlebody_map()?))
}

/// `r^{𝒜,𝔞}(φ)` over `Z[H']`.
pub fn handlebody_magnus(m: &MappingClassRep) -> Result<Matrix<LaurentElem>> {
    Ok(magnus_of_map(&m.handlebody_map()?))
}

/// Applies a group map to every coefficient.
pub fn act_on_matrix(f: &FreeGroupMap, m: &Matrix<GroupRingElem>) -> Result<Matrix<GroupRingElem>> {
    m.try_map(|x| x.apply_map(f))
}

/// `det r^{𝒜,𝔞}(φ)`.
pub fn det_handlebody(m: &MappingClassRep) -> Result<LaurentElem> {
    Ok(laurent_det(&handlebody_magnus(m)?))
}

/// Exponent vector of `x` when `x` is a single monomial with coefficient 1,
/// i.e. `x` read additively as an element of `H` or `H'`.
pub fn additive_form(x: &LaurentElem) -> Option<Vec<i64>> {
    match x.as_group_element() {
        Ok((e, 1)) => Some(e),
        _ => None,
    }
}

fn render_matrix<T: core::fmt::Display>(rows: &[Vec<T>]) -> String {
    let rows: Vec<String> =
        rows.iter().map(|r| r.iter().map(|x| format!("{x}")).collect::<Vec<_>>().join(", ")).collect();
    format!("[{}]", rows.join("; "))
}

fn crossed(
    claim: &str,
    r: impl Fn(&MappingClassRep) -> Result<Matrix<GroupRingElem>>,
    act: &FreeGroupMap,
    m: &MappingClassRep,
    n: &MappingClassRep,
) -> Result<Check> {
    let lhs = r(&m.compose(n)?)?;
    let rhs = r(m)?.mul(&act_on_matrix(act, &r(n)?)?);
    let equal = lhs == rhs;
    Ok(Check::new(claim, summarize(lhs.to_string()), summarize(rhs.to_string()), equal))
}

/// `r^𝒜(φψ) = r^𝒜(φ) · φ(r^𝒜(ψ))` exactly over `Z[π']`.
pub fn crossed_check(m: &MappingClassRep, n: &MappingClassRep) -> Result<Check> {
    crossed("r^A(mn) = r^A(m) (m . r^A(n))", handlebody_fox_matrix, &m.handlebody_map()?, m, n)
}

/// The same law for `r` over `Z[π]`.
pub fn crossed_check_surface(m: &MappingClassRep, n: &MappingClassRep) -> Result<Check> {
    crossed("r(mn) = r(m) (m . r(n))", |x| Ok(fox_matrix(x)), m.forward(), m, n)
}

/// Expansions of `bar(∂f(γ_j)/∂γ_i)`, truncated above degree `k`, straight
/// from the words.
fn expanded_fox(f: &FreeGroupMap, k: usize) -> Vec<Vec<TensorPoly>> {
    let n = f.images().len();
    let cols: Vec<Vec<TensorPoly>> = f.images().iter().map(|w| fox_expansion(w, k, true)).collect();
    (0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect()
}

fn identity_plus_bar(norm: &[Vec<TensorPoly>], alphabet: Alphabet) -> Vec<Vec<TensorPoly>> {
    norm.iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, x)| {
                    let mut e = x.graded_bar();
                    if i == j {
                        e.add_assign_scaled(&TensorPoly::one(alphabet), &BigInt::one());
                    }
                    e
                })
                .collect()
        })
        .collect()
}

/// `r_k(φ) = Id + bar‖τ_k(φ)‖` modulo `I^{k+1}`, for `φ ∈ J_k`.
pub fn truncated_identity_check(m: &MappingClassRep, k: usize) -> Result<Check> {
    let d = tau(m, k)?;
    let lhs = expanded_fox(m.forward(), k);
    let rhs = identity_plus_bar(&norm_matrix(&d), Alphabet::Surface(m.genus()));
    let equal = lhs == rhs;
    Ok(Check::new(
        format!("r_{k}(m) = Id + bar||tau_{k}(m)||"),
        summarize(render_matrix(&lhs)),
        summarize(render_matrix(&rhs)),
        equal,
    ))
}

/// `r^𝒜_k(φ) = Id + bar‖τ_k(φ)‖^A` modulo `I^{k+1}`, for `φ ∈ 𝒜_k`.
pub fn truncated_identity_check_a(m: &MappingClassRep, k: usize) -> Result<Check> {
    let h = m.handlebody_map()?;
    let d = tau(m, k)?;
    let lhs = expanded_fox(&h, k);
    let rhs = identity_plus_bar(&norm_matrix_a(&d)?, Alphabet::Handlebody(m.genus()));
    let equal = lhs == rhs;
    Ok(Check::new(
        format!("r^A_{k}(m) = Id + bar||tau_{k}(m)||^A"),
        summarize(render_matrix(&lhs)),
        summarize(render_matrix(&rhs)),
        equal,
    ))
}

fn render_det(det: &LaurentElem) -> String {
    match additive_form(det) {
        Some(e) => {
            let v: Vec<BigInt> = e.into_iter().map(BigInt::from).collect();
            render_additive(det.alphabet(), &v)
        }
        None => format!("{det} (not a group element)"),
    }
}

/// `det r^{𝒜,𝔞}(φ) = Tr^A_1(τ_1(φ))` in `H'`, for `φ ∈ 𝒜_1`.
pub fn verify_det_trace(m: &MappingClassRep) -> Result<Check> {
    if !m.extends_to_handlebody() {
        return Err(Error::NotInHandlebodyGroup);
    }
    let det = det_handlebody(m)?;
    let tr = lagrangian_trace(&tau(m, 1)?)?;
    let tr_vec = tr.as_linear().expect("degree-1 traces are linear");
    let lhs_vec = additive_form(&det).map(|e| e.into_iter().map(BigInt::from).collect::<Vec<_>>());
    let equal = lhs_vec.as_ref() == Some(&tr_vec);
    Ok(Check::new(
        "det r^{A,a}(m) = Tr^A_1(tau_1(m))",
        render_det(&det),
        render_additive(Alphabet::Handlebody(m.genus()), &tr_vec),
        equal,
    ))
}

/// For `φ ∈ 𝒜_k`, `k ≥ 2`: `τ_k(φ) ∈ 𝒢_k`, `Tr^A_k(τ_k(φ)) = 0` and
/// `det r^{𝒜,𝔞}(φ) = 1`.
pub fn verify_trace_vanishing(m: &MappingClassRep, k: usize) -> Result<Check> {
    if k < 2 {
        return Err(Error::Dimension("the vanishing statement needs k >= 2".into()));
    }
    if !m.extends_to_handlebody() {
        return Err(Error::NotInHandlebodyGroup);
    }
    let d = tau(m, k)?;
    if !is_in_g(&d)? {
        return Err(Error::NotInG);
    }
    let tr = lagrangian_trace(&d)?;
    let det = det_handlebody(m)?;
    let equal = tr.is_zero() && det == LaurentElem::one(det.alphabet());
    Ok(Check::new(
        format!("Tr^A_{k}(tau_{k}(m)) = 0 and det r^{{A,a}}(m) = 1"),
        format!("trace {tr}, det {det}"),
        "trace 0, det 1".into(),
        equal,
    ))
}

/// `det r^𝔞(φ) = 2C(τ_1(φ))` in `H`, for Torelli `φ`.
pub fn verify_morita_proposition(m: &MappingClassRep) -> Result<Check> {
    let det = laurent_det(&magnus_rep(m));
    let c = contraction_c(&derivation_to_wedge(&tau(m, 1)?)?);
    let two_c: Vec<BigInt> = c.iter().map(|x| x * 2).collect();
    let lhs_vec = additive_form(&det).map(|e| e.into_iter().map(BigInt::from).collect::<Vec<_>>());
    let equal = lhs_vec.as_ref() == Some(&two_c);
    Ok(Check::new(
        "det r^a(m) = 2C(tau_1(m))",
        render_det(&det),
        render_additive(Alphabet::Surface(m.genus()), &two_c),
        equal,
    ))
}

/// `[x, y; z, w]` rendering of a Laurent matrix.
pub fn render_laurent_matrix(m: &Matrix<LaurentElem>) -> String {
    render_matrix(m.rows())
}

/// `Id = r(ψ) · ψ(r(ψ⁻¹))` over `Z[π']`.
pub fn inverse_identity_check(m: &MappingClassRep) -> Result<Check> {
    let h = m.handlebody_map()?;
    let prod = handlebody_fox_matrix(m)?.mul(&act_on_matrix(&h, &handlebody_fox_matrix(&m.inverse())?)?);
    let equal = prod.is_identity();
    Ok(Check::new("r^A(m) (m . r^A(m^-1)) = Id", summarize(prod.to_string()), "Id".into(), equal))
}

/// `r^𝔞(mn) = r^𝔞(m) r^𝔞(n)` for Torelli `m`.
pub fn torelli_multiplicativity_check(m: &MappingClassRep, n: &MappingClassRep) -> Result<Check> {
    let lhs = magnus_rep(&m.compose(n)?);
    let rhs = magnus_rep(m).mul(&magnus_rep(n));
    let equal = lhs == rhs;
    Ok(Check::new("r^a(mn) = r^a(m) r^a(n)", summarize(lhs.to_string()), summarize(rhs.to_string()), equal))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freegroup::Ambient;
    use crate::johnson::{annulus_twist, handle_slide, handle_swap, meridian_twist, sample_ak, sample_jk};

    const HP: Alphabet = Alphabet::Handlebody(2);

    fn l(s: &str) -> LaurentElem {
        LaurentElem::parse(s, HP).unwrap()
    }

    #[test]
    fn phi_handlebody_matrix() {
        let phi = annulus_twist(2).unwrap();
        let m = handlebody_magnus(&phi).unwrap();
        let expect =
            Matrix::new(alloc::vec![alloc::vec![l("b2'^-1"), l("0")], alloc::vec![l("1 - b1'^-1"), l("1")],]).unwrap();
        assert_eq!(m, expect);
        let det = det_handlebody(&phi).unwrap();
        assert_eq!(det, l("b2'^-1"));
        assert_eq!(additive_form(&det), Some(alloc::vec![0, -1]));
    }

    #[test]
    fn identity_matrices() {
        let id = MappingClassRep::identity(2).unwrap();
        assert!(fox_matrix(&id).is_identity());
        assert!(handlebody_magnus(&id).unwrap().is_identity());
        let one = GroupRingElem::one(Ambient::Surface, 2);
        assert_eq!(fox_matrix(&id), Matrix::identity(4, &one));
    }

    #[test]
    fn swap_is_signed_permutation() {
        let m = handlebody_magnus(&handle_swap(3, 2).unwrap()).unwrap();
        let a = Alphabet::Handlebody(3);
        let one = LaurentElem::one(a);
        let zero = LaurentElem::zero(a);
        assert_eq!(m.get(1, 2), &one);
        assert_eq!(m.get(2, 1), &one);
        assert_eq!(m.get(0, 0), &one);
        assert_eq!(m.get(1, 1), &zero);
    }

    #[test]
    fn det_trace_on_phi() {
        let c = verify_det_trace(&annulus_twist(2).unwrap()).unwrap();
        assert!(c.equal, "{c:?}");
        assert_eq!(c.lhs, "-b2'");
        assert_eq!(c.rhs, "-b2'");
    }

    #[test]
    fn morita_on_phi() {
        let c = verify_morita_proposition(&annulus_twist(2).unwrap()).unwrap();
        assert!(c.equal, "{c:?}");
        assert_eq!(c.lhs, "-2*b2");
    }

    #[test]
    fn crossed_law_on_library() {
        let m = handle_slide(2).unwrap();
        let n = annulus_twist(2).unwrap();
        assert!(crossed_check(&m, &n).unwrap().equal);
        assert!(crossed_check(&n, &m).unwrap().equal);
        assert!(crossed_check_surface(&meridian_twist(2, 1).unwrap(), &n).unwrap().equal);
        assert!(inverse_identity_check(&m).unwrap().equal);
    }

    #[test]
    fn truncated_identities() {
        let phi = annulus_twist(2).unwrap();
        assert!(truncated_identity_check(&phi, 1).unwrap().equal);
        assert!(truncated_identity_check_a(&phi, 1).unwrap().equal);
        for f in sample_ak(2, 2, 2, 3).unwrap() {
            assert!(truncated_identity_check(&f.rep, 2).unwrap().equal);
            assert!(truncated_identity_check_a(&f.rep, 2).unwrap().equal);
            assert!(verify_trace_vanishing(&f.rep, 2).unwrap().equal);
        }
        for f in sample_jk(2, 1, 2, 3).unwrap() {
            assert!(truncated_identity_check(&f.rep, 1).unwrap().equal);
            assert!(verify_morita_proposition(&f.rep).unwrap().equal);
        }
    }

    #[test]
    fn fox_expansion_matches_group_ring() {
        let phi = annulus_twist(2).unwrap();
        let r = fox_matrix(&phi);
        let e = expanded_fox(phi.forward(), 3);
        for i in 0..4 {
            for j in 0..4 {
                assert_eq!(r.get(i, j).magnus_expand(3), e[i][j]);
            }
        }
    }
}
