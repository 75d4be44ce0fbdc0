use lagtrace_core::derivations::{
    basis_d, basis_g, derivation_to_wedge, is_in_g, lagrangian_trace, morita_trace, rank_of, WedgeTriple,
};
use lagtrace_core::freegroup::MappingClassRep;
use lagtrace_core::groupring::{laurent_det, LaurentElem, Matrix};
use lagtrace_core::johnson::{annulus_twist, johnson_degree, phi_printed, tau, JohnsonDegree};
use lagtrace_core::magnusrep::{additive_form, det_handlebody, handlebody_magnus, magnus_rep};
use lagtrace_core::tensorlie::{witt_dimension, Alphabet, SymPoly};
use lagtrace_core::BigInt;

const HP: Alphabet = Alphabet::Handlebody(2);

fn l(s: &str) -> LaurentElem {
    LaurentElem::parse(s, HP).unwrap()
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

fn witt(n: usize, k: usize) -> usize {
    witt_dimension(n, k).try_into().unwrap()
}

/// `dim D_k(V) = rank(V) * dim L_{k+1}(V) - dim L_{k+2}(V)`, the bracket
/// being onto.
fn dim_d(rank: usize, k: usize) -> usize {
    rank * witt(rank, k + 1) - witt(rank, k + 2)
}

#[test]
fn handlebody_magnus_matrix_of_phi() {
    let phi = annulus_twist(2).unwrap();
    let expected = Matrix::new(vec![vec![l("b2'^-1"), l("0")], vec![l("1 - b1'^-1"), l("1")]]).unwrap();
    assert_eq!(handlebody_magnus(&phi).unwrap(), expected);
    let det = det_handlebody(&phi).unwrap();
    assert_eq!(det, l("b2'^-1"));
    assert_eq!(additive_form(&det), Some(vec![0, -1]));
}

#[test]
fn tau_one_of_phi_is_the_anchor_wedge() {
    let phi = annulus_twist(2).unwrap();
    assert_eq!(johnson_degree(&phi, 3).unwrap(), JohnsonDegree::Degree(1));
    let t1 = tau(&phi, 1).unwrap();
    assert_eq!(derivation_to_wedge(&t1).unwrap(), WedgeTriple::basis(2, 0, 2, 3).unwrap());
    assert!(is_in_g(&t1).unwrap());
    assert_eq!(lagrangian_trace(&t1).unwrap(), SymPoly::linear(HP, &[0, -1]));
}

#[test]
fn printed_variant_has_the_same_handlebody_data() {
    let (phi, printed) = (annulus_twist(2).unwrap(), phi_printed(2).unwrap());
    assert!(phi.fixes_boundary());
    assert!(!printed.fixes_boundary());
    assert_eq!(handlebody_magnus(&printed).unwrap(), handlebody_magnus(&phi).unwrap());
}

#[test]
fn morita_trace_in_degree_one_is_minus_det() {
    // det r^a(phi) = 1 + Tr(bar ||tau_1||) mod I^2 and bar is -1 in degree 1.
    let phi = annulus_twist(2).unwrap();
    let det = laurent_det(&magnus_rep(&phi));
    let e = additive_form(&det).unwrap();
    let tr = morita_trace(&tau(&phi, 1).unwrap()).unwrap();
    let neg: Vec<BigInt> = e.iter().map(|&x| BigInt::from(-x)).collect();
    assert_eq!(tr.as_linear().unwrap(), neg);
    assert!(!tr.is_zero());
}

#[test]
fn identity_has_trivial_data() {
    let id = MappingClassRep::identity(3).unwrap();
    assert_eq!(johnson_degree(&id, 3).unwrap(), JohnsonDegree::Exceeds(3));
    assert!(handlebody_magnus(&id).unwrap().is_identity());
}

#[test]
fn basis_dimensions() {
    for g in 2..=3 {
        let d1 = basis_d(g, 1).unwrap();
        assert_eq!(d1.len(), binomial(2 * g, 3));
        assert_eq!(rank_of(&d1), d1.len());
        // G_1 is the kernel of the onto map Λ³H → Λ³H'.
        assert_eq!(basis_g(g, 1).unwrap().len(), binomial(2 * g, 3) - binomial(g, 3));
    }
    for g in 2..=3 {
        let d2 = basis_d(g, 2).unwrap();
        assert_eq!(d2.len(), dim_d(2 * g, 2));
        assert_eq!(basis_g(g, 2).unwrap().len(), dim_d(2 * g, 2) - dim_d(g, 2));
    }
    assert_eq!(basis_d(2, 3).unwrap().len(), dim_d(4, 3));
}
