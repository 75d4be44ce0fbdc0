//! Sign-convention diagnostic.
//!
//! Three signs are not pinned down by the definitions alone: the sign of the
//! intersection form (`ω(a_i, b_i) = ±1`), the global sign `σ` of the
//! embedding `Λ³H → D_1(H)`, and whether the matrix route to `Tr^A` takes
//! the graded bar of `‖d‖^{A,𝔞}`. [`report`] evaluates every combination on
//! the generator `φ` against four anchors:
//!
//! 1. `τ_1(φ)` equals the image of `a_1 ∧ b_1 ∧ b_2`;
//! 2. both routes to `Tr^A_1(τ_1(φ))` agree;
//! 3. `det r^{𝒜,𝔞}(φ)`, read additively, equals that trace;
//! 4. `det r^𝔞(φ) = 2C(a_1 ∧ b_1 ∧ b_2)`.
//!
//! The library's conventions are the row with `omega_sign = -1`, `sigma = 1`,
//! `route_bar = true`.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::derivations::{
    contraction_c, derivation_from_tensor, norm_matrix_a, tensor_from_derivation, wedge_to_derivation, Derivation,
    TensorForm, WedgeTriple,
};
use crate::groupring::{laurent_det, render_additive};
use crate::johnson::{annulus_twist, tau};
use crate::magnusrep::{additive_form, det_handlebody, magnus_rep};
use crate::tensorlie::{symmetrize, Alphabet, LiePoly, SymPoly, TensorPoly};
use crate::Result;

/// One combination of sign choices and the anchors it satisfies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CalibrationRow {
    /// `ω(a_i, b_i)`.
    pub omega_sign: i8,
    pub sigma: i8,
    pub route_bar: bool,
    pub tau_is_wedge: bool,
    pub routes_agree: bool,
    /// Contraction route value, additive notation in `H'`.
    pub trace: String,
    pub det_is_trace: bool,
    pub morita_holds: bool,
}

impl CalibrationRow {
    pub fn all_hold(&self) -> bool {
        self.tau_is_wedge && self.routes_agree && self.det_is_trace && self.morita_holds
    }
}

fn scale_parts(parts: &[LiePoly], c: i64) -> Vec<LiePoly> {
    parts.iter().map(|p| p.scale(&BigInt::from(c))).collect()
}

/// Derivation with tensor form `t` under `ω(a_i,b_i) = s`. The library form
/// has `s = -1`; flipping `ω` negates the duality.
fn derivation_under(s: i64, genus: usize, parts: &[LiePoly]) -> Result<Derivation> {
    Ok(derivation_from_tensor(&TensorForm::new(genus, 1, scale_parts(parts, -s))?))
}

fn contraction_route(s: i64, d: &Derivation) -> SymPoly {
    let g = d.genus();
    let parts = scale_parts(tensor_from_derivation(d).parts(), -s);
    let mut acc = TensorPoly::zero(Alphabet::Handlebody(g));
    for (i, part) in parts.iter().enumerate().take(g) {
        let lead = part.to_tensor().project_to_handlebody().first_letter_decompose();
        // ω'(a_i, b'_i) = s.
        acc.add_assign_scaled(&lead[i], &BigInt::from(s));
    }
    symmetrize(&acc)
}

fn matrix_route(bar: bool, d: &Derivation) -> Result<SymPoly> {
    let m = norm_matrix_a(d)?;
    let mut t = TensorPoly::zero(Alphabet::Handlebody(d.genus()));
    for (i, row) in m.iter().enumerate() {
        let x = if bar { row[i].graded_bar() } else { row[i].clone() };
        t.add_assign_scaled(&x, &BigInt::one());
    }
    Ok(symmetrize(&t))
}

/// Evaluates all eight sign combinations in genus 2.
pub fn report() -> Result<Vec<CalibrationRow>> {
    let g = 2;
    let phi = annulus_twist(g)?;
    let t1 = tau(&phi, 1)?;
    let wedge = WedgeTriple::basis(g, 0, 2, 3)?;
    // Tensor of a_1 ∧ b_1 ∧ b_2 before any duality is applied.
    let wedge_parts = tensor_from_derivation(&wedge_to_derivation(&wedge)).parts().to_vec();
    let det_a = additive_form(&det_handlebody(&phi)?);
    let det_h = additive_form(&laurent_det(&magnus_rep(&phi)));
    let mut rows = Vec::new();
    for s in [1i64, -1] {
        for sigma in [1i64, -1] {
            let image = derivation_under(s, g, &scale_parts(&wedge_parts, sigma))?;
            let c: Vec<BigInt> = contraction_c(&wedge).iter().map(|x| x * (-s)).collect();
            let two_c: Vec<BigInt> = c.iter().map(|x| x * 2).collect();
            let morita_holds =
                det_h.as_ref().is_some_and(|e| e.iter().map(|&x| BigInt::from(x)).eq(two_c.iter().cloned()));
            for route_bar in [true, false] {
                let tr_i = contraction_route(s, &t1);
                let tr_ii = matrix_route(route_bar, &t1)?;
                let tr_vec = tr_i.as_linear().unwrap_or_else(|| alloc::vec![BigInt::zero(); g]);
                let det_is_trace = tr_i == tr_ii
                    && det_a.as_ref().is_some_and(|e| e.iter().map(|&x| BigInt::from(x)).eq(tr_vec.iter().cloned()));
                rows.push(CalibrationRow {
                    omega_sign: s as i8,
                    sigma: sigma as i8,
                    route_bar,
                    tau_is_wedge: image == t1,
                    routes_agree: tr_i == tr_ii,
                    trace: render_additive(Alphabet::Handlebody(g), &tr_vec),
                    det_is_trace,
                    morita_holds,
                });
            }
        }
    }
    Ok(rows)
}

/// One line per combination.
pub fn render(rows: &[CalibrationRow]) -> String {
    let mut out = String::from("omega(a,b) sigma bar | tau=wedge routes det=Tr morita | Tr^A_1\n");
    let yn = |b: bool| if b { "yes" } else { "no" };
    for r in rows {
        out.push_str(&format!(
            "{:>10} {:>5} {:>3} | {:>9} {:>6} {:>6} {:>6} | {}{}\n",
            r.omega_sign,
            r.sigma,
            yn(r.route_bar),
            yn(r.tau_is_wedge),
            yn(r.routes_agree),
            yn(r.det_is_trace),
            yn(r.morita_holds),
            r.trace,
            if r.all_hold() { "  <- all anchors" } else { "" }
        ));
    }
    out
}
