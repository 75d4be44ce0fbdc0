//! Named verification suites behind `lagtrace verify`.
//!
//! Every case is an exact comparison; a suite passes only when it ran at
//! least one case and every case compared equal.

use std::time::Instant;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lagtrace_core::calibration;
use lagtrace_core::derivations::{
    basis_g, derivation_bracket, is_in_g, lagrangian_trace, lagrangian_trace_contraction, lagrangian_trace_matrix,
    morita_trace, Derivation,
};
use lagtrace_core::freegroup::MappingClassRep;
use lagtrace_core::johnson::{
    annulus_twist, handlebody_sample_library, sample_ak, sample_jk, tau, FilteredMappingClass, WORD_BUDGET,
};
use lagtrace_core::magnusrep::{
    crossed_check, crossed_check_surface, det_handlebody, truncated_identity_check, truncated_identity_check_a,
    verify_det_trace, verify_morita_proposition, verify_trace_vanishing, Check,
};
use lagtrace_core::BigInt;

use crate::error::{CliError, CliResult};

pub const SUITES: &[&str] = &[
    "thm-a",
    "thm-b",
    "eq1",
    "eq3",
    "crossed",
    "bracket-vanish",
    "routes",
    "equivariance",
    "morita-prop",
    "calibration",
];

#[derive(Clone, Debug, PartialEq)]
pub struct CaseResult {
    pub claim: String,
    pub seed: u64,
    pub label: String,
    pub word_length: usize,
    pub lhs: String,
    pub rhs: String,
    pub equal: bool,
    pub wall_time_ms: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Report {
    pub suite: String,
    pub genus: usize,
    pub seed: u64,
    pub count: usize,
    pub cases: Vec<CaseResult>,
}

impl Report {
    pub fn passed(&self) -> bool {
        !self.cases.is_empty() && self.cases.iter().all(|c| c.equal)
    }

    pub fn failures(&self) -> usize {
        self.cases.iter().filter(|c| !c.equal).count()
    }

    pub fn render(&self) -> String {
        let mut out = format!(
            "suite {} genus {} seed {} count {}: {} ({} cases, {} failed)\n",
            self.suite,
            self.genus,
            self.seed,
            self.count,
            if self.passed() { "PASS" } else { "FAIL" },
            self.cases.len(),
            self.failures()
        );
        for c in &self.cases {
            out.push_str(&format!(
                "  [{}] {} | {} | len {} | {:.1} ms\n      lhs: {}\n      rhs: {}\n",
                if c.equal { "ok" } else { "FAIL" },
                c.claim,
                c.label,
                c.word_length,
                c.wall_time_ms,
                c.lhs,
                c.rhs
            ));
        }
        out
    }
}

#[derive(Clone, Copy, Debug)]
pub struct SuiteConfig {
    pub genus: usize,
    pub seed: u64,
    pub count: usize,
}

struct Runner {
    cfg: SuiteConfig,
    cases: Vec<CaseResult>,
}

impl Runner {
    fn case(&mut self, label: &str, word_length: usize, f: impl FnOnce() -> CliResult<Check>) -> CliResult<()> {
        let start = Instant::now();
        let check = f()?;
        let ms = start.elapsed().as_secs_f64() * 1000.0;
        self.cases.push(CaseResult {
            claim: check.claim,
            seed: self.cfg.seed,
            label: label.to_string(),
            word_length,
            lhs: check.lhs,
            rhs: check.rhs,
            equal: check.equal,
            wall_time_ms: (ms * 1000.0).round() / 1000.0,
        });
        Ok(())
    }

    fn sampled(
        &mut self,
        samples: &[FilteredMappingClass],
        f: impl Fn(&MappingClassRep) -> lagtrace_core::Result<Check>,
    ) -> CliResult<()> {
        for s in samples {
            self.case(&s.label, s.rep.word_length(), || Ok(f(&s.rep)?))?;
        }
        Ok(())
    }
}

fn check(claim: impl Into<String>, lhs: String, rhs: String) -> Check {
    let equal = lhs == rhs;
    Check { claim: claim.into(), lhs, rhs, equal }
}

/// `ψ` as a product of one or two library elements or their inverses.
fn random_library_element(
    rng: &mut ChaCha8Rng,
    lib: &[(String, MappingClassRep)],
) -> CliResult<(String, MappingClassRep)> {
    let mut name = String::new();
    let mut m = MappingClassRep::identity(lib[0].1.genus())?;
    for _ in 0..rng.gen_range(1..=2) {
        let (n, x) = lib.choose(rng).expect("library is never empty");
        let (n, x) = if rng.gen_bool(0.5) { (format!("{n}^-1"), x.inverse()) } else { (n.clone(), x.clone()) };
        m = m.compose_within(&x, WORD_BUDGET)?;
        if !name.is_empty() {
            name.push('*');
        }
        name.push_str(&n);
    }
    Ok((name, m))
}

/// Random combination of basis elements with coefficients in `-2..=2`, not zero.
fn random_combination(rng: &mut ChaCha8Rng, basis: &[Derivation]) -> Derivation {
    loop {
        let mut d = Derivation::zero(basis[0].genus(), basis[0].degree()).expect("shape of a basis element");
        for b in basis {
            d.add_assign_scaled(b, &BigInt::from(rng.gen_range(-2i32..=2)));
        }
        if !d.is_zero() {
            return d;
        }
    }
}

/// Highest degree whose `𝒢_k` basis the suites compute in genus `g`.
fn max_basis_degree(genus: usize) -> usize {
    if genus <= 3 {
        2
    } else {
        1
    }
}

pub fn run(name: &str, cfg: SuiteConfig) -> CliResult<Report> {
    if !SUITES.contains(&name) {
        return Err(CliError::Usage(format!("unknown suite `{name}`; expected one of {}", SUITES.join(", "))));
    }
    if cfg.count == 0 {
        return Err(CliError::Usage("--count must be at least 1".into()));
    }
    let SuiteConfig { genus: g, seed, count } = cfg;
    let mut r = Runner { cfg, cases: Vec::new() };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match name {
        "thm-b" => {
            let phi = annulus_twist(g)?;
            r.case("phi", phi.word_length(), || Ok(verify_det_trace(&phi)?))?;
            r.sampled(&sample_ak(g, 1, count, seed)?, verify_det_trace)?;
        }
        "thm-a" => {
            r.sampled(&sample_ak(g, 2, count, seed)?, |m| verify_trace_vanishing(m, 2))?;
            r.sampled(&sample_ak(g, 3, count.div_ceil(2), seed)?, |m| verify_trace_vanishing(m, 3))?;
        }
        "eq1" => {
            for k in 1..=2 {
                r.sampled(&sample_jk(g, k, count, seed)?, |m| truncated_identity_check(m, k))?;
            }
        }
        "eq3" => {
            let phi = annulus_twist(g)?;
            r.case("phi", phi.word_length(), || Ok(truncated_identity_check_a(&phi, 1)?))?;
            for k in 1..=2 {
                r.sampled(&sample_ak(g, k, count, seed)?, |m| truncated_identity_check_a(m, k))?;
            }
        }
        "crossed" => {
            let lib = handlebody_sample_library(g)?;
            for _ in 0..count {
                let (n1, m) = random_library_element(&mut rng, &lib)?;
                let (n2, n) = random_library_element(&mut rng, &lib)?;
                let label = format!("({n1}, {n2})");
                let len = m.word_length().max(n.word_length());
                r.case(&label, len, || Ok(crossed_check(&m, &n)?))?;
                r.case(&label, len, || Ok(crossed_check_surface(&m, &n)?))?;
            }
        }
        "bracket-vanish" => {
            let g1 = basis_g(g, 1)?;
            for i in 0..g1.len() {
                for j in i + 1..g1.len() {
                    let label = format!("[G1[{i}], G1[{j}]]");
                    r.case(&label, 0, || bracket_trace_check(&g1[i], &g1[j]))?;
                }
            }
            if max_basis_degree(g) >= 2 {
                let g2 = basis_g(g, 2)?;
                for _ in 0..count {
                    let (i, j) = (rng.gen_range(0..g1.len()), rng.gen_range(0..g2.len()));
                    let label = format!("[G1[{i}], G2[{j}]]");
                    r.case(&label, 0, || bracket_trace_check(&g1[i], &g2[j]))?;
                }
            }
        }
        "routes" => {
            for k in 1..=max_basis_degree(g) {
                for (i, d) in basis_g(g, k)?.iter().enumerate() {
                    r.case(&format!("G{k}[{i}]"), 0, || {
                        Ok(check(
                            format!("contraction and matrix routes to Tr^A_{k} agree"),
                            lagrangian_trace_contraction(d)?.render(),
                            lagrangian_trace_matrix(d)?.render(),
                        ))
                    })?;
                }
            }
        }
        "equivariance" => equivariance(&mut r, &mut rng)?,
        "morita-prop" => {
            let phi = annulus_twist(g)?;
            r.case("phi", phi.word_length(), || Ok(verify_morita_proposition(&phi)?))?;
            r.sampled(&sample_jk(g, 1, count, seed)?, verify_morita_proposition)?;
            r.sampled(&sample_jk(g, 2, count, seed)?, |m| {
                Ok(check("Morita trace of tau_2(m) vanishes", morita_trace(&tau(m, 2)?)?.render(), "0".into()))
            })?;
        }
        "calibration" => {
            for row in calibration::report()? {
                let library = (row.omega_sign, row.sigma, row.route_bar) == (-1, 1, true);
                let label = format!("omega(a,b)={} sigma={} bar={}", row.omega_sign, row.sigma, row.route_bar);
                r.case(&label, 0, || {
                    let fits = row.all_hold();
                    Ok(Check {
                        claim: "a sign choice fits every anchor iff it is the library convention".into(),
                        lhs: format!(
                            "fits {fits}: tau=wedge {}, routes {}, det=Tr {}, morita {}, Tr^A_1 {}",
                            row.tau_is_wedge, row.routes_agree, row.det_is_trace, row.morita_holds, row.trace
                        ),
                        rhs: format!("fits {library}"),
                        equal: fits == library,
                    })
                })?;
            }
        }
        _ => unreachable!("checked above"),
    }
    Ok(Report { suite: name.to_string(), genus: g, seed, count, cases: r.cases })
}

fn bracket_trace_check(d: &Derivation, e: &Derivation) -> CliResult<Check> {
    let b = derivation_bracket(d, e)?;
    let k = b.degree();
    if !is_in_g(&b)? {
        return Ok(check(format!("Tr^A_{k} of a bracket vanishes"), "bracket not in G".into(), "0".into()));
    }
    Ok(check(format!("Tr^A_{k} of a bracket vanishes"), lagrangian_trace(&b)?.render(), "0".into()))
}

/// Four kinds of case, cycled: `Tr^A` on `𝒢_k`, `τ_1` and `τ_2` under
/// conjugation, and the handlebody determinant under conjugation.
fn equivariance(r: &mut Runner, rng: &mut ChaCha8Rng) -> CliResult<()> {
    let SuiteConfig { genus: g, seed, count } = r.cfg;
    let lib = handlebody_sample_library(g)?;
    let per_kind = count.div_ceil(4);
    let a1 = sample_ak(g, 1, per_kind, seed)?;
    let a2 = sample_ak(g, 2, per_kind, seed)?;
    let bases: Vec<Vec<Derivation>> = (1..=max_basis_degree(g)).map(|k| basis_g(g, k)).collect::<Result<_, _>>()?;
    for i in 0..count {
        let kind = i % 4;
        let s = match kind {
            0 => None,
            2 => Some(&a2[(i / 4) % a2.len()]),
            _ => Some(&a1[(i / 4) % a1.len()]),
        };
        let (pname, psi, conj) = draw_conjugator(rng, &lib, s.map(|s| &s.rep))?;
        let m_h = psi.symplectic_action();
        let m_h_inv = psi.inverse().symplectic_action();
        let m_hp = psi.handlebody_map()?.abelian_matrix();
        match kind {
            0 => {
                let basis = &bases[(i / 4) % bases.len()];
                let d = random_combination(rng, basis);
                let k = d.degree();
                r.case(&format!("psi={pname}, d in G{k}"), psi.word_length(), || {
                    Ok(check(
                        format!("Tr^A_{k}(psi . d) = psi . Tr^A_{k}(d)"),
                        lagrangian_trace(&d.act(&m_h, &m_h_inv))?.render(),
                        lagrangian_trace(&d)?.act(&m_hp).render(),
                    ))
                })?;
            }
            _ => {
                let (s, conj) = (s.expect("set for conjugation kinds"), conj.expect("drawn with a sample"));
                let label = format!("psi={pname}, m={}", s.label);
                let len = conj.word_length();
                r.case(&label, len, || match kind {
                    1 | 2 => {
                        let k = kind;
                        Ok(check(
                            format!("tau_{k}(psi m psi^-1) = psi . tau_{k}(m)"),
                            tau(&conj, k)?.render(),
                            tau(&s.rep, k)?.act(&m_h, &m_h_inv).render(),
                        ))
                    }
                    _ => Ok(check(
                        "det r^{A,a}(psi m psi^-1) = psi . det r^{A,a}(m)",
                        det_handlebody(&conj)?.render(),
                        det_handlebody(&s.rep)?.act(&m_hp).render(),
                    )),
                })?;
            }
        }
    }
    Ok(())
}

/// Draws `ψ`, redrawing while `ψ m ψ⁻¹` overflows the word budget.
fn draw_conjugator(
    rng: &mut ChaCha8Rng,
    lib: &[(String, MappingClassRep)],
    m: Option<&MappingClassRep>,
) -> CliResult<(String, MappingClassRep, Option<MappingClassRep>)> {
    for _ in 0..100 {
        let (name, psi) = random_library_element(rng, lib)?;
        let Some(m) = m else { return Ok((name, psi, None)) };
        match m.conjugate_by(&psi, WORD_BUDGET) {
            Ok(c) => return Ok((name, psi, Some(c))),
            Err(lagtrace_core::Error::BudgetExceeded(_)) => continue,
            Err(e) => return Err(e.into()),
        }
    }
    Err(lagtrace_core::Error::BudgetExceeded("no conjugator kept the sample within budget".into()).into())
}
