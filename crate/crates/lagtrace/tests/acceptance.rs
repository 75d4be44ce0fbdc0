//! Acceptance criteria 1-9, one PASS/FAIL line each.
//!
//! Runs without the libtest harness so the lines are always printed. The
//! process fails when a criterion's outcome differs from [`EXPECTED_FAIL`]:
//! every criterion is expected to pass except those listed there, whose
//! failure is itself checked to happen for the documented reason.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use lagtrace::suites::{self, Report, SuiteConfig};
use lagtrace_core::derivations::{basis_d, is_in_g, lagrangian_trace, morita_trace};
use lagtrace_core::freegroup::{Ambient, GroupWord, Letter};
use lagtrace_core::groupring::{render_additive, GroupRingElem, LaurentElem, Matrix};
use lagtrace_core::johnson::{annulus_twist, sample_ak, sample_jk, tau, FilteredMappingClass, WORD_BUDGET};
use lagtrace_core::magnusrep::{
    additive_form, det_handlebody, handlebody_magnus, truncated_identity_check, truncated_identity_check_a,
    verify_morita_proposition,
};
use lagtrace_core::tensorlie::{lyndon_words, tensor_to_lie, witt_dimension, Alphabet, LiePoly};
use lagtrace_core::BigInt;

const SEED: u64 = 20_240_601;

/// Criteria whose literal statement does not hold; see the README.
const EXPECTED_FAIL: &[u32] = &[7];

struct Outcome {
    pass: bool,
    detail: String,
    /// For expected failures: whether the failure has the documented cause.
    documented_cause: bool,
}

impl Outcome {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Outcome { pass, detail: detail.into(), documented_cause: false }
    }
}

type Criterion = fn() -> Result<Outcome, String>;

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn suite(name: &str, genus: usize, count: usize) -> Result<Report, String> {
    suites::run(name, SuiteConfig { genus, seed: SEED, count }).map_err(err)
}

fn summarize(reports: &[Report]) -> (bool, String) {
    let pass = reports.iter().all(Report::passed);
    let parts: Vec<String> = reports
        .iter()
        .map(|r| format!("{} g={}: {}/{} cases", r.suite, r.genus, r.cases.len() - r.failures(), r.cases.len()))
        .collect();
    (pass, parts.join("; "))
}

fn within(start: Instant, limit: Duration) -> bool {
    start.elapsed() < limit
}

fn criterion_1() -> Result<Outcome, String> {
    let start = Instant::now();
    let hp = Alphabet::Handlebody(2);
    let l = |s: &str| LaurentElem::parse(s, hp).map_err(err);
    let phi = annulus_twist(2).map_err(err)?;
    let r = handlebody_magnus(&phi).map_err(err)?;
    let expected = Matrix::new(vec![vec![l("b2'^-1")?, l("0")?], vec![l("1 - b1'^-1")?, l("1")?]]).map_err(err)?;
    let det = det_handlebody(&phi).map_err(err)?;
    let additive = additive_form(&det)
        .map(|e| render_additive(hp, &e.into_iter().map(BigInt::from).collect::<Vec<_>>()))
        .unwrap_or_default();
    let fast = within(start, Duration::from_secs(1));
    Ok(Outcome::new(
        r == expected && det == l("b2'^-1")? && additive == "-b2'" && fast,
        format!("r^(A,a)(phi) = {r}, det = {det}, additive {additive}, {:?}", start.elapsed()),
    ))
}

fn criterion_2() -> Result<Outcome, String> {
    let start = Instant::now();
    let reports = [suite("thm-b", 2, 24)?, suite("thm-b", 3, 10)?];
    let max_len = reports.iter().flat_map(|r| &r.cases).map(|c| c.word_length).max().unwrap_or(0);
    let (pass, detail) = summarize(&reports);
    let ok = pass && reports[0].cases.len() >= 21 && max_len <= WORD_BUDGET && within(start, Duration::from_secs(120));
    Ok(Outcome::new(ok, format!("{detail}; longest image {max_len} letters; {:?}", start.elapsed())))
}

fn a2_samples() -> Result<Vec<FilteredMappingClass>, String> {
    let mut v = sample_ak(2, 2, 12, SEED).map_err(err)?;
    v.extend(sample_ak(3, 2, 10, SEED).map_err(err)?);
    Ok(v)
}

fn criterion_3() -> Result<Outcome, String> {
    let start = Instant::now();
    let a2 = a2_samples()?;
    let mut good2 = 0;
    for s in &a2 {
        let t = tau(&s.rep, 2).map_err(err)?;
        if !t.is_zero() && is_in_g(&t).map_err(err)? && lagrangian_trace(&t).map_err(err)?.is_zero() {
            good2 += 1;
        }
    }
    let a3 = sample_ak(2, 3, 6, SEED).map_err(err)?;
    let mut good3 = 0;
    for s in &a3 {
        let t = tau(&s.rep, 3).map_err(err)?;
        if !t.is_zero() && is_in_g(&t).map_err(err)? && lagrangian_trace(&t).map_err(err)?.is_zero() {
            good3 += 1;
        }
    }
    let ok = good2 == a2.len() && a2.len() >= 10 && good3 == a3.len() && a3.len() >= 5;
    Ok(Outcome::new(
        ok && within(start, Duration::from_secs(600)),
        format!(
            "A_2: {good2}/{} with tau_2 in G_2 and Tr^A_2 = 0; A_3: {good3}/{} with Tr^A_3 = 0; {:?}",
            a2.len(),
            a3.len(),
            start.elapsed()
        ),
    ))
}

fn criterion_4() -> Result<Outcome, String> {
    let a2 = a2_samples()?;
    let mut good = 0;
    for s in &a2 {
        let det = det_handlebody(&s.rep).map_err(err)?;
        if det == LaurentElem::one(det.alphabet()) {
            good += 1;
        }
    }
    Ok(Outcome::new(good == a2.len(), format!("det r^(A,a) = 1 on {good}/{} A_2 samples", a2.len())))
}

fn criterion_5() -> Result<Outcome, String> {
    let mut total = 0;
    let mut good = 0;
    let mut tally = |c: lagtrace_core::magnusrep::Check| {
        total += 1;
        good += c.equal as usize;
    };
    for g in [2, 3] {
        for k in 1..=2 {
            for s in sample_jk(g, k, 8, SEED).map_err(err)? {
                tally(truncated_identity_check(&s.rep, k).map_err(err)?);
            }
            for s in sample_ak(g, k, 8, SEED).map_err(err)? {
                tally(truncated_identity_check_a(&s.rep, k).map_err(err)?);
            }
        }
    }
    Ok(Outcome::new(good == total, format!("{good}/{total} truncated identities (J_k and A_k, k = 1, 2, g = 2, 3)")))
}

fn criterion_6() -> Result<Outcome, String> {
    let r = suite("crossed", 2, 50)?;
    let handlebody: Vec<_> = r.cases.iter().filter(|c| c.claim.starts_with("r^A")).collect();
    let ok = r.passed() && handlebody.len() == 50;
    Ok(Outcome::new(
        ok,
        format!(
            "{} pairs: handlebody law {}/50, surface law {}/50",
            handlebody.len(),
            handlebody.iter().filter(|c| c.equal).count(),
            r.cases.iter().filter(|c| !c.claim.starts_with("r^A") && c.equal).count()
        ),
    ))
}

fn criterion_7() -> Result<Outcome, String> {
    let mut j1 = vec![annulus_twist(2).map_err(err)?];
    j1.extend(sample_jk(2, 1, 10, SEED).map_err(err)?.into_iter().map(|s| s.rep));
    let mut prop_ok = 0;
    let mut tr1_zero = 0;
    let mut tr1_is_minus_det = 0;
    for m in &j1 {
        prop_ok += verify_morita_proposition(m).map_err(err)?.equal as usize;
        let tr = morita_trace(&tau(m, 1).map_err(err)?).map_err(err)?;
        tr1_zero += tr.is_zero() as usize;
        let det = lagtrace_core::groupring::laurent_det(&lagtrace_core::magnusrep::magnus_rep(m));
        if let (Some(e), Some(t)) = (additive_form(&det), tr.as_linear()) {
            tr1_is_minus_det += e.iter().zip(&t).all(|(x, y)| BigInt::from(-x) == *y) as usize;
        }
    }
    let j2 = sample_jk(2, 2, 10, SEED).map_err(err)?;
    let mut tr2_zero = 0;
    for s in &j2 {
        tr2_zero += morita_trace(&tau(&s.rep, 2).map_err(err)?).map_err(err)?.is_zero() as usize;
    }
    let n = j1.len();
    let pass = prop_ok == n && tr1_zero == n && tr2_zero == j2.len();
    let mut o = Outcome::new(
        pass,
        format!(
            "det r^a = 2C(tau_1) on {prop_ok}/{n}; Morita trace of tau_2 vanishes on {tr2_zero}/{}; \
             Morita trace of tau_1 vanishes on {tr1_zero}/{n} (it equals minus the additive det on {tr1_is_minus_det}/{n})",
            j2.len()
        ),
    );
    o.documented_cause = prop_ok == n && tr2_zero == j2.len() && tr1_is_minus_det == n && tr1_zero < n;
    Ok(o)
}

fn random_word(rng: &mut ChaCha8Rng, genus: usize) -> GroupWord {
    let len = rng.gen_range(0..=40);
    let letters: Vec<Letter> = (0..len).map(|_| Letter::new(rng.gen_range(0..2 * genus), rng.gen_bool(0.5))).collect();
    GroupWord::reduce(Ambient::Surface, genus, letters).expect("letters are in range")
}

fn fox_identity_holds(w: &GroupWord) -> bool {
    let (amb, g) = (w.ambient(), w.genus());
    let minus_one = GroupRingElem::one(amb, g).scale(&BigInt::from(-1));
    let x = GroupRingElem::from_word(w);
    let mut rhs = GroupRingElem::zero(amb, g);
    for i in 0..2 * g {
        let gi = GroupWord::reduce(amb, g, [Letter::new(i, false)]).unwrap();
        let gi_minus_one = GroupRingElem::from_word(&gi).try_add(&minus_one).unwrap();
        rhs = rhs.try_add(&x.fox_derivative(i).unwrap().try_mul(&gi_minus_one).unwrap()).unwrap();
    }
    x.try_add(&minus_one).unwrap() == rhs
}

fn necklace(n: usize, k: usize) -> i64 {
    let mobius = |mut m: usize| {
        let mut mu = 1i64;
        let mut p = 2;
        while p * p <= m {
            if m % p == 0 {
                m /= p;
                if m % p == 0 {
                    return 0;
                }
                mu = -mu;
            }
            p += 1;
        }
        if m > 1 {
            -mu
        } else {
            mu
        }
    };
    (1..=k).filter(|d| k % d == 0).map(|d| mobius(d) * (n as i64).pow((k / d) as u32)).sum::<i64>() / k as i64
}

fn random_bracket(rng: &mut ChaCha8Rng, a: Alphabet, degree: usize) -> LiePoly {
    if degree == 1 {
        return LiePoly::generator(a, rng.gen_range(0..a.rank()));
    }
    let left = rng.gen_range(1..degree);
    random_bracket(rng, a, left).bracket(&random_bracket(rng, a, degree - left))
}

fn criterion_8() -> Result<Outcome, String> {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let mut notes = Vec::new();

    let fox_ok = (0..1000).filter(|i| fox_identity_holds(&random_word(&mut rng, 2 + i % 2))).count();
    notes.push(format!("Fox identity {fox_ok}/1000"));

    let mut witt_ok = true;
    for n in [2, 4, 6] {
        for k in 1..=5 {
            let expected = necklace(n, k);
            witt_ok &= witt_dimension(n, k) == BigInt::from(expected) && lyndon_words(n, k).len() as i64 == expected;
        }
    }
    notes.push(format!("Witt dimensions {}", if witt_ok { "ok" } else { "WRONG" }));

    let a = Alphabet::Surface(2);
    let mut dynkin_ok = 0;
    for _ in 0..200 {
        let mut p = LiePoly::zero(a);
        let degree = rng.gen_range(1..=4);
        for _ in 0..rng.gen_range(1..=3) {
            p.add_assign_scaled(&random_bracket(&mut rng, a, degree), &BigInt::from(rng.gen_range(-3..=3)));
        }
        dynkin_ok += (tensor_to_lie(&p.to_tensor()).map_err(err)? == p) as usize;
    }
    notes.push(format!("Dynkin round trip {dynkin_ok}/200"));

    let reports = [
        suite("routes", 2, 1)?,
        suite("routes", 3, 1)?,
        suite("bracket-vanish", 2, 20)?,
        suite("bracket-vanish", 3, 20)?,
    ];
    let (suites_ok, detail) = summarize(&reports);
    notes.push(detail);

    let mut ranks_ok = true;
    for g in [2, 3] {
        let n = basis_d(g, 1).map_err(err)?.len();
        let expected = (2 * g) * (2 * g - 1) * (2 * g - 2) / 6;
        ranks_ok &= n == expected;
        notes.push(format!("rank D_1(g={g}) = {n} (C({},3) = {expected})", 2 * g));
    }

    let fast = within(start, Duration::from_secs(600));
    let ok = fox_ok == 1000 && witt_ok && dynkin_ok == 200 && suites_ok && ranks_ok && fast;
    notes.push(format!("{:?}", start.elapsed()));
    Ok(Outcome::new(ok, notes.join("; ")))
}

fn criterion_9() -> Result<Outcome, String> {
    let reports = [suite("equivariance", 2, 24)?, suite("equivariance", 3, 24)?];
    let (pass, detail) = summarize(&reports);
    Ok(Outcome::new(pass, detail))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, Criterion); 9] = [
        (1, "worked example", criterion_1),
        (2, "determinant equals Lagrangian trace on A_1", criterion_2),
        (3, "Lagrangian traces vanish on A_2 and A_3", criterion_3),
        (4, "determinant is 1 on A_2", criterion_4),
        (5, "truncated Fox matrix identities", criterion_5),
        (6, "crossed homomorphism law", criterion_6),
        (7, "Morita proposition and Morita trace", criterion_7),
        (8, "structural oracles", criterion_8),
        (9, "equivariance", criterion_9),
    ];
    let mut unexpected = 0;
    for (id, name, run) in criteria {
        let start = Instant::now();
        let outcome = run().unwrap_or_else(|e| Outcome::new(false, format!("error: {e}")));
        let expected_fail = EXPECTED_FAIL.contains(&id);
        let note = match (outcome.pass, expected_fail) {
            (true, false) => "",
            (false, true) if outcome.documented_cause => " (known divergence, documented)",
            (true, true) => " (expected to fail; update EXPECTED_FAIL)",
            _ => "",
        };
        let as_expected = if expected_fail { !outcome.pass && outcome.documented_cause } else { outcome.pass };
        if !as_expected {
            unexpected += 1;
        }
        println!(
            "criterion {id} [{}] {name}: {} [{:.2} s]{note}",
            if outcome.pass { "PASS" } else { "FAIL" },
            outcome.detail,
            start.elapsed().as_secs_f64()
        );
    }
    if unexpected == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{unexpected} criteria did not match their expected outcome");
        ExitCode::FAILURE
    }
}
