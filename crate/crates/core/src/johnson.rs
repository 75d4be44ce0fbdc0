//! Johnson filtration degree, Johnson homomorphisms, and a library of
//! explicit handlebody mapping classes with seeded samplers for `𝒜_k` and
//! `J_k`.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::derivations::Derivation;
use crate::freegroup::{Ambient, FreeGroupMap, Generator, GroupWord, MappingClassRep};
use crate::tensorlie::{lcs_degree, magnus_expand_word, tensor_to_lie, Alphabet, LcsDegree};
use crate::{check_genus, Error, Result};

/// Letters allowed in a generator image before reduction while sampling.
pub const WORD_BUDGET: usize = 10_000;

/// Position in the Johnson filtration, up to a bound.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum JohnsonDegree {
    /// `m ∈ J_k \ J_{k+1}`; `0` means `m` acts nontrivially on `H`.
    Degree(usize),
    /// `m ∈ J_N` for the bound `N` used and no more is known.
    Exceeds(usize),
}

impl JohnsonDegree {
    /// Whether `m ∈ J_k` is certified.
    pub fn at_least(self, k: usize) -> bool {
        match self {
            JohnsonDegree::Degree(d) => d >= k,
            JohnsonDegree::Exceeds(n) => n >= k,
        }
    }
}

fn letter(genus: usize, j: usize) -> Result<GroupWord> {
    GroupWord::generator(Generator::from_position(Ambient::Surface, genus, j), genus)
}

fn displacement(m: &MappingClassRep, j: usize) -> Result<GroupWord> {
    let gamma = letter(m.genus(), j)?;
    m.apply(&gamma)?.multiply(&gamma.invert())
}

/// Largest `k ≤ max` with `φ(γ)γ⁻¹ ∈ Γ_{k+1}` for every generator `γ`.
pub fn johnson_degree(m: &MappingClassRep, max: usize) -> Result<JohnsonDegree> {
    let mut best = JohnsonDegree::Exceeds(max);
    for j in 0..2 * m.genus() {
        if let LcsDegree::Degree(d) = lcs_degree(&displacement(m, j)?, max + 1) {
            best = match best {
                JohnsonDegree::Degree(e) if e <= d - 1 => best,
                _ => JohnsonDegree::Degree(d - 1),
            };
        }
    }
    Ok(best)
}

/// `τ_k(m)`: `γ ↦` class of `m(γ)γ⁻¹` in `Γ_{k+1}/Γ_{k+2} ≅ L_{k+1}(H)`.
pub fn tau(m: &MappingClassRep, k: usize) -> Result<Derivation> {
    if k == 0 {
        return Err(Error::Dimension("Johnson homomorphisms start in degree 1".into()));
    }
    let g = m.genus();
    let mut values = Vec::with_capacity(2 * g);
    for j in 0..2 * g {
        let t = magnus_expand_word(&displacement(m, j)?, k + 1);
        if t.terms().keys().any(|w| !w.is_empty() && w.len() <= k) {
            let actual = match johnson_degree(m, k)? {
                JohnsonDegree::Degree(d) => d,
                JohnsonDegree::Exceeds(n) => n,
            };
            return Err(Error::DegreeTooLow { required: k, actual });
        }
        values.push(tensor_to_lie(&t.homogeneous_part(k + 1))?);
    }
    Derivation::new(g, k, values)
}

/// Builds a mapping class from the generators it moves; `names` are the
/// letters `a1`, `b2`, … and every other generator is fixed.
fn from_moves(genus: usize, forward: &[(&str, String)], inverse: &[(&str, String)]) -> Result<MappingClassRep> {
    let alphabet = Alphabet::Surface(genus);
    let build = |moves: &[(&str, String)]| -> Result<FreeGroupMap> {
        let mut images: Vec<GroupWord> = (0..2 * genus).map(|j| letter(genus, j)).collect::<Result<_>>()?;
        for (name, img) in moves {
            let pos = alphabet.parse_letter(name).ok_or_else(|| Error::InvalidGenerator(name.to_string()))?;
            images[pos] = GroupWord::parse(img, Ambient::Surface, genus)?;
        }
        FreeGroupMap::new(Ambient::Surface, genus, images)
    };
    MappingClassRep::new(build(forward)?, build(inverse)?)
}

const C_TILDE: &str = "b2 a1 b1 a1^-1 b1^-1";
const C_TILDE_INV: &str = "b1 a1 b1^-1 a1^-1 b2^-1";

/// The annulus twist `φ` with `c̃ = β_2[α_1, β_1]`:
/// `α_1, β_1, β_2 ↦ c̃(·)c̃⁻¹` and `α_2 ↦ c̃β_2⁻¹α_2`. It fixes the boundary
/// word and lies in `𝒜 ∩ J_1`.
pub fn annulus_twist(genus: usize) -> Result<MappingClassRep> {
    check_genus(genus)?;
    let conj = |x: &str| format!("{C_TILDE} {x} {C_TILDE_INV}");
    let unconj = |x: &str| format!("{C_TILDE_INV} {x} {C_TILDE}");
    from_moves(
        genus,
        &[("a1", conj("a1")), ("b1", conj("b1")), ("b2", conj("b2")), ("a2", format!("{C_TILDE} b2^-1 a2"))],
        &[("a1", unconj("a1")), ("b1", unconj("b1")), ("b2", unconj("b2")), ("a2", format!("{C_TILDE_INV} b2 a2"))],
    )
}

/// Variant with `α_2 ↦ α_2β_2c̃⁻¹`. It is an automorphism in `𝒜 ∩ IA` with
/// the same action on `π'`, but it does not fix the boundary word.
pub fn phi_printed(genus: usize) -> Result<MappingClassRep> {
    check_genus(genus)?;
    let conj = |x: &str| format!("{C_TILDE} {x} {C_TILDE_INV}");
    let unconj = |x: &str| format!("{C_TILDE_INV} {x} {C_TILDE}");
    from_moves(
        genus,
        &[("a1", conj("a1")), ("b1", conj("b1")), ("b2", conj("b2")), ("a2", format!("a2 b2 {C_TILDE_INV}"))],
        &[("a1", unconj("a1")), ("b1", unconj("b1")), ("b2", unconj("b2")), ("a2", format!("a2 b2^-1 {C_TILDE}"))],
    )
}

/// Twist along the meridian `α_k` (1-based `k`): `β_1 ↦ β_1α_1`, or
/// `β_k ↦ α_kβ_k` for `k ≥ 2`.
pub fn meridian_twist(genus: usize, k: usize) -> Result<MappingClassRep> {
    check_genus(genus)?;
    check_handle(genus, k)?;
    let (a, b) = (format!("a{k}"), format!("b{k}"));
    if k == 1 {
        from_moves(genus, &[("b1", "b1 a1".into())], &[("b1", "b1 a1^-1".into())])
    } else {
        from_moves(genus, &[(&b, format!("{a} {b}"))], &[(&b, format!("{a}^-1 {b}"))])
    }
}

/// Twist along the longitude `β_k`: `α_1 ↦ α_1β_1`, or `α_k ↦ β_kα_k`.
/// Not in `𝒜`.
pub fn longitude_twist(genus: usize, k: usize) -> Result<MappingClassRep> {
    check_genus(genus)?;
    check_handle(genus, k)?;
    let (a, b) = (format!("a{k}"), format!("b{k}"));
    if k == 1 {
        from_moves(genus, &[("a1", "a1 b1".into())], &[("a1", "a1 b1^-1".into())])
    } else {
        from_moves(genus, &[(&a, format!("{b} {a}"))], &[(&a, format!("{b}^-1 {a}"))])
    }
}

fn check_handle(genus: usize, k: usize) -> Result<()> {
    if k == 0 || k > genus {
        return Err(Error::InvalidGenerator(format!("handle {k} out of range")));
    }
    Ok(())
}

/// Boundary-fixing exchange of handles `k` and `k+1`.
///
/// For `k = 1` it acts on `H` as `a_1 ↦ -a_2, b_1 ↦ -b_2` (and back), since the
/// first handle enters the boundary word with the opposite orientation.
pub fn handle_swap(genus: usize, k: usize) -> Result<MappingClassRep> {
    check_genus(genus)?;
    if k == 0 || k >= genus {
        return Err(Error::InvalidGenerator(format!("no handle after {k}")));
    }
    if k == 1 {
        let p2 = "a2^-1 b2^-1 a2 b2";
        let p2i = "b2^-1 a2^-1 b2 a2";
        let p1 = "a1 b1 a1^-1 b1^-1";
        let p1i = "b1 a1 b1^-1 a1^-1";
        return from_moves(
            genus,
            &[
                ("a1", "a2^-1".into()),
                ("b1", "b2^-1".into()),
                ("a2", format!("{p2} a1^-1 {p2i}")),
                ("b2", format!("{p2} b1^-1 {p2i}")),
            ],
            &[
                ("a2", "a1^-1".into()),
                ("b2", "b1^-1".into()),
                ("a1", format!("{p1i} a2^-1 {p1}")),
                ("b1", format!("{p1i} b2^-1 {p1}")),
            ],
        );
    }
    let (l, h) = (k, k + 1);
    let ph = format!("a{h}^-1 b{h}^-1 a{h} b{h}");
    let phi = format!("b{h}^-1 a{h}^-1 b{h} a{h}");
    let pl = format!("a{l}^-1 b{l}^-1 a{l} b{l}");
    let pli = format!("b{l}^-1 a{l}^-1 b{l} a{l}");
    let (al, bl, ah, bh) = (format!("a{l}"), format!("b{l}"), format!("a{h}"), format!("b{h}"));
    from_moves(
        genus,
        &[(&al, ah.clone()), (&bl, bh.clone()), (&ah, format!("{ph} {al} {phi}")), (&bh, format!("{ph} {bl} {phi}"))],
        &[(&ah, al.clone()), (&bh, bl.clone()), (&al, format!("{pli} {ah} {pl}")), (&bl, format!("{pli} {bh} {pl}"))],
    )
}

/// Slide of handle 1 over handle 2. It fixes the boundary word, lies in `𝒜`,
/// and acts on `H'` by `b'_1 ↦ b'_1 - b'_2`.
pub fn handle_slide(genus: usize) -> Result<MappingClassRep> {
    check_genus(genus)?;
    from_moves(
        genus,
        &[
            ("a1", "b2 a1 b2^-1".into()),
            ("a2", "b2 a1 b2^-1 a2".into()),
            ("b1", "b1 b2^-1".into()),
            ("b2", "b2 a1 b2 a1^-1 b2^-1".into()),
        ],
        &[
            ("a1", "a1^-1 b2^-1 a1 b2 a1".into()),
            ("a2", "a1^-1 a2".into()),
            ("b1", "b1 a1^-1 b2 a1".into()),
            ("b2", "a1^-1 b2 a1".into()),
        ],
    )
}

/// `α_1 ↦ β_1α_1β_1⁻¹β_2`, other generators fixed: an automorphism of `π`
/// that does not preserve the normal closure of the `α`'s.
pub fn non_handlebody_example(genus: usize) -> Result<MappingClassRep> {
    check_genus(genus)?;
    from_moves(genus, &[("a1", "b1 a1 b1^-1 b2".into())], &[("a1", "b1^-1 a1 b2^-1 b1".into())])
}

/// Named boundary-fixing elements of `𝒜`: meridian twists, handle swaps,
/// the handle slide, and `φ` with copies moved by swaps.
pub fn handlebody_sample_library(genus: usize) -> Result<Vec<(String, MappingClassRep)>> {
    check_genus(genus)?;
    let mut lib = Vec::new();
    for k in 1..=genus {
        lib.push((format!("twist_a{k}"), meridian_twist(genus, k)?));
    }
    for k in 1..genus {
        lib.push((format!("swap_{k}_{}", k + 1), handle_swap(genus, k)?));
    }
    lib.push(("slide_1_2".to_string(), handle_slide(genus)?));
    lib.extend(phi_copies(genus)?);
    Ok(lib)
}

/// `φ` and its conjugates by handle swaps.
pub fn phi_copies(genus: usize) -> Result<Vec<(String, MappingClassRep)>> {
    let phi = annulus_twist(genus)?;
    let mut out = Vec::new();
    out.push(("phi_swap_1_2".to_string(), phi.conjugate_by(&handle_swap(genus, 1)?, WORD_BUDGET)?));
    for k in 2..genus {
        let s = handle_swap(genus, k)?;
        out.push((format!("phi_swap_{k}_{}", k + 1), phi.conjugate_by(&s, WORD_BUDGET)?));
    }
    out.insert(0, ("phi".to_string(), phi));
    Ok(out)
}

/// Library elements outside `𝒜` that fix the boundary: longitude twists.
pub fn torelli_conjugators(genus: usize) -> Result<Vec<(String, MappingClassRep)>> {
    (1..=genus).map(|k| Ok((format!("twist_b{k}"), longitude_twist(genus, k)?))).collect()
}

/// A sampled mapping class with its certified filtration data.
#[derive(Clone, Debug)]
pub struct FilteredMappingClass {
    /// How the element was built, e.g. `[phi^(twist_a1), phi_swap_1_2]`.
    pub label: String,
    pub rep: MappingClassRep,
    pub degree: JohnsonDegree,
    pub in_handlebody: bool,
}

impl FilteredMappingClass {
    pub fn new(label: String, rep: MappingClassRep, bound: usize) -> Result<Self> {
        let degree = johnson_degree(&rep, bound)?;
        let in_handlebody = rep.extends_to_handlebody();
        Ok(FilteredMappingClass { label, rep, degree, in_handlebody })
    }
}

type Named = (String, MappingClassRep);

struct Sampler {
    rng: ChaCha8Rng,
    cores: Vec<Named>,
    conjugators: Vec<Named>,
}

impl Sampler {
    fn new(genus: usize, seed: u64, handlebody: bool) -> Result<Self> {
        let lib = handlebody_sample_library(genus)?;
        let mut conjugators: Vec<Named> = lib.iter().filter(|(n, _)| !n.starts_with("phi")).cloned().collect();
        if !handlebody {
            conjugators.extend(torelli_conjugators(genus)?);
        }
        let cores = phi_copies(genus)?;
        Ok(Sampler { rng: ChaCha8Rng::seed_from_u64(seed), cores, conjugators })
    }

    fn pick(&mut self, from_cores: bool) -> Named {
        let list = if from_cores { &self.cores } else { &self.conjugators };
        let (name, m) = list.choose(&mut self.rng).expect("library is never empty").clone();
        if self.rng.gen_bool(0.5) {
            (format!("{name}^-1"), m.inverse())
        } else {
            (name, m)
        }
    }

    /// `ψ v ψ⁻¹` with `v` a copy of `φ^{±1}` and `ψ` a product of up to two
    /// conjugators.
    fn degree_one(&mut self) -> Result<Named> {
        let (vname, v) = self.pick(true);
        let mut psi_name = String::new();
        let mut psi = MappingClassRep::identity(v.genus())?;
        for _ in 0..self.rng.gen_range(0..=2) {
            let (n, c) = self.pick(false);
            psi = psi.compose_within(&c, WORD_BUDGET)?;
            if !psi_name.is_empty() {
                psi_name.push('*');
            }
            psi_name.push_str(&n);
        }
        if psi_name.is_empty() {
            Ok((vname, v))
        } else {
            Ok((format!("{vname}^({psi_name})"), v.conjugate_by(&psi, WORD_BUDGET)?))
        }
    }

    fn element(&mut self, k: usize) -> Result<Named> {
        match k {
            1 => {
                let (n, m) = self.degree_one()?;
                if self.rng.gen_ratio(1, 4) {
                    let (n2, m2) = self.degree_one()?;
                    Ok((format!("{n}*{n2}"), m.compose_within(&m2, WORD_BUDGET)?))
                } else {
                    Ok((n, m))
                }
            }
            _ => {
                let (n1, m1) = self.degree_one()?;
                let (n2, m2) = self.element(k - 1)?;
                let c = MappingClassRep::commutator(&m1, &m2, WORD_BUDGET)?;
                Ok((format!("[{n1}, {n2}]"), c))
            }
        }
    }
}

/// Attempts allowed per requested sample before giving up.
const ATTEMPTS_PER_SAMPLE: usize = 200;

fn sample(genus: usize, k: usize, count: usize, seed: u64, handlebody: bool) -> Result<Vec<FilteredMappingClass>> {
    check_genus(genus)?;
    if !(1..=3).contains(&k) {
        return Err(Error::Dimension(format!("sampling supports degrees 1..=3, not {k}")));
    }
    let mut s = Sampler::new(genus, seed, handlebody)?;
    let mut out = Vec::with_capacity(count);
    let mut attempts = 0;
    while out.len() < count {
        attempts += 1;
        if attempts > ATTEMPTS_PER_SAMPLE * count.max(1) {
            return Err(Error::BudgetExceeded(format!(
                "only {} of {count} samples fit the {WORD_BUDGET}-letter budget",
                out.len()
            )));
        }
        let (label, rep) = match s.element(k) {
            Ok(x) => x,
            Err(Error::BudgetExceeded(_)) => continue,
            Err(e) => return Err(e),
        };
        let f = FilteredMappingClass::new(label, rep, k)?;
        // Elements deeper than `k` have τ_k = 0 and test nothing.
        if f.degree == JohnsonDegree::Degree(k) && (!handlebody || f.in_handlebody) {
            out.push(f);
        }
    }
    Ok(out)
}

/// Seeded samples of `𝒜_k` (`k ≤ 3`) with nonzero `τ_k`: conjugates and
/// products of `φ` copies for `k = 1`, iterated commutators above.
pub fn sample_ak(genus: usize, k: usize, count: usize, seed: u64) -> Result<Vec<FilteredMappingClass>> {
    sample(genus, k, count, seed, true)
}

/// Like [`sample_ak`] but conjugating also by longitude twists, so samples
/// are in `J_k` and usually outside `𝒜`.
pub fn sample_jk(genus: usize, k: usize, count: usize, seed: u64) -> Result<Vec<FilteredMappingClass>> {
    sample(genus, k, count, seed, false)
}
