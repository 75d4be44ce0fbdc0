//! Free-group words, endomorphisms of `π` and `π'`, and certified automorphisms.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::{check_genus, Error, Result};

/// Which free group a word lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Ambient {
    /// `π = π_1(Σ_{g,1})`, free on `α_1..α_g, β_1..β_g`.
    Surface,
    /// `π' = π_1(V_g)`, free on `β'_1..β'_g`.
    Handlebody,
}

impl Ambient {
    pub fn rank(self, genus: usize) -> usize {
        match self {
            Ambient::Surface => 2 * genus,
            Ambient::Handlebody => genus,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum GenKind {
    Alpha,
    Beta,
}

/// A basis element of `π` or `π'`. `index` is 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub kind: GenKind,
    pub index: usize,
    pub ambient: Ambient,
}

impl Generator {
    pub fn alpha(index: usize) -> Self {
        Generator { kind: GenKind::Alpha, index, ambient: Ambient::Surface }
    }

    pub fn beta(index: usize) -> Self {
        Generator { kind: GenKind::Beta, index, ambient: Ambient::Surface }
    }

    pub fn beta_prime(index: usize) -> Self {
        Generator { kind: GenKind::Beta, index, ambient: Ambient::Handlebody }
    }

    /// Position in the ordered basis (`α`'s first on the surface).
    pub fn position(&self, genus: usize) -> Result<usize> {
        if self.index == 0 || self.index > genus {
            return Err(Error::InvalidGenerator(format!("index {} out of range 1..={genus}", self.index)));
        }
        match (self.ambient, self.kind) {
            (Ambient::Surface, GenKind::Alpha) => Ok(self.index - 1),
            (Ambient::Surface, GenKind::Beta) => Ok(genus + self.index - 1),
            (Ambient::Handlebody, GenKind::Beta) => Ok(self.index - 1),
            (Ambient::Handlebody, GenKind::Alpha) => {
                Err(Error::InvalidGenerator("alpha generators do not exist in the handlebody group".into()))
            }
        }
    }

    pub fn from_position(ambient: Ambient, genus: usize, pos: usize) -> Self {
        match ambient {
            Ambient::Surface if pos < genus => Generator::alpha(pos + 1),
            Ambient::Surface => Generator::beta(pos - genus + 1),
            Ambient::Handlebody => Generator::beta_prime(pos + 1),
        }
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.ambient, self.kind) {
            (Ambient::Surface, GenKind::Alpha) => write!(f, "a{}", self.index),
            (Ambient::Surface, GenKind::Beta) => write!(f, "b{}", self.index),
            (Ambient::Handlebody, _) => write!(f, "B{}", self.index),
        }
    }
}

/// A generator position together with an exponent sign.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Letter {
    pub gen: u8,
    pub inverse: bool,
}

impl Letter {
    pub fn new(gen: usize, inverse: bool) -> Self {
        Letter { gen: gen as u8, inverse }
    }

    pub fn inv(self) -> Self {
        Letter { gen: self.gen, inverse: !self.inverse }
    }

    pub fn sign(self) -> i64 {
        if self.inverse {
            -1
        } else {
            1
        }
    }
}

/// Appends `l` to a reduced word, cancelling against the last letter.
#[inline]
pub(crate) fn push_reduced(buf: &mut Vec<Letter>, l: Letter) {
    if buf.last() == Some(&l.inv()) {
        buf.pop();
    } else {
        buf.push(l);
    }
}

/// A freely reduced word. Equality is equality in the free group.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupWord {
    ambient: Ambient,
    genus: usize,
    letters: Vec<Letter>,
}

impl GroupWord {
    pub fn identity(ambient: Ambient, genus: usize) -> Result<Self> {
        check_genus(genus)?;
        Ok(GroupWord { ambient, genus, letters: Vec::new() })
    }

    /// Freely reduces a letter sequence after validating it.
    pub fn reduce<I: IntoIterator<Item = Letter>>(ambient: Ambient, genus: usize, letters: I) -> Result<Self> {
        check_genus(genus)?;
        let rank = ambient.rank(genus);
        let mut buf = Vec::new();
        for l in letters {
            if l.gen as usize >= rank {
                return Err(Error::InvalidGenerator(format!("letter position {} out of range for rank {rank}", l.gen)));
            }
            push_reduced(&mut buf, l);
        }
        Ok(GroupWord { ambient, genus, letters: buf })
    }

    pub fn generator(g: Generator, genus: usize) -> Result<Self> {
        let pos = g.position(genus)?;
        Self::reduce(g.ambient, genus, [Letter::new(pos, false)])
    }

    /// Caller guarantees the letters are reduced and in range.
    pub(crate) fn from_reduced(ambient: Ambient, genus: usize, letters: Vec<Letter>) -> Self {
        debug_assert!(letters.windows(2).all(|w| w[0] != w[1].inv()));
        GroupWord { ambient, genus, letters }
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    fn check_same(&self, other: &GroupWord) -> Result<()> {
        if self.ambient != other.ambient || self.genus != other.genus {
            return Err(Error::AmbientMismatch(format!(
                "{:?}/g={} vs {:?}/g={}",
                self.ambient, self.genus, other.ambient, other.genus
            )));
        }
        Ok(())
    }

    pub fn multiply(&self, other: &GroupWord) -> Result<Self> {
        self.check_same(other)?;
        let mut buf = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut buf, l);
        }
        Ok(GroupWord { letters: buf, ..*self })
    }

    pub fn invert(&self) -> Self {
        let letters = self.letters.iter().rev().map(|l| l.inv()).collect();
        GroupWord { letters, ..*self }
    }

    /// `u v u⁻¹ v⁻¹`.
    pub fn commutator(u: &GroupWord, v: &GroupWord) -> Result<Self> {
        u.multiply(v)?.multiply(&u.invert())?.multiply(&v.invert())
    }

    pub fn pow(&self, n: i64) -> Self {
        let base = if n < 0 { self.invert() } else { self.clone() };
        let mut buf = Vec::new();
        for _ in 0..n.unsigned_abs() {
            for &l in &base.letters {
                push_reduced(&mut buf, l);
            }
        }
        GroupWord { letters: buf, ..*self }
    }

    /// The quotient `π → π'`: delete `α`-letters, rename `β_i ↦ β'_i`.
    pub fn project_to_handlebody(&self) -> Result<Self> {
        if self.ambient != Ambient::Surface {
            return Err(Error::AmbientMismatch("projection needs a surface word".into()));
        }
        let g = self.genus;
        let mut buf = Vec::new();
        for l in &self.letters {
            if (l.gen as usize) >= g {
                push_reduced(&mut buf, Letter { gen: l.gen - g as u8, inverse: l.inverse });
            }
        }
        Ok(GroupWord { ambient: Ambient::Handlebody, genus: g, letters: buf })
    }

    /// Signed letter counts, i.e. the class in `H` or `H'`.
    pub fn abelianize(&self) -> Vec<i64> {
        let mut v = alloc::vec![0i64; self.ambient.rank(self.genus)];
        for l in &self.letters {
            v[l.gen as usize] += l.sign();
        }
        v
    }

    /// Parses the whitespace-separated word grammar (`a1 b2^-1`, `B1`, `1`).
    pub fn parse(s: &str, ambient: Ambient, genus: usize) -> Result<Self> {
        check_genus(genus)?;
        let mut buf: Vec<Letter> = Vec::new();
        let mut saw_token = false;
        for (column, token) in tokens(s) {
            saw_token = true;
            if token == "1" {
                continue;
            }
            let err = |message: String| Error::Parse { column, message };
            let (body, exp) = match token.split_once('^') {
                Some((b, e)) => {
                    let e: i64 = e.parse().map_err(|_| err(format!("bad exponent in `{token}`")))?;
                    (b, e)
                }
                None => (token, 1),
            };
            let mut chars = body.chars();
            let head = chars.next().ok_or_else(|| err("empty token".into()))?;
            let index: usize = chars.as_str().parse().map_err(|_| err(format!("bad generator index in `{token}`")))?;
            let gen = match (head, ambient) {
                ('a', Ambient::Surface) => Generator::alpha(index),
                ('b', Ambient::Surface) => Generator::beta(index),
                ('B', Ambient::Handlebody) => Generator::beta_prime(index),
                _ => return Err(err(format!("`{token}` is not a generator of {ambient:?}"))),
            };
            let pos = gen.position(genus).map_err(|e| err(format!("{e}")))?;
            let l = Letter::new(pos, exp < 0);
            for _ in 0..exp.unsigned_abs() {
                push_reduced(&mut buf, l);
            }
        }
        if !saw_token {
            return Err(Error::Parse { column: 1, message: "empty word".into() });
        }
        Ok(GroupWord { ambient, genus, letters: buf })
    }

    /// Renders with a custom separator; `Display` uses a space.
    pub fn render(&self, sep: &str) -> String {
        if self.letters.is_empty() {
            return "1".into();
        }
        let mut out = String::new();
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                out.push_str(sep);
            }
            let g = Generator::from_position(self.ambient, self.genus, l.gen as usize);
            out.push_str(&format!("{g}"));
            if l.inverse {
                out.push_str("^-1");
            }
        }
        out
    }
}

/// Whitespace tokens with their 1-based starting column.
pub(crate) fn tokens(s: &str) -> impl Iterator<Item = (usize, &str)> {
    let mut rest = s;
    let mut offset = 0;
    core::iter::from_fn(move || {
        let trimmed = rest.trim_start();
        offset += rest.len() - trimmed.len();
        if trimmed.is_empty() {
            return None;
        }
        let end = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
        let tok = &trimmed[..end];
        let col = offset + 1;
        offset += end;
        rest = &trimmed[end..];
        Some((col, tok))
    })
}

impl fmt::Display for GroupWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(" "))
    }
}

impl core::ops::Mul for &GroupWord {
    type Output = GroupWord;

    fn mul(self, rhs: &GroupWord) -> GroupWord {
        self.multiply(rhs).expect("multiplying words from different groups")
    }
}

/// An endomorphism of `π` or `π'` given by generator images.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeGroupMap {
    ambient: Ambient,
    genus: usize,
    images: Vec<GroupWord>,
}

impl FreeGroupMap {
    pub fn new(ambient: Ambient, genus: usize, images: Vec<GroupWord>) -> Result<Self> {
        check_genus(genus)?;
        if images.len() != ambient.rank(genus) {
            return Err(Error::Dimension(format!("expected {} images, got {}", ambient.rank(genus), images.len())));
        }
        if images.iter().any(|w| w.ambient != ambient || w.genus != genus) {
            return Err(Error::AmbientMismatch("image in the wrong group".into()));
        }
        Ok(FreeGroupMap { ambient, genus, images })
    }

    pub fn identity(ambient: Ambient, genus: usize) -> Result<Self> {
        check_genus(genus)?;
        let images = (0..ambient.rank(genus))
            .map(|i| GroupWord::from_reduced(ambient, genus, alloc::vec![Letter::new(i, false)]))
            .collect();
        Ok(FreeGroupMap { ambient, genus, images })
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn images(&self) -> &[GroupWord] {
        &self.images
    }

    pub fn image(&self, pos: usize) -> &GroupWord {
        &self.images[pos]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, w)| w.letters == [Letter::new(i, false)])
    }

    /// Longest generator image.
    pub fn max_image_len(&self) -> usize {
        self.images.iter().map(GroupWord::len).max().unwrap_or(0)
    }

    /// Image of `w` together with the length before reduction.
    pub fn apply_counting(&self, w: &GroupWord) -> Result<(GroupWord, usize)> {
        if w.ambient != self.ambient || w.genus != self.genus {
            return Err(Error::AmbientMismatch("applying a map to a foreign word".into()));
        }
        let mut buf = Vec::new();
        let mut raw = 0;
        for l in &w.letters {
            let img = &self.images[l.gen as usize].letters;
            raw += img.len();
            if l.inverse {
                for &x in img.iter().rev() {
                    push_reduced(&mut buf, x.inv());
                }
            } else {
                for &x in img {
                    push_reduced(&mut buf, x);
                }
            }
        }
        Ok((GroupWord::from_reduced(self.ambient, self.genus, buf), raw))
    }

    pub fn apply(&self, w: &GroupWord) -> Result<GroupWord> {
        self.apply_counting(w).map(|(w, _)| w)
    }

    /// `self ∘ h`, so `compose(f, h)(γ) = f(h(γ))`.
    pub fn compose(&self, h: &FreeGroupMap) -> Result<FreeGroupMap> {
        self.compose_within(h, usize::MAX)
    }

    /// Like [`compose`](Self::compose) but fails once any image exceeds
    /// `budget` letters before reduction.
    pub fn compose_within(&self, h: &FreeGroupMap, budget: usize) -> Result<FreeGroupMap> {
        let mut images = Vec::with_capacity(h.images.len());
        for w in &h.images {
            let (img, raw) = self.apply_counting(w)?;
            if raw > budget {
                return Err(Error::BudgetExceeded(format!("image of {raw} letters before reduction exceeds {budget}")));
            }
            images.push(img);
        }
        Ok(FreeGroupMap { images, ..*self })
    }

    /// The induced endomorphism of `π'` (`β'_j ↦ p(f(β_j))`).
    pub fn induced_on_handlebody(&self) -> Result<FreeGroupMap> {
        if self.ambient != Ambient::Surface {
            return Err(Error::AmbientMismatch("not a map of the surface group".into()));
        }
        let g = self.genus;
        let images = self.images[g..].iter().map(|w| w.project_to_handlebody()).collect::<Result<Vec<_>>>()?;
        Ok(FreeGroupMap { ambient: Ambient::Handlebody, genus: g, images })
    }

    /// Matrix of the induced map on the abelianisation; column `j` is the
    /// class of the image of generator `j`.
    pub fn abelian_matrix(&self) -> Vec<Vec<i64>> {
        let n = self.images.len();
        let mut m = alloc::vec![alloc::vec![0i64; n]; n];
        for (j, w) in self.images.iter().enumerate() {
            for (i, c) in w.abelianize().into_iter().enumerate() {
                m[i][j] = c;
            }
        }
        m
    }
}

/// A free-group automorphism with a certified inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MappingClassRep {
    forward: FreeGroupMap,
    inverse: FreeGroupMap,
    in_handlebody: bool,
}

impl MappingClassRep {
    /// Certifies `forward ∘ inverse = inverse ∘ forward = id` on generators.
    pub fn new(forward: FreeGroupMap, inverse: FreeGroupMap) -> Result<Self> {
        if forward.ambient != inverse.ambient || forward.genus != inverse.genus {
            return Err(Error::AmbientMismatch("forward and inverse differ".into()));
        }
        if forward.ambient != Ambient::Surface {
            return Err(Error::AmbientMismatch("mapping classes act on the surface group".into()));
        }
        if !forward.compose(&inverse)?.is_identity() {
            return Err(Error::NotAutomorphism("forward ∘ inverse is not the identity".into()));
        }
        if !inverse.compose(&forward)?.is_identity() {
            return Err(Error::NotAutomorphism("inverse ∘ forward is not the identity".into()));
        }
        Ok(Self::from_certified(forward, inverse))
    }

    fn from_certified(forward: FreeGroupMap, inverse: FreeGroupMap) -> Self {
        let g = forward.genus;
        // Preserving the normal closure of the α's is exactly p(f(α_i)) = 1.
        let kills_alphas = |f: &FreeGroupMap| {
            f.images[..g].iter().all(|w| w.project_to_handlebody().map(|p| p.is_identity()).unwrap_or(false))
        };
        let in_handlebody = kills_alphas(&forward) && kills_alphas(&inverse);
        MappingClassRep { forward, inverse, in_handlebody }
    }

    pub fn identity(genus: usize) -> Result<Self> {
        let id = FreeGroupMap::identity(Ambient::Surface, genus)?;
        Ok(Self::from_certified(id.clone(), id))
    }

    /// Builds from parsed images (`a1..ag, b1..bg` order) of both maps.
    pub fn from_words(genus: usize, forward: &[&str], inverse: &[&str]) -> Result<Self> {
        let parse = |ws: &[&str]| -> Result<FreeGroupMap> {
            let images = ws.iter().map(|s| GroupWord::parse(s, Ambient::Surface, genus)).collect::<Result<Vec<_>>>()?;
            FreeGroupMap::new(Ambient::Surface, genus, images)
        };
        Self::new(parse(forward)?, parse(inverse)?)
    }

    pub fn forward(&self) -> &FreeGroupMap {
        &self.forward
    }

    pub fn inverse_map(&self) -> &FreeGroupMap {
        &self.inverse
    }

    pub fn genus(&self) -> usize {
        self.forward.genus
    }

    pub fn inverse(&self) -> Self {
        MappingClassRep {
            forward: self.inverse.clone(),
            inverse: self.forward.clone(),
            in_handlebody: self.in_handlebody,
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &MappingClassRep) -> Result<Self> {
        self.compose_within(other, usize::MAX)
    }

    pub fn compose_within(&self, other: &MappingClassRep, budget: usize) -> Result<Self> {
        let forward = self.forward.compose_within(&other.forward, budget)?;
        let inverse = other.inverse.compose_within(&self.inverse, budget)?;
        Ok(MappingClassRep { forward, inverse, in_handlebody: self.in_handlebody && other.in_handlebody })
    }

    /// `ψ ∘ self ∘ ψ⁻¹`.
    pub fn conjugate_by(&self, psi: &MappingClassRep, budget: usize) -> Result<Self> {
        psi.compose_within(self, budget)?.compose_within(&psi.inverse(), budget)
    }

    /// `m ∘ n ∘ m⁻¹ ∘ n⁻¹`.
    pub fn commutator(m: &MappingClassRep, n: &MappingClassRep, budget: usize) -> Result<Self> {
        m.compose_within(n, budget)?.compose_within(&m.inverse(), budget)?.compose_within(&n.inverse(), budget)
    }

    pub fn apply(&self, w: &GroupWord) -> Result<GroupWord> {
        self.forward.apply(w)
    }

    pub fn extends_to_handlebody(&self) -> bool {
        self.in_handlebody
    }

    /// Induced automorphism of `π'`.
    pub fn handlebody_map(&self) -> Result<FreeGroupMap> {
        if !self.in_handlebody {
            return Err(Error::NotInHandlebodyGroup);
        }
        self.forward.induced_on_handlebody()
    }

    /// Matrix of the action on `H` in the basis `(a_i, b_i)`.
    pub fn symplectic_action(&self) -> Vec<Vec<i64>> {
        self.forward.abelian_matrix()
    }

    /// Whether the boundary word is fixed exactly.
    pub fn fixes_boundary(&self) -> bool {
        let zeta = boundary_word(self.genus()).expect("genus already validated");
        self.forward.apply(&zeta).map(|w| w == zeta).unwrap_or(false)
    }

    /// Longest generator image of the forward or inverse map.
    pub fn word_length(&self) -> usize {
        self.forward.max_image_len().max(self.inverse.max_image_len())
    }
}

fn sw(genus: usize, gen: usize, inverse: bool) -> GroupWord {
    GroupWord::from_reduced(Ambient::Surface, genus, alloc::vec![Letter::new(gen, inverse)])
}

/// Commutator piece of handle `i` (1-based) in the boundary word:
/// `[α_1, β_1]` for the first handle, `[α_i⁻¹, β_i⁻¹]` for the others.
pub fn handle_commutator(genus: usize, i: usize) -> Result<GroupWord> {
    check_genus(genus)?;
    if i == 0 || i > genus {
        return Err(Error::InvalidGenerator(format!("handle {i} out of range")));
    }
    let inv = i != 1;
    let a = sw(genus, i - 1, inv);
    let b = sw(genus, genus + i - 1, inv);
    GroupWord::commutator(&a, &b)
}

/// `ζ_g = [α_g⁻¹,β_g⁻¹] ⋯ [α_2⁻¹,β_2⁻¹] [α_1,β_1]`, the boundary of `Σ_{g,1}`.
pub fn boundary_word(genus: usize) -> Result<GroupWord> {
    let mut w = GroupWord::identity(Ambient::Surface, genus)?;
    for i in (1..=genus).rev() {
        w = w.multiply(&handle_commutator(genus, i)?)?;
    }
    Ok(w)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> GroupWord {
        GroupWord::parse(s, Ambient::Surface, 3).unwrap()
    }

    #[test]
    fn reduce_examples() {
        assert!(w("a1 a1^-1").is_identity());
        assert_eq!(w("a1 b1 b1^-1 a2"), w("a1 a2"));
        assert_eq!(w("a1 b1 a1^-1 b1^-1").len(), 4);
    }

    #[test]
    fn multiply_and_invert() {
        assert!(w("a1").multiply(&w("a1^-1")).unwrap().is_identity());
        assert_eq!(w("a1 b1").invert(), w("b1^-1 a1^-1"));
        let c = w("b2").multiply(&GroupWord::commutator(&w("a1"), &w("b1")).unwrap()).unwrap();
        assert_eq!(c, w("b2 a1 b1 a1^-1 b1^-1"));
    }

    #[test]
    fn projection_examples() {
        let h = |s| GroupWord::parse(s, Ambient::Handlebody, 3).unwrap();
        assert!(w("a1").project_to_handlebody().unwrap().is_identity());
        assert_eq!(w("b2 a1 b1 a1^-1 b1^-1").project_to_handlebody().unwrap(), h("B2"));
        assert_eq!(w("b1 a1 b2^-1").project_to_handlebody().unwrap(), h("B1 B2^-1"));
    }

    #[test]
    fn abelianize_examples() {
        assert_eq!(w("a1 b1 a1^-1 b1^-1").abelianize(), [0; 6]);
        assert_eq!(w("b2 a1 b1 a1^-1 b1^-1").abelianize(), [0, 0, 0, 0, 1, 0]);
        assert_eq!(w("a1^2 b3^-1").abelianize(), [2, 0, 0, 0, 0, -1]);
    }

    #[test]
    fn malformed_letters_are_rejected() {
        assert!(matches!(GroupWord::parse("a4", Ambient::Surface, 3), Err(Error::Parse { column: 1, .. })));
        assert!(matches!(GroupWord::parse("B1 a1", Ambient::Handlebody, 2), Err(Error::Parse { column: 4, .. })));
        assert!(GroupWord::reduce(Ambient::Handlebody, 2, [Letter::new(2, false)]).is_err());
        assert!(matches!(GroupWord::identity(Ambient::Surface, 1), Err(Error::InvalidGenus(1))));
    }

    #[test]
    fn ambient_mismatch() {
        let h = GroupWord::parse("B1", Ambient::Handlebody, 3).unwrap();
        assert!(matches!(w("a1").multiply(&h), Err(Error::AmbientMismatch(_))));
    }

    #[test]
    fn display_round_trip() {
        let x = w("a1 b2^-1 a3");
        assert_eq!(format!("{x}"), "a1 b2^-1 a3");
        assert_eq!(w(&format!("{x}")), x);
        assert_eq!(format!("{}", w("1")), "1");
    }

    #[test]
    fn boundary_word_shape() {
        let z = boundary_word(2).unwrap();
        assert_eq!(z, GroupWord::parse("a2^-1 b2^-1 a2 b2 a1 b1 a1^-1 b1^-1", Ambient::Surface, 2).unwrap());
        assert_eq!(z.abelianize(), [0; 4]);
    }
}
