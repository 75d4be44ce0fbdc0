//! Tensor algebra `T(H)`, free Lie algebra in the Lyndon basis, symmetric
//! powers, and Magnus-expansion utilities for the lower central series.
//!
//! Letters are positions `0..rank` in the fixed order
//! `a_1 < … < a_g < b_1 < … < b_g` (or `b'_1 < … < b'_g` on `H'`).
//!
//! Lower-central-series membership is decided from the truncated Magnus
//! expansion. This relies on the classical theorem that the Magnus
//! filtration of a free group coincides with its lower central series.

use alloc::format;
use alloc::string::String;

use crate::freegroup::Ambient;

mod lie;
mod magnus;
mod sym;
mod tensor;

pub use lie::{
    dynkin_operator, is_lyndon, lie_bracket, lie_to_tensor, lyndon_basis, lyndon_words, standard_factorization,
    tensor_to_lie, witt_dimension, LiePoly,
};
pub(crate) use magnus::expand_raw;
pub use magnus::{fox_expansion, lcs_class, lcs_degree, magnus_expand_word, LcsDegree};
pub use sym::SymPoly;
pub(crate) use tensor::{add_coeff as tensor_add_coeff, render_terms as render_signed_terms};
pub use tensor::{last_letter_decompose, symmetrize, TensorPoly, Word};

/// Which homology group letters are drawn from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Alphabet {
    /// `H`, `2g` letters `a_1..a_g, b_1..b_g`.
    Surface(usize),
    /// `H'`, `g` letters `b'_1..b'_g`.
    Handlebody(usize),
}

impl Alphabet {
    pub fn of(ambient: Ambient, genus: usize) -> Self {
        match ambient {
            Ambient::Surface => Alphabet::Surface(genus),
            Ambient::Handlebody => Alphabet::Handlebody(genus),
        }
    }

    pub fn genus(self) -> usize {
        match self {
            Alphabet::Surface(g) | Alphabet::Handlebody(g) => g,
        }
    }

    pub fn rank(self) -> usize {
        match self {
            Alphabet::Surface(g) => 2 * g,
            Alphabet::Handlebody(g) => g,
        }
    }

    pub fn ambient(self) -> Ambient {
        match self {
            Alphabet::Surface(_) => Ambient::Surface,
            Alphabet::Handlebody(_) => Ambient::Handlebody,
        }
    }

    /// `a1`, `b2`, or `B1` for primed letters.
    pub fn letter_name(self, pos: usize) -> String {
        match self {
            Alphabet::Surface(g) if pos < g => format!("a{}", pos + 1),
            Alphabet::Surface(g) => format!("b{}", pos - g + 1),
            Alphabet::Handlebody(_) => format!("B{}", pos + 1),
        }
    }

    /// Inverse of [`letter_name`](Self::letter_name).
    pub fn parse_letter(self, s: &str) -> Option<usize> {
        let mut chars = s.chars();
        let head = chars.next()?;
        let idx: usize = chars.as_str().parse().ok()?;
        let g = self.genus();
        if idx == 0 || idx > g {
            return None;
        }
        match (self, head) {
            (Alphabet::Surface(_), 'a') => Some(idx - 1),
            (Alphabet::Surface(_), 'b') => Some(g + idx - 1),
            (Alphabet::Handlebody(_), 'B') => Some(idx - 1),
            _ => None,
        }
    }

    /// The handlebody alphabet of the same genus.
    pub fn primed(self) -> Alphabet {
        Alphabet::Handlebody(self.genus())
    }
}
