//! Exact algebra for Johnson homomorphisms, Magnus representations and
//! Lagrangian traces of the handlebody group.
//!
//! The crate is `no_std` and only needs `alloc`. Everything is exact:
//! coefficients are arbitrary-precision integers, words are kept freely
//! reduced, and Lie elements are certified by the Dynkin criterion before
//! they are written in the Lyndon basis.
//!
//! Conventions used throughout:
//!
//! * The surface group `π` is free on `α_1..α_g, β_1..β_g`; the handlebody
//!   group `π'` is free on `β'_1..β'_g`, and `π → π'` kills every `α_i`.
//! * Letters of `H` are ordered `a_1 < … < a_g < b_1 < … < b_g`.
//! * The intersection pairing is `ω(b_i, a_i) = 1 = -ω(a_i, b_i)`.
//! * The boundary word is `[α_g⁻¹,β_g⁻¹]⋯[α_2⁻¹,β_2⁻¹][α_1,β_1]`.
//! * `[x, y] = x y x⁻¹ y⁻¹` for group commutators.

#![no_std]

extern crate alloc;

pub mod calibration;
pub mod derivations;
mod error;
pub mod freegroup;
pub mod groupring;
pub mod johnson;
pub mod magnusrep;
pub mod tensorlie;

pub use error::{Error, Result};
pub use num_bigint::BigInt;

/// Largest genus accepted by constructors.
pub const MAX_GENUS: usize = 32;

pub(crate) fn check_genus(genus: usize) -> Result<()> {
    if (2..=MAX_GENUS).contains(&genus) {
        Ok(())
    } else {
        Err(Error::InvalidGenus(genus))
    }
}
