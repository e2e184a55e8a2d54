//! Exact-arithmetic toolkit for semi self-dual binary codes.
//!
//! A binary code `D` is semi self-dual when it is self-orthogonal, contains the
//! all-ones vector, and has codimension 2 in its dual. The crate provides the
//! packed GF(2) algebra ([`gf2`]), codes and their involutions ([`codes`]),
//! exact weight-enumerator and series algebra ([`enumerators`]), the
//! dual-distance bound tables and their certificates ([`bounds`]), and the
//! search harnesses built on top ([`explorer`]).

pub mod bounds;
pub mod codes;
pub mod enumerators;
mod error;
pub mod explorer;
pub mod gf2;

pub use codes::{Involution, LinearCode, PairScheme, Shadow, DEFAULT_CAP};
pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitVector};
