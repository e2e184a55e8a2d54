//! Packed linear algebra over GF(2).

mod bitmatrix;
mod bitvec;

pub use bitmatrix::{BitMatrix, Echelon};
pub(crate) use bitmatrix::{kernel_from_rref, reduce_against};
pub use bitvec::BitVector;
pub(crate) use bitvec::WORD_BITS;
