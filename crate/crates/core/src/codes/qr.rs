//! Extended quadratic-residue codes and the involution `z ↦ −1/z`.
//!
//! Coordinates `0..q` carry the labels `0, 1, …, q−1` of F_q and coordinate
//! `q` is the point at infinity.

use super::{Involution, LinearCode};
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};

const MAX_Q: u64 = 60;

pub fn is_prime(q: u64) -> bool {
    q >= 2 && (2..).take_while(|d| d * d <= q).all(|d| q % d != 0)
}

fn residues(q: u64) -> Vec<bool> {
    let mut is_residue = vec![false; q as usize];
    for x in 1..q {
        is_residue[(x * x % q) as usize] = true;
    }
    is_residue
}

fn check_q(q: u64) -> Result<()> {
    if !is_prime(q) {
        return Err(Error::NotPrime(q));
    }
    if q > MAX_Q {
        return Err(Error::BadResidueCondition {
            q,
            reason: "q must not exceed 60",
        });
    }
    if q % 8 != 1 && q % 8 != 7 {
        return Err(Error::BadResidueCondition {
            q,
            reason: "2 is a residue only for q ≡ ±1 (mod 8)",
        });
    }
    Ok(())
}

fn cyclic_shifts(q: usize, base: &BitVector) -> Vec<BitVector> {
    (0..q)
        .map(|t| BitVector::from_indices(q, base.support().map(|s| (s + t) % q)))
        .collect()
}

/// The extended binary quadratic-residue code of length `q + 1`.
///
/// The cyclic QR code of length `q` is the span of the cyclic shifts of its
/// idempotent, which is `Σ_{r residue} x^r` or `1 + Σ_{r residue} x^r`; the
/// candidate spanning a code of dimension `(q+1)/2` is used. Each generator is
/// then extended by an overall parity bit at infinity. For `q ≡ −1 (mod 8)` the
/// result is self-dual and doubly-even.
pub fn extended_qr_code(q: u64) -> Result<LinearCode> {
    check_q(q)?;
    let qs = q as usize;
    let is_residue = residues(q);
    let sum_q = BitVector::from_indices(qs, (0..qs).filter(|&i| is_residue[i]));
    let with_one = {
        let mut v = sum_q.clone();
        v.flip(0);
        v
    };
    let cyclic = [sum_q, with_one]
        .iter()
        .map(|base| LinearCode::from_matrix(&BitMatrix::new(qs, cyclic_shifts(qs, base)).expect("length q")))
        .find(|c| c.dim() == qs.div_ceil(2))
        .ok_or_else(|| Error::Consistency(format!("no idempotent of dimension {} for q = {q}", qs.div_ceil(2))))?;
    let extended = cyclic
        .basis()
        .iter()
        .map(|r| {
            let mut parity = BitVector::zeros(1);
            parity.set(0, r.weight() % 2 == 1);
            r.concat(&parity)
        })
        .collect();
    LinearCode::new(qs + 1, extended)
}

/// `z ↦ −1/z` on F_q ∪ {∞}, swapping 0 and ∞.
pub fn qr_involution(q: u64) -> Result<Involution> {
    check_q(q)?;
    if q % 4 == 1 {
        return Err(Error::BadResidueCondition {
            q,
            reason: "−1 is a quadratic residue, so the involution has fixed points",
        });
    }
    let qs = q as usize;
    let inverse = |z: u64| (1..q).find(|w| z * w % q == 1).expect("q is prime");
    let images = (0..=qs)
        .map(|z| match z {
            0 => qs,
            z if z == qs => 0,
            z => ((q - inverse(z as u64)) % q) as usize,
        })
        .collect();
    let sigma = Involution::from_zero_based(images)?;
    if let Some(p) = sigma.first_fixed_point() {
        return Err(Error::HasFixedPoints(p + 1));
    }
    Ok(sigma)
}
