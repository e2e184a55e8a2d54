//! Weight enumerators, the decomposition of `B = A − D`, and the series
//! coefficients that drive the dual-distance bound.
//!
//! For a semi self-dual `D` of length `2N`, `A` is its weight enumerator and
//! `D(x, y)` is half the enumerator of `D⊥`. The difference `B` lies in a
//! module with the basis `(x⁴ − 6x²y² + y⁴)(x² + y²)^{N−2−4i}(x²y²(x² − y²)²)^i`
//! for `0 <= i <= ⌊(N − 2)/4⌋`, and the rescaled coordinates `ε_i` are
//! non-negative integers whenever `B` comes from a code.

mod coefficients;
mod gleason;
mod polynomial;
mod series;

pub use coefficients::{
    alpha, alpha_by_buermann_check, alpha_by_series, binom_parity, binomial, gamma, gamma_by_series,
    gamma_series_check, top_index,
};
pub(crate) use gleason::from_y_squared;
pub use gleason::{eps_factor, f_from_decomposition, gleason_decompose, GleasonDecomposition};
pub use polynomial::{macwilliams, WeightEnumerator};
pub use series::TruncatedSeries;

use num_rational::BigRational;

use crate::codes::{LinearCode, DEFAULT_CAP};
use crate::error::{Error, Result};

pub fn enumerate_weights(code: &LinearCode) -> Result<WeightEnumerator> {
    enumerate_weights_with_cap(code, DEFAULT_CAP)
}

pub fn enumerate_weights_with_cap(code: &LinearCode, cap: usize) -> Result<WeightEnumerator> {
    Ok(WeightEnumerator::from_counts(code.weight_distribution(cap)?))
}

/// `B = A − ½ W_{D⊥}`; constant and top coefficients are both ½.
pub fn build_b(code: &LinearCode) -> Result<WeightEnumerator> {
    if !code.is_semi_self_dual() {
        return Err(Error::NotSemiSelfDual);
    }
    let a = enumerate_weights(code)?;
    let dual = macwilliams(&a, code.dim());
    Ok(a.sub(&dual.scale(&BigRational::new(1.into(), 2.into()))))
}

/// Enumerator of the shadow words whose weight is `≡ N − 2 (mod 4)`.
pub fn shadow_f(code: &LinearCode) -> Result<WeightEnumerator> {
    if !code.is_semi_self_dual() {
        return Err(Error::NotSemiSelfDual);
    }
    let shadow = code.shadow()?;
    let n = code.n();
    let residue = (n / 2 + 2) % 4;
    let counts: Vec<u64> = shadow
        .weight_distribution(DEFAULT_CAP)?
        .iter()
        .enumerate()
        .map(|(w, &c)| if w % 4 == residue { c } else { 0 })
        .collect();
    Ok(WeightEnumerator::from_counts(&counts))
}
