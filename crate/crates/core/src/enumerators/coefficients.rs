//! Closed-form coefficients and the series expansions that cross-check them.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::series::TruncatedSeries;
use crate::error::{Error, Result};

/// Largest binomial argument for which [`binom_parity`] also evaluates the
/// exact binomial.
const EXACT_PARITY_LIMIT: u64 = 4096;

/// `C(n, k)` for any integer `n`, with `C(n, k) = (−1)^k C(k − n − 1, k)` for
/// negative `n` and zero when `0 <= n < k`.
pub fn binomial(n: i64, k: u64) -> BigInt {
    if n >= 0 {
        let n = n as u64;
        if k > n {
            return BigInt::zero();
        }
        return num_integer::binomial(BigInt::from(n), BigInt::from(k));
    }
    let top = BigInt::from(k) - BigInt::from(n) - 1;
    let value = num_integer::binomial(top, BigInt::from(k));
    if k % 2 == 0 {
        value
    } else {
        -value
    }
}

/// `⌊(N − 2)/4⌋`, the top index of the decomposition at half-length `N >= 2`.
pub fn top_index(half_length: usize) -> usize {
    half_length.saturating_sub(2) / 4
}

/// `[Y^i] (1 − Y²)^{−2i−1} (1 + Y)^{2+6i−N}`.
pub fn alpha(i: usize, half_length: usize) -> BigInt {
    let order = i + 1;
    let left = TruncatedSeries::from_ints(&[1, 0, -1], order)
        .powi(-(2 * i as i64) - 1)
        .expect("unit constant term");
    let right = TruncatedSeries::one_plus_y_pow(2 + 6 * i as i64 - half_length as i64, order);
    integral(&left.mul(&right).coeff(i))
}

/// `α_i(N)` read off from `f = Σ_j α_j g^j`, where
/// `f = (1 − 6Y + Y²)^{−1} (1 + Y)^{2−N}` and `g = Y (1 − Y)² (1 + Y)^{−4}`.
pub fn alpha_by_series(i: usize, half_length: usize) -> BigRational {
    // one spare order keeps the linear term of g visible when i = 0
    let order = i + 2;
    let f = TruncatedSeries::from_ints(&[1, -6, 1], order)
        .inverse()
        .expect("unit constant term")
        .mul(&TruncatedSeries::one_plus_y_pow(2 - half_length as i64, order));
    let g = TruncatedSeries::monomial(1, order)
        .mul(&TruncatedSeries::one_minus_y_pow(2, order))
        .mul(&TruncatedSeries::one_plus_y_pow(-4, order));
    f.expand_in_powers_of(&g).expect("g has valuation 1").swap_remove(i)
}

pub fn alpha_by_buermann_check(i: usize, half_length: usize) -> bool {
    alpha_by_series(i, half_length) == BigRational::from_integer(alpha(i, half_length))
}

fn check_gamma_args(h: usize, k: usize, half_length: usize) -> Result<usize> {
    let m = top_index(half_length);
    if k > h {
        return Err(Error::InvalidArgument(format!("gamma needs k <= h, got k = {k}, h = {h}")));
    }
    if h > m {
        return Err(Error::InvalidArgument(format!(
            "gamma needs h <= {m} at N = {half_length}, got h = {h}"
        )));
    }
    Ok(m)
}

/// `C(2M − h − k, h − k)` with `M = ⌊(N − 2)/4⌋`.
pub fn gamma(h: usize, k: usize, half_length: usize) -> Result<BigInt> {
    let m = check_gamma_args(h, k, half_length)?;
    Ok(binomial((2 * m - h - k) as i64, (h - k) as u64))
}

/// Coefficient of `g^h` in `Z^k f(Z)`, where `f = (1 + Z)^{−1} (1 − Z)^{−2M}`
/// and `g = Z (1 − Z)^{−2}`.
pub fn gamma_by_series(h: usize, k: usize, half_length: usize) -> Result<BigRational> {
    let m = check_gamma_args(h, k, half_length)?;
    let order = h + 2;
    let f = TruncatedSeries::monomial(k, order)
        .mul(&TruncatedSeries::one_plus_y_pow(-1, order))
        .mul(&TruncatedSeries::one_minus_y_pow(-2 * m as i64, order));
    let g = TruncatedSeries::monomial(1, order).mul(&TruncatedSeries::one_minus_y_pow(-2, order));
    Ok(f.expand_in_powers_of(&g).expect("g has valuation 1").swap_remove(h))
}

pub fn gamma_series_check(h: usize, k: usize, half_length: usize) -> Result<bool> {
    Ok(gamma_by_series(h, k, half_length)? == BigRational::from_integer(gamma(h, k, half_length)?))
}

/// Whether `C(5μ − 1, μ − 1)` is odd.
///
/// Computed by the carry test `(μ − 1) & 4μ = 0` and by Lucas' theorem
/// `(μ − 1) & (5μ − 1) = μ − 1`, plus the exact binomial for small `μ`; all
/// routes must agree.
pub fn binom_parity(mu: u64) -> bool {
    assert!(mu >= 1, "binom_parity needs mu >= 1");
    let k = mu - 1;
    let n = 5 * mu - 1;
    let carry_free = k & (4 * mu) == 0;
    let lucas = k & n == k;
    assert_eq!(carry_free, lucas, "carry and Lucas tests disagree at mu = {mu}");
    if n <= EXACT_PARITY_LIMIT {
        let exact = binomial(n as i64, k) % 2u32 == BigInt::one();
        assert_eq!(exact, lucas, "Lucas test disagrees with the binomial at mu = {mu}");
    }
    lucas
}

fn integral(c: &BigRational) -> BigInt {
    assert!(c.is_integer(), "expected an integral coefficient, got {c}");
    c.to_integer()
}
