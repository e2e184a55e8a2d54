//! Truncated power series with exact rational coefficients.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// `Σ_{i < order} c_i Y^i + O(Y^order)`.
#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

fn rat(v: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(v))
}

impl TruncatedSeries {
    pub fn zero(order: usize) -> Self {
        Self {
            coeffs: vec![BigRational::zero(); order],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(0, order)
    }

    /// `Y^power`, or zero when `power >= order`.
    pub fn monomial(power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power < order {
            s.coeffs[power] = BigRational::one();
        }
        s
    }

    /// A polynomial with small integer coefficients, truncated to `order`.
    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        let mut s = Self::zero(order);
        for (c, &v) in s.coeffs.iter_mut().zip(coeffs) {
            *c = rat(v);
        }
        s
    }

    pub fn from_rationals(coeffs: Vec<BigRational>, order: usize) -> Self {
        let mut coeffs = coeffs;
        coeffs.resize(order, BigRational::zero());
        Self { coeffs }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigRational> {
        self.coeffs
    }

    /// Lowest power with a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self {
            coeffs: (0..order).map(|i| &self.coeffs[i] + &other.coeffs[i]).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self {
            coeffs: (0..order).map(|i| &self.coeffs[i] - &other.coeffs[i]).collect(),
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let mut out = vec![BigRational::zero(); order];
        for (i, a) in self.coeffs.iter().enumerate().take(order) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(order - i) {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self { coeffs: out }
    }

    /// Multiplicative inverse; requires a nonzero constant term.
    pub fn inverse(&self) -> Option<Self> {
        let c0 = self.coeffs.first()?;
        if c0.is_zero() {
            return None;
        }
        let inv0 = c0.recip();
        let order = self.order();
        let mut out = vec![BigRational::zero(); order];
        out[0] = inv0.clone();
        for k in 1..order {
            let mut acc = BigRational::zero();
            for j in 1..=k {
                if !self.coeffs[j].is_zero() {
                    acc += &self.coeffs[j] * &out[k - j];
                }
            }
            out[k] = -acc * &inv0;
        }
        Some(Self { coeffs: out })
    }

    /// Integer power; negative exponents need an invertible series.
    pub fn powi(&self, exp: i64) -> Option<Self> {
        let base = if exp < 0 { self.inverse()? } else { self.clone() };
        let mut e = exp.unsigned_abs();
        let mut result = Self::one(self.order());
        let mut square = base;
        while e > 0 {
            if e & 1 == 1 {
                result = result.mul(&square);
            }
            e >>= 1;
            if e > 0 {
                square = square.mul(&square);
            }
        }
        Some(result)
    }

    /// `(1 + Y)^exp` for any integer exponent.
    pub fn one_plus_y_pow(exp: i64, order: usize) -> Self {
        Self::from_ints(&[1, 1], order).powi(exp).expect("unit constant term")
    }

    /// `(1 − Y)^exp` for any integer exponent.
    pub fn one_minus_y_pow(exp: i64, order: usize) -> Self {
        Self::from_ints(&[1, -1], order).powi(exp).expect("unit constant term")
    }

    /// Solves `self = Σ_i c_i h^i` for `c_0, …, c_{order−1}`; `h` must have
    /// valuation exactly 1 within the truncation order.
    pub fn expand_in_powers_of(&self, h: &Self) -> Option<Vec<BigRational>> {
        if h.valuation() != Some(1) {
            return None;
        }
        let order = self.order().min(h.order());
        let lead = h.coeffs[1].clone();
        let mut residual = Self::from_rationals(self.coeffs[..order].to_vec(), order);
        let mut power = Self::one(order);
        let mut out = Vec::with_capacity(order);
        let mut lead_pow = BigRational::one();
        for i in 0..order {
            let c = &residual.coeffs[i] / &lead_pow;
            residual = residual.sub(&power.scale(&c));
            out.push(c);
            power = power.mul(h);
            lead_pow *= &lead;
        }
        debug_assert!(residual.valuation().is_none());
        Some(out)
    }
}

impl fmt::Debug for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            first = false;
            write!(f, "{}*Y^{i}", c.abs())?;
        }
        if first {
            f.write_str("0")?;
        }
        write!(f, " + O(Y^{})", self.order())
    }
}
