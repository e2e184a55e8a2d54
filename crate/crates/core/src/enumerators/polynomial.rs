use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::coefficients::binomial;

/// Homogeneous `Σ_w c_w x^{n−w} y^w` with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeightEnumerator {
    coeffs: Vec<BigRational>,
}

impl WeightEnumerator {
    pub fn zero(n: usize) -> Self {
        Self {
            coeffs: vec![BigRational::zero(); n + 1],
        }
    }

    pub fn from_counts(counts: &[u64]) -> Self {
        assert!(!counts.is_empty(), "degree n needs n + 1 coefficients");
        Self {
            coeffs: counts.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
        }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        assert!(!coeffs.is_empty(), "degree n needs n + 1 coefficients");
        Self {
            coeffs: coeffs.iter().map(|&c| BigRational::from_integer(c.into())).collect(),
        }
    }

    pub fn from_rationals(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "degree n needs n + 1 coefficients");
        Self { coeffs }
    }

    /// Homogeneous degree.
    #[inline]
    pub fn n(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficient of `x^{n−w} y^w`; zero beyond `n`.
    pub fn coeff(&self, w: usize) -> BigRational {
        self.coeffs.get(w).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// Value at `x = y = 1`.
    pub fn total(&self) -> BigRational {
        self.coeffs.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_integer)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.coeffs.iter().all(|c| !c.is_negative())
    }

    /// Coefficients as `u64` counts when they are all non-negative integers.
    pub fn to_counts(&self) -> Option<Vec<u64>> {
        self.coeffs
            .iter()
            .map(|c| if c.is_integer() { c.to_integer().to_u64() } else { None })
            .collect()
    }

    /// Smallest positive `w` with a nonzero coefficient.
    pub fn min_positive_weight(&self) -> Option<usize> {
        (1..self.coeffs.len()).find(|&w| !self.coeffs[w].is_zero())
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "degree mismatch");
        Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "degree mismatch");
        Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        }
    }

    pub fn scale(&self, factor: &BigRational) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    /// Homogeneous form, e.g. `x^4 + 6*x^2*y^2 + y^4`.
    pub fn homogeneous(&self) -> String {
        let n = self.n();
        render(&self.coeffs, |w| {
            let x = monomial("x", n - w);
            let y = monomial("y", w);
            match (x.is_empty(), y.is_empty()) {
                (true, true) => String::new(),
                (false, true) => x,
                (true, false) => y,
                (false, false) => format!("{x}*{y}"),
            }
        })
    }
}

fn monomial(var: &str, power: usize) -> String {
    match power {
        0 => String::new(),
        1 => var.to_string(),
        p => format!("{var}^{p}"),
    }
}

fn render(coeffs: &[BigRational], term: impl Fn(usize) -> String) -> String {
    let mut out = String::new();
    for (w, c) in coeffs.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        if out.is_empty() {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        let mag = c.abs();
        let t = term(w);
        match (mag.is_one(), t.is_empty()) {
            (_, true) => out.push_str(&mag.to_string()),
            (true, false) => out.push_str(&t),
            (false, false) => out.push_str(&format!("{mag}*{t}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Dehomogenized form at `x = 1`, e.g. `1 + 759*y^8 + …`.
impl fmt::Display for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(&self.coeffs, |w| monomial("y", w)))
    }
}

impl fmt::Debug for WeightEnumerator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "WeightEnumerator({})", self.homogeneous())
    }
}

/// `2^{−dim} W(x + y, x − y)`.
///
/// The coefficient of `x^{n−j} y^j` is `2^{−dim} Σ_w c_w K_j(w)` with the
/// Krawtchouk value `K_j(w) = Σ_s (−1)^s C(w, s) C(n − w, j − s)`.
pub fn macwilliams(w: &WeightEnumerator, dim: usize) -> WeightEnumerator {
    let n = w.n();
    let denom = BigRational::from_integer(BigInt::one() << dim);
    let coeffs = (0..=n)
        .map(|j| {
            let mut acc = BigRational::zero();
            for (wt, c) in w.coeffs.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                acc += c * BigRational::from_integer(krawtchouk(n, j, wt));
            }
            acc / &denom
        })
        .collect();
    WeightEnumerator { coeffs }
}

fn krawtchouk(n: usize, j: usize, w: usize) -> BigInt {
    let mut acc = BigInt::zero();
    for s in 0..=j.min(w) {
        if j - s > n - w {
            continue;
        }
        let term = binomial(w as i64, s as u64) * binomial((n - w) as i64, (j - s) as u64);
        if s % 2 == 0 {
            acc += term;
        } else {
            acc -= term;
        }
    }
    acc
}
