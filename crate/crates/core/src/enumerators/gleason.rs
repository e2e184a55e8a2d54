use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::coefficients::top_index;
use super::series::TruncatedSeries;
use super::WeightEnumerator;
use crate::error::{Error, Result};

/// `B = (x⁴ − 6x²y² + y⁴) Σ_i e_i (x² + y²)^{N−2−4i} (x²y²(x² − y²)²)^i`,
/// with the rescaled coefficients `ε_i = (−1)^i 2^{N−1−6i} e_i`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GleasonDecomposition {
    half_length: usize,
    e: Vec<BigRational>,
    eps: Vec<BigRational>,
    forced_prefix: usize,
}

/// `(−1)^i 2^{N−1−6i}`, the factor taking `e_i` to `ε_i`.
pub fn eps_factor(i: usize, half_length: usize) -> BigRational {
    let exp = half_length as i64 - 1 - 6 * i as i64;
    let pow = BigInt::one() << exp.unsigned_abs();
    let mag = if exp >= 0 {
        BigRational::from_integer(pow)
    } else {
        BigRational::new(BigInt::one(), pow)
    };
    if i % 2 == 0 {
        mag
    } else {
        -mag
    }
}

impl GleasonDecomposition {
    pub fn from_e(half_length: usize, e: Vec<BigRational>, forced_prefix: usize) -> Self {
        let eps = e.iter().enumerate().map(|(i, v)| v * eps_factor(i, half_length)).collect();
        Self {
            half_length,
            e,
            eps,
            forced_prefix,
        }
    }

    pub fn from_eps(half_length: usize, eps: Vec<BigRational>, forced_prefix: usize) -> Self {
        let e = eps.iter().enumerate().map(|(i, v)| v / eps_factor(i, half_length)).collect();
        Self {
            half_length,
            e,
            eps,
            forced_prefix,
        }
    }

    /// `N`, half the code length.
    pub fn half_length(&self) -> usize {
        self.half_length
    }

    pub fn e(&self) -> &[BigRational] {
        &self.e
    }

    pub fn eps(&self) -> &[BigRational] {
        &self.eps
    }

    /// Number of leading coefficients fixed by a distance assumption.
    pub fn forced_prefix(&self) -> usize {
        self.forced_prefix
    }

    /// First index whose `ε_i` is negative or not an integer.
    pub fn first_bad_eps(&self) -> Option<usize> {
        self.eps.iter().position(|v| v.is_negative() || !v.is_integer())
    }

    pub fn eps_nonnegative_integers(&self) -> bool {
        self.first_bad_eps().is_none()
    }

    /// The polynomial `B` this decomposition describes.
    pub fn reconstruct(&self) -> WeightEnumerator {
        let n = self.half_length;
        let mut y_coeffs = vec![BigRational::zero(); n + 1];
        for (i, e) in self.e.iter().enumerate() {
            if e.is_zero() {
                continue;
            }
            let basis = basis_element(i, n).expect("index within the module");
            for (j, c) in basis.iter().enumerate() {
                y_coeffs[j] += e * c;
            }
        }
        from_y_squared(&y_coeffs)
    }
}

/// Basis element `i` at `x = 1`, written in `Y = y²`:
/// `(1 − 6Y + Y²)(1 + Y)^{N−2−4i} Y^i (1 − Y)^{2i}`, coefficients `0..=N`.
pub(crate) fn basis_element(i: usize, half_length: usize) -> Option<Vec<BigRational>> {
    if half_length < 2 || 4 * i > half_length - 2 {
        return None;
    }
    let order = half_length + 1;
    let s = TruncatedSeries::from_ints(&[1, -6, 1], order)
        .mul(&TruncatedSeries::one_plus_y_pow((half_length - 2 - 4 * i) as i64, order))
        .mul(&TruncatedSeries::monomial(i, order))
        .mul(&TruncatedSeries::one_minus_y_pow(2 * i as i64, order));
    Some(s.into_coeffs())
}

pub(crate) fn from_y_squared(y_coeffs: &[BigRational]) -> WeightEnumerator {
    let n = 2 * (y_coeffs.len() - 1);
    let mut coeffs = vec![BigRational::zero(); n + 1];
    for (j, c) in y_coeffs.iter().enumerate() {
        coeffs[2 * j] = c.clone();
    }
    WeightEnumerator::from_rationals(coeffs)
}

/// Solves for `e_0, …, e_M` (`M = ⌊(N − 2)/4⌋`) by the triangular system in
/// which basis element `i` starts at `y^{2i}`, then demands a zero residual.
pub fn gleason_decompose(b: &WeightEnumerator) -> Result<GleasonDecomposition> {
    let n = b.n();
    if n % 2 == 1 || n < 4 {
        return Err(Error::InvalidArgument(format!(
            "the decomposition needs even degree 2N >= 4, got {n}"
        )));
    }
    if let Some(w) = (1..=n).step_by(2).find(|&w| !b.coeff(w).is_zero()) {
        return Err(Error::NotInInvariantModule { degree: w });
    }
    let half = n / 2;
    let mut residual: Vec<BigRational> = (0..=half).map(|j| b.coeff(2 * j)).collect();
    let mut e = Vec::with_capacity(top_index(half) + 1);
    for i in 0..=top_index(half) {
        let basis = basis_element(i, half).expect("i <= M");
        debug_assert!(basis[i].is_one() && basis[..i].iter().all(Zero::is_zero));
        let coeff = residual[i].clone();
        for (r, c) in residual.iter_mut().zip(&basis) {
            *r -= &coeff * c;
        }
        e.push(coeff);
    }
    if let Some(j) = residual.iter().position(|r| !r.is_zero()) {
        return Err(Error::NotInInvariantModule { degree: 2 * j });
    }
    Ok(GleasonDecomposition::from_e(half, e, 0))
}

/// `F(1, y) = (1 + y⁴) Σ_i ε_i y^{N−2−4i} (1 − y⁴)^{2i}`, as a degree-`2N`
/// enumerator.
pub fn f_from_decomposition(dec: &GleasonDecomposition) -> Result<WeightEnumerator> {
    let n = dec.half_length;
    let len = dec.eps.len();
    // Laurent exponents are shifted by `shift` so every term is a polynomial.
    let shift = 4 * len;
    let width = shift + 2 * n + 1;
    let mut acc = vec![BigRational::zero(); width];
    for (i, eps) in dec.eps.iter().enumerate() {
        if eps.is_zero() {
            continue;
        }
        let low = n as i64 - 2 - 4 * i as i64 + shift as i64;
        if low < 0 {
            return Err(Error::MalformedDecomposition(format!("index {i} exceeds the half-length {n}")));
        }
        let order = 8 * i + 5;
        let body = TruncatedSeries::from_ints(&[1, 0, 0, 0, 1], order).mul(
            &TruncatedSeries::from_ints(&[1, 0, 0, 0, -1], order)
                .powi(2 * i as i64)
                .expect("nonnegative power"),
        );
        for (j, c) in body.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let pos = low as usize + j;
            if pos >= width {
                return Err(Error::MalformedDecomposition(format!(
                    "term {i} reaches degree {} beyond 2N = {}",
                    pos as i64 - shift as i64,
                    2 * n
                )));
            }
            acc[pos] += eps * c;
        }
    }
    if let Some(p) = acc[..shift].iter().position(|c| !c.is_zero()) {
        return Err(Error::MalformedDecomposition(format!(
            "negative power y^{} does not cancel",
            p as i64 - shift as i64
        )));
    }
    Ok(WeightEnumerator::from_rationals(acc.split_off(shift)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn half() -> BigRational {
        BigRational::new(1.into(), 2.into())
    }

    fn int(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    #[test]
    fn single_term_solves() {
        // ½x⁴ − 3x²y² + ½y⁴
        let b = WeightEnumerator::from_rationals(vec![half(), int(0), int(-3), int(0), half()]);
        let dec = gleason_decompose(&b).unwrap();
        assert_eq!(dec.e(), &[half()]);
        assert_eq!(dec.eps(), &[int(1)]);
        assert_eq!(dec.reconstruct(), b);

        let five_halves = BigRational::new((-5).into(), 2.into());
        let b = WeightEnumerator::from_rationals(vec![
            half(),
            int(0),
            five_halves.clone(),
            int(0),
            five_halves,
            int(0),
            half(),
        ]);
        let dec = gleason_decompose(&b).unwrap();
        assert_eq!(dec.e(), &[half()]);
        assert_eq!(dec.eps(), &[int(2)]);
    }

    #[test]
    fn basis_element_decomposes_to_unit() {
        // (x⁴ − 6x²y² + y⁴)(x² + y²)² at N = 4, where M = 0
        let b = WeightEnumerator::from_ints(&[1, 0, -4, 0, -10, 0, -4, 0, 1]);
        let dec = gleason_decompose(&b).unwrap();
        assert_eq!(dec.e(), &[int(1)]);
        // at N = 6 the second element is present and the same shape gives [1, 0]
        let b6 = from_y_squared(&basis_element(0, 6).unwrap());
        assert_eq!(gleason_decompose(&b6).unwrap().e(), &[int(1), int(0)]);
    }

    #[test]
    fn residual_is_a_hard_error() {
        assert!(matches!(
            gleason_decompose(&WeightEnumerator::from_ints(&[1, 0, 0, 0, 0])),
            Err(Error::NotInInvariantModule { .. })
        ));
        assert!(matches!(
            gleason_decompose(&WeightEnumerator::from_ints(&[1, 1, 0, 0, 0])),
            Err(Error::NotInInvariantModule { degree: 1 })
        ));
        assert!(matches!(
            gleason_decompose(&WeightEnumerator::from_ints(&[1, 0, 1])),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn shadow_side_expansion() {
        let f = f_from_decomposition(&GleasonDecomposition::from_eps(3, vec![int(2)], 0)).unwrap();
        assert_eq!(f, WeightEnumerator::from_ints(&[0, 2, 0, 0, 0, 2, 0]));
        let f = f_from_decomposition(&GleasonDecomposition::from_eps(2, vec![int(1)], 0)).unwrap();
        assert_eq!(f, WeightEnumerator::from_ints(&[1, 0, 0, 0, 1]));
        let f = f_from_decomposition(&GleasonDecomposition::from_eps(9, vec![int(0), int(0), int(0)], 0)).unwrap();
        assert!(f.is_zero());
        assert!(matches!(
            f_from_decomposition(&GleasonDecomposition::from_eps(2, vec![int(0), int(1)], 0)),
            Err(Error::MalformedDecomposition(_))
        ));
    }

    #[test]
    fn eps_scaling_round_trips() {
        let eps = vec![int(3), BigRational::new(5.into(), 4.into()), int(-7)];
        let dec = GleasonDecomposition::from_eps(14, eps.clone(), 2);
        let back = GleasonDecomposition::from_e(14, dec.e().to_vec(), 2);
        assert_eq!(back.eps(), &eps[..]);
        assert_eq!(back.first_bad_eps(), Some(1));
        assert_eq!(back.forced_prefix(), 2);
    }
}
