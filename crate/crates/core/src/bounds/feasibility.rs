//! Enumerators compatible with a dual distance beyond the proven bound.
//!
//! Assuming `d(D⊥) >= 2d` at `n = 2N = 24μ` forces `e_i = ½ α_i(N)` for
//! `i < d`. The remaining `ε_i`, `d <= i <= M`, are free; a tuple survives when
//! the resulting `F(1, y)` has non-negative integer coefficients.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::enumerators::{
    alpha, binom_parity, eps_factor, f_from_decomposition, from_y_squared, top_index,
    GleasonDecomposition, TruncatedSeries, WeightEnumerator,
};
use crate::error::{Error, Result};

pub const DEFAULT_RANGE_CAP: u64 = 64;

/// Largest grid of free tuples the search will sweep.
const MAX_TUPLES: u128 = 1 << 34;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilitySolution {
    pub n: usize,
    pub d: usize,
    /// `ε_i` for `i = d, …, M`.
    pub eps_free: Vec<u64>,
    pub decomposition: GleasonDecomposition,
    pub f_poly: WeightEnumerator,
    /// Weight enumerator of `D` obtained by completing `B` with the invariant
    /// part `A + ½W_{D⊥} = 3/2 + O(y^{2d})`, higher invariant coefficients zero.
    pub w_d: WeightEnumerator,
    pub w_dual: WeightEnumerator,
    pub f_ok: bool,
    pub w_d_ok: bool,
    pub w_dual_ok: bool,
    /// `B(1, y) = ½ + O(y^{2d})` holds for the full decomposition.
    pub b_prefix_ok: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FeasibilityReport {
    pub n: usize,
    pub d: usize,
    pub range_cap: u64,
    /// `ε_i` for `i < min(d, M + 1)`.
    pub forced_eps: Vec<BigRational>,
    /// First forced index whose `ε_i` is impossible; the search is then empty.
    pub forced_violation: Option<usize>,
    pub tuples_checked: u128,
    /// Lexicographically sorted by `eps_free`.
    pub solutions: Vec<FeasibilitySolution>,
}

fn is_good(w: &WeightEnumerator) -> bool {
    w.is_integral() && w.is_nonnegative()
}

/// `(1 + y⁴) y^{N−2−4i} (1 − y⁴)^{2i}` as exact integers, coefficients `0..=2N`.
fn f_basis(i: usize, half: usize) -> Vec<BigInt> {
    let dec = GleasonDecomposition::from_eps(
        half,
        (0..=i).map(|j| if j == i { BigRational::one() } else { BigRational::zero() }).collect(),
        0,
    );
    f_from_decomposition(&dec)
        .expect("index within the module")
        .coeffs()
        .iter()
        .map(|c| c.to_integer())
        .collect()
}

fn to_i128(v: &BigInt) -> Result<i128> {
    v.to_i128()
        .ok_or_else(|| Error::Consistency(format!("coefficient {v} exceeds the 128-bit search range")))
}

/// Sweeps free `ε` tuples in `[0, range_cap]^{M−d+1}` at `n = 24μ`.
pub fn feasibility_search(n: usize, d: usize, range_cap: u64) -> Result<FeasibilityReport> {
    if n == 0 || n % 24 != 0 {
        return Err(Error::InvalidArgument(format!("feasibility search needs n = 24mu, got {n}")));
    }
    if d == 0 {
        return Err(Error::InvalidArgument("half-distance d must be positive".into()));
    }
    let mu = n / 24;
    if binom_parity(mu as u64) {
        return Err(Error::ParityOdd { mu: mu as u64, d });
    }
    let half = n / 2;
    let m = top_index(half);
    let forced_len = d.min(m + 1);
    let forced_eps: Vec<BigRational> = (0..forced_len)
        .map(|i| BigRational::new(alpha(i, half), BigInt::from(2)) * eps_factor(i, half))
        .collect();
    // a nonzero α beyond M also rules the assumption out
    let forced_violation = forced_eps
        .iter()
        .position(|v| v.is_negative() || !v.is_integer())
        .or_else(|| (m + 1..d).find(|&i| !alpha(i, half).is_zero()));
    let free = m + 1 - forced_len;
    let mut report = FeasibilityReport {
        n,
        d,
        range_cap,
        forced_eps: forced_eps.clone(),
        forced_violation,
        tuples_checked: 0,
        solutions: Vec::new(),
    };
    if forced_violation.is_some() {
        return Ok(report);
    }
    let grid = (range_cap as u128 + 1).checked_pow(free as u32).unwrap_or(u128::MAX);
    if grid > MAX_TUPLES {
        return Err(Error::SearchTooLarge(grid));
    }

    // F is affine in the free ε; keep only the coefficients some term touches.
    let width = 2 * half + 1;
    let mut base = vec![BigInt::zero(); width];
    for (i, eps) in forced_eps.iter().enumerate() {
        for (b, c) in base.iter_mut().zip(f_basis(i, half)) {
            *b += eps.to_integer() * c;
        }
    }
    let directions: Vec<Vec<BigInt>> = (forced_len..=m).map(|i| f_basis(i, half)).collect();
    let support: Vec<usize> = (0..width)
        .filter(|&w| !base[w].is_zero() || directions.iter().any(|dir| !dir[w].is_zero()))
        .collect();
    let base: Vec<i128> = support.iter().map(|&w| to_i128(&base[w])).collect::<Result<_>>()?;
    let directions: Vec<Vec<i128>> = directions
        .iter()
        .map(|dir| support.iter().map(|&w| to_i128(&dir[w])).collect::<Result<_>>())
        .collect::<Result<_>>()?;

    let tuples: Vec<Vec<u64>> = if free == 0 {
        if base.iter().all(|&c| c >= 0) {
            vec![Vec::new()]
        } else {
            Vec::new()
        }
    } else {
        let mut found: Vec<Vec<u64>> = (0..=range_cap)
            .into_par_iter()
            .flat_map_iter(|first| {
                let mut start = base.clone();
                for (s, c) in start.iter_mut().zip(&directions[0]) {
                    *s += first as i128 * c;
                }
                let mut out = Vec::new();
                let mut prefix = vec![first];
                sweep(&start, &directions[1..], range_cap, &mut prefix, &mut out);
                out
            })
            .collect();
        found.sort();
        found
    };
    report.tuples_checked = grid;

    let invariant = invariant_completion(half, d);
    report.solutions = tuples
        .into_iter()
        .map(|eps_free| {
            let eps: Vec<BigRational> = forced_eps
                .iter()
                .cloned()
                .chain(eps_free.iter().map(|&v| BigRational::from_integer(v.into())))
                .collect();
            let decomposition = GleasonDecomposition::from_eps(half, eps, forced_len);
            solution(n, d, eps_free, decomposition, &invariant)
        })
        .collect::<Result<_>>()?;
    Ok(report)
}

/// Depth-first over the remaining free coordinates, adding one direction per
/// level; `current` already includes the chosen prefix.
fn sweep(current: &[i128], rest: &[Vec<i128>], cap: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
    let Some((dir, tail)) = rest.split_first() else {
        if current.iter().all(|&c| c >= 0) {
            out.push(prefix.clone());
        }
        return;
    };
    let mut acc = current.to_vec();
    for t in 0..=cap {
        prefix.push(t);
        sweep(&acc, tail, cap, prefix, out);
        prefix.pop();
        for (a, c) in acc.iter_mut().zip(dir) {
            *a += c;
        }
    }
}

/// `S(Y) = Σ_j c_j (1 + Y)^{N−4j} (Y(1 − Y)²)^j` with `S = 3/2 + O(Y^d)` and
/// `c_j = 0` for `j >= d`, as coefficients `0..=N` in `Y = y²`.
fn invariant_completion(half: usize, d: usize) -> Vec<BigRational> {
    let order = half + 1;
    let mut target = vec![BigRational::zero(); order];
    target[0] = BigRational::new(3.into(), 2.into());
    let mut s = vec![BigRational::zero(); order];
    let mut residual = target;
    for j in 0..=(half / 4).min(d.saturating_sub(1)) {
        let basis = TruncatedSeries::one_plus_y_pow((half - 4 * j) as i64, order)
            .mul(&TruncatedSeries::monomial(j, order))
            .mul(&TruncatedSeries::one_minus_y_pow(2 * j as i64, order));
        let c = residual[j].clone();
        for ((r, acc), b) in residual.iter_mut().zip(s.iter_mut()).zip(basis.coeffs()) {
            *r -= &c * b;
            *acc += &c * b;
        }
    }
    s
}

fn solution(
    n: usize,
    d: usize,
    eps_free: Vec<u64>,
    decomposition: GleasonDecomposition,
    invariant: &[BigRational],
) -> Result<FeasibilitySolution> {
    let f_poly = f_from_decomposition(&decomposition)?;
    let b = decomposition.reconstruct();
    let half = n / 2;
    let b_y: Vec<BigRational> = (0..=half).map(|j| b.coeff(2 * j)).collect();
    let b_prefix_ok = b_y[0] == BigRational::new(1.into(), 2.into())
        && b_y.iter().take(d.min(half + 1)).skip(1).all(Zero::is_zero);
    let two = BigRational::from_integer(2.into());
    let a: Vec<BigRational> = invariant.iter().zip(&b_y).map(|(s, b)| (s + b) / &two).collect();
    let dual: Vec<BigRational> = invariant.iter().zip(&b_y).map(|(s, b)| s - b).collect();
    let w_d = from_y_squared(&a);
    let w_dual = from_y_squared(&dual);
    Ok(FeasibilitySolution {
        n,
        d,
        eps_free,
        f_ok: is_good(&f_poly),
        w_d_ok: is_good(&w_d),
        w_dual_ok: is_good(&w_dual),
        b_prefix_ok,
        decomposition,
        f_poly,
        w_d,
        w_dual,
    })
}
