use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use super::{check_length, selfdual_bound, theorem_bound, BoundCase, BoundReport};
use crate::enumerators::{alpha, eps_factor, top_index};
use crate::error::Result;

/// An index `i` at which `d(D⊥) >= 2(i + 1)` would force an impossible
/// `ε_i = (−1)^i 2^{N−2−6i} α_i(N)`.
///
/// Beyond `M = ⌊(N − 2)/4⌋` the decomposition has no `e_i`, so any nonzero
/// `α_i(N)` is already a contradiction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    pub n: usize,
    pub index: usize,
    pub alpha: BigInt,
    pub eps: BigRational,
    pub negative: bool,
    pub non_integral: bool,
    pub beyond_top: bool,
}

impl Certificate {
    /// Certificate at `index` if the forced `ε` is impossible there.
    pub fn at(n: usize, index: usize) -> Option<Self> {
        let half = n / 2;
        let alpha = alpha(index, half);
        let e = BigRational::new(alpha.clone(), BigInt::from(2));
        let eps = e * eps_factor(index, half);
        let negative = eps.is_negative();
        let non_integral = !eps.is_integer();
        let beyond_top = index > top_index(half) && !alpha.is_zero();
        (negative || non_integral || beyond_top).then_some(Self {
            n,
            index,
            alpha,
            eps,
            negative,
            non_integral,
            beyond_top,
        })
    }

    /// Dual-distance bound this certificate proves.
    pub fn bound(&self) -> usize {
        2 * self.index
    }

    /// Recomputes `α` at the stored index and confirms the violation.
    pub fn verify(&self) -> bool {
        Self::at(self.n, self.index).as_ref() == Some(self)
    }
}

impl fmt::Display for Certificate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut reasons = Vec::new();
        if self.negative {
            reasons.push("negative");
        }
        if self.non_integral {
            reasons.push("not an integer");
        }
        if self.beyond_top {
            reasons.push("nonzero beyond the top index");
        }
        write!(
            f,
            "i = {}: alpha = {}, eps = {} ({})",
            self.index,
            self.alpha,
            self.eps,
            reasons.join(", ")
        )
    }
}

/// Re-derives the bound from the forced coefficients.
///
/// Assuming `d(D⊥) >= bound + 2`, every `e_i` with `2i < bound + 2` equals
/// `½ α_i(N)`; the report carries the first index where the resulting `ε_i`
/// cannot occur. The argument concerns codes that are not doubly-even; the
/// doubly-even case is covered by [`super::doubly_even_bound`], which never
/// exceeds the bound proved here.
pub fn prove_bound(n: usize) -> Result<BoundReport> {
    check_length(n)?;
    let claimed = theorem_bound(n, false)?;
    if matches!(claimed.case, BoundCase::Middle | BoundCase::Top) {
        return Ok(BoundReport {
            bound: selfdual_bound(n)?,
            note: Some("no enumerator obstruction at this length".into()),
            ..claimed
        });
    }
    let assumed_half = claimed.bound / 2 + 1;
    let certificate = (0..assumed_half).find_map(|i| Certificate::at(n, i));
    debug_assert!(certificate.is_some(), "no obstruction below {assumed_half} at n = {n}");
    Ok(BoundReport {
        certificate,
        ..claimed
    })
}

/// The smallest index with an impossible forced `ε`, which bounds `d(D⊥)` by
/// `2 · index` for codes that are not doubly-even. Scans `i <= N/2`.
pub fn first_obstruction(n: usize) -> Result<Option<Certificate>> {
    check_length(n)?;
    Ok((0..=n / 4).find_map(|i| Certificate::at(n, i)))
}
