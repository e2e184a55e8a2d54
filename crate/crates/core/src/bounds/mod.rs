//! Upper bounds on the dual distance of semi self-dual codes, the enumerator
//! arguments that certify them, and the search for enumerators that survive
//! those arguments.

mod feasibility;
mod prove;

pub use feasibility::{feasibility_search, FeasibilityReport, FeasibilitySolution, DEFAULT_RANGE_CAP};
pub use prove::{first_obstruction, prove_bound, Certificate};

use std::fmt;

use num_rational::Ratio;

use crate::codes::{LinearCode, DEFAULT_CAP};
use crate::enumerators::binom_parity;
use crate::error::{Error, Result};

/// Which row of the length table a bound comes from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BoundCase {
    /// `n ≡ 0, 2, …, 14 (mod 24)`: `4⌊n/24⌋ + 2`.
    Low,
    /// `n ≡ 16, 18, 20 (mod 24)`: `4⌊n/24⌋ + 4`.
    Middle,
    /// `n ≡ 22 (mod 24)`: `4⌊n/24⌋ + 6`.
    Top,
    /// `n = 24μ` and `D` doubly-even: `4μ`.
    DoublyEven,
    /// `n = 24μ` with `C(5μ − 1, μ − 1)` odd: `4μ`.
    OddBinomial,
}

impl BoundCase {
    pub fn label(self) -> &'static str {
        match self {
            BoundCase::Low => "n = 0..14 mod 24",
            BoundCase::Middle => "n = 16, 18, 20 mod 24",
            BoundCase::Top => "n = 22 mod 24",
            BoundCase::DoublyEven => "n = 24mu, doubly-even",
            BoundCase::OddBinomial => "n = 24mu, binom(5mu-1, mu-1) odd",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub n: usize,
    pub case: BoundCase,
    /// Even upper bound on `d(D⊥)`.
    pub bound: usize,
    pub certificate: Option<Certificate>,
    pub note: Option<String>,
}

fn check_length(n: usize) -> Result<()> {
    if n % 2 == 1 {
        return Err(Error::OddLength(n));
    }
    if n < 4 {
        return Err(Error::InvalidArgument(format!("semi self-dual lengths start at 4, got {n}")));
    }
    Ok(())
}

/// The bound for semi self-dual codes of length `n`; the `n = 24μ` clause
/// applies when `doubly_even` holds or `C(5μ − 1, μ − 1)` is odd.
pub fn theorem_bound(n: usize, doubly_even: bool) -> Result<BoundReport> {
    check_length(n)?;
    let mu = n / 24;
    let (case, bound) = match n % 24 {
        0 if doubly_even => (BoundCase::DoublyEven, 4 * mu),
        0 if binom_parity(mu as u64) => (BoundCase::OddBinomial, 4 * mu),
        0..=14 => (BoundCase::Low, 4 * mu + 2),
        16..=20 => (BoundCase::Middle, 4 * mu + 4),
        _ => (BoundCase::Top, 4 * mu + 6),
    };
    Ok(BoundReport {
        n,
        case,
        bound,
        certificate: None,
        note: None,
    })
}

/// Largest even integer `<= ⌊(8 + n)/6⌋`, for doubly-even `D` (so `4 | n`).
pub fn doubly_even_bound(n: usize) -> Result<usize> {
    if n % 4 != 0 || n == 0 {
        return Err(Error::InvalidArgument(format!(
            "doubly-even codes containing 1 need 4 | n, got {n}"
        )));
    }
    let raw = (8 + n) / 6;
    Ok(raw - raw % 2)
}

/// Dual-distance bound for doubly-even codes without the all-ones assumption.
pub fn rains_bound(n: usize) -> Result<usize> {
    if n % 4 != 0 || n == 0 {
        return Err(Error::InvalidArgument(format!("the table covers 4 | n, got {n}")));
    }
    let mu = n / 24;
    Ok(match n % 24 {
        4 | 12 => 4 * mu + 2,
        _ => 4 * mu + 4,
    })
}

/// Envelope from the minimum distance of the self-dual codes between `D`
/// and `D⊥`.
pub fn selfdual_bound(n: usize) -> Result<usize> {
    if n % 2 == 1 {
        return Err(Error::OddLength(n));
    }
    let mu = n / 24;
    Ok(if n % 24 == 22 { 4 * mu + 6 } else { 4 * mu + 4 })
}

/// Lengths `12m`, `1 <= m <= limit`, for which the bound reads `d(D⊥) <= 2m`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Coverage {
    pub covered: u64,
    pub limit: u64,
}

impl Coverage {
    pub fn fraction(&self) -> Ratio<u64> {
        Ratio::new(self.covered, self.limit)
    }

    pub fn fraction_f64(&self) -> f64 {
        self.covered as f64 / self.limit as f64
    }
}

impl fmt::Display for Coverage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{} = {:.2}", self.covered, self.limit, self.fraction_f64())
    }
}

/// Counts `m` that are odd, or `m = 2μ` with `C(5μ − 1, μ − 1)` odd.
pub fn coverage_report(limit: u64) -> Result<Coverage> {
    if limit == 0 {
        return Err(Error::InvalidArgument("coverage needs limit >= 1".into()));
    }
    let covered = (1..=limit).filter(|&m| m % 2 == 1 || binom_parity(m / 2)).count() as u64;
    Ok(Coverage { covered, limit })
}

/// Both sides of `2 d(F) + d(S(F)) <= 4 + n/2` for a self-dual `F` that is
/// not doubly-even.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShadowInequality {
    pub distance: usize,
    pub shadow_distance: usize,
    pub lhs: usize,
    pub rhs: usize,
}

impl ShadowInequality {
    pub fn holds(&self) -> bool {
        self.lhs <= self.rhs
    }
}

pub fn shadow_inequality_check(f: &LinearCode) -> Result<ShadowInequality> {
    if !f.is_self_dual() {
        return Err(Error::NotSelfDual);
    }
    if f.is_doubly_even() {
        return Err(Error::DoublyEven);
    }
    let shadow = f.self_dual_shadow()?;
    let distance = f.min_distance()?.expect("self-dual codes are nonzero");
    let shadow_distance = shadow.min_weight(DEFAULT_CAP)?;
    Ok(ShadowInequality {
        distance,
        shadow_distance,
        lhs: 2 * distance + shadow_distance,
        rhs: 4 + f.n() / 2,
    })
}
