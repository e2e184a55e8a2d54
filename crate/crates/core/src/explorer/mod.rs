//! Searches over self-dual codes and their hyperplanes, plus the end-to-end
//! free-module pipelines for fixed-point-free involutions.

mod pipeline;

pub use pipeline::{
    analyze_involution, involution_pipeline, non_free_witness, BlockReport, InvolutionReport, NonFreeReport,
};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bounds::theorem_bound;
use crate::codes::{extended_qr_code, sweep, LinearCode};
use crate::error::{Error, Result};
use crate::gf2::BitVector;

/// `(C ∩ v⊥) + ⟨v⟩` for a self-dual `C` and an even-weight `v ∉ C`.
pub fn neighbor(code: &LinearCode, v: &BitVector) -> Result<LinearCode> {
    if !code.is_self_dual() {
        return Err(Error::NotSelfDual);
    }
    if v.len() != code.n() {
        return Err(Error::LengthMismatch {
            expected: code.n(),
            actual: v.len(),
        });
    }
    if v.weight() % 2 == 1 {
        return Err(Error::OddWeight(v.weight()));
    }
    if code.contains_unchecked(v) {
        return Err(Error::AlreadyInCode);
    }
    let next = code.orthogonal_subcode(v)?.extend(std::slice::from_ref(v))?;
    if !next.is_self_dual() {
        return Err(Error::Consistency("neighbour step left the self-dual codes".into()));
    }
    Ok(next)
}

/// A uniformly random even-weight vector outside `code`; `code` must be a
/// proper subcode of the even-weight code.
fn random_even_outside(code: &LinearCode, rng: &mut ChaCha8Rng) -> Result<BitVector> {
    let n = code.n();
    if code.dim() + 1 >= n {
        return Err(Error::NoNeighbor);
    }
    loop {
        let mut v = BitVector::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.5)));
        if v.weight() % 2 == 1 {
            v.flip(n - 1);
        }
        if !code.contains_unchecked(&v) {
            return Ok(v);
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub n: usize,
    pub max_neighbor_steps: usize,
    pub rng_seed: u64,
    /// Hyperplanes scanned per visited self-dual code.
    pub hyperplane_limit: usize,
    pub doubly_even_only: bool,
    /// End the walk as soon as the theorem bound is reached.
    pub stop_at_bound: bool,
}

impl SearchConfig {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            max_neighbor_steps: 10_000,
            rng_seed: 1,
            hyperplane_limit: 4095,
            doubly_even_only: false,
            stop_at_bound: true,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SharpnessResult {
    pub n: usize,
    pub best_dual_distance: usize,
    /// Semi self-dual code with `d(witness⊥) = best_dual_distance`.
    pub witness: LinearCode,
    pub bound: usize,
    pub is_sharp: bool,
    pub self_dual_visited: usize,
    pub hyperplanes_scanned: usize,
}

/// What the walk hands to an observer.
#[derive(Debug, Clone, Copy)]
pub enum Visit<'a> {
    /// A self-dual code reached by the walk.
    SelfDual(&'a LinearCode),
    /// A semi self-dual hyperplane whose dual distance was evaluated.
    Hyperplane(&'a LinearCode),
}

pub fn sharpness_search(cfg: &SearchConfig) -> Result<SharpnessResult> {
    sharpness_search_with(cfg, |_| {})
}

/// Random walk on the neighbour graph, scanning the hyperplanes `D ∋ 1` of
/// each visited self-dual `C` and keeping the largest `d(D⊥)`.
///
/// A hyperplane is `D = C ∩ w⊥`, with `D⊥ = C + ⟨w⟩`, so
/// `d(D⊥) = min(d(C), d(w + C))`. Codes with `d(C)` no better than the current
/// best are not scanned, and cosets holding a word of weight `<= best` are
/// dropped before their minimum is computed; the observer sees every
/// hyperplane that survives these filters.
pub fn sharpness_search_with(cfg: &SearchConfig, mut observe: impl FnMut(Visit<'_>)) -> Result<SharpnessResult> {
    let n = cfg.n;
    if n % 2 == 1 {
        return Err(Error::OddLength(n));
    }
    if n < 4 {
        return Err(Error::InvalidArgument(format!("semi self-dual codes need n >= 4, got {n}")));
    }
    if cfg.doubly_even_only && n % 4 != 0 {
        return Err(Error::InvalidArgument(format!(
            "doubly-even semi self-dual codes need 4 | n, got {n}"
        )));
    }
    let bound = theorem_bound(n, cfg.doubly_even_only)?.bound;
    let mut starts = Vec::new();
    if n == 24 {
        starts.push(extended_qr_code(23)?);
    }
    starts.push(LinearCode::pairs_code(n)?);

    let mut state = WalkState {
        best: 0,
        witness: None,
        self_dual_visited: 0,
        hyperplanes_scanned: 0,
    };
    'walks: for (walk, start) in starts.into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(cfg.rng_seed.wrapping_add(walk as u64));
        let mut code = start;
        for step in 0..=cfg.max_neighbor_steps {
            state.visit(&code, cfg, &mut observe)?;
            if cfg.stop_at_bound && state.best >= bound {
                break 'walks;
            }
            if step < cfg.max_neighbor_steps {
                let v = random_even_outside(&code, &mut rng)?;
                code = neighbor(&code, &v)?;
            }
        }
    }
    let witness = state
        .witness
        .ok_or_else(|| Error::Consistency("the search scanned no hyperplane".into()))?;
    Ok(SharpnessResult {
        n,
        best_dual_distance: state.best,
        witness,
        bound,
        is_sharp: state.best == bound,
        self_dual_visited: state.self_dual_visited,
        hyperplanes_scanned: state.hyperplanes_scanned,
    })
}

struct WalkState {
    best: usize,
    witness: Option<LinearCode>,
    self_dual_visited: usize,
    hyperplanes_scanned: usize,
}

impl WalkState {
    fn visit(&mut self, code: &LinearCode, cfg: &SearchConfig, observe: &mut impl FnMut(Visit<'_>)) -> Result<()> {
        self.self_dual_visited += 1;
        observe(Visit::SelfDual(code));
        let dc = code.min_distance()?.expect("self-dual codes are nonzero");
        if dc <= self.best {
            return Ok(());
        }
        let k = code.dim();
        // The coordinates of 1 are all ones, so λ(1) = 0 means λ has even weight.
        let functionals: Box<dyn Iterator<Item = BitVector>> = if cfg.doubly_even_only && !code.is_doubly_even() {
            Box::new(std::iter::once(code.half_weight_functional()))
        } else {
            Box::new(
                (1u64..)
                    .take_while(move |&i| k >= 64 || i < 1u64 << k)
                    .filter(|i| i.count_ones() % 2 == 0)
                    .map(move |i| BitVector::from_indices(k, (0..k.min(64)).filter(|&j| i >> j & 1 == 1)))
                    .take(cfg.hyperplane_limit),
            )
        };
        for lambda in functionals {
            let w = BitVector::from_indices(code.n(), lambda.support().map(|j| code.pivots()[j]));
            if sweep::any_weight_at_most(code.basis(), &w, self.best) {
                continue;
            }
            let coset = sweep::min_weight(code.basis(), &w, false).expect("coset is nonempty");
            let dd = dc.min(coset);
            let hyperplane = code.functional_kernel(&lambda);
            debug_assert!(hyperplane.is_semi_self_dual());
            self.hyperplanes_scanned += 1;
            observe(Visit::Hyperplane(&hyperplane));
            if dd > self.best {
                self.best = dd;
                self.witness = Some(hyperplane);
                if dc <= self.best {
                    break;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn code(n: usize, rows: &[&str]) -> LinearCode {
        LinearCode::from_strs(n, rows).unwrap()
    }

    #[test]
    fn neighbour_examples() {
        let c = code(4, &["1100", "0011"]);
        let v: BitVector = "1010".parse().unwrap();
        assert_eq!(neighbor(&c, &v).unwrap(), code(4, &["1111", "1010"]));
        assert_eq!(neighbor(&c, &"1100".parse().unwrap()).unwrap_err(), Error::AlreadyInCode);
        assert_eq!(neighbor(&c, &"1000".parse().unwrap()).unwrap_err(), Error::OddWeight(1));
        let two = code(2, &["11"]);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert_eq!(random_even_outside(&two, &mut rng).unwrap_err(), Error::NoNeighbor);
        assert_eq!(neighbor(&two, &"11".parse().unwrap()).unwrap_err(), Error::AlreadyInCode);
    }

    #[test]
    fn small_lengths_are_sharp() {
        for (n, expected) in [(4, 2), (6, 2), (8, 2), (10, 2)] {
            let r = sharpness_search(&SearchConfig::new(n)).unwrap();
            assert_eq!((r.best_dual_distance, r.is_sharp), (expected, true), "n = {n}");
            assert!(r.witness.is_semi_self_dual());
            assert_eq!(r.witness.dual().min_distance().unwrap(), Some(expected));
        }
    }

    #[test]
    fn doubly_even_mode_keeps_doubly_even_witnesses() {
        let mut cfg = SearchConfig::new(8);
        cfg.doubly_even_only = true;
        let r = sharpness_search(&cfg).unwrap();
        assert!(r.witness.is_doubly_even() && r.witness.is_semi_self_dual());
        cfg.n = 10;
        assert!(sharpness_search(&cfg).is_err());
    }

    #[test]
    fn searches_are_deterministic() {
        let mut cfg = SearchConfig::new(12);
        cfg.max_neighbor_steps = 40;
        cfg.stop_at_bound = false;
        let a = sharpness_search(&cfg).unwrap();
        let b = sharpness_search(&cfg).unwrap();
        assert_eq!(a.witness, b.witness);
        assert_eq!(a.hyperplanes_scanned, b.hyperplanes_scanned);
        assert_eq!(a.self_dual_visited, 41);
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn neighbour_steps_stay_self_dual(half in 2usize..=10, seed in any::<u64>()) {
            let n = 2 * half;
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let mut c = LinearCode::pairs_code(n).unwrap();
            for _ in 0..3 {
                let v = random_even_outside(&c, &mut rng).unwrap();
                let next = neighbor(&c, &v).unwrap();
                prop_assert_eq!(next.n(), n);
                prop_assert!(next.is_self_dual());
                prop_assert!(c.orthogonal_subcode(&v).unwrap().is_subcode_of(&next));
                prop_assert_eq!(neighbor(&next, &v).unwrap_err(), Error::AlreadyInCode);
                c = next;
            }
        }
    }
}
