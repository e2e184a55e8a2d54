//! Gray-code sweeps over `offset + span(basis)`.
//!
//! Consecutive Gray codes differ in one bit, so every step costs a single row
//! XOR. Large sweeps are split into fixed-size index ranges processed in
//! parallel; each range seeds its starting word directly from the Gray code of
//! its first index, so results do not depend on the split or thread count.

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, Ordering};

use rayon::prelude::*;

use crate::gf2::{BitVector, WORD_BITS};

/// Sweeps below this many words run on the calling thread.
const CHUNK_BITS: usize = 16;

trait Packed: Clone + Send + Sync {
    fn from_words(words: &[u64]) -> Self;
    fn xor_in(&mut self, other: &Self);
    fn ones(&self) -> u32;
}

impl<const W: usize> Packed for [u64; W] {
    #[inline]
    fn from_words(words: &[u64]) -> Self {
        let mut out = [0u64; W];
        out[..words.len()].copy_from_slice(words);
        out
    }

    #[inline]
    fn xor_in(&mut self, other: &Self) {
        for (a, b) in self.iter_mut().zip(other) {
            *a ^= b;
        }
    }

    #[inline]
    fn ones(&self) -> u32 {
        self.iter().map(|w| w.count_ones()).sum()
    }
}

impl Packed for Vec<u64> {
    fn from_words(words: &[u64]) -> Self {
        words.to_vec()
    }

    #[inline]
    fn xor_in(&mut self, other: &Self) {
        for (a, b) in self.iter_mut().zip(other) {
            *a ^= b;
        }
    }

    #[inline]
    fn ones(&self) -> u32 {
        self.iter().map(|w| w.count_ones()).sum()
    }
}

struct Sweep<P> {
    basis: Vec<P>,
    offset: P,
}

impl<P: Packed> Sweep<P> {
    fn new(basis: &[BitVector], offset: &BitVector) -> Self {
        Self {
            basis: basis.iter().map(|b| P::from_words(b.words())).collect(),
            offset: P::from_words(offset.words()),
        }
    }

    fn word_at(&self, index: u64) -> P {
        let gray = index ^ (index >> 1);
        let mut w = self.offset.clone();
        for (j, b) in self.basis.iter().enumerate() {
            if gray >> j & 1 == 1 {
                w.xor_in(b);
            }
        }
        w
    }

    /// Visits indices `start..end` in Gray order, passing each word's weight.
    fn walk<B>(&self, start: u64, end: u64, mut visit: impl FnMut(u64, u32) -> ControlFlow<B>) -> ControlFlow<B> {
        let mut w = self.word_at(start);
        visit(start, w.ones())?;
        for idx in start + 1..end {
            w.xor_in(&self.basis[idx.trailing_zeros() as usize]);
            visit(idx, w.ones())?;
        }
        ControlFlow::Continue(())
    }

    fn ranges(&self) -> Vec<(u64, u64)> {
        let k = self.basis.len();
        let total = 1u64 << k;
        if k <= CHUNK_BITS {
            return vec![(0, total)];
        }
        let size = 1u64 << CHUNK_BITS;
        (0..total / size).map(|c| (c * size, (c + 1) * size)).collect()
    }

    fn weight_counts(&self, n: usize) -> Vec<u64> {
        self.ranges()
            .into_par_iter()
            .map(|(s, e)| {
                let mut counts = vec![0u64; n + 1];
                let _ = self.walk::<()>(s, e, |_, wt| {
                    counts[wt as usize] += 1;
                    ControlFlow::Continue(())
                });
                counts
            })
            .reduce(
                || vec![0u64; n + 1],
                |mut a, b| {
                    for (x, y) in a.iter_mut().zip(b) {
                        *x += y;
                    }
                    a
                },
            )
    }

    fn min_weight(&self, skip_first: bool) -> Option<u32> {
        self.ranges()
            .into_par_iter()
            .filter_map(|(s, e)| {
                let mut best: Option<u32> = None;
                let _ = self.walk::<()>(s, e, |idx, wt| {
                    if !(skip_first && idx == 0) {
                        best = Some(best.map_or(wt, |b| b.min(wt)));
                    }
                    ControlFlow::Continue(())
                });
                best
            })
            .min()
    }

    fn any_weight_at_most(&self, threshold: u32) -> bool {
        let found = AtomicBool::new(false);
        self.ranges().into_par_iter().for_each(|(s, e)| {
            if found.load(Ordering::Relaxed) {
                return;
            }
            let hit = self.walk(s, e, |idx, wt| {
                if wt <= threshold {
                    return ControlFlow::Break(());
                }
                if idx & 0xfff == 0 && found.load(Ordering::Relaxed) {
                    return ControlFlow::Break(());
                }
                ControlFlow::Continue(())
            });
            // a break caused by the flag check only happens once `found` is set
            if hit.is_break() {
                found.store(true, Ordering::Relaxed);
            }
        });
        found.into_inner()
    }
}

macro_rules! dispatch {
    ($n:expr, $basis:expr, $offset:expr, |$s:ident| $body:expr) => {{
        match $n.div_ceil(WORD_BITS) {
            0 | 1 => {
                let $s = Sweep::<[u64; 1]>::new($basis, $offset);
                $body
            }
            2 => {
                let $s = Sweep::<[u64; 2]>::new($basis, $offset);
                $body
            }
            3 | 4 => {
                let $s = Sweep::<[u64; 4]>::new($basis, $offset);
                $body
            }
            _ => {
                let $s = Sweep::<Vec<u64>>::new($basis, $offset);
                $body
            }
        }
    }};
}

/// Number of words of each weight `0..=n` in `offset + span(basis)`.
pub(crate) fn weight_counts(basis: &[BitVector], offset: &BitVector) -> Vec<u64> {
    let n = offset.len();
    dispatch!(n, basis, offset, |s| s.weight_counts(n))
}

/// Minimum weight over the coset. With `skip_first`, the word at Gray index 0
/// (the offset itself) is excluded, which for a zero offset skips the zero word.
pub(crate) fn min_weight(basis: &[BitVector], offset: &BitVector, skip_first: bool) -> Option<usize> {
    let n = offset.len();
    dispatch!(n, basis, offset, |s| s.min_weight(skip_first)).map(|w| w as usize)
}

/// Whether some word of the coset has weight at most `threshold`.
pub(crate) fn any_weight_at_most(basis: &[BitVector], offset: &BitVector, threshold: usize) -> bool {
    let n = offset.len();
    let t = threshold.min(u32::MAX as usize) as u32;
    dispatch!(n, basis, offset, |s| s.any_weight_at_most(t))
}

/// All words of the coset, in Gray order. Only for small dimensions.
pub(crate) fn words(basis: &[BitVector], offset: &BitVector) -> Vec<BitVector> {
    let n = offset.len();
    let mut w = offset.clone();
    let total = 1u64 << basis.len();
    let mut out = Vec::with_capacity(total as usize);
    out.push(w.clone());
    for idx in 1..total {
        w.xor_assign(&basis[idx.trailing_zeros() as usize]);
        out.push(w.clone());
    }
    debug_assert!(out.iter().all(|v| v.len() == n));
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn naive_counts(basis: &[BitVector], offset: &BitVector) -> Vec<u64> {
        let mut counts = vec![0u64; offset.len() + 1];
        for mask in 0u64..1 << basis.len() {
            let mut w = offset.clone();
            for (j, b) in basis.iter().enumerate() {
                if mask >> j & 1 == 1 {
                    w.xor_assign(b);
                }
            }
            counts[w.weight()] += 1;
        }
        counts
    }

    fn pseudo_random_basis(n: usize, k: usize, seed: u64) -> Vec<BitVector> {
        let mut state = seed;
        (0..k)
            .map(|_| {
                BitVector::from_indices(
                    n,
                    (0..n).filter(|_| {
                        state ^= state << 13;
                        state ^= state >> 7;
                        state ^= state << 17;
                        state & 1 == 1
                    }),
                )
            })
            .collect()
    }

    #[test]
    fn counts_match_naive_for_each_packing() {
        for &n in &[5usize, 64, 100, 200, 300] {
            let basis = pseudo_random_basis(n, 9, n as u64 + 1);
            let offset = pseudo_random_basis(n, 1, 99)[0].clone();
            assert_eq!(weight_counts(&basis, &offset), naive_counts(&basis, &offset), "n = {n}");
            let zero = BitVector::zeros(n);
            assert_eq!(weight_counts(&basis, &zero), naive_counts(&basis, &zero));
        }
    }

    #[test]
    fn chunked_sweep_matches_naive() {
        // 2^18 words: four parallel ranges
        let basis = pseudo_random_basis(40, 18, 7);
        let zero = BitVector::zeros(40);
        let counts = weight_counts(&basis, &zero);
        assert_eq!(counts.iter().sum::<u64>(), 1 << 18);
        let naive_min = naive_counts(&basis, &zero)
            .iter()
            .enumerate()
            .skip(1)
            .find(|(_, &c)| c > 0)
            .map(|(w, _)| w);
        // the basis may be dependent, in which case zero repeats; compare against counts
        let from_counts = if counts[0] > 1 {
            Some(0)
        } else {
            counts.iter().enumerate().skip(1).find(|(_, &c)| c > 0).map(|(w, _)| w)
        };
        assert_eq!(min_weight(&basis, &zero, true), from_counts.or(naive_min));
    }

    #[test]
    fn threshold_search() {
        let basis: Vec<BitVector> = ["111100", "001111"].iter().map(|s| s.parse().unwrap()).collect();
        let offset: BitVector = "100000".parse().unwrap();
        assert!(any_weight_at_most(&basis, &offset, 1));
        assert!(!any_weight_at_most(&basis, &offset, 0));
        assert_eq!(min_weight(&basis, &offset, false), Some(1));
        assert_eq!(words(&basis, &offset).len(), 4);
    }

    #[test]
    fn empty_basis() {
        let offset: BitVector = "101".parse().unwrap();
        assert_eq!(weight_counts(&[], &offset), vec![0, 0, 1, 0]);
        assert_eq!(min_weight(&[], &offset, true), None);
        assert_eq!(min_weight(&[], &offset, false), Some(2));
    }
}
