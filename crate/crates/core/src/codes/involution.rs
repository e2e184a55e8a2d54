use super::LinearCode;
use crate::error::{Error, Result};
use crate::gf2::{BitMatrix, BitVector};

/// A coordinate permutation of order at most two.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Involution {
    /// 0-based image of each coordinate.
    images: Vec<usize>,
}

impl Involution {
    /// Builds from 1-based images, as written in permutation files.
    pub fn from_one_based(images: &[usize]) -> Result<Self> {
        let n = images.len();
        let zero_based = images
            .iter()
            .map(|&i| {
                if i == 0 || i > n {
                    Err(Error::NotPermutation(format!("image {i} outside 1..={n}")))
                } else {
                    Ok(i - 1)
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_zero_based(zero_based)
    }

    pub fn from_zero_based(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n {
                return Err(Error::NotPermutation(format!("image {} outside 1..={n}", i + 1)));
            }
            if std::mem::replace(&mut seen[i], true) {
                return Err(Error::NotPermutation(format!("image {} repeated", i + 1)));
            }
        }
        for (x, &y) in images.iter().enumerate() {
            if images[y] != x {
                return Err(Error::NotInvolution {
                    coordinate: x + 1,
                    image: y + 1,
                });
            }
        }
        Ok(Self { images })
    }

    /// Product of disjoint transpositions given by 1-based coordinates.
    pub fn from_transpositions(n: usize, swaps: &[(usize, usize)]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        for &(a, b) in swaps {
            if a == 0 || b == 0 || a > n || b > n || a == b {
                return Err(Error::NotPermutation(format!("bad transposition ({a},{b})")));
            }
            if images[a - 1] != a - 1 || images[b - 1] != b - 1 {
                return Err(Error::NotPermutation(format!("transposition ({a},{b}) overlaps another")));
            }
            images[a - 1] = b - 1;
            images[b - 1] = a - 1;
        }
        Self::from_zero_based(images)
    }

    /// `(1,2)(3,4)…(n−1,n)`.
    pub fn adjacent_pairs(n: usize) -> Result<Self> {
        if n % 2 == 1 {
            return Err(Error::OddLength(n));
        }
        Self::from_zero_based((0..n).map(|i| i ^ 1).collect())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.images.len()
    }

    /// 0-based image of 0-based coordinate `i`.
    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn one_based_images(&self) -> Vec<usize> {
        self.images.iter().map(|i| i + 1).collect()
    }

    pub fn first_fixed_point(&self) -> Option<usize> {
        self.images.iter().enumerate().find(|(i, &j)| *i == j).map(|(i, _)| i)
    }

    pub fn is_fixed_point_free(&self) -> bool {
        self.first_fixed_point().is_none()
    }

    /// `σ(v)`: the entry at coordinate `i` moves to `σ(i)`.
    pub fn apply(&self, v: &BitVector) -> BitVector {
        assert_eq!(v.len(), self.n(), "length mismatch");
        BitVector::from_indices(self.n(), v.support().map(|i| self.images[i]))
    }

    /// Orbits of a fixed-point-free involution as a pair scheme.
    pub fn pair_scheme(&self) -> Result<PairScheme> {
        if let Some(p) = self.first_fixed_point() {
            return Err(Error::HasFixedPoints(p + 1));
        }
        let pairs = (0..self.n()).filter(|&i| i < self.images[i]).map(|i| (i, self.images[i])).collect();
        Ok(PairScheme { n: self.n(), pairs })
    }
}

/// A partition of `0..n` into pairs, ordered by the smaller element of each
/// pair (its representative).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairScheme {
    n: usize,
    pairs: Vec<(usize, usize)>,
}

impl PairScheme {
    pub fn new(n: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut seen = vec![false; n];
        let mut normalized = Vec::with_capacity(pairs.len());
        for &(a, b) in pairs {
            let (lo, hi) = (a.min(b), a.max(b));
            if hi >= n || lo == hi || seen[lo] || seen[hi] {
                return Err(Error::InvalidArgument(format!("pair ({a},{b}) is not disjoint from the rest")));
            }
            seen[lo] = true;
            seen[hi] = true;
            normalized.push((lo, hi));
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidArgument("pairs do not cover every coordinate".into()));
        }
        normalized.sort_unstable();
        Ok(Self { n, pairs: normalized })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    pub fn representatives(&self) -> Vec<usize> {
        self.pairs.iter().map(|p| p.0).collect()
    }
}

pub fn stabilizes(code: &LinearCode, sigma: &Involution) -> Result<bool> {
    if sigma.n() != code.n() {
        return Err(Error::LengthMismatch {
            expected: code.n(),
            actual: sigma.n(),
        });
    }
    Ok(code.basis().iter().all(|r| code.contains_unchecked(&sigma.apply(r))))
}

/// `{c + σ(c)}` evaluated on the basis: row `j` is `g_j + σ(g_j)`.
fn trace_rows(code: &LinearCode, sigma: &Involution) -> BitMatrix {
    let rows = code.basis().iter().map(|r| r.xor(&sigma.apply(r))).collect();
    BitMatrix::new(code.n(), rows).expect("same length")
}

/// `C(σ) = {c ∈ C : σ(c) = c}`, the kernel of `id + σ` on `C`.
pub fn fixed_code(code: &LinearCode, sigma: &Involution) -> Result<LinearCode> {
    if !stabilizes(code, sigma)? {
        return Err(Error::NotStabilizing);
    }
    // left kernel: coefficient vectors x with x · T = 0
    let t = trace_rows(code, sigma);
    let coeffs = t.transpose().kernel();
    let rows = coeffs.rows().iter().map(|x| code.generator().combine(x)).collect();
    LinearCode::new(code.n(), rows)
}

/// Reads the representative coordinate of each pair from pair-constant words.
pub fn project_pi(fixed: &LinearCode, scheme: &PairScheme) -> Result<LinearCode> {
    if scheme.n() != fixed.n() {
        return Err(Error::LengthMismatch {
            expected: fixed.n(),
            actual: scheme.n(),
        });
    }
    for (row_index, row) in fixed.basis().iter().enumerate() {
        if let Some(&(a, b)) = scheme.pairs().iter().find(|(a, b)| row.get(*a) != row.get(*b)) {
            return Err(Error::NotPairConstant {
                row: row_index,
                a: a + 1,
                b: b + 1,
            });
        }
    }
    let reps = scheme.representatives();
    LinearCode::new(reps.len(), fixed.basis().iter().map(|r| r.select(&reps)).collect())
}

/// Outcome of the free-module test for a self-dual code and a
/// fixed-point-free involution in its automorphism group.
#[derive(Debug, Clone)]
pub struct FreeModuleCheck {
    pub is_free: bool,
    pub fixed_code: LinearCode,
    pub scheme: PairScheme,
    /// `π(C(σ))`.
    pub pi_image: LinearCode,
    /// `π({c + σ(c) : c ∈ C})`, verified equal to `π(C(σ))⊥`.
    pub pi_trace: LinearCode,
}

/// `C` is free over F_2⟨σ⟩ exactly when `π(C(σ))` is self-dual.
///
/// Also checks the identity `π({c + σ(c)}) = π(C(σ))⊥` and reports a
/// violation as [`Error::Consistency`].
pub fn is_free_module(code: &LinearCode, sigma: &Involution) -> Result<FreeModuleCheck> {
    if sigma.n() != code.n() {
        return Err(Error::LengthMismatch {
            expected: code.n(),
            actual: sigma.n(),
        });
    }
    if code.n() % 2 == 1 {
        return Err(Error::OddLength(code.n()));
    }
    if !code.is_self_dual() {
        return Err(Error::NotSelfDual);
    }
    let scheme = sigma.pair_scheme()?;
    let fixed = fixed_code(code, sigma)?;
    let pi_image = project_pi(&fixed, &scheme)?;
    let trace = LinearCode::from_matrix(&trace_rows(code, sigma));
    let pi_trace = project_pi(&trace, &scheme)?;
    if &pi_trace != pi_image.dual() {
        return Err(Error::Consistency(format!(
            "π({{c+σ(c)}}) has dimension {} but π(C(σ))⊥ has dimension {}",
            pi_trace.dim(),
            pi_image.dual().dim()
        )));
    }
    Ok(FreeModuleCheck {
        is_free: pi_image.is_self_dual(),
        fixed_code: fixed,
        scheme,
        pi_image,
        pi_trace,
    })
}
