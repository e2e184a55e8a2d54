//! Binary linear codes: duals, predicates, subcodes, shadows, classic
//! constructions and the involution / fixed-code machinery.

mod involution;
mod qr;
mod shadow;
pub(crate) mod sweep;

use std::fmt;
use std::sync::{Arc, OnceLock};

pub use involution::{fixed_code, is_free_module, project_pi, stabilizes, FreeModuleCheck, Involution, PairScheme};
pub use qr::{extended_qr_code, is_prime, qr_involution};
pub use shadow::Shadow;

use crate::error::{Error, Result};
use crate::gf2::{kernel_from_rref, reduce_against, BitMatrix, BitVector};

/// Default limit on the number of information bits swept exhaustively.
pub const DEFAULT_CAP: usize = 28;

#[derive(Default)]
struct Cache {
    dual: OnceLock<LinearCode>,
    weights: OnceLock<Vec<u64>>,
}

/// A subspace of F_2^n held by its reduced row-echelon generator matrix.
///
/// Two codes compare equal exactly when they are the same subspace. Clones
/// share the lazily filled dual and weight-distribution caches.
#[derive(Clone)]
pub struct LinearCode {
    n: usize,
    generator: BitMatrix,
    pivots: Vec<usize>,
    cache: Arc<Cache>,
}

impl LinearCode {
    /// Span of `rows`; dependent rows are dropped.
    pub fn new(n: usize, rows: Vec<BitVector>) -> Result<Self> {
        Ok(Self::from_matrix(&BitMatrix::new(n, rows)?))
    }

    pub fn from_matrix(m: &BitMatrix) -> Self {
        let ech = m.reduce();
        Self {
            n: m.ncols(),
            generator: ech.matrix,
            pivots: ech.pivots,
            cache: Arc::default(),
        }
    }

    pub fn from_strs(n: usize, rows: &[&str]) -> Result<Self> {
        Ok(Self::from_matrix(&BitMatrix::from_strs(n, rows)?))
    }

    pub fn zero(n: usize) -> Self {
        Self::from_matrix(&BitMatrix::empty(n))
    }

    pub fn full(n: usize) -> Self {
        Self::from_matrix(&BitMatrix::identity(n))
    }

    /// `⟨11⟩ ⊕ ⟨11⟩ ⊕ …`, the self-dual code i_2^{n/2}.
    pub fn pairs_code(n: usize) -> Result<Self> {
        if n % 2 == 1 {
            return Err(Error::OddLength(n));
        }
        Self::new(n, (0..n / 2).map(|i| BitVector::from_indices(n, [2 * i, 2 * i + 1])).collect())
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn dim(&self) -> usize {
        self.generator.nrows()
    }

    /// Generator matrix in reduced row-echelon form.
    #[inline]
    pub fn generator(&self) -> &BitMatrix {
        &self.generator
    }

    #[inline]
    pub fn basis(&self) -> &[BitVector] {
        self.generator.rows()
    }

    #[inline]
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check_len(&self, v: &BitVector) -> Result<()> {
        if v.len() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: v.len(),
            });
        }
        Ok(())
    }

    pub fn contains(&self, v: &BitVector) -> Result<bool> {
        self.check_len(v)?;
        Ok(self.contains_unchecked(v))
    }

    pub(crate) fn contains_unchecked(&self, v: &BitVector) -> bool {
        reduce_against(self.basis(), &self.pivots, v.clone()).is_zero()
    }

    /// Coordinates of a codeword with respect to [`Self::basis`].
    pub fn coordinates(&self, v: &BitVector) -> Result<Option<BitVector>> {
        self.check_len(v)?;
        // RREF: the coefficient of row i is the pivot bit of v
        let coeffs = BitVector::from_bools(&self.pivots.iter().map(|&p| v.get(p)).collect::<Vec<_>>());
        Ok((self.generator.combine(&coeffs) == *v).then_some(coeffs))
    }

    pub fn dual(&self) -> &LinearCode {
        self.cache
            .dual
            .get_or_init(|| Self::from_matrix(&kernel_from_rref(self.basis(), &self.pivots, self.n)))
    }

    pub fn is_self_orthogonal(&self) -> bool {
        let rows = self.basis();
        rows.iter()
            .enumerate()
            .all(|(i, a)| rows[i..].iter().all(|b| !a.dot_unchecked(b)))
    }

    /// Basis weights divisible by 4 plus pairwise orthogonality; closure follows
    /// from `wt(u+v) = wt(u) + wt(v) − 2 wt(u∧v)`.
    pub fn is_doubly_even(&self) -> bool {
        self.basis().iter().all(|r| r.weight() % 4 == 0) && self.is_self_orthogonal()
    }

    pub fn is_even(&self) -> bool {
        self.basis().iter().all(|r| r.weight() % 2 == 0)
    }

    pub fn contains_all_ones(&self) -> bool {
        self.contains_unchecked(&BitVector::ones(self.n))
    }

    pub fn is_self_dual(&self) -> bool {
        2 * self.dim() == self.n && self.is_self_orthogonal()
    }

    /// Self-orthogonal, contains the all-ones vector, and has codimension 2
    /// in its dual.
    pub fn is_semi_self_dual(&self) -> bool {
        self.n >= 2 && 2 * self.dim() + 2 == self.n && self.is_self_orthogonal() && self.contains_all_ones()
    }

    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        self.n == other.n && self.basis().iter().all(|r| other.contains_unchecked(r))
    }

    /// Weight distribution `A_0..A_n` by exhaustive Gray-code sweep.
    pub fn weight_distribution(&self, cap: usize) -> Result<&[u64]> {
        if let Some(w) = self.cache.weights.get() {
            return Ok(w);
        }
        if self.dim() > cap {
            return Err(Error::TooLarge { dim: self.dim(), cap });
        }
        Ok(self
            .cache
            .weights
            .get_or_init(|| sweep::weight_counts(self.basis(), &BitVector::zeros(self.n))))
    }

    /// Minimum nonzero weight, or `None` for the zero code.
    pub fn min_distance(&self) -> Result<Option<usize>> {
        self.min_distance_with_cap(DEFAULT_CAP)
    }

    pub fn min_distance_with_cap(&self, cap: usize) -> Result<Option<usize>> {
        let counts = self.weight_distribution(cap)?;
        Ok(counts.iter().enumerate().skip(1).find(|(_, &c)| c > 0).map(|(w, _)| w))
    }

    /// Every codeword, in Gray order starting from zero.
    pub fn codewords(&self, cap: usize) -> Result<Vec<BitVector>> {
        if self.dim() > cap {
            return Err(Error::TooLarge { dim: self.dim(), cap });
        }
        Ok(sweep::words(self.basis(), &BitVector::zeros(self.n)))
    }

    /// The subcode `{Σ x_j g_j : Σ x_j f_j = 0}` cut out by the linear functional
    /// taking value `f_j` on basis row `j`.
    pub fn functional_kernel(&self, values: &BitVector) -> LinearCode {
        assert_eq!(values.len(), self.dim(), "functional length must equal the dimension");
        let Some(j0) = values.first_one() else {
            return self.clone();
        };
        let rows = self.basis();
        let kept = (0..rows.len())
            .filter(|&j| j != j0)
            .map(|j| if values.get(j) { rows[j].xor(&rows[j0]) } else { rows[j].clone() })
            .collect();
        Self::from_matrix(&BitMatrix::new(self.n, kept).expect("rows share the code length"))
    }

    /// `self ∩ v⊥`.
    pub fn orthogonal_subcode(&self, v: &BitVector) -> Result<LinearCode> {
        self.check_len(v)?;
        let values = BitVector::from_bools(&self.basis().iter().map(|r| r.dot_unchecked(v)).collect::<Vec<_>>());
        Ok(self.functional_kernel(&values))
    }

    /// `self + ⟨extra⟩`.
    pub fn extend(&self, extra: &[BitVector]) -> Result<LinearCode> {
        let mut rows = self.basis().to_vec();
        for v in extra {
            self.check_len(v)?;
            rows.push(v.clone());
        }
        Self::new(self.n, rows)
    }

    pub fn sum(&self, other: &LinearCode) -> Result<LinearCode> {
        self.extend(other.basis())
    }

    pub fn intersection(&self, other: &LinearCode) -> Result<LinearCode> {
        if other.n != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: other.n,
            });
        }
        Ok(self.dual().sum(other.dual())?.dual().clone())
    }

    pub fn direct_sum(&self, other: &LinearCode) -> LinearCode {
        let n = self.n + other.n;
        let left = self.basis().iter().map(|r| r.concat(&BitVector::zeros(other.n)));
        let right = other.basis().iter().map(|r| BitVector::zeros(self.n).concat(r));
        Self::from_matrix(&BitMatrix::new(n, left.chain(right).collect()).expect("lengths agree"))
    }

    /// Values of the functional `c ↦ wt(c)/2 mod 2` on the basis rows. Linear on
    /// self-orthogonal codes.
    pub(crate) fn half_weight_functional(&self) -> BitVector {
        BitVector::from_bools(&self.basis().iter().map(|r| r.weight() % 4 == 2).collect::<Vec<_>>())
    }

    /// The maximal doubly-even subcode `D_0`: the kernel of `c ↦ wt(c)/2 mod 2`.
    pub fn doubly_even_subcode(&self) -> Result<LinearCode> {
        if !self.is_self_orthogonal() {
            return Err(Error::NotSelfOrthogonal);
        }
        Ok(self.functional_kernel(&self.half_weight_functional()))
    }

    /// Representatives `v1, v2` of a basis of `D⊥ / D`, in the order the RREF
    /// basis of `D⊥` produces them.
    fn quotient_basis(&self) -> Vec<BitVector> {
        let mut span = self.clone();
        let mut reps = Vec::new();
        for v in self.dual().basis() {
            if !span.contains_unchecked(v) {
                reps.push(v.clone());
                span = span.extend(std::slice::from_ref(v)).expect("same length");
            }
        }
        reps
    }

    /// The three self-dual codes strictly between a semi self-dual `D` and `D⊥`.
    pub fn selfdual_between(&self) -> Result<[LinearCode; 3]> {
        if !self.is_semi_self_dual() {
            return Err(Error::NotSemiSelfDual);
        }
        let reps = self.quotient_basis();
        debug_assert_eq!(reps.len(), 2);
        let candidates = [reps[0].clone(), reps[1].clone(), reps[0].xor(&reps[1])];
        let codes = candidates.map(|v| self.extend(&[v]).expect("same length"));
        for c in &codes {
            if !c.is_self_dual() {
                return Err(Error::Consistency(format!("{c:?} is not self-dual")));
            }
        }
        Ok(codes)
    }

    /// Enlarges a self-orthogonal code containing 1 to a semi self-dual code.
    ///
    /// Each round adjoins the first RREF basis vector of `E⊥` lying in `D⊥ \ D`
    /// for the current `D`; if none does, the first basis vector of `D⊥` outside
    /// `D` is used instead.
    pub fn extract_semi_selfdual(&self) -> Result<LinearCode> {
        if !self.is_self_orthogonal() {
            return Err(Error::NotSelfOrthogonal);
        }
        if !self.contains_all_ones() {
            return Err(Error::MissingAllOnes);
        }
        let codim = self.n - 2 * self.dim();
        if codim < 2 || codim % 2 == 1 {
            return Err(Error::BadCodimension(codim));
        }
        let outer = self.dual().basis().to_vec();
        let mut d = self.clone();
        while d.n - 2 * d.dim() > 2 {
            let admissible = |v: &BitVector, d: &LinearCode| {
                d.basis().iter().all(|r| !r.dot_unchecked(v)) && !d.contains_unchecked(v)
            };
            let next = outer
                .iter()
                .find(|v| admissible(v, &d))
                .or_else(|| d.dual().basis().iter().find(|v| !d.contains_unchecked(v)))
                .cloned()
                .ok_or_else(|| Error::Consistency("dual equals code before reaching codimension 2".into()))?;
            d = d.extend(&[next])?;
        }
        debug_assert!(d.is_semi_self_dual());
        Ok(d)
    }

    /// Applies a coordinate permutation to every codeword.
    pub fn permuted(&self, sigma: &Involution) -> Result<LinearCode> {
        if sigma.n() != self.n {
            return Err(Error::LengthMismatch {
                expected: self.n,
                actual: sigma.n(),
            });
        }
        Self::new(self.n, self.basis().iter().map(|r| sigma.apply(r)).collect())
    }

    /// The self-dual shadow `S(C) = C_0⊥ \ C⊥` of a self-orthogonal code that is
    /// not doubly-even, kept as a coset of `C⊥`.
    pub fn shadow(&self) -> Result<Shadow> {
        Shadow::of(self)
    }

    /// `S(F) = F_0⊥ \ F` for a self-dual, non-doubly-even `F`.
    pub fn self_dual_shadow(&self) -> Result<Shadow> {
        if !self.is_self_dual() {
            return Err(Error::NotSelfDual);
        }
        Shadow::of(self)
    }
}

impl PartialEq for LinearCode {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.generator == other.generator
    }
}

impl Eq for LinearCode {}

impl std::hash::Hash for LinearCode {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        self.n.hash(state);
        self.generator.hash(state);
    }
}

impl fmt::Debug for LinearCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]{:?}", self.n, self.dim(), self.generator)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn code(n: usize, rows: &[&str]) -> LinearCode {
        LinearCode::from_strs(n, rows).unwrap()
    }

    fn bv(s: &str) -> BitVector {
        s.parse().unwrap()
    }

    fn hamming8() -> LinearCode {
        code(8, &["11110000", "00111100", "00001111", "10101010"])
    }

    /// All vectors of length n orthogonal to the code, by brute force.
    fn brute_dual_words(c: &LinearCode) -> Vec<BitVector> {
        (0u32..1 << c.n())
            .map(|m| BitVector::from_indices(c.n(), (0..c.n()).filter(|i| m >> i & 1 == 1)))
            .filter(|v| c.basis().iter().all(|r| !r.dot(v).unwrap()))
            .collect()
    }

    #[test]
    fn dual_of_all_ones_is_even_weight_code() {
        let c = code(4, &["1111"]);
        let d = c.dual();
        assert_eq!(d.dim(), 3);
        assert_eq!(d.min_distance().unwrap(), Some(2));
        for v in brute_dual_words(&c) {
            assert!(d.contains(&v).unwrap());
        }
    }

    #[test]
    fn dual_degenerate() {
        assert_eq!(LinearCode::full(2).dual(), &LinearCode::zero(2));
        assert_eq!(LinearCode::zero(3).dual(), &LinearCode::full(3));
    }

    #[test]
    fn dual_of_worked_six() {
        let c = code(6, &["111111", "110000"]);
        let d = c.dual();
        assert_eq!(d.dim(), 4);
        assert!(d.contains(&bv("110000")).unwrap());
        let brute = brute_dual_words(&c);
        assert_eq!(brute.len(), 16);
        assert!(brute.iter().all(|v| d.contains(v).unwrap()));
        assert_eq!(d.dual(), &c);
    }

    #[test]
    fn semi_self_dual_examples() {
        assert!(code(4, &["1111"]).is_semi_self_dual());
        assert!(code(6, &["111111", "110000"]).is_semi_self_dual());
        assert!(!code(2, &["11"]).is_semi_self_dual());
        assert!(!code(4, &["1100"]).is_semi_self_dual());
    }

    #[test]
    fn predicates() {
        let c = code(4, &["1111"]);
        assert!(c.is_doubly_even());
        let w = code(6, &["111111", "110000"]);
        assert!(!w.is_doubly_even());
        assert!(w.is_self_orthogonal());
        assert!(w.contains_all_ones());
        let h = hamming8();
        assert!(h.is_doubly_even() && h.is_self_orthogonal() && h.contains_all_ones());
        assert!(h.is_self_dual());
        assert_eq!(h.min_distance().unwrap(), Some(4));
    }

    #[test]
    fn min_distance_of_zero_code_is_empty() {
        assert_eq!(LinearCode::zero(5).min_distance().unwrap(), None);
    }

    #[test]
    fn min_distance_cap() {
        let c = LinearCode::full(10);
        assert_eq!(c.min_distance_with_cap(9), Err(Error::TooLarge { dim: 10, cap: 9 }));
        assert_eq!(c.min_distance_with_cap(10).unwrap(), Some(1));
    }

    #[test]
    fn doubly_even_subcode_examples() {
        let d0 = code(6, &["111111", "110000"]).doubly_even_subcode().unwrap();
        assert_eq!(d0, code(6, &["001111"]));
        let h = hamming8();
        assert_eq!(h.doubly_even_subcode().unwrap(), h);
        assert_eq!(code(2, &["11"]).doubly_even_subcode().unwrap(), LinearCode::zero(2));
        assert_eq!(code(3, &["110", "011"]).doubly_even_subcode().unwrap_err(), Error::NotSelfOrthogonal);
    }

    #[test]
    fn selfdual_between_length_four() {
        let d = code(4, &["1111"]);
        let mut got: Vec<LinearCode> = d.selfdual_between().unwrap().into();
        got.sort_by_key(|c| c.generator().to_string());
        let mut want = vec![code(4, &["1111", "1100"]), code(4, &["1111", "1010"]), code(4, &["1111", "1001"])];
        want.sort_by_key(|c| c.generator().to_string());
        assert_eq!(got, want);
        for c in &got {
            assert_eq!(c.min_distance().unwrap(), Some(2));
        }
    }

    #[test]
    fn selfdual_between_length_six() {
        let d = code(6, &["111111", "110000"]);
        let three = d.selfdual_between().unwrap();
        for c in &three {
            assert!(c.is_self_dual());
            assert_eq!(c.dim(), 3);
            assert_eq!(c.min_distance().unwrap(), Some(2));
            assert!(d.is_subcode_of(c) && c.is_subcode_of(d.dual()));
        }
        assert_eq!(three[0].intersection(&three[1]).unwrap(), d);
        assert_eq!(code(2, &["11"]).selfdual_between().unwrap_err(), Error::NotSemiSelfDual);
    }

    #[test]
    fn extract_examples() {
        let e = code(4, &["1111"]);
        assert_eq!(e.extract_semi_selfdual().unwrap(), e);
        let e6 = code(6, &["111111"]);
        let d = e6.extract_semi_selfdual().unwrap();
        assert!(d.is_semi_self_dual());
        assert_eq!(d.dim(), 2);
        assert!(e6.is_subcode_of(&d));
        assert_eq!(code(4, &["1100"]).extract_semi_selfdual().unwrap_err(), Error::MissingAllOnes);
        assert_eq!(code(2, &["11"]).extract_semi_selfdual().unwrap_err(), Error::BadCodimension(0));
    }

    #[test]
    fn extract_from_long_all_ones() {
        let e = code(12, &["111111111111"]);
        let d = e.extract_semi_selfdual().unwrap();
        assert!(d.is_semi_self_dual());
        assert!(e.is_subcode_of(&d));
    }

    #[test]
    fn coordinates_round_trip() {
        let h = hamming8();
        let w = h.basis()[0].xor(&h.basis()[2]);
        assert_eq!(h.coordinates(&w).unwrap(), Some(bv("1010")));
        assert_eq!(h.coordinates(&bv("10000000")).unwrap(), None);
    }

    #[test]
    fn pairs_code_is_self_dual() {
        let c = LinearCode::pairs_code(8).unwrap();
        assert!(c.is_self_dual());
        assert_eq!(c.min_distance().unwrap(), Some(2));
        assert!(LinearCode::pairs_code(5).is_err());
    }
}
