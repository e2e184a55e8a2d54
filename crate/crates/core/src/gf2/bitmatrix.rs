use std::fmt;

use super::BitVector;
use crate::error::{Error, Result};

/// Dense GF(2) matrix stored as packed rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BitMatrix {
    ncols: usize,
    rows: Vec<BitVector>,
}

/// Reduced row-echelon form of a row space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    /// Nonzero rows only.
    pub matrix: BitMatrix,
    pub rank: usize,
    /// Pivot column of each row, strictly increasing.
    pub pivots: Vec<usize>,
}

impl BitMatrix {
    pub fn new(ncols: usize, rows: Vec<BitVector>) -> Result<Self> {
        if let Some(bad) = rows.iter().find(|r| r.len() != ncols) {
            return Err(Error::LengthMismatch {
                expected: ncols,
                actual: bad.len(),
            });
        }
        Ok(Self { ncols, rows })
    }

    pub fn empty(ncols: usize) -> Self {
        Self { ncols, rows: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            ncols: n,
            rows: (0..n).map(|i| BitVector::unit(n, i)).collect(),
        }
    }

    /// Parses rows like `["1100", "0011"]`. All rows must have equal length.
    pub fn from_strs(ncols: usize, rows: &[&str]) -> Result<Self> {
        let rows = rows.iter().map(|s| s.parse()).collect::<Result<Vec<BitVector>>>()?;
        Self::new(ncols, rows)
    }

    #[inline]
    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn ncols(&self) -> usize {
        self.ncols
    }

    #[inline]
    pub fn rows(&self) -> &[BitVector] {
        &self.rows
    }

    #[inline]
    pub fn row(&self, i: usize) -> &BitVector {
        &self.rows[i]
    }

    pub fn into_rows(self) -> Vec<BitVector> {
        self.rows
    }

    pub fn push_row(&mut self, row: BitVector) -> Result<()> {
        if row.len() != self.ncols {
            return Err(Error::LengthMismatch {
                expected: self.ncols,
                actual: row.len(),
            });
        }
        self.rows.push(row);
        Ok(())
    }

    pub fn transpose(&self) -> Self {
        let mut out: Vec<BitVector> = (0..self.ncols).map(|_| BitVector::zeros(self.nrows())).collect();
        for (i, row) in self.rows.iter().enumerate() {
            for j in row.support() {
                out[j].set(i, true);
            }
        }
        Self {
            ncols: self.nrows(),
            rows: out,
        }
    }

    /// `v · M` for a coefficient vector `v` of length `nrows`.
    pub fn combine(&self, coeffs: &BitVector) -> BitVector {
        assert_eq!(coeffs.len(), self.nrows(), "coefficient length mismatch");
        let mut out = BitVector::zeros(self.ncols);
        for i in coeffs.support() {
            out.xor_assign(&self.rows[i]);
        }
        out
    }

    /// `M · vᵀ`, one parity bit per row.
    pub fn syndrome(&self, v: &BitVector) -> Result<BitVector> {
        if v.len() != self.ncols {
            return Err(Error::LengthMismatch {
                expected: self.ncols,
                actual: v.len(),
            });
        }
        Ok(BitVector::from_bools(
            &self.rows.iter().map(|r| r.dot_unchecked(v)).collect::<Vec<_>>(),
        ))
    }

    /// Reduced row-echelon form with zero rows removed.
    pub fn reduce(&self) -> Echelon {
        let (rows, pivots, _) = rref(self.rows.clone(), self.ncols, false);
        Echelon {
            rank: rows.len(),
            matrix: Self {
                ncols: self.ncols,
                rows,
            },
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.reduce().rank
    }

    /// Basis of `{v : M vᵀ = 0}`, one vector per non-pivot column.
    pub fn kernel(&self) -> Self {
        let ech = self.reduce();
        kernel_from_rref(&ech.matrix.rows, &ech.pivots, self.ncols)
    }

    /// Whether `v` lies in the row space.
    pub fn member(&self, v: &BitVector) -> Result<bool> {
        if v.len() != self.ncols {
            return Err(Error::LengthMismatch {
                expected: self.ncols,
                actual: v.len(),
            });
        }
        let ech = self.reduce();
        Ok(reduce_against(&ech.matrix.rows, &ech.pivots, v.clone()).is_zero())
    }

    /// Coefficients `c` (length `nrows`) with `c · M = target`, if any.
    pub fn solve(&self, target: &BitVector) -> Result<Option<BitVector>> {
        if target.len() != self.ncols {
            return Err(Error::LengthMismatch {
                expected: self.ncols,
                actual: target.len(),
            });
        }
        let (rows, pivots, transforms) = rref(self.rows.clone(), self.ncols, true);
        let mut residual = target.clone();
        let mut coeffs = BitVector::zeros(self.nrows());
        for ((row, &p), t) in rows.iter().zip(&pivots).zip(&transforms) {
            if residual.get(p) {
                residual.xor_assign(row);
                coeffs.xor_assign(t);
            }
        }
        Ok(residual.is_zero().then_some(coeffs))
    }

    /// Stacks `other` below `self`.
    pub fn stack(&self, other: &Self) -> Result<Self> {
        if other.ncols != self.ncols {
            return Err(Error::LengthMismatch {
                expected: self.ncols,
                actual: other.ncols,
            });
        }
        let mut rows = self.rows.clone();
        rows.extend(other.rows.iter().cloned());
        Ok(Self { ncols: self.ncols, rows })
    }
}

/// Gauss–Jordan elimination. With `track`, also returns for each output row
/// the combination of input rows that produced it.
fn rref(mut rows: Vec<BitVector>, ncols: usize, track: bool) -> (Vec<BitVector>, Vec<usize>, Vec<BitVector>) {
    let m = rows.len();
    let mut transforms: Vec<BitVector> = if track {
        (0..m).map(|i| BitVector::unit(m, i)).collect()
    } else {
        Vec::new()
    };
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        if r == m {
            break;
        }
        let Some(p) = (r..m).find(|&i| rows[i].get(col)) else {
            continue;
        };
        rows.swap(r, p);
        if track {
            transforms.swap(r, p);
        }
        for i in 0..m {
            if i != r && rows[i].get(col) {
                let (pivot_row, target) = pair_mut(&mut rows, r, i);
                target.xor_assign(pivot_row);
                if track {
                    let (pt, tt) = pair_mut(&mut transforms, r, i);
                    tt.xor_assign(pt);
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    rows.truncate(r);
    transforms.truncate(if track { r } else { 0 });
    (rows, pivots, transforms)
}

fn pair_mut<T>(v: &mut [T], a: usize, b: usize) -> (&T, &mut T) {
    debug_assert_ne!(a, b);
    if a < b {
        let (lo, hi) = v.split_at_mut(b);
        (&lo[a], &mut hi[0])
    } else {
        let (lo, hi) = v.split_at_mut(a);
        (&hi[0], &mut lo[b])
    }
}

/// Eliminates the pivot coordinates of `v` using RREF rows.
pub(crate) fn reduce_against(rows: &[BitVector], pivots: &[usize], mut v: BitVector) -> BitVector {
    for (row, &p) in rows.iter().zip(pivots) {
        if v.get(p) {
            v.xor_assign(row);
        }
    }
    v
}

pub(crate) fn kernel_from_rref(rows: &[BitVector], pivots: &[usize], ncols: usize) -> BitMatrix {
    let mut is_pivot = vec![false; ncols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    let basis = (0..ncols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = BitVector::unit(ncols, f);
            for (row, &p) in rows.iter().zip(pivots) {
                if row.get(f) {
                    v.set(p, true);
                }
            }
            v
        })
        .collect();
    BitMatrix { ncols, rows: basis }
}

impl fmt::Display for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            write!(f, "{row}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BitMatrix[{}x{}]{{", self.nrows(), self.ncols)?;
        for (i, row) in self.rows.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{row}")?;
        }
        f.write_str("}")
    }
}
