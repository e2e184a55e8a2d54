use super::{sweep, LinearCode};
use crate::error::{Error, Result};
use crate::gf2::BitVector;

/// The shadow `C_0⊥ \ C⊥` of a self-orthogonal code `C` that is not
/// doubly-even, stored as the single nontrivial coset `rep + C⊥`.
#[derive(Debug, Clone)]
pub struct Shadow {
    representative: BitVector,
    base: LinearCode,
}

impl Shadow {
    pub(super) fn of(code: &LinearCode) -> Result<Self> {
        if !code.is_self_orthogonal() {
            return Err(Error::NotSelfOrthogonal);
        }
        if code.is_doubly_even() {
            return Err(Error::DoublyEven);
        }
        let d0 = code.doubly_even_subcode()?;
        let base = code.dual().clone();
        let representative = d0
            .dual()
            .basis()
            .iter()
            .find(|v| !base.contains_unchecked(v))
            .cloned()
            .ok_or_else(|| Error::Consistency("C_0⊥ does not exceed C⊥".into()))?;
        Ok(Self { representative, base })
    }

    pub fn representative(&self) -> &BitVector {
        &self.representative
    }

    /// The code `C⊥` this shadow is a coset of.
    pub fn base(&self) -> &LinearCode {
        &self.base
    }

    pub fn len(&self) -> u128 {
        1u128 << self.base.dim()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, v: &BitVector) -> Result<bool> {
        self.base.contains(&v.xor(&self.representative))
    }

    /// Count of shadow vectors of each weight `0..=n`.
    pub fn weight_distribution(&self, cap: usize) -> Result<Vec<u64>> {
        self.check_cap(cap)?;
        Ok(sweep::weight_counts(self.base.basis(), &self.representative))
    }

    pub fn min_weight(&self, cap: usize) -> Result<usize> {
        self.check_cap(cap)?;
        Ok(sweep::min_weight(self.base.basis(), &self.representative, false).expect("coset is nonempty"))
    }

    pub fn words(&self, cap: usize) -> Result<Vec<BitVector>> {
        self.check_cap(cap)?;
        Ok(sweep::words(self.base.basis(), &self.representative))
    }

    fn check_cap(&self, cap: usize) -> Result<()> {
        if self.base.dim() > cap {
            return Err(Error::TooLarge {
                dim: self.base.dim(),
                cap,
            });
        }
        Ok(())
    }
}
