//! Inverse semigroups: unique inverses, the natural order and maximal subgroups.

use std::fmt;

use super::FinSemigroup;
use crate::bits::Bits;
use crate::error::{Error, Result};

/// Witness that a semigroup is not inverse: `element` has `inverses.len() != 1` inverses.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NotInverse {
    pub element: usize,
    pub inverses: Vec<usize>,
}

impl fmt::Display for NotInverse {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "element {} has {} inverses {:?}",
            self.element,
            self.inverses.len(),
            self.inverses
        )
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InverseStructure {
    base: FinSemigroup,
    inv: Vec<usize>,
    idempotents: Bits,
}

impl InverseStructure {
    /// Finds the inverse of every element by exhaustive search.
    pub fn new(s: &FinSemigroup) -> Result<Self, NotInverse> {
        let n = s.len();
        let mut inv = Vec::with_capacity(n);
        for x in 0..n {
            let cands: Vec<usize> = (0..n)
                .filter(|&y| s.mul(s.mul(x, y), x) == x && s.mul(s.mul(y, x), y) == y)
                .collect();
            if cands.len() != 1 {
                return Err(NotInverse {
                    element: x,
                    inverses: cands,
                });
            }
            inv.push(cands[0]);
        }
        Ok(InverseStructure {
            base: s.clone(),
            inv,
            idempotents: s.idempotents(),
        })
    }

    pub fn base(&self) -> &FinSemigroup {
        &self.base
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    pub fn inverses(&self) -> &[usize] {
        &self.inv
    }

    pub fn idempotents(&self) -> &Bits {
        &self.idempotents
    }

    /// `xx⁻¹`.
    pub fn range_idempotent(&self, x: usize) -> usize {
        self.base.mul(x, self.inv[x])
    }

    /// `x⁻¹x`.
    pub fn domain_idempotent(&self, x: usize) -> usize {
        self.base.mul(self.inv[x], x)
    }

    /// First `x` with `xx⁻¹ ≠ x⁻¹x`, if any.
    pub fn clifford_witness(&self) -> Option<usize> {
        (0..self.base.len()).find(|&x| self.range_idempotent(x) != self.domain_idempotent(x))
    }

    pub fn is_clifford(&self) -> bool {
        self.clifford_witness().is_none()
    }

    fn require_idempotent(&self, e: usize) -> Result<()> {
        if e >= self.base.len() || !self.idempotents.contains(e) {
            return Err(Error::Domain(format!("{e} is not an idempotent")));
        }
        Ok(())
    }

    /// `e ≤ f` iff `ef = e`.
    pub fn natural_order(&self, e: usize, f: usize) -> Result<bool> {
        self.require_idempotent(e)?;
        self.require_idempotent(f)?;
        Ok(self.base.mul(e, f) == e)
    }

    /// `H_e = {x : xx⁻¹ = e = x⁻¹x}`, checked to be a group with identity `e`.
    pub fn maximal_subgroup(&self, e: usize) -> Result<Bits> {
        self.require_idempotent(e)?;
        let n = self.base.len();
        let h = Bits::from_indices(
            n,
            (0..n).filter(|&x| self.range_idempotent(x) == e && self.domain_idempotent(x) == e),
        );
        for x in h.iter() {
            if !h.contains(self.inv[x]) || self.base.mul(e, x) != x || self.base.mul(x, e) != x {
                return Err(Error::TheoremViolation(format!("H_{e} is not a group at {x}")));
            }
            for y in h.iter() {
                if !h.contains(self.base.mul(x, y)) {
                    return Err(Error::TheoremViolation(format!("H_{e} not closed at ({x}, {y})")));
                }
            }
        }
        Ok(h)
    }
}
