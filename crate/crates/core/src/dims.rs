//! Tensor-factor bookkeeping for H^(N) = H^(d1) x ... x H^(dn).
//!
//! Basis states are enumerated row-major by factor digits (j1...jn) with the
//! leftmost factor most significant, so |jk> on two qubits is index 2j + k.

use crate::error::{Error, Result};
use serde::{Deserialize, Serialize};

/// The factor dimensions d_k of a tensor-product space and their product N.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DimensionSpec {
    factors: Vec<usize>,
}

impl DimensionSpec {
    /// Builds a spec from factor dimensions; every d_k must be at least 2.
    pub fn new(factors: &[usize]) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::InvalidDimension("no factors given".into()));
        }
        if let Some(&d) = factors.iter().find(|&&d| d < 2) {
            return Err(Error::InvalidDimension(format!("factor dimension {d} < 2")));
        }
        Ok(Self {
            factors: factors.to_vec(),
        })
    }

    /// Two factors of equal dimension d.
    pub fn bipartite(d: usize) -> Result<Self> {
        Self::new(&[d, d])
    }

    /// n qubit factors.
    pub fn qubits(n: usize) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidDimension("need at least one qubit".into()));
        }
        Self::new(&vec![2; n])
    }

    pub fn factors(&self) -> &[usize] {
        &self.factors
    }

    /// Number of tensor factors n.
    pub fn factor_count(&self) -> usize {
        self.factors.len()
    }

    /// Total dimension N = prod d_k.
    pub fn total(&self) -> usize {
        self.factors.iter().product()
    }

    /// Composes factor digits into a flat basis index.
    pub fn index_of(&self, digits: &[usize]) -> usize {
        debug_assert_eq!(digits.len(), self.factors.len());
        let mut idx = 0;
        for (&digit, &d) in digits.iter().zip(&self.factors) {
            debug_assert!(digit < d);
            idx = idx * d + digit;
        }
        idx
    }

    /// Decomposes a flat basis index into factor digits.
    pub fn digits_of(&self, mut index: usize) -> Vec<usize> {
        let mut digits = vec![0; self.factors.len()];
        for (slot, &d) in digits.iter_mut().zip(&self.factors).rev() {
            *slot = index % d;
            index /= d;
        }
        digits
    }

    /// Iterates all digit tuples in row-major order.
    pub fn iter_digits(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        (0..self.total()).map(|i| self.digits_of(i))
    }
}

impl std::fmt::Display for DimensionSpec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join("x"))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn index_roundtrip() {
        let dims = DimensionSpec::new(&[2, 3, 2]).unwrap();
        assert_eq!(dims.total(), 12);
        for i in 0..12 {
            assert_eq!(dims.index_of(&dims.digits_of(i)), i);
        }
    }

    #[test]
    fn leftmost_factor_most_significant() {
        let dims = DimensionSpec::bipartite(2).unwrap();
        // |10> = index 2
        assert_eq!(dims.index_of(&[1, 0]), 2);
        assert_eq!(dims.digits_of(1), vec![0, 1]);
    }

    #[test]
    fn rejects_degenerate_factors() {
        assert!(DimensionSpec::new(&[]).is_err());
        assert!(DimensionSpec::new(&[2, 1]).is_err());
    }
}
