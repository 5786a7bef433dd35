use std::collections::HashMap;

use super::linalg::{BitVec, BitVectorSpace};
use super::monomial::{monomial_basis, weighted_monomial_basis, Monomial, MonomialIndexer};
use super::poly::Polynomial;
use crate::error::{Error, Result};

#[derive(Debug, Clone)]
enum Indexer {
    Standard(MonomialIndexer),
    Weighted(HashMap<Monomial, usize>),
}

/// One homogeneous component of a polynomial ring, with the dense
/// coordinates used by the linear algebra: bit `i` is the coefficient of
/// `basis()[i]`, and the basis runs from the largest monomial down.
#[derive(Debug, Clone)]
pub struct GradedSlice {
    degree: u32,
    basis: Vec<Monomial>,
    index: Indexer,
}

impl GradedSlice {
    pub fn new(n_vars: usize, degree: u32) -> Self {
        Self {
            degree,
            basis: monomial_basis(n_vars, degree),
            index: Indexer::Standard(MonomialIndexer::new(n_vars, degree)),
        }
    }

    pub fn weighted(weights: &[u32], degree: u32) -> Self {
        if weights.iter().all(|&w| w == 1) {
            return Self::new(weights.len(), degree);
        }
        let basis = weighted_monomial_basis(weights, degree);
        let index = basis.iter().enumerate().map(|(i, &m)| (m, i)).collect();
        Self { degree, basis, index: Indexer::Weighted(index) }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.basis.len()
    }

    pub fn is_empty(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    #[inline]
    pub fn index_of(&self, m: Monomial) -> Option<usize> {
        match &self.index {
            Indexer::Standard(ix) => (m.degree() == ix.degree()).then(|| ix.index(m)),
            Indexer::Weighted(map) => map.get(&m).copied(),
        }
    }

    pub fn to_vec(&self, p: &Polynomial) -> Result<BitVec> {
        let mut v = BitVec::zeros(self.len());
        for &m in p.terms() {
            let i = self.index_of(m).ok_or(Error::NotHomogeneous)?;
            v.set(i, true);
        }
        Ok(v)
    }

    pub fn to_poly(&self, v: &BitVec) -> Polynomial {
        debug_assert_eq!(v.len(), self.len());
        // increasing index is decreasing monomial order
        Polynomial::from_sorted_unchecked(v.iter_ones().map(|i| self.basis[i]).collect())
    }

    pub fn span(&self, polys: &[Polynomial]) -> Result<BitVectorSpace> {
        let vecs = polys.iter().map(|p| self.to_vec(p)).collect::<Result<Vec<_>>>()?;
        BitVectorSpace::from_vectors(self.len(), vecs)
    }

    pub fn polys(&self, space: &BitVectorSpace) -> Vec<Polynomial> {
        space.basis().iter().map(|v| self.to_poly(v)).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip_and_rejection() {
        let s = GradedSlice::new(3, 4);
        let p = Polynomial::from_terms([Monomial::from_exponents(&[4, 0, 0]), Monomial::from_exponents(&[1, 2, 1])]);
        assert_eq!(s.to_poly(&s.to_vec(&p).unwrap()), p);
        assert!(s.to_vec(&Polynomial::var(0)).is_err());
        let w = GradedSlice::weighted(&[4, 4], 8);
        let q = Polynomial::from_terms([Monomial::from_exponents(&[1, 1])]);
        assert_eq!(w.to_poly(&w.to_vec(&q).unwrap()), q);
    }
}
