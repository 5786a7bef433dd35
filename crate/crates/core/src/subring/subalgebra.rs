use std::collections::HashMap;
use std::sync::Mutex;

use crate::error::{Error, Result};
use crate::gf2::{weighted_monomial_basis, BitMatrix, BitVec, BitVectorSpace, GradedSlice, Monomial, Polynomial};

/// The `R`-module `Σ_j R·m_j` inside a polynomial ring, where `R` is the
/// subalgebra generated by `ring_gens`. With the single module generator `1`
/// this is the subalgebra itself.
///
/// Degrees are weighted by the ambient variable weights.
#[derive(Debug)]
pub struct Subalgebra {
    weights: Vec<u32>,
    ring_gens: Vec<Polynomial>,
    ring_degrees: Vec<u32>,
    module_gens: Vec<Polynomial>,
    module_degrees: Vec<u32>,
    products: Mutex<HashMap<Monomial, Polynomial>>,
}

impl Clone for Subalgebra {
    fn clone(&self) -> Self {
        Self {
            weights: self.weights.clone(),
            ring_gens: self.ring_gens.clone(),
            ring_degrees: self.ring_degrees.clone(),
            module_gens: self.module_gens.clone(),
            module_degrees: self.module_degrees.clone(),
            products: Mutex::new(HashMap::new()),
        }
    }
}

/// One spanning element of a slice: a product of ring generators (exponents
/// recorded as a monomial in generator slots) times a module generator.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SpanTerm {
    pub ring_exponents: Monomial,
    pub module_index: usize,
}

impl Subalgebra {
    /// The subalgebra of `F_2[x_0..x_{n-1}]` (all variables of degree 1)
    /// generated by `gens`.
    pub fn new(n_vars: usize, gens: Vec<Polynomial>) -> Result<Self> {
        Self::module(vec![1; n_vars], gens, vec![Polynomial::one()])
    }

    /// `R(m_1, …, m_k)` in a polynomial ring with the given variable weights.
    pub fn module(weights: Vec<u32>, ring_gens: Vec<Polynomial>, module_gens: Vec<Polynomial>) -> Result<Self> {
        let degree = |p: &Polynomial| -> Result<u32> {
            if p.var_span() > weights.len() {
                return Err(Error::DimensionMismatch { expected: weights.len(), found: p.var_span() });
            }
            p.weighted_homogeneous_degree(&weights).ok_or(Error::NotHomogeneous)
        };
        let ring_degrees = ring_gens.iter().map(degree).collect::<Result<Vec<_>>>()?;
        if ring_degrees.contains(&0) {
            return Err(Error::Invalid("ring generators must have positive degree".into()));
        }
        if ring_gens.len() > crate::gf2::monomial::MAX_VARS {
            return Err(Error::Invalid("too many ring generators".into()));
        }
        let module_degrees = module_gens.iter().map(degree).collect::<Result<Vec<_>>>()?;
        Ok(Self { weights, ring_gens, ring_degrees, module_gens, module_degrees, products: Mutex::new(HashMap::new()) })
    }

    pub fn weights(&self) -> &[u32] {
        &self.weights
    }

    pub fn n_vars(&self) -> usize {
        self.weights.len()
    }

    pub fn ring_gens(&self) -> &[Polynomial] {
        &self.ring_gens
    }

    pub fn ring_degrees(&self) -> &[u32] {
        &self.ring_degrees
    }

    pub fn module_gens(&self) -> &[Polynomial] {
        &self.module_gens
    }

    pub fn module_degrees(&self) -> &[u32] {
        &self.module_degrees
    }

    pub fn with_module_gens(&self, module_gens: Vec<Polynomial>) -> Result<Self> {
        Self::module(self.weights.clone(), self.ring_gens.clone(), module_gens)
    }

    pub fn ambient_slice(&self, d: u32) -> GradedSlice {
        GradedSlice::weighted(&self.weights, d)
    }

    /// `∏ g_i^{e_i}` with `e` stored as a monomial over generator slots.
    pub fn ring_product(&self, e: Monomial) -> Polynomial {
        if e == Monomial::ONE {
            return Polynomial::one();
        }
        if let Some(p) = self.products.lock().unwrap().get(&e) {
            return p.clone();
        }
        let i = e.last_var().expect("non-constant exponent");
        let prev = self.ring_product(e.div_var(i).unwrap());
        let p = &prev * &self.ring_gens[i];
        self.products.lock().unwrap().insert(e, p.clone());
        p
    }

    /// All spanning products of degree `d`.
    pub fn span_terms(&self, d: u32) -> Vec<SpanTerm> {
        let mut out = Vec::new();
        for (j, &md) in self.module_degrees.iter().enumerate() {
            if md > d {
                continue;
            }
            for e in weighted_monomial_basis(&self.ring_degrees, d - md) {
                out.push(SpanTerm { ring_exponents: e, module_index: j });
            }
        }
        out
    }

    pub fn term_value(&self, t: SpanTerm) -> Polynomial {
        &self.ring_product(t.ring_exponents) * &self.module_gens[t.module_index]
    }

    fn spanning_vectors(&self, d: u32, slice: &GradedSlice) -> Result<(Vec<SpanTerm>, Vec<BitVec>)> {
        let terms = self.span_terms(d);
        let vecs = terms.iter().map(|&t| slice.to_vec(&self.term_value(t))).collect::<Result<Vec<_>>>()?;
        Ok((terms, vecs))
    }

    /// Degree-`d` part, as a subspace of the ambient slice.
    pub fn slice(&self, d: u32) -> Result<(GradedSlice, BitVectorSpace)> {
        let slice = self.ambient_slice(d);
        let (_, vecs) = self.spanning_vectors(d, &slice)?;
        let space = BitVectorSpace::from_vectors(slice.len(), vecs)?;
        Ok((slice, space))
    }

    pub fn dims(&self, bound: u32) -> Result<Vec<usize>> {
        (0..=bound).map(|d| Ok(self.slice(d)?.1.dim())).collect()
    }

    /// Membership of a homogeneous `p`, with the spanning products summing
    /// to it when it lies in the module.
    pub fn membership(&self, p: &Polynomial) -> Result<Option<Vec<SpanTerm>>> {
        if p.is_zero() {
            return Ok(Some(Vec::new()));
        }
        let d = p.weighted_homogeneous_degree(&self.weights).ok_or(Error::NotHomogeneous)?;
        let slice = self.ambient_slice(d);
        let (terms, vecs) = self.spanning_vectors(d, &slice)?;
        let target = slice.to_vec(p)?;
        Ok(solve_in_span(&vecs, &target).map(|ix| ix.into_iter().map(|i| terms[i]).collect()))
    }

    pub fn contains(&self, p: &Polynomial) -> Result<bool> {
        Ok(self.membership(p)?.is_some())
    }
}

/// Indices of a subset of `vecs` summing to `target`, if any.
pub fn solve_in_span(vecs: &[BitVec], target: &BitVec) -> Option<Vec<usize>> {
    let n = target.len();
    let k = vecs.len();
    // rows [v_i | e_i]; reduce the target alongside
    let rows: Vec<BitVec> = vecs.iter().enumerate().map(|(i, v)| v.concat(&BitVec::unit(k, i))).collect();
    let mut m = BitMatrix::from_rows(n + k, &rows).ok()?;
    let pivots = m.rref();
    let mut t = target.concat(&BitVec::zeros(k));
    for (r, &p) in pivots.iter().enumerate() {
        if p >= n {
            break;
        }
        if t.get(p) {
            t.xor_assign(&m.row(r));
        }
    }
    if !t.slice(0, n).is_zero() {
        return None;
    }
    Some(t.slice(n, n + k).iter_ones().collect())
}
