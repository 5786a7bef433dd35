//! Invariants of free graded modules `F_2[c_1..c_m]·(e_1, …, e_k)` under a
//! group acting semilinearly: `g(f·e) = g(f)·g(e)`.
//!
//! Elements are stored as polynomials in a weighted ring on the coefficient
//! variables and the basis symbols, linear in the basis symbols. Each group
//! generator is a substitution of those variables.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{weighted_monomial_basis, BitMatrix, BitVec, BitVectorSpace, GradedSlice, Monomial, Polynomial, Ring};
use crate::subring::Subalgebra;

#[derive(Debug, Clone)]
pub struct GradedModule {
    ring: Ring,
    n_coeff: usize,
    /// Per generator, the image of every variable (coefficients then basis).
    images: Vec<Vec<Polynomial>>,
}

/// Monomials of degree `d` that are linear in the basis symbols.
fn module_monomials(weights: &[u32], n_coeff: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    for b in n_coeff..weights.len() {
        if weights[b] > d {
            continue;
        }
        for m in weighted_monomial_basis(&weights[..n_coeff], d - weights[b]) {
            out.push(m.mul(Monomial::var(b)));
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

impl GradedModule {
    /// `actions[g]` maps variable names to image expressions; unlisted
    /// variables are fixed.
    pub fn new(coefficients: &[(&str, u32)], basis: &[(&str, u32)], actions: &[Vec<(&str, &str)>]) -> Result<Self> {
        let names: Vec<&str> = coefficients.iter().chain(basis).map(|(n, _)| *n).collect();
        let weights: Vec<u32> = coefficients.iter().chain(basis).map(|(_, w)| *w).collect();
        let ring = Ring::weighted(&names, &weights);
        let n_coeff = coefficients.len();
        let mut images = Vec::new();
        for act in actions {
            let mut img: Vec<Polynomial> = (0..names.len()).map(Polynomial::var).collect();
            for (name, expr) in act {
                let i = ring.index_of(name).ok_or_else(|| Error::UnknownName(name.to_string()))?;
                let p = ring.parse(expr)?;
                let ok_degree = p.weighted_homogeneous_degree(&weights) == Some(weights[i]);
                // basis images stay linear in the basis, coefficient images avoid it
                let linear = p.terms().iter().all(|m| {
                    let basis_deg: u32 = (n_coeff..names.len()).map(|b| m.exponent(b)).sum();
                    basis_deg == u32::from(i >= n_coeff)
                });
                if !ok_degree || !linear {
                    return Err(Error::Invalid(format!("image of {name} is not a degree-preserving module map")));
                }
                img[i] = p;
            }
            images.push(img);
        }
        let m = Self { ring, n_coeff, images };
        m.check_invertible(12)?;
        Ok(m)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn n_coefficients(&self) -> usize {
        self.n_coeff
    }

    fn weights(&self) -> &[u32] {
        self.ring.weights()
    }

    /// Slice basis of the module, or of the coefficient ring alone.
    fn slice_basis(&self, d: u32, coefficients_only: bool) -> Vec<Monomial> {
        if coefficients_only {
            let mut b = weighted_monomial_basis(&self.weights()[..self.n_coeff], d);
            b.sort_unstable_by(|a, b| b.cmp(a));
            b
        } else {
            module_monomials(self.weights(), self.n_coeff, d)
        }
    }

    /// Action matrices of the generators on a slice, as columns.
    fn action_columns(&self, basis: &[Monomial]) -> Result<Vec<Vec<BitVec>>> {
        let index: HashMap<Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (*m, i)).collect();
        self.images
            .iter()
            .map(|img| {
                basis
                    .iter()
                    .map(|m| {
                        let p = Polynomial::monomial(*m).substitute(img);
                        let mut v = BitVec::zeros(basis.len());
                        for t in p.terms() {
                            let i = index.get(t).ok_or_else(|| Error::Invalid("action leaves the slice".into()))?;
                            v.flip(*i);
                        }
                        Ok(v)
                    })
                    .collect()
            })
            .collect()
    }

    fn check_invertible(&self, bound: u32) -> Result<()> {
        for d in 0..=bound {
            let basis = self.slice_basis(d, false);
            for cols in self.action_columns(&basis)? {
                if BitMatrix::from_rows(basis.len(), &cols)?.rank() != basis.len() {
                    return Err(Error::Verification { degree: d, msg: "action matrix is singular".into() });
                }
            }
        }
        Ok(())
    }

    /// Fixed polynomials in degree `d`, either in the module or in the
    /// coefficient ring.
    pub fn fixed_polys(&self, d: u32, coefficients_only: bool) -> Result<Vec<Polynomial>> {
        let basis = self.slice_basis(d, coefficients_only);
        let n = basis.len();
        let mut stacked = BitMatrix::zeros(0, n);
        for cols in self.action_columns(&basis)? {
            let mut m = BitMatrix::from_rows(n, &cols)?;
            for k in 0..n {
                m.flip(k, k);
            }
            stacked.stack(&m.transpose())?;
        }
        let kernel = if self.images.is_empty() { BitVectorSpace::full(n) } else { stacked.kernel() };
        Ok(kernel.basis().iter().map(|v| Polynomial::from_terms(v.iter_ones().map(|i| basis[i]))).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ModuleInvariants {
    pub ring_generators: Vec<Polynomial>,
    pub module_generators: Vec<Polynomial>,
    /// Dimension of the invariant module per degree.
    pub dims: Vec<usize>,
}

/// Shortfall over a growing generator list: at each degree, adjoin the
/// reduced basis of the target slice modulo what the current generators
/// span. `span` builds the current spanning set from the generators.
fn shortfall(
    bound: u32,
    ambient: &dyn Fn(u32) -> GradedSlice,
    target: &mut dyn FnMut(u32) -> Result<Vec<Polynomial>>,
    span: &dyn Fn(&[Polynomial], u32) -> Result<BitVectorSpace>,
) -> Result<(Vec<Polynomial>, Vec<usize>)> {
    let mut gens: Vec<Polynomial> = Vec::new();
    let mut dims = Vec::new();
    for d in 0..=bound {
        let slice = ambient(d);
        let fixed = slice.span(&target(d)?)?;
        let current = span(&gens, d)?;
        if !current.is_subspace_of(&fixed)? {
            return Err(Error::Verification { degree: d, msg: "span leaves the invariants".into() });
        }
        let reduced = fixed.basis().iter().map(|v| current.reduce(v)).collect::<Result<Vec<_>>>()?;
        gens.extend(slice.polys(&BitVectorSpace::from_vectors(slice.len(), reduced)?));
        dims.push(fixed.dim());
    }
    Ok((gens, dims))
}

/// Generators of the invariant coefficient ring, then module generators of
/// the invariants over it, both found degree by degree through `bound`.
pub fn module_invariants(m: &GradedModule, bound: u32) -> Result<ModuleInvariants> {
    let weights = m.weights().to_vec();
    let ambient = |d: u32| GradedSlice::weighted(&weights, d);
    let ring_span = |gens: &[Polynomial], d: u32| -> Result<BitVectorSpace> {
        if gens.is_empty() {
            let slice = ambient(d);
            let one = if d == 0 { vec![Polynomial::one()] } else { vec![] };
            return slice.span(&one);
        }
        Ok(Subalgebra::module(weights.clone(), gens.to_vec(), vec![Polynomial::one()])?.slice(d)?.1)
    };
    let (mut ring_generators, _) = shortfall(bound, &ambient, &mut |d| m.fixed_polys(d, true), &ring_span)?;
    // the constant found in degree 0 is the unit, not a generator
    ring_generators.retain(|p| !p.is_one());
    let module_span = |gens: &[Polynomial], d: u32| -> Result<BitVectorSpace> {
        Ok(Subalgebra::module(weights.clone(), ring_generators.clone(), gens.to_vec())?.slice(d)?.1)
    };
    let (module_generators, dims) = shortfall(bound, &ambient, &mut |d| m.fixed_polys(d, false), &module_span)?;
    Ok(ModuleInvariants { ring_generators, module_generators, dims })
}

/// Per-degree equality through `bound` of the invariants with
/// `ring_gens(module_gens)`; returns the first failing degree.
pub fn verify_module_invariants(
    m: &GradedModule,
    ring_gens: &[Polynomial],
    module_gens: &[Polynomial],
    bound: u32,
) -> Result<Option<u32>> {
    let weights = m.weights().to_vec();
    let claimed = Subalgebra::module(weights.clone(), ring_gens.to_vec(), module_gens.to_vec())?;
    for d in 0..=bound {
        let slice = GradedSlice::weighted(&weights, d);
        let fixed = slice.span(&m.fixed_polys(d, false)?)?;
        if claimed.slice(d)?.1 != fixed {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

/// Rad of the Sylow 2-subgroup of `L_3(4)`: `F_2[v4, w4](γ2, β2, γ3, β3,
/// α5)` with the order-3 element `T` and the involution `u`.
pub fn rad_s_module() -> GradedModule {
    GradedModule::new(
        &[("v4", 4), ("w4", 4)],
        &[("g2", 2), ("b2", 2), ("g3", 3), ("b3", 3), ("a5", 5)],
        &[
            vec![("g2", "b2"), ("b2", "g2+b2")],
            vec![("v4", "w4"), ("w4", "v4"), ("g2", "b2"), ("b2", "g2"), ("g3", "b3"), ("b3", "g3")],
        ],
    )
    .expect("well-formed action")
}
