//! Steenrod squares on polynomial rings whose variables have degree 1.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{Monomial, Polynomial, Ring};
use crate::invariant::HironakaDecomposition;
use crate::subring::Subalgebra;

/// `(x + x^2)^a` restricted to the terms of `x`-degree `a + k`, `k ⊆ a`.
fn square_variable(a: u32) -> Vec<(u32, u32)> {
    // (k, exponent) pairs; binomial(a, k) is odd iff k ⊆ a
    let mut out = Vec::new();
    let mut k = a;
    loop {
        out.push((k, a + k));
        if k == 0 {
            break;
        }
        k = (k - 1) & a;
    }
    out
}

/// Terms of `Sq(m)` with their added degree, optionally only those adding
/// exactly `want`.
fn square_monomial(m: Monomial, n: usize, want: Option<u32>) -> Vec<Monomial> {
    let mut partial: Vec<(u32, Vec<u32>)> = vec![(0, Vec::with_capacity(n))];
    let exps = m.exponents(n);
    for (i, &a) in exps.iter().enumerate() {
        let remaining: u32 = exps[i + 1..].iter().sum();
        let options = square_variable(a);
        let mut next = Vec::with_capacity(partial.len() * options.len());
        for (k, e) in &partial {
            for &(ki, ei) in &options {
                let total = k + ki;
                if let Some(w) = want {
                    // later variables can add at most their own degree
                    if total > w || total + remaining < w {
                        continue;
                    }
                }
                let mut e = e.clone();
                e.push(ei);
                next.push((total, e));
            }
        }
        partial = next;
    }
    partial.into_iter().map(|(_, e)| Monomial::from_exponents(&e)).collect()
}

/// The ring endomorphism `x ↦ x + x^2`.
pub fn total_square(p: &Polynomial) -> Polynomial {
    let n = p.var_span();
    Polynomial::from_terms(p.terms().iter().flat_map(|&m| square_monomial(m, n, None)))
}

/// `Sq^k p`, the degree `deg p + k` part of the total square.
pub fn sq(k: u32, p: &Polynomial) -> Result<Polynomial> {
    if p.is_zero() {
        return Ok(Polynomial::zero());
    }
    let d = p.homogeneous_degree().ok_or(Error::NotHomogeneous)?;
    if k > d {
        return Ok(Polynomial::zero());
    }
    let n = p.var_span();
    Ok(Polynomial::from_terms(p.terms().iter().flat_map(|&m| square_monomial(m, n, Some(k)))))
}

/// `sq` after checking that the ring has only degree-1 variables.
pub fn sq_in(ring: &Ring, k: u32, p: &Polynomial) -> Result<Polynomial> {
    if !ring.is_standard() {
        return Err(Error::NonUnitDegree);
    }
    sq(k, p)
}

/// `Sq^{k_r} ⋯ Sq^{k_1} p`: the operations in `ops` are applied left to right.
pub fn sq_seq(ops: &[u32], p: &Polynomial) -> Result<Polynomial> {
    ops.iter().try_fold(p.clone(), |acc, &k| sq(k, &acc))
}

/// Writes `Sq^{k_r} ⋯ Sq^{k_1} a_d`.
fn op_label(ops: &[u32], base: u32) -> String {
    let mut s: Vec<String> = ops.iter().rev().map(|k| format!("Sq^{k}")).collect();
    s.push(format!("a_{base}"));
    s.join(" ")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainLink {
    pub label: String,
    pub degree: u32,
    pub completes: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainGroup {
    pub base_degree: u32,
    /// `"canonical"`, or the correction added to the canonical secondary.
    pub reading: String,
    pub links: Vec<ChainLink>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductCheck {
    pub label: String,
    pub completes: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ChainReport {
    pub groups: Vec<ChainGroup>,
    pub top_degree: u32,
    pub products: Vec<ProductCheck>,
}

impl ChainReport {
    pub fn links_hold(&self) -> bool {
        self.groups.iter().all(|g| g.links.iter().all(|l| l.completes))
    }

    pub fn some_product_completes(&self) -> bool {
        self.products.iter().any(|p| p.completes)
    }
}

/// Spans `Σ R·s` over the secondaries of degree below a given degree.
struct PriorSpans<'a> {
    dec: &'a HironakaDecomposition,
    n: usize,
    cache: HashMap<u32, Subalgebra>,
}

impl<'a> PriorSpans<'a> {
    fn new(dec: &'a HironakaDecomposition) -> Self {
        let n = dec.primaries.iter().chain(&dec.secondaries).map(Polynomial::var_span).max().unwrap_or(0);
        Self { dec, n, cache: HashMap::new() }
    }

    fn module_below(&mut self, d: u32) -> Result<&Subalgebra> {
        if !self.cache.contains_key(&d) {
            let gens: Vec<Polynomial> = self
                .dec
                .secondaries
                .iter()
                .zip(&self.dec.secondary_degrees)
                .filter(|(_, &sd)| sd < d)
                .map(|(s, _)| s.clone())
                .collect();
            let m = Subalgebra::module(vec![1; self.n], self.dec.primaries.clone(), gens)?;
            self.cache.insert(d, m);
        }
        Ok(&self.cache[&d])
    }

    fn completes(&mut self, p: &Polynomial) -> Result<bool> {
        let Some(d) = p.homogeneous_degree() else {
            return Ok(false);
        };
        Ok(!self.module_below(d)?.contains(p)?)
    }

    /// The degree-`d` part of the span of lower secondaries, as polynomials.
    fn corrections(&mut self, d: u32) -> Result<Vec<Polynomial>> {
        let m = self.module_below(d)?;
        let (slice, space) = m.slice(d)?;
        Ok(slice.polys(&space))
    }
}

fn unique_secondary(dec: &HironakaDecomposition, d: u32) -> Result<&Polynomial> {
    let mut it = dec.secondaries.iter().zip(&dec.secondary_degrees).filter(|(_, &sd)| sd == d);
    match (it.next(), it.next()) {
        (Some((s, _)), None) => Ok(s),
        _ => Err(Error::Hypothesis(format!("expected exactly one secondary in degree {d}"))),
    }
}

// alternatives tried per base: at most 2^MAX_CORRECTIONS
const MAX_CORRECTIONS: usize = 10;

/// Checks that the listed operations on `a_base` complete the shortfall at
/// their degrees, first for the canonical `a_base`, then for `a_base` plus
/// elements of the lower module span. `bases` pairs a base degree with its
/// operation sequences; `products` lists pairs of secondary degrees.
pub fn verify_chain(
    dec: &HironakaDecomposition,
    ring: &Ring,
    bases: &[(u32, Vec<Vec<u32>>)],
    products: &[(u32, u32)],
) -> Result<ChainReport> {
    let mut spans = PriorSpans::new(dec);
    let mut groups = Vec::new();
    for (base, op_lists) in bases {
        let a = unique_secondary(dec, *base)?.clone();
        let corr = spans.corrections(*base)?;
        if corr.len() > MAX_CORRECTIONS {
            return Err(Error::Budget(format!("{} corrections in degree {base}", corr.len())));
        }
        let mut chosen: Option<ChainGroup> = None;
        let mut canonical: Option<ChainGroup> = None;
        for mask in 0u32..1 << corr.len() {
            let delta: Polynomial =
                corr.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, c)| c.clone()).sum();
            let cand = &a + &delta;
            let mut links = Vec::new();
            for ops in op_lists {
                let img = sq_seq(ops, &cand)?;
                let degree = base + ops.iter().sum::<u32>();
                links.push(ChainLink { label: op_label(ops, *base), degree, completes: spans.completes(&img)? });
            }
            let reading =
                if mask == 0 { "canonical".to_string() } else { format!("a_{base} + {}", ring.format(&delta)) };
            let group = ChainGroup { base_degree: *base, reading, links };
            let ok = group.links.iter().all(|l| l.completes);
            if mask == 0 {
                canonical = Some(group.clone());
            }
            if ok {
                chosen = Some(group);
                break;
            }
        }
        groups.push(chosen.or(canonical).expect("mask 0 always runs"));
    }
    let top_degree = dec.secondary_degrees.iter().copied().max().unwrap_or(0);
    let mut checks = Vec::new();
    for &(i, j) in products {
        let p = unique_secondary(dec, i)? * unique_secondary(dec, j)?;
        checks.push(ProductCheck { label: format!("a_{i} a_{j}"), completes: spans.completes(&p)? });
    }
    Ok(ChainReport { groups, top_degree, products: checks })
}

/// The chain for the 168-element group on four variables:
/// `Sq^1 a_8`, `Sq^2 Sq^1 a_8`, `Sq^2 a_10`, `Sq^1 Sq^2 a_10`, and the two
/// degree-21 products `a_10 a_11`, `a_8 a_13`.
pub fn verify_secondary_chain(dec: &HironakaDecomposition, ring: &Ring) -> Result<ChainReport> {
    verify_chain(dec, ring, &[(8, vec![vec![1], vec![1, 2]]), (10, vec![vec![2], vec![2, 1]])], &[(10, 11), (8, 13)])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_subsets() {
        let mut v = square_variable(5);
        v.sort();
        assert_eq!(v, vec![(0, 5), (1, 6), (4, 9), (5, 10)]);
        assert_eq!(square_variable(0), vec![(0, 0)]);
    }
}
