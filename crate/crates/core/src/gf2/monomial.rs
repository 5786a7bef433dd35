//! Packed monomials.
//!
//! A monomial is stored in a single `u128`: the top byte holds the total
//! degree and the remaining fifteen bytes hold one exponent each, variable 0
//! in the most significant position. With this layout the integer order of
//! the packed word is exactly the graded lexicographic order (degree first,
//! then exponent of variable 0, then variable 1, ...), and multiplying
//! monomials is a single integer addition.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Maximum number of variables a monomial can carry.
pub const MAX_VARS: usize = 15;
/// Maximum total degree of a monomial.
pub const MAX_DEGREE: u32 = 255;

const DEGREE_SHIFT: u32 = 120;

#[inline]
const fn shift(var: usize) -> u32 {
    112 - 8 * var as u32
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize)]
pub struct Monomial(u128);

impl Monomial {
    pub const ONE: Monomial = Monomial(0);

    pub fn one() -> Self {
        Self::ONE
    }

    pub fn var(i: usize) -> Self {
        assert!(i < MAX_VARS, "variable index {i} out of range");
        Monomial((1u128 << DEGREE_SHIFT) | (1u128 << shift(i)))
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        let deg: u32 = exps.iter().sum();
        assert!(deg <= MAX_DEGREE, "monomial degree {deg} exceeds {MAX_DEGREE}");
        let mut w = (deg as u128) << DEGREE_SHIFT;
        for (i, &e) in exps.iter().enumerate() {
            w |= (e as u128) << shift(i);
        }
        Monomial(w)
    }

    #[inline]
    pub fn degree(self) -> u32 {
        (self.0 >> DEGREE_SHIFT) as u32
    }

    #[inline]
    pub fn exponent(self, var: usize) -> u32 {
        ((self.0 >> shift(var)) & 0xff) as u32
    }

    pub fn exponents(self, n_vars: usize) -> Vec<u32> {
        (0..n_vars).map(|i| self.exponent(i)).collect()
    }

    /// Largest variable index with a nonzero exponent.
    pub fn last_var(self) -> Option<usize> {
        (0..MAX_VARS).rev().find(|&i| self.exponent(i) > 0)
    }

    pub fn weighted_degree(self, weights: &[u32]) -> u32 {
        weights.iter().enumerate().map(|(i, w)| w * self.exponent(i)).sum()
    }

    #[inline]
    #[allow(clippy::should_implement_trait)]
    pub fn mul(self, other: Monomial) -> Monomial {
        let deg = self.degree() + other.degree();
        assert!(deg <= MAX_DEGREE, "monomial degree {deg} exceeds {MAX_DEGREE}");
        Monomial(self.0 + other.0)
    }

    pub fn pow(self, e: u32) -> Monomial {
        let deg = self.degree() * e;
        assert!(deg <= MAX_DEGREE, "monomial degree {deg} exceeds {MAX_DEGREE}");
        Monomial(self.0 * e as u128)
    }

    pub fn divides(self, other: Monomial) -> bool {
        (0..MAX_VARS).all(|i| self.exponent(i) <= other.exponent(i))
    }

    /// `self / var`, if `var` divides `self`.
    pub fn div_var(self, var: usize) -> Option<Monomial> {
        if self.exponent(var) == 0 {
            None
        } else {
            Some(Monomial(self.0 - Monomial::var(var).0))
        }
    }

    pub fn raw(self) -> u128 {
        self.0
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.last_var().map_or(0, |i| i + 1);
        write!(f, "Monomial{:?}", self.exponents(n))
    }
}

/// Binomial coefficient as `u64`; exact for every size used here.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut r: u64 = 1;
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

/// Number of degree-`d` monomials in `n` variables.
pub fn slice_size(n_vars: usize, d: u32) -> usize {
    if n_vars == 0 {
        return usize::from(d == 0);
    }
    binomial(d as u64 + n_vars as u64 - 1, n_vars as u64 - 1) as usize
}

/// All degree-`d` monomials in `n_vars` variables, largest first.
pub fn monomial_basis(n_vars: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(slice_size(n_vars, d));
    let mut exps = vec![0u32; n_vars];
    fill_basis(&mut out, &mut exps, 0, d);
    out
}

fn fill_basis(out: &mut Vec<Monomial>, exps: &mut [u32], var: usize, remaining: u32) {
    if var + 1 >= exps.len() {
        if let Some(k) = exps.len().checked_sub(1) {
            exps[k] = remaining;
            out.push(Monomial::from_exponents(exps));
            exps[k] = 0;
        } else if remaining == 0 {
            out.push(Monomial::ONE);
        }
        return;
    }
    for e in (0..=remaining).rev() {
        exps[var] = e;
        fill_basis(out, exps, var + 1, remaining - e);
    }
    exps[var] = 0;
}

/// All monomials of weighted degree `d`, largest first (graded-lex on the
/// unweighted degree, then lex).
pub fn weighted_monomial_basis(weights: &[u32], d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut exps = vec![0u32; weights.len()];
    fill_weighted(&mut out, weights, &mut exps, 0, d);
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

fn fill_weighted(out: &mut Vec<Monomial>, weights: &[u32], exps: &mut [u32], var: usize, remaining: u32) {
    if var == weights.len() {
        if remaining == 0 {
            out.push(Monomial::from_exponents(exps));
        }
        return;
    }
    let w = weights[var];
    assert!(w > 0, "variable weights must be positive");
    for e in 0..=remaining / w {
        exps[var] = e;
        fill_weighted(out, weights, exps, var + 1, remaining - e * w);
    }
    exps[var] = 0;
}

/// Constant-time rank of a monomial inside `monomial_basis(n_vars, d)`.
#[derive(Debug, Clone)]
pub struct MonomialIndexer {
    n_vars: usize,
    degree: u32,
    // cumulative[k][r] = number of monomials of degree < r in k variables
    cumulative: Vec<Vec<usize>>,
    len: usize,
}

impl MonomialIndexer {
    pub fn new(n_vars: usize, degree: u32) -> Self {
        let cumulative = (0..=n_vars)
            .map(|k| {
                let mut acc = 0;
                let mut row = Vec::with_capacity(degree as usize + 2);
                row.push(0);
                for r in 0..=degree {
                    acc += slice_size(k, r);
                    row.push(acc);
                }
                row
            })
            .collect();
        Self { n_vars, degree, cumulative, len: slice_size(n_vars, degree) }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Position of `m` in the descending basis; `m` must have the right degree.
    #[inline]
    pub fn index(&self, m: Monomial) -> usize {
        debug_assert_eq!(m.degree(), self.degree);
        let mut idx = 0;
        let mut rem = self.degree;
        for var in 0..self.n_vars.saturating_sub(1) {
            let e = m.exponent(var);
            let rest_vars = self.n_vars - var - 1;
            // monomials with a larger exponent on `var` come first
            idx += self.cumulative[rest_vars][(rem - e) as usize];
            rem -= e;
        }
        idx
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn packing_roundtrip() {
        let m = Monomial::from_exponents(&[3, 0, 2, 1]);
        assert_eq!(m.degree(), 6);
        assert_eq!(m.exponents(4), vec![3, 0, 2, 1]);
        assert_eq!(m.last_var(), Some(3));
        assert_eq!(Monomial::ONE.last_var(), None);
    }

    #[test]
    fn order_is_graded_lex() {
        let x2 = Monomial::from_exponents(&[2, 0]);
        let xy = Monomial::from_exponents(&[1, 1]);
        let y3 = Monomial::from_exponents(&[0, 3]);
        assert!(x2 > xy);
        assert!(y3 > x2);
    }

    #[test]
    fn basis_sizes() {
        assert_eq!(monomial_basis(4, 8).len(), 165);
        assert_eq!(monomial_basis(3, 2).len(), 6);
        assert_eq!(monomial_basis(1, 5), vec![Monomial::from_exponents(&[5])]);
        assert_eq!(monomial_basis(0, 0), vec![Monomial::ONE]);
        assert!(monomial_basis(0, 3).is_empty());
    }

    #[test]
    fn basis_is_strictly_descending_and_counts_match() {
        for n in 1..=6 {
            for d in 0..=20 {
                let b = monomial_basis(n, d);
                assert_eq!(b.len() as u64, binomial((d as usize + n - 1) as u64, (n - 1) as u64));
                assert!(b.windows(2).all(|w| w[0] > w[1]));
            }
        }
    }

    #[test]
    fn indexer_agrees_with_basis() {
        for n in 1..=4 {
            for d in 0..=12 {
                let ix = MonomialIndexer::new(n, d);
                for (i, m) in monomial_basis(n, d).into_iter().enumerate() {
                    assert_eq!(ix.index(m), i);
                }
            }
        }
    }

    #[test]
    fn weighted_basis() {
        // weights (4, 4): degree 8 has v^2, vw, w^2
        assert_eq!(weighted_monomial_basis(&[4, 4], 8).len(), 3);
        assert!(weighted_monomial_basis(&[4, 4], 6).is_empty());
        // 4a + 6b + 7c = 12 has (3,0,0) and (0,2,0)
        assert_eq!(weighted_monomial_basis(&[4, 6, 7], 12).len(), 2);
    }
}
