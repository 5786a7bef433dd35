use std::ops::{Add, AddAssign, Mul};

use serde::{Deserialize, Serialize};

use super::monomial::Monomial;

/// A polynomial over the two-element field: a set of monomials.
///
/// Terms are kept strictly descending in the graded lexicographic order, so
/// equality of polynomials is equality of the term vectors.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub struct Polynomial {
    terms: Vec<Monomial>,
}

impl std::fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_list().entries(self.terms.iter()).finish()
    }
}

/// Sorts descending and cancels repeated monomials in pairs.
fn normalize(mut terms: Vec<Monomial>) -> Vec<Monomial> {
    terms.sort_unstable_by(|a, b| b.cmp(a));
    let mut out: Vec<Monomial> = Vec::with_capacity(terms.len());
    for m in terms {
        if out.last() == Some(&m) {
            out.pop();
        } else {
            out.push(m);
        }
    }
    out
}

impl Polynomial {
    pub fn zero() -> Self {
        Self { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self { terms: vec![Monomial::ONE] }
    }

    pub fn var(i: usize) -> Self {
        Self { terms: vec![Monomial::var(i)] }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self { terms: vec![m] }
    }

    /// Builds a polynomial from arbitrary terms; repeated terms cancel mod 2.
    pub fn from_terms(terms: impl IntoIterator<Item = Monomial>) -> Self {
        Self { terms: normalize(terms.into_iter().collect()) }
    }

    /// Trusts the caller that `terms` is already strictly descending.
    pub(crate) fn from_sorted_unchecked(terms: Vec<Monomial>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0] > w[1]));
        Self { terms }
    }

    pub fn terms(&self) -> &[Monomial] {
        &self.terms
    }

    pub fn into_terms(self) -> Vec<Monomial> {
        self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms == [Monomial::ONE]
    }

    pub fn contains(&self, m: Monomial) -> bool {
        self.terms.binary_search_by(|t| m.cmp(t)).is_ok()
    }

    pub fn leading_term(&self) -> Option<Monomial> {
        self.terms.first().copied()
    }

    /// Total degree of the leading term.
    pub fn degree(&self) -> Option<u32> {
        self.leading_term().map(Monomial::degree)
    }

    /// The common degree of all terms; `None` for zero or mixed degrees.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.degree();
        self.terms.iter().all(|m| m.degree() == d).then_some(d)
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    pub fn weighted_homogeneous_degree(&self, weights: &[u32]) -> Option<u32> {
        let d = self.terms.first()?.weighted_degree(weights);
        self.terms.iter().all(|m| m.weighted_degree(weights) == d).then_some(d)
    }

    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        Self { terms: self.terms.iter().copied().filter(|m| m.degree() == d).collect() }
    }

    /// Number of variables actually used (index of the highest one plus one).
    pub fn var_span(&self) -> usize {
        self.terms.iter().filter_map(|m| m.last_var()).max().map_or(0, |i| i + 1)
    }

    pub fn mul_monomial(&self, m: Monomial) -> Polynomial {
        // multiplication by a monomial is strictly monotone in the order
        Self { terms: self.terms.iter().map(|t| t.mul(m)).collect() }
    }

    /// Squaring is additive in characteristic 2, so it acts termwise.
    pub fn square(&self) -> Polynomial {
        Self { terms: self.terms.iter().map(|t| t.pow(2)).collect() }
    }

    pub fn pow(&self, mut e: u32) -> Polynomial {
        let mut base = self.clone();
        let mut acc = Polynomial::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = base.square();
            }
        }
        acc
    }

    /// Ring homomorphism sending variable `i` to `images[i]`.
    pub fn substitute(&self, images: &[Polynomial]) -> Polynomial {
        let n = self.var_span();
        assert!(images.len() >= n, "substitution needs {n} images, got {}", images.len());
        // cache powers of each image by repeated squaring on demand
        let mut acc: Vec<Monomial> = Vec::new();
        let mut power_cache: Vec<Vec<(u32, Polynomial)>> = vec![Vec::new(); n];
        for &m in &self.terms {
            let mut term = Polynomial::one();
            for (i, cache) in power_cache.iter_mut().enumerate() {
                let e = m.exponent(i);
                if e == 0 {
                    continue;
                }
                let p = match cache.iter().find(|(k, _)| *k == e) {
                    Some((_, p)) => p.clone(),
                    None => {
                        let p = images[i].pow(e);
                        cache.push((e, p.clone()));
                        p
                    }
                };
                term = &term * &p;
            }
            acc.extend(term.terms);
        }
        Polynomial::from_terms(acc)
    }
}

fn merge_xor(a: &[Monomial], b: &[Monomial]) -> Vec<Monomial> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Greater => {
                out.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Less => {
                out.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
    out
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        Polynomial { terms: merge_xor(&self.terms, &rhs.terms) }
    }
}

impl Add for Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: Polynomial) -> Polynomial {
        &self + &rhs
    }
}

impl AddAssign<&Polynomial> for Polynomial {
    fn add_assign(&mut self, rhs: &Polynomial) {
        self.terms = merge_xor(&self.terms, &rhs.terms);
    }
}

impl AddAssign for Polynomial {
    fn add_assign(&mut self, rhs: Polynomial) {
        *self += &rhs;
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        if self.len() == 1 {
            return rhs.mul_monomial(self.terms[0]);
        }
        if rhs.len() == 1 {
            return self.mul_monomial(rhs.terms[0]);
        }
        let mut acc = Vec::with_capacity(self.len() * rhs.len());
        for &a in &self.terms {
            acc.extend(rhs.terms.iter().map(|&b| a.mul(b)));
        }
        Polynomial { terms: normalize(acc) }
    }
}

impl Mul for Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: Polynomial) -> Polynomial {
        &self * &rhs
    }
}

impl std::iter::Sum for Polynomial {
    fn sum<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        Polynomial::from_terms(iter.flat_map(|p| p.terms))
    }
}

impl std::iter::Product for Polynomial {
    fn product<I: Iterator<Item = Polynomial>>(iter: I) -> Polynomial {
        iter.fold(Polynomial::one(), |a, b| &a * &b)
    }
}

impl From<Monomial> for Polynomial {
    fn from(m: Monomial) -> Self {
        Polynomial::monomial(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w() -> Polynomial {
        Polynomial::var(0)
    }
    fn t() -> Polynomial {
        Polynomial::var(1)
    }

    fn d2() -> Polynomial {
        &(&w().pow(2) + &(&t() * &w())) + &t().pow(2)
    }

    fn d3() -> Polynomial {
        &(&w().pow(2) * &t()) + &(&w() * &t().pow(2))
    }

    #[test]
    fn addition_is_symmetric_difference() {
        let p = d2();
        assert!((&p + &p).is_zero());
        assert_eq!(&p + &Polynomial::zero(), p);
        let tw = &t() * &w();
        assert_eq!(&p + &tw, &w().pow(2) + &t().pow(2));
    }

    #[test]
    fn frobenius() {
        let s = &w() + &t();
        assert_eq!(&s * &s, &w().pow(2) + &t().pow(2));
        assert_eq!(s.square(), &s * &s);
    }

    #[test]
    fn d2_times_d3_by_hand() {
        // term-by-term: (w^2 + tw + t^2)(w^2 t + w t^2); the six products
        // w^4t, w^3t^2, w^3t^2, w^2t^3, w^2t^3, wt^4 leave w^4t + wt^4
        let expected = Polynomial::from_terms([Monomial::from_exponents(&[4, 1]), Monomial::from_exponents(&[1, 4])]);
        assert_eq!(&d2() * &d3(), expected);
        assert_eq!(&Polynomial::one() * &d2(), d2());
    }

    #[test]
    fn homogeneity() {
        assert_eq!(d2().homogeneous_degree(), Some(2));
        let mixed = &d2() + &w();
        assert_eq!(mixed.homogeneous_degree(), None);
        assert_eq!(mixed.homogeneous_component(1), w());
        assert!(Polynomial::zero().is_homogeneous());
    }

    #[test]
    fn substitution_is_a_ring_map() {
        // w -> w + t, t -> t
        let imgs = [&w() + &t(), t()];
        let p = d2();
        assert_eq!(p.substitute(&imgs), p);
        assert_eq!(d3().substitute(&imgs), d3());
        let q = &w().pow(3) + &t();
        assert_eq!((&p * &q).substitute(&imgs), &p.substitute(&imgs) * &q.substitute(&imgs));
    }
}
