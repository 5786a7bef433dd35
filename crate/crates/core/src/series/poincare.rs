use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

/// `numerator(t) / ∏ (1 - t^{d_i})` with integer coefficients.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PoincareSeries {
    numerator: Vec<i64>,
    denominator: Vec<u32>,
}

fn trim(mut v: Vec<i64>) -> Vec<i64> {
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

fn poly_mul(a: &[i64], b: &[i64]) -> Vec<i64> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0i64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn poly_add(a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut out = vec![0i64; a.len().max(b.len())];
    for (i, &x) in a.iter().enumerate() {
        out[i] += x;
    }
    for (i, &y) in b.iter().enumerate() {
        out[i] += y;
    }
    trim(out)
}

/// `∏ (1 - t^d)` as a coefficient list.
fn denominator_poly(ds: &[u32]) -> Vec<i64> {
    ds.iter().fold(vec![1], |acc, &d| {
        let mut f = vec![0i64; d as usize + 1];
        f[0] = 1;
        f[d as usize] -= 1;
        poly_mul(&acc, &f)
    })
}

/// Multiset difference `a \ b` for sorted lists.
fn multiset_minus(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j < b.len() && b[j] == x {
            j += 1;
        } else {
            out.push(x);
        }
    }
    out
}

impl PoincareSeries {
    pub fn new(numerator: Vec<i64>, mut denominator: Vec<u32>) -> Self {
        assert!(!denominator.contains(&0), "denominator factors need positive degree");
        denominator.sort_unstable();
        Self { numerator: trim(numerator), denominator }
    }

    pub fn zero() -> Self {
        Self::new(Vec::new(), Vec::new())
    }

    pub fn monomial(k: u32) -> Self {
        let mut num = vec![0; k as usize + 1];
        num[k as usize] = 1;
        Self::new(num, Vec::new())
    }

    /// Free polynomial ring on generators of the given degrees.
    pub fn free(degrees: &[u32]) -> Self {
        Self::new(vec![1], degrees.to_vec())
    }

    /// Free module over a polynomial ring: `Σ t^{s_j} / ∏ (1 - t^{d_i})`.
    pub fn free_module(generator_degrees: &[u32], ring_degrees: &[u32]) -> Self {
        let mut num = Vec::new();
        for &s in generator_degrees {
            if num.len() <= s as usize {
                num.resize(s as usize + 1, 0);
            }
            num[s as usize] += 1;
        }
        Self::new(num, ring_degrees.to_vec())
    }

    pub fn numerator(&self) -> &[i64] {
        &self.numerator
    }

    pub fn denominator(&self) -> &[u32] {
        &self.denominator
    }

    /// Coefficients of `t^0 … t^n`.
    pub fn expand(&self, n: usize) -> Vec<i64> {
        let mut c = vec![0i64; n + 1];
        for (i, &x) in self.numerator.iter().enumerate().take(n + 1) {
            c[i] = x;
        }
        for &d in &self.denominator {
            let d = d as usize;
            for i in d..=n {
                c[i] += c[i - d];
            }
        }
        c
    }

    pub fn shift(&self, k: u32) -> Self {
        let mut num = vec![0; k as usize];
        num.extend_from_slice(&self.numerator);
        Self::new(num, self.denominator.clone())
    }

    pub fn scale(&self, k: i64) -> Self {
        Self::new(self.numerator.iter().map(|x| x * k).collect(), self.denominator.clone())
    }

    /// Exact equality as rational functions (cross-multiplication).
    pub fn series_eq(&self, other: &Self) -> bool {
        let a = poly_mul(&self.numerator, &denominator_poly(&multiset_minus(&other.denominator, &self.denominator)));
        let b = poly_mul(&other.numerator, &denominator_poly(&multiset_minus(&self.denominator, &other.denominator)));
        a == b
    }

    pub fn is_zero(&self) -> bool {
        self.numerator.is_empty()
    }

    /// First index where the expansion is negative, if any, through `n`.
    pub fn first_negative(&self, n: usize) -> Option<usize> {
        self.expand(n).iter().position(|&c| c < 0)
    }
}

impl PartialEq for PoincareSeries {
    fn eq(&self, other: &Self) -> bool {
        self.series_eq(other)
    }
}

impl Add for &PoincareSeries {
    type Output = PoincareSeries;
    fn add(self, rhs: &PoincareSeries) -> PoincareSeries {
        let only_rhs = multiset_minus(&rhs.denominator, &self.denominator);
        let only_lhs = multiset_minus(&self.denominator, &rhs.denominator);
        let num = poly_add(
            &poly_mul(&self.numerator, &denominator_poly(&only_rhs)),
            &poly_mul(&rhs.numerator, &denominator_poly(&only_lhs)),
        );
        let mut den = self.denominator.clone();
        den.extend(only_rhs);
        PoincareSeries::new(num, den)
    }
}

impl Neg for &PoincareSeries {
    type Output = PoincareSeries;
    fn neg(self) -> PoincareSeries {
        self.scale(-1)
    }
}

impl Sub for &PoincareSeries {
    type Output = PoincareSeries;
    fn sub(self, rhs: &PoincareSeries) -> PoincareSeries {
        self + &(-rhs)
    }
}

impl Mul for &PoincareSeries {
    type Output = PoincareSeries;
    fn mul(self, rhs: &PoincareSeries) -> PoincareSeries {
        let mut den = self.denominator.clone();
        den.extend_from_slice(&rhs.denominator);
        PoincareSeries::new(poly_mul(&self.numerator, &rhs.numerator), den)
    }
}

macro_rules! owned_op {
    ($tr:ident, $f:ident) => {
        impl $tr for PoincareSeries {
            type Output = PoincareSeries;
            fn $f(self, rhs: PoincareSeries) -> PoincareSeries {
                (&self).$f(&rhs)
            }
        }
    };
}
owned_op!(Add, add);
owned_op!(Sub, sub);
owned_op!(Mul, mul);

impl fmt::Display for PoincareSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut num = String::new();
        for (i, &c) in self.numerator.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 {
                "-"
            } else if num.is_empty() {
                ""
            } else {
                "+"
            };
            let mag = c.unsigned_abs();
            let coef = if mag == 1 && i > 0 { String::new() } else { mag.to_string() };
            let var = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            let sep = if !coef.is_empty() && !var.is_empty() { "*" } else { "" };
            num.push_str(&format!("{sign}{coef}{sep}{var}"));
        }
        if num.is_empty() {
            num.push('0');
        }
        if self.denominator.is_empty() {
            return write!(f, "{num}");
        }
        let den: String =
            self.denominator.iter().map(|&d| if d == 1 { "(1-t)".to_string() } else { format!("(1-t^{d})") }).collect();
        write!(f, "({num})/({den})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn expansion_and_display() {
        let s = PoincareSeries::free(&[4, 8]);
        assert_eq!(s.expand(8), vec![1, 0, 0, 0, 1, 0, 0, 0, 2]);
        assert_eq!(s.to_string(), "(1)/((1-t^4)(1-t^8))");
        assert!((&s - &s).is_zero());
        assert_eq!(PoincareSeries::free_module(&[0, 3], &[1]).to_string(), "(1+t^3)/((1-t))");
    }

    #[test]
    fn cross_multiplication() {
        // 1/(1-t) = (1+t)/(1-t^2)
        let a = PoincareSeries::free(&[1]);
        let b = PoincareSeries::new(vec![1, 1], vec![2]);
        assert_eq!(a, b);
        assert_ne!(a, PoincareSeries::free(&[2]));
    }

    fn arb_series() -> impl Strategy<Value = PoincareSeries> {
        (proptest::collection::vec(-3i64..4, 0..6), proptest::collection::vec(1u32..6, 0..4))
            .prop_map(|(n, d)| PoincareSeries::new(n, d))
    }

    proptest! {
        #[test]
        fn arithmetic_matches_expansions(a in arb_series(), b in arb_series()) {
            let n = 30;
            let sa = a.expand(n);
            let sb = b.expand(n);
            let sum: Vec<i64> = sa.iter().zip(&sb).map(|(x, y)| x + y).collect();
            prop_assert_eq!((&a + &b).expand(n), sum);
            let mut prod = vec![0i64; n + 1];
            for i in 0..=n { for j in 0..=n - i { prod[i + j] += sa[i] * sb[j]; } }
            prop_assert_eq!((&a * &b).expand(n), prod);
            prop_assert!((&(&a - &b) + &b).series_eq(&a));
            prop_assert!(a.series_eq(&a));
        }
    }
}
