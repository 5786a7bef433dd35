use std::fmt;

use serde::{Deserialize, Serialize};

use super::finite::{closure, GroupElement};
use crate::error::{Error, Result};
use crate::gf2::Polynomial;

pub const MAX_DIM: usize = 8;

/// An invertible `n × n` matrix over the two-element field, `n ≤ 8`.
///
/// Row `i` is stored as a byte whose bit `j` is the entry `(i, j)`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct MatF2 {
    n: u8,
    rows: [u8; MAX_DIM],
}

impl fmt::Debug for MatF2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.to_rows())
    }
}

impl MatF2 {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_DIM);
        let mut rows = [0u8; MAX_DIM];
        for (i, r) in rows.iter_mut().enumerate().take(n) {
            *r = 1 << i;
        }
        Self { n: n as u8, rows }
    }

    /// Builds a matrix from 0/1 rows, rejecting singular input.
    pub fn from_rows<R: AsRef<[u8]>>(rows: &[R]) -> Result<Self> {
        let n = rows.len();
        if n > MAX_DIM {
            return Err(Error::Invalid(format!("matrix dimension {n} exceeds {MAX_DIM}")));
        }
        let mut packed = [0u8; MAX_DIM];
        for (i, row) in rows.iter().enumerate() {
            let row = row.as_ref();
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, found: row.len() });
            }
            for (j, &b) in row.iter().enumerate() {
                match b {
                    0 => {}
                    1 => packed[i] |= 1 << j,
                    _ => return Err(Error::Invalid(format!("matrix entry {b} is not 0 or 1"))),
                }
            }
        }
        let m = Self { n: n as u8, rows: packed };
        if m.rank() != n {
            return Err(Error::NotInvertible);
        }
        Ok(m)
    }

    pub fn dim(&self) -> usize {
        self.n as usize
    }

    pub fn get(&self, i: usize, j: usize) -> bool {
        self.rows[i] >> j & 1 == 1
    }

    pub fn to_rows(&self) -> Vec<Vec<u8>> {
        (0..self.dim()).map(|i| (0..self.dim()).map(|j| self.get(i, j) as u8).collect()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut rows = [0u8; MAX_DIM];
        for (i, r) in rows.iter_mut().enumerate().take(self.dim()) {
            for j in 0..self.dim() {
                if self.get(j, i) {
                    *r |= 1 << j;
                }
            }
        }
        Self { n: self.n, rows }
    }

    fn rank(&self) -> usize {
        let mut rows = self.rows;
        let mut rank = 0;
        for col in 0..self.dim() {
            let Some(p) = (rank..self.dim()).find(|&r| rows[r] >> col & 1 == 1) else {
                continue;
            };
            rows.swap(rank, p);
            for r in 0..self.dim() {
                if r != rank && rows[r] >> col & 1 == 1 {
                    rows[r] ^= rows[rank];
                }
            }
            rank += 1;
        }
        rank
    }

    pub fn inverse(&self) -> Self {
        let n = self.dim();
        let mut a = self.rows;
        let mut inv = Self::identity(n).rows;
        for col in 0..n {
            let p = (col..n).find(|&r| a[r] >> col & 1 == 1).expect("invertible by construction");
            a.swap(col, p);
            inv.swap(col, p);
            for r in 0..n {
                if r != col && a[r] >> col & 1 == 1 {
                    a[r] ^= a[col];
                    inv[r] ^= inv[col];
                }
            }
        }
        Self { n: self.n, rows: inv }
    }

    /// Image of each variable under the action: `x_i ↦ Σ_j g[j][i] x_j`, i.e.
    /// variable `i` goes to the linear form in column `i`. This is a left
    /// action: acting by `gh` is acting by `h` and then by `g`.
    pub fn variable_images(&self) -> Vec<Polynomial> {
        (0..self.dim()).map(|i| (0..self.dim()).filter(|&j| self.get(j, i)).map(Polynomial::var).sum()).collect()
    }

    pub fn act_on_poly(&self, p: &Polynomial) -> Result<Polynomial> {
        if p.var_span() > self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), found: p.var_span() });
        }
        Ok(p.substitute(&self.variable_images()))
    }
}

impl GroupElement for MatF2 {
    fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n, other.n);
        let mut rows = [0u8; MAX_DIM];
        for (i, r) in rows.iter_mut().enumerate().take(self.dim()) {
            for k in 0..self.dim() {
                if self.get(i, k) {
                    *r ^= other.rows[k];
                }
            }
        }
        Self { n: self.n, rows }
    }
}

/// Order of `GL_n(2)`.
pub fn gl_order(n: usize) -> u64 {
    (0..n as u32).map(|i| (1u64 << n) - (1u64 << i)).product()
}

/// A finite subgroup of `GL_n(2)` given by generators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixGroup {
    dim: usize,
    gens: Vec<MatF2>,
}

impl MatrixGroup {
    pub fn new(dim: usize, gens: Vec<MatF2>) -> Result<Self> {
        for g in &gens {
            if g.dim() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: g.dim() });
            }
        }
        Ok(Self { dim, gens })
    }

    pub fn trivial(dim: usize) -> Self {
        Self { dim, gens: Vec::new() }
    }

    /// All of `GL_n(2)`: elementary transvections generate it.
    pub fn general_linear(dim: usize) -> Self {
        let mut gens = Vec::new();
        for i in 0..dim {
            for j in 0..dim {
                if i != j {
                    let mut g = MatF2::identity(dim);
                    g.rows[i] |= 1 << j;
                    gens.push(g);
                }
            }
        }
        Self { dim, gens }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn generators(&self) -> &[MatF2] {
        &self.gens
    }

    pub fn with_generator(&self, g: MatF2) -> Self {
        let mut gens = self.gens.clone();
        gens.push(g);
        Self { dim: self.dim, gens }
    }

    pub fn elements(&self, budget: usize) -> Result<Vec<MatF2>> {
        closure(&MatF2::identity(self.dim), &self.gens, budget)
    }

    pub fn order(&self, budget: usize) -> Result<usize> {
        Ok(self.elements(budget)?.len())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_and_rejection() {
        let a = MatF2::from_rows(&[[1, 1, 0], [0, 1, 1], [0, 0, 1]]).unwrap();
        assert_eq!(a.mul(&a.inverse()), MatF2::identity(3));
        assert_eq!(MatF2::from_rows(&[[1, 1], [1, 1]]), Err(Error::NotInvertible));
        assert!(MatF2::from_rows(&[[1, 2], [0, 1]]).is_err());
    }

    #[test]
    fn general_linear_orders() {
        assert_eq!(MatrixGroup::general_linear(2).order(1000).unwrap(), 6);
        assert_eq!(MatrixGroup::general_linear(3).order(1000).unwrap(), 168);
        assert_eq!(gl_order(4), 20160);
        assert!(MatrixGroup::general_linear(3).order(100).is_err());
    }
}
