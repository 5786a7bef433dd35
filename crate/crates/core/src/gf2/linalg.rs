//! Dense linear algebra over the two-element field on word-packed bit vectors.
//!
//! Pivots are the *lowest* set index of a row. Graded slices index their
//! monomials largest-first, so a row's pivot is its leading monomial.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[inline]
fn words_for(bits: usize) -> usize {
    bits.div_ceil(64)
}

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BitVec {
    len: usize,
    words: Vec<u64>,
}

impl std::fmt::Debug for BitVec {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s: String = (0..self.len).map(|i| if self.get(i) { '1' } else { '0' }).collect();
        write!(f, "BitVec({s})")
    }
}

impl BitVec {
    pub fn zeros(len: usize) -> Self {
        Self { len, words: vec![0; words_for(len)] }
    }

    pub fn unit(len: usize, i: usize) -> Self {
        let mut v = Self::zeros(len);
        v.set(i, true);
        v
    }

    pub fn from_bools(bits: &[bool]) -> Self {
        let mut v = Self::zeros(bits.len());
        for (i, &b) in bits.iter().enumerate() {
            if b {
                v.set(i, true);
            }
        }
        v
    }

    pub fn from_ones(len: usize, ones: impl IntoIterator<Item = usize>) -> Self {
        let mut v = Self::zeros(len);
        for i in ones {
            v.flip(i);
        }
        v
    }

    pub(crate) fn from_words(len: usize, words: Vec<u64>) -> Self {
        debug_assert_eq!(words.len(), words_for(len));
        Self { len, words }
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn words(&self) -> &[u64] {
        &self.words
    }

    #[inline]
    pub fn get(&self, i: usize) -> bool {
        debug_assert!(i < self.len);
        (self.words[i >> 6] >> (i & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, i: usize, b: bool) {
        debug_assert!(i < self.len);
        let mask = 1u64 << (i & 63);
        if b {
            self.words[i >> 6] |= mask;
        } else {
            self.words[i >> 6] &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, i: usize) {
        debug_assert!(i < self.len);
        self.words[i >> 6] ^= 1u64 << (i & 63);
    }

    pub fn xor_assign(&mut self, other: &BitVec) {
        debug_assert_eq!(self.len, other.len);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a ^= b;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn count_ones(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn first_one(&self) -> Option<usize> {
        first_one(&self.words)
    }

    pub fn iter_ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &w)| {
            let mut w = w;
            std::iter::from_fn(move || {
                if w == 0 {
                    None
                } else {
                    let b = w.trailing_zeros() as usize;
                    w &= w - 1;
                    Some(wi * 64 + b)
                }
            })
        })
    }

    /// Inner product (parity of the common support).
    pub fn dot(&self, other: &BitVec) -> bool {
        self.words.iter().zip(&other.words).fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones()) & 1 == 1
    }

    pub fn concat(&self, other: &BitVec) -> BitVec {
        let mut v = BitVec::zeros(self.len + other.len);
        for i in self.iter_ones() {
            v.set(i, true);
        }
        for i in other.iter_ones() {
            v.set(self.len + i, true);
        }
        v
    }

    pub fn slice(&self, start: usize, end: usize) -> BitVec {
        BitVec::from_ones(end - start, self.iter_ones().filter(|&i| i >= start && i < end).map(|i| i - start))
    }
}

#[inline]
fn first_one(words: &[u64]) -> Option<usize> {
    words.iter().enumerate().find(|(_, &w)| w != 0).map(|(i, w)| i * 64 + w.trailing_zeros() as usize)
}

#[inline]
fn xor_words(dst: &mut [u64], src: &[u64]) {
    for (a, b) in dst.iter_mut().zip(src) {
        *a ^= b;
    }
}

/// Row-major bit matrix with a fixed word stride per row.
#[derive(Clone, PartialEq, Eq)]
pub struct BitMatrix {
    rows: usize,
    cols: usize,
    stride: usize,
    data: Vec<u64>,
}

impl std::fmt::Debug for BitMatrix {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "BitMatrix {}x{}", self.rows, self.cols)?;
        for r in 0..self.rows.min(32) {
            let s: String = (0..self.cols.min(96)).map(|c| if self.get(r, c) { '1' } else { '.' }).collect();
            writeln!(f, "  {s}")?;
        }
        Ok(())
    }
}

impl BitMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        let stride = words_for(cols);
        Self { rows, cols, stride, data: vec![0; rows * stride] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, true);
        }
        m
    }

    pub fn from_rows(cols: usize, rows: &[BitVec]) -> Result<Self> {
        let mut m = Self::zeros(rows.len(), cols);
        for (r, v) in rows.iter().enumerate() {
            if v.len() != cols {
                return Err(Error::DimensionMismatch { expected: cols, found: v.len() });
            }
            m.row_words_mut(r).copy_from_slice(&v.words);
        }
        Ok(m)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> bool {
        (self.data[r * self.stride + (c >> 6)] >> (c & 63)) & 1 == 1
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, b: bool) {
        let w = &mut self.data[r * self.stride + (c >> 6)];
        let mask = 1u64 << (c & 63);
        if b {
            *w |= mask;
        } else {
            *w &= !mask;
        }
    }

    #[inline]
    pub fn flip(&mut self, r: usize, c: usize) {
        self.data[r * self.stride + (c >> 6)] ^= 1u64 << (c & 63);
    }

    #[inline]
    pub fn row_words(&self, r: usize) -> &[u64] {
        &self.data[r * self.stride..(r + 1) * self.stride]
    }

    #[inline]
    pub fn row_words_mut(&mut self, r: usize) -> &mut [u64] {
        &mut self.data[r * self.stride..(r + 1) * self.stride]
    }

    pub fn row(&self, r: usize) -> BitVec {
        BitVec::from_words(self.cols, self.row_words(r).to_vec())
    }

    /// Appends the rows of `other` below `self`.
    pub fn stack(&mut self, other: &BitMatrix) -> Result<()> {
        if other.cols != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: other.cols });
        }
        self.data.extend_from_slice(&other.data);
        self.rows += other.rows;
        Ok(())
    }

    pub fn transpose(&self) -> BitMatrix {
        let mut t = BitMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            let words = self.row_words(r);
            for (wi, &w) in words.iter().enumerate() {
                let mut w = w;
                while w != 0 {
                    let c = wi * 64 + w.trailing_zeros() as usize;
                    w &= w - 1;
                    t.set(c, r, true);
                }
            }
        }
        t
    }

    /// `self * v` for a column vector `v`.
    pub fn mul_vec(&self, v: &BitVec) -> Result<BitVec> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch { expected: self.cols, found: v.len() });
        }
        let mut out = BitVec::zeros(self.rows);
        for r in 0..self.rows {
            let parity = self.row_words(r).iter().zip(v.words()).fold(0u32, |acc, (a, b)| acc ^ (a & b).count_ones());
            if parity & 1 == 1 {
                out.set(r, true);
            }
        }
        Ok(out)
    }

    /// In-place reduced row echelon form. Rows are compacted so that the
    /// first `rank` rows are the nonzero reduced rows, ordered by pivot.
    /// Returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let stride = self.stride;
        let mut pivots = Vec::new();
        let mut rank = 0;
        for col in 0..self.cols {
            if rank == self.rows {
                break;
            }
            let wi = col >> 6;
            let mask = 1u64 << (col & 63);
            let Some(p) = (rank..self.rows).find(|&r| self.data[r * stride + wi] & mask != 0) else {
                continue;
            };
            if p != rank {
                for k in 0..stride {
                    self.data.swap(p * stride + k, rank * stride + k);
                }
            }
            // Unpivoted rows are zero left of `col`, so the pivot row is too:
            // XOR only from word `wi` on.
            let (before, rest) = self.data.split_at_mut(rank * stride);
            let (pivot_row, after) = rest.split_at_mut(stride);
            let pivot_tail = &pivot_row[wi..];
            for row in before.chunks_exact_mut(stride).chain(after.chunks_exact_mut(stride)) {
                if row[wi] & mask != 0 {
                    xor_words(&mut row[wi..], pivot_tail);
                }
            }
            pivots.push(col);
            rank += 1;
        }
        self.rows = rank;
        self.data.truncate(rank * stride);
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Null space `{ v : self * v = 0 }`.
    pub fn kernel(&self) -> BitVectorSpace {
        let mut m = self.clone();
        let pivots = m.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut vecs = Vec::with_capacity(self.cols - pivots.len());
        for free in (0..self.cols).filter(|&c| !is_pivot[c]) {
            let mut v = BitVec::unit(self.cols, free);
            for (i, &p) in pivots.iter().enumerate() {
                if m.get(i, free) {
                    v.set(p, true);
                }
            }
            vecs.push(v);
        }
        BitVectorSpace::from_vectors(self.cols, vecs).expect("kernel vectors have the ambient length")
    }
}

/// A subspace of `F_2^n`, stored as its canonical reduced echelon basis.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BitVectorSpace {
    ambient: usize,
    rows: Vec<BitVec>,
    pivots: Vec<usize>,
}

impl std::fmt::Debug for BitVectorSpace {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("BitVectorSpace")
            .field("ambient", &self.ambient)
            .field("dim", &self.rows.len())
            .field("pivots", &self.pivots)
            .finish()
    }
}

impl BitVectorSpace {
    pub fn zero(ambient: usize) -> Self {
        Self { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_vectors(ambient, (0..ambient).map(|i| BitVec::unit(ambient, i))).unwrap()
    }

    pub fn from_vectors(ambient: usize, vecs: impl IntoIterator<Item = BitVec>) -> Result<Self> {
        let vecs: Vec<BitVec> = vecs.into_iter().collect();
        let mut m = BitMatrix::from_rows(ambient, &vecs)?;
        let pivots = m.rref();
        let rows = (0..pivots.len()).map(|r| m.row(r)).collect();
        Ok(Self { ambient, rows, pivots })
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn basis(&self) -> &[BitVec] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    fn check(&self, v: &BitVec) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: v.len() });
        }
        Ok(())
    }

    /// Normal form of `v` modulo the space: every pivot coordinate cleared.
    pub fn reduce(&self, v: &BitVec) -> Result<BitVec> {
        self.check(v)?;
        let mut v = v.clone();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v.get(p) {
                v.xor_assign(row);
            }
        }
        Ok(v)
    }

    pub fn contains(&self, v: &BitVec) -> Result<bool> {
        Ok(self.reduce(v)?.is_zero())
    }

    /// Coordinates of `v` in the echelon basis, if `v` lies in the space.
    pub fn coordinates(&self, v: &BitVec) -> Result<Option<Vec<usize>>> {
        self.check(v)?;
        let mut v = v.clone();
        let mut used = Vec::new();
        for (i, (row, &p)) in self.rows.iter().zip(&self.pivots).enumerate() {
            if v.get(p) {
                v.xor_assign(row);
                used.push(i);
            }
        }
        Ok(v.is_zero().then_some(used))
    }

    pub fn is_subspace_of(&self, other: &BitVectorSpace) -> Result<bool> {
        for r in &self.rows {
            if !other.contains(r)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &BitVectorSpace) -> Result<BitVectorSpace> {
        if other.ambient != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        Self::from_vectors(self.ambient, self.rows.iter().chain(&other.rows).cloned())
    }

    /// Zassenhaus: echelonize `[u | u]` and `[v | 0]`; rows whose left half
    /// vanishes carry a basis of the intersection in their right half.
    pub fn intersect(&self, other: &BitVectorSpace) -> Result<BitVectorSpace> {
        if other.ambient != self.ambient {
            return Err(Error::DimensionMismatch { expected: self.ambient, found: other.ambient });
        }
        let n = self.ambient;
        let zero = BitVec::zeros(n);
        let rows: Vec<BitVec> =
            self.rows.iter().map(|u| u.concat(u)).chain(other.rows.iter().map(|v| v.concat(&zero))).collect();
        let mut m = BitMatrix::from_rows(2 * n, &rows)?;
        let pivots = m.rref();
        let vecs = pivots.iter().enumerate().filter(|(_, &p)| p >= n).map(|(r, _)| m.row(r).slice(n, 2 * n));
        Self::from_vectors(n, vecs)
    }

    /// Extends the space by `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &BitVec) -> Result<bool> {
        let r = self.reduce(v)?;
        let Some(p) = r.first_one() else {
            return Ok(false);
        };
        // clear the new pivot from existing rows to stay reduced
        for row in &mut self.rows {
            if row.get(p) {
                row.xor_assign(&r);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, r);
        Ok(true)
    }
}

/// Null space of a matrix given as a list of rows.
pub fn kernel(m: &BitMatrix) -> BitVectorSpace {
    m.kernel()
}

/// Basis of `{ c : Σ c_i rows[i] = 0 }`, as vectors of length `rows.len()`.
///
/// Forward elimination on `[rows | I]`; the rows whose left part vanishes
/// carry the dependencies.
pub fn row_dependencies(width: usize, rows: &[BitVec]) -> Result<Vec<BitVec>> {
    let k = rows.len();
    let lw = words_for(width);
    let stride = lw + words_for(k);
    let mut data = vec![0u64; k * stride];
    for (i, r) in rows.iter().enumerate() {
        if r.len() != width {
            return Err(Error::DimensionMismatch { expected: width, found: r.len() });
        }
        data[i * stride..i * stride + lw].copy_from_slice(&r.words);
        data[i * stride + lw + (i >> 6)] |= 1u64 << (i & 63);
    }
    let mut rank = 0;
    for wi in 0..lw {
        if rank == k {
            break;
        }
        // lowest set bit in word `wi` among the unpivoted rows
        while let Some((p, bit)) = (rank..k)
            .filter_map(|r| {
                let w = data[r * stride + wi];
                (w != 0).then(|| (r, w.trailing_zeros()))
            })
            .min_by_key(|&(_, b)| b)
        {
            if p != rank {
                for j in 0..stride {
                    data.swap(p * stride + j, rank * stride + j);
                }
            }
            let mask = 1u64 << bit;
            let (head, tail) = data.split_at_mut((rank + 1) * stride);
            let pivot = &head[rank * stride + wi..];
            for row in tail.chunks_exact_mut(stride) {
                if row[wi] & mask != 0 {
                    xor_words(&mut row[wi..], pivot);
                }
            }
            // later rows now have no bits at or below `bit` in this word
            rank += 1;
            if rank == k {
                break;
            }
        }
    }
    Ok((rank..k).map(|r| BitVec::from_words(k, data[r * stride + lw..(r + 1) * stride].to_vec())).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn span_brute(n: usize, vecs: &[u32]) -> Vec<bool> {
        // membership table over all 2^n vectors
        let mut member = vec![false; 1 << n];
        member[0] = true;
        for &v in vecs {
            let snapshot: Vec<usize> = (0..1 << n).filter(|&x| member[x]).collect();
            for x in snapshot {
                member[x ^ v as usize] = true;
            }
        }
        member
    }

    fn to_bitvec(n: usize, x: u32) -> BitVec {
        BitVec::from_ones(n, (0..n).filter(|&i| x >> i & 1 == 1))
    }

    fn space(n: usize, vecs: &[u32]) -> BitVectorSpace {
        BitVectorSpace::from_vectors(n, vecs.iter().map(|&x| to_bitvec(n, x))).unwrap()
    }

    #[test]
    fn identity_kernel_is_zero() {
        assert_eq!(BitMatrix::identity(70).kernel().dim(), 0);
        assert_eq!(BitMatrix::zeros(3, 130).kernel().dim(), 130);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let rows = [0b1011u32, 0b0110, 0b1101];
        let m = BitMatrix::from_rows(4, &rows.iter().map(|&x| to_bitvec(4, x)).collect::<Vec<_>>()).unwrap();
        let k = m.kernel();
        assert_eq!(k.dim(), 4 - m.rank());
        for v in k.basis() {
            assert!(m.mul_vec(v).unwrap().is_zero());
        }
    }

    #[test]
    fn self_intersection() {
        let u = space(7, &[0b1010101, 0b0110011, 0b0001111]);
        assert_eq!(u.intersect(&u).unwrap(), u);
    }

    #[test]
    fn dimension_mismatch() {
        let u = BitVectorSpace::zero(3);
        let v = BitVectorSpace::zero(4);
        assert!(u.intersect(&v).is_err());
        assert!(u.contains(&BitVec::zeros(5)).is_err());
    }

    #[test]
    fn insert_matches_from_vectors() {
        let vecs = [0b110u32, 0b011, 0b101, 0b111];
        let mut s = BitVectorSpace::zero(3);
        for &v in &vecs {
            s.insert(&to_bitvec(3, v)).unwrap();
        }
        assert_eq!(s, space(3, &vecs));
    }

    proptest! {
        #[test]
        fn intersection_matches_enumeration(
            n in 1usize..=12,
            a in proptest::collection::vec(any::<u32>(), 0..6),
            b in proptest::collection::vec(any::<u32>(), 0..6),
        ) {
            let mask = (1u32 << n) - 1;
            let a: Vec<u32> = a.into_iter().map(|x| x & mask).collect();
            let b: Vec<u32> = b.into_iter().map(|x| x & mask).collect();
            let (u, v) = (space(n, &a), space(n, &b));
            let (mu, mv) = (span_brute(n, &a), span_brute(n, &b));
            let brute_cap = (0..1usize << n).filter(|&x| mu[x] && mv[x]).count();
            let brute_u = mu.iter().filter(|&&m| m).count();
            let cap = u.intersect(&v).unwrap();
            prop_assert_eq!(1usize << cap.dim(), brute_cap);
            prop_assert_eq!(1usize << u.dim(), brute_u);
            // membership agrees with enumeration
            for x in 0..1u32 << n {
                prop_assert_eq!(u.contains(&to_bitvec(n, x)).unwrap(), mu[x as usize]);
            }
            // modular law and commutativity
            let sum = u.sum(&v).unwrap();
            prop_assert_eq!(cap.dim() + sum.dim(), u.dim() + v.dim());
            prop_assert_eq!(v.intersect(&u).unwrap(), cap.clone());
            prop_assert_eq!(cap.intersect(&u).unwrap(), cap);
        }

        #[test]
        fn intersection_is_associative(
            n in 1usize..=10,
            a in proptest::collection::vec(any::<u32>(), 0..6),
            b in proptest::collection::vec(any::<u32>(), 0..6),
            c in proptest::collection::vec(any::<u32>(), 0..6),
        ) {
            let mask = (1u32 << n) - 1;
            let f = |v: Vec<u32>| space(n, &v.into_iter().map(|x| x & mask).collect::<Vec<_>>());
            let (u, v, w) = (f(a), f(b), f(c));
            let left = u.intersect(&v).unwrap().intersect(&w).unwrap();
            let right = u.intersect(&v.intersect(&w).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn kernel_dimension_is_nullity(rows in proptest::collection::vec(any::<u16>(), 0..20)) {
            let n = 16;
            let m = BitMatrix::from_rows(n, &rows.iter().map(|&x| to_bitvec(n, x as u32)).collect::<Vec<_>>()).unwrap();
            let k = m.kernel();
            prop_assert_eq!(k.dim() + m.rank(), n);
            for v in k.basis() {
                prop_assert!(m.mul_vec(v).unwrap().is_zero());
            }
        }

        #[test]
        fn row_dependencies_span_the_left_kernel(rows in proptest::collection::vec(any::<u16>(), 0..24)) {
            let n = 16;
            let vecs: Vec<BitVec> = rows.iter().map(|&x| to_bitvec(n, x as u32)).collect();
            let deps = row_dependencies(n, &vecs).unwrap();
            let m = BitMatrix::from_rows(n, &vecs).unwrap();
            prop_assert_eq!(deps.len() + m.rank(), vecs.len());
            for c in &deps {
                let mut acc = BitVec::zeros(n);
                for i in c.iter_ones() { acc.xor_assign(&vecs[i]); }
                prop_assert!(acc.is_zero());
            }
            let span = BitVectorSpace::from_vectors(vecs.len(), deps.clone()).unwrap();
            prop_assert_eq!(span.dim(), deps.len());
        }
    }
}
