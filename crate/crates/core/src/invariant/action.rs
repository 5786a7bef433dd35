use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::gf2::{row_dependencies, BitMatrix, BitVec, BitVectorSpace, GradedSlice, Monomial, Polynomial, Ring};
use crate::group::{GroupElement, MatF2, MatrixGroup};

// largest group enumerated when looking for a permutation frame
const FRAME_BUDGET: usize = 200_000;

/// A matrix group acting on a polynomial ring with variables of degree 1.
#[derive(Debug, Clone)]
pub struct GroupAction {
    group: MatrixGroup,
    ring: Ring,
}

impl GroupAction {
    pub fn new(group: MatrixGroup, ring: Ring) -> Result<Self> {
        if group.dim() != ring.n_vars() {
            return Err(Error::DimensionMismatch { expected: ring.n_vars(), found: group.dim() });
        }
        if !ring.is_standard() {
            return Err(Error::NonUnitDegree);
        }
        Ok(Self { group, ring })
    }

    /// Variables named `x0, x1, …`.
    pub fn with_default_names(group: MatrixGroup) -> Self {
        let names: Vec<String> = (0..group.dim()).map(|i| format!("x{i}")).collect();
        Self { ring: Ring::new(&names), group }
    }

    pub fn group(&self) -> &MatrixGroup {
        &self.group
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn n_vars(&self) -> usize {
        self.group.dim()
    }

    /// Degree-by-degree fixed spaces, starting at degree 0.
    pub fn fixed_spaces(&self) -> FixedSpaces {
        let frame = PermutationFrame::find(&self.group);
        let mut mats = frame.constraints.clone();
        if let Some(p) = frame.change {
            mats.push(p);
        }
        FixedSpaces { images: SliceImages::new(self.n_vars(), &mats), frame, started: false }
    }

    pub fn invariant_dims(&self, bound: u32) -> Result<Vec<usize>> {
        self.fixed_spaces().take(bound as usize + 1).map(|r| r.map(|(_, _, s)| s.dim())).collect()
    }

    /// Fixed space in degree `d` and the slice it lives in.
    pub fn invariant_space(&self, d: u32) -> Result<(GradedSlice, BitVectorSpace)> {
        let (_, slice, space) = self.fixed_spaces().nth(d as usize).expect("unbounded iterator")?;
        Ok((slice, space))
    }

    /// Canonical basis of the degree-`d` invariants: the reduced echelon
    /// basis, each element led by its largest monomial.
    pub fn invariant_basis(&self, d: u32) -> Result<Vec<Polynomial>> {
        let (slice, space) = self.invariant_space(d)?;
        Ok(slice.polys(&space))
    }

    pub fn is_invariant(&self, p: &Polynomial) -> Result<bool> {
        for g in self.group.generators() {
            if &g.act_on_poly(p)? != p {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Action matrices of the generators on one graded slice, stored by
/// columns: `columns[g][k]` is the image of the `k`-th basis monomial.
///
/// Moving up a degree uses `g·(m·x_i) = (g·m)(g·x_i)`, so every column costs
/// one sparse product with a linear form.
pub struct SliceImages {
    n: usize,
    // variables occurring in the image of each variable, per generator
    forms: Vec<Vec<Vec<usize>>>,
    degree: u32,
    slice: GradedSlice,
    columns: Vec<Vec<BitVec>>,
}

impl SliceImages {
    pub fn new(n: usize, gens: &[MatF2]) -> Self {
        let forms = gens.iter().map(|g| (0..n).map(|i| (0..n).filter(|&j| g.get(j, i)).collect()).collect()).collect();
        let slice = GradedSlice::new(n, 0);
        let columns = gens.iter().map(|_| vec![BitVec::unit(1, 0)]).collect();
        Self { n, forms, degree: 0, slice, columns }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn slice(&self) -> &GradedSlice {
        &self.slice
    }

    pub fn columns(&self) -> &[Vec<BitVec>] {
        &self.columns
    }

    pub fn advance(&mut self) {
        let next = GradedSlice::new(self.n, self.degree + 1);
        // mul_map[j][b]: index in `next` of (basis monomial b) * x_j
        let mul_map: Vec<Vec<u32>> = (0..self.n)
            .map(|j| {
                let xj = crate::gf2::Monomial::var(j);
                self.slice.basis().iter().map(|m| next.index_of(m.mul(xj)).unwrap() as u32).collect()
            })
            .collect();
        let mut new_columns = Vec::with_capacity(self.columns.len());
        for (gi, cols) in self.columns.iter().enumerate() {
            let forms = &self.forms[gi];
            let mut out = Vec::with_capacity(next.len());
            for m in next.basis() {
                let i = m.last_var().expect("positive degree");
                let prev = self.slice.index_of(m.div_var(i).unwrap()).unwrap();
                let mut v = BitVec::zeros(next.len());
                for b in cols[prev].iter_ones() {
                    for &j in &forms[i] {
                        v.flip(mul_map[j][b] as usize);
                    }
                }
                out.push(v);
            }
            new_columns.push(out);
        }
        self.columns = new_columns;
        self.slice = next;
        self.degree += 1;
    }

    /// Joint kernel of `ρ(g) − I` over all generators, by one dense
    /// elimination. Slow in high degree; `GroupAction::fixed_spaces` is the
    /// fast path.
    pub fn fixed_space(&self) -> BitVectorSpace {
        let n = self.slice.len();
        if self.columns.is_empty() {
            return BitVectorSpace::full(n);
        }
        let mut stacked = BitMatrix::zeros(0, n);
        for cols in &self.columns {
            let mut by_cols = BitMatrix::zeros(n, n);
            for (k, c) in cols.iter().enumerate() {
                by_cols.row_words_mut(k).copy_from_slice(c.words());
                by_cols.flip(k, k);
            }
            stacked.stack(&by_cols.transpose()).expect("equal widths");
        }
        stacked.kernel()
    }
}

/// Coordinates in which a subgroup `H` of the group acts by permuting
/// variables.
///
/// With `f = ρ(P) h`, `f` is `G`-invariant iff `h` is invariant under
/// `P^{-1} G P`. Invariants of the conjugated group are sums of `H`-orbits
/// of monomials, so only the remaining generators need to be imposed, on
/// about `N / |H|` unknowns instead of `N`.
#[derive(Debug, Clone)]
pub struct PermutationFrame {
    /// `P`, or `None` for the identity.
    pub change: Option<MatF2>,
    /// Elements of `H` as variable maps `x_i -> x_{σ(i)}`.
    pub permutations: Vec<Vec<usize>>,
    /// Conjugated generators that are not in `H`.
    pub constraints: Vec<MatF2>,
}

fn permutation_matrices(n: usize) -> Vec<MatF2> {
    let mut out = Vec::new();
    let mut sigma: Vec<usize> = (0..n).collect();
    permute(&mut sigma, 0, &mut out);
    out
}

fn permute(sigma: &mut Vec<usize>, k: usize, out: &mut Vec<MatF2>) {
    if k == sigma.len() {
        let n = sigma.len();
        let rows: Vec<Vec<u8>> = (0..n).map(|j| (0..n).map(|i| u8::from(sigma[i] == j)).collect()).collect();
        out.push(MatF2::from_rows(&rows).expect("permutation matrix"));
        return;
    }
    for i in k..sigma.len() {
        sigma.swap(k, i);
        permute(sigma, k + 1, out);
        sigma.swap(k, i);
    }
}

fn as_permutation(m: &MatF2) -> Option<Vec<usize>> {
    let n = m.dim();
    (0..n)
        .map(|i| {
            let mut ones = (0..n).filter(|&j| m.get(j, i));
            let j = ones.next()?;
            ones.next().is_none().then_some(j)
        })
        .collect()
}

impl PermutationFrame {
    pub fn identity(group: &MatrixGroup) -> Self {
        Self { change: None, permutations: vec![(0..group.dim()).collect()], constraints: group.generators().to_vec() }
    }

    /// Picks `P` maximising `|P^{-1} G P ∩ S_n|`, preferring the identity on
    /// ties. `P` ranges over all of `GL_n(2)` for `n ≤ 4`; larger `n` keeps
    /// the given coordinates.
    pub fn find(group: &MatrixGroup) -> Self {
        let n = group.dim();
        let Ok(elements) = group.elements(FRAME_BUDGET) else {
            return Self::identity(group);
        };
        let members: HashSet<MatF2> = elements.iter().cloned().collect();
        let perms = permutation_matrices(n);
        let frames: Vec<MatF2> = if n <= 4 {
            let mut all = MatrixGroup::general_linear(n).elements(FRAME_BUDGET).expect("GL_n(2) for n <= 4");
            let id = MatF2::identity(n);
            all.retain(|p| *p != id);
            all.insert(0, id);
            all
        } else {
            vec![MatF2::identity(n)]
        };
        let mut best: Option<(MatF2, Vec<MatF2>)> = None;
        for p in frames {
            let pinv = p.inverse();
            let h: Vec<MatF2> = perms.iter().filter(|pi| members.contains(&p.mul(pi).mul(&pinv))).cloned().collect();
            if best.as_ref().is_none_or(|(_, b)| h.len() > b.len()) {
                best = Some((p, h));
            }
        }
        let (p, h) = best.expect("at least the identity frame");
        let pinv = p.inverse();
        let constraints = group.generators().iter().map(|g| pinv.mul(g).mul(&p)).filter(|g| !h.contains(g)).collect();
        let change = (p != MatF2::identity(n)).then_some(p);
        let permutations = h.iter().map(|m| as_permutation(m).expect("permutation matrix")).collect();
        Self { change, permutations, constraints }
    }

    pub fn subgroup_order(&self) -> usize {
        self.permutations.len()
    }
}

fn permute_monomial(m: Monomial, sigma: &[usize]) -> Monomial {
    let e = m.exponents(sigma.len());
    let mut out = vec![0; sigma.len()];
    for (i, &s) in sigma.iter().enumerate() {
        out[s] = e[i];
    }
    Monomial::from_exponents(&out)
}

/// Iterator over `(degree, slice, fixed space)`.
pub struct FixedSpaces {
    // constraint generators, then `P` if the frame changes coordinates
    images: SliceImages,
    frame: PermutationFrame,
    started: bool,
}

impl FixedSpaces {
    pub fn frame(&self) -> &PermutationFrame {
        &self.frame
    }

    fn solve(&self) -> Result<BitVectorSpace> {
        let slice = self.images.slice();
        let n = slice.len();
        let basis = slice.basis();
        let mut orbit_of = vec![usize::MAX; n];
        let mut orbits: Vec<Vec<usize>> = Vec::new();
        for k in 0..n {
            if orbit_of[k] != usize::MAX {
                continue;
            }
            let mut orbit = Vec::new();
            for sigma in &self.frame.permutations {
                let j = slice.index_of(permute_monomial(basis[k], sigma)).expect("same degree");
                if orbit_of[j] == usize::MAX {
                    orbit_of[j] = orbits.len();
                    orbit.push(j);
                }
            }
            orbits.push(orbit);
        }
        let nc = self.frame.constraints.len();
        let seg = n.div_ceil(64);
        let cols = self.images.columns();
        // (ρ(g) + 1) applied to each orbit sum, generators side by side
        let rows: Vec<BitVec> = orbits
            .iter()
            .map(|orbit| {
                let mut words = vec![0u64; nc * seg];
                for (g, chunk) in words.chunks_exact_mut(seg).enumerate() {
                    for &m in orbit {
                        for (a, b) in chunk.iter_mut().zip(cols[g][m].words()) {
                            *a ^= b;
                        }
                        chunk[m >> 6] ^= 1u64 << (m & 63);
                    }
                }
                BitVec::from_words(nc * seg * 64, words)
            })
            .collect();
        let deps = row_dependencies(nc * seg * 64, &rows)?;
        let vecs = deps.iter().map(|c| {
            let mut v = BitVec::zeros(n);
            for o in c.iter_ones() {
                for &m in &orbits[o] {
                    v.flip(m);
                }
            }
            match self.frame.change {
                None => v,
                Some(_) => {
                    let mut w = BitVec::zeros(n);
                    for k in v.iter_ones() {
                        w.xor_assign(&cols[nc][k]);
                    }
                    w
                }
            }
        });
        BitVectorSpace::from_vectors(n, vecs)
    }
}

impl Iterator for FixedSpaces {
    type Item = Result<(u32, GradedSlice, BitVectorSpace)>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.started {
            self.images.advance();
        }
        self.started = true;
        Some(self.solve().map(|space| (self.images.degree(), self.images.slice().clone(), space)))
    }
}
