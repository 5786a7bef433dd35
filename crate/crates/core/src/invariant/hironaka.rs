use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::gf2::{weighted_monomial_basis, BitVec, BitVectorSpace, GradedSlice, Polynomial, Ring};
use crate::group::DEFAULT_BUDGET;
use crate::series::PoincareSeries;
use crate::subring::Subalgebra;

use super::action::GroupAction;

/// Primary and secondary invariants: the invariant ring is (at least up to
/// the verified bound) `⊕_j R·s_j` with `R = F_2[p_1, …, p_k]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HironakaDecomposition {
    pub primaries: Vec<Polynomial>,
    pub primary_degrees: Vec<u32>,
    pub secondaries: Vec<Polynomial>,
    pub secondary_degrees: Vec<u32>,
    pub group_order: usize,
}

impl HironakaDecomposition {
    /// `∏ deg p_i / |G|`.
    pub fn expected_count(&self) -> usize {
        expected_count(&self.primary_degrees, self.group_order)
    }

    pub fn is_complete(&self) -> bool {
        self.secondaries.len() == self.expected_count()
    }

    pub fn series(&self) -> PoincareSeries {
        PoincareSeries::free_module(&self.secondary_degrees, &self.primary_degrees)
    }

    /// The module `R(s_1, …, s_k)` spanned by the first `k` secondaries.
    pub fn prefix_module(&self, k: usize) -> Result<Subalgebra> {
        Subalgebra::module(
            vec![1; self.n_vars()],
            self.primaries.clone(),
            self.secondaries[..k.min(self.secondaries.len())].to_vec(),
        )
    }

    fn n_vars(&self) -> usize {
        self.primaries.iter().chain(&self.secondaries).map(Polynomial::var_span).max().unwrap_or(0)
    }

    /// Structured text: degrees and canonical polynomials, then the series.
    pub fn canonical_text(&self, ring: &Ring) -> String {
        let mut s = format!("group_order: {}\nprimaries:\n", self.group_order);
        for (d, p) in self.primary_degrees.iter().zip(&self.primaries) {
            s.push_str(&format!("  {d}: {}\n", ring.format(p)));
        }
        s.push_str("secondaries:\n");
        for (d, p) in self.secondary_degrees.iter().zip(&self.secondaries) {
            s.push_str(&format!("  {d}: {}\n", ring.format(p)));
        }
        s.push_str(&format!("series: {}\n", self.series()));
        s
    }

    /// SHA-256 of `canonical_text`, hex encoded.
    pub fn digest(&self, ring: &Ring) -> String {
        hex(&Sha256::digest(self.canonical_text(ring).as_bytes()))
    }
}

pub(crate) fn hex(bytes: &[u8]) -> String {
    bytes.iter().map(|b| format!("{b:02x}")).collect()
}

pub fn expected_count(primary_degrees: &[u32], group_order: usize) -> usize {
    let prod: u64 = primary_degrees.iter().map(|&d| d as u64).product();
    (prod / group_order as u64) as usize
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HsopReport {
    pub dims: Vec<usize>,
    pub expected: Vec<usize>,
    /// First degree where the generated algebra falls short of the free count.
    pub failure: Option<u32>,
}

impl HsopReport {
    pub fn ok(&self) -> bool {
        self.failure.is_none()
    }
}

/// Compares the graded dimensions of `F_2[polys]` with `∏ 1/(1 - t^{d_i})`
/// through `bound`.
pub fn validate_hsop(polys: &[Polynomial], action: &GroupAction, bound: u32) -> Result<HsopReport> {
    for p in polys {
        if !action.is_invariant(p)? {
            return Err(Error::Hypothesis(format!("{} is not invariant", action.ring().format(p))));
        }
    }
    let alg = Subalgebra::new(action.n_vars(), polys.to_vec())?;
    let dims = alg.dims(bound)?;
    let expected: Vec<usize> =
        PoincareSeries::free(alg.ring_degrees()).expand(bound as usize).into_iter().map(|c| c as usize).collect();
    let failure = dims.iter().zip(&expected).position(|(a, b)| a != b).map(|d| d as u32);
    Ok(HsopReport { dims, expected, failure })
}

/// One degree of the shortfall loop.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShortfallStep {
    pub degree: u32,
    pub invariant_dim: usize,
    pub module_dim: usize,
    pub added: usize,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SecondaryRun {
    pub decomposition: HironakaDecomposition,
    pub steps: Vec<ShortfallStep>,
}

impl SecondaryRun {
    pub fn invariant_dims(&self) -> Vec<usize> {
        self.steps.iter().map(|s| s.invariant_dim).collect()
    }
}

/// Span of `R·s_j` in degree `d` for the given secondaries.
fn module_vectors(
    r: &Subalgebra,
    secondaries: &[Polynomial],
    secondary_degrees: &[u32],
    d: u32,
    slice: &GradedSlice,
) -> Result<Vec<BitVec>> {
    let mut vecs = Vec::new();
    for (s, &sd) in secondaries.iter().zip(secondary_degrees) {
        if sd > d {
            continue;
        }
        for e in weighted_monomial_basis(r.ring_degrees(), d - sd) {
            vecs.push(slice.to_vec(&(&r.ring_product(e) * s))?);
        }
    }
    Ok(vecs)
}

/// Shortfall loop: walk up the degrees, and wherever the invariants exceed
/// the module spanned so far, adjoin the reduced echelon basis of the
/// invariants modulo that module. Stops once there are `∏ deg / |G|`
/// secondaries; fails if `max_degree` is passed first.
pub fn secondary_invariants(action: &GroupAction, primaries: &[Polynomial], max_degree: u32) -> Result<SecondaryRun> {
    let group_order = action.group().order(DEFAULT_BUDGET)?;
    let r = Subalgebra::new(action.n_vars(), primaries.to_vec())?;
    let primary_degrees = r.ring_degrees().to_vec();
    let target = expected_count(&primary_degrees, group_order);
    let mut secondaries: Vec<Polynomial> = Vec::new();
    let mut secondary_degrees: Vec<u32> = Vec::new();
    let mut steps = Vec::new();
    for item in action.fixed_spaces() {
        if secondaries.len() >= target {
            break;
        }
        let (d, slice, inv) = item?;
        if d > max_degree {
            return Err(Error::Budget(format!(
                "{} of {target} secondary invariants found by degree {max_degree}",
                secondaries.len()
            )));
        }
        let module = BitVectorSpace::from_vectors(
            slice.len(),
            module_vectors(&r, &secondaries, &secondary_degrees, d, &slice)?,
        )?;
        if !module.is_subspace_of(&inv)? {
            return Err(Error::Hypothesis(format!("degree {d}: module is not inside the invariants")));
        }
        let reduced = inv.basis().iter().map(|b| module.reduce(b)).collect::<Result<Vec<_>>>()?;
        let fresh = BitVectorSpace::from_vectors(slice.len(), reduced)?;
        for v in fresh.basis() {
            secondaries.push(slice.to_poly(v));
            secondary_degrees.push(d);
        }
        steps.push(ShortfallStep { degree: d, invariant_dim: inv.dim(), module_dim: module.dim(), added: fresh.dim() });
    }
    let decomposition = HironakaDecomposition {
        primaries: primaries.to_vec(),
        primary_degrees,
        secondaries,
        secondary_degrees,
        group_order,
    };
    Ok(SecondaryRun { decomposition, steps })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FreenessReport {
    pub bound: u32,
    /// Per degree: number of spanning products, their rank, invariant dim.
    pub table: Vec<(usize, usize, usize)>,
    pub relation_degree: Option<u32>,
}

impl FreenessReport {
    pub fn ok(&self) -> bool {
        self.relation_degree.is_none()
    }
}

/// Per-degree check that the products `m · s_j` (m a primary monomial) are
/// linearly independent and span the invariants, given `invariant_dims`.
pub fn freeness_against(dec: &HironakaDecomposition, invariant_dims: &[usize]) -> Result<FreenessReport> {
    let module = dec.prefix_module(dec.secondaries.len())?;
    let bound = invariant_dims.len().saturating_sub(1) as u32;
    let mut table = Vec::new();
    let mut relation_degree = None;
    for d in 0..=bound {
        let count = module.span_terms(d).len();
        let rank = module.slice(d)?.1.dim();
        let inv = invariant_dims[d as usize];
        if relation_degree.is_none() && (rank != count || rank != inv) {
            relation_degree = Some(d);
        }
        table.push((count, rank, inv));
    }
    Ok(FreenessReport { bound, table, relation_degree })
}

pub fn freeness_check(dec: &HironakaDecomposition, action: &GroupAction, bound: u32) -> Result<FreenessReport> {
    freeness_against(dec, &action.invariant_dims(bound)?)
}

/// Whether a homogeneous `p` lies outside `Σ R·s_j` over the given
/// secondaries.
pub fn outside_span(primaries: &[Polynomial], secondaries: &[Polynomial], p: &Polynomial) -> Result<bool> {
    let n = primaries.iter().chain(secondaries).chain([p]).map(Polynomial::var_span).max().unwrap_or(0);
    let m = Subalgebra::module(vec![1; n], primaries.to_vec(), secondaries.to_vec())?;
    Ok(!m.contains(p)?)
}
