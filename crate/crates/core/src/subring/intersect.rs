use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::BitVectorSpace;

use super::subalgebra::Subalgebra;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct IntersectionReport {
    pub bound: u32,
    /// `dim A_d`, `dim B_d`, `dim (A ∩ B)_d`.
    pub dims: Vec<(usize, usize, usize)>,
    /// First degree where the intersection differs from the candidate.
    pub mismatch: Option<u32>,
    #[serde(skip)]
    pub slices: Vec<BitVectorSpace>,
}

impl IntersectionReport {
    pub fn intersection_dims(&self) -> Vec<usize> {
        self.dims.iter().map(|d| d.2).collect()
    }

    pub fn matches(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Degree-by-degree `A ∩ B` through `bound`, compared with `candidate` when
/// one is given.
pub fn intersect_subalgebras(
    a: &Subalgebra,
    b: &Subalgebra,
    candidate: Option<&Subalgebra>,
    bound: u32,
) -> Result<IntersectionReport> {
    if a.weights() != b.weights() || candidate.is_some_and(|c| c.weights() != a.weights()) {
        return Err(Error::Invalid("subalgebras live in different rings".into()));
    }
    let mut dims = Vec::new();
    let mut slices = Vec::new();
    let mut mismatch = None;
    for d in 0..=bound {
        let sa = a.slice(d)?.1;
        let sb = b.slice(d)?.1;
        let both = sa.intersect(&sb)?;
        if mismatch.is_none() {
            if let Some(c) = candidate {
                if c.slice(d)?.1 != both {
                    mismatch = Some(d);
                }
            }
        }
        dims.push((sa.dim(), sb.dim(), both.dim()));
        slices.push(both);
    }
    Ok(IntersectionReport { bound, dims, mismatch, slices })
}

/// First degree through `bound` where the two spans differ.
pub fn first_difference(a: &Subalgebra, b: &Subalgebra, bound: u32) -> Result<Option<u32>> {
    for d in 0..=bound {
        if a.slice(d)?.1 != b.slice(d)?.1 {
            return Ok(Some(d));
        }
    }
    Ok(None)
}

/// Whether `parts` sum to `whole` in every degree, and directly so when
/// `direct` is set.
pub fn sum_matches(whole: &Subalgebra, parts: &[&Subalgebra], direct: bool, bound: u32) -> Result<Option<u32>> {
    for d in 0..=bound {
        let target = whole.slice(d)?.1;
        let mut acc = BitVectorSpace::zero(target.ambient());
        let mut total = 0;
        for p in parts {
            let s = p.slice(d)?.1;
            total += s.dim();
            acc = acc.sum(&s)?;
        }
        if acc != target || (direct && total != acc.dim()) {
            return Ok(Some(d));
        }
    }
    Ok(None)
}
