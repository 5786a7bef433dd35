use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::invariant::HironakaDecomposition;
use crate::subring::Subalgebra;

use super::PoincareSeries;

/// A graded ring or module known well enough to have a Poincaré series.
#[derive(Debug, Clone)]
pub enum RingDescriptor {
    /// Free over a polynomial ring: `F_2[ring](module)`.
    Free {
        ring_degrees: Vec<u32>,
        module_degrees: Vec<u32>,
    },
    /// Generators and relations; the series is only known by annotation.
    Presented(PresentedRing),
    Decomposition(HironakaDecomposition),
    /// Read as free over its ring generators on its module generators.
    Subalgebra(Subalgebra),
    /// A fixed series with no further structure.
    Series(PoincareSeries),
    /// Signed sum of other descriptors.
    Sum(Vec<(i64, RingDescriptor)>),
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PresentedRing {
    pub generators: Vec<(String, u32)>,
    pub relations: Vec<String>,
    pub series: Option<PoincareSeries>,
}

impl RingDescriptor {
    pub fn free(ring_degrees: &[u32], module_degrees: &[u32]) -> Self {
        RingDescriptor::Free { ring_degrees: ring_degrees.to_vec(), module_degrees: module_degrees.to_vec() }
    }

    pub fn polynomial(degrees: &[u32]) -> Self {
        Self::free(degrees, &[0])
    }

    pub fn sum(parts: Vec<RingDescriptor>) -> Self {
        RingDescriptor::Sum(parts.into_iter().map(|p| (1, p)).collect())
    }
}

pub fn series_of(d: &RingDescriptor) -> Result<PoincareSeries> {
    match d {
        RingDescriptor::Free { ring_degrees, module_degrees } => {
            Ok(PoincareSeries::free_module(module_degrees, ring_degrees))
        }
        RingDescriptor::Presented(p) => {
            p.series.clone().ok_or_else(|| Error::Invalid("presented ring has no series annotation".into()))
        }
        RingDescriptor::Decomposition(h) => Ok(h.series()),
        RingDescriptor::Subalgebra(s) => Ok(PoincareSeries::free_module(s.module_degrees(), s.ring_degrees())),
        RingDescriptor::Series(s) => Ok(s.clone()),
        RingDescriptor::Sum(parts) => {
            parts.iter().try_fold(PoincareSeries::zero(), |acc, (k, p)| Ok(&acc + &series_of(p)?.scale(*k)))
        }
    }
}

/// First degree through `bound` where the computed slice dimensions of a
/// subalgebra disagree with the free-module series it is read as.
pub fn subalgebra_freeness(s: &Subalgebra, bound: u32) -> Result<Option<u32>> {
    let expected = PoincareSeries::free_module(s.module_degrees(), s.ring_degrees()).expand(bound as usize);
    let dims = s.dims(bound)?;
    Ok(dims.iter().zip(&expected).position(|(&a, &b)| a as i64 != b).map(|d| d as u32))
}
