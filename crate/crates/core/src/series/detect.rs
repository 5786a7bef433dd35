//! Series bookkeeping for short exact detection sequences
//! `0 → radical → middle → ⊕ detectors → quotient → 0`.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::invariant::search::a7_series;

use super::descriptor::{series_of, RingDescriptor};
use super::PoincareSeries;

#[derive(Debug, Clone)]
pub struct DetectionSequence {
    pub name: String,
    pub radical: Option<RingDescriptor>,
    /// `None` when the sequence is what defines the middle term.
    pub middle: Option<RingDescriptor>,
    pub detectors: Vec<RingDescriptor>,
    pub quotient: Option<RingDescriptor>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DetectionReport {
    pub name: String,
    /// `P(radical) + Σ P(detectors) − P(quotient)`.
    pub derived: PoincareSeries,
    /// Whether the middle was given independently and matched exactly.
    pub identity: Option<bool>,
    /// First degree where the derived and given expansions differ.
    pub first_mismatch: Option<usize>,
    pub bound: usize,
    pub first_negative: Option<usize>,
    pub expansion: Vec<i64>,
}

impl DetectionReport {
    pub fn ok(&self) -> bool {
        self.identity != Some(false) && self.first_negative.is_none()
    }

    /// Positive degrees with a nonzero coefficient, first few.
    pub fn first_positive_degrees(&self, k: usize) -> Vec<usize> {
        self.expansion.iter().enumerate().skip(1).filter(|(_, &c)| c != 0).map(|(d, _)| d).take(k).collect()
    }
}

pub fn verify_detection(seq: &DetectionSequence, bound: usize) -> Result<DetectionReport> {
    let mut derived = PoincareSeries::zero();
    if let Some(r) = &seq.radical {
        derived = &derived + &series_of(r)?;
    }
    for d in &seq.detectors {
        derived = &derived + &series_of(d)?;
    }
    if let Some(q) = &seq.quotient {
        derived = &derived - &series_of(q)?;
    }
    let expansion = derived.expand(bound);
    let (identity, first_mismatch) = match &seq.middle {
        Some(m) => {
            let given = series_of(m)?;
            let mismatch = given.expand(bound).iter().zip(&expansion).position(|(a, b)| a != b);
            (Some(given.series_eq(&derived)), mismatch)
        }
        None => (None, None),
    };
    Ok(DetectionReport {
        name: seq.name.clone(),
        first_negative: derived.first_negative(bound),
        derived,
        identity,
        first_mismatch,
        bound,
        expansion,
    })
}

/// `F_2[d_4, d_6, d_7, d_8](1, a_8, …, a_21)`.
pub fn l3_2_invariants() -> RingDescriptor {
    RingDescriptor::free(&[4, 6, 7, 8], &[0, 8, 9, 10, 11, 12, 13, 21])
}

pub fn radical_2a8() -> RingDescriptor {
    RingDescriptor::free(&[4, 8], &[3, 7, 9])
}

/// `P(H^*(2A_8)) = P(Rad) + 2 P(Inv) − P(F_2[d_4, d_8])`.
pub fn h_2a8_series() -> PoincareSeries {
    let inv = series_of(&l3_2_invariants()).expect("free");
    let rad = series_of(&radical_2a8()).expect("free");
    &(&rad + &inv.scale(2)) - &PoincareSeries::free(&[4, 8])
}

pub fn seq_2a8() -> DetectionSequence {
    DetectionSequence {
        name: "2A8".into(),
        radical: Some(radical_2a8()),
        middle: None,
        detectors: vec![l3_2_invariants(), l3_2_invariants()],
        quotient: Some(RingDescriptor::polynomial(&[4, 8])),
    }
}

/// `F_2[w, d_2^2, d_4^2](1, d_3, d_3d_4, t(t+w)d_3d_4)` by degrees.
pub fn restriction_image_descriptor() -> RingDescriptor {
    RingDescriptor::free(&[1, 4, 8], &[0, 3, 7, 9])
}

/// The middle is the collapsed `E_2 = Inv ⊕ F_2[d_4, d_8, w](w, u_3, u_7, u_9)`.
pub fn seq_2s8() -> DetectionSequence {
    DetectionSequence {
        name: "2S8".into(),
        radical: None,
        middle: Some(RingDescriptor::sum(vec![l3_2_invariants(), RingDescriptor::free(&[4, 8, 1], &[1, 3, 7, 9])])),
        detectors: vec![l3_2_invariants(), restriction_image_descriptor()],
        quotient: Some(RingDescriptor::polynomial(&[4, 8])),
    }
}

/// `F_2[d_3, d_2^2, d_4^2](1, d_2d_3, d_3d_4, d_2d_3d_4)` by degrees.
pub fn intersection_descriptor() -> RingDescriptor {
    RingDescriptor::free(&[3, 4, 8], &[0, 5, 7, 9])
}

pub fn seq_2a10() -> DetectionSequence {
    DetectionSequence {
        name: "2A10".into(),
        radical: None,
        middle: None,
        detectors: vec![l3_2_invariants(), intersection_descriptor()],
        quotient: Some(RingDescriptor::polynomial(&[4, 8])),
    }
}

/// `F_2[d_4^2, d_6^2, d_7](1, d_4d_7, d_6d_7, d_4d_6d_7)` by degrees.
pub fn lyons_detector_descriptor() -> RingDescriptor {
    RingDescriptor::free(&[8, 12, 7], &[0, 11, 13, 17])
}

pub fn seq_ly() -> DetectionSequence {
    DetectionSequence {
        name: "Ly".into(),
        radical: None,
        middle: None,
        detectors: vec![RingDescriptor::Series(a7_series()), lyons_detector_descriptor()],
        quotient: Some(RingDescriptor::polynomial(&[8, 12])),
    }
}

/// The other description of the Lyons detector:
/// `F_2[d_4^2, d_6^2] ⊕ F_2[d_4, d_6, d_7]d_7`.
pub fn lyons_detector_split() -> RingDescriptor {
    RingDescriptor::sum(vec![RingDescriptor::polynomial(&[8, 12]), RingDescriptor::free(&[4, 6, 7], &[7])])
}

pub fn named_sequence(name: &str) -> Option<DetectionSequence> {
    match name {
        "2A8" => Some(seq_2a8()),
        "2S8" => Some(seq_2s8()),
        "2A10" => Some(seq_2a10()),
        "Ly" => Some(seq_ly()),
        _ => None,
    }
}

pub const SEQUENCE_NAMES: [&str; 4] = ["2A8", "2S8", "2A10", "Ly"];

/// Readings of the `E_∞` page for the central extension of `A_8`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EinftyReading {
    /// The `e_6`-summand mirrors the `d_7`-summand over `e_7`, and the unit
    /// sits outside the `(1, e^4)` factor since `e^4` supports `d^5`.
    Symmetric,
    /// The expression as given, before any rewriting.
    Literal,
}

/// The page as labelled free pieces over `F_2[σ_4, e^8]`.
pub fn einfty_pieces(reading: EinftyReading) -> Vec<(String, RingDescriptor)> {
    let outer = [4u32, 8];
    let with = |extra: &[u32]| -> Vec<u32> { extra.iter().chain(&outer).copied().collect() };
    // (1, e^4) applied to a list of generator degrees
    let twice = |gens: &[u32]| -> Vec<u32> { gens.iter().flat_map(|&g| [g, g + 4]).collect() };
    let mut out = vec![("(c3, e^4 c3, e^4 x5)".to_string(), RingDescriptor::free(&outer, &[3, 7, 9]))];
    match reading {
        EinftyReading::Symmetric => {
            out.push(("1".into(), RingDescriptor::free(&outer, &[0])));
            out.push(("F2[e6]e6".into(), RingDescriptor::free(&with(&[6]), &twice(&[6]))));
        }
        EinftyReading::Literal => {
            out.push(("F2[e6]".into(), RingDescriptor::free(&with(&[6]), &twice(&[0]))));
        }
    }
    out.push(("F2[d6]d6".into(), RingDescriptor::free(&with(&[6]), &twice(&[6]))));
    out.push(("F2[d6,d7](1,e,e^2,e^3d7)d7".into(), RingDescriptor::free(&with(&[6, 7]), &twice(&[7, 8, 9, 17]))));
    match reading {
        EinftyReading::Symmetric => out
            .push(("F2[e6,e7](1,e,e^2,e^3e7)e7".into(), RingDescriptor::free(&with(&[6, 7]), &twice(&[7, 8, 9, 17])))),
        EinftyReading::Literal => out
            .push(("F2[e6,e7](1,e,e^2,e^3e6)e6".into(), RingDescriptor::free(&with(&[6, 7]), &twice(&[6, 7, 8, 15])))),
    }
    out
}

/// Low-degree values stated for `H^*(2A_8)` alongside the spectral sequence.
pub const REFERENCE_2A8: [(usize, i64); 7] = [(1, 0), (2, 0), (3, 1), (4, 1), (5, 0), (7, 3), (9, 3)];

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EinftyReport {
    pub reading: EinftyReading,
    pub bound: usize,
    /// `(degree, E_∞, detection sequence)`.
    pub table: Vec<(usize, i64, i64)>,
    pub mismatches: Vec<usize>,
    /// `(degree, reference, E_∞, detection sequence)` where the reference value
    /// differs from either computation.
    pub flags: Vec<(usize, i64, i64, i64)>,
    pub series_equal: bool,
}

impl EinftyReport {
    pub fn agrees(&self) -> bool {
        self.mismatches.is_empty()
    }
}

pub fn einfty_series_check(reading: EinftyReading, bound: usize) -> Result<EinftyReport> {
    let pieces = einfty_pieces(reading);
    let einf = series_of(&RingDescriptor::sum(pieces.into_iter().map(|(_, d)| d).collect()))?;
    let h = h_2a8_series();
    let a = einf.expand(bound);
    let b = h.expand(bound);
    let table: Vec<(usize, i64, i64)> = (0..=bound).map(|d| (d, a[d], b[d])).collect();
    let mismatches = table.iter().filter(|r| r.1 != r.2).map(|r| r.0).collect();
    let flags = REFERENCE_2A8
        .iter()
        .filter(|&&(d, _)| d <= bound)
        .filter(|&&(d, v)| a[d] != v || b[d] != v)
        .map(|&(d, v)| (d, v, a[d], b[d]))
        .collect();
    Ok(EinftyReport { reading, bound, table, mismatches, flags, series_equal: einf.series_eq(&h) })
}
