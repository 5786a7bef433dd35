//! The named rings on `w, t, z` and the free-module intersection pipeline
//! built from them.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::gf2::Polynomial;

use super::intersect::{first_difference, intersect_subalgebras, sum_matches};
use super::presentation::{integral_equation_check, ModulePresentation, Symbols};
use super::subalgebra::Subalgebra;

/// `F_2[ring](module)` on `w, t, z`, both lists written in the symbols.
pub fn wtz_module(ring: &[&str], module: &[&str]) -> Result<Subalgebra> {
    let s = Symbols::wtz();
    Subalgebra::module(vec![1; 3], s.eval_all(ring)?, s.eval_all(module)?)
}

/// The image ring of the restriction to the rank-3 subgroup.
pub fn restriction_image_ring() -> Subalgebra {
    wtz_module(&["w", "d2^2", "d4^2"], &["1", "d3", "d3*d4", "t*(t+w)*d3*d4"]).expect("named ring")
}

pub fn dickson_d2d3d4() -> Subalgebra {
    wtz_module(&["d2", "d3", "d4"], &["1"]).expect("named ring")
}

pub fn dickson_d4d6d7() -> Subalgebra {
    wtz_module(&["d4", "d6", "d7"], &["1"]).expect("named ring")
}

/// `F_2[d_3, d_2^2, d_4^2](1, d_2d_3, d_3d_4, d_2d_3d_4)`.
pub fn intersection_ring() -> Subalgebra {
    wtz_module(&["d2^2", "d3", "d4^2"], &["1", "d2*d3", "d3*d4", "d2*d3*d4"]).expect("named ring")
}

/// `F_2[d_4^2, d_6^2, d_7](1, d_4d_7, d_6d_7, d_4d_6d_7)`.
pub fn lyons_detector_ring() -> Subalgebra {
    wtz_module(&["d4^2", "d6^2", "d7"], &["1", "d4*d7", "d6*d7", "d4*d6*d7"]).expect("named ring")
}

/// The free `k[d_2, d_3]`-module `k[w, d_2, d_3]` on `1, w, w^2`.
pub fn dickson_tower() -> ModulePresentation {
    ModulePresentation::new(Symbols::wtz(), &["d2", "d3"], &["1", "w", "w^2"]).expect("named tower")
}

pub const BOLDFACE: [&str; 12] =
    ["1", "d2", "d4", "d2*d4", "w", "w*d2", "w*d4", "w*d2*d4", "w^2", "w^2*d2", "w^2*d4", "w^2*d2*d4"];

/// `M`: free over `R = k[d_2^2, d_3, d_4^2]` on the twelve products
/// `{1, w, w^2}·{1, d_2, d_4, d_2d_4}`.
pub fn pipeline_module() -> ModulePresentation {
    ModulePresentation::new(Symbols::wtz(), &["d2^2", "d3", "d4^2"], &BOLDFACE).expect("named tower")
}

/// The 24 products `{1, w, w^2, wd_2, w^2d_2, d_2d_3}·{1, d_3d_4}·{1, d_2d_3d_4}`.
pub fn triple_products(first: &[&str]) -> Result<Vec<Polynomial>> {
    let s = Symbols::wtz();
    let mut out = Vec::new();
    for a in first {
        for b in ["1", "d3*d4"] {
            for c in ["1", "d2*d3*d4"] {
                out.push(s.eval(&format!("({a})*({b})*({c})"))?);
            }
        }
    }
    Ok(out)
}

pub const POWERS_OF_W: [&str; 6] = ["1", "w", "w^2", "w^3", "w^4", "w^5"];
pub const REDUCED_POWERS: [&str; 6] = ["1", "w", "w^2", "w*d2", "w^2*d2", "d2*d3"];

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct PipelineReport {
    pub bound: u32,
    /// `w^3` and `w^5` in the basis `1, w, w^2` over `k[d_2, d_3]`.
    pub w3: Vec<String>,
    pub w5: Vec<String>,
    /// `{1, …, w^5}` reduced in `M`.
    pub reduced_powers: Vec<String>,
    /// The 24 triple products, each written in `M`.
    pub products: Vec<String>,
    pub products_single_term: bool,
    pub ideals: Vec<Vec<String>>,
    pub generators: Vec<String>,
    /// Per-degree dimension of the computed intersection.
    pub intersection_dims: Vec<usize>,
    /// First degree where the ring generated from the split products and the computed intersection
    /// disagree.
    pub generated_mismatch: Option<u32>,
    /// First degree where the computed intersection differs from the
    /// claimed ring.
    pub claimed_mismatch: Option<u32>,
    pub integral_equations: Vec<(String, String, bool)>,
}

fn format_terms(p: &ModulePresentation, terms: &[super::presentation::Term]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    terms.iter().map(|t| p.format_term(t)).collect::<Vec<_>>().join(" + ")
}

pub fn free_module_pipeline(bound: u32) -> Result<PipelineReport> {
    let s = Symbols::wtz();
    let tower = dickson_tower();
    let w3 = tower.express_in_basis(&s.eval("w^3")?)?;
    let w5 = tower.express_in_basis(&s.eval("w^5")?)?;

    let m = pipeline_module();
    let powers = s.eval_all(&POWERS_OF_W)?;
    let reduced = m.reduce_generators(&powers)?;

    let products = triple_products(&REDUCED_POWERS)?;
    let expressed = m.reduce_generators(&products)?.expressed;
    let products_single_term = expressed.iter().all(|t| t.len() == 1);

    let a3 = m.intersect_generated(&products, 4)?;
    let generator_polys: Vec<Polynomial> = a3.generators.iter().map(|t| m.expand(std::slice::from_ref(t))).collect();
    let a3_ring = Subalgebra::module(vec![1; 3], s.eval_all(&["d2^2", "d3", "d4^2"])?, generator_polys)?;

    let cut = intersect_subalgebras(&restriction_image_ring(), &dickson_d2d3d4(), Some(&intersection_ring()), bound)?;
    let generated_mismatch = (0..=bound)
        .map(|d| Ok((d, a3_ring.slice(d)?.1 == cut.slices[d as usize])))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .find(|(_, ok)| !ok)
        .map(|(d, _)| d);

    let mut integral_equations = Vec::new();
    for (x, eq) in [("w", "X^6 + d2^2*X^2 + d3^2"), ("d3*d4", "X^2 + d3^2*d4^2"), ("d2*d3*d4", "X^2 + d2^2*d3^2*d4^2")]
    {
        let rem = integral_equation_check(&s, &s.eval(x)?, eq)?;
        integral_equations.push((x.to_string(), eq.to_string(), rem.is_zero()));
    }

    Ok(PipelineReport {
        bound,
        w3: w3.iter().map(|t| tower.format_term(t)).collect(),
        w5: w5.iter().map(|t| tower.format_term(t)).collect(),
        reduced_powers: reduced.retained.iter().map(|t| m.format_term(t)).collect(),
        products: expressed.iter().map(|t| format_terms(&m, t)).collect(),
        products_single_term,
        ideals: a3.ideals.iter().map(|j| j.iter().map(|c| s.format(c)).collect()).collect(),
        generators: a3.generators.iter().map(|t| m.format_term(t)).collect(),
        intersection_dims: cut.intersection_dims(),
        generated_mismatch,
        claimed_mismatch: cut.mismatch,
        integral_equations,
    })
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DicksonIntersectionReport {
    pub bound: u32,
    /// Image ring ∩ `F_2[d_4, d_6, d_7]` against the claimed detector.
    pub image_mismatch: Option<u32>,
    /// Intersection ring ∩ `F_2[d_4, d_6, d_7]` against the same.
    pub intersection_mismatch: Option<u32>,
    /// `F_2[d_4, d_6] ∩` first summand against `F_2[d_4^2, d_6^2]`.
    pub squares_mismatch: Option<u32>,
    /// The detector equals `F_2[d_4^2, d_6^2] ⊕ F_2[d_4, d_6, d_7]d_7`.
    pub direct_sum_mismatch: Option<u32>,
    /// The two descriptions of the first summand agree.
    pub first_summand_mismatch: Option<u32>,
    pub identities: Vec<(String, String, bool)>,
    pub dims: Vec<usize>,
}

pub fn dickson_intersections(bound: u32) -> Result<DicksonIntersectionReport> {
    let s = Symbols::wtz();
    let target = lyons_detector_ring();
    let big = dickson_d4d6d7();
    let image = intersect_subalgebras(&restriction_image_ring(), &big, Some(&target), bound)?;
    let inter = intersect_subalgebras(&intersection_ring(), &big, Some(&target), bound)?;

    let first_a = wtz_module(&["d3", "d2^2", "d4^2"], &["1", "d2*d3"])?;
    let first_b = wtz_module(&["d2^2", "d3^2", "d4^2"], &["1", "d3", "d2*d3", "d2*d3^2"])?;
    let sub = intersect_subalgebras(
        &wtz_module(&["d4", "d6"], &["1"])?,
        &first_b,
        Some(&wtz_module(&["d4^2", "d6^2"], &["1"])?),
        bound,
    )?;
    let direct_sum_mismatch = sum_matches(
        &target,
        &[&wtz_module(&["d4^2", "d6^2"], &["1"])?, &wtz_module(&["d4", "d6", "d7"], &["d7"])?],
        true,
        bound,
    )?;
    let first_summand_mismatch = first_difference(&first_a, &first_b, bound)?;

    let mut identities = Vec::new();
    for (l, r) in [
        ("w^2*d3 + w*d2^2 + w^5", "d2*d3"),
        ("(w^2 + t*(t+w))*d3*d4", "d2*d3*d4"),
        ("w^2 + t*(t+w)*d3*d4", "d2*d3*d4"),
        ("d6", "d2*d4 + d2^3 + d3^2"),
        ("d7", "d3*d4 + d2^2*d3"),
    ] {
        identities.push((l.to_string(), r.to_string(), s.identity_holds(l, r)?));
    }

    Ok(DicksonIntersectionReport {
        bound,
        image_mismatch: image.mismatch,
        intersection_mismatch: inter.mismatch,
        squares_mismatch: sub.mismatch,
        direct_sum_mismatch,
        first_summand_mismatch,
        identities,
        dims: inter.intersection_dims(),
    })
}
