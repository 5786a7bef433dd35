//! Presented rings checked against polynomial images of their generators.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::text::parse_expr;
use crate::gf2::{GradedSlice, Polynomial};
use crate::subring::pipeline::{restriction_image_ring, wtz_module};
use crate::subring::{first_difference, solve_in_span, Subalgebra, Symbols};

use super::descriptor::PresentedRing;

pub fn presented_ring(generators: &[(&str, u32)], relations: &[&str]) -> PresentedRing {
    PresentedRing {
        generators: generators.iter().map(|(n, d)| (n.to_string(), *d)).collect(),
        relations: relations.iter().map(|r| r.to_string()).collect(),
        series: None,
    }
}

/// `H^*(S_8) = F_2[σ_1, σ_2, σ_3, σ_4, c_3, d_6, d_7](x_5)/R`, with every
/// relation chain `a = b = 0` split into its parts.
pub fn h_s8() -> PresentedRing {
    presented_ring(
        &[("s1", 1), ("s2", 2), ("s3", 3), ("s4", 4), ("c3", 3), ("d6", 6), ("d7", 7), ("x5", 5)],
        &[
            "d6*s1",
            "d6*s3",
            "d7*s1",
            "d7*s2",
            "d7*s3",
            "d7*c3",
            "d7*x5",
            "x5*s3 + c3*s4*s1",
            "c3*(s3 + s1*s2) + s1*x5",
            "x5^2 + x5*s2*c3 + d6*s2^2 + s4*c3^2",
        ],
    )
}

/// Images in `F_2[w, t, z]` of the generators of `H^*(S_8)`; `s2` is left
/// for `solve_generator_image`.
pub const S8_IMAGES: [(&str, &str); 7] = [
    ("s1", "w"),
    ("s3", "w^3 + d3"),
    ("c3", "d3"),
    ("s4", "t*(t+w)*d2"),
    ("x5", "t*(t+w)*d3"),
    ("d6", "0"),
    ("d7", "0"),
];

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RingMapReport {
    /// `(relation, image, vanishes)`.
    pub relations: Vec<(String, String, bool)>,
    pub solved: Vec<(String, String)>,
}

impl RingMapReport {
    pub fn ok(&self) -> bool {
        self.relations.iter().all(|r| r.2)
    }
}

fn image_lookup<'a>(
    symbols: &'a Symbols,
    images: &'a HashMap<String, Polynomial>,
) -> impl Fn(&str) -> Option<Polynomial> + 'a {
    move |name| images.get(name).cloned().or_else(|| symbols.eval(name).ok())
}

fn resolve_images(symbols: &Symbols, images: &[(&str, &str)]) -> Result<HashMap<String, Polynomial>> {
    images.iter().map(|(n, e)| Ok((n.to_string(), symbols.eval(e)?))).collect()
}

/// Solves a relation that is linear in the one generator without an image,
/// `A + B·x = 0`, for a polynomial `x` of the generator's degree.
pub fn solve_generator_image(
    ring: &PresentedRing,
    symbols: &Symbols,
    images: &[(&str, &str)],
    unknown: &str,
    relation: &str,
) -> Result<Polynomial> {
    let degree = ring
        .generators
        .iter()
        .find(|(n, _)| n == unknown)
        .map(|(_, d)| *d)
        .ok_or_else(|| Error::UnknownName(unknown.to_string()))?;
    let known = resolve_images(symbols, images)?;
    // the unknown becomes an extra variable past the ambient ones
    let n = symbols.ambient().n_vars();
    let marker = Polynomial::var(n);
    let lookup = image_lookup(symbols, &known);
    let rel = parse_expr(relation, &|name| if name == unknown { Some(marker.clone()) } else { lookup(name) })?;
    let (mut a, mut b) = (Polynomial::zero(), Polynomial::zero());
    for &m in rel.terms() {
        match m.exponent(n) {
            0 => a += Polynomial::monomial(m),
            1 => b += Polynomial::monomial(m.div_var(n).expect("exponent 1")),
            _ => return Err(Error::Invalid(format!("relation is not linear in {unknown}"))),
        }
    }
    let slice = GradedSlice::weighted(symbols.ambient().weights(), degree);
    let products: Vec<Polynomial> = slice.basis().iter().map(|&m| b.mul_monomial(m)).collect();
    if a.is_zero() {
        return Ok(Polynomial::zero());
    }
    let d = a.weighted_homogeneous_degree(symbols.ambient().weights()).ok_or(Error::NotHomogeneous)?;
    let target_slice = GradedSlice::weighted(symbols.ambient().weights(), d);
    let vecs = products.iter().map(|p| target_slice.to_vec(p)).collect::<Result<Vec<_>>>()?;
    let chosen = solve_in_span(&vecs, &target_slice.to_vec(&a)?)
        .ok_or_else(|| Error::Hypothesis(format!("no image of {unknown} satisfies {relation}")))?;
    Ok(Polynomial::from_terms(chosen.into_iter().map(|i| slice.basis()[i])))
}

/// Substitutes the images into every relation and checks that it vanishes.
pub fn verify_ring_map(
    ring: &PresentedRing,
    symbols: &Symbols,
    images: &[(String, Polynomial)],
) -> Result<RingMapReport> {
    let map: HashMap<String, Polynomial> = images.iter().cloned().collect();
    for (g, _) in &ring.generators {
        if !map.contains_key(g) {
            return Err(Error::Invalid(format!("generator {g} has no image")));
        }
    }
    let mut relations = Vec::new();
    for r in &ring.relations {
        let img = parse_expr(r, &|name| map.get(name).cloned())?;
        relations.push((r.clone(), symbols.ambient().format(&img), img.is_zero()));
    }
    Ok(RingMapReport { relations, solved: Vec::new() })
}

/// Solves `s2` from `c3(s3 + s1 s2) + s1 x5 = 0` and checks every relation.
pub fn s8_ring_map_audit() -> Result<RingMapReport> {
    let symbols = Symbols::wtz();
    let ring = h_s8();
    let relation = "c3*(s3 + s1*s2) + s1*x5";
    let s2 = solve_generator_image(&ring, &symbols, &S8_IMAGES, "s2", relation)?;
    let mut images: Vec<(String, Polynomial)> = resolve_images(&symbols, &S8_IMAGES)?.into_iter().collect();
    images.push(("s2".into(), s2.clone()));
    images.sort_by(|a, b| a.0.cmp(&b.0));
    let mut report = verify_ring_map(&ring, &symbols, &images)?;
    report.solved.push(("s2".into(), symbols.ambient().format(&s2)));
    Ok(report)
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct ImageSubringReport {
    pub bound: u32,
    /// First degree where the generated ring differs from the stated one.
    pub mismatch: Option<u32>,
    pub contains_w_d2sq_d3: bool,
    /// Without `d_3 d_4`, the first degree where the generated ring falls short.
    pub shortfall_without_d3d4: Option<u32>,
}

/// The algebra generated by the given classes, as a plain subalgebra.
fn generated(symbols: &Symbols, gens: &[&str]) -> Result<Subalgebra> {
    Subalgebra::module(vec![1; 3], symbols.eval_all(gens)?, vec![Polynomial::one()])
}

/// Generators: the images of `H^*(S_8)` together with `d_3d_4`,
/// `t(t+w)d_3d_4` and `d_4^2`.
pub const IMAGE_GENERATORS: [&str; 8] =
    ["w", "w^2", "w^3 + d3", "d3", "t*(t+w)*d2", "t*(t+w)*d3", "d3*d4", "t*(t+w)*d3*d4"];

pub fn image_subring_check(bound: u32) -> Result<ImageSubringReport> {
    let symbols = Symbols::wtz();
    let mut gens: Vec<&str> = IMAGE_GENERATORS.to_vec();
    gens.push("d4^2");
    let full = generated(&symbols, &gens)?;
    let stated = restriction_image_ring();
    let mismatch = first_difference(&full, &stated, bound)?;
    let small = wtz_module(&["w", "d2^2"], &["1", "d3"])?;
    let mut contains = true;
    for d in 0..=bound {
        if !small.slice(d)?.1.is_subspace_of(&full.slice(d)?.1)? {
            contains = false;
            break;
        }
    }
    let without: Vec<&str> = gens.iter().copied().filter(|g| *g != "d3*d4").collect();
    let shortfall_without_d3d4 = first_difference(&generated(&symbols, &without)?, &stated, bound)?;
    Ok(ImageSubringReport { bound, mismatch, contains_w_d2sq_d3: contains, shortfall_without_d3d4 })
}
