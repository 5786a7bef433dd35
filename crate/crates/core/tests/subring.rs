use invar_core::gf2::Polynomial;
use invar_core::subring::pipeline::{
    dickson_d4d6d7, dickson_intersections, dickson_tower, free_module_pipeline, intersection_ring, lyons_detector_ring,
    pipeline_module, restriction_image_ring, triple_products, wtz_module, REDUCED_POWERS,
};
use invar_core::subring::{integral_equation_check, intersect_subalgebras, ModulePresentation, Symbols};
use invar_core::Error;
use proptest::prelude::*;

fn formatted(p: &ModulePresentation, expr: &str) -> Vec<String> {
    let s = p.symbols();
    p.express_in_basis(&s.eval(expr).unwrap()).unwrap().iter().map(|t| p.format_term(t)).collect()
}

#[test]
fn slices_of_the_rank_three_dickson_algebra() {
    let a = dickson_d4d6d7();
    assert_eq!(a.slice(12).unwrap().1.dim(), 2);
    assert_eq!(a.slice(7).unwrap().1.dim(), 1);
    assert_eq!(a.slice(0).unwrap().1.dim(), 1);
    assert_eq!(a.slice(5).unwrap().1.dim(), 0);
}

#[test]
fn membership_examples() {
    let s = Symbols::wtz();
    assert!(intersection_ring().contains(&s.eval("d2*d3").unwrap()).unwrap());
    assert!(intersection_ring().contains(&s.eval("d2*d3*d4").unwrap()).unwrap());
    assert!(!lyons_detector_ring().contains(&s.eval("d4").unwrap()).unwrap());
    assert!(lyons_detector_ring().contains(&Polynomial::zero()).unwrap());
}

#[test]
fn self_intersection() {
    let a = intersection_ring();
    let r = intersect_subalgebras(&a, &a, Some(&a), 20).unwrap();
    assert!(r.matches());
    assert_eq!(r.intersection_dims(), a.dims(20).unwrap());
}

#[test]
fn dickson_tower_expressions() {
    let t = dickson_tower();
    assert_eq!(formatted(&t, "1"), vec!["[1]"]);
    assert_eq!(formatted(&t, "w^3"), vec!["d3*[1]", "d2*[w]"]);
    // w^5 = d2 w^3 + d3 w^2 carries a w^2 term
    assert_eq!(formatted(&t, "w^5"), vec!["d2*d3*[1]", "d2^2*[w]", "d3*[w^2]"]);
}

#[test]
fn outside_the_module_is_rejected() {
    let t = dickson_tower();
    let e = t.express_in_basis(&t.symbols().eval("t").unwrap()).unwrap_err();
    assert!(matches!(e, Error::Hypothesis(_)));
}

#[test]
fn non_free_basis_is_rejected() {
    let p = ModulePresentation::new(Symbols::wtz(), &["d2", "d3"], &["1", "w", "w^2", "w^3"]).unwrap();
    let e = p.express_in_basis(&p.symbols().eval("w^3").unwrap()).unwrap_err();
    assert!(matches!(e, Error::Verification { degree: 3, .. }));
}

#[test]
fn reduced_powers_of_w() {
    let m = pipeline_module();
    let s = Symbols::wtz();
    let powers = s.eval_all(&["1", "w", "w^2", "w^3", "w^4", "w^5"]).unwrap();
    let r = m.reduce_generators(&powers).unwrap();
    let kept: Vec<String> = r.retained.iter().map(|t| m.format_term(t)).collect();
    assert_eq!(kept, vec!["[1]", "[w]", "[w^2]", "[w*d2]", "[w^2*d2]", "d3*[d2]"]);
    let one = m.reduce_generators(&[Polynomial::one()]).unwrap();
    assert_eq!(one.retained.len(), 1);
}

#[test]
fn triple_products_in_the_boldface_basis() {
    let m = pipeline_module();
    let prods = triple_products(&REDUCED_POWERS).unwrap();
    let r = m.reduce_generators(&prods).unwrap();
    let mut got: Vec<String> = r
        .expressed
        .iter()
        .map(|t| {
            assert_eq!(t.len(), 1);
            m.format_term(&t[0])
        })
        .collect();
    // the reference list, with the second d3·d2d4 entry read as d3^2·d2d4
    let mut want = vec![
        "[1]",
        "[w]",
        "[w^2]",
        "[w*d2]",
        "[w^2*d2]",
        "d3*[d2]",
        "d3*[d4]",
        "d3*[w*d4]",
        "d3*[w^2*d4]",
        "d3*[w*d2*d4]",
        "d3*[w^2*d2*d4]",
        "d3*[d2*d4]",
        "d3^2*[d2*d4]",
        "d3*[w*d2*d4]",
        "d3*[w^2*d2*d4]",
        "d2^2*d3*[w*d4]",
        "d2^2*d3*[w^2*d4]",
        "d2^2*d3^2*[d4]",
        "d3^2*d4^2*[d2]",
        "d3^2*d4^2*[w*d2]",
        "d3^2*d4^2*[w^2*d2]",
        "d2^2*d3^2*d4^2*[w]",
        "d2^2*d3^2*d4^2*[w^2]",
        "d2^2*d3^3*d4^2*[1]",
    ];
    got.sort();
    want.sort();
    assert_eq!(got, want);
}

#[test]
fn generated_rejects_mixed_generators() {
    let m = pipeline_module();
    let s = Symbols::wtz();
    let e = m.intersect_generated(&[s.eval("1 + w").unwrap()], 4);
    assert!(e.is_err());
    let e = m.intersect_generated(&[s.eval("w^3").unwrap()], 4);
    assert!(matches!(e, Err(Error::Hypothesis(_))));
}

#[test]
fn generated_on_the_whole_module() {
    let m = pipeline_module();
    let s = Symbols::wtz();
    let basis: Vec<Polynomial> = invar_core::subring::pipeline::BOLDFACE.iter().map(|b| s.eval(b).unwrap()).collect();
    let r = m.intersect_generated(&basis, 12).unwrap();
    assert!(r.ideals.iter().all(|j| j.len() == 1 && j[0].is_one()));
}

#[test]
fn free_module_pipeline_at_forty() {
    let r = free_module_pipeline(40).unwrap();
    assert_eq!(r.ideals, vec![vec!["1"], vec!["d3"], vec!["d3"], vec!["d3"]]);
    assert_eq!(r.generators, vec!["[1]", "d3*[d2]", "d3*[d4]", "d3*[d2*d4]"]);
    assert!(r.products_single_term);
    assert_eq!(r.generated_mismatch, None);
    assert_eq!(r.claimed_mismatch, None);
    assert!(r.integral_equations.iter().all(|e| e.2));
}

#[test]
fn integral_equations() {
    let s = Symbols::wtz();
    let w = s.eval("w").unwrap();
    assert!(integral_equation_check(&s, &w, "X^6 + d2^2*X^2 + d3^2").unwrap().is_zero());
    assert!(integral_equation_check(&s, &s.eval("d3*d4").unwrap(), "X^2 + d3^2*d4^2").unwrap().is_zero());
    let x = s.eval("t*z").unwrap();
    assert!(integral_equation_check(&s, &x, "X - t*z").unwrap().is_zero());
    assert!(!integral_equation_check(&s, &w, "X^3 + d3").unwrap().is_zero());
}

#[test]
fn relations_between_named_classes() {
    let s = Symbols::wtz();
    assert!(s.identity_holds("w^2*d3 + w*d2^2 + w^5", "d2*d3").unwrap());
    assert!(s.identity_holds("(w^2 + t*(t+w))*d3*d4", "d2*d3*d4").unwrap());
    assert!(!s.identity_holds("w^2 + t*(t+w)*d3*d4", "d2*d3*d4").unwrap());
    assert!(s.identity_holds("d6", "d2*d4 + d2^3 + d3^2").unwrap());
    assert!(s.identity_holds("d7", "d3*d4 + d2^2*d3").unwrap());
    assert!(s.identity_holds("t*(t+w)", "d2 + w^2").unwrap());
}

#[test]
fn dickson_intersections_at_forty() {
    let r = dickson_intersections(40).unwrap();
    assert_eq!(r.image_mismatch, None);
    assert_eq!(r.intersection_mismatch, None);
    assert_eq!(r.squares_mismatch, None);
    assert_eq!(r.direct_sum_mismatch, None);
    assert_eq!(r.first_summand_mismatch, None);
    assert_eq!(r.dims[7], 1);
    assert_eq!(r.dims[4], 0);
}

#[test]
fn image_ring_contains_the_intersection_candidates() {
    let s = Symbols::wtz();
    let a = restriction_image_ring();
    for e in ["d3", "d2^2", "d3*d4", "d4^2", "d2*d3", "d2*d3*d4"] {
        assert!(a.contains(&s.eval(e).unwrap()).unwrap(), "{e}");
    }
}

fn random_element(p: &ModulePresentation, d: u32, bits: &[bool]) -> Polynomial {
    p.module()
        .span_terms(d)
        .iter()
        .zip(bits.iter().cycle())
        .filter(|(_, b)| **b)
        .map(|(t, _)| p.module().term_value(*t))
        .sum()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn express_then_expand_a1(d in 0u32..=20, bits in prop::collection::vec(any::<bool>(), 1..40)) {
        let t = dickson_tower();
        let p = random_element(&t, d, &bits);
        let terms = t.express_in_basis(&p).unwrap();
        prop_assert_eq!(t.expand(&terms), p);
    }

    #[test]
    fn express_then_expand_in_tower(d in 0u32..=20, bits in prop::collection::vec(any::<bool>(), 1..40)) {
        let m = pipeline_module();
        let p = random_element(&m, d, &bits);
        let terms = m.express_in_basis(&p).unwrap();
        prop_assert_eq!(m.expand(&terms), p);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn slices_grow_with_generators(extra in prop::sample::select(vec!["w", "d2", "d3", "d4", "t*z", "d6", "z^2"]), d in 0u32..=14) {
        let small = wtz_module(&["d2^2", "d3", "d4^2"], &["1"]).unwrap();
        let large = wtz_module(&["d2^2", "d3", "d4^2", extra], &["1"]).unwrap();
        prop_assert!(small.slice(d).unwrap().1.is_subspace_of(&large.slice(d).unwrap().1).unwrap());
        // a fresh instance agrees with one that has seen higher degrees
        let again = wtz_module(&["d2^2", "d3", "d4^2", extra], &["1"]).unwrap();
        let _ = large.slice(d + 5).unwrap();
        prop_assert_eq!(again.slice(d).unwrap().1, large.slice(d).unwrap().1);
    }
}
