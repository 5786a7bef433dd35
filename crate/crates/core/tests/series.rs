use invar_core::series::descriptor::subalgebra_freeness;
use invar_core::series::detect::{
    h_2a8_series, lyons_detector_descriptor, lyons_detector_split, named_sequence, seq_2a10, seq_2a8, seq_2s8, seq_ly,
    DetectionSequence,
};
use invar_core::series::presented::{h_s8, S8_IMAGES};
use invar_core::series::*;
use invar_core::subring::pipeline::{intersection_ring, lyons_detector_ring, restriction_image_ring};
use invar_core::subring::Symbols;
use proptest::prelude::*;

#[test]
fn l3_2_series_and_expansion() {
    let s = series_of(&RingDescriptor::free(&[4, 6, 7, 8], &[0, 8, 9, 10, 11, 12, 13, 21])).unwrap();
    assert_eq!(s.to_string(), "(1+t^8+t^9+t^10+t^11+t^12+t^13+t^21)/((1-t^4)(1-t^6)(1-t^7)(1-t^8))");
    assert_eq!(s.expand(13), vec![1, 0, 0, 0, 1, 0, 1, 1, 3, 1, 2, 2, 5, 3]);
}

#[test]
fn small_series() {
    let p = series_of(&RingDescriptor::polynomial(&[4, 8])).unwrap();
    assert_eq!(p.expand(8)[8], 2);
    assert!((&p - &p).is_zero());
    let l = series_of(&lyons_detector_descriptor()).unwrap();
    assert!(l.series_eq(&PoincareSeries::new(
        {
            let mut n = vec![0; 18];
            n[0] = 1;
            n[11] = 1;
            n[13] = 1;
            n[17] = 1;
            n
        },
        vec![8, 12, 7]
    )));
}

#[test]
fn presented_ring_needs_an_annotation() {
    let d = RingDescriptor::Presented(h_s8());
    assert!(series_of(&d).is_err());
    let mut p = h_s8();
    p.series = Some(PoincareSeries::free(&[1]));
    assert!(series_of(&RingDescriptor::Presented(p)).is_ok());
}

#[test]
fn lyons_detector_two_ways() {
    let a = series_of(&lyons_detector_descriptor()).unwrap();
    let b = series_of(&lyons_detector_split()).unwrap();
    assert_eq!(a, b);
}

#[test]
fn named_subalgebras_are_free_as_read() {
    for s in [restriction_image_ring(), intersection_ring(), lyons_detector_ring()] {
        assert_eq!(subalgebra_freeness(&s, 30).unwrap(), None);
    }
}

#[test]
fn detection_sequences() {
    let r = verify_detection(&seq_2s8(), 60).unwrap();
    assert_eq!(r.identity, Some(true));
    for seq in [seq_2a8(), seq_2a10(), seq_ly()] {
        let r = verify_detection(&seq, 60).unwrap();
        assert!(r.ok(), "{}", r.name);
        assert_eq!(r.identity, None);
    }
    let ly = verify_detection(&seq_ly(), 60).unwrap();
    assert_eq!(&ly.first_positive_degrees(2), &[7, 8]);
    assert!(named_sequence("nope").is_none());
}

#[test]
fn degenerate_sequence() {
    let x = RingDescriptor::free(&[2, 3], &[0, 5]);
    let seq = DetectionSequence {
        name: "id".into(),
        radical: None,
        middle: Some(x.clone()),
        detectors: vec![x],
        quotient: None,
    };
    let r = verify_detection(&seq, 30).unwrap();
    assert_eq!(r.identity, Some(true));
    assert_eq!(r.first_mismatch, None);
}

#[test]
fn wrong_middle_is_caught() {
    let seq = DetectionSequence {
        name: "bad".into(),
        radical: None,
        middle: Some(RingDescriptor::polynomial(&[1])),
        detectors: vec![RingDescriptor::polynomial(&[2])],
        quotient: None,
    };
    let r = verify_detection(&seq, 10).unwrap();
    assert_eq!(r.identity, Some(false));
    assert_eq!(r.first_mismatch, Some(1));
}

#[test]
fn low_degrees_of_2a8() {
    let h = h_2a8_series().expand(9);
    assert_eq!(&h[..7], &[1, 0, 0, 1, 1, 0, 2]);
    assert_eq!(h[3], 1);
    assert_eq!(h[7], 4);
    assert_eq!(h[9], 3);
}

#[test]
fn einfty_readings() {
    let s = einfty_series_check(EinftyReading::Symmetric, 40).unwrap();
    assert!(s.agrees());
    assert!(s.series_equal);
    assert_eq!(s.flags, vec![(7, 3, 4, 4)]);
    let l = einfty_series_check(EinftyReading::Literal, 40).unwrap();
    assert!(!l.agrees());
}

#[test]
fn s8_ring_map() {
    let r = s8_ring_map_audit().unwrap();
    assert!(r.ok());
    assert_eq!(r.solved, vec![("s2".to_string(), "w^2".to_string())]);
    let rel = r.relations.iter().find(|x| x.0 == "x5*s3 + c3*s4*s1").unwrap();
    assert!(rel.2);
}

#[test]
fn ring_map_identity_and_missing_image() {
    let s = Symbols::new(invar_core::gf2::Ring::new(&["a", "b"]), vec![]).unwrap();
    let ring = presented_ring(&[("a", 1), ("b", 1)], &["a*b + b*a"]);
    let imgs = vec![("a".to_string(), s.eval("a").unwrap()), ("b".to_string(), s.eval("b").unwrap())];
    assert!(verify_ring_map(&ring, &s, &imgs).unwrap().ok());
    assert!(verify_ring_map(&ring, &s, &imgs[..1]).is_err());
}

#[test]
fn wrong_image_fails_a_relation() {
    let s = Symbols::wtz();
    let ring = h_s8();
    let mut imgs: Vec<(String, invar_core::gf2::Polynomial)> =
        S8_IMAGES.iter().map(|(n, e)| (n.to_string(), s.eval(e).unwrap())).collect();
    imgs.push(("s2".into(), s.eval("t^2").unwrap()));
    assert!(!verify_ring_map(&ring, &s, &imgs).unwrap().ok());
}

#[test]
fn image_subring() {
    let r = image_subring_check(40).unwrap();
    assert_eq!(r.mismatch, None);
    assert!(r.contains_w_d2sq_d3);
    assert_eq!(r.shortfall_without_d3d4, Some(7));
}

#[test]
fn a7_count() {
    assert_eq!(8 * 12 * 14 * 15 / 2520, 8);
}

fn arb_free() -> impl Strategy<Value = RingDescriptor> {
    (prop::collection::vec(1u32..9, 0..4), prop::collection::vec(0u32..12, 1..5))
        .prop_map(|(r, m)| RingDescriptor::free(&r, &m))
}

proptest! {
    #[test]
    fn free_descriptors_expand_non_negative(d in arb_free()) {
        let s = series_of(&d).unwrap();
        prop_assert_eq!(s.first_negative(40), None);
    }

    #[test]
    fn series_eq_is_an_equivalence(a in arb_free(), b in arb_free()) {
        let sa = series_of(&a).unwrap();
        let sb = series_of(&b).unwrap();
        prop_assert!(sa.series_eq(&sa));
        prop_assert_eq!(sa.series_eq(&sb), sb.series_eq(&sa));
        // a + b − b = a
        let back = &(&sa + &sb) - &sb;
        prop_assert!(back.series_eq(&sa));
        prop_assert_eq!(sa.series_eq(&sb), sa.expand(60) == sb.expand(60));
    }
}
