use invar_core::group::named::d8_on_wtz;
use invar_core::invariant::search::{a7_series, d8_primaries, s4_target_ring, search_a7, search_s4, wtz_ring};
use invar_core::invariant::{dickson, secondary_invariants, GroupAction};
use invar_core::subring::Subalgebra;

#[test]
fn d8_invariants_are_polynomial() {
    let act = GroupAction::new(d8_on_wtz(), wtz_ring()).unwrap();
    let ring = Subalgebra::new(3, d8_primaries()).unwrap();
    for r in act.fixed_spaces().take(25) {
        let (d, _, inv) = r.unwrap();
        assert_eq!(ring.slice(d).unwrap().1, inv, "degree {d}");
    }
}

#[test]
fn s4_search_finds_dickson_ring() {
    let out = search_s4(24).unwrap();
    assert_eq!(out.order, 24);
    let target = s4_target_ring();
    assert_eq!(out.dims, target.dims(24).unwrap());
    // the extension still contains the eight-element group
    let d8 = d8_on_wtz();
    let elems = out.group.elements(100).unwrap();
    for g in d8.generators() {
        assert!(elems.contains(g));
    }
}

#[test]
fn a7_search_and_decomposition() {
    let out = search_a7(24).unwrap();
    assert_eq!(out.group.order(3000).unwrap(), 2520);
    let expected: Vec<usize> = a7_series().expand(24).into_iter().map(|c| c as usize).collect();
    assert_eq!(out.dims, expected);
    let act = GroupAction::with_default_names(out.group);
    let run = secondary_invariants(&act, &dickson(4), 45).unwrap();
    let dec = run.decomposition;
    assert_eq!(dec.primary_degrees, vec![8, 12, 14, 15]);
    assert_eq!(dec.secondary_degrees, vec![0, 18, 20, 21, 24, 25, 27, 45]);
    assert_eq!(dec.expected_count(), 8);
    assert_eq!(dec.series(), a7_series());
    let dims: Vec<i64> = run.steps.iter().map(|s| s.invariant_dim as i64).collect();
    assert_eq!(dims, a7_series().expand(45));
}
