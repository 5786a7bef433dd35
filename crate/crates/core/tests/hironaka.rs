use invar_core::gf2::{Polynomial, Ring};
use invar_core::group::named::{d8_on_wtz, l3_2_on_2_4};
use invar_core::group::MatrixGroup;
use invar_core::invariant::{
    dickson, freeness_against, freeness_check, secondary_invariants, validate_hsop, GroupAction, HironakaDecomposition,
};
use invar_core::series::PoincareSeries;

fn l3_2() -> GroupAction {
    GroupAction::new(l3_2_on_2_4(), Ring::new(&["x1", "y1", "z1", "w1"])).unwrap()
}

fn l3_2_primaries() -> Vec<Polynomial> {
    let mut p = dickson(3);
    p.push(dickson(4).remove(0));
    p
}

#[test]
fn d4_spans_degree_four() {
    assert_eq!(l3_2().invariant_basis(4).unwrap(), vec![dickson(3)[0].clone()]);
    assert_eq!(l3_2().invariant_basis(0).unwrap(), vec![Polynomial::one()]);
}

#[test]
fn hsop_dims() {
    let act = l3_2();
    let rep = validate_hsop(&l3_2_primaries(), &act, 13).unwrap();
    assert!(rep.ok());
    assert_eq!(rep.dims, vec![1, 0, 0, 0, 1, 0, 1, 1, 2, 0, 1, 1, 3, 1]);
    let d4 = dickson(3)[0].clone();
    let bad = validate_hsop(&[d4.clone(), d4.square()], &act, 13).unwrap();
    assert_eq!(bad.failure, Some(8));
    let one = GroupAction::with_default_names(MatrixGroup::trivial(1));
    let free = validate_hsop(&[Polynomial::var(0)], &one, 6).unwrap();
    assert_eq!(free.dims, vec![1; 7]);
}

#[test]
fn l3_2_decomposition() {
    let act = l3_2();
    let run = secondary_invariants(&act, &l3_2_primaries(), 45).unwrap();
    let dec = &run.decomposition;
    assert_eq!(dec.group_order, 168);
    assert_eq!(dec.secondary_degrees, vec![0, 8, 9, 10, 11, 12, 13, 21]);
    assert!(dec.is_complete());
    let expected = PoincareSeries::free_module(&[0, 8, 9, 10, 11, 12, 13, 21], &[4, 6, 7, 8]);
    assert_eq!(dec.series(), expected);
    assert_eq!(&run.invariant_dims()[..14], &[1, 0, 0, 0, 1, 0, 1, 1, 3, 1, 2, 2, 5, 3]);
    assert_eq!(dec.prefix_module(2).unwrap().dims(13).unwrap(), vec![1, 0, 0, 0, 1, 0, 1, 1, 3, 0, 1, 1, 4, 1]);
    assert_eq!(dec.prefix_module(3).unwrap().dims(13).unwrap(), vec![1, 0, 0, 0, 1, 0, 1, 1, 3, 1, 1, 1, 4, 2]);
    for s in &dec.secondaries {
        assert!(act.is_invariant(s).unwrap());
    }
    let free = freeness_check(dec, &act, 30).unwrap();
    assert!(free.ok(), "{free:?}");
}

#[test]
fn duplicated_secondary_is_a_relation() {
    let act = l3_2();
    let dec = secondary_invariants(&act, &l3_2_primaries(), 45).unwrap().decomposition;
    let mut dup = dec.clone();
    dup.secondaries.push(dec.secondaries[1].clone());
    dup.secondary_degrees.push(8);
    let dims = act.invariant_dims(14).unwrap();
    assert_eq!(freeness_against(&dup, &dims).unwrap().relation_degree, Some(8));
}

#[test]
fn trivial_group_is_free_over_itself() {
    let act = GroupAction::with_default_names(MatrixGroup::trivial(2));
    let vars = vec![Polynomial::var(0), Polynomial::var(1)];
    let dec = HironakaDecomposition {
        primaries: vars,
        primary_degrees: vec![1, 1],
        secondaries: vec![Polynomial::one()],
        secondary_degrees: vec![0],
        group_order: 1,
    };
    assert!(freeness_check(&dec, &act, 10).unwrap().ok());
}

#[test]
fn d8_has_one_secondary() {
    let r = Ring::new(&["w", "t", "z"]);
    let act = GroupAction::new(d8_on_wtz(), r.clone()).unwrap();
    let prim = vec![r.parse("w").unwrap(), r.parse("t*(t+w)").unwrap(), dickson(3)[0].clone()];
    let run = secondary_invariants(&act, &prim, 24).unwrap();
    assert_eq!(run.decomposition.secondaries, vec![Polynomial::one()]);
    assert!(freeness_check(&run.decomposition, &act, 24).unwrap().ok());
}
