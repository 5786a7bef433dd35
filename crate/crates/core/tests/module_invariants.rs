use invar_core::gf2::Polynomial;
use invar_core::invariant::module::rad_s_module;
use invar_core::invariant::{module_invariants, verify_module_invariants, GradedModule};

#[test]
fn s3_invariants_of_the_radical() {
    let m = rad_s_module();
    let r = m.ring().clone();
    let p = |s: &str| r.parse(s).unwrap();
    let inv = module_invariants(&m, 30).unwrap();
    assert_eq!(inv.ring_generators, vec![p("v4+w4"), p("v4*w4")]);
    let degs: Vec<u32> =
        inv.module_generators.iter().map(|g| g.weighted_homogeneous_degree(r.weights()).unwrap()).collect();
    assert_eq!(degs, vec![3, 5, 7]);
    let claimed = [p("g3+b3"), p("a5"), p("v4*g3+w4*b3")];
    let verdict = verify_module_invariants(&m, &[p("v4+w4"), p("v4*w4")], &claimed, 30).unwrap();
    assert_eq!(verdict, None);
    // dropping a generator is caught at its degree
    let short = verify_module_invariants(&m, &[p("v4+w4"), p("v4*w4")], &claimed[..2], 30).unwrap();
    assert_eq!(short, Some(7));
}

#[test]
fn trivial_action_keeps_the_basis() {
    let m = GradedModule::new(&[("c", 1)], &[("e", 2), ("f", 3)], &[]).unwrap();
    let inv = module_invariants(&m, 8).unwrap();
    let r = m.ring();
    assert_eq!(inv.ring_generators, vec![r.parse("c").unwrap()]);
    assert_eq!(inv.module_generators, vec![r.parse("e").unwrap(), r.parse("f").unwrap()]);
}

#[test]
fn order_three_on_two_classes_has_no_fixed_vectors() {
    let m = GradedModule::new(&[], &[("g2", 2), ("b2", 2)], &[vec![("g2", "b2"), ("b2", "g2+b2")]]).unwrap();
    assert_eq!(m.fixed_polys(2, false).unwrap(), Vec::<Polynomial>::new());
}

#[test]
fn singular_action_is_rejected() {
    assert!(GradedModule::new(&[], &[("e", 2), ("f", 2)], &[vec![("e", "f")]]).is_err());
}
