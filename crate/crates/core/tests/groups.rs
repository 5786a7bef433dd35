use std::collections::HashSet;

use invar_core::group::ea2::{find_class, letter_count_ok};
use invar_core::group::named::{d8_on_wtz, l3_2_on_2_4, m3_tilde, v3_tilde};
use invar_core::group::sylow::check_sylow_model;
use invar_core::group::{
    filter_by_cycle_type, maximal_ea2_subgroups, normalizer, CycleType, GroupElement, MatrixGroup, Perm, PermGroup,
    DEFAULT_BUDGET,
};

fn labels(g: &PermGroup) -> Vec<String> {
    maximal_ea2_subgroups(g, DEFAULT_BUDGET).unwrap().into_iter().map(|c| c.label).collect()
}

#[test]
fn matrix_group_orders() {
    assert_eq!(l3_2_on_2_4().order(1000).unwrap(), 168);
    assert_eq!(d8_on_wtz().order(1000).unwrap(), 8);
    assert_eq!(MatrixGroup::trivial(3).order(10).unwrap(), 1);
}

#[test]
fn s8_classes() {
    let s8 = PermGroup::symmetric(8);
    let classes = maximal_ea2_subgroups(&s8, DEFAULT_BUDGET).unwrap();
    let got: Vec<&str> = classes.iter().map(|c| c.label.as_str()).collect();
    assert_eq!(got, ["V_3", "V_2^2", "V_2 x V_1^2", "V_1^4"]);
    for c in &classes {
        assert!(letter_count_ok(&s8, &c.subgroup));
    }
}

#[test]
fn small_symmetric_and_alternating() {
    assert_eq!(labels(&PermGroup::symmetric(2)), ["V_1"]);
    assert_eq!(labels(&PermGroup::symmetric(5)), ["V_2", "V_1^2"]);
    assert_eq!(labels(&PermGroup::alternating(6)), ["V_2", "E_3"]);
}

#[test]
fn v3_normalizer_in_s8() {
    let s8 = PermGroup::symmetric(8);
    let v3 = v3_tilde(8);
    let n = normalizer(&s8, &v3.as_perm_group(), DEFAULT_BUDGET).unwrap();
    assert_eq!(n.order(DEFAULT_BUDGET).unwrap() / v3.order(), 168);
    for x in v3.elements().iter().filter(|x| !x.is_identity()) {
        assert_eq!(x.cycle_type(), CycleType::parse("2^4").unwrap());
    }
}

#[test]
fn m3_normalizing_elements() {
    let m3 = m3_tilde();
    let set: HashSet<Perm> = m3.elements().iter().copied().collect();
    let d8_gens = ["(1,3)(2,4)", "(1,4)(2,3)", "(1,2)(5,7)(6,8)"].map(|s| Perm::parse(10, s).unwrap());
    for x in &d8_gens {
        for h in m3.basis() {
            assert!(set.contains(&x.conjugate(h)), "{x} does not normalize");
        }
    }
    let d8 = PermGroup::new(10, d8_gens.to_vec()).unwrap();
    let elems = d8.elements(100).unwrap();
    assert_eq!(elems.len(), 8);
    assert!(elems.iter().any(|a| elems.iter().any(|b| a.mul(b) != b.mul(a))));
    // order three: cycles (5,6), (7,8), (9,10) and sends (1,3)(2,4) to (1,2)(3,4)
    let y = Perm::parse(10, "(2,4,3)(5,7,9)(6,8,10)").unwrap();
    assert!(y.is_even());
    assert!(m3.basis().iter().all(|h| set.contains(&y.conjugate(h))));
    assert_eq!(y.conjugate(&Perm::parse(10, "(1,3)(2,4)").unwrap()), Perm::parse(10, "(1,2)(3,4)").unwrap());
}

#[test]
fn sylow_model_claims() {
    let r = check_sylow_model().unwrap();
    assert!(r.all_hold(), "{r:?}");
}

#[test]
fn a10_classes_and_filter() {
    let a10 = PermGroup::alternating(10);
    let classes = maximal_ea2_subgroups(&a10, DEFAULT_BUDGET).unwrap();
    let got: Vec<&str> = classes.iter().map(|c| c.label.as_str()).collect();
    assert_eq!(got, ["V_3", "V_2^2", "V_2 x E_3", "E_5"]);
    let subs: Vec<_> = classes.iter().map(|c| c.subgroup.clone()).collect();
    let f = filter_by_cycle_type(&a10, &subs, &CycleType::parse("2^4").unwrap(), DEFAULT_BUDGET).unwrap();
    assert_eq!(f.len(), 2);
    assert!(find_class(&a10, &f, &v3_tilde(10), DEFAULT_BUDGET).unwrap().is_some());
    assert!(find_class(&a10, &f, &m3_tilde(), DEFAULT_BUDGET).unwrap().is_some());
}
