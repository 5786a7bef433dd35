use invar_core::gf2::{Polynomial, Ring};
use invar_core::group::named::{d8_on_wtz, l3_2_on_2_4};
use invar_core::group::MatrixGroup;
use invar_core::invariant::{dickson, secondary_invariants, GroupAction};
use invar_core::steenrod::{sq, sq_in, total_square, verify_secondary_chain};
use proptest::prelude::*;

#[test]
fn small_squares() {
    let r = Ring::new(&["x", "y"]);
    let p = |s: &str| r.parse(s).unwrap();
    assert_eq!(total_square(&p("x")), p("x+x^2"));
    assert_eq!(total_square(&p("x*y")), p("x*y+x^2*y+x*y^2+x^2*y^2"));
    assert_eq!(sq(1, &p("x*y")).unwrap(), p("x^2*y+x*y^2"));
    assert_eq!(sq(2, &p("x")).unwrap(), Polynomial::zero());
    assert_eq!(sq(0, &p("x*y")).unwrap(), p("x*y"));
    assert_eq!(sq(2, &p("x*y")).unwrap(), p("x^2*y^2"));
    let d = dickson(2);
    assert_eq!(sq(1, &d[0]).unwrap(), d[1]);
    assert!(sq(1, &p("x+y^2")).is_err());
    let weighted = Ring::weighted(&["a", "b"], &[2, 1]);
    assert!(sq_in(&weighted, 1, &Polynomial::var(1)).is_err());
}

#[test]
fn chain_on_the_168_element_group() {
    let ring = Ring::new(&["x1", "y1", "z1", "w1"]);
    let act = GroupAction::new(l3_2_on_2_4(), ring.clone()).unwrap();
    let mut prim = dickson(3);
    prim.push(dickson(4).remove(0));
    let dec = secondary_invariants(&act, &prim, 30).unwrap().decomposition;
    let rep = verify_secondary_chain(&dec, &ring).unwrap();
    let degrees: Vec<u32> = rep.groups.iter().flat_map(|g| g.links.iter().map(|l| l.degree)).collect();
    assert_eq!(degrees, vec![9, 11, 12, 13]);
    assert!(rep.links_hold(), "{rep:#?}");
    assert!(rep.some_product_completes(), "{rep:#?}");
    assert_eq!(rep.top_degree, 21);
}

fn arb_homogeneous(n: usize, max_deg: u32) -> impl Strategy<Value = Polynomial> {
    (0..=max_deg).prop_flat_map(move |d| {
        let basis = invar_core::gf2::monomial_basis(n, d);
        let len = basis.len();
        proptest::collection::vec(any::<bool>(), len)
            .prop_map(move |bits| Polynomial::from_terms(basis.iter().zip(&bits).filter(|(_, &b)| b).map(|(m, _)| *m)))
    })
}

fn all_matrices() -> Vec<invar_core::group::MatF2> {
    let mut out = Vec::new();
    for g in [l3_2_on_2_4(), MatrixGroup::general_linear(4)] {
        out.extend(g.generators().iter().cloned());
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn cartan_formula(p in arb_homogeneous(3, 6), q in arb_homogeneous(3, 6), k in 0u32..8) {
        let lhs = sq(k, &(&p * &q)).unwrap();
        let mut rhs = Polynomial::zero();
        for i in 0..=k {
            rhs = &rhs + &(&sq(i, &p).unwrap() * &sq(k - i, &q).unwrap());
        }
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn squares_sum_to_total_square(p in arb_homogeneous(4, 8)) {
        let d = p.homogeneous_degree().unwrap_or(0);
        let sum: Polynomial = (0..=d).map(|k| sq(k, &p).unwrap()).sum();
        prop_assert_eq!(sum, total_square(&p));
    }

    #[test]
    fn total_square_is_multiplicative(p in arb_homogeneous(3, 5), q in arb_homogeneous(3, 5)) {
        prop_assert_eq!(total_square(&(&p * &q)), &total_square(&p) * &total_square(&q));
    }

    #[test]
    fn naturality(p in arb_homogeneous(4, 7), k in 0u32..5) {
        for g in all_matrices() {
            let lhs = g.act_on_poly(&sq(k, &p).unwrap()).unwrap();
            let rhs = sq(k, &g.act_on_poly(&p).unwrap()).unwrap();
            prop_assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn squares_preserve_invariants() {
    let groups = [
        GroupAction::new(l3_2_on_2_4(), Ring::new(&["x1", "y1", "z1", "w1"])).unwrap(),
        GroupAction::new(d8_on_wtz(), Ring::new(&["w", "t", "z"])).unwrap(),
    ];
    for act in &groups {
        for r in act.fixed_spaces().take(14) {
            let (_, slice, space) = r.unwrap();
            for p in slice.polys(&space) {
                for k in 0..=4 {
                    let s = sq(k, &p).unwrap();
                    assert!(act.is_invariant(&s).unwrap());
                }
            }
        }
    }
}
