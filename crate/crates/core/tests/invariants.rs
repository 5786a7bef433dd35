use invar_core::gf2::{Polynomial, Ring};
use invar_core::group::named::{d8_on_wtz, l3_2_on_2_4};
use invar_core::group::MatrixGroup;
use invar_core::invariant::{dickson, relative_dickson_top, GroupAction};

fn wtz() -> Ring {
    Ring::new(&["w", "t", "z"])
}

#[test]
fn l3_2_invariant_dims() {
    let act = GroupAction::new(l3_2_on_2_4(), Ring::new(&["x1", "y1", "z1", "w1"])).unwrap();
    assert_eq!(act.invariant_dims(13).unwrap(), vec![1, 0, 0, 0, 1, 0, 1, 1, 3, 1, 2, 2, 5, 3]);
}

#[test]
fn gl3_dims_match_dickson_algebra() {
    let act = GroupAction::with_default_names(MatrixGroup::general_linear(3));
    // free on degrees 4, 6, 7
    assert_eq!(act.invariant_dims(14).unwrap(), vec![1, 0, 0, 0, 1, 0, 1, 1, 1, 0, 1, 1, 2, 1, 2]);
    for d in dickson(3) {
        assert!(act.is_invariant(&d).unwrap());
    }
}

#[test]
fn d8_linear_invariants() {
    let act = GroupAction::new(d8_on_wtz(), wtz()).unwrap();
    let b = act.invariant_basis(1).unwrap();
    assert_eq!(b, vec![wtz().parse("w").unwrap()]);
    assert_eq!(act.group().order(1000).unwrap(), 8);
}

#[test]
fn dickson_in_two_variables() {
    let r = Ring::new(&["w", "t"]);
    let d = dickson(2);
    assert_eq!(r.format(&d[0]), "w^2+w*t+t^2");
    assert_eq!(r.format(&d[1]), "w^2*t+w*t^2");
    assert_eq!(dickson(1), vec![Polynomial::var(0)]);
    let degs: Vec<u32> = dickson(4).iter().map(|p| p.homogeneous_degree().unwrap()).collect();
    assert_eq!(degs, vec![8, 12, 14, 15]);
}

#[test]
fn relative_dickson_identities() {
    for n in 1..=4 {
        assert_eq!(relative_dickson_top(n), Ok(()), "n = {n}");
    }
}

mod frame_oracle {
    use invar_core::gf2::Ring;
    use invar_core::group::{MatF2, MatrixGroup};
    use invar_core::invariant::{GroupAction, SliceImages};
    use proptest::prelude::*;

    fn arb_matrix(n: usize) -> impl Strategy<Value = MatF2> {
        proptest::collection::vec(proptest::collection::vec(0u8..2, n), n)
            .prop_filter_map("singular", |rows| MatF2::from_rows(&rows).ok())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(24))]
        #[test]
        fn frame_solver_matches_dense_kernel(
            n in 2usize..=4,
            seeds in proptest::collection::vec(proptest::collection::vec(proptest::collection::vec(0u8..2, 4), 4), 1..3),
        ) {
            let gens: Vec<MatF2> = seeds
                .iter()
                .filter_map(|r| {
                    let rows: Vec<Vec<u8>> = r[..n].iter().map(|row| row[..n].to_vec()).collect();
                    MatF2::from_rows(&rows).ok()
                })
                .collect();
            let group = MatrixGroup::new(n, gens.clone()).unwrap();
            let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
            let act = GroupAction::new(group, Ring::new(&names)).unwrap();
            let mut naive = SliceImages::new(n, &gens);
            for r in act.fixed_spaces().take(9) {
                let (d, slice, space) = r.unwrap();
                prop_assert_eq!(&space, &naive.fixed_space(), "degree {}", d);
                for p in slice.polys(&space) {
                    prop_assert!(act.is_invariant(&p).unwrap());
                }
                naive.advance();
            }
        }

        #[test]
        fn single_generator_frames(g in arb_matrix(3)) {
            let act = GroupAction::with_default_names(MatrixGroup::new(3, vec![g]).unwrap());
            let mut naive = SliceImages::new(3, &[g]);
            for r in act.fixed_spaces().take(8) {
                let (_, _, space) = r.unwrap();
                prop_assert_eq!(space, naive.fixed_space());
                naive.advance();
            }
        }
    }
}
