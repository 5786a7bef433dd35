//! Subgroups of `GL_n(2)` that are not given by explicit generators, found
//! by extending a known subgroup by one element and testing invariants.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::gf2::{Polynomial, Ring};
use crate::group::finite::element_order;
use crate::group::named::{d8_on_wtz, l3_2_on_2_4};
use crate::group::{MatF2, MatrixGroup, DEFAULT_BUDGET};
use crate::series::PoincareSeries;
use crate::subring::Subalgebra;

use super::action::GroupAction;
use super::dickson::dickson;

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub group: MatrixGroup,
    pub order: usize,
    /// Extensions tried.
    pub candidates: usize,
    /// Distinct subgroups of the target order among them.
    pub subgroups: usize,
    /// Subgroups rejected by the invariant test before the accepted one.
    pub rejected: usize,
    pub dims: Vec<usize>,
}

/// Extends `base` by each element of `pool` in turn and keeps the distinct
/// subgroups of order `order`. The first whose action passes `accept` wins.
pub fn extend_and_test(
    base: &MatrixGroup,
    pool: &[MatF2],
    order: usize,
    mut accept: impl FnMut(&GroupAction) -> Result<Option<Vec<usize>>>,
) -> Result<SearchOutcome> {
    let base_elems: HashSet<MatF2> = base.elements(DEFAULT_BUDGET)?.into_iter().collect();
    let mut seen: HashSet<Vec<MatF2>> = HashSet::new();
    let mut candidates = 0;
    let mut rejected = 0;
    for g in pool {
        if base_elems.contains(g) {
            continue;
        }
        candidates += 1;
        let group = base.with_generator(*g);
        let Ok(mut elems) = group.elements(order) else {
            continue;
        };
        if elems.len() != order {
            continue;
        }
        elems.sort_unstable();
        if !seen.insert(elems) {
            continue;
        }
        let action = GroupAction::with_default_names(group.clone());
        match accept(&action)? {
            Some(dims) => {
                return Ok(SearchOutcome { group, order, candidates, subgroups: seen.len(), rejected, dims });
            }
            None => rejected += 1,
        }
    }
    Err(Error::Hypothesis(format!(
        "no extension of order {order} passed the invariant test ({} subgroups tried)",
        seen.len()
    )))
}

/// Invariant series of the 2520-element subgroup of `GL_4(2)`.
pub fn a7_series() -> PoincareSeries {
    PoincareSeries::free_module(&[0, 18, 20, 21, 24, 25, 27, 45], &[8, 12, 14, 15])
}

/// Finds a subgroup of order 2520 containing the 168-element group, whose
/// invariant dimensions agree with `a7_series` through `check_degree`.
pub fn search_a7(check_degree: u32) -> Result<SearchOutcome> {
    let base = l3_2_on_2_4();
    let pool = MatrixGroup::general_linear(4).elements(DEFAULT_BUDGET)?;
    let target: Vec<usize> = a7_series().expand(check_degree as usize).into_iter().map(|c| c as usize).collect();
    extend_and_test(&base, &pool, 2520, |action| {
        let dims = action.invariant_dims(check_degree)?;
        Ok((dims == target).then_some(dims))
    })
}

/// `F_2[d_2, d_3, d_4]` in the variables `w, t, z`.
pub fn s4_target_ring() -> Subalgebra {
    let mut gens = dickson(2);
    gens.push(dickson(3).remove(0));
    Subalgebra::new(3, gens).expect("Dickson generators are homogeneous")
}

/// Finds an order-24 extension of the eight-element group on `w, t, z` by
/// an element of order 3, whose invariants equal `F_2[d_2, d_3, d_4]` slice
/// by slice through `check_degree`.
pub fn search_s4(check_degree: u32) -> Result<SearchOutcome> {
    let base = d8_on_wtz();
    let id = MatF2::identity(3);
    let pool: Vec<MatF2> = MatrixGroup::general_linear(3)
        .elements(DEFAULT_BUDGET)?
        .into_iter()
        .filter(|g| element_order(&id, g) == 3)
        .collect();
    let target = s4_target_ring();
    extend_and_test(&base, &pool, 24, |action| {
        let mut dims = Vec::new();
        for item in action.fixed_spaces().take(check_degree as usize + 1) {
            let (d, _, inv) = item?;
            if target.slice(d)?.1 != inv {
                return Ok(None);
            }
            dims.push(inv.dim());
        }
        Ok(Some(dims))
    })
}

/// The ring `w, t, z` used for the eight- and 24-element groups.
pub fn wtz_ring() -> Ring {
    Ring::new(&["w", "t", "z"])
}

/// Primaries `w, t(t+w), d_4` for the eight-element group.
pub fn d8_primaries() -> Vec<Polynomial> {
    let r = wtz_ring();
    vec![r.parse("w").unwrap(), r.parse("t*(t+w)").unwrap(), dickson(3).remove(0)]
}
