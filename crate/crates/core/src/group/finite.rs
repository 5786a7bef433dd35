use std::collections::HashSet;
use std::hash::Hash;

use crate::error::{Error, Result};

/// Elements that can be multiplied. `mul(a, b)` is `a` after `b` for
/// permutations and the matrix product for matrices; closure only needs
/// associativity.
pub trait GroupElement: Clone + Eq + Hash + std::fmt::Debug {
    fn mul(&self, other: &Self) -> Self;
}

/// Breadth-first closure of `gens` starting from `identity`.
///
/// Elements come out in discovery order, so the enumeration is
/// deterministic for a fixed generator list.
pub fn closure<E: GroupElement>(identity: &E, gens: &[E], budget: usize) -> Result<Vec<E>> {
    let mut seen: HashSet<E> = HashSet::new();
    let mut elems = vec![identity.clone()];
    seen.insert(identity.clone());
    let mut head = 0;
    while head < elems.len() {
        let e = elems[head].clone();
        head += 1;
        for s in gens {
            let p = e.mul(s);
            if !seen.contains(&p) {
                if elems.len() >= budget {
                    return Err(Error::Budget(format!("group closure exceeds {budget} elements")));
                }
                seen.insert(p.clone());
                elems.push(p);
            }
        }
    }
    Ok(elems)
}

/// Order of `g` by repeated multiplication.
pub fn element_order<E: GroupElement>(identity: &E, g: &E) -> usize {
    let mut k = 1;
    let mut p = g.clone();
    while &p != identity {
        p = p.mul(g);
        k += 1;
    }
    k
}
