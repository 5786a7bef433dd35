//! Elementary abelian 2-subgroups of symmetric and alternating groups.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use super::finite::GroupElement;
use super::perm::{
    conjugacy_signature, conjugating_element, normalizer_elements, orbits, CycleType, Perm, PermGroup, PermGroupKind,
};
use crate::error::{Error, Result};

/// An elementary abelian 2-subgroup given by an independent generating set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementaryAbelian {
    degree: usize,
    basis: Vec<Perm>,
    elements: Vec<Perm>,
}

impl ElementaryAbelian {
    pub fn trivial(degree: usize) -> Self {
        Self { degree, basis: Vec::new(), elements: vec![Perm::identity(degree)] }
    }

    /// Checks commuting involutions and drops dependent generators.
    pub fn from_generators(degree: usize, gens: &[Perm]) -> Result<Self> {
        let mut e = Self::trivial(degree);
        for g in gens {
            let g = super::perm::with_degree(g, degree);
            if !g.mul(&g).is_identity() {
                return Err(Error::Invalid(format!("{g} is not an involution")));
            }
            if let Some(b) = e.basis.iter().find(|b| !b.commutes_with(&g)) {
                return Err(Error::Invalid(format!("{g} does not commute with {b}")));
            }
            if !e.contains(&g) {
                e = e.extend(g);
            }
        }
        Ok(e)
    }

    fn extend(&self, g: Perm) -> Self {
        let mut elements = self.elements.clone();
        elements.extend(self.elements.iter().map(|e| e.mul(&g)));
        elements.sort();
        let mut basis = self.basis.clone();
        basis.push(g);
        Self { degree: self.degree, basis, elements }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn basis(&self) -> &[Perm] {
        &self.basis
    }

    /// Sorted element list.
    pub fn elements(&self) -> &[Perm] {
        &self.elements
    }

    pub fn contains(&self, p: &Perm) -> bool {
        self.elements.binary_search(p).is_ok()
    }

    pub fn as_perm_group(&self) -> PermGroup {
        PermGroup::new(self.degree, self.basis.clone()).expect("degree checked at construction")
    }

    /// Sizes of nontrivial orbits, largest first.
    pub fn orbit_sizes(&self) -> Vec<usize> {
        let mut s: Vec<usize> = orbits(self.degree, &self.basis).iter().map(Vec::len).filter(|&l| l > 1).collect();
        s.sort_unstable_by(|a, b| b.cmp(a));
        s
    }

    pub fn moved_points(&self) -> usize {
        orbits(self.degree, &self.basis).iter().filter(|o| o.len() > 1).map(Vec::len).sum()
    }

    /// Every subgroup, as elementary abelian groups; the rank-0 one first.
    pub fn subgroups(&self) -> Vec<ElementaryAbelian> {
        let mut seen: HashSet<Vec<Perm>> = HashSet::new();
        let mut level = vec![Self::trivial(self.degree)];
        let mut out = Vec::new();
        while !level.is_empty() {
            let mut next = Vec::new();
            for s in &level {
                for e in &self.elements {
                    if !s.contains(e) {
                        let t = s.extend(*e);
                        if seen.insert(t.elements.clone()) {
                            next.push(t);
                        }
                    }
                }
            }
            out.append(&mut level);
            level = next;
        }
        out
    }

    /// Label such as `V_2^2`, `V_2 x V_1^2` or `V_2 x E_3`. Anything else
    /// falls back to `R<rank>(<orbit sizes>)`.
    ///
    /// An orbit is split when the subgroup contains the full restriction to
    /// it; split orbits of size `2^j` give regular factors `V_j`. The
    /// remaining points must be 2-element orbits on which the subgroup is
    /// the even part of `V_1^r`, written `E_r`.
    pub fn label(&self) -> String {
        let orbs: Vec<Vec<usize>> = orbits(self.degree, &self.basis).into_iter().filter(|o| o.len() > 1).collect();
        let mut factors: Vec<(usize, usize)> = Vec::new();
        let mut unsplit = Vec::new();
        for o in &orbs {
            let restricted: Vec<Perm> = self.basis.iter().map(|b| restrict(b, o)).collect();
            let r = ElementaryAbelian::from_generators(self.degree, &restricted)
                .expect("restriction stays elementary abelian");
            let split = r.elements.iter().all(|e| self.contains(e));
            let j = o.len().trailing_zeros() as usize;
            if split && o.len().is_power_of_two() && r.order() == o.len() {
                factors.push((j, 1));
            } else {
                unsplit.push(o.clone());
            }
        }
        factors.sort_by(|a, b| b.cmp(a));
        let mut parts: Vec<String> = Vec::new();
        let mut i = 0;
        while i < factors.len() {
            let j = factors[i].0;
            let k = factors[i..].iter().take_while(|f| f.0 == j).count();
            parts.push(if k == 1 { format!("V_{j}") } else { format!("V_{j}^{k}") });
            i += k;
        }
        if !unsplit.is_empty() {
            let r = unsplit.len();
            let pts: Vec<usize> = unsplit.iter().flatten().copied().collect();
            let even_part = unsplit.iter().all(|o| o.len() == 2)
                && self.rank() + 1 == factors.iter().map(|f| f.0).sum::<usize>() + r
                && self.elements.iter().all(|e| restrict_set(e, &pts).is_even());
            if even_part {
                parts.push(format!("E_{r}"));
            } else {
                let sizes: Vec<String> = unsplit.iter().map(|o| o.len().to_string()).collect();
                parts.push(format!("R{}({})", self.rank(), sizes.join(",")));
            }
        }
        if parts.is_empty() {
            "1".to_string()
        } else {
            parts.join(" x ")
        }
    }
}

fn restrict(p: &Perm, orbit: &[usize]) -> Perm {
    restrict_set(p, orbit)
}

fn restrict_set(p: &Perm, pts: &[usize]) -> Perm {
    let n = p.degree();
    let images: Vec<usize> = (0..n).map(|i| if pts.contains(&i) { p.apply(i) } else { i }).collect();
    Perm::from_images(&images).expect("restriction of a permutation to a union of orbits")
}

impl fmt::Display for ElementaryAbelian {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.basis.iter().map(|p| p.to_string()).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

/// A conjugacy class representative with its structural label.
#[derive(Debug, Clone, Serialize)]
pub struct Ea2Class {
    pub label: String,
    pub rank: usize,
    pub moved_points: usize,
    pub generators: Vec<String>,
    #[serde(skip)]
    pub subgroup: ElementaryAbelian,
}

impl Ea2Class {
    fn new(subgroup: ElementaryAbelian) -> Self {
        Self {
            label: subgroup.label(),
            rank: subgroup.rank(),
            moved_points: subgroup.moved_points(),
            generators: subgroup.basis.iter().map(|p| p.to_string()).collect(),
            subgroup,
        }
    }
}

/// Conjugacy classes of maximal elementary abelian 2-subgroups of `S_n` or
/// `A_n`.
///
/// Classes are grown one involution at a time: each representative is
/// extended by orbit representatives (under its normalizer) of the
/// involutions centralizing it, then the extensions are deduplicated up to
/// conjugacy. A representative with no centralizing involution outside it is
/// maximal.
pub fn maximal_ea2_subgroups(g: &PermGroup, budget: usize) -> Result<Vec<Ea2Class>> {
    if g.kind() == PermGroupKind::Generated {
        return Err(Error::Invalid("maximal_ea2_subgroups expects a symmetric or alternating group".into()));
    }
    let n = g.degree();
    let elems = g.elements(budget)?;
    let involutions: Vec<Perm> = elems.iter().filter(|p| p.is_involution()).copied().collect();
    let mut maximal = Vec::new();
    let mut level = vec![ElementaryAbelian::trivial(n)];
    while !level.is_empty() {
        let mut next: Vec<ElementaryAbelian> = Vec::new();
        for e in &level {
            let cands: Vec<Perm> = involutions
                .iter()
                .filter(|c| !e.contains(c) && e.basis.iter().all(|b| b.commutes_with(c)))
                .copied()
                .collect();
            if cands.is_empty() {
                maximal.push(e.clone());
                continue;
            }
            let e_set: HashSet<Perm> = e.elements.iter().copied().collect();
            let norm = normalizer_elements(elems, &e.basis, &e_set);
            let mut seen: HashSet<Perm> = HashSet::new();
            for c in &cands {
                if seen.contains(c) {
                    continue;
                }
                for x in &norm {
                    seen.insert(x.conjugate(c));
                }
                let ext = e.extend(*c);
                if !next.iter().any(|f| conjugating_element(elems, n, &ext.elements, &ext.basis, &f.elements).is_some())
                {
                    next.push(ext);
                }
            }
        }
        level = next;
    }
    // largest orbits first, which lists regular factors before small ones
    maximal.sort_by_cached_key(|e| std::cmp::Reverse(e.orbit_sizes()));
    Ok(maximal.into_iter().map(Ea2Class::new).collect())
}

/// Subgroups of the given classes all of whose nonidentity elements have
/// cycle type `ty`, maximal with that property, up to conjugacy in `g`.
pub fn filter_by_cycle_type(
    g: &PermGroup,
    classes: &[ElementaryAbelian],
    ty: &CycleType,
    budget: usize,
) -> Result<Vec<ElementaryAbelian>> {
    if classes.is_empty() {
        return Ok(Vec::new());
    }
    let n = g.degree();
    let elems = g.elements(budget)?;
    let good =
        |s: &ElementaryAbelian| s.rank() > 0 && s.elements.iter().all(|e| e.is_identity() || &e.cycle_type() == ty);
    let mut cands: Vec<ElementaryAbelian> = Vec::new();
    for c in classes {
        let subs: Vec<ElementaryAbelian> = c.subgroups().into_iter().filter(|s| good(s)).collect();
        for s in &subs {
            let maximal_here = !subs.iter().any(|t| t.order() > s.order() && s.elements.iter().all(|e| t.contains(e)));
            if maximal_here
                && !cands.iter().any(|t| conjugating_element(elems, n, &s.elements, &s.basis, &t.elements).is_some())
            {
                cands.push(s.clone());
            }
        }
    }
    // drop candidates conjugate into a larger one
    let keep: Vec<bool> = cands
        .iter()
        .map(|s| {
            !cands.iter().any(|t| {
                t.order() > s.order()
                    && t.subgroups().iter().any(|u| {
                        u.order() == s.order()
                            && conjugating_element(elems, n, &s.elements, &s.basis, &u.elements).is_some()
                    })
            })
        })
        .collect();
    Ok(cands.into_iter().zip(keep).filter_map(|(s, k)| k.then_some(s)).collect())
}

/// Which of `classes` is conjugate in `g` to `h`.
pub fn find_class(
    g: &PermGroup,
    classes: &[ElementaryAbelian],
    h: &ElementaryAbelian,
    budget: usize,
) -> Result<Option<usize>> {
    let elems = g.elements(budget)?;
    Ok(classes
        .iter()
        .position(|c| conjugating_element(elems, g.degree(), &h.elements, &h.basis, &c.elements).is_some()))
}

/// Checks `2i_1 + 4i_2 + …` against the allowed letter counts: `{n, n-1}` in
/// `S_n` and `{n, …, n-3}` in `A_n`.
pub fn letter_count_ok(g: &PermGroup, e: &ElementaryAbelian) -> bool {
    let n = g.degree();
    let used = e.moved_points();
    let slack = if g.kind() == PermGroupKind::Alternating { 3 } else { 1 };
    used <= n && used + slack >= n
}

/// Sorted cycle-type multiset and orbit sizes of a subgroup.
pub fn signature(e: &ElementaryAbelian) -> (Vec<CycleType>, Vec<usize>) {
    conjugacy_signature(e.degree, &e.elements)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s2_and_s4() {
        let c = maximal_ea2_subgroups(&PermGroup::symmetric(2), 100).unwrap();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].label, "V_1");
        let c = maximal_ea2_subgroups(&PermGroup::symmetric(4), 100).unwrap();
        let labels: Vec<&str> = c.iter().map(|x| x.label.as_str()).collect();
        assert_eq!(labels, ["V_2", "V_1^2"]);
    }

    #[test]
    fn subgroup_count_of_rank_three() {
        let e = ElementaryAbelian::from_generators(
            8,
            &[
                Perm::parse(8, "(1,2)(3,4)(5,6)(7,8)").unwrap(),
                Perm::parse(8, "(1,3)(2,4)(5,7)(6,8)").unwrap(),
                Perm::parse(8, "(1,5)(2,6)(3,7)(4,8)").unwrap(),
            ],
        )
        .unwrap();
        // 1 + 7 + 7 + 1 subspaces of F_2^3
        assert_eq!(e.subgroups().len(), 16);
        assert_eq!(e.label(), "V_3");
    }

    #[test]
    fn rejects_noncommuting() {
        let r = ElementaryAbelian::from_generators(
            4,
            &[Perm::parse(4, "(1,2)").unwrap(), Perm::parse(4, "(2,3)").unwrap()],
        );
        assert!(r.is_err());
    }
}
