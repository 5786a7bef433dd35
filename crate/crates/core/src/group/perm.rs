use std::collections::HashSet;
use std::fmt;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use super::finite::{closure, GroupElement};
use crate::error::{Error, Result};

pub const MAX_POINTS: usize = 16;

/// A permutation of `{0, …, n-1}` (written 1-based). Points at or beyond
/// `n` are fixed, so permutations of different degrees compose sensibly.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Perm {
    n: u8,
    img: [u8; MAX_POINTS],
}

const IDENT: [u8; MAX_POINTS] = [0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15];

impl Perm {
    pub fn identity(n: usize) -> Self {
        assert!(n <= MAX_POINTS);
        Self { n: n as u8, img: IDENT }
    }

    /// From a 0-based image list.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let n = images.len();
        if n > MAX_POINTS {
            return Err(Error::Invalid(format!("degree {n} exceeds {MAX_POINTS}")));
        }
        let mut img = IDENT;
        let mut hit = [false; MAX_POINTS];
        for (i, &x) in images.iter().enumerate() {
            if x >= n || hit[x] {
                return Err(Error::Invalid(format!("image list {images:?} is not a bijection")));
            }
            hit[x] = true;
            img[i] = x as u8;
        }
        Ok(Self { n: n as u8, img })
    }

    /// From 1-based cycles such as `[[1, 2], [3, 4]]`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut used = vec![false; n];
        for c in cycles {
            for (k, &p) in c.iter().enumerate() {
                if p == 0 || p > n || used[p - 1] {
                    return Err(Error::Invalid(format!("bad cycle {c:?} for degree {n}")));
                }
                used[p - 1] = true;
                images[p - 1] = c[(k + 1) % c.len()] - 1;
            }
        }
        Self::from_images(&images)
    }

    /// Parses cycle notation, e.g. `(1,2)(3,4)`; `()` is the identity.
    pub fn parse(n: usize, s: &str) -> Result<Self> {
        let mut cycles = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(Error::Invalid(format!("expected `(` in `{s}`")));
            };
            let end = body.find(')').ok_or_else(|| Error::Invalid(format!("unclosed cycle in `{s}`")))?;
            let inner = body[..end].trim();
            if !inner.is_empty() {
                let pts = inner
                    .split([',', ' '])
                    .filter(|t| !t.is_empty())
                    .map(|t| t.parse::<usize>().map_err(|_| Error::Invalid(format!("bad point `{t}`"))))
                    .collect::<Result<Vec<_>>>()?;
                cycles.push(pts);
            }
            rest = body[end + 1..].trim_start();
        }
        Self::from_cycles(n, &cycles)
    }

    pub fn degree(&self) -> usize {
        self.n as usize
    }

    #[inline]
    pub fn apply(&self, x: usize) -> usize {
        self.img[x] as usize
    }

    pub fn inverse(&self) -> Self {
        let mut img = IDENT;
        for i in 0..MAX_POINTS {
            img[self.img[i] as usize] = i as u8;
        }
        Self { n: self.n, img }
    }

    /// `self · x · self⁻¹`.
    pub fn conjugate(&self, x: &Perm) -> Perm {
        let mut img = IDENT;
        for i in 0..MAX_POINTS {
            img[self.img[i] as usize] = self.img[x.img[i] as usize];
        }
        Perm { n: self.n.max(x.n), img }
    }

    pub fn is_identity(&self) -> bool {
        self.img == IDENT
    }

    pub fn is_involution(&self) -> bool {
        !self.is_identity() && self.mul(self).is_identity()
    }

    pub fn commutes_with(&self, other: &Perm) -> bool {
        self.mul(other) == other.mul(self)
    }

    /// 0-based cycles of length at least 2, each starting at its least point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = [false; MAX_POINTS];
        let mut out = Vec::new();
        for s in 0..self.degree() {
            if seen[s] || self.apply(s) == s {
                continue;
            }
            let mut c = vec![s];
            seen[s] = true;
            let mut x = self.apply(s);
            while x != s {
                seen[x] = true;
                c.push(x);
                x = self.apply(x);
            }
            out.push(c);
        }
        out
    }

    pub fn cycle_type(&self) -> CycleType {
        CycleType::new(self.cycles().iter().map(|c| c.len()).collect())
    }

    pub fn is_even(&self) -> bool {
        self.cycles().iter().map(|c| c.len() - 1).sum::<usize>() % 2 == 0
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.degree()).filter(|&i| self.apply(i) != i).collect()
    }
}

impl GroupElement for Perm {
    /// `(self · other)(x) = self(other(x))`.
    fn mul(&self, other: &Self) -> Self {
        let mut img = IDENT;
        for (i, v) in img.iter_mut().enumerate() {
            *v = self.img[other.img[i] as usize];
        }
        Perm { n: self.n.max(other.n), img }
    }
}

impl fmt::Display for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cs = self.cycles();
        if cs.is_empty() {
            return write!(f, "()");
        }
        for c in cs {
            let pts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", pts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Perm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Lengths of the nontrivial cycles, largest first. Written like `2^4` or
/// `3 2^2`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Serialize, Deserialize)]
pub struct CycleType(Vec<usize>);

impl CycleType {
    pub fn new(mut lengths: Vec<usize>) -> Self {
        lengths.retain(|&l| l > 1);
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        Self(lengths)
    }

    pub fn lengths(&self) -> &[usize] {
        &self.0
    }

    pub fn parse(s: &str) -> Result<Self> {
        let mut lengths = Vec::new();
        for tok in s.split([' ', '.', '*']).filter(|t| !t.is_empty()) {
            let bad = || Error::Invalid(format!("bad cycle type `{s}`"));
            let (len, mult): (usize, usize) = match tok.split_once('^') {
                Some((a, b)) => (a.parse().map_err(|_| bad())?, b.parse().map_err(|_| bad())?),
                None => (tok.parse().map_err(|_| bad())?, 1usize),
            };
            lengths.extend(std::iter::repeat_n(len, mult));
        }
        Ok(Self::new(lengths))
    }
}

impl fmt::Display for CycleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let l = self.0[i];
            let k = self.0[i..].iter().take_while(|&&x| x == l).count();
            parts.push(if k == 1 { l.to_string() } else { format!("{l}^{k}") });
            i += k;
        }
        write!(f, "{}", parts.join(" "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum PermGroupKind {
    Symmetric,
    Alternating,
    Generated,
}

/// A permutation group. Symmetric and alternating groups enumerate their
/// elements directly; other groups use breadth-first closure.
#[derive(Debug, Clone)]
pub struct PermGroup {
    degree: usize,
    kind: PermGroupKind,
    gens: Vec<Perm>,
    elements: OnceLock<Vec<Perm>>,
}

impl PermGroup {
    pub fn new(degree: usize, gens: Vec<Perm>) -> Result<Self> {
        if degree > MAX_POINTS {
            return Err(Error::Invalid(format!("degree {degree} exceeds {MAX_POINTS}")));
        }
        if let Some(g) = gens.iter().find(|g| g.degree() > degree) {
            return Err(Error::Invalid(format!("generator {g} moves points beyond {degree}")));
        }
        Ok(Self { degree, kind: PermGroupKind::Generated, gens, elements: OnceLock::new() })
    }

    pub fn symmetric(n: usize) -> Self {
        let mut gens = Vec::new();
        if n >= 2 {
            gens.push(Perm::from_cycles(n, &[vec![1, 2]]).unwrap());
        }
        if n >= 3 {
            gens.push(Perm::from_cycles(n, &[(1..=n).collect()]).unwrap());
        }
        Self { degree: n, kind: PermGroupKind::Symmetric, gens, elements: OnceLock::new() }
    }

    pub fn alternating(n: usize) -> Self {
        let gens = (3..=n).map(|k| Perm::from_cycles(n, &[vec![1, 2, k]]).unwrap()).collect();
        Self { degree: n, kind: PermGroupKind::Alternating, gens, elements: OnceLock::new() }
    }

    /// A group known by its full element list (e.g. a normalizer).
    pub fn from_elements(degree: usize, elements: Vec<Perm>) -> Self {
        let cell = OnceLock::new();
        let gens = greedy_generators(&elements);
        cell.set(elements).ok();
        Self { degree, kind: PermGroupKind::Generated, gens, elements: cell }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn kind(&self) -> PermGroupKind {
        self.kind
    }

    pub fn generators(&self) -> &[Perm] {
        &self.gens
    }

    pub fn elements(&self, budget: usize) -> Result<&[Perm]> {
        if let Some(e) = self.elements.get() {
            return Ok(e);
        }
        let elems = match self.kind {
            PermGroupKind::Symmetric => enumerate_sn(self.degree, false, budget)?,
            PermGroupKind::Alternating => enumerate_sn(self.degree, true, budget)?,
            PermGroupKind::Generated => closure(&Perm::identity(self.degree), &self.gens, budget)?,
        };
        Ok(self.elements.get_or_init(|| elems))
    }

    pub fn order(&self, budget: usize) -> Result<usize> {
        Ok(self.elements(budget)?.len())
    }

    pub fn contains(&self, p: &Perm, budget: usize) -> Result<bool> {
        if p.degree() > self.degree && p.support().iter().any(|&x| x >= self.degree) {
            return Ok(false);
        }
        Ok(match self.kind {
            PermGroupKind::Symmetric => true,
            PermGroupKind::Alternating => p.is_even(),
            PermGroupKind::Generated => {
                let mut q = *p;
                q.n = self.degree as u8;
                self.elements(budget)?.contains(&q)
            }
        })
    }

    /// Checks `sub ≤ self` generator by generator.
    pub fn check_subgroup(&self, sub: &PermGroup, budget: usize) -> Result<()> {
        for g in sub.generators() {
            if !self.contains(g, budget)? {
                return Err(Error::NotSubgroup(format!("{g} is not in the ambient group")));
            }
        }
        Ok(())
    }

    /// Orbits on points, each sorted, ordered by least point.
    pub fn orbits(&self) -> Vec<Vec<usize>> {
        orbits(self.degree, &self.gens)
    }
}

/// Orbits of the group generated by `gens` on `0..n`.
pub fn orbits(n: usize, gens: &[Perm]) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut orb = vec![s];
        seen[s] = true;
        let mut i = 0;
        while i < orb.len() {
            let x = orb[i];
            i += 1;
            for g in gens {
                let y = g.apply(x);
                if !seen[y] {
                    seen[y] = true;
                    orb.push(y);
                }
            }
        }
        orb.sort_unstable();
        out.push(orb);
    }
    out
}

fn greedy_generators(elements: &[Perm]) -> Vec<Perm> {
    let Some(first) = elements.first() else {
        return Vec::new();
    };
    let id = Perm::identity(first.degree());
    let mut gens = Vec::new();
    let mut current: HashSet<Perm> = HashSet::from([id]);
    for e in elements {
        if current.contains(e) {
            continue;
        }
        gens.push(*e);
        // extend the closure from what we already have
        let mut frontier: Vec<Perm> = current.iter().copied().collect();
        while let Some(x) = frontier.pop() {
            for g in &gens {
                let y = x.mul(g);
                if current.insert(y) {
                    frontier.push(y);
                }
            }
        }
        if current.len() == elements.len() {
            break;
        }
    }
    gens
}

/// All permutations of `0..n` (only the even ones if `even_only`), in
/// lexicographic order of image lists.
fn enumerate_sn(n: usize, even_only: bool, budget: usize) -> Result<Vec<Perm>> {
    let total: usize = (1..=n).product::<usize>() / if even_only && n >= 2 { 2 } else { 1 };
    if total > budget {
        return Err(Error::Budget(format!("group of order {total} exceeds budget {budget}")));
    }
    let mut out = Vec::with_capacity(total);
    let mut a: Vec<u8> = (0..n as u8).collect();
    loop {
        let mut img = IDENT;
        img[..n].copy_from_slice(&a);
        let p = Perm { n: n as u8, img };
        if !even_only || p.is_even() {
            out.push(p);
        }
        // next permutation
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| a[i] < a[i + 1]) else {
            break;
        };
        let j = (i + 1..n).rev().find(|&j| a[j] > a[i]).unwrap();
        a.swap(i, j);
        a[i + 1..].reverse();
    }
    Ok(out)
}

/// Invariants of a subgroup (given by its elements) preserved under
/// conjugation in the symmetric group: sorted cycle types and orbit sizes.
pub fn conjugacy_signature(n: usize, elements: &[Perm]) -> (Vec<CycleType>, Vec<usize>) {
    let mut types: Vec<CycleType> = elements.iter().map(Perm::cycle_type).collect();
    types.sort();
    let mut sizes: Vec<usize> = orbits(n, elements).iter().map(Vec::len).collect();
    sizes.sort_unstable();
    (types, sizes)
}

/// Elements of `g_elems` normalizing the subgroup with generators `h_gens`
/// and element set `h_set`.
pub fn normalizer_elements(g_elems: &[Perm], h_gens: &[Perm], h_set: &HashSet<Perm>) -> Vec<Perm> {
    g_elems.iter().filter(|g| h_gens.iter().all(|h| h_set.contains(&g.conjugate(h)))).copied().collect()
}

/// `N_G(H)`.
pub fn normalizer(g: &PermGroup, h: &PermGroup, budget: usize) -> Result<PermGroup> {
    g.check_subgroup(h, budget)?;
    let h_set: HashSet<Perm> = h.elements(budget)?.iter().map(|p| with_degree(p, g.degree)).collect();
    let h_gens: Vec<Perm> = h.generators().iter().map(|p| with_degree(p, g.degree)).collect();
    let elems = normalizer_elements(g.elements(budget)?, &h_gens, &h_set);
    Ok(PermGroup::from_elements(g.degree, elems))
}

pub(crate) fn with_degree(p: &Perm, n: usize) -> Perm {
    let mut q = *p;
    q.n = n as u8;
    q
}

/// Finds `x ∈ G` with `x H1 x⁻¹ = H2`.
pub fn are_conjugate(g: &PermGroup, h1: &PermGroup, h2: &PermGroup, budget: usize) -> Result<Option<Perm>> {
    g.check_subgroup(h1, budget)?;
    g.check_subgroup(h2, budget)?;
    let n = g.degree();
    let e1: Vec<Perm> = h1.elements(budget)?.iter().map(|p| with_degree(p, n)).collect();
    let e2: Vec<Perm> = h2.elements(budget)?.iter().map(|p| with_degree(p, n)).collect();
    let gens1: Vec<Perm> = h1.generators().iter().map(|p| with_degree(p, n)).collect();
    Ok(conjugating_element(g.elements(budget)?, n, &e1, &gens1, &e2))
}

/// Signature filter, then a search through `g_elems`.
pub fn conjugating_element(g_elems: &[Perm], n: usize, e1: &[Perm], gens1: &[Perm], e2: &[Perm]) -> Option<Perm> {
    if e1.len() != e2.len() || conjugacy_signature(n, e1) != conjugacy_signature(n, e2) {
        return None;
    }
    let set2: HashSet<Perm> = e2.iter().copied().collect();
    g_elems.iter().find(|x| gens1.iter().all(|h| set2.contains(&x.conjugate(h)))).copied()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let p = Perm::parse(8, "(1,2)(3,4)(5,6)(7,8)").unwrap();
        assert_eq!(p.to_string(), "(1,2)(3,4)(5,6)(7,8)");
        assert_eq!(p.cycle_type().to_string(), "2^4");
        assert!(p.is_involution() && p.is_even());
        assert!(Perm::parse(3, "(1,4)").is_err());
        assert!(Perm::parse(4, "(1,2)(2,3)").is_err());
        assert_eq!(Perm::parse(4, "()").unwrap(), Perm::identity(4));
        assert_eq!(CycleType::parse("2^2 3").unwrap().to_string(), "3 2^2");
    }

    #[test]
    fn composition_convention() {
        let a = Perm::parse(3, "(1,2)").unwrap();
        let b = Perm::parse(3, "(2,3)").unwrap();
        // a(b(1)) = a(1) = 2, a(b(2)) = a(3) = 3, a(b(3)) = a(2) = 1
        assert_eq!(a.mul(&b), Perm::parse(3, "(1,2,3)").unwrap());
        assert_eq!(b.conjugate(&a), Perm::parse(3, "(1,3)").unwrap());
    }

    #[test]
    fn small_group_orders() {
        assert_eq!(PermGroup::symmetric(5).order(1000).unwrap(), 120);
        assert_eq!(PermGroup::alternating(5).order(1000).unwrap(), 60);
        let g = PermGroup::new(5, PermGroup::alternating(5).generators().to_vec()).unwrap();
        assert_eq!(g.order(1000).unwrap(), 60);
        assert!(PermGroup::symmetric(8).order(1000).is_err());
    }

    #[test]
    fn normalizer_of_whole_group() {
        let s4 = PermGroup::symmetric(4);
        let n = normalizer(&s4, &s4, 100).unwrap();
        assert_eq!(n.order(100).unwrap(), 24);
        let a4 = PermGroup::new(4, PermGroup::alternating(4).generators().to_vec()).unwrap();
        assert_eq!(normalizer(&a4, &a4, 100).unwrap().order(100).unwrap(), 12);
    }

    #[test]
    fn conjugacy_of_transposition_subgroups() {
        let s4 = PermGroup::symmetric(4);
        let h1 = PermGroup::new(4, vec![Perm::parse(4, "(1,2)").unwrap()]).unwrap();
        let h2 = PermGroup::new(4, vec![Perm::parse(4, "(3,4)").unwrap()]).unwrap();
        let h3 = PermGroup::new(4, vec![Perm::parse(4, "(1,2)(3,4)").unwrap()]).unwrap();
        let x = are_conjugate(&s4, &h1, &h2, 100).unwrap().unwrap();
        assert_eq!(x.conjugate(&h1.generators()[0]), h2.generators()[0]);
        assert!(are_conjugate(&s4, &h1, &h3, 100).unwrap().is_none());
    }

    #[test]
    fn subgroup_check() {
        let a4 = PermGroup::alternating(4);
        let h = PermGroup::new(4, vec![Perm::parse(4, "(1,2)").unwrap()]).unwrap();
        assert!(matches!(normalizer(&a4, &h, 100), Err(Error::NotSubgroup(_))));
    }
}
