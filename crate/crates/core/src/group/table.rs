use std::collections::{HashMap, HashSet};

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use super::finite::{closure, GroupElement};
use crate::error::{Error, Result};

/// A subgroup as a sorted list of element indices.
pub type Subset = Vec<u32>;

/// A finite group stored as a full Cayley table over element indices.
#[derive(Debug, Clone)]
pub struct TableGroup<E> {
    elements: Vec<E>,
    index: HashMap<E, u32>,
    table: Vec<u32>,
    inverse: Vec<u32>,
}

impl<E: GroupElement> TableGroup<E> {
    /// Closes `gens` under the element law, tabulates it and spot-checks
    /// associativity on random triples.
    pub fn from_generators(identity: &E, gens: &[E], budget: usize) -> Result<Self> {
        let elements = closure(identity, gens, budget)?;
        let index: HashMap<E, u32> = elements.iter().enumerate().map(|(i, e)| (e.clone(), i as u32)).collect();
        let n = elements.len();
        let mut table = vec![0u32; n * n];
        for (i, a) in elements.iter().enumerate() {
            for (j, b) in elements.iter().enumerate() {
                let p = a.mul(b);
                table[i * n + j] = *index.get(&p).ok_or_else(|| Error::Invalid("element law does not close".into()))?;
            }
        }
        let mut inverse = vec![u32::MAX; n];
        for i in 0..n {
            inverse[i] = (0..n as u32)
                .find(|&j| table[i * n + j as usize] == 0)
                .ok_or_else(|| Error::Invalid("element without inverse".into()))?;
        }
        let g = Self { elements, index, table, inverse };
        let mut rng = StdRng::seed_from_u64(0x5eed);
        for _ in 0..2000.min(n * n * n) {
            let (a, b, c) = (rng.gen_range(0..n as u32), rng.gen_range(0..n as u32), rng.gen_range(0..n as u32));
            if g.mul(g.mul(a, b), c) != g.mul(a, g.mul(b, c)) {
                return Err(Error::Invalid(format!("element law is not associative at {a}, {b}, {c}")));
            }
        }
        for i in 0..n as u32 {
            if g.mul(0, i) != i || g.mul(i, 0) != i || g.mul(g.inverse[i as usize], i) != 0 {
                return Err(Error::Invalid("identity or inverse law fails".into()));
            }
        }
        Ok(g)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn element(&self, i: u32) -> &E {
        &self.elements[i as usize]
    }

    pub fn index_of(&self, e: &E) -> Option<u32> {
        self.index.get(e).copied()
    }

    pub fn identity(&self) -> u32 {
        0
    }

    #[inline]
    pub fn mul(&self, a: u32, b: u32) -> u32 {
        self.table[a as usize * self.order() + b as usize]
    }

    pub fn inv(&self, a: u32) -> u32 {
        self.inverse[a as usize]
    }

    pub fn conjugate(&self, x: u32, a: u32) -> u32 {
        self.mul(self.mul(x, a), self.inv(x))
    }

    pub fn all(&self) -> Subset {
        (0..self.order() as u32).collect()
    }

    /// Subgroup generated by `gens`.
    pub fn generate(&self, gens: &[u32]) -> Subset {
        let mut seen = HashSet::from([0u32]);
        let mut out = vec![0u32];
        let mut i = 0;
        while i < out.len() {
            let a = out[i];
            i += 1;
            for &g in gens {
                let p = self.mul(a, g);
                if seen.insert(p) {
                    out.push(p);
                }
            }
        }
        out.sort_unstable();
        out
    }

    pub fn center_of(&self, h: &[u32]) -> Subset {
        h.iter().copied().filter(|&z| h.iter().all(|&x| self.mul(x, z) == self.mul(z, x))).collect()
    }

    pub fn is_normal_in(&self, h: &[u32], g: &[u32]) -> bool {
        let hs: HashSet<u32> = h.iter().copied().collect();
        g.iter().all(|&x| h.iter().all(|&a| hs.contains(&self.conjugate(x, a))))
    }

    pub fn conjugate_subset(&self, x: u32, h: &[u32]) -> Subset {
        let mut out: Subset = h.iter().map(|&a| self.conjugate(x, a)).collect();
        out.sort_unstable();
        out
    }

    pub fn are_conjugate_in(&self, h1: &[u32], h2: &[u32], g: &[u32]) -> Option<u32> {
        g.iter().copied().find(|&x| self.conjugate_subset(x, h1) == h2)
    }

    pub fn is_elementary_abelian(&self, h: &[u32]) -> bool {
        h.iter().all(|&a| self.mul(a, a) == 0) && self.center_of(h).len() == h.len()
    }

    /// All elementary abelian subgroups of `g` of order `2^rank`.
    pub fn elementary_abelian_subgroups(&self, g: &[u32], rank: usize) -> Vec<Subset> {
        let involutions: Vec<u32> = g.iter().copied().filter(|&a| a != 0 && self.mul(a, a) == 0).collect();
        let mut level: Vec<Subset> = vec![vec![0]];
        for _ in 0..rank {
            let mut seen: HashSet<Subset> = HashSet::new();
            for s in &level {
                for &c in &involutions {
                    if s.binary_search(&c).is_err() && s.iter().all(|&x| self.mul(x, c) == self.mul(c, x)) {
                        let mut t: Subset = s.iter().flat_map(|&x| [x, self.mul(x, c)]).collect();
                        t.sort_unstable();
                        seen.insert(t);
                    }
                }
            }
            level = seen.into_iter().collect();
            level.sort();
        }
        level
    }
}
