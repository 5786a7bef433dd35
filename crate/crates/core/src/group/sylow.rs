//! The order-256 group `UT_3(4):⟨g, A⟩`.
//!
//! `UT_3(4)` is the group of upper unitriangular 3×3 matrices over the
//! four-element field, written as triples `(α, β, γ)` for the entries
//! `(1,2)`, `(1,3)`, `(2,3)`. The field is `{0, 1, ω, ω+1}` with
//! `ω² = ω + 1`, encoded as two bits (bit 1 is the `ω` coefficient).
//! `g` squares every entry and `A` sends `(α, β, γ)` to `(γ, β + αγ, α)`;
//! the two commute, so `⟨g, A⟩ ≅ 2²`.

use serde::Serialize;

use super::finite::GroupElement;
use super::table::{Subset, TableGroup};
use crate::error::Result;

pub type F4 = u8;

pub const OMEGA: F4 = 2;

pub fn f4_mul(a: F4, b: F4) -> F4 {
    const T: [[u8; 4]; 4] = [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]];
    T[a as usize][b as usize]
}

pub fn f4_square(a: F4) -> F4 {
    f4_mul(a, a)
}

/// `(α, β, γ)` together with the exponents of `g` and `A`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SylowElement {
    pub alpha: F4,
    pub beta: F4,
    pub gamma: F4,
    pub g: bool,
    pub a: bool,
}

impl SylowElement {
    pub const IDENTITY: Self = Self::unitriangular(0, 0, 0);

    pub const fn unitriangular(alpha: F4, beta: F4, gamma: F4) -> Self {
        Self { alpha, beta, gamma, g: false, a: false }
    }

    pub const fn outer(g: bool, a: bool) -> Self {
        Self { alpha: 0, beta: 0, gamma: 0, g, a }
    }

    fn twist(self, g: bool, a: bool) -> Self {
        let mut u = self;
        if g {
            u = Self::unitriangular(f4_square(u.alpha), f4_square(u.beta), f4_square(u.gamma));
        }
        if a {
            u = Self::unitriangular(u.gamma, u.beta ^ f4_mul(u.alpha, u.gamma), u.alpha);
        }
        u
    }
}

impl GroupElement for SylowElement {
    /// `(u, s)(u', s') = (u · s(u'), s + s')`, with the unitriangular product
    /// `(α, β, γ)(α', β', γ') = (α + α', β + β' + αγ', γ + γ')`.
    fn mul(&self, other: &Self) -> Self {
        let v = other.twist(self.g, self.a);
        Self {
            alpha: self.alpha ^ v.alpha,
            beta: self.beta ^ v.beta ^ f4_mul(self.alpha, v.gamma),
            gamma: self.gamma ^ v.gamma,
            g: self.g ^ other.g,
            a: self.a ^ other.a,
        }
    }
}

pub const T: SylowElement = SylowElement::unitriangular(0, OMEGA, 0);
pub const Z: SylowElement = SylowElement::unitriangular(0, 1, 0);
pub const G: SylowElement = SylowElement::outer(true, false);
pub const A: SylowElement = SylowElement::outer(false, true);

pub fn sylow2_ly_model() -> Result<TableGroup<SylowElement>> {
    let gens = [
        SylowElement::unitriangular(1, 0, 0),
        SylowElement::unitriangular(OMEGA, 0, 0),
        SylowElement::unitriangular(0, 0, 1),
        SylowElement::unitriangular(0, 0, OMEGA),
        G,
        A,
    ];
    TableGroup::from_generators(&SylowElement::IDENTITY, &gens, 1024)
}

/// Outcome of the structural checks on the model.
#[derive(Debug, Clone, Serialize)]
pub struct SylowReport {
    pub order: usize,
    pub ut_center_order: usize,
    pub ut_center_is_t_z: bool,
    pub center_order: usize,
    pub center_is_z: bool,
    /// Elementary abelian subgroups of order 16 in `UT_3(4):⟨g⟩`.
    pub rank4_in_ut_g: usize,
    pub rank4_in_ut_g_all_normal: bool,
    pub rank4_in_ut_g_are_the_two_known: bool,
    pub fused_in_ut_ga: bool,
    pub rank4_in_full: usize,
    pub fused_in_full: bool,
    pub a_t_z_elementary_abelian_8: bool,
    pub g_a_z_elementary_abelian_8: bool,
}

impl SylowReport {
    pub fn all_hold(&self) -> bool {
        self.order == 256
            && self.ut_center_order == 4
            && self.ut_center_is_t_z
            && self.center_order == 2
            && self.center_is_z
            && self.rank4_in_ut_g == 2
            && self.rank4_in_ut_g_all_normal
            && self.rank4_in_ut_g_are_the_two_known
            && self.fused_in_ut_ga
            && self.rank4_in_full == 2
            && self.fused_in_full
            && self.a_t_z_elementary_abelian_8
            && self.g_a_z_elementary_abelian_8
    }
}

pub fn check_sylow_model() -> Result<SylowReport> {
    let grp = sylow2_ly_model()?;
    let ix = |e: &SylowElement| grp.index_of(e).expect("element of the model");
    let all = grp.all();
    let ut: Subset = all.iter().copied().filter(|&i| !grp.element(i).g && !grp.element(i).a).collect();
    let ut_g: Subset = all.iter().copied().filter(|&i| !grp.element(i).a).collect();
    let ut_ga: Subset = all.iter().copied().filter(|&i| grp.element(i).g == grp.element(i).a).collect();

    let ut_center = grp.center_of(&ut);
    let center = grp.center_of(&all);
    let two_known: Vec<Subset> = {
        let first: Subset = {
            let mut v: Subset = ut.iter().copied().filter(|&i| grp.element(i).gamma == 0).collect();
            v.sort_unstable();
            v
        };
        let second: Subset = {
            let mut v: Subset = ut.iter().copied().filter(|&i| grp.element(i).alpha == 0).collect();
            v.sort_unstable();
            v
        };
        let mut k = vec![first, second];
        k.sort();
        k
    };
    let r4_ut_g = grp.elementary_abelian_subgroups(&ut_g, 4);
    let r4_full = grp.elementary_abelian_subgroups(&all, 4);
    let fused = |sub: &[u32]| -> bool {
        two_known.len() == 2 && grp.are_conjugate_in(&two_known[0], &two_known[1], sub).is_some()
    };
    let atz = grp.generate(&[ix(&A), ix(&T), ix(&Z)]);
    let gaz = grp.generate(&[ix(&G), ix(&A), ix(&Z)]);
    Ok(SylowReport {
        order: grp.order(),
        ut_center_order: ut_center.len(),
        ut_center_is_t_z: ut_center == grp.generate(&[ix(&T), ix(&Z)]),
        center_order: center.len(),
        center_is_z: center == grp.generate(&[ix(&Z)]),
        rank4_in_ut_g: r4_ut_g.len(),
        rank4_in_ut_g_all_normal: r4_ut_g.iter().all(|h| grp.is_normal_in(h, &ut_g)),
        rank4_in_ut_g_are_the_two_known: r4_ut_g == two_known,
        fused_in_ut_ga: fused(&ut_ga),
        rank4_in_full: r4_full.len(),
        fused_in_full: fused(&all),
        a_t_z_elementary_abelian_8: atz.len() == 8 && grp.is_elementary_abelian(&atz),
        g_a_z_elementary_abelian_8: gaz.len() == 8 && grp.is_elementary_abelian(&gaz),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_axioms() {
        for a in 0..4u8 {
            for b in 0..4u8 {
                assert_eq!(f4_mul(a, b), f4_mul(b, a));
                for c in 0..4u8 {
                    assert_eq!(f4_mul(a, b ^ c), f4_mul(a, b) ^ f4_mul(a, c));
                    assert_eq!(f4_mul(f4_mul(a, b), c), f4_mul(a, f4_mul(b, c)));
                }
            }
        }
        assert_eq!(f4_mul(OMEGA, OMEGA), OMEGA ^ 1);
    }

    /// The triple law against explicit 3×3 matrix products over the field.
    #[test]
    fn unitriangular_law_matches_matrices() {
        fn mat(a: F4, b: F4, c: F4) -> [[F4; 3]; 3] {
            [[1, a, b], [0, 1, c], [0, 0, 1]]
        }
        fn matmul(x: [[F4; 3]; 3], y: [[F4; 3]; 3]) -> [[F4; 3]; 3] {
            let mut z = [[0; 3]; 3];
            for i in 0..3 {
                for j in 0..3 {
                    for k in 0..3 {
                        z[i][j] ^= f4_mul(x[i][k], y[k][j]);
                    }
                }
            }
            z
        }
        for u in 0..64u8 {
            for v in 0..64u8 {
                let x = SylowElement::unitriangular(u & 3, u >> 2 & 3, u >> 4);
                let y = SylowElement::unitriangular(v & 3, v >> 2 & 3, v >> 4);
                let p = x.mul(&y);
                let m = matmul(mat(x.alpha, x.beta, x.gamma), mat(y.alpha, y.beta, y.gamma));
                assert_eq!(mat(p.alpha, p.beta, p.gamma), m);
            }
        }
    }

    #[test]
    fn outer_automorphisms_commute_and_square_to_one() {
        assert_eq!(G.mul(&A), A.mul(&G));
        assert_eq!(A.mul(&A), SylowElement::IDENTITY);
        assert_eq!(G.mul(&G), SylowElement::IDENTITY);
    }
}
