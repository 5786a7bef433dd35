//! Built-in groups, addressable by name.

use super::ea2::ElementaryAbelian;
use super::matrix::{MatF2, MatrixGroup};
use super::perm::{Perm, PermGroup};
use crate::error::{Error, Result};

/// The matrix `A` generating `L_3(2) ⊂ L_4(2)` together with [`matrix_b`].
pub fn matrix_a() -> MatF2 {
    MatF2::from_rows(&[[1, 1, 1, 0], [1, 0, 1, 0], [1, 1, 0, 0], [1, 1, 0, 1]]).unwrap()
}

pub fn matrix_b() -> MatF2 {
    MatF2::from_rows(&[[0, 0, 1, 0], [0, 1, 0, 0], [1, 1, 1, 0], [1, 1, 0, 1]]).unwrap()
}

/// `L_3(2)` acting on `F_2[x1, y1, z1, w1]` through the transposes of `A`
/// and `B`.
pub fn l3_2_on_2_4() -> MatrixGroup {
    MatrixGroup::new(4, vec![matrix_a().transpose(), matrix_b().transpose()]).unwrap()
}

/// The three involutions on `F_2[w, t, z]` generating a `D_8`:
/// `z ↦ z+t`, `z ↦ z+w`, `t ↦ t+w`, other variables fixed.
pub fn d8_on_wtz() -> MatrixGroup {
    // variable i goes to column i, variables ordered w, t, z
    let z_to_z_plus_t = MatF2::from_rows(&[[1, 0, 0], [0, 1, 1], [0, 0, 1]]).unwrap();
    let z_to_z_plus_w = MatF2::from_rows(&[[1, 0, 1], [0, 1, 0], [0, 0, 1]]).unwrap();
    let t_to_t_plus_w = MatF2::from_rows(&[[1, 1, 0], [0, 1, 0], [0, 0, 1]]).unwrap();
    MatrixGroup::new(3, vec![z_to_z_plus_t, z_to_z_plus_w, t_to_t_plus_w]).unwrap()
}

/// `Ṽ_3`, the regular `(Z/2)^3 ⊂ A_8 ⊂ A_10`.
pub fn v3_tilde(degree: usize) -> ElementaryAbelian {
    let g = ["(1,2)(3,4)(5,6)(7,8)", "(1,3)(2,4)(5,7)(6,8)", "(1,5)(2,6)(3,7)(4,8)"];
    let gens: Vec<Perm> = g.iter().map(|s| Perm::parse(degree, s).unwrap()).collect();
    ElementaryAbelian::from_generators(degree, &gens).unwrap()
}

/// `M̃_3 ⊂ A_10`.
pub fn m3_tilde() -> ElementaryAbelian {
    let gens = [Perm::parse(10, "(1,3)(2,4)(5,6)(9,10)").unwrap(), Perm::parse(10, "(1,4)(2,3)(7,8)(9,10)").unwrap()];
    ElementaryAbelian::from_generators(10, &gens).unwrap()
}

/// `S_8` inside `A_10`, generated by `(i, i+1)(9, 10)`.
pub fn s8_in_a10() -> PermGroup {
    let gens = (1..8).map(|i| Perm::from_cycles(10, &[vec![i, i + 1], vec![9, 10]]).unwrap()).collect();
    PermGroup::new(10, gens).unwrap()
}

/// A named matrix group: `L3_2_on_2^4`, `D8_on_wtz`, `GL<n>_2`,
/// `trivial_<n>var`.
pub fn matrix_group(name: &str) -> Result<MatrixGroup> {
    match name {
        "L3_2_on_2^4" => Ok(l3_2_on_2_4()),
        "D8_on_wtz" => Ok(d8_on_wtz()),
        _ => {
            if let Some(n) = name.strip_prefix("GL").and_then(|r| r.strip_suffix("_2")) {
                if let Ok(n) = n.parse::<usize>() {
                    if (1..=super::matrix::MAX_DIM).contains(&n) {
                        return Ok(MatrixGroup::general_linear(n));
                    }
                }
            }
            if let Some(n) = name.strip_prefix("trivial_").and_then(|r| r.strip_suffix("var")) {
                if let Ok(n) = n.parse::<usize>() {
                    if (1..=super::matrix::MAX_DIM).contains(&n) {
                        return Ok(MatrixGroup::trivial(n));
                    }
                }
            }
            Err(Error::UnknownName(name.to_string()))
        }
    }
}

/// A named permutation group: `S<n>`, `A<n>`, `S8_in_A10`.
pub fn perm_group(name: &str) -> Result<PermGroup> {
    if name == "S8_in_A10" {
        return Ok(s8_in_a10());
    }
    let parse = |rest: &str| rest.parse::<usize>().ok().filter(|n| (1..=super::perm::MAX_POINTS).contains(n));
    if let Some(n) = name.strip_prefix('S').and_then(parse) {
        return Ok(PermGroup::symmetric(n));
    }
    if let Some(n) = name.strip_prefix('A').and_then(parse) {
        return Ok(PermGroup::alternating(n));
    }
    Err(Error::UnknownName(name.to_string()))
}
