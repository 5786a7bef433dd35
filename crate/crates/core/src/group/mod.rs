//! Finite groups: matrix groups over the two-element field, permutation
//! groups, and groups given by a multiplication law.

pub mod ea2;
pub mod finite;
pub mod matrix;
pub mod named;
pub mod perm;
pub mod sylow;
pub mod table;

pub use ea2::{filter_by_cycle_type, maximal_ea2_subgroups, Ea2Class, ElementaryAbelian};
pub use finite::{closure, GroupElement};
pub use matrix::{MatF2, MatrixGroup};
pub use perm::{are_conjugate, normalizer, CycleType, Perm, PermGroup};
pub use table::TableGroup;

/// Default cap on closure sizes; large enough for `A_10`.
pub const DEFAULT_BUDGET: usize = 4_000_000;
