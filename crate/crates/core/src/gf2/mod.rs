//! Exact arithmetic over the two-element field.

pub mod linalg;
pub mod monomial;
pub mod poly;
pub mod slice;
pub mod text;

pub use linalg::{row_dependencies, BitMatrix, BitVec, BitVectorSpace};
pub use monomial::{monomial_basis, weighted_monomial_basis, Monomial, MonomialIndexer};
pub use poly::Polynomial;
pub use slice::GradedSlice;
pub use text::Ring;
