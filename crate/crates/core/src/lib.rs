//! Modular invariant theory over the two-element field.

pub mod error;
pub mod gf2;
pub mod group;
pub mod invariant;
pub mod series;
pub mod steenrod;
pub mod subring;

pub use error::{Error, Result};
