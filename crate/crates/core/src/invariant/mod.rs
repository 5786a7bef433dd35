pub mod action;
pub mod dickson;
pub mod hironaka;
pub mod module;
pub mod search;

pub use action::{FixedSpaces, GroupAction, PermutationFrame, SliceImages};
pub use dickson::{dickson, relative_dickson_top};
pub use hironaka::{
    expected_count, freeness_against, freeness_check, outside_span, secondary_invariants, validate_hsop,
    FreenessReport, HironakaDecomposition, HsopReport, SecondaryRun, ShortfallStep,
};
pub use module::{module_invariants, verify_module_invariants, GradedModule, ModuleInvariants};
