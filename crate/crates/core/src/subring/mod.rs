pub mod intersect;
pub mod pipeline;
pub mod presentation;
pub mod subalgebra;

pub use intersect::{first_difference, intersect_subalgebras, sum_matches, IntersectionReport};
pub use presentation::{
    integral_equation_check, GeneratedIntersection, ModulePresentation, ReducedGenerators, Symbols, Term,
};
pub use subalgebra::{solve_in_span, SpanTerm, Subalgebra};
