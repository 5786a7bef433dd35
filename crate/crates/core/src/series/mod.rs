pub mod descriptor;
pub mod detect;
pub mod poincare;
pub mod presented;

pub use descriptor::{series_of, subalgebra_freeness, PresentedRing, RingDescriptor};
pub use detect::{
    einfty_series_check, verify_detection, DetectionReport, DetectionSequence, EinftyReading, EinftyReport,
};
pub use poincare::PoincareSeries;
pub use presented::{image_subring_check, presented_ring, s8_ring_map_audit, solve_generator_image, verify_ring_map};
