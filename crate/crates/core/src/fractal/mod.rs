//! Bit doubling under parameter doubling and the limits it produces.

mod doubling;
mod limit;
mod stars;
mod superpose;

pub use doubling::{double_bits, scale_triangle, theorem2_verify, undouble, DoublingRun};
pub use limit::{limit_triangle, rescaled_iterates, RealTriangle, RescaledIterate};
pub use stars::{
    claim1_configuration, claim1_probe, dyadic, find_all_stars, find_stars, predicted_star,
    ratio_string, rescale, star_limit_check, Claim1Probe, ConvergenceReport, LineageStep,
    RationalPoint, StarRecord,
};
pub use superpose::{superpose, BACKGROUND, PALETTE};
