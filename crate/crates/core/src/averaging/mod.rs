//! Averaging procedures that accelerate convergence of the main term:
//! mollifier, angular average, radial smoothing `S_rad`, frequency average,
//! and their combinations.

mod angular;
mod freq;
mod mollifier;
mod params;
mod pipeline;
mod radial;

pub use angular::{angular_average_point, angular_average_point_literal, angular_average_recon, angular_average_reference};
pub use freq::{freq_average, freq_average_iterated, freq_average_recon, iterated_weights, SampledMap, MIN_SAMPLES};
pub use mollifier::{default_sigma_grid, mollify, sigma_from_lambda, MollifierSpec};
pub use params::AveragingParams;
pub use pipeline::{combined_recon, v_pipeline};
pub use radial::{radial_smooth, radial_smooth_with};
