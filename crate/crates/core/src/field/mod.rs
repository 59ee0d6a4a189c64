//! Sampled 2D fields, radial profiles and the discrete norms used by the
//! verification checks.

mod grid;
mod polar;
mod radial;
mod scalar;
pub mod snapshot;
mod sobolev;

pub use grid::{Grid2, Nesting};
pub use polar::{to_polar, to_polar_with_radius, PolarTable};
pub use radial::RadialProfile;
pub use scalar::ScalarField;
pub use sobolev::{l2_norm, sobolev_norm};
