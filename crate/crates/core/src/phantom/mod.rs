//! Test potentials: the five reconstruction phantoms plus analytic probes,
//! and rotation resampling.

mod presets;
mod render;
mod spec;

pub use presets::{PRESET_VERSION, SHEPP_LOGAN};
pub use render::{render_phantom, rotate_field};
pub use spec::{PhantomKind, PhantomSpec, Primitive};

#[cfg(test)]
mod tests;
