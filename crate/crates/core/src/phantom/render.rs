use num_complex::Complex64;

use super::PhantomSpec;
use crate::error::{Error, Result};
use crate::field::{Grid2, ScalarField};

/// Samples the phantom at the grid nodes (no antialiasing). The grid hull
/// must contain the phantom's square domain.
pub fn render_phantom(spec: &PhantomSpec, grid: &Grid2) -> Result<ScalarField> {
    spec.validate()?;
    let hw = spec.half_width;
    let (o, e) = (grid.origin(), grid.end());
    let tol = 1e-12 * hw;
    if o[0] > -hw + tol || o[1] > -hw + tol || e[0] < hw - tol || e[1] < hw - tol {
        return Err(Error::Phantom {
            kind: spec.kind.name().into(),
            reason: format!("grid [{:?}, {:?}] does not cover the domain of half width {hw}", o, e),
        });
    }
    let prims = spec.resolved_primitives();
    let amp = spec.amplitude;
    ScalarField::from_fn(*grid, |z| {
        let mut v = Complex64::new(0.0, 0.0);
        for p in &prims {
            v += p.eval(z);
        }
        v * amp
    })
}

/// `g(z) = f(R_{center,theta}(z))`, with `R` the counter-clockwise rotation
/// by `theta` about `center`, resampled bilinearly on `f`'s own grid.
pub fn rotate_field(f: &ScalarField, center: [f64; 2], theta: f64) -> ScalarField {
    let (s, c) = theta.sin_cos();
    ScalarField::from_fn(*f.grid(), |z| {
        let (dx, dy) = (z[0] - center[0], z[1] - center[1]);
        f.sample_at([center[0] + c * dx - s * dy, center[1] + s * dx + c * dy])
    })
    .expect("bilinear resampling of finite samples is finite")
}
