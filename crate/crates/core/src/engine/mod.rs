//! Evaluators of the quadratic-phase main term
//! `T^lambda[q](x) = (lambda/pi) * integral of e^{i lambda phi_x(z)} q(z) dz`.

mod config;
mod naive;
mod phase;
mod separable;
mod spectral;

pub use config::{check_resolution, required_spacing, EngineConfig, EngineKind};
pub use phase::{complex_phase, real_phase, PhaseContext};
pub use spectral::{chirp_factors, Spectrum};

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::field::{Grid2, ScalarField};

/// Main term at a single point by trapezoid quadrature over `q`'s grid.
///
/// Always a quadrature, so the resolution rule applies whatever engine
/// `cfg` names; only the summation order is taken from it.
pub fn main_term_point(q: &ScalarField, ctx: &PhaseContext, cfg: &EngineConfig) -> Result<Complex64> {
    check_resolution(q.grid(), ctx.lambda)?;
    Ok(naive::quadrature_point(q, ctx, cfg.pairwise))
}

/// Main term at every node of `out`, which must lie within `q`'s hull.
pub fn main_term_grid(q: &ScalarField, lambda: f64, out: &Grid2, cfg: &EngineConfig) -> Result<ScalarField> {
    PhaseContext::new([0.0, 0.0], lambda)?;
    cfg.validate()?;
    if !out.inside(q.grid()) {
        return Err(Error::GridMismatch("output grid leaves the input hull".into()));
    }
    cfg.check_resolution(q.grid(), lambda)?;
    match cfg.engine {
        EngineKind::Naive => naive::naive_grid(q, lambda, out, cfg.pairwise),
        EngineKind::Separable => separable::separable_grid(q, lambda, out, cfg.pairwise),
        EngineKind::Spectral => Ok(spectral::spectral_grid(q, lambda, out)),
    }
}
