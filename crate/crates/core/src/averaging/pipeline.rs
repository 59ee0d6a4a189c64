use super::{angular_average_recon, mollify, radial_smooth, AveragingParams, MollifierSpec};
use crate::engine::EngineConfig;
use crate::error::{Error, Result};
use crate::field::{to_polar_with_radius, Grid2, RadialProfile, ScalarField};

/// `V0 .. V3`: the angular mean of `q` about `center`, then three radial
/// smoothings. The radius covers `2^{3/2}` times the farthest grid corner so
/// that `V3`'s support is never clipped.
pub fn v_pipeline(q: &ScalarField, center: [f64; 2], p: &AveragingParams) -> Result<Vec<RadialProfile>> {
    p.validate()?;
    let r_max = 2f64.powf(1.5) * q.grid().max_corner_distance(center);
    let v0 = to_polar_with_radius(q, center, r_max, p.n_radial, p.n_angles)?.angular_mean()?;
    let mut out = vec![v0];
    for _ in 0..3 {
        let next = radial_smooth(out.last().expect("nonempty"), p)?;
        out.push(next);
    }
    Ok(out)
}

/// Angular average followed by the mollifier. `m.sigma` must not undercut
/// the search grid, which starts at the output spacing.
pub fn combined_recon(
    q: &ScalarField,
    lambda: f64,
    out: &Grid2,
    p: &AveragingParams,
    m: &MollifierSpec,
    cfg: &EngineConfig,
) -> Result<ScalarField> {
    let grid = p.sigma_grid_for(out.spacing(), lambda);
    let limit = grid.first().copied().unwrap_or(out.spacing()).max(out.spacing());
    if m.sigma < limit * (1.0 - 1e-12) {
        return Err(Error::SigmaTooSmall { sigma: m.sigma, limit });
    }
    mollify(&angular_average_recon(q, lambda, out, p, cfg)?, m)
}
