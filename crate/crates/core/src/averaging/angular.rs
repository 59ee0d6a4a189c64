use num_complex::Complex64;
use rayon::prelude::*;
use std::f64::consts::PI;

use super::AveragingParams;
use crate::engine::{main_term_point, EngineConfig, EngineKind, PhaseContext, Spectrum};
use crate::error::{Error, Result};
use crate::fft::linear_convolve_same;
use crate::field::{Grid2, ScalarField};
use crate::phantom::rotate_field;
use crate::special::bessel_j0;
use crate::summation::{pairwise_sum_by, sequential_sum_by};

fn check_inputs(q: &ScalarField, lambda: f64, out: &Grid2, cfg: &EngineConfig) -> Result<()> {
    PhaseContext::new([0.0, 0.0], lambda)?;
    cfg.validate()?;
    if !out.inside(q.grid()) {
        return Err(Error::GridMismatch("output grid leaves the input hull".into()));
    }
    cfg.check_resolution(q.grid(), lambda)
}

/// `q` times the trapezoid weights, the input of every quadrature convolution.
fn weighted(q: &ScalarField) -> Vec<Complex64> {
    let g = q.grid();
    q.samples()
        .iter()
        .enumerate()
        .map(|(n, v)| v * g.trapezoid_weight(n % g.nx(), n / g.nx()))
        .collect()
}

/// Quadrature convolution of `q` with `(lambda/pi) h^2 k(dx, dy)` on the input
/// lattice, restricted to `out`.
fn quadrature_convolution<K>(q: &ScalarField, lambda: f64, out: &Grid2, kernel: K) -> Result<ScalarField>
where
    K: Fn(isize, isize) -> Complex64,
{
    let g = q.grid();
    let h = g.spacing();
    let scale = lambda / PI * h * h;
    let conv = linear_convolve_same(&weighted(q), g.nx(), g.ny(), |dx, dy| scale * kernel(dx, dy));
    Ok(ScalarField::new(*g, conv)?.restrict_to(out))
}

/// Rotation-averaged main term at every node of `out`.
///
/// Averaging `T^lambda[q o R_{x,theta}](x)` over `theta` turns the chirp into the
/// radial kernel `(lambda/pi) J0(lambda |z - x|^2)`, applied here by FFT
/// convolution (quadrature engines) or as the multiplier `J0(|xi|^2 / (4 lambda))`
/// (spectral engine).
pub fn angular_average_recon(
    q: &ScalarField,
    lambda: f64,
    out: &Grid2,
    p: &AveragingParams,
    cfg: &EngineConfig,
) -> Result<ScalarField> {
    p.validate()?;
    check_inputs(q, lambda, out, cfg)?;
    match cfg.engine {
        EngineKind::Spectral => {
            let spec = Spectrum::new(q);
            let f = spec.apply(|x1, x2| Complex64::new(bessel_j0((x1 * x1 + x2 * x2) / (4.0 * lambda)), 0.0));
            Ok(f.restrict_to(out))
        }
        _ => {
            let h2 = q.grid().spacing().powi(2);
            quadrature_convolution(q, lambda, out, |dx, dy| {
                Complex64::new(bessel_j0(lambda * h2 * (dx * dx + dy * dy) as f64), 0.0)
            })
        }
    }
}

/// Uniform-angle quadrature over `n_angles` rotations, for validating
/// [`angular_average_recon`].
///
/// Rotating `q` about `x` by `theta` is the same as rotating the chirp by
/// `-theta`, so each angle contributes the kernel
/// `e^{i lambda |d|^2 cos(2 (alpha - theta))}` (spectral: the rotated symbol).
/// Kernels are averaged first, then applied once.
pub fn angular_average_reference(
    q: &ScalarField,
    lambda: f64,
    out: &Grid2,
    p: &AveragingParams,
    cfg: &EngineConfig,
) -> Result<ScalarField> {
    p.validate()?;
    check_inputs(q, lambda, out, cfg)?;
    let n = p.n_angles;
    let dirs: Vec<(f64, f64)> = (0..n).map(|k| (2.0 * 2.0 * PI * k as f64 / n as f64).sin_cos()).collect();
    // cos(2(alpha - theta)) = cos(2 alpha) cos(2 theta) + sin(2 alpha) sin(2 theta)
    let average = |c2: f64, s2: f64, a: f64| {
        sequential_sum_by(n, |k| {
            let (st, ct) = dirs[k];
            Complex64::from_polar(1.0, a * (c2 * ct + s2 * st))
        }) / n as f64
    };
    match cfg.engine {
        EngineKind::Spectral => {
            let spec = Spectrum::new(q);
            let f = spec.apply(|x1, x2| {
                let r2 = x1 * x1 + x2 * x2;
                if r2 == 0.0 {
                    return Complex64::new(1.0, 0.0);
                }
                average((x1 * x1 - x2 * x2) / r2, 2.0 * x1 * x2 / r2, -r2 / (4.0 * lambda))
            });
            Ok(f.restrict_to(out))
        }
        _ => {
            let g = q.grid();
            let a = lambda * g.spacing().powi(2);
            // The kernel is even in (dx, dy): tabulate the half plane dy >= 0.
            let (rx, ny) = (g.nx() as isize - 1, g.ny());
            let side = (2 * rx + 1) as usize;
            let table: Vec<Complex64> = (0..side * ny)
                .into_par_iter()
                .map(|m| {
                    let dx = (m % side) as f64 - rx as f64;
                    let dy = (m / side) as f64;
                    let r2 = dx * dx + dy * dy;
                    if r2 == 0.0 {
                        return Complex64::new(1.0, 0.0);
                    }
                    average((dx * dx - dy * dy) / r2, 2.0 * dx * dy / r2, a * r2)
                })
                .collect();
            quadrature_convolution(q, lambda, out, |dx, dy| {
                let (dx, dy) = if dy < 0 { (-dx, -dy) } else { (dx, dy) };
                table[dy as usize * side + (dx + rx) as usize]
            })
        }
    }
}

/// Radial-kernel quadrature `(lambda/pi) h^2 sum w q J0(lambda |z - x|^2)` at one point.
pub fn angular_average_point(q: &ScalarField, ctx: &PhaseContext, cfg: &EngineConfig) -> Result<Complex64> {
    crate::engine::check_resolution(q.grid(), ctx.lambda)?;
    let g = q.grid();
    let (nx, h) = (g.nx(), g.spacing());
    let s = q.samples();
    let term = |n: usize| {
        if s[n] == Complex64::new(0.0, 0.0) {
            return s[n];
        }
        let z = g.node(n % nx, n / nx);
        let r2 = (z[0] - ctx.x[0]).powi(2) + (z[1] - ctx.x[1]).powi(2);
        s[n] * g.trapezoid_weight(n % nx, n / nx) * bessel_j0(ctx.lambda * r2)
    };
    let sum = if cfg.pairwise { pairwise_sum_by(g.len(), term) } else { sequential_sum_by(g.len(), term) };
    Ok(sum * (ctx.lambda / PI * h * h))
}

/// The literal definition: resample `q` rotated about `x` for each angle and
/// run the point quadrature. Slow; interpolation error included.
pub fn angular_average_point_literal(
    q: &ScalarField,
    ctx: &PhaseContext,
    n_angles: usize,
    cfg: &EngineConfig,
) -> Result<Complex64> {
    let vals = (0..n_angles)
        .map(|k| {
            let theta = 2.0 * PI * k as f64 / n_angles as f64;
            main_term_point(&rotate_field(q, ctx.x, theta), ctx, cfg)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(crate::summation::pairwise_sum(&vals) / n_angles as f64)
}
