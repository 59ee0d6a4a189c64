//! Numerical checks of the stationary-phase, mollifier and frequency
//! averaging estimates. Each returns a report with the measured numbers and
//! a pass flag; none of them panics on a failed check.

use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::averaging::{default_sigma_grid, freq_average, mollify, radial_smooth_with, MollifierSpec, SampledMap};
use crate::engine::{main_term_grid, main_term_point, required_spacing, EngineConfig, EngineKind, PhaseContext};
use crate::error::{Error, Result};
use crate::field::{sobolev_norm, Grid2, RadialProfile, ScalarField};

/// Default frequency ladder of the decay check.
pub const LAMBDA_LADDER: [f64; 5] = [10.0, 20.0, 40.0, 80.0, 160.0];

/// Least-squares slope of `ys` against `xs`.
pub fn ls_slope(xs: &[f64], ys: &[f64]) -> f64 {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let sxy: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let sxx: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    sxy / sxx
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SlopeReport {
    pub lambdas: Vec<f64>,
    pub sup_errors: Vec<f64>,
    /// `None` when `q` vanishes and the check is vacuous.
    pub slope: Option<f64>,
    pub threshold: f64,
    pub pass: bool,
}

/// Decay of `sup |T^lambda[q] - q|` along a frequency ladder, spectral engine.
/// Passes iff the log-log slope is at most `(1 - s_prime)/2 + 0.15`.
pub fn check_lemma_statphase(q: &ScalarField, s_prime: f64, lambdas: &[f64]) -> Result<SlopeReport> {
    if !(s_prime > 1.0 && s_prime < 3.0) {
        return Err(Error::InvalidParam(format!("s' must lie in (1, 3), got {s_prime}")));
    }
    if lambdas.len() < 2 {
        return Err(Error::InvalidParam("need at least two frequencies".into()));
    }
    let threshold = (1.0 - s_prime) / 2.0 + 0.15;
    if q.sup_norm() == 0.0 {
        return Ok(SlopeReport { lambdas: lambdas.to_vec(), sup_errors: vec![0.0; lambdas.len()], slope: None, threshold, pass: true });
    }
    let cfg = EngineConfig::new(EngineKind::Spectral);
    let sup_errors = lambdas
        .iter()
        .map(|&l| main_term_grid(q, l, q.grid(), &cfg)?.max_abs_diff(q))
        .collect::<Result<Vec<f64>>>()?;
    let xs: Vec<f64> = lambdas.iter().map(|l| l.ln()).collect();
    let ys: Vec<f64> = sup_errors.iter().map(|e| e.ln()).collect();
    let slope = ls_slope(&xs, &ys);
    Ok(SlopeReport { lambdas: lambdas.to_vec(), sup_errors, slope: Some(slope), threshold, pass: slope <= threshold })
}

/// `e^{-|z|^2}` on `[-8, 8]^2`, 256 nodes per side.
pub fn statphase_gaussian_probe() -> ScalarField {
    let g = Grid2::centered_square(8.0, 256).expect("valid grid");
    ScalarField::from_fn(g, |z| Complex64::new((-(z[0] * z[0] + z[1] * z[1])).exp(), 0.0)).expect("finite")
}

/// `(1 - |z|^2)^2` on the unit disc, 0 outside, on `[-2, 2]^2`: a compactly
/// supported probe with finite `H^{s'}` norm for every `s' < 5/2`.
pub fn statphase_bump_probe() -> ScalarField {
    let g = Grid2::centered_square(2.0, 256).expect("valid grid");
    ScalarField::from_fn(g, |z| Complex64::new((1.0 - z[0] * z[0] - z[1] * z[1]).max(0.0).powi(2), 0.0)).expect("finite")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DerivativeReport {
    pub t: f64,
    pub k: u32,
    pub finite_difference: f64,
    pub formula: f64,
    pub rel_error: f64,
    pub pass: bool,
}

fn trapezoid<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> f64 {
    let h = (b - a) / n as f64;
    let inner: f64 = (1..n).map(|i| f(a + i as f64 * h)).sum();
    h * (0.5 * (f(a) + f(b)) + inner)
}

fn simpson<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, n: usize) -> f64 {
    let n = n + n % 2;
    let h = (b - a) / n as f64;
    let mut s = f(a) + f(b);
    for i in 1..n {
        s += f(a + i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    s * h / 3.0
}

/// Compares the `(k+1)`-th derivative of `g = S_rad[f]` by central
/// differences against
/// `(2/t) f^(k)(t) - (2^{2-k/2}/t) f^(k)(t/sqrt 2) + ((4-2k)/t) int_{1/sqrt 2}^1 f^(k)(ts) s^{k-3} ds`.
///
/// `fk` is the `k`-th derivative of `f`. Passes iff the relative error is at
/// most `1e-3`, or both sides are below `1e-8` in magnitude.
pub fn check_lemma_freqavg_derivative(
    f: &dyn Fn(f64) -> f64,
    fk: &dyn Fn(f64) -> f64,
    k: u32,
    t: f64,
    n_srad: usize,
) -> Result<DerivativeReport> {
    if k > 1 {
        return Err(Error::InvalidParam(format!("derivative order k must be 0 or 1, got {k}")));
    }
    if t < 1e-2 {
        return Err(Error::NearOrigin(t));
    }
    let g = |t: f64| trapezoid(|s| f(t / (1.0 + s).sqrt()), 0.0, 1.0, n_srad);
    let d = 1e-3 * t;
    let fd = match k {
        0 => (g(t + d) - g(t - d)) / (2.0 * d),
        _ => (g(t + d) - 2.0 * g(t) + g(t - d)) / (d * d),
    };
    let kf = k as f64;
    let r = std::f64::consts::FRAC_1_SQRT_2;
    let integral = simpson(|s| fk(t * s) * s.powf(kf - 3.0), r, 1.0, 2000);
    let formula = 2.0 / t * fk(t) - 2f64.powf(2.0 - kf / 2.0) / t * fk(t * r) + (4.0 - 2.0 * kf) / t * integral;
    let rel_error = (fd - formula).abs() / formula.abs().max(f64::MIN_POSITIVE);
    let pass = rel_error <= 1e-3 || (fd.abs() <= 1e-8 && formula.abs() <= 1e-8);
    Ok(DerivativeReport { t, k, finite_difference: fd, formula, rel_error, pass })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlambdaOptions {
    pub lambdas: Vec<f64>,
    /// Trapezoid intervals over `[lambda, 2 lambda]`.
    pub lattice: usize,
    pub n_srad: usize,
    /// Grid spacing as a fraction of the resolution-rule limit at `2 max lambda`.
    pub spacing_factor: f64,
    pub half_width: f64,
    pub tolerance: f64,
}

impl Default for AlambdaOptions {
    fn default() -> Self {
        Self { lambdas: vec![10.0, 20.0, 40.0], lattice: 64, n_srad: 128, spacing_factor: 1.0, half_width: 1.5, tolerance: 1e-3 }
    }
}

impl AlambdaOptions {
    /// Every quadrature count doubled.
    pub fn doubled(&self) -> Self {
        Self { lattice: 2 * self.lattice, n_srad: 2 * self.n_srad, spacing_factor: 0.5 * self.spacing_factor, ..self.clone() }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlambdaRow {
    pub lambda: f64,
    pub lhs: Complex64,
    pub rhs: Complex64,
    pub diff: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlambdaReport {
    pub rows: Vec<AlambdaRow>,
    pub nodes: usize,
    pub pass: bool,
}

/// Frequency average of `t -> T^t[f](0)` against `T^lambda[S_rad f](0)` for a
/// radial `f`, both by 2D point quadrature on a common lattice.
pub fn check_lemma_alambda(f: &RadialProfile, opts: &AlambdaOptions) -> Result<AlambdaReport> {
    let l_max = opts.lambdas.iter().copied().fold(0.0, f64::max);
    if l_max <= 0.0 {
        return Err(Error::InvalidParam("need positive frequencies".into()));
    }
    let h = opts.spacing_factor * required_spacing(2.0 * l_max, opts.half_width);
    let nodes = (2.0 * opts.half_width / h).ceil() as usize + 1;
    let grid = Grid2::centered_square(opts.half_width, nodes)?;
    let q = f.to_field(grid, [0.0, 0.0])?;
    let smoothed = radial_smooth_with(f, opts.n_srad)?.to_field(grid, [0.0, 0.0])?;
    let cfg = EngineConfig::new(EngineKind::Naive);
    let mut rows = Vec::new();
    for &lambda in &opts.lambdas {
        let dt = lambda / opts.lattice as f64;
        let values = (0..=opts.lattice)
            .into_par_iter()
            .map(|j| main_term_point(&q, &PhaseContext::new([0.0, 0.0], lambda + j as f64 * dt)?, &cfg))
            .collect::<Result<Vec<_>>>()?;
        let lhs = freq_average(&SampledMap { t0: lambda, dt, values }, lambda)?;
        let rhs = main_term_point(&smoothed, &PhaseContext::new([0.0, 0.0], lambda)?, &cfg)?;
        rows.push(AlambdaRow { lambda, lhs, rhs, diff: (lhs - rhs).norm() });
    }
    let pass = rows.iter().all(|r| r.diff <= opts.tolerance);
    Ok(AlambdaReport { rows, nodes, pass })
}

/// `(1 - r^2)^3` on the unit disc, sampled densely out to `r = 1.5`.
pub fn alambda_bump_profile() -> RadialProfile {
    RadialProfile::from_fn(1.5, 6001, |r| Complex64::new((1.0 - r * r).max(0.0).powi(3), 0.0)).expect("finite")
}

/// Indicator of the disc of radius 0.7.
pub fn alambda_disc_profile() -> RadialProfile {
    RadialProfile::from_fn(1.5, 6001, |r| Complex64::new(if r < 0.7 { 1.0 } else { 0.0 }, 0.0)).expect("finite")
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LipschitzReport {
    /// `(sigma, sup |mollify(q) - q|)` over nodes farther than sigma from the frame.
    pub rows: Vec<(f64, f64)>,
    pub pass: bool,
}

/// `q(z) = max(0, 1 - |z1|)` mollified with every sigma of the default grid
/// for `(spacing, lambda)`; passes iff each sup error is below sigma.
pub fn check_lemma_mollifier_lipschitz(spacing: f64, lambda: f64) -> Result<LipschitzReport> {
    let sigmas = default_sigma_grid(spacing, lambda);
    let s_max = sigmas.iter().copied().fold(0.0, f64::max);
    let hw = 1.0 + s_max + 0.25;
    let n = (2.0 * hw / spacing).ceil() as usize + 1;
    let grid = Grid2::centered_square(hw, n)?;
    let q = ScalarField::from_fn(grid, |z| Complex64::new((1.0 - z[0].abs()).max(0.0), 0.0))?;
    let mut rows = Vec::with_capacity(sigmas.len());
    for &sigma in &sigmas {
        let m = mollify(&q, &MollifierSpec::new(sigma)?)?;
        let mut sup: f64 = 0.0;
        for j in 0..grid.ny() {
            for i in 0..grid.nx() {
                let z = grid.node(i, j);
                if z[0].abs() <= hw - sigma && z[1].abs() <= hw - sigma {
                    sup = sup.max((m.at(i, j) - q.at(i, j)).norm());
                }
            }
        }
        rows.push((sigma, sup));
    }
    let pass = rows.iter().all(|&(s, e)| e < s);
    Ok(LipschitzReport { rows, pass })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RateReport {
    pub sigmas: Vec<f64>,
    /// `|mollify(q, sigma)|_{H^{s'}} sigma^{s' - s}`.
    pub scaled_norms: Vec<f64>,
    pub pass: bool,
}

/// Windowed lacunary sum with octave amplitudes `2^{-k s}` at frequencies
/// `4 2^k`, which sits at the edge of `H^s`. Spacing 0.01 on `[-1.5, 1.5]^2`.
pub fn fractal_probe(s: f64) -> ScalarField {
    let g = Grid2::centered_square(1.5, 301).expect("valid grid");
    ScalarField::from_fn(g, |z| {
        let r2 = z[0] * z[0] + z[1] * z[1];
        let window = (1.0 - r2).max(0.0).powi(4);
        let sum: f64 = (0..7)
            .map(|k| {
                let a = 0.7 * k as f64;
                let nu = 4.0 * 2f64.powi(k);
                2f64.powf(-(k as f64) * s) * (nu * (z[0] * a.cos() + z[1] * a.sin()) + k as f64).cos()
            })
            .sum();
        Complex64::new(window * sum, 0.0)
    })
    .expect("finite")
}

/// `sigma^{s'-s} |mollify(q, sigma)|_{H^{s'}}` should stay bounded as sigma
/// shrinks; passes iff successive halvings change it by less than a factor 2.
pub fn check_lemma_mollifier_rate(q: &ScalarField, s: f64, s_prime: f64, sigmas: &[f64]) -> Result<RateReport> {
    let scaled_norms = sigmas
        .iter()
        .map(|&sigma| Ok(sobolev_norm(&mollify(q, &MollifierSpec::new(sigma)?)?, s_prime)? * sigma.powf(s_prime - s)))
        .collect::<Result<Vec<f64>>>()?;
    let pass = scaled_norms.windows(2).all(|w| {
        let r = w[1] / w[0];
        r > 0.5 && r < 2.0
    });
    Ok(RateReport { sigmas: sigmas.to_vec(), scaled_norms, pass })
}
