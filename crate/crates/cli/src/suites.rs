use anyhow::Result;
use bklab_core::averaging::{angular_average_recon, angular_average_reference, AveragingParams};
use bklab_core::engine::{main_term_grid, main_term_point, EngineConfig, EngineKind, PhaseContext};
use bklab_core::phantom::{render_phantom, PhantomKind, PhantomSpec};
use bklab_core::verify::{
    alambda_bump_profile, alambda_disc_profile, check_lemma_alambda, check_lemma_freqavg_derivative,
    check_lemma_mollifier_lipschitz, check_lemma_mollifier_rate, check_lemma_statphase, fractal_probe,
    statphase_bump_probe, statphase_gaussian_probe, AlambdaOptions, LAMBDA_LADDER,
};
use bklab_core::{Complex64, Grid2, ScalarField};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Lemmas,
    Engines,
    All,
}

/// One verification outcome. `pass` is `None` for report-only probes.
#[derive(Debug, Clone)]
pub struct CheckLine {
    pub name: String,
    pub pass: Option<bool>,
    pub detail: String,
}

impl CheckLine {
    fn new(name: &str, pass: bool, detail: String) -> Self {
        Self { name: name.into(), pass: Some(pass), detail }
    }

    pub fn render(&self) -> String {
        let tag = match self.pass {
            Some(true) => "PASS",
            Some(false) => "FAIL",
            None => "INFO",
        };
        format!("{tag} {}: {}", self.name, self.detail)
    }
}

pub fn run_suite(suite: Suite) -> Result<Vec<CheckLine>> {
    let mut lines = Vec::new();
    if matches!(suite, Suite::Engines | Suite::All) {
        lines.extend(engine_checks()?);
    }
    if matches!(suite, Suite::Lemmas | Suite::All) {
        lines.extend(lemma_checks()?);
    }
    Ok(lines)
}

/// Gaussian of width 0.25 on a 256-node input over `[-1, 1]^2` and the
/// 64-node output grid nested in it (stride 4, offset 2).
pub fn cross_validation_setup() -> Result<(ScalarField, Grid2)> {
    let input = Grid2::centered_square(1.0, 256)?;
    let h = input.spacing();
    let out = Grid2::new([-1.0 + 2.0 * h, -1.0 + 2.0 * h], 4.0 * h, 64, 64)?;
    let q = ScalarField::from_fn(input, |z| Complex64::new((-(z[0] * z[0] + z[1] * z[1]) / 0.0625).exp(), 0.0))?;
    Ok((q, out))
}

fn engine_checks() -> Result<Vec<CheckLine>> {
    let mut lines = Vec::new();
    let (q, out) = cross_validation_setup()?;
    for lambda in [10.0, 40.0] {
        let naive = main_term_grid(&q, lambda, &out, &EngineConfig::new(EngineKind::Naive))?;
        let sep = main_term_grid(&q, lambda, &out, &EngineConfig::new(EngineKind::Separable))?;
        let spec = main_term_grid(&q, lambda, &out, &EngineConfig::new(EngineKind::Spectral))?;
        let d = naive.max_abs_diff(&sep)?.max(naive.max_abs_diff(&spec)?).max(sep.max_abs_diff(&spec)?);
        lines.push(CheckLine::new(&format!("engines agree at lambda {lambda}"), d <= 1e-3, format!("max diff {d:.3e}")));
    }

    let g = Grid2::centered_square(6.0, 1837)?;
    let gauss = ScalarField::from_fn(g, |z| Complex64::new((-(z[0] * z[0] + z[1] * z[1])).exp(), 0.0))?;
    let v = main_term_point(&gauss, &PhaseContext::new([0.0, 0.0], 10.0)?, &EngineConfig::new(EngineKind::Naive))?;
    let d = (v - 10.0 / 101f64.sqrt()).norm();
    lines.push(CheckLine::new("gaussian closed form", d <= 1e-4, format!("|error| {d:.3e}")));

    let input = Grid2::centered_square(1.0, 127)?;
    let rect = render_phantom(&PhantomSpec::preset(PhantomKind::Rectangles), &input)?;
    let out = Grid2::centered_square(1.0, 64)?;
    let p = AveragingParams { n_angles: 256, ..Default::default() };
    let cfg = EngineConfig::new(EngineKind::Naive);
    let fast = angular_average_recon(&rect, 10.0, &out, &p, &cfg)?;
    let slow = angular_average_reference(&rect, 10.0, &out, &p, &cfg)?;
    let d = fast.max_abs_diff(&slow)?;
    lines.push(CheckLine::new("angular fast path", d <= 1e-3, format!("max diff {d:.3e}")));
    Ok(lines)
}

fn lemma_checks() -> Result<Vec<CheckLine>> {
    let mut lines = Vec::new();
    let g = check_lemma_statphase(&statphase_gaussian_probe(), 2.9, &LAMBDA_LADDER)?;
    let slope = g.slope.unwrap_or(f64::NEG_INFINITY);
    lines.push(CheckLine::new("decay, gaussian", slope <= -0.9, format!("slope {slope:.3}")));
    let b = check_lemma_statphase(&statphase_bump_probe(), 2.0, &LAMBDA_LADDER)?;
    let slope = b.slope.unwrap_or(f64::NEG_INFINITY);
    lines.push(CheckLine::new("decay, s'=2 bump", b.pass, format!("slope {slope:.3}, threshold {:.2}", b.threshold)));

    let lip = check_lemma_mollifier_lipschitz(2.2 / 199.0, 10.0)?;
    let worst = lip.rows.iter().map(|&(s, e)| e / s).fold(0.0, f64::max);
    lines.push(CheckLine::new("mollifier lipschitz bound", lip.pass, format!("max error/sigma {worst:.3}")));

    let rate = check_lemma_mollifier_rate(&fractal_probe(0.5), 0.5, 2.0, &[0.32, 0.16, 0.08, 0.04])?;
    lines.push(CheckLine::new("mollifier rate", rate.pass, format!("scaled norms {:?}", rate.scaled_norms)));

    let opts = AlambdaOptions::default();
    let a = check_lemma_alambda(&alambda_bump_profile(), &opts)?;
    let worst = a.rows.iter().map(|r| r.diff).fold(0.0, f64::max);
    lines.push(CheckLine::new("frequency average identity, bump", a.pass, format!("max diff {worst:.3e}")));
    let disc_opts = AlambdaOptions { tolerance: 1e-2, ..opts };
    let d = check_lemma_alambda(&alambda_disc_profile(), &disc_opts)?;
    let worst = d.rows.iter().map(|r| r.diff).fold(0.0, f64::max);
    lines.push(CheckLine::new("frequency average identity, disc", d.pass, format!("max diff {worst:.3e}")));

    let r = check_lemma_freqavg_derivative(&|t| t * t, &|t| t * t, 0, 1.0, 512)?;
    lines.push(CheckLine::new("S_rad derivative formula, t^2", r.pass, format!("rel error {:.3e}", r.rel_error)));
    let r = check_lemma_freqavg_derivative(&|_| 1.0, &|_| 1.0, 0, 1.0, 512)?;
    lines.push(CheckLine::new("S_rad derivative formula, constant", r.pass, format!("g' {:.3e}", r.finite_difference)));
    let r = check_lemma_freqavg_derivative(&|t: f64| t.sqrt(), &|t: f64| 0.5 / t.sqrt(), 1, 0.05, 512)?;
    lines.push(CheckLine {
        name: "S_rad second derivative, t^(1/2) near 0".into(),
        pass: None,
        detail: format!("finite difference {:.4e}, formula {:.4e}", r.finite_difference, r.formula),
    });
    Ok(lines)
}
