use std::path::{Path, PathBuf};
use std::time::Instant;

use anyhow::{Context, Result};
use bklab_core::averaging::{angular_average_recon, freq_average_recon, mollify, MollifierSpec};
use bklab_core::engine::main_term_grid;
use bklab_core::field::snapshot;
use bklab_core::phantom::{render_phantom, PRESET_VERSION};
use bklab_core::verify::{best_sigma, emit_error_table, l1_error, Domain, ErrorReport, Method};
use bklab_core::{Grid2, ScalarField};
use serde::Serialize;

use crate::pgm::render_pgm;
use crate::spec::{RunSpec, Window};

#[derive(Debug, Clone, Serialize)]
struct JobTiming {
    lambda: f64,
    method: Method,
    seconds: f64,
}

#[derive(Serialize)]
struct Manifest<'a> {
    spec: &'a RunSpec,
    crate_version: &'static str,
    preset_version: &'static str,
    threads: usize,
    input_nodes: usize,
    window: [f64; 2],
    artifacts: &'a [PathBuf],
    timings: &'a [JobTiming],
    /// Same rows with the error restricted to the phantom square.
    omega_report: &'a ErrorReport,
}

/// Everything a run wrote, plus its error rows.
#[derive(Debug, Clone)]
pub struct RunOutcome {
    /// Frame-domain errors; only the requested methods.
    pub report: ErrorReport,
    pub omega_report: ErrorReport,
    pub images: Vec<PathBuf>,
    pub csv: PathBuf,
    pub manifest: PathBuf,
}

fn file_stem(label: &str, lambda: f64, method: Method) -> String {
    format!("{label}_l{lambda}_{}", method.name())
}

/// Reconstruction for one method, with the sigma it used.
fn reconstruct(
    spec: &RunSpec,
    method: Method,
    q: &ScalarField,
    truth: &ScalarField,
    standard: &ScalarField,
    lambda: f64,
) -> Result<(ScalarField, Option<f64>)> {
    let out = *truth.grid();
    let sigmas = spec.averaging.sigma_grid_for(out.spacing(), lambda);
    let smooth = |base: &ScalarField| -> Result<(ScalarField, Option<f64>)> {
        let choice = best_sigma(base, truth, &sigmas, Domain::Frame)?;
        Ok((mollify(base, &MollifierSpec::new(choice.sigma)?)?, Some(choice.sigma)))
    };
    Ok(match method {
        Method::Standard => (standard.clone(), None),
        Method::Mollifier => smooth(standard)?,
        Method::Angular => (angular_average_recon(q, lambda, &out, &spec.averaging, &spec.engine)?, None),
        Method::Combined => smooth(&angular_average_recon(q, lambda, &out, &spec.averaging, &spec.engine)?)?,
        Method::Freq => (freq_average_recon(q, lambda, spec.averaging.freq_depth, &out, &spec.engine)?, None),
    })
}

/// Executes every (lambda, method) job of `spec`, writing snapshots, PGM
/// images, `summary.csv` and `manifest.json` into the output directory.
pub fn run(spec: &RunSpec) -> Result<RunOutcome> {
    spec.validate()?;
    let dir = &spec.output_dir;
    std::fs::create_dir_all(dir).with_context(|| format!("creating {}", dir.display()))?;

    let out = Grid2::centered_square(spec.frame_half_width, spec.output_size)?;
    let input = spec.engine.input_grid(&out)?;
    let q = render_phantom(&spec.phantom, &input)?;
    let truth = q.restrict_to(&out);
    let window = match spec.window {
        Window::Auto => {
            let (lo, hi) = truth.real_range();
            [lo, hi]
        }
        Window::Fixed { min, max } => [min, max],
    };
    let label = spec.phantom.label();
    let omega = Domain::Omega { half_width: spec.phantom.half_width };

    let mut full = ErrorReport::new();
    let mut full_omega = ErrorReport::new();
    let mut report = ErrorReport::new();
    let mut omega_report = ErrorReport::new();
    let mut images = Vec::new();
    let mut artifacts = Vec::new();
    let mut timings = Vec::new();

    for &lambda in &spec.lambdas {
        let t0 = Instant::now();
        let standard = main_term_grid(&q, lambda, &out, &spec.engine)?;
        let std_time = t0.elapsed().as_secs_f64();
        full.push(&label, lambda, Method::Standard, l1_error(&standard, &truth, Domain::Frame)?, None)?;
        full_omega.push(&label, lambda, Method::Standard, l1_error(&standard, &truth, omega)?, None)?;

        for &method in &spec.methods {
            let t = Instant::now();
            let (recon, sigma) = reconstruct(spec, method, &q, &truth, &standard, lambda)?;
            let seconds = t.elapsed().as_secs_f64() + if method == Method::Standard { std_time } else { 0.0 };
            timings.push(JobTiming { lambda, method, seconds });

            let e = l1_error(&recon, &truth, Domain::Frame)?;
            let eo = l1_error(&recon, &truth, omega)?;
            if method != Method::Standard {
                full.push(&label, lambda, method, e, sigma)?;
                full_omega.push(&label, lambda, method, eo, sigma)?;
            }
            let row = full.find(&label, lambda, method).expect("row just pushed").clone();
            let row_o = full_omega.find(&label, lambda, method).expect("row just pushed").clone();
            report.entries.push(row);
            omega_report.entries.push(row_o);

            let stem = file_stem(&label, lambda, method);
            let snap = dir.join(format!("{stem}.bkf"));
            snapshot::write(&snap, &recon)?;
            let img = dir.join(format!("{stem}.pgm"));
            std::fs::write(&img, render_pgm(&recon, window[0], window[1]))
                .with_context(|| format!("writing {}", img.display()))?;
            artifacts.push(snap);
            artifacts.push(img.clone());
            images.push(img);
        }
    }

    let csv = dir.join("summary.csv");
    std::fs::write(&csv, emit_error_table(&report).csv).with_context(|| format!("writing {}", csv.display()))?;
    artifacts.push(csv.clone());

    let manifest_path = dir.join("manifest.json");
    let manifest = Manifest {
        spec,
        crate_version: env!("CARGO_PKG_VERSION"),
        preset_version: PRESET_VERSION,
        threads: rayon::current_num_threads(),
        input_nodes: input.nx(),
        window,
        artifacts: &artifacts,
        timings: &timings,
        omega_report: &omega_report,
    };
    std::fs::write(&manifest_path, serde_json::to_vec_pretty(&manifest)?)
        .with_context(|| format!("writing {}", manifest_path.display()))?;

    Ok(RunOutcome { report, omega_report, images, csv, manifest: manifest_path })
}

/// Runs several specs and merges their rows.
pub fn run_all(specs: &[RunSpec]) -> Result<(ErrorReport, Vec<RunOutcome>)> {
    let mut merged = ErrorReport::new();
    let mut outcomes = Vec::with_capacity(specs.len());
    for spec in specs {
        let o = run(spec)?;
        merged.extend(o.report.clone());
        outcomes.push(o);
    }
    Ok((merged, outcomes))
}

/// Loads specs from disk, optionally redirecting each output directory to
/// `<root>/<file stem>`.
pub fn load_specs(paths: &[PathBuf], output_root: Option<&Path>) -> Result<Vec<RunSpec>> {
    paths
        .iter()
        .map(|p| {
            let mut s = RunSpec::load(p)?;
            if let Some(root) = output_root {
                let stem = p.file_stem().map(|s| s.to_os_string()).unwrap_or_else(|| "run".into());
                s.output_dir = root.join(stem);
            }
            Ok(s)
        })
        .collect()
}
