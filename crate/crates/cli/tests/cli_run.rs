use std::path::Path;
use std::process::Command;

use bklab_cli::{render_pgm, run, RunSpec, Window};
use bklab_core::phantom::{render_phantom, PhantomKind, PhantomSpec};
use bklab_core::verify::Method;
use bklab_core::Grid2;

fn gaussian_spec(dir: &Path, methods: Vec<Method>) -> RunSpec {
    RunSpec {
        phantom: PhantomSpec::gaussian([0.1, -0.2], 0.25, 1.0),
        lambdas: vec![10.0],
        methods,
        engine: Default::default(),
        averaging: Default::default(),
        output_size: 41,
        frame_half_width: 1.1,
        output_dir: dir.to_path_buf(),
        window: Window::Auto,
    }
}

fn files_with_ext(dir: &Path, ext: &str) -> Vec<std::path::PathBuf> {
    let mut v: Vec<_> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| e.unwrap().path())
        .filter(|p| p.extension().is_some_and(|e| e == ext))
        .collect();
    v.sort();
    v
}

#[test]
fn standard_only_writes_one_image_and_one_row() {
    let tmp = tempfile::tempdir().unwrap();
    let out = run(&gaussian_spec(tmp.path(), vec![Method::Standard])).unwrap();
    assert_eq!(files_with_ext(tmp.path(), "pgm").len(), 1);
    let csv = std::fs::read_to_string(out.csv).unwrap();
    assert_eq!(csv.lines().count(), 2);
    assert!(csv.lines().nth(1).unwrap().starts_with("gaussian,1.00000000e1,standard,"));
    assert!(out.manifest.exists());
}

#[test]
fn artifacts_are_identical_across_thread_counts() {
    let methods = vec![Method::Standard, Method::Mollifier, Method::Angular, Method::Combined, Method::Freq];
    let a = tempfile::tempdir().unwrap();
    let b = tempfile::tempdir().unwrap();
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let four = rayon::ThreadPoolBuilder::new().num_threads(4).build().unwrap();
    let mut spec = gaussian_spec(a.path(), methods.clone());
    spec.phantom = PhantomSpec::preset(PhantomKind::Ovals);
    one.install(|| run(&spec)).unwrap();
    spec.output_dir = b.path().to_path_buf();
    four.install(|| run(&spec)).unwrap();
    for ext in ["pgm", "csv", "bkf"] {
        let fa = files_with_ext(a.path(), ext);
        assert!(!fa.is_empty());
        for p in fa {
            let q = b.path().join(p.file_name().unwrap());
            assert!(std::fs::read(&p).unwrap() == std::fs::read(&q).unwrap(), "{}", p.display());
        }
    }
}

#[test]
fn auto_window_spans_full_gray_range_on_truth() {
    let g = Grid2::centered_square(1.1, 200).unwrap();
    let truth = render_phantom(&PhantomSpec::preset(PhantomKind::SheppLogan), &g).unwrap();
    let (lo, hi) = truth.real_range();
    let bytes = render_pgm(&truth, lo, hi);
    let px = &bytes[bytes.len() - 200 * 200..];
    assert!(px.contains(&0) && px.contains(&255));
}

#[test]
fn suite_specs_spell_out_the_presets() {
    let root = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../suite");
    let mut total_rows = 0;
    for kind in PhantomKind::SUITE {
        let spec = RunSpec::load(&root.join(format!("{}.json", kind.name()))).unwrap();
        assert_eq!(spec.phantom, PhantomSpec::preset(kind));
        assert_eq!(spec.output_size, 200);
        total_rows += spec.lambdas.len();
    }
    assert_eq!(total_rows, 16);
}

#[test]
fn binary_rejects_invalid_spec() {
    let tmp = tempfile::tempdir().unwrap();
    let path = tmp.path().join("bad.json");
    std::fs::write(&path, r#"{"phantom": {"kind": "disc", "half_width": 1.0}, "lambdas": [], "methods": ["standard"], "output_dir": "x"}"#).unwrap();
    let out = Command::new(env!("CARGO_BIN_EXE_bklab")).arg("run").arg(&path).output().unwrap();
    assert!(!out.status.success());
    assert!(String::from_utf8_lossy(&out.stderr).contains("lambdas"));
}

#[test]
fn binary_runs_a_spec_and_prints_the_table() {
    let tmp = tempfile::tempdir().unwrap();
    let spec = gaussian_spec(&tmp.path().join("o"), vec![Method::Standard, Method::Angular]);
    let path = tmp.path().join("g.json");
    std::fs::write(&path, serde_json::to_string(&spec).unwrap()).unwrap();
    let table = tmp.path().join("all.csv");
    let out = Command::new(env!("CARGO_BIN_EXE_bklab"))
        .args(["run", path.to_str().unwrap(), "--table", table.to_str().unwrap()])
        .env("BKLAB_THREADS", "2")
        .output()
        .unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let stdout = String::from_utf8_lossy(&out.stdout);
    assert!(stdout.lines().nth(1).unwrap().starts_with("gaussian"));
    assert_eq!(std::fs::read_to_string(table).unwrap().lines().count(), 3);
}
