//! Experiment driver: run specs, image output and the verification suites
//! behind the `bklab` binary.

pub mod pgm;
pub mod run;
pub mod spec;
pub mod suites;
pub mod threads;

pub use pgm::render_pgm;
pub use run::{load_specs, run, run_all, RunOutcome};
pub use spec::{RunSpec, Window};
