//! Error metrics, error-reduction tables, the sigma search and numerical
//! checks of the convergence lemmas.

mod lemmas;
mod metrics;
mod report;
mod sigma;

pub use lemmas::*;
pub use metrics::{l1_error, reduction_pct, Domain};
pub use report::{emit_error_table, ErrorEntry, ErrorReport, ErrorTable, Method, CSV_HEADER};
pub use sigma::{best_sigma, SigmaChoice};
