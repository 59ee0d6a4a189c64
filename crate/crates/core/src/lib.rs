//! Desk-scale laboratory for the quadratic-phase (Bukhgeim) reconstruction
//! main term of 2D complex potentials, and for the averaging procedures
//! that speed up its convergence.
//!
//! The crate is organised bottom-up:
//!
//! * [`field`]: grids, sampled fields, radial profiles, polar resampling
//!   and discrete Sobolev norms;
//! * [`phantom`]: test potentials and rotation resampling;
//! * [`engine`]: three evaluators of the main term (naive quadrature,
//!   separable factorization, Fourier multiplier);
//! * [`averaging`]: mollifier, angular, radial and frequency averages;
//! * [`verify`]: error metrics, sigma search, reports and the numerical
//!   lemma checks.

pub mod averaging;
pub mod engine;
mod error;
pub mod fft;
pub mod field;
pub mod phantom;
pub mod special;
pub mod summation;
pub mod verify;

pub use error::{Error, Result};
pub use field::{Grid2, RadialProfile, ScalarField};
pub use num_complex::Complex64;
