use std::f64::consts::PI;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::field::Grid2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum EngineKind {
    /// Direct trapezoid quadrature at every output node.
    Naive,
    /// Row/column factorization of the hyperbolic phase on nested grids.
    Separable,
    /// Fourier multiplier on a zero-padded grid.
    Spectral,
}

impl EngineKind {
    pub fn name(self) -> &'static str {
        match self {
            EngineKind::Naive => "naive",
            EngineKind::Separable => "separable",
            EngineKind::Spectral => "spectral",
        }
    }

    /// Whether accuracy depends on sampling the phase (quadrature engines).
    pub fn needs_phase_resolution(self) -> bool {
        !matches!(self, EngineKind::Spectral)
    }
}

impl std::str::FromStr for EngineKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "naive" => Ok(EngineKind::Naive),
            "separable" => Ok(EngineKind::Separable),
            "spectral" => Ok(EngineKind::Spectral),
            other => Err(Error::InvalidParam(format!("unknown engine {other:?}"))),
        }
    }
}

fn default_refinement() -> usize {
    4
}

fn default_true() -> bool {
    true
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EngineConfig {
    pub engine: EngineKind,
    /// Input nodes per output spacing (input spacing = output spacing / refinement).
    #[serde(default = "default_refinement")]
    pub refinement: usize,
    /// Fixed pairwise reduction order; sequential accumulation when off.
    #[serde(default = "default_true")]
    pub pairwise: bool,
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self { engine: EngineKind::Spectral, refinement: default_refinement(), pairwise: true }
    }
}

impl EngineConfig {
    pub fn new(engine: EngineKind) -> Self {
        Self { engine, ..Self::default() }
    }

    pub fn with_refinement(mut self, refinement: usize) -> Self {
        self.refinement = refinement;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.refinement == 0 {
            return Err(Error::InvalidParam("refinement factor must be positive".into()));
        }
        Ok(())
    }

    /// Input grid for an output grid: `refinement` times finer, same hull.
    pub fn input_grid(&self, out: &Grid2) -> Result<Grid2> {
        self.validate()?;
        out.refined(self.refinement)
    }

    /// Smallest refinement factor meeting the resolution rule on `out`'s hull.
    pub fn refinement_for(out: &Grid2, lambda: f64) -> usize {
        let need = required_spacing(lambda, out.half_width());
        (out.spacing() / need).ceil().max(1.0) as usize
    }

    /// Resolution rule for quadrature engines; the spectral engine evaluates
    /// the multiplier analytically and is exempt.
    pub fn check_resolution(&self, input: &Grid2, lambda: f64) -> Result<()> {
        if self.engine.needs_phase_resolution() {
            check_resolution(input, lambda)
        } else {
            Ok(())
        }
    }
}

/// At least 8 samples per phase period at the domain corner:
/// `spacing <= pi / (8 lambda L)` with `L` the grid's half width.
pub fn required_spacing(lambda: f64, half_width: f64) -> f64 {
    PI / (8.0 * lambda * half_width)
}

pub fn check_resolution(input: &Grid2, lambda: f64) -> Result<()> {
    let required = required_spacing(lambda, input.half_width());
    if input.spacing() > required * (1.0 + 1e-12) {
        return Err(Error::Resolution { lambda, spacing: input.spacing(), required });
    }
    Ok(())
}
