use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use bklab_core::averaging::AveragingParams;
use bklab_core::engine::EngineConfig;
use bklab_core::phantom::PhantomSpec;
use bklab_core::verify::Method;
use serde::{Deserialize, Serialize};

/// Grayscale mapping of the real part.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum Window {
    /// `[min, max]` of the truth phantom, shared by every image of a run.
    #[default]
    Auto,
    Fixed { min: f64, max: f64 },
}

fn default_output_size() -> usize {
    200
}

fn default_frame() -> f64 {
    1.1
}

/// One reconstruction experiment.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunSpec {
    pub phantom: PhantomSpec,
    pub lambdas: Vec<f64>,
    pub methods: Vec<Method>,
    #[serde(default)]
    pub engine: EngineConfig,
    #[serde(default)]
    pub averaging: AveragingParams,
    /// Output nodes per side.
    #[serde(default = "default_output_size")]
    pub output_size: usize,
    /// Half width of the output frame, centred at the origin.
    #[serde(default = "default_frame")]
    pub frame_half_width: f64,
    pub output_dir: PathBuf,
    #[serde(default)]
    pub window: Window,
}

impl RunSpec {
    pub fn from_json(text: &str) -> Result<Self> {
        let spec: RunSpec = serde_json::from_str(text).context("parsing run spec")?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        Self::from_json(&text).with_context(|| format!("in {}", path.display()))
    }

    pub fn validate(&self) -> Result<()> {
        if self.methods.is_empty() {
            bail!("methods must not be empty");
        }
        if self.lambdas.is_empty() {
            bail!("lambdas must not be empty");
        }
        if self.lambdas.iter().any(|l| !(l.is_finite() && *l > 0.0)) {
            bail!("lambdas must be positive");
        }
        if self.lambdas.windows(2).any(|w| w[0] >= w[1]) {
            bail!("lambdas must be strictly increasing");
        }
        if self.output_size < 2 {
            bail!("output_size must be at least 2");
        }
        if !(self.frame_half_width >= self.phantom.half_width) {
            bail!(
                "frame half width {} must cover the phantom square {}",
                self.frame_half_width,
                self.phantom.half_width
            );
        }
        if let Window::Fixed { min, max } = self.window {
            if !(min.is_finite() && max.is_finite()) {
                bail!("window bounds must be finite");
            }
        }
        self.engine.validate()?;
        self.averaging.validate()?;
        self.phantom.validate()?;
        Ok(())
    }
}
