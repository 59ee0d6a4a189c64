use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

fn default_n_angles() -> usize {
    64
}
fn default_n_srad() -> usize {
    128
}
fn default_freq_depth() -> usize {
    3
}
fn default_n_radial() -> usize {
    256
}

/// Quadrature counts and the sigma search grid shared by the averaging methods.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AveragingParams {
    #[serde(default = "default_n_angles")]
    pub n_angles: usize,
    #[serde(default = "default_n_srad")]
    pub n_srad: usize,
    #[serde(default = "default_freq_depth")]
    pub freq_depth: usize,
    /// Explicit sigma values; `None` uses [`default_sigma_grid`](super::default_sigma_grid).
    #[serde(default)]
    pub sigma_grid: Option<Vec<f64>>,
    /// Radial samples of the profiles built by the V pipeline.
    #[serde(default = "default_n_radial")]
    pub n_radial: usize,
}

impl Default for AveragingParams {
    fn default() -> Self {
        Self {
            n_angles: default_n_angles(),
            n_srad: default_n_srad(),
            freq_depth: default_freq_depth(),
            sigma_grid: None,
            n_radial: default_n_radial(),
        }
    }
}

impl AveragingParams {
    pub fn validate(&self) -> Result<()> {
        if self.n_angles < 8 || self.n_angles % 2 != 0 {
            return Err(Error::InvalidParam(format!("n_angles must be even and >= 8, got {}", self.n_angles)));
        }
        if self.n_srad < 8 {
            return Err(Error::InvalidParam(format!("n_srad must be >= 8, got {}", self.n_srad)));
        }
        if self.n_radial < 2 {
            return Err(Error::InvalidParam(format!("n_radial must be >= 2, got {}", self.n_radial)));
        }
        if let Some(g) = &self.sigma_grid {
            if g.is_empty() {
                return Err(Error::InvalidParam("sigma grid is empty".into()));
            }
            if let Some(s) = g.iter().find(|s| !(s.is_finite() && **s > 0.0)) {
                return Err(Error::InvalidParam(format!("sigma grid entry {s} is not positive")));
            }
        }
        Ok(())
    }

    /// The sigma grid for an output spacing and frequency, ascending.
    pub fn sigma_grid_for(&self, spacing: f64, lambda: f64) -> Vec<f64> {
        let mut g = match &self.sigma_grid {
            Some(g) => g.clone(),
            None => super::default_sigma_grid(spacing, lambda),
        };
        g.sort_by(f64::total_cmp);
        g.dedup();
        g
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_validate() {
        AveragingParams::default().validate().unwrap();
    }

    #[test]
    fn rejects_bad_counts() {
        let odd = AveragingParams { n_angles: 9, ..Default::default() };
        assert!(odd.validate().is_err());
        let few = AveragingParams { n_angles: 6, ..Default::default() };
        assert!(few.validate().is_err());
        let srad = AveragingParams { n_srad: 4, ..Default::default() };
        assert!(srad.validate().is_err());
        let empty = AveragingParams { sigma_grid: Some(vec![]), ..Default::default() };
        assert!(empty.validate().is_err());
    }

    #[test]
    fn missing_fields_take_defaults() {
        let p: AveragingParams = serde_json::from_str(r#"{"n_angles": 32}"#).unwrap();
        assert_eq!(p.n_angles, 32);
        assert_eq!(p.n_srad, 128);
        assert_eq!(p.freq_depth, 3);
    }
}
