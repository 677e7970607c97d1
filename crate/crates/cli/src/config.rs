//! Configuration of a `verify` run, loadable from JSON.

use std::fs;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context};
use serde::{Deserialize, Serialize};

use crate::error::{CliError, CliResult};
use crate::output::Format;

/// Parameters of the verification suites. Every field is optional in the
/// JSON file; missing fields take the defaults below.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub seed: u64,
    /// Even support parameters `N`.
    pub n_list: Vec<usize>,
    /// Shift half-bandwidths `W ∈ (0, 1/2]`.
    pub w_list: Vec<f64>,
    /// Replaces every check tolerance when set.
    pub tol: Option<f64>,
    pub output_format: Format,
    pub output_path: Option<PathBuf>,
    /// Random sequences per `(N, W)` case.
    pub cases: usize,
    /// Random sequences per `N` in the optimality search.
    pub search_samples: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            seed: 42,
            n_list: vec![2, 4, 8, 16],
            w_list: vec![0.1, 0.2, 0.3, 0.4, 0.5],
            tol: None,
            output_format: Format::Json,
            output_path: None,
            cases: 25,
            search_samples: 10_000,
        }
    }
}

impl RunConfig {
    pub fn load(path: &Path) -> CliResult<Self> {
        let text = fs::read_to_string(path)
            .with_context(|| format!("reading config {}", path.display()))
            .map_err(CliError::io)?;
        serde_json::from_str(&text)
            .with_context(|| format!("parsing config {}", path.display()))
            .map_err(CliError::io)
    }

    pub fn validate(&self) -> CliResult<()> {
        if self.n_list.is_empty() {
            return Err(CliError::usage(anyhow!("n_list must not be empty")));
        }
        if let Some(n) = self.n_list.iter().find(|&&n| n < 2 || n % 2 != 0) {
            return Err(CliError::usage(halfshift::Error::InvalidSupport(*n)));
        }
        if let Some(w) = self.w_list.iter().find(|&&w| !(w > 0.0 && w <= 0.5)) {
            return Err(CliError::usage(halfshift::Error::ShiftBandwidthOutOfRange(*w)));
        }
        if let Some(t) = self.tol.filter(|t| !(*t > 0.0 && t.is_finite())) {
            return Err(CliError::usage(halfshift::Error::InvalidTolerance(t)));
        }
        if self.cases == 0 || self.search_samples == 0 {
            return Err(CliError::usage(anyhow!("cases and search_samples must be positive")));
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partial_json_uses_defaults() {
        let c: RunConfig = serde_json::from_str(r#"{"seed": 7, "n_list": [4]}"#).unwrap();
        assert_eq!(c.seed, 7);
        assert_eq!(c.n_list, [4]);
        assert_eq!(c.w_list, RunConfig::default().w_list);
        assert!(serde_json::from_str::<RunConfig>(r#"{"sede": 7}"#).is_err());
    }

    #[test]
    fn validation() {
        let ok = RunConfig::default();
        assert!(ok.validate().is_ok());
        let bad = RunConfig {
            n_list: vec![3],
            ..ok.clone()
        };
        assert!(bad.validate().is_err());
        let bad = RunConfig {
            w_list: vec![0.6],
            ..ok.clone()
        };
        assert!(bad.validate().is_err());
        let bad = RunConfig { tol: Some(0.0), ..ok };
        assert!(bad.validate().is_err());
    }
}
