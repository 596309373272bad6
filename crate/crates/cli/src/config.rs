//! Optional TOML configuration. Every key has a default and command-line
//! flags override the file.
//!
//! ```toml
//! format = "md"            # json | csv | md
//!
//! [caps]
//! enum_area = 42           # largest p*q box enumerated
//! samples = 100000000      # Monte Carlo draws per run
//! points = 10000           # Hessian sample points
//! directions = 100000      # Jacobi sample directions
//!
//! [mc]
//! samples = 1000000
//! seed = 7
//! batches = 64
//!
//! [tolerances]
//! integral_rel = 0.02
//! hessian = 0.001
//! jacobi = 1e-10
//! ```

use std::path::Path;

use serde::Deserialize;

use crate::error::{CliError, Result};
use crate::table::Format;

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Caps {
    pub enum_area: usize,
    pub samples: usize,
    pub points: usize,
    pub directions: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { enum_area: 42, samples: 100_000_000, points: 10_000, directions: 100_000 }
    }
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Mc {
    pub samples: usize,
    pub seed: u64,
    pub batches: usize,
}

impl Default for Mc {
    fn default() -> Self {
        Mc { samples: 1_000_000, seed: 7, batches: vzlef_geometry::integrals::DEFAULT_BATCHES }
    }
}

#[derive(Clone, Debug, PartialEq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    /// Relative error allowed between the Monte Carlo estimate and the closed form.
    pub integral_rel: f64,
    /// Entrywise Hessian eigenvalue deviation.
    pub hessian: f64,
    /// Entrywise Jacobi spectrum deviation.
    pub jacobi: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { integral_rel: 0.02, hessian: 1e-3, jacobi: 1e-10 }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Config {
    pub format: Option<Format>,
    pub caps: Caps,
    pub mc: Mc,
    pub tolerances: Tolerances,
}

impl Config {
    pub fn parse(text: &str) -> Result<Self> {
        let cfg: Config = toml::from_str(text).map_err(|e| CliError::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Config(format!("cannot read {}: {e}", path.display())))?;
        Self::parse(&text)
    }

    /// Caps positive, tolerances in `(0, 1)`.
    pub fn validate(&self) -> Result<()> {
        let caps = [
            ("caps.enum_area", self.caps.enum_area),
            ("caps.samples", self.caps.samples),
            ("caps.points", self.caps.points),
            ("caps.directions", self.caps.directions),
            ("mc.batches", self.mc.batches),
        ];
        for (name, v) in caps {
            if v == 0 {
                return Err(CliError::Config(format!("{name} must be positive")));
            }
        }
        let tols = [
            ("tolerances.integral_rel", self.tolerances.integral_rel),
            ("tolerances.hessian", self.tolerances.hessian),
            ("tolerances.jacobi", self.tolerances.jacobi),
        ];
        for (name, v) in tols {
            if !(v > 0.0 && v < 1.0) {
                return Err(CliError::Config(format!("{name} must lie in (0,1), got {v}")));
            }
        }
        Ok(())
    }
}
