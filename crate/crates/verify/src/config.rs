//! Run configuration: TOML file, environment default, CLI overrides.

use std::fmt;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::VerifyError;

/// Environment variable naming the default config file.
pub const CONFIG_ENV: &str = "DIRAC_VERIFY_CONFIG";

/// Which FW evolution forms the formal verdict claims run against.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum FormSelector {
    #[serde(rename = "FW-A")]
    FwA,
    #[serde(rename = "FW-B")]
    FwB,
    #[serde(rename = "both")]
    Both,
}

impl FormSelector {
    pub fn includes_a(self) -> bool {
        matches!(self, FormSelector::FwA | FormSelector::Both)
    }

    pub fn includes_b(self) -> bool {
        matches!(self, FormSelector::FwB | FormSelector::Both)
    }

    pub fn as_str(self) -> &'static str {
        match self {
            FormSelector::FwA => "FW-A",
            FormSelector::FwB => "FW-B",
            FormSelector::Both => "both",
        }
    }
}

impl fmt::Display for FormSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FormSelector {
    type Err = VerifyError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_uppercase().replace('_', "-").as_str() {
            "FW-A" | "FWA" | "A" => Ok(FormSelector::FwA),
            "FW-B" | "FWB" | "B" => Ok(FormSelector::FwB),
            "BOTH" => Ok(FormSelector::Both),
            _ => Err(VerifyError::Config(format!("unknown form `{s}` (expected FW-A, FW-B or both)"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    /// Identities exact in the continuum that involve only multipliers and
    /// constant matrices.
    pub exact_numeric: f64,
    /// Commutators where multiplication by V or x enters.
    pub potential: f64,
    pub k_squared: f64,
    pub anticommutator: f64,
    /// Negative-control residuals must reach at least this.
    pub negative_floor: f64,
    /// D² eigenvalue and eigenspace checks on radial states.
    pub radial_eigen: f64,
    pub sommerfeld: f64,
    pub degeneracy: f64,
    /// SO(4) finite-matrix relations.
    pub so4: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            exact_numeric: 1e-8,
            potential: 1e-6,
            k_squared: 1e-10,
            anticommutator: 1e-8,
            negative_floor: 1e-2,
            radial_eigen: 1e-6,
            sommerfeld: 1e-6,
            degeneracy: 1e-8,
            so4: 1e-8,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RadialSettings {
    pub n_max: u32,
    pub kappa_max: u32,
    pub r_min: f64,
    /// Outer radius in units of n_max Bohr radii.
    pub r_max_bohr: f64,
    pub dt: f64,
    pub energy_tol: f64,
}

impl Default for RadialSettings {
    fn default() -> Self {
        RadialSettings { n_max: 3, kappa_max: 2, r_min: 1e-8, r_max_bohr: 60.0, dt: 0.004, energy_tol: 1e-15 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct EnsembleSettings {
    pub states: usize,
    pub degree: u32,
    pub radial_power: u32,
    pub sigma: f64,
}

impl Default for EnsembleSettings {
    fn default() -> Self {
        EnsembleSettings { states: 5, degree: 1, radial_power: 2, sigma: 5.0 }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct RunConfig {
    pub grid: usize,
    pub box_len: f64,
    /// Units with ħ = c = 1.
    pub mass: f64,
    pub zalpha: f64,
    pub seed: u64,
    pub form: FormSelector,
    pub tolerances: Tolerances,
    pub radial: RadialSettings,
    pub ensemble: EnsembleSettings,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            grid: 32,
            box_len: 70.0,
            mass: 1.0,
            zalpha: 1.0 / 137.035999084,
            seed: 20240917,
            form: FormSelector::Both,
            tolerances: Tolerances::default(),
            radial: RadialSettings::default(),
            ensemble: EnsembleSettings::default(),
        }
    }
}

impl RunConfig {
    pub fn from_toml(text: &str) -> Result<Self, VerifyError> {
        let cfg: RunConfig = toml::from_str(text).map_err(|e| VerifyError::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self, VerifyError> {
        let text = std::fs::read_to_string(path).map_err(|e| VerifyError::Io { path: path.to_path_buf(), source: e })?;
        Self::from_toml(&text)
    }

    /// Explicit path first, then the environment variable, then defaults.
    pub fn resolve(explicit: Option<&Path>) -> Result<Self, VerifyError> {
        if let Some(p) = explicit {
            return Self::load(p);
        }
        match std::env::var_os(CONFIG_ENV) {
            Some(p) if !p.is_empty() => Self::load(&PathBuf::from(p)),
            _ => Ok(Self::default()),
        }
    }

    pub fn validate(&self) -> Result<(), VerifyError> {
        let bad = |msg: String| Err(VerifyError::Config(msg));
        if self.grid < 16 || !self.grid.is_power_of_two() {
            return bad(format!("grid size {} must be a power of two and at least 16", self.grid));
        }
        if !(self.zalpha > 0.0 && self.zalpha < 1.0) {
            return bad(format!("Z alpha = {} outside (0, 1)", self.zalpha));
        }
        if !(self.mass.is_finite() && self.mass > 0.0) {
            return bad(format!("mass {} must be positive", self.mass));
        }
        if !(self.box_len.is_finite() && self.box_len > 0.0) {
            return bad(format!("box length {} must be positive", self.box_len));
        }
        let t = &self.tolerances;
        for (name, v) in [
            ("exact_numeric", t.exact_numeric),
            ("potential", t.potential),
            ("k_squared", t.k_squared),
            ("anticommutator", t.anticommutator),
            ("negative_floor", t.negative_floor),
            ("radial_eigen", t.radial_eigen),
            ("sommerfeld", t.sommerfeld),
            ("degeneracy", t.degeneracy),
            ("so4", t.so4),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return bad(format!("tolerance {name} = {v} must be positive"));
            }
        }
        if self.radial.n_max == 0 || self.radial.kappa_max == 0 {
            return bad("radial n_max and kappa_max must be at least 1".into());
        }
        if self.ensemble.states == 0 {
            return bad("ensemble needs at least one state".into());
        }
        Ok(())
    }

    pub fn physics(&self) -> dirac_spectral::PhysicsConfig {
        dirac_spectral::PhysicsConfig { n: self.grid, box_len: self.box_len, mass: self.mass, zalpha: self.zalpha }
    }

    pub fn ensemble_config(&self) -> dirac_spectral::EnsembleConfig {
        let e = &self.ensemble;
        dirac_spectral::EnsembleConfig {
            states: e.states,
            degree: e.degree,
            radial_power: e.radial_power,
            sigma: e.sigma,
            seed: self.seed,
        }
    }

    pub fn radial_config(&self) -> dirac_spectral::RadialConfig {
        let r = &self.radial;
        dirac_spectral::RadialConfig {
            r_min: r.r_min,
            r_max_bohr: r.r_max_bohr,
            dt: r.dt,
            energy_tol: r.energy_tol,
            ..dirac_spectral::RadialConfig::default()
        }
    }
}
