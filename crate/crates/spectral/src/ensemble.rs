//! Seeded smooth test spinors: random polynomials under a Gaussian envelope.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::grid::{Grid, GridSpinor};
use crate::num::C64;
use crate::SpectralError;

#[derive(Clone, Debug, PartialEq)]
pub struct EnsembleConfig {
    pub states: usize,
    /// Total degree of the random polynomial.
    pub degree: u32,
    /// Envelope factor r^(2·radial_power); softens the Coulomb cusp.
    pub radial_power: u32,
    pub sigma: f64,
    pub seed: u64,
}

impl Default for EnsembleConfig {
    fn default() -> Self {
        EnsembleConfig { states: 5, degree: 1, radial_power: 2, sigma: 5.0, seed: 20240917 }
    }
}

fn monomials(degree: u32) -> Vec<[u32; 3]> {
    let mut v = Vec::new();
    for a in 0..=degree {
        for b in 0..=degree - a {
            for c in 0..=degree - a - b {
                v.push([a, b, c]);
            }
        }
    }
    v
}

/// `cfg.states` unit-norm spinors; identical for identical grid and config.
pub fn test_ensemble(grid: &Arc<Grid>, cfg: &EnsembleConfig) -> Result<Vec<GridSpinor>, SpectralError> {
    if cfg.states == 0 {
        return Err(SpectralError::InvalidParameter("ensemble needs at least one state".into()));
    }
    if !(cfg.sigma.is_finite() && cfg.sigma > 0.0) {
        return Err(SpectralError::InvalidParameter(format!("envelope width {}", cfg.sigma)));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let mono = monomials(cfg.degree);
    let mut out = Vec::with_capacity(cfg.states);
    for _ in 0..cfg.states {
        let coef: Vec<[C64; 4]> = mono
            .iter()
            .map(|_| std::array::from_fn(|_| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))))
            .collect();
        let s2 = cfg.sigma * cfg.sigma;
        let psi = GridSpinor::from_fn(grid, |x| {
            let r2 = x[0] * x[0] + x[1] * x[1] + x[2] * x[2];
            let env = (r2 / s2).powi(cfg.radial_power as i32) * (-0.5 * r2 / s2).exp();
            let mut v = [C64::new(0.0, 0.0); 4];
            for (m, c) in mono.iter().zip(&coef) {
                let xm = (0..3).map(|k| (x[k] / cfg.sigma).powi(m[k] as i32)).product::<f64>() * env;
                for k in 0..4 {
                    v[k] += c[k] * xm;
                }
            }
            v
        });
        out.push(psi.normalized());
    }
    Ok(out)
}
