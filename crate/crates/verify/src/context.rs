//! Lazily built shared inputs. Claims in one run share the gamma set, the
//! grid operators, the test ensembles and the tilde sets.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use dirac_algebra::clifford::{build_gamma_set, GammaSet};
use dirac_spectral::fw::{build_fw_layer, build_tilde_gammas, verify_tilde_invariance, FwLayer, InvarianceRow, TildeGammaSet, TildeReading};
use dirac_spectral::jl::{verify_johnson_lippmann, JlStateReport, JlTolerances};
use dirac_spectral::observables::{verify_constants_of_motion, GridTolerances};
use dirac_spectral::radial::is_valid_state;
use dirac_spectral::{
    build_observables, solve_radial, test_ensemble, GridSpinor, NumericCheck, Observables, RadialState, SpectralError,
};

use crate::config::RunConfig;
use crate::VerifyError;

type Lazy<T> = OnceLock<Result<T, SpectralError>>;

fn get<T>(cell: &Lazy<T>, init: impl FnOnce() -> Result<T, SpectralError>) -> Result<&T, VerifyError> {
    cell.get_or_init(init).as_ref().map_err(|e| VerifyError::Spectral(e.clone()))
}

struct TildeCache {
    set: OnceLock<TildeGammaSet>,
    invariance: OnceLock<Vec<InvarianceRow>>,
}

pub struct Context {
    pub cfg: RunConfig,
    gammas: OnceLock<GammaSet>,
    observables: Lazy<Observables>,
    ensemble: Lazy<Vec<GridSpinor>>,
    radial: Lazy<Vec<RadialState>>,
    motion: Lazy<Vec<NumericCheck>>,
    jl: Lazy<Vec<JlStateReport>>,
    fw: Lazy<FwLayer>,
    fw_ensemble: Lazy<Vec<GridSpinor>>,
    tilde: BTreeMap<&'static str, TildeCache>,
}

impl Context {
    pub fn new(cfg: RunConfig) -> Self {
        let tilde = TildeReading::ALL
            .iter()
            .map(|r| (r.as_str(), TildeCache { set: OnceLock::new(), invariance: OnceLock::new() }))
            .collect();
        Context {
            cfg,
            gammas: OnceLock::new(),
            observables: OnceLock::new(),
            ensemble: OnceLock::new(),
            radial: OnceLock::new(),
            motion: OnceLock::new(),
            jl: OnceLock::new(),
            fw: OnceLock::new(),
            fw_ensemble: OnceLock::new(),
            tilde,
        }
    }

    pub fn gammas(&self) -> &GammaSet {
        self.gammas.get_or_init(build_gamma_set)
    }

    pub fn observables(&self) -> Result<&Observables, VerifyError> {
        get(&self.observables, || build_observables(&self.cfg.physics()))
    }

    pub fn ensemble(&self) -> Result<&[GridSpinor], VerifyError> {
        let obs = self.observables()?;
        get(&self.ensemble, || test_ensemble(&obs.grid, &self.cfg.ensemble_config())).map(|v| v.as_slice())
    }

    /// κ = ±1..±kappa_max at n ≤ n_max, invalid labels dropped.
    pub fn kappas(&self) -> Vec<i32> {
        let k = self.cfg.radial.kappa_max as i32;
        (-k..=k).filter(|&x| x != 0).collect()
    }

    pub fn radial_states(&self) -> Result<&[RadialState], VerifyError> {
        let r = &self.cfg.radial;
        get(&self.radial, || {
            let kappas: Vec<i32> =
                self.kappas().into_iter().filter(|&k| (1..=r.n_max).any(|n| is_valid_state(n, k))).collect();
            solve_radial(r.n_max, &kappas, self.cfg.mass, self.cfg.zalpha, &self.cfg.radial_config())
        })
        .map(|v| v.as_slice())
    }

    /// Grid constants-of-motion checks; commutators are held to the
    /// potential tolerance.
    pub fn constants_of_motion(&self) -> Result<&[NumericCheck], VerifyError> {
        let obs = self.observables()?;
        let states = self.ensemble()?;
        let t = &self.cfg.tolerances;
        let tol = GridTolerances {
            commutator: t.potential,
            k_squared: t.k_squared,
            anticommutator: t.anticommutator,
            negative_floor: t.negative_floor,
        };
        get(&self.motion, || Ok(verify_constants_of_motion(obs, states, &tol, self.cfg.seed))).map(|v| v.as_slice())
    }

    pub fn johnson_lippmann(&self) -> Result<&[JlStateReport], VerifyError> {
        let states = self.radial_states()?;
        let t = &self.cfg.tolerances;
        let tol = JlTolerances { identity: t.exact_numeric, eigen: t.radial_eigen };
        get(&self.jl, || verify_johnson_lippmann(states, self.cfg.mass, self.cfg.zalpha, &tol)).map(|v| v.as_slice())
    }

    pub fn fw_layer(&self) -> Result<&FwLayer, VerifyError> {
        get(&self.fw, || build_fw_layer(&self.cfg.physics()))
    }

    pub fn fw_ensemble(&self) -> Result<&[GridSpinor], VerifyError> {
        let layer = self.fw_layer()?;
        get(&self.fw_ensemble, || test_ensemble(&layer.grid, &self.cfg.ensemble_config())).map(|v| v.as_slice())
    }

    pub fn tilde_set(&self, reading: TildeReading) -> Result<&TildeGammaSet, VerifyError> {
        let layer = self.fw_layer()?;
        Ok(self.tilde[reading.as_str()].set.get_or_init(|| build_tilde_gammas(layer, reading)))
    }

    /// Free and Coulomb residuals of the 31 tilde elements. The Coulomb
    /// threshold is the potential tolerance.
    pub fn tilde_invariance(&self, reading: TildeReading) -> Result<&[InvarianceRow], VerifyError> {
        let layer = self.fw_layer()?;
        let states = self.fw_ensemble()?;
        let set = self.tilde_set(reading)?;
        let t = &self.cfg.tolerances;
        Ok(self.tilde[reading.as_str()]
            .invariance
            .get_or_init(|| verify_tilde_invariance(layer, set, states, t.exact_numeric, t.potential)))
    }
}
