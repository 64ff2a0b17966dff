//! Grid realisations of Ĥ, J⃗, K and the Johnson–Lippmann operator.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::check::{nan_max, NumericCheck};
use crate::grid::{Grid, GridSpinor};
use crate::num::{NumGammas, NumOp, C64, M4};
use crate::operator::GridOperator;
use crate::SpectralError;

/// Grid and physics parameters shared by the numeric modules.
#[derive(Clone, Debug, PartialEq)]
pub struct PhysicsConfig {
    pub n: usize,
    pub box_len: f64,
    pub mass: f64,
    pub zalpha: f64,
}

impl Default for PhysicsConfig {
    fn default() -> Self {
        PhysicsConfig { n: 32, box_len: 70.0, mass: 1.0, zalpha: 1.0 / 137.035999084 }
    }
}

impl PhysicsConfig {
    pub fn validate(&self) -> Result<(), SpectralError> {
        if !(self.mass.is_finite() && self.mass > 0.0) {
            return Err(SpectralError::InvalidParameter(format!("mass {}", self.mass)));
        }
        if !(self.zalpha > 0.0 && self.zalpha < 1.0) {
            return Err(SpectralError::CouplingOutOfRange(self.zalpha));
        }
        Ok(())
    }

    pub fn grid(&self) -> Result<Arc<Grid>, SpectralError> {
        self.validate()?;
        Grid::new(self.n, self.box_len)
    }
}

fn radius(x: [f64; 3]) -> f64 {
    (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt()
}

pub struct Observables {
    pub grid: Arc<Grid>,
    pub gammas: NumGammas,
    /// Dirac–Coulomb `γ⁰γ·p + γ⁰m − Zα/r`.
    pub h: GridOperator,
    pub h_free: GridOperator,
    /// Multiplication by `−Zα/r`.
    pub coulomb: GridOperator,
    pub momentum: [GridOperator; 3],
    pub orbital: [GridOperator; 3],
    pub j: [GridOperator; 3],
    pub j_sq: GridOperator,
    pub k: GridOperator,
    pub d: GridOperator,
}

pub fn build_observables(cfg: &PhysicsConfig) -> Result<Observables, SpectralError> {
    let grid = cfg.grid()?;
    let g = NumGammas::new();
    let (m, za) = (cfg.mass, cfg.zalpha);
    let kinetic = GridOperator::symbol(&grid, |k| g.free_hamiltonian(k, m));
    let coulomb = GridOperator::position(&grid, |x| -za / radius(x));
    let h = &kinetic + &coulomb;
    let momentum: [GridOperator; 3] = std::array::from_fn(|j| GridOperator::multiplier(&grid, move |k| k[j]));
    let pos: [GridOperator; 3] = std::array::from_fn(|j| GridOperator::position(&grid, move |x| x[j]));
    let orbital: [GridOperator; 3] = std::array::from_fn(|a| {
        let (b, c) = ((a + 1) % 3, (a + 2) % 3);
        &(&pos[b] * &momentum[c]) - &(&pos[c] * &momentum[b])
    });
    let spin = g.spin.clone().map(GridOperator::constant);
    let j: [GridOperator; 3] = std::array::from_fn(|a| &orbital[a] + &spin[a]);
    let j_sq = GridOperator::sum(j.iter().map(|ja| ja * ja).collect());
    let s_dot_l = GridOperator::sum((0..3).map(|a| &spin[a] * &orbital[a]).collect());
    let g0 = GridOperator::constant(g.dirac[0].clone());
    let k = &g0 * &GridOperator::sum(vec![s_dot_l.scale(C64::new(2.0, 0.0)), GridOperator::identity()]);
    let s_dot_rhat = GridOperator::sum(
        (0..3)
            .map(|a| &spin[a].scale(C64::new(2.0, 0.0)) * &GridOperator::position(&grid, move |x| x[a] / radius(x)))
            .collect(),
    );
    let g4 = GridOperator::constant(g.gamma[4].clone());
    let shifted = &h - &g0.scale(C64::new(m, 0.0));
    let d = &s_dot_rhat + &(&(&k * &g4) * &shifted).scale(C64::new(1.0 / (m * za), 0.0));
    let h_free = kinetic;
    Ok(Observables { grid, gammas: g, h, h_free, coulomb, momentum, orbital, j, j_sq, k, d })
}

/// `‖(QH − HQ)ψ‖ / (q_scale·‖Hψ‖)`.
pub fn commutator_residual(q: &GridOperator, h: &GridOperator, psi: &GridSpinor, q_scale: f64) -> f64 {
    let hpsi = h.apply(psi);
    let qhpsi = q.apply(&hpsi);
    let hqpsi = h.apply(&q.apply(psi));
    qhpsi.sub(&hqpsi).norm() / (q_scale * hpsi.norm())
}

/// `‖(A − B)ψ‖ / ‖Bψ‖` for an operator identity `A = B`.
pub fn identity_residual(a: &GridOperator, b: &GridOperator, psi: &GridSpinor) -> f64 {
    let bpsi = b.apply(psi);
    a.apply(psi).sub(&bpsi).norm() / bpsi.norm()
}

/// Seeded random constant 4×4 matrix for negative controls.
pub fn random_matrix(seed: u64) -> NumOp {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    NumOp::linear(M4::from_fn(|_, _| C64::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0))))
}

#[derive(Clone, Debug, PartialEq)]
pub struct GridTolerances {
    pub commutator: f64,
    pub k_squared: f64,
    pub anticommutator: f64,
    pub negative_floor: f64,
}

impl Default for GridTolerances {
    fn default() -> Self {
        GridTolerances { commutator: 1e-6, k_squared: 1e-10, anticommutator: 1e-8, negative_floor: 1e-2 }
    }
}

/// Worst case over the ensemble of each grid check on the constants of
/// motion. `[D, Ĥ]` is measured and reported with the commutator tolerance.
pub fn verify_constants_of_motion(
    obs: &Observables,
    states: &[GridSpinor],
    tol: &GridTolerances,
    control_seed: u64,
) -> Vec<NumericCheck> {
    let h = &obs.h;
    let worst = |f: &(dyn Fn(&GridSpinor) -> f64 + Sync)| nan_max(states.par_iter().map(f).collect::<Vec<_>>());
    let mut out = Vec::new();
    for a in 0..3 {
        let r = worst(&|psi| commutator_residual(&obs.j[a], h, psi, 1.0));
        out.push(NumericCheck::at_most(format!("[J{}, H]", a + 1), r, tol.commutator));
    }
    let r = worst(&|psi| commutator_residual(&obs.k, h, psi, 1.0));
    out.push(NumericCheck::at_most("[K, H]", r, tol.commutator));
    let r = worst(&|psi| commutator_residual(&obs.d, h, psi, 1.0));
    out.push(NumericCheck::at_most("[D, H]", r, tol.commutator));
    let k_sq = &obs.k * &obs.k;
    let rhs = &obs.j_sq + &GridOperator::scalar(C64::new(0.25, 0.0));
    let r = worst(&|psi| identity_residual(&k_sq, &rhs, psi));
    out.push(NumericCheck::at_most("K^2 = J^2 + 1/4", r, tol.k_squared));
    let r = worst(&|psi| {
        let kd = obs.k.anticommutator(&obs.d);
        kd.apply(psi).norm() / obs.d.apply(psi).norm()
    });
    out.push(NumericCheck::at_most("{K, D} = 0", r, tol.anticommutator));
    let control = GridOperator::constant(random_matrix(control_seed));
    let scale = random_matrix(control_seed).l.norm();
    // the control must fail on every state, so take the smallest
    let least = states
        .par_iter()
        .map(|psi| commutator_residual(&control, h, psi, scale))
        .collect::<Vec<_>>()
        .into_iter()
        .fold(f64::INFINITY, f64::min);
    out.push(NumericCheck::at_least("negative control [M, H]", least, tol.negative_floor));
    out
}
