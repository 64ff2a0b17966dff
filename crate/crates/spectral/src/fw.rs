//! Foldy–Wouthuysen layer: ω, the FW unitary, tilde gamma operators in
//! three readings, and numeric invariance checks.

use std::sync::Arc;

use dirac_algebra::lorentz::{build_transition_w, metric, spin1_casimir_block, GENERATORS};
use rayon::prelude::*;

use crate::check::{nan_max, NumericCheck};
use crate::grid::{Grid, GridSpinor};
use crate::num::{NumGammas, NumOp, C64, M4};
use crate::observables::PhysicsConfig;
use crate::operator::GridOperator;
use crate::SpectralError;

fn c(x: f64) -> C64 {
    C64::new(x, 0.0)
}

pub fn omega(k: [f64; 3], m: f64) -> f64 {
    (k[0] * k[0] + k[1] * k[1] + k[2] * k[2] + m * m).sqrt()
}

/// `(ω + m + γ·k)/√(2ω(ω + m))`.
pub fn unitary_symbol(g: &NumGammas, k: [f64; 3], m: f64) -> M4 {
    let w = omega(k, m);
    (M4::identity() * c(w + m) + g.gamma_dot(k)) * c(1.0 / (2.0 * w * (w + m)).sqrt())
}

pub fn unitary_inverse_symbol(g: &NumGammas, k: [f64; 3], m: f64) -> M4 {
    let w = omega(k, m);
    (M4::identity() * c(w + m) - g.gamma_dot(k)) * c(1.0 / (2.0 * w * (w + m)).sqrt())
}

/// `(ω + m + γ⁰γ·k)/√(2ω(ω + m))`, the variant with α·p in the numerator.
pub fn alpha_form_symbol(g: &NumGammas, k: [f64; 3], m: f64) -> M4 {
    let w = omega(k, m);
    (M4::identity() * c(w + m) + g.dirac[0].l * g.gamma_dot(k)) * c(1.0 / (2.0 * w * (w + m)).sqrt())
}

/// Largest `max|SS† − I|` over the grid momenta.
pub fn unitarity_defect(grid: &Grid, symbol: impl Fn([f64; 3]) -> M4) -> f64 {
    nan_max((0..grid.len()).map(|i| {
        let s = symbol(grid.momentum(i));
        (s * s.adjoint() - M4::identity()).iter().map(|z| z.norm()).fold(0.0, f64::max)
    }))
}

/// Operators shared by the FW checks.
pub struct FwLayer {
    pub grid: Arc<Grid>,
    pub mass: f64,
    pub gammas: NumGammas,
    pub u: GridOperator,
    pub u_inv: GridOperator,
    /// `γ⁰ω`.
    pub h_fw: GridOperator,
    pub h_free: GridOperator,
    /// Dirac–Coulomb Hamiltonian.
    pub h_coulomb: GridOperator,
    /// Multiplication by `Zα/r` (the V of the evolution operators).
    pub v: GridOperator,
}

pub fn build_fw_layer(cfg: &PhysicsConfig) -> Result<FwLayer, SpectralError> {
    let grid = cfg.grid()?;
    let g = NumGammas::new();
    let m = cfg.mass;
    let za = cfg.zalpha;
    let u = GridOperator::symbol(&grid, |k| unitary_symbol(&g, k, m));
    let u_inv = GridOperator::symbol(&grid, |k| unitary_inverse_symbol(&g, k, m));
    let g0 = g.dirac[0].l;
    let h_fw = GridOperator::symbol(&grid, |k| g0 * c(omega(k, m)));
    let h_free = GridOperator::symbol(&grid, |k| g.free_hamiltonian(k, m));
    let v = GridOperator::position(&grid, |x| za / (x[0] * x[0] + x[1] * x[1] + x[2] * x[2]).sqrt());
    let h_coulomb = &h_free - &v;
    Ok(FwLayer { grid, mass: m, gammas: g, u, u_inv, h_fw, h_free, h_coulomb, v })
}

fn worst(states: &[GridSpinor], f: impl Fn(&GridSpinor) -> f64 + Sync + Send) -> f64 {
    nan_max(states.par_iter().map(f).collect::<Vec<_>>())
}

/// `‖(A − B)ψ‖ / ‖ψ‖`, worst case.
fn op_distance(a: &GridOperator, b: &GridOperator, states: &[GridSpinor]) -> f64 {
    worst(states, |psi| a.apply(psi).sub(&b.apply(psi)).norm() / psi.norm())
}

#[derive(Clone, Debug)]
pub struct FwUnitaryReport {
    pub unitarity: NumericCheck,
    pub rest_frame: NumericCheck,
    pub diagonalises: NumericCheck,
    /// Unitarity defect of the α·p-numerator variant, reported only.
    pub alpha_form_defect: f64,
}

pub fn verify_fw_unitary(layer: &FwLayer, states: &[GridSpinor]) -> FwUnitaryReport {
    let (g, m) = (&layer.gammas, layer.mass);
    let unitarity = unitarity_defect(&layer.grid, |k| unitary_symbol(g, k, m));
    let rest = (unitary_symbol(g, [0.0; 3], m) - M4::identity()).iter().map(|z| z.norm()).fold(0.0, f64::max);
    let conj = &(&layer.u * &layer.h_free) * &layer.u_inv;
    let diag = worst(states, |psi| {
        let want = layer.h_fw.apply(psi);
        conj.apply(psi).sub(&want).norm() / want.norm()
    });
    FwUnitaryReport {
        unitarity: NumericCheck::at_most("U U^dagger = I per momentum", unitarity, 1e-12),
        rest_frame: NumericCheck::at_most("U(p = 0) = I", rest, 1e-15),
        diagonalises: NumericCheck::at_most("U H_free U^-1 = g0 omega", diag, 1e-8),
        alpha_form_defect: unitarity_defect(&layer.grid, |k| alpha_form_symbol(g, k, m)),
    }
}

/// How the derivative operators of the printed tilde formulas are read.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TildeReading {
    /// `−γ·∇` taken as `γ·p`, i.e. ∂ⱼ ↦ −pⱼ in every printed formula.
    Momentum,
    /// `∂ⱼ ↦ i pⱼ` throughout.
    Literal,
    /// `U⁻¹(·)U` applied to the constant operators.
    Oracle,
}

impl TildeReading {
    pub const ALL: [TildeReading; 3] = [TildeReading::Momentum, TildeReading::Literal, TildeReading::Oracle];

    pub fn as_str(self) -> &'static str {
        match self {
            TildeReading::Momentum => "momentum",
            TildeReading::Literal => "literal",
            TildeReading::Oracle => "oracle",
        }
    }
}

/// Seven tilde gammas plus `γ̃⁰` and the antilinear `C̃`.
#[derive(Clone, Debug)]
pub struct TildeGammaSet {
    pub reading: TildeReading,
    /// Index 0 holds γ̃⁰, indices 1..=7 hold γ̃ᴬ.
    pub gamma: [GridOperator; 8],
    pub conj: GridOperator,
}

impl TildeGammaSet {
    pub fn get(&self, a: usize) -> &GridOperator {
        &self.gamma[a]
    }
}

pub fn build_tilde_gammas(layer: &FwLayer, reading: TildeReading) -> TildeGammaSet {
    let g = &layer.gammas;
    let m = layer.mass;
    let grid = &layer.grid;
    let i = GridOperator::scalar(C64::new(0.0, 1.0));
    if reading == TildeReading::Oracle {
        let conjugated = |op: &NumOp| &(&layer.u_inv * &GridOperator::constant(op.clone())) * &layer.u;
        return TildeGammaSet {
            reading,
            gamma: std::array::from_fn(|a| conjugated(&g.gamma[a])),
            conj: conjugated(&NumOp::conjugation()),
        };
    }
    // symbol of −γ·∇ and of the vector i∂ⱼ under this reading
    let (minus_grad, i_partial): (C64, C64) = match reading {
        TildeReading::Momentum => (c(1.0), C64::new(0.0, -1.0)),
        _ => (C64::new(0.0, -1.0), c(-1.0)),
    };
    let x = move |k: [f64; 3]| g.gamma_dot(k) * minus_grad;
    let id = M4::identity();
    let g0 = g.dirac[0].l;
    let g4 = g.gamma[4].l;
    let t0 = GridOperator::symbol(grid, |k| g0 * (x(k) + id * c(m)) * c(1.0 / omega(k, m)));
    let spatial: [GridOperator; 3] = std::array::from_fn(|j| {
        let gj = g.dirac[j + 1].l;
        GridOperator::symbol(grid, move |k| {
            let w = omega(k, m);
            gj * (x(k) + id * c(m)) * c(1.0 / w) + (x(k) + id * c(w + m)) * c(k[j] / (w * (w + m)))
        })
    });
    let t4 = GridOperator::symbol(grid, |k| g4 * (x(k) + id * c(m)) * c(1.0 / omega(k, m)));
    let g1 = g.dirac[1].l;
    let g2 = g.dirac[2].l;
    let conj = &GridOperator::symbol(grid, |k| {
        let w = omega(k, m);
        id + (g1 * c(k[0]) + g2 * c(k[1])) * i_partial * c(2.0 / (2.0 * w * (w + m)).sqrt())
    }) * &GridOperator::conjugation();
    let [t1, t2, t3] = spatial;
    let t13c = &(&t1 * &t3) * &conj;
    let t5 = t13c.clone();
    let t6 = &i * &t13c;
    let t7 = &i * &t0;
    TildeGammaSet { reading, gamma: [t0, t1, t2, t3, t4, t5, t6, t7], conj }
}

fn delta_identity(a: usize, b: usize, value: f64) -> GridOperator {
    if a == b {
        GridOperator::scalar(c(value))
    } else {
        GridOperator::scalar(c(0.0))
    }
}

/// `{γ̃ᴬ, γ̃ᴮ} = −2δᴬᴮ` for A, B in 1..=7, plus `(γ̃⁰)² = 1`.
pub fn verify_tilde_clifford(set: &TildeGammaSet, states: &[GridSpinor], tol: f64) -> Vec<NumericCheck> {
    let mut out = Vec::new();
    for a in 1..=7 {
        for b in a..=7 {
            let lhs = set.get(a).anticommutator(set.get(b));
            let r = op_distance(&lhs, &delta_identity(a, b, -2.0), states);
            out.push(NumericCheck::at_most(format!("{{g~{a}, g~{b}}} = -2 delta"), r, tol));
        }
    }
    let sq = set.get(0) * set.get(0);
    out.push(NumericCheck::at_most("(g~0)^2 = 1", op_distance(&sq, &GridOperator::identity(), states), tol));
    out
}

/// Per-component distance between two tilde sets.
pub fn compare_tilde_sets(a: &TildeGammaSet, b: &TildeGammaSet, states: &[GridSpinor], tol: f64) -> Vec<NumericCheck> {
    let mut out: Vec<NumericCheck> = (0..8)
        .map(|k| NumericCheck::at_most(format!("g~{k}"), op_distance(a.get(k), b.get(k), states), tol))
        .collect();
    out.push(NumericCheck::at_most("C~", op_distance(&a.conj, &b.conj, states), tol));
    out
}

/// The 31 tilde-algebra elements, named as in the exact engine.
pub fn tilde_algebra31(set: &TildeGammaSet) -> Vec<(String, GridOperator)> {
    let quarter = c(0.25);
    let mut so6 = Vec::with_capacity(15);
    for a in 1..=6 {
        for b in a + 1..=6 {
            so6.push((format!("s{a}{b}"), set.get(a).commutator(set.get(b)).scale(quarter)));
        }
    }
    let ig0 = set.get(7).clone();
    let mut v = so6.clone();
    v.extend(so6.iter().map(|(n, q)| (format!("ig0*{n}"), &ig0 * q)));
    v.push(("ig0".to_string(), ig0));
    v
}

/// `‖[Q, iH]ψ‖ / ‖Hψ‖`, the stationary part of `[Q, ∂₀ + iH]`.
pub fn evolution_residual(q: &GridOperator, h: &GridOperator, psi: &GridSpinor) -> f64 {
    // applied factor by factor: Q may be antilinear, and building the fused
    // commutator costs more than four applications
    let i = C64::new(0.0, 1.0);
    let hpsi = h.apply(psi);
    let qihpsi = q.apply(&hpsi.scale(i));
    let ihqpsi = h.apply(&q.apply(psi)).scale(i);
    qihpsi.sub(&ihqpsi).norm() / hpsi.norm()
}

#[derive(Clone, Debug)]
pub struct InvarianceRow {
    pub name: String,
    pub free: NumericCheck,
    pub coulomb: NumericCheck,
}

/// Free residuals are judged at `free_tol`; Coulomb residuals are measured
/// against `coulomb_tol` and only reported.
pub fn verify_tilde_invariance(
    layer: &FwLayer,
    set: &TildeGammaSet,
    states: &[GridSpinor],
    free_tol: f64,
    coulomb_tol: f64,
) -> Vec<InvarianceRow> {
    tilde_algebra31(set)
        .into_iter()
        .map(|(name, q)| {
            let free = worst(states, |psi| evolution_residual(&q, &layer.h_free, psi));
            let coul = worst(states, |psi| evolution_residual(&q, &layer.h_coulomb, psi));
            InvarianceRow {
                free: NumericCheck::at_most(format!("[{name}~, D_free]"), free, free_tol),
                coulomb: NumericCheck::at_most(format!("[{name}~, D_coulomb]"), coul, coulomb_tol),
                name,
            }
        })
        .collect()
}

/// Tilde images of the four Lorentz sets, generators in the exact engine's order.
pub fn tilde_lorentz_sets(set: &TildeGammaSet) -> Vec<(&'static str, [GridOperator; 6])> {
    let half_i = C64::new(0.0, 0.5);
    let s_i: [GridOperator; 6] = GENERATORS.map(|(a, b)| {
        if a == 0 {
            (set.get(b) * set.get(4)).scale(half_i)
        } else {
            set.get(a).commutator(set.get(b)).scale(c(0.25))
        }
    });
    let g2c = set.get(2) * &set.conj;
    let g0g2c = set.get(0) * &g2c;
    let s_ii: [GridOperator; 6] = [
        g2c.scale(C64::new(0.0, -0.5)),
        g2c.scale(c(-0.5)),
        set.get(0).scale(c(0.5)),
        g0g2c.scale(c(-0.5)),
        g0g2c.scale(half_i),
        GridOperator::scalar(C64::new(0.0, -0.5)),
    ];
    let ts: [GridOperator; 6] = std::array::from_fn(|k| &s_i[k] + &s_ii[k]);
    let v: [GridOperator; 6] =
        std::array::from_fn(|k| if GENERATORS[k].0 == 0 { &s_ii[k] - &s_i[k] } else { &s_i[k] + &s_ii[k] });
    vec![("I", s_i), ("II", s_ii), ("TS", ts), ("V", v)]
}

fn lookup(gens: &[GridOperator; 6], a: usize, b: usize) -> Option<GridOperator> {
    if a == b {
        return None;
    }
    GENERATORS.iter().enumerate().find_map(|(k, &(x, y))| {
        if (x, y) == (a, b) {
            Some(gens[k].clone())
        } else if (y, x) == (a, b) {
            Some(-&gens[k])
        } else {
            None
        }
    })
}

fn so13_rhs(gens: &[GridOperator; 6], mu: usize, nu: usize, rho: usize, sigma: usize) -> GridOperator {
    let mut terms = Vec::new();
    for (g, a, b) in [(metric(mu, rho), nu, sigma), (metric(rho, nu), sigma, mu), (metric(nu, sigma), mu, rho), (metric(sigma, mu), rho, nu)] {
        if g != 0 {
            if let Some(op) = lookup(gens, a, b) {
                terms.push(op.scale(c(-(g as f64))));
            }
        }
    }
    GridOperator::sum(terms)
}

/// The 15 SO(1,3) brackets of one generator set.
pub fn verify_tilde_so13(gens: &[GridOperator; 6], states: &[GridSpinor], tol: f64) -> Vec<NumericCheck> {
    let mut out = Vec::new();
    for (i, &(m, n)) in GENERATORS.iter().enumerate() {
        for (j, &(r, s)) in GENERATORS.iter().enumerate().skip(i + 1) {
            let lhs = gens[i].commutator(&gens[j]);
            let rhs = so13_rhs(gens, m, n, r, s);
            out.push(NumericCheck::at_most(format!("[s{m}{n}, s{r}{s}]"), op_distance(&lhs, &rhs, states), tol));
        }
    }
    out
}

#[derive(Clone, Debug)]
pub struct BosonicTildeReport {
    pub brackets: Vec<(&'static str, Vec<NumericCheck>)>,
    /// `Σ (s̃_TS^{rot})² = U⁻¹W⁻¹(−2·diag(1,1,1,0))WU`.
    pub casimir: NumericCheck,
    /// `s̃_II^{12} = −i/2`.
    pub scalar_generator: NumericCheck,
}

pub fn verify_bosonic_tilde(layer: &FwLayer, set: &TildeGammaSet, states: &[GridSpinor], tol: f64) -> BosonicTildeReport {
    let sets = tilde_lorentz_sets(set);
    let brackets = sets.iter().map(|(name, gens)| (*name, verify_tilde_so13(gens, states, tol))).collect();
    let ts = &sets[2].1;
    let cas = GridOperator::sum((3..6).map(|k| &ts[k] * &ts[k]).collect());
    let w = build_transition_w();
    let block = w.w_inv.compose(&spin1_casimir_block()).compose(&w.w);
    let rhs = &(&layer.u_inv * &GridOperator::constant(NumOp::from_exact(&block))) * &layer.u;
    let casimir = NumericCheck::at_most("W~-conjugated spin block Casimir = -2 diag(1,1,1,0)", op_distance(&cas, &rhs, states), tol);
    let scalar = op_distance(&sets[1].1[5], &GridOperator::scalar(C64::new(0.0, -0.5)), states);
    BosonicTildeReport {
        brackets,
        casimir,
        scalar_generator: NumericCheck::at_most("s~_II^12 = -i/2", scalar, tol),
    }
}

/// Square and norm behaviour of C̃, reported without a claim attached.
#[derive(Clone, Debug, PartialEq)]
pub struct ConjReport {
    /// `‖(C̃² − 1)ψ‖/‖ψ‖`.
    pub square_minus_identity: f64,
    /// `|‖C̃ψ‖/‖ψ‖ − 1|`.
    pub norm_defect: f64,
}

pub fn conj_report(set: &TildeGammaSet, states: &[GridSpinor]) -> ConjReport {
    let sq = &set.conj * &set.conj;
    ConjReport {
        square_minus_identity: op_distance(&sq, &GridOperator::identity(), states),
        norm_defect: worst(states, |psi| (set.conj.apply(psi).norm() / psi.norm() - 1.0).abs()),
    }
}

/// `‖(U Ĥ U⁻¹ − (γ⁰ω − V))ψ‖/‖ψ‖`: how far the FW image of the Coulomb
/// Hamiltonian is from the FW-frame Coulomb operator.
pub fn fw_coulomb_defect(layer: &FwLayer, states: &[GridSpinor]) -> f64 {
    let lhs = &(&layer.u * &layer.h_coulomb) * &layer.u_inv;
    let rhs = &layer.h_fw - &layer.v;
    op_distance(&lhs, &rhs, states)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unitary_inverse_is_inverse() {
        let g = NumGammas::new();
        let k = [0.3, -1.2, 0.7];
        let p = unitary_symbol(&g, k, 1.0) * unitary_inverse_symbol(&g, k, 1.0);
        assert!((p - M4::identity()).iter().all(|z| z.norm() < 1e-14));
    }

    #[test]
    fn omega_at_rest_is_mass() {
        assert_eq!(omega([0.0; 3], 2.5), 2.5);
    }

    #[test]
    fn alpha_form_is_not_unitary() {
        let g = NumGammas::new();
        let s = alpha_form_symbol(&g, [0.5, 0.0, 0.0], 1.0);
        assert!((s * s.adjoint() - M4::identity()).iter().any(|z| z.norm() > 1e-3));
    }
}
