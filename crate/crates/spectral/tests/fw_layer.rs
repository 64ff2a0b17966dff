use dirac_algebra::clifford::{build_algebra31, build_gamma_set};
use dirac_algebra::equation::{formal_commutator, EvolutionForm, StructuredEvolutionOp};
use dirac_algebra::ExactScalar;
use dirac_spectral::fw::*;
use dirac_spectral::{test_ensemble, EnsembleConfig, GridOperator, GridSpinor, NumOp, PhysicsConfig};
use proptest::prelude::*;

fn layer() -> (FwLayer, Vec<GridSpinor>) {
    let cfg = PhysicsConfig { n: 16, box_len: 40.0, ..PhysicsConfig::default() };
    let layer = build_fw_layer(&cfg).unwrap();
    let states = test_ensemble(&layer.grid, &EnsembleConfig { states: 3, sigma: 3.0, ..EnsembleConfig::default() }).unwrap();
    (layer, states)
}

#[test]
fn fw_unitary_diagonalises_the_free_hamiltonian() {
    let (layer, states) = layer();
    let rep = verify_fw_unitary(&layer, &states);
    assert!(rep.unitarity.passed(), "{:e}", rep.unitarity.value);
    assert!(rep.rest_frame.passed());
    assert!(rep.diagonalises.passed(), "{:e}", rep.diagonalises.value);
    // the numerator with α·p in place of γ·p is not unitary
    assert!(rep.alpha_form_defect > 0.5);
}

#[test]
fn oracle_tilde_set_carries_every_relation() {
    let (layer, states) = layer();
    let set = build_tilde_gammas(&layer, TildeReading::Oracle);
    for c in verify_tilde_clifford(&set, &states, 1e-8) {
        assert!(c.passed(), "{} = {:e}", c.name, c.value);
    }
    for row in verify_tilde_invariance(&layer, &set, &states, 1e-8, 1e-6) {
        assert!(row.free.passed(), "{} = {:e}", row.free.name, row.free.value);
    }
    let bos = verify_bosonic_tilde(&layer, &set, &states, 1e-8);
    for (label, checks) in &bos.brackets {
        for c in checks {
            assert!(c.passed(), "{label} {} = {:e}", c.name, c.value);
        }
    }
    assert!(bos.casimir.passed());
    assert!(bos.scalar_generator.passed());
    let conj = conj_report(&set, &states);
    assert!(conj.square_minus_identity < 1e-12);
    assert!(conj.norm_defect < 1e-12);
}

#[test]
fn printed_linear_tilde_gammas_agree_with_the_oracle() {
    let (layer, states) = layer();
    let oracle = build_tilde_gammas(&layer, TildeReading::Oracle);
    let printed = build_tilde_gammas(&layer, TildeReading::Momentum);
    let cmp = compare_tilde_sets(&printed, &oracle, &states, 1e-8);
    for c in cmp.iter().filter(|c| ["g~0", "g~1", "g~2", "g~3", "g~4", "g~7"].contains(&c.name.as_str())) {
        assert!(c.passed(), "{} = {:e}", c.name, c.value);
    }
    // the printed C̃ is not the FW image of Ĉ; γ̃⁵, γ̃⁶ inherit the gap
    for name in ["g~5", "g~6", "C~"] {
        let c = cmp.iter().find(|c| c.name == name).unwrap();
        assert!(c.value > 1e-2, "{name} = {:e}", c.value);
    }
}

#[test]
fn coulomb_frame_defect_is_nonzero() {
    let (layer, states) = layer();
    let d = fw_coulomb_defect(&layer, &states);
    assert!(d > 1e-8 && d.is_finite());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(31))]

    // A constant element commutes formally with the free FW operator exactly
    // when its grid realisation commutes with γ⁰ω on test spinors.
    #[test]
    fn formal_and_grid_fw_verdicts_agree(idx in 0usize..31) {
        let g = build_gamma_set();
        let elements = build_algebra31(&g);
        let fw_free = StructuredEvolutionOp::build(EvolutionForm::FwA, false, &ExactScalar::one(), &g);
        let formal = formal_commutator(&elements[idx].op, &fw_free).commutes();
        let (layer, states) = layer();
        let q = GridOperator::constant(NumOp::from_exact(&elements[idx].op));
        let r = states.iter().map(|psi| evolution_residual(&q, &layer.h_fw, psi)).fold(0.0, f64::max);
        if formal {
            prop_assert!(r <= 1e-12, "{} residual {:e}", elements[idx].name, r);
        } else {
            prop_assert!(r > 1e-3, "{} residual {:e}", elements[idx].name, r);
        }
    }
}
