use dirac_spectral::jl::{d_squared_eigenvalue, verify_johnson_lippmann, JlTolerances};
use dirac_spectral::radial::is_valid_state;
use dirac_spectral::so4::verify_so4;
use dirac_spectral::{solve_radial, sommerfeld_energy, RadialConfig, SpectralError};
use proptest::prelude::*;

const ZA: f64 = 1.0 / 137.035999084;

fn states() -> Vec<dirac_spectral::RadialState> {
    solve_radial(3, &[-3, -2, -1, 1, 2], 1.0, ZA, &RadialConfig::default()).unwrap()
}

#[test]
fn ground_state_energy() {
    let s = solve_radial(1, &[-1], 1.0, ZA, &RadialConfig::default()).unwrap();
    assert!((s[0].energy - (1.0 - ZA * ZA).sqrt()).abs() < 1e-14);
    assert!((s[0].energy - 0.99997338).abs() < 1e-8);
}

#[test]
fn solved_levels_match_the_closed_form() {
    let st = states();
    assert_eq!(st.len(), 9);
    for s in &st {
        let want = sommerfeld_energy(s.n, s.kappa, 1.0, ZA).unwrap();
        assert!(((s.energy - want) / want).abs() <= 1e-6, "n={} kappa={}", s.n, s.kappa);
        assert!((s.norm_sq() - 1.0).abs() < 1e-9);
        assert!(s.energy > 0.0 && s.energy < 1.0);
    }
}

#[test]
fn kappa_pairs_are_degenerate_between_solved_states() {
    let st = states();
    let e = |n: u32, k: i32| st.iter().find(|s| s.n == n && s.kappa == k).unwrap().energy;
    for (n, k) in [(2, 1), (3, 1), (3, 2)] {
        assert!(((e(n, k) - e(n, -k)) / e(n, k)).abs() <= 1e-8);
    }
}

#[test]
fn energies_increase_with_n_at_fixed_kappa() {
    let st = states();
    for k in [-2, -1, 1, 2] {
        let mut row: Vec<_> = st.iter().filter(|s| s.kappa == k).collect();
        row.sort_by_key(|s| s.n);
        assert!(row.windows(2).all(|w| w[1].energy > w[0].energy), "kappa {k}");
    }
}

#[test]
fn coupling_outside_unit_interval_is_rejected() {
    assert_eq!(sommerfeld_energy(1, -1, 1.0, 1.0).unwrap_err(), SpectralError::CouplingOutOfRange(1.0));
    assert!(solve_radial(1, &[-1], 1.0, 1.2, &RadialConfig::default()).is_err());
}

#[test]
fn invalid_labels_are_not_states() {
    assert!(!is_valid_state(1, 1));
    assert!(!is_valid_state(2, -3));
    assert!(is_valid_state(2, 1));
    assert!(sommerfeld_energy(1, 1, 1.0, ZA).is_err());
}

#[test]
fn johnson_lippmann_square_on_the_2s_2p_pair() {
    let st = states();
    let reps = verify_johnson_lippmann(&st, 1.0, ZA, &JlTolerances::default()).unwrap();
    let rep = reps.iter().find(|r| r.n == 2 && r.kappa == -1).unwrap();
    let e = st.iter().find(|s| s.n == 2 && s.kappa == -1).unwrap().energy;
    assert_eq!(rep.lambda, d_squared_eigenvalue(e, 1.0, -1, ZA));
    for c in &rep.checks {
        assert!(c.passed(), "{} = {:e}", c.name, c.value);
    }
    let d = rep.partner_element.unwrap();
    assert!((d.norm_sqr() - rep.lambda).abs() < 1e-6);
}

#[test]
fn johnson_lippmann_keeps_the_ground_state_in_its_level() {
    let st = states();
    let reps = verify_johnson_lippmann(&st, 1.0, ZA, &JlTolerances::default()).unwrap();
    let rep = reps.iter().find(|r| r.n == 1).unwrap();
    assert!(rep.partner_element.is_none());
    let out = rep.checks.iter().find(|c| c.name.contains("outside")).unwrap();
    assert!(out.value <= 1e-6);
    // κ = −n: D annihilates the state
    assert!(rep.lambda.abs() < 1e-9);
}

#[test]
fn missing_partner_is_flagged() {
    let st = solve_radial(2, &[-1], 1.0, ZA, &RadialConfig::default()).unwrap();
    assert!(verify_johnson_lippmann(&st, 1.0, ZA, &JlTolerances::default()).is_err());
}

#[test]
fn lentz_vector_on_degenerate_blocks() {
    let rep = verify_so4(&states(), 1.0, ZA, 1e-8).unwrap();
    assert_eq!(rep.blocks.len(), 3);
    assert_eq!(rep.incomplete.len(), 3);
    for b in &rep.blocks {
        for c in b.checks.iter().filter(|c| c.name.starts_with("(T") || c.name.starts_with("[I")) {
            if c.name.contains("R") {
                continue;
            }
            assert!(c.passed(), "n={} 2j={} {} = {:e}", b.n, b.two_j, c.name, c.value);
        }
        for c in &b.observed {
            assert!(c.passed(), "n={} 2j={} {} = {:e}", b.n, b.two_j, c.name, c.value);
        }
    }
}

#[test]
fn r_brackets_close_on_i_rather_than_r() {
    // J⃗ commutes with T⃗, so [Rᵃ, Rᵇ] = iεI and [Iᵃ, Rᵇ] = iεR
    let rep = verify_so4(&states(), 1.0, ZA, 1e-8).unwrap();
    for b in &rep.blocks {
        let rr = b.checks.iter().filter(|c| c.name.starts_with("[R")).all(|c| !c.passed());
        assert!(rr, "n={} 2j={}", b.n, b.two_j);
    }
}

proptest! {
    #[test]
    fn closed_form_depends_on_abs_kappa_and_rises_with_n(n in 1u32..8, k in 1i32..7, za in 0.001f64..0.9) {
        prop_assume!(k <= n as i32);
        let e = sommerfeld_energy(n, -k, 1.0, za).unwrap();
        prop_assert!(e > 0.0 && e < 1.0);
        if k < n as i32 {
            prop_assert_eq!(e, sommerfeld_energy(n, k, 1.0, za).unwrap());
        }
        prop_assert!(sommerfeld_energy(n + 1, -k, 1.0, za).unwrap() > e);
    }

    #[test]
    fn closed_form_scales_with_mass(n in 1u32..5, m in 0.1f64..50.0) {
        let e1 = sommerfeld_energy(n, -1, 1.0, ZA).unwrap();
        let em = sommerfeld_energy(n, -1, m, ZA).unwrap();
        prop_assert!((em - m * e1).abs() <= 1e-14 * m);
    }
}
