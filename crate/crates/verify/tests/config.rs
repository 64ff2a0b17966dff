use std::io::Write;

use dirac_verify::{FormSelector, RunConfig, VerifyError};
use proptest::prelude::*;

#[test]
fn defaults_are_valid() {
    let cfg = RunConfig::default();
    cfg.validate().unwrap();
    assert_eq!(cfg.grid, 32);
    assert_eq!(cfg.form, FormSelector::Both);
    assert!((cfg.zalpha - 1.0 / 137.035999084).abs() < 1e-18);
}

#[test]
fn partial_toml_keeps_other_defaults() {
    let cfg = RunConfig::from_toml("grid = 64\nseed = 3\n[tolerances]\nexact_numeric = 1e-9\n").unwrap();
    assert_eq!(cfg.grid, 64);
    assert_eq!(cfg.seed, 3);
    assert_eq!(cfg.tolerances.exact_numeric, 1e-9);
    assert_eq!(cfg.tolerances.k_squared, 1e-10);
    assert_eq!(cfg.box_len, RunConfig::default().box_len);
}

#[test]
fn form_selector_parses_from_toml_and_strings() {
    let cfg = RunConfig::from_toml("form = \"FW-A\"").unwrap();
    assert_eq!(cfg.form, FormSelector::FwA);
    assert_eq!("fw-b".parse::<FormSelector>().unwrap(), FormSelector::FwB);
    assert_eq!("both".parse::<FormSelector>().unwrap(), FormSelector::Both);
    assert!("FW-C".parse::<FormSelector>().is_err());
    assert!(FormSelector::Both.includes_a() && FormSelector::Both.includes_b());
    assert!(!FormSelector::FwA.includes_b());
}

#[test]
fn unknown_keys_are_rejected() {
    assert!(matches!(RunConfig::from_toml("grdi = 32"), Err(VerifyError::Config(_))));
    assert!(RunConfig::from_toml("[tolerances]\nexact = 1e-8").is_err());
}

#[test]
fn physical_ranges_are_enforced() {
    for text in [
        "grid = 24",
        "grid = 8",
        "zalpha = 1.0",
        "zalpha = 0.0",
        "mass = -1.0",
        "box_len = 0.0",
        "[tolerances]\nk_squared = 0.0",
        "[radial]\nn_max = 0",
        "[ensemble]\nstates = 0",
    ] {
        assert!(RunConfig::from_toml(text).is_err(), "{text}");
    }
}

#[test]
fn load_reports_the_missing_path() {
    let err = RunConfig::load(std::path::Path::new("/nonexistent/run.toml")).unwrap_err();
    assert!(err.to_string().contains("/nonexistent/run.toml"));
}

#[test]
fn explicit_path_is_loaded() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "grid = 16\nbox_len = 40.0").unwrap();
    let cfg = RunConfig::resolve(Some(f.path())).unwrap();
    assert_eq!((cfg.grid, cfg.box_len), (16, 40.0));
}

#[test]
fn physics_and_ensemble_views_follow_the_config() {
    let cfg = RunConfig::from_toml("grid = 16\nseed = 11\nmass = 2.0").unwrap();
    let p = cfg.physics();
    assert_eq!((p.n, p.mass), (16, 2.0));
    assert_eq!(cfg.ensemble_config().seed, 11);
    assert_eq!(cfg.radial_config().r_max_bohr, cfg.radial.r_max_bohr);
}

proptest! {
    #[test]
    fn grid_accepted_iff_power_of_two_from_16(n in 1usize..600) {
        let cfg = RunConfig { grid: n, ..RunConfig::default() };
        prop_assert_eq!(cfg.validate().is_ok(), n >= 16 && n.is_power_of_two());
    }

    #[test]
    fn coupling_accepted_iff_inside_unit_interval(z in -0.5f64..1.5) {
        let cfg = RunConfig { zalpha: z, ..RunConfig::default() };
        prop_assert_eq!(cfg.validate().is_ok(), z > 0.0 && z < 1.0);
    }

    #[test]
    fn toml_round_trip(grid_exp in 4u32..8, seed in any::<u64>(), za in 0.001f64..0.999) {
        let cfg = RunConfig { grid: 1 << grid_exp, seed, zalpha: za, ..RunConfig::default() };
        let text = toml::to_string(&cfg).unwrap();
        prop_assert_eq!(RunConfig::from_toml(&text).unwrap(), cfg);
    }
}
