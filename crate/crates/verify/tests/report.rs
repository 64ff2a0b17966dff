use dirac_spectral::NumericCheck;
use dirac_verify::claims::format_f64;
use dirac_verify::{
    run_suite, Catalog, ClaimKind, ClaimRecord, ClaimStatus, Evidence, Report, RunConfig, Selection, SCHEMA_VERSION,
};
use proptest::prelude::*;

fn entry(kind: ClaimKind) -> dirac_verify::CatalogEntry {
    dirac_verify::CatalogEntry { id: "CL-TEST".into(), group: "algebra".into(), kind, anchor: "test".into() }
}

fn algebra_report() -> Report {
    run_suite(&RunConfig::default(), &Selection::Groups(vec![dirac_verify::Group::Algebra])).unwrap()
}

#[test]
fn exact_anticommutation_claim_counts_28_relations() {
    let r = run_suite(&RunConfig::default(), &Selection::Ids(vec!["CL-ANTI-14".into()])).unwrap();
    let c = r.claim("CL-ANTI-14").unwrap();
    assert_eq!(c.status(), ClaimStatus::VerifiedExact);
    assert_eq!(c.relations_checked, 28);
    assert_eq!(r.exit_code(), 0);
}

#[test]
fn algebra31_claim_reports_31_elements() {
    let r = run_suite(&RunConfig::default(), &Selection::Ids(vec!["CL-31DIM".into()])).unwrap();
    let c = r.claim("CL-31DIM").unwrap();
    assert_eq!((c.element_count, c.real_dimension), (Some(31), Some(31)));
}

#[test]
fn so6_verdict_columns_have_fifteen_rows_each() {
    let sel = Selection::Ids(vec!["CL-FWA-SO6".into(), "CL-FWB-SO6".into()]);
    let r = run_suite(&RunConfig::default(), &sel).unwrap();
    for id in ["CL-FWA-SO6", "CL-FWB-SO6"] {
        assert_eq!(r.claim(id).unwrap().evidence.len(), 15, "{id}");
    }
    // FW-A fails on the antilinear generators, FW-B does not
    assert_eq!(r.claim("CL-FWA-SO6").unwrap().status(), ClaimStatus::Contested);
    assert_eq!(r.claim("CL-FWB-SO6").unwrap().status(), ClaimStatus::VerifiedExact);
    assert_eq!(r.exit_code(), 0);
}

#[test]
fn form_selector_drops_the_other_column() {
    let cfg = RunConfig { form: dirac_verify::FormSelector::FwB, ..RunConfig::default() };
    let r = run_suite(&cfg, &Selection::Groups(vec![dirac_verify::Group::So8])).unwrap();
    assert!(r.claim("CL-FWA-SO6").is_none());
    assert!(r.claim("CL-FWB-SO6").is_some());
    assert!(run_suite(&cfg, &Selection::Ids(vec!["CL-FWA-SO6".into()])).is_err());
}

#[test]
fn unknown_claim_id_is_an_error() {
    let err = run_suite(&RunConfig::default(), &Selection::Ids(vec!["CL-NOPE".into()])).unwrap_err();
    assert!(matches!(err, dirac_verify::VerifyError::UnknownClaim(_)));
}

#[test]
fn invalid_config_is_rejected_before_running() {
    let cfg = RunConfig { grid: 48, ..RunConfig::default() };
    assert!(run_suite(&cfg, &Selection::All).is_err());
}

#[test]
fn machine_report_is_stable_and_sorted() {
    let a = algebra_report().to_machine().unwrap();
    let b = algebra_report().to_machine().unwrap();
    assert_eq!(a, b);
    let v: serde_json::Value = serde_json::from_str(&a).unwrap();
    assert_eq!(v["schema_version"], SCHEMA_VERSION);
    assert_eq!(v["config"]["seed"], RunConfig::default().seed);
    let ids: Vec<&str> = v["claims"].as_array().unwrap().iter().map(|c| c["id"].as_str().unwrap()).collect();
    let mut sorted = ids.clone();
    sorted.sort_unstable();
    assert_eq!(ids, sorted);
    assert!(!a.contains("runtime"));
    assert!(a.contains("\"box_len\": 7.0000000000000000e1"));
}

#[test]
fn every_record_carries_its_catalog_anchor() {
    let r = algebra_report();
    for c in &r.claims {
        assert_eq!(c.anchor, Catalog::bundled().get(&c.id).unwrap().anchor);
    }
}

#[test]
fn text_summary_has_one_line_per_claim() {
    let r = algebra_report();
    let text = r.to_text();
    for c in &r.claims {
        assert_eq!(text.lines().filter(|l| l.starts_with(&c.id)).count(), 1, "{}", c.id);
    }
    assert!(text.ends_with("exit 0\n"));
}

#[test]
fn contested_claims_never_gate_the_exit() {
    let bad = Evidence::judged(&NumericCheck::at_most("x", 1.0, 1e-8));
    let contested = ClaimRecord::new(&entry(ClaimKind::ContestedByDesign), vec![bad.clone()], 1, vec![]);
    assert_eq!(contested.status(), ClaimStatus::Contested);
    let report = Report::new(RunConfig::default(), vec![contested], vec![]);
    assert_eq!(report.exit_code(), 0);
    let failed = ClaimRecord::new(&entry(ClaimKind::Numeric), vec![bad], 1, vec![]);
    assert_eq!(Report::new(RunConfig::default(), vec![failed], vec![]).exit_code(), 1);
}

#[test]
fn nan_residual_fails_and_serialises_as_null() {
    let ev = vec![
        Evidence::judged(&NumericCheck::at_most("a", 1e-12, 1e-8)),
        Evidence::judged(&NumericCheck::at_most("b", f64::NAN, 1e-8)),
    ];
    let rec = ClaimRecord::new(&entry(ClaimKind::Numeric), ev, 2, vec![]);
    assert_eq!(rec.status(), ClaimStatus::Failed);
    assert!(rec.residual.unwrap().is_nan());
    let text = Report::new(RunConfig::default(), vec![rec], vec![]).to_machine().unwrap();
    assert!(text.contains("\"residual\": null"));
}

#[test]
fn unjudged_evidence_does_not_change_the_status() {
    let ev = vec![
        Evidence::judged(&NumericCheck::at_most("a", 1e-12, 1e-8)),
        Evidence::reported(&NumericCheck::at_most("b", 1.0, 1e-8)),
        Evidence::value("c", 5.0),
    ];
    let rec = ClaimRecord::new(&entry(ClaimKind::Numeric), ev, 1, vec![]);
    assert_eq!(rec.status(), ClaimStatus::VerifiedNumeric);
    assert_eq!(rec.residual, Some(1e-12));
}

#[test]
fn claim_without_judged_evidence_is_not_verified() {
    let rec = ClaimRecord::new(&entry(ClaimKind::Exact), vec![Evidence::value("c", 1.0)], 0, vec![]);
    assert_eq!(rec.status(), ClaimStatus::Failed);
}

fn arb_check() -> impl Strategy<Value = (f64, f64, bool, bool)> {
    (prop_oneof![0.0f64..1.0, Just(f64::NAN)], 1e-12f64..1e-2, any::<bool>(), any::<bool>())
}

proptest! {
    #[test]
    fn float_format_has_17_digits_and_round_trips(x in any::<f64>().prop_filter("finite", |x| x.is_finite())) {
        let s = format_f64(x);
        prop_assert_eq!(s.parse::<f64>().unwrap(), x);
        let mantissa = s.trim_start_matches('-').split('e').next().unwrap().replace('.', "");
        prop_assert_eq!(mantissa.len(), 17);
    }

    #[test]
    fn status_follows_the_judged_evidence(
        checks in prop::collection::vec(arb_check(), 1..8),
        kind in prop_oneof![Just(ClaimKind::Exact), Just(ClaimKind::Numeric), Just(ClaimKind::ContestedByDesign)],
    ) {
        let ev: Vec<Evidence> = checks
            .iter()
            .enumerate()
            .map(|(k, &(v, t, judged, lower))| {
                let c = if lower {
                    NumericCheck::at_least(format!("c{k}"), v, t)
                } else {
                    NumericCheck::at_most(format!("c{k}"), v, t)
                };
                if judged { Evidence::judged(&c) } else { Evidence::reported(&c) }
            })
            .collect();
        let all_ok = ev.iter().any(|e| e.judged) && ev.iter().filter(|e| e.judged).all(|e| e.passed);
        let rec = ClaimRecord::new(&entry(kind), ev, checks.len(), vec![]);
        let s = rec.status();
        prop_assert_eq!(s.is_verified(), all_ok);
        prop_assert_eq!(s == ClaimStatus::Contested, kind == ClaimKind::ContestedByDesign && !all_ok);
        prop_assert_eq!(rec.gates_failure(), kind != ClaimKind::ContestedByDesign && !all_ok);
        if let (Some(r), Some(t)) = (rec.residual, rec.tolerance) {
            if all_ok {
                prop_assert!(r <= t);
            }
        }
    }

    #[test]
    fn summary_counts_partition_the_claims(
        outcomes in prop::collection::vec((any::<bool>(), 0u8..3), 0..12),
    ) {
        let kinds = [ClaimKind::Exact, ClaimKind::Numeric, ClaimKind::ContestedByDesign];
        let recs: Vec<ClaimRecord> = outcomes
            .iter()
            .enumerate()
            .map(|(k, &(ok, kind))| {
                let mut e = entry(kinds[kind as usize]);
                e.id = format!("CL-{k:02}");
                ClaimRecord::new(&e, vec![Evidence::relation("r", ok)], 1, vec![])
            })
            .collect();
        let report = Report::new(RunConfig::default(), recs, vec![]);
        let s = &report.summary;
        prop_assert_eq!(s.verified_exact + s.verified_numeric + s.failed + s.contested, s.total);
        let gating = outcomes.iter().filter(|(ok, kind)| !ok && *kind != 2).count();
        prop_assert_eq!(s.gating_failures.len(), gating);
        prop_assert_eq!(report.exit_code(), i32::from(gating > 0));
    }
}
