use std::collections::BTreeSet;

use dirac_verify::registry::registered_claims;
use dirac_verify::{Catalog, ClaimKind};

#[test]
fn every_registered_claim_has_a_catalog_entry_and_back() {
    let cat = Catalog::bundled();
    let registered: BTreeSet<&str> = registered_claims().iter().map(|(id, _)| *id).collect();
    let listed: BTreeSet<&str> = cat.claims.iter().map(|e| e.id.as_str()).collect();
    assert_eq!(registered, listed);
}

#[test]
fn catalog_groups_match_the_registry() {
    let cat = Catalog::bundled();
    for (id, group) in registered_claims() {
        assert_eq!(cat.get(id).unwrap().group, group.as_str(), "{id}");
    }
}

#[test]
fn anchors_appear_verbatim_in_the_bundled_document() {
    let raw = Catalog::raw();
    for e in &Catalog::bundled().claims {
        assert!(raw.contains(&format!("anchor = \"{}\"", e.anchor)), "{}", e.id);
    }
}

#[test]
fn contested_by_design_claims_are_the_expected_ones() {
    let contested: BTreeSet<&str> = Catalog::bundled()
        .claims
        .iter()
        .filter(|e| e.kind == ClaimKind::ContestedByDesign)
        .map(|e| e.id.as_str())
        .collect();
    for id in ["CL-FWA-SO6", "CL-FWB-SO6", "CL-TILDE-COUL", "CL-LOR-HERM"] {
        assert!(contested.contains(id), "{id}");
    }
    assert!(!contested.contains("CL-TILDE-FREE"));
}

#[test]
fn duplicate_ids_are_rejected() {
    let text = r#"
[[claim]]
id = "X"
group = "algebra"
kind = "exact"
anchor = "a"

[[claim]]
id = "X"
group = "algebra"
kind = "exact"
anchor = "b"
"#;
    assert!(Catalog::parse(text).is_err());
}

#[test]
fn unknown_kind_is_rejected() {
    let text = "[[claim]]\nid = \"X\"\ngroup = \"algebra\"\nkind = \"maybe\"\nanchor = \"a\"\n";
    assert!(Catalog::parse(text).is_err());
}
