//! The bundled claim catalog.

use std::sync::OnceLock;

use serde::Deserialize;

use crate::claims::ClaimKind;
use crate::VerifyError;

const CATALOG_TOML: &str = include_str!("../catalog/claims.toml");

#[derive(Clone, Debug, PartialEq, Eq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogEntry {
    pub id: String,
    pub group: String,
    pub kind: ClaimKind,
    pub anchor: String,
}

#[derive(Clone, Debug, Deserialize)]
pub struct Catalog {
    #[serde(rename = "claim")]
    pub claims: Vec<CatalogEntry>,
}

impl Catalog {
    pub fn parse(text: &str) -> Result<Self, VerifyError> {
        let cat: Catalog = toml::from_str(text).map_err(|e| VerifyError::Catalog(e.to_string()))?;
        let mut seen = std::collections::BTreeSet::new();
        for e in &cat.claims {
            if !seen.insert(e.id.as_str()) {
                return Err(VerifyError::Catalog(format!("duplicate id {}", e.id)));
            }
            if e.anchor.trim().is_empty() {
                return Err(VerifyError::Catalog(format!("{} has an empty anchor", e.id)));
            }
        }
        Ok(cat)
    }

    /// The catalog compiled into the binary.
    pub fn bundled() -> &'static Catalog {
        static CAT: OnceLock<Catalog> = OnceLock::new();
        CAT.get_or_init(|| Catalog::parse(CATALOG_TOML).expect("bundled catalog is valid"))
    }

    pub fn raw() -> &'static str {
        CATALOG_TOML
    }

    pub fn get(&self, id: &str) -> Option<&CatalogEntry> {
        self.claims.iter().find(|e| e.id == id)
    }
}
