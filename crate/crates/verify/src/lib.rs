//! Claim registry, configuration and report emission for the Dirac symmetry
//! verification suite.
//!
//! Each claim is bound to a catalog entry, runs against the exact algebra or
//! the spectral grid, and gets its status from the measured evidence.

pub mod catalog;
pub mod claims;
pub mod config;
pub mod context;
pub mod registry;
pub mod report;

pub use catalog::{Catalog, CatalogEntry};
pub use claims::{ClaimKind, ClaimRecord, ClaimStatus, Evidence};
pub use config::{FormSelector, RunConfig, Tolerances, CONFIG_ENV};
pub use registry::{run_suite, select_claims, Group, Selection};
pub use report::{Report, Summary, SCHEMA_VERSION};

use std::path::PathBuf;

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("configuration: {0}")]
    Config(String),
    #[error("{path}: {source}")]
    Io { path: PathBuf, source: std::io::Error },
    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
    #[error("claim catalog: {0}")]
    Catalog(String),
    #[error(transparent)]
    Spectral(#[from] dirac_spectral::SpectralError),
    #[error(transparent)]
    Algebra(#[from] dirac_algebra::AlgebraError),
    #[error("report serialisation: {0}")]
    Json(#[from] serde_json::Error),
}
