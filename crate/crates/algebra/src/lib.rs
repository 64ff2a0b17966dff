//! Exact arithmetic over ℚ(i, √2) and the real-linear operator algebra on
//! Dirac 4-spinors, with the gamma, SO(8), Lorentz and evolution-operator
//! constructions built on it.
//!
//! Every check in this crate is exact: equality means entrywise equality
//! of canonical rationals.

pub mod clifford;
pub mod equation;
pub mod lorentz;
pub mod matrix;
pub mod op;
pub mod pauli_gursey;
pub mod report;
pub mod scalar;
pub mod span;

pub use matrix::MatrixC4;
pub use op::{anticommutator, commutator, product, Hermiticity, RealLinearOp};
pub use report::{AlgebraClosureReport, ExactStatus, FailedRelation};
pub use scalar::{ExactScalar, RealQ2};
pub use span::{real_span_dim, RealSpan};

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("unknown Lorentz set label `{0}` (expected I, II, TS or V)")]
    UnknownLorentzLabel(String),
    #[error("operation needs the {expected} set, got {got}")]
    WrongLorentzLabel { expected: lorentz::LorentzLabel, got: lorentz::LorentzLabel },
    #[error("unknown evolution form `{0}`")]
    UnknownForm(String),
}
