//! Numerical side of the verification suite: spectral grids, the classical
//! Dirac–Coulomb constants of motion, radial bound states and the
//! Foldy–Wouthuysen layer.

pub mod check;
pub mod ensemble;
pub mod fw;
pub mod grid;
pub mod jl;
pub mod num;
pub mod observables;
pub mod operator;
pub mod radial;
pub mod so4;

pub use check::{nan_max, Bound, NumericCheck};
pub use ensemble::{test_ensemble, EnsembleConfig};
pub use grid::{Grid, GridSpinor};
pub use num::{NumGammas, NumOp, C64, M4};
pub use observables::{build_observables, commutator_residual, Observables, PhysicsConfig};
pub use operator::GridOperator;
pub use radial::{solve_radial, sommerfeld_energy, RadialConfig, RadialState};

#[derive(Clone, Debug, thiserror::Error, PartialEq)]
pub enum SpectralError {
    #[error("grid needs an even number of points per axis, at least 8 (got {0})")]
    GridTooCoarse(usize),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("coupling Zα = {0} outside (0, 1)")]
    CouplingOutOfRange(f64),
    #[error("spinor has {got} samples, grid expects {expected}")]
    SizeMismatch { expected: usize, got: usize },
    #[error("no bound state with n = {n}, κ = {kappa}")]
    NoSuchState { n: u32, kappa: i32 },
    #[error("radial solve for n = {n}, κ = {kappa} did not converge: {detail}")]
    RadialNonConvergence { n: u32, kappa: i32, detail: String },
    #[error("state n = {n}, κ = {kappa} has no degenerate partner with κ = {partner}")]
    MissingPartner { n: u32, kappa: i32, partner: i32 },
}
