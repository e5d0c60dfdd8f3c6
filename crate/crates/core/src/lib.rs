//! Risk measurement regimes (acceptance set, security space, pricing functional)
//! on finite and truncated-countable probability spaces.
//!
//! The crate evaluates the capital requirement
//! `rho(X) = inf { p(Z) | Z in S, X - Z in A }` primally and through its dual
//! scenario representation, constructs reference probability measures, computes
//! Minkowski gauge norms and the L/H/M domain classification, evaluates the
//! three extensions to unbounded losses (`rho_tilde`, `xi`, `eta`) with their
//! gap diagnostics, and extracts subgradients with regular/singular splits.
//!
//! Losses are modelled on an explicit finite atom list, optionally embedded in
//! the integers to stand in for a truncated countable space. Singular
//! (finitely additive but not countably additive) dual elements are modelled
//! as nonnegative mass acting on declared tail limits; that surrogate is a
//! strict subset of the full finitely-additive dual but captures exactly the
//! limit-functional behaviour the built-in examples need.

pub mod builtin;
pub mod ext;
pub mod extend;
pub mod measure;
pub mod minkowski;
pub mod reference;
pub mod regime;
pub mod report;
pub mod solver;
pub mod subgrad;

pub use ext::ExtReal;
pub use measure::{
    integrate, measure_relations, mix, truncate, GeneralizedMeasure, RandomVariable, Relations,
    SampleSpace, Tail, TailValue, Truncation,
};
pub use regime::{AcceptanceSpec, PricingFunctional, Regime, SecuritySpace};

use thiserror::Error;

/// Crate-wide error type. Variant names follow the failure modes of the
/// operations that raise them.
#[derive(Debug, Clone, Error, PartialEq)]
pub enum Error {
    #[error("sample space mismatch between operands")]
    SpaceMismatch,
    #[error("measure carries tail mass but the integrand declares no tail on that side")]
    TailUndefined,
    #[error("tail contributions of opposite infinite sign; integral undefined")]
    IndeterminateIntegral,
    #[error("negative coefficient in conic combination")]
    NegativeCoefficient,
    #[error("operand lists have different lengths")]
    LengthMismatch,
    #[error("invalid construction: {0}")]
    Invalid(String),
    #[error("unsupported combination: {0}")]
    UnsupportedCombination(String),
    #[error("operation unsupported for this acceptance specification: {0}")]
    Unsupported(String),
    #[error("risk of the zero loss is not finite; regime cannot be normalised")]
    NotFinite,
    #[error("LP solver broke down after {0} iterations")]
    NumericalBreakdown(usize),
    #[error("no acceptable security multiple found within bracket expansion cap")]
    BracketFailure,
    #[error("scenario family is empty; no pricing-consistent extension exists")]
    EmptyFamily,
    #[error("scenario family member `{0}` carries singular tail mass; no countably additive reference exists")]
    SingularMember(String),
    #[error("risk measure is improper (value -infinity reachable)")]
    ImproperRegime,
    #[error("eta cross-check failed: grid route {grid} exceeds exact route {exact} beyond tolerance")]
    InconsistentRoutes { grid: f64, exact: f64 },
    #[error("supremum not attained within cutoff and no asymptotic oracle (best index {0})")]
    NoMaximizer(u64),
}

pub type Result<T> = std::result::Result<T, Error>;
