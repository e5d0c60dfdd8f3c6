//! Primal and dual evaluation of regime risk measures, support functions, the
//! dense LP kernel, and closed-form AVaR/entropic evaluators.

pub mod lp;

pub use lp::{lp_solve, LPProblem, LPResult, LPStatus, Sense};
