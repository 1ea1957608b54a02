//! Streaming active learning for binary classification when an oblivious
//! adversary may corrupt the conditional label distribution.
//!
//! The crate contains three learners over finite problem instances:
//!
//! * passive empirical risk minimization (queries every label),
//! * RobustCAL, a disagreement-based elimination learner, in both the
//!   vanilla and enlarged-threshold variants,
//! * CALruption, an epoch-based soft-elimination learner that estimates
//!   pairwise risk gaps with a Catoni robust mean estimator and assigns
//!   per-example query probabilities from nested version-space layers.
//!
//! Supporting modules provide exact ground-truth oracles ([`instance`]),
//! corruption schedules and seeded stream generation ([`adversary`]),
//! robust estimation primitives ([`estimators`]), the min-max distribution
//! fit ([`minimax`]) and a reproducible experiment harness with a CLI
//! ([`harness`]).

pub mod adversary;
pub mod baselines;
pub mod calruption;
pub mod estimators;
pub mod harness;
pub mod instance;
pub mod minimax;
pub mod rng;

use thiserror::Error;

/// Crate-wide error type.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("estimator failure: {0}")]
    Estimator(String),
    #[error("solver failure: {0}")]
    Solver(String),
    #[error("configuration error: {0}")]
    Config(String),
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

pub type Result<T> = std::result::Result<T, Error>;
