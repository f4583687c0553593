//! Bigraded (Halperin–Stasheff) models, Lehmann reduction, truncated
//! Sullivan minimal models and the comparison of fiber and CE models.

mod bigraded;
mod compare;
mod lehmann;
mod linear;
mod minimal;

pub use bigraded::{bigraded_model, BigradedModel};
pub use compare::{compare_models, fiber_model_analysis, ComparisonVerdict, DegreeStability, FiberStabilityReport, Verdict};
pub use lehmann::{lehmann_reduce, ContractiblePair, DegreeSplit, ReductionRound, ReductionTrace};
pub use minimal::{minimal_model, MinimalGenerator, MinimalModelReport};

use thiserror::Error;

use crate::exactla::LaError;
use crate::gca::GcaError;
use crate::mostow::MostowError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SullivanError {
    #[error(transparent)]
    Gca(#[from] GcaError),
    #[error(transparent)]
    La(#[from] LaError),
    #[error(transparent)]
    Mostow(#[from] MostowError),
    #[error("algebra is not connected")]
    NotConnected,
    #[error("H^1 has dimension {dimension}, reduction needs H^1 = 0")]
    H1NotZero { dimension: usize },
    #[error("input is not a free DGA: {0}")]
    NonFreeInput(String),
    #[error("computation needs cutoff {needed}, have {available}")]
    InsufficientCutoff { needed: u32, available: u32 },
    #[error("degree {degree} is not settled")]
    UnsettledDegree { degree: u32 },
    #[error("no primitive for a cocycle of degree {degree}")]
    NotACoboundary { degree: u32 },
    #[error("internal: {0}")]
    Internal(String),
}
