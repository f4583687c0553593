//! Weight-times-unipotent actions on the cohomology of a nilradical,
//! triangularity certificates, the maximal nilpotent submodule and its
//! presentation.

mod action;
mod presentation;
mod star;
mod submodule;
mod triangular;

pub use action::{build_fiber_action, sample_twists, FiberAction, FiberActionSpec};
pub use presentation::{presentation, AlgebraPresentation, PresentationGenerator};
pub use star::{audit_star_list, benson_gordon_star_claims, ClaimCheck, StarClaim, StarClass, StarListAudit};
pub use submodule::{max_nilpotent_submodule, NilpotentSubmodule};
pub use triangular::{benson_gordon_order_hint, certify_triangular, DegreeCertificate, OrderHint, TriangularCertificate};

use thiserror::Error;

use crate::exactla::LaError;
use crate::gca::GcaError;
use crate::liealg::LieError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MostowError {
    #[error(transparent)]
    Lie(#[from] LieError),
    #[error(transparent)]
    Gca(#[from] GcaError),
    #[error(transparent)]
    La(#[from] LaError),
    #[error("{0}")]
    Shape(String),
    #[error("weight of {vector} is not an integer")]
    NonIntegerWeight { vector: String },
    #[error("ad R is not nilpotent")]
    NotNilpotent,
    #[error("η does not commute with δ on generator {generator}")]
    NotAChainMap { generator: String },
    #[error("induced map on H^{degree} is not invertible")]
    NotInvertible { degree: u32 },
    #[error("H^{degree}: entry ({row}, {col}) below the diagonal is nonzero")]
    NotTriangular { degree: u32, row: usize, col: usize },
    #[error("H^{degree}: diagonal entry of {class} is not a power of ν")]
    DiagonalNotMonomial { degree: u32, class: String },
    #[error("H^{degree}: unipotent part has no rational basis")]
    NonRationalSubmodule { degree: u32 },
    #[error("H^{degree}: generalized 1-eigenspace has dimension {eigenspace} but {unit_diagonal} diagonal entries equal 1")]
    SubmoduleMismatch { degree: u32, eigenspace: usize, unit_diagonal: usize },
    #[error("{left}·{right} leaves the submodule")]
    NotClosedUnderProduct { left: String, right: String },
}
