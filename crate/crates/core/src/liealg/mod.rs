//! Lie algebras over `Q`: validation, structural predicates, splittings and
//! Chevalley–Eilenberg complexes.

mod algebra;
mod constructors;
mod splitting;

pub use algebra::{dual_name, JacobiViolation, LieAlgebra, ValidationReport};
pub use constructors::{
    abelian, benson_gordon, benson_gordon_nilradical, benson_gordon_weights, direct_sum, heisenberg3,
    semidirect_by_weights,
};
pub use splitting::{CompletelySolvable, Splitting, SplittingSpec};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LieError {
    #[error("invalid Lie algebra: {}", .0.summary())]
    Invalid(ValidationReport),
    #[error("{0}")]
    Shape(String),
    #[error("index {index} out of range for dimension {dimension}")]
    IndexOutOfRange { index: usize, dimension: usize },
    #[error("duplicate basis name {0}")]
    DuplicateName(String),
    #[error("no basis vector named {0}")]
    UnknownBasisVector(String),
    #[error("[{left}, {right}] leaves the proposed subalgebra")]
    NotASubalgebra { left: String, right: String },
    #[error("bracket with {vector} leaves the proposed ideal")]
    NotAnIdeal { vector: String },
    #[error("proposed nilradical is not nilpotent (ad {vector} is not nilpotent)")]
    NotNilpotent { vector: String },
    #[error("ad S is not diagonal on {vector}")]
    NotDiagonal { vector: String },
    #[error("weights do not define a derivation: {bracket} has a {component} component")]
    NotADerivation { bracket: String, component: String },
}
