//! Free graded-commutative algebras, derivations, morphisms and cohomology.

mod algebra;
mod cohomology;
mod differential;
mod graded;
mod monomial;

pub use algebra::{BasisIndex, Element, FreeCga, GeneratorDecl};
pub use cohomology::{cohomology, CohomologyRing, ProductTable};
pub use differential::{check_d_squared, DSquaredViolation, DgaMorphism, Differential};
pub use graded::GradedAlgebra;
pub use monomial::{multiply_monomials, Monomial};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GcaError {
    #[error("degree {degree} exceeds the cutoff {cutoff}")]
    CutoffExceeded { degree: u32, cutoff: u32 },
    #[error("operands belong to different algebras")]
    MixedAlgebras,
    #[error("invalid generator data: {0}")]
    InvalidGenerator(String),
    #[error("image of {generator} has the wrong degree")]
    DegreeMismatch { generator: String },
    #[error("d∘d does not vanish on generator {generator}")]
    DifferentialNotSquareZero { generator: String },
    #[error("morphism does not commute with the differentials on generator {generator}")]
    NotAChainMap { generator: String },
    #[error("element of degree {degree} is not a cocycle")]
    NotACocycle { degree: u32 },
}
