//! Exact linear algebra over `Q`, over Laurent polynomials `Q[ν, ν⁻¹]`, and
//! over the rational function field `Q(ν)`.

mod fraction;
mod laurent;
mod matrix;
mod scalar;
pub mod sparse;

pub use fraction::Fraction;
pub use laurent::Laurent;
pub use matrix::{
    characteristic_polynomial, exp_nilpotent, fraction_free_rank, generalized_eigenspace, image_basis, inverse,
    kernel_basis, quotient_complement, rank, rational_eigenvalues, rref, Eigenvalues, Matrix, Rref,
    SubspaceBasis,
};
pub use scalar::{format_rational, parse_rational, rat, ExponentSplit, Field, Rational, Scalar};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LaError {
    #[error("subspace of dimension {sub} is not contained in the ambient subspace of dimension {ambient}")]
    NotASubspace { ambient: usize, sub: usize },
    #[error("matrix is not nilpotent")]
    NotNilpotent,
    #[error("rank over Q(ν) is {generic} but specializing ν = {nu} gives {specialized}")]
    SpecializationMismatch { generic: usize, nu: String, specialized: usize },
}

/// The values substituted for `ν` in specialization cross-checks.
pub fn specialization_points() -> [Rational; 2] {
    [rat(2, 1), rat(3, 1)]
}

/// Rank over `Q(ν)`, cross-checked against the ranks at `ν = 2` and `ν = 3`.
///
/// A mismatch means the generic answer depends on a numeric coincidence; it is
/// reported, never absorbed.
pub fn checked_generic_rank(m: &Matrix<Fraction>) -> Result<usize, LaError> {
    let generic = rank(m);
    for nu in specialization_points() {
        let Some(spec) = m.specialize(&nu) else {
            return Err(LaError::SpecializationMismatch {
                generic,
                nu: format_rational(&nu),
                specialized: usize::MAX,
            });
        };
        let specialized = rank(&spec);
        if specialized != generic {
            return Err(LaError::SpecializationMismatch { generic, nu: format_rational(&nu), specialized });
        }
    }
    Ok(generic)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    #[test]
    fn specialization_cross_check_flags_coincidences() {
        // ν - 2 vanishes at ν = 2: generic rank 1, specialized rank 0
        let m = Matrix::from_rows(vec![vec![Fraction::from(Laurent::nu_pow(1) - Laurent::constant(rat(2, 1)))]]);
        assert!(matches!(checked_generic_rank(&m), Err(LaError::SpecializationMismatch { .. })));
        let ok = Matrix::from_rows(vec![vec![Fraction::from(Laurent::nu_pow(3))], vec![Fraction::zero()]]);
        assert_eq!(checked_generic_rank(&ok), Ok(1));
        assert!(Fraction::one().as_rational().unwrap().is_one());
    }
}
