use num_traits::Zero;

use super::algebra::{unit, LieAlgebra};
use super::LieError;
use crate::exactla::{Matrix, Rational};

/// A one-dimensional complement `S` and the basis vectors claimed to span
/// the nilradical.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SplittingSpec {
    pub s_index: usize,
    pub nilradical_indices: Vec<usize>,
}

impl SplittingSpec {
    /// `S` at `s_index`, the nilradical made of every other basis vector in order.
    pub fn complement_of(g: &LieAlgebra, s_index: usize) -> Self {
        SplittingSpec { s_index, nilradical_indices: (0..g.dimension()).filter(|&i| i != s_index).collect() }
    }
}

/// Outcome of a successful splitting check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Splitting {
    pub spec: SplittingSpec,
    /// Eigenvalue of `ad S` on each nilradical basis vector, in spec order.
    pub weights: Vec<Rational>,
    /// All weights vanish.
    pub s_acts_trivially: bool,
    /// `tr ad S` equals the weight sum.
    pub trace_consistent: bool,
}

impl Splitting {
    pub fn weight_sum(&self) -> Rational {
        self.weights.iter().fold(Rational::zero(), |a, w| a + w)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CompletelySolvable {
    Certified(String),
    Undetermined(String),
}

impl CompletelySolvable {
    pub fn is_certified(&self) -> bool {
        matches!(self, CompletelySolvable::Certified(_))
    }
}

impl LieAlgebra {
    /// Check that the nilradical span is a nilpotent ideal on which `ad S`
    /// is diagonal in the given basis, and return the weights.
    pub fn verify_splitting(&self, spec: &SplittingSpec) -> Result<Splitting, LieError> {
        let n = self.dimension();
        let mut all: Vec<usize> = spec.nilradical_indices.clone();
        all.push(spec.s_index);
        all.sort_unstable();
        if all.iter().copied().ne(0..n) {
            return Err(LieError::Shape("splitting must partition the basis".into()));
        }
        let in_nil = |v: &[Rational]| v[spec.s_index].is_zero();
        for &i in &spec.nilradical_indices {
            for j in 0..n {
                if !in_nil(&self.bracket_basis(j, i)) {
                    return Err(LieError::NotAnIdeal { vector: self.basis()[i].clone() });
                }
            }
        }
        let nil = self.subalgebra(&spec.nilradical_indices)?;
        if !nil.is_nilpotent() {
            let culprit = (0..nil.dimension())
                .find(|&i| {
                    let ad = nil.ad_basis(i);
                    !ad.pow(nil.dimension() as u32).is_zero()
                })
                .unwrap_or(0);
            return Err(LieError::NotNilpotent { vector: nil.basis()[culprit].clone() });
        }
        let mut weights = Vec::with_capacity(spec.nilradical_indices.len());
        for &i in &spec.nilradical_indices {
            let v = self.bracket_basis(spec.s_index, i);
            if v.iter().enumerate().any(|(k, c)| k != i && !c.is_zero()) {
                return Err(LieError::NotDiagonal { vector: self.basis()[i].clone() });
            }
            weights.push(v[i].clone());
        }
        let trace = self.ad_basis(spec.s_index).trace();
        let sum = weights.iter().fold(Rational::zero(), |a, w| a + w);
        Ok(Splitting {
            spec: spec.clone(),
            s_acts_trivially: weights.iter().all(Zero::is_zero),
            trace_consistent: trace == sum,
            weights,
        })
    }

    /// Sufficient check for complete solvability: nilpotent, or split with
    /// rational diagonal weights. Never a negative answer.
    pub fn completely_solvable_certificate(&self, spec: Option<&SplittingSpec>) -> CompletelySolvable {
        if !self.validate().is_valid() {
            return CompletelySolvable::Undetermined("structure constants fail validation".into());
        }
        if self.is_nilpotent() {
            return CompletelySolvable::Certified("nilpotent".into());
        }
        let Some(spec) = spec else {
            return CompletelySolvable::Undetermined("no splitting supplied".into());
        };
        match self.verify_splitting(spec) {
            Ok(_) => CompletelySolvable::Certified(format!(
                "nilpotent ideal with ad {} diagonal over Q",
                self.basis()[spec.s_index]
            )),
            Err(e) => CompletelySolvable::Undetermined(e.to_string()),
        }
    }

    /// Restriction of `ad S` to the nilradical, in nilradical coordinates.
    pub fn ad_on_nilradical(&self, spec: &SplittingSpec) -> Matrix<Rational> {
        let ad = self.ad(&unit(self.dimension(), spec.s_index));
        ad.submatrix(&spec.nilradical_indices, &spec.nilradical_indices)
    }
}
