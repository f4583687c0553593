use num_traits::{ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::MostowError;
use crate::exactla::{checked_generic_rank, exp_nilpotent, rat, Laurent, Matrix, Rational};
use crate::gca::{cohomology, CohomologyRing, DgaMorphism, Differential, Element, FreeCga, Monomial};
use crate::liealg::{LieAlgebra, Splitting};

/// Weights of the diagonal part and the unipotent twist `R`, both in
/// nilradical coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberActionSpec {
    pub weights: Vec<Rational>,
    pub twist: Vec<Rational>,
}

impl FiberActionSpec {
    pub fn untwisted(weights: Vec<Rational>) -> Self {
        let n = weights.len();
        FiberActionSpec { weights, twist: vec![Rational::zero(); n] }
    }

    pub fn from_splitting(s: &Splitting, twist: Option<Vec<Rational>>) -> Self {
        let n = s.weights.len();
        FiberActionSpec { weights: s.weights.clone(), twist: twist.unwrap_or_else(|| vec![Rational::zero(); n]) }
    }
}

/// The automorphism `ψ = diag(ν^w) ∘ exp(ad R)` of the nilradical, its
/// pullback `η` to the Chevalley–Eilenberg algebra, and the induced action
/// on cohomology.
#[derive(Clone, Debug)]
pub struct FiberAction {
    pub nilradical: LieAlgebra,
    pub spec: FiberActionSpec,
    /// `ψ` in the nilradical basis; column `j` is `ψ(e_j)`.
    pub psi: Matrix<Laurent>,
    pub algebra: FreeCga,
    pub differential: Differential<Rational>,
    /// `η(x_k) = x_k ∘ ψ = Σ_j ψ[k][j] x_j`.
    pub eta: DgaMorphism<Laurent>,
    pub cohomology: CohomologyRing,
    /// Matrix of `η*` on `H^p`, columns indexed by source classes.
    pub induced: Vec<Matrix<Laurent>>,
}

pub fn build_fiber_action(n: &LieAlgebra, spec: &FiberActionSpec) -> Result<FiberAction, MostowError> {
    let dim = n.dimension();
    if spec.weights.len() != dim || spec.twist.len() != dim {
        return Err(MostowError::Shape(format!(
            "{} weights and {} twist coordinates for a {dim}-dimensional nilradical",
            spec.weights.len(),
            spec.twist.len()
        )));
    }
    let mut exps = Vec::with_capacity(dim);
    for (i, w) in spec.weights.iter().enumerate() {
        if !w.is_integer() {
            return Err(MostowError::NonIntegerWeight { vector: n.basis()[i].clone() });
        }
        exps.push(w.to_integer().to_i64().ok_or(MostowError::NonIntegerWeight { vector: n.basis()[i].clone() })?);
    }
    let e = exp_nilpotent(&n.ad(&spec.twist)).map_err(|_| MostowError::NotNilpotent)?;
    let diag = Matrix::diagonal(exps.iter().map(|&k| Laurent::nu_pow(k)).collect());
    let psi = diag.mul(&e.to_laurent());

    let (alg, d) = n.ce_complex()?;
    let images: Vec<Element<Laurent>> = (0..dim)
        .map(|k| {
            Element::from_terms(
                (0..dim).map(|j| (Monomial::generator(j as u32), psi[(k, j)].clone())),
            )
        })
        .collect();
    let eta = DgaMorphism::new(&alg, &alg, images)?;
    let dl = d.map_scalars(|c| Laurent::constant(c.clone()));
    eta.check_chain_map(&dl, &dl).map_err(|err| match err {
        crate::gca::GcaError::NotAChainMap { generator } => MostowError::NotAChainMap { generator },
        other => other.into(),
    })?;
    let h = cohomology(&alg, &d, dim as u32)?;
    let induced = CohomologyRing::induced_map(&eta, &h, &h)?;
    for (p, m) in induced.iter().enumerate() {
        let r = checked_generic_rank(&m.to_fraction())?;
        if r != m.rows() {
            return Err(MostowError::NotInvertible { degree: p as u32 });
        }
    }
    Ok(FiberAction {
        nilradical: n.clone(),
        spec: spec.clone(),
        psi,
        algebra: alg,
        differential: d,
        eta,
        cohomology: h,
        induced,
    })
}

impl FiberAction {
    /// Sum of generator weights of a monomial.
    pub fn monomial_weight(&self, m: &Monomial) -> Rational {
        m.factors()
            .iter()
            .fold(Rational::zero(), |acc, (g, e)| acc + &self.spec.weights[*g as usize] * Rational::from_integer((*e).into()))
    }

    /// Weight of each representative class of `H^p`, `None` when a
    /// representative mixes weights.
    pub fn class_weights(&self, p: u32) -> Vec<Option<Rational>> {
        self.cohomology
            .representatives(p)
            .iter()
            .map(|r| {
                let mut ws = r.terms().map(|(m, _)| self.monomial_weight(m));
                let first = ws.next()?;
                ws.all(|w| w == first).then_some(first)
            })
            .collect()
    }
}

/// Twist vectors with coordinates drawn from `{±1, ±2}`, reproducible from `seed`.
pub fn sample_twists(seed: u64, count: usize, dim: usize) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            (0..dim)
                .map(|_| {
                    let mag: i64 = rng.gen_range(1..=2);
                    let sign = if rng.gen_bool(0.5) { -1 } else { 1 };
                    rat(sign * mag, 1)
                })
                .collect()
        })
        .collect()
}
