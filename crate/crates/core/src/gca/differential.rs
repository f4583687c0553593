use super::algebra::{BasisIndex, Element, FreeCga};
use super::monomial::Monomial;
use super::GcaError;
use crate::exactla::sparse::SparseVec;
use crate::exactla::{Rational, Scalar};

/// Derivation of degree +1, determined by its values on generators.
#[derive(Clone, Debug, PartialEq)]
pub struct Differential<T> {
    images: Vec<Element<T>>,
}

impl<T: Scalar> Differential<T> {
    /// Checks that there is one image per generator and that each image is
    /// homogeneous of degree one higher than its generator.
    pub fn new(alg: &FreeCga, images: Vec<Element<T>>) -> Result<Self, GcaError> {
        if images.len() != alg.generator_count() {
            return Err(GcaError::InvalidGenerator(format!(
                "{} differential images for {} generators",
                images.len(),
                alg.generator_count()
            )));
        }
        for (i, img) in images.iter().enumerate() {
            let want = alg.generator_degree(i as u32) + 1;
            if img.terms().any(|(m, _)| alg.degree(m) != want) {
                return Err(GcaError::DegreeMismatch { generator: alg.name(i as u32).to_string() });
            }
            if img.terms().any(|(m, _)| m.max_index().is_some_and(|j| j as usize >= alg.generator_count())) {
                return Err(GcaError::MixedAlgebras);
            }
        }
        Ok(Differential { images })
    }

    pub fn zero(alg: &FreeCga) -> Self {
        Differential { images: vec![Element::zero(); alg.generator_count()] }
    }

    pub fn image(&self, i: u32) -> &Element<T> {
        &self.images[i as usize]
    }

    pub fn images(&self) -> &[Element<T>] {
        &self.images
    }

    pub fn map_scalars<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Differential<U> {
        Differential { images: self.images.iter().map(|e| e.map(&f)).collect() }
    }

    /// Differential of `self ⊗ other` on [`FreeCga::tensor`].
    pub fn tensor(&self, alg: &FreeCga, other: &Differential<T>) -> Differential<T> {
        let offset = alg.generator_count() as u32;
        let mut images = self.images.clone();
        for img in &other.images {
            images.push(Element::from_terms(img.terms().map(|(m, c)| {
                (Monomial::from_factors(m.factors().iter().map(|(i, e)| (i + offset, *e)).collect()), c.clone())
            })));
        }
        Differential { images }
    }

    /// Graded Leibniz extension to a monomial.
    pub fn apply_monomial(&self, alg: &FreeCga, m: &Monomial) -> Element<T> {
        let mut out = Element::zero();
        let mut prefix: Vec<(u32, u32)> = Vec::new();
        let mut prefix_degree = 0u32;
        for (pos, &(g, e)) in m.factors().iter().enumerate() {
            let dg = &self.images[g as usize];
            if !dg.is_zero() {
                let p = Monomial::from_sorted_unchecked(prefix.clone());
                let q = Monomial::from_sorted_unchecked(m.factors()[pos + 1..].to_vec());
                let q = if e > 1 {
                    Monomial::from_factors(std::iter::once((g, e - 1)).chain(q.factors().iter().copied()).collect())
                } else {
                    q
                };
                let mut coeff = T::from_int(e as i64);
                if prefix_degree % 2 == 1 {
                    coeff = -coeff;
                }
                for (dm, dc) in dg.terms() {
                    let Some((n1, pd)) = alg.multiply_monomials(&p, dm) else { continue };
                    let Some((n2, full)) = alg.multiply_monomials(&pd, &q) else { continue };
                    let c = coeff.clone() * dc.clone();
                    out.add_term(full, if n1 ^ n2 { -c } else { c });
                }
            }
            prefix.push((g, e));
            prefix_degree += alg.generator_degree(g) * e;
        }
        out
    }

    pub fn apply(&self, alg: &FreeCga, a: &Element<T>) -> Element<T> {
        let mut out = Element::zero();
        for (m, c) in a.terms() {
            let dm = self.apply_monomial(alg, m);
            out = out + dm.scale(c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.images.iter().all(Element::is_zero)
    }

    /// Whether every generator image has word length at least two.
    pub fn is_decomposable(&self) -> bool {
        self.images.iter().all(Element::is_decomposable)
    }
}

impl Differential<Rational> {
    /// Columns of `d` from degree `n` to degree `n + 1` in the monomial bases.
    pub fn matrix_columns(&self, alg: &FreeCga, source: &BasisIndex, target: &BasisIndex) -> Vec<SparseVec> {
        source.monomials().iter().map(|m| target.to_sparse(&self.apply_monomial(alg, m))).collect()
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct DSquaredViolation<T> {
    pub generator: String,
    pub residual: Element<T>,
}

/// Generators on which `d∘d` does not vanish. Since `d²` is itself a
/// derivation, vanishing on generators gives vanishing everywhere.
pub fn check_d_squared<T: Scalar>(alg: &FreeCga, d: &Differential<T>) -> Vec<DSquaredViolation<T>> {
    (0..alg.generator_count() as u32)
        .filter_map(|i| {
            let r = d.apply(alg, d.image(i));
            (!r.is_zero()).then(|| DSquaredViolation { generator: alg.name(i).to_string(), residual: r })
        })
        .collect()
}

/// Algebra morphism `ΛV → ΛW` determined by generator images.
#[derive(Clone, Debug, PartialEq)]
pub struct DgaMorphism<T> {
    source: FreeCga,
    target: FreeCga,
    images: Vec<Element<T>>,
}

impl<T: Scalar> DgaMorphism<T> {
    pub fn new(source: &FreeCga, target: &FreeCga, images: Vec<Element<T>>) -> Result<Self, GcaError> {
        if images.len() != source.generator_count() {
            return Err(GcaError::InvalidGenerator(format!(
                "{} morphism images for {} generators",
                images.len(),
                source.generator_count()
            )));
        }
        for (i, img) in images.iter().enumerate() {
            let want = source.generator_degree(i as u32);
            if img.terms().any(|(m, _)| target.degree(m) != want) {
                return Err(GcaError::DegreeMismatch { generator: source.name(i as u32).to_string() });
            }
        }
        Ok(DgaMorphism { source: source.clone(), target: target.clone(), images })
    }

    pub fn identity(alg: &FreeCga) -> Self {
        let images = (0..alg.generator_count() as u32).map(|i| alg.generator(i)).collect();
        DgaMorphism { source: alg.clone(), target: alg.clone(), images }
    }

    pub fn source(&self) -> &FreeCga {
        &self.source
    }

    pub fn target(&self) -> &FreeCga {
        &self.target
    }

    pub fn image(&self, i: u32) -> &Element<T> {
        &self.images[i as usize]
    }

    pub fn apply_monomial(&self, m: &Monomial) -> Element<T> {
        let mut acc = Element::one();
        for g in m.expanded() {
            acc = self.target.mul(&acc, &self.images[g as usize]);
            if acc.is_zero() {
                break;
            }
        }
        acc
    }

    pub fn apply(&self, a: &Element<T>) -> Element<T> {
        let mut out = Element::zero();
        for (m, c) in a.terms() {
            out = out + self.apply_monomial(m).scale(c);
        }
        out
    }

    /// `self ∘ first`.
    pub fn compose(&self, first: &DgaMorphism<T>) -> Result<DgaMorphism<T>, GcaError> {
        if first.target != self.source {
            return Err(GcaError::MixedAlgebras);
        }
        let images = first.images.iter().map(|e| self.apply(e)).collect();
        Ok(DgaMorphism { source: first.source.clone(), target: self.target.clone(), images })
    }

    /// `φ∘d = d∘φ` on every generator.
    pub fn check_chain_map(&self, d_source: &Differential<T>, d_target: &Differential<T>) -> Result<(), GcaError> {
        for i in 0..self.source.generator_count() as u32 {
            let lhs = self.apply(d_source.image(i));
            let rhs = d_target.apply(&self.target, &self.images[i as usize]);
            if !(lhs - rhs).is_zero() {
                return Err(GcaError::NotAChainMap { generator: self.source.name(i).to_string() });
            }
        }
        Ok(())
    }

    pub fn map_scalars<U: Scalar>(&self, f: impl Fn(&T) -> U) -> DgaMorphism<U> {
        DgaMorphism {
            source: self.source.clone(),
            target: self.target.clone(),
            images: self.images.iter().map(|e| e.map(&f)).collect(),
        }
    }
}
