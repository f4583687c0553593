use num_traits::{One, Zero};

use super::MostowError;
use crate::exactla::{kernel_basis, quotient_complement, Matrix, Rational, SubspaceBasis};
use crate::gca::{Element, FreeCga, GeneratorDecl, GradedAlgebra, Monomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PresentationGenerator {
    pub degree: u32,
    /// Name in the free cover (`a{degree}_{k}`).
    pub name: String,
    /// Name of the represented element of the algebra.
    pub label: String,
    pub vector: Vec<Rational>,
}

/// Generators of a finite graded algebra and the relations among them, up
/// to a degree cutoff.
#[derive(Clone, Debug)]
pub struct AlgebraPresentation {
    pub cutoff: u32,
    pub generators: Vec<PresentationGenerator>,
    /// Free graded-commutative algebra on the generators.
    pub free: FreeCga,
    /// `relations[p]`: basis of the kernel of the free cover in degree `p`.
    pub relations: Vec<Vec<Element<Rational>>>,
    /// `minimal_relations[p]`: a complement in `relations[p]` of the relations
    /// generated by lower-degree ones.
    pub minimal_relations: Vec<Vec<Element<Rational>>>,
    target: GradedAlgebra,
}

impl AlgebraPresentation {
    pub fn generator_count(&self, p: u32) -> usize {
        self.generators.iter().filter(|g| g.degree == p).count()
    }

    pub fn generator_counts(&self) -> Vec<usize> {
        (0..=self.cutoff).map(|p| self.generator_count(p)).collect()
    }

    pub fn relation_count(&self, p: u32) -> usize {
        self.relations.get(p as usize).map_or(0, Vec::len)
    }

    pub fn minimal_relation_count(&self, p: u32) -> usize {
        self.minimal_relations.get(p as usize).map_or(0, Vec::len)
    }

    pub fn generators_in(&self, p: u32) -> impl Iterator<Item = &PresentationGenerator> {
        self.generators.iter().filter(move |g| g.degree == p)
    }

    pub fn target(&self) -> &GradedAlgebra {
        &self.target
    }

    /// Image of an element of the free cover in the target algebra.
    pub fn evaluate(&self, e: &Element<Rational>, degree: u32) -> Vec<Rational> {
        evaluate(&self.target, &self.free, &self.generators, e, degree)
    }

    /// Readable form of a free-cover element using the target labels.
    pub fn describe(&self, e: &Element<Rational>) -> String {
        let mut s = self.free.format(e);
        let mut order: Vec<&PresentationGenerator> = self.generators.iter().collect();
        order.sort_by_key(|g| std::cmp::Reverse(g.name.len()));
        for g in order {
            s = s.replace(&g.name, &g.label);
        }
        s
    }
}

fn evaluate(
    target: &GradedAlgebra,
    free: &FreeCga,
    gens: &[PresentationGenerator],
    e: &Element<Rational>,
    degree: u32,
) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); target.dim(degree)];
    for (m, c) in e.terms() {
        let v = evaluate_monomial(target, free, gens, m);
        for (k, x) in v.into_iter().enumerate() {
            out[k] += c * x;
        }
    }
    out
}

/// Product of the generator images in increasing generator order.
fn evaluate_monomial(target: &GradedAlgebra, free: &FreeCga, gens: &[PresentationGenerator], m: &Monomial) -> Vec<Rational> {
    let mut deg = 0u32;
    let mut acc = vec![Rational::one()];
    for g in m.expanded() {
        let gen = &gens[g as usize];
        acc = target.multiply(deg, &acc, gen.degree, &gen.vector);
        deg += gen.degree;
    }
    debug_assert_eq!(deg, free.degree(m));
    acc
}

/// Indecomposables of `u` chosen as a deterministic complement of `U⁺·U⁺`,
/// and the kernel of `ΛZ₀ → U` in each degree up to `cutoff`.
pub fn presentation(u: &GradedAlgebra, cutoff: u32) -> Result<AlgebraPresentation, MostowError> {
    if !u.is_connected() {
        return Err(MostowError::Shape("presentation needs a connected algebra".into()));
    }
    let mut generators = Vec::new();
    for p in 1..=cutoff {
        let n = u.dim(p);
        if n == 0 {
            continue;
        }
        let mut products = Vec::new();
        for a in 1..p {
            let b = p - a;
            for i in 0..u.dim(a) {
                for j in 0..u.dim(b) {
                    products.push(u.basis_product(a, i, b, j));
                }
            }
        }
        let dec = SubspaceBasis::span(n, &products);
        let comp = quotient_complement(&SubspaceBasis::full(n), &dec)?;
        for v in comp.vectors() {
            let label = match (0..n).filter(|&k| !v[k].is_zero()).collect::<Vec<_>>()[..] {
                [k] if v[k].is_one() => u.names(p)[k].clone(),
                _ => format!("{v:?}"),
            };
            let k = generators.iter().filter(|g: &&PresentationGenerator| g.degree == p).count();
            generators.push(PresentationGenerator { degree: p, name: format!("a{p}_{}", k + 1), label, vector: v.clone() });
        }
    }
    let free = FreeCga::new(
        generators.iter().map(|g| GeneratorDecl::new(g.name.clone(), g.degree)).collect(),
        cutoff + 1,
    )?;
    let mut relations = vec![Vec::new(); cutoff as usize + 1];
    let mut minimal_relations = vec![Vec::new(); cutoff as usize + 1];
    for p in 1..=cutoff {
        let monos = free.monomial_basis(p)?;
        if monos.is_empty() {
            continue;
        }
        let cols: Vec<Vec<Rational>> =
            monos.iter().map(|m| evaluate_monomial(u, &free, &generators, m)).collect();
        let eval = Matrix::from_columns(u.dim(p), &cols);
        let ker = kernel_basis(&eval);
        let to_element = |v: &[Rational]| {
            Element::from_terms(monos.iter().zip(v).filter(|(_, c)| !c.is_zero()).map(|(m, c)| (m.clone(), c.clone())))
        };
        relations[p as usize] = ker.vectors().iter().map(|v| to_element(v)).collect();

        // relations forced by lower-degree ones: r·m with r of degree q < p
        let mut generated = Vec::new();
        for q in 1..p {
            let others = free.monomial_basis(p - q)?;
            for r in &relations[q as usize] {
                for m in &others {
                    let prod = free.multiply(r, &Element::monomial(m.clone(), Rational::one()))?;
                    generated.push(monos.iter().map(|b| prod.coeff(b)).collect::<Vec<_>>());
                }
            }
        }
        let gen_space = SubspaceBasis::span(monos.len(), &generated);
        let comp = quotient_complement(&ker, &gen_space)?;
        minimal_relations[p as usize] = comp.vectors().iter().map(|v| to_element(v)).collect();
    }
    Ok(AlgebraPresentation { cutoff, generators, free, relations, minimal_relations, target: u.clone() })
}
