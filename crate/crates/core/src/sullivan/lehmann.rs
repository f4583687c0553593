use num_traits::Zero;

use super::SullivanError;
use crate::exactla::{kernel_basis, quotient_complement, Matrix, Rational, SubspaceBasis};
use crate::gca::{check_d_squared, cohomology, Differential, Element, FreeCga, GeneratorDecl, Monomial};

/// One degree of one reduction round: `V^p = Im d′ ⊕ V′ ⊕ W`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegreeSplit {
    pub degree: u32,
    pub image: usize,
    pub kept: usize,
    pub contracted: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ContractiblePair {
    /// `w ∈ W`, as a combination of the round's generators.
    pub source: String,
    /// `d w`.
    pub target: String,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionRound {
    pub splits: Vec<DegreeSplit>,
    pub pairs: Vec<ContractiblePair>,
    /// Generators and differential after the round.
    pub quotient: Vec<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ReductionTrace {
    pub rounds: Vec<ReductionRound>,
}

impl ReductionTrace {
    pub fn is_empty(&self) -> bool {
        self.rounds.is_empty()
    }

    pub fn pair_count(&self) -> usize {
        self.rounds.iter().map(|r| r.pairs.len()).sum()
    }
}

/// Linear part `d′` of a differential as a matrix `V^p → V^{p+1}`, with
/// column `j` the linear part of `d` on the `j`-th degree-`p` generator.
fn linear_part(d: &Differential<Rational>, src: &[u32], tgt: &[u32]) -> Matrix<Rational> {
    let cols: Vec<Vec<Rational>> = src
        .iter()
        .map(|&g| tgt.iter().map(|&h| d.image(g).coeff(&Monomial::generator(h))).collect())
        .collect();
    Matrix::from_columns(tgt.len(), &cols)
}

fn generators_of_degree(alg: &FreeCga, p: u32) -> Vec<u32> {
    (0..alg.generator_count() as u32).filter(|&g| alg.generator_degree(g) == p).collect()
}

fn combination(gens: &[u32], v: &[Rational]) -> Element<Rational> {
    let mut e = Element::zero();
    for (g, c) in gens.iter().zip(v) {
        if !c.is_zero() {
            e.add_term(Monomial::generator(*g), c.clone());
        }
    }
    e
}

/// One round: returns `None` when `d′ = 0`.
fn reduce_once(
    alg: &FreeCga,
    d: &Differential<Rational>,
) -> Result<Option<(FreeCga, Differential<Rational>, ReductionRound)>, SullivanError> {
    let top = alg.generators().iter().map(|g| g.degree).max().unwrap_or(0);
    let by_degree: Vec<Vec<u32>> = (0..=top + 1).map(|p| generators_of_degree(alg, p)).collect();
    let linear: Vec<Matrix<Rational>> =
        (0..=top).map(|p| linear_part(d, &by_degree[p as usize], &by_degree[p as usize + 1])).collect();
    if linear.iter().all(Matrix::is_zero) {
        return Ok(None);
    }

    // per degree: W is a complement of ker d′, V′ a complement of Im d′ inside
    // ker d′, and the old generators get coordinates in the basis d′(W), V′, W
    let mut round = ReductionRound::default();
    struct Split {
        kept: Vec<Vec<Rational>>,
        contracted: Vec<Vec<Rational>>,
        image_from: Vec<Vec<Rational>>,
        to_new: Matrix<Rational>,
    }
    let mut splits: Vec<Split> = Vec::new();
    for p in 0..=top {
        let n = by_degree[p as usize].len();
        let image = if p == 0 {
            SubspaceBasis::zero(n)
        } else {
            let m = &linear[p as usize - 1];
            let cols: Vec<Vec<Rational>> = (0..m.cols()).map(|j| m.column(j)).collect();
            SubspaceBasis::span(n, &cols)
        };
        let ker = kernel_basis(&linear[p as usize]);
        let w = quotient_complement(&SubspaceBasis::full(n), &ker)?;
        let kept = quotient_complement(&ker, &image)?;
        // preimages in W of the image basis: d′ restricted to W is injective
        let image_from: Vec<Vec<Rational>> = if p == 0 {
            Vec::new()
        } else {
            let prev = &splits[p as usize - 1];
            let m = &linear[p as usize - 1];
            prev.contracted.iter().map(|v| m.apply(v)).collect()
        };
        // basis of V^p: d′(W^{p-1}), V′, W; coordinates of old generators in it
        let mut new_basis: Vec<Vec<Rational>> = image_from.clone();
        new_basis.extend(kept.vectors().iter().cloned());
        new_basis.extend(w.vectors().iter().cloned());
        let to_new = if n == 0 {
            Matrix::zeros(0, 0)
        } else {
            crate::exactla::inverse(&Matrix::from_columns(n, &new_basis)).ok_or_else(|| {
                SullivanError::Internal(format!("degree {p}: splitting of the generators is not a basis"))
            })?
        };
        round.splits.push(DegreeSplit {
            degree: p,
            image: image_from.len(),
            kept: kept.dim(),
            contracted: w.dim(),
        });
        splits.push(Split { kept: kept.vectors().to_vec(), contracted: w.vectors().to_vec(), image_from, to_new });
    }
    round.splits.retain(|s| s.image + s.kept + s.contracted > 0);

    // new algebra on V′
    let mut decls = Vec::new();
    let mut kept_elems: Vec<Element<Rational>> = Vec::new();
    let mut new_index: Vec<Vec<u32>> = vec![Vec::new(); top as usize + 1];
    for p in 1..=top {
        for v in &splits[p as usize].kept {
            new_index[p as usize].push(decls.len() as u32);
            decls.push(GeneratorDecl::new(format!("v{p}_{}", new_index[p as usize].len()), p));
            kept_elems.push(combination(&by_degree[p as usize], v));
        }
        for v in &splits[p as usize].contracted {
            let w = combination(&by_degree[p as usize], v);
            let dw = d.apply(alg, &w);
            round.pairs.push(ContractiblePair { source: alg.format(&w), target: alg.format(&dw) });
        }
    }
    let new_alg = FreeCga::new(decls, alg.cutoff())?;

    // q: old generators → quotient, by increasing degree. An old generator
    // g = Σ a_j d′(w_j) + Σ b_k v′_k + Σ c_l w_l; in the quotient w_l ↦ 0 and
    // d′(w_j) = d(w_j) − (decomposables) ↦ −q(decomposables).
    let mut q: Vec<Element<Rational>> = vec![Element::zero(); alg.generator_count()];
    for p in 1..=top {
        let s = &splits[p as usize];
        let gens = &by_degree[p as usize];
        let n_img = s.image_from.len();
        let n_kept = s.kept.len();
        let prev = &splits[p as usize - 1];
        for (pos, &g) in gens.iter().enumerate() {
            let coords = s.to_new.column(pos);
            let mut img = Element::zero();
            for (j, a) in coords[..n_img].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                let w = combination(&by_degree[p as usize - 1], &prev.contracted[j]);
                let dec = d.apply(alg, &w) - d.apply(alg, &w).linear_part();
                img = img - substitute(&new_alg, &q, &dec).scale(a);
            }
            for (k, b) in coords[n_img..n_img + n_kept].iter().enumerate() {
                if !b.is_zero() {
                    img.add_term(Monomial::generator(new_index[p as usize][k]), b.clone());
                }
            }
            q[g as usize] = img;
        }
    }
    let images: Vec<Element<Rational>> =
        kept_elems.iter().map(|v| substitute(&new_alg, &q, &d.apply(alg, v))).collect();
    let new_d = Differential::new(&new_alg, images)?;
    round.quotient = (0..new_alg.generator_count() as u32)
        .map(|i| format!("{} ({}): d = {}", new_alg.name(i), new_alg.generator_degree(i), new_alg.format(new_d.image(i))))
        .collect();
    Ok(Some((new_alg, new_d, round)))
}

/// Apply the algebra map given by generator images to an element.
fn substitute(target: &FreeCga, images: &[Element<Rational>], e: &Element<Rational>) -> Element<Rational> {
    let mut out = Element::zero();
    for (m, c) in e.terms() {
        let mut acc = Element::one();
        for g in m.expanded() {
            acc = target.multiply(&acc, &images[g as usize]).expect("same algebra");
            if acc.is_zero() {
                break;
            }
        }
        out = out + acc.scale(c);
    }
    out
}

/// Reduce a free DGA with `H¹ = 0` to a minimal one by repeatedly dividing
/// out the ideal generated by the contractible part `W ⊕ d(W)`.
pub fn lehmann_reduce(
    alg: &FreeCga,
    d: &Differential<Rational>,
) -> Result<(FreeCga, Differential<Rational>, ReductionTrace), SullivanError> {
    if let Some(v) = check_d_squared(alg, d).into_iter().next() {
        return Err(SullivanError::NonFreeInput(format!("d∘d ≠ 0 on {}", v.generator)));
    }
    if alg.cutoff() < 2 {
        return Err(SullivanError::InsufficientCutoff { needed: 2, available: alg.cutoff() });
    }
    let h1 = cohomology(alg, d, 1)?.betti(1);
    if h1 != 0 {
        return Err(SullivanError::H1NotZero { dimension: h1 });
    }
    let mut trace = ReductionTrace::default();
    let mut current = (alg.clone(), d.clone());
    while let Some((a, dd, round)) = reduce_once(&current.0, &current.1)? {
        trace.rounds.push(round);
        current = (a, dd);
    }
    Ok((current.0, current.1, trace))
}
