use std::collections::BTreeMap;

use num_traits::One;

use super::linear::{bigraded_bases, d_columns, element_from, sparse_of, Bases};
use super::SullivanError;
use crate::exactla::sparse::{kernel_and_image, SparseSubspace, SparseVec};
use crate::exactla::Rational;
use crate::gca::{Differential, Element, FreeCga, GeneratorDecl, GradedAlgebra, Monomial};
use crate::mostow::presentation;

/// Halperin–Stasheff model `(ΛZ, d) → (H, 0)` of a graded algebra, with the
/// lower grading recorded on each generator.
#[derive(Clone, Debug)]
pub struct BigradedModel {
    pub algebra: FreeCga,
    pub differential: Differential<Rational>,
    /// `ρ` on the stage-0 generators, as coordinates in `H`; empty for
    /// higher stages.
    pub rho: Vec<Vec<Rational>>,
    /// For stage-0 generators, the basis name of `H` they map to.
    pub labels: Vec<String>,
    pub degree_cutoff: u32,
    pub stage_cutoff: u32,
    pub stages_built: u32,
    /// Degree `p ≤ degree_cutoff` is settled when `H(ΛZ)` agrees with `H` in
    /// degree `p` and has no positive lower degree part in degrees `p, p + 1`.
    pub settled: Vec<bool>,
    pub stage_cutoff_hit: bool,
    /// `(p, n) ↦ dim H_n^p(ΛZ)` for `p ≤ degree_cutoff + 1`.
    pub bigraded_betti: BTreeMap<(u32, u32), usize>,
    pub target_dims: Vec<usize>,
}

impl BigradedModel {
    pub fn stage(&self, generator: u32) -> u32 {
        self.algebra.generators()[generator as usize].lower_degree.unwrap_or(0)
    }

    /// Generators of degree `p` and stage `n`.
    pub fn generators_of(&self, p: u32, n: u32) -> Vec<u32> {
        (0..self.algebra.generator_count() as u32)
            .filter(|&i| self.algebra.generator_degree(i) == p && self.stage(i) == n)
            .collect()
    }

    pub fn count(&self, p: u32, n: u32) -> usize {
        self.generators_of(p, n).len()
    }

    /// `(degree, stage) ↦ count` over all generators.
    pub fn counts(&self) -> BTreeMap<(u32, u32), usize> {
        let mut out = BTreeMap::new();
        for i in 0..self.algebra.generator_count() as u32 {
            *out.entry((self.algebra.generator_degree(i), self.stage(i))).or_insert(0) += 1;
        }
        out
    }

    pub fn is_settled(&self, p: u32) -> bool {
        self.settled.get(p as usize).copied().unwrap_or(false)
    }

    pub fn describe(&self) -> Vec<String> {
        (0..self.algebra.generator_count() as u32)
            .map(|i| {
                let mut s = format!(
                    "{} (degree {}, stage {})",
                    self.algebra.name(i),
                    self.algebra.generator_degree(i),
                    self.stage(i)
                );
                if !self.labels[i as usize].is_empty() {
                    s.push_str(&format!(" ↦ {}", self.labels[i as usize]));
                }
                let d = self.differential.image(i);
                if !d.is_zero() {
                    s.push_str(&format!(", d = {}", self.algebra.format(d)));
                }
                s
            })
            .collect()
    }
}

/// Image of a lower-degree-0 monomial under `ρ`.
fn rho_monomial(h: &GradedAlgebra, alg: &FreeCga, rho: &[Vec<Rational>], m: &Monomial) -> Vec<Rational> {
    let mut deg = 0;
    let mut acc = vec![Rational::one()];
    for g in m.expanded() {
        let p = alg.generator_degree(g);
        acc = h.multiply(deg, &acc, p, &rho[g as usize]);
        deg += p;
    }
    acc
}

pub fn bigraded_model(h: &GradedAlgebra, degree_cutoff: u32, stage_cutoff: u32) -> Result<BigradedModel, SullivanError> {
    if !h.is_connected() {
        return Err(SullivanError::NotConnected);
    }
    let n_top = degree_cutoff;
    let pres = presentation(h, n_top)?;
    let mut decls = Vec::new();
    let mut rho = Vec::new();
    let mut labels = Vec::new();
    for g in &pres.generators {
        decls.push(GeneratorDecl::bigraded(format!("z0_{}_{}", g.degree, decls.iter().filter(|d: &&GeneratorDecl| d.degree == g.degree).count() + 1), g.degree, 0));
        rho.push(g.vector.clone());
        labels.push(g.label.clone());
    }
    let mut alg = FreeCga::new(decls, n_top + 2)?;
    let mut images: Vec<Element<Rational>> = vec![Element::zero(); alg.generator_count()];
    let mut d = Differential::new(&alg, images.clone())?;

    let mut stages_built = 0;
    let mut check = verify(h, &alg, &d, &rho, n_top)?;
    for k in 1..=stage_cutoff {
        if check.all_settled() {
            break;
        }
        let bases = bigraded_bases(&alg, n_top + 2)?;
        let mut cycles: BTreeMap<u32, SparseSubspace> = BTreeMap::new();
        for q in 1..=n_top + 1 {
            let src = bases.get(q, k - 1);
            let z = if k == 1 {
                let cols: Vec<SparseVec> = src
                    .monomials()
                    .iter()
                    .map(|m| crate::exactla::sparse::sparse_from_dense(&rho_monomial(h, &alg, &rho, m)))
                    .collect();
                kernel_and_image(&cols).0
            } else {
                kernel_and_image(&d_columns(&alg, &d, src, bases.get(q + 1, k - 2))).0
            };
            cycles.insert(q, z);
        }
        let mut new_decls = Vec::new();
        let mut new_images = Vec::new();
        for q in 2..=n_top + 1 {
            let src = bases.get(q, k - 1);
            let zc = &cycles[&q];
            if zc.dim() == 0 {
                continue;
            }
            let (_, bd) = kernel_and_image(&d_columns(&alg, &d, bases.get(q - 1, k), src));
            let mut spanning: Vec<SparseVec> = bd.rows().to_vec();
            for a in 1..q {
                for m0 in bases.get(a, 0).monomials() {
                    let m0 = Element::monomial(m0.clone(), Rational::one());
                    for c in cycles[&(q - a)].rows() {
                        let prod = alg.multiply(&m0, &element_from(bases.get(q - a, k - 1), c))?;
                        spanning.push(sparse_of(src, &prod));
                    }
                }
            }
            let s = SparseSubspace::span(&spanning);
            let comp = zc.complement_of(&s)?;
            for (idx, row) in comp.rows().iter().enumerate() {
                new_decls.push(GeneratorDecl::bigraded(format!("z{k}_{}_{}", q - 1, idx + 1), q - 1, k));
                new_images.push(src.to_element(row));
            }
        }
        stages_built = k;
        if new_decls.is_empty() {
            continue;
        }
        for _ in &new_decls {
            rho.push(Vec::new());
            labels.push(String::new());
        }
        alg = alg.extend(new_decls)?;
        images.extend(new_images);
        d = Differential::new(&alg, images.clone())?;
        check = verify(h, &alg, &d, &rho, n_top)?;
    }
    let stage_cutoff_hit = !check.all_settled();
    Ok(BigradedModel {
        algebra: alg,
        differential: d,
        rho,
        labels,
        degree_cutoff,
        stage_cutoff,
        stages_built,
        settled: check.settled,
        stage_cutoff_hit,
        bigraded_betti: check.betti,
        target_dims: (0..=degree_cutoff).map(|p| h.dim(p)).collect(),
    })
}

struct Check {
    settled: Vec<bool>,
    betti: BTreeMap<(u32, u32), usize>,
}

impl Check {
    fn all_settled(&self) -> bool {
        self.settled.iter().all(|s| *s)
    }
}

fn verify(
    h: &GradedAlgebra,
    alg: &FreeCga,
    d: &Differential<Rational>,
    rho: &[Vec<Rational>],
    n_top: u32,
) -> Result<Check, SullivanError> {
    let bases: Bases = bigraded_bases(alg, n_top + 2)?;
    let mut betti = BTreeMap::new();
    let mut rho_ok = vec![true; n_top as usize + 2];
    for p in 0..=n_top + 1 {
        for n in 0..=bases.max_lower(p) {
            let src = bases.get(p, n);
            if src.is_empty() {
                continue;
            }
            let z = if n == 0 {
                src.len()
            } else {
                kernel_and_image(&d_columns(alg, d, src, bases.get(p + 1, n - 1))).0.dim()
            };
            let b = if p == 0 { 0 } else { kernel_and_image(&d_columns(alg, d, bases.get(p - 1, n + 1), src)).1.dim() };
            if z - b > 0 {
                betti.insert((p, n), z - b);
            }
            if n == 0 && p >= 1 {
                let cols: Vec<Vec<Rational>> = src.monomials().iter().map(|m| rho_monomial(h, alg, rho, m)).collect();
                let rank = crate::exactla::rank(&crate::exactla::Matrix::from_columns(h.dim(p), &cols));
                rho_ok[p as usize] = rank == h.dim(p);
            }
        }
    }
    let upper = |p: u32| betti.iter().any(|(&(q, n), _)| q == p && n >= 1);
    let settled = (0..=n_top)
        .map(|p| {
            let h0 = betti.get(&(p, 0)).copied().unwrap_or(0);
            h0 == h.dim(p) && (p == 0 || rho_ok[p as usize]) && !upper(p) && !upper(p + 1)
        })
        .collect();
    Ok(Check { settled, betti })
}
