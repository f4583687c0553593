use num_traits::Zero;

use super::SullivanError;
use crate::exactla::sparse::{kernel_and_image, sparse_from_dense, Echelon, SparseSubspace, SparseVec};
use crate::exactla::{quotient_complement, Rational, SubspaceBasis};
use crate::gca::{cohomology, BasisIndex, CohomologyRing, Differential, Element, FreeCga, GeneratorDecl, Monomial};

#[derive(Clone, Debug, PartialEq)]
pub struct MinimalGenerator {
    pub name: String,
    pub degree: u32,
    /// Round of the inductive construction in which the generator was added;
    /// `0` for the generators that create new cohomology classes.
    pub stage: u32,
    pub differential: Element<Rational>,
    /// Image in the target DGA.
    pub image: Element<Rational>,
}

impl MinimalGenerator {
    pub fn is_closed(&self) -> bool {
        self.differential.is_zero()
    }
}

#[derive(Clone, Debug)]
pub struct MinimalModelReport {
    pub degree_cutoff: u32,
    pub stage_cutoff: u32,
    pub algebra: FreeCga,
    pub differential: Differential<Rational>,
    pub generators: Vec<MinimalGenerator>,
    /// Per degree `0..=cutoff`: the killing rounds stopped because nothing
    /// was left to kill, not because of the stage cutoff.
    pub stabilized: Vec<bool>,
    /// Per degree `0..=cutoff`: `φ*` is an isomorphism (and injective in
    /// degree `cutoff + 1`, recorded at the last index).
    pub quasi_isomorphic: Vec<bool>,
    pub model_betti: Vec<usize>,
    pub target_betti: Vec<usize>,
}

impl MinimalModelReport {
    pub fn count(&self, p: u32) -> usize {
        self.generators.iter().filter(|g| g.degree == p).count()
    }

    pub fn counts(&self) -> Vec<usize> {
        (0..=self.degree_cutoff).map(|p| self.count(p)).collect()
    }

    /// Generators of degree `p` with zero differential.
    pub fn closed_count(&self, p: u32) -> usize {
        self.generators.iter().filter(|g| g.degree == p && g.is_closed()).count()
    }

    /// Generators of degree `p` added in round `stage`.
    pub fn stage_count(&self, p: u32, stage: u32) -> usize {
        self.generators.iter().filter(|g| g.degree == p && g.stage == stage).count()
    }

    pub fn is_settled(&self, p: u32) -> bool {
        p <= self.degree_cutoff && self.stabilized[p as usize] && self.quasi_isomorphic[p as usize]
    }

    pub fn is_minimal(&self) -> bool {
        self.generators.iter().all(|g| g.differential.is_decomposable())
    }

    pub fn quasi_isomorphism_verified(&self) -> bool {
        self.quasi_isomorphic.iter().all(|q| *q)
    }

    pub fn describe(&self) -> Vec<String> {
        self.generators
            .iter()
            .map(|g| {
                let mut s = format!("{} (degree {}, round {})", g.name, g.degree, g.stage);
                if !g.is_closed() {
                    s.push_str(&format!(", d = {}", self.algebra.format(&g.differential)));
                }
                s
            })
            .collect()
    }
}

struct Builder<'a> {
    target: &'a FreeCga,
    target_d: &'a Differential<Rational>,
    h: CohomologyRing,
    top: u32,
    gens: Vec<MinimalGenerator>,
}

impl Builder<'_> {
    fn algebra(&self) -> Result<FreeCga, SullivanError> {
        Ok(FreeCga::new(
            self.gens.iter().map(|g| GeneratorDecl::new(g.name.clone(), g.degree)).collect(),
            self.top + 2,
        )?)
    }

    fn differential(&self, alg: &FreeCga) -> Result<Differential<Rational>, SullivanError> {
        Ok(Differential::new(alg, self.gens.iter().map(|g| g.differential.clone()).collect())?)
    }

    fn phi_monomial(&self, m: &Monomial) -> Element<Rational> {
        let mut acc = Element::one();
        for g in m.expanded() {
            acc = self.target.multiply(&acc, &self.gens[g as usize].image).expect("same algebra");
        }
        acc
    }

    fn phi(&self, basis: &BasisIndex, v: &SparseVec) -> Element<Rational> {
        let mut acc = Element::zero();
        for (i, c) in v {
            acc = acc + self.phi_monomial(&basis.monomials()[*i]).scale(c);
        }
        acc
    }

    /// Cocycles of `M^k`, coboundaries, and the class of each cocycle row in `H^k(A)`.
    fn degree_data(&self, alg: &FreeCga, d: &Differential<Rational>, k: u32) -> Result<DegreeData, SullivanError> {
        let src = alg.basis_index(k)?;
        let up = alg.basis_index(k + 1)?;
        let (cycles_coeffs, _) = kernel_and_image(&d.matrix_columns(alg, &src, &up));
        let bound = if k == 0 {
            SparseSubspace::zero()
        } else {
            kernel_and_image(&d.matrix_columns(alg, &alg.basis_index(k - 1)?, &src)).1
        };
        // kernel rows are coefficient vectors over the source monomials
        let cycles: Vec<SparseVec> = cycles_coeffs.rows().to_vec();
        let classes = cycles
            .iter()
            .map(|z| self.h.class_of(k, &self.phi(&src, z)))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(DegreeData { basis: src, cycles, bound, classes })
    }

    /// Classes of `H^k(M)` sent to zero in `H^k(A)`, as cocycles of `M`.
    fn kernel(&self, data: &DegreeData) -> Vec<SparseVec> {
        let cols: Vec<SparseVec> = data.classes.iter().map(|c| sparse_from_dense(c)).collect();
        let (ker, _) = kernel_and_image(&cols);
        let elems: Vec<SparseVec> = ker
            .rows()
            .iter()
            .map(|coeffs| {
                let mut acc = SparseVec::new();
                for (i, c) in coeffs {
                    acc = crate::exactla::sparse::axpy(&acc, c, &data.cycles[*i]);
                }
                acc
            })
            .collect();
        let space = SparseSubspace::span(&elems).sum(&data.bound);
        space.complement_of(&data.bound).expect("coboundaries map to zero").rows().to_vec()
    }

    /// Complement of the image of `H^k(M)` in `H^k(A)`, in class coordinates.
    fn cokernel(&self, data: &DegreeData, k: u32) -> Result<Vec<Vec<Rational>>, SullivanError> {
        let n = self.h.betti(k);
        let image = SubspaceBasis::span(n, &data.classes);
        Ok(quotient_complement(&SubspaceBasis::full(n), &image)?.vectors().to_vec())
    }

    /// `a ∈ A^{k-1}` with `d a = target`; the target must be a coboundary.
    fn solve(&self, k: u32, target: &Element<Rational>) -> Result<Element<Rational>, SullivanError> {
        let src = self.target.basis_index(k - 1)?;
        let tgt = self.target.basis_index(k)?;
        let mut e = Echelon::tracking();
        for (j, col) in self.target_d.matrix_columns(self.target, &src, &tgt).iter().enumerate() {
            e.insert(col, j);
        }
        let combo = e.solve(&tgt.to_sparse(target)).ok_or(SullivanError::NotACoboundary { degree: k })?;
        Ok(src.to_element(&combo))
    }

    fn push(&mut self, degree: u32, stage: u32, differential: Element<Rational>, image: Element<Rational>) {
        let k = self.gens.iter().filter(|g| g.degree == degree).count() + 1;
        self.gens.push(MinimalGenerator { name: format!("m{degree}_{k}"), degree, stage, differential, image });
    }

    /// Add generators of degree `p` killing the kernel on `H^{p+1}` until it
    /// vanishes; returns whether it did within `stage_cutoff` rounds.
    fn kill_kernel(&mut self, p: u32, stage_cutoff: u32) -> Result<bool, SullivanError> {
        for stage in 1..=stage_cutoff {
            let alg = self.algebra()?;
            let d = self.differential(&alg)?;
            let data = self.degree_data(&alg, &d, p + 1)?;
            let ker = self.kernel(&data);
            if ker.is_empty() {
                return Ok(true);
            }
            for c in ker {
                let dc = data.basis.to_element(&c);
                let image = self.solve(p + 1, &self.phi(&data.basis, &c))?;
                self.push(p, stage, dc, image);
            }
        }
        let alg = self.algebra()?;
        let d = self.differential(&alg)?;
        Ok(self.kernel(&self.degree_data(&alg, &d, p + 1)?).is_empty())
    }
}

struct DegreeData {
    basis: BasisIndex,
    cycles: Vec<SparseVec>,
    bound: SparseSubspace,
    classes: Vec<Vec<Rational>>,
}

/// Sullivan minimal model `φ: (ΛV, d) → (A, d_A)` in degrees `≤ degree_cutoff`.
pub fn minimal_model(
    alg: &FreeCga,
    d: &Differential<Rational>,
    degree_cutoff: u32,
    stage_cutoff: u32,
) -> Result<MinimalModelReport, SullivanError> {
    if alg.generators().iter().any(|g| g.degree == 0) {
        return Err(SullivanError::NotConnected);
    }
    if alg.cutoff() < degree_cutoff + 2 {
        return Err(SullivanError::InsufficientCutoff { needed: degree_cutoff + 2, available: alg.cutoff() });
    }
    let h = cohomology(alg, d, degree_cutoff + 1)?;
    let mut b = Builder { target: alg, target_d: d, h, top: degree_cutoff, gens: Vec::new() };
    let mut stabilized = vec![true; degree_cutoff as usize + 1];
    for p in 1..=degree_cutoff {
        let m = b.algebra()?;
        let dm = b.differential(&m)?;
        let data = b.degree_data(&m, &dm, p)?;
        for v in b.cokernel(&data, p)? {
            let mut image = Element::zero();
            for (i, c) in v.iter().enumerate() {
                if !c.is_zero() {
                    image = image + b.h.representative(p, i).scale(c);
                }
            }
            b.push(p, 0, Element::zero(), image);
        }
        stabilized[p as usize] = b.kill_kernel(p, stage_cutoff)?;
    }

    let model = b.algebra()?;
    let dm = b.differential(&model)?;
    let mut quasi = Vec::with_capacity(degree_cutoff as usize + 2);
    for k in 0..=degree_cutoff + 1 {
        let data = b.degree_data(&model, &dm, k)?;
        let injective = b.kernel(&data).is_empty();
        let onto = k > degree_cutoff || b.cokernel(&data, k)?.is_empty();
        quasi.push(injective && onto);
    }
    let model_betti = cohomology(&model, &dm, degree_cutoff)?.betti_numbers();
    let target_betti = (0..=degree_cutoff).map(|k| b.h.betti(k)).collect();
    Ok(MinimalModelReport {
        degree_cutoff,
        stage_cutoff,
        algebra: model,
        differential: dm,
        generators: b.gens,
        stabilized,
        quasi_isomorphic: quasi,
        model_betti,
        target_betti,
    })
}
