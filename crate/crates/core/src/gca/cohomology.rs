use std::collections::{BTreeMap, HashMap};
use std::sync::OnceLock;

use num_traits::Zero;

use super::algebra::{BasisIndex, Element, FreeCga};
use super::differential::{check_d_squared, DgaMorphism, Differential};
use super::GcaError;
use crate::exactla::sparse::{kernel_and_image, SparseSubspace, SparseVec};
use crate::exactla::{ExponentSplit, Matrix, Rational};

#[derive(Clone, Debug)]
struct DegreeData {
    basis: BasisIndex,
    cocycles: SparseSubspace,
    coboundaries: SparseSubspace,
    /// RREF complement of the coboundaries inside the cocycles; every row
    /// vanishes at the coboundary pivots.
    representatives: SparseSubspace,
}

/// Cup-product structure constants: `(p, i, q, j)` maps to the coordinates of
/// `[rep_p,i]·[rep_q,j]` in degree `p + q`.
pub type ProductTable = BTreeMap<(u32, usize, u32, usize), Vec<Rational>>;

/// Cohomology of a free DGA over `Q`, in degrees `0..=max_degree`, with
/// canonical representative cocycles.
#[derive(Debug)]
pub struct CohomologyRing {
    algebra: FreeCga,
    differential: Differential<Rational>,
    max_degree: u32,
    degrees: Vec<DegreeData>,
    table: OnceLock<ProductTable>,
}

impl Clone for CohomologyRing {
    fn clone(&self) -> Self {
        CohomologyRing {
            algebra: self.algebra.clone(),
            differential: self.differential.clone(),
            max_degree: self.max_degree,
            degrees: self.degrees.clone(),
            table: self.table.clone(),
        }
    }
}

pub fn cohomology(alg: &FreeCga, d: &Differential<Rational>, max_degree: u32) -> Result<CohomologyRing, GcaError> {
    if max_degree + 1 > alg.cutoff() {
        return Err(GcaError::CutoffExceeded { degree: max_degree + 1, cutoff: alg.cutoff() });
    }
    if let Some(v) = check_d_squared(alg, d).into_iter().next() {
        return Err(GcaError::DifferentialNotSquareZero { generator: v.generator });
    }
    let bases: Vec<BasisIndex> = (0..=max_degree + 1).map(|n| alg.basis_index(n)).collect::<Result<_, _>>()?;
    let mut degrees = Vec::with_capacity(max_degree as usize + 1);
    let mut incoming = SparseSubspace::zero();
    for n in 0..=max_degree as usize {
        let cols = d.matrix_columns(alg, &bases[n], &bases[n + 1]);
        let (kernel, image) = kernel_and_image(&cols);
        let representatives = kernel.complement_of(&incoming).expect("coboundaries lie in the cocycles when d² = 0");
        degrees.push(DegreeData {
            basis: bases[n].clone(),
            cocycles: kernel,
            coboundaries: std::mem::replace(&mut incoming, image),
            representatives,
        });
    }
    Ok(CohomologyRing {
        algebra: alg.clone(),
        differential: d.clone(),
        max_degree,
        degrees,
        table: OnceLock::new(),
    })
}

impl CohomologyRing {
    pub fn algebra(&self) -> &FreeCga {
        &self.algebra
    }

    pub fn differential(&self) -> &Differential<Rational> {
        &self.differential
    }

    pub fn max_degree(&self) -> u32 {
        self.max_degree
    }

    fn data(&self, n: u32) -> Result<&DegreeData, GcaError> {
        self.degrees
            .get(n as usize)
            .ok_or(GcaError::CutoffExceeded { degree: n, cutoff: self.max_degree })
    }

    pub fn betti(&self, n: u32) -> usize {
        self.degrees.get(n as usize).map_or(0, |d| d.representatives.dim())
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        (0..=self.max_degree).map(|n| self.betti(n)).collect()
    }

    pub fn basis(&self, n: u32) -> &BasisIndex {
        &self.degrees[n as usize].basis
    }

    pub fn cocycle_dimension(&self, n: u32) -> usize {
        self.degrees[n as usize].cocycles.dim()
    }

    pub fn coboundary_dimension(&self, n: u32) -> usize {
        self.degrees[n as usize].coboundaries.dim()
    }

    pub fn representative(&self, n: u32, i: usize) -> Element<Rational> {
        let d = &self.degrees[n as usize];
        d.basis.to_element(&d.representatives.rows()[i])
    }

    pub fn representatives(&self, n: u32) -> Vec<Element<Rational>> {
        (0..self.betti(n)).map(|i| self.representative(n, i)).collect()
    }

    pub fn is_coboundary(&self, n: u32, e: &Element<Rational>) -> Result<bool, GcaError> {
        let d = self.data(n)?;
        Ok(d.coboundaries.contains(&d.basis.to_sparse(e)))
    }

    /// Coordinates of a degree-`n` cocycle in the representative basis.
    pub fn class_of(&self, n: u32, e: &Element<Rational>) -> Result<Vec<Rational>, GcaError> {
        let d = self.data(n)?;
        if e.terms().any(|(m, _)| self.algebra.degree(m) != n) {
            return Err(GcaError::DegreeMismatch { generator: format!("element of degree ≠ {n}") });
        }
        let v = d.basis.to_sparse(e);
        if !d.cocycles.contains(&v) {
            return Err(GcaError::NotACocycle { degree: n });
        }
        Ok(class_coordinates(d, &v))
    }

    /// [`class_of`](Self::class_of) for coefficients in a Laurent-type domain,
    /// solved one power of `ν` at a time.
    pub fn class_of_split<T: ExponentSplit>(&self, n: u32, e: &Element<T>) -> Result<Vec<T>, GcaError> {
        let mut parts: BTreeMap<i64, Element<Rational>> = BTreeMap::new();
        for (m, c) in e.terms() {
            for (k, q) in c.split() {
                parts.entry(k).or_insert_with(Element::zero).add_term(m.clone(), q);
            }
        }
        let b = self.betti(n);
        let mut coords: Vec<Vec<(i64, Rational)>> = vec![Vec::new(); b];
        for (k, part) in parts {
            for (i, q) in self.class_of(n, &part)?.into_iter().enumerate() {
                if !q.is_zero() {
                    coords[i].push((k, q));
                }
            }
        }
        Ok(coords.into_iter().map(T::assemble).collect())
    }

    /// `[rep_p,i] · [rep_q,j]` in coordinates; `None` above `max_degree`.
    pub fn cup(&self, p: u32, i: usize, q: u32, j: usize) -> Option<Vec<Rational>> {
        if p + q > self.max_degree {
            return None;
        }
        if let Some(t) = self.table.get() {
            return t.get(&(p, i, q, j)).cloned();
        }
        Some(self.compute_cup(p, i, q, j))
    }

    fn compute_cup(&self, p: u32, i: usize, q: u32, j: usize) -> Vec<Rational> {
        let prod = self.algebra.mul(&self.representative(p, i), &self.representative(q, j));
        let d = &self.degrees[(p + q) as usize];
        class_coordinates(d, &d.basis.to_sparse(&prod))
    }

    /// Product of arbitrary classes given by coordinates.
    pub fn multiply_classes(&self, p: u32, a: &[Rational], q: u32, b: &[Rational]) -> Option<Vec<Rational>> {
        if p + q > self.max_degree {
            return None;
        }
        let mut out = vec![Rational::zero(); self.betti(p + q)];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let c = self.cup(p, i, q, j)?;
                for (k, z) in c.into_iter().enumerate() {
                    out[k] += x * y * z;
                }
            }
        }
        Some(out)
    }

    /// Every product of basis classes landing in degree `≤ max_degree`;
    /// computed once and cached.
    pub fn product_table(&self) -> &ProductTable {
        self.table.get_or_init(|| {
            let mut t = BTreeMap::new();
            for p in 0..=self.max_degree {
                for q in 0..=self.max_degree - p {
                    for i in 0..self.betti(p) {
                        for j in 0..self.betti(q) {
                            t.insert((p, i, q, j), self.compute_cup(p, i, q, j));
                        }
                    }
                }
            }
            t
        })
    }

    /// Matrix of `φ*` in each degree `0..=min(max degrees)`, columns indexed
    /// by source classes.
    pub fn induced_map<T: ExponentSplit>(
        phi: &DgaMorphism<T>,
        source: &CohomologyRing,
        target: &CohomologyRing,
    ) -> Result<Vec<Matrix<T>>, GcaError> {
        if phi.source() != &source.algebra.with_cutoff(phi.source().cutoff())
            || phi.target() != &target.algebra.with_cutoff(phi.target().cutoff())
        {
            return Err(GcaError::MixedAlgebras);
        }
        let lift = |d: &Differential<Rational>| d.map_scalars(|c| T::from_rational(c.clone()));
        phi.check_chain_map(&lift(&source.differential), &lift(&target.differential))?;
        let top = source.max_degree.min(target.max_degree);
        let mut out = Vec::with_capacity(top as usize + 1);
        for n in 0..=top {
            let cols: Vec<Vec<T>> = source
                .representatives(n)
                .iter()
                .map(|r| target.class_of_split(n, &phi.apply(&r.map(|c| T::from_rational(c.clone())))))
                .collect::<Result<_, _>>()?;
            out.push(Matrix::from_columns(target.betti(n), &cols));
        }
        Ok(out)
    }
}

fn class_coordinates(d: &DegreeData, v: &SparseVec) -> Vec<Rational> {
    let w = d.coboundaries.reduce(v);
    let map: HashMap<usize, &Rational> = w.iter().map(|(i, x)| (*i, x)).collect();
    d.representatives
        .leads()
        .iter()
        .map(|l| map.get(l).map_or_else(Rational::zero, |x| (*x).clone()))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, Laurent};
    use crate::gca::{GeneratorDecl, Monomial};
    use num_traits::One;

    fn heisenberg() -> (FreeCga, Differential<Rational>) {
        let a = FreeCga::exterior(&["x1", "y1", "z1"], 4).unwrap();
        let xy = Element::monomial(Monomial::from_factors(vec![(0, 1), (1, 1)]), rat(1, 1));
        let d = Differential::new(&a, vec![Element::zero(), Element::zero(), xy]).unwrap();
        (a, d)
    }

    #[test]
    fn heisenberg_betti_and_representatives() {
        let (a, d) = heisenberg();
        let h = cohomology(&a, &d, 3).unwrap();
        assert_eq!(h.betti_numbers(), vec![1, 2, 2, 1]);
        let reps: Vec<String> = (1..=3).flat_map(|n| h.representatives(n)).map(|r| a.format(&r)).collect();
        assert_eq!(reps, ["x1", "y1", "x1*z1", "y1*z1", "x1*y1*z1"]);
    }

    #[test]
    fn cup_products_in_heisenberg() {
        let (a, d) = heisenberg();
        let h = cohomology(&a, &d, 3).unwrap();
        assert_eq!(h.cup(1, 0, 1, 1).unwrap(), vec![rat(0, 1), rat(0, 1)]);
        assert_eq!(h.cup(2, 0, 1, 1).unwrap(), vec![rat(-1, 1)]);
        assert_eq!(h.cup(0, 0, 2, 1).unwrap(), vec![rat(0, 1), rat(1, 1)]);
        assert!(h.cup(2, 0, 2, 0).is_none());
        let x1y1 = a.mul(&a.generator(0), &a.generator(1));
        assert!(h.is_coboundary(2, &x1y1).unwrap());
        assert_eq!(h.class_of(1, &a.generator(2)), Err(GcaError::NotACocycle { degree: 1 }));
    }

    #[test]
    fn contractible_pair_and_abelian() {
        let a = FreeCga::new(vec![GeneratorDecl::new("t", 1), GeneratorDecl::new("u", 2)], 4).unwrap();
        let d = Differential::new(&a, vec![a.generator(1), Element::zero()]).unwrap();
        assert_eq!(cohomology(&a, &d, 3).unwrap().betti_numbers(), vec![1, 0, 0, 0]);
        let b = FreeCga::exterior(&["x", "y"], 3).unwrap();
        assert_eq!(cohomology(&b, &Differential::zero(&b), 2).unwrap().betti_numbers(), vec![1, 2, 1]);
    }

    #[test]
    fn rejects_non_square_zero() {
        // d x = z w, d w = x y: d d w = z w y
        let a = FreeCga::exterior(&["x", "y", "z", "w"], 4).unwrap();
        let m = |i, j| Element::monomial(Monomial::from_factors(vec![(i, 1), (j, 1)]), rat(1, 1));
        let d = Differential::new(&a, vec![m(2, 3), Element::zero(), Element::zero(), m(0, 1)]).unwrap();
        assert!(matches!(cohomology(&a, &d, 3), Err(GcaError::DifferentialNotSquareZero { .. })));
    }

    #[test]
    fn induced_map_of_weight_scaling() {
        let (a, d) = heisenberg();
        let h = cohomology(&a, &d, 3).unwrap();
        let s = |i: u32, k: i64| a.generator::<Laurent>(i).scale(&Laurent::nu_pow(k));
        let phi = DgaMorphism::new(&a, &a, vec![s(0, 1), s(1, -2), s(2, -1)]).unwrap();
        let m = CohomologyRing::induced_map(&phi, &h, &h).unwrap();
        assert_eq!(m[1], Matrix::diagonal(vec![Laurent::nu_pow(1), Laurent::nu_pow(-2)]));
        assert_eq!(m[3], Matrix::diagonal(vec![Laurent::nu_pow(-2)]));
        let id = CohomologyRing::induced_map(&DgaMorphism::<Rational>::identity(&a), &h, &h).unwrap();
        assert!(id.iter().all(|m| *m == Matrix::identity(m.rows())));
        assert!(id[0][(0, 0)].is_one());
    }
}
