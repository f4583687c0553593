use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::action::FiberAction;
use super::triangular::TriangularCertificate;
use super::MostowError;
use crate::exactla::{
    format_rational, generalized_eigenspace, specialization_points, Fraction, LaError, Rational, SubspaceBasis,
};
use crate::gca::GradedAlgebra;

/// The largest subspace of `H*` on which `η*` acts unipotently, with its
/// induced multiplication.
#[derive(Clone, Debug, PartialEq)]
pub struct NilpotentSubmodule {
    /// Per degree, basis vectors in the coordinates of the cohomology
    /// representatives.
    pub basis: Vec<Vec<Vec<Rational>>>,
    /// Per degree, the class indices whose certified diagonal entry is 1.
    pub unit_diagonal: Vec<Vec<usize>>,
    pub algebra: GradedAlgebra,
}

impl NilpotentSubmodule {
    pub fn dims(&self) -> Vec<usize> {
        self.basis.iter().map(Vec::len).collect()
    }

    pub fn total_dimension(&self) -> usize {
        self.dims().iter().sum()
    }
}

pub fn max_nilpotent_submodule(f: &FiberAction, cert: &TriangularCertificate) -> Result<NilpotentSubmodule, MostowError> {
    let h = &f.cohomology;
    let top = h.max_degree();
    let mut bases: Vec<SubspaceBasis<Rational>> = Vec::with_capacity(top as usize + 1);
    let mut unit_diagonal = Vec::with_capacity(top as usize + 1);
    for p in 0..=top {
        let m = f.induced[p as usize].to_fraction();
        let generic = generalized_eigenspace(&m, &Fraction::one(), None);
        for nu in specialization_points() {
            let spec = m.specialize(&nu).ok_or(MostowError::La(LaError::SpecializationMismatch {
                generic: generic.dim(),
                nu: format_rational(&nu),
                specialized: usize::MAX,
            }))?;
            let d = generalized_eigenspace(&spec, &Rational::one(), None).dim();
            if d != generic.dim() {
                return Err(MostowError::La(LaError::SpecializationMismatch {
                    generic: generic.dim(),
                    nu: format_rational(&nu),
                    specialized: d,
                }));
            }
        }
        let ones: Vec<usize> = cert.unit_diagonal(p).into_iter().collect();
        if ones.len() != generic.dim() {
            return Err(MostowError::SubmoduleMismatch { degree: p, eigenspace: generic.dim(), unit_diagonal: ones.len() });
        }
        let vectors: Vec<Vec<Rational>> = generic
            .vectors()
            .iter()
            .map(|v| v.iter().map(Fraction::as_rational).collect::<Option<Vec<_>>>())
            .collect::<Option<_>>()
            .ok_or(MostowError::NonRationalSubmodule { degree: p })?;
        bases.push(SubspaceBasis::span(h.betti(p), &vectors));
        unit_diagonal.push(ones);
    }

    let names: Vec<Vec<String>> = bases
        .iter()
        .enumerate()
        .map(|(p, b)| {
            b.vectors()
                .iter()
                .enumerate()
                .map(|(i, v)| match unit_position(v) {
                    Some(k) => cert.label_of(p as u32, k).map_or_else(|| format!("U{p}_{i}"), str::to_string),
                    None => format!("U{p}_{i}"),
                })
                .collect()
        })
        .collect();

    let mut table = BTreeMap::new();
    for p in 1..=top {
        for q in 1..=top - p {
            for (i, a) in bases[p as usize].vectors().iter().enumerate() {
                for (j, b) in bases[q as usize].vectors().iter().enumerate() {
                    let prod = h.multiply_classes(p, a, q, b).expect("degree within range");
                    let coords = bases[(p + q) as usize]
                        .coordinates(&prod)
                        .ok_or(MostowError::NotClosedUnderProduct { left: names[p as usize][i].clone(), right: names[q as usize][j].clone() })?;
                    if coords.iter().any(|c| !c.is_zero()) {
                        table.insert((p, i, q, j), coords);
                    }
                }
            }
        }
    }
    let algebra = GradedAlgebra::new(names, table)?;
    Ok(NilpotentSubmodule {
        basis: bases.into_iter().map(|b| b.vectors().to_vec()).collect(),
        unit_diagonal,
        algebra,
    })
}

fn unit_position(v: &[Rational]) -> Option<usize> {
    let nz: Vec<usize> = (0..v.len()).filter(|&i| !v[i].is_zero()).collect();
    match nz[..] {
        [k] if v[k].is_one() => Some(k),
        _ => None,
    }
}
