use std::collections::BTreeMap;

use crate::exactla::sparse::SparseVec;
use crate::exactla::Rational;
use crate::gca::{BasisIndex, Differential, Element, FreeCga, GcaError};

/// Monomial bases of a lower-graded free algebra, split by `(degree, lower degree)`.
pub(crate) struct Bases {
    by_bidegree: BTreeMap<(u32, u32), BasisIndex>,
    empty: BasisIndex,
}

impl Bases {
    pub(crate) fn get(&self, p: u32, n: u32) -> &BasisIndex {
        self.by_bidegree.get(&(p, n)).unwrap_or(&self.empty)
    }

    pub(crate) fn max_lower(&self, p: u32) -> u32 {
        self.by_bidegree.keys().filter(|(q, _)| *q == p).map(|(_, n)| *n).max().unwrap_or(0)
    }
}

pub(crate) fn bigraded_bases(alg: &FreeCga, top: u32) -> Result<Bases, GcaError> {
    let mut groups: BTreeMap<(u32, u32), Vec<_>> = BTreeMap::new();
    for p in 0..=top {
        for m in alg.monomial_basis(p)? {
            groups.entry((p, alg.lower_degree(&m))).or_default().push(m);
        }
    }
    Ok(Bases {
        by_bidegree: groups.into_iter().map(|(k, v)| (k, BasisIndex::new(v))).collect(),
        empty: BasisIndex::default(),
    })
}

pub(crate) fn d_columns(alg: &FreeCga, d: &Differential<Rational>, src: &BasisIndex, tgt: &BasisIndex) -> Vec<SparseVec> {
    d.matrix_columns(alg, src, tgt)
}

pub(crate) fn element_from(basis: &BasisIndex, v: &SparseVec) -> Element<Rational> {
    basis.to_element(v)
}

pub(crate) fn sparse_of(basis: &BasisIndex, e: &Element<Rational>) -> SparseVec {
    basis.to_sparse(e)
}
