//! Sparse rational vectors and echelon bases.
//!
//! The cochain spaces met in model building have a few thousand coordinates
//! but each differential image has a handful of terms, so elimination works
//! on sorted `(index, coefficient)` lists instead of dense rows.

use std::collections::{BTreeMap, HashMap};

use num_traits::{One, Zero};

use super::scalar::Rational;
use super::LaError;

/// Sorted by index, no stored zeros.
pub type SparseVec = Vec<(usize, Rational)>;

pub fn sparse_from_dense(v: &[Rational]) -> SparseVec {
    v.iter().enumerate().filter(|(_, x)| !x.is_zero()).map(|(i, x)| (i, x.clone())).collect()
}

pub fn sparse_to_dense(v: &SparseVec, len: usize) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); len];
    for (i, x) in v {
        out[*i] = x.clone();
    }
    out
}

/// `y + a·x`.
pub fn axpy(y: &SparseVec, a: &Rational, x: &SparseVec) -> SparseVec {
    if a.is_zero() {
        return y.clone();
    }
    let mut out = Vec::with_capacity(y.len() + x.len());
    let (mut i, mut j) = (0, 0);
    while i < y.len() || j < x.len() {
        let take_y = j >= x.len() || (i < y.len() && y[i].0 < x[j].0);
        let take_x = i >= y.len() || (j < x.len() && x[j].0 < y[i].0);
        if take_y {
            out.push(y[i].clone());
            i += 1;
        } else if take_x {
            out.push((x[j].0, a * &x[j].1));
            j += 1;
        } else {
            let s = &y[i].1 + a * &x[j].1;
            if !s.is_zero() {
                out.push((y[i].0, s));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

pub fn scale(v: &SparseVec, a: &Rational) -> SparseVec {
    if a.is_zero() {
        return Vec::new();
    }
    v.iter().map(|(i, x)| (*i, x * a)).collect()
}

fn accumulate(acc: &mut BTreeMap<usize, Rational>, a: &Rational, x: &SparseVec) {
    for (j, v) in x {
        let e = acc.entry(*j).or_insert_with(Rational::zero);
        *e -= a * v;
        if e.is_zero() {
            acc.remove(j);
        }
    }
}

#[derive(Clone, Debug)]
struct Row {
    vec: SparseVec,
    combo: SparseVec,
}

/// Semi-echelon basis (each row has leading coefficient 1 at a distinct
/// column) that optionally tracks which inserted vectors each row came from.
/// Tracking turns it into a kernel solver: an inserted vector that reduces to
/// zero yields a linear relation among the inputs.
#[derive(Clone, Debug, Default)]
pub struct Echelon {
    rows: Vec<Row>,
    by_lead: BTreeMap<usize, usize>,
    track: bool,
}

pub enum Insertion {
    Independent(usize),
    /// Relation among inserted vectors (indices are insertion tags).
    Dependent(SparseVec),
}

impl Echelon {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn tracking() -> Self {
        Echelon { track: true, ..Self::default() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    fn reduce_with_combo(&self, v: &SparseVec, combo: SparseVec) -> (SparseVec, SparseVec) {
        let mut acc: BTreeMap<usize, Rational> = v.iter().cloned().collect();
        let mut cmb: BTreeMap<usize, Rational> = combo.into_iter().collect();
        let mut cursor = 0usize;
        loop {
            let next = acc
                .range(cursor..)
                .find(|(k, _)| self.by_lead.contains_key(k))
                .map(|(k, c)| (*k, c.clone()));
            let Some((lead, c)) = next else { break };
            let row = &self.rows[self.by_lead[&lead]];
            accumulate(&mut acc, &c, &row.vec);
            if self.track {
                accumulate(&mut cmb, &c, &row.combo);
            }
            cursor = lead + 1;
        }
        (acc.into_iter().collect(), cmb.into_iter().collect())
    }

    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.reduce_with_combo(v, Vec::new()).0
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Insert `v`, tagged `tag` for relation tracking.
    pub fn insert(&mut self, v: &SparseVec, tag: usize) -> Insertion {
        let start = if self.track { vec![(tag, Rational::one())] } else { Vec::new() };
        let (r, combo) = self.reduce_with_combo(v, start);
        if r.is_empty() {
            return Insertion::Dependent(combo);
        }
        let lead = r[0].0;
        let inv = r[0].1.recip();
        let row = Row { vec: scale(&r, &inv), combo: scale(&combo, &inv) };
        self.by_lead.insert(lead, self.rows.len());
        self.rows.push(row);
        Insertion::Independent(lead)
    }

    /// Solve `Σ c_i x_i = v` over the inserted vectors; needs tracking.
    pub fn solve(&self, v: &SparseVec) -> Option<SparseVec> {
        assert!(self.track, "solve requires a tracking echelon");
        let (r, combo) = self.reduce_with_combo(v, Vec::new());
        if r.is_empty() {
            // reduce subtracts, so the combination found is the negative
            Some(scale(&combo, &(-Rational::one())))
        } else {
            None
        }
    }

    pub fn into_subspace(self) -> SparseSubspace {
        SparseSubspace::from_semi_echelon(self.rows.into_iter().map(|r| r.vec).collect())
    }
}

/// Fully reduced (RREF) sparse subspace; rows sorted by pivot.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SparseSubspace {
    rows: Vec<SparseVec>,
    leads: Vec<usize>,
    lead_index: HashMap<usize, usize>,
}

impl SparseSubspace {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn span(vectors: &[SparseVec]) -> Self {
        let mut e = Echelon::new();
        for v in vectors {
            e.insert(v, 0);
        }
        e.into_subspace()
    }

    fn from_semi_echelon(mut rows: Vec<SparseVec>) -> Self {
        rows.sort_by_key(|r| r[0].0);
        let leads: Vec<usize> = rows.iter().map(|r| r[0].0).collect();
        let lead_index: HashMap<usize, usize> = leads.iter().enumerate().map(|(i, l)| (*l, i)).collect();
        for i in (0..rows.len()).rev() {
            let targets: Vec<(usize, Rational)> = rows[i][1..]
                .iter()
                .filter(|(c, _)| lead_index.contains_key(c))
                .cloned()
                .collect();
            if targets.is_empty() {
                continue;
            }
            let mut acc: BTreeMap<usize, Rational> = rows[i].iter().cloned().collect();
            for (col, coef) in targets {
                accumulate(&mut acc, &coef, &rows[lead_index[&col]]);
            }
            rows[i] = acc.into_iter().collect();
        }
        SparseSubspace { rows, leads, lead_index }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    pub fn leads(&self) -> &[usize] {
        &self.leads
    }

    /// Projection along this subspace onto vectors vanishing at every lead.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let hits: Vec<(usize, Rational)> = v.iter().filter(|(c, _)| self.lead_index.contains_key(c)).cloned().collect();
        if hits.is_empty() {
            return v.clone();
        }
        let mut acc: BTreeMap<usize, Rational> = v.iter().cloned().collect();
        for (col, coef) in hits {
            accumulate(&mut acc, &coef, &self.rows[self.lead_index[&col]]);
        }
        acc.into_iter().collect()
    }

    pub fn contains(&self, v: &SparseVec) -> bool {
        self.reduce(v).is_empty()
    }

    /// Coordinates in the RREF basis, if `v` lies in the span.
    pub fn coordinates(&self, v: &SparseVec) -> Option<Vec<Rational>> {
        if !self.contains(v) {
            return None;
        }
        let map: HashMap<usize, &Rational> = v.iter().map(|(i, x)| (*i, x)).collect();
        Some(self.leads.iter().map(|l| map.get(l).map_or_else(Rational::zero, |x| (*x).clone())).collect())
    }

    pub fn sum(&self, other: &SparseSubspace) -> SparseSubspace {
        let mut all = self.rows.clone();
        all.extend(other.rows.iter().cloned());
        Self::span(&all)
    }

    pub fn is_subspace_of(&self, other: &SparseSubspace) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }

    /// Canonical complement of `sub` inside `self` (same recipe as the dense
    /// [`quotient_complement`](super::quotient_complement)).
    pub fn complement_of(&self, sub: &SparseSubspace) -> Result<SparseSubspace, LaError> {
        if !sub.is_subspace_of(self) {
            return Err(LaError::NotASubspace { ambient: self.dim(), sub: sub.dim() });
        }
        let reduced: Vec<SparseVec> = self.rows.iter().map(|r| sub.reduce(r)).collect();
        Ok(Self::span(&reduced))
    }
}

/// Kernel and image of the linear map whose `j`-th column is `columns[j]`.
///
/// The kernel comes back in canonical RREF form (coordinates index the
/// columns); the image as an RREF subspace of the target.
pub fn kernel_and_image(columns: &[SparseVec]) -> (SparseSubspace, SparseSubspace) {
    let mut e = Echelon::tracking();
    let mut relations = Vec::new();
    for (j, col) in columns.iter().enumerate() {
        if let Insertion::Dependent(rel) = e.insert(col, j) {
            relations.push(rel);
        }
    }
    (SparseSubspace::span(&relations), e.into_subspace())
}
