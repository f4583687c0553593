use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::cohomology::CohomologyRing;
use super::GcaError;
use crate::exactla::{format_rational, Rational};

/// Finite-dimensional graded-commutative algebra with zero differential,
/// given by a basis in each degree and structure constants.
///
/// Degree `0` is expected to be spanned by the unit (basis index 0); products
/// with it are implicit. Products between positive-degree basis elements that
/// are absent from the table are zero.
#[derive(Clone, Debug, PartialEq)]
pub struct GradedAlgebra {
    names: Vec<Vec<String>>,
    table: BTreeMap<(u32, usize, u32, usize), Vec<Rational>>,
}

impl GradedAlgebra {
    /// `names[p]` lists the basis of degree `p`. Table entries are keyed by
    /// `(p, i, q, j)` with `p, q ≥ 1` and hold coordinates in degree `p + q`.
    pub fn new(
        names: Vec<Vec<String>>,
        table: BTreeMap<(u32, usize, u32, usize), Vec<Rational>>,
    ) -> Result<Self, GcaError> {
        for (&(p, i, q, j), v) in &table {
            let ok = p >= 1
                && q >= 1
                && i < names.get(p as usize).map_or(0, Vec::len)
                && j < names.get(q as usize).map_or(0, Vec::len)
                && v.len() == names.get((p + q) as usize).map_or(0, Vec::len);
            if !ok {
                return Err(GcaError::InvalidGenerator(format!("malformed product entry ({p},{i})·({q},{j})")));
            }
        }
        let table = table.into_iter().filter(|(_, v)| v.iter().any(|x| !x.is_zero())).collect();
        Ok(GradedAlgebra { names, table })
    }

    pub fn top_degree(&self) -> u32 {
        self.names.len().saturating_sub(1) as u32
    }

    pub fn dim(&self, p: u32) -> usize {
        self.names.get(p as usize).map_or(0, Vec::len)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.names.iter().map(Vec::len).collect()
    }

    pub fn names(&self, p: u32) -> &[String] {
        self.names.get(p as usize).map_or(&[], Vec::as_slice)
    }

    pub fn is_connected(&self) -> bool {
        self.dim(0) == 1
    }

    pub fn table(&self) -> &BTreeMap<(u32, usize, u32, usize), Vec<Rational>> {
        &self.table
    }

    /// Product of basis elements, unit included.
    pub fn basis_product(&self, p: u32, i: usize, q: u32, j: usize) -> Vec<Rational> {
        let n = self.dim(p + q);
        if p == 0 {
            return unit_vector(n, j);
        }
        if q == 0 {
            return unit_vector(n, i);
        }
        self.table.get(&(p, i, q, j)).cloned().unwrap_or_else(|| vec![Rational::zero(); n])
    }

    pub fn multiply(&self, p: u32, a: &[Rational], q: u32, b: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.dim(p + q)];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                for (k, z) in self.basis_product(p, i, q, j).into_iter().enumerate() {
                    if !z.is_zero() {
                        out[k] += x * y * z;
                    }
                }
            }
        }
        out
    }

    /// Violations of graded commutativity and associativity among basis
    /// elements of positive degree.
    pub fn check_axioms(&self) -> Vec<String> {
        let top = self.top_degree();
        let mut problems = Vec::new();
        for p in 1..=top {
            for q in p..=top.saturating_sub(p) {
                for i in 0..self.dim(p) {
                    for j in 0..self.dim(q) {
                        let ab = self.basis_product(p, i, q, j);
                        let ba = self.basis_product(q, j, p, i);
                        let sign = if p * q % 2 == 1 { -Rational::one() } else { Rational::one() };
                        if ab.iter().zip(&ba).any(|(x, y)| *x != y * &sign) {
                            problems.push(format!("{}·{} violates graded commutativity", self.names[p as usize][i], self.names[q as usize][j]));
                        }
                    }
                }
            }
        }
        for p in 1..=top {
            for q in 1..=top.saturating_sub(p) {
                for r in 1..=top.saturating_sub(p + q) {
                    for i in 0..self.dim(p) {
                        for j in 0..self.dim(q) {
                            for k in 0..self.dim(r) {
                                let left = self.multiply(p + q, &self.basis_product(p, i, q, j), r, &unit_vector(self.dim(r), k));
                                let right = self.multiply(p, &unit_vector(self.dim(p), i), q + r, &self.basis_product(q, j, r, k));
                                if left != right {
                                    problems.push(format!(
                                        "({}·{})·{} differs from {}·({}·{})",
                                        self.names[p as usize][i],
                                        self.names[q as usize][j],
                                        self.names[r as usize][k],
                                        self.names[p as usize][i],
                                        self.names[q as usize][j],
                                        self.names[r as usize][k]
                                    ));
                                }
                            }
                        }
                    }
                }
            }
        }
        problems
    }

    /// Cohomology ring as a finite algebra; basis names are the representative cocycles.
    pub fn from_cohomology(h: &CohomologyRing) -> Self {
        let alg = h.algebra();
        let names: Vec<Vec<String>> = (0..=h.max_degree())
            .map(|n| h.representatives(n).iter().map(|r| format!("[{}]", alg.format(r))).collect())
            .collect();
        let mut table = BTreeMap::new();
        for (&(p, i, q, j), v) in h.product_table() {
            if p >= 1 && q >= 1 {
                table.insert((p, i, q, j), v.clone());
            }
        }
        GradedAlgebra::new(names, table).expect("cohomology product table is well formed")
    }

    /// `Q[u]/(u^height)` with `|u| = degree`.
    pub fn truncated_polynomial(name: &str, degree: u32, height: u32) -> Self {
        assert!(degree >= 1 && height >= 1);
        assert!(degree % 2 == 0 || height <= 2, "odd-degree generators square to zero");
        let top = degree * (height - 1);
        let mut names = vec![Vec::new(); top as usize + 1];
        for k in 0..height {
            names[(k * degree) as usize].push(match k {
                0 => "1".to_string(),
                1 => name.to_string(),
                _ => format!("{name}^{k}"),
            });
        }
        let mut table = BTreeMap::new();
        for a in 1..height {
            for b in 1..height {
                if a + b < height {
                    table.insert((a * degree, 0, b * degree, 0), vec![Rational::one()]);
                }
            }
        }
        GradedAlgebra::new(names, table).expect("well formed")
    }

    /// Exterior algebra on degree-one generators.
    pub fn exterior(names_in: &[&str]) -> Self {
        let n = names_in.len();
        let mut subsets: Vec<Vec<Vec<usize>>> = vec![Vec::new(); n + 1];
        for mask in 0u32..(1 << n) {
            let s: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            subsets[s.len()].push(s);
        }
        for level in &mut subsets {
            level.sort();
        }
        let names: Vec<Vec<String>> = subsets
            .iter()
            .map(|lvl| {
                lvl.iter()
                    .map(|s| if s.is_empty() { "1".to_string() } else { s.iter().map(|i| names_in[*i]).collect::<Vec<_>>().join("*") })
                    .collect()
            })
            .collect();
        let mut table = BTreeMap::new();
        for p in 1..=n {
            for q in 1..=n - p {
                for (i, a) in subsets[p].iter().enumerate() {
                    for (j, b) in subsets[q].iter().enumerate() {
                        if a.iter().any(|x| b.contains(x)) {
                            continue;
                        }
                        let inversions = a.iter().map(|x| b.iter().filter(|y| *y < x).count()).sum::<usize>();
                        let mut union: Vec<usize> = a.iter().chain(b).copied().collect();
                        union.sort();
                        let k = subsets[p + q].iter().position(|s| *s == union).unwrap();
                        let mut v = vec![Rational::zero(); subsets[p + q].len()];
                        v[k] = if inversions % 2 == 1 { -Rational::one() } else { Rational::one() };
                        table.insert((p as u32, i, q as u32, j), v);
                    }
                }
            }
        }
        GradedAlgebra::new(names, table).expect("well formed")
    }

    /// Compact listing of nonzero products, for reports.
    pub fn describe_products(&self) -> Vec<String> {
        self.table
            .iter()
            .filter(|((p, i, q, j), _)| (p, i) <= (q, j))
            .map(|(&(p, i, q, j), v)| {
                let terms: Vec<String> = v
                    .iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .map(|(k, x)| format!("{}·{}", format_rational(x), self.names[(p + q) as usize][k]))
                    .collect();
                format!("{}·{} = {}", self.names[p as usize][i], self.names[q as usize][j], terms.join(" + "))
            })
            .collect()
    }
}

fn unit_vector(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = Rational::one();
    v
}
