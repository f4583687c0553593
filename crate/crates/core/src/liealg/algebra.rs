use std::collections::HashSet;

use num_traits::Zero;

use super::LieError;
use crate::exactla::{inverse, Matrix, Rational, SubspaceBasis};
use crate::gca::{Differential, Element, FreeCga, GeneratorDecl, Monomial};

/// Finite-dimensional Lie algebra over `Q` given by structure constants
/// `c[i][j][k]`, the coefficient of `e_k` in `[e_i, e_j]`. Both orientations
/// are stored, so antisymmetry is a checked property.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LieAlgebra {
    name: String,
    basis: Vec<String>,
    constants: Vec<Rational>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiViolation {
    pub triple: (usize, usize, usize),
    pub residual: Vec<Rational>,
}

/// Every violated antisymmetry entry `(i, j, k)` and every Jacobi triple
/// `i < j < k` with a nonzero cyclic sum.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub antisymmetry: Vec<(usize, usize, usize)>,
    pub jacobi: Vec<JacobiViolation>,
}

impl ValidationReport {
    pub fn is_valid(&self) -> bool {
        self.antisymmetry.is_empty() && self.jacobi.is_empty()
    }

    pub fn summary(&self) -> String {
        let mut parts = Vec::new();
        for (i, j, k) in &self.antisymmetry {
            parts.push(format!("antisymmetry fails at ({i},{j},{k})"));
        }
        for v in &self.jacobi {
            let (i, j, k) = v.triple;
            parts.push(format!("Jacobi fails for ({i},{j},{k})"));
        }
        parts.join("; ")
    }
}

impl LieAlgebra {
    /// Raw constructor: `constants[i][j][k]` as given, nothing closed or checked.
    pub fn from_constants(
        name: impl Into<String>,
        basis: Vec<String>,
        constants: Vec<Vec<Vec<Rational>>>,
    ) -> Result<Self, LieError> {
        let n = basis.len();
        check_names(&basis)?;
        let mut flat = Vec::with_capacity(n * n * n);
        if constants.len() != n {
            return Err(LieError::Shape(format!("{} rows of constants for dimension {n}", constants.len())));
        }
        for row in constants {
            if row.len() != n {
                return Err(LieError::Shape("ragged structure constants".into()));
            }
            for v in row {
                if v.len() != n {
                    return Err(LieError::Shape("ragged structure constants".into()));
                }
                flat.extend(v);
            }
        }
        Ok(LieAlgebra { name: name.into(), basis, constants: flat })
    }

    /// Build from a bracket list `[e_i, e_j] = Σ c_k e_k`, filling in the
    /// opposite orientation wherever it is not listed explicitly.
    pub fn from_brackets(
        name: impl Into<String>,
        basis: Vec<String>,
        brackets: &[(usize, usize, Vec<(usize, Rational)>)],
    ) -> Result<Self, LieError> {
        let n = basis.len();
        check_names(&basis)?;
        let mut constants = vec![Rational::zero(); n * n * n];
        let mut explicit = HashSet::new();
        for (i, j, terms) in brackets {
            for &idx in [i, j].into_iter().chain(terms.iter().map(|(k, _)| k)) {
                if idx >= n {
                    return Err(LieError::IndexOutOfRange { index: idx, dimension: n });
                }
            }
            explicit.insert((*i, *j));
            for (k, c) in terms {
                constants[(i * n + j) * n + k] += c;
            }
        }
        for &(i, j) in &explicit {
            if i != j && !explicit.contains(&(j, i)) {
                for k in 0..n {
                    constants[(j * n + i) * n + k] = -constants[(i * n + j) * n + k].clone();
                }
            }
        }
        Ok(LieAlgebra { name: name.into(), basis, constants })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn basis(&self) -> &[String] {
        &self.basis
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.basis.iter().position(|b| b == name)
    }

    /// Accepts a basis name or a decimal index.
    pub fn resolve(&self, key: &str) -> Result<usize, LieError> {
        if let Some(i) = self.index_of(key) {
            return Ok(i);
        }
        match key.parse::<usize>() {
            Ok(i) if i < self.dimension() => Ok(i),
            _ => Err(LieError::UnknownBasisVector(key.to_string())),
        }
    }

    pub fn c(&self, i: usize, j: usize, k: usize) -> &Rational {
        let n = self.dimension();
        &self.constants[(i * n + j) * n + k]
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn renamed(&self, basis: &[&str]) -> Result<Self, LieError> {
        if basis.len() != self.dimension() {
            return Err(LieError::Shape("wrong number of basis names".into()));
        }
        let basis: Vec<String> = basis.iter().map(|s| s.to_string()).collect();
        check_names(&basis)?;
        Ok(LieAlgebra { basis, ..self.clone() })
    }

    /// `[e_i, e_j]` in coordinates.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vec<Rational> {
        let n = self.dimension();
        self.constants[(i * n + j) * n..(i * n + j + 1) * n].to_vec()
    }

    pub fn bracket(&self, u: &[Rational], v: &[Rational]) -> Vec<Rational> {
        let n = self.dimension();
        let mut out = vec![Rational::zero(); n];
        for (i, a) in u.iter().enumerate().filter(|(_, a)| !a.is_zero()) {
            for (j, b) in v.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                let ab = a * b;
                for (k, o) in out.iter_mut().enumerate() {
                    let c = self.c(i, j, k);
                    if !c.is_zero() {
                        *o += &ab * c;
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad u`; column `j` holds `[u, e_j]`.
    pub fn ad(&self, u: &[Rational]) -> Matrix<Rational> {
        let n = self.dimension();
        let cols: Vec<Vec<Rational>> = (0..n).map(|j| self.bracket(u, &unit(n, j))).collect();
        Matrix::from_columns(n, &cols)
    }

    pub fn ad_basis(&self, i: usize) -> Matrix<Rational> {
        self.ad(&unit(self.dimension(), i))
    }

    pub fn validate(&self) -> ValidationReport {
        let n = self.dimension();
        let mut report = ValidationReport::default();
        for i in 0..n {
            for j in i..n {
                for k in 0..n {
                    if *self.c(i, j, k) != -self.c(j, i, k).clone() {
                        report.antisymmetry.push((i, j, k));
                    }
                }
            }
        }
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let (ei, ej, ek) = (unit(n, i), unit(n, j), unit(n, k));
                    let a = self.bracket(&ei, &self.bracket(&ej, &ek));
                    let b = self.bracket(&ej, &self.bracket(&ek, &ei));
                    let c = self.bracket(&ek, &self.bracket(&ei, &ej));
                    let residual: Vec<Rational> = (0..n).map(|t| &a[t] + &b[t] + &c[t]).collect();
                    if residual.iter().any(|x| !x.is_zero()) {
                        report.jacobi.push(JacobiViolation { triple: (i, j, k), residual });
                    }
                }
            }
        }
        report
    }

    fn require_valid(&self) -> Result<(), LieError> {
        let r = self.validate();
        if r.is_valid() {
            Ok(())
        } else {
            Err(LieError::Invalid(r))
        }
    }

    /// `[A, B]` for subspaces given by spanning vectors.
    fn bracket_span(&self, a: &[Vec<Rational>], b: &[Vec<Rational>]) -> SubspaceBasis<Rational> {
        let vecs: Vec<Vec<Rational>> = a.iter().flat_map(|u| b.iter().map(move |v| self.bracket(u, v))).collect();
        SubspaceBasis::span(self.dimension(), &vecs)
    }

    /// Dimensions of `g ⊃ [g,g] ⊃ [g,[g,g]] ⊃ …` until it stabilizes.
    pub fn lower_central_series(&self) -> Vec<usize> {
        let full = SubspaceBasis::full(self.dimension());
        let mut dims = vec![full.dim()];
        let mut cur = full.clone();
        loop {
            let next = self.bracket_span(full.vectors(), cur.vectors());
            if next.dim() == cur.dim() {
                return dims;
            }
            dims.push(next.dim());
            if next.dim() == 0 {
                return dims;
            }
            cur = next;
        }
    }

    pub fn derived_series(&self) -> Vec<usize> {
        let mut cur = SubspaceBasis::full(self.dimension());
        let mut dims = vec![cur.dim()];
        loop {
            let next = self.bracket_span(cur.vectors(), cur.vectors());
            if next.dim() == cur.dim() {
                return dims;
            }
            dims.push(next.dim());
            if next.dim() == 0 {
                return dims;
            }
            cur = next;
        }
    }

    pub fn is_nilpotent(&self) -> bool {
        self.dimension() == 0 || self.lower_central_series().last() == Some(&0)
    }

    pub fn is_solvable(&self) -> bool {
        self.dimension() == 0 || self.derived_series().last() == Some(&0)
    }

    /// `tr ad e_i = 0` for every basis vector.
    pub fn is_unimodular(&self) -> bool {
        (0..self.dimension()).all(|i| self.ad_basis(i).trace().is_zero())
    }

    /// The Chevalley–Eilenberg algebra `Λg*` with `δx_k = Σ_{i<j} c[i][j][k] x_i x_j`;
    /// rejects invalid algebras. The cutoff is `dim + 1`.
    pub fn ce_complex(&self) -> Result<(FreeCga, Differential<Rational>), LieError> {
        self.require_valid()?;
        Ok(self.ce_complex_unchecked())
    }

    /// CE algebra of whatever table is stored, valid or not.
    pub fn ce_complex_unchecked(&self) -> (FreeCga, Differential<Rational>) {
        let n = self.dimension();
        let gens = self.basis.iter().map(|b| GeneratorDecl::new(dual_name(b), 1)).collect();
        let alg = FreeCga::new(gens, n as u32 + 1).expect("basis names are unique");
        let images = (0..n)
            .map(|k| {
                let mut e = Element::zero();
                for i in 0..n {
                    for j in i + 1..n {
                        let c = self.c(i, j, k);
                        if !c.is_zero() {
                            e.add_term(Monomial::from_factors(vec![(i as u32, 1), (j as u32, 1)]), c.clone());
                        }
                    }
                }
                e
            })
            .collect();
        let d = Differential::new(&alg, images).expect("images are quadratic");
        (alg, d)
    }

    /// Restriction to the span of the given basis vectors, which must be closed
    /// under the bracket.
    pub fn subalgebra(&self, indices: &[usize]) -> Result<LieAlgebra, LieError> {
        let n = self.dimension();
        let pos: std::collections::HashMap<usize, usize> = indices.iter().enumerate().map(|(a, &i)| (i, a)).collect();
        let m = indices.len();
        let mut constants = vec![vec![vec![Rational::zero(); m]; m]; m];
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate() {
                for k in 0..n {
                    let c = self.c(i, j, k);
                    if c.is_zero() {
                        continue;
                    }
                    match pos.get(&k) {
                        Some(&kk) => constants[a][b][kk] = c.clone(),
                        None => {
                            return Err(LieError::NotASubalgebra {
                                left: self.basis[i].clone(),
                                right: self.basis[j].clone(),
                            })
                        }
                    }
                }
            }
        }
        let basis = indices.iter().map(|&i| self.basis[i].clone()).collect();
        LieAlgebra::from_constants(format!("{}|sub", self.name), basis, constants)
    }

    /// Structure constants in the basis `f_i = Σ_k p[k][i] e_k` (columns of `p`).
    pub fn change_basis(&self, p: &Matrix<Rational>) -> Result<LieAlgebra, LieError> {
        let n = self.dimension();
        let pinv = inverse(p).ok_or(LieError::Shape("change of basis is singular".into()))?;
        let cols: Vec<Vec<Rational>> = (0..n).map(|i| p.column(i)).collect();
        let mut constants = vec![vec![vec![Rational::zero(); n]; n]; n];
        for i in 0..n {
            for j in 0..n {
                let v = self.bracket(&cols[i], &cols[j]);
                constants[i][j] = pinv.apply(&v);
            }
        }
        LieAlgebra::from_constants(self.name.clone(), self.basis.clone(), constants)
    }

    /// Nonzero brackets `[e_i, e_j]` with `i < j`, for listings and files.
    pub fn nonzero_brackets(&self) -> Vec<(usize, usize, Vec<(usize, Rational)>)> {
        let n = self.dimension();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let terms: Vec<(usize, Rational)> =
                    (0..n).filter(|&k| !self.c(i, j, k).is_zero()).map(|k| (k, self.c(i, j, k).clone())).collect();
                if !terms.is_empty() {
                    out.push((i, j, terms));
                }
            }
        }
        out
    }
}

/// Name of the dual generator: the basis name in lower case.
pub fn dual_name(basis_name: &str) -> String {
    basis_name.to_lowercase()
}

pub(crate) fn unit(n: usize, i: usize) -> Vec<Rational> {
    let mut v = vec![Rational::zero(); n];
    v[i] = num_traits::One::one();
    v
}

fn check_names(basis: &[String]) -> Result<(), LieError> {
    let mut seen = HashSet::new();
    for b in basis {
        if !seen.insert(dual_name(b)) {
            return Err(LieError::DuplicateName(b.clone()));
        }
    }
    Ok(())
}
