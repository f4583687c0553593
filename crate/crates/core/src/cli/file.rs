use std::collections::BTreeMap;
use std::path::Path;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::CliError;
use crate::exactla::{format_rational, parse_rational, Rational};
use crate::gca::GradedAlgebra;
use crate::liealg::LieAlgebra;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermRecord {
    pub k: usize,
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BracketRecord {
    pub i: usize,
    pub j: usize,
    pub terms: Vec<TermRecord>,
}

/// On-disk form of a Lie algebra: `[e_i, e_j] = Σ c·e_k`, rationals as
/// strings. Omitted brackets are zero and the opposite orientation of a
/// listed bracket is filled in by antisymmetry.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LieAlgebraFile {
    pub name: String,
    pub basis: Vec<String>,
    pub brackets: Vec<BracketRecord>,
    /// Basis vector spanning the complement of the nilradical, if any.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<String>,
}

impl LieAlgebraFile {
    pub fn from_algebra(g: &LieAlgebra, s: Option<&str>) -> Self {
        let brackets = g
            .nonzero_brackets()
            .into_iter()
            .map(|(i, j, terms)| BracketRecord {
                i,
                j,
                terms: terms.into_iter().map(|(k, c)| TermRecord { k, c: format_rational(&c) }).collect(),
            })
            .collect();
        LieAlgebraFile { name: g.name().to_string(), basis: g.basis().to_vec(), brackets, s: s.map(str::to_string) }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse { line: e.line(), column: e.column(), message: e.to_string() })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("plain data serializes")
    }

    /// Validated algebra; antisymmetry and Jacobi failures are reported with
    /// the offending indices.
    pub fn to_algebra(&self) -> Result<LieAlgebra, CliError> {
        let n = self.basis.len();
        let mut brackets = Vec::with_capacity(self.brackets.len());
        for (r, b) in self.brackets.iter().enumerate() {
            for (which, idx) in [("i", b.i), ("j", b.j)] {
                if idx >= n {
                    return Err(CliError::Record {
                        record: format!("brackets[{r}].{which}"),
                        message: format!("index {idx} out of range for dimension {n}"),
                    });
                }
            }
            let mut terms = Vec::with_capacity(b.terms.len());
            for (t, term) in b.terms.iter().enumerate() {
                if term.k >= n {
                    return Err(CliError::Record {
                        record: format!("brackets[{r}].terms[{t}].k"),
                        message: format!("index {} out of range for dimension {n}", term.k),
                    });
                }
                let c = parse_rational(&term.c).ok_or_else(|| CliError::Record {
                    record: format!("brackets[{r}].terms[{t}].c"),
                    message: format!("{:?} is not a rational p/q", term.c),
                })?;
                terms.push((term.k, c));
            }
            brackets.push((b.i, b.j, terms));
        }
        let g = LieAlgebra::from_brackets(self.name.clone(), self.basis.clone(), &brackets)?;
        let report = g.validate();
        if !report.is_valid() {
            return Err(CliError::Validation(report));
        }
        if let Some(s) = &self.s {
            g.resolve(s)?;
        }
        Ok(g)
    }
}

pub fn load(path: &Path) -> Result<(LieAlgebra, LieAlgebraFile), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?;
    let file = LieAlgebraFile::parse(&text)?;
    let g = file.to_algebra()?;
    Ok((g, file))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BasisRecord {
    pub name: String,
    pub degree: u32,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductTerm {
    pub name: String,
    pub c: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProductRecord {
    pub left: String,
    pub right: String,
    pub terms: Vec<ProductTerm>,
}

/// On-disk form of a connected graded-commutative algebra: positive-degree
/// basis and nonzero products. The unit is implicit, and the opposite order
/// of a listed product is filled in with the Koszul sign.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedAlgebraFile {
    pub name: String,
    pub basis: Vec<BasisRecord>,
    #[serde(default)]
    pub products: Vec<ProductRecord>,
}

impl GradedAlgebraFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse { line: e.line(), column: e.column(), message: e.to_string() })
    }

    pub fn to_algebra(&self) -> Result<GradedAlgebra, CliError> {
        let top = self.basis.iter().map(|b| b.degree).max().unwrap_or(0);
        let mut names = vec![Vec::new(); top as usize + 1];
        names[0].push("1".to_string());
        let mut position = BTreeMap::new();
        for (r, b) in self.basis.iter().enumerate() {
            if b.degree == 0 {
                return Err(CliError::Record { record: format!("basis[{r}]"), message: "degree must be positive".into() });
            }
            if position.contains_key(&b.name) {
                return Err(CliError::Record { record: format!("basis[{r}]"), message: format!("duplicate name {}", b.name) });
            }
            position.insert(b.name.clone(), (b.degree, names[b.degree as usize].len()));
            names[b.degree as usize].push(b.name.clone());
        }
        let lookup = |record: String, name: &str| {
            position
                .get(name)
                .copied()
                .ok_or_else(|| CliError::Record { record, message: format!("unknown basis element {name}") })
        };
        let mut table: BTreeMap<(u32, usize, u32, usize), Vec<Rational>> = BTreeMap::new();
        for (r, prod) in self.products.iter().enumerate() {
            let (p, i) = lookup(format!("products[{r}].left"), &prod.left)?;
            let (q, j) = lookup(format!("products[{r}].right"), &prod.right)?;
            let dim = names.get((p + q) as usize).map_or(0, Vec::len);
            let mut v = vec![Rational::zero(); dim];
            for (t, term) in prod.terms.iter().enumerate() {
                let record = format!("products[{r}].terms[{t}]");
                let (deg, k) = lookup(record.clone(), &term.name)?;
                if deg != p + q {
                    return Err(CliError::Record { record, message: format!("{} has degree {deg}, expected {}", term.name, p + q) });
                }
                let c = parse_rational(&term.c)
                    .ok_or_else(|| CliError::Record { record, message: format!("{:?} is not a rational p/q", term.c) })?;
                v[k] += c;
            }
            let sign = if p * q % 2 == 1 { -Rational::one() } else { Rational::one() };
            let flipped: Vec<Rational> = v.iter().map(|x| x * &sign).collect();
            table.entry((q, j, p, i)).or_insert(flipped);
            table.insert((p, i, q, j), v);
        }
        let h = GradedAlgebra::new(names, table)?;
        let problems = h.check_axioms();
        if !problems.is_empty() {
            return Err(CliError::Record { record: "products".into(), message: problems.join("; ") });
        }
        Ok(h)
    }
}

pub fn load_graded(path: &Path) -> Result<GradedAlgebra, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })?;
    GradedAlgebraFile::parse(&text)?.to_algebra()
}
