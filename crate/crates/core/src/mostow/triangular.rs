use std::collections::BTreeSet;

use num_traits::Zero;

use super::action::FiberAction;
use super::MostowError;
use crate::exactla::{Laurent, Matrix, Rational};

/// Preferred position of cohomology classes, given per degree as cocycles in
/// the CE generators (`"x1*z1"`). Classes not named keep their relative
/// lexicographic order after the named ones.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OrderHint {
    pub degrees: Vec<Vec<String>>,
}

impl OrderHint {
    pub fn none() -> Self {
        OrderHint::default()
    }

    pub fn new(degrees: Vec<Vec<&str>>) -> Self {
        OrderHint { degrees: degrees.into_iter().map(|d| d.into_iter().map(String::from).collect()).collect() }
    }

    fn get(&self, p: u32) -> &[String] {
        self.degrees.get(p as usize).map_or(&[], Vec::as_slice)
    }
}

/// Listing order of the degree one and two classes of `⟨T⟩ ⊕ n₃ ⊕ n₃` used for
/// the triangularity certificate.
pub fn benson_gordon_order_hint() -> OrderHint {
    OrderHint::new(vec![
        vec![],
        vec!["x1", "y1", "x2", "y2"],
        vec!["x1*z1", "y1*z1", "x1*x2", "x1*y2", "y1*x2", "y1*y2", "x2*z2", "y2*z2"],
    ])
}

#[derive(Clone, Debug, PartialEq)]
pub struct DegreeCertificate {
    pub degree: u32,
    /// Class indices (into the cohomology representatives) in certified order.
    pub order: Vec<usize>,
    pub labels: Vec<String>,
    /// Row `i` holds the coordinates of `η*(w_i)` in the ordered basis; all
    /// entries left of the diagonal vanish.
    pub matrix: Matrix<Laurent>,
    /// Exponent `k` of each diagonal entry `ν^k`.
    pub diagonal: Vec<i64>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TriangularCertificate {
    pub degrees: Vec<DegreeCertificate>,
}

impl TriangularCertificate {
    pub fn degree(&self, p: u32) -> &DegreeCertificate {
        &self.degrees[p as usize]
    }

    /// Class indices of degree `p` whose diagonal entry is the constant 1.
    pub fn unit_diagonal(&self, p: u32) -> BTreeSet<usize> {
        let d = self.degree(p);
        d.order.iter().zip(&d.diagonal).filter(|(_, k)| **k == 0).map(|(i, _)| *i).collect()
    }

    /// Diagonal exponent of a class given by its cohomology index.
    pub fn exponent_of(&self, p: u32, class: usize) -> Option<i64> {
        let d = self.degree(p);
        d.order.iter().position(|&i| i == class).map(|pos| d.diagonal[pos])
    }

    pub fn label_of(&self, p: u32, class: usize) -> Option<&str> {
        let d = self.degree(p);
        d.order.iter().position(|&i| i == class).map(|pos| d.labels[pos].as_str())
    }
}

/// Order the classes of each degree so that every `η*(w_j)` involves only
/// `w_j` and later classes, then verify the resulting matrix and read off the
/// diagonal.
pub fn certify_triangular(f: &FiberAction, hint: &OrderHint) -> Result<TriangularCertificate, MostowError> {
    let h = &f.cohomology;
    let mut degrees = Vec::with_capacity(f.induced.len());
    for (p, m) in f.induced.iter().enumerate() {
        let p = p as u32;
        let n = h.betti(p);
        let mut labels: Vec<String> = h.representatives(p).iter().map(|r| format!("[{}]", f.algebra.format(r))).collect();
        let mut priority = vec![usize::MAX; n];
        for (pos, text) in hint.get(p).iter().enumerate() {
            let e = f.algebra.parse_product::<Rational>(text)?;
            let Ok(coords) = h.class_of(p, &e) else { continue };
            let support: Vec<usize> = (0..n).filter(|&i| !coords[i].is_zero()).collect();
            if let [i] = support[..] {
                if priority[i] == usize::MAX {
                    priority[i] = pos;
                    labels[i] = format!("[{text}]");
                }
            }
        }
        let key = |i: usize| (priority[i], labels[i].clone(), i);
        let order = topological_order(m, n, &key).unwrap_or_else(|| {
            let mut all: Vec<usize> = (0..n).collect();
            all.sort_by_key(|&i| key(i));
            all
        });
        // column j of `m` is η*(class j); transpose into the ordered row form
        let rows: Vec<Vec<Laurent>> =
            order.iter().map(|&src| order.iter().map(|&tgt| m[(tgt, src)].clone()).collect()).collect();
        let matrix = Matrix::from_rows(rows);
        for i in 0..n {
            for j in 0..i {
                if !matrix[(i, j)].is_zero() {
                    return Err(MostowError::NotTriangular { degree: p, row: i, col: j });
                }
            }
        }
        let mut diagonal = Vec::with_capacity(n);
        for (i, &class) in order.iter().enumerate() {
            let k = matrix[(i, i)]
                .as_unit_monomial()
                .ok_or_else(|| MostowError::DiagonalNotMonomial { degree: p, class: labels[class].clone() })?;
            diagonal.push(k);
        }
        let labels = order.iter().map(|&i| labels[i].clone()).collect();
        degrees.push(DegreeCertificate { degree: p, order, labels, matrix, diagonal });
    }
    Ok(TriangularCertificate { degrees })
}

/// Kahn's algorithm on "class j maps onto class k ≠ j ⇒ j precedes k",
/// smallest key first; `None` on a cycle.
fn topological_order<K: Ord>(m: &Matrix<Laurent>, n: usize, key: &impl Fn(usize) -> K) -> Option<Vec<usize>> {
    let mut indegree = vec![0usize; n];
    for j in 0..n {
        for k in 0..n {
            if k != j && !m[(k, j)].is_zero() {
                indegree[k] += 1;
            }
        }
    }
    let mut ready: BTreeSet<(K, usize)> = (0..n).filter(|&i| indegree[i] == 0).map(|i| (key(i), i)).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(first) = ready.pop_first() {
        let j = first.1;
        order.push(j);
        for k in 0..n {
            if k != j && !m[(k, j)].is_zero() {
                indegree[k] -= 1;
                if indegree[k] == 0 {
                    ready.insert((key(k), k));
                }
            }
        }
    }
    (order.len() == n).then_some(order)
}
