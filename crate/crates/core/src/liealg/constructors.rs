use num_traits::Zero;

use super::algebra::LieAlgebra;
use super::LieError;
use crate::exactla::{rat, Rational};

fn names(list: &[&str]) -> Vec<String> {
    list.iter().map(|s| s.to_string()).collect()
}

/// `n₃`: basis `X, Y, Z` with `[X, Y] = Z`.
pub fn heisenberg3() -> LieAlgebra {
    LieAlgebra::from_brackets("heisenberg3", names(&["X", "Y", "Z"]), &[(0, 1, vec![(2, rat(1, 1))])])
        .expect("valid table")
}

/// Abelian algebra with basis `E1, …, Ek`.
pub fn abelian(k: usize) -> LieAlgebra {
    let basis = (1..=k).map(|i| format!("E{i}")).collect();
    LieAlgebra::from_brackets(format!("abelian_{k}"), basis, &[]).expect("valid table")
}

/// `g ⊕ h`; clashing basis names of `h` get a trailing prime.
pub fn direct_sum(g: &LieAlgebra, h: &LieAlgebra) -> LieAlgebra {
    let mut basis: Vec<String> = g.basis().to_vec();
    for b in h.basis() {
        let mut b = b.clone();
        while basis.iter().any(|x| x.to_lowercase() == b.to_lowercase()) {
            b.push('\'');
        }
        basis.push(b);
    }
    let off = g.dimension();
    let mut brackets = g.nonzero_brackets();
    for (i, j, terms) in h.nonzero_brackets() {
        brackets.push((i + off, j + off, terms.into_iter().map(|(k, c)| (k + off, c)).collect()));
    }
    LieAlgebra::from_brackets(format!("{}+{}", g.name(), h.name()), basis, &brackets).expect("valid table")
}

/// `⟨S⟩ ⋉ n` with `[S, e_i] = w_i e_i`; `S` becomes basis vector 0.
pub fn semidirect_by_weights(weights: &[Rational], n: &LieAlgebra, s_name: &str) -> Result<LieAlgebra, LieError> {
    let dim = n.dimension();
    if weights.len() != dim {
        return Err(LieError::Shape(format!("{} weights for a {dim}-dimensional algebra", weights.len())));
    }
    for i in 0..dim {
        for j in 0..dim {
            for k in 0..dim {
                if !n.c(i, j, k).is_zero() && weights[k] != &weights[i] + &weights[j] {
                    return Err(LieError::NotADerivation {
                        bracket: format!("[{}, {}]", n.basis()[i], n.basis()[j]),
                        component: n.basis()[k].clone(),
                    });
                }
            }
        }
    }
    let mut basis = vec![s_name.to_string()];
    basis.extend(n.basis().iter().cloned());
    let mut brackets: Vec<(usize, usize, Vec<(usize, Rational)>)> = n
        .nonzero_brackets()
        .into_iter()
        .map(|(i, j, t)| (i + 1, j + 1, t.into_iter().map(|(k, c)| (k + 1, c)).collect()))
        .collect();
    for (i, w) in weights.iter().enumerate() {
        if !w.is_zero() {
            brackets.push((0, i + 1, vec![(i + 1, w.clone())]));
        }
    }
    LieAlgebra::from_brackets(format!("{s_name}|x{}", n.name()), basis, &brackets)
}

/// `⟨T⟩ ⊕ n₃ ⊕ n₃` with basis `T, X1, Y1, Z1, X2, Y2, Z2`.
pub fn benson_gordon_nilradical() -> LieAlgebra {
    let t = abelian(1).renamed(&["T"]).expect("one name");
    let h1 = heisenberg3().renamed(&["X1", "Y1", "Z1"]).expect("three names");
    let h2 = heisenberg3().renamed(&["X2", "Y2", "Z2"]).expect("three names");
    direct_sum(&direct_sum(&t, &h1), &h2).with_name("n")
}

/// Weights of `ad S` on `T, X1, Y1, Z1, X2, Y2, Z2`.
pub fn benson_gordon_weights() -> Vec<Rational> {
    [0, 1, -2, -1, -1, 2, 1].iter().map(|&w| rat(w, 1)).collect()
}

/// The eight-dimensional completely solvable unimodular algebra with basis
/// `S, T, X1, Y1, Z1, X2, Y2, Z2`.
pub fn benson_gordon() -> LieAlgebra {
    let b = names(&["S", "T", "X1", "Y1", "Z1", "X2", "Y2", "Z2"]);
    let one = |k: usize, c: i64| vec![(k, rat(c, 1))];
    let brackets = vec![
        (2, 3, one(4, 1)),
        (5, 6, one(7, 1)),
        (0, 2, one(2, 1)),
        (0, 5, one(5, -1)),
        (0, 3, one(3, -2)),
        (0, 6, one(6, 2)),
        (0, 4, one(4, -1)),
        (0, 7, one(7, 1)),
    ];
    LieAlgebra::from_brackets("benson_gordon", b, &brackets).expect("valid table")
}
