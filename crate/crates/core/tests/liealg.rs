use num_traits::Zero;
use proptest::prelude::*;
use solvmodel::exactla::{rat, Matrix, Rational};
use solvmodel::gca::{check_d_squared, cohomology};
use solvmodel::liealg::*;

fn betti(g: &LieAlgebra) -> Vec<usize> {
    let (a, d) = g.ce_complex().unwrap();
    cohomology(&a, &d, g.dimension() as u32).unwrap().betti_numbers()
}

fn convolve(a: &[usize], b: &[usize]) -> Vec<usize> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

#[test]
fn benson_gordon_structure() {
    let g = benson_gordon();
    assert_eq!(g.dimension(), 8);
    assert!(g.validate().is_valid());
    assert!(g.is_unimodular());
    assert!(g.is_solvable());
    assert!(!g.is_nilpotent());
    let spec = SplittingSpec::complement_of(&g, g.index_of("S").unwrap());
    assert!(g.completely_solvable_certificate(Some(&spec)).is_certified());
    assert!(benson_gordon_nilradical().is_nilpotent());
}

#[test]
fn benson_gordon_weights_from_splitting() {
    let g = benson_gordon();
    let spec = SplittingSpec::complement_of(&g, 0);
    let s = g.verify_splitting(&spec).unwrap();
    assert_eq!(s.weights, benson_gordon_weights());
    assert!(s.weight_sum().is_zero());
    assert!(s.trace_consistent);
    assert!(!s.s_acts_trivially);
}

#[test]
fn swapped_complement_is_rejected() {
    // with T as the complement, the remaining span contains S and is not nilpotent
    let g = benson_gordon();
    let spec = SplittingSpec::complement_of(&g, g.index_of("T").unwrap());
    assert!(matches!(g.verify_splitting(&spec), Err(LieError::NotNilpotent { .. })));
    assert!(g.ad_basis(1).is_zero());
}

#[test]
fn splitting_errors_name_vectors() {
    // [S, X] = Y, [S, Y] = X: ideal and abelian, but not diagonal
    let g = LieAlgebra::from_brackets(
        "rot",
        vec!["S".into(), "X".into(), "Y".into()],
        &[(0, 1, vec![(2, rat(1, 1))]), (0, 2, vec![(1, rat(-1, 1))])],
    )
    .unwrap();
    let spec = SplittingSpec::complement_of(&g, 0);
    assert_eq!(g.verify_splitting(&spec), Err(LieError::NotDiagonal { vector: "X".into() }));
    assert!(!g.completely_solvable_certificate(Some(&spec)).is_certified());
    // nilradical candidate that is not an ideal
    let h = LieAlgebra::from_brackets("ax+b", vec!["S".into(), "X".into()], &[(0, 1, vec![(0, rat(1, 1))])]).unwrap();
    let spec = SplittingSpec::complement_of(&h, 0);
    assert_eq!(h.verify_splitting(&spec), Err(LieError::NotAnIdeal { vector: "X".into() }));
}

#[test]
fn trivial_splittings() {
    let a = abelian(2);
    let s = a.verify_splitting(&SplittingSpec::complement_of(&a, 0)).unwrap();
    assert_eq!(s.weights, vec![rat(0, 1)]);
    assert!(s.s_acts_trivially);
    assert!(heisenberg3().completely_solvable_certificate(None).is_certified());
}

#[test]
fn unimodularity_of_small_examples() {
    let axb = semidirect_by_weights(&[rat(1, 1)], &abelian(1), "S").unwrap();
    assert!(!axb.is_unimodular());
    assert!(axb.is_solvable());
    assert_eq!(direct_sum(&heisenberg3(), &heisenberg3()).dimension(), 6);
}

#[test]
fn semidirect_reproduces_benson_gordon() {
    let n = benson_gordon_nilradical();
    assert_eq!(n.basis(), ["T", "X1", "Y1", "Z1", "X2", "Y2", "Z2"]);
    let g = semidirect_by_weights(&benson_gordon_weights(), &n, "S").unwrap();
    let bg = benson_gordon();
    assert_eq!(g.basis(), bg.basis());
    for i in 0..8 {
        for j in 0..8 {
            for k in 0..8 {
                assert_eq!(g.c(i, j, k), bg.c(i, j, k), "c[{i}][{j}][{k}]");
            }
        }
    }
    let bad = [0, 1, -2, 0, -1, 2, 1].map(|w| rat(w, 1));
    assert!(matches!(semidirect_by_weights(&bad, &n, "S"), Err(LieError::NotADerivation { .. })));
}

#[test]
fn ce_differentials() {
    let (a, d) = heisenberg3().ce_complex().unwrap();
    assert_eq!(a.format(d.image(2)), "x*y");
    assert!(d.image(0).is_zero() && d.image(1).is_zero());
    let (a, d) = benson_gordon().ce_complex().unwrap();
    assert!(d.image(0).is_zero() && d.image(1).is_zero());
    assert_eq!(a.format(d.image(4)), "-s*z1 + x1*y1");
    assert!(abelian(3).ce_complex().unwrap().1.is_zero());
}

#[test]
fn hand_checked_jacobi() {
    // [e1,e2]=e1, [e1,e3]=e2, [e2,e3]=e3
    let g = LieAlgebra::from_brackets(
        "t",
        vec!["E1".into(), "E2".into(), "E3".into()],
        &[(0, 1, vec![(0, rat(1, 1))]), (0, 2, vec![(1, rat(1, 1))]), (1, 2, vec![(2, rat(1, 1))])],
    )
    .unwrap();
    // cyclic sum by hand: [e1,[e2,e3]] + [e2,[e3,e1]] + [e3,[e1,e2]] = [e1,e3] - [e2,e2] + [e3,e1] = 0
    assert!(g.validate().jacobi.is_empty());
    // [e1,e2]=e3, [e3,e4]=e1: J(e1,e2,e4) = [e4,[e1,e2]] = [e4,e3] = -e1,
    // J(e2,e3,e4) = [e2,[e3,e4]] = [e2,e1] = -e3, the other two triples vanish
    let f = LieAlgebra::from_brackets(
        "f",
        vec!["E1".into(), "E2".into(), "E3".into(), "E4".into()],
        &[(0, 1, vec![(2, rat(1, 1))]), (2, 3, vec![(0, rat(1, 1))])],
    )
    .unwrap();
    let report = f.validate();
    assert_eq!(report.jacobi.len(), 2);
    assert_eq!(report.jacobi[0].triple, (0, 1, 3));
    assert_eq!(report.jacobi[0].residual, vec![rat(-1, 1), rat(0, 1), rat(0, 1), rat(0, 1)]);
    assert_eq!(report.jacobi[1].triple, (1, 2, 3));
    assert_eq!(report.jacobi[1].residual, vec![rat(0, 1), rat(0, 1), rat(-1, 1), rat(0, 1)]);
    let (a, d) = f.ce_complex_unchecked();
    assert!(!check_d_squared(&a, &d).is_empty());
    assert!(matches!(f.ce_complex(), Err(LieError::Invalid(_))));
}

#[test]
fn antisymmetry_breach_is_reported() {
    let g = LieAlgebra::from_brackets(
        "bad",
        vec!["A".into(), "B".into()],
        &[(0, 1, vec![(0, rat(1, 1))]), (1, 0, vec![(0, rat(1, 1))])],
    )
    .unwrap();
    assert_eq!(g.validate().antisymmetry, vec![(0, 1, 0)]);
    assert!(matches!(g.ce_complex(), Err(LieError::Invalid(_))));
}

#[test]
fn kunneth_for_direct_sums() {
    let h = heisenberg3();
    assert_eq!(betti(&h), vec![1, 2, 2, 1]);
    let hh = direct_sum(&h, &h);
    assert_eq!(betti(&hh), convolve(&[1, 2, 2, 1], &[1, 2, 2, 1]));
    let n = benson_gordon_nilradical();
    let b = betti(&n);
    assert_eq!(b, vec![1, 5, 12, 18, 18, 12, 5, 1]);
    let rev: Vec<usize> = b.iter().rev().copied().collect();
    assert_eq!(b, rev);
}

#[test]
fn change_of_basis_preserves_validity() {
    let g = benson_gordon();
    let mut p = Matrix::<Rational>::identity(8);
    p[(2, 3)] = rat(1, 1);
    p[(0, 1)] = rat(-2, 1);
    let h = g.change_basis(&p).unwrap();
    assert!(h.validate().is_valid());
    assert!(h.is_unimodular());
    assert_eq!(betti(&h), betti(&g));
}

fn perturb(g: &LieAlgebra, entries: &[(usize, usize, usize, i64)]) -> LieAlgebra {
    let mut br = g.nonzero_brackets();
    for &(i, j, k, c) in entries {
        let (i, j) = if i < j { (i, j) } else { (j, i) };
        if i == j || c == 0 {
            continue;
        }
        br.push((i, j, vec![(k, rat(c, 1))]));
    }
    LieAlgebra::from_brackets("perturbed", g.basis().to_vec(), &br).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]

    #[test]
    fn d_squared_matches_jacobi(entries in proptest::collection::vec((0usize..8, 0usize..8, 0usize..8, -2i64..=2), 1..4)) {
        let g = perturb(&benson_gordon(), &entries);
        let report = g.validate();
        prop_assert!(report.antisymmetry.is_empty());
        let (a, d) = g.ce_complex_unchecked();
        prop_assert_eq!(report.jacobi.is_empty(), check_d_squared(&a, &d).is_empty());
    }
}
