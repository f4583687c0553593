use num_traits::{One, Zero};
use proptest::prelude::*;
use solvmodel::exactla::sparse::{kernel_and_image, sparse_from_dense};
use solvmodel::exactla::*;

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<Rational>> {
    proptest::collection::vec((-4i64..=4, 1i64..=3), rows * cols)
        .prop_map(move |e| Matrix::new(rows, cols, e.into_iter().map(|(n, d)| rat(n, d)).collect()))
}

fn laurent() -> impl Strategy<Value = Laurent> {
    proptest::collection::vec((-3i64..=3, -3i64..=3), 0..4).prop_map(|terms| {
        terms.into_iter().fold(Laurent::zero(), |acc, (e, c)| acc + Laurent::monomial(rat(c, 1), e))
    })
}

#[test]
fn rationals_print_in_lowest_terms() {
    assert_eq!(format_rational(&rat(6, -4)), "-3/2");
    assert_eq!(format_rational(&rat(4, 2)), "2");
    assert_eq!(parse_rational(" -3/2 "), Some(rat(-3, 2)));
    assert_eq!(parse_rational("1/0"), None);
    assert_eq!(parse_rational("0.5"), None);
}

#[test]
fn exponential_of_a_nilpotent_matrix() {
    let n = Matrix::from_rows(vec![
        vec![rat(0, 1), rat(1, 1), rat(0, 1)],
        vec![rat(0, 1), rat(0, 1), rat(2, 1)],
        vec![rat(0, 1), rat(0, 1), rat(0, 1)],
    ]);
    let e = exp_nilpotent(&n).unwrap();
    assert_eq!(e.row(0), &[rat(1, 1), rat(1, 1), rat(1, 1)]);
    assert_eq!(e.mul(&exp_nilpotent(&n.scale(&rat(-1, 1))).unwrap()), Matrix::identity(3));
    assert_eq!(exp_nilpotent(&Matrix::identity(2)), Err(LaError::NotNilpotent));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rank_nullity(m in matrix(4, 5)) {
        let k = kernel_basis(&m);
        prop_assert_eq!(rank(&m) + k.dim(), 5);
        for v in k.vectors() {
            prop_assert!(m.apply(v).iter().all(Zero::is_zero));
        }
        prop_assert_eq!(rank(&m.transpose()), rank(&m));
    }

    #[test]
    fn sparse_elimination_agrees_with_dense(m in matrix(5, 4)) {
        let cols: Vec<_> = (0..m.cols()).map(|j| sparse_from_dense(&m.column(j))).collect();
        let (ker, im) = kernel_and_image(&cols);
        prop_assert_eq!(im.dim(), rank(&m));
        prop_assert_eq!(ker.dim(), kernel_basis(&m).dim());
    }

    #[test]
    fn inverse_is_two_sided(m in matrix(3, 3)) {
        match inverse(&m) {
            Some(inv) => {
                prop_assert_eq!(m.mul(&inv), Matrix::identity(3));
                prop_assert_eq!(inv.mul(&m), Matrix::identity(3));
            }
            None => prop_assert!(rank(&m) < 3),
        }
    }

    #[test]
    fn complements_split_the_space(m in matrix(4, 3)) {
        let cols: Vec<Vec<Rational>> = (0..m.cols()).map(|j| m.column(j)).collect();
        let sub = SubspaceBasis::span(4, &cols);
        let c = quotient_complement(&SubspaceBasis::full(4), &sub).unwrap();
        prop_assert_eq!(c.dim() + sub.dim(), 4);
        prop_assert_eq!(c.sum(&sub).dim(), 4);
    }

    #[test]
    fn rational_text_round_trip(n in -1000i64..1000, d in 1i64..1000) {
        let q = rat(n, d);
        prop_assert_eq!(parse_rational(&format_rational(&q)), Some(q));
    }

    #[test]
    fn laurent_evaluation_is_a_ring_map(a in laurent(), b in laurent(), nu in 1i64..5) {
        let nu = rat(nu, 1);
        prop_assert_eq!((a.clone() * b.clone()).evaluate(&nu), a.evaluate(&nu) * b.evaluate(&nu));
        prop_assert_eq!((a.clone() + b.clone()).evaluate(&nu), a.evaluate(&nu) + b.evaluate(&nu));
        prop_assert!((a.clone() - a.clone()).is_zero());
        prop_assert_eq!(a.clone() * Laurent::one(), a);
    }

    #[test]
    fn unit_monomials_are_detected(e in -5i64..=5) {
        prop_assert_eq!(Laurent::nu_pow(e).as_unit_monomial(), Some(e));
        prop_assert_eq!((Laurent::nu_pow(e) * Laurent::nu_pow(-e)).is_identically_one(), true);
        let two = Laurent::nu_pow(e) + Laurent::nu_pow(e + 1);
        prop_assert_eq!(two.as_unit_monomial(), None);
    }

    #[test]
    fn eigenspaces_of_triangular_matrices(d in proptest::collection::vec(-2i64..=2, 4), u in proptest::collection::vec(-2i64..=2, 6)) {
        let mut rows = vec![vec![rat(0, 1); 4]; 4];
        let mut k = 0;
        for i in 0..4 {
            rows[i][i] = rat(d[i], 1);
            for j in i + 1..4 {
                rows[i][j] = rat(u[k], 1);
                k += 1;
            }
        }
        let m = Matrix::from_rows(rows);
        for lambda in -2i64..=2 {
            let mult = d.iter().filter(|&&x| x == lambda).count();
            prop_assert_eq!(generalized_eigenspace(&m, &rat(lambda, 1), None).dim(), mult);
        }
    }
}
