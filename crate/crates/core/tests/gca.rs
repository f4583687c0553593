use num_traits::Zero;
use proptest::prelude::*;
use solvmodel::exactla::{rat, Rational};
use solvmodel::gca::*;
use solvmodel::liealg::{benson_gordon, heisenberg3};

fn mixed() -> FreeCga {
    FreeCga::new(
        vec![GeneratorDecl::new("a", 1), GeneratorDecl::new("b", 1), GeneratorDecl::new("u", 2), GeneratorDecl::new("t", 3)],
        9,
    )
    .unwrap()
}

fn element(alg: &FreeCga, p: u32, coeffs: &[i64]) -> Element<Rational> {
    let basis = alg.monomial_basis(p).unwrap();
    Element::from_terms(basis.into_iter().zip(coeffs).map(|(m, c)| (m, rat(*c, 1))).filter(|(_, c)| !c.is_zero()))
}

fn sign(p: u32, q: u32) -> Rational {
    if p * q % 2 == 0 {
        rat(1, 1)
    } else {
        rat(-1, 1)
    }
}

#[test]
fn exterior_generators_anticommute() {
    let alg = mixed();
    let a = alg.generator::<Rational>(0);
    let b = alg.generator::<Rational>(1);
    assert!(alg.multiply(&a, &a).unwrap().is_zero());
    assert_eq!(alg.multiply(&a, &b).unwrap(), alg.multiply(&b, &a).unwrap().scale(&rat(-1, 1)));
    let u = alg.generator::<Rational>(2);
    assert!(!alg.multiply(&u, &u).unwrap().is_zero());
    assert_eq!(alg.format(&alg.parse_product::<Rational>("u^2*a").unwrap()), alg.format(&alg.multiply(&alg.multiply(&u, &u).unwrap(), &a).unwrap()));
}

#[test]
fn bases_beyond_the_cutoff_are_refused() {
    let alg = mixed().with_cutoff(3);
    assert_eq!(alg.monomial_basis(3).unwrap().len(), 3);
    assert!(alg.monomial_basis(4).is_err());
    let t = alg.generator::<Rational>(3);
    assert!(alg.multiply(&t, &t).unwrap().is_zero());
}

#[test]
fn heisenberg_cup_products() {
    let (a, d) = heisenberg3().ce_complex().unwrap();
    assert!(check_d_squared(&a, &d).is_empty());
    let h = cohomology(&a, &d, 3).unwrap();
    // [x]·[y] = d z is exact, [x]·[yz] spans H³
    let x = h.class_of(1, &a.parse_product("x").unwrap()).unwrap();
    let y = h.class_of(1, &a.parse_product("y").unwrap()).unwrap();
    assert!(h.multiply_classes(1, &x, 1, &y).unwrap().iter().all(Zero::is_zero));
    let yz = h.class_of(2, &a.parse_product("y*z").unwrap()).unwrap();
    assert!(h.multiply_classes(1, &x, 2, &yz).unwrap().iter().any(|c| !c.is_zero()));
}

#[test]
fn benson_gordon_betti_numbers_satisfy_duality() {
    let (a, d) = benson_gordon().ce_complex().unwrap();
    let b = cohomology(&a, &d, 8).unwrap().betti_numbers();
    let rev: Vec<_> = b.iter().rev().cloned().collect();
    assert_eq!(b, rev);
    assert_eq!(b[0], 1);
    assert_eq!(b[1], 2);
}

#[test]
fn graded_algebra_files_of_truncated_polynomials() {
    let h = GradedAlgebra::truncated_polynomial("u", 2, 3);
    assert_eq!(h.dims(), vec![1, 0, 1, 0, 1]);
    assert!(h.check_axioms().is_empty());
    assert!(h.is_connected());
    let e = GradedAlgebra::exterior(&["a", "b"]);
    assert_eq!(e.dims(), vec![1, 2, 1]);
    assert!(e.check_axioms().is_empty());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn graded_commutativity(p in 1u32..=4, q in 1u32..=4, x in proptest::collection::vec(-2i64..=2, 12), y in proptest::collection::vec(-2i64..=2, 12)) {
        let alg = mixed();
        let a = element(&alg, p, &x);
        let b = element(&alg, q, &y);
        prop_assert_eq!(alg.multiply(&a, &b).unwrap(), alg.multiply(&b, &a).unwrap().scale(&sign(p, q)));
    }

    #[test]
    fn associativity(x in proptest::collection::vec(-2i64..=2, 6), y in proptest::collection::vec(-2i64..=2, 6), z in proptest::collection::vec(-2i64..=2, 6)) {
        let alg = mixed();
        let (a, b, c) = (element(&alg, 1, &x), element(&alg, 2, &y), element(&alg, 3, &z));
        let left = alg.multiply(&alg.multiply(&a, &b).unwrap(), &c).unwrap();
        let right = alg.multiply(&a, &alg.multiply(&b, &c).unwrap()).unwrap();
        prop_assert_eq!(left, right);
    }

    #[test]
    fn ce_differential_is_a_derivation(p in 1u32..=3, q in 1u32..=3, x in proptest::collection::vec(-2i64..=2, 56), y in proptest::collection::vec(-2i64..=2, 56)) {
        let (alg, d) = benson_gordon().ce_complex().unwrap();
        let a = element(&alg, p, &x);
        let b = element(&alg, q, &y);
        let lhs = d.apply(&alg, &alg.multiply(&a, &b).unwrap());
        let rhs = alg.multiply(&d.apply(&alg, &a), &b).unwrap()
            + alg.multiply(&a, &d.apply(&alg, &b)).unwrap().scale(&sign(p, 1));
        prop_assert_eq!(lhs, rhs);
        prop_assert!(d.apply(&alg, &d.apply(&alg, &a)).is_zero());
    }
}
