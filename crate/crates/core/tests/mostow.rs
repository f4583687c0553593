use num_traits::{One, Zero};
use solvmodel::exactla::{rat, Laurent, Rational};
use solvmodel::gca::GradedAlgebra;
use solvmodel::liealg::*;
use solvmodel::mostow::*;

fn bg_action(twist: Option<Vec<Rational>>) -> FiberAction {
    let g = benson_gordon();
    let s = g.verify_splitting(&SplittingSpec::complement_of(&g, 0)).unwrap();
    build_fiber_action(&benson_gordon_nilradical(), &FiberActionSpec::from_splitting(&s, twist)).unwrap()
}

#[test]
fn untwisted_eta_is_diagonal() {
    let f = bg_action(None);
    assert!(f.psi.is_diagonal());
    let show = |name: &str| f.algebra.format(f.eta.image(f.algebra.index_of(name).unwrap()));
    assert_eq!(show("t"), "t");
    assert_eq!(show("x1"), "ν*x1");
    assert_eq!(show("y1"), "ν^-2*y1");
    assert_eq!(show("z1"), "ν^-1*z1");
    assert_eq!(show("x2"), "ν^-1*x2");
    assert_eq!(show("y2"), "ν^2*y2");
    assert_eq!(show("z2"), "ν*z2");
}

#[test]
fn twist_by_x1_mixes_z1_into_y1_direction() {
    // ψ(Y1) = ν^-2 Y1 + ν^-1 Z1, so the pullback η(z1) = z1∘ψ picks up y1
    let mut r = vec![Rational::zero(); 7];
    r[1] = Rational::one();
    let f = bg_action(Some(r));
    let z1 = f.algebra.index_of("z1").unwrap();
    let y1 = f.algebra.index_of("y1").unwrap();
    let img = f.eta.image(z1);
    assert!(!img.coeff(&solvmodel::gca::Monomial::generator(y1)).is_zero());
    assert!(f.eta.image(y1).len() == 1);
}

#[test]
fn trivial_weights_give_identity() {
    let n = benson_gordon_nilradical();
    let f = build_fiber_action(&n, &FiberActionSpec::untwisted(vec![Rational::zero(); 7])).unwrap();
    for m in &f.induced {
        for i in 0..m.rows() {
            for j in 0..m.cols() {
                assert_eq!(m[(i, j)].is_identically_one(), i == j);
                assert!(i == j || m[(i, j)].is_zero());
            }
        }
    }
    let cert = certify_triangular(&f, &OrderHint::none()).unwrap();
    assert!(cert.degrees.iter().all(|d| d.diagonal.iter().all(|k| *k == 0)));
    let u = max_nilpotent_submodule(&f, &cert).unwrap();
    assert_eq!(u.dims(), f.cohomology.betti_numbers());
    let audit = audit_star_list(&f, &cert, &[], &[]).unwrap();
    let total: usize = f.cohomology.betti_numbers()[1..].iter().sum();
    assert_eq!(audit.computed.len(), total);
}

#[test]
fn rejects_bad_inputs() {
    let n = benson_gordon_nilradical();
    let mut w = benson_gordon_weights();
    w[1] = rat(1, 2);
    assert!(matches!(build_fiber_action(&n, &FiberActionSpec::untwisted(w)), Err(MostowError::NonIntegerWeight { .. })));
    // weights of a non-derivation break the chain-map property
    let bad = [0, 1, -2, 0, -1, 2, 1].map(|k| rat(k, 1)).to_vec();
    assert!(matches!(build_fiber_action(&n, &FiberActionSpec::untwisted(bad)), Err(MostowError::NotAChainMap { .. })));
    // a non-nilpotent twist
    let axb = LieAlgebra::from_brackets("ax+b", vec!["A".into(), "B".into()], &[(0, 1, vec![(1, rat(1, 1))])]).unwrap();
    let spec = FiberActionSpec { weights: vec![rat(0, 1); 2], twist: vec![rat(1, 1), rat(0, 1)] };
    assert_eq!(build_fiber_action(&axb, &spec).unwrap_err(), MostowError::NotNilpotent);
}

fn check_certificate(f: &FiberAction) -> TriangularCertificate {
    let cert = certify_triangular(f, &benson_gordon_order_hint()).unwrap();
    let weights = f.class_weights(1);
    for d in &cert.degrees {
        let w = f.class_weights(d.degree);
        for (pos, &class) in d.order.iter().enumerate() {
            let expected = w[class].clone().expect("weight-homogeneous representative");
            assert_eq!(Rational::from_integer(d.diagonal[pos].into()), expected, "H^{} {}", d.degree, d.labels[pos]);
        }
    }
    let h1 = cert.degree(1);
    assert_eq!(&h1.labels[..4], ["[x1]", "[y1]", "[x2]", "[y2]"]);
    assert_eq!(&h1.diagonal[..4], [1, -2, -1, 2]);
    assert_eq!(weights.len(), 5);
    cert
}

#[test]
fn triangular_certificate_for_sampled_twists() {
    let base = bg_action(None);
    let c0 = check_certificate(&base);
    let u0 = max_nilpotent_submodule(&base, &c0).unwrap();
    assert_eq!(u0.dims(), [1, 1, 4, 4, 4, 4, 1, 1]);
    for r in sample_twists(7, 10, 7) {
        let f = bg_action(Some(r.clone()));
        let c = check_certificate(&f);
        for (a, b) in c.degrees.iter().zip(&c0.degrees) {
            assert_eq!(a.diagonal, b.diagonal, "twist {r:?}");
        }
        assert_eq!(max_nilpotent_submodule(&f, &c).unwrap().dims(), u0.dims());
    }
}

#[test]
fn sampled_twists_are_reproducible() {
    assert_eq!(sample_twists(3, 4, 7), sample_twists(3, 4, 7));
    assert_ne!(sample_twists(3, 4, 7), sample_twists(4, 4, 7));
    for r in sample_twists(11, 5, 7) {
        assert!(r.iter().all(|c| [-2, -1, 1, 2].map(|k| rat(k, 1)).contains(c)));
    }
}

fn laurent_product(f: &FiberAction, p: u32, a: &[Laurent], q: u32, b: &[Laurent]) -> Vec<Laurent> {
    let h = &f.cohomology;
    let mut out = vec![Laurent::zero(); h.betti(p + q)];
    for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
        for (j, y) in b.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
            for (k, z) in h.cup(p, i, q, j).unwrap().into_iter().enumerate() {
                if !z.is_zero() {
                    out[k] = out[k].clone() + x.clone() * y.clone() * Laurent::constant(z);
                }
            }
        }
    }
    out
}

#[test]
fn induced_action_is_multiplicative() {
    let mut r = vec![Rational::zero(); 7];
    r[1] = rat(1, 1);
    r[5] = rat(-2, 1);
    let f = bg_action(Some(r));
    let h = &f.cohomology;
    for p in 1..=3u32 {
        for q in 1..=(7 - p).min(3) {
            for i in 0..h.betti(p) {
                for j in 0..h.betti(q) {
                    let fi = f.induced[p as usize].column(i);
                    let fj = f.induced[q as usize].column(j);
                    let lhs = f.induced[(p + q) as usize].apply(&h.cup(p, i, q, j).unwrap().into_iter().map(Laurent::constant).collect::<Vec<_>>());
                    assert_eq!(lhs, laurent_product(&f, p, &fi, q, &fj));
                }
            }
        }
    }
}

/// Coordinates in U of the class of a cocycle written in CE generators.
fn u_coords(f: &FiberAction, u: &NilpotentSubmodule, cocycle: &str) -> (u32, Vec<Rational>) {
    let e = f.algebra.parse_product::<Rational>(cocycle).unwrap();
    let p = e.homogeneous_degree(&f.algebra).unwrap();
    let c = f.cohomology.class_of(p, &e).unwrap();
    let span = solvmodel::exactla::SubspaceBasis::span(c.len(), &u.basis[p as usize]);
    let coords = span.coordinates(&c).expect("class lies in U");
    // the stored basis is already the RREF span, so coordinates refer to it
    assert_eq!(span.vectors(), &u.basis[p as usize][..]);
    (p, coords)
}

#[test]
fn submodule_degree_two_and_relations() {
    let f = bg_action(None);
    let cert = certify_triangular(&f, &benson_gordon_order_hint()).unwrap();
    let u = max_nilpotent_submodule(&f, &cert).unwrap();
    assert!(u.algebra.check_axioms().is_empty());
    let h2: std::collections::BTreeSet<&str> = u.algebra.names(2).iter().map(String::as_str).collect();
    assert_eq!(h2, ["[x1*z1]", "[x1*x2]", "[y1*y2]", "[x2*z2]"].into_iter().collect());
    assert_eq!(u.unit_diagonal[2].len(), 4);

    let named = [
        ("u1", "x1*z1"),
        ("u2", "x2*z2"),
        ("u3", "x1*x2"),
        ("u4", "y1*y2"),
        ("v1", "y1*z1*y2*z2"),
        ("v2", "x1*y1*z1*y2"),
        ("v3", "y1*x2*y2*z2"),
    ];
    let el: std::collections::BTreeMap<&str, (u32, Vec<Rational>)> =
        named.iter().map(|(k, c)| (*k, u_coords(&f, &u, c))).collect();
    let prod = |a: &str, b: &str| {
        let (p, x) = &el[a];
        let (q, y) = &el[b];
        u.algebra.multiply(*p, x, *q, y)
    };
    let mut zero = vec![];
    for i in ["u1", "u2", "u3", "u4"] {
        zero.push((i, i));
    }
    zero.extend([("u1", "u3"), ("u2", "u3"), ("u3", "u4")]);
    zero.extend([("u1", "v1"), ("u1", "v2"), ("u2", "v1"), ("u3", "v2"), ("u3", "v3"), ("u4", "v1"), ("u4", "v2"), ("u4", "v3")]);
    for s in ["v1", "v2", "v3"] {
        for t in ["v1", "v2", "v3"] {
            zero.push((s, t));
        }
    }
    for (a, b) in zero {
        assert!(prod(a, b).iter().all(Zero::is_zero), "{a}·{b} ≠ 0");
    }
    // oracle for decomposability: u1·u4 = ±v2, u2·u4 = ±v3 in U
    let neg = |v: &[Rational]| v.iter().map(|x| -x).collect::<Vec<_>>();
    let v2 = &el["v2"].1;
    let v3 = &el["v3"].1;
    assert!(prod("u1", "u4") == *v2 || prod("u1", "u4") == neg(v2));
    assert!(prod("u2", "u4") == *v3 || prod("u2", "u4") == neg(v3));
    // u1·u2 = [x1z1][x2z2] is a nonzero weight-0 class
    assert!(prod("u1", "u2").iter().any(|x| !x.is_zero()));
}

#[test]
fn presentation_counts() {
    let f = bg_action(None);
    let cert = certify_triangular(&f, &benson_gordon_order_hint()).unwrap();
    let u = max_nilpotent_submodule(&f, &cert).unwrap();
    let pr = presentation(&u.algebra, 7).unwrap();
    assert_eq!(pr.generator_counts(), [0, 1, 4, 0, 1, 0, 0, 0]);
    assert_eq!(pr.minimal_relation_count(4), 7);
    assert_eq!(pr.minimal_relation_count(3), 0);
    // the free cover is onto U and every listed relation maps to zero
    for p in 1..=7u32 {
        for r in &pr.relations[p as usize] {
            assert!(pr.evaluate(r, p).iter().all(Zero::is_zero));
        }
        let monos = pr.free.monomial_basis(p).unwrap();
        assert_eq!(monos.len() - pr.relation_count(p), u.algebra.dim(p), "degree {p}");
    }
}

#[test]
fn presentation_of_small_algebras() {
    // Q[u]/(u^3), |u| = 2: one generator, one relation u^3 in degree 6
    let a = GradedAlgebra::truncated_polynomial("u", 2, 3);
    let pr = presentation(&a, 6).unwrap();
    assert_eq!(pr.generator_counts(), [0, 0, 1, 0, 0, 0, 0]);
    assert_eq!(pr.relation_count(6), 1);
    assert_eq!(pr.minimal_relation_count(6), 1);
    assert_eq!(pr.describe(&pr.minimal_relations[6][0]), "u^3");
    // exterior algebra: free, no relations
    let e = GradedAlgebra::exterior(&["a", "b", "c"]);
    let pr = presentation(&e, 3).unwrap();
    assert_eq!(pr.generator_counts(), [0, 3, 0, 0]);
    assert!((0..=3).all(|p| pr.relation_count(p) == 0));
}

#[test]
fn star_list_audit_reports_extras() {
    let f = bg_action(None);
    let cert = certify_triangular(&f, &benson_gordon_order_hint()).unwrap();
    let audit = audit_star_list(&f, &cert, &benson_gordon_star_claims(), &["t"]).unwrap();
    assert!(audit.all_claims_found());
    assert!(audit.claims.iter().all(|c| c.is_cocycle && !c.is_zero_class));
    let extra: Vec<&str> = audit.extra.iter().map(|s| s.label.as_str()).collect();
    assert_eq!(extra, ["[x1*z1*x2*z2]", "[x1*y1*z1*x2*y2*z2]"]);
    for s in &audit.computed {
        assert_eq!(cert.exponent_of(s.degree, s.class), Some(0));
    }
    // weight-0 count: 20 classes in total, 10 avoid t
    assert_eq!(audit.computed.len() + 1, 20);
    assert_eq!(audit.computed.iter().filter(|s| s.restricted).count() + 1, 10);
}
