use num_traits::One;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use solvmodel::exactla::{rat, Matrix, Rational};
use solvmodel::gca::*;
use solvmodel::liealg::*;
use solvmodel::mostow::*;
use solvmodel::sullivan::*;

mod common;
use common::random_dga_with_pairs;

fn dga(decls: &[(&str, u32)], cutoff: u32, images: &[&str]) -> (FreeCga, Differential<Rational>) {
    let alg = FreeCga::new(decls.iter().map(|(n, p)| GeneratorDecl::new(*n, *p)).collect(), cutoff).unwrap();
    let imgs = images
        .iter()
        .map(|s| if s.is_empty() { Element::zero() } else { alg.parse_product(s).unwrap() })
        .collect();
    let d = Differential::new(&alg, imgs).unwrap();
    (alg, d)
}

fn betti(alg: &FreeCga, d: &Differential<Rational>, top: u32) -> Vec<usize> {
    cohomology(alg, d, top).unwrap().betti_numbers()
}

fn degree_counts(alg: &FreeCga, top: u32) -> Vec<usize> {
    (0..=top).map(|p| alg.generators().iter().filter(|g| g.degree == p).count()).collect()
}

fn bg_submodule() -> (GradedAlgebra, AlgebraPresentation) {
    let g = benson_gordon();
    let s = g.verify_splitting(&SplittingSpec::complement_of(&g, 0)).unwrap();
    let f = build_fiber_action(&benson_gordon_nilradical(), &FiberActionSpec::from_splitting(&s, None)).unwrap();
    let cert = certify_triangular(&f, &benson_gordon_order_hint()).unwrap();
    let u = max_nilpotent_submodule(&f, &cert).unwrap();
    let pres = presentation(&u.algebra, 5).unwrap();
    (u.algebra, pres)
}

fn assert_lower_degree_drops(m: &BigradedModel) {
    let alg = &m.algebra;
    for i in 0..alg.generator_count() as u32 {
        let n = m.stage(i);
        for (mono, _) in m.differential.image(i).terms() {
            assert_eq!(alg.lower_degree(mono) + 1, n, "{}", alg.name(i));
        }
    }
    assert!(check_d_squared(alg, &m.differential).is_empty());
}

#[test]
fn bigraded_model_of_truncated_polynomial() {
    let h = GradedAlgebra::truncated_polynomial("u", 2, 2);
    let m = bigraded_model(&h, 5, 4).unwrap();
    let counts: Vec<_> = m.counts().into_iter().collect();
    assert_eq!(counts, vec![((2, 0), 1), ((3, 1), 1)]);
    let t = m.generators_of(3, 1)[0];
    let u = m.generators_of(2, 0)[0];
    let u2 = m.algebra.multiply(&m.algebra.generator::<Rational>(u), &m.algebra.generator(u)).unwrap();
    assert_eq!(m.differential.image(t), &u2);
    assert!(m.settled.iter().all(|s| *s) && !m.stage_cutoff_hit);
    assert_lower_degree_drops(&m);
    // oracle: H(Λ(u, t), d) is H itself
    let b = betti(&m.algebra, &m.differential, 5);
    assert_eq!(b, (0..=5).map(|p| h.dim(p)).collect::<Vec<_>>());
}

#[test]
fn bigraded_model_of_free_algebra_is_itself() {
    let h = GradedAlgebra::exterior(&["b"]);
    let m = bigraded_model(&h, 5, 4).unwrap();
    assert_eq!(m.algebra.generator_count(), 1);
    assert_eq!(m.count(1, 0), 1);
    assert!(m.differential.is_zero());
    assert_eq!(m.stages_built, 0);
}

#[test]
fn bigraded_model_of_submodule_matches_presentation() {
    let (u, pres) = bg_submodule();
    let m = bigraded_model(&u, 5, 3).unwrap();
    assert_eq!(m.count(1, 0), 1);
    assert_eq!(m.count(2, 0), 4);
    assert_eq!(m.count(4, 0), pres.generators_in(4).count());
    assert_eq!(m.count(4, 0), 1);
    assert_eq!(m.count(3, 1), pres.minimal_relation_count(4));
    assert_eq!(m.count(3, 1), 7);
    assert!(!m.stage_cutoff_hit);
    assert_lower_degree_drops(&m);
    // H_0 = U in every settled degree, and nothing in positive lower degree
    for p in 0..=5 {
        assert_eq!(m.bigraded_betti.get(&(p, 0)).copied().unwrap_or(0), u.dim(p), "degree {p}");
        assert!((1..6).all(|n| !m.bigraded_betti.contains_key(&(p, n))));
    }
}

#[test]
fn bigraded_model_of_heisenberg_cohomology_starts_like_the_ce_complex() {
    let (a, d) = heisenberg3().ce_complex().unwrap();
    let h = GradedAlgebra::from_cohomology(&cohomology(&a, &d, 3).unwrap());
    let m = bigraded_model(&h, 5, 1).unwrap();
    assert_eq!(m.count(1, 0) + m.count(1, 1), 3);
    assert_eq!(m.count(1, 0), 2);
}

#[test]
fn bigraded_model_rejects_disconnected_input() {
    let h = GradedAlgebra::new(vec![vec!["a".into(), "b".into()]], Default::default()).unwrap();
    assert_eq!(bigraded_model(&h, 5, 2).unwrap_err(), SullivanError::NotConnected);
}

#[test]
fn lehmann_removes_contractible_pair() {
    let (a, d) = dga(&[("t", 1), ("u", 2)], 6, &["u", ""]);
    let (m, dm, trace) = lehmann_reduce(&a, &d).unwrap();
    assert_eq!(m.generator_count(), 0);
    assert!(dm.is_zero());
    assert_eq!(trace.pair_count(), 1);
}

#[test]
fn lehmann_keeps_minimal_part() {
    let (a, d) = dga(&[("u", 2), ("t", 3), ("s", 3), ("w", 4)], 8, &["", "u^2", "w", ""]);
    let (m, dm, trace) = lehmann_reduce(&a, &d).unwrap();
    assert_eq!(degree_counts(&m, 8), vec![0, 0, 1, 1, 0, 0, 0, 0, 0]);
    let u = m.generators().iter().position(|g| g.degree == 2).unwrap() as u32;
    let t = m.generators().iter().position(|g| g.degree == 3).unwrap() as u32;
    let u2 = m.multiply(&m.generator::<Rational>(u), &m.generator(u)).unwrap();
    let dt = dm.image(t);
    assert!(!dt.is_zero());
    assert_eq!(dt.len(), 1);
    assert_eq!(dt.coeff(&u2.terms().next().unwrap().0.clone()), Rational::one());
    assert_eq!(trace.rounds.len(), 1);
    assert_eq!(trace.pair_count(), 1);
    assert_eq!(betti(&a, &d, 7), betti(&m, &dm, 7));
}

#[test]
fn lehmann_fixed_point_on_minimal_input() {
    let (a, d) = dga(&[("u", 2), ("t", 3)], 8, &["", "u^2"]);
    let (m, dm, trace) = lehmann_reduce(&a, &d).unwrap();
    assert!(trace.is_empty());
    assert_eq!(m, a);
    assert_eq!(dm, d);
}

#[test]
fn lehmann_rejects_bad_input() {
    let (a, d) = dga(&[("b", 1)], 4, &[""]);
    assert_eq!(lehmann_reduce(&a, &d).unwrap_err(), SullivanError::H1NotZero { dimension: 1 });
    let (a, d) = dga(&[("u", 2), ("t", 3), ("s", 4)], 8, &["", "u^2", "u*t"]);
    assert!(matches!(lehmann_reduce(&a, &d), Err(SullivanError::NonFreeInput(_))));
}

#[test]
fn lehmann_on_random_dgas_with_injected_pairs() {
    for seed in 0..20 {
        let (alg, d, base, base_d) = random_dga_with_pairs(seed);
        assert!(check_d_squared(&alg, &d).is_empty(), "seed {seed}");
        let (m, dm, trace) = lehmann_reduce(&alg, &d).unwrap();
        assert!(dm.is_decomposable(), "seed {seed}");
        assert!(check_d_squared(&m, &dm).is_empty());
        assert_eq!(betti(&alg, &d, 7), betti(&m, &dm, 7), "seed {seed}");
        assert_eq!(betti(&base, &base_d, 7), betti(&m, &dm, 7), "seed {seed}");
        // minimal models are unique, so the reduced algebra has the base's shape
        assert_eq!(degree_counts(&m, 8), degree_counts(&base, 8), "seed {seed}");
        assert!(trace.pair_count() >= 1);
    }
}

#[test]
fn minimal_model_of_heisenberg() {
    let (a, d) = heisenberg3().ce_complex().unwrap();
    let r = minimal_model(&a, &d, 2, 8).unwrap();
    assert_eq!(r.count(1), 3);
    assert_eq!(r.stage_count(1, 0), 2);
    assert_eq!(r.stage_count(1, 1), 1);
    assert_eq!(r.count(2), 0);
    assert!(r.is_minimal() && r.quasi_isomorphism_verified());
    let z = r.generators.iter().find(|g| g.stage == 1).unwrap();
    assert_eq!(z.differential.len(), 1);
    assert_eq!(r.model_betti, r.target_betti);
}

#[test]
fn minimal_model_of_abelian() {
    for k in 1..=3 {
        let (a, d) = abelian(k).ce_complex().unwrap();
        let a = a.with_cutoff(6);
        let r = minimal_model(&a, &d, 4, 8).unwrap();
        assert_eq!(r.counts(), vec![0, k, 0, 0, 0]);
        assert_eq!(r.closed_count(1), k);
        assert!(r.quasi_isomorphism_verified());
    }
}

#[test]
fn minimal_model_of_minimal_dga() {
    let (a, d) = dga(&[("u", 2), ("t", 3)], 8, &["", "u^2"]);
    let r = minimal_model(&a, &d, 6, 8).unwrap();
    assert_eq!(r.counts(), vec![0, 0, 1, 1, 0, 0, 0]);
    assert!(r.quasi_isomorphism_verified());
}

#[test]
fn minimal_model_of_benson_gordon() {
    let (a, d) = benson_gordon().ce_complex().unwrap();
    let r = minimal_model(&a, &d, 5, 8).unwrap();
    assert_eq!(r.count(1), 2);
    assert_eq!(r.closed_count(1), 2);
    assert!(r.quasi_isomorphism_verified());
    assert!(r.is_minimal());
    assert!((0..=5).all(|p| r.is_settled(p)));
    // independent oracle: Betti numbers of the CE complex itself
    let direct = betti(&a, &d, 5);
    assert_eq!(r.target_betti, direct);
    assert_eq!(r.model_betti, direct);
    assert_eq!(r.closed_count(4), 1);
}

#[test]
fn minimal_model_counts_survive_basis_changes() {
    let g = benson_gordon();
    let (a, d) = g.ce_complex().unwrap();
    let reference = minimal_model(&a, &d, 4, 8).unwrap().counts();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let n = g.dimension();
    for _ in 0..5 {
        // unipotent upper-triangular times a random permutation is invertible
        let mut p = Matrix::<Rational>::identity(n);
        for i in 0..n {
            for j in i + 1..n {
                p[(i, j)] = rat(rng.gen_range(-1..=1), 1);
            }
        }
        let mut perm: Vec<usize> = (0..n).collect();
        for i in (1..n).rev() {
            perm.swap(i, rng.gen_range(0..=i));
        }
        let q = Matrix::from_rows(perm.iter().map(|&r| (0..n).map(|c| p[(r, c)].clone()).collect()).collect());
        let h = g.change_basis(&q).unwrap();
        let (a, d) = h.ce_complex().unwrap();
        assert_eq!(minimal_model(&a, &d, 4, 8).unwrap().counts(), reference);
    }
}

#[test]
fn minimal_model_needs_room() {
    let (a, d) = heisenberg3().ce_complex().unwrap();
    assert_eq!(
        minimal_model(&a, &d, 3, 8).unwrap_err(),
        SullivanError::InsufficientCutoff { needed: 5, available: a.cutoff() }
    );
}

#[test]
fn fiber_analysis_of_submodule() {
    let (u, pres) = bg_submodule();
    let m = bigraded_model(&u, 5, 3).unwrap();
    let r = fiber_model_analysis(&pres, &m).unwrap();
    assert!(r.low_degree_high_stage.is_empty());
    assert_eq!(r.stable_count(4), Some(1));
    assert!(r.degree(4).unwrap().authoritative);
    assert!(r.presentation_agrees());
    assert!(!r.degree(5).unwrap().stable);
}

#[test]
fn fiber_analysis_of_small_algebras() {
    let h = GradedAlgebra::truncated_polynomial("u", 2, 2);
    let pres = presentation(&h, 5).unwrap();
    let r = fiber_model_analysis(&pres, &bigraded_model(&h, 5, 3).unwrap()).unwrap();
    assert_eq!(r.stable_count(4), Some(0));
    let short = bigraded_model(&h, 4, 3).unwrap();
    assert_eq!(
        fiber_model_analysis(&pres, &short).unwrap_err(),
        SullivanError::InsufficientCutoff { needed: 5, available: 4 }
    );
}

#[test]
fn comparison_verdicts() {
    // circle: Λ(b) on both sides
    let h = GradedAlgebra::exterior(&["b"]);
    let fiber = fiber_model_analysis(&presentation(&h, 5).unwrap(), &bigraded_model(&h, 5, 3).unwrap()).unwrap();
    let (a, d) = abelian(1).ce_complex().unwrap();
    let ce = minimal_model(&a.with_cutoff(7), &d, 5, 8).unwrap();
    let v = compare_models(&fiber, &ce, &[1, 2, 3, 4, 5]).unwrap();
    assert_eq!(v.verdict, Verdict::Inconclusive);
    assert!(v.mismatches.is_empty());

    // Q[u]/(u²) against a torus: degree 2 differs
    let h = GradedAlgebra::truncated_polynomial("u", 2, 2);
    let fiber = fiber_model_analysis(&presentation(&h, 5).unwrap(), &bigraded_model(&h, 5, 3).unwrap()).unwrap();
    let (a, d) = abelian(2).ce_complex().unwrap();
    let ce = minimal_model(&a.with_cutoff(7), &d, 5, 8).unwrap();
    let v = compare_models(&fiber, &ce, &[2]).unwrap();
    assert_eq!(v.verdict, Verdict::NoLatticeCertificate { degree: 2, fiber: 1, ce: 0 });
    assert!(v.is_certificate());

    // an unfinished CE model is not comparable
    let (a, d) = heisenberg3().ce_complex().unwrap();
    let ce = minimal_model(&a.with_cutoff(7), &d, 5, 0).unwrap();
    assert!(!ce.is_settled(1));
    assert_eq!(compare_models(&fiber, &ce, &[1]).unwrap_err(), SullivanError::UnsettledDegree { degree: 1 });
}

#[test]
fn benson_gordon_comparison_in_degree_four() {
    let (u, pres) = bg_submodule();
    let fiber = fiber_model_analysis(&pres, &bigraded_model(&u, 5, 3).unwrap()).unwrap();
    let (a, d) = benson_gordon().ce_complex().unwrap();
    let ce = minimal_model(&a, &d, 5, 8).unwrap();
    let v = compare_models(&fiber, &ce, &[4]).unwrap();
    assert_eq!(v.fiber_counts[&4], 1);
    assert_eq!(v.ce_counts[&4], 1);
    assert_eq!(v.verdict, Verdict::Inconclusive);
}
