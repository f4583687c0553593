use num_traits::Zero;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use solvmodel::exactla::{rat, Rational};
use solvmodel::gca::{Differential, Element, FreeCga, GeneratorDecl, Monomial};

fn random_coeff(rng: &mut ChaCha8Rng) -> Rational {
    rat(rng.gen_range(-3..=3), 1)
}

fn random_element(rng: &mut ChaCha8Rng, basis: &[Monomial]) -> Element<Rational> {
    Element::from_terms(basis.iter().map(|m| (m.clone(), random_coeff(rng))).filter(|(_, c)| !c.is_zero()))
}

/// A random minimal DGA on generators of degree 2 and 3 together with
/// contractible pairs `(s, w)`, `d s = a·w + (closed linear terms) + p`,
/// `d w = -d p / a`, with `p` decomposable.
pub fn random_dga_with_pairs(seed: u64) -> (FreeCga, Differential<Rational>, FreeCga, Differential<Rational>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let cutoff = 8;
    let n2 = rng.gen_range(1..=2);
    let n3 = rng.gen_range(0..=2);
    let mut decls = Vec::new();
    for i in 0..n2 {
        decls.push(GeneratorDecl::new(format!("u{i}"), 2));
    }
    for i in 0..n3 {
        decls.push(GeneratorDecl::new(format!("t{i}"), 3));
    }
    let base = FreeCga::new(decls.clone(), cutoff).unwrap();
    let quad = base.monomial_basis(4).unwrap();
    let mut images: Vec<Element<Rational>> = vec![Element::zero(); n2];
    for _ in 0..n3 {
        let mut e = random_element(&mut rng, &quad);
        if e.is_zero() {
            e = base.multiply(&base.generator(0), &base.generator(0)).unwrap();
        }
        images.push(e);
    }
    let base_d = Differential::new(&base, images.clone()).unwrap();

    let pairs = rng.gen_range(1..=3);
    let mut pair_degrees = Vec::new();
    for k in 0..pairs {
        let p = rng.gen_range(1..=4u32);
        pair_degrees.push(p);
        decls.push(GeneratorDecl::new(format!("s{k}"), p));
        decls.push(GeneratorDecl::new(format!("w{k}"), p + 1));
    }
    let alg = FreeCga::new(decls, cutoff).unwrap();
    let mut pair_images = Vec::new();
    for (k, &p) in pair_degrees.iter().enumerate() {
        let s = alg.index_of(&format!("s{k}")).unwrap();
        let w = alg.index_of(&format!("w{k}")).unwrap();
        let a = loop {
            let c = random_coeff(&mut rng);
            if !c.is_zero() {
                break c;
            }
        };
        // decomposables and closed generators of the base in degree p + 1
        let dec: Vec<Monomial> = base.monomial_basis(p + 1).unwrap().into_iter().filter(|m| m.length() >= 2).collect();
        let poly = random_element(&mut rng, &dec);
        let closed: Vec<Monomial> = (0..base.generator_count() as u32)
            .filter(|&g| base.generator_degree(g) == p + 1 && base_d.image(g).is_zero())
            .map(Monomial::generator)
            .collect();
        let lin = random_element(&mut rng, &closed);
        let ds = alg.generator::<Rational>(w).scale(&a) + lin + poly.clone();
        let dw = base_d.apply(&base, &poly).scale(&(-a.recip()));
        pair_images.push((s, ds));
        pair_images.push((w, dw));
    }
    images.resize(alg.generator_count(), Element::zero());
    for (g, e) in pair_images {
        images[g as usize] = e;
    }
    let d = Differential::new(&alg, images).unwrap();
    (alg, d, base, base_d)
}
