use std::collections::{BTreeMap, HashMap, HashSet};
use std::fmt::Write as _;
use std::ops::{Add, Neg, Sub};


use super::monomial::{multiply_monomials, Monomial};
use super::GcaError;
use crate::exactla::sparse::SparseVec;
use crate::exactla::{Rational, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorDecl {
    pub name: String,
    pub degree: u32,
    /// Stage in a bigraded model; `None` outside that context.
    pub lower_degree: Option<u32>,
}

impl GeneratorDecl {
    pub fn new(name: impl Into<String>, degree: u32) -> Self {
        GeneratorDecl { name: name.into(), degree, lower_degree: None }
    }

    pub fn bigraded(name: impl Into<String>, degree: u32, lower: u32) -> Self {
        GeneratorDecl { name: name.into(), degree, lower_degree: Some(lower) }
    }
}

/// Free graded-commutative algebra `ΛV`: exterior on odd generators,
/// polynomial on even ones. Every basis query is bounded by `cutoff`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeCga {
    generators: Vec<GeneratorDecl>,
    cutoff: u32,
}

impl FreeCga {
    pub fn new(generators: Vec<GeneratorDecl>, cutoff: u32) -> Result<Self, GcaError> {
        let mut seen = HashSet::new();
        for g in &generators {
            if g.degree == 0 {
                return Err(GcaError::InvalidGenerator(format!("generator {} has degree 0", g.name)));
            }
            if !seen.insert(g.name.as_str()) {
                return Err(GcaError::InvalidGenerator(format!("duplicate generator name {}", g.name)));
            }
        }
        Ok(FreeCga { generators, cutoff })
    }

    /// Exterior algebra on degree-one generators with the given names.
    pub fn exterior(names: &[&str], cutoff: u32) -> Result<Self, GcaError> {
        Self::new(names.iter().map(|n| GeneratorDecl::new(*n, 1)).collect(), cutoff)
    }

    pub fn generators(&self) -> &[GeneratorDecl] {
        &self.generators
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn with_cutoff(&self, cutoff: u32) -> Self {
        FreeCga { generators: self.generators.clone(), cutoff }
    }

    pub fn index_of(&self, name: &str) -> Option<u32> {
        self.generators.iter().position(|g| g.name == name).map(|i| i as u32)
    }

    pub fn name(&self, i: u32) -> &str {
        &self.generators[i as usize].name
    }

    pub fn generator_degree(&self, i: u32) -> u32 {
        self.generators[i as usize].degree
    }

    pub fn is_odd(&self, i: u32) -> bool {
        self.generators[i as usize].degree % 2 == 1
    }

    pub fn degree(&self, m: &Monomial) -> u32 {
        m.factors().iter().map(|(i, e)| self.generator_degree(*i) * e).sum()
    }

    pub fn lower_degree(&self, m: &Monomial) -> u32 {
        m.factors()
            .iter()
            .map(|(i, e)| self.generators[*i as usize].lower_degree.unwrap_or(0) * e)
            .sum()
    }

    /// Every monomial of total degree `n`, in ascending monomial order.
    pub fn monomial_basis(&self, n: u32) -> Result<Vec<Monomial>, GcaError> {
        if n > self.cutoff {
            return Err(GcaError::CutoffExceeded { degree: n, cutoff: self.cutoff });
        }
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.enumerate(0, n, &mut current, &mut out);
        out.sort();
        Ok(out)
    }

    fn enumerate(&self, start: usize, remaining: u32, current: &mut Vec<(u32, u32)>, out: &mut Vec<Monomial>) {
        if remaining == 0 {
            out.push(Monomial::from_sorted_unchecked(current.clone()));
            return;
        }
        for i in start..self.generators.len() {
            let deg = self.generators[i].degree;
            if deg > remaining {
                continue;
            }
            let max_exp = if deg % 2 == 1 { 1 } else { remaining / deg };
            for e in 1..=max_exp {
                current.push((i as u32, e));
                self.enumerate(i + 1, remaining - e * deg, current, out);
                current.pop();
            }
        }
    }

    pub fn basis_index(&self, n: u32) -> Result<BasisIndex, GcaError> {
        Ok(BasisIndex::new(self.monomial_basis(n)?))
    }

    pub fn generator<T: Scalar>(&self, i: u32) -> Element<T> {
        assert!((i as usize) < self.generators.len(), "generator index out of range");
        Element::monomial(Monomial::generator(i), T::one())
    }

    fn check_membership<T>(&self, e: &Element<T>) -> Result<(), GcaError> {
        let n = self.generators.len() as u32;
        if e.terms.keys().any(|m| m.max_index().is_some_and(|i| i >= n)) {
            return Err(GcaError::MixedAlgebras);
        }
        Ok(())
    }

    pub fn multiply_monomials(&self, a: &Monomial, b: &Monomial) -> Option<(bool, Monomial)> {
        multiply_monomials(a, b, |i| self.is_odd(i))
    }

    /// Graded-commutative product with Koszul signs.
    pub fn multiply<T: Scalar>(&self, a: &Element<T>, b: &Element<T>) -> Result<Element<T>, GcaError> {
        self.check_membership(a)?;
        self.check_membership(b)?;
        Ok(self.mul(a, b))
    }

    pub(crate) fn mul<T: Scalar>(&self, a: &Element<T>, b: &Element<T>) -> Element<T> {
        let mut out = Element::zero();
        for (ma, ca) in &a.terms {
            for (mb, cb) in &b.terms {
                if let Some((neg, m)) = self.multiply_monomials(ma, mb) {
                    let c = ca.clone() * cb.clone();
                    out.add_term(m, if neg { -c } else { c });
                }
            }
        }
        out
    }

    /// Ordered product of generators written as `"x1*z1*y2"` (powers as `u^2`).
    pub fn parse_product<T: Scalar>(&self, text: &str) -> Result<Element<T>, GcaError> {
        let mut acc = Element::one();
        for part in text.split('*').map(str::trim) {
            if part == "1" {
                continue;
            }
            let (name, power) = match part.split_once('^') {
                Some((n, e)) => (n, e.parse::<u32>().map_err(|_| GcaError::InvalidGenerator(part.to_string()))?),
                None => (part, 1),
            };
            let i = self.index_of(name).ok_or_else(|| GcaError::InvalidGenerator(name.to_string()))?;
            for _ in 0..power {
                acc = self.mul(&acc, &self.generator(i));
            }
        }
        Ok(acc)
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let parts: Vec<String> = m
            .factors()
            .iter()
            .map(|(i, e)| if *e == 1 { self.name(*i).to_string() } else { format!("{}^{}", self.name(*i), e) })
            .collect();
        parts.join("*")
    }

    pub fn format<T: Scalar>(&self, e: &Element<T>) -> String {
        if e.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (k, (m, c)) in e.terms.iter().enumerate() {
            let text = c.to_string();
            let (neg, body) = match text.strip_prefix('-') {
                Some(rest) if !rest.contains(' ') => (true, rest.to_string()),
                _ => (false, text),
            };
            if k > 0 {
                s.push_str(if neg { " - " } else { " + " });
            } else if neg {
                s.push('-');
            }
            let mono = self.format_monomial(m);
            if body == "1" {
                s.push_str(&mono);
            } else if m.is_one() {
                s.push_str(&body);
            } else if body.contains(' ') {
                let _ = write!(s, "({body})*{mono}");
            } else {
                let _ = write!(s, "{body}*{mono}");
            }
        }
        s
    }

    /// Generators of `other` appended after those of `self`, names suffixed
    /// where they collide.
    pub fn tensor(&self, other: &FreeCga) -> FreeCga {
        let mut gens = self.generators.clone();
        let names: HashSet<String> = gens.iter().map(|g| g.name.clone()).collect();
        for g in &other.generators {
            let mut g = g.clone();
            while names.contains(&g.name) {
                g.name.push('\'');
            }
            gens.push(g);
        }
        FreeCga { generators: gens, cutoff: self.cutoff.max(other.cutoff) }
    }

    /// Append generators; existing indices are unchanged.
    pub fn extend(&self, extra: Vec<GeneratorDecl>) -> Result<FreeCga, GcaError> {
        let mut gens = self.generators.clone();
        gens.extend(extra);
        FreeCga::new(gens, self.cutoff)
    }
}

/// A degree's monomial basis together with a position lookup.
#[derive(Clone, Debug, Default)]
pub struct BasisIndex {
    monomials: Vec<Monomial>,
    positions: HashMap<Monomial, usize>,
}

impl BasisIndex {
    pub fn new(monomials: Vec<Monomial>) -> Self {
        let positions = monomials.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        BasisIndex { monomials, positions }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn monomials(&self) -> &[Monomial] {
        &self.monomials
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.positions.get(m).copied()
    }

    /// Coordinates of a rational element; panics if a term lies outside this degree.
    pub fn to_sparse(&self, e: &Element<Rational>) -> SparseVec {
        let mut v: SparseVec = e
            .terms
            .iter()
            .map(|(m, c)| (self.position(m).expect("term outside the basis degree"), c.clone()))
            .collect();
        v.sort_by_key(|(i, _)| *i);
        v
    }

    pub fn to_element(&self, v: &SparseVec) -> Element<Rational> {
        Element::from_terms(v.iter().map(|(i, c)| (self.monomials[*i].clone(), c.clone())))
    }
}

/// Linear combination of monomials with scalar coefficients.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Element<T> {
    terms: BTreeMap<Monomial, T>,
}

impl<T: Scalar> Element<T> {
    pub fn zero() -> Self {
        Element { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::one(), T::one())
    }

    pub fn monomial(m: Monomial, c: T) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, T)>) -> Self {
        let mut e = Self::zero();
        for (m, c) in terms {
            e.add_term(m, c);
        }
        e
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &T)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> T {
        self.terms.get(m).cloned().unwrap_or_else(T::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: T) {
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&m) {
            Some(old) => {
                let s = old + c;
                if !s.is_zero() {
                    self.terms.insert(m, s);
                }
            }
            None => {
                self.terms.insert(m, c);
            }
        }
    }

    pub fn scale(&self, c: &T) -> Self {
        Self::from_terms(self.terms.iter().map(|(m, x)| (m.clone(), x.clone() * c.clone())))
    }

    pub fn map<U: Scalar>(&self, f: impl Fn(&T) -> U) -> Element<U> {
        Element::from_terms(self.terms.iter().map(|(m, x)| (m.clone(), f(x))))
    }

    /// Common degree of all terms; `None` for zero or inhomogeneous elements.
    pub fn homogeneous_degree(&self, alg: &FreeCga) -> Option<u32> {
        let mut degrees = self.terms.keys().map(|m| alg.degree(m));
        let first = degrees.next()?;
        degrees.all(|d| d == first).then_some(first)
    }

    /// Whether every term has word length at least two.
    pub fn is_decomposable(&self) -> bool {
        self.terms.keys().all(|m| m.length() >= 2)
    }

    /// Terms of word length exactly one.
    pub fn linear_part(&self) -> Element<T> {
        Element::from_terms(self.terms.iter().filter(|(m, _)| m.length() == 1).map(|(m, c)| (m.clone(), c.clone())))
    }
}

impl<T: Scalar> Add for Element<T> {
    type Output = Element<T>;

    fn add(mut self, rhs: Element<T>) -> Element<T> {
        for (m, c) in rhs.terms {
            self.add_term(m, c);
        }
        self
    }
}

impl<T: Scalar> Neg for Element<T> {
    type Output = Element<T>;

    fn neg(self) -> Element<T> {
        Element { terms: self.terms.into_iter().map(|(m, c)| (m, -c)).collect() }
    }
}

impl<T: Scalar> Sub for Element<T> {
    type Output = Element<T>;

    fn sub(self, rhs: Element<T>) -> Element<T> {
        self + (-rhs)
    }
}

impl<T: Scalar> Element<T> {
    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&Monomial::one()).is_some_and(|c| c.is_one())
    }
}
