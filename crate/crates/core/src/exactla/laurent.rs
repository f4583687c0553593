use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::scalar::{format_rational, Rational};

/// Laurent polynomial in the formal indeterminate `ν` with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// polynomials and the zero polynomial has an empty term map.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Laurent {
    coeffs: BTreeMap<i64, Rational>,
}

impl Laurent {
    pub fn constant(q: Rational) -> Self {
        Self::monomial(q, 0)
    }

    pub fn monomial(q: Rational, exponent: i64) -> Self {
        let mut coeffs = BTreeMap::new();
        if !q.is_zero() {
            coeffs.insert(exponent, q);
        }
        Laurent { coeffs }
    }

    /// `ν^k`.
    pub fn nu_pow(k: i64) -> Self {
        Self::monomial(Rational::one(), k)
    }

    pub fn terms(&self) -> impl Iterator<Item = (i64, &Rational)> {
        self.coeffs.iter().map(|(k, q)| (*k, q))
    }

    pub fn coeff(&self, exponent: i64) -> Rational {
        self.coeffs.get(&exponent).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn min_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.coeffs.values().next_back()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.keys().all(|k| *k == 0)
    }

    /// The constant term, if the polynomial has no other terms.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.is_constant() {
            Some(self.coeff(0))
        } else {
            None
        }
    }

    /// `Some(k)` when the polynomial is exactly `ν^k`.
    pub fn as_unit_monomial(&self) -> Option<i64> {
        if self.coeffs.len() == 1 {
            let (k, q) = self.coeffs.iter().next().unwrap();
            if q.is_one() {
                return Some(*k);
            }
        }
        None
    }

    pub fn is_identically_one(&self) -> bool {
        self.as_unit_monomial() == Some(0)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Laurent::zero();
        }
        Laurent {
            coeffs: self.coeffs.iter().map(|(k, c)| (*k, c * q)).collect(),
        }
    }

    pub fn shift(&self, by: i64) -> Self {
        Laurent {
            coeffs: self.coeffs.iter().map(|(k, c)| (k + by, c.clone())).collect(),
        }
    }

    /// Substitute a nonzero rational for `ν`.
    pub fn evaluate(&self, nu: &Rational) -> Rational {
        assert!(!nu.is_zero(), "cannot evaluate a Laurent polynomial at zero");
        let mut acc = Rational::zero();
        for (k, c) in &self.coeffs {
            acc += c * pow_rational(nu, *k);
        }
        acc
    }

    /// Coefficients `c_0..c_n` of `ν^{-min}·self`, a polynomial with nonzero
    /// constant term. Returns the shift alongside.
    pub(crate) fn to_poly(&self) -> (i64, Vec<Rational>) {
        let Some(lo) = self.min_exponent() else {
            return (0, Vec::new());
        };
        let hi = self.max_exponent().unwrap();
        let mut out = vec![Rational::zero(); (hi - lo + 1) as usize];
        for (k, c) in &self.coeffs {
            out[(k - lo) as usize] = c.clone();
        }
        (lo, out)
    }

    pub(crate) fn from_poly(shift: i64, coeffs: &[Rational]) -> Self {
        let mut map = BTreeMap::new();
        for (i, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                map.insert(i as i64 + shift, c.clone());
            }
        }
        Laurent { coeffs: map }
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a
    /// remainder.
    pub fn div_exact(&self, divisor: &Laurent) -> Option<Laurent> {
        assert!(!divisor.is_zero(), "division by the zero Laurent polynomial");
        if self.is_zero() {
            return Some(Laurent::zero());
        }
        let (sa, a) = self.to_poly();
        let (sb, b) = divisor.to_poly();
        let (q, r) = poly_divrem(&a, &b);
        if r.iter().any(|c| !c.is_zero()) {
            return None;
        }
        Some(Laurent::from_poly(sa - sb, &q))
    }
}

pub(crate) fn pow_rational(base: &Rational, exp: i64) -> Rational {
    let mut acc = Rational::one();
    let b = if exp < 0 { base.recip() } else { base.clone() };
    for _ in 0..exp.unsigned_abs() {
        acc *= &b;
    }
    acc
}

fn trim(p: &mut Vec<Rational>) {
    while p.last().is_some_and(|c| c.is_zero()) {
        p.pop();
    }
}

/// Polynomial long division over the rationals. Coefficients are listed from
/// the constant term upward.
pub(crate) fn poly_divrem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "polynomial division by zero");
    let mut r = a.to_vec();
    trim(&mut r);
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead = b.last().unwrap().clone();
    let mut q = vec![Rational::zero(); r.len() - b.len() + 1];
    while r.len() >= b.len() && !r.is_empty() {
        let shift = r.len() - b.len();
        let factor = r.last().unwrap() / &lead;
        for (i, bc) in b.iter().enumerate() {
            let t = &factor * bc;
            r[shift + i] -= t;
        }
        q[shift] = factor;
        trim(&mut r);
    }
    (q, r)
}

/// Monic greatest common divisor of two polynomials over the rationals.
pub(crate) fn poly_gcd(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    trim(&mut x);
    trim(&mut y);
    while !y.is_empty() {
        let (_, r) = poly_divrem(&x, &y);
        x = y;
        y = r;
    }
    if let Some(lead) = x.last().cloned() {
        for c in x.iter_mut() {
            *c /= &lead;
        }
    }
    x
}

impl Zero for Laurent {
    fn zero() -> Self {
        Laurent::default()
    }

    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl One for Laurent {
    fn one() -> Self {
        Laurent::constant(Rational::one())
    }
}

impl Add for Laurent {
    type Output = Laurent;

    fn add(mut self, rhs: Laurent) -> Laurent {
        for (k, c) in rhs.coeffs {
            let entry = self.coeffs.entry(k).or_insert_with(Rational::zero);
            *entry += c;
            if entry.is_zero() {
                self.coeffs.remove(&k);
            }
        }
        self
    }
}

impl Neg for Laurent {
    type Output = Laurent;

    fn neg(self) -> Laurent {
        Laurent {
            coeffs: self.coeffs.into_iter().map(|(k, c)| (k, -c)).collect(),
        }
    }
}

impl Sub for Laurent {
    type Output = Laurent;

    fn sub(self, rhs: Laurent) -> Laurent {
        self + (-rhs)
    }
}

impl Mul for Laurent {
    type Output = Laurent;

    fn mul(self, rhs: Laurent) -> Laurent {
        let mut out = Laurent::zero();
        if self.is_zero() || rhs.is_zero() {
            return out;
        }
        for (ka, ca) in &self.coeffs {
            for (kb, cb) in &rhs.coeffs {
                let entry = out.coeffs.entry(ka + kb).or_insert_with(Rational::zero);
                *entry += ca * cb;
            }
        }
        out.coeffs.retain(|_, c| !c.is_zero());
        out
    }
}

impl fmt::Display for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        // highest power first reads naturally
        for (k, c) in self.coeffs.iter().rev() {
            let negative = super::scalar::is_negative(c);
            let mag = if negative { -c.clone() } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = !mag.is_one() || *k == 0;
            if show_coeff {
                write!(f, "{}", format_rational(&mag))?;
            }
            match *k {
                0 => {}
                1 => write!(f, "{}ν", if show_coeff { "*" } else { "" })?,
                k => write!(f, "{}ν^{}", if show_coeff { "*" } else { "" }, k)?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Laurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Laurent({self})")
    }
}
