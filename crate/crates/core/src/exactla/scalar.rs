//! Scalar domains used throughout the crate.
//!
//! Three domains appear: the rationals, Laurent polynomials in one formal
//! indeterminate `ν` over the rationals, and the fraction field of the latter.
//! Everything is exact; there is no floating point anywhere.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Fraction, Laurent};

pub type Rational = BigRational;

/// Commutative ring of exact scalars.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
{
    fn from_rational(q: Rational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }
}

/// A scalar domain where every nonzero element is invertible.
pub trait Field: Scalar {
    fn inv(&self) -> Self;

    fn div(&self, other: &Self) -> Self {
        self.clone() * other.inv()
    }
}

/// Scalars that decompose as a finite sum `Σ ν^k q_k` with rational `q_k`.
///
/// Linear problems whose coefficient matrix is rational but whose right-hand
/// side lives in such a domain are solved one exponent at a time.
pub trait ExponentSplit: Scalar {
    fn split(&self) -> Vec<(i64, Rational)>;
    fn assemble(parts: impl IntoIterator<Item = (i64, Rational)>) -> Self;
}

impl Scalar for Rational {
    fn from_rational(q: Rational) -> Self {
        q
    }
}

impl Field for Rational {
    fn inv(&self) -> Self {
        self.recip()
    }
}

impl ExponentSplit for Rational {
    fn split(&self) -> Vec<(i64, Rational)> {
        if self.is_zero() {
            Vec::new()
        } else {
            vec![(0, self.clone())]
        }
    }

    fn assemble(parts: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let mut acc = Rational::zero();
        for (k, q) in parts {
            assert_eq!(k, 0, "rational scalar cannot carry a power of the indeterminate");
            acc += q;
        }
        acc
    }
}

impl Scalar for Laurent {
    fn from_rational(q: Rational) -> Self {
        Laurent::constant(q)
    }
}

impl ExponentSplit for Laurent {
    fn split(&self) -> Vec<(i64, Rational)> {
        self.terms().map(|(k, q)| (k, q.clone())).collect()
    }

    fn assemble(parts: impl IntoIterator<Item = (i64, Rational)>) -> Self {
        let mut acc = Laurent::zero();
        for (k, q) in parts {
            acc = acc + Laurent::monomial(q, k);
        }
        acc
    }
}

impl Scalar for Fraction {
    fn from_rational(q: Rational) -> Self {
        Fraction::from(Laurent::constant(q))
    }
}

impl Field for Fraction {
    fn inv(&self) -> Self {
        Fraction::inv(self)
    }
}

/// Build a rational from a pair of machine integers.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parse `"p/q"` or `"p"` into a canonical rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Rational::new(num, den))
}

/// Render a rational as `"p/q"`, or `"p"` when it is an integer.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn is_negative(q: &Rational) -> bool {
    q.is_negative()
}
