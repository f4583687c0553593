use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::laurent::{poly_divrem, poly_gcd, Laurent};
use super::scalar::Rational;

/// Element of the rational function field `Q(ν)`, stored as a reduced
/// quotient of Laurent polynomials.
///
/// Canonical form: the denominator is a genuine polynomial with nonzero
/// constant term, it is monic, and it shares no factor with the numerator.
/// Units `c·ν^k` are absorbed into the numerator, so two equal fractions are
/// structurally equal.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Fraction {
    num: Laurent,
    den: Laurent,
}

impl Fraction {
    pub fn new(num: Laurent, den: Laurent) -> Self {
        assert!(!den.is_zero(), "fraction with zero denominator");
        if num.is_zero() {
            return Fraction { num, den: Laurent::one() };
        }
        let (ns, np) = num.to_poly();
        let (ds, dp) = den.to_poly();
        let g = poly_gcd(&np, &dp);
        let (np, _) = poly_divrem(&np, &g);
        let (dp, _) = poly_divrem(&dp, &g);
        let lead = dp.last().unwrap().clone();
        let np: Vec<Rational> = np.iter().map(|c| c / &lead).collect();
        let dp: Vec<Rational> = dp.iter().map(|c| c / &lead).collect();
        Fraction {
            num: Laurent::from_poly(ns - ds, &np),
            den: Laurent::from_poly(0, &dp),
        }
    }

    pub fn numerator(&self) -> &Laurent {
        &self.num
    }

    pub fn denominator(&self) -> &Laurent {
        &self.den
    }

    /// The underlying Laurent polynomial when the denominator is trivial.
    pub fn as_laurent(&self) -> Option<&Laurent> {
        if self.den.is_one() {
            Some(&self.num)
        } else {
            None
        }
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.as_laurent().and_then(|l| l.as_constant())
    }

    pub fn inv(&self) -> Fraction {
        assert!(!self.is_zero(), "inverse of zero in Q(ν)");
        Fraction::new(self.den.clone(), self.num.clone())
    }

    /// Substitute a rational value for `ν`; `None` if the denominator vanishes there.
    pub fn evaluate(&self, nu: &Rational) -> Option<Rational> {
        let d = self.den.evaluate(nu);
        if d.is_zero() {
            None
        } else {
            Some(self.num.evaluate(nu) / d)
        }
    }
}

impl From<Laurent> for Fraction {
    fn from(l: Laurent) -> Self {
        Fraction { num: l, den: Laurent::one() }
    }
}

impl Zero for Fraction {
    fn zero() -> Self {
        Fraction::from(Laurent::zero())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for Fraction {
    fn one() -> Self {
        Fraction::from(Laurent::one())
    }
}

impl Add for Fraction {
    type Output = Fraction;

    fn add(self, rhs: Fraction) -> Fraction {
        if self.den == rhs.den {
            return Fraction::new(self.num + rhs.num, self.den);
        }
        Fraction::new(
            self.num * rhs.den.clone() + rhs.num * self.den.clone(),
            self.den * rhs.den,
        )
    }
}

impl Neg for Fraction {
    type Output = Fraction;

    fn neg(self) -> Fraction {
        Fraction { num: -self.num, den: self.den }
    }
}

impl Sub for Fraction {
    type Output = Fraction;

    fn sub(self, rhs: Fraction) -> Fraction {
        self + (-rhs)
    }
}

impl Mul for Fraction {
    type Output = Fraction;

    fn mul(self, rhs: Fraction) -> Fraction {
        if self.den.is_one() && rhs.den.is_one() {
            return Fraction::from(self.num * rhs.num);
        }
        Fraction::new(self.num * rhs.num, self.den * rhs.den)
    }
}

impl fmt::Display for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for Fraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fraction({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{rat, Field};

    fn nu(k: i64) -> Laurent {
        Laurent::nu_pow(k)
    }

    #[test]
    fn reduces_common_factors_and_units() {
        // (ν^2 - 1)/(2ν^2 - 2ν) = (ν + 1)/(2ν) = ν^-1 (1/2 ν + 1/2)
        let f = Fraction::new(nu(2) - Laurent::one(), (nu(2) - nu(1)).scale(&rat(2, 1)));
        assert!(f.denominator().is_one());
        assert_eq!(f.numerator().clone(), Laurent::monomial(rat(1, 2), 0) + Laurent::monomial(rat(1, 2), -1));
    }

    #[test]
    fn field_identities() {
        let a = Fraction::new(nu(1) + Laurent::one(), nu(1) - Laurent::one());
        let b = Fraction::from(nu(-3) + Laurent::monomial(rat(5, 1), 2));
        assert_eq!(a.clone() * a.inv(), Fraction::one());
        assert_eq!((a.clone() + b.clone()) - b.clone(), a);
        assert_eq!(a.div(&a), Fraction::one());
    }

    #[test]
    fn evaluation_skips_poles() {
        let a = Fraction::new(Laurent::one(), nu(1) - Laurent::one());
        assert_eq!(a.evaluate(&rat(1, 1)), None);
        assert_eq!(a.evaluate(&rat(3, 1)), Some(rat(1, 2)));
    }
}
