use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde_json::Value;

use super::BivariatePolynomial;
use crate::error::{Error, Result};

/// Quotient of two bivariate polynomials, kept unreduced.
///
/// Only the common integer content is removed and the denominator's leading
/// coefficient (graded-lex) is made positive. Two rational functions may
/// therefore represent the same value with different fields; use
/// [`RationalFunction::equivalent`] rather than `==` for value equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalFunction {
    num: BivariatePolynomial,
    den: BivariatePolynomial,
}

impl RationalFunction {
    pub fn new(num: BivariatePolynomial, den: BivariatePolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Domain(
                "rational function with zero denominator".into(),
            ));
        }
        Ok(Self::normalized(num, den))
    }

    pub fn from_poly(p: BivariatePolynomial) -> Self {
        RationalFunction {
            num: p,
            den: BivariatePolynomial::constant(1),
        }
    }

    pub fn zero() -> Self {
        Self::from_poly(BivariatePolynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(BivariatePolynomial::constant(1))
    }

    fn normalized(mut num: BivariatePolynomial, mut den: BivariatePolynomial) -> Self {
        if num.is_zero() {
            return RationalFunction {
                num,
                den: BivariatePolynomial::constant(1),
            };
        }
        let g: BigInt = num.content().gcd(&den.content());
        if !g.is_one() {
            num = num.div_scalar_exact(&g).expect("content divides");
            den = den.div_scalar_exact(&g).expect("content divides");
        }
        if den.leading_is_negative() {
            num = -num;
            den = -den;
        }
        RationalFunction { num, den }
    }

    /// Re-applies normalization; idempotent.
    pub fn normalize(&self) -> Self {
        Self::normalized(self.num.clone(), self.den.clone())
    }

    pub fn numerator(&self) -> &BivariatePolynomial {
        &self.num
    }

    pub fn denominator(&self) -> &BivariatePolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    /// Value equality by cross-multiplication.
    pub fn equivalent(&self, other: &Self) -> bool {
        &self.num * &other.den == &other.num * &self.den
    }

    pub fn add(&self, other: &Self) -> Self {
        if self.den == other.den {
            return Self::normalized(&self.num + &other.num, self.den.clone());
        }
        Self::normalized(
            &(&self.num * &other.den) + &(&other.num * &self.den),
            &self.den * &other.den,
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::normalized(&self.num * &other.num, &self.den * &other.den)
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        if other.is_zero() {
            return Err(Error::Domain(
                "division by the zero rational function".into(),
            ));
        }
        Ok(Self::normalized(
            &self.num * &other.den,
            &self.den * &other.num,
        ))
    }

    pub fn neg(&self) -> Self {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }

    /// The polynomial value, if the denominator divides the numerator.
    pub fn to_polynomial(&self) -> Result<BivariatePolynomial> {
        self.num.div_exact(&self.den)
    }

    pub fn eval(&self, k: &BigInt, t: &BigInt) -> Option<num_rational::BigRational> {
        let d = self.den.eval(k, t);
        if d.is_zero() {
            return None;
        }
        Some(num_rational::BigRational::new(self.num.eval(k, t), d))
    }

    pub fn to_json(&self) -> Value {
        serde_json::json!({ "num": self.num.to_json(), "den": self.den.to_json() })
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        let num = BivariatePolynomial::from_json(&v["num"])?;
        let den = BivariatePolynomial::from_json(&v["den"])?;
        Self::new(num, den)
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.as_constant().is_some_and(|c| c.is_one()) {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> BivariatePolynomial {
        s.parse().unwrap()
    }

    fn rf(n: &str, d: &str) -> RationalFunction {
        RationalFunction::new(p(n), p(d)).unwrap()
    }

    #[test]
    fn common_integer_factor() {
        assert!(rf("k", "t").equivalent(&rf("2k", "2t")));
        // normalization strips the 2 as well
        assert_eq!(rf("2k", "2t"), rf("k", "t"));
    }

    #[test]
    fn distinct_values() {
        assert!(!rf("t", "1").equivalent(&rf("k", "1")));
    }

    #[test]
    fn sign_scaling_is_equivalent() {
        let a = rf("13k^2 - 120kt + 256t^2", "-k + 4t");
        let b = RationalFunction {
            num: -a.numerator(),
            den: -a.denominator(),
        };
        assert!(a.equivalent(&b));
        assert_eq!(b.normalize(), a);
    }

    #[test]
    fn leading_coefficient_of_denominator_is_positive() {
        let a = rf("1", "-k + 4t");
        assert_eq!(a.denominator(), &p("k - 4t"));
        assert_eq!(a.numerator(), &p("-1"));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(RationalFunction::new(p("k"), BivariatePolynomial::zero()).is_err());
        assert!(rf("k", "t").div(&RationalFunction::zero()).is_err());
    }

    #[test]
    fn field_operations() {
        let a = rf("k", "t");
        let b = rf("t", "k");
        assert!(a.mul(&b).equivalent(&RationalFunction::one()));
        assert!(a.add(&b).equivalent(&rf("k^2 + t^2", "kt")));
        assert!(a.sub(&a).is_zero());
        assert!(a.div(&b).unwrap().equivalent(&rf("k^2", "t^2")));
        assert_eq!(
            rf("k^2 - t^2", "k - t").to_polynomial().unwrap(),
            p("k + t")
        );
        assert!(rf("k", "t").to_polynomial().is_err());
    }

    #[test]
    fn json_roundtrip() {
        let a = rf("3k - 1", "2t + 5");
        assert_eq!(RationalFunction::from_json(&a.to_json()).unwrap(), a);
    }
}
