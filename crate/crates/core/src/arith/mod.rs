//! Exact arithmetic: big integers and rationals (from `num`), sparse
//! bivariate polynomials in `k` and `t`, and unreduced rational functions.

mod poly;
mod ratfunc;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;
pub use poly::{BivariatePolynomial, Monomial};
pub use ratfunc::RationalFunction;

use num_traits::{One, Zero};
use std::fmt::Debug;

/// Commutative ring with unit, as needed by the matrix and Pfaffian code.
///
/// Methods take references so big values are not cloned on every step.
pub trait Ring: Zero + One + Clone + PartialEq + Debug + Send + Sync + 'static {
    fn from_i64(v: i64) -> Self;
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negated(&self) -> Self;
}

impl Ring for BigInt {
    fn from_i64(v: i64) -> Self {
        BigInt::from(v)
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
}

impl Ring for BivariatePolynomial {
    fn from_i64(v: i64) -> Self {
        BivariatePolynomial::constant(BigInt::from(v))
    }
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negated(&self) -> Self {
        -self
    }
}

/// Exact quotient `a / b` over the integers, if it exists.
pub(crate) fn div_exact_int(a: &BigInt, b: &BigInt) -> Option<BigInt> {
    if Zero::is_zero(b) {
        return None;
    }
    let (q, r) = num_integer::Integer::div_rem(a, b);
    Zero::is_zero(&r).then_some(q)
}

/// Converts a rational with unit denominator into an integer.
pub(crate) fn rational_to_integer(r: &BigRational) -> Option<BigInt> {
    r.is_integer().then(|| r.numer().clone())
}
