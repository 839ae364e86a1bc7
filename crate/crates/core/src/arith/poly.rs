use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Pow, Signed, Zero};
use serde_json::Value;

use crate::error::{Error, Result};

/// Monomial `k^k_exp * t^t_exp`.
///
/// Ordered graded-lexicographically with `k > t`: total degree first, then
/// the exponent of `k`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub k: u32,
    pub t: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial { k: 0, t: 0 };

    pub fn new(k: u32, t: u32) -> Self {
        Monomial { k, t }
    }

    pub fn degree(self) -> u32 {
        self.k + self.t
    }

    pub fn divides(self, other: Monomial) -> bool {
        self.k <= other.k && self.t <= other.t
    }

    fn mul(self, other: Monomial) -> Monomial {
        Monomial::new(self.k + other.k, self.t + other.t)
    }

    fn div(self, other: Monomial) -> Monomial {
        Monomial::new(self.k - other.k, self.t - other.t)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.k.cmp(&other.k))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse polynomial in `k` and `t` with arbitrary-precision integer
/// coefficients. Zero coefficients are never stored, so derived equality is
/// equality of polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct BivariatePolynomial {
    terms: BTreeMap<Monomial, BigInt>,
}

impl BivariatePolynomial {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::term(c, 0, 0)
    }

    pub fn term(c: impl Into<BigInt>, k: u32, t: u32) -> Self {
        let mut p = Self::zero();
        p.add_term(Monomial::new(k, t), c.into());
        p
    }

    /// The variable `k`.
    pub fn k() -> Self {
        Self::term(1, 1, 0)
    }

    /// The variable `t`.
    pub fn t() -> Self {
        Self::term(1, 0, 1)
    }

    /// Builds a polynomial from `(e_k, e_t, coefficient)` triples; repeated
    /// monomials are summed.
    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (u32, u32, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (k, t, c) in terms {
            p.add_term(Monomial::new(k, t), c.into());
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, k: u32, t: u32) -> BigInt {
        self.terms
            .get(&Monomial::new(k, t))
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (Monomial, &BigInt)> + '_ {
        self.terms.iter().rev().map(|(m, c)| (*m, c))
    }

    pub fn leading_term(&self) -> Option<(Monomial, &BigInt)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.leading_term().map(|(m, _)| m.degree())
    }

    /// Returns the integer value if the polynomial is a constant.
    pub fn as_constant(&self) -> Option<BigInt> {
        match self.terms.len() {
            0 => Some(BigInt::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    /// Greatest common divisor of the coefficients (non-negative).
    pub fn content(&self) -> BigInt {
        self.terms
            .values()
            .fold(BigInt::zero(), |acc, c| acc.gcd(c))
    }

    fn add_term(&mut self, m: Monomial, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BivariatePolynomial {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Divides every coefficient by `c`, which must divide each of them.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (m, v) in &self.terms {
            let q = super::div_exact_int(v, c).ok_or(Error::NotDivisible)?;
            terms.insert(*m, q);
        }
        Ok(BivariatePolynomial { terms })
    }

    fn mul_term(&self, m: Monomial, c: &BigInt) -> Self {
        BivariatePolynomial {
            terms: self.terms.iter().map(|(n, v)| (n.mul(m), v * c)).collect(),
        }
    }

    /// Exact quotient `self / divisor` by multivariate long division in
    /// graded-lex order. Fails unless the remainder is zero and every
    /// quotient coefficient is an integer.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self> {
        let (lead_m, lead_c) = divisor
            .leading_term()
            .map(|(m, c)| (m, c.clone()))
            .ok_or_else(|| Error::Domain("division by the zero polynomial".into()))?;
        let mut rem = self.clone();
        let mut quotient = Self::zero();
        while let Some((m, c)) = rem.leading_term() {
            if !lead_m.divides(m) {
                return Err(Error::NotDivisible);
            }
            let q = super::div_exact_int(c, &lead_c).ok_or(Error::NotDivisible)?;
            let qm = m.div(lead_m);
            rem = &rem - &divisor.mul_term(qm, &q);
            quotient.add_term(qm, q);
        }
        Ok(quotient)
    }

    /// Substitutes integers for `k` and `t`.
    pub fn eval(&self, k: &BigInt, t: &BigInt) -> BigInt {
        self.terms.iter().fold(BigInt::zero(), |acc, (m, c)| {
            acc + c * Pow::pow(k, m.k) * Pow::pow(t, m.t)
        })
    }

    pub fn eval_i64(&self, k: i64, t: i64) -> BigInt {
        self.eval(&BigInt::from(k), &BigInt::from(t))
    }

    /// JSON array of `[e_k, e_t, "coefficient"]`, leading term first.
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|(m, c)| serde_json::json!([m.k, m.t, c.to_string()]))
                .collect(),
        )
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let bad = || Error::Parse(format!("malformed polynomial term list: {value}"));
        let items = value.as_array().ok_or_else(bad)?;
        let mut p = Self::zero();
        for item in items {
            let triple = item.as_array().filter(|a| a.len() == 3).ok_or_else(bad)?;
            let k = triple[0].as_u64().ok_or_else(bad)? as u32;
            let t = triple[1].as_u64().ok_or_else(bad)? as u32;
            let c: BigInt = triple[2]
                .as_str()
                .ok_or_else(bad)?
                .parse()
                .map_err(|_| bad())?;
            p.add_term(Monomial::new(k, t), c);
        }
        Ok(p)
    }

    /// True if the sign of the leading coefficient is negative.
    pub fn leading_is_negative(&self) -> bool {
        self.leading_term().is_some_and(|(_, c)| c.is_negative())
    }
}

impl From<BigInt> for BivariatePolynomial {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl From<i64> for BivariatePolynomial {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl Add for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn add(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn sub(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn mul(self, rhs: &BivariatePolynomial) -> BivariatePolynomial {
        let mut out = BivariatePolynomial::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(*m2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        BivariatePolynomial {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $method:ident) => {
        impl $tr for BivariatePolynomial {
            type Output = BivariatePolynomial;
            fn $method(self, rhs: BivariatePolynomial) -> BivariatePolynomial {
                (&self).$method(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for BivariatePolynomial {
    type Output = BivariatePolynomial;
    fn neg(self) -> BivariatePolynomial {
        -&self
    }
}

impl num_traits::Zero for BivariatePolynomial {
    fn zero() -> Self {
        BivariatePolynomial::zero()
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl num_traits::One for BivariatePolynomial {
    fn one() -> Self {
        BivariatePolynomial::constant(1)
    }
}

fn fmt_var(f: &mut fmt::Formatter<'_>, name: char, e: u32) -> fmt::Result {
    match e {
        0 => Ok(()),
        1 => write!(f, "{name}"),
        _ => write!(f, "{name}^{e}"),
    }
}

/// Renders as `13k^2 - 120kt + 256t^2`.
impl fmt::Display for BivariatePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms().enumerate() {
            let mag = c.abs();
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if m == Monomial::ONE || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            fmt_var(f, 'k', m.k)?;
            fmt_var(f, 't', m.t)?;
        }
        Ok(())
    }
}

/// Parses the `Display` syntax, e.g. `-2661k^3 + 38540k^2t - 178688k*t^2`.
/// Whitespace and `*` are ignored.
impl FromStr for BivariatePolynomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let cleaned: String = s
            .chars()
            .filter(|c| !c.is_whitespace() && *c != '*')
            .collect();
        let err = || Error::Parse(format!("cannot parse polynomial {s:?}"));
        if cleaned.is_empty() {
            return Err(err());
        }
        let bytes = cleaned.as_bytes();
        let mut pos = 0;
        let mut poly = BivariatePolynomial::zero();
        while pos < bytes.len() {
            let mut negative = false;
            if bytes[pos] == b'+' || bytes[pos] == b'-' {
                negative = bytes[pos] == b'-';
                pos += 1;
            } else if pos != 0 {
                return Err(err());
            }
            let start = pos;
            while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                pos += 1;
            }
            let mut coeff = if pos > start {
                cleaned[start..pos].parse::<BigInt>().map_err(|_| err())?
            } else {
                BigInt::one()
            };
            let mut mono = Monomial::ONE;
            let mut saw_var = false;
            while pos < bytes.len() && (bytes[pos] == b'k' || bytes[pos] == b't') {
                let var = bytes[pos];
                pos += 1;
                let mut e = 1u32;
                if pos < bytes.len() && bytes[pos] == b'^' {
                    pos += 1;
                    let es = pos;
                    while pos < bytes.len() && bytes[pos].is_ascii_digit() {
                        pos += 1;
                    }
                    e = cleaned[es..pos].parse().map_err(|_| err())?;
                }
                if var == b'k' {
                    mono.k += e;
                } else {
                    mono.t += e;
                }
                saw_var = true;
            }
            if pos == start && !saw_var {
                return Err(err());
            }
            if negative {
                coeff = -coeff;
            }
            poly.add_term(mono, coeff);
        }
        Ok(poly)
    }
}
