use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::pf_eliminate;
use crate::arith::{rational_to_integer, BivariatePolynomial};
use crate::error::{Error, Result};
use crate::kernel::SkewMatrix;

/// Pfaffian of a matrix whose entries are homogeneous linear forms in
/// `k, t`, by evaluation and interpolation.
///
/// The Pfaffian of such a matrix of order `2n` is homogeneous of degree `n`,
/// so it is fixed by its values at `t = 1`, `k = 0, ..., n`. Each value comes
/// from exact integer elimination.
pub fn pf_homogeneous_linear(m: &SkewMatrix<BivariatePolynomial>) -> Result<BivariatePolynomial> {
    let order = m.order();
    if order % 2 == 1 {
        return Err(Error::OddOrder(order));
    }
    if let Some((i, j, _)) = m
        .upper_entries()
        .find(|(_, _, p)| !p.is_zero() && p.terms().any(|(mono, _)| mono.degree() != 1))
    {
        return Err(Error::Domain(format!(
            "entry ({i}, {j}) is not a homogeneous linear form"
        )));
    }
    let n = order / 2;
    let one = BigInt::from(1);
    let xs: Vec<BigInt> = (0..=n as i64).map(BigInt::from).collect();
    let ys = xs
        .iter()
        .map(|x| pf_eliminate(&m.map(|p| p.eval(x, &one))))
        .collect::<Result<Vec<_>>>()?;
    let coeffs = interpolate(&xs, &ys);
    let mut out = BivariatePolynomial::zero();
    for (e, c) in coeffs.iter().enumerate() {
        let c = rational_to_integer(c)
            .ok_or_else(|| Error::Domain("interpolated coefficient is not an integer".into()))?;
        if !c.is_zero() {
            out = &out + &BivariatePolynomial::term(c, e as u32, (n - e) as u32);
        }
    }
    Ok(out)
}

/// Coefficients (constant term first) of the polynomial of degree
/// `< xs.len()` through the points `(xs[i], ys[i])`, via Newton's divided
/// differences.
fn interpolate(xs: &[BigInt], ys: &[BigInt]) -> Vec<BigRational> {
    let n = xs.len();
    let mut dd: Vec<BigRational> = ys.iter().cloned().map(BigRational::from_integer).collect();
    for level in 1..n {
        for i in (level..n).rev() {
            let den = BigRational::from_integer(&xs[i] - &xs[i - level]);
            dd[i] = (&dd[i] - &dd[i - 1]) / den;
        }
    }
    // Horner on the Newton form, building monomial coefficients
    let mut coeffs = vec![BigRational::zero(); n];
    for i in (0..n).rev() {
        let mut next = vec![BigRational::zero(); n];
        for (e, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if e + 1 < n {
                next[e + 1] += c;
            }
            next[e] -= c * BigRational::from_integer(xs[i].clone());
        }
        next[0] += &dd[i];
        coeffs = next;
    }
    coeffs
}
