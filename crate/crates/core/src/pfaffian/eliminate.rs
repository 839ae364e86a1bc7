use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::rational_to_integer;
use crate::error::{Error, Result};
use crate::kernel::SkewMatrix;

/// Pfaffian by skew-symmetric elimination over the rationals.
///
/// At each step a nonzero entry of the first row is moved to position
/// `(1, 2)` (each simultaneous row and column swap flips the sign), the
/// leading 2x2 block is eliminated against the rest, and the Pfaffian of the
/// trailing block is multiplied by the pivot.
pub fn pf_eliminate(m: &SkewMatrix<BigInt>) -> Result<BigInt> {
    let n = m.order();
    if n % 2 == 1 {
        return Err(Error::OddOrder(n));
    }
    let mut s: Vec<Vec<BigRational>> = m
        .to_dense()
        .into_iter()
        .map(|row| row.into_iter().map(BigRational::from_integer).collect())
        .collect();
    let mut pf = BigRational::one();
    for k in (0..n).step_by(2) {
        let Some(piv) = (k + 1..n).find(|j| !s[k][*j].is_zero()) else {
            return Ok(BigInt::zero());
        };
        if piv != k + 1 {
            s.swap(piv, k + 1);
            for row in s.iter_mut() {
                row.swap(piv, k + 1);
            }
            pf = -pf;
        }
        let p = s[k][k + 1].clone();
        pf *= &p;
        for i in k + 2..n {
            if s[k][i].is_zero() && s[k + 1][i].is_zero() {
                continue;
            }
            for j in i + 1..n {
                let d = (&s[k + 1][i] * &s[k][j] - &s[k][i] * &s[k + 1][j]) / &p;
                if d.is_zero() {
                    continue;
                }
                let v = &s[i][j] + d;
                s[j][i] = -v.clone();
                s[i][j] = v;
            }
        }
    }
    rational_to_integer(&pf)
        .ok_or_else(|| Error::Domain("elimination produced a non-integral Pfaffian".into()))
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
pub fn determinant(rows: &[Vec<BigInt>]) -> Result<BigInt> {
    let n = rows.len();
    if let Some(r) = rows.iter().find(|r| r.len() != n) {
        return Err(Error::ShapeMismatch {
            rows: n,
            cols: r.len(),
        });
    }
    if n == 0 {
        return Ok(BigInt::one());
    }
    let mut a = rows.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(r) = (k + 1..n).find(|r| !a[*r][k].is_zero()) else {
                return Ok(BigInt::zero());
            };
            a.swap(k, r);
            sign = -sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    Ok(sign * &a[n - 1][n - 1])
}
