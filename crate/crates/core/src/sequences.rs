//! Delannoy numbers, the Schröder triangle and the Aztec diamond total.
//!
//! Tables are memoized per thread and grow on demand.

use std::cell::RefCell;

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Memoized Delannoy numbers `d(p, q)`, the number of lattice paths from
/// `(0, 0)` to `(p, q)` with steps `(1,0)`, `(0,1)` and `(1,1)`.
#[derive(Debug, Default, Clone)]
pub struct DelannoyTable {
    rows: Vec<Vec<BigInt>>,
}

impl DelannoyTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `d(p, q)`; zero when either index is negative.
    pub fn get(&mut self, p: i64, q: i64) -> BigInt {
        if p < 0 || q < 0 {
            return BigInt::zero();
        }
        let (p, q) = (p as usize, q as usize);
        self.grow(p, q);
        self.rows[p][q].clone()
    }

    fn grow(&mut self, p: usize, q: usize) {
        let width = self.rows.first().map_or(0, Vec::len).max(q + 1);
        // widen existing rows in place
        for r in 0..self.rows.len() {
            while self.rows[r].len() < width {
                let j = self.rows[r].len();
                let v = self.recur(r, j);
                self.rows[r].push(v);
            }
        }
        while self.rows.len() <= p {
            let r = self.rows.len();
            self.rows.push(Vec::with_capacity(width));
            for j in 0..width {
                let v = self.recur(r, j);
                self.rows[r].push(v);
            }
        }
    }

    fn recur(&self, p: usize, q: usize) -> BigInt {
        if p == 0 || q == 0 {
            return BigInt::one();
        }
        &self.rows[p - 1][q] + &self.rows[p][q - 1] + &self.rows[p - 1][q - 1]
    }
}

/// Memoized Schröder triangle `s(p, q)` for `0 <= p <= q`: paths with
/// Delannoy steps from `(0, 0)` to `(p, q)` that never go below `y = x`.
#[derive(Debug, Default, Clone)]
pub struct SchroderTriangle {
    // rows[q][p] for p <= q
    rows: Vec<Vec<BigInt>>,
}

impl SchroderTriangle {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn get(&mut self, p: i64, q: i64) -> Result<BigInt> {
        if p < 0 || p > q {
            return Err(Error::Domain(format!(
                "Schröder triangle is defined for 0 <= p <= q, got ({p}, {q})"
            )));
        }
        let (p, q) = (p as usize, q as usize);
        while self.rows.len() <= q {
            let qq = self.rows.len();
            let mut row: Vec<BigInt> = Vec::with_capacity(qq + 1);
            for pp in 0..=qq {
                let v = if pp == 0 {
                    BigInt::one()
                } else if pp < qq {
                    &row[pp - 1] + &self.rows[qq - 1][pp] + &self.rows[qq - 1][pp - 1]
                } else {
                    // on the diagonal the (p, q-1) neighbour lies below y = x
                    &row[pp - 1] + &self.rows[qq - 1][pp - 1]
                };
                row.push(v);
            }
            self.rows.push(row);
        }
        Ok(self.rows[q][p].clone())
    }
}

thread_local! {
    static DELANNOY: RefCell<DelannoyTable> = RefCell::new(DelannoyTable::new());
    static SCHRODER: RefCell<SchroderTriangle> = RefCell::new(SchroderTriangle::new());
}

/// Delannoy number `d(p, q)` by the three-term recurrence.
pub fn delannoy(p: i64, q: i64) -> BigInt {
    DELANNOY.with(|t| t.borrow_mut().get(p, q))
}

/// Delannoy number by the binomial sum `Σ C(p,i) C(q,i) 2^i`.
pub fn delannoy_closed(p: i64, q: i64) -> BigInt {
    if p < 0 || q < 0 {
        return BigInt::zero();
    }
    let (p, q) = (BigInt::from(p), BigInt::from(q));
    let upto: u64 = p.clone().min(q.clone()).try_into().expect("small index");
    (0..=upto)
        .map(|i| {
            let i_big = BigInt::from(i);
            binomial(p.clone(), i_big.clone()) * binomial(q.clone(), i_big) * (BigInt::one() << i)
        })
        .sum()
}

/// Schröder triangle entry `s(p, q)`.
pub fn schroder(p: i64, q: i64) -> Result<BigInt> {
    SCHRODER.with(|t| t.borrow_mut().get(p, q))
}

/// Number of domino tilings of the Aztec diamond of order `n`, `2^(n(n+1)/2)`.
pub fn aztec_total(n: i64) -> Result<BigInt> {
    if n < 1 {
        return Err(Error::Domain(format!(
            "Aztec diamond order must be >= 1, got {n}"
        )));
    }
    let e = (n * (n + 1) / 2) as usize;
    Ok(BigInt::one() << e)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    /// Exhaustive count of Delannoy-step paths (0,0)->(p,q) staying on or
    /// above y = x (oracle, independent of the recurrence).
    fn schroder_brute(p: i64, q: i64) -> u64 {
        fn walk(x: i64, y: i64, p: i64, q: i64) -> u64 {
            if x > p || y > q || y < x {
                return 0;
            }
            if x == p && y == q {
                return 1;
            }
            walk(x + 1, y, p, q) + walk(x, y + 1, p, q) + walk(x + 1, y + 1, p, q)
        }
        walk(0, 0, p, q)
    }

    #[test]
    fn delannoy_examples() {
        assert_eq!(delannoy(0, 7), b(1));
        assert_eq!(delannoy(-1, 3), b(0));
        assert_eq!(delannoy(3, -2), b(0));
        assert_eq!(delannoy(2, 2), b(13));
        assert_eq!(delannoy_closed(2, 2), b(13));
    }

    #[test]
    fn delannoy_recurrence_matches_closed_form() {
        for p in 0..=30 {
            for q in 0..=30 {
                assert_eq!(delannoy(p, q), delannoy_closed(p, q), "d({p},{q})");
                assert_eq!(delannoy(p, q), delannoy(q, p));
            }
        }
    }

    #[test]
    fn table_grows_in_either_direction() {
        let mut t = DelannoyTable::new();
        assert_eq!(t.get(0, 5), b(1));
        assert_eq!(t.get(5, 0), b(1));
        assert_eq!(t.get(3, 4), delannoy_closed(3, 4));
        assert_eq!(t.get(1, 9), b(19));
    }

    #[test]
    fn schroder_examples() {
        assert_eq!(schroder(0, 5).unwrap(), b(1));
        assert_eq!(schroder(1, 1).unwrap(), b(2));
        assert_eq!(schroder(3, 4).unwrap(), b(68));
        assert!(schroder(-1, 2).is_err());
        assert!(schroder(3, 2).is_err());
    }

    #[test]
    fn schroder_matches_path_enumeration() {
        for q in 0..=10 {
            for p in 0..=q {
                assert_eq!(
                    schroder(p, q).unwrap(),
                    b(schroder_brute(p, q) as i64),
                    "s({p},{q})"
                );
            }
        }
    }

    #[test]
    fn schroder_first_row_drops_one_path() {
        for q in 1..=20 {
            assert_eq!(schroder(1, q).unwrap(), delannoy(1, q) - 1);
        }
    }

    #[test]
    fn aztec_totals() {
        assert_eq!(aztec_total(1).unwrap(), b(2));
        assert_eq!(aztec_total(2).unwrap(), b(8));
        assert_eq!(aztec_total(4).unwrap(), b(1024));
        assert!(aztec_total(0).is_err());
    }
}
