use std::collections::HashMap;

use crate::arith::Ring;
use crate::error::{Error, Result};
use crate::kernel::{IndexSet, SkewMatrix};

/// Memoized Pfaffian expansion along the smallest index.
///
/// `pf(S) = Σ_p (-1)^{p+1} M[min S, s_p] pf(S \ {min S, s_p})`, where `s_p`
/// is the `p`-th remaining element of `S`. Sub-Pfaffians are cached by the
/// bitmask of `S`, so one expander can evaluate many principal minors of
/// the same matrix cheaply.
pub struct PfaffianExpander<'m, R> {
    m: &'m SkewMatrix<R>,
    memo: HashMap<u64, R>,
}

impl<'m, R: Ring> PfaffianExpander<'m, R> {
    pub fn new(m: &'m SkewMatrix<R>) -> Result<Self> {
        if m.order() > 64 {
            return Err(Error::Domain(format!(
                "expansion supports orders up to 64, got {}",
                m.order()
            )));
        }
        Ok(PfaffianExpander {
            m,
            memo: HashMap::new(),
        })
    }

    /// `pf(M_I)`; zero for odd `|I|`.
    pub fn minor(&mut self, idx: &IndexSet) -> Result<R> {
        idx.check_within(self.m.order())?;
        let mask = idx.iter().fold(0u64, |acc, i| acc | 1 << (i - 1));
        Ok(self.mask(mask))
    }

    pub fn full(&mut self) -> R {
        let n = self.m.order();
        let mask = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
        self.mask(mask)
    }

    /// Number of cached sub-Pfaffians.
    pub fn cached(&self) -> usize {
        self.memo.len()
    }

    fn mask(&mut self, mask: u64) -> R {
        if mask == 0 {
            return R::one();
        }
        if mask.count_ones() % 2 == 1 {
            return R::zero();
        }
        if let Some(v) = self.memo.get(&mask) {
            return v.clone();
        }
        let first = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << first);
        let mut sum = R::zero();
        let mut bits = rest;
        let mut p = 0;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            p += 1;
            let entry = self.m.upper(first + 1, j + 1);
            if entry.is_zero() {
                continue;
            }
            let sub = self.mask(rest & !(1 << j));
            if sub.is_zero() {
                continue;
            }
            let term = entry.times(&sub);
            sum = if p % 2 == 1 {
                sum.plus(&term)
            } else {
                sum.minus(&term)
            };
        }
        self.memo.insert(mask, sum.clone());
        sum
    }
}

/// Pfaffian by expansion, over any commutative ring.
pub fn pf_expand<R: Ring>(m: &SkewMatrix<R>) -> Result<R> {
    if m.order() % 2 == 1 {
        return Err(Error::OddOrder(m.order()));
    }
    Ok(PfaffianExpander::new(m)?.full())
}
