use std::collections::BTreeMap;

use serde_json::{json, Value};

use super::{PfaffianExpander, PfaffianRing};
use crate::arith::{BivariatePolynomial, RationalFunction};
use crate::error::{Error, Result};
use crate::kernel::{IndexSet, SkewMatrix};

/// `M = Rᵀ T R` with `T` block diagonal (blocks `[[0, t_l], [-t_l, 0]]`)
/// and `R` block upper triangular with `r_{i,j}` above the diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct PfaffianDecomposition {
    order: usize,
    t: Vec<RationalFunction>,
    r: BTreeMap<(usize, usize), RationalFunction>,
}

/// `d = ⌊(i + 1) / 2⌋`, the block of row `i`.
fn block(i: usize) -> usize {
    i.div_ceil(2)
}

fn leading_plus(d: usize, i: usize, j: usize) -> IndexSet {
    let mut labels: Vec<usize> = (1..=2 * d - 2).collect();
    labels.extend([i, j]);
    IndexSet::new(labels).expect("i, j lie past the leading block")
}

/// Decomposes an even-order skew matrix, with
/// `t_l = pf(M_[2l]) / pf(M_[2l-2])` and
/// `r_{i,j} = pf(M_{[2d-2] ∪ {i,j}}) / pf(M_[2d])`, `d = ⌊(i+1)/2⌋`.
pub fn pf_decompose<R: PfaffianRing>(m: &SkewMatrix<R>) -> Result<PfaffianDecomposition> {
    let order = m.order();
    if order % 2 == 1 {
        return Err(Error::OddOrder(order));
    }
    let n = order / 2;
    let mut ex = PfaffianExpander::new(m)?;
    let mut leading = vec![BivariatePolynomial::constant(1)];
    for l in 1..=n {
        let p = ex.minor(&IndexSet::full(2 * l))?.to_poly();
        if p.is_zero() {
            return Err(Error::SingularPrincipalMinor { order: 2 * l });
        }
        leading.push(p);
    }
    let t = (1..=n)
        .map(|l| RationalFunction::new(leading[l].clone(), leading[l - 1].clone()))
        .collect::<Result<Vec<_>>>()?;
    let mut r = BTreeMap::new();
    for i in 1..=order {
        let d = block(i);
        for j in i + 1..=order {
            let num = ex.minor(&leading_plus(d, i, j))?.to_poly();
            r.insert((i, j), RationalFunction::new(num, leading[d].clone())?);
        }
    }
    Ok(PfaffianDecomposition { order, t, r })
}

impl PfaffianDecomposition {
    pub fn order(&self) -> usize {
        self.order
    }

    /// `t_1, ..., t_n`.
    pub fn t(&self) -> &[RationalFunction] {
        &self.t
    }

    pub fn t_at(&self, l: usize) -> Result<&RationalFunction> {
        if l == 0 || l > self.t.len() {
            return Err(Error::Index {
                index: l,
                max: self.t.len(),
            });
        }
        Ok(&self.t[l - 1])
    }

    /// `r_{i,j}` for `i < j`.
    pub fn r(&self, i: usize, j: usize) -> Result<&RationalFunction> {
        self.r.get(&(i, j)).ok_or(Error::Index {
            index: i.max(j),
            max: self.order,
        })
    }

    /// Entry `(i, j)` of the matrix `R` (1-based).
    pub fn r_matrix(&self, i: usize, j: usize) -> RationalFunction {
        if j > i {
            self.r[&(i, j)].clone()
        } else if i.is_multiple_of(2) && j == i - 1 {
            RationalFunction::one().neg()
        } else {
            RationalFunction::zero()
        }
    }

    /// Entry `(i, j)` of `Rᵀ T R`.
    pub fn reconstruct(&self, i: usize, j: usize) -> RationalFunction {
        let mut sum = RationalFunction::zero();
        for (l0, t) in self.t.iter().enumerate() {
            let (a, b) = (2 * l0 + 1, 2 * l0 + 2);
            let (rai, rbj, rbi, raj) = (
                self.r_matrix(a, i),
                self.r_matrix(b, j),
                self.r_matrix(b, i),
                self.r_matrix(a, j),
            );
            if (rai.is_zero() || rbj.is_zero()) && (rbi.is_zero() || raj.is_zero()) {
                continue;
            }
            let inner = rai.mul(&rbj).sub(&rbi.mul(&raj));
            sum = sum.add(&t.mul(&inner));
        }
        sum
    }

    /// First upper entry where `Rᵀ T R` differs from `m`, if any.
    pub fn reconstruction_mismatch<R: PfaffianRing>(
        &self,
        m: &SkewMatrix<R>,
    ) -> Option<(usize, usize)> {
        for i in 1..=self.order {
            for j in i + 1..=self.order {
                let want = RationalFunction::from_poly(m.upper(i, j).to_poly());
                if !self.reconstruct(i, j).equivalent(&want) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// `pf(M_I)` from the product formulas, for `I = [2n]` or
    /// `I = [2d-2] ∪ {i, j}` with `d = ⌊(i+1)/2⌋`.
    pub fn pf_via(&self, idx: &IndexSet) -> Result<RationalFunction> {
        idx.check_within(self.order)?;
        let labels = idx.labels();
        let unsupported = || Error::UnsupportedIndexSet(idx.to_string());
        if labels.is_empty() {
            return Ok(RationalFunction::one());
        }
        let prefix = |d: usize| {
            self.t[..d]
                .iter()
                .fold(RationalFunction::one(), |acc, t| acc.mul(t))
        };
        let len = labels.len();
        if len.is_multiple_of(2) && labels.iter().enumerate().all(|(p, v)| *v == p + 1) {
            return Ok(prefix(len / 2));
        }
        if len < 2 {
            return Err(unsupported());
        }
        let (i, j) = (labels[len - 2], labels[len - 1]);
        let d = block(i);
        if leading_plus(d, i, j) != *idx {
            return Err(unsupported());
        }
        Ok(prefix(d).mul(self.r(i, j)?))
    }

    /// `{t: [...], r: [[i, j, ratfunc], ...]}`.
    pub fn to_json(&self) -> Value {
        json!({
            "t": self.t.iter().map(RationalFunction::to_json).collect::<Vec<_>>(),
            "r": self.r.iter().map(|((i, j), v)| json!([i, j, v.to_json()])).collect::<Vec<_>>(),
        })
    }
}

/// `pf(M_I)` through [`pf_decompose`] and the product formulas.
pub fn pf_via_decomposition<R: PfaffianRing>(
    m: &SkewMatrix<R>,
    idx: &IndexSet,
) -> Result<RationalFunction> {
    pf_decompose(m)?.pf_via(idx)
}
