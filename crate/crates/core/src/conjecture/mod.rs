//! The sequences `o_n` and `o_n(k,t)`: extraction from leading Pfaffians,
//! a persistent results cache, and comparison with published tables.

mod cache;
mod report;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::arith::BivariatePolynomial;
use crate::error::{Error, Result};
use crate::kernel::{build_a, build_a_kt, IndexSet, Method};
use crate::pfaffian::{pf_eliminate, pf_expand, pf_homogeneous_linear};
use crate::reference::{O_INT, O_POLY};

pub use cache::{Cache, CACHE_VERSION};
pub use report::{verify_tables, verify_tables_corrupted, Check, Report};

/// Where a recorded term came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Provenance {
    /// Computed here and equal to the published value.
    Verified,
    /// Computed here, beyond the published range.
    Extended,
    /// Computed here and different from the published value.
    Disagrees,
}

/// `o_0, ..., o_N` with `2^n o_{n-1} o_n = pf(A_[2n])`.
#[derive(Debug, Clone, PartialEq)]
pub struct OSequenceInt {
    pub values: Vec<BigInt>,
    pub provenance: Vec<Provenance>,
}

/// `o_0(k,t), ..., o_N(k,t)` with `t o_{n-1} o_n = pf(A_[2n](k,t))`.
#[derive(Debug, Clone, PartialEq)]
pub struct OSequencePoly {
    pub values: Vec<BivariatePolynomial>,
    pub provenance: Vec<Provenance>,
}

impl OSequenceInt {
    pub fn max_n(&self) -> usize {
        self.values.len() - 1
    }
}

impl OSequencePoly {
    pub fn max_n(&self) -> usize {
        self.values.len() - 1
    }
}

fn int_provenance(n: usize, v: &BigInt) -> Provenance {
    match O_INT.get(n) {
        Some(p) if *v == BigInt::from(*p) => Provenance::Verified,
        Some(_) => Provenance::Disagrees,
        None => Provenance::Extended,
    }
}

fn poly_provenance(n: usize, v: &BivariatePolynomial) -> Provenance {
    match O_POLY.get(n) {
        Some(p) if p.parse::<BivariatePolynomial>().as_ref() == Ok(v) => Provenance::Verified,
        Some(_) => Provenance::Disagrees,
        None => Provenance::Extended,
    }
}

fn check_max(max_n: usize) -> Result<()> {
    if max_n < 1 {
        return Err(Error::Domain("max_n must be >= 1".into()));
    }
    Ok(())
}

/// Pfaffian engine for polynomial matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PolyEngine {
    Expand,
    /// Evaluation at integer points plus interpolation (entries of `A(k,t)`
    /// are linear forms, so the Pfaffian is homogeneous).
    Interpolate,
}

/// `o_n = pf(A_[2n]) / (2^n o_{n-1})` for `n <= max_n`, exact division
/// enforced at every step.
pub fn extract_o_int(max_n: usize) -> Result<OSequenceInt> {
    extract_o_int_cached(max_n, None, |_, _| {})
}

/// As [`extract_o_int`], reusing and extending `cache`; `progress` sees
/// each term as it becomes known.
pub fn extract_o_int_cached(
    max_n: usize,
    mut cache: Option<&mut Cache>,
    mut progress: impl FnMut(usize, &BigInt),
) -> Result<OSequenceInt> {
    check_max(max_n)?;
    let a = build_a(2 * max_n, Method::Recurrence)?;
    let mut values = vec![BigInt::one(), BigInt::one()];
    progress(0, &values[0]);
    progress(1, &values[1]);
    for n in 2..=max_n {
        if let Some(v) = cache.as_deref().and_then(|c| c.int(n)) {
            values.push(v.clone());
            progress(n, v);
            continue;
        }
        let pf = pf_eliminate(&a.minor(&IndexSet::full(2 * n))?)?;
        let divisor = (BigInt::one() << n) * &values[n - 1];
        let (q, r) = pf.div_rem(&divisor);
        if !r.is_zero() {
            return Err(Error::ConjectureViolated {
                n,
                pfaffian: pf.to_string(),
                divisor: divisor.to_string(),
            });
        }
        if let Some(c) = cache.as_deref_mut() {
            c.set_int(n, q.clone());
        }
        progress(n, &q);
        values.push(q);
    }
    let provenance = values
        .iter()
        .enumerate()
        .map(|(n, v)| int_provenance(n, v))
        .collect();
    Ok(OSequenceInt { values, provenance })
}

/// `pf(A_[2n](k,t))` with the chosen engine.
pub fn leading_pf_poly(n: usize, engine: PolyEngine) -> Result<BivariatePolynomial> {
    let m = build_a_kt(2 * n)?;
    match engine {
        PolyEngine::Expand => pf_expand(&m),
        PolyEngine::Interpolate => pf_homogeneous_linear(&m),
    }
}

/// `o_n(k,t) = pf(A_[2n](k,t)) / (t o_{n-1}(k,t))` for `n <= max_n`.
pub fn extract_o_poly(max_n: usize, engine: PolyEngine) -> Result<OSequencePoly> {
    extract_o_poly_cached(max_n, engine, None, |_, _| {})
}

pub fn extract_o_poly_cached(
    max_n: usize,
    engine: PolyEngine,
    mut cache: Option<&mut Cache>,
    mut progress: impl FnMut(usize, &BivariatePolynomial),
) -> Result<OSequencePoly> {
    check_max(max_n)?;
    let one = BivariatePolynomial::constant(1);
    let mut values = vec![one.clone(), one];
    progress(0, &values[0]);
    progress(1, &values[1]);
    for n in 2..=max_n {
        if let Some(v) = cache.as_deref().and_then(|c| c.poly(n)) {
            values.push(v.clone());
            progress(n, v);
            continue;
        }
        let pf = leading_pf_poly(n, engine)?;
        let divisor = &BivariatePolynomial::t() * &values[n - 1];
        let q = pf
            .div_exact(&divisor)
            .map_err(|_| Error::ConjectureViolated {
                n,
                pfaffian: pf.to_string(),
                divisor: divisor.to_string(),
            })?;
        if let Some(c) = cache.as_deref_mut() {
            c.set_poly(n, q.clone());
        }
        progress(n, &q);
        values.push(q);
    }
    let provenance = values
        .iter()
        .enumerate()
        .map(|(n, v)| poly_provenance(n, v))
        .collect();
    Ok(OSequencePoly { values, provenance })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{build_ds_graph, count_families, EndpointMode};

    fn p(s: &str) -> BivariatePolynomial {
        s.parse().unwrap()
    }

    #[test]
    fn integer_terms() {
        let o = extract_o_int(8).unwrap();
        for (n, want) in O_INT.iter().enumerate() {
            assert_eq!(o.values[n], BigInt::from(*want), "o_{n}");
            assert_eq!(o.provenance[n], Provenance::Verified);
        }
        assert_eq!(extract_o_int(1).unwrap().values.len(), 2);
        assert!(extract_o_int(0).is_err());
        let o = extract_o_int(10).unwrap();
        assert_eq!(o.provenance[10], Provenance::Extended);
    }

    #[test]
    fn polynomial_terms() {
        let o = extract_o_poly(5, PolyEngine::Expand).unwrap();
        assert_eq!(o.values[2], p("-k + 4t"));
        assert_eq!(o.values[5], p("149k^2 - 1584kt + 4096t^2"));
        let fast = extract_o_poly(8, PolyEngine::Interpolate).unwrap();
        for (n, want) in O_POLY.iter().enumerate() {
            assert_eq!(fast.values[n], p(want), "o_{n}(k,t)");
        }
        assert_eq!(&fast.values[..=5], &o.values[..]);
    }

    #[test]
    fn specialization_to_two() {
        let poly = extract_o_poly(5, PolyEngine::Expand).unwrap();
        let int = extract_o_int(5).unwrap();
        for n in 1..=5 {
            let lhs = poly.values[n].eval_i64(2, 2) * poly.values[n - 1].eval_i64(2, 2) * 2;
            let rhs = (BigInt::one() << n) * &int.values[n - 1] * &int.values[n];
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn matches_path_families() {
        let o = extract_o_int(3).unwrap();
        for n in 1..=3 {
            let g = build_ds_graph(2 * n).unwrap();
            let c = count_families(&g, &IndexSet::full(2 * n), None, EndpointMode::Paired).unwrap();
            assert_eq!(
                BigInt::from(c),
                (BigInt::one() << n) * &o.values[n - 1] * &o.values[n]
            );
        }
    }

    #[test]
    fn ratios_of_consecutive_terms() {
        use crate::arith::RationalFunction;
        use crate::pfaffian::pf_decompose;
        let o = extract_o_poly(6, PolyEngine::Expand).unwrap();
        let d = pf_decompose(&build_a_kt(12).unwrap()).unwrap();
        for n in 2..=6 {
            let want = RationalFunction::new(o.values[n].clone(), o.values[n - 2].clone()).unwrap();
            assert!(d.t_at(n).unwrap().equivalent(&want), "t_{n}");
        }
    }
}
