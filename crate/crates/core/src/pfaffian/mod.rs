//! Exact Pfaffians: expansion, elimination, principal minors, LGV
//! determinants and the Pfaffian decomposition.

mod decompose;
mod eliminate;
mod expand;
mod interpolate;
mod matching;

use num_bigint::BigInt;

use crate::arith::BivariatePolynomial;
use crate::error::{Error, Result};
use crate::kernel::{EntryCodec, IndexSet, SkewMatrix};
use crate::lattice::PathGraph;

pub use decompose::{pf_decompose, pf_via_decomposition, PfaffianDecomposition};
pub use eliminate::{determinant, pf_eliminate};
pub use expand::{pf_expand, PfaffianExpander};
pub use interpolate::pf_homogeneous_linear;
pub use matching::{perfect_matchings, pf_by_matchings, PerfectMatching};

/// Rings with a preferred Pfaffian engine.
pub trait PfaffianRing: EntryCodec {
    fn pfaffian(m: &SkewMatrix<Self>) -> Result<Self>;
    fn to_poly(&self) -> BivariatePolynomial;
}

impl PfaffianRing for BigInt {
    fn pfaffian(m: &SkewMatrix<Self>) -> Result<Self> {
        pf_eliminate(m)
    }
    fn to_poly(&self) -> BivariatePolynomial {
        BivariatePolynomial::constant(self.clone())
    }
}

impl PfaffianRing for BivariatePolynomial {
    fn pfaffian(m: &SkewMatrix<Self>) -> Result<Self> {
        pf_expand(m)
    }
    fn to_poly(&self) -> BivariatePolynomial {
        self.clone()
    }
}

/// `pf(M)` with the ring's default engine.
pub fn pf<R: PfaffianRing>(m: &SkewMatrix<R>) -> Result<R> {
    R::pfaffian(m)
}

/// What to do with an index set of odd size.
#[derive(Debug, Clone, PartialEq)]
pub enum OddMode<R> {
    /// The Pfaffian of an odd minor is taken to be zero.
    Zero,
    /// Border the minor by a phantom last row and column; `column[i - 1]`
    /// is its entry against index `i` of the full matrix.
    Phantom(Vec<R>),
}

/// `pf(M_I)`, with odd `|I|` handled per `odd`.
pub fn pf_minor<R: PfaffianRing>(m: &SkewMatrix<R>, idx: &IndexSet, odd: &OddMode<R>) -> Result<R> {
    let minor = m.minor(idx)?;
    if idx.len().is_multiple_of(2) {
        return pf(&minor);
    }
    match odd {
        OddMode::Zero => Ok(R::zero()),
        OddMode::Phantom(column) => {
            if column.len() < m.order() {
                return Err(Error::Index {
                    index: m.order(),
                    max: column.len(),
                });
            }
            let c: Vec<R> = idx.iter().map(|i| column[i - 1].clone()).collect();
            pf(&minor.bordered(&c)?)
        }
    }
}

/// Determinant of the source-to-target path-count matrix of `g`.
pub fn lgv_det(g: &PathGraph) -> Result<BigInt> {
    let rows: Vec<Vec<BigInt>> = g.sources().iter().map(|s| g.path_counts_from(*s)).collect();
    if rows.len() != g.targets().len() {
        return Err(Error::ShapeMismatch {
            rows: rows.len(),
            cols: g.targets().len(),
        });
    }
    determinant(&rows)
}

/// As [`lgv_det`], restricted to the labeled sources and targets.
pub fn lgv_det_subset(g: &PathGraph, sources: &IndexSet, targets: &IndexSet) -> Result<BigInt> {
    sources.check_within(g.sources().len())?;
    targets.check_within(g.targets().len())?;
    if sources.len() != targets.len() {
        return Err(Error::ShapeMismatch {
            rows: sources.len(),
            cols: targets.len(),
        });
    }
    let rows: Vec<Vec<BigInt>> = sources
        .iter()
        .map(|i| {
            let all = g.path_counts_from(g.sources()[i - 1]);
            targets.iter().map(|l| all[l - 1].clone()).collect()
        })
        .collect();
    determinant(&rows)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::RationalFunction;
    use crate::kernel::{build_a, build_a_kt, build_b, phantom_column, Method};
    use crate::lattice::{build_ad_graph, build_ds_graph};
    use crate::reference::{DIAGONAL_COUNTS, T_LIST};
    use crate::sequences::aztec_total;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    fn random_skew(rng: &mut ChaCha8Rng, order: usize) -> SkewMatrix<BigInt> {
        SkewMatrix::from_fn(order, |_, _| b(rng.gen_range(-20..=20)))
    }

    fn a(n: usize) -> SkewMatrix<BigInt> {
        build_a(n, Method::Recurrence).unwrap()
    }

    #[test]
    fn expansion_sign_rule_matches_definition() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for order in [2, 4, 6] {
            for _ in 0..20 {
                let m = random_skew(&mut rng, order);
                assert_eq!(pf_expand(&m).unwrap(), pf_by_matchings(&m).unwrap());
            }
            let kt = build_a_kt(order).unwrap();
            assert_eq!(pf_expand(&kt).unwrap(), pf_by_matchings(&kt).unwrap());
        }
        assert_eq!(perfect_matchings(6).len(), 15);
        assert!(perfect_matchings(3).is_empty());
    }

    #[test]
    fn engines_agree_on_random_matrices() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100 {
            let order = 2 * rng.gen_range(1..=5);
            let mut m = random_skew(&mut rng, order);
            if rng.gen_bool(0.3) {
                // sparse rows exercise the pivot search
                for j in 2..=order {
                    m.set(1, j, b(0));
                }
                m.set(1, order, b(rng.gen_range(-3..=3)));
            }
            let e = pf_expand(&m).unwrap();
            assert_eq!(e, pf_eliminate(&m).unwrap());
            assert_eq!(&e * &e, determinant(&m.to_dense()).unwrap());
        }
    }

    #[test]
    fn swapping_negates() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..30 {
            let m = random_skew(&mut rng, 8);
            let (x, y) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
            if x == y {
                continue;
            }
            assert_eq!(
                pf_eliminate(&m.swapped(x, y)).unwrap(),
                -pf_eliminate(&m).unwrap()
            );
        }
    }

    #[test]
    fn known_pfaffians() {
        let mut two = SkewMatrix::zeros(2);
        two.set(1, 2, b(5));
        assert_eq!(pf_expand(&two).unwrap(), b(5));
        assert_eq!(pf_expand(&a(4)).unwrap(), b(12));
        assert_eq!(pf_expand(&a(6)).unwrap(), b(312));
        assert_eq!(pf_eliminate(&a(8)).unwrap(), b(30992));
        assert_eq!(pf_eliminate(&build_b(4).unwrap()).unwrap(), b(132));
        assert_eq!(pf_eliminate(&SkewMatrix::zeros(4)).unwrap(), b(0));
        assert_eq!(pf_expand(&SkewMatrix::<BigInt>::zeros(0)).unwrap(), b(1));
        assert_eq!(pf_expand(&a(3)), Err(Error::OddOrder(3)));
        assert_eq!(pf_eliminate(&a(5)), Err(Error::OddOrder(5)));
    }

    #[test]
    fn engines_agree_on_kernel_matrices() {
        for n in (2..=12).step_by(2) {
            assert_eq!(pf_expand(&a(n)).unwrap(), pf_eliminate(&a(n)).unwrap());
            let bm = build_b(n).unwrap();
            assert_eq!(pf_expand(&bm).unwrap(), pf_eliminate(&bm).unwrap());
        }
    }

    #[test]
    fn minors() {
        let m = a(6);
        let idx: IndexSet = "1,2,4,6".parse().unwrap();
        assert_eq!(pf_minor(&m, &idx, &OddMode::Zero).unwrap(), b(204));
        assert_eq!(
            pf_minor(&m, &"1,2,3".parse().unwrap(), &OddMode::Zero).unwrap(),
            b(0)
        );
        let b3 = build_b(3).unwrap();
        let col = vec![b(2), b(4), b(10)];
        assert_eq!(
            pf_minor(&b3, &IndexSet::full(3), &OddMode::Phantom(col)).unwrap(),
            b(24)
        );
        assert!(pf_minor(&m, &"1,7".parse().unwrap(), &OddMode::Zero).is_err());
        let mut ex = PfaffianExpander::new(&m).unwrap();
        assert_eq!(ex.minor(&idx).unwrap(), b(204));
        assert_eq!(ex.minor(&IndexSet::empty()).unwrap(), b(1));
    }

    #[test]
    fn diagonal_counts_with_phantom() {
        for n in 1..=7 {
            let g = build_ds_graph(n).unwrap();
            let odd = OddMode::Phantom(phantom_column(&g));
            let got = pf_minor(&build_b(n).unwrap(), &IndexSet::full(n), &odd).unwrap();
            assert_eq!(got, b(DIAGONAL_COUNTS[n - 1] as i64), "n = {n}");
        }
    }

    #[test]
    fn lgv_on_the_diamond() {
        for n in 1..=8 {
            let g = build_ad_graph(n).unwrap();
            assert_eq!(lgv_det(&g).unwrap(), aztec_total(n as i64).unwrap());
        }
        let g = build_ds_graph(2).unwrap();
        assert!(matches!(lgv_det(&g), Err(Error::ShapeMismatch { .. })));
        let g = build_ad_graph(3).unwrap();
        assert_eq!(
            lgv_det_subset(&g, &"1,3".parse().unwrap(), &"1,3".parse().unwrap()).unwrap(),
            BigInt::from(
                crate::lattice::enumerate_tilings(
                    3,
                    crate::lattice::TilingFilter::All,
                    &"1,3".parse().unwrap()
                )
                .unwrap()
            )
        );
    }

    #[test]
    fn determinant_basics() {
        assert_eq!(determinant(&[]).unwrap(), b(1));
        let m = vec![vec![b(0), b(2)], vec![b(3), b(4)]];
        assert_eq!(determinant(&m).unwrap(), b(-6));
        let m = vec![
            vec![b(1), b(2), b(3)],
            vec![b(2), b(4), b(6)],
            vec![b(1), b(0), b(1)],
        ];
        assert_eq!(determinant(&m).unwrap(), b(0));
        assert!(determinant(&[vec![b(1), b(2)]]).is_err());
    }

    #[test]
    fn decomposition_of_integer_matrices() {
        for n in (2..=12).step_by(2) {
            for m in [a(n), build_b(n).unwrap()] {
                let d = pf_decompose(&m).unwrap();
                assert_eq!(d.reconstruction_mismatch(&m), None);
                assert!(d
                    .t_at(1)
                    .unwrap()
                    .equivalent(&RationalFunction::from_poly(m.upper(1, 2).to_poly())));
                for i in (1..n).step_by(2) {
                    assert!(d.r(i, i + 1).unwrap().equivalent(&RationalFunction::one()));
                }
            }
        }
        let d = pf_decompose(&a(6)).unwrap();
        let via = d.pf_via(&IndexSet::full(4)).unwrap();
        assert_eq!(
            via.to_polynomial().unwrap(),
            BivariatePolynomial::constant(12)
        );
        let via = d.pf_via(&"1,2,4,6".parse().unwrap()).unwrap();
        assert_eq!(
            via.to_polynomial().unwrap(),
            BivariatePolynomial::constant(204)
        );
        assert!(d.r(4, 6).unwrap().equivalent(&RationalFunction::from_poly(
            BivariatePolynomial::constant(17)
        )));
        assert!(matches!(
            d.pf_via(&"1,3,4,6".parse().unwrap()),
            Err(Error::UnsupportedIndexSet(_))
        ));
        assert!(matches!(
            pf_decompose(&SkewMatrix::<BigInt>::zeros(4)),
            Err(Error::SingularPrincipalMinor { order: 2 })
        ));
    }

    #[test]
    fn decomposition_of_parametrized_matrix() {
        let m = build_a_kt(8).unwrap();
        let d = pf_decompose(&m).unwrap();
        assert_eq!(d.reconstruction_mismatch(&m), None);
        for (l, (num, den)) in T_LIST.iter().take(4).enumerate() {
            let want = RationalFunction::new(num.parse().unwrap(), den.parse().unwrap()).unwrap();
            assert!(d.t_at(l + 1).unwrap().equivalent(&want), "t_{}", l + 1);
        }
        let via = pf_via_decomposition(&m, &IndexSet::full(2)).unwrap();
        assert_eq!(via.to_polynomial().unwrap(), BivariatePolynomial::t());
        // every supported minor agrees with direct expansion
        let mut ex = PfaffianExpander::new(&m).unwrap();
        for i in 1..=8usize {
            let dd = i.div_ceil(2);
            for j in i + 1..=8 {
                let mut labels: Vec<usize> = (1..=2 * dd - 2).collect();
                labels.extend([i, j]);
                let idx = IndexSet::new(labels).unwrap();
                let want = ex.minor(&idx).unwrap();
                assert!(d
                    .pf_via(&idx)
                    .unwrap()
                    .equivalent(&RationalFunction::from_poly(want)));
            }
        }
    }

    #[test]
    fn interpolation_matches_expansion() {
        for n in 1..=6 {
            let m = build_a_kt(2 * n).unwrap();
            assert_eq!(
                pf_homogeneous_linear(&m).unwrap(),
                pf_expand(&m).unwrap(),
                "order {}",
                2 * n
            );
        }
    }
}
