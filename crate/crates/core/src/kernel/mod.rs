//! Path-count kernels `Q_V`, `Q_V*` and the matrices `A`, `B`, `A(k,t)`.

mod matrix;
pub mod props;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::arith::{BivariatePolynomial, Ring};
use crate::error::{Error, Result};
use crate::lattice::{build_ds_graph, PathGraph, VertexId};
use crate::sequences::schroder;

pub use matrix::{EntryCodec, IndexSet, SkewMatrix};

/// Path counts from each of `starts` to every target of `g`.
pub fn path_count_rows(g: &PathGraph, starts: &[VertexId]) -> Vec<Vec<BigInt>> {
    starts.iter().map(|s| g.path_counts_from(*s)).collect()
}

/// `Σ_{k<l} det [[P(a,v_k), P(a,v_l)], [P(b,v_k), P(b,v_l)]]` from two count rows.
pub fn q_v_rows(ra: &[BigInt], rb: &[BigInt]) -> BigInt {
    let mut sum = BigInt::zero();
    let (mut pa, mut pb) = (BigInt::zero(), BigInt::zero());
    for (x, y) in ra.iter().zip(rb) {
        sum += y * &pa - x * &pb;
        pa += x;
        pb += y;
    }
    sum
}

/// `Σ_l det [[P(a,v_{2l-1}), P(a,v_{2l})], [P(b,v_{2l-1}), P(b,v_{2l})]]`.
pub fn q_vstar_rows(ra: &[BigInt], rb: &[BigInt]) -> BigInt {
    ra.chunks(2)
        .zip(rb.chunks(2))
        .filter(|(x, _)| x.len() == 2)
        .map(|(x, y)| &x[0] * &y[1] - &x[1] * &y[0])
        .sum()
}

fn source_pair(g: &PathGraph, i: usize, j: usize) -> Result<(VertexId, VertexId)> {
    Ok((g.source(i)?, g.source(j)?))
}

/// `Q_V(u_i, u_j)` on `g`; antisymmetric in `(i, j)`.
pub fn q_v(g: &PathGraph, i: usize, j: usize) -> Result<BigInt> {
    let (a, b) = source_pair(g, i, j)?;
    Ok(q_v_between(g, a, b))
}

/// `Q_V*(u_i, u_j)` on `g`; antisymmetric in `(i, j)`.
pub fn q_vstar(g: &PathGraph, i: usize, j: usize) -> Result<BigInt> {
    let (a, b) = source_pair(g, i, j)?;
    Ok(q_vstar_between(g, a, b))
}

pub fn q_v_between(g: &PathGraph, a: VertexId, b: VertexId) -> BigInt {
    q_v_rows(&g.path_counts_from(a), &g.path_counts_from(b))
}

pub fn q_vstar_between(g: &PathGraph, a: VertexId, b: VertexId) -> BigInt {
    q_vstar_rows(&g.path_counts_from(a), &g.path_counts_from(b))
}

/// Total number of paths from each `u_i` to the target set: the column
/// of the phantom source `u_{n+1}`.
pub fn phantom_column(g: &PathGraph) -> Vec<BigInt> {
    g.sources()
        .iter()
        .map(|s| g.path_counts_from(*s).into_iter().sum())
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    /// The three-term recurrence with boundary row `2` and diagonal correction `±2`.
    Recurrence,
    /// `a_{i,j} = 2 Σ_l (-1)^{l-1} s_{i-l, j-l-1}`.
    SchroderSum,
    /// `a_{i,j} = Q_V*(u_i, u_j)` on the half graph of order `n + 1`.
    Graph,
}

impl Method {
    pub const ALL: [Method; 3] = [Method::Recurrence, Method::SchroderSum, Method::Graph];
}

fn check_order(n: usize) -> Result<()> {
    if n < 1 {
        return Err(Error::Domain("matrix order must be >= 1".into()));
    }
    Ok(())
}

/// The recurrence shared by `A` and `A(k,t)`: first row `first`, and the
/// entry just above the diagonal in row `i` corrected by `(-1)^{i-1} corr`.
fn recurrence<R: Ring>(n: usize, first: &R, corr: &R) -> SkewMatrix<R> {
    let mut m: SkewMatrix<R> = SkewMatrix::zeros(n);
    for i in 1..=n {
        for j in i + 1..=n {
            let v = if i == 1 {
                first.clone()
            } else if j == i + 1 {
                let c = if i % 2 == 0 {
                    corr.negated()
                } else {
                    corr.clone()
                };
                m.upper(i - 1, j).plus(m.upper(i - 1, j - 1)).plus(&c)
            } else {
                m.upper(i - 1, j)
                    .plus(m.upper(i, j - 1))
                    .plus(m.upper(i - 1, j - 1))
            };
            m.set(i, j, v);
        }
    }
    m
}

/// The matrix `A` of order `n`, by the chosen construction.
pub fn build_a(n: usize, method: Method) -> Result<SkewMatrix<BigInt>> {
    check_order(n)?;
    match method {
        Method::Recurrence => Ok(recurrence(n, &BigInt::from(2), &BigInt::from(2))),
        Method::SchroderSum => SkewMatrix::try_from_fn(n, |i, j| {
            let mut sum = BigInt::zero();
            for l in 1..=i {
                let s = schroder((i - l) as i64, (j - l - 1) as i64)?;
                if l % 2 == 1 {
                    sum += s;
                } else {
                    sum -= s;
                }
            }
            Ok(sum * 2)
        }),
        Method::Graph => {
            let g = build_ds_graph(n + 1)?;
            let rows = path_count_rows(&g, &g.sources()[..n]);
            Ok(SkewMatrix::from_fn(n, |i, j| {
                q_vstar_rows(&rows[i - 1], &rows[j - 1])
            }))
        }
    }
}

/// `A` built all three ways; fails with the first differing entry.
pub fn build_a_checked(n: usize) -> Result<SkewMatrix<BigInt>> {
    let reference = build_a(n, Method::Recurrence)?;
    for method in [Method::SchroderSum, Method::Graph] {
        let other = build_a(n, method)?;
        if let Some((i, j)) = reference.first_difference(&other) {
            return Err(Error::ConstructionMismatch {
                i,
                j,
                left: reference.upper(i, j).to_string(),
                right: other.upper(i, j).to_string(),
            });
        }
    }
    Ok(reference)
}

/// `B = [Q_V(u_i, u_j)]` on the half graph of order `n`.
pub fn build_b(n: usize) -> Result<SkewMatrix<BigInt>> {
    check_order(n)?;
    let g = build_ds_graph(n)?;
    let rows = path_count_rows(&g, g.sources());
    Ok(SkewMatrix::from_fn(n, |i, j| {
        q_v_rows(&rows[i - 1], &rows[j - 1])
    }))
}

/// `A(k,t)`: first row `t`, diagonal correction `k (-1)^{i-1}`.
pub fn build_a_kt(n: usize) -> Result<SkewMatrix<BivariatePolynomial>> {
    check_order(n)?;
    Ok(recurrence(
        n,
        &BivariatePolynomial::t(),
        &BivariatePolynomial::k(),
    ))
}

/// `A(k0, t0)` over the integers.
pub fn build_a_at(n: usize, k0: i64, t0: i64) -> Result<SkewMatrix<BigInt>> {
    check_order(n)?;
    Ok(recurrence(n, &BigInt::from(t0), &BigInt::from(k0)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(v: i64) -> BigInt {
        BigInt::from(v)
    }

    use crate::reference::MATRIX_B;

    #[test]
    fn matrix_b_order_eight() {
        let m = build_b(8).unwrap();
        for i in 1..=8 {
            for j in 1..=8 {
                assert_eq!(m.entry(i, j), b(MATRIX_B[i - 1][j - 1]), "({i},{j})");
            }
        }
    }

    #[test]
    fn q_kernels_on_sources() {
        let g = build_ds_graph(8).unwrap();
        assert_eq!(q_v(&g, 1, 2).unwrap(), b(6));
        assert_eq!(q_v(&g, 4, 8).unwrap(), b(16830));
        assert_eq!(q_v(&g, 3, 3).unwrap(), b(0));
        assert_eq!(q_v(&g, 2, 1).unwrap(), b(-6));
        assert!(q_v(&g, 0, 1).is_err());
        assert!(q_vstar(&g, 1, 9).is_err());
        for j in 2..=8i64 {
            assert_eq!(q_vstar(&g, 1, j as usize).unwrap(), b(2));
            if j > 2 {
                assert_eq!(q_vstar(&g, 2, j as usize).unwrap(), b(4 * j - 10));
            }
            if j > 3 {
                assert_eq!(
                    q_vstar(&g, 3, j as usize).unwrap(),
                    b(2 * (2 * j * j - 10 * j + 13))
                );
            }
        }
    }

    #[test]
    fn small_entries() {
        let a = build_a(6, Method::Recurrence).unwrap();
        assert_eq!(a.upper(1, 2), &b(2));
        assert_eq!(a.upper(2, 4), &b(6));
        assert_eq!(a.upper(4, 6), &b(110));
        assert_eq!(a.upper(3, 4), &b(10));
        assert_eq!(a.entry(4, 3), b(-10));
        let b8 = build_b(8).unwrap();
        assert_eq!(b8.upper(1, 3), &b(18));
        assert_eq!(b8.entry(5, 5), b(0));
    }

    #[test]
    fn three_constructions_agree() {
        for n in 1..=12 {
            build_a_checked(n).unwrap();
        }
        assert!(build_a(0, Method::Graph).is_err());
    }

    #[test]
    fn graph_entries_are_stable() {
        for n in 2..=10 {
            let small = build_ds_graph(n).unwrap();
            let big = build_ds_graph(n + 2).unwrap();
            for i in 1..=n {
                for j in i + 1..=n {
                    assert_eq!(q_vstar(&small, i, j).unwrap(), q_vstar(&big, i, j).unwrap());
                }
            }
        }
    }

    #[test]
    fn parametrized_matrix() {
        let m = build_a_kt(6).unwrap();
        assert_eq!(m.upper(1, 5), &BivariatePolynomial::t());
        assert_eq!(m.upper(2, 3), &"2t - k".parse().unwrap());
        assert_eq!(
            build_a_kt(2).unwrap().upper(1, 2),
            &BivariatePolynomial::t()
        );
        let a = build_a(6, Method::Recurrence).unwrap();
        let two = b(2);
        assert_eq!(m.map(|p| p.eval(&two, &two)), a);
        assert_eq!(build_a_at(6, 2, 2).unwrap(), a);
        assert_eq!(
            build_a_at(5, 3, 7).unwrap(),
            build_a_kt(5).unwrap().map(|p| p.eval_i64(3, 7))
        );
    }

    #[test]
    fn phantom_totals() {
        let g = build_ds_graph(3).unwrap();
        assert_eq!(phantom_column(&g), vec![b(2), b(4), b(10)]);
    }

    #[test]
    fn row_formulas_agree_with_graph() {
        let rows = [vec![b(1), b(2), b(0)], vec![b(3), b(1), b(4)]];
        // k < l: (1*1 - 2*3) + (1*4 - 0*3) + (2*4 - 0*1)
        assert_eq!(q_v_rows(&rows[0], &rows[1]), b(-5 + 4 + 8));
        assert_eq!(q_vstar_rows(&rows[0], &rows[1]), b(1 - 6));
    }
}
