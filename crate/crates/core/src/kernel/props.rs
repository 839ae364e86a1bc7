//! Identities satisfied by the kernels, as executable checks.
//!
//! Each check returns the number of instances it verified, or
//! [`Error::PropertyViolated`] describing the first failure.

use num_bigint::BigInt;

use super::{build_a, q_vstar_rows, Method};
use crate::error::{Error, Result};
use crate::lattice::{build_ds_graph, build_dsbar_graph, LatticeVertex};

fn expect_eq(what: impl FnOnce() -> String, left: &BigInt, right: &BigInt) -> Result<()> {
    if left == right {
        Ok(())
    } else {
        Err(Error::PropertyViolated(format!(
            "{}: {left} != {right}",
            what()
        )))
    }
}

/// `Q_V*(a, b) = Q_V*(a', b')` for two points on one lattice line and their
/// copies one line further down, on the reduced half graph of order `m`.
pub fn check_translation(m: usize) -> Result<usize> {
    let g = build_dsbar_graph(m)?;
    let rows: Vec<Vec<BigInt>> = (0..g.vertex_count())
        .map(|i| g.path_counts_from(crate::lattice::VertexId(i)))
        .collect();
    let row = |v: LatticeVertex| g.id_of(v).ok().map(|id| &rows[id.0]);
    let mut checked = 0;
    for (ia, a) in g.vertices().iter().enumerate() {
        for b in &g.vertices()[ia + 1..] {
            if a.a + a.b != b.a + b.b {
                continue;
            }
            let (a2, b2) = (
                LatticeVertex::new(a.a, a.b - 2),
                LatticeVertex::new(b.a, b.b - 2),
            );
            let (Some(ra2), Some(rb2)) = (row(a2), row(b2)) else {
                continue;
            };
            let (ra, rb) = (row(*a).expect("vertex"), row(*b).expect("vertex"));
            expect_eq(
                || format!("m = {m}, translation of {a:?}, {b:?}"),
                &q_vstar_rows(ra, rb),
                &q_vstar_rows(ra2, rb2),
            )?;
            checked += 1;
        }
    }
    Ok(checked)
}

fn x_kernel(m: usize) -> Result<impl Fn(usize, usize) -> BigInt> {
    let g = build_dsbar_graph(m)?;
    let rows: Vec<Vec<BigInt>> = g.xpoints().iter().map(|x| g.path_counts_from(*x)).collect();
    Ok(move |i: usize, j: usize| q_vstar_rows(&rows[i - 1], &rows[j - 1]))
}

/// The closed forms for the first two `x` rows and the three-term identity
/// that links them.
pub fn check_aux_closed_forms(m: usize) -> Result<usize> {
    let q = x_kernel(m)?;
    let mut checked = 0;
    for j in 2..=m {
        let jj = j as i64;
        expect_eq(
            || format!("Q(x_1, x_{j})"),
            &q(1, j),
            &BigInt::from(2 * (jj - 1)),
        )?;
        checked += 1;
        if j > 2 {
            expect_eq(
                || format!("Q(x_2, x_{j})"),
                &q(2, j),
                &BigInt::from(2 * (jj - 2) * (jj - 1)),
            )?;
            let rhs = q(2, j - 1) + q(1, j - 1) + q(1, j) - 2;
            expect_eq(|| format!("three-term identity at j = {j}"), &q(2, j), &rhs)?;
            checked += 2;
        }
    }
    Ok(checked)
}

/// `Q(x_i, x_j) = Q(x_{i-1}, x_{j-1}) + Q(x_i, x_{j-1}) + Q(x_{i-1}, x_j) + 2(-1)^{i-1}`
/// for `1 < i < j <= m`, where `Q(x_i, x_i) = 0` covers `j = i + 1`.
pub fn check_aux_recurrence(m: usize) -> Result<usize> {
    let q = x_kernel(m)?;
    let mut checked = 0;
    for i in 2..=m {
        for j in i + 1..=m {
            let sign = if i % 2 == 1 { 2 } else { -2 };
            let rhs = q(i - 1, j - 1) + q(i, j - 1) + q(i - 1, j) + sign;
            expect_eq(
                || format!("m = {m}, recurrence at ({i}, {j})"),
                &q(i, j),
                &rhs,
            )?;
            checked += 1;
        }
    }
    Ok(checked)
}

/// `|P(u_i, v)| = |P(x_{i-1}, v)| + |P(x_{i-2}, v)|` for every vertex `v`
/// other than `u_i`, on the half graph of order `n`.
pub fn check_partition(n: usize) -> Result<usize> {
    let g = build_ds_graph(n)?;
    let mut checked = 0;
    for i in 3..=n {
        let u = g.source(i)?;
        let from_u = g.path_counts_all(u);
        let a = g.path_counts_all(g.xpoint(i - 1)?);
        let b = g.path_counts_all(g.xpoint(i - 2)?);
        for v in 0..g.vertex_count() {
            if v != u.0 {
                expect_eq(
                    || format!("partition at u_{i}, vertex {v}"),
                    &from_u[v],
                    &(&a[v] + &b[v]),
                )?;
                checked += 1;
            }
        }
    }
    Ok(checked)
}

/// Graph entries of `A` agree on the half graphs of orders `n` and `n + 2`.
pub fn check_stability(n: usize) -> Result<usize> {
    let small = build_ds_graph(n)?;
    let big = build_ds_graph(n + 2)?;
    let rows_s: Vec<_> = small
        .sources()
        .iter()
        .map(|s| small.path_counts_from(*s))
        .collect();
    let rows_b: Vec<_> = big.sources()[..n]
        .iter()
        .map(|s| big.path_counts_from(*s))
        .collect();
    let mut checked = 0;
    for i in 1..=n {
        for j in i + 1..=n {
            expect_eq(
                || format!("stability at ({i}, {j}), order {n}"),
                &q_vstar_rows(&rows_s[i - 1], &rows_s[j - 1]),
                &q_vstar_rows(&rows_b[i - 1], &rows_b[j - 1]),
            )?;
            checked += 1;
        }
    }
    Ok(checked)
}

/// `a_{1,j} = 2`, `a_{2,j} = 4j - 10`, `a_{3,j} = 2(2j^2 - 10j + 13)` on the
/// graph construction of order `n`.
pub fn check_row_closed_forms(n: usize) -> Result<usize> {
    let a = build_a(n, Method::Graph)?;
    let mut checked = 0;
    for j in 2..=n {
        let jj = j as i64;
        let mut cases = vec![(1, 2)];
        if j > 2 {
            cases.push((2, 4 * jj - 10));
        }
        if j > 3 {
            cases.push((3, 2 * (2 * jj * jj - 10 * jj + 13)));
        }
        for (i, v) in cases {
            expect_eq(|| format!("a_{{{i},{j}}}"), a.upper(i, j), &BigInt::from(v))?;
            checked += 1;
        }
    }
    Ok(checked)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduced_graph_identities() {
        for m in 1..=10 {
            assert!(check_translation(m).unwrap() > 0 || m < 3);
            check_aux_closed_forms(m).unwrap();
            check_aux_recurrence(m).unwrap();
        }
        assert_eq!(check_aux_recurrence(4).unwrap(), 3);
    }

    #[test]
    fn half_graph_identities() {
        for n in 1..=10 {
            check_partition(n).unwrap();
            check_stability(n).unwrap();
            check_row_closed_forms(n).unwrap();
        }
    }
}
