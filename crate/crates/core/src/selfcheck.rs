//! The full invariant battery at reduced sizes: published tables, the
//! kernel property suites, engine agreement and the exhaustive oracles.

use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::conjecture::{verify_tables_corrupted, Check, Report};
use crate::error::{Error, Result};
use crate::kernel::{build_a, build_a_checked, build_a_kt, props, IndexSet, Method, SkewMatrix};
use crate::lattice::{
    build_ad_graph, build_ds_graph, count_families, enumerate_tilings, half_paths_to_tiling,
    list_tilings, tiling_to_half_paths, EndpointMode, TilingFilter,
};
use crate::pfaffian::{determinant, lgv_det, pf_decompose, pf_eliminate, pf_expand};
use crate::reference::T_LIST;
use crate::sequences::{aztec_total, delannoy, delannoy_closed};

#[derive(Debug, Clone, Default)]
pub struct SelfcheckOptions {
    /// Perturb the computed entry `(i, j)` of `B(8)`; the run must then fail.
    pub corrupt_b_entry: Option<(usize, usize)>,
}

fn expect(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::PropertyViolated(what()))
    }
}

fn engines_agree() -> Result<String> {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let mut cases = 0;
    for order in (2..=8).step_by(2) {
        for _ in 0..10 {
            let m: SkewMatrix<BigInt> =
                SkewMatrix::from_fn(order, |_, _| BigInt::from(rng.gen_range(-9..=9)));
            let (a, b) = (pf_expand(&m)?, pf_eliminate(&m)?);
            expect(a == b, || {
                format!("expansion {a} != elimination {b} at order {order}")
            })?;
            let det = determinant(&m.to_dense())?;
            expect(&a * &a == det, || format!("pf^2 != det at order {order}"))?;
            cases += 1;
        }
    }
    Ok(format!("{cases} random matrices"))
}

fn off_diagonal_oracle(order: usize) -> Result<String> {
    let g = build_ds_graph(order)?;
    let a = build_a(order, Method::Recurrence)?;
    let mut subsets = 0;
    for idx in IndexSet::subsets(order).filter(|s| s.len() % 2 == 0) {
        let paths = count_families(&g, &idx, None, EndpointMode::Paired)?;
        let pf = pf_eliminate(&a.minor(&idx)?)?;
        expect(BigInt::from(paths) == pf, || {
            format!("I = {idx}: {paths} families, pf {pf}")
        })?;
        subsets += 1;
    }
    Ok(format!("{subsets} index sets"))
}

fn diagonal_paths_match_tilings(max_n: usize) -> Result<String> {
    for n in 1..=max_n {
        let g = build_ds_graph(n)?;
        let paths = count_families(&g, &IndexSet::full(n), None, EndpointMode::Free)?;
        let tilings = enumerate_tilings(n, TilingFilter::DiagSymmetric, &IndexSet::full(n))?;
        expect(paths == tilings, || {
            format!("n = {n}: {paths} families, {tilings} tilings")
        })?;
    }
    Ok(format!("n <= {max_n}"))
}

fn dominoes_match_paths(max_n: usize) -> Result<String> {
    for n in 1..=max_n {
        let full = IndexSet::full(n);
        let ad = build_ad_graph(n)?;
        let ds = build_ds_graph(n)?;
        let pairs = [
            (
                enumerate_tilings(n, TilingFilter::All, &full)?,
                count_families(&ad, &full, None, EndpointMode::Free)?,
            ),
            (
                enumerate_tilings(n, TilingFilter::DiagSymmetric, &full)?,
                count_families(&ds, &full, None, EndpointMode::Free)?,
            ),
            (
                enumerate_tilings(n, TilingFilter::OffDiagSymmetric, &full)?,
                count_families(&ds, &full, None, EndpointMode::Paired)?,
            ),
        ];
        for (class, (t, p)) in ["all", "diagonal", "off-diagonal"].iter().zip(pairs) {
            expect(t == p, || {
                format!("n = {n}, {class}: {t} tilings, {p} families")
            })?;
        }
    }
    Ok(format!("three classes, n <= {max_n}"))
}

fn half_bijection(max_n: usize) -> Result<String> {
    let mut total = 0;
    for n in 1..=max_n {
        let full = IndexSet::full(n);
        for t in list_tilings(n, TilingFilter::DiagSymmetric, &full)? {
            let paths = tiling_to_half_paths(&t)?;
            let back = half_paths_to_tiling(n, &full, &paths)?;
            expect(back == t, || format!("n = {n}: roundtrip changes a tiling"))?;
            total += 1;
        }
    }
    Ok(format!("{total} tilings"))
}

fn lgv(max_n: usize) -> Result<String> {
    for n in 1..=max_n {
        let d = lgv_det(&build_ad_graph(n)?)?;
        let want = aztec_total(n as i64)?;
        expect(d == want, || format!("n = {n}: det {d}, want {want}"))?;
    }
    Ok(format!("n <= {max_n}"))
}

fn delannoy_forms(max: i64) -> Result<String> {
    for p in 0..=max {
        for q in 0..=max {
            expect(delannoy(p, q) == delannoy_closed(p, q), || {
                format!("d({p},{q})")
            })?;
        }
    }
    Ok(format!("p, q <= {max}"))
}

fn decomposition_order_8() -> Vec<Check> {
    let m = match build_a_kt(8) {
        Ok(m) => m,
        Err(e) => {
            return vec![Check::with_verdict(
                "decomposition of A(k,t), order 8",
                false,
                "ok",
                e,
            )]
        }
    };
    let d = match pf_decompose(&m) {
        Ok(d) => d,
        Err(e) => {
            return vec![Check::with_verdict(
                "decomposition of A(k,t), order 8",
                false,
                "ok",
                e,
            )]
        }
    };
    let mut out = vec![Check::with_verdict(
        "reconstruction R^T T R = A(k,t), order 8",
        d.reconstruction_mismatch(&m).is_none(),
        "no mismatch",
        d.reconstruction_mismatch(&m)
            .map_or("no mismatch".to_string(), |(i, j)| {
                format!("mismatch at ({i}, {j})")
            }),
    )];
    for (l0, got) in d.t().iter().enumerate() {
        let (num, den) = T_LIST[l0];
        let want = crate::arith::RationalFunction::new(
            num.parse().expect("reference"),
            den.parse().expect("reference"),
        )
        .expect("reference");
        out.push(Check::with_verdict(
            format!("decomposition t_{}", l0 + 1),
            got.equivalent(&want),
            &want,
            got.normalize(),
        ));
    }
    out
}

/// Runs every check; the report lists each with its outcome.
pub fn run_selfcheck(opts: &SelfcheckOptions) -> Report {
    let mut report = verify_tables_corrupted(opts.corrupt_b_entry);
    let counted = |r: Result<usize>| r.map(|c| format!("{c} instances"));
    report.push(Check::from_result(
        "translation invariance, m <= 8",
        counted((3..=8).try_fold(0, |acc, m| Ok(acc + props::check_translation(m)?))),
    ));
    report.push(Check::from_result(
        "auxiliary closed forms, m <= 8",
        counted((1..=8).try_fold(0, |acc, m| Ok(acc + props::check_aux_closed_forms(m)?))),
    ));
    report.push(Check::from_result(
        "auxiliary recurrence, m <= 8",
        counted((1..=8).try_fold(0, |acc, m| Ok(acc + props::check_aux_recurrence(m)?))),
    ));
    report.push(Check::from_result(
        "path-count partition, n <= 8",
        counted((1..=8).try_fold(0, |acc, n| Ok(acc + props::check_partition(n)?))),
    ));
    report.push(Check::from_result(
        "kernel stability, n <= 8",
        counted((1..=8).try_fold(0, |acc, n| Ok(acc + props::check_stability(n)?))),
    ));
    report.push(Check::from_result(
        "row closed forms, n <= 10",
        counted(props::check_row_closed_forms(10)),
    ));
    report.push(Check::from_result(
        "three constructions of A agree, n <= 10",
        build_a_checked(10).map(|_| "recurrence, Schroder sum, graph".to_string()),
    ));
    report.push(Check::from_result(
        "pf expansion = elimination, pf^2 = det",
        engines_agree(),
    ));
    for order in [2, 4, 6] {
        report.push(Check::from_result(
            format!("paired families = pf(A_I), n = {order}"),
            off_diagonal_oracle(order),
        ));
    }
    report.push(Check::from_result(
        "free families = diagonal tilings",
        diagonal_paths_match_tilings(5),
    ));
    report.push(Check::from_result(
        "domino and path enumeration agree",
        dominoes_match_paths(3),
    ));
    report.push(Check::from_result(
        "half-path bijection roundtrip",
        half_bijection(4),
    ));
    report.push(Check::from_result("LGV determinant = 2^(n(n+1)/2)", lgv(6)));
    report.push(Check::from_result(
        "Delannoy recurrence = closed form",
        delannoy_forms(12),
    ));
    for c in decomposition_order_8() {
        report.push(c);
    }
    report
}
