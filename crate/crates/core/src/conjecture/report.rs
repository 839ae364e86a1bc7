use std::fmt;

use num_bigint::BigInt;
use serde_json::{json, Value};

use super::{extract_o_int, leading_pf_poly, PolyEngine};
use crate::arith::{BivariatePolynomial, RationalFunction};
use crate::error::Result;
use crate::kernel::{build_b, phantom_column, IndexSet};
use crate::lattice::{build_ad_graph, build_ds_graph};
use crate::pfaffian::{lgv_det, pf_minor, OddMode};
use crate::reference::{DIAGONAL_COUNTS, MATRIX_B, O_INT, O_POLY, T_LIST};
use crate::sequences::aztec_total;

/// One comparison of a computed value with its expected value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub expected: String,
    pub actual: String,
}

impl Check {
    pub fn new(name: impl Into<String>, expected: impl ToString, actual: impl ToString) -> Self {
        let (expected, actual) = (expected.to_string(), actual.to_string());
        Check {
            name: name.into(),
            passed: expected == actual,
            expected,
            actual,
        }
    }

    /// A check with its own notion of agreement.
    pub fn with_verdict(
        name: impl Into<String>,
        passed: bool,
        expected: impl ToString,
        actual: impl ToString,
    ) -> Self {
        Check {
            name: name.into(),
            passed,
            expected: expected.to_string(),
            actual: actual.to_string(),
        }
    }

    /// Passes iff `r` is `Ok`; the `Ok` value is a short description.
    pub fn from_result(name: impl Into<String>, r: Result<String>) -> Self {
        match r {
            Ok(msg) => Check::with_verdict(name, true, "ok", msg),
            Err(e) => Check::with_verdict(name, false, "ok", e),
        }
    }

    pub fn to_json(&self) -> Value {
        json!({
            "name": self.name,
            "passed": self.passed,
            "expected": self.expected,
            "actual": self.actual,
        })
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.passed {
            write!(f, "PASS {}: {}", self.name, self.actual)
        } else {
            write!(
                f,
                "FAIL {}: expected {}, got {}",
                self.name, self.expected, self.actual
            )
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn extend(&mut self, other: Report) {
        self.checks.extend(other.checks);
    }

    pub fn passed(&self) -> usize {
        self.checks.iter().filter(|c| c.passed).count()
    }

    pub fn failed(&self) -> usize {
        self.checks.len() - self.passed()
    }

    pub fn all_passed(&self) -> bool {
        self.failed() == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "total": self.checks.len(),
            "passed": self.passed(),
            "failed": self.failed(),
            "checks": self.checks.iter().map(Check::to_json).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            writeln!(f, "{c}")?;
        }
        write!(
            f,
            "{} checks, {} passed, {} failed",
            self.checks.len(),
            self.passed(),
            self.failed()
        )
    }
}

fn err_string<T>(r: Result<T>) -> std::result::Result<T, String> {
    r.map_err(|e| e.to_string())
}

fn check_matrix_b(corrupt: Option<(usize, usize)>) -> Check {
    let m = match err_string(build_b(8)) {
        Ok(m) => m,
        Err(e) => return Check::with_verdict("matrix B(8)", false, "28 entries", e),
    };
    let mut bad = Vec::new();
    for i in 1..=8 {
        for j in i + 1..=8 {
            let mut got = m.upper(i, j).clone();
            if corrupt == Some((i, j)) {
                got += 1;
            }
            if got != BigInt::from(MATRIX_B[i - 1][j - 1]) {
                bad.push(format!(
                    "b_{i},{j} = {got} (want {})",
                    MATRIX_B[i - 1][j - 1]
                ));
            }
        }
    }
    if bad.is_empty() {
        Check::with_verdict("matrix B(8)", true, "28 entries", "28 entries match")
    } else {
        Check::with_verdict("matrix B(8)", false, "28 entries", bad.join("; "))
    }
}

fn diagonal_count(n: usize) -> Result<BigInt> {
    let g = build_ds_graph(n)?;
    let odd = OddMode::Phantom(phantom_column(&g));
    pf_minor(&build_b(n)?, &IndexSet::full(n), &odd)
}

/// Every published value this library reproduces: the matrix `B(8)`, the
/// diagonally symmetric and full Aztec counts for `n <= 7`, `o_0..o_8`,
/// `o_0(k,t)..o_8(k,t)` and `t_1..t_8`.
pub fn verify_tables() -> Report {
    verify_tables_corrupted(None)
}

/// [`verify_tables`] with the computed entry `(i, j)` of `B(8)` perturbed
/// by one before comparison.
#[doc(hidden)]
pub fn verify_tables_corrupted(corrupt: Option<(usize, usize)>) -> Report {
    let mut report = Report::default();
    report.push(check_matrix_b(corrupt));

    for (n0, want) in DIAGONAL_COUNTS.iter().enumerate() {
        let n = n0 + 1;
        let got = err_string(diagonal_count(n)).map_or_else(|e| e, |v| v.to_string());
        report.push(Check::new(format!("diagonal count n={n}"), want, got));
    }

    for n in 1..=7 {
        let want = err_string(aztec_total(n as i64)).map_or_else(|e| e, |v| v.to_string());
        let got = err_string(build_ad_graph(n).and_then(|g| lgv_det(&g)))
            .map_or_else(|e| e, |v| v.to_string());
        report.push(Check::new(format!("aztec count n={n}"), want, got));
    }

    match extract_o_int(8) {
        Ok(o) => {
            for (n, want) in O_INT.iter().enumerate() {
                report.push(Check::new(format!("o_{n}"), want, &o.values[n]));
            }
        }
        Err(e) => report.push(Check::with_verdict("o_0..o_8", false, "exact quotients", e)),
    }

    let leading: std::result::Result<Vec<BivariatePolynomial>, String> = (1..=8)
        .map(|n| err_string(leading_pf_poly(n, PolyEngine::Interpolate)))
        .collect();
    let leading = match leading {
        Ok(v) => v,
        Err(e) => {
            report.push(Check::with_verdict("pf(A_[2n](k,t))", false, "n <= 8", e));
            return report;
        }
    };

    let one = BivariatePolynomial::constant(1);
    let mut o = vec![one.clone(), one];
    for n in 2..=8 {
        let divisor = &BivariatePolynomial::t() * &o[n - 1];
        match leading[n - 1].div_exact(&divisor) {
            Ok(q) => o.push(q),
            Err(_) => {
                report.push(Check::with_verdict(
                    format!("o_{n}(k,t)"),
                    false,
                    O_POLY[n],
                    format!("{} not divisible by {divisor}", leading[n - 1]),
                ));
                break;
            }
        }
    }
    for (n, got) in o.iter().enumerate() {
        let want: BivariatePolynomial = O_POLY[n].parse().expect("reference polynomial");
        report.push(Check::with_verdict(
            format!("o_{n}(k,t)"),
            *got == want,
            &want,
            got,
        ));
    }

    let mut prev = BivariatePolynomial::constant(1);
    for (l0, (num, den)) in T_LIST.iter().enumerate() {
        let l = l0 + 1;
        let want = RationalFunction::new(
            num.parse().expect("reference"),
            den.parse().expect("reference"),
        )
        .expect("nonzero reference denominator");
        let got = RationalFunction::new(leading[l0].clone(), prev.clone());
        prev = leading[l0].clone();
        match got {
            Ok(got) => report.push(Check::with_verdict(
                format!("t_{l}"),
                got.equivalent(&want),
                &want,
                got.normalize(),
            )),
            Err(e) => report.push(Check::with_verdict(format!("t_{l}"), false, &want, e)),
        }
    }
    report
}
