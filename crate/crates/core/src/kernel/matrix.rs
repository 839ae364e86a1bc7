use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde_json::Value;

use crate::arith::{BivariatePolynomial, Ring};
use crate::error::{Error, Result};

/// Strictly increasing set of 1-based labels `i_1 < ... < i_r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IndexSet(Vec<usize>);

impl IndexSet {
    pub fn new(labels: Vec<usize>) -> Result<Self> {
        if labels.first() == Some(&0) {
            return Err(Error::Parse("index labels are 1-based".into()));
        }
        if labels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::Parse(format!(
                "index labels must be strictly increasing: {labels:?}"
            )));
        }
        Ok(IndexSet(labels))
    }

    /// `[n] = {1, ..., n}`.
    pub fn full(n: usize) -> Self {
        IndexSet((1..=n).collect())
    }

    pub fn empty() -> Self {
        IndexSet(Vec::new())
    }

    /// All subsets of `[n]`, in binary-counter order.
    pub fn subsets(n: usize) -> impl Iterator<Item = IndexSet> {
        (0u64..(1u64 << n))
            .map(move |mask| IndexSet((1..=n).filter(|i| mask >> (i - 1) & 1 == 1).collect()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn labels(&self) -> &[usize] {
        &self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn contains(&self, label: usize) -> bool {
        self.0.binary_search(&label).is_ok()
    }

    pub fn max(&self) -> Option<usize> {
        self.0.last().copied()
    }

    pub fn is_within(&self, n: usize) -> bool {
        self.max().is_none_or(|m| m <= n)
    }

    pub fn check_within(&self, n: usize) -> Result<()> {
        match self.max() {
            Some(m) if m > n => Err(Error::Index { index: m, max: n }),
            _ => Ok(()),
        }
    }
}

impl fmt::Display for IndexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// Parses comma-separated labels such as `1,2,4,6`; braces are optional.
impl FromStr for IndexSet {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let body = s.trim().trim_start_matches('{').trim_end_matches('}');
        if body.trim().is_empty() {
            return Ok(IndexSet::empty());
        }
        let labels = body
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad index label {p:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        IndexSet::new(labels)
    }
}

/// Skew-symmetric matrix over a ring. Only the strict upper triangle is
/// stored; indices are 1-based throughout.
#[derive(Debug, Clone, PartialEq)]
pub struct SkewMatrix<R> {
    order: usize,
    upper: Vec<R>,
}

impl<R: Ring> SkewMatrix<R> {
    pub fn zeros(order: usize) -> Self {
        SkewMatrix {
            order,
            upper: vec![R::zero(); order * order.saturating_sub(1) / 2],
        }
    }

    /// Builds the matrix from `f(i, j)` evaluated for `1 <= i < j <= order`.
    pub fn from_fn(order: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut upper = Vec::with_capacity(order * order.saturating_sub(1) / 2);
        for i in 1..=order {
            for j in i + 1..=order {
                upper.push(f(i, j));
            }
        }
        SkewMatrix { order, upper }
    }

    pub fn try_from_fn(order: usize, mut f: impl FnMut(usize, usize) -> Result<R>) -> Result<Self> {
        let mut upper = Vec::with_capacity(order * order.saturating_sub(1) / 2);
        for i in 1..=order {
            for j in i + 1..=order {
                upper.push(f(i, j)?);
            }
        }
        Ok(SkewMatrix { order, upper })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    fn slot(&self, i: usize, j: usize) -> usize {
        debug_assert!(1 <= i && i < j && j <= self.order);
        // rows 1..i-1 hold (order-1) + ... + (order-i+1) entries
        let before = (i - 1) * self.order - (i - 1) * i / 2;
        before + (j - i - 1)
    }

    /// Reference to a stored entry; requires `i < j`.
    pub fn upper(&self, i: usize, j: usize) -> &R {
        &self.upper[self.slot(i, j)]
    }

    /// Entry `(i, j)` with the skew-symmetric extension below the diagonal.
    pub fn entry(&self, i: usize, j: usize) -> R {
        assert!(
            i >= 1 && j >= 1 && i <= self.order && j <= self.order,
            "index out of range"
        );
        match i.cmp(&j) {
            std::cmp::Ordering::Less => self.upper(i, j).clone(),
            std::cmp::Ordering::Equal => R::zero(),
            std::cmp::Ordering::Greater => self.upper(j, i).negated(),
        }
    }

    /// Sets entry `(i, j)` (and implicitly `(j, i)`); `i != j`.
    pub fn set(&mut self, i: usize, j: usize, value: R) {
        assert!(i != j, "diagonal of a skew matrix is fixed at zero");
        if i < j {
            let s = self.slot(i, j);
            self.upper[s] = value;
        } else {
            let s = self.slot(j, i);
            self.upper[s] = value.negated();
        }
    }

    /// Principal submatrix on rows and columns `idx`.
    pub fn minor(&self, idx: &IndexSet) -> Result<Self> {
        idx.check_within(self.order)?;
        let labels = idx.labels();
        Ok(SkewMatrix::from_fn(labels.len(), |a, b| {
            self.upper(labels[a - 1], labels[b - 1]).clone()
        }))
    }

    /// Leading principal submatrix of order `n`.
    pub fn leading(&self, n: usize) -> Result<Self> {
        self.minor(&IndexSet::full(n))
    }

    /// Appends one index whose column against index `i` is `column[i-1]`.
    pub fn bordered(&self, column: &[R]) -> Result<Self> {
        if column.len() != self.order {
            return Err(Error::ShapeMismatch {
                rows: column.len(),
                cols: self.order,
            });
        }
        let n = self.order + 1;
        Ok(SkewMatrix::from_fn(n, |i, j| {
            if j == n {
                column[i - 1].clone()
            } else {
                self.upper(i, j).clone()
            }
        }))
    }

    /// Simultaneously swaps rows and columns `a` and `b`.
    pub fn swapped(&self, a: usize, b: usize) -> Self {
        let perm = |x: usize| {
            if x == a {
                b
            } else if x == b {
                a
            } else {
                x
            }
        };
        SkewMatrix::from_fn(self.order, |i, j| self.entry(perm(i), perm(j)))
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> SkewMatrix<S> {
        SkewMatrix {
            order: self.order,
            upper: self.upper.iter().map(f).collect(),
        }
    }

    /// Full square matrix, row-major.
    pub fn to_dense(&self) -> Vec<Vec<R>> {
        (1..=self.order)
            .map(|i| (1..=self.order).map(|j| self.entry(i, j)).collect())
            .collect()
    }

    /// Iterates `(i, j, value)` over the strict upper triangle, row by row.
    pub fn upper_entries(&self) -> impl Iterator<Item = (usize, usize, &R)> + '_ {
        let n = self.order;
        (1..=n)
            .flat_map(move |i| (i + 1..=n).map(move |j| (i, j)))
            .zip(self.upper.iter())
            .map(|((i, j), v)| (i, j, v))
    }

    /// First upper-triangle position where two matrices of equal order differ.
    pub fn first_difference(&self, other: &Self) -> Option<(usize, usize)> {
        if self.order != other.order {
            return Some((0, 0));
        }
        self.upper_entries()
            .zip(other.upper_entries())
            .find(|((_, _, a), (_, _, b))| a != b)
            .map(|((i, j, _), _)| (i, j))
    }
}

/// Serialization of a single matrix entry.
pub trait EntryCodec: Ring {
    const RING_TAG: &'static str;
    fn entry_to_json(&self) -> Value;
    fn entry_to_csv(&self) -> String;
}

impl EntryCodec for BigInt {
    const RING_TAG: &'static str = "int";
    fn entry_to_json(&self) -> Value {
        Value::String(self.to_string())
    }
    fn entry_to_csv(&self) -> String {
        self.to_string()
    }
}

impl EntryCodec for BivariatePolynomial {
    const RING_TAG: &'static str = "poly";
    fn entry_to_json(&self) -> Value {
        self.to_json()
    }
    fn entry_to_csv(&self) -> String {
        let s = self.to_string();
        if s.contains(',') || s.contains(' ') {
            format!("\"{s}\"")
        } else {
            s
        }
    }
}

impl<R: EntryCodec> SkewMatrix<R> {
    /// `{order, ring, entries: [[i, j, value], ...]}` with `i < j` only.
    pub fn to_json(&self) -> Value {
        let entries: Vec<Value> = self
            .upper_entries()
            .map(|(i, j, v)| serde_json::json!([i, j, v.entry_to_json()]))
            .collect();
        serde_json::json!({
            "order": self.order,
            "ring": R::RING_TAG,
            "entries": entries,
        })
    }

    /// Full square matrix as CSV, one row per line.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for i in 1..=self.order {
            let row: Vec<String> = (1..=self.order)
                .map(|j| self.entry(i, j).entry_to_csv())
                .collect();
            out.push_str(&row.join(","));
            out.push('\n');
        }
        out
    }
}

impl SkewMatrix<BigInt> {
    pub fn from_json(v: &Value) -> Result<Self> {
        let bad = || Error::Parse("malformed integer matrix JSON".into());
        if v["ring"] != "int" {
            return Err(bad());
        }
        let order = v["order"].as_u64().ok_or_else(bad)? as usize;
        let mut m = SkewMatrix::zeros(order);
        for e in v["entries"].as_array().ok_or_else(bad)? {
            let i = e[0].as_u64().ok_or_else(bad)? as usize;
            let j = e[1].as_u64().ok_or_else(bad)? as usize;
            if !(1 <= i && i < j && j <= order) {
                return Err(bad());
            }
            let val: BigInt = e[2].as_str().ok_or_else(bad)?.parse().map_err(|_| bad())?;
            m.set(i, j, val);
        }
        Ok(m)
    }
}
