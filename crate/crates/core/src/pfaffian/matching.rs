use crate::arith::Ring;
use crate::error::{Error, Result};
use crate::kernel::SkewMatrix;

/// Perfect matching of `[2n]` as pairs `(σ_1, σ_2), (σ_3, σ_4), ...` with
/// `σ_{2i-1} < σ_{2i}` and `σ_1 < σ_3 < ...`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PerfectMatching(pub Vec<(usize, usize)>);

impl PerfectMatching {
    /// Sign of the permutation `σ_1 σ_2 ... σ_{2n}`, by counting inversions.
    pub fn sign(&self) -> i64 {
        let word: Vec<usize> = self.0.iter().flat_map(|(a, b)| [*a, *b]).collect();
        let mut inversions = 0;
        for i in 0..word.len() {
            for j in i + 1..word.len() {
                if word[i] > word[j] {
                    inversions += 1;
                }
            }
        }
        if inversions % 2 == 0 {
            1
        } else {
            -1
        }
    }
}

/// All perfect matchings of `{1, ..., order}` (empty list for odd order).
pub fn perfect_matchings(order: usize) -> Vec<PerfectMatching> {
    fn go(free: &mut Vec<usize>, cur: &mut Vec<(usize, usize)>, out: &mut Vec<PerfectMatching>) {
        if free.is_empty() {
            out.push(PerfectMatching(cur.clone()));
            return;
        }
        let first = free.remove(0);
        for k in 0..free.len() {
            let partner = free.remove(k);
            cur.push((first, partner));
            go(free, cur, out);
            cur.pop();
            free.insert(k, partner);
        }
        free.insert(0, first);
    }
    let mut out = Vec::new();
    if order.is_multiple_of(2) {
        go(&mut (1..=order).collect(), &mut Vec::new(), &mut out);
    }
    out
}

/// Pfaffian straight from its definition as a signed sum over perfect
/// matchings. Exponential; meant for cross-checking at small order.
pub fn pf_by_matchings<R: Ring>(m: &SkewMatrix<R>) -> Result<R> {
    if m.order() % 2 == 1 {
        return Err(Error::OddOrder(m.order()));
    }
    let mut sum = R::zero();
    for pm in perfect_matchings(m.order()) {
        let term =
            pm.0.iter()
                .fold(R::one(), |acc, (a, b)| acc.times(m.upper(*a, *b)));
        sum = if pm.sign() == 1 {
            sum.plus(&term)
        } else {
            sum.minus(&term)
        };
    }
    Ok(sum)
}
