//! Partitions, hook lengths, standard Young tableaux and Pieri successors.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Weakly decreasing sequence of nonnegative integers.
///
/// Trailing zeros are stripped on construction, so equality, hashing and
/// ordering ignore them; [`Partition::part`] returns zero past the last part
/// and [`Partition::padded`] produces the fixed-length form indexed `0..=r`.
/// The derived order is lexicographic on the parts, and listings use it in
/// reverse (`(3) > (2,1) > (1,1,1)`).
#[derive(Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::usage(format!("parts {parts:?} are not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(k)`, the special partition.
    pub fn row(k: u32) -> Self {
        Partition::new(vec![k]).unwrap()
    }

    /// `(1^k)`, the primitive partition.
    pub fn column(k: u32) -> Self {
        Partition { parts: vec![1; k as usize] }
    }

    /// `(cols^rows)`, the full rectangle.
    pub fn rectangle(rows: usize, cols: u32) -> Self {
        Partition::new(vec![cols; rows]).unwrap()
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn weight(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The parts padded with zeros to exactly `n` entries.
    pub fn padded(&self, n: usize) -> Result<Vec<u32>> {
        if self.len() > n {
            return Err(Error::usage(format!("partition {self} has more than {n} parts")));
        }
        let mut v = self.parts.clone();
        v.resize(n, 0);
        Ok(v)
    }

    pub fn conjugate(&self) -> Partition {
        let cols = self.part(0);
        let parts = (0..cols).map(|j| self.parts.iter().filter(|&&p| p > j).count() as u32).collect();
        Partition { parts }
    }

    pub fn fits_in_box(&self, rows: usize, cols: u32) -> bool {
        self.len() <= rows && self.part(0) <= cols
    }

    /// Rows (at most `max_rows` of them) where a box can be added.
    pub fn addable_rows(&self, max_rows: usize) -> Vec<usize> {
        (0..=self.len())
            .filter(|&i| i < max_rows && (i == 0 || self.part(i) < self.part(i - 1)))
            .collect()
    }

    /// Rows whose last box is a removable corner.
    pub fn removable_rows(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.part(i) > self.part(i + 1)).collect()
    }

    pub fn with_box_added(&self, row: usize) -> Option<Partition> {
        if row > self.len() || (row > 0 && self.part(row) >= self.part(row - 1)) {
            return None;
        }
        let mut parts = self.parts.clone();
        if row == parts.len() {
            parts.push(1);
        } else {
            parts[row] += 1;
        }
        Some(Partition { parts })
    }

    pub fn with_box_removed(&self, row: usize) -> Option<Partition> {
        if row >= self.len() || self.part(row) <= self.part(row + 1) {
            return None;
        }
        let mut parts = self.parts.clone();
        parts[row] -= 1;
        Partition::new(parts).ok()
    }

    /// Complement in the `rows x cols` box, read backwards:
    /// `hat_i = cols - lambda_{rows-1-i}`.
    pub fn box_complement(&self, rows: usize, cols: u32) -> Result<Partition> {
        if !self.fits_in_box(rows, cols) {
            return Err(Error::usage(format!("{self} does not fit in the {rows}x{cols} box")));
        }
        let parts = (0..rows).map(|i| cols - self.part(rows - 1 - i)).collect::<Vec<_>>();
        Partition::new(parts)
    }

    /// Componentwise sum with another partition (as padded tuples).
    pub fn plus(&self, other: &Partition) -> Partition {
        let n = self.len().max(other.len());
        let parts = (0..n).map(|i| self.part(i) + other.part(i)).collect::<Vec<_>>();
        Partition::new(parts).expect("sum of partitions is a partition")
    }
}

impl TryFrom<Vec<u32>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<u32>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<u32> {
    fn from(p: Partition) -> Vec<u32> {
        p.parts
    }
}

/// Comma-separated parts, e.g. `2,1`; the empty partition is the empty string.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({self})")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Accepts `2,1`, `2, 1, 0`, `(2,1)` and the empty string.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|x| x.trim().parse::<u32>().map_err(|_| Error::parse(format!("bad part {x:?}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// All partitions of `n` with at most `max_rows` parts, each at most
/// `max_cols` (unbounded when `None`), in reverse-lex order.
pub fn partitions_in_box(n: u32, max_rows: usize, max_cols: Option<u32>) -> Vec<Partition> {
    fn go(n: u32, max_part: u32, rows_left: usize, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        if rows_left == 0 {
            return;
        }
        for p in (1..=max_part.min(n)).rev() {
            // the remaining rows must be able to absorb what is left
            if (p as u64) * (rows_left as u64) < n as u64 {
                break;
            }
            prefix.push(p);
            go(n - p, p, rows_left - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_cols.unwrap_or(n), max_rows, &mut Vec::new(), &mut out);
    out
}

/// Hook length `arm + leg + 1` of every cell, row by row.
pub fn hook_lengths(lambda: &Partition) -> Vec<u32> {
    let conj = lambda.conjugate();
    let mut hooks = Vec::with_capacity(lambda.weight() as usize);
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let arm = row - j - 1;
            let leg = conj.part(j as usize) - i as u32 - 1;
            hooks.push(arm + leg + 1);
        }
    }
    hooks
}

/// Number of standard Young tableaux of a shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SytCount {
    pub partition: Partition,
    pub count: BigUint,
}

/// `|lambda|! / prod(hook lengths)`.
pub fn syt_count_hook(lambda: &Partition) -> Result<SytCount> {
    let n = lambda.weight();
    let factorial: BigUint = (1..=n).map(BigUint::from).product();
    let hooks: BigUint = hook_lengths(lambda).into_iter().map(BigUint::from).product();
    if !(&factorial % &hooks).is_zero() {
        return Err(Error::Internal(format!("hook product does not divide {n}! for {lambda}")));
    }
    Ok(SytCount { partition: lambda.clone(), count: factorial / hooks })
}

/// Largest weight accepted by [`syt_enumerate`].
pub const SYT_ENUMERATION_LIMIT: u32 = 12;

/// Counts standard fillings by walking every growth chain from the empty
/// shape to `lambda`, one box at a time.
pub fn syt_enumerate(lambda: &Partition) -> Result<SytCount> {
    if lambda.weight() > SYT_ENUMERATION_LIMIT {
        return Err(Error::usage(format!(
            "enumeration is limited to weight {SYT_ENUMERATION_LIMIT}, got {}",
            lambda.weight()
        )));
    }
    fn walk(target: &[u32], current: &mut [u32], remaining: u32) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut total = 0;
        for i in 0..target.len() {
            let row_ok = current[i] < target[i];
            let col_ok = i == 0 || current[i] < current[i - 1];
            if row_ok && col_ok {
                current[i] += 1;
                total += walk(target, current, remaining - 1);
                current[i] -= 1;
            }
        }
        total
    }
    let target = lambda.parts();
    let mut current = vec![0; target.len()];
    let count = walk(target, &mut current, lambda.weight());
    Ok(SytCount { partition: lambda.clone(), count: BigUint::from(count) })
}

/// All `mu` with `rank + 1` rows, `|mu| = |lambda| + k` and
/// `mu_0 >= lambda_0 >= mu_1 >= lambda_1 >= ... >= mu_r >= lambda_r`,
/// optionally with `mu_0 <= col_bound`. Reverse-lex order.
pub fn pieri_successors(
    lambda: &Partition,
    k: u32,
    rank: usize,
    col_bound: Option<u32>,
) -> Result<Vec<Partition>> {
    let lam = lambda.padded(rank + 1)?;
    let mut out = Vec::new();
    let mut mu = vec![0u32; rank + 1];

    fn go(
        i: usize,
        left: u32,
        lam: &[u32],
        col_bound: Option<u32>,
        mu: &mut Vec<u32>,
        out: &mut Vec<Partition>,
    ) {
        if i == lam.len() {
            if left == 0 {
                out.push(Partition::new(mu.clone()).expect("interlacing keeps order"));
            }
            return;
        }
        let lo = lam[i];
        let mut hi = if i == 0 { lam[0] + left } else { lam[i - 1] };
        if i == 0 {
            if let Some(b) = col_bound {
                hi = hi.min(b);
            }
        }
        hi = hi.min(lo + left);
        if hi < lo {
            return;
        }
        for m in (lo..=hi).rev() {
            mu[i] = m;
            go(i + 1, left - (m - lo), lam, col_bound, mu, out);
        }
    }

    go(0, k, &lam, col_bound, &mut mu, &mut out);
    Ok(out)
}
