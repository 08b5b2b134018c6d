//! Integer partitions.
//!
//! A [`Partition`] stores its nonzero parts in weakly decreasing order. Reading
//! past the last stored part yields zero, so a partition behaves like an
//! infinite sequence with finitely many nonzero entries.
//!
//! Partitions are ordered by size first and then *reverse* lexicographically,
//! so within one size `(4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)`. This is the
//! order in which [`partitions_of`] lists them and in which symmetric function
//! terms are stored and printed. Reverse-lex refines the opposite of dominance:
//! if `λ ▷ μ` then `λ` comes before `μ`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// The empty partition `∅`.
    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// Canonicalizes an arbitrary finite sequence of nonnegative integers:
    /// zeros are dropped and the rest sorted in decreasing order.
    pub fn new(raw: &[i64]) -> Result<Self> {
        if let Some(&bad) = raw.iter().find(|&&x| x < 0) {
            return Err(Error::NegativePart(bad));
        }
        Ok(Self::from_parts(raw.iter().map(|&x| x as usize).collect()))
    }

    /// Same as [`Partition::new`] for inputs that cannot be negative.
    pub fn from_parts(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p != 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// `(n)` for `n > 0`, `∅` for `n = 0`.
    pub fn row(n: usize) -> Self {
        Self::from_parts(vec![n])
    }

    /// `(1^n)`.
    pub fn column(n: usize) -> Self {
        Partition { parts: vec![1; n] }
    }

    /// The hook `(a, 1^b)`.
    pub fn hook(a: usize, b: usize) -> Self {
        let mut parts = vec![a];
        parts.extend(std::iter::repeat_n(1, b));
        Self::from_parts(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `λ_i` with 1-based `i`; zero past the end (and for `i = 0`).
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Largest part, `λ_1`.
    pub fn first(&self) -> usize {
        self.part(1)
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn transpose(&self) -> Partition {
        let first = self.first();
        let parts = (1..=first)
            .map(|i| self.parts.iter().take_while(|&&p| p >= i).count())
            .collect();
        Partition { parts }
    }

    /// `μ ⊆ λ`, i.e. `μ_i ≤ λ_i` for every `i`.
    pub fn contains(&self, mu: &Partition) -> bool {
        mu.len() <= self.len() && mu.parts.iter().zip(&self.parts).all(|(m, l)| m <= l)
    }

    /// Dominance `λ ⊵ μ`. Only defined for partitions of the same size.
    pub fn dominates(&self, mu: &Partition) -> Result<bool> {
        if self.size() != mu.size() {
            return Err(Error::SizeMismatch(self.clone(), mu.clone()));
        }
        let (mut a, mut b) = (0usize, 0usize);
        for i in 1..=self.len().max(mu.len()) {
            a += self.part(i);
            b += mu.part(i);
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// `λ ⊔ μ`: all parts of both, sorted.
    pub fn concat_sort(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        parts.extend_from_slice(&self.parts);
        parts.extend_from_slice(&other.parts);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition { parts }
    }

    /// `(λ_1 − 1, λ_2 − 2, …, λ_q − q)`.
    pub fn beta_numbers(&self, q: usize) -> Vec<i64> {
        (1..=q).map(|i| self.part(i) as i64 - i as i64).collect()
    }

    /// Multiplies every part by `k`.
    pub fn scale(&self, k: usize) -> Partition {
        Self::from_parts(self.parts.iter().map(|p| p * k).collect())
    }

    /// Divides every part by `k`, or `None` if some part is not a multiple of `k`.
    pub fn divide(&self, k: usize) -> Option<Partition> {
        if self.parts.iter().all(|p| p % k == 0) {
            Some(Partition { parts: self.parts.iter().map(|p| p / k).collect() })
        } else {
            None
        }
    }

    /// `(m, λ_1, λ_2, …)`; requires `m ≥ λ_1`.
    pub fn prepend(&self, m: usize) -> Option<Partition> {
        if m < self.first() {
            return None;
        }
        let mut parts = Vec::with_capacity(self.len() + 1);
        parts.push(m);
        parts.extend_from_slice(&self.parts);
        Some(Self::from_parts(parts))
    }

    /// Multiplicity of each part value, indexed by value.
    pub fn multiplicities(&self) -> Vec<usize> {
        let mut mult = vec![0; self.first() + 1];
        for &p in &self.parts {
            mult[p] += 1;
        }
        mult
    }

    /// Comma-separated parts, empty for `∅`.
    pub fn to_csv(&self) -> String {
        self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_csv())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.to_csv())
    }
}

/// Parses `3,2,1`; the empty string, `[]` and `∅` mean the empty partition.
impl FromStr for Partition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let inner = s
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .or_else(|| s.strip_prefix('(').and_then(|t| t.strip_suffix(')')))
            .unwrap_or(s)
            .trim();
        if inner.is_empty() || inner == "∅" {
            return Ok(Partition::empty());
        }
        let raw = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad partition part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(&raw)
    }
}

impl Serialize for Partition {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.parts.serialize(serializer)
    }
}

/// JSON partitions must already be canonical: weakly decreasing, no zeros.
impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<usize>::deserialize(deserializer)?;
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(serde::de::Error::custom(format!(
                "partition {parts:?} is not weakly decreasing with positive parts"
            )));
        }
        Ok(Partition { parts })
    }
}

/// All partitions of `n`, optionally with every part at most `max_part`, in
/// reverse-lexicographic order.
pub fn partitions_of(n: usize, max_part: Option<usize>) -> Vec<Partition> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition { parts: prefix.clone() });
            return;
        }
        for first in (1..=max.min(n)).rev() {
            prefix.push(first);
            go(n - first, first, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_part.unwrap_or(n), &mut Vec::new(), &mut out);
    out
}

/// Remainder `n % k` in `{0, …, k−1}`, also for negative `n`.
pub fn rem_floor(n: i64, k: i64) -> i64 {
    Integer::mod_floor(&n, &k)
}

/// Quotient `n // k` with `n = (n // k)·k + n % k`.
pub fn div_floor(n: i64, k: i64) -> i64 {
    Integer::div_floor(&n, &k)
}
