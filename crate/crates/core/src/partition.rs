//! Integer partitions and the elementary combinatorics built on them.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::One;

use crate::error::{Error, Result};

/// A partition: a weakly decreasing sequence of positive integers.
///
/// The empty partition is the unique partition of 0. Partitions are ordered
/// first by size and then in *descending* lexicographic order of their parts,
/// so sorted collections list `(4)` before `(3,1)` before `(2,2)`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct Partition {
    parts: Vec<usize>,
    size: usize,
}

impl Partition {
    /// Builds a partition from parts in weakly decreasing order. Zero parts
    /// are dropped; any other ordering violation is an error.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "parts {parts:?} are not weakly decreasing positive integers"
            )));
        }
        Ok(Self::from_sorted(parts))
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self::from_sorted(parts)
    }

    pub(crate) fn from_sorted(parts: Vec<usize>) -> Self {
        debug_assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        debug_assert!(parts.iter().all(|&p| p > 0));
        let size = parts.iter().sum();
        Partition { parts, size }
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// The one-row partition `(n)`; empty for `n = 0`.
    pub fn row(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Self::from_sorted(vec![n])
        }
    }

    /// The one-column partition `(1^n)`.
    pub fn column(n: usize) -> Self {
        Self::from_sorted(vec![1; n])
    }

    /// The hook `(n-r, 1^r)`. Requires `r < n`.
    pub fn hook(n: usize, r: usize) -> Self {
        assert!(r < n, "hook (n-r,1^r) needs r < n");
        let mut parts = vec![n - r];
        parts.extend(std::iter::repeat_n(1, r));
        Self::from_sorted(parts)
    }

    /// `(d^k)`: k parts all equal to d.
    pub fn rectangle(d: usize, k: usize) -> Self {
        if d == 0 {
            return Self::empty();
        }
        Self::from_sorted(vec![d; k])
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// The integer being partitioned.
    pub fn size(&self) -> usize {
        self.size
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    pub fn largest_part(&self) -> usize {
        self.part(0)
    }

    pub fn is_hook(&self) -> bool {
        self.part(1) <= 1
    }

    /// True when all parts are pairwise distinct.
    pub fn has_distinct_parts(&self) -> bool {
        self.parts.windows(2).all(|w| w[0] > w[1])
    }

    /// The transpose shape.
    pub fn conjugate(&self) -> Partition {
        let cols = self.largest_part();
        let parts = (0..cols)
            .map(|c| self.parts.iter().take_while(|&&p| p > c).count())
            .collect();
        Partition::from_sorted(parts)
    }

    /// True iff `inner` fits inside `self` row by row.
    pub fn contains(&self, inner: &Partition) -> bool {
        inner.len() <= self.len() && inner.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.len() || j < other.len() {
            if j >= other.len() || (i < self.len() && self.parts[i] >= other.parts[j]) {
                parts.push(self.parts[i]);
                i += 1;
            } else {
                parts.push(other.parts[j]);
                j += 1;
            }
        }
        Partition::from_sorted(parts)
    }

    /// Every part multiplied by `d`.
    pub fn scale(&self, d: usize) -> Partition {
        assert!(d >= 1);
        Partition::from_sorted(self.parts.iter().map(|p| p * d).collect())
    }

    /// Adds a part, keeping the parts sorted.
    pub fn with_part(&self, part: usize) -> Partition {
        self.union(&Partition::row(part))
    }

    /// Map part size -> number of parts of that size.
    pub fn multiplicities(&self) -> BTreeMap<usize, usize> {
        let mut m = BTreeMap::new();
        for &p in &self.parts {
            *m.entry(p).or_insert(0) += 1;
        }
        m
    }

    /// Sign of a permutation of this cycle type: +1 when `n - len` is even.
    pub fn sign(&self) -> i32 {
        if (self.size - self.len()).is_multiple_of(2) {
            1
        } else {
            -1
        }
    }

    /// Centralizer order of a permutation of this cycle type:
    /// `prod_i i^{m_i} m_i!`.
    pub fn z_value(&self) -> BigInt {
        let mut z = BigInt::one();
        for (part, mult) in self.multiplicities() {
            for k in 1..=mult {
                z *= part;
                z *= k;
            }
        }
        z
    }

    /// Number of permutations with this cycle type, `n!/z`.
    pub fn class_size(&self) -> BigInt {
        factorial(self.size) / self.z_value()
    }

    /// Number of standard Young tableaux of this shape (hook-length formula).
    pub fn degree(&self) -> BigInt {
        let conj = self.conjugate();
        let mut hooks = BigInt::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.parts[j] - i - 1;
                hooks *= arm + leg + 1;
            }
        }
        factorial(self.size) / hooks
    }

    /// Comma-separated text form, e.g. `5,3,1`; empty for the empty partition.
    pub fn to_text(&self) -> String {
        self.parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(",")
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size
            .cmp(&other.size)
            .then_with(|| other.parts.cmp(&self.parts))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_text())
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `a,b,c` with strictly positive, weakly decreasing parts and no
    /// whitespace. The empty string is the empty partition.
    fn from_str(text: &str) -> Result<Self> {
        let fail = |reason: &str| Error::ParsePartition {
            text: text.to_string(),
            reason: reason.to_string(),
        };
        if text.is_empty() {
            return Ok(Partition::empty());
        }
        let mut parts = Vec::new();
        for field in text.split(',') {
            if field.is_empty() || !field.bytes().all(|b| b.is_ascii_digit()) {
                return Err(fail("parts must be positive decimal integers separated by commas"));
            }
            let part: usize = field.parse().map_err(|_| fail("part out of range"))?;
            if part == 0 {
                return Err(fail("parts must be positive"));
            }
            parts.push(part);
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(fail("parts must be weakly decreasing"));
        }
        Ok(Partition::from_sorted(parts))
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

/// Shorthand for literal partitions in code and tests. Panics on bad input.
#[macro_export]
macro_rules! part {
    () => { $crate::Partition::empty() };
    ($($p:expr),+ $(,)?) => { $crate::Partition::new(vec![$($p),+]).expect("literal partition") };
}

/// A skew shape `outer / inner` with `inner ⊆ outer`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    pub fn new(outer: Partition, inner: Partition) -> Option<Self> {
        outer.contains(&inner).then_some(SkewShape { outer, inner })
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn size(&self) -> usize {
        self.outer.size() - self.inner.size()
    }

    /// Column range `[start, end)` of the skew cells in row `r`.
    pub fn row_span(&self, r: usize) -> (usize, usize) {
        (self.inner.part(r), self.outer.part(r))
    }

    /// Cells `(row, col)` in reading order: rows top to bottom, each row
    /// right to left.
    pub fn reading_order(&self) -> Vec<(usize, usize)> {
        (0..self.outer.len())
            .flat_map(|r| {
                let (start, end) = self.row_span(r);
                (start..end).rev().map(move |c| (r, c))
            })
            .collect()
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill_partitions(n, n, &mut current, &mut out);
    out
}

fn fill_partitions(remaining: usize, max: usize, current: &mut Vec<usize>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition::from_sorted(current.clone()));
        return;
    }
    for part in (1..=max.min(remaining)).rev() {
        current.push(part);
        fill_partitions(remaining - part, part, current, out);
        current.pop();
    }
}

/// Partitions of `n` with at least two parts, all odd and distinct.
pub fn distinct_odd_partitions(n: usize) -> Vec<Partition> {
    partitions_of(n)
        .into_iter()
        .filter(|p| p.len() >= 2 && p.has_distinct_parts() && p.parts().iter().all(|x| x % 2 == 1))
        .collect()
}
