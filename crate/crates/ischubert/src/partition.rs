//! Integer partitions and strict partitions.

use std::fmt;

use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<usize>);

/// A strictly decreasing sequence of positive integers.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct StrictPartition(Vec<usize>);

impl Partition {
    /// Trailing zeros are dropped; any other violation is an error.
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] < w[1]) || parts.contains(&0) {
            return Err(Error::Invalid(format!("{parts:?} is not a partition")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Sorts and drops zeros.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::new(parse_parts(s)?)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// `λ_i`, 1-based, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn transpose(&self) -> Self {
        let width = self.0.first().copied().unwrap_or(0);
        Partition((1..=width).map(|j| self.0.iter().take_while(|&&p| p >= j).count()).collect())
    }

    /// Dominance order; false when the sizes differ.
    pub fn dominance_leq(&self, other: &Self) -> bool {
        if self.size() != other.size() {
            return false;
        }
        let (mut a, mut b) = (0, 0);
        for i in 1..=self.len().max(other.len()) {
            a += self.part(i);
            b += other.part(i);
            if a > b {
                return false;
            }
        }
        true
    }

    /// Whether the diagram of `other` is a subset of that of `self`.
    pub fn contains(&self, other: &Self) -> bool {
        other.len() <= self.len() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    /// Includes the empty partition.
    pub fn is_rectangle(&self) -> bool {
        self.0.windows(2).all(|w| w[0] == w[1])
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// The staircase `δ_n = (n−1, n−2, ..., 1)`.
    pub fn staircase(n: usize) -> Self {
        Partition((1..n).rev().collect())
    }

    /// Partitions of `n` in decreasing lexicographic order.
    pub fn all_of(n: usize) -> Vec<Self> {
        fn go(rest: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(cur.clone()));
                return;
            }
            for p in (1..=rest.min(max)).rev() {
                cur.push(p);
                go(rest - p, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, n, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions contained in `δ_{n+1} = (n, n−1, ..., 1)` with `μ_i < n+1−i` for every
    /// nonzero part, i.e. all partitions inside `δ_n`. Sorted.
    pub fn all_inside_staircase(n: usize) -> Vec<Self> {
        Self::staircase(n).subpartitions()
    }

    /// All partitions whose diagram lies inside this one, sorted.
    pub fn subpartitions(&self) -> Vec<Self> {
        fn go(outer: &[usize], i: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            out.push(Partition(cur.clone()));
            if i == outer.len() {
                return;
            }
            for p in 1..=outer[i].min(max) {
                cur.push(p);
                go(outer, i + 1, p, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(&self.0, 0, usize::MAX, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    pub fn to_strict(&self) -> Option<StrictPartition> {
        StrictPartition::new(self.0.clone()).ok()
    }
}

impl StrictPartition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        while parts.last() == Some(&0) {
            parts.pop();
        }
        if parts.windows(2).any(|w| w[0] <= w[1]) || parts.contains(&0) {
            return Err(Error::Invalid(format!("{parts:?} is not a strict partition")));
        }
        Ok(StrictPartition(parts))
    }

    pub fn empty() -> Self {
        StrictPartition(Vec::new())
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::new(parse_parts(s)?)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn part(&self, i: usize) -> usize {
        if i == 0 {
            return 0;
        }
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn to_partition(&self) -> Partition {
        Partition(self.0.clone())
    }

    /// `δ̂_n = (n−1, n−3, n−5, ...)`.
    pub fn shifted_staircase(n: usize) -> Self {
        StrictPartition((0..n / 2 + n % 2).map(|k| n - 1 - 2 * k).filter(|&p| p > 0).collect())
    }

    /// Strict partitions of `n` in decreasing lexicographic order.
    pub fn all_of(n: usize) -> Vec<Self> {
        Partition::all_of(n).into_iter().filter_map(|p| p.to_strict()).collect()
    }

    /// The shifted diagram `{(i, i+j−1)}`.
    pub fn shifted_cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (i, &p) in self.0.iter().enumerate() {
            for j in 0..p {
                out.push((i + 1, i + 1 + j));
            }
        }
        out
    }
}

impl From<StrictPartition> for Partition {
    fn from(p: StrictPartition) -> Self {
        Partition(p.0)
    }
}

fn parse_parts(s: &str) -> Result<Vec<usize>> {
    let t = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
    if t.is_empty() || t == "∅" {
        return Ok(Vec::new());
    }
    t.split([',', ' '])
        .filter(|x| !x.is_empty())
        .map(|x| x.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad part {x:?} in {s:?}"))))
        .collect()
}

fn write_parts(parts: &[usize], f: &mut fmt::Formatter<'_>) -> fmt::Result {
    write!(f, "(")?;
    for (k, p) in parts.iter().enumerate() {
        if k > 0 {
            write!(f, ",")?;
        }
        write!(f, "{p}")?;
    }
    write!(f, ")")
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(&self.0, f)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(&self.0, f)
    }
}

impl fmt::Display for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(&self.0, f)
    }
}

impl fmt::Debug for StrictPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_parts(&self.0, f)
    }
}
