//! Permutations of the integers that move finitely many points.
//!
//! A permutation is stored as its smallest window `[lo, hi]` containing every
//! moved point, so the identity is the empty window. Equality, hashing and
//! ordering all see this canonical form.

use std::collections::HashMap;
use std::fmt;

use crate::error::{Error, Result};

/// A word in the simple transpositions `s_i`, listed left to right.
pub type Word = Vec<i64>;

/// Default guard on the length of permutations whose reduced words are listed.
pub const DEFAULT_WORD_GUARD: usize = 16;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Permutation {
    lo: i64,
    images: Vec<i64>,
}

impl Permutation {
    pub fn identity() -> Self {
        Self::default()
    }

    fn from_window_unchecked(lo: i64, images: Vec<i64>) -> Self {
        let first = images.iter().enumerate().position(|(k, &v)| v != lo + k as i64);
        let Some(first) = first else {
            return Self::identity();
        };
        let last = images
            .iter()
            .enumerate()
            .rposition(|(k, &v)| v != lo + k as i64)
            .unwrap();
        Permutation { lo: lo + first as i64, images: images[first..=last].to_vec() }
    }

    /// Builds `w` from the values `w(lo), w(lo+1), ...`; points outside the window are fixed.
    pub fn from_window(lo: i64, images: Vec<i64>) -> Result<Self> {
        let n = images.len() as i64;
        let mut seen = vec![false; images.len()];
        for &v in &images {
            let k = v - lo;
            if k < 0 || k >= n || seen[k as usize] {
                return Err(Error::Invalid(format!("not a permutation of [{}, {}]", lo, lo + n - 1)));
            }
            seen[k as usize] = true;
        }
        Ok(Self::from_window_unchecked(lo, images))
    }

    /// One-line notation on `{1, ..., n}`.
    pub fn from_one_line(values: &[i64]) -> Result<Self> {
        Self::from_window(1, values.to_vec())
    }

    /// Builds a permutation from the pairs `(i, w(i))`; unlisted points are fixed.
    pub fn from_pairs(pairs: &[(i64, i64)]) -> Result<Self> {
        if pairs.is_empty() {
            return Ok(Self::identity());
        }
        let lo = pairs.iter().map(|p| p.0.min(p.1)).min().unwrap();
        let hi = pairs.iter().map(|p| p.0.max(p.1)).max().unwrap();
        let mut images: Vec<Option<i64>> = vec![None; (hi - lo + 1) as usize];
        for &(i, v) in pairs {
            let slot = &mut images[(i - lo) as usize];
            if slot.is_some_and(|old| old != v) {
                return Err(Error::Invalid(format!("point {i} assigned twice")));
            }
            *slot = Some(v);
        }
        let images = images.into_iter().enumerate().map(|(k, v)| v.unwrap_or(lo + k as i64)).collect();
        Self::from_window(lo, images)
    }

    /// The simple transposition `s_i = (i, i+1)`.
    pub fn simple(i: i64) -> Self {
        Permutation { lo: i, images: vec![i + 1, i] }
    }

    /// The transposition `(a, b)`.
    pub fn transposition(a: i64, b: i64) -> Self {
        if a == b {
            return Self::identity();
        }
        let (a, b) = (a.min(b), a.max(b));
        let mut images: Vec<i64> = (a..=b).collect();
        images[0] = b;
        *images.last_mut().unwrap() = a;
        Permutation { lo: a, images }
    }

    /// The longest element `w_n = n ⋯ 2 1` of `S_n`.
    pub fn longest(n: usize) -> Self {
        let n = n as i64;
        Self::from_window_unchecked(1, (1..=n).rev().collect())
    }

    /// Product `s_{a_1} s_{a_2} ⋯ s_{a_k}` of a word (not necessarily reduced).
    pub fn from_word(word: &[i64]) -> Self {
        word.iter().fold(Self::identity(), |w, &i| w.mul_simple(i))
    }

    /// Demazure product `s_{a_1} ∘ ⋯ ∘ s_{a_k}`.
    pub fn demazure_word(word: &[i64]) -> Self {
        word.iter().fold(Self::identity(), |w, &i| w.demazure_simple(i))
    }

    pub fn apply(&self, i: i64) -> i64 {
        let k = i - self.lo;
        if k >= 0 && (k as usize) < self.images.len() {
            self.images[k as usize]
        } else {
            i
        }
    }

    pub fn is_identity(&self) -> bool {
        self.images.is_empty()
    }

    /// Least and greatest moved points, or `None` for the identity.
    pub fn support_bounds(&self) -> Option<(i64, i64)> {
        if self.images.is_empty() {
            None
        } else {
            Some((self.lo, self.lo + self.images.len() as i64 - 1))
        }
    }

    /// The moved points, in increasing order.
    pub fn support(&self) -> Vec<i64> {
        (0..self.images.len() as i64)
            .map(|k| self.lo + k)
            .filter(|&i| self.apply(i) != i)
            .collect()
    }

    /// Whether every moved point is a positive integer.
    pub fn in_s_infinity(&self) -> bool {
        self.images.is_empty() || self.lo >= 1
    }

    /// Largest moved point, 0 for the identity.
    pub fn max_moved(&self) -> i64 {
        self.support_bounds().map_or(0, |b| b.1)
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![0; self.images.len()];
        for (k, &v) in self.images.iter().enumerate() {
            images[(v - self.lo) as usize] = self.lo + k as i64;
        }
        Permutation { lo: self.lo, images }
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Self) -> Self {
        let (lo, hi) = match (self.support_bounds(), other.support_bounds()) {
            (None, _) => return other.clone(),
            (_, None) => return self.clone(),
            (Some(a), Some(b)) => (a.0.min(b.0), a.1.max(b.1)),
        };
        let images = (lo..=hi).map(|i| self.apply(other.apply(i))).collect();
        Self::from_window_unchecked(lo, images)
    }

    /// Number of inversions.
    pub fn length(&self) -> usize {
        let v = &self.images;
        let mut count = 0;
        for a in 0..v.len() {
            for b in a + 1..v.len() {
                if v[a] > v[b] {
                    count += 1;
                }
            }
        }
        count
    }

    /// All pairs `i < j` with `w(i) > w(j)`.
    pub fn inversions(&self) -> Vec<(i64, i64)> {
        let mut out = Vec::new();
        let n = self.images.len();
        for a in 0..n {
            for b in a + 1..n {
                if self.images[a] > self.images[b] {
                    out.push((self.lo + a as i64, self.lo + b as i64));
                }
            }
        }
        out
    }

    pub fn has_right_descent(&self, i: i64) -> bool {
        self.apply(i) > self.apply(i + 1)
    }

    /// The `i` with `w(i) > w(i+1)`.
    pub fn right_descents(&self) -> Vec<i64> {
        (0..self.images.len().saturating_sub(1) as i64)
            .map(|k| self.lo + k)
            .filter(|&i| self.has_right_descent(i))
            .collect()
    }

    pub fn left_descents(&self) -> Vec<i64> {
        self.inverse().right_descents()
    }

    /// Lehmer code `(c_1, c_2, ...)` with trailing zeros removed; requires support in the positive integers.
    pub fn code(&self) -> Vec<usize> {
        assert!(self.in_s_infinity(), "code is indexed from 1");
        let m = self.max_moved();
        let mut code: Vec<usize> =
            (1..=m).map(|i| (i + 1..=m).filter(|&j| self.apply(j) < self.apply(i)).count()).collect();
        while code.last() == Some(&0) {
            code.pop();
        }
        code
    }

    /// `w s_i`.
    pub fn mul_simple(&self, i: i64) -> Self {
        let (lo, hi) = match self.support_bounds() {
            None => return Self::simple(i),
            Some((lo, hi)) => (lo.min(i), hi.max(i + 1)),
        };
        let mut images: Vec<i64> = (lo..=hi).map(|j| self.apply(j)).collect();
        let k = (i - lo) as usize;
        images.swap(k, k + 1);
        Self::from_window_unchecked(lo, images)
    }

    /// `s_i w`.
    pub fn simple_mul(&self, i: i64) -> Self {
        Self::simple(i).compose(self)
    }

    /// `w ∘ s_i`: equals `w s_i` when that is longer, else `w`.
    pub fn demazure_simple(&self, i: i64) -> Self {
        if self.has_right_descent(i) {
            self.clone()
        } else {
            self.mul_simple(i)
        }
    }

    /// Demazure product `self ∘ other`.
    pub fn demazure(&self, other: &Self) -> Self {
        other.reduced_word().iter().fold(self.clone(), |w, &i| w.demazure_simple(i))
    }

    /// One reduced word, built by peeling the least right descent at each step.
    pub fn reduced_word(&self) -> Word {
        let mut w = self.clone();
        let mut rev = Vec::with_capacity(self.length());
        while let Some(&i) = w.right_descents().first() {
            rev.push(i);
            w = w.mul_simple(i);
        }
        rev.reverse();
        rev
    }

    /// Whether `word` is a reduced word for `self`.
    pub fn is_reduced_word(&self, word: &[i64]) -> bool {
        word.len() == self.length() && Self::from_word(word) == *self
    }

    /// Every reduced word, in lexicographic order.
    pub fn reduced_words(&self, guard: usize) -> Result<Vec<Word>> {
        let len = self.length();
        if len > guard {
            return Err(Error::Guard { what: "length", value: len, guard });
        }
        let mut out = Vec::new();
        let mut suffix = Vec::with_capacity(len);
        fn go(w: &Permutation, suffix: &mut Vec<i64>, out: &mut Vec<Word>) {
            let des = w.right_descents();
            if des.is_empty() {
                out.push(suffix.iter().rev().copied().collect());
                return;
            }
            for i in des {
                suffix.push(i);
                go(&w.mul_simple(i), suffix, out);
                suffix.pop();
            }
        }
        go(self, &mut suffix, &mut out);
        out.sort();
        Ok(out)
    }

    /// Number of reduced words, by memoized recursion on right descents.
    pub fn count_reduced_words(&self) -> u128 {
        fn go(w: &Permutation, memo: &mut HashMap<Permutation, u128>) -> u128 {
            if w.is_identity() {
                return 1;
            }
            if let Some(&c) = memo.get(w) {
                return c;
            }
            let c = w.right_descents().into_iter().map(|i| go(&w.mul_simple(i), memo)).sum();
            memo.insert(w.clone(), c);
            c
        }
        go(self, &mut HashMap::new())
    }

    /// Bruhat order, by the rank-matrix criterion on a window holding both supports.
    pub fn bruhat_leq(&self, other: &Self) -> bool {
        let (lo, hi) = match (self.support_bounds(), other.support_bounds()) {
            (None, _) => return true,
            (Some(_), None) => return false,
            (Some((a, b)), Some((c, d))) => (a.min(c), b.max(d)),
        };
        for k in lo..=hi {
            let (mut x, mut y) = (0, 0);
            for i in lo..=hi {
                x += (self.apply(i) >= k) as i32;
                y += (other.apply(i) >= k) as i32;
                if x > y {
                    return false;
                }
            }
        }
        true
    }

    /// Bruhat covers `w ⋖ wt` for transpositions `t = (a, b)` with `lo ≤ a < b ≤ hi`.
    pub fn bruhat_covers_up_within(&self, lo: i64, hi: i64) -> Vec<(Permutation, (i64, i64))> {
        let mut out = Vec::new();
        for a in lo..=hi {
            let wa = self.apply(a);
            // smallest value above w(a) seen so far between a and b
            let mut gate = i64::MAX;
            for b in a + 1..=hi {
                let wb = self.apply(b);
                if wb > wa && wb < gate {
                    out.push((self.compose(&Self::transposition(a, b)), (a, b)));
                }
                if wb > wa {
                    gate = gate.min(wb);
                }
            }
        }
        out
    }

    /// Bruhat covers found by scanning `[min support − 1, max support + 1]`.
    pub fn bruhat_covers_up(&self) -> Vec<(Permutation, (i64, i64))> {
        match self.support_bounds() {
            None => Vec::new(),
            Some((lo, hi)) => self.bruhat_covers_up_within(lo - 1, hi + 1),
        }
    }

    /// `w ≫ N : i ↦ w(i − N) + N`.
    pub fn shift(&self, n: i64) -> Self {
        if self.is_identity() {
            return Self::identity();
        }
        Permutation { lo: self.lo + n, images: self.images.iter().map(|v| v + n).collect() }
    }

    /// `[w]_E`: order-preserving relabelling of `E` and `w(E)` to `{1, ..., |E|}`.
    pub fn standardize(&self, e: &[i64]) -> Self {
        let mut dom = e.to_vec();
        dom.sort_unstable();
        dom.dedup();
        let mut cod: Vec<i64> = dom.iter().map(|&i| self.apply(i)).collect();
        cod.sort_unstable();
        let images = dom.iter().map(|&i| cod.binary_search(&self.apply(i)).unwrap() as i64 + 1).collect();
        Self::from_window_unchecked(1, images)
    }

    /// Values `w(1), ..., w(n)` for the least `n ≥ 1` covering the support; requires support in `[1, ∞)`.
    pub fn one_line(&self) -> Vec<i64> {
        assert!(self.in_s_infinity(), "one-line notation needs support in the positive integers");
        (1..=self.max_moved().max(1)).map(|i| self.apply(i)).collect()
    }

    /// Values `w(1), ..., w(n)` padded to width `n`.
    pub fn one_line_width(&self, n: usize) -> Vec<i64> {
        (1..=n as i64).map(|i| self.apply(i)).collect()
    }

    /// One-line notation: digits run together when all are single digits, else space-separated.
    pub fn to_one_line_string(&self) -> String {
        let v = self.one_line();
        if v.iter().all(|&x| x <= 9) {
            v.iter().map(|x| x.to_string()).collect()
        } else {
            v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
        }
    }

    pub fn parse_one_line(s: &str) -> Result<Self> {
        let s = s.trim();
        let values: Vec<i64> = if s.contains(|c: char| c.is_whitespace() || c == ',') {
            s.split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("bad entry {t:?}"))))
                .collect::<Result<_>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as i64).ok_or_else(|| Error::Parse(format!("bad digit {c:?}"))))
                .collect::<Result<_>>()?
        };
        if values.is_empty() {
            return Err(Error::Parse("empty one-line notation".into()));
        }
        Self::from_one_line(&values)
    }

    /// Disjoint cycles, each listed from its least element, sorted by that element.
    pub fn cycles(&self) -> Vec<Vec<i64>> {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        for i in self.support() {
            if seen.contains(&i) {
                continue;
            }
            let mut cycle = vec![i];
            seen.insert(i);
            let mut j = self.apply(i);
            while j != i {
                seen.insert(j);
                cycle.push(j);
                j = self.apply(j);
            }
            out.push(cycle);
        }
        out
    }

    pub fn to_cycle_string(&self) -> String {
        if self.is_identity() {
            return "()".into();
        }
        self.cycles()
            .iter()
            .map(|c| format!("({})", c.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect()
    }

    /// Parses disjoint cycles such as `(1,4)(2,3)`; `()` or the empty string is the identity.
    pub fn parse_cycles(s: &str) -> Result<Self> {
        let mut pairs = Vec::new();
        let mut rest = s.trim();
        while !rest.is_empty() {
            let body_end = rest
                .strip_prefix('(')
                .and_then(|r| r.find(')'))
                .ok_or_else(|| Error::Parse(format!("expected a parenthesized cycle at {rest:?}")))?;
            let body = &rest[1..body_end + 1];
            rest = rest[body_end + 2..].trim_start();
            let items: Vec<i64> = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<i64>().map_err(|_| Error::Parse(format!("bad cycle entry {t:?}"))))
                .collect::<Result<_>>()?;
            for k in 0..items.len() {
                pairs.push((items[k], items[(k + 1) % items.len()]));
            }
        }
        let mut keys: Vec<i64> = pairs.iter().map(|p| p.0).collect();
        keys.sort_unstable();
        if keys.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse("cycles are not disjoint".into()));
        }
        Self::from_pairs(&pairs)
    }

    /// Pattern containment in the one-line notation read from `min(1, least moved point)`.
    ///
    /// `pattern` is given in one-line notation on `{1, ..., k}`.
    pub fn contains_pattern(&self, pattern: &[i64]) -> bool {
        let k = pattern.len();
        if k == 0 {
            return true;
        }
        let lo = self.support_bounds().map_or(1, |b| b.0.min(1));
        let hi = self.max_moved().max(lo) + k as i64;
        let values: Vec<i64> = (lo..=hi).map(|i| self.apply(i)).collect();
        let mut chosen = Vec::with_capacity(k);
        fn go(values: &[i64], start: usize, pattern: &[i64], chosen: &mut Vec<i64>) -> bool {
            let depth = chosen.len();
            if depth == pattern.len() {
                return true;
            }
            for idx in start..values.len() {
                let v = values[idx];
                let consistent = chosen.iter().zip(pattern).all(|(&c, &p)| (c < v) == (p < pattern[depth]));
                if consistent {
                    chosen.push(v);
                    if go(values, idx + 1, pattern, chosen) {
                        return true;
                    }
                    chosen.pop();
                }
            }
            false
        }
        go(&values, 0, pattern, &mut chosen)
    }
}

/// All of `S_n` in lexicographic order of one-line notation.
pub fn all_permutations(n: usize) -> Vec<Permutation> {
    let mut v: Vec<i64> = (1..=n as i64).collect();
    let mut out = vec![Permutation::from_window_unchecked(1, v.clone())];
    loop {
        let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
            return out;
        };
        let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
        v.swap(i - 1, j);
        v[i..].reverse();
        out.push(Permutation::from_window_unchecked(1, v.clone()));
    }
}

/// Formats a word as `s3 s5 s4`.
pub fn word_to_string(word: &[i64]) -> String {
    word.iter().map(|i| format!("s{i}")).collect::<Vec<_>>().join(" ")
}

/// Parses `s3 s5 s4`, `3 5 4` or `3,5,4`.
pub fn parse_word(s: &str) -> Result<Word> {
    s.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| {
            let t = t.strip_prefix('s').unwrap_or(t);
            t.parse::<i64>().map_err(|_| Error::Parse(format!("bad letter {t:?}")))
        })
        .collect()
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_cycle_string())
    }
}

impl std::ops::Mul for &Permutation {
    type Output = Permutation;
    fn mul(self, rhs: &Permutation) -> Permutation {
        self.compose(rhs)
    }
}
