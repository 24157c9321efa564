//! Shifted tableaux, shifted Hecke insertion, involution Coxeter–Knuth insertion and
//! weak K-Knuth equivalence.
//!
//! Marked entries `i'` are stored as `-i`.

use std::collections::{BTreeMap, BTreeSet, HashMap, HashSet, VecDeque};
use std::fmt;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::involution::Involution;
use crate::partition::StrictPartition;
use crate::symfunc::{Basis, SymFunExpansion};

/// Sort key for the order `-1 ≺ 1 ≺ -2 ≺ 2 ≺ ...`.
pub fn prec_key(x: i64) -> (i64, bool) {
    (x.abs(), x > 0)
}

fn entry_string(x: i64) -> String {
    if x < 0 {
        format!("{}'", -x)
    } else {
        x.to_string()
    }
}

/// A shifted tableau: row `i` (1-based) occupies columns `i, i+1, ...`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ShiftedTableau {
    rows: Vec<Vec<i64>>,
}

impl ShiftedTableau {
    pub fn empty() -> Self {
        Self::default()
    }

    /// Rows top to bottom; the row lengths must be strictly decreasing.
    pub fn from_rows(rows: Vec<Vec<i64>>) -> Result<Self> {
        let t = ShiftedTableau { rows };
        if !t.has_valid_shape() {
            return Err(Error::Invalid(format!("row lengths {:?} are not a strict partition", t.row_lengths())));
        }
        Ok(t)
    }

    pub fn rows(&self) -> &[Vec<i64>] {
        &self.rows
    }

    fn row_lengths(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.len()).collect()
    }

    fn has_valid_shape(&self) -> bool {
        let l = self.row_lengths();
        !l.contains(&0) && l.windows(2).all(|w| w[0] > w[1])
    }

    pub fn shape(&self) -> StrictPartition {
        StrictPartition::new(self.row_lengths()).expect("valid shape")
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    /// Entry at shifted position `(i, j)`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> Option<i64> {
        if i == 0 || j < i {
            return None;
        }
        self.rows.get(i - 1)?.get(j - i).copied()
    }

    /// Column `j` read top to bottom.
    pub fn column(&self, j: usize) -> Vec<i64> {
        (1..=j).map_while(|i| self.get(i, j)).collect()
    }

    /// Positions `(i, j)` with entries, row by row.
    pub fn cells(&self) -> impl Iterator<Item = ((usize, usize), i64)> + '_ {
        self.rows.iter().enumerate().flat_map(|(r, row)| row.iter().enumerate().map(move |(k, &v)| ((r + 1, r + 1 + k), v)))
    }

    /// Positive entries, strictly increasing along rows and columns.
    pub fn is_increasing(&self) -> bool {
        self.has_valid_shape()
            && self.cells().all(|((i, j), v)| {
                v > 0 && self.get(i, j + 1).is_none_or(|r| r > v) && self.get(i + 1, j).is_none_or(|d| d > v)
            })
    }

    /// Weakly `≺`-increasing rows and columns, no repeated positive entry in a column,
    /// no repeated marked entry in a row, unmarked diagonal.
    pub fn is_semistandard(&self) -> bool {
        if !self.has_valid_shape() {
            return false;
        }
        self.cells().all(|((i, j), v)| {
            let right = self.get(i, j + 1).is_none_or(|r| prec_key(v) <= prec_key(r) && !(v < 0 && r == v));
            let down = self.get(i + 1, j).is_none_or(|d| prec_key(v) <= prec_key(d) && !(v > 0 && d == v));
            v != 0 && right && down && (i != j || v > 0)
        })
    }

    /// Semistandard with absolute values exactly `1..=n`.
    pub fn is_standard(&self) -> bool {
        let mut abs: Vec<i64> = self.cells().map(|(_, v)| v.abs()).collect();
        abs.sort_unstable();
        self.is_semistandard() && abs.iter().enumerate().all(|(k, &v)| v == k as i64 + 1)
    }

    /// Rows bottom to top, each left to right.
    pub fn reading_word(&self) -> Vec<i64> {
        self.rows.iter().rev().flatten().copied().collect()
    }

    /// Replaces row `j`, possibly adding a row.
    fn with_row(&self, j: usize, row: Vec<i64>) -> Self {
        let mut t = self.clone();
        if j > t.rows.len() {
            t.rows.push(row);
        } else {
            t.rows[j - 1] = row;
        }
        t
    }

    /// Replaces column `j`; a longer column adds one cell at its bottom. `None` if that
    /// cell is not at the end of its row.
    fn with_column(&self, j: usize, col: &[i64]) -> Option<Self> {
        let mut t = self.clone();
        for (k, &v) in col.iter().enumerate() {
            let i = k + 1;
            if i > j {
                return None;
            }
            if t.get(i, j).is_some() {
                t.rows[i - 1][j - i] = v;
            } else {
                if i > t.rows.len() {
                    t.rows.push(Vec::new());
                }
                if t.rows[i - 1].len() + i != j {
                    return None;
                }
                t.rows[i - 1].push(v);
            }
        }
        Some(t)
    }

    fn fmt_rows(rows: Vec<Vec<String>>, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let width = rows.iter().flatten().map(|s| s.chars().count()).max().unwrap_or(1);
        for (i, row) in rows.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(|s| format!("{s:>width$}")).collect();
            write!(f, "{}{}", " ".repeat(i * (width + 1)), cells.join(" "))?;
        }
        Ok(())
    }
}

impl fmt::Display for ShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "∅");
        }
        Self::fmt_rows(self.rows.iter().map(|r| r.iter().map(|&v| entry_string(v)).collect()).collect(), f)
    }
}

impl fmt::Debug for ShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// A shifted tableau whose entries are nonempty sets, each kept sorted by `≺`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct SetValuedShiftedTableau {
    rows: Vec<Vec<Vec<i64>>>,
}

impl SetValuedShiftedTableau {
    pub fn empty() -> Self {
        Self::default()
    }

    pub fn from_rows(rows: Vec<Vec<Vec<i64>>>) -> Result<Self> {
        let mut t = SetValuedShiftedTableau { rows };
        for cell in t.rows.iter_mut().flatten() {
            if cell.is_empty() {
                return Err(Error::Invalid("empty cell in a set-valued tableau".into()));
            }
            cell.sort_by_key(|&x| prec_key(x));
        }
        let l: Vec<usize> = t.rows.iter().map(|r| r.len()).collect();
        if l.contains(&0) || l.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::Invalid(format!("row lengths {l:?} are not a strict partition")));
        }
        Ok(t)
    }

    pub fn rows(&self) -> &[Vec<Vec<i64>>] {
        &self.rows
    }

    pub fn shape(&self) -> StrictPartition {
        StrictPartition::new(self.rows.iter().map(|r| r.len()).collect()).expect("valid shape")
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&[i64]> {
        if i == 0 || j < i {
            return None;
        }
        self.rows.get(i - 1)?.get(j - i).map(|v| v.as_slice())
    }

    /// Every value with its shifted position.
    pub fn entries(&self) -> impl Iterator<Item = ((usize, usize), i64)> + '_ {
        self.rows.iter().enumerate().flat_map(|(r, row)| {
            row.iter().enumerate().flat_map(move |(k, set)| set.iter().map(move |&v| ((r + 1, r + 1 + k), v)))
        })
    }

    pub fn num_entries(&self) -> usize {
        self.entries().count()
    }

    pub fn all_singletons(&self) -> bool {
        self.rows.iter().flatten().all(|s| s.len() == 1)
    }

    /// The ordinary shifted tableau, when every cell is a singleton.
    pub fn to_tableau(&self) -> Option<ShiftedTableau> {
        self.all_singletons().then(|| ShiftedTableau { rows: self.rows.iter().map(|r| r.iter().map(|s| s[0]).collect()).collect() })
    }

    /// Every selection of one value per cell is semistandard, and `|x|` is a bijection onto `[n]`.
    pub fn is_standard(&self) -> bool {
        let mut abs: Vec<i64> = self.entries().map(|(_, v)| v.abs()).collect();
        abs.sort_unstable();
        if !abs.iter().enumerate().all(|(k, &v)| v == k as i64 + 1) {
            return false;
        }
        // a selection fails iff some adjacent pair of chosen values or a diagonal value fails
        let pair_ok = |a: i64, b: i64, same_row: bool| {
            prec_key(a) <= prec_key(b) && !(same_row && a < 0 && a == b) && !(!same_row && a > 0 && a == b)
        };
        self.rows.iter().enumerate().all(|(r, row)| {
            row.iter().enumerate().all(|(k, set)| {
                let (i, j) = (r + 1, r + 1 + k);
                let diag = i != j || set.iter().all(|&v| v > 0);
                let right = self.get(i, j + 1).is_none_or(|nb| set.iter().all(|&a| nb.iter().all(|&b| pair_ok(a, b, true))));
                let down = self.get(i + 1, j).is_none_or(|nb| set.iter().all(|&a| nb.iter().all(|&b| pair_ok(a, b, false))));
                diag && right && down
            })
        })
    }

    fn push_cell(&mut self, i: usize, j: usize) {
        if i > self.rows.len() {
            self.rows.push(Vec::new());
        }
        assert_eq!(self.rows[i - 1].len() + i, j, "new cell ({i},{j}) is not at the end of its row");
        self.rows[i - 1].push(Vec::new());
    }

    fn add(&mut self, i: usize, j: usize, v: i64) {
        let cell = &mut self.rows[i - 1][j - i];
        cell.push(v);
        cell.sort_by_key(|&x| prec_key(x));
    }
}

impl fmt::Display for SetValuedShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.rows.is_empty() {
            return write!(f, "∅");
        }
        let cell = |s: &Vec<i64>| {
            let parts: Vec<String> = s.iter().map(|&v| entry_string(v)).collect();
            if parts.len() == 1 {
                parts[0].clone()
            } else {
                format!("{{{}}}", parts.join(","))
            }
        };
        ShiftedTableau::fmt_rows(self.rows.iter().map(|r| r.iter().map(cell).collect()).collect(), f)
    }
}

impl fmt::Debug for SetValuedShiftedTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.rows)
    }
}

/// Counts of the insertion steps that involution words never take.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct InsertTrace {
    /// Bumps that hit the equal-last-entry case.
    pub equal_last: usize,
    /// Steps whose tentative tableau was not increasing and was discarded.
    pub rejected: usize,
}

/// The bumping rule: returns the bumped value (0 for none), the direction and the new sequence.
pub fn bump(p: i64, dir: u8, m: &[i64]) -> (i64, u8, Vec<i64>) {
    bump_traced(p, dir, m, &mut InsertTrace::default())
}

fn bump_traced(p: i64, mut dir: u8, m: &[i64], trace: &mut InsertTrace) -> (i64, u8, Vec<i64>) {
    match m.last() {
        None => (0, dir, vec![p]),
        Some(&last) if p > last => {
            let mut out = m.to_vec();
            out.push(p);
            (0, dir, out)
        }
        Some(&last) if p == last => {
            trace.equal_last += 1;
            (0, dir, m.to_vec())
        }
        Some(_) => {
            let i = m.iter().position(|&x| p <= x).unwrap();
            if i == 0 {
                dir = 1;
            }
            if p == m[i] {
                (m[i + 1], dir, m.to_vec())
            } else {
                let mut out = m.to_vec();
                out[i] = p;
                (m[i], dir, out)
            }
        }
    }
}

/// The insertion rule: returns the last row or column index visited, the direction and the tableau.
pub fn insert(p: i64, tableau: &ShiftedTableau) -> (usize, u8, ShiftedTableau) {
    insert_traced(p, tableau, &mut InsertTrace::default())
}

fn insert_traced(mut p: i64, tableau: &ShiftedTableau, trace: &mut InsertTrace) -> (usize, u8, ShiftedTableau) {
    assert!(p > 0, "letters are positive");
    let mut t = tableau.clone();
    let mut j = 0;
    let mut dir = 0;
    while p > 0 {
        j += 1;
        let candidate = if dir == 0 {
            let row = t.rows.get(j - 1).cloned().unwrap_or_default();
            let (q, d, r) = bump_traced(p, dir, &row, trace);
            p = q;
            dir = d;
            Some(t.with_row(j, r))
        } else {
            let col = t.column(j);
            let (q, d, c) = bump_traced(p, dir, &col, trace);
            p = q;
            dir = d;
            t.with_column(j, &c)
        };
        match candidate {
            Some(c) if c.is_increasing() => t = c,
            _ => trace.rejected += 1,
        }
    }
    (j, dir, t)
}

/// Shifted Hecke insertion of a word.
pub fn shifted_hecke_insert(word: &[i64]) -> (ShiftedTableau, SetValuedShiftedTableau) {
    let (p, q, _) = shifted_hecke_insert_traced(word);
    (p, q)
}

fn shifted_hecke_insert_traced(word: &[i64]) -> (ShiftedTableau, SetValuedShiftedTableau, InsertTrace) {
    let mut trace = InsertTrace::default();
    let mut p = ShiftedTableau::empty();
    let mut q = SetValuedShiftedTableau::empty();
    for (k, &a) in word.iter().enumerate() {
        let i = k as i64 + 1;
        let (j, dir, next) = insert_traced(a, &p, &mut trace);
        p = next;
        let lengths = p.row_lengths();
        for (r, &len) in lengths.iter().enumerate() {
            let have = q.rows.get(r).map_or(0, |row| row.len());
            if have < len {
                assert_eq!(have + 1, len, "shape grew by more than one cell");
                q.push_cell(r + 1, r + 1 + have);
            }
        }
        if dir == 0 && j <= lengths.len() {
            // the column holding the end of row j
            let c = j + lengths[j - 1] - 1;
            let bottom = (1..=c).take_while(|&r| r <= lengths.len() && r + lengths[r - 1] > c).last().unwrap();
            q.add(bottom, c, i);
        } else {
            // a rejected new row ends like a column insertion into column j
            let r = p.column(j).len();
            q.add(r, r + lengths[r - 1] - 1, -i);
        }
    }
    (p, q, trace)
}

/// `{i : a_i > a_{i+1}}`.
pub fn word_descents(word: &[i64]) -> BTreeSet<usize> {
    (1..word.len()).filter(|&i| word[i - 1] > word[i]).collect()
}

/// The descent set of a standard set-valued shifted tableau.
pub fn tableau_descents(t: &SetValuedShiftedTableau) -> BTreeSet<usize> {
    let pos: HashMap<i64, (usize, usize)> = t.entries().map(|(p, v)| (v, p)).collect();
    let n = t.num_entries() as i64;
    (1..n)
        .filter(|&i| {
            let (pi, ni, pj, nj) = (pos.get(&i), pos.get(&-i), pos.get(&(i + 1)), pos.get(&-(i + 1)));
            let c1 = matches!((pi, pj), (Some(a), Some(b)) if a.0 < b.0);
            let c2 = pi.is_some() && nj.is_some();
            let c3 = matches!((ni, nj), (Some(a), Some(b)) if b.0 < a.0);
            let c4 = matches!((ni, nj), (Some(a), Some(b)) if a.0 == b.0 && a != b);
            c1 || c2 || c3 || c4
        })
        .map(|i| i as usize)
        .collect()
}

/// The descent set of a standard shifted tableau.
pub fn smt_descents(t: &ShiftedTableau) -> BTreeSet<usize> {
    let pos: HashMap<i64, (usize, usize)> = t.cells().map(|(p, v)| (v, p)).collect();
    let n = t.size() as i64;
    (1..n)
        .filter(|&i| {
            let (pi, ni, pj, nj) = (pos.get(&i), pos.get(&-i), pos.get(&(i + 1)), pos.get(&-(i + 1)));
            let c1 = matches!((pi, pj), (Some(a), Some(b)) if a.0 < b.0);
            let c2 = matches!((ni, nj), (Some(a), Some(b)) if a.1 < b.1);
            let c3 = pi.is_some() && nj.is_some();
            c1 || c2 || c3
        })
        .map(|i| i as usize)
        .collect()
}

/// All words reachable from `word` by one weak K-Knuth move, keeping length at most `max_len`.
pub fn weak_k_knuth_neighbors(word: &[i64], max_len: usize, with_idempotent: bool) -> Vec<Vec<i64>> {
    let mut out = Vec::new();
    let n = word.len();
    if n >= 2 && word[0] != word[1] {
        let mut w = word.to_vec();
        w.swap(0, 1);
        out.push(w);
    }
    for k in 0..n.saturating_sub(2) {
        let (x, y, z) = (word[k], word[k + 1], word[k + 2]);
        let mut push = |t: [i64; 3]| {
            let mut w = word.to_vec();
            w[k..k + 3].copy_from_slice(&t);
            out.push(w);
        };
        // a c b <-> c a b
        if x < z && z < y {
            push([y, x, z]);
        }
        if y < z && z < x {
            push([y, x, z]);
        }
        // b a c <-> b c a
        if y < x && x < z {
            push([x, z, y]);
        }
        if z < x && x < y {
            push([x, z, y]);
        }
        // a b a <-> b a b
        if x == z && x != y {
            push([y, x, y]);
        }
    }
    if with_idempotent {
        for k in 0..n {
            if k + 1 < n && word[k] == word[k + 1] {
                let mut w = word.to_vec();
                w.remove(k);
                out.push(w);
            }
            if n < max_len {
                let mut w = word.to_vec();
                w.insert(k, word[k]);
                out.push(w);
            }
        }
    }
    out
}

/// Outcome of a bounded equivalence search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KnuthOutcome {
    Equivalent,
    /// The Demazure-conjugation invariant differs, so no sequence of moves exists.
    Inequivalent,
    /// No connecting sequence within the length budget.
    NotFoundWithinBudget,
}

/// `v⁻¹ ∘ v` for `v = s_{a_1} ∘ ⋯ ∘ s_{a_k}`, which weak K-Knuth moves preserve.
pub fn knuth_invariant(word: &[i64]) -> Involution {
    word.iter().fold(Involution::identity(), |y, &a| y.demazure_conj(a))
}

/// Breadth-first search over weak K-Knuth moves through words of length at most `budget`.
pub fn weak_k_knuth_equivalent(a: &[i64], b: &[i64], budget: usize) -> KnuthOutcome {
    if knuth_invariant(a) != knuth_invariant(b) {
        return KnuthOutcome::Inequivalent;
    }
    let budget = budget.max(a.len()).max(b.len());
    let mut seen: HashSet<Vec<i64>> = HashSet::from([a.to_vec()]);
    let mut queue = VecDeque::from([a.to_vec()]);
    while let Some(w) = queue.pop_front() {
        if w == b {
            return KnuthOutcome::Equivalent;
        }
        for v in weak_k_knuth_neighbors(&w, budget, true) {
            if seen.insert(v.clone()) {
                queue.push_back(v);
            }
        }
    }
    KnuthOutcome::NotFoundWithinBudget
}

/// Involution Coxeter–Knuth insertion of an involution word.
///
/// Panics if an involution word ever takes the equal-last or rejection branch, which
/// the bijection rules out.
pub fn involution_ck_insert(word: &[i64]) -> Result<(ShiftedTableau, ShiftedTableau)> {
    let Some(y) = Involution::from_involution_word(word) else {
        return Err(Error::Invalid(format!("{word:?} is not an involution word")));
    };
    let (p, q, trace) = shifted_hecke_insert_traced(word);
    assert_eq!(trace, InsertTrace::default(), "involution word {word:?} took a degenerate insertion step");
    let q = q.to_tableau().expect("recording tableau of an involution word has singleton cells");
    debug_assert!(y.has_involution_word(&p.reading_word()));
    Ok((p, q))
}

/// Increasing shifted tableaux of shape `lambda` with entries in `1..=max`, filled row by row.
pub fn increasing_tableaux(lambda: &StrictPartition, max: i64) -> Vec<ShiftedTableau> {
    let parts = lambda.parts().to_vec();
    let cells: Vec<(usize, usize)> = lambda.shifted_cells();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<i64>> = parts.iter().map(|&p| Vec::with_capacity(p)).collect();
    fn go(cells: &[(usize, usize)], k: usize, max: i64, rows: &mut Vec<Vec<i64>>, out: &mut Vec<ShiftedTableau>) {
        if k == cells.len() {
            out.push(ShiftedTableau { rows: rows.clone() });
            return;
        }
        let (i, j) = cells[k];
        let left = if j > i { rows[i - 1][j - i - 1] } else { 0 };
        let up = if i > 1 { rows[i - 2][j - i + 1] } else { 0 };
        for v in left.max(up) + 1..=max {
            rows[i - 1].push(v);
            go(cells, k + 1, max, rows, out);
            rows[i - 1].pop();
        }
    }
    go(&cells, 0, max, &mut rows, &mut out);
    out
}

/// `β_{y,λ}`: increasing shifted tableaux of each shape whose reading word is an involution word of `y`.
pub fn beta_coefficients(y: &Involution, guard: usize) -> Result<SymFunExpansion<BigInt>> {
    let n = y.inv_length();
    if n > guard {
        return Err(Error::Guard { what: "involution length", value: n, guard });
    }
    if !y.in_i_infinity() {
        return Err(Error::Invalid(format!("{y} has support outside the positive integers")));
    }
    let max = y.support_bounds().map_or(0, |(_, hi)| hi - 1);
    let mut e = SymFunExpansion::new(Basis::SchurP);
    for lambda in StrictPartition::all_of(n) {
        let count = increasing_tableaux(&lambda, max).iter().filter(|t| y.has_involution_word(&t.reading_word())).count();
        if count > 0 {
            e.add(lambda.to_partition(), BigInt::from(count));
        }
    }
    Ok(e)
}

/// A mismatch between shifted Coxeter–Knuth classes and insertion tableaux.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CkMismatch {
    pub first: Vec<i64>,
    pub second: Vec<i64>,
    /// True when the words share a class but not a tableau.
    pub same_class: bool,
}

/// Partitions the involution words of length at most `max_len` over `1..=alphabet` by
/// moves (1)–(4) and by insertion tableau, and reports any disagreement.
pub fn conjecture_ck_search(max_len: usize, alphabet: i64) -> Vec<CkMismatch> {
    let mut out = Vec::new();
    for len in 0..=max_len {
        let mut words: Vec<Vec<i64>> = Vec::new();
        let mut cur = vec![1i64; len];
        loop {
            if Involution::from_involution_word(&cur).is_some() {
                words.push(cur.clone());
            }
            let Some(k) = (0..len).rev().find(|&k| cur[k] < alphabet) else { break };
            cur[k] += 1;
            for c in cur.iter_mut().skip(k + 1) {
                *c = 1;
            }
        }
        let index: HashMap<&Vec<i64>, usize> = words.iter().enumerate().map(|(k, w)| (w, k)).collect();
        let mut parent: Vec<usize> = (0..words.len()).collect();
        fn find(p: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while p[r] != r {
                r = p[r];
            }
            let mut x = x;
            while p[x] != r {
                let next = p[x];
                p[x] = r;
                x = next;
            }
            r
        }
        for (k, w) in words.iter().enumerate() {
            for v in weak_k_knuth_neighbors(w, len, false) {
                let other = *index.get(&v).unwrap_or_else(|| panic!("move left the involution words: {w:?} -> {v:?}"));
                let (a, b) = (find(&mut parent, k), find(&mut parent, other));
                parent[a] = b;
            }
        }
        let tableaux: Vec<ShiftedTableau> = words.iter().map(|w| shifted_hecke_insert(w).0).collect();
        let mut by_class: BTreeMap<usize, usize> = BTreeMap::new();
        let mut by_tableau: HashMap<&ShiftedTableau, usize> = HashMap::new();
        for k in 0..words.len() {
            let c = find(&mut parent, k);
            let rep = *by_class.entry(c).or_insert(k);
            if tableaux[rep] != tableaux[k] {
                out.push(CkMismatch { first: words[rep].clone(), second: words[k].clone(), same_class: true });
            }
            let rep = *by_tableau.entry(&tableaux[k]).or_insert(k);
            if find(&mut parent, rep) != c {
                out.push(CkMismatch { first: words[rep].clone(), second: words[k].clone(), same_class: false });
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involution::all_involutions;
    use crate::symfunc::QuasiSum;
    use crate::transition::expand_fhat;
    use proptest::prelude::*;

    fn t(rows: &[&[i64]]) -> ShiftedTableau {
        ShiftedTableau::from_rows(rows.iter().map(|r| r.to_vec()).collect()).unwrap()
    }

    fn sv(rows: &[&[&[i64]]]) -> SetValuedShiftedTableau {
        SetValuedShiftedTableau::from_rows(rows.iter().map(|r| r.iter().map(|c| c.to_vec()).collect()).collect()).unwrap()
    }

    fn all_words(len: usize, alphabet: i64) -> Vec<Vec<i64>> {
        (0..len).fold(vec![Vec::new()], |acc, _| {
            acc.into_iter().flat_map(|w| (1..=alphabet).map(move |a| [w.clone(), vec![a]].concat())).collect()
        })
    }

    #[test]
    fn bump_cases() {
        assert_eq!(bump(7, 0, &[3, 5]), (0, 0, vec![3, 5, 7]));
        assert_eq!(bump(5, 0, &[3, 5]), (0, 0, vec![3, 5]));
        assert_eq!(bump(4, 0, &[3, 5]), (5, 0, vec![3, 4]));
        assert_eq!(bump(2, 0, &[3, 5]), (3, 1, vec![2, 5]));
        assert_eq!(bump(3, 0, &[3, 5]), (5, 1, vec![3, 5]));
        assert_eq!(bump(1, 0, &[]), (0, 0, vec![1]));
    }

    #[test]
    fn insert_cases() {
        assert_eq!(insert(3, &ShiftedTableau::empty()), (1, 0, t(&[&[3]])));
        let (j, dir, p) = insert(4, &t(&[&[5]]));
        assert_eq!((j, dir, p), (2, 1, t(&[&[4, 5]])));
        let (_, _, p) = insert(2, &t(&[&[1, 3, 4, 5], &[4, 5]]));
        assert_eq!(p, t(&[&[1, 2, 4, 5], &[3, 5]]));
    }

    #[test]
    fn figure_trace() {
        let word = [5, 4, 1, 3, 4, 5, 2, 1, 2];
        let qs = [
            sv(&[&[&[1]]]),
            sv(&[&[&[1], &[-2]]]),
            sv(&[&[&[1], &[-2], &[-3]]]),
            sv(&[&[&[1], &[-2], &[-3]], &[&[4]]]),
            sv(&[&[&[1], &[-2], &[-3]], &[&[4], &[5]]]),
            sv(&[&[&[1], &[-2], &[-3], &[6]], &[&[4], &[5]]]),
            sv(&[&[&[1], &[-2], &[-3], &[6, -7]], &[&[4], &[5]]]),
            sv(&[&[&[1], &[-2], &[-3], &[6, -7], &[-8]], &[&[4], &[5]]]),
            sv(&[&[&[1], &[-2], &[-3], &[6, -7], &[-8]], &[&[4], &[5, -9]]]),
        ];
        let ps = [
            t(&[&[5]]),
            t(&[&[4, 5]]),
            t(&[&[1, 4, 5]]),
            t(&[&[1, 3, 5], &[4]]),
            t(&[&[1, 3, 4], &[4, 5]]),
            t(&[&[1, 3, 4, 5], &[4, 5]]),
            t(&[&[1, 2, 4, 5], &[3, 5]]),
            t(&[&[1, 2, 3, 4, 5], &[3, 5]]),
            t(&[&[1, 2, 3, 4, 5], &[3, 5]]),
        ];
        for k in 1..=word.len() {
            let (p, q) = shifted_hecke_insert(&word[..k]);
            assert_eq!(p, ps[k - 1], "P after {k}");
            assert_eq!(q, qs[k - 1], "Q after {k}");
        }
        let (p, q) = shifted_hecke_insert(&word);
        assert_eq!(p.reading_word(), vec![3, 5, 1, 2, 3, 4, 5]);
        assert_eq!(tableau_descents(&q), BTreeSet::from([1, 2, 6, 7]));
        assert_eq!(word_descents(&word), BTreeSet::from([1, 2, 6, 7]));
        assert!(q.is_standard());
        assert_eq!(q.to_string(), "     1     2'     3' {6,7'}     8'\n            4 {5,9'}");
        assert_eq!(p.to_string(), "1 2 3 4 5\n  3 5");
        assert_eq!(shifted_hecke_insert(&[]), (ShiftedTableau::empty(), SetValuedShiftedTableau::empty()));
    }

    #[test]
    fn hecke_insertion_is_injective() {
        for len in 0..=6 {
            let mut seen = HashSet::new();
            for w in all_words(len, 3) {
                let (p, q) = shifted_hecke_insert(&w);
                assert!(p.is_increasing(), "{w:?}");
                assert!(q.is_standard(), "{w:?}");
                assert_eq!(q.num_entries(), len);
                assert_eq!(p.shape(), q.shape());
                assert!(seen.insert((p, q)), "{w:?} collides");
            }
        }
    }

    #[test]
    fn descents_agree() {
        for len in 0..=7 {
            for w in all_words(len, 4) {
                let (_, q) = shifted_hecke_insert(&w);
                assert_eq!(word_descents(&w), tableau_descents(&q), "{w:?}");
            }
        }
    }

    proptest! {
        #[test]
        fn descents_agree_on_long_words(w in proptest::collection::vec(1i64..=6, 0..12)) {
            let (p, q) = shifted_hecke_insert(&w);
            prop_assert_eq!(word_descents(&w), tableau_descents(&q));
            prop_assert_eq!(shifted_hecke_insert(&p.reading_word()).0, p);
        }
    }

    #[test]
    fn reading_words_reinsert() {
        let lambda = StrictPartition::new(vec![3, 1]).unwrap();
        let all = increasing_tableaux(&lambda, 5);
        assert!(!all.is_empty());
        for p in all {
            assert!(p.is_increasing());
            assert_eq!(shifted_hecke_insert(&p.reading_word()).0, p);
        }
        assert_eq!(t(&[&[7]]).reading_word(), vec![7]);
    }

    #[test]
    fn k_knuth_moves() {
        assert_eq!(weak_k_knuth_equivalent(&[1, 2, 3], &[2, 1, 3], 3), KnuthOutcome::Equivalent);
        assert_eq!(weak_k_knuth_equivalent(&[1, 1], &[1], 2), KnuthOutcome::Equivalent);
        assert_eq!(weak_k_knuth_equivalent(&[1], &[2], 3), KnuthOutcome::Inequivalent);
        assert_eq!(weak_k_knuth_equivalent(&[1, 3, 2], &[3, 1, 2], 3), KnuthOutcome::Equivalent);
    }

    #[test]
    fn equal_tableaux_are_k_knuth_equivalent() {
        let mut classes: HashMap<ShiftedTableau, Vec<Vec<i64>>> = HashMap::new();
        for len in 0..=5 {
            for w in all_words(len, 3) {
                classes.entry(shifted_hecke_insert(&w).0).or_default().push(w);
            }
        }
        for words in classes.values() {
            for w in &words[1..] {
                let out = weak_k_knuth_equivalent(&words[0], w, 6);
                assert_eq!(out, KnuthOutcome::Equivalent, "{:?} {w:?}", words[0]);
            }
        }
    }

    #[test]
    fn knuth_invariant_is_preserved() {
        for w in all_words(4, 3) {
            for v in weak_k_knuth_neighbors(&w, 5, true) {
                assert_eq!(knuth_invariant(&w), knuth_invariant(&v), "{w:?} {v:?}");
            }
        }
    }

    #[test]
    fn ck_example() {
        let (p, q) = involution_ck_insert(&[3, 5, 4, 1, 2, 3]).unwrap();
        assert_eq!(p, t(&[&[1, 2, 3], &[3, 4], &[5]]));
        assert_eq!(q, t(&[&[1, 2, -4], &[3, -5], &[6]]));
        assert!(q.is_standard());
        let y = Involution::parse("(1,4)(2,5)(3,6)").unwrap();
        assert!(y.has_involution_word(&p.reading_word()));
        assert_eq!(involution_ck_insert(&[]).unwrap(), (ShiftedTableau::empty(), ShiftedTableau::empty()));
        assert!(involution_ck_insert(&[1, 1]).is_err());
    }

    #[test]
    fn ck_bijection_for_longest() {
        for n in 1..=5 {
            let w = Involution::longest(n);
            let words = w.involution_words(20).unwrap();
            let shape = StrictPartition::shifted_staircase(n);
            let mut pairs = HashSet::new();
            for a in &words {
                let (p, q) = involution_ck_insert(a).unwrap();
                assert_eq!(p.shape(), shape);
                assert!(q.is_standard());
                assert!(pairs.insert(q));
            }
            if n == 4 {
                assert_eq!(words.len(), 8);
            }
        }
    }

    #[test]
    fn ck_insertion_on_i6() {
        for y in all_involutions(6) {
            let mut seen = HashSet::new();
            let mut quasi = QuasiSum::new(y.inv_length());
            y.for_each_involution_word(20, |a| {
                let (p, q) = involution_ck_insert(a).unwrap();
                assert!(y.has_involution_word(&p.reading_word()));
                assert_eq!(word_descents(a), smt_descents(&q), "{a:?}");
                assert!(seen.insert((p, q)));
                let n = a.len();
                quasi.add((1..n).filter(|i| !word_descents(a).contains(i)).collect());
            })
            .unwrap();
            let beta = beta_coefficients(&y, 20).unwrap();
            assert_eq!(beta, expand_fhat(&y), "{y}");
            assert_eq!(quasi.expand(Basis::SchurP).unwrap(), beta, "{y}");
        }
    }

    #[test]
    fn beta_examples() {
        let e = beta_coefficients(&Involution::parse("(2,4)(5,7)").unwrap(), 10).unwrap();
        assert_eq!(e.to_string(), "P(4) + 2*P(3,1)");
        for n in 1..=6 {
            let e = beta_coefficients(&Involution::longest(n), 20).unwrap();
            assert_eq!(e.single(), Some(&StrictPartition::shifted_staircase(n).to_partition()));
        }
        assert_eq!(beta_coefficients(&Involution::identity(), 1).unwrap().to_string(), "P()");
        assert!(beta_coefficients(&Involution::longest(6), 3).is_err());
    }

    #[test]
    fn tableau_rules() {
        assert!(t(&[&[1, -2], &[3]]).is_standard());
        assert!(!t(&[&[-1, 2], &[3]]).is_standard());
        assert!(t(&[&[1, 1], &[2]]).is_semistandard());
        assert!(!t(&[&[1, 2], &[2]]).is_semistandard());
        assert!(t(&[&[1, -2], &[2]]).is_semistandard());
        assert!(ShiftedTableau::from_rows(vec![vec![1], vec![2]]).is_err());
        assert_eq!(smt_descents(&t(&[&[1, 2], &[3]])), BTreeSet::from([2]));
        assert_eq!(smt_descents(&t(&[&[1, -2], &[3]])), BTreeSet::from([1]));
    }

    #[test]
    fn conjecture_search_small() {
        assert!(conjecture_ck_search(5, 4).is_empty());
        assert!(conjecture_ck_search(1, 3).is_empty());
    }
}
