//! Schur, Schur P- and Schur Q-functions, skew Schur functions, fundamental
//! quasisymmetric functions, and exact expansion into these bases.
//!
//! Symmetric functions are handled through truncations `ρ_n f ∈ ℤ[x_1..x_n]` or
//! through their coefficients on the monomials `x^α` with `α` a partition.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::poly::{Coefficient, Monomial, Polynomial};
use crate::IntPolynomial;

pub use crate::partition::{Partition, StrictPartition};

/// Basis of a [`SymFunExpansion`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    Monomial,
    Schur,
    SchurP,
    SchurQ,
}

impl Basis {
    pub fn name(self) -> &'static str {
        match self {
            Basis::Monomial => "Monomial",
            Basis::Schur => "Schur",
            Basis::SchurP => "SchurP",
            Basis::SchurQ => "SchurQ",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Basis::Monomial => "m",
            Basis::Schur => "s",
            Basis::SchurP => "P",
            Basis::SchurQ => "Q",
        }
    }
}

/// A finite linear combination `Σ c_λ b_λ` over a named basis.
#[derive(Clone, PartialEq, Eq)]
pub struct SymFunExpansion<C = BigInt> {
    basis: Basis,
    terms: BTreeMap<Partition, C>,
}

impl<C: Coefficient> SymFunExpansion<C> {
    pub fn new(basis: Basis) -> Self {
        Self { basis, terms: BTreeMap::new() }
    }

    pub fn from_terms(basis: Basis, terms: impl IntoIterator<Item = (Partition, C)>) -> Self {
        let mut e = Self::new(basis);
        for (l, c) in terms {
            e.add(l, c);
        }
        e
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn add(&mut self, shape: Partition, c: C) {
        if matches!(self.basis, Basis::SchurP | Basis::SchurQ) {
            assert!(shape.is_strict(), "{shape} indexes a {} function", self.basis.name());
        }
        let slot = self.terms.entry(shape).or_insert_with(C::zero);
        *slot = slot.clone() + c;
        self.terms.retain(|_, c| !c.is_zero());
    }

    pub fn coeff(&self, shape: &Partition) -> C {
        self.terms.get(shape).cloned().unwrap_or_else(C::zero)
    }

    /// Terms with shapes in decreasing lexicographic order (a linear extension of
    /// decreasing dominance).
    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &C)> {
        self.terms.iter().rev()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// The shape when this is a single basis element with coefficient 1.
    pub fn single(&self) -> Option<&Partition> {
        match self.terms.iter().next() {
            Some((l, c)) if self.terms.len() == 1 && c.is_one() => Some(l),
            _ => None,
        }
    }

    pub fn shapes(&self) -> Vec<Partition> {
        self.terms().map(|(l, _)| l.clone()).collect()
    }

    pub fn is_nonnegative(&self) -> bool {
        self.terms.values().all(|c| !c.is_negative())
    }
}

impl<C: Coefficient> fmt::Display for SymFunExpansion<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (l, c)) in self.terms().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if !abs.is_one() {
                write!(f, "{abs}*")?;
            }
            write!(f, "{}{l}", self.basis.symbol())?;
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for SymFunExpansion<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `ρ_n f` for a homogeneous symmetric function `f`.
#[derive(Clone, Debug)]
pub struct TruncatedSymFun {
    pub poly: IntPolynomial,
    pub n: usize,
    pub degree: usize,
}

impl TruncatedSymFun {
    pub fn new(poly: IntPolynomial, n: usize, degree: usize) -> Self {
        debug_assert!(poly.num_vars() <= n);
        debug_assert!(poly.is_zero() || poly.degree() == Some(degree as u32));
        debug_assert!(poly.is_symmetric_in(n), "not symmetric: {poly}");
        Self { poly, n, degree }
    }

    pub fn truncate(&self, n: usize) -> Self {
        Self { poly: self.poly.truncate(n), n: n.min(self.n), degree: self.degree }
    }

    /// Coefficient of `x^α`; requires `ℓ(α) ≤ n`.
    pub fn monomial_coeff(&self, alpha: &Partition) -> BigInt {
        assert!(alpha.len() <= self.n);
        let exps: Vec<u32> = alpha.parts().iter().map(|&a| a as u32).collect();
        self.poly.coeff_of(&exps)
    }
}

impl PartialEq for TruncatedSymFun {
    /// Equality after truncating both sides to the common width.
    fn eq(&self, other: &Self) -> bool {
        let n = self.n.min(other.n);
        self.degree == other.degree && self.poly.truncate(n) == other.poly.truncate(n)
    }
}

fn var_pow(k: usize, e: usize) -> Monomial {
    let mut v = vec![0u32; k];
    v[k - 1] = e as u32;
    Monomial::new(v)
}

/// Cells of a (possibly shifted) diagram, as `(row, column)`, 1-based.
fn cells(shape: &[usize], shifted: bool) -> BTreeSet<(usize, usize)> {
    let mut out = BTreeSet::new();
    for (i, &p) in shape.iter().enumerate() {
        let start = if shifted { i + 1 } else { 1 };
        for j in 0..p {
            out.insert((i + 1, start + j));
        }
    }
    out
}

/// Shapes `ν` with `inner ⊆ ν ⊆ outer` (strict when `shifted`).
fn interval(outer: &[usize], inner: &[usize], shifted: bool) -> Vec<Vec<usize>> {
    fn go(outer: &[usize], inner: &[usize], shifted: bool, i: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == outer.len() {
            let mut v = cur.clone();
            while v.last() == Some(&0) {
                v.pop();
            }
            out.push(v);
            return;
        }
        let lo = inner.get(i).copied().unwrap_or(0);
        let mut hi = outer[i];
        if i > 0 {
            let prev = cur[i - 1];
            hi = hi.min(if shifted { prev.saturating_sub(1) } else { prev });
        }
        for p in lo..=hi {
            cur.push(p);
            go(outer, inner, shifted, i + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(outer, inner, shifted, 0, &mut Vec::new(), &mut out);
    out
}

/// Number of fillings of `ν/μ` by a single value (or, when `shifted`, by the marked
/// and unmarked copies of a single value) allowed in a semistandard tableau.
fn strip_weight(mu: &[usize], nu: &[usize], shifted: bool) -> u64 {
    let inner = cells(mu, shifted);
    let strip: BTreeSet<(usize, usize)> = cells(nu, shifted).difference(&inner).copied().collect();
    let mut weight = 1u64;
    for &(r, c) in &strip {
        let below = strip.contains(&(r + 1, c));
        if !shifted {
            if below {
                return 0;
            }
            continue;
        }
        // Unmarked copies may not repeat in a column, marked ones not in a row.
        let forced_unmarked = strip.contains(&(r, c - 1)) || r == c;
        let forced_marked = below;
        match (forced_unmarked, forced_marked) {
            (true, true) => return 0,
            (false, false) => weight *= 2,
            _ => {}
        }
    }
    weight
}

/// `Σ x^T` over semistandard (shifted, when asked) tableaux of shape `outer/inner`
/// with entries at most `n`.
fn tableau_poly(outer: &[usize], inner: &[usize], shifted: bool, n: usize) -> IntPolynomial {
    let shapes = interval(outer, inner, shifted);
    let mut weights: HashMap<(usize, usize), u64> = HashMap::new();
    let mut state: HashMap<usize, IntPolynomial> = HashMap::new();
    let start = shapes.iter().position(|s| s.as_slice() == trim(inner)).expect("inner shape inside outer");
    state.insert(start, IntPolynomial::one());
    for k in 1..=n {
        let mut next: HashMap<usize, IntPolynomial> = HashMap::new();
        for (&a, f) in &state {
            for b in 0..shapes.len() {
                let Some(d) = diff_size(&shapes[a], &shapes[b]) else { continue };
                let w = *weights.entry((a, b)).or_insert_with(|| strip_weight(&shapes[a], &shapes[b], shifted));
                if w == 0 {
                    continue;
                }
                let term = if d == 0 { f.clone() } else { f.mul_monomial(&var_pow(k, d), &BigInt::from(w)) };
                let slot = next.entry(b).or_insert_with(IntPolynomial::zero);
                *slot += &term;
            }
        }
        state = next;
    }
    let end = shapes.iter().position(|s| s.as_slice() == trim(outer)).unwrap();
    state.remove(&end).unwrap_or_else(IntPolynomial::zero)
}

/// Number of semistandard (shifted) tableaux of shape `outer/inner` and content `alpha`.
fn tableau_count(outer: &[usize], inner: &[usize], shifted: bool, alpha: &[usize]) -> BigInt {
    let shapes = interval(outer, inner, shifted);
    let start = shapes.iter().position(|s| s.as_slice() == trim(inner)).expect("inner shape inside outer");
    let mut state: HashMap<usize, BigInt> = HashMap::new();
    state.insert(start, BigInt::one());
    for &a in alpha {
        let mut next: HashMap<usize, BigInt> = HashMap::new();
        for (&s, c) in &state {
            for b in 0..shapes.len() {
                if diff_size(&shapes[s], &shapes[b]) != Some(a) {
                    continue;
                }
                let w = strip_weight(&shapes[s], &shapes[b], shifted);
                if w > 0 {
                    *next.entry(b).or_insert_with(BigInt::zero) += c * BigInt::from(w);
                }
            }
        }
        state = next;
    }
    let end = shapes.iter().position(|s| s.as_slice() == trim(outer)).unwrap();
    state.remove(&end).unwrap_or_else(BigInt::zero)
}

fn trim(s: &[usize]) -> &[usize] {
    let k = s.iter().rposition(|&p| p > 0).map_or(0, |k| k + 1);
    &s[..k]
}

/// `|ν| − |μ|` when `μ ⊆ ν`.
fn diff_size(mu: &[usize], nu: &[usize]) -> Option<usize> {
    if mu.len() > nu.len() || mu.iter().zip(nu).any(|(a, b)| a > b) {
        return None;
    }
    Some(nu.iter().sum::<usize>() - mu.iter().sum::<usize>())
}

/// `ρ_n s_λ`.
pub fn schur_poly(lambda: &Partition, n: usize) -> IntPolynomial {
    tableau_poly(lambda.parts(), &[], false, n)
}

/// `ρ_n s_{λ/μ}`.
pub fn skew_schur_poly(lambda: &Partition, mu: &Partition, n: usize) -> Result<IntPolynomial> {
    if !lambda.contains(mu) {
        return Err(Error::Invalid(format!("{mu} is not contained in {lambda}")));
    }
    Ok(tableau_poly(lambda.parts(), mu.parts(), false, n))
}

/// `ρ_n P_λ` as a generating function of semistandard shifted marked tableaux.
pub fn schur_p_poly(lambda: &StrictPartition, n: usize) -> IntPolynomial {
    tableau_poly(lambda.parts(), &[], true, n)
}

/// `ρ_n Q_λ = 2^{ℓ(λ)} ρ_n P_λ`.
pub fn schur_q_poly(lambda: &StrictPartition, n: usize) -> IntPolynomial {
    schur_p_poly(lambda, n).scale(&(BigInt::one() << lambda.len()))
}

pub fn schur(lambda: &Partition, n: usize) -> TruncatedSymFun {
    TruncatedSymFun::new(schur_poly(lambda, n), n, lambda.size())
}

pub fn schur_p(lambda: &StrictPartition, n: usize) -> TruncatedSymFun {
    TruncatedSymFun::new(schur_p_poly(lambda, n), n, lambda.size())
}

pub fn skew_schur(lambda: &Partition, mu: &Partition, n: usize) -> Result<TruncatedSymFun> {
    Ok(TruncatedSymFun::new(skew_schur_poly(lambda, mu, n)?, n, lambda.size() - mu.size()))
}

/// Coefficient of `x^α` in `s_λ` (a Kostka number).
pub fn kostka(lambda: &Partition, alpha: &[usize]) -> BigInt {
    tableau_count(lambda.parts(), &[], false, alpha)
}

/// Coefficient of `x^α` in `P_λ`.
pub fn schur_p_monomial_coeff(lambda: &StrictPartition, alpha: &[usize]) -> BigInt {
    tableau_count(lambda.parts(), &[], true, alpha)
}

/// Coefficient of `x^α` in `s_{λ/μ}`.
pub fn skew_kostka(lambda: &Partition, mu: &Partition, alpha: &[usize]) -> BigInt {
    tableau_count(lambda.parts(), mu.parts(), false, alpha)
}

/// Transition matrix from a basis to monomials in one degree:
/// `rows[λ][α]` is the coefficient of `x^α` in `b_λ`.
struct BasisTable {
    shapes: Vec<Partition>,
    alphas: Vec<Partition>,
    rows: Vec<Vec<BigInt>>,
}

type TableCache = RwLock<HashMap<(Basis, usize), Arc<BasisTable>>>;

fn table(basis: Basis, degree: usize) -> Arc<BasisTable> {
    static CACHE: OnceLock<TableCache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(t) = cache.read().unwrap().get(&(basis, degree)) {
        return t.clone();
    }
    let alphas = Partition::all_of(degree);
    let shapes: Vec<Partition> = match basis {
        Basis::SchurP | Basis::SchurQ => alphas.iter().filter(|a| a.is_strict()).cloned().collect(),
        _ => alphas.clone(),
    };
    let rows = shapes
        .iter()
        .map(|l| {
            alphas
                .iter()
                .map(|a| match basis {
                    Basis::Monomial => BigInt::from((l == a) as u8),
                    Basis::Schur => kostka(l, a.parts()),
                    Basis::SchurP => tableau_count(l.parts(), &[], true, a.parts()),
                    Basis::SchurQ => tableau_count(l.parts(), &[], true, a.parts()) << l.len(),
                })
                .collect()
        })
        .collect();
    let t = Arc::new(BasisTable { shapes, alphas, rows });
    // Triangularity with unit (or 2^ℓ) diagonal: this is what makes the solve exact and
    // the truncation at width = degree faithful.
    for (i, l) in t.shapes.iter().enumerate() {
        let j = t.alphas.iter().position(|a| a == l).unwrap();
        let diag = &t.rows[i][j];
        let want = if basis == Basis::SchurQ { BigInt::one() << l.len() } else { BigInt::one() };
        assert_eq!(*diag, want, "diagonal entry for {l}");
        for (a, c) in t.alphas.iter().zip(&t.rows[i]) {
            assert!(c.is_zero() || a.dominance_leq(l), "{} term x^{a} outside dominance range", l);
        }
    }
    cache.write().unwrap().insert((basis, degree), t.clone());
    t
}

/// Expands the homogeneous symmetric function of degree `degree` whose coefficient of
/// `x^α` is `coeff(α)` (for partitions `α`) in the given basis.
pub fn expand_from_monomials(
    basis: Basis,
    degree: usize,
    coeff: impl Fn(&Partition) -> BigInt,
) -> Result<SymFunExpansion<BigInt>> {
    let t = table(basis, degree);
    let target: Vec<BigInt> = t.alphas.iter().map(&coeff).collect();
    let mut out = SymFunExpansion::new(basis);
    let mut residual = target.clone();
    // shapes and alphas are both in decreasing lex order
    for (i, l) in t.shapes.iter().enumerate() {
        let j = t.alphas.iter().position(|a| a == l).unwrap();
        let diag = &t.rows[i][j];
        let r = &residual[j];
        if r.is_zero() {
            continue;
        }
        if !(r % diag).is_zero() {
            return Err(Error::NotInSpan(format!("coefficient of x^{l} not divisible by {diag}")));
        }
        let c = r / diag;
        for (res, m) in residual.iter_mut().zip(&t.rows[i]) {
            *res -= &c * m;
        }
        out.add(l.clone(), c);
    }
    if let Some(k) = residual.iter().position(|r| !r.is_zero()) {
        return Err(Error::NotInSpan(format!(
            "residual {} at x^{} in the {} expansion",
            residual[k],
            t.alphas[k],
            basis.name()
        )));
    }
    Ok(out)
}

/// Expansion of a truncation; requires symmetry and `n ≥ degree`.
pub fn expand_truncation(basis: Basis, f: &TruncatedSymFun) -> Result<SymFunExpansion<BigInt>> {
    if f.n < f.degree {
        return Err(Error::Invalid(format!("width {} is below degree {}", f.n, f.degree)));
    }
    if !f.poly.is_homogeneous() || (!f.poly.is_zero() && f.poly.degree() != Some(f.degree as u32)) {
        return Err(Error::Invalid("not homogeneous of the stated degree".into()));
    }
    if !f.poly.is_symmetric_in(f.n) {
        return Err(Error::NotInSpan("not symmetric".into()));
    }
    expand_from_monomials(basis, f.degree, |a| f.monomial_coeff(a))
}

pub fn expand_in_schur_p(f: &TruncatedSymFun) -> Result<SymFunExpansion<BigInt>> {
    expand_truncation(Basis::SchurP, f)
}

pub fn expand_in_schur(f: &TruncatedSymFun) -> Result<SymFunExpansion<BigInt>> {
    expand_truncation(Basis::Schur, f)
}

/// The monomial-basis coefficients of a Schur P-expansion, as a function of `α`.
pub fn monomial_coeff_of(e: &SymFunExpansion<BigInt>, alpha: &Partition) -> BigInt {
    let mut total = BigInt::zero();
    for (l, c) in e.terms() {
        if l.size() != alpha.size() {
            continue;
        }
        let m = match e.basis() {
            Basis::Monomial => BigInt::from((l == alpha) as u8),
            Basis::Schur => kostka(l, alpha.parts()),
            Basis::SchurP => tableau_count(l.parts(), &[], true, alpha.parts()),
            Basis::SchurQ => tableau_count(l.parts(), &[], true, alpha.parts()) << l.len(),
        };
        total += c * m;
    }
    total
}

/// Rewrites `Σ c_λ P_λ`, scaled by `2^κ`, as `Σ 2^{κ−ℓ(λ)} c_λ Q_λ`.
pub fn schur_q_scale(e: &SymFunExpansion<BigInt>, kappa: usize) -> Result<SymFunExpansion<BigInt>> {
    assert_eq!(e.basis(), Basis::SchurP);
    let mut out = SymFunExpansion::new(Basis::SchurQ);
    for (l, c) in e.terms() {
        let scaled = c << kappa;
        let d = BigInt::one() << l.len();
        if !(&scaled % &d).is_zero() {
            return Err(Error::Falsified(format!("2^{kappa}·{c} is not divisible by 2^{} for {l}", l.len())));
        }
        out.add(l.clone(), scaled / d);
    }
    Ok(out)
}

/// `{i ∈ [n−1] : a_i < a_{i+1}}`.
pub fn ascent_set(word: &[i64]) -> Vec<usize> {
    (1..word.len()).filter(|&i| word[i - 1] < word[i]).collect()
}

/// `{i ∈ [n−1] : a_i > a_{i+1}}`.
pub fn descent_set(word: &[i64]) -> Vec<usize> {
    (1..word.len()).filter(|&i| word[i - 1] > word[i]).collect()
}

/// `ρ_width f_{n,S}`, by enumerating weakly increasing index sequences.
pub fn fundamental_poly(n: usize, s: &[usize], width: usize) -> IntPolynomial {
    fn go(pos: usize, n: usize, s: &[usize], width: usize, last: usize, exps: &mut Vec<u32>, out: &mut IntPolynomial) {
        if pos == n {
            out.add_term(Monomial::new(exps.clone()), BigInt::one());
            return;
        }
        let lo = if pos == 0 {
            1
        } else if s.contains(&pos) {
            last + 1
        } else {
            last
        };
        for i in lo..=width {
            exps[i - 1] += 1;
            go(pos + 1, n, s, width, i, exps, out);
            exps[i - 1] -= 1;
        }
    }
    let mut out = IntPolynomial::zero();
    go(0, n, s, width, 0, &mut vec![0; width], &mut out);
    out
}

/// A sum `Σ f_{n,S}` over a multiset of subsets `S ⊆ [n−1]`, stored by subset.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct QuasiSum {
    pub n: usize,
    pub counts: BTreeMap<Vec<usize>, u64>,
}

impl QuasiSum {
    pub fn new(n: usize) -> Self {
        Self { n, counts: BTreeMap::new() }
    }

    pub fn add(&mut self, s: Vec<usize>) {
        debug_assert!(s.iter().all(|&i| i >= 1 && i < self.n.max(1)));
        *self.counts.entry(s).or_insert(0) += 1;
    }

    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    /// Coefficient of `x^α`: the number of `S` inside the partial sums of `α`.
    pub fn monomial_coeff(&self, alpha: &[usize]) -> BigInt {
        let mut sums = BTreeSet::new();
        let mut acc = 0;
        for &a in alpha.iter().filter(|&&a| a > 0) {
            acc += a;
            sums.insert(acc);
        }
        if acc != self.n {
            return BigInt::zero();
        }
        let c: u64 = self.counts.iter().filter(|(s, _)| s.iter().all(|i| sums.contains(i))).map(|(_, c)| c).sum();
        BigInt::from(c)
    }

    pub fn to_poly(&self, width: usize) -> IntPolynomial {
        let mut out = IntPolynomial::zero();
        for (s, &c) in &self.counts {
            out += &fundamental_poly(self.n, s, width).scale(&BigInt::from(c));
        }
        out
    }

    pub fn expand(&self, basis: Basis) -> Result<SymFunExpansion<BigInt>> {
        expand_from_monomials(basis, self.n, |a| self.monomial_coeff(a.parts()))
    }
}

/// A finite set of cells `(row, column)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewShape {
    cells: BTreeSet<(i64, i64)>,
}

impl SkewShape {
    pub fn from_cells(cells: impl IntoIterator<Item = (i64, i64)>) -> Self {
        Self { cells: cells.into_iter().collect() }
    }

    /// The diagram of `λ/μ`.
    pub fn new(lambda: &Partition, mu: &Partition) -> Result<Self> {
        if !lambda.contains(mu) {
            return Err(Error::Invalid(format!("{mu} is not contained in {lambda}")));
        }
        let mut cells = BTreeSet::new();
        for i in 1..=lambda.len() {
            for j in mu.part(i) + 1..=lambda.part(i) {
                cells.insert((i as i64, j as i64));
            }
        }
        Ok(Self { cells })
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn cells(&self) -> impl Iterator<Item = &(i64, i64)> {
        self.cells.iter()
    }

    fn matrix(&self) -> Vec<Vec<bool>> {
        let rows: BTreeSet<i64> = self.cells.iter().map(|c| c.0).collect();
        let cols: BTreeSet<i64> = self.cells.iter().map(|c| c.1).collect();
        rows.iter().map(|&r| cols.iter().map(|&c| self.cells.contains(&(r, c))).collect()).collect()
    }

    /// Whether one set can be carried to the other by permuting rows and permuting columns.
    pub fn is_equivalent(&self, other: &Self) -> bool {
        let a = self.matrix();
        let b = other.matrix();
        if a.len() != b.len() || self.len() != other.len() {
            return false;
        }
        let ncols = a.first().map_or(0, |r| r.len());
        if b.first().map_or(0, |r| r.len()) != ncols {
            return false;
        }
        let count = |r: &Vec<bool>| r.iter().filter(|&&x| x).count();
        let mut ca: Vec<usize> = a.iter().map(count).collect();
        let mut cb: Vec<usize> = b.iter().map(count).collect();
        ca.sort_unstable();
        cb.sort_unstable();
        if ca != cb {
            return false;
        }
        fn columns(m: &[&Vec<bool>], ncols: usize) -> Vec<Vec<bool>> {
            let mut cols: Vec<Vec<bool>> = (0..ncols).map(|j| m.iter().map(|r| r[j]).collect()).collect();
            cols.sort();
            cols
        }
        // Fix the row order of `a`; search for an order of the rows of `b` after which the
        // column multisets agree.
        let target = columns(&a.iter().collect::<Vec<_>>(), ncols);
        fn go<'a>(
            i: usize,
            a: &[Vec<bool>],
            b: &'a [Vec<bool>],
            used: &mut Vec<bool>,
            chosen: &mut Vec<&'a Vec<bool>>,
            target: &[Vec<bool>],
            ncols: usize,
        ) -> bool {
            if i == a.len() {
                return columns(chosen, ncols) == target;
            }
            let want = a[i].iter().filter(|&&x| x).count();
            let mut tried: BTreeSet<&Vec<bool>> = BTreeSet::new();
            for k in 0..b.len() {
                if used[k] || b[k].iter().filter(|&&x| x).count() != want || !tried.insert(&b[k]) {
                    continue;
                }
                used[k] = true;
                chosen.push(&b[k]);
                if go(i + 1, a, b, used, chosen, target, ncols) {
                    return true;
                }
                chosen.pop();
                used[k] = false;
            }
            false
        }
        go(0, &a, &b, &mut vec![false; b.len()], &mut Vec::new(), &target, ncols)
    }
}

/// Small integer helper for tests and callers that know the value fits.
pub fn to_i64(c: &BigInt) -> i64 {
    c.to_i64().expect("coefficient fits in i64")
}

/// `Σ_λ c_λ ρ_n b_λ` as a polynomial.
pub fn expansion_poly(e: &SymFunExpansion<BigInt>, n: usize) -> IntPolynomial {
    let mut out = Polynomial::zero();
    for (l, c) in e.terms() {
        let p = match e.basis() {
            Basis::Schur => schur_poly(l, n),
            Basis::SchurP => schur_p_poly(&l.to_strict().unwrap(), n),
            Basis::SchurQ => schur_q_poly(&l.to_strict().unwrap(), n),
            Basis::Monomial => monomial_symmetric_poly(l, n),
        };
        out += &p.scale(c);
    }
    out
}

/// `ρ_n m_λ`.
pub fn monomial_symmetric_poly(lambda: &Partition, n: usize) -> IntPolynomial {
    if lambda.len() > n {
        return IntPolynomial::zero();
    }
    let mut exps: Vec<u32> = lambda.parts().iter().map(|&p| p as u32).collect();
    exps.resize(n, 0);
    exps.sort_unstable();
    let mut out = IntPolynomial::zero();
    // iterate over distinct permutations in lexicographic order
    loop {
        out.add_term(Monomial::new(exps.clone()), BigInt::one());
        let Some(i) = (1..n).rev().find(|&i| exps[i - 1] < exps[i]) else { break };
        let j = (i..n).rev().find(|&j| exps[j] > exps[i - 1]).unwrap();
        exps.swap(i - 1, j);
        exps[i..].reverse();
    }
    out
}
