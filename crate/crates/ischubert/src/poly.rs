//! Sparse multivariate polynomials in `x_1, x_2, ...` over an exact coefficient ring,
//! with divided differences, isobaric operators and the variable action of `S_∞`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_traits::{One, Signed, Zero};

use crate::perm::Permutation;

/// Coefficient rings usable in [`Polynomial`].
pub trait Coefficient: Signed + Clone + fmt::Debug + fmt::Display + Send + Sync + 'static {}

impl<T: Signed + Clone + fmt::Debug + fmt::Display + Send + Sync + 'static> Coefficient for T {}

/// Exponent vector `(e_1, e_2, ...)` with trailing zeros removed.
///
/// The derived order is lexicographic on the infinite exponent sequence.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(mut exps: Vec<u32>) -> Self {
        while exps.last() == Some(&0) {
            exps.pop();
        }
        Monomial(exps)
    }

    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    /// The variable `x_i`, `i ≥ 1`.
    pub fn var(i: usize) -> Self {
        let mut v = vec![0; i];
        v[i - 1] = 1;
        Monomial(v)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    /// Exponent of `x_i` (1-based).
    pub fn exp(&self, i: usize) -> u32 {
        self.0.get(i - 1).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Index of the last variable present.
    pub fn num_vars(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let (a, b) = if self.0.len() >= other.0.len() { (self, other) } else { (other, self) };
        let mut v = a.0.clone();
        for (x, y) in v.iter_mut().zip(&b.0) {
            *x += y;
        }
        Monomial(v)
    }

    /// `self / other` when `other` divides `self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        if other.0.len() > self.0.len() {
            return None;
        }
        let mut v = self.0.clone();
        for (x, y) in v.iter_mut().zip(&other.0) {
            *x = x.checked_sub(*y)?;
        }
        Some(Monomial::new(v))
    }

    fn with_exps(&self, i: usize, a: u32, b: u32) -> Monomial {
        let mut v = self.0.clone();
        if v.len() < i + 1 {
            v.resize(i + 1, 0);
        }
        v[i - 1] = a;
        v[i] = b;
        Monomial::new(v)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let factors: Vec<String> = self
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| if e == 1 { format!("x{}", i + 1) } else { format!("x{}^{}", i + 1, e) })
            .collect();
        if factors.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&factors.join("*"))
        }
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Which operator [`Polynomial::op_word`] applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OpKind {
    Divided,
    Isobaric,
}

#[derive(Clone, PartialEq, Default)]
pub struct Polynomial<C> {
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> Polynomial<C> {
    pub fn constant(c: C) -> Self {
        let mut p = Self { terms: BTreeMap::new() };
        p.add_term(Monomial::one(), c);
        p
    }

    /// The variable `x_i`.
    pub fn var(i: usize) -> Self {
        Self::term(Monomial::var(i), C::one())
    }

    pub fn term(m: Monomial, c: C) -> Self {
        let mut p = Self { terms: BTreeMap::new() };
        p.add_term(m, c);
        p
    }

    /// `x^a` for an exponent vector.
    pub fn monomial(exps: &[u32]) -> Self {
        Self::term(Monomial::new(exps.to_vec()), C::one())
    }

    /// `x_i + x_j` (or `x_i` when `i = j`), the factor attached to a diagram cell.
    pub fn cell_factor(i: usize, j: usize) -> Self {
        if i == j {
            Self::var(i)
        } else {
            Self::var(i) + Self::var(j)
        }
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Monomial, C)>) -> Self {
        let mut p = Self { terms: BTreeMap::new() };
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// Adds `c·m` in place.
    pub fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Terms in increasing lexicographic order of exponents.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Coefficient of `x^a`.
    pub fn coeff_of(&self, exps: &[u32]) -> C {
        self.coeff(&Monomial::new(exps.to_vec()))
    }

    /// Largest total degree, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Index of the last variable that occurs.
    pub fn num_vars(&self) -> usize {
        self.terms.keys().map(|m| m.num_vars()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(m, d)| (m.clone(), d.clone() * c.clone())).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &C) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { terms: self.terms.iter().map(|(k, d)| (k.mul(m), d.clone() * c.clone())).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Substitution `x_i ↦ x_{σ(i)}`; `σ` must fix every nonpositive integer.
    pub fn act(&self, sigma: &Permutation) -> Self {
        assert!(sigma.in_s_infinity(), "variables are indexed by positive integers");
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut v: Vec<u32> = Vec::new();
            for (k, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let target = sigma.apply(k as i64 + 1) as usize;
                if v.len() < target {
                    v.resize(target, 0);
                }
                v[target - 1] = e;
            }
            out.add_term(Monomial::new(v), c.clone());
        }
        out
    }

    /// `s_i f`, swapping `x_i` and `x_{i+1}`.
    pub fn swap_vars(&self, i: usize) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            out.add_term(m.with_exps(i, m.exp(i + 1), m.exp(i)), c.clone());
        }
        out
    }

    /// `∂_i f = (f − s_i f)/(x_i − x_{i+1})`, computed monomial by monomial.
    pub fn divided_difference(&self, i: usize) -> Self {
        assert!(i >= 1);
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let (a, b) = (m.exp(i), m.exp(i + 1));
            if a == b {
                continue;
            }
            let (hi, lo, coeff) = if a > b { (a, b, c.clone()) } else { (b, a, -c.clone()) };
            for k in 0..hi - lo {
                out.add_term(m.with_exps(i, hi - 1 - k, lo + k), coeff.clone());
            }
        }
        out
    }

    /// `π_i f = ∂_i(x_i f)`.
    pub fn isobaric(&self, i: usize) -> Self {
        let out = self.mul_monomial(&Monomial::var(i), &C::one()).divided_difference(i);
        debug_assert!(out == self + &(&Self::var(i + 1) * &self.divided_difference(i)));
        out
    }

    /// Applies `∂_w` or `π_w` along a reduced word of `w` (last letter first).
    pub fn op_word(&self, kind: OpKind, w: &Permutation) -> Self {
        assert!(w.in_s_infinity());
        let mut f = self.clone();
        for &i in w.reduced_word().iter().rev() {
            f = match kind {
                OpKind::Divided => f.divided_difference(i as usize),
                OpKind::Isobaric => f.isobaric(i as usize),
            };
        }
        f
    }

    /// Applies the operators for the word `(a_1, ..., a_k)`, `a_k` first.
    pub fn op_sequence(&self, kind: OpKind, word: &[i64]) -> Self {
        let mut f = self.clone();
        for &i in word.iter().rev() {
            f = match kind {
                OpKind::Divided => f.divided_difference(i as usize),
                OpKind::Isobaric => f.isobaric(i as usize),
            };
        }
        f
    }

    /// Lexicographically greatest term.
    pub fn leading_term(&self) -> Option<(Monomial, C)> {
        self.terms.iter().next_back().map(|(m, c)| (m.clone(), c.clone()))
    }

    /// Lexicographically least term; `None` stands for `lt(0) = 0`.
    pub fn least_term(&self) -> Option<(Monomial, C)> {
        self.terms.iter().next().map(|(m, c)| (m.clone(), c.clone()))
    }

    /// Exact quotient by `d`, whose leading coefficient must be `±1`; `None` if inexact.
    pub fn exact_div(&self, d: &Self) -> Option<Self> {
        let (lm, lc) = d.leading_term()?;
        assert!(lc.is_one() || (-lc.clone()).is_one(), "leading coefficient of divisor must be a unit");
        let mut rem = self.clone();
        let mut q = Self::zero();
        while let Some((m, c)) = rem.leading_term() {
            let t = m.div(&lm)?;
            let coef = c * lc.clone();
            rem -= &d.mul_monomial(&t, &coef);
            q.add_term(t, coef);
        }
        Some(q)
    }

    /// `ρ_n`: sets `x_{n+1}, x_{n+2}, ...` to zero.
    pub fn truncate(&self, n: usize) -> Self {
        Self {
            terms: self.terms.iter().filter(|(m, _)| m.num_vars() <= n).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// Whether `s_i f = f` for `i < n`.
    pub fn is_symmetric_in(&self, n: usize) -> bool {
        (1..n).all(|i| self.swap_vars(i) == *self)
    }

    /// Machine form: `(exponent vector, coefficient)` pairs in increasing lex order.
    pub fn to_pairs(&self) -> Vec<(Vec<u32>, C)> {
        self.terms.iter().map(|(m, c)| (m.0.clone(), c.clone())).collect()
    }

    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Polynomial<D> {
        Polynomial::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }
}

/// `x^{δ_n} = x_1^{n−1} x_2^{n−2} ⋯ x_{n−1}`.
pub fn staircase_monomial<C: Coefficient>(n: usize) -> Polynomial<C> {
    let exps: Vec<u32> = (0..n).map(|i| (n - 1 - i) as u32).collect();
    Polynomial::monomial(&exps)
}

/// `Δ_n = ∏_{1≤i<j≤n} (x_i − x_j)`.
pub fn vandermonde<C: Coefficient>(n: usize) -> Polynomial<C> {
    let mut p = Polynomial::one();
    for i in 1..=n {
        for j in i + 1..=n {
            p = &p * &(Polynomial::var(i) - Polynomial::var(j));
        }
    }
    p
}

impl<C: Coefficient> Zero for Polynomial<C> {
    fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl<C: Coefficient> One for Polynomial<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Coefficient> AddAssign<&Polynomial<C>> for Polynomial<C> {
    fn add_assign(&mut self, rhs: &Polynomial<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

impl<C: Coefficient> SubAssign<&Polynomial<C>> for Polynomial<C> {
    fn sub_assign(&mut self, rhs: &Polynomial<C>) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), -c.clone());
        }
    }
}

impl<C: Coefficient> Add<&Polynomial<C>> for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<C: Coefficient> Sub<&Polynomial<C>> for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<C: Coefficient> Mul<&Polynomial<C>> for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = Polynomial::zero();
        for (m, c) in &self.terms {
            for (k, d) in &rhs.terms {
                out.add_term(m.mul(k), c.clone() * d.clone());
            }
        }
        out
    }
}

impl<C: Coefficient> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        Polynomial { terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

impl<C: Coefficient> Add for Polynomial<C> {
    type Output = Polynomial<C>;
    fn add(mut self, rhs: Polynomial<C>) -> Polynomial<C> {
        self += &rhs;
        self
    }
}

impl<C: Coefficient> Sub for Polynomial<C> {
    type Output = Polynomial<C>;
    fn sub(mut self, rhs: Polynomial<C>) -> Polynomial<C> {
        self -= &rhs;
        self
    }
}

impl<C: Coefficient> Mul for Polynomial<C> {
    type Output = Polynomial<C>;
    fn mul(self, rhs: Polynomial<C>) -> Polynomial<C> {
        &self * &rhs
    }
}

impl<C: Coefficient> Neg for Polynomial<C> {
    type Output = Polynomial<C>;
    fn neg(self) -> Polynomial<C> {
        -&self
    }
}

impl<C: Coefficient> fmt::Display for Polynomial<C> {
    /// Terms in decreasing lexicographic order, e.g. `x1^2 + x1*x2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            if m.0.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{abs}*{m}")?;
            }
        }
        Ok(())
    }
}

impl<C: Coefficient> fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
