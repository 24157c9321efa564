//! Transition maps on involutions, the sets `Φ̂±`, Lascoux–Schützenberger trees and the
//! Schur P-expansion of involution Stanley symmetric functions.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::involution::Involution;
use crate::partition::{Partition, StrictPartition};
use crate::perm::Permutation;
use crate::poly::Polynomial;
use crate::schubert::{inv_schubert_poly, schubert_poly, Method};
use crate::symfunc::{expand_from_monomials, schur_q_scale, Basis, QuasiSum, SymFunExpansion};
use crate::IntPolynomial;

/// Rebuilds `y` with its restriction to the sorted set `a` replaced by the matching
/// `new` (given on positions `0..a.len()`).
fn replace_on(y: &Permutation, a: &[i64], new: &[usize]) -> Permutation {
    let (lo, hi) = y.support_bounds().map_or((a[0], *a.last().unwrap()), |(l, h)| (l.min(a[0]), h.max(*a.last().unwrap())));
    let images = (lo..=hi)
        .map(|x| match a.iter().position(|&v| v == x) {
            Some(k) => a[new[k]],
            None => y.apply(x),
        })
        .collect();
    Permutation::from_window(lo, images).expect("relabelled matching is a permutation")
}

/// `A = {i, j, y(i), y(j)}` sorted, `[y]_A` as partner positions, and the positions of `i, j`.
fn standardize_at(y: &Involution, i: i64, j: i64) -> (Vec<i64>, Vec<usize>, usize, usize) {
    let mut a = vec![i, j, y.apply(i), y.apply(j)];
    a.sort_unstable();
    a.dedup();
    let pos = |x: i64| a.iter().position(|&v| v == x).unwrap();
    let partner = a.iter().map(|&x| pos(y.apply(x))).collect();
    (a.clone(), partner, pos(i), pos(j))
}

/// `τ_ij(y)` for `i < j`, by the table of nontrivial values on `[y]_A`.
pub fn tau(i: i64, j: i64, y: &Involution) -> Involution {
    assert!(i < j, "tau needs i < j");
    let (a, std, ia, ja) = standardize_at(y, i, j);
    let ij = (ia, ja);
    let new: Option<Vec<usize>> = match std.as_slice() {
        [0, 1] if ij == (0, 1) => Some(vec![1, 0]),
        [1, 0, 2] if ij == (1, 2) || ij == (0, 2) => Some(vec![2, 1, 0]),
        [0, 2, 1] if ij == (0, 1) || ij == (0, 2) => Some(vec![2, 1, 0]),
        [1, 0, 3, 2] if ij == (1, 2) => Some(vec![2, 3, 0, 1]),
        [1, 0, 3, 2] if ij == (0, 2) || ij == (1, 3) || ij == (0, 3) => Some(vec![3, 1, 2, 0]),
        [2, 3, 0, 1] if ij == (0, 1) || ij == (2, 3) || ij == (0, 3) => Some(vec![3, 2, 1, 0]),
        _ => None,
    };
    match new {
        None => y.clone(),
        Some(new) => Involution::new(replace_on(y.perm(), &a, &new)).unwrap(),
    }
}

/// `η(z)` and the maximal visible inversion `(q, r)` of `z ≠ 1`.
pub fn eta(z: &Involution) -> Result<(Involution, (i64, i64))> {
    let Some((q, r)) = z.max_visible_inversion() else {
        return Err(Error::Invalid("eta of the identity".into()));
    };
    let (a, std, iq, ir) = standardize_at(z, q, r);
    let qr = (iq, ir);
    let new = match std.as_slice() {
        [1, 0] if qr == (0, 1) => vec![0, 1],
        [2, 1, 0] if qr == (1, 2) => vec![1, 0, 2],
        [3, 2, 1, 0] if qr == (2, 3) => vec![2, 3, 0, 1],
        _ => unreachable!("maximal visible inversion {:?} of {z} has no table row", (q, r)),
    };
    let y = Involution::new(replace_on(z.perm(), &a, &new)).unwrap();
    debug_assert_eq!(tau(q, r, &y), *z);
    debug_assert!(y.apply(q) <= q && y.apply(q) < z.apply(q) && z.apply(q) <= y.apply(r));
    debug_assert_eq!(y.inv_length() + 1, z.inv_length());
    Ok((y, (q, r)))
}

/// Sign of a `Φ`-set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sign {
    Plus,
    Minus,
}

fn window(bounds: Option<(i64, i64)>, r: i64) -> (i64, i64) {
    bounds.map_or((r, r), |(lo, hi)| (lo.min(r), hi.max(r)))
}

/// `Φ̂⁺(y, r)` or `Φ̂⁻(y, r)`, scanning one index past the support on the far side.
pub fn phi_hat(sign: Sign, y: &Involution, r: i64) -> Vec<Involution> {
    let (m, big_m) = window(y.support_bounds(), r);
    phi_hat_within(sign, y, r, m - 1, big_m + 1)
}

/// As [`phi_hat`], scanning partners in `[lo, hi]` outward from `r`.
pub fn phi_hat_within(sign: Sign, y: &Involution, r: i64, lo: i64, hi: i64) -> Vec<Involution> {
    let target = y.inv_length() + 1;
    let mut out: Vec<Involution> = Vec::new();
    let partners: Vec<i64> = match sign {
        Sign::Plus => (r + 1..=hi).collect(),
        Sign::Minus => (lo..r).rev().collect(),
    };
    for k in partners {
        let z = match sign {
            Sign::Plus => tau(r, k, y),
            Sign::Minus => tau(k, r, y),
        };
        if z.inv_length() == target && !out.contains(&z) {
            out.push(z);
        }
    }
    out
}

/// `Φ⁺(w, r)` or `Φ⁻(w, r)` for permutations.
pub fn phi(sign: Sign, w: &Permutation, r: i64) -> Vec<Permutation> {
    let (m, big_m) = window(w.support_bounds(), r);
    let target = w.length() + 1;
    let partners: Vec<i64> = match sign {
        Sign::Plus => (r + 1..=big_m + 1).collect(),
        Sign::Minus => (m - 1..r).collect(),
    };
    partners
        .into_iter()
        .map(|s| w.compose(&Permutation::transposition(r, s)))
        .filter(|v| v.length() == target)
        .collect()
}

fn inv_schubert_or_zero(z: &Involution) -> IntPolynomial {
    if z.in_i_infinity() {
        inv_schubert_poly(z, Method::Recursion)
    } else {
        IntPolynomial::zero()
    }
}

/// Both sides of `x_(p,q) 𝔖̂_y = Σ_{Φ̂⁺(y,q)} 𝔖̂_z − Σ_{Φ̂⁻(y,p)} 𝔖̂_z`.
pub fn transition_sides(y: &Involution, p: i64, q: i64) -> (IntPolynomial, IntPolynomial) {
    assert!(p >= 1 && y.apply(p) == q && p <= q, "({p},{q}) is not a cycle of {y}");
    let lhs = &Polynomial::cell_factor(p as usize, q as usize) * &inv_schubert_poly(y, Method::Recursion);
    let mut rhs = IntPolynomial::zero();
    for z in phi_hat(Sign::Plus, y, q) {
        rhs += &inv_schubert_or_zero(&z);
    }
    for z in phi_hat(Sign::Minus, y, p) {
        rhs -= &inv_schubert_or_zero(&z);
    }
    (lhs, rhs)
}

pub fn transition_identity_check(y: &Involution, p: i64, q: i64) -> bool {
    let (l, r) = transition_sides(y, p, q);
    l == r
}

/// Both sides of `x_r 𝔖_w = Σ_{Φ⁺(w,r)} 𝔖_v − Σ_{Φ⁻(w,r)} 𝔖_v`.
pub fn monk_sides(w: &Permutation, r: i64) -> (IntPolynomial, IntPolynomial) {
    let lhs = &IntPolynomial::var(r as usize) * &schubert_poly(w);
    let or_zero = |v: &Permutation| if v.in_s_infinity() { schubert_poly(v) } else { IntPolynomial::zero() };
    let mut rhs = IntPolynomial::zero();
    for v in phi(Sign::Plus, w, r) {
        rhs += &or_zero(&v);
    }
    for v in phi(Sign::Minus, w, r) {
        rhs -= &or_zero(&v);
    }
    (lhs, rhs)
}

/// The data a tree vertex branched on: the maximal (visible) inversion and the pivot
/// whose `Φ⁻` set gave the children.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Branch {
    pub inversion: (i64, i64),
    pub pivot: i64,
}

/// A vertex of a Lascoux–Schützenberger tree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LSTreeNode<T> {
    pub element: T,
    pub branch: Option<Branch>,
    pub children: Vec<LSTreeNode<T>>,
}

impl<T> LSTreeNode<T> {
    /// The same tree with every vertex relabelled.
    pub fn map<U>(&self, f: &impl Fn(&T) -> U) -> LSTreeNode<U> {
        LSTreeNode { element: f(&self.element), branch: self.branch, children: self.children.iter().map(|c| c.map(f)).collect() }
    }
}

impl<T: Clone + fmt::Display> LSTreeNode<T> {
    pub fn is_leaf(&self) -> bool {
        self.children.is_empty()
    }

    pub fn node_count(&self) -> usize {
        1 + self.children.iter().map(|c| c.node_count()).sum::<usize>()
    }

    /// Leaves in depth-first order.
    pub fn leaves(&self) -> Vec<&T> {
        let mut out = Vec::new();
        let mut stack = vec![self];
        while let Some(n) = stack.pop() {
            if n.is_leaf() {
                out.push(&n.element);
            }
            stack.extend(n.children.iter().rev());
        }
        out
    }

    /// Indented text, one vertex per line.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut stack = vec![(self, 0usize)];
        while let Some((n, depth)) = stack.pop() {
            out.push_str(&"  ".repeat(depth));
            out.push_str(&n.element.to_string());
            if let Some(b) = n.branch {
                out.push_str(&format!("  [inv ({},{}) pivot {}]", b.inversion.0, b.inversion.1, b.pivot));
            }
            out.push('\n');
            for c in n.children.iter().rev() {
                stack.push((c, depth + 1));
            }
        }
        out
    }

    /// Edges as `(parent index, child index)` over vertices numbered in depth-first order.
    pub fn edges(&self) -> (Vec<T>, Vec<(usize, usize)>) {
        let mut nodes = Vec::new();
        let mut edges = Vec::new();
        let mut stack: Vec<(&Self, Option<usize>)> = vec![(self, None)];
        while let Some((n, parent)) = stack.pop() {
            let id = nodes.len();
            nodes.push(n.element.clone());
            if let Some(p) = parent {
                edges.push((p, id));
            }
            for c in n.children.iter().rev() {
                stack.push((c, Some(id)));
            }
        }
        (nodes, edges)
    }
}

/// Children of `z` in the involution tree, with the branching data.
pub fn inv_tree_children(z: &Involution) -> Option<(Branch, Vec<Involution>)> {
    if z.is_i_grassmannian() {
        return None;
    }
    let (y, (q, r)) = eta(z).unwrap();
    let p = y.apply(q);
    let kids = phi_hat(Sign::Minus, &y, p);
    assert!(!kids.is_empty(), "empty branching set at {z}");
    Some((Branch { inversion: (q, r), pivot: p }, kids))
}

/// Builds a tree from a children function, depth first with an explicit stack. The
/// certificate must strictly decrease along every edge.
fn build_tree<T: Clone, K: Ord + fmt::Debug>(
    root: T,
    children: impl Fn(&T) -> Option<(Branch, Vec<T>)>,
    certificate: impl Fn(&T) -> K,
) -> LSTreeNode<T> {
    struct Frame<T> {
        node: LSTreeNode<T>,
        pending: Vec<T>,
    }
    let open = |t: T| {
        let (branch, mut kids) = match children(&t) {
            Some((b, k)) => (Some(b), k),
            None => (None, Vec::new()),
        };
        let cert = certificate(&t);
        for k in &kids {
            let c = certificate(k);
            assert!(c < cert, "certificate did not decrease: {c:?} !< {cert:?}");
        }
        kids.reverse();
        Frame { node: LSTreeNode { element: t, branch, children: Vec::new() }, pending: kids }
    };
    let mut stack = vec![open(root)];
    loop {
        let top = stack.last_mut().unwrap();
        if let Some(next) = top.pending.pop() {
            let f = open(next);
            stack.push(f);
            continue;
        }
        let done = stack.pop().unwrap().node;
        match stack.last_mut() {
            Some(parent) => parent.node.children.push(done),
            None => return done,
        }
    }
}

/// The involution Lascoux–Schützenberger tree of `z`.
pub fn inv_ls_tree(z: &Involution) -> LSTreeNode<Involution> {
    build_tree(z.clone(), inv_tree_children, |v| v.max_visible_inversion())
}

/// Children of `w` in the classical tree.
pub fn classical_children(w: &Permutation) -> Option<(Branch, Vec<Permutation>)> {
    if w.right_descents().len() <= 1 {
        return None;
    }
    let (r, s) = *w.inversions().iter().max().unwrap();
    let v = w.compose(&Permutation::transposition(r, s));
    Some((Branch { inversion: (r, s), pivot: r }, phi(Sign::Minus, &v, r)))
}

/// The classical Lascoux–Schützenberger tree of `w`.
pub fn classical_ls_tree(w: &Permutation) -> LSTreeNode<Permutation> {
    build_tree(w.clone(), classical_children, |v| v.inversions().into_iter().max())
}

/// The shape `λ(w)` of a permutation: its code sorted.
pub fn perm_shape(w: &Permutation) -> Partition {
    let w = match w.support_bounds() {
        Some((lo, _)) if lo < 1 => w.shift(1 - lo),
        _ => w.clone(),
    };
    Partition::from_unsorted(w.code())
}

/// The shape of an I-Grassmannian involution anywhere in `I_ℤ`.
fn leaf_shape(v: &Involution) -> StrictPartition {
    v.i_grassmannian().expect("leaves are I-Grassmannian").shape()
}

/// `F̂_z = Σ_leaves P_{μ(leaf)}`.
pub fn expand_fhat(z: &Involution) -> SymFunExpansion<BigInt> {
    let tree = inv_ls_tree(z);
    let mut e = SymFunExpansion::new(Basis::SchurP);
    for v in tree.leaves() {
        e.add(leaf_shape(v).to_partition(), BigInt::one());
    }
    e
}

/// `F_w = Σ_leaves s_{λ(leaf)}`.
pub fn expand_f(w: &Permutation) -> SymFunExpansion<BigInt> {
    let tree = classical_ls_tree(w);
    let mut e = SymFunExpansion::new(Basis::Schur);
    for v in tree.leaves() {
        e.add(perm_shape(v), BigInt::one());
    }
    e
}

/// `Ĝ_z = 2^{κ(z)} F̂_z` in the Schur Q-basis.
pub fn expand_ghat(z: &Involution) -> Result<SymFunExpansion<BigInt>> {
    schur_q_scale(&expand_fhat(z), z.kappa())
}

/// `Ĝ_z = Σ_leaves 2^{κ(z)−κ(v)} Ĝ_v` with `Ĝ_v = 2^{κ(v)−ℓ(μ(v))} Q_{μ(v)}` for leaves.
pub fn expand_ghat_by_leaves(z: &Involution) -> Result<SymFunExpansion<BigInt>> {
    let tree = inv_ls_tree(z);
    let k = z.kappa() as i64;
    let mut e = SymFunExpansion::new(Basis::SchurQ);
    for v in tree.leaves() {
        let mu = leaf_shape(v);
        let exp = k - mu.len() as i64;
        if exp < 0 {
            return Err(Error::Falsified(format!("leaf {v} of {z} has more parts than κ({z})")));
        }
        e.add(mu.to_partition(), BigInt::one() << exp);
    }
    Ok(e)
}

/// `Σ_{a ∈ R̂(y)} f_{Asc(a)}`, counted by a memoized recursion on the last letter.
pub fn fhat_quasi(y: &Involution) -> QuasiSum {
    let n = y.inv_length();
    assert!(n < 64);
    // per involution: (last letter, ascent mask) -> count
    type Table = HashMap<(i64, u64), u64>;
    fn go(y: &Involution, memo: &mut HashMap<Involution, Table>) -> Table {
        if let Some(t) = memo.get(y) {
            return t.clone();
        }
        let k = y.inv_length();
        let mut t = Table::new();
        if k == 0 {
            t.insert((0, 0), 1);
        } else {
            for i in y.right_descents() {
                for ((last, mask), c) in go(&y.peel(i).unwrap(), memo) {
                    let m = if k >= 2 && last < i { mask | 1 << (k - 1) } else { mask };
                    *t.entry((i, m)).or_insert(0) += c;
                }
            }
        }
        memo.insert(y.clone(), t.clone());
        t
    }
    let mut q = QuasiSum::new(n);
    for ((_, mask), c) in go(y, &mut HashMap::new()) {
        let s: Vec<usize> = (1..n).filter(|i| mask >> i & 1 == 1).collect();
        *q.counts.entry(s).or_insert(0) += c;
    }
    q
}

/// `Σ_{a ∈ R(w)} f_{Asc(a)}`.
pub fn f_quasi(w: &Permutation) -> QuasiSum {
    let n = w.length();
    assert!(n < 64);
    type Table = HashMap<(i64, u64), u64>;
    fn go(w: &Permutation, memo: &mut HashMap<Permutation, Table>) -> Table {
        if let Some(t) = memo.get(w) {
            return t.clone();
        }
        let k = w.length();
        let mut t = Table::new();
        if k == 0 {
            t.insert((i64::MIN, 0), 1);
        } else {
            for i in w.right_descents() {
                for ((last, mask), c) in go(&w.mul_simple(i), memo) {
                    let m = if k >= 2 && last < i { mask | 1 << (k - 1) } else { mask };
                    *t.entry((i, m)).or_insert(0) += c;
                }
            }
        }
        memo.insert(w.clone(), t.clone());
        t
    }
    let mut q = QuasiSum::new(n);
    for ((_, mask), c) in go(w, &mut HashMap::new()) {
        let s: Vec<usize> = (1..n).filter(|i| mask >> i & 1 == 1).collect();
        *q.counts.entry(s).or_insert(0) += c;
    }
    q
}

/// Schur P-expansion of `F̂_y` from the quasisymmetric word sum.
pub fn expand_fhat_quasi(y: &Involution) -> Result<SymFunExpansion<BigInt>> {
    fhat_quasi(y).expand(Basis::SchurP)
}

/// Outcome of checking the dominance window of an expansion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriangularityReport {
    pub mu: StrictPartition,
    pub leading_coeff: BigInt,
    /// Shapes of the P-expansion not below `μ`.
    pub p_violations: Vec<Partition>,
    /// Shapes of the Schur expansion outside `[μᵀ, μ]`, or with a nonpositive coefficient.
    pub schur_violations: Vec<Partition>,
    /// Coefficients of `s_μ` and `s_{μᵀ}`.
    pub schur_ends: (BigInt, BigInt),
}

impl TriangularityReport {
    pub fn passes(&self) -> bool {
        let (a, b) = &self.schur_ends;
        let mu = self.mu.to_partition();
        let ends_ok = if mu == mu.transpose() { a.is_one() } else { a.is_one() && b.is_one() };
        self.leading_coeff.is_one() && self.p_violations.is_empty() && self.schur_violations.is_empty() && ends_ok
    }
}

/// Checks that `F̂_z ∈ P_μ + ℕ{P_λ : λ < μ}` and that its Schur support lies in `[μᵀ, μ]`.
pub fn triangularity_certificate(z: &Involution) -> TriangularityReport {
    let mu = z.shape_mu();
    let mp = mu.to_partition();
    let e = expand_fhat(z);
    let p_violations =
        e.terms().filter(|(l, _)| **l != mp && !l.dominance_leq(&mp)).map(|(l, _)| l.clone()).collect();
    let d = z.inv_length();
    let schur = expand_from_monomials(Basis::Schur, d, |a| crate::symfunc::monomial_coeff_of(&e, a))
        .expect("P-functions are Schur-expandable");
    let t = mp.transpose();
    let schur_violations = schur
        .terms()
        .filter(|(l, c)| !(t.dominance_leq(l) && l.dominance_leq(&mp)) || !num_traits::Signed::is_positive(*c))
        .map(|(l, _)| l.clone())
        .collect();
    TriangularityReport {
        leading_coeff: e.coeff(&mp),
        p_violations,
        schur_violations,
        schur_ends: (schur.coeff(&mp), schur.coeff(&t)),
        mu,
    }
}

/// Leaf shapes with multiplicities.
pub fn leaf_multiset(z: &Involution) -> BTreeMap<StrictPartition, usize> {
    let mut out = BTreeMap::new();
    for v in inv_ls_tree(z).leaves() {
        *out.entry(leaf_shape(v)).or_insert(0) += 1;
    }
    out
}
