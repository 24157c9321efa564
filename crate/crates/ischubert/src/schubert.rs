//! Schubert polynomials, involution Schubert polynomials and truncations of their
//! stable limits.

use std::collections::{HashMap, VecDeque};
use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::involution::Involution;
use crate::partition::StrictPartition;
use crate::perm::Permutation;
use crate::poly::{staircase_monomial, OpKind, Polynomial};
use crate::symfunc::{schur_p_poly, TruncatedSymFun};
use crate::IntPolynomial;

/// How [`inv_schubert_poly`] is computed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    /// Sum of Schubert polynomials of atoms.
    AtomSum,
    /// Divided differences down from a dominant ancestor.
    Recursion,
}

fn schubert_cache() -> &'static RwLock<HashMap<Permutation, IntPolynomial>> {
    static C: OnceLock<RwLock<HashMap<Permutation, IntPolynomial>>> = OnceLock::new();
    C.get_or_init(Default::default)
}

fn inv_schubert_cache() -> &'static RwLock<HashMap<Involution, IntPolynomial>> {
    static C: OnceLock<RwLock<HashMap<Involution, IntPolynomial>>> = OnceLock::new();
    C.get_or_init(Default::default)
}

/// `𝔖_w = ∂_{w⁻¹w_n} x^{δ_n}` for `w ∈ S_∞`, with `n` the largest moved point.
pub fn schubert_poly(w: &Permutation) -> IntPolynomial {
    assert!(w.in_s_infinity(), "{w} is not in S_∞");
    if let Some(p) = schubert_cache().read().unwrap().get(w) {
        return p.clone();
    }
    let n = w.max_moved().max(1) as usize;
    let p = schubert_poly_in(w, n);
    schubert_cache().write().unwrap().insert(w.clone(), p.clone());
    p
}

/// `∂_{w⁻¹w_n} x^{δ_n}` for an explicit `n`.
pub fn schubert_poly_in(w: &Permutation, n: usize) -> IntPolynomial {
    assert!(w.max_moved() <= n as i64);
    let v = w.inverse().compose(&Permutation::longest(n));
    staircase_monomial::<BigInt>(n).op_word(OpKind::Divided, &v)
}

/// `Π_{(i,j) ∈ D̂(y)} x_(i,j)` for dominant `y`.
pub fn dominant_inv_schubert(y: &Involution) -> Result<IntPolynomial> {
    if !y.is_dominant() {
        return Err(Error::NotDominant);
    }
    Ok(y.inv_diagram()
        .into_iter()
        .fold(IntPolynomial::one(), |acc, (i, j)| &acc * &Polynomial::cell_factor(i as usize, j as usize)))
}

/// A shortest chain `y = y_0, y_1 = s∘y_0∘s, ...` ending at a dominant involution; returns
/// the letters used, in order.
fn path_to_dominant(y: &Involution) -> Vec<i64> {
    let m = y.support_bounds().map_or(1, |(_, hi)| hi);
    let mut prev: HashMap<Involution, (Involution, i64)> = HashMap::new();
    let mut queue = VecDeque::from([y.clone()]);
    let mut seen = std::collections::HashSet::from([y.clone()]);
    while let Some(z) = queue.pop_front() {
        if z.is_dominant() {
            let mut letters = Vec::new();
            let mut cur = z;
            while let Some((p, i)) = prev.get(&cur) {
                letters.push(*i);
                cur = p.clone();
            }
            letters.reverse();
            return letters;
        }
        for i in 1..m {
            if z.has_descent(i) {
                continue;
            }
            let up = z.demazure_conj(i);
            if seen.insert(up.clone()) {
                prev.insert(up.clone(), (z.clone(), i));
                queue.push_back(up);
            }
        }
    }
    unreachable!("w_m is a dominant ancestor of {y}")
}

/// `𝔖̂_y` for `y ∈ I_∞`.
pub fn inv_schubert_poly(y: &Involution, method: Method) -> IntPolynomial {
    assert!(y.in_i_infinity(), "{y} is not in I_∞");
    match method {
        Method::AtomSum => {
            let atoms = y.atoms(usize::MAX).expect("no guard");
            atoms.iter().fold(IntPolynomial::zero(), |acc, w| acc + schubert_poly(w))
        }
        Method::Recursion => {
            if let Some(p) = inv_schubert_cache().read().unwrap().get(y) {
                return p.clone();
            }
            let letters = path_to_dominant(y);
            let mut chain = vec![y.clone()];
            for &i in &letters {
                let next = chain.last().unwrap().demazure_conj(i);
                chain.push(next);
            }
            let top = chain.pop().unwrap();
            let mut f = match inv_schubert_cache().read().unwrap().get(&top) {
                Some(p) => p.clone(),
                None => dominant_inv_schubert(&top).unwrap(),
            };
            let mut out = vec![(top, f.clone())];
            for (z, &i) in chain.iter().zip(&letters).rev() {
                f = f.divided_difference(i as usize);
                out.push((z.clone(), f.clone()));
            }
            let mut cache = inv_schubert_cache().write().unwrap();
            for (z, p) in out {
                cache.insert(z, p);
            }
            f
        }
    }
}

/// Largest `i` with `w(i) > w(i+1)`, or 0.
fn last_descent(w: &Permutation) -> usize {
    w.right_descents().last().copied().unwrap_or(0).max(0) as usize
}

/// `ρ_n F_w`, computed as `ρ_n π_{w_m} 𝔖_w` with `m ≥ n` past the last descent.
pub fn stanley_truncation(w: &Permutation, n: usize) -> TruncatedSymFun {
    let w = to_s_infinity(w);
    let m = n.max(last_descent(&w)).max(1);
    let f = schubert_poly(&w).op_word(OpKind::Isobaric, &Permutation::longest(m)).truncate(n);
    TruncatedSymFun::new(f, n, w.length())
}

/// `ρ_n F̂_y`, computed as `ρ_n π_{w_m} 𝔖̂_y`.
pub fn inv_stanley_truncation(y: &Involution, n: usize) -> TruncatedSymFun {
    let y = to_i_infinity(y);
    let m = n.max(y.support_bounds().map_or(0, |(_, hi)| hi as usize)).max(1);
    let f = inv_schubert_poly(&y, Method::Recursion).op_word(OpKind::Isobaric, &Permutation::longest(m)).truncate(n);
    TruncatedSymFun::new(f, n, y.inv_length())
}

/// `ρ_n F̂_y` by the other route: `ρ_n 𝔖̂_{y≫N}` for `N` at least the window.
pub fn inv_stanley_truncation_by_shift(y: &Involution, n: usize) -> TruncatedSymFun {
    let y = to_i_infinity(y);
    let m = n.max(y.support_bounds().map_or(0, |(_, hi)| hi as usize));
    let f = inv_schubert_poly(&y.shift(m as i64), Method::Recursion).truncate(n);
    TruncatedSymFun::new(f, n, y.inv_length())
}

/// `ρ_n F_w` as `ρ_n 𝔖_{w≫N}`.
pub fn stanley_truncation_by_shift(w: &Permutation, n: usize) -> TruncatedSymFun {
    let w = to_s_infinity(w);
    let m = n.max(last_descent(&w));
    let f = schubert_poly(&w.shift(m as i64)).truncate(n);
    TruncatedSymFun::new(f, n, w.length())
}

/// `ρ_n P_λ = π_{w_n}(x^λ G_{r,n}) = ∂_{w_n}(x^{δ_n} x^λ G_{r,n})`, zero for `n < ℓ(λ)`.
pub fn schur_p_by_isobaric(lambda: &StrictPartition, n: usize) -> TruncatedSymFun {
    let r = lambda.len();
    if n < r {
        return TruncatedSymFun::new(IntPolynomial::zero(), n, lambda.size());
    }
    let mut seed = IntPolynomial::one();
    for i in 1..=n {
        if i <= r {
            seed = seed.mul_monomial(&crate::poly::Monomial::new(unit(i, lambda.part(i) as u32)), &BigInt::one());
            for j in 1..=n - i {
                seed = &seed * &(IntPolynomial::var(i) + IntPolynomial::var(i + j));
            }
        } else {
            seed = seed.mul_monomial(&crate::poly::Monomial::new(unit(i, (n - i) as u32)), &BigInt::one());
        }
    }
    let f = seed.op_word(OpKind::Divided, &Permutation::longest(n));
    TruncatedSymFun::new(f, n, lambda.size())
}

fn unit(i: usize, e: u32) -> Vec<u32> {
    let mut v = vec![0; i];
    v[i - 1] = e;
    v
}

/// `ρ_n P_λ` by the tableau generating function.
pub fn schur_p_truncation(lambda: &StrictPartition, n: usize) -> TruncatedSymFun {
    TruncatedSymFun::new(schur_p_poly(lambda, n), n, lambda.size())
}

/// A function whose stable limit is truncated by [`stable_truncation`].
#[derive(Clone, Debug)]
pub enum Stable {
    F(Permutation),
    FHat(Involution),
    P(StrictPartition),
}

/// `ρ_n` of `F_w`, `F̂_y` or `P_λ`, checked against a second route.
pub fn stable_truncation(kind: &Stable, n: usize) -> TruncatedSymFun {
    let (a, b) = match kind {
        Stable::F(w) => (stanley_truncation(w, n), stanley_truncation_by_shift(w, n)),
        Stable::FHat(y) => (inv_stanley_truncation(y, n), inv_stanley_truncation_by_shift(y, n)),
        Stable::P(l) => (schur_p_truncation(l, n), schur_p_by_isobaric(l, n)),
    };
    assert_eq!(a, b, "two routes disagree for {kind:?} at width {n}");
    a
}

fn to_s_infinity(w: &Permutation) -> Permutation {
    match w.support_bounds() {
        Some((lo, _)) if lo < 1 => w.shift(1 - lo),
        _ => w.clone(),
    }
}

fn to_i_infinity(y: &Involution) -> Involution {
    match y.support_bounds() {
        Some((lo, _)) if lo < 1 => y.shift(1 - lo),
        _ => y.clone(),
    }
}
