//! Pfaffians of skew-symmetric matrices and the Pfaffian formulas for I-Grassmannian
//! involution Schubert polynomials and Schur P-functions.

use std::collections::HashMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::involution::Involution;
use crate::partition::StrictPartition;
use crate::schubert::{inv_schubert_poly, Method};
use crate::symfunc::schur_p_poly;
use crate::IntPolynomial;

/// Commutative rings a Pfaffian can be taken over.
pub trait PfRing: Clone + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self> {}

impl<T> PfRing for T where
    T: Clone + Zero + One + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Neg<Output = T>
{
}

/// A skew-symmetric matrix stored by its entries above the diagonal.
#[derive(Clone, Debug, PartialEq)]
pub struct SkewSymMatrix<R> {
    n: usize,
    // upper[i][j - i - 1] = A_{i+1, j+1} for i < j, 0-based rows
    upper: Vec<Vec<R>>,
}

impl<R: PfRing> SkewSymMatrix<R> {
    /// Builds `[f(i, j)]_{1 ≤ i < j ≤ n}`.
    pub fn from_fn(n: usize, mut f: impl FnMut(usize, usize) -> R) -> Self {
        let upper = (1..=n).map(|i| (i + 1..=n).map(|j| f(i, j)).collect()).collect();
        SkewSymMatrix { n, upper }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    /// `A_{ij}`, 1-based.
    pub fn get(&self, i: usize, j: usize) -> R {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => R::zero(),
            Less => self.upper[i - 1][j - i - 1].clone(),
            Greater => -self.upper[j - 1][i - j - 1].clone(),
        }
    }

    /// The signed sum over fixed-point-free involutions.
    pub fn pfaffian_by_matchings(&self) -> R {
        if self.n % 2 == 1 {
            return R::zero();
        }
        let half = self.n / 2;
        let mut total = R::zero();
        for_each_matching(self.n, &mut |pairs| {
            let z = Involution::from_cycles(&pairs.iter().map(|&(a, b)| (a as i64, b as i64)).collect::<Vec<_>>())
                .expect("matching");
            let term = pairs.iter().fold(R::one(), |acc, &(a, b)| acc * self.get(a, b));
            if (z.inv_length() + half).is_multiple_of(2) {
                total = total.clone() + term;
            } else {
                total = total.clone() - term;
            }
        });
        total
    }

    /// Expansion along the first remaining row, memoized over index subsets.
    pub fn pfaffian_recursive(&self) -> R {
        assert!(self.n < 64);
        let mut memo: HashMap<u64, R> = HashMap::new();
        self.pf_rec(if self.n == 0 { 0 } else { u64::MAX >> (64 - self.n) }, &mut memo)
    }

    fn pf_rec(&self, mask: u64, memo: &mut HashMap<u64, R>) -> R {
        if mask == 0 {
            return R::one();
        }
        if mask.count_ones() % 2 == 1 {
            return R::zero();
        }
        if let Some(v) = memo.get(&mask) {
            return v.clone();
        }
        let first = mask.trailing_zeros() as usize;
        let rest = mask & !(1 << first);
        let mut total = R::zero();
        let mut pos = 0;
        for j in first + 1..self.n {
            if rest >> j & 1 == 0 {
                continue;
            }
            let sub = self.pf_rec(rest & !(1 << j), memo);
            let term = self.get(first + 1, j + 1) * sub;
            total = if pos % 2 == 0 { total + term } else { total - term };
            pos += 1;
        }
        memo.insert(mask, total.clone());
        total
    }

    /// The definitional sum for `n ≤ 8`, the recursion beyond.
    pub fn pfaffian(&self) -> R {
        if self.n <= 8 {
            self.pfaffian_by_matchings()
        } else {
            self.pfaffian_recursive()
        }
    }

    /// The full matrix, row by row.
    pub fn to_dense(&self) -> Vec<Vec<R>> {
        (1..=self.n).map(|i| (1..=self.n).map(|j| self.get(i, j)).collect()).collect()
    }
}

/// Calls `f` with each perfect matching of `[n]` as pairs `(a, b)`, `a < b`.
pub fn for_each_matching(n: usize, f: &mut impl FnMut(&[(usize, usize)])) {
    fn go(free: &mut Vec<usize>, pairs: &mut Vec<(usize, usize)>, f: &mut impl FnMut(&[(usize, usize)])) {
        if free.is_empty() {
            f(pairs);
            return;
        }
        let a = free.remove(0);
        for k in 0..free.len() {
            let b = free.remove(k);
            pairs.push((a, b));
            go(free, pairs, f);
            pairs.pop();
            free.insert(k, b);
        }
        free.insert(0, a);
    }
    if n.is_multiple_of(2) {
        go(&mut (1..=n).collect(), &mut Vec::new(), f);
    }
}

/// Determinant by cofactor expansion along the first row, memoized over column subsets.
pub fn determinant<R: PfRing>(a: &[Vec<R>]) -> R {
    fn go<R: PfRing>(a: &[Vec<R>], row: usize, cols: u64, memo: &mut HashMap<u64, R>) -> R {
        if row == a.len() {
            return R::one();
        }
        if let Some(v) = memo.get(&cols) {
            return v.clone();
        }
        let mut total = R::zero();
        let mut sign = true;
        for c in 0..a.len() {
            if cols >> c & 1 == 1 {
                continue;
            }
            let term = a[row][c].clone() * go(a, row + 1, cols | 1 << c, memo);
            total = if sign { total + term } else { total - term };
            sign = !sign;
        }
        memo.insert(cols, total.clone());
        total
    }
    assert!(a.len() < 64 && a.iter().all(|r| r.len() == a.len()));
    go(a, 0, 0, &mut HashMap::new())
}

/// `ℓ⁺`: the length, rounded up to even.
pub fn l_plus(len: usize) -> usize {
    len + len % 2
}

fn check_phi(phi: &[usize], n: usize) -> Result<()> {
    let ok = !phi.is_empty() && phi[0] > 0 && phi.windows(2).all(|w| w[0] < w[1]) && *phi.last().unwrap() <= n;
    if ok {
        Ok(())
    } else {
        Err(Error::Invalid(format!("need 0 < φ_1 < ... < φ_r ≤ {n}, got {phi:?}")))
    }
}

/// `(φ_1, n+1)(φ_2, n+2)⋯(φ_r, n+r)`, ignoring zero entries.
pub fn phi_involution(phi: &[usize], n: usize) -> Result<Involution> {
    let cycles: Vec<(i64, i64)> =
        phi.iter().filter(|&&p| p > 0).enumerate().map(|(k, &p)| (p as i64, (n + k + 1) as i64)).collect();
    Involution::from_cycles(&cycles)
}

/// `𝔖̂[φ; n]`.
pub fn phi_schubert(phi: &[usize], n: usize) -> Result<IntPolynomial> {
    let nz: Vec<usize> = phi.iter().copied().filter(|&p| p > 0).collect();
    if !nz.is_empty() {
        check_phi(&nz, n)?;
    }
    Ok(inv_schubert_poly(&phi_involution(&nz, n)?, Method::Recursion))
}

/// `𝔐[φ; n] = [𝔖̂[φ_i, φ_j; n]]_{1 ≤ i < j ≤ ℓ⁺(φ)}`.
pub fn pfaffian_schubert_matrix(phi: &[usize], n: usize) -> Result<SkewSymMatrix<IntPolynomial>> {
    check_phi(phi, n)?;
    let mut padded = phi.to_vec();
    padded.resize(l_plus(phi.len()), 0);
    let mut err = None;
    let m = SkewSymMatrix::from_fn(padded.len(), |i, j| {
        phi_schubert(&[padded[i - 1], padded[j - 1]], n).unwrap_or_else(|e| {
            err = Some(e);
            IntPolynomial::zero()
        })
    });
    match err {
        Some(e) => Err(e),
        None => Ok(m),
    }
}

/// Both sides of `𝔖̂[φ; n] = pf 𝔐[φ; n]`.
pub fn pfaffian_theorem_sides(phi: &[usize], n: usize) -> Result<(IntPolynomial, IntPolynomial)> {
    let lhs = phi_schubert(phi, n)?;
    let rhs = pfaffian_schubert_matrix(phi, n)?.pfaffian();
    Ok((lhs, rhs))
}

pub fn verify_pfaffian_theorem(phi: &[usize], n: usize) -> Result<bool> {
    let (l, r) = pfaffian_theorem_sides(phi, n)?;
    Ok(l == r)
}

/// Both sides of `P_λ = pf[P_{λ_i λ_j}]` truncated to `width` variables.
pub fn schur_p_pfaffian_sides(lambda: &StrictPartition, width: usize) -> (IntPolynomial, IntPolynomial) {
    let mut parts = lambda.parts().to_vec();
    parts.resize(l_plus(parts.len()), 0);
    let m = SkewSymMatrix::from_fn(parts.len(), |i, j| {
        let mu = StrictPartition::new(vec![parts[i - 1], parts[j - 1]]).expect("strict pair");
        schur_p_poly(&mu, width)
    });
    (schur_p_poly(lambda, width), m.pfaffian())
}

pub fn schur_p_pfaffian_check(lambda: &StrictPartition, width: usize) -> bool {
    let (a, b) = schur_p_pfaffian_sides(lambda, width);
    a == b
}
