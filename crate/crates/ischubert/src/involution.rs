//! Involutions of the integers: involution length, atoms, involution words,
//! visible inversions, involution codes and shapes, I-Grassmannian structure.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::perm::{Permutation, Word};
use crate::symfunc::{Partition, StrictPartition};

/// Default guard on the involution length for word and atom enumeration.
pub const DEFAULT_INV_GUARD: usize = 12;

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Involution(Permutation);

/// Data of an I-Grassmannian involution `(φ_1, n+1)(φ_2, n+2)⋯(φ_r, n+r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IGrassmannian {
    pub n: i64,
    pub phi: Vec<i64>,
}

impl IGrassmannian {
    /// `(n+1−φ_1, ..., n+1−φ_r)`.
    pub fn shape(&self) -> StrictPartition {
        StrictPartition::new(self.phi.iter().map(|&p| (self.n + 1 - p) as usize).collect())
            .expect("I-Grassmannian shape is strict")
    }
}

impl Involution {
    pub fn new(p: Permutation) -> Result<Self> {
        if !p.compose(&p).is_identity() {
            return Err(Error::Invalid(format!("{p} is not an involution")));
        }
        Ok(Involution(p))
    }

    pub fn identity() -> Self {
        Self::default()
    }

    /// Product of the disjoint transpositions `(a, b)`.
    pub fn from_cycles(cycles: &[(i64, i64)]) -> Result<Self> {
        let pairs: Vec<(i64, i64)> = cycles.iter().flat_map(|&(a, b)| [(a, b), (b, a)]).collect();
        let mut keys: Vec<i64> = pairs.iter().map(|p| p.0).collect();
        keys.sort_unstable();
        if keys.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Invalid("cycles overlap".into()));
        }
        Self::new(Permutation::from_pairs(&pairs)?)
    }

    /// Parses cycle notation, or one-line notation when no parenthesis is present.
    pub fn parse(s: &str) -> Result<Self> {
        let p = if s.trim().is_empty() || s.contains('(') {
            Permutation::parse_cycles(s)?
        } else {
            Permutation::parse_one_line(s)?
        };
        Self::new(p)
    }

    /// The reverse permutation `w_n`.
    pub fn longest(n: usize) -> Self {
        Involution(Permutation::longest(n))
    }

    pub fn perm(&self) -> &Permutation {
        &self.0
    }

    pub fn into_perm(self) -> Permutation {
        self.0
    }

    pub fn apply(&self, i: i64) -> i64 {
        self.0.apply(i)
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    pub fn support_bounds(&self) -> Option<(i64, i64)> {
        self.0.support_bounds()
    }

    /// Whether the support lies in the positive integers.
    pub fn in_i_infinity(&self) -> bool {
        self.0.in_s_infinity()
    }

    pub fn shift(&self, n: i64) -> Self {
        Involution(self.0.shift(n))
    }

    /// The nontrivial cycles `(a, b)`, `a < b`, sorted by `a`.
    pub fn cycles(&self) -> Vec<(i64, i64)> {
        self.0.support().into_iter().filter_map(|a| {
            let b = self.apply(a);
            (a < b).then_some((a, b))
        }).collect()
    }

    /// All cycles `(a, y(a))` with `a ≤ y(a)` and `a` in `[lo, hi]`, fixed points included.
    pub fn cycles_with_fixed(&self, lo: i64, hi: i64) -> Vec<(i64, i64)> {
        (lo..=hi).filter(|&a| a <= self.apply(a)).map(|a| (a, self.apply(a))).collect()
    }

    /// Number of 2-cycles.
    pub fn kappa(&self) -> usize {
        self.cycles().len()
    }

    /// `(ℓ(y) + κ(y)) / 2`.
    pub fn inv_length(&self) -> usize {
        let total = self.0.length() + self.kappa();
        debug_assert!(total.is_multiple_of(2));
        total / 2
    }

    pub fn right_descents(&self) -> Vec<i64> {
        self.0.right_descents()
    }

    pub fn has_descent(&self, i: i64) -> bool {
        self.0.has_right_descent(i)
    }

    /// `s_i ∘ y ∘ s_i`.
    pub fn demazure_conj(&self, i: i64) -> Self {
        if self.has_descent(i) {
            self.clone()
        } else if self.apply(i) == i && self.apply(i + 1) == i + 1 {
            Involution(self.0.mul_simple(i))
        } else {
            Involution(self.0.simple_mul(i).mul_simple(i))
        }
    }

    /// For a descent `i`, the unique `y'` without descent `i` such that `s_i ∘ y' ∘ s_i = y`.
    pub fn peel(&self, i: i64) -> Option<Self> {
        if !self.has_descent(i) {
            return None;
        }
        if self.apply(i) == i + 1 {
            Some(Involution(self.0.mul_simple(i)))
        } else {
            Some(Involution(self.0.simple_mul(i).mul_simple(i)))
        }
    }

    fn check_guard(&self, guard: usize) -> Result<()> {
        let len = self.inv_length();
        if len > guard {
            return Err(Error::Guard { what: "involution length", value: len, guard });
        }
        Ok(())
    }

    /// The atoms: minimal-length `w` with `w⁻¹ ∘ w = y`, sorted.
    pub fn atoms(&self, guard: usize) -> Result<Vec<Permutation>> {
        self.check_guard(guard)?;
        fn go(y: &Involution, memo: &mut HashMap<Involution, Vec<Permutation>>) -> Vec<Permutation> {
            if y.is_identity() {
                return vec![Permutation::identity()];
            }
            if let Some(v) = memo.get(y) {
                return v.clone();
            }
            let mut set = BTreeSet::new();
            for i in y.right_descents() {
                let below = y.peel(i).unwrap();
                for w in go(&below, memo) {
                    set.insert(w.mul_simple(i));
                }
            }
            let v: Vec<Permutation> = set.into_iter().collect();
            memo.insert(y.clone(), v.clone());
            v
        }
        Ok(go(self, &mut HashMap::new()))
    }

    /// The lexicographically least atom, read off the sorted cycles.
    pub fn min_atom(&self) -> Permutation {
        let Some((lo, hi)) = self.support_bounds() else {
            return Permutation::identity();
        };
        let mut seq = Vec::new();
        for (a, b) in self.cycles_with_fixed(lo, hi) {
            seq.push(b);
            if a != b {
                seq.push(a);
            }
        }
        Permutation::from_window(lo, seq).expect("sorted cycles give a permutation").inverse()
    }

    /// Calls `f` on every involution word, in an order fixed by the descent structure.
    pub fn for_each_involution_word(&self, guard: usize, mut f: impl FnMut(&[i64])) -> Result<()> {
        self.check_guard(guard)?;
        let len = self.inv_length();
        let mut word = vec![0; len];
        fn go(y: &Involution, pos: usize, word: &mut Vec<i64>, f: &mut dyn FnMut(&[i64])) {
            if pos == 0 {
                f(word);
                return;
            }
            for i in y.right_descents() {
                word[pos - 1] = i;
                go(&y.peel(i).unwrap(), pos - 1, word, f);
            }
        }
        go(self, len, &mut word, &mut f);
        Ok(())
    }

    /// All involution words, sorted.
    pub fn involution_words(&self, guard: usize) -> Result<Vec<Word>> {
        let mut out = Vec::new();
        self.for_each_involution_word(guard, |w| out.push(w.to_vec()))?;
        out.sort();
        Ok(out)
    }

    /// Number of involution words, by memoized recursion.
    pub fn count_involution_words(&self) -> u128 {
        fn go(y: &Involution, memo: &mut HashMap<Involution, u128>) -> u128 {
            if y.is_identity() {
                return 1;
            }
            if let Some(&c) = memo.get(y) {
                return c;
            }
            let c = y.right_descents().into_iter().map(|i| go(&y.peel(i).unwrap(), memo)).sum();
            memo.insert(y.clone(), c);
            c
        }
        go(self, &mut HashMap::new())
    }

    /// Whether `word` is an involution word of `self`.
    pub fn has_involution_word(&self, word: &[i64]) -> bool {
        word.len() == self.inv_length() && Self::from_involution_word(word).as_ref() == Some(self)
    }

    /// The involution `s_{a_k} ∘ ⋯ ∘ s_{a_1} ∘ ⋯ ∘ s_{a_k}` when the word has minimal length for it.
    pub fn from_involution_word(word: &[i64]) -> Option<Self> {
        let w = Permutation::demazure_word(word);
        if w.length() != word.len() {
            return None;
        }
        let y = Involution(w.inverse().demazure(&w));
        (y.inv_length() == word.len()).then_some(y)
    }

    /// Pairs `i < j` with `y(j) ≤ min(i, y(i))`.
    pub fn visible_inversions(&self) -> Vec<(i64, i64)> {
        let Some((lo, hi)) = self.support_bounds() else {
            return Vec::new();
        };
        let mut out = Vec::new();
        for i in lo..=hi {
            for j in i + 1..=hi {
                if self.apply(j) <= i.min(self.apply(i)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// The `i` such that `(i, i+1)` is a visible inversion.
    pub fn visible_descents(&self) -> Vec<i64> {
        let Some((lo, hi)) = self.support_bounds() else {
            return Vec::new();
        };
        (lo..hi).filter(|&i| self.apply(i + 1) <= i.min(self.apply(i))).collect()
    }

    /// Lexicographically greatest visible inversion.
    pub fn max_visible_inversion(&self) -> Option<(i64, i64)> {
        let (lo, hi) = self.support_bounds()?;
        for i in (lo..=hi).rev() {
            for j in (i + 1..=hi).rev() {
                if self.apply(j) <= i.min(self.apply(i)) {
                    return Some((i, j));
                }
            }
        }
        None
    }

    /// Positions `(i, j)` with `j ≤ i < y(j)` and `j < y(i)`, sorted.
    pub fn inv_diagram(&self) -> Vec<(i64, i64)> {
        let Some((lo, hi)) = self.support_bounds() else {
            return Vec::new();
        };
        let mut out = Vec::new();
        for i in lo..=hi {
            for j in lo..=i {
                if i < self.apply(j) && j < self.apply(i) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Row counts `(c_1, c_2, ...)` of the involution diagram, trailing zeros removed.
    pub fn inv_code(&self) -> Result<Vec<usize>> {
        if !self.in_i_infinity() {
            return Err(Error::Invalid(format!("{self} moves a nonpositive integer")));
        }
        let mut code = vec![0usize; self.0.max_moved().max(0) as usize];
        for (i, _) in self.inv_diagram() {
            code[(i - 1) as usize] += 1;
        }
        while code.last() == Some(&0) {
            code.pop();
        }
        Ok(code)
    }

    /// Transpose of the partition obtained by sorting the diagram's row counts.
    pub fn shape_mu(&self) -> StrictPartition {
        let Some((lo, hi)) = self.support_bounds() else {
            return StrictPartition::empty();
        };
        let mut rows = vec![0usize; (hi - lo + 1) as usize];
        for (i, _) in self.inv_diagram() {
            rows[(i - lo) as usize] += 1;
        }
        let sorted = Partition::from_unsorted(rows);
        StrictPartition::new(sorted.transpose().parts().to_vec())
            .unwrap_or_else(|_| panic!("shape of {self} is not strict"))
    }

    /// The I-Grassmannian data, or `None` if there is more than one visible descent.
    pub fn i_grassmannian(&self) -> Option<IGrassmannian> {
        let des = self.visible_descents();
        let result = match des.as_slice() {
            [] => Some(IGrassmannian { n: 0, phi: Vec::new() }),
            [n] => {
                let mut cyc = self.cycles();
                cyc.sort_by_key(|c| c.1);
                let ok = cyc.iter().enumerate().all(|(k, &(a, b))| b == n + 1 + k as i64 && a <= *n)
                    && cyc.windows(2).all(|w| w[0].0 < w[1].0);
                assert!(ok, "one visible descent but {self} is not of the form (φ_i, n+i)");
                Some(IGrassmannian { n: *n, phi: cyc.iter().map(|c| c.0).collect() })
            }
            _ => None,
        };
        #[cfg(debug_assertions)]
        if self.in_i_infinity() && !self.is_identity() {
            let c = self.igrass_conditions();
            debug_assert!(c.iter().all(|&b| b == result.is_some()), "{self}: {c:?}");
        }
        result
    }

    pub fn is_i_grassmannian(&self) -> bool {
        self.i_grassmannian().is_some()
    }

    /// Independent characterizations of being I-Grassmannian, for `y ≠ 1` in `I_∞`:
    /// visible descents, cycle form, code shape, essential set, and the least atom.
    pub fn igrass_conditions(&self) -> [bool; 5] {
        let des = self.visible_descents();
        let a = des.len() == 1;
        let n = des.first().copied().unwrap_or(0);
        let b = {
            let mut cyc = self.cycles();
            cyc.sort_by_key(|c| c.1);
            !cyc.is_empty()
                && cyc.iter().enumerate().all(|(k, &(a, b))| b == n + 1 + k as i64 && a >= 1 && a <= n)
                && cyc.windows(2).all(|w| w[0].0 < w[1].0)
        };
        let code = self.inv_code().unwrap_or_default();
        let c = code.len() == n as usize && n > 0 && code.windows(2).all(|w| w[0] <= w[1]) && code[n as usize - 1] != 0;
        let diagram: BTreeSet<(i64, i64)> = self.inv_diagram().into_iter().collect();
        let ess: Vec<(i64, i64)> = diagram
            .iter()
            .filter(|&&(i, j)| !diagram.contains(&(i + 1, j)) && !diagram.contains(&(i, j + 1)))
            .copied()
            .collect();
        let d = !ess.is_empty() && ess.iter().all(|&(i, _)| i == n);
        let e = self.min_atom().right_descents() == vec![n];
        [a, b, c, d, e]
    }

    /// 132-avoidance, the characterization of dominant involutions in `I_∞`.
    pub fn is_dominant(&self) -> bool {
        self.in_i_infinity() && !self.0.contains_pattern(&[1, 3, 2])
    }

    /// The fixed-point-free involution `(a_1,b_1)⋯(a_n,b_n)` with `b_i = n + i − μᵀ_i`.
    pub fn y_mu_n(mu: &Partition, n: usize) -> Result<Self> {
        let ok = mu.len() <= n && mu.parts().iter().enumerate().all(|(i, &m)| m < n - i);
        if !ok {
            return Err(Error::Containment(format!("{mu}"), n + 1));
        }
        let t = mu.transpose();
        let b: Vec<i64> = (1..=n).map(|i| (n + i - t.part(i)) as i64).collect();
        let a: Vec<i64> = (1..=2 * n as i64).filter(|x| !b.contains(x)).collect();
        let cycles: Vec<(i64, i64)> = a.into_iter().zip(b).collect();
        Self::from_cycles(&cycles)
    }
}

/// All involutions in `S_n`, sorted.
pub fn all_involutions(n: usize) -> Vec<Involution> {
    fn go(free: &mut Vec<i64>, pairs: &mut Vec<(i64, i64)>, out: &mut Vec<Involution>) {
        let Some(&a) = free.first() else {
            out.push(Involution::from_cycles(pairs).unwrap());
            return;
        };
        free.remove(0);
        go(free, pairs, out);
        for k in 0..free.len() {
            let b = free.remove(k);
            pairs.push((a, b));
            go(free, pairs, out);
            pairs.pop();
            free.insert(k, b);
        }
        free.insert(0, a);
    }
    let mut out = Vec::new();
    go(&mut (1..=n as i64).collect(), &mut Vec::new(), &mut out);
    out.sort();
    out
}

impl fmt::Display for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

impl fmt::Debug for Involution {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.0, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::all_permutations;
    use std::collections::{HashSet, VecDeque};

    fn y(s: &str) -> Involution {
        Involution::parse(s).unwrap()
    }

    #[test]
    fn cycles_and_lengths() {
        assert!(Involution::identity().cycles().is_empty());
        assert_eq!(y("(1,6)(2,7)(3,4)").cycles(), vec![(1, 6), (2, 7), (3, 4)]);
        assert_eq!(y("(2,3)(4,7)").kappa(), 2);
        assert_eq!(Involution::identity().inv_length(), 0);
        assert_eq!(y("321").inv_length(), 2);
        assert_eq!(Involution::longest(4).inv_length(), 4);
    }

    #[test]
    fn atoms_examples() {
        let a: Vec<String> = y("321").atoms(12).unwrap().iter().map(|w| w.to_one_line_string()).collect();
        assert_eq!(a, vec!["231", "312"]);
        assert_eq!(Involution::identity().atoms(12).unwrap(), vec![Permutation::identity()]);
        assert_eq!(y("(1,2)").atoms(12).unwrap(), vec![Permutation::simple(1)]);
    }

    // Brute force: minimal-length w in S_n with w⁻¹ ∘ w = y.
    fn brute_atoms(y: &Involution, n: usize) -> Vec<Permutation> {
        let all = all_permutations(n);
        let hits: Vec<&Permutation> = all.iter().filter(|w| w.inverse().demazure(w) == *y.perm()).collect();
        let min = hits.iter().map(|w| w.length()).min().unwrap();
        let mut v: Vec<Permutation> = hits.into_iter().filter(|w| w.length() == min).cloned().collect();
        v.sort();
        v
    }

    #[test]
    fn atoms_match_brute_force_on_i5() {
        for z in all_involutions(5) {
            let atoms = z.atoms(12).unwrap();
            assert_eq!(atoms, brute_atoms(&z, 5), "{z}");
            for w in &atoms {
                assert_eq!(w.length(), z.inv_length());
            }
            let min = z.min_atom();
            assert_eq!(&min, atoms.iter().min_by_key(|w| w.one_line_width(5)).unwrap(), "{z}");
        }
    }

    #[test]
    fn min_atom_examples() {
        assert_eq!(y("(1,4)").min_atom().to_one_line_string(), "2341");
        assert!(Involution::identity().min_atom().is_identity());
    }

    #[test]
    fn involution_word_counts() {
        let counts: Vec<u128> = (1..=6).map(|n| Involution::longest(n).count_involution_words()).collect();
        assert_eq!(counts, vec![1, 1, 2, 8, 80, 2688]);
        assert_eq!(Involution::longest(4).involution_words(12).unwrap().len(), 8);
        assert_eq!(Involution::identity().involution_words(12).unwrap(), vec![Vec::<i64>::new()]);
    }

    #[test]
    fn involution_words_are_union_of_atom_words() {
        for z in all_involutions(5) {
            let mut from_atoms: Vec<Word> =
                z.atoms(12).unwrap().iter().flat_map(|w| w.reduced_words(16).unwrap()).collect();
            from_atoms.sort();
            assert_eq!(z.involution_words(12).unwrap(), from_atoms, "{z}");
        }
    }

    // Breadth-first search over the action y ↦ s∘y∘s from the identity records
    // every minimal word reaching each involution.
    #[test]
    fn involution_words_match_bfs_on_i4() {
        let mut words: HashMap<Involution, Vec<Word>> = HashMap::new();
        words.insert(Involution::identity(), vec![vec![]]);
        let mut frontier = VecDeque::from([Involution::identity()]);
        let mut depth: HashMap<Involution, usize> = HashMap::from([(Involution::identity(), 0)]);
        while let Some(z) = frontier.pop_front() {
            for i in 1..4 {
                let next = z.demazure_conj(i);
                let d = depth[&z] + 1;
                if next == z {
                    continue;
                }
                match depth.get(&next) {
                    Some(&e) if e < d => continue,
                    Some(_) => {}
                    None => {
                        depth.insert(next.clone(), d);
                        frontier.push_back(next.clone());
                    }
                }
                let extended: Vec<Word> = words[&z].iter().map(|w| {
                    let mut w = w.clone();
                    w.push(i);
                    w
                }).collect();
                words.entry(next).or_default().extend(extended);
            }
        }
        for z in all_involutions(4) {
            let mut bfs = words[&z].clone();
            bfs.sort();
            bfs.dedup();
            assert_eq!(z.involution_words(12).unwrap(), bfs, "{z}");
        }
    }

    #[test]
    fn visible_inversions_are_inversions_of_min_atom() {
        assert!(Involution::identity().visible_inversions().is_empty());
        assert_eq!(y("(1,2)").visible_inversions(), vec![(1, 2)]);
        for z in all_involutions(6) {
            assert_eq!(z.visible_inversions(), z.min_atom().inversions(), "{z}");
            assert_eq!(z.visible_descents(), z.min_atom().right_descents(), "{z}");
            assert_eq!(z.max_visible_inversion(), z.visible_inversions().into_iter().max());
        }
    }

    #[test]
    fn visible_descent_examples() {
        // 2 is visible since y(3) = 2 ≤ min(2, y(2))
        assert_eq!(y("(2,3)(4,7)").visible_descents(), vec![2, 6]);
        assert!(Involution::identity().visible_descents().is_empty());
        for n in 1..6 {
            assert_eq!(Involution::from_cycles(&[(1, n + 1)]).unwrap().visible_descents(), vec![n]);
        }
    }

    #[test]
    fn diagrams_and_codes() {
        assert_eq!(y("(1,4)").inv_diagram(), vec![(1, 1), (2, 1), (3, 1)]);
        assert_eq!(y("(1,4)").inv_code().unwrap(), vec![1, 1, 1]);
        assert!(Involution::identity().inv_diagram().is_empty());
        assert!(Involution::identity().inv_code().unwrap().is_empty());
        for z in all_involutions(6) {
            assert_eq!(z.inv_diagram().len(), z.inv_length());
            assert_eq!(z.inv_code().unwrap(), z.min_atom().code(), "{z}");
            let mut code = z.min_atom().code();
            code.retain(|&c| c > 0);
            assert_eq!(z.shape_mu().to_partition().transpose(), Partition::from_unsorted(code));
        }
    }

    #[test]
    fn shapes() {
        for n in 1..8 {
            let want: Vec<usize> = (0..).map(|k| n as i64 - 1 - 2 * k).take_while(|&x| x > 0).map(|x| x as usize).collect();
            assert_eq!(Involution::longest(n).shape_mu().parts(), want.as_slice());
        }
        assert!(Involution::identity().shape_mu().is_empty());
        let z = Involution::from_cycles(&[(1, 5), (3, 6)]).unwrap();
        assert_eq!(z.shape_mu().parts(), &[4, 2]);
    }

    #[test]
    fn i_grassmannian_counts() {
        let counts: Vec<usize> =
            (1..=8).map(|n| all_involutions(n).iter().filter(|z| z.is_i_grassmannian()).count()).collect();
        assert_eq!(counts, vec![1, 2, 4, 8, 15, 27, 47, 80]);
        assert!(Involution::identity().is_i_grassmannian());
        assert!(!y("(2,4)(5,7)").is_i_grassmannian());
    }

    #[test]
    fn i_grassmannian_conditions_agree_on_i7() {
        for z in all_involutions(7) {
            if z.is_identity() {
                continue;
            }
            let c = z.igrass_conditions();
            assert!(c.iter().all(|&b| b == c[0]), "{z}: {c:?}");
            if let Some(g) = z.i_grassmannian() {
                assert_eq!(g.shape(), z.shape_mu(), "{z}");
            }
        }
    }

    #[test]
    fn y_mu_n_examples() {
        let z = Involution::y_mu_n(&Partition::new(vec![5, 3, 2, 2]).unwrap(), 6).unwrap();
        assert_eq!(z.cycles(), vec![(1, 3), (2, 4), (5, 7), (6, 9), (8, 10), (11, 12)]);
        assert_eq!(Involution::y_mu_n(&Partition::empty(), 1).unwrap(), y("(1,2)"));
        assert!(Involution::y_mu_n(&Partition::new(vec![2]).unwrap(), 1).is_err());
        assert!(Involution::y_mu_n(&Partition::new(vec![1, 1]).unwrap(), 2).is_err());
    }

    #[test]
    fn y_mu_n_is_321_avoiding() {
        for n in 1..5 {
            for mu in Partition::all_inside_staircase(n) {
                let z = Involution::y_mu_n(&mu, n).unwrap();
                assert!(!z.perm().contains_pattern(&[3, 2, 1]), "{z}");
            }
        }
    }

    #[test]
    fn peel_inverts_conjugation() {
        let mut seen = HashSet::new();
        for z in all_involutions(5) {
            for i in 1..5 {
                let up = z.demazure_conj(i);
                if up != z {
                    assert_eq!(up.inv_length(), z.inv_length() + 1);
                    assert_eq!(up.peel(i).unwrap(), z);
                }
                seen.insert(up);
            }
        }
        // everything except the identity is reached
        assert!(!seen.contains(&Involution::identity()));
        assert_eq!(seen.len(), all_involutions(5).len() - 1);
    }

    #[test]
    fn dominant_examples() {
        assert!(y("(1,2)").is_dominant());
        assert!(y("(1,4)").is_dominant());
        assert!(Involution::longest(5).is_dominant());
        assert!(!y("(2,3)").is_dominant());
    }
}
