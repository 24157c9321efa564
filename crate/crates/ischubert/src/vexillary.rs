//! Involution pattern containment and the P- and Q-vexillary classifiers.

use crate::involution::Involution;
use crate::transition::{expand_fhat, expand_ghat};

/// The eleven minimal non-P-vexillary involutions.
pub const ELEVEN_P: [&str; 11] = [
    "(1,2)(3,5)",
    "(1,3)(4,5)",
    "(1,4)(3,6)",
    "(1,4)(2,3)(5,6)",
    "(1,2)(3,6)(4,5)",
    "(1,2)(3,4)(5,6)",
    "(1,5)(2,4)(3,7)",
    "(1,5)(3,7)(4,6)",
    "(1,6)(2,5)(3,8)(4,7)",
    "(1,6)(2,4)(3,8)(5,7)",
    "(1,3)(2,5)(4,7)(6,8)",
];

/// The five minimal non-Q-vexillary involutions.
pub const FIVE_Q: [&str; 5] =
    ["(1,2)(3,4)", "(1,4)(3,6)", "(1,5)(3,7)(4,6)", "(1,5)(2,4)(3,7)", "(1,6)(2,5)(3,8)(4,7)"];

/// The two patterns that decide P-vexillarity for 321-avoiding involutions.
pub const TWO_321: [&str; 2] = ["(1,2)(3,4)(5,6)", "(1,3)(2,5)(4,7)(6,8)"];

/// Parses one of the constant pattern lists.
pub fn pattern_list(list: &[&str]) -> Vec<Involution> {
    list.iter().map(|s| Involution::parse(s).expect("constant pattern")).collect()
}

/// Which route a classifier uses.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum VexMethod {
    Patterns,
    Direct,
    /// Ordinary 2143-avoidance; Q-vexillary only.
    Vexillary,
}

/// `[z]_E` as an element of `I_|E|`.
pub fn standardize(z: &Involution, e: &[i64]) -> Involution {
    Involution::new(z.perm().standardize(e)).expect("E is z-invariant")
}

/// A `z`-invariant set `E` of size `m` with `[z]_E = p`, if any.
///
/// `p` is read as an element of `I_m`. Fixed points of `z` outside its support are
/// interchangeable, so only the nearest `k` on each side are tried.
pub fn find_inv_pattern(z: &Involution, p: &Involution, m: usize) -> Option<Vec<i64>> {
    let max_p = p.support_bounds().map_or(0, |(_, hi)| hi);
    assert!(p.support_bounds().is_none_or(|(lo, _)| lo >= 1) && max_p <= m as i64, "{p} is not in I_{m}");
    let (lo, hi) = z.support_bounds().unwrap_or((1, 0));
    let mut orbits: Vec<Vec<i64>> = Vec::new();
    for i in lo..=hi {
        let j = z.apply(i);
        if i <= j {
            orbits.push(if i == j { vec![i] } else { vec![i, j] });
        }
    }
    let mut chosen: Vec<i64> = Vec::new();
    let mut found = None;
    search(&orbits, 0, m, &mut chosen, &mut |inner: &[i64]| {
        let rest = m - inner.len();
        for below in 0..=rest {
            let mut e: Vec<i64> = (0..below as i64).map(|k| lo - 1 - k).collect();
            e.extend_from_slice(inner);
            e.extend((0..(rest - below) as i64).map(|k| hi + 1 + k));
            e.sort_unstable();
            if standardize(z, &e) == *p {
                found = Some(e);
                return true;
            }
        }
        false
    });
    found
}

fn search(orbits: &[Vec<i64>], start: usize, m: usize, chosen: &mut Vec<i64>, f: &mut impl FnMut(&[i64]) -> bool) -> bool {
    if f(chosen) {
        return true;
    }
    for k in start..orbits.len() {
        if chosen.len() + orbits[k].len() > m {
            continue;
        }
        let before = chosen.len();
        chosen.extend_from_slice(&orbits[k]);
        if search(orbits, k + 1, m, chosen, f) {
            return true;
        }
        chosen.truncate(before);
    }
    false
}

/// Whether some `z`-invariant `E` has `[z]_E = p`, with `p ∈ I_m` for `m` its largest moved point.
pub fn contains_inv_pattern(z: &Involution, p: &Involution) -> bool {
    let m = p.support_bounds().map_or(0, |(_, hi)| hi as usize);
    find_inv_pattern(z, p, m).is_some()
}

/// The first pattern of `list` contained in `z`, with a witness set.
pub fn first_pattern(z: &Involution, list: &[&str]) -> Option<(Involution, Vec<i64>)> {
    pattern_list(list).into_iter().find_map(|p| {
        let m = p.support_bounds().map_or(0, |(_, hi)| hi as usize);
        find_inv_pattern(z, &p, m).map(|e| (p, e))
    })
}

/// `F̂_z` is a single Schur P-function.
pub fn is_p_vexillary(z: &Involution, method: VexMethod) -> bool {
    match method {
        VexMethod::Patterns => first_pattern(z, &ELEVEN_P).is_none(),
        VexMethod::Direct => expand_fhat(z).single().is_some(),
        VexMethod::Vexillary => panic!("no vexillary route for P-vexillarity"),
    }
}

/// `Ĝ_z` is a single Schur Q-function.
pub fn is_q_vexillary(z: &Involution, method: VexMethod) -> bool {
    match method {
        VexMethod::Patterns => first_pattern(z, &FIVE_Q).is_none(),
        VexMethod::Direct => expand_ghat(z).expect("Q-expansion is integral").single().is_some(),
        VexMethod::Vexillary => !z.perm().contains_pattern(&[2, 1, 4, 3]),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::involution::all_involutions;
    use crate::partition::Partition;
    use rand::seq::SliceRandom;
    use rand::{rngs::StdRng, SeedableRng};

    fn inv(s: &str) -> Involution {
        Involution::parse(s).unwrap()
    }

    #[test]
    fn containment_examples() {
        let z = inv("(1,2)(3,4)(5,6)");
        assert!(find_inv_pattern(&z, &Involution::identity(), 0).is_some());
        assert_eq!(find_inv_pattern(&z, &z, 6), Some(vec![1, 2, 3, 4, 5, 6]));
        assert!(contains_inv_pattern(&inv("(2,4)(5,7)"), &inv("(1,2)")));
        assert!(contains_inv_pattern(&inv("(1,3)"), &inv("(1,2)")));
        assert!(contains_inv_pattern(&inv("(1,3)"), &inv("(2,3)")));
        assert!(!contains_inv_pattern(&inv("(1,4)"), &inv("(1,2)(3,4)")));
        assert!(!contains_inv_pattern(&Involution::identity(), &inv("(1,2)")));
        // fixed points outside the support are available
        assert_eq!(find_inv_pattern(&inv("(1,2)"), &inv("(1,2)"), 3), Some(vec![1, 2, 3]));
        assert_eq!(find_inv_pattern(&inv("(2,3)"), &inv("(2,3)"), 3), Some(vec![1, 2, 3]));
    }

    #[test]
    fn patterns_are_minimal_counterexamples() {
        for p in pattern_list(&ELEVEN_P) {
            assert!(!is_p_vexillary(&p, VexMethod::Direct), "{p}");
        }
        for p in pattern_list(&FIVE_Q) {
            assert!(!is_q_vexillary(&p, VexMethod::Direct), "{p}");
            assert!(!is_q_vexillary(&p, VexMethod::Vexillary), "{p}");
        }
        assert!(!is_p_vexillary(&inv("(1,2)(3,5)"), VexMethod::Patterns));
        assert!(!is_q_vexillary(&inv("(1,2)(3,4)"), VexMethod::Patterns));
    }

    #[test]
    fn longest_elements_are_vexillary() {
        for n in 1..=8 {
            let w = Involution::longest(n);
            assert!(is_p_vexillary(&w, VexMethod::Patterns));
            assert!(is_p_vexillary(&w, VexMethod::Direct));
            for m in [VexMethod::Patterns, VexMethod::Direct, VexMethod::Vexillary] {
                assert!(is_q_vexillary(&w, m));
            }
        }
    }

    #[test]
    fn p_vexillary_counts() {
        let mut counts = Vec::new();
        for n in 1..=7 {
            let mut c = 0;
            for z in all_involutions(n) {
                let direct = is_p_vexillary(&z, VexMethod::Direct);
                assert_eq!(direct, is_p_vexillary(&z, VexMethod::Patterns), "{z}");
                c += direct as usize;
            }
            counts.push(c);
        }
        assert_eq!(counts, vec![1, 2, 4, 10, 24, 63, 159]);
    }

    #[test]
    fn q_vexillary_routes_agree_on_i7() {
        for z in all_involutions(7) {
            let a = is_q_vexillary(&z, VexMethod::Vexillary);
            assert_eq!(a, is_q_vexillary(&z, VexMethod::Direct), "{z}");
            assert_eq!(a, is_q_vexillary(&z, VexMethod::Patterns), "{z}");
            if a {
                assert!(is_p_vexillary(&z, VexMethod::Direct), "{z}");
            }
        }
    }

    #[test]
    fn two_patterns_for_321_avoiding() {
        for z in all_involutions(7) {
            if z.perm().contains_pattern(&[3, 2, 1]) {
                continue;
            }
            let by_two = first_pattern(&z, &TWO_321).is_none();
            assert_eq!(by_two, is_p_vexillary(&z, VexMethod::Direct), "{z}");
        }
    }

    #[test]
    fn random_i10_routes_agree() {
        let mut rng = StdRng::seed_from_u64(7);
        let all = all_involutions(10);
        for z in all.choose_multiple(&mut rng, 40) {
            assert_eq!(is_p_vexillary(z, VexMethod::Direct), is_p_vexillary(z, VexMethod::Patterns), "{z}");
        }
    }

    #[test]
    fn rectangles_in_staircases() {
        let n = 4;
        for mu in Partition::all_inside_staircase(n) {
            let y = Involution::y_mu_n(&mu, n).unwrap();
            assert_eq!(expand_fhat(&y).single().is_some(), mu.is_rectangle(), "{mu}");
            if mu.is_rectangle() {
                assert!(!contains_inv_pattern(&y, &inv("(1,2)(3,4)(5,6)")), "{mu}");
            }
        }
    }
}
