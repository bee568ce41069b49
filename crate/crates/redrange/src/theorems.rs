//! Computable forms of the main identities: the expatriation formula for the
//! minimum `sigma_k` count, the explicit factorization witnessing it, the
//! straddling-pattern criterion for repeated `sigma_k` factors, the pair-count
//! upper bound on the maximum, the balanced-pattern criterion for a
//! non-constant count, Bruhat covers, and the closed forms for the longest
//! element.

use std::collections::BTreeSet;

use crate::patterns::{occurrences_321, occurrences_3412, pos_pair_count, val_pair_count, Axis};
use crate::perm::{Permutation, ReducedWord};
use crate::reduced_words::enumerate_reduced_words;

/// Number of values greater than `k` among the first `k` positions of `w`;
/// equal to the number of values at most `k` among the last `n - k` positions.
/// Both counts are computed and must agree.
pub fn expatriation(w: &Permutation, k: usize) -> usize {
    assert_valid_k(w, k);
    let n = w.degree();
    let from_prefix = (1..=k).filter(|&i| w.image(i) > k).count();
    let from_suffix = (k + 1..=n).filter(|&i| w.image(i) <= k).count();
    assert_eq!(from_prefix, from_suffix, "expatriation counts disagree");
    from_prefix
}

/// The minimum number of `sigma_k` factors over all reduced words of `w`.
/// Equals the expatriation measure; the agreement with the recursion in
/// [`sigma_count_range`](crate::reduced_words::sigma_count_range) is verified
/// exhaustively by the `min` sweep.
pub fn min_sigma_count(w: &Permutation, k: usize) -> usize {
    expatriation(w, k)
}

/// The factorization `u * v * t_0 ... t_{m-1} * d = w` realizing the minimal
/// number of `sigma_k` factors: `u`, `v`, and `d` avoid the letter `k`
/// entirely and each block `t_i` contains it exactly once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessDecomposition {
    pub u: Permutation,
    pub v: Permutation,
    pub t_words: Vec<ReducedWord>,
    pub d: Permutation,
    pub assembled: ReducedWord,
}

fn lex_least_word(w: &Permutation) -> Vec<usize> {
    enumerate_reduced_words(w)
        .next()
        .expect("every permutation has at least one reduced word")
        .letters()
        .to_vec()
}

/// Builds the minimal witness for `(w, k)`.
///
/// With `X` the values above `k` sitting in the first `k` positions and `Y`
/// the values at most `k` sitting in the rest: `u` lists, within the first
/// `k` positions, the non-displaced small values in increasing order followed
/// by `Y` in increasing order; `v` lists, within the last `n - k` positions,
/// `X` in increasing order followed by the non-displaced large values in
/// increasing order; `t_i` is the descending run
/// `sigma_{k+i} sigma_{k+i-1} ... sigma_{k+i-(m-1)}`; and `d` is the unique
/// completion fixing `{1..k}` and `{k+1..n}` setwise. The assembled word
/// concatenates lexicographically least reduced words for `u`, `v`, and `d`
/// around the explicit `t_i` letters.
pub fn minimal_witness(w: &Permutation, k: usize) -> WitnessDecomposition {
    assert_valid_k(w, k);
    let n = w.degree();
    let x: Vec<usize> = (1..=k).map(|i| w.image(i)).filter(|&v| v > k).collect();
    let y: Vec<usize> = (k + 1..=n)
        .map(|i| w.image(i))
        .filter(|&v| v <= k)
        .collect();
    let (mut x, mut y) = (x, y);
    x.sort_unstable();
    y.sort_unstable();
    let m = x.len();
    debug_assert_eq!(m, y.len());

    let mut u_vals: Vec<usize> = (1..=k).filter(|v| !y.contains(v)).collect();
    u_vals.extend(&y);
    u_vals.extend(k + 1..=n);
    let u = Permutation::from_one_line(&u_vals).expect("u is a bijection by construction");

    let mut v_vals: Vec<usize> = (1..=k).collect();
    v_vals.extend(&x);
    v_vals.extend((k + 1..=n).filter(|v| !x.contains(v)));
    let v = Permutation::from_one_line(&v_vals).expect("v is a bijection by construction");

    let t_words: Vec<ReducedWord> = (0..m)
        .map(|i| {
            let letters: Vec<usize> = (0..m).map(|j| k + i - j).collect();
            ReducedWord::new(letters, n).expect("a descending run of generators is reduced")
        })
        .collect();

    let mut prefix = u.multiply(&v);
    for t in &t_words {
        prefix = prefix.multiply(&t.product());
    }
    let d = prefix.inverse().multiply(w);
    assert!(
        (1..=k).all(|i| d.image(i) <= k),
        "completion factor must fix the first {k} positions setwise"
    );

    let mut letters = lex_least_word(&u);
    letters.extend(lex_least_word(&v));
    for t in &t_words {
        letters.extend_from_slice(t.letters());
    }
    letters.extend(lex_least_word(&d));
    let assembled =
        ReducedWord::new(letters, n).expect("witness factors concatenate to a reduced word");
    debug_assert_eq!(assembled.product(), *w);
    debug_assert_eq!(assembled.count_letter(k), m);

    WitnessDecomposition {
        u,
        v,
        t_words,
        d,
        assembled,
    }
}

/// True when some reduced word of `w` contains `sigma_k` more than once,
/// detected by a 321- or 3412-occurrence straddling `k` in both position and
/// value.
pub fn has_multiple(w: &Permutation, k: usize) -> bool {
    assert_valid_k(w, k);
    occurrences_321(w)
        .iter()
        .chain(occurrences_3412(w).iter())
        .any(|occ| occ.straddles_both(k))
}

/// The pair-count bound `min{PosPair_k(w), ValPair_k(w)} + 1` on the maximum
/// number of `sigma_k` factors. For `k` outside the support the true maximum
/// is 0 while this bound is at least 1; it still bounds occurrences in any
/// reduced word.
pub fn max_upper_bound(w: &Permutation, k: usize) -> usize {
    assert_valid_k(w, k);
    pos_pair_count(w, k).min(val_pair_count(w, k)) + 1
}

/// A 321-occurrence straddling position `k` whose flanking value sets are
/// balanced and increasing, certifying that the `sigma_k` count is not the
/// same in every reduced word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FixedCriterionWitness {
    /// Position of the occurrence's largest value (`i <= k`).
    pub i: usize,
    /// Position of the occurrence's smallest value (`j > k`).
    pub j: usize,
    /// Values above `w(i)` in positions `(i, k]`.
    pub left_values: BTreeSet<usize>,
    /// Values below `w(j)` in positions `(k, j)`.
    pub right_values: BTreeSet<usize>,
}

fn increasing(values: &[usize]) -> bool {
    values.windows(2).all(|pair| pair[0] < pair[1])
}

/// Searches the 321-occurrences straddling position `k` for one whose sets
/// `L = {w(q) > w(i) : i < q <= k}` and `R = {w(q) < w(j) : k < q < j}` have
/// equal size and appear in increasing order left to right. Such a witness
/// exists exactly when `max_k(w) > min_k(w)`. Candidates are scanned in
/// lexicographic order of the pair `(i, j)`, then of the full occurrence.
pub fn fixed_repetition_criterion(w: &Permutation, k: usize) -> Option<FixedCriterionWitness> {
    assert_valid_k(w, k);
    let mut candidates: Vec<(usize, usize, usize)> = occurrences_321(w)
        .iter()
        .filter(|occ| occ.straddles(k, Axis::Position))
        .map(|occ| (occ.positions[0], occ.positions[2], occ.positions[1]))
        .collect();
    candidates.sort_unstable();
    for (i, j, _) in candidates {
        let left: Vec<usize> = (i + 1..=k)
            .map(|q| w.image(q))
            .filter(|&v| v > w.image(i))
            .collect();
        let right: Vec<usize> = (k + 1..j)
            .map(|q| w.image(q))
            .filter(|&v| v < w.image(j))
            .collect();
        if left.len() == right.len() && increasing(&left) && increasing(&right) {
            return Some(FixedCriterionWitness {
                i,
                j,
                left_values: left.into_iter().collect(),
                right_values: right.into_iter().collect(),
            });
        }
    }
    None
}

/// True when `w` covers `v` in the Bruhat order: `length(w) = length(v) + 1`
/// and `w = v * t` for a (not necessarily adjacent) transposition `t`.
pub fn bruhat_covers(v: &Permutation, w: &Permutation) -> bool {
    assert_eq!(
        v.degree(),
        w.degree(),
        "degree mismatch in Bruhat cover test"
    );
    if w.length() != v.length() + 1 {
        return false;
    }
    let diffs: Vec<usize> = (1..=v.degree())
        .filter(|&i| v.image(i) != w.image(i))
        .collect();
    diffs.len() == 2
        && w.image(diffs[0]) == v.image(diffs[1])
        && w.image(diffs[1]) == v.image(diffs[0])
}

/// Closed forms for the longest element `w0 = n (n-1) ... 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LongElementProfile {
    /// `min{k, n - k}`: the minimal `sigma_k` count in reduced words of `w0`.
    pub min_count: usize,
    /// `k (n - k)`: an upper bound on the maximal `sigma_k` count.
    pub max_bound: usize,
    /// `(k - 1)(n - k) + n - k - 1`: the number of position pairs
    /// (equivalently, value pairs) at `k`.
    pub pos_pairs: usize,
}

pub fn long_element_profile(n: usize, k: usize) -> LongElementProfile {
    assert!(n >= 3, "degree {n} below 3");
    assert!(k >= 1 && k < n, "generator index {k} outside 1..={}", n - 1);
    LongElementProfile {
        min_count: k.min(n - k),
        max_bound: k * (n - k),
        pos_pairs: (k - 1) * (n - k) + (n - k) - 1,
    }
}

fn assert_valid_k(w: &Permutation, k: usize) {
    assert!(
        k >= 1 && k < w.degree(),
        "generator index {k} outside 1..={}",
        w.degree() - 1
    );
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::{is_reduced, permutations};
    use crate::reduced_words::{repetition_profile, repetition_profile_with, RangeMemo};

    fn perm(text: &str) -> Permutation {
        Permutation::parse(text).unwrap()
    }

    #[test]
    fn expatriation_examples() {
        assert_eq!(expatriation(&perm("5273416"), 4), 2);
        for k in 1..=4 {
            assert_eq!(expatriation(&Permutation::identity(5), k), 0);
        }
        assert_eq!(expatriation(&Permutation::longest_element(6), 2), 2);
    }

    #[test]
    fn min_count_examples() {
        assert_eq!(min_sigma_count(&perm("4312"), 2), 2);
        assert_eq!(min_sigma_count(&perm("4312"), 1), 1);
        assert_eq!(min_sigma_count(&Permutation::identity(4), 3), 0);
    }

    #[test]
    fn witness_reproduces_worked_example() {
        let wd = minimal_witness(&perm("5273416"), 4);
        assert_eq!(wd.u, perm("2314567"));
        assert_eq!(wd.v, perm("1234576"));
        assert_eq!(wd.t_words.len(), 2);
        assert_eq!(wd.t_words[0].letters(), &[4, 3]);
        assert_eq!(wd.t_words[1].letters(), &[5, 4]);
        assert_eq!(wd.d, perm("3142657"));
        assert_eq!(wd.assembled.product(), perm("5273416"));
        assert_eq!(wd.assembled.count_letter(4), 2);
    }

    #[test]
    fn witness_trivial_cases() {
        let wd = minimal_witness(&Permutation::identity(5), 2);
        assert!(wd.assembled.is_empty());
        assert!(wd.t_words.is_empty());
        assert!(wd.u.is_identity() && wd.v.is_identity() && wd.d.is_identity());

        let wd = minimal_witness(&Permutation::simple_reflection(3, 5), 3);
        assert!(wd.u.is_identity() && wd.v.is_identity() && wd.d.is_identity());
        assert_eq!(wd.t_words.len(), 1);
        assert_eq!(wd.t_words[0].letters(), &[3]);
        assert_eq!(wd.assembled.letters(), &[3]);
    }

    #[test]
    fn witness_avoids_k_outside_t_blocks() {
        for n in 2..=5 {
            for w in permutations(n) {
                for k in 1..n {
                    let wd = minimal_witness(&w, k);
                    let expat = expatriation(&w, k);
                    assert!(!wd.u.support().contains(&k));
                    assert!(!wd.v.support().contains(&k));
                    assert!(!wd.d.support().contains(&k));
                    for t in &wd.t_words {
                        assert_eq!(t.count_letter(k), 1);
                    }
                    assert_eq!(is_reduced(wd.assembled.letters(), n), Ok(true));
                    assert_eq!(wd.assembled.product(), w);
                    assert_eq!(wd.assembled.count_letter(k), expat);
                }
            }
        }
    }

    #[test]
    fn has_multiple_examples() {
        assert!(!has_multiple(&perm("621354"), 3));
        assert!(has_multiple(&perm("4312"), 2));
        assert!(!has_multiple(&Permutation::identity(4), 2));
    }

    #[test]
    fn bound_examples() {
        assert_eq!(max_upper_bound(&perm("4312"), 1), 2);
        assert_eq!(repetition_profile(&perm("4312")).range(1).max_count, 2);

        assert_eq!(max_upper_bound(&perm("4321"), 2), 4);
        assert_eq!(repetition_profile(&perm("4321")).range(2).max_count, 3);

        // for 5273416 the bound is attained at every k; in particular the
        // true maxima are (2,2,3,3,2,1), confirmed by tallying all 2365
        // reduced words
        let w = perm("5273416");
        let profile = repetition_profile(&w);
        let expected_max = [2, 2, 3, 3, 2, 1];
        for k in 1..=6 {
            let bound = max_upper_bound(&w, k) as u64;
            let max = profile.range(k).max_count;
            assert_eq!(max, expected_max[k - 1], "k = {k}");
            assert_eq!(max, bound, "k = {k}");
        }
        assert_eq!(max_upper_bound(&w, 4), 3);
    }

    #[test]
    fn fixed_criterion_examples() {
        let witness = fixed_repetition_criterion(&perm("4312"), 1).unwrap();
        assert_eq!((witness.i, witness.j), (1, 3));
        assert!(witness.left_values.is_empty());
        assert!(witness.right_values.is_empty());

        assert_eq!(fixed_repetition_criterion(&perm("621354"), 3), None);
        assert_eq!(
            fixed_repetition_criterion(&Permutation::identity(4), 2),
            None
        );
    }

    #[test]
    fn bruhat_cover_examples() {
        assert!(bruhat_covers(&perm("561234"), &perm("651234")));
        assert!(bruhat_covers(&perm("32541"), &perm("52341")));
        let w = perm("4312");
        assert!(!bruhat_covers(&w, &w));
        // length rises by one but not by a single transposition
        assert!(!bruhat_covers(&perm("1234"), &perm("2341")));
        // transposition but length rises by more than one
        assert!(!bruhat_covers(&perm("1234"), &perm("3214")));
    }

    #[test]
    fn long_element_profile_examples() {
        assert_eq!(
            long_element_profile(4, 2),
            LongElementProfile {
                min_count: 2,
                max_bound: 4,
                pos_pairs: 3
            }
        );
        assert_eq!(
            long_element_profile(3, 1),
            LongElementProfile {
                min_count: 1,
                max_bound: 2,
                pos_pairs: 1
            }
        );
        let profile = long_element_profile(8, 4);
        assert_eq!(profile.min_count, 4);
        assert_eq!(profile.max_bound, 16);
        assert_eq!(profile.pos_pairs, 15);
        let w0 = Permutation::longest_element(8);
        assert_eq!(pos_pair_count(&w0, 4), 15);
        assert_eq!(val_pair_count(&w0, 4), 15);
        assert_eq!(min_sigma_count(&w0, 4), 4);
    }

    #[test]
    fn theorem_identities_hold_exhaustively_up_to_s5() {
        for n in 2..=5 {
            let mut memo = RangeMemo::new();
            for w in permutations(n) {
                let profile = repetition_profile_with(&mut memo, &w);
                let supp = w.support();
                for k in 1..n {
                    let range = profile.range(k);
                    assert_eq!(
                        min_sigma_count(&w, k) as u64,
                        range.min_count,
                        "min at w = {w}, k = {k}"
                    );
                    assert_eq!(
                        has_multiple(&w, k),
                        range.max_count > 1,
                        "multiplicity at w = {w}, k = {k}"
                    );
                    if supp.contains(&k) {
                        assert!(
                            range.max_count <= max_upper_bound(&w, k) as u64,
                            "bound at w = {w}, k = {k}"
                        );
                    }
                    assert_eq!(
                        fixed_repetition_criterion(&w, k).is_some(),
                        range.max_count > range.min_count,
                        "fixed criterion at w = {w}, k = {k}"
                    );
                }
            }
            assert!(!memo.is_empty());
        }
    }
}
