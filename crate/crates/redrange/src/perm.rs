//! Permutations of `[1, n]` in one-line notation, together with the group
//! structure used everywhere else: composition, inversion, Coxeter length,
//! descents, support, and products of simple-reflection words.
//!
//! Conventions are fixed once here. Values and positions are 1-based at every
//! public boundary (internal storage is a 0-indexed `Vec`). Composition is
//! `(u * v)(i) = u(v(i))`, so multiplying by the simple reflection `sigma_i`
//! on the right swaps the entries in positions `i` and `i + 1`, and on the
//! left swaps the values `i` and `i + 1`.

use std::collections::BTreeSet;
use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PermError {
    #[error("one-line notation must be nonempty")]
    Empty,
    #[error("value {value} at position {position} is outside 1..={degree}")]
    OutOfRange {
        position: usize,
        value: usize,
        degree: usize,
    },
    #[error("duplicate value {value} at position {position}")]
    Duplicate { position: usize, value: usize },
    #[error("cannot parse permutation {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("letter {letter} at index {index} is outside 1..={max}")]
    LetterOutOfRange {
        index: usize,
        letter: usize,
        max: usize,
    },
    #[error("word of {word_length} letters is not reduced (product has length {product_length})")]
    NotReduced {
        word_length: usize,
        product_length: usize,
    },
}

/// A permutation of `[1, n]`, stored by its one-line notation.
///
/// Immutable value type: cheap to clone, compared and hashed by its one-line
/// notation so it can key memo tables.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    /// `values[i]` is `w(i + 1)`; entries are the 1-based images.
    values: Vec<usize>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        assert!(n >= 1, "degree must be at least 1");
        Permutation {
            values: (1..=n).collect(),
        }
    }

    /// Builds `w` from its one-line notation `values[i] = w(i + 1)`,
    /// rejecting anything that is not a bijection on `[1, n]`.
    pub fn from_one_line(values: &[usize]) -> Result<Self, PermError> {
        if values.is_empty() {
            return Err(PermError::Empty);
        }
        let n = values.len();
        let mut seen = vec![0usize; n + 1];
        for (idx, &v) in values.iter().enumerate() {
            if v < 1 || v > n {
                return Err(PermError::OutOfRange {
                    position: idx + 1,
                    value: v,
                    degree: n,
                });
            }
            if seen[v] != 0 {
                return Err(PermError::Duplicate {
                    position: idx + 1,
                    value: v,
                });
            }
            seen[v] = idx + 1;
        }
        Ok(Permutation {
            values: values.to_vec(),
        })
    }

    /// The simple reflection `sigma_k` in degree `n`, exchanging `k` and `k + 1`.
    pub fn simple_reflection(k: usize, n: usize) -> Self {
        assert!(
            k >= 1 && k < n,
            "simple reflection index {k} outside 1..={}",
            n - 1
        );
        let mut p = Permutation::identity(n);
        p.values.swap(k - 1, k);
        p
    }

    /// The order-reversing permutation `n (n-1) ... 2 1`, the longest element.
    pub fn longest_element(n: usize) -> Self {
        assert!(n >= 1);
        Permutation {
            values: (1..=n).rev().collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.values.len()
    }

    /// `w(i)` for a 1-based position `i`.
    pub fn image(&self, i: usize) -> usize {
        self.values[i - 1]
    }

    /// The one-line notation as a slice; `one_line()[i]` is `w(i + 1)`.
    pub fn one_line(&self) -> &[usize] {
        &self.values
    }

    pub fn is_identity(&self) -> bool {
        self.values.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    /// Composition `(self * other)(i) = self(other(i))`.
    ///
    /// Panics if the degrees differ.
    pub fn multiply(&self, other: &Permutation) -> Permutation {
        assert_eq!(
            self.degree(),
            other.degree(),
            "degree mismatch in permutation product"
        );
        Permutation {
            values: other.values.iter().map(|&v| self.values[v - 1]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0usize; self.values.len()];
        for (i, &v) in self.values.iter().enumerate() {
            inv[v - 1] = i + 1;
        }
        Permutation { values: inv }
    }

    /// `w * sigma_d`: the one-line notation with positions `d`, `d + 1` swapped.
    pub fn times_simple(&self, d: usize) -> Permutation {
        assert!(
            d >= 1 && d < self.degree(),
            "simple reflection index {d} outside 1..={}",
            self.degree() - 1
        );
        let mut p = self.clone();
        p.values.swap(d - 1, d);
        p
    }

    /// Coxeter length: the number of inversions `{(i, j) : i < j, w(i) > w(j)}`.
    /// Equals the number of letters in any reduced word for `w`.
    pub fn length(&self) -> usize {
        let v = &self.values;
        let mut count = 0;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    count += 1;
                }
            }
        }
        count
    }

    /// Right descents: `{d : w(d) > w(d + 1)}`, the letters that shorten `w`
    /// under right multiplication. Ascending.
    pub fn right_descents(&self) -> Vec<usize> {
        (1..self.degree())
            .filter(|&d| self.values[d - 1] > self.values[d])
            .collect()
    }

    /// Left descents: `{d : length(sigma_d * w) < length(w)}`, ascending.
    /// These are the possible first letters of reduced words for `w`.
    pub fn left_descents(&self) -> Vec<usize> {
        let inv = self.inverse();
        inv.right_descents()
    }

    /// The support of `w`: every generator index appearing in any (equivalently
    /// every) reduced word of `w`. Computed by the prefix criterion
    /// `k in supp(w)  iff  {w(1), ..., w(k)} != {1, ..., k}`.
    pub fn support(&self) -> BTreeSet<usize> {
        let mut supp = BTreeSet::new();
        let mut prefix_max = 0;
        for k in 1..self.degree() {
            prefix_max = prefix_max.max(self.values[k - 1]);
            if prefix_max > k {
                supp.insert(k);
            }
        }
        supp
    }

    /// Parses the textual forms accepted everywhere in the crate: a digit
    /// string such as `4312` (degrees up to 9) or comma-separated values such
    /// as `10,2,1,...` (any degree).
    pub fn parse(text: &str) -> Result<Self, PermError> {
        let text = text.trim();
        let parse_err = |reason: &str| PermError::Parse {
            input: text.to_string(),
            reason: reason.to_string(),
        };
        if text.is_empty() {
            return Err(parse_err("empty input"));
        }
        let values: Vec<usize> = if text.contains(',') {
            text.split(',')
                .map(|part| {
                    part.trim()
                        .parse::<usize>()
                        .map_err(|_| parse_err(&format!("invalid entry {:?}", part.trim())))
                })
                .collect::<Result<_, _>>()?
        } else {
            text.chars()
                .map(|c| match c.to_digit(10) {
                    Some(d) if d >= 1 => Ok(d as usize),
                    _ => Err(parse_err(&format!("invalid digit {c:?}"))),
                })
                .collect::<Result<_, _>>()?
        };
        Permutation::from_one_line(&values)
    }

    /// Canonical text form: digit string when `n <= 9`, comma-separated otherwise.
    pub fn to_text(&self) -> String {
        if self.degree() <= 9 {
            self.values.iter().map(|v| v.to_string()).collect()
        } else {
            self.values
                .iter()
                .map(|v| v.to_string())
                .collect::<Vec<_>>()
                .join(",")
        }
    }

    /// Rank of `w` among all of `S_n` in lexicographic one-line order, 0-based.
    pub fn lex_rank(&self) -> u64 {
        let n = self.degree();
        let mut rank: u64 = 0;
        let mut remaining: Vec<usize> = (1..=n).collect();
        for i in 0..n {
            let pos = remaining.iter().position(|&v| v == self.values[i]).unwrap();
            rank = rank * (n - i) as u64 + pos as u64;
            remaining.remove(pos);
        }
        rank
    }

    /// Inverse of [`lex_rank`](Self::lex_rank): the `rank`-th permutation of
    /// `S_n` in lexicographic order.
    pub fn from_lex_rank(n: usize, rank: u64) -> Self {
        assert!((1..=20).contains(&n), "degree {n} outside supported range");
        let total = factorial(n);
        assert!(rank < total, "rank {rank} outside 0..{total}");
        let mut remaining: Vec<usize> = (1..=n).collect();
        let mut values = Vec::with_capacity(n);
        let mut r = rank;
        for i in 0..n {
            let base = factorial(n - 1 - i);
            let pos = (r / base) as usize;
            r %= base;
            values.push(remaining.remove(pos));
        }
        Permutation { values }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({})", self.to_text())
    }
}

pub fn factorial(n: usize) -> u64 {
    assert!(n <= 20, "factorial({n}) overflows u64");
    (1..=n as u64).product()
}

/// Advances `values` to the lexicographically next permutation of itself.
/// Returns false (leaving the slice sorted ascending) after the last one.
pub(crate) fn next_permutation(values: &mut [usize]) -> bool {
    if values.len() < 2 {
        return false;
    }
    let mut i = values.len() - 1;
    while i > 0 && values[i - 1] >= values[i] {
        i -= 1;
    }
    if i == 0 {
        values.reverse();
        return false;
    }
    let mut j = values.len() - 1;
    while values[j] <= values[i - 1] {
        j -= 1;
    }
    values.swap(i - 1, j);
    values[i..].reverse();
    true
}

/// All of `S_n` in lexicographic one-line order.
pub fn permutations(n: usize) -> Permutations {
    assert!(n >= 1);
    Permutations {
        next: Some((1..=n).collect()),
    }
}

pub struct Permutations {
    next: Option<Vec<usize>>,
}

impl Iterator for Permutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut following = current.clone();
        if next_permutation(&mut following) {
            self.next = Some(following);
        }
        Some(Permutation { values: current })
    }
}

/// Left-to-right product of simple reflections: starting from the identity,
/// each letter `l` multiplies by `sigma_l` on the right (swapping positions
/// `l`, `l + 1` of the partial product).
pub fn product_of_word(letters: &[usize], n: usize) -> Result<Permutation, PermError> {
    assert!(n >= 1);
    let mut values: Vec<usize> = (1..=n).collect();
    for (index, &letter) in letters.iter().enumerate() {
        if letter < 1 || letter >= n {
            return Err(PermError::LetterOutOfRange {
                index,
                letter,
                max: n - 1,
            });
        }
        values.swap(letter - 1, letter);
    }
    Ok(Permutation { values })
}

/// A word is reduced exactly when its product has as many inversions as the
/// word has letters.
pub fn is_reduced(letters: &[usize], n: usize) -> Result<bool, PermError> {
    let product = product_of_word(letters, n)?;
    Ok(product.length() == letters.len())
}

/// A validated reduced word: a sequence of generator indices whose product
/// has Coxeter length equal to the number of letters.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ReducedWord {
    letters: Vec<usize>,
    degree: usize,
}

impl ReducedWord {
    pub fn new(letters: Vec<usize>, degree: usize) -> Result<Self, PermError> {
        let product = product_of_word(&letters, degree)?;
        if product.length() != letters.len() {
            return Err(PermError::NotReduced {
                word_length: letters.len(),
                product_length: product.length(),
            });
        }
        Ok(ReducedWord { letters, degree })
    }

    /// For words produced by code that guarantees reducedness itself.
    pub(crate) fn new_unchecked(letters: Vec<usize>, degree: usize) -> Self {
        debug_assert!(matches!(is_reduced(&letters, degree), Ok(true)));
        ReducedWord { letters, degree }
    }

    pub fn empty(degree: usize) -> Self {
        ReducedWord {
            letters: Vec::new(),
            degree,
        }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn product(&self) -> Permutation {
        product_of_word(&self.letters, self.degree).expect("letters validated on construction")
    }

    /// Number of occurrences of the letter `k` in this word.
    pub fn count_letter(&self, k: usize) -> usize {
        self.letters.iter().filter(|&&l| l == k).count()
    }
}

impl fmt::Display for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("(empty)");
        }
        let parts: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

impl fmt::Debug for ReducedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ReducedWord({:?}, n={})", self.letters, self.degree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn perm(text: &str) -> Permutation {
        Permutation::parse(text).unwrap()
    }

    #[test]
    fn from_one_line_accepts_bijections() {
        let w = Permutation::from_one_line(&[4, 3, 1, 2]).unwrap();
        assert_eq!(w.degree(), 4);
        assert_eq!(w.to_text(), "4312");
        assert_eq!(
            Permutation::from_one_line(&[1]).unwrap(),
            Permutation::identity(1)
        );
    }

    #[test]
    fn from_one_line_rejects_non_bijections() {
        assert_eq!(
            Permutation::from_one_line(&[2, 2, 1]),
            Err(PermError::Duplicate {
                position: 2,
                value: 2
            })
        );
        assert_eq!(
            Permutation::from_one_line(&[1, 4, 2]),
            Err(PermError::OutOfRange {
                position: 2,
                value: 4,
                degree: 3
            })
        );
        assert_eq!(Permutation::from_one_line(&[]), Err(PermError::Empty));
    }

    #[test]
    fn composition_convention_sigma1_sigma2() {
        let s1 = Permutation::simple_reflection(1, 3);
        let s2 = Permutation::simple_reflection(2, 3);
        assert_eq!(s1.multiply(&s2), perm("231"));
    }

    #[test]
    fn identity_is_neutral() {
        let w = perm("4312");
        let id = Permutation::identity(4);
        assert_eq!(id.multiply(&w), w);
        assert_eq!(w.multiply(&id), w);
    }

    #[test]
    fn right_multiplication_swaps_positions() {
        let w = perm("4312");
        assert_eq!(w.times_simple(3), perm("4321"));
        assert_eq!(
            w.multiply(&Permutation::simple_reflection(3, 4)),
            perm("4321")
        );
        assert_eq!(perm("4321").length(), w.length() + 1);
    }

    #[test]
    fn left_multiplication_swaps_values() {
        let w = perm("4312");
        let s1 = Permutation::simple_reflection(1, 4);
        // values 1 and 2 trade places
        assert_eq!(s1.multiply(&w), perm("4321"));
    }

    #[test]
    fn length_counts_inversions() {
        assert_eq!(perm("4312").length(), 5);
        assert_eq!(Permutation::identity(7).length(), 0);
        assert_eq!(perm("4321").length(), 6);
    }

    #[test]
    fn descent_sets() {
        // 4,3,1,2 falls at positions 1 and 2; equivalently {1, 2} is the set
        // of last letters over R(4312)
        assert_eq!(perm("4312").right_descents(), vec![1, 2]);
        assert_eq!(
            Permutation::identity(5).right_descents(),
            Vec::<usize>::new()
        );
        assert_eq!(perm("4321").right_descents(), vec![1, 2, 3]);
        assert_eq!(perm("4312").left_descents(), vec![2, 3]);
        assert_eq!(perm("4132").right_descents(), vec![1, 3]);
    }

    #[test]
    fn right_descents_are_exactly_the_shortening_letters() {
        for w in permutations(5) {
            let descents = w.right_descents();
            for d in 1..5 {
                let shortens = w.times_simple(d).length() < w.length();
                assert_eq!(descents.contains(&d), shortens, "w = {w}, d = {d}");
            }
        }
    }

    #[test]
    fn inverse_examples() {
        assert_eq!(perm("4312").inverse(), perm("3421"));
        assert_eq!(
            perm("4312").multiply(&perm("4312").inverse()),
            Permutation::identity(4)
        );
        assert_eq!(Permutation::identity(3).inverse(), Permutation::identity(3));
        let s2 = Permutation::simple_reflection(2, 3);
        assert_eq!(s2.inverse(), s2);
    }

    #[test]
    fn inverse_consistency_exhaustive_small() {
        for n in 1..=6 {
            for w in permutations(n) {
                assert_eq!(w.multiply(&w.inverse()), Permutation::identity(n));
            }
        }
    }

    #[test]
    fn support_examples() {
        assert_eq!(perm("4312").support(), BTreeSet::from([1, 2, 3]));
        assert!(Permutation::identity(6).support().is_empty());
        assert_eq!(perm("213564").support(), BTreeSet::from([1, 4, 5]));
    }

    #[test]
    fn product_of_word_examples() {
        assert_eq!(product_of_word(&[2, 3, 2, 1, 2], 4).unwrap(), perm("4312"));
        assert_eq!(product_of_word(&[], 5).unwrap(), Permutation::identity(5));
        assert_eq!(
            product_of_word(&[1, 1], 3).unwrap(),
            Permutation::identity(3)
        );
        assert_eq!(
            product_of_word(&[3], 3),
            Err(PermError::LetterOutOfRange {
                index: 0,
                letter: 3,
                max: 2
            })
        );
    }

    #[test]
    fn is_reduced_examples() {
        assert_eq!(is_reduced(&[2, 3, 2, 1, 2], 4), Ok(true));
        assert_eq!(is_reduced(&[1, 1], 3), Ok(false));
        assert_eq!(is_reduced(&[1, 2, 1, 2], 3), Ok(false));
    }

    #[test]
    fn reduced_word_validation() {
        let word = ReducedWord::new(vec![2, 3, 2, 1, 2], 4).unwrap();
        assert_eq!(word.product(), perm("4312"));
        assert_eq!(word.count_letter(2), 3);
        assert!(matches!(
            ReducedWord::new(vec![1, 1], 3),
            Err(PermError::NotReduced { .. })
        ));
    }

    #[test]
    fn parse_both_text_forms() {
        assert_eq!(perm("4312").one_line(), &[4, 3, 1, 2]);
        let long = Permutation::parse("10,2,1,3,4,5,6,7,8,9").unwrap();
        assert_eq!(long.degree(), 10);
        assert_eq!(long.image(1), 10);
        assert_eq!(long.to_text(), "10,2,1,3,4,5,6,7,8,9");
        assert!(Permutation::parse("40a").is_err());
        assert!(Permutation::parse("").is_err());
        assert!(Permutation::parse("1,2,x").is_err());
    }

    #[test]
    fn lex_rank_round_trip() {
        for n in 1..=5 {
            for (rank, w) in permutations(n).enumerate() {
                assert_eq!(w.lex_rank(), rank as u64);
                assert_eq!(Permutation::from_lex_rank(n, rank as u64), w);
            }
        }
    }

    #[test]
    fn permutations_iterator_is_lexicographic_and_complete() {
        let all: Vec<Permutation> = permutations(4).collect();
        assert_eq!(all.len(), 24);
        assert_eq!(all[0], Permutation::identity(4));
        assert_eq!(all[23], perm("4321"));
        for pair in all.windows(2) {
            assert!(pair[0].one_line() < pair[1].one_line());
        }
    }

    proptest! {
        #[test]
        fn constructed_permutations_are_bijections(n in 1usize..9, seed in any::<u64>()) {
            let rank = seed % factorial(n);
            let w = Permutation::from_lex_rank(n, rank);
            let mut sorted = w.one_line().to_vec();
            sorted.sort_unstable();
            prop_assert_eq!(sorted, (1..=n).collect::<Vec<_>>());
        }

        #[test]
        fn simple_reflection_involution_and_length_parity(n in 2usize..8, seed in any::<u64>(), d_seed in any::<usize>()) {
            let w = Permutation::from_lex_rank(n, seed % factorial(n));
            let d = 1 + d_seed % (n - 1);
            let wd = w.times_simple(d);
            prop_assert_eq!(wd.times_simple(d), w.clone());
            let diff = wd.length() as i64 - w.length() as i64;
            prop_assert!(diff == 1 || diff == -1);
        }

        #[test]
        fn text_round_trip(n in 1usize..12, seed in any::<u64>()) {
            let w = Permutation::from_lex_rank(n, seed % factorial(n));
            prop_assert_eq!(Permutation::parse(&w.to_text()).unwrap(), w);
        }
    }
}
