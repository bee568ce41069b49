//! Enumeration and counting of reduced words, and the exact range
//! `[min_k(w), max_k(w)]` of `sigma_k` occurrences over all reduced words,
//! computed by memoized recursion over right descents.

use std::collections::HashMap;

use thiserror::Error;

use crate::perm::{Permutation, ReducedWord};

/// The reduced-word count would not fit the 128-bit counter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("reduced word count exceeds the 128-bit counter")]
pub struct CountOverflow;

/// The range of `sigma_k` occurrence counts over all reduced words of a
/// permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SigmaRange {
    pub k: usize,
    pub min_count: u64,
    pub max_count: u64,
}

/// Per-`k` occurrence ranges for every generator of `S_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepetitionProfile {
    pub w: Permutation,
    /// `ranges[k - 1]` is the range for `sigma_k`, `k` in `[1, n - 1]`.
    pub ranges: Vec<SigmaRange>,
}

impl RepetitionProfile {
    pub fn range(&self, k: usize) -> SigmaRange {
        self.ranges[k - 1]
    }
}

/// Lazily yields every reduced word of `w` exactly once, in lexicographic
/// order on letter sequences.
///
/// The search picks the first letter among the left descents of the remaining
/// permutation in increasing order, which yields lexicographic order without
/// any sorting. Internally it walks the inverse permutation, where choosing
/// the letter `d` is an adjacent swap of positions `d`, `d + 1`.
pub fn enumerate_reduced_words(w: &Permutation) -> ReducedWords {
    ReducedWords {
        inv: w.inverse().one_line().to_vec(),
        degree: w.degree(),
        total_length: w.length(),
        word: Vec::new(),
        frames: Vec::new(),
        started: false,
        done: false,
    }
}

pub struct ReducedWords {
    inv: Vec<usize>,
    degree: usize,
    total_length: usize,
    word: Vec<usize>,
    frames: Vec<Frame>,
    started: bool,
    done: bool,
}

struct Frame {
    descents: Vec<usize>,
    next: usize,
}

impl Frame {
    fn at(inv: &[usize]) -> Frame {
        Frame {
            descents: (1..inv.len()).filter(|&d| inv[d - 1] > inv[d]).collect(),
            next: 0,
        }
    }
}

impl Iterator for ReducedWords {
    type Item = ReducedWord;

    fn next(&mut self) -> Option<ReducedWord> {
        if self.done {
            return None;
        }
        if !self.started {
            self.started = true;
            if self.total_length == 0 {
                self.done = true;
                return Some(ReducedWord::empty(self.degree));
            }
            self.frames.push(Frame::at(&self.inv));
        }
        loop {
            let Some(frame) = self.frames.last_mut() else {
                self.done = true;
                return None;
            };
            if frame.next < frame.descents.len() {
                let d = frame.descents[frame.next];
                frame.next += 1;
                self.inv.swap(d - 1, d);
                self.word.push(d);
                if self.word.len() == self.total_length {
                    debug_assert!(self.inv.iter().enumerate().all(|(i, &v)| v == i + 1));
                    let out = ReducedWord::new_unchecked(self.word.clone(), self.degree);
                    self.inv.swap(d - 1, d);
                    self.word.pop();
                    return Some(out);
                }
                self.frames.push(Frame::at(&self.inv));
            } else {
                self.frames.pop();
                if let Some(d) = self.word.pop() {
                    self.inv.swap(d - 1, d);
                }
            }
        }
    }
}

/// `|R(w)|` by memoized recursion over right descents:
/// `count(w) = sum over descents d of count(w sigma_d)`, `count(identity) = 1`.
pub fn count_reduced_words(w: &Permutation) -> Result<u128, CountOverflow> {
    fn go(w: &Permutation, memo: &mut HashMap<Permutation, u128>) -> Result<u128, CountOverflow> {
        if let Some(&c) = memo.get(w) {
            return Ok(c);
        }
        let descents = w.right_descents();
        let count = if descents.is_empty() {
            1
        } else {
            let mut acc: u128 = 0;
            for d in descents {
                let c = go(&w.times_simple(d), memo)?;
                acc = acc.checked_add(c).ok_or(CountOverflow)?;
            }
            acc
        };
        memo.insert(w.clone(), count);
        Ok(count)
    }
    go(w, &mut HashMap::new())
}

/// Memo table for the min/max recursion, keyed by one-line notation.
///
/// One table serves all `k` at once: each entry stores the per-`k`
/// `(min, max)` vector for one permutation of the weak-order interval below
/// the query. A table lives for one call tree (or one verification sweep) and
/// is dropped afterwards; no process-wide cache is kept.
#[derive(Default)]
pub struct RangeMemo {
    table: HashMap<Permutation, Vec<(u64, u64)>>,
}

impl RangeMemo {
    pub fn new() -> Self {
        RangeMemo::default()
    }

    pub fn len(&self) -> usize {
        self.table.len()
    }

    pub fn is_empty(&self) -> bool {
        self.table.is_empty()
    }

    fn fill(&mut self, w: &Permutation) {
        if self.table.contains_key(w) {
            return;
        }
        let per_k = w.degree() - 1;
        let descents = w.right_descents();
        let entry = if descents.is_empty() {
            vec![(0u64, 0u64); per_k]
        } else {
            let mut acc = vec![(u64::MAX, 0u64); per_k];
            for &d in &descents {
                let child = w.times_simple(d);
                self.fill(&child);
                let child_entry = &self.table[&child];
                for k in 1..=per_k {
                    let add = u64::from(k == d);
                    let (lo, hi) = child_entry[k - 1];
                    let slot = &mut acc[k - 1];
                    slot.0 = slot.0.min(lo + add);
                    slot.1 = slot.1.max(hi + add);
                }
            }
            acc
        };
        self.table.insert(w.clone(), entry);
    }
}

/// The exact range of `sigma_k` occurrences over `R(w)`:
/// `f(identity) = 0` and `f(w) = opt over right descents d of
/// f(w sigma_d) + (1 if d = k)`, with `opt` taken as min and max.
pub fn sigma_count_range(w: &Permutation, k: usize) -> SigmaRange {
    assert!(
        k >= 1 && k < w.degree(),
        "generator index {k} outside 1..={}",
        w.degree() - 1
    );
    repetition_profile(w).range(k)
}

/// Ranges for every `k`, using a fresh memo table released on return.
pub fn repetition_profile(w: &Permutation) -> RepetitionProfile {
    let mut memo = RangeMemo::new();
    repetition_profile_with(&mut memo, w)
}

/// Ranges for every `k`, reusing a caller-held memo table. Sweeps that visit
/// many permutations of the same degree share one table this way and release
/// it when the sweep ends.
pub fn repetition_profile_with(memo: &mut RangeMemo, w: &Permutation) -> RepetitionProfile {
    memo.fill(w);
    let ranges = memo.table[w]
        .iter()
        .enumerate()
        .map(|(i, &(lo, hi))| SigmaRange {
            k: i + 1,
            min_count: lo,
            max_count: hi,
        })
        .collect();
    RepetitionProfile {
        w: w.clone(),
        ranges,
    }
}
