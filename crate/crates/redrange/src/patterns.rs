//! Occurrences of the patterns 321 and 3412, the straddling classification of
//! an occurrence relative to a generator index `k`, and the position/value
//! pair markers extracted from straddling occurrences.
//!
//! An occurrence straddles `k` in position when roughly half of it sits
//! weakly left of position `k` and the rest strictly right of it; it
//! straddles `k` in value when roughly half of its values are at most `k` and
//! the rest exceed `k`. Each straddling occurrence is marked by the pair
//! (largest, smallest) of its entries on the relevant axis; distinct
//! occurrences may share a marker, so the pair sets are deduplicated.

use std::collections::{BTreeMap, BTreeSet};

use crate::perm::Permutation;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PatternKind {
    P321,
    P3412,
}

/// Which axis of a straddle is being classified.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Axis {
    Position,
    Value,
}

/// One occurrence of 321 or 3412, recorded by its (strictly increasing)
/// positions and the values of `w` at those positions.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PatternOccurrence {
    pub kind: PatternKind,
    pub positions: Vec<usize>,
    pub values: Vec<usize>,
}

/// The (largest, smallest) marker of a straddling occurrence on one axis.
///
/// On the position axis `first <= k < second`: the occurrence's largest value
/// sits at position `first` and its smallest at position `second`. On the
/// value axis `second <= k < first`: `first` is the occurrence's largest
/// value and `second` its smallest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct StraddlePair {
    pub axis: Axis,
    pub k: usize,
    pub first: usize,
    pub second: usize,
}

impl PatternOccurrence {
    /// True when the occurrence straddles `k` on the given axis.
    pub fn straddles(&self, k: usize, axis: Axis) -> bool {
        self.straddle_pair(k, axis).is_some()
    }

    /// The pair marker for `k` on the given axis, when the occurrence
    /// straddles it.
    pub fn straddle_pair(&self, k: usize, axis: Axis) -> Option<StraddlePair> {
        let (straddling, first, second) = match (self.kind, axis) {
            (PatternKind::P321, Axis::Position) => {
                let (i1, i3) = (self.positions[0], self.positions[2]);
                (i1 <= k && k < i3, i1, i3)
            }
            (PatternKind::P321, Axis::Value) => {
                // values run v1 > v2 > v3; sorted they are j1 = v3 < j2 < j3 = v1
                let (v1, v3) = (self.values[0], self.values[2]);
                (v3 <= k && k < v1, v1, v3)
            }
            (PatternKind::P3412, Axis::Position) => {
                let (i2, i3) = (self.positions[1], self.positions[2]);
                (i2 <= k && k < i3, i2, i3)
            }
            (PatternKind::P3412, Axis::Value) => {
                // values run (v1, v2, v3, v4) with v3 < v4 < v1 < v2, so the
                // sorted values are (j1, j2, j3, j4) = (v3, v4, v1, v2)
                let (v1, v2, v3, v4) = (
                    self.values[0],
                    self.values[1],
                    self.values[2],
                    self.values[3],
                );
                (v4 <= k && k < v1, v2, v3)
            }
        };
        straddling.then_some(StraddlePair {
            axis,
            k,
            first,
            second,
        })
    }

    /// True when the occurrence straddles `k` in position and in value.
    pub fn straddles_both(&self, k: usize) -> bool {
        self.straddles(k, Axis::Position) && self.straddles(k, Axis::Value)
    }
}

/// All 321-occurrences: strictly decreasing subsequences of length 3, in
/// lexicographic order of their position triples.
pub fn occurrences_321(w: &Permutation) -> Vec<PatternOccurrence> {
    let n = w.degree();
    let v = w.one_line();
    let mut out = Vec::new();
    for i1 in 0..n {
        for i2 in i1 + 1..n {
            if v[i2] >= v[i1] {
                continue;
            }
            for i3 in i2 + 1..n {
                if v[i3] >= v[i2] {
                    continue;
                }
                out.push(PatternOccurrence {
                    kind: PatternKind::P321,
                    positions: vec![i1 + 1, i2 + 1, i3 + 1],
                    values: vec![v[i1], v[i2], v[i3]],
                });
            }
        }
    }
    out
}

/// All 3412-occurrences: position quadruples `i1 < i2 < i3 < i4` with
/// `w(i3) < w(i4) < w(i1) < w(i2)`, in lexicographic order of positions.
pub fn occurrences_3412(w: &Permutation) -> Vec<PatternOccurrence> {
    let n = w.degree();
    let v = w.one_line();
    let mut out = Vec::new();
    for i1 in 0..n {
        for i2 in i1 + 1..n {
            if v[i2] <= v[i1] {
                continue;
            }
            for i3 in i2 + 1..n {
                if v[i3] >= v[i1] {
                    continue;
                }
                for i4 in i3 + 1..n {
                    if v[i4] <= v[i3] || v[i4] >= v[i1] {
                        continue;
                    }
                    out.push(PatternOccurrence {
                        kind: PatternKind::P3412,
                        positions: vec![i1 + 1, i2 + 1, i3 + 1, i4 + 1],
                        values: vec![v[i1], v[i2], v[i3], v[i4]],
                    });
                }
            }
        }
    }
    out
}

fn all_occurrences(w: &Permutation) -> Vec<PatternOccurrence> {
    let mut occs = occurrences_321(w);
    occs.extend(occurrences_3412(w));
    occs
}

fn pairs_on_axis(w: &Permutation, k: usize, axis: Axis) -> BTreeSet<StraddlePair> {
    assert!(
        k >= 1 && k < w.degree(),
        "generator index {k} outside 1..={}",
        w.degree() - 1
    );
    all_occurrences(w)
        .iter()
        .filter_map(|occ| occ.straddle_pair(k, axis))
        .collect()
}

/// The deduplicated set of position pairs at `k` over all straddling
/// occurrences of 321 and 3412.
pub fn position_pairs(w: &Permutation, k: usize) -> BTreeSet<StraddlePair> {
    pairs_on_axis(w, k, Axis::Position)
}

/// The deduplicated set of value pairs at `k`.
pub fn value_pairs(w: &Permutation, k: usize) -> BTreeSet<StraddlePair> {
    pairs_on_axis(w, k, Axis::Value)
}

pub fn pos_pair_count(w: &Permutation, k: usize) -> usize {
    position_pairs(w, k).len()
}

pub fn val_pair_count(w: &Permutation, k: usize) -> usize {
    value_pairs(w, k).len()
}

/// The occurrences straddling `k` on the given axis, 321s first, each list in
/// lexicographic position order.
pub fn straddling_occurrences(w: &Permutation, k: usize, axis: Axis) -> Vec<PatternOccurrence> {
    all_occurrences(w)
        .into_iter()
        .filter(|occ| occ.straddles(k, axis))
        .collect()
}

/// Maps each straddling pair at `k` to every occurrence it marks. A pair may
/// mark several occurrences, of either kind.
pub fn marked_occurrences(
    w: &Permutation,
    k: usize,
    axis: Axis,
) -> BTreeMap<(usize, usize), Vec<PatternOccurrence>> {
    let mut map: BTreeMap<(usize, usize), Vec<PatternOccurrence>> = BTreeMap::new();
    for occ in all_occurrences(w) {
        if let Some(pair) = occ.straddle_pair(k, axis) {
            map.entry((pair.first, pair.second)).or_default().push(occ);
        }
    }
    map
}

/// Total number of 321- and 3412-occurrences in `w`.
pub fn total_pattern_count(w: &Permutation) -> usize {
    occurrences_321(w).len() + occurrences_3412(w).len()
}
