//! Ranges of letter repetition in reduced decompositions of permutations.
//!
//! For a permutation `w` and a generator index `k`, the number of `sigma_k`
//! factors varies over the reduced words of `w`. This crate computes the
//! exact range `[min_k(w), max_k(w)]` of that count, together with the
//! combinatorial certificates behind it: the expatriation measure that equals
//! the minimum, an explicit factorization of `w` attaining it, the 321/3412
//! occurrences straddling `k` whose pair markers bound the maximum, and the
//! balanced-pattern criterion for when the count is not constant. Exhaustive
//! verification sweeps over small symmetric groups check every identity
//! against brute force.

pub mod patterns;
pub mod perm;
pub mod reduced_words;
pub mod report;
pub mod theorems;
pub mod verify;

pub use perm::{PermError, Permutation, ReducedWord};
pub use reduced_words::{RepetitionProfile, SigmaRange};
