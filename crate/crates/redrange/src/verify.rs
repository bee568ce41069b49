//! Exhaustive verification sweeps over small symmetric groups.
//!
//! Each sweep checks one identity for every `(w, k)` of `S_2..S_n` against
//! the ground truth computed by the memoized min/max recursion (or, for the
//! `oracle` sweep, against full enumeration of reduced words). Sweeps
//! partition permutations by lexicographic rank ranges across a worker count;
//! workers share nothing, and their results concatenate in rank order, so
//! reports are identical for any worker count.

use std::collections::BTreeSet;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::patterns::{
    occurrences_321, occurrences_3412, pos_pair_count, total_pattern_count, val_pair_count, Axis,
};
use crate::perm::{factorial, next_permutation, Permutation};
use crate::reduced_words::{
    count_reduced_words, enumerate_reduced_words, repetition_profile_with, RangeMemo,
};
use crate::theorems::{
    bruhat_covers, expatriation, fixed_repetition_criterion, has_multiple, long_element_profile,
    max_upper_bound, min_sigma_count, minimal_witness,
};

/// The individually runnable sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    /// Minimal count equals the expatriation measure.
    Min,
    /// More than one `sigma_k` factor iff a pattern straddles `k` both ways.
    MaxGt1,
    /// Maximal count is at most `min{PosPair_k, ValPair_k} + 1`.
    MaxBound,
    /// Count varies iff a balanced straddling 321 exists.
    Fixed,
    /// A fixed single factor excludes the straddling configurations.
    Lemma1,
    /// The minimal witness factorization is valid everywhere.
    Witness,
    /// Closed forms for the longest element.
    LongElement,
    /// The two Bruhat covers on which pattern counts move in opposite
    /// directions.
    BruhatExamples,
    /// Min/max recursion agrees with full enumeration of `R(w)`.
    Oracle,
}

impl Theorem {
    pub const ALL: [Theorem; 9] = [
        Theorem::Min,
        Theorem::MaxGt1,
        Theorem::MaxBound,
        Theorem::Fixed,
        Theorem::Lemma1,
        Theorem::Witness,
        Theorem::LongElement,
        Theorem::BruhatExamples,
        Theorem::Oracle,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::Min => "min",
            Theorem::MaxGt1 => "max_gt_1",
            Theorem::MaxBound => "max_bound",
            Theorem::Fixed => "fixed",
            Theorem::Lemma1 => "lemma1",
            Theorem::Witness => "witness",
            Theorem::LongElement => "long_element",
            Theorem::BruhatExamples => "bruhat_examples",
            Theorem::Oracle => "oracle",
        }
    }

    fn from_id(id: &str) -> Option<Theorem> {
        Theorem::ALL.iter().copied().find(|t| t.id() == id)
    }

    /// Largest degree the sweep accepts. Sweeps that rely on the min/max
    /// recursion or on full enumeration stop at 7; the formula-and-pair-count
    /// sweep for the longest element runs to 8. The Bruhat examples are fixed
    /// instances, unaffected by the requested degree.
    pub fn degree_cap(self) -> usize {
        match self {
            Theorem::LongElement => 8,
            Theorem::BruhatExamples => usize::MAX,
            _ => 7,
        }
    }

    /// Parses a comma-separated selector list; `all` expands to every sweep.
    /// The result keeps canonical order and drops duplicates.
    pub fn parse_list(text: &str) -> Result<Vec<Theorem>, VerifyError> {
        let mut selected = BTreeSet::new();
        for part in text.split(',') {
            let part = part.trim();
            if part.is_empty() {
                continue;
            }
            if part == "all" {
                selected.extend(Theorem::ALL);
            } else {
                let theorem = Theorem::from_id(part)
                    .ok_or_else(|| VerifyError::UnknownSelector(part.to_string()))?;
                selected.insert(theorem);
            }
        }
        if selected.is_empty() {
            return Err(VerifyError::EmptySelection);
        }
        Ok(Theorem::ALL
            .iter()
            .copied()
            .filter(|t| selected.contains(t))
            .collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("unknown theorem selector {0:?}")]
    UnknownSelector(String),
    #[error("no theorems selected")]
    EmptySelection,
    #[error("sweep {id} is capped at n = {cap}; requested n = {requested}")]
    CapExceeded {
        id: &'static str,
        cap: usize,
        requested: usize,
    },
    #[error("n must be at least 2 (requested {0})")]
    DegreeTooSmall(usize),
    #[error("workers must be at least 1")]
    NoWorkers,
}

/// One failing case: the permutation, the generator index when the check is
/// per-`(w, k)`, and the two sides that were supposed to agree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub w: String,
    pub k: Option<usize>,
    pub expected: String,
    pub actual: String,
}

/// Outcome of one sweep at one degree.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub theorem_id: String,
    pub degree_range: Vec<usize>,
    pub cases_checked: u64,
    pub failures: Vec<Failure>,
    pub elapsed_ms: u64,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// A whole `verify` invocation, in canonical sweep order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRun {
    pub n_max: usize,
    pub workers: usize,
    pub reports: Vec<VerificationReport>,
}

impl VerificationRun {
    pub fn all_passed(&self) -> bool {
        self.reports.iter().all(VerificationReport::passed)
    }
}

struct SweepCtx {
    memo: RangeMemo,
    cases: u64,
    failures: Vec<Failure>,
}

impl SweepCtx {
    fn new() -> Self {
        SweepCtx {
            memo: RangeMemo::new(),
            cases: 0,
            failures: Vec::new(),
        }
    }

    fn case(
        &mut self,
        agree: bool,
        w: &Permutation,
        k: Option<usize>,
        expected: String,
        actual: String,
    ) {
        self.cases += 1;
        if !agree {
            self.failures.push(Failure {
                w: w.to_text(),
                k,
                expected,
                actual,
            });
        }
    }
}

/// Runs the selected sweeps for every degree from 2 (3 for the longest
/// element) up to `n_max`. Refuses degrees beyond a sweep's cap instead of
/// silently truncating.
pub fn run_verification(
    theorems: &[Theorem],
    n_max: usize,
    workers: usize,
) -> Result<VerificationRun, VerifyError> {
    if n_max < 2 {
        return Err(VerifyError::DegreeTooSmall(n_max));
    }
    if workers == 0 {
        return Err(VerifyError::NoWorkers);
    }
    for &theorem in theorems {
        let cap = theorem.degree_cap();
        if n_max > cap {
            return Err(VerifyError::CapExceeded {
                id: theorem.id(),
                cap,
                requested: n_max,
            });
        }
    }
    let mut reports = Vec::new();
    for &theorem in theorems {
        match theorem {
            Theorem::BruhatExamples => reports.push(bruhat_examples_report()),
            Theorem::LongElement => {
                for n in 3..=n_max {
                    reports.push(long_element_report(n));
                }
            }
            _ => {
                for n in 2..=n_max {
                    reports.push(sweep_sn(theorem, n, workers));
                }
            }
        }
    }
    Ok(VerificationRun {
        n_max,
        workers,
        reports,
    })
}

fn sweep_sn(theorem: Theorem, n: usize, workers: usize) -> VerificationReport {
    let start = Instant::now();
    let check: fn(&Permutation, &mut SweepCtx) = match theorem {
        Theorem::Min => check_min,
        Theorem::MaxGt1 => check_max_gt1,
        Theorem::MaxBound => check_max_bound,
        Theorem::Fixed => check_fixed,
        Theorem::Lemma1 => check_lemma1,
        Theorem::Witness => check_witness,
        Theorem::Oracle => check_oracle,
        Theorem::LongElement | Theorem::BruhatExamples => unreachable!("handled separately"),
    };
    let total = factorial(n);
    let workers = workers.min(total as usize);
    let mut ctxs: Vec<SweepCtx> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers as u64)
            .map(|t| {
                scope.spawn(move || {
                    let lo = t * total / workers as u64;
                    let hi = (t + 1) * total / workers as u64;
                    let mut ctx = SweepCtx::new();
                    if lo < hi {
                        let mut values = Permutation::from_lex_rank(n, lo).one_line().to_vec();
                        for _ in lo..hi {
                            let w = Permutation::from_one_line(&values)
                                .expect("rank iteration yields bijections");
                            check(&w, &mut ctx);
                            next_permutation(&mut values);
                        }
                    }
                    ctx
                })
            })
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("sweep worker panicked"))
            .collect()
    });
    let mut cases = 0;
    let mut failures = Vec::new();
    for ctx in &mut ctxs {
        cases += ctx.cases;
        failures.append(&mut ctx.failures);
    }
    VerificationReport {
        theorem_id: theorem.id().to_string(),
        degree_range: vec![n],
        cases_checked: cases,
        failures,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

fn check_min(w: &Permutation, ctx: &mut SweepCtx) {
    let profile = repetition_profile_with(&mut ctx.memo, w);
    for k in 1..w.degree() {
        let formula = min_sigma_count(w, k) as u64;
        let dp = profile.range(k).min_count;
        ctx.case(
            formula == dp,
            w,
            Some(k),
            format!("expatriation {formula}"),
            format!("dp min {dp}"),
        );
    }
}

fn check_max_gt1(w: &Permutation, ctx: &mut SweepCtx) {
    let profile = repetition_profile_with(&mut ctx.memo, w);
    for k in 1..w.degree() {
        let criterion = has_multiple(w, k);
        let dp = profile.range(k).max_count > 1;
        ctx.case(
            criterion == dp,
            w,
            Some(k),
            format!("straddling-both pattern: {criterion}"),
            format!("dp max > 1: {dp}"),
        );
    }
}

fn check_max_bound(w: &Permutation, ctx: &mut SweepCtx) {
    let profile = repetition_profile_with(&mut ctx.memo, w);
    for k in 1..w.degree() {
        let bound = max_upper_bound(w, k) as u64;
        let dp = profile.range(k).max_count;
        ctx.case(
            dp <= bound,
            w,
            Some(k),
            format!("max <= pair bound {bound}"),
            format!("dp max {dp}"),
        );
    }
}

fn check_fixed(w: &Permutation, ctx: &mut SweepCtx) {
    let profile = repetition_profile_with(&mut ctx.memo, w);
    for k in 1..w.degree() {
        let witness = fixed_repetition_criterion(w, k).is_some();
        let range = profile.range(k);
        let varies = range.max_count > range.min_count;
        ctx.case(
            witness == varies,
            w,
            Some(k),
            format!("balanced straddling 321: {witness}"),
            format!("dp max > min: {varies}"),
        );
    }
}

fn check_lemma1(w: &Permutation, ctx: &mut SweepCtx) {
    let profile = repetition_profile_with(&mut ctx.memo, w);
    let p321 = occurrences_321(w);
    let p3412 = occurrences_3412(w);
    for k in 1..w.degree() {
        let excluded = if profile.range(k).max_count == 1 {
            let quad_straddle = p3412
                .iter()
                .any(|occ| occ.straddles(k, Axis::Position) || occ.straddles(k, Axis::Value));
            let triple_both = p321.iter().any(|occ| occ.straddles_both(k));
            !quad_straddle && !triple_both
        } else {
            true
        };
        ctx.case(
            excluded,
            w,
            Some(k),
            "max = 1 excludes straddling 3412 and doubly straddling 321".to_string(),
            "straddling configuration present".to_string(),
        );
    }
}

fn check_witness(w: &Permutation, ctx: &mut SweepCtx) {
    for k in 1..w.degree() {
        let wd = minimal_witness(w, k);
        let expat = expatriation(w, k);
        let mut problems = Vec::new();
        if wd.assembled.product() != *w {
            problems.push("product differs from w".to_string());
        }
        if wd.assembled.len() != w.length() {
            problems.push("assembled word is not reduced".to_string());
        }
        if wd.assembled.count_letter(k) != expat {
            problems.push(format!(
                "assembled word has {} letters equal to {k}",
                wd.assembled.count_letter(k)
            ));
        }
        if wd.t_words.len() != expat {
            problems.push(format!(
                "{} t-blocks for expatriation {expat}",
                wd.t_words.len()
            ));
        }
        for factor in [&wd.u, &wd.v, &wd.d] {
            if factor.support().contains(&k) {
                problems.push(format!("factor {factor} uses the letter {k}"));
            }
        }
        if wd.t_words.iter().any(|t| t.count_letter(k) != 1) {
            problems.push("a t-block does not use the letter exactly once".to_string());
        }
        ctx.case(
            problems.is_empty(),
            w,
            Some(k),
            format!("valid witness with {expat} letters equal to {k}"),
            problems.join("; "),
        );
    }
}

fn check_oracle(w: &Permutation, ctx: &mut SweepCtx) {
    let n = w.degree();
    let mut best: Vec<(u64, u64)> = vec![(u64::MAX, 0); n - 1];
    let mut tally: u128 = 0;
    let mut letters_seen: BTreeSet<usize> = BTreeSet::new();
    let mut previous: Option<Vec<usize>> = None;
    let mut words_valid = true;
    let mut sorted = true;
    for word in enumerate_reduced_words(w) {
        tally += 1;
        if word.product() != *w || word.len() != w.length() {
            words_valid = false;
        }
        for k in 1..n {
            let c = word.count_letter(k) as u64;
            let slot = &mut best[k - 1];
            slot.0 = slot.0.min(c);
            slot.1 = slot.1.max(c);
            if c > 0 {
                letters_seen.insert(k);
            }
        }
        if let Some(prev) = &previous {
            if prev.as_slice() >= word.letters() {
                sorted = false;
            }
        }
        previous = Some(word.letters().to_vec());
    }
    let profile = repetition_profile_with(&mut ctx.memo, w);
    for k in 1..n {
        let range = profile.range(k);
        let enumerated = best[k - 1];
        ctx.case(
            (range.min_count, range.max_count) == enumerated,
            w,
            Some(k),
            format!("dp range [{}, {}]", range.min_count, range.max_count),
            format!("enumerated range [{}, {}]", enumerated.0, enumerated.1),
        );
    }
    let counted = count_reduced_words(w).map(|c| c.to_string());
    ctx.case(
        counted == Ok(tally.to_string()),
        w,
        None,
        format!("count {tally} from enumeration"),
        format!("memoized count {counted:?}"),
    );
    ctx.case(
        letters_seen == w.support(),
        w,
        None,
        "letter union equals support".to_string(),
        format!("letters {letters_seen:?}, support {:?}", w.support()),
    );
    ctx.case(
        words_valid && sorted,
        w,
        None,
        "every word reduced, product w, lexicographic order".to_string(),
        format!("valid {words_valid}, sorted {sorted}"),
    );
}

fn long_element_report(n: usize) -> VerificationReport {
    let start = Instant::now();
    let mut ctx = SweepCtx::new();
    let w0 = Permutation::longest_element(n);
    let dp_profile = (n <= 6).then(|| repetition_profile_with(&mut ctx.memo, &w0));
    for k in 1..n {
        let closed = long_element_profile(n, k);
        let min_formula = min_sigma_count(&w0, k);
        ctx.case(
            closed.min_count == min_formula,
            &w0,
            Some(k),
            format!("min {}", closed.min_count),
            format!("expatriation {min_formula}"),
        );
        let (pos, val) = (pos_pair_count(&w0, k), val_pair_count(&w0, k));
        ctx.case(
            closed.pos_pairs == pos && closed.pos_pairs == val,
            &w0,
            Some(k),
            format!("pair counts {}", closed.pos_pairs),
            format!("PosPair {pos}, ValPair {val}"),
        );
        if let Some(profile) = &dp_profile {
            let range = profile.range(k);
            ctx.case(
                range.min_count == closed.min_count as u64
                    && range.max_count <= closed.max_bound as u64,
                &w0,
                Some(k),
                format!(
                    "dp min {} and dp max <= {}",
                    closed.min_count, closed.max_bound
                ),
                format!("dp range [{}, {}]", range.min_count, range.max_count),
            );
        }
    }
    VerificationReport {
        theorem_id: Theorem::LongElement.id().to_string(),
        degree_range: vec![n],
        cases_checked: ctx.cases,
        failures: ctx.failures,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

fn bruhat_examples_report() -> VerificationReport {
    let start = Instant::now();
    let mut ctx = SweepCtx::new();
    let pairs = [("561234", "651234", (6, 4)), ("32541", "52341", (2, 3))];
    for (below, above, (count_below, count_above)) in pairs {
        let v = Permutation::parse(below).expect("fixed example parses");
        let w = Permutation::parse(above).expect("fixed example parses");
        ctx.case(
            bruhat_covers(&v, &w),
            &w,
            None,
            format!("{below} covered by {above}"),
            "not a cover".to_string(),
        );
        let (tv, tw) = (total_pattern_count(&v), total_pattern_count(&w));
        ctx.case(
            (tv, tw) == (count_below, count_above),
            &w,
            None,
            format!("pattern totals {count_below} -> {count_above}"),
            format!("pattern totals {tv} -> {tw}"),
        );
    }
    // The two covers move the pattern total in opposite directions, so the
    // total is monotonic in neither direction.
    let decreasing = total_pattern_count(&Permutation::parse("561234").unwrap())
        > total_pattern_count(&Permutation::parse("651234").unwrap());
    let increasing = total_pattern_count(&Permutation::parse("32541").unwrap())
        < total_pattern_count(&Permutation::parse("52341").unwrap());
    ctx.case(
        decreasing && increasing,
        &Permutation::parse("651234").unwrap(),
        None,
        "one cover decreases the total, the other increases it".to_string(),
        format!("decreasing {decreasing}, increasing {increasing}"),
    );
    VerificationReport {
        theorem_id: Theorem::BruhatExamples.id().to_string(),
        degree_range: vec![5, 6],
        cases_checked: ctx.cases,
        failures: ctx.failures,
        elapsed_ms: start.elapsed().as_millis() as u64,
    }
}

/// One line per report, failure details indented beneath, and a summary line.
pub fn render_run_table(run: &VerificationRun) -> String {
    let mut out = String::new();
    let mut total_cases = 0u64;
    let mut total_failures = 0usize;
    for report in &run.reports {
        total_cases += report.cases_checked;
        total_failures += report.failures.len();
        let degrees: Vec<String> = report.degree_range.iter().map(|n| n.to_string()).collect();
        out.push_str(&format!(
            "theorem={} n={} cases={} failures={} elapsed_ms={}\n",
            report.theorem_id,
            degrees.join(","),
            report.cases_checked,
            report.failures.len(),
            report.elapsed_ms
        ));
        for failure in &report.failures {
            let k_text = failure.k.map(|k| format!(" k={k}")).unwrap_or_default();
            out.push_str(&format!(
                "  FAIL w={}{} expected: {} actual: {}\n",
                failure.w, k_text, failure.expected, failure.actual
            ));
        }
    }
    out.push_str(&format!(
        "summary: {} sweeps, {} cases, {} failures\n",
        run.reports.len(),
        total_cases,
        total_failures
    ));
    out
}
