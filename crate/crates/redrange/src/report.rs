//! Typed reports for the CLI: the per-permutation analysis, word listings,
//! witness listings, and their table/JSON renderings. JSON field order is
//! fixed by the struct declarations, so a parsed report re-renders to
//! identical bytes.

use serde::{Deserialize, Serialize};

use crate::patterns::{
    occurrences_321, occurrences_3412, position_pairs, straddling_occurrences, value_pairs, Axis,
    PatternOccurrence,
};
use crate::perm::Permutation;
use crate::reduced_words::{count_reduced_words, enumerate_reduced_words, repetition_profile};
use crate::theorems::{expatriation, fixed_repetition_criterion, max_upper_bound, minimal_witness};

/// Full analysis of one permutation: one row per generator index plus the
/// global pattern lists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeReport {
    pub permutation: String,
    pub n: usize,
    pub rows: Vec<AnalyzeRow>,
    pub patterns: PatternLists,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalyzeRow {
    pub k: usize,
    pub min: u64,
    pub max: u64,
    pub expat: u64,
    pub pos_pairs: Vec<[usize; 2]>,
    pub val_pairs: Vec<[usize; 2]>,
    pub bound: u64,
    pub fixed: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternLists {
    pub p321: Vec<PatternEntry>,
    pub p3412: Vec<PatternEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternEntry {
    pub positions: Vec<usize>,
    pub values: Vec<usize>,
}

impl From<&PatternOccurrence> for PatternEntry {
    fn from(occ: &PatternOccurrence) -> Self {
        PatternEntry {
            positions: occ.positions.clone(),
            values: occ.values.clone(),
        }
    }
}

/// Builds the analysis for `w`, restricted to a single `k` when given.
pub fn analyze(w: &Permutation, only_k: Option<usize>) -> AnalyzeReport {
    let n = w.degree();
    let profile = repetition_profile(w);
    let ks: Vec<usize> = match only_k {
        Some(k) => vec![k],
        None => (1..n).collect(),
    };
    let rows = ks
        .into_iter()
        .map(|k| {
            let range = profile.range(k);
            AnalyzeRow {
                k,
                min: range.min_count,
                max: range.max_count,
                expat: expatriation(w, k) as u64,
                pos_pairs: position_pairs(w, k)
                    .iter()
                    .map(|p| [p.first, p.second])
                    .collect(),
                val_pairs: value_pairs(w, k)
                    .iter()
                    .map(|p| [p.first, p.second])
                    .collect(),
                bound: max_upper_bound(w, k) as u64,
                fixed: fixed_repetition_criterion(w, k).is_none(),
            }
        })
        .collect();
    AnalyzeReport {
        permutation: w.to_text(),
        n,
        rows,
        patterns: PatternLists {
            p321: occurrences_321(w).iter().map(PatternEntry::from).collect(),
            p3412: occurrences_3412(w).iter().map(PatternEntry::from).collect(),
        },
    }
}

fn pair_list(pairs: &[[usize; 2]]) -> String {
    if pairs.is_empty() {
        return "-".to_string();
    }
    pairs
        .iter()
        .map(|p| format!("({},{})", p[0], p[1]))
        .collect::<Vec<_>>()
        .join(" ")
}

fn occurrence_list(occs: &[PatternOccurrence]) -> String {
    if occs.is_empty() {
        return "-".to_string();
    }
    occs.iter()
        .map(|occ| {
            let values: Vec<String> = occ.values.iter().map(|v| v.to_string()).collect();
            let positions: Vec<String> = occ.positions.iter().map(|p| p.to_string()).collect();
            format!("{} at ({})", values.join(""), positions.join(","))
        })
        .collect::<Vec<_>>()
        .join("; ")
}

/// Table rendering of an analysis. Stable byte-for-byte; golden files pin it.
pub fn render_analyze_table(w: &Permutation, report: &AnalyzeReport) -> String {
    let mut out = String::new();
    let supp = w.support();
    let supp_text = if supp.is_empty() {
        "{}".to_string()
    } else {
        format!(
            "{{{}}}",
            supp.iter()
                .map(|k| k.to_string())
                .collect::<Vec<_>>()
                .join(",")
        )
    };
    out.push_str(&format!(
        "permutation {} (n = {}, length = {}, support = {})\n",
        report.permutation,
        report.n,
        w.length(),
        supp_text
    ));
    out.push('\n');
    out.push_str("  k  min  max  expat  PosPair  ValPair  bound  fixed\n");
    for row in &report.rows {
        let marker = if supp.contains(&row.k) { " " } else { "*" };
        out.push_str(&format!(
            "{}{:>3} {:>4} {:>4} {:>6} {:>8} {:>8} {:>6}  {}\n",
            marker,
            row.k,
            row.min,
            row.max,
            row.expat,
            row.pos_pairs.len(),
            row.val_pairs.len(),
            row.bound,
            if row.fixed { "yes" } else { "no" }
        ));
    }
    if report.rows.iter().any(|row| !supp.contains(&row.k)) {
        out.push_str("  * k outside support: sigma_k never appears, max is 0\n");
    }
    out.push('\n');
    out.push_str("straddling detail\n");
    for row in &report.rows {
        let k = row.k;
        out.push_str(&format!("  k = {k}\n"));
        out.push_str(&format!(
            "    position pairs: {}\n",
            pair_list(&row.pos_pairs)
        ));
        out.push_str(&format!(
            "    straddling position: {}\n",
            occurrence_list(&straddling_occurrences(w, k, Axis::Position))
        ));
        out.push_str(&format!("    value pairs: {}\n", pair_list(&row.val_pairs)));
        out.push_str(&format!(
            "    straddling value: {}\n",
            occurrence_list(&straddling_occurrences(w, k, Axis::Value))
        ));
    }
    out
}

/// Reduced-word listing. `words` may be truncated by a limit; `total` is
/// always the full count `|R(w)|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordsReport {
    pub permutation: String,
    pub n: usize,
    pub words: Vec<Vec<usize>>,
    pub total: String,
}

pub fn words_report(w: &Permutation, limit: Option<usize>) -> WordsReport {
    let words: Vec<Vec<usize>> = match limit {
        Some(limit) => enumerate_reduced_words(w)
            .take(limit)
            .map(|word| word.letters().to_vec())
            .collect(),
        None => enumerate_reduced_words(w)
            .map(|word| word.letters().to_vec())
            .collect(),
    };
    let total = match count_reduced_words(w) {
        Ok(total) => total.to_string(),
        Err(overflow) => format!("overflow ({overflow})"),
    };
    WordsReport {
        permutation: w.to_text(),
        n: w.degree(),
        words,
        total,
    }
}

pub fn render_words_table(report: &WordsReport) -> String {
    let mut out = String::new();
    for word in &report.words {
        if word.is_empty() {
            out.push_str("(empty)\n");
        } else {
            let parts: Vec<String> = word.iter().map(|l| l.to_string()).collect();
            out.push_str(&parts.join(" "));
            out.push('\n');
        }
    }
    out.push_str(&format!("total {}\n", report.total));
    out
}

/// The minimal-witness factorization in report form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessReport {
    pub permutation: String,
    pub n: usize,
    pub k: usize,
    pub expat: u64,
    pub u: String,
    pub v: String,
    pub t_words: Vec<Vec<usize>>,
    pub d: String,
    pub assembled: Vec<usize>,
    pub k_occurrences: u64,
}

pub fn witness_report(w: &Permutation, k: usize) -> WitnessReport {
    let wd = minimal_witness(w, k);
    WitnessReport {
        permutation: w.to_text(),
        n: w.degree(),
        k,
        expat: expatriation(w, k) as u64,
        u: wd.u.to_text(),
        v: wd.v.to_text(),
        t_words: wd.t_words.iter().map(|t| t.letters().to_vec()).collect(),
        d: wd.d.to_text(),
        assembled: wd.assembled.letters().to_vec(),
        k_occurrences: wd.assembled.count_letter(k) as u64,
    }
}

fn word_text(letters: &[usize]) -> String {
    if letters.is_empty() {
        return "(empty)".to_string();
    }
    letters
        .iter()
        .map(|l| l.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn render_witness_table(report: &WitnessReport) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "permutation {} (n = {}), k = {}\n",
        report.permutation, report.n, report.k
    ));
    out.push_str(&format!("expatriation = {}\n", report.expat));
    out.push_str(&format!("u = {}\n", report.u));
    out.push_str(&format!("v = {}\n", report.v));
    for (i, t) in report.t_words.iter().enumerate() {
        out.push_str(&format!("t_{} = {}\n", i, word_text(t)));
    }
    out.push_str(&format!("d = {}\n", report.d));
    out.push_str(&format!("assembled = {}\n", word_text(&report.assembled)));
    out.push_str(&format!(
        "sigma_{} occurrences = {} (must equal expatriation {})\n",
        report.k, report.k_occurrences, report.expat
    ));
    out
}

/// Canonical JSON rendering used by every command: pretty-printed with a
/// trailing newline, no floating point anywhere.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut text = serde_json::to_string_pretty(value).expect("reports serialize infallibly");
    text.push('\n');
    text
}
