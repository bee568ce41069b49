use clap::{Parser, Subcommand, ValueEnum};

use redrange::perm::Permutation;
use redrange::report;
use redrange::verify::{self, Theorem};

#[derive(Parser)]
#[command(
    name = "redrange",
    version,
    about = "Ranges of letter repetition in reduced decompositions of permutations"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Table,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Per-k repetition ranges, expatriation, straddling pairs, and bounds
    Analyze {
        /// Permutation in one-line notation: digits ("4312") or
        /// comma-separated values ("10,2,1,...")
        perm: String,
        /// Restrict the report to a single generator index
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// All reduced words in lexicographic order
    Words {
        perm: String,
        /// Emit at most this many words (the total count is still reported)
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// The factorization of w attaining the minimal number of sigma_k factors
    Witness {
        perm: String,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
    /// Exhaustive verification sweeps over S_2..S_n
    Verify {
        /// Largest symmetric group degree to sweep
        #[arg(long)]
        n: usize,
        /// Comma-separated sweep selectors: min, max_gt_1, max_bound, fixed,
        /// lemma1, witness, long_element, bruhat_examples, oracle, or all
        #[arg(long, default_value = "all")]
        theorems: String,
        /// Number of worker threads; permutations are partitioned by
        /// lexicographic rank, so results are identical for any count
        #[arg(long, default_value_t = 1)]
        workers: usize,
        #[arg(long, value_enum, default_value_t = Format::Table)]
        format: Format,
    },
}

const EXIT_OK: i32 = 0;
const EXIT_VERIFICATION_FAILED: i32 = 1;
const EXIT_USAGE: i32 = 2;

fn main() {
    std::process::exit(run(Cli::parse()));
}

fn usage_error(message: impl std::fmt::Display) -> i32 {
    eprintln!("error: {message}");
    EXIT_USAGE
}

fn parse_perm(text: &str) -> Result<Permutation, i32> {
    Permutation::parse(text).map_err(usage_error)
}

fn validate_k(w: &Permutation, k: usize) -> Result<(), i32> {
    if w.degree() < 2 || k < 1 || k >= w.degree() {
        return Err(usage_error(format!(
            "k = {k} outside 1..={} for a permutation of degree {}",
            w.degree().saturating_sub(1),
            w.degree()
        )));
    }
    Ok(())
}

fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Analyze { perm, k, format } => {
            let w = match parse_perm(&perm) {
                Ok(w) => w,
                Err(code) => return code,
            };
            if let Some(k) = k {
                if let Err(code) = validate_k(&w, k) {
                    return code;
                }
            }
            let report = report::analyze(&w, k);
            match format {
                Format::Table => print!("{}", report::render_analyze_table(&w, &report)),
                Format::Json => print!("{}", report::to_json(&report)),
            }
            EXIT_OK
        }
        Command::Words {
            perm,
            limit,
            format,
        } => {
            let w = match parse_perm(&perm) {
                Ok(w) => w,
                Err(code) => return code,
            };
            let report = report::words_report(&w, limit);
            match format {
                Format::Table => print!("{}", report::render_words_table(&report)),
                Format::Json => print!("{}", report::to_json(&report)),
            }
            EXIT_OK
        }
        Command::Witness { perm, k, format } => {
            let w = match parse_perm(&perm) {
                Ok(w) => w,
                Err(code) => return code,
            };
            if let Err(code) = validate_k(&w, k) {
                return code;
            }
            let report = report::witness_report(&w, k);
            match format {
                Format::Table => print!("{}", report::render_witness_table(&report)),
                Format::Json => print!("{}", report::to_json(&report)),
            }
            EXIT_OK
        }
        Command::Verify {
            n,
            theorems,
            workers,
            format,
        } => {
            let selected = match Theorem::parse_list(&theorems) {
                Ok(selected) => selected,
                Err(err) => return usage_error(err),
            };
            let run = match verify::run_verification(&selected, n, workers) {
                Ok(run) => run,
                Err(err) => return usage_error(err),
            };
            match format {
                Format::Table => print!("{}", verify::render_run_table(&run)),
                Format::Json => print!("{}", report::to_json(&run)),
            }
            if run.all_passed() {
                EXIT_OK
            } else {
                EXIT_VERIFICATION_FAILED
            }
        }
    }
}
