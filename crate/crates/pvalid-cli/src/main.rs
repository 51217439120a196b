//! Thin command-line front end over the `pvalid` library.
//!
//! Exit status: 0 on success, 1 when a `verify` suite reports a failed
//! check, 2 on usage, parse, and budget errors.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::json;
use thiserror::Error;

use pvalid::alphabet::ParseWordError;
use pvalid::counting::{count_valid, enumerate_valid};
use pvalid::families::{family_count_closed_form, family_word, verify_family_recursion};
use pvalid::insertion::{default_base, insert_forced_pair, verify_monotone, TrackError};
use pvalid::survey::{
    find_witnesses_with, survey_with, verify_counterexample, SurveyError, SurveyOptions,
    SurveyParams, DEFAULT_BUDGET,
};
use pvalid::{Letter, Word};

#[derive(Parser)]
#[command(
    name = "pvalid",
    version,
    about = "Exact counting of valid noncrossing matchings for words over complementary alphabets",
    after_help = "Words use the compact form (uppercase = plain, lowercase = barred, \"BbAa\") \
                  or the numeric form (\"+2,-2,+1,-1\", bases 1-based, sign = polarity)."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format (csv applies to histograms only)
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact number of valid matchings of WORD
    Count {
        word: String,
        /// Alphabet size; inferred from the word when omitted
        #[arg(long)]
        m: Option<u32>,
    },
    /// List the valid matchings of WORD as sorted pair lists
    Enumerate {
        word: String,
        /// Stop after this many matchings
        #[arg(long)]
        limit: Option<usize>,
        #[arg(long)]
        m: Option<u32>,
    },
    /// Print the two-block family word A^k a^k A^l a^l and both of its counts
    Family {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        l: usize,
    },
    /// Insert a forced complementary pair into WORD without changing its count
    Insert {
        word: String,
        /// Base to insert, as a letter ("A") or 1-based index ("1");
        /// defaults to the smallest base in the word
        #[arg(long)]
        base: Option<String>,
        #[arg(long)]
        m: Option<u32>,
    },
    /// Scan every word of length 2n over m pairs and histogram the counts
    Survey {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
        /// Worker threads (default: PVALID_WORKERS or all cores)
        #[arg(long)]
        workers: Option<usize>,
        /// Resumable journal path; finished chunks are appended and reruns skip them
        #[arg(long)]
        checkpoint: Option<PathBuf>,
        /// Run even if the word space exceeds the budget
        #[arg(long)]
        force: bool,
        /// Word budget for the refusal guard
        #[arg(long)]
        budget: Option<u64>,
        /// Words per checkpoint chunk
        #[arg(long)]
        chunk_size: Option<u64>,
        /// Disable symmetry pruning (the histogram is identical either way)
        #[arg(long)]
        no_prune: bool,
    },
    /// List words of length 2n over m pairs with exactly k valid matchings
    Witnesses {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: u32,
        /// Target count, decimal
        #[arg(long)]
        k: String,
        #[arg(long, default_value_t = 10)]
        limit: usize,
        #[arg(long)]
        force: bool,
    },
    /// Run a verification suite; exits 1 if any check fails
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Suite {
    /// The 14-letter two-pair word with count 11: count, 7 + 4 split, single-pair exclusion
    Counterexample,
    /// The two-block family shrink recursion over all cells k, l <= 8
    Family,
    /// Realizable-set inclusion between consecutive half-lengths, n = 1..5, m = 1
    Monotone,
    /// All of the above
    All,
}

#[derive(Debug, Error)]
enum CliError {
    #[error("{0}")]
    Word(#[from] ParseWordError),
    #[error("position {position}: base {base} does not fit the alphabet of size {m}")]
    AlphabetBound { position: usize, base: u32, m: u32 },
    #[error("{0}")]
    Survey(#[from] SurveyError),
    #[error("{0}")]
    Track(#[from] TrackError),
    #[error("--base {text:?} is neither a letter nor a positive base index")]
    BadBase { text: String },
    #[error("--k {text:?} is not a decimal count")]
    BadCount { text: String },
    #[error("family parameters require k >= 1 and l >= 1")]
    BadFamily,
    #[error("csv output is only available for survey histograms")]
    CsvUnsupported,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(err) => {
            eprintln!("error: {err}");
            ExitCode::from(2)
        }
    }
}

/// Parse a word argument in either text form and check it against an
/// explicit alphabet size if one was given.
fn parse_word_arg(text: &str, m: Option<u32>) -> Result<(Word, u32), CliError> {
    let text = text.trim();
    let word = match m {
        // Compact parsing enforces the bound itself with a positional error.
        Some(m) if !matches!(text.as_bytes().first(), Some(b'+') | Some(b'-') | Some(b'0'..=b'9')) => {
            Word::parse_compact(text, m)?
        }
        _ => Word::parse(text)?,
    };
    if let Some(m) = m {
        if let Some(idx) = word.letters().iter().position(|l| l.base() >= m) {
            return Err(CliError::AlphabetBound {
                position: idx + 1,
                base: word.letters()[idx].base(),
                m,
            });
        }
    }
    let m = m.unwrap_or_else(|| word.inferred_alphabet_size());
    Ok((word, m))
}

fn parse_base_arg(text: &str) -> Result<u32, CliError> {
    let t = text.trim();
    let mut chars = t.chars();
    match (chars.next(), chars.next()) {
        (Some(ch), None) if ch.is_ascii_alphabetic() => {
            Ok(ch.to_ascii_uppercase() as u32 - 'A' as u32)
        }
        _ => t
            .parse::<u32>()
            .ok()
            .filter(|&v| v >= 1)
            .map(|v| v - 1)
            .ok_or_else(|| CliError::BadBase { text: text.to_string() }),
    }
}

fn default_workers() -> Option<usize> {
    std::env::var("PVALID_WORKERS").ok()?.parse().ok()
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let format = cli.format;
    match cli.command {
        Command::Count { word, m } => {
            let (word, m) = parse_word_arg(&word, m)?;
            let count = count_valid(&word);
            match format {
                Format::Plain => println!("{count}"),
                Format::Json => println!(
                    "{}",
                    json!({ "word": word.to_string(), "m": m, "count": count.to_string() })
                ),
                Format::Csv => return Err(CliError::CsvUnsupported),
            }
            Ok(true)
        }

        Command::Enumerate { word, limit, m } => {
            let (word, m) = parse_word_arg(&word, m)?;
            let count = count_valid(&word);
            let enumeration = enumerate_valid(&word, limit);
            match format {
                Format::Plain => {
                    for matching in &enumeration.matchings {
                        println!("{matching}");
                    }
                    if enumeration.truncated {
                        println!("... truncated at {} of {count}", enumeration.matchings.len());
                    }
                }
                Format::Json => println!(
                    "{}",
                    json!({
                        "word": word.to_string(),
                        "m": m,
                        "count": count.to_string(),
                        "matchings": enumeration.matchings.iter().map(|mt| mt.to_string()).collect::<Vec<_>>(),
                        "truncated": enumeration.truncated,
                    })
                ),
                Format::Csv => return Err(CliError::CsvUnsupported),
            }
            Ok(true)
        }

        Command::Family { k, l } => {
            if k == 0 || l == 0 {
                return Err(CliError::BadFamily);
            }
            let word = family_word(k, l);
            let count = count_valid(&word);
            let closed = family_count_closed_form(k, l);
            match format {
                Format::Plain => {
                    println!("word: {word}");
                    println!("count: {count}");
                    println!("closed form: {closed}");
                }
                Format::Json => println!(
                    "{}",
                    json!({
                        "k": k,
                        "l": l,
                        "word": word.to_string(),
                        "count": count.to_string(),
                        "closed_form": closed.to_string(),
                    })
                ),
                Format::Csv => return Err(CliError::CsvUnsupported),
            }
            Ok(true)
        }

        Command::Insert { word, base, m } => {
            let (word, m) = parse_word_arg(&word, m)?;
            let base = match base {
                Some(text) => parse_base_arg(&text)?,
                None => default_base(&word).unwrap_or(0),
            };
            let before = count_valid(&word);
            let insertion = insert_forced_pair(&word, base)?;
            let after = count_valid(&insertion.result);
            match format {
                Format::Plain => {
                    println!("word: {word}");
                    println!("base: {}", Letter::plain(base));
                    match insertion.station {
                        Some(s) => println!("station: {s} (word position {})", insertion.position),
                        None => println!("station: none (base absent, inserting at the front)"),
                    }
                    println!("result: {}", insertion.result);
                    println!("count before: {before}");
                    println!("count after: {after}");
                }
                Format::Json => println!(
                    "{}",
                    json!({
                        "word": word.to_string(),
                        "m": m,
                        "base": Letter::plain(base).to_string(),
                        "station": insertion.station,
                        "position": insertion.position,
                        "result": insertion.result.to_string(),
                        "count_before": before.to_string(),
                        "count_after": after.to_string(),
                    })
                ),
                Format::Csv => return Err(CliError::CsvUnsupported),
            }
            Ok(true)
        }

        Command::Survey {
            n,
            m,
            workers,
            checkpoint,
            force,
            budget,
            chunk_size,
            no_prune,
        } => {
            let defaults = SurveyOptions::default();
            let options = SurveyOptions {
                workers: workers.or_else(default_workers),
                budget: budget.unwrap_or(DEFAULT_BUDGET),
                force,
                prune: !no_prune,
                checkpoint,
                chunk_size: chunk_size.unwrap_or(defaults.chunk_size),
            };
            let histogram = survey_with(SurveyParams { n, m }, &options)?;
            match format {
                Format::Plain => println!("{histogram}"),
                Format::Json => println!("{}", histogram.to_json()),
                Format::Csv => print!("{}", histogram.to_csv()),
            }
            Ok(true)
        }

        Command::Witnesses { n, m, k, limit, force } => {
            let target: BigUint = k
                .trim()
                .parse()
                .map_err(|_| CliError::BadCount { text: k.clone() })?;
            let options = SurveyOptions { force, ..Default::default() };
            let found = find_witnesses_with(SurveyParams { n, m }, &target, limit, &options)?;
            match format {
                Format::Plain => {
                    for word in &found {
                        println!("{word}");
                    }
                    if found.is_empty() {
                        println!("no words of length {} over {m} pairs have count {target}", 2 * n);
                    }
                }
                Format::Json => println!(
                    "{}",
                    json!({
                        "n": n,
                        "m": m,
                        "k": target.to_string(),
                        "witnesses": found.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
                    })
                ),
                Format::Csv => return Err(CliError::CsvUnsupported),
            }
            Ok(true)
        }

        Command::Verify { suite } => run_verify(suite, format),
    }
}

fn run_verify(suite: Suite, format: Format) -> Result<bool, CliError> {
    let mut passed = true;
    let mut sections = Vec::new();

    if matches!(suite, Suite::Counterexample | Suite::All) {
        let report = verify_counterexample()?;
        passed &= report.passed();
        sections.push((
            "counterexample",
            report.passed(),
            report.to_string(),
            report.to_json(),
        ));
    }

    if matches!(suite, Suite::Family | Suite::All) {
        let report = verify_family_recursion(8);
        passed &= report.passed();
        sections.push(("family", report.passed(), report.to_string(), report.to_json()));
    }

    if matches!(suite, Suite::Monotone | Suite::All) {
        let mut texts = Vec::new();
        let mut jsons = Vec::new();
        let mut ok = true;
        for n in 1..=5 {
            let report = verify_monotone(n, 1)?;
            ok &= report.passed();
            texts.push(report.to_string());
            jsons.push(report.to_json());
        }
        passed &= ok;
        sections.push((
            "monotone",
            ok,
            texts.join("\n"),
            serde_json::Value::Array(jsons),
        ));
    }

    match format {
        Format::Plain => {
            for (name, ok, text, _) in &sections {
                println!("=== suite {name}: {} ===", if *ok { "pass" } else { "FAIL" });
                println!("{text}");
            }
            println!("verify: {}", if passed { "pass" } else { "FAIL" });
        }
        Format::Json => {
            let obj: serde_json::Map<String, serde_json::Value> = sections
                .iter()
                .map(|(name, _, _, json)| (name.to_string(), json.clone()))
                .chain([("passed".to_string(), json!(passed))])
                .collect();
            println!("{}", serde_json::Value::Object(obj));
        }
        Format::Csv => return Err(CliError::CsvUnsupported),
    }
    Ok(passed)
}
