//! Exhaustive word-space surveys: exact count histograms and realizable sets.
//!
//! A survey scans every word of length `2n` over `m` complementary pairs in
//! lexicographic order (compact alphabet order `A < a < B < b < ...`) and
//! tallies how many words attain each positive valid-matching count. The
//! word space has `(2m)^(2n)` elements, so surveys are budget-guarded.
//!
//! Two engineering layers sit on top of the raw scan, neither of which
//! changes the result:
//!
//! * **Symmetry pruning.** Relabeling bases and swapping a base's
//!   plain/barred roles never changes the count, so only the
//!   lexicographically least word of each orbit under the `m! * 2^m`
//!   alphabet automorphisms is counted, with its whole orbit size as
//!   multiplicity. Unbalanced words are tallied individually since they
//!   cost nothing to classify.
//! * **Checkpointing.** The index space is split into fixed-size chunks;
//!   with a checkpoint path each finished chunk is appended to a
//!   newline-delimited JSON journal, and a rerun skips every chunk already
//!   journaled. Merging is plain addition, so the histogram is identical
//!   regardless of worker count, chunk size, pruning, or resume pattern.

use std::collections::BTreeMap;
use std::fmt;
use std::fs::{File, OpenOptions};
use std::io::{BufRead, BufReader, Write as IoWrite};
use std::path::{Path, PathBuf};
use std::sync::Mutex;

use itertools::Itertools;
use num_bigint::BigUint;
use num_traits::ToPrimitive;
use rayon::prelude::*;
use serde_json::json;
use thiserror::Error;

use crate::alphabet::{Letter, Word};
use crate::counting::{count_valid, count_valid_with_forced_pair, IntervalScratch};

/// Half-length and alphabet size of a survey; the word space is `(2m)^(2n)`.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct SurveyParams {
    pub n: usize,
    pub m: u32,
}

impl SurveyParams {
    /// `(2m)^(2n)`, or `None` if it overflows `u128`.
    pub fn word_count(&self) -> Option<u128> {
        let radix = 2u128.checked_mul(u128::from(self.m))?;
        let mut total = 1u128;
        for _ in 0..2 * self.n {
            total = total.checked_mul(radix)?;
        }
        Some(total)
    }
}

/// Default survey budget: refuse scans beyond this many words unless forced.
pub const DEFAULT_BUDGET: u64 = 1 << 30;

/// Hard cap regardless of forcing; keeps word indices and tallies in `u64`
/// range and word lengths inside the exact `u64` counting window.
const HARD_CAP: u128 = 1 << 63;

/// Knobs for [`survey_with`]. `Default` gives a pruned, unjournaled,
/// budget-guarded scan on the global thread pool.
#[derive(Clone, Debug)]
pub struct SurveyOptions {
    /// Worker threads; `None` uses the global pool.
    pub workers: Option<usize>,
    /// Refuse scans larger than this many words unless `force` is set.
    pub budget: u64,
    pub force: bool,
    /// Count only canonical orbit representatives, with orbit-size
    /// multiplicity. Automatically disabled for `m > 4`, where the
    /// automorphism group outgrows its usefulness.
    pub prune: bool,
    /// Append finished chunks to this newline-delimited JSON journal and
    /// skip chunks already journaled by a previous run.
    pub checkpoint: Option<PathBuf>,
    /// Words per chunk, the checkpoint granularity.
    pub chunk_size: u64,
}

impl Default for SurveyOptions {
    fn default() -> Self {
        SurveyOptions {
            workers: None,
            budget: DEFAULT_BUDGET,
            force: false,
            prune: true,
            checkpoint: None,
            chunk_size: 1 << 20,
        }
    }
}

#[derive(Debug, Error)]
pub enum SurveyError {
    #[error("survey parameters require n >= 1 and m >= 1")]
    InvalidParams,
    #[error("survey would scan {required} words, over the budget of {budget}; raise the budget or force the run")]
    BudgetExceeded { required: u128, budget: u64 },
    #[error("survey would scan {} words, beyond what this implementation can enumerate",
            required.map_or("more than 2^128".to_string(), |r| r.to_string()))]
    SpaceTooLarge { required: Option<u128> },
    #[error("worker count must be at least 1")]
    InvalidWorkers,
    #[error("checkpoint journal mismatch: {reason}")]
    CheckpointMismatch { reason: String },
    #[error("checkpoint journal I/O: {0}")]
    Io(#[from] std::io::Error),
}

/// Exact histogram of valid-matching counts over a full word space:
/// `histogram[k]` is the number of words with exactly `k >= 1` valid
/// matchings, `zero_count` the number with none. Mass conservation:
/// the histogram total plus `zero_count` equals `scanned = (2m)^(2n)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CountHistogram {
    pub n: usize,
    pub m: u32,
    pub histogram: BTreeMap<BigUint, u64>,
    pub zero_count: u64,
    pub scanned: u64,
}

impl CountHistogram {
    /// The realizable set: every count attained by at least one word, ascending.
    pub fn realizable(&self) -> Vec<BigUint> {
        self.histogram.keys().cloned().collect()
    }

    pub fn contains(&self, k: &BigUint) -> bool {
        self.histogram.contains_key(k)
    }

    /// Number of words attaining count `k` (zero when unrealized).
    pub fn words_with_count(&self, k: &BigUint) -> u64 {
        self.histogram.get(k).copied().unwrap_or(0)
    }

    /// Total histogram mass including the zero class; equals `scanned`
    /// for a completed survey.
    pub fn total_mass(&self) -> u128 {
        self.histogram.values().map(|&v| u128::from(v)).sum::<u128>()
            + u128::from(self.zero_count)
    }

    /// JSON document with every count as a decimal string.
    pub fn to_json(&self) -> serde_json::Value {
        let mut hist = serde_json::Map::new();
        for (k, words) in &self.histogram {
            hist.insert(k.to_string(), json!(words.to_string()));
        }
        json!({
            "n": self.n,
            "m": self.m,
            "scanned": self.scanned.to_string(),
            "zero_count": self.zero_count.to_string(),
            "histogram": hist,
            "realizable": self.realizable().iter().map(|k| k.to_string()).collect::<Vec<_>>(),
        })
    }

    /// CSV with one `k,words` row per realized count.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("k,words\n");
        for (k, words) in &self.histogram {
            out.push_str(&format!("{},{}\n", k, words));
        }
        out
    }
}

impl fmt::Display for CountHistogram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "survey n={} m={}: {} words scanned, {} with no valid matching",
            self.n, self.m, self.scanned, self.zero_count
        )?;
        let width = self
            .histogram
            .keys()
            .map(|k| k.to_string().len())
            .max()
            .unwrap_or(1);
        writeln!(f, "  {:>width$}  words", "k")?;
        for (k, words) in &self.histogram {
            writeln!(f, "  {:>width$}  {}", k.to_string(), words)?;
        }
        write!(
            f,
            "realizable: {{{}}}",
            self.realizable()
                .iter()
                .map(|k| k.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        )
    }
}

/// The word at lexicographic `index` in the space of words of `len`
/// letters over `m` pairs.
pub(crate) fn word_from_index(index: u128, len: usize, m: u32) -> Word {
    let radix = u128::from(2 * m);
    let mut rem = index;
    let mut codes = vec![0u64; len];
    for slot in codes.iter_mut().rev() {
        *slot = (rem % radix) as u64;
        rem /= radix;
    }
    codes.iter().map(|&c| Letter::from_code(c)).collect()
}

/// Letter-code remapping tables for every alphabet automorphism of `m`
/// pairs: all base permutations crossed with all per-base polarity swaps.
fn automorphism_tables(m: u32) -> Vec<Vec<u64>> {
    assert!(m <= 6, "automorphism tables limited to m <= 6");
    let m = m as usize;
    let mut tables = Vec::with_capacity(group_order(m as u32) as usize);
    for perm in (0..m).permutations(m) {
        for flips in 0..(1u32 << m) {
            let table: Vec<u64> = (0..2 * m as u64)
                .map(|code| {
                    let base = (code / 2) as usize;
                    let barred = code % 2 == 1;
                    let new_barred = barred ^ ((flips >> base) & 1 == 1);
                    (perm[base] as u64) * 2 + u64::from(new_barred)
                })
                .collect();
            tables.push(table);
        }
    }
    tables
}

/// `m! * 2^m`, the alphabet automorphism group order.
fn group_order(m: u32) -> u64 {
    (1..=u64::from(m)).product::<u64>() << m
}

/// If `codes` is the lexicographic minimum of its orbit, its orbit size;
/// otherwise `None`. The orbit size is the group order divided by the
/// number of automorphisms fixing the word.
fn canonical_orbit_size(codes: &[u64], tables: &[Vec<u64>]) -> Option<u64> {
    let mut fixed = 0u64;
    for table in tables {
        // The first position where the image differs decides the order.
        let verdict = codes
            .iter()
            .map(|&code| table[code as usize].cmp(&code))
            .find(|o| o.is_ne())
            .unwrap_or(std::cmp::Ordering::Equal);
        match verdict {
            std::cmp::Ordering::Less => return None,
            std::cmp::Ordering::Equal => fixed += 1,
            std::cmp::Ordering::Greater => {}
        }
    }
    Some(tables.len() as u64 / fixed)
}

/// The lexicographically smallest word in the orbit of `word` under the
/// alphabet automorphisms of `m` pairs. Valid-matching counts are constant
/// on orbits.
pub fn canonical_form(word: &Word, m: u32) -> Word {
    orbit(word, m).into_iter().next().expect("orbit is nonempty")
}

/// Number of distinct words in the automorphism orbit of `word`.
pub fn orbit_size(word: &Word, m: u32) -> u64 {
    orbit(word, m).len() as u64
}

fn orbit(word: &Word, m: u32) -> std::collections::BTreeSet<Word> {
    debug_assert!(word.max_base().is_none_or(|b| b < m));
    automorphism_tables(m)
        .iter()
        .map(|table| {
            word.letters()
                .iter()
                .map(|l| Letter::from_code(table[l.code() as usize]))
                .collect()
        })
        .collect()
}

#[derive(Clone, Debug, Default)]
struct ChunkOutcome {
    histogram: BTreeMap<u64, u64>,
    zero_count: u64,
}

impl ChunkOutcome {
    fn absorb(&mut self, other: &ChunkOutcome) {
        for (&k, &words) in &other.histogram {
            *self.histogram.entry(k).or_insert(0) += words;
        }
        self.zero_count += other.zero_count;
    }
}

/// Scan the lexicographic index range `lo..hi` of the word space.
fn scan_range(
    params: SurveyParams,
    lo: u128,
    hi: u128,
    tables: Option<&[Vec<u64>]>,
) -> ChunkOutcome {
    let len = 2 * params.n;
    let radix = 2 * u64::from(params.m);
    let mut out = ChunkOutcome::default();

    // Odometer over letter codes, most significant letter first.
    let mut codes = vec![0u64; len];
    let mut rem = lo;
    for slot in codes.iter_mut().rev() {
        *slot = (rem % u128::from(radix)) as u64;
        rem /= u128::from(radix);
    }

    let mut letters = vec![Letter::plain(0); len];
    let mut scratch = IntervalScratch::new();
    let mut balance = vec![0i64; params.m as usize];

    for _ in lo..hi {
        // Balance first: unbalanced words count zero and dominate the
        // space, and balance is orbit-invariant so they never need the
        // canonical check.
        balance.fill(0);
        for &code in &codes {
            let delta = if code % 2 == 0 { 1 } else { -1 };
            balance[(code / 2) as usize] += delta;
        }
        if balance.iter().any(|&d| d != 0) {
            out.zero_count += 1;
        } else {
            let multiplicity = match tables {
                Some(tables) => canonical_orbit_size(&codes, tables),
                None => Some(1),
            };
            if let Some(multiplicity) = multiplicity {
                for (slot, &code) in letters.iter_mut().zip(&codes) {
                    *slot = Letter::from_code(code);
                }
                let count = scratch.count(&letters);
                if count == 0 {
                    out.zero_count += multiplicity;
                } else {
                    *out.histogram.entry(count).or_insert(0) += multiplicity;
                }
            }
        }

        // Increment the odometer.
        for slot in codes.iter_mut().rev() {
            *slot += 1;
            if *slot < radix {
                break;
            }
            *slot = 0;
        }
    }
    out
}

const JOURNAL_KIND: &str = "pvalid-survey";
const JOURNAL_VERSION: u64 = 1;

fn journal_header(params: SurveyParams, chunk_size: u64, total_chunks: u64) -> serde_json::Value {
    json!({
        "journal": JOURNAL_KIND,
        "version": JOURNAL_VERSION,
        "n": params.n,
        "m": params.m,
        "chunk_size": chunk_size,
        "total_chunks": total_chunks,
    })
}

fn chunk_line(index: u64, outcome: &ChunkOutcome) -> String {
    let hist: serde_json::Map<String, serde_json::Value> = outcome
        .histogram
        .iter()
        .map(|(k, words)| (k.to_string(), json!(words.to_string())))
        .collect();
    json!({
        "chunk": index,
        "zero": outcome.zero_count.to_string(),
        "hist": hist,
    })
    .to_string()
}

fn parse_chunk_line(value: &serde_json::Value) -> Option<(u64, ChunkOutcome)> {
    let index = value.get("chunk")?.as_u64()?;
    let zero_count: u64 = value.get("zero")?.as_str()?.parse().ok()?;
    let mut histogram = BTreeMap::new();
    for (k, words) in value.get("hist")?.as_object()? {
        histogram.insert(k.parse().ok()?, words.as_str()?.parse().ok()?);
    }
    Some((index, ChunkOutcome { histogram, zero_count }))
}

/// Read a journal back; tolerate a truncated final line (a torn write
/// loses at most one chunk, which is then rescanned).
fn read_journal(
    path: &Path,
    expected_header: &serde_json::Value,
) -> Result<BTreeMap<u64, ChunkOutcome>, SurveyError> {
    let reader = BufReader::new(File::open(path)?);
    let mut lines = reader.lines();
    let header_line = match lines.next() {
        Some(line) => line?,
        None => return Ok(BTreeMap::new()),
    };
    let header: serde_json::Value = serde_json::from_str(&header_line).map_err(|e| {
        SurveyError::CheckpointMismatch {
            reason: format!("unreadable header: {e}"),
        }
    })?;
    if &header != expected_header {
        return Err(SurveyError::CheckpointMismatch {
            reason: format!("journal header {header} does not describe this survey"),
        });
    }
    let mut done = BTreeMap::new();
    for line in lines {
        let line = line?;
        let parsed = serde_json::from_str::<serde_json::Value>(&line)
            .ok()
            .and_then(|v| parse_chunk_line(&v));
        match parsed {
            Some((index, outcome)) => {
                done.insert(index, outcome);
            }
            None => break,
        }
    }
    Ok(done)
}

/// Run a survey with default options.
pub fn survey(params: SurveyParams) -> Result<CountHistogram, SurveyError> {
    survey_with(params, &SurveyOptions::default())
}

/// Run a survey: scan the whole word space and return the exact histogram.
///
/// The result is deterministic — independent of worker count, chunk size,
/// pruning, and how many earlier runs contributed journal chunks.
pub fn survey_with(
    params: SurveyParams,
    options: &SurveyOptions,
) -> Result<CountHistogram, SurveyError> {
    if params.n == 0 || params.m == 0 {
        return Err(SurveyError::InvalidParams);
    }
    if options.workers == Some(0) {
        return Err(SurveyError::InvalidWorkers);
    }
    let total = params
        .word_count()
        .ok_or(SurveyError::SpaceTooLarge { required: None })?;
    if total > HARD_CAP {
        return Err(SurveyError::SpaceTooLarge { required: Some(total) });
    }
    if !options.force && total > u128::from(options.budget) {
        return Err(SurveyError::BudgetExceeded {
            required: total,
            budget: options.budget,
        });
    }

    let tables = if options.prune && params.m <= 4 {
        Some(automorphism_tables(params.m))
    } else {
        None
    };

    let chunk_size = options.chunk_size.max(1);
    let total_chunks = (total.div_ceil(u128::from(chunk_size))) as u64;
    let header = journal_header(params, chunk_size, total_chunks);

    let mut resumed = BTreeMap::new();
    let journal = match &options.checkpoint {
        Some(path) => {
            if path.exists() {
                resumed = read_journal(path, &header)?;
            }
            let mut file = OpenOptions::new().create(true).append(true).open(path)?;
            if resumed.is_empty() && file.metadata()?.len() == 0 {
                writeln!(file, "{header}")?;
            }
            Some(Mutex::new(file))
        }
        None => None,
    };

    let pending: Vec<u64> = (0..total_chunks)
        .filter(|index| !resumed.contains_key(index))
        .collect();

    let scan = || -> Result<ChunkOutcome, SurveyError> {
        pending
            .par_iter()
            .map(|&index| {
                let lo = u128::from(index) * u128::from(chunk_size);
                let hi = (lo + u128::from(chunk_size)).min(total);
                let outcome = scan_range(params, lo, hi, tables.as_deref());
                if let Some(journal) = &journal {
                    let line = chunk_line(index, &outcome);
                    let mut file = journal.lock().expect("journal lock");
                    writeln!(file, "{line}")?;
                    file.flush()?;
                }
                Ok(outcome)
            })
            .try_reduce(ChunkOutcome::default, |mut acc, outcome| {
                acc.absorb(&outcome);
                Ok(acc)
            })
    };

    let mut merged = match options.workers {
        Some(workers) => rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .map_err(|_| SurveyError::InvalidWorkers)?
            .install(scan),
        None => scan(),
    }?;
    for outcome in resumed.values() {
        merged.absorb(outcome);
    }

    Ok(CountHistogram {
        n: params.n,
        m: params.m,
        histogram: merged
            .histogram
            .into_iter()
            .map(|(k, words)| (BigUint::from(k), words))
            .collect(),
        zero_count: merged.zero_count,
        scanned: total as u64,
    })
}

/// Up to `limit` words with exactly `k` valid matchings, in lexicographic
/// order. An empty result means `k` is not realizable at these parameters.
pub fn find_witnesses(
    params: SurveyParams,
    k: &BigUint,
    limit: usize,
) -> Result<Vec<Word>, SurveyError> {
    find_witnesses_with(params, k, limit, &SurveyOptions::default())
}

/// [`find_witnesses`] with explicit budget options. The scan is sequential
/// so that the earliest witnesses are found without scanning the whole
/// space.
pub fn find_witnesses_with(
    params: SurveyParams,
    k: &BigUint,
    limit: usize,
    options: &SurveyOptions,
) -> Result<Vec<Word>, SurveyError> {
    if params.n == 0 || params.m == 0 {
        return Err(SurveyError::InvalidParams);
    }
    let total = params
        .word_count()
        .ok_or(SurveyError::SpaceTooLarge { required: None })?;
    if total > HARD_CAP {
        return Err(SurveyError::SpaceTooLarge { required: Some(total) });
    }
    if !options.force && total > u128::from(options.budget) {
        return Err(SurveyError::BudgetExceeded {
            required: total,
            budget: options.budget,
        });
    }
    let Some(target) = k.to_u64() else {
        // Counts at scannable lengths always fit u64, so such a k is
        // unrealizable here.
        return Ok(Vec::new());
    };

    let len = 2 * params.n;
    let radix = 2 * u64::from(params.m);
    let mut codes = vec![0u64; len];
    let mut letters = vec![Letter::plain(0); len];
    let mut scratch = IntervalScratch::new();
    let mut balance = vec![0i64; params.m as usize];
    let mut found = Vec::new();

    for _ in 0..total {
        if found.len() >= limit {
            break;
        }
        balance.fill(0);
        for &code in &codes {
            balance[(code / 2) as usize] += if code % 2 == 0 { 1 } else { -1 };
        }
        let balanced = balance.iter().all(|&d| d == 0);
        let count = if balanced {
            for (slot, &code) in letters.iter_mut().zip(&codes) {
                *slot = Letter::from_code(code);
            }
            scratch.count(&letters)
        } else {
            0
        };
        if count == target {
            found.push(codes.iter().map(|&c| Letter::from_code(c)).collect());
        }
        for slot in codes.iter_mut().rev() {
            *slot += 1;
            if *slot < radix {
                break;
            }
            *slot = 0;
        }
    }
    Ok(found)
}

/// The distinguished 14-letter word over two pairs with exactly 11 valid
/// matchings — a count that no length-14 word over a single pair attains.
pub fn counterexample_word() -> Word {
    Word::parse("BbaAAaaABbAaAa").expect("constant word parses")
}

/// One verified statement inside a report.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Check {
    pub label: String,
    pub passed: bool,
    pub detail: String,
}

/// Result of [`verify_counterexample`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CounterexampleReport {
    pub word: Word,
    pub checks: Vec<Check>,
    /// The full length-14, single-pair histogram backing check (c).
    pub scan: CountHistogram,
}

impl CounterexampleReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn to_json(&self) -> serde_json::Value {
        json!({
            "word": self.word.to_string(),
            "passed": self.passed(),
            "checks": self.checks.iter().map(|c| json!({
                "label": c.label,
                "passed": c.passed,
                "detail": c.detail,
            })).collect::<Vec<_>>(),
            "scan": self.scan.to_json(),
        })
    }
}

impl fmt::Display for CounterexampleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "word: {}", self.word)?;
        for c in &self.checks {
            writeln!(
                f,
                "  [{}] {}: {}",
                if c.passed { "pass" } else { "FAIL" },
                c.label,
                c.detail
            )?;
        }
        write!(
            f,
            "verdict: {}",
            if self.passed() {
                "count 11 is realizable at half-length 7 with two pairs but with no single-pair word, \
                 so realizable sets depend on the alphabet size"
            } else {
                "verification FAILED"
            }
        )
    }
}

/// Verify the three facts behind the realizability gap at half-length 7:
/// (a) the distinguished word has exactly 11 valid matchings, (b) the two
/// ways of pairing its B's split that count as 7 + 4, and (c) a full scan
/// of all 2^14 single-pair words of length 14 finds no word with count 11.
pub fn verify_counterexample() -> Result<CounterexampleReport, SurveyError> {
    let word = counterexample_word();
    let mut checks = Vec::new();

    let count = count_valid(&word);
    checks.push(Check {
        label: "count".into(),
        passed: count == BigUint::from(11u32),
        detail: format!("count_valid = {count}, expected 11"),
    });

    let adjacent = count_valid_with_forced_pair(&word, (1, 2)).expect("B at 1, B-bar at 2");
    let far = count_valid_with_forced_pair(&word, (1, 10)).expect("B at 1, B-bar at 10");
    let split_ok = adjacent == BigUint::from(7u32)
        && far == BigUint::from(4u32)
        && adjacent.clone() + far.clone() == count;
    checks.push(Check {
        label: "forced-pair split".into(),
        passed: split_ok,
        detail: format!(
            "pairing the adjacent B pair gives {adjacent}, the far B pair gives {far}; expected 7 + 4 = 11"
        ),
    });

    let scan = survey(SurveyParams { n: 7, m: 1 })?;
    let eleven = BigUint::from(11u32);
    let scan_ok = scan.scanned == 16384 && !scan.contains(&eleven);
    checks.push(Check {
        label: "single-pair exclusion".into(),
        passed: scan_ok,
        detail: format!(
            "scanned {} single-pair words of length 14; words with count 11: {}",
            scan.scanned,
            scan.words_with_count(&eleven)
        ),
    });

    Ok(CounterexampleReport { word, checks, scan })
}
