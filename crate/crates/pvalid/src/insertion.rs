//! Count-preserving insertion of an adjacent complementary pair.
//!
//! Inserting `Ā A` immediately before a well-chosen plain occurrence of a
//! base leaves the number of valid matchings unchanged: the two new
//! letters are forced to pair with each other in every valid matching.
//! The insertion point is found by the classical circular-track argument:
//! lay the `a` plain occurrences of the base around a track as stations
//! holding one unit of fuel each, make the distance from one station to
//! the next the number of barred occurrences between them (wrapping
//! around), and start at a station from which the whole circuit can be
//! driven without the tank going negative. Such a station always exists
//! because total fuel equals total distance, and the earliest one is found
//! from the first global minimum of the fuel-minus-distance prefix sums.
//!
//! Consequence, checked empirically by [`verify_monotone`]: every count
//! realizable at half-length `n` is still realizable at `n + 1`.

use std::fmt;

use num_bigint::BigUint;
use thiserror::Error;

use crate::alphabet::{Letter, Word};
use crate::counting::count_valid;
use crate::survey::{survey, CountHistogram, SurveyError, SurveyParams};

/// The circular-track instance read off a word for one base: station
/// positions (1-based positions of the plain letters, in word order) and
/// the cyclic gaps (barred-letter counts between consecutive stations,
/// the last gap wrapping around the word end).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Track {
    base: u32,
    stations: Vec<usize>,
    gaps: Vec<u64>,
}

impl Track {
    pub fn base(&self) -> u32 {
        self.base
    }

    /// 1-based word positions of the stations, ascending.
    pub fn stations(&self) -> &[usize] {
        &self.stations
    }

    /// `gaps()[i]` is the distance from station `i+1` to the next one
    /// (cyclically); the gaps sum to the station count.
    pub fn gaps(&self) -> &[u64] {
        &self.gaps
    }

    pub fn station_count(&self) -> usize {
        self.stations.len()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TrackError {
    #[error("base {base} does not occur in the word")]
    BaseAbsent { base: u32 },
    #[error("base {base} is unbalanced: {plain} plain vs {barred} barred occurrences")]
    UnbalancedBase { base: u32, plain: u64, barred: u64 },
}

/// Read the track instance for `base` off the word. The word must be
/// balanced in that base; a base with no occurrences signals the
/// degenerate case, which [`insert_forced_pair`] handles by inserting at
/// the front.
pub fn build_track(word: &Word, base: u32) -> Result<Track, TrackError> {
    let stats = word.balance_stats().count(base);
    if stats.plain != stats.barred {
        return Err(TrackError::UnbalancedBase {
            base,
            plain: stats.plain,
            barred: stats.barred,
        });
    }
    if stats.plain == 0 {
        return Err(TrackError::BaseAbsent { base });
    }

    let mut stations = Vec::with_capacity(stats.plain as usize);
    for (idx, letter) in word.letters().iter().enumerate() {
        if letter.base() == base && !letter.is_barred() {
            stations.push(idx + 1);
        }
    }

    let mut gaps = vec![0u64; stations.len()];
    // Every barred occurrence belongs to the gap that starts at the last
    // station before it; barred letters before the first station wrap into
    // the final gap.
    for (idx, letter) in word.letters().iter().enumerate() {
        if letter.base() == base && letter.is_barred() {
            let pos = idx + 1;
            let slot = match stations.partition_point(|&s| s < pos) {
                0 => stations.len() - 1,
                nonzero => nonzero - 1,
            };
            gaps[slot] += 1;
        }
    }
    Ok(Track {
        base,
        stations,
        gaps,
    })
}

/// The earliest station from which the whole circuit can be driven with an
/// empty starting tank (1-based index into the station list).
///
/// Starting at station `s` works exactly when the prefix sum of
/// fuel-minus-distance before `s` is a global minimum, so the first global
/// minimum gives the earliest valid start.
pub fn find_start_station(track: &Track) -> usize {
    let mut best_sum = 0i64;
    let mut best_idx = 0usize;
    let mut prefix = 0i64;
    for s in 1..track.gaps.len() {
        prefix += 1 - track.gaps[s - 1] as i64;
        if prefix < best_sum {
            best_sum = prefix;
            best_idx = s;
        }
    }
    best_idx + 1
}

/// Outcome of [`insert_forced_pair`].
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Insertion {
    /// The extended word, two letters longer than the input.
    pub result: Word,
    /// 1-based position of the original letter the pair was inserted
    /// before; the new letters occupy positions `position` and
    /// `position + 1` of the result.
    pub position: usize,
    /// The chosen station (1-based index into the track's station list),
    /// or `None` in the degenerate no-occurrence case.
    pub station: Option<usize>,
    pub base: u32,
}

/// Insert the pair barred-then-plain (`Ā A`) for `base` at the start
/// station, preserving the valid-matching count exactly: in every valid
/// matching of the result the two inserted positions pair with each other.
///
/// The word must be balanced in `base`. When the base does not occur at
/// all the pair goes at the front, where neither new letter has any other
/// possible partner.
pub fn insert_forced_pair(word: &Word, base: u32) -> Result<Insertion, TrackError> {
    let (position, station) = match build_track(word, base) {
        Ok(track) => {
            let station = find_start_station(&track);
            (track.stations()[station - 1], Some(station))
        }
        Err(TrackError::BaseAbsent { .. }) => (1, None),
        Err(err) => return Err(err),
    };
    Ok(Insertion {
        result: insert_pair_at(word, position, base, true),
        position,
        station,
        base,
    })
}

/// Smallest base occurring in the word, the default insertion base.
pub fn default_base(word: &Word) -> Option<u32> {
    word.letters().iter().map(|l| l.base()).min()
}

/// Splice a complementary pair of `base` in right before 1-based
/// `position` (`len + 1` appends). `barred_first` selects `Ā A` over `A Ā`.
fn insert_pair_at(word: &Word, position: usize, base: u32, barred_first: bool) -> Word {
    assert!(position >= 1 && position <= word.len() + 1);
    let mut letters = Vec::with_capacity(word.len() + 2);
    letters.extend_from_slice(&word.letters()[..position - 1]);
    if barred_first {
        letters.push(Letter::barred(base));
        letters.push(Letter::plain(base));
    } else {
        letters.push(Letter::plain(base));
        letters.push(Letter::barred(base));
    }
    letters.extend_from_slice(&word.letters()[position - 1..]);
    Word::new(letters)
}

/// Result of [`verify_monotone`]: realizable-set inclusion between
/// half-lengths `n` and `n + 1`, plus the constructive per-word check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MonotoneReport {
    pub n: usize,
    pub m: u32,
    pub small: CountHistogram,
    pub large: CountHistogram,
    /// Counts realizable at `n` but not at `n + 1`; empty iff inclusion holds.
    pub missing: Vec<BigUint>,
    /// Words of length `2n` with a positive count whose insertion was checked.
    pub words_checked: u64,
    /// Words whose insertion failed to preserve the count.
    pub failures: Vec<Word>,
}

impl MonotoneReport {
    pub fn inclusion_holds(&self) -> bool {
        self.missing.is_empty()
    }

    pub fn passed(&self) -> bool {
        self.inclusion_holds() && self.failures.is_empty()
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "n": self.n,
            "m": self.m,
            "realizable_n": self.small.realizable().iter().map(|k| k.to_string()).collect::<Vec<_>>(),
            "realizable_n_plus_1": self.large.realizable().iter().map(|k| k.to_string()).collect::<Vec<_>>(),
            "missing": self.missing.iter().map(|k| k.to_string()).collect::<Vec<_>>(),
            "inclusion_holds": self.inclusion_holds(),
            "words_checked": self.words_checked,
            "constructive_failures": self.failures.iter().map(|w| w.to_string()).collect::<Vec<_>>(),
            "passed": self.passed(),
        })
    }
}

impl fmt::Display for MonotoneReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let fmt_set = |ks: &[BigUint]| {
            ks.iter()
                .map(|k| k.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        };
        writeln!(
            f,
            "realizable counts at n={}, m={}: {{{}}}",
            self.n,
            self.m,
            fmt_set(&self.small.realizable())
        )?;
        writeln!(
            f,
            "realizable counts at n={}, m={}: {{{}}}",
            self.n + 1,
            self.m,
            fmt_set(&self.large.realizable())
        )?;
        writeln!(
            f,
            "inclusion: {}",
            if self.inclusion_holds() {
                "holds".to_string()
            } else {
                format!("VIOLATED, missing {{{}}}", fmt_set(&self.missing))
            }
        )?;
        write!(
            f,
            "constructive insertions checked on {} words: {}",
            self.words_checked,
            if self.failures.is_empty() {
                "all preserve the count".to_string()
            } else {
                format!("{} FAILURES", self.failures.len())
            }
        )
    }
}

/// Survey half-lengths `n` and `n + 1` over `m` pairs, check that every
/// count realizable at `n` is still realizable at `n + 1`, and check the
/// constructive route: for every word of length `2n` with a positive
/// count, inserting the forced pair preserves the count exactly.
pub fn verify_monotone(n: usize, m: u32) -> Result<MonotoneReport, SurveyError> {
    let small = survey(SurveyParams { n, m })?;
    let large = survey(SurveyParams { n: n + 1, m })?;

    let large_set = large.realizable();
    let missing: Vec<BigUint> = small
        .realizable()
        .into_iter()
        .filter(|k| !large_set.contains(k))
        .collect();

    let mut words_checked = 0u64;
    let mut failures = Vec::new();
    let total = SurveyParams { n, m }
        .word_count()
        .expect("survey above already bounded the space");
    for index in 0..total {
        let word = crate::survey::word_from_index(index, 2 * n, m);
        let count = count_valid(&word);
        if count == BigUint::default() {
            continue;
        }
        words_checked += 1;
        let base = default_base(&word).expect("positive count implies letters");
        let inserted = insert_forced_pair(&word, base).expect("positive count implies balance");
        if count_valid(&inserted.result) != count {
            failures.push(word);
        }
    }

    Ok(MonotoneReport {
        n,
        m,
        small,
        large,
        missing,
        words_checked,
        failures,
    })
}
