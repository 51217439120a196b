//! Exact counting of valid noncrossing matchings — equivalently, valid
//! rooted plane trees — for words over complementary alphabets.
//!
//! A *complementary alphabet* of size `m` has `m` pairs of letters
//! `{A, Ā, B, B̄, ...}`, each letter the complement of its partner (think
//! of the Watson–Crick pairs of RNA bases). Write a word of length `2n`
//! around a circle; a noncrossing perfect matching of the `2n` positions
//! is *valid* for the word when every chord connects two complementary
//! letters. Through the boundary-walk bijection the valid matchings are
//! exactly the plane trees that the word labels consistently, so both
//! models share one count, here written `|V(P)|` for a word `P`.
//!
//! The crate computes that count exactly (as a big integer, via interval
//! dynamic programming), enumerates the matchings, and builds the
//! machinery around the count's structure theory:
//!
//! * [`alphabet`] — letters, words, text formats, balance counts.
//! * [`structures`] — matchings, plane trees, and the bijection.
//! * [`counting`] — [`count_valid`], forced-pair counts, enumeration.
//! * [`families`] — the words `A^k Ā^k A^l Ā^l` whose counts are
//!   `min(k, l) + 1`, with a cell-by-cell recursion verifier.
//! * [`insertion`] — the circular-track insertion that extends a word by
//!   a forced complementary pair without changing its count, and the
//!   resulting monotonicity of realizable sets.
//! * [`survey`] — exhaustive histograms of counts over whole word spaces,
//!   with symmetry pruning and resumable checkpointing, including the
//!   14-letter two-pair word whose count 11 no single-pair word of
//!   length 14 attains.
//!
//! ```
//! use pvalid::{count_valid, Word};
//!
//! let word = Word::parse("BbaAAaaABbAaAa").unwrap();
//! assert_eq!(count_valid(&word).to_string(), "11");
//! ```
//!
//! The `examples/` directory has one runnable program per capability;
//! `cargo run --example counterexample` reproduces the headline
//! computation end to end.

pub mod alphabet;
pub mod counting;
pub mod families;
pub mod insertion;
pub mod structures;
pub mod survey;

pub use alphabet::{BalanceStats, Letter, ParseWordError, Word};
pub use counting::{catalan, count_valid, count_valid_with_forced_pair, enumerate_valid};
pub use families::{family_count_closed_form, family_word, verify_family_recursion};
pub use insertion::{build_track, find_start_station, insert_forced_pair, verify_monotone};
pub use structures::{Matching, PlaneTree};
pub use survey::{
    canonical_form, counterexample_word, find_witnesses, survey, survey_with, verify_counterexample,
    CountHistogram, SurveyOptions, SurveyParams,
};
