//! Exact counting and enumeration of valid matchings for a word.
//!
//! The count of valid matchings of `p_1..p_L` is computed by interval
//! dynamic programming: with `f(i, j)` the number of valid matchings of
//! the subword `p_i..p_j` and `f = 1` on empty intervals,
//!
//! ```text
//! f(i, j) = sum over k in {i+1, i+3, ..., j} of
//!           [p_i complementary to p_k] * f(i+1, k-1) * f(k+1, j)
//! ```
//!
//! which is O(L^3) time and O(L^2) space. Only the parity-stepped split
//! points can contribute: everything strictly between a pair must itself be
//! perfectly matched, so both fragments have even length. Odd-length and
//! unbalanced words simply count zero; no special cases are needed.
//!
//! Counts are exact unbounded integers. A `u64` fast path is used for
//! words of at most [`U64_EXACT_MAX_LEN`] letters, where every table entry
//! is bounded by Catalan(32) < 2^64 and cannot overflow; longer words go
//! through `BigUint`. Both paths evaluate the same recurrence.

use std::ops::{AddAssign, Mul};

use num_bigint::BigUint;
use num_traits::{One, Zero};
use thiserror::Error;

use crate::alphabet::{Letter, Word};
use crate::structures::Matching;

/// Longest word the `u64` counting path handles exactly. Every interval of
/// a word this long holds at most Catalan(32) = 55_534_064_877_048_198
/// matchings, and every intermediate product and partial sum in the
/// recurrence is bounded by a single table entry, so `u64` arithmetic is
/// exact here.
pub(crate) const U64_EXACT_MAX_LEN: usize = 64;

/// The n-th Catalan number: noncrossing perfect matchings on 2n points,
/// plane trees with n edges, and an upper bound for any valid-matching
/// count of a word of length 2n.
pub fn catalan(n: usize) -> BigUint {
    let mut c = BigUint::one();
    for k in 0..n {
        c = c * (2 * (2 * k + 1)) / (k + 2);
    }
    c
}

/// Full interval table for `letters`: `table[i][j]` counts the valid
/// matchings of `letters[i..j]` (0-based, half-open). Entry `[0][len]` is
/// the count for the whole word.
fn interval_table<T>(letters: &[Letter]) -> Vec<Vec<T>>
where
    T: Zero + One + AddAssign,
    for<'a> &'a T: Mul<&'a T, Output = T>,
{
    let len = letters.len();
    let mut table: Vec<Vec<T>> = (0..=len)
        .map(|_| (0..=len).map(|_| T::zero()).collect())
        .collect();
    for i in 0..=len {
        table[i][i] = T::one();
    }
    for span in (2..=len).step_by(2) {
        for i in 0..=len - span {
            let j = i + span;
            let mut total = T::zero();
            for k in ((i + 1)..j).step_by(2) {
                if letters[i].is_complement_of(letters[k]) {
                    total += &table[i + 1][k] * &table[k + 1][j];
                }
            }
            table[i][j] = total;
        }
    }
    table
}

fn count_letters(letters: &[Letter]) -> BigUint {
    if letters.len() % 2 == 1 {
        return BigUint::zero();
    }
    if letters.len() <= U64_EXACT_MAX_LEN {
        let mut scratch = IntervalScratch::new();
        BigUint::from(scratch.count(letters))
    } else {
        let len = letters.len();
        let mut table = interval_table::<BigUint>(letters);
        std::mem::take(&mut table[0][len])
    }
}

/// Exact number of valid matchings of `word` — equivalently, by the
/// boundary-walk bijection, the number of plane trees for which `word`
/// labels every edge with a complementary pair. Odd-length and unbalanced
/// words count zero. Always between 0 and Catalan(len/2).
pub fn count_valid(word: &Word) -> BigUint {
    count_letters(word.letters())
}

/// Reusable flat `u64` interval table; the survey calls this in a tight
/// loop and the buffer avoids re-allocating per word.
pub(crate) struct IntervalScratch {
    table: Vec<u64>,
}

impl IntervalScratch {
    pub(crate) fn new() -> Self {
        IntervalScratch { table: Vec::new() }
    }

    /// Exact count for `letters`; requires `letters.len() <= U64_EXACT_MAX_LEN`.
    pub(crate) fn count(&mut self, letters: &[Letter]) -> u64 {
        let len = letters.len();
        assert!(len <= U64_EXACT_MAX_LEN, "u64 counting path requires len <= 64");
        if len % 2 == 1 {
            return 0;
        }
        let width = len + 1;
        self.table.clear();
        self.table.resize(width * width, 0);
        for i in 0..=len {
            self.table[i * width + i] = 1;
        }
        for span in (2..=len).step_by(2) {
            for i in 0..=len - span {
                let j = i + span;
                let mut total = 0u64;
                for k in ((i + 1)..j).step_by(2) {
                    if letters[i].is_complement_of(letters[k]) {
                        total += self.table[(i + 1) * width + k] * self.table[(k + 1) * width + j];
                    }
                }
                self.table[i * width + j] = total;
            }
        }
        self.table[len]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ForcedPairError {
    #[error("forced pair ({i}, {j}) must satisfy i < j")]
    NotOrdered { i: usize, j: usize },
    #[error("forced position {position} is outside 1..={len}")]
    PositionOutOfRange { position: usize, len: usize },
    #[error("letters at forced positions {i} and {j} ({a} and {b}) are not complementary")]
    NotComplementary { i: usize, j: usize, a: Letter, b: Letter },
}

/// Number of valid matchings of `word` that contain the pair `{i, j}`
/// (1-based, `i < j`, complementary letters required).
///
/// The chord `{i, j}` splits the circle into two independent arcs: the
/// inside `p_{i+1}..p_{j-1}` and the outside `p_1..p_{i-1} p_{j+1}..p_L`
/// (splicing preserves the relative order, which is all noncrossingness
/// depends on), so the result is the product of the two arc counts.
pub fn count_valid_with_forced_pair(
    word: &Word,
    pair: (usize, usize),
) -> Result<BigUint, ForcedPairError> {
    let (i, j) = pair;
    let len = word.len();
    for position in [i, j] {
        if position == 0 || position > len {
            return Err(ForcedPairError::PositionOutOfRange { position, len });
        }
    }
    if i >= j {
        return Err(ForcedPairError::NotOrdered { i, j });
    }
    let letters = word.letters();
    let (a, b) = (letters[i - 1], letters[j - 1]);
    if !a.is_complement_of(b) {
        return Err(ForcedPairError::NotComplementary { i, j, a, b });
    }
    let inside = &letters[i..j - 1];
    let mut outside = Vec::with_capacity(len - (j - i + 1));
    outside.extend_from_slice(&letters[..i - 1]);
    outside.extend_from_slice(&letters[j..]);
    Ok(count_letters(inside) * count_letters(&outside))
}

/// Result of [`enumerate_valid`]: the matchings found and whether a cap
/// cut the enumeration short.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Enumeration {
    pub matchings: Vec<Matching>,
    pub truncated: bool,
}

/// All valid matchings of `word` in lexicographic order of their sorted
/// pair lists, truncated at `limit` if given. Without a binding cap the
/// result has exactly `count_valid(word)` entries.
pub fn enumerate_valid(word: &Word, limit: Option<usize>) -> Enumeration {
    let letters = word.letters();
    let cap = limit.unwrap_or(usize::MAX);
    if letters.len() % 2 == 1 {
        return Enumeration { matchings: Vec::new(), truncated: false };
    }

    // A nonzero-subinterval table lets the recursion skip dead branches, so
    // the cost is proportional to the output, not to failed descents.
    let len = letters.len();
    let nonzero: Vec<Vec<bool>> = if len <= U64_EXACT_MAX_LEN {
        let table = interval_table::<u64>(letters);
        table.iter().map(|row| row.iter().map(|&v| v != 0).collect()).collect()
    } else {
        let table = interval_table::<BigUint>(letters);
        table.iter().map(|row| row.iter().map(|v| !v.is_zero()).collect()).collect()
    };
    let total_nonzero = nonzero[0][len];

    let mut out = Vec::new();
    let mut current = Vec::with_capacity(len / 2);
    if total_nonzero {
        descend(letters, &nonzero, &[(0, len)], &mut current, &mut out, cap);
    }

    let truncated = match (total_nonzero, limit) {
        (false, _) | (_, None) => false,
        (true, Some(l)) => BigUint::from(l) < count_letters(letters),
    };
    Enumeration { matchings: out, truncated }
}

/// Recursive enumeration over a worklist of disjoint intervals, kept
/// sorted by position: the first unmatched position of the first interval
/// pairs with each admissible partner in increasing order, which yields
/// the pair lists directly in lexicographic order.
fn descend(
    letters: &[Letter],
    nonzero: &[Vec<bool>],
    ranges: &[(usize, usize)],
    current: &mut Vec<(usize, usize)>,
    out: &mut Vec<Matching>,
    cap: usize,
) {
    if out.len() >= cap {
        return;
    }
    let Some((&(lo, hi), rest)) = ranges.split_first() else {
        out.push(Matching::from_sorted_pairs_unchecked(current.clone()));
        return;
    };
    if lo == hi {
        descend(letters, nonzero, rest, current, out, cap);
        return;
    }
    for k in ((lo + 1)..hi).step_by(2) {
        if letters[lo].is_complement_of(letters[k]) && nonzero[lo + 1][k] && nonzero[k + 1][hi] {
            current.push((lo + 1, k + 1));
            let mut next: Vec<(usize, usize)> = Vec::with_capacity(rest.len() + 2);
            if lo + 1 < k {
                next.push((lo + 1, k));
            }
            if k + 1 < hi {
                next.push((k + 1, hi));
            }
            next.extend_from_slice(rest);
            descend(letters, nonzero, &next, current, out, cap);
            current.pop();
            if out.len() >= cap {
                return;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;
    use proptest::prelude::*;

    fn word(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn count(s: &str) -> u64 {
        count_valid(&word(s)).to_u64().unwrap()
    }

    #[test]
    fn catalan_values() {
        let expected: [u64; 11] = [1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796];
        for (n, &e) in expected.iter().enumerate() {
            assert_eq!(catalan(n), BigUint::from(e));
        }
        assert_eq!(catalan(32), BigUint::from(55_534_064_877_048_198u64));
        assert_eq!(
            catalan(40).to_string(),
            "2622127042276492108820"
        );
    }

    #[test]
    fn forced_and_impossible_cases() {
        assert_eq!(count("Aa"), 1);
        assert_eq!(count("AA"), 0);
        assert_eq!(count(""), 1);
        assert_eq!(count("AAaa"), 1);
        assert_eq!(count("aAAa"), 1);
        assert_eq!(count("A"), 0); // odd length
        assert_eq!(count("AaA"), 0);
    }

    #[test]
    fn fourteen_letter_word_counts_eleven() {
        assert_eq!(count("BbaAAaaABbAaAa"), 11);
    }

    #[test]
    fn alternating_word_counts_catalan() {
        assert_eq!(count("AaAa"), 2);
        assert_eq!(count("AaAaAaAaAa"), 42);
    }

    #[test]
    fn forced_pair_decomposition() {
        let w = word("BbaAAaaABbAaAa");
        assert_eq!(
            count_valid_with_forced_pair(&w, (1, 2)).unwrap(),
            BigUint::from(7u32)
        );
        assert_eq!(
            count_valid_with_forced_pair(&w, (1, 10)).unwrap(),
            BigUint::from(4u32)
        );
        assert_eq!(
            count_valid_with_forced_pair(&word("Aa"), (1, 2)).unwrap(),
            BigUint::one()
        );
    }

    #[test]
    fn forced_pair_errors() {
        let w = word("AAaa");
        assert_eq!(
            count_valid_with_forced_pair(&w, (1, 2)),
            Err(ForcedPairError::NotComplementary {
                i: 1,
                j: 2,
                a: Letter::plain(0),
                b: Letter::plain(0),
            })
        );
        assert_eq!(
            count_valid_with_forced_pair(&w, (3, 1)),
            Err(ForcedPairError::NotOrdered { i: 3, j: 1 })
        );
        assert_eq!(
            count_valid_with_forced_pair(&w, (0, 2)),
            Err(ForcedPairError::PositionOutOfRange { position: 0, len: 4 })
        );
        assert_eq!(
            count_valid_with_forced_pair(&w, (1, 9)),
            Err(ForcedPairError::PositionOutOfRange { position: 9, len: 4 })
        );
    }

    #[test]
    fn forced_pair_sum_rule_exhaustive() {
        // Summing the forced count over all complementary partners of
        // position 1 recovers the full count.
        for len in [2usize, 4, 6, 8] {
            for idx in 0..(4u64.pow(len as u32)) {
                let letters: Vec<Letter> = (0..len)
                    .map(|p| Letter::from_code((idx >> (2 * p)) & 3))
                    .collect();
                let w = Word::new(letters);
                let first = w.letters()[0];
                let mut total = BigUint::zero();
                for j in 2..=len {
                    if first.is_complement_of(w.letters()[j - 1]) {
                        total += count_valid_with_forced_pair(&w, (1, j)).unwrap();
                    }
                }
                assert_eq!(total, count_valid(&w), "sum rule failed for {w}");
            }
        }
    }

    #[test]
    fn enumerate_order_and_witnesses() {
        let e = enumerate_valid(&word("AaAa"), None);
        assert!(!e.truncated);
        let listed: Vec<String> = e.matchings.iter().map(|m| m.to_string()).collect();
        assert_eq!(listed, vec!["(1,2)(3,4)", "(1,4)(2,3)"]);

        assert!(enumerate_valid(&word("AA"), None).matchings.is_empty());
        assert_eq!(enumerate_valid(&word(""), None).matchings, vec![Matching::empty()]);

        let e = enumerate_valid(&word("BbaAAaaABbAaAa"), None);
        assert_eq!(e.matchings.len(), 11);
        assert!(!e.truncated);
    }

    #[test]
    fn enumerate_respects_limit() {
        let w = word("BbaAAaaABbAaAa");
        let e = enumerate_valid(&w, Some(5));
        assert_eq!(e.matchings.len(), 5);
        assert!(e.truncated);

        let e = enumerate_valid(&w, Some(11));
        assert_eq!(e.matchings.len(), 11);
        assert!(!e.truncated);

        let e = enumerate_valid(&w, Some(0));
        assert!(e.matchings.is_empty());
        assert!(e.truncated);

        // A cap larger than the count does not mark truncation.
        let e = enumerate_valid(&word("AA"), Some(3));
        assert!(e.matchings.is_empty());
        assert!(!e.truncated);
    }

    #[test]
    fn enumeration_agrees_with_filtered_brute_force() {
        // Every word of length <= 6 over two pairs: the enumeration must
        // equal the sorted filter of all noncrossing matchings.
        for len in [0usize, 2, 4, 6] {
            for idx in 0..(4u64.pow(len as u32)) {
                let letters: Vec<Letter> = (0..len)
                    .map(|p| Letter::from_code((idx >> (2 * p)) & 3))
                    .collect();
                let w = Word::new(letters);
                let brute: Vec<Matching> = Matching::all_noncrossing(len / 2)
                    .into_iter()
                    .filter(|m| m.is_valid_for(&w))
                    .collect();
                let e = enumerate_valid(&w, None);
                assert_eq!(e.matchings, brute, "mismatch for {w}");
                assert_eq!(BigUint::from(brute.len()), count_valid(&w));
            }
        }
    }

    #[test]
    fn u64_and_biguint_paths_agree() {
        let mut scratch = IntervalScratch::new();
        for s in ["", "Aa", "BbaAAaaABbAaAa", "AaAaAaAaAa", "AAaaBbabAB"] {
            let w = word(s);
            let via_u64 = scratch.count(w.letters());
            let via_big = interval_table::<BigUint>(w.letters())[0][w.len()].clone();
            assert_eq!(BigUint::from(via_u64), via_big, "paths disagree on {s}");
        }
    }

    #[test]
    fn long_words_use_exact_big_integers() {
        // An alternating word of length 2n counts Catalan(n); length 82
        // exceeds the u64 window and Catalan(41) exceeds u64::MAX.
        let letters: Vec<Letter> = (0..82)
            .map(|i| Letter::new(0, i % 2 == 1))
            .collect();
        let w = Word::new(letters);
        assert_eq!(count_valid(&w), catalan(41));
        assert!(count_valid(&w) > BigUint::from(u64::MAX));
    }

    fn small_word() -> impl Strategy<Value = Word> {
        proptest::collection::vec(0u64..4, 0..13)
            .prop_map(|codes| codes.into_iter().map(Letter::from_code).collect())
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(128))]

        #[test]
        fn count_bounded_by_catalan(w in small_word()) {
            let c = count_valid(&w);
            if w.len() % 2 == 0 {
                prop_assert!(c <= catalan(w.len() / 2));
            } else {
                prop_assert!(c.is_zero());
            }
        }

        #[test]
        fn positive_count_requires_balance(w in small_word()) {
            if !count_valid(&w).is_zero() {
                prop_assert!(w.is_balanced());
            }
        }

        #[test]
        fn concatenation_only_adds(a in small_word(), b in small_word()) {
            prop_assume!(a.len() % 2 == 0 && b.len() % 2 == 0);
            let joined: Word = a.letters().iter().chain(b.letters()).copied().collect();
            prop_assert!(count_valid(&joined) >= count_valid(&a) * count_valid(&b));
        }

        #[test]
        fn rotation_preserves_count(w in small_word(), r in 0usize..16) {
            prop_assert_eq!(count_valid(&w.rotated(r)), count_valid(&w));
        }

        #[test]
        fn paths_agree_on_random_words(w in small_word()) {
            prop_assume!(w.len() % 2 == 0);
            let mut scratch = IntervalScratch::new();
            let via_u64 = scratch.count(w.letters());
            let via_big = interval_table::<BigUint>(w.letters())[0][w.len()].clone();
            prop_assert_eq!(BigUint::from(via_u64), via_big);
        }
    }
}
