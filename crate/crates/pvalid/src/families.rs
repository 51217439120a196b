//! The two-block word family `F(k, l) = A^k Ā^k A^l Ā^l` and its count law.
//!
//! The family realizes every positive count: `F(k, k)` has exactly `k + 1`
//! valid matchings, so every `k + 1` is a realizable count at length `4k`
//! over a single complementary pair. The closed form `min(k, l) + 1`
//! follows from a shrink recursion — the middle plain letter of the longer
//! block can only pair with its immediate neighbour, which deletes two
//! adjacent positions — and the recursion itself is checked against the
//! interval counter cell by cell in [`verify_family_recursion`].

use std::fmt;

use num_bigint::BigUint;
use rayon::prelude::*;

use crate::alphabet::{Letter, Word};
use crate::counting::count_valid;

/// The word `A^k Ā^k A^l Ā^l` over a single-pair alphabet, length `2k + 2l`.
///
/// `k` must be positive. `l = 0` is admitted as the degenerate boundary
/// `A^k Ā^k`, which has exactly one valid matching (fully nested); the
/// recursion verifier bottoms out there.
pub fn family_word(k: usize, l: usize) -> Word {
    assert!(k >= 1, "family words require k >= 1");
    let mut letters = Vec::with_capacity(2 * k + 2 * l);
    for (reps, barred) in [(k, false), (k, true), (l, false), (l, true)] {
        letters.extend(std::iter::repeat_n(Letter::new(0, barred), reps));
    }
    Word::new(letters)
}

/// Closed-form count for `family_word(k, l)`: `min(k, l) + 1`.
pub fn family_count_closed_form(k: usize, l: usize) -> BigUint {
    BigUint::from(k.min(l) + 1)
}

/// Which branch of the shrink recursion applies to a `(k, l)` cell.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum RecursionCase {
    /// `k > l`: the count equals that of `(k - 1, l)`.
    ShrinkK,
    /// `l > k`: the count equals that of `(k, l - 1)`.
    ShrinkL,
    /// `k = l`: the count equals `1 +` that of `(k, l - 1)`.
    Equal,
}

impl fmt::Display for RecursionCase {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RecursionCase::ShrinkK => "k>l",
            RecursionCase::ShrinkL => "l>k",
            RecursionCase::Equal => "k=l",
        })
    }
}

/// One `(k, l)` cell of the recursion check.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RecursionCell {
    pub k: usize,
    pub l: usize,
    pub case: RecursionCase,
    /// Count of `family_word(k, l)` by interval DP.
    pub actual: BigUint,
    /// What the recursion predicts from the smaller cell, also by DP.
    pub expected: BigUint,
    /// True when the smaller cell is the `l = 0` boundary word, which is a
    /// convenience extension rather than part of the family proper.
    pub uses_boundary_word: bool,
}

impl RecursionCell {
    pub fn passed(&self) -> bool {
        self.actual == self.expected
    }
}

/// Result of checking the shrink recursion over all cells `1 <= k, l <= k_max`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct FamilyRecursionReport {
    pub k_max: usize,
    /// Cells sorted by `(k, l)`.
    pub cells: Vec<RecursionCell>,
}

impl FamilyRecursionReport {
    pub fn passed(&self) -> bool {
        self.cells.iter().all(RecursionCell::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &RecursionCell> {
        self.cells.iter().filter(|c| !c.passed())
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "k_max": self.k_max,
            "passed": self.passed(),
            "cells": self.cells.iter().map(|c| serde_json::json!({
                "k": c.k,
                "l": c.l,
                "case": c.case.to_string(),
                "count": c.actual.to_string(),
                "expected": c.expected.to_string(),
                "boundary": c.uses_boundary_word,
                "passed": c.passed(),
            })).collect::<Vec<_>>(),
        })
    }
}

impl fmt::Display for FamilyRecursionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "shrink recursion over {} cells (k, l <= {}):",
            self.cells.len(),
            self.k_max
        )?;
        for c in &self.cells {
            writeln!(
                f,
                "  k={} l={} [{}] count={} expected={}{} {}",
                c.k,
                c.l,
                c.case,
                c.actual,
                c.expected,
                if c.uses_boundary_word { " (boundary l=0)" } else { "" },
                if c.passed() { "ok" } else { "FAIL" },
            )?;
        }
        write!(f, "result: {}", if self.passed() { "pass" } else { "FAIL" })
    }
}

/// Check, for every `1 <= k, l <= k_max`, that the count of `F(k, l)`
/// satisfies the shrink recursion, with both sides evaluated by the
/// interval counter. Cells are evaluated in parallel and reported sorted
/// by `(k, l)`.
pub fn verify_family_recursion(k_max: usize) -> FamilyRecursionReport {
    assert!(k_max >= 1, "recursion check requires k_max >= 1");
    let cells_in: Vec<(usize, usize)> = (1..=k_max)
        .flat_map(|k| (1..=k_max).map(move |l| (k, l)))
        .collect();
    let mut cells: Vec<RecursionCell> = cells_in
        .into_par_iter()
        .map(|(k, l)| {
            let actual = count_valid(&family_word(k, l));
            let (case, smaller, bump) = match k.cmp(&l) {
                std::cmp::Ordering::Greater => (RecursionCase::ShrinkK, (k - 1, l), 0u32),
                std::cmp::Ordering::Less => (RecursionCase::ShrinkL, (k, l - 1), 0),
                std::cmp::Ordering::Equal => (RecursionCase::Equal, (k, l - 1), 1),
            };
            let expected = count_valid(&family_word(smaller.0, smaller.1)) + bump;
            RecursionCell {
                k,
                l,
                case,
                actual,
                expected,
                uses_boundary_word: smaller.1 == 0,
            }
        })
        .collect();
    cells.sort_by_key(|c| (c.k, c.l));
    FamilyRecursionReport { k_max, cells }
}
