//! Acceptance suite: one test per criterion, each printing a pass line
//! (visible with `--nocapture`) once its assertions and runtime bound hold.
//!
//!     cargo test -p pvalid --test acceptance -- --nocapture

use std::time::{Duration, Instant};

use num_bigint::BigUint;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use pvalid::counting::{count_valid, count_valid_with_forced_pair, enumerate_valid};
use pvalid::families::{family_word, verify_family_recursion};
use pvalid::insertion::insert_forced_pair;
use pvalid::structures::{Matching, PlaneTree};
use pvalid::survey::{counterexample_word, survey, SurveyParams};
use pvalid::{Letter, Word};

fn big(v: u64) -> BigUint {
    BigUint::from(v)
}

fn letter_from_code(code: u64) -> Letter {
    Letter::new((code / 2) as u32, code % 2 == 1)
}

/// All words of `len` letters over `m` pairs, lexicographic.
fn all_words(len: usize, m: u32) -> impl Iterator<Item = Word> {
    let radix = 2 * u64::from(m);
    (0..radix.pow(len as u32)).map(move |idx| {
        let mut rem = idx;
        let mut codes = vec![0u64; len];
        for slot in codes.iter_mut().rev() {
            *slot = rem % radix;
            rem /= radix;
        }
        codes.into_iter().map(letter_from_code).collect()
    })
}

fn random_word(rng: &mut StdRng, len: usize, m: u32) -> Word {
    let radix = 2 * u64::from(m);
    (0..len)
        .map(|_| letter_from_code(rng.random_range(0..radix)))
        .collect()
}

/// Independent oracle: enumerate all noncrossing perfect matchings and
/// filter by letter validity. Never touches the interval recurrence.
fn brute_force_count(word: &Word) -> u64 {
    if word.len() % 2 == 1 {
        return 0;
    }
    Matching::all_noncrossing(word.len() / 2)
        .into_iter()
        .filter(|m| m.is_valid_for(word))
        .count() as u64
}

#[test]
fn criterion_01_counterexample_count() {
    let start = Instant::now();
    let count = count_valid(&counterexample_word());
    let elapsed = start.elapsed();
    assert_eq!(count, big(11));
    assert!(elapsed < Duration::from_secs(1), "took {elapsed:?}");
    println!("criterion 1 (counterexample count = 11): PASS in {elapsed:?}");
}

#[test]
fn criterion_02_counterexample_decomposition() {
    let word = counterexample_word();
    let adjacent = count_valid_with_forced_pair(&word, (1, 2)).unwrap();
    let far = count_valid_with_forced_pair(&word, (1, 10)).unwrap();
    assert_eq!(adjacent, big(7));
    assert_eq!(far, big(4));
    assert_eq!(adjacent + far, count_valid(&word));
    println!("criterion 2 (forced-pair split 7 + 4 = 11): PASS");
}

#[test]
fn criterion_03_eleven_unrealizable_over_one_pair() {
    let start = Instant::now();
    let hist = survey(SurveyParams { n: 7, m: 1 }).unwrap();
    let elapsed = start.elapsed();
    assert_eq!(hist.scanned, 16384);
    assert_eq!(hist.total_mass(), 16384);
    assert_eq!(hist.words_with_count(&big(11)), 0);
    assert!(elapsed < Duration::from_secs(60), "took {elapsed:?}");
    println!("criterion 3 (16384-word scan, no count 11 at m=1): PASS in {elapsed:?}");
}

#[test]
fn criterion_04_diagonal_family_counts() {
    let start = Instant::now();
    for k in 1..=20 {
        assert_eq!(
            count_valid(&family_word(k, k)),
            big(k as u64 + 1),
            "diagonal family count wrong at k={k}"
        );
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(10), "took {elapsed:?}");
    println!("criterion 4 (diagonal family counts k+1 for k <= 20): PASS in {elapsed:?}");
}

#[test]
fn criterion_05_family_recursion() {
    let report = verify_family_recursion(8);
    assert_eq!(report.cells.len(), 64);
    assert_eq!(report.failures().count(), 0);
    println!("criterion 5 (shrink recursion, 64 cells, zero failures): PASS");
}

/// Insert into `word` at every present base; count preservation and the
/// forcing property must hold each time. Returns how many insertions ran.
fn check_insertions(word: &Word) -> u64 {
    let before = count_valid(word);
    let bases: Vec<u32> = word.balance_stats().bases().map(|(b, _)| b).collect();
    let mut ran = 0;
    for base in bases {
        let ins = insert_forced_pair(word, base).unwrap();
        assert_eq!(
            count_valid(&ins.result),
            before,
            "count changed inserting base {base} into {word}"
        );
        for matching in enumerate_valid(&ins.result, None).matchings {
            assert!(
                matching.contains_pair(ins.position, ins.position + 1),
                "inserted pair not forced in {} (from {word})",
                ins.result
            );
        }
        ran += 1;
    }
    ran
}

#[test]
fn criterion_06_insertion_preserves_counts() {
    // Exhaustive over one pair up to length 10.
    let mut exhaustive = 0u64;
    for len in (2..=10).step_by(2) {
        for word in all_words(len, 1).filter(Word::is_balanced) {
            exhaustive += check_insertions(&word);
        }
    }

    // A 10^4-word random sample over two pairs at lengths up to 12.
    let mut sampled = 0u64;
    let mut rng = StdRng::seed_from_u64(0x5eed_cafe);
    for _ in 0..10_000 {
        let len = 2 * rng.random_range(1..=6usize);
        let word = random_word(&mut rng, len, 2);
        if word.is_balanced() {
            sampled += check_insertions(&word);
        }
    }

    println!(
        "criterion 6 (insertion preserves counts; {exhaustive} exhaustive + {sampled} sampled checks): PASS"
    );
}

#[test]
fn criterion_07_realizable_sets_grow() {
    let start = Instant::now();
    let realizable: Vec<Vec<BigUint>> = (1..=7)
        .map(|n| survey(SurveyParams { n, m: 1 }).unwrap().realizable())
        .collect();
    for n in 1..=6 {
        let small = &realizable[n - 1];
        let large = &realizable[n];
        for k in small {
            assert!(
                large.contains(k),
                "count {k} realizable at n={n} but not at n={}",
                n + 1
            );
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed < Duration::from_secs(120), "took {elapsed:?}");
    println!("criterion 7 (realizable-set inclusion for n = 1..6 at m=1): PASS in {elapsed:?}");
}

#[test]
fn criterion_08_oracle_equivalence() {
    // Exhaustive: every word of length <= 8 over two pairs (which contains
    // every word over one pair).
    let mut words = 0u64;
    for len in 0..=8 {
        for word in all_words(len, 2) {
            assert_eq!(
                count_valid(&word),
                big(brute_force_count(&word)),
                "oracle disagrees on {word}"
            );
            words += 1;
        }
    }

    // Random words of lengths 10..=12.
    let mut rng = StdRng::seed_from_u64(0xbead_5eed);
    for _ in 0..10_000 {
        let len = rng.random_range(10..=12usize);
        let word = random_word(&mut rng, len, 2);
        assert_eq!(
            count_valid(&word),
            big(brute_force_count(&word)),
            "oracle disagrees on {word}"
        );
        words += 1;
    }
    println!("criterion 8 (interval count = brute force on {words} words, zero discrepancies): PASS");
}

#[test]
fn criterion_09_bijection_round_trip() {
    let trees = PlaneTree::all_with_edges(6);
    let matchings = Matching::all_noncrossing(6);
    assert_eq!(trees.len(), 132);
    assert_eq!(matchings.len(), 132);
    for tree in &trees {
        assert_eq!(
            &PlaneTree::from_matching(&Matching::from_tree(tree)).unwrap(),
            tree
        );
    }
    for matching in &matchings {
        assert_eq!(
            &Matching::from_tree(&PlaneTree::from_matching(matching).unwrap()),
            matching
        );
    }
    println!("criterion 9 (bijection round trip on all 132 objects per side): PASS");
}

#[test]
fn criterion_10_invariance_suite() {
    // Rotation invariance, exhaustive over one pair up to length 10.
    let mut rotations = 0u64;
    for len in 0..=10 {
        for word in all_words(len, 1) {
            let count = count_valid(&word);
            for r in 1..len.max(1) {
                assert_eq!(
                    count_valid(&word.rotated(r)),
                    count,
                    "rotation by {r} changed the count of {word}"
                );
                rotations += 1;
            }
        }
    }

    // Alphabet-automorphism invariance, exhaustive over two pairs up to
    // length 8: every base permutation crossed with every polarity swap.
    let mut automorphisms = 0u64;
    let perms: [[u32; 2]; 2] = [[0, 1], [1, 0]];
    for len in 0..=8 {
        for word in all_words(len, 2) {
            let count = count_valid(&word);
            for perm in &perms {
                for flips in 0..4u32 {
                    let image: Word = word
                        .letters()
                        .iter()
                        .map(|l| {
                            let barred = l.is_barred() ^ ((flips >> l.base()) & 1 == 1);
                            Letter::new(perm[l.base() as usize], barred)
                        })
                        .collect();
                    assert_eq!(
                        count_valid(&image),
                        count,
                        "automorphism (perm {perm:?}, flips {flips:#b}) changed the count of {word}"
                    );
                    automorphisms += 1;
                }
            }
        }
    }

    println!(
        "criterion 10 (invariance: {rotations} rotation checks, {automorphisms} automorphism checks): PASS"
    );
}
