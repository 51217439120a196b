//! Reproduce the realizability gap at half-length 7 from scratch.
//!
//! The 14-letter word BbaAAaaABbAaAa over two complementary pairs has
//! exactly 11 valid matchings, split 7 + 4 by the two ways of pairing its
//! B's — yet a full scan of all 2^14 single-pair words of length 14 shows
//! that no such word has count 11. Realizable sets therefore depend on the
//! alphabet size, not just on the word length.
//!
//!     cargo run --example counterexample

use pvalid::{canonical_form, count_valid, counterexample_word, verify_counterexample};

fn main() {
    let word = counterexample_word();
    println!("word: {word}");
    println!("count: {}", count_valid(&word));
    println!(
        "canonical orbit representative: {} (same count {})",
        canonical_form(&word, 2),
        count_valid(&canonical_form(&word, 2))
    );
    println!();

    let report = verify_counterexample().expect("the length-14 scan is tiny");
    println!("{report}");

    println!();
    println!("single-pair histogram at length 14:");
    println!("{}", report.scan);

    std::process::exit(if report.passed() { 0 } else { 1 });
}
