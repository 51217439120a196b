//! The two-block family A^k a^k A^l a^l: tabulate its counts against the
//! closed form min(k, l) + 1 and check the shrink recursion cell by cell.
//!
//! Since the count of the (k, k) word is k + 1, every positive integer is
//! the valid-matching count of some single-pair word.
//!
//!     cargo run --example family_counts -- 8

use pvalid::{count_valid, family_count_closed_form, family_word, verify_family_recursion};

fn main() {
    let k_max: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(6);

    println!("counts of A^k a^k A^l a^l (rows k, columns l), closed form min(k,l)+1:");
    print!("      ");
    for l in 1..=k_max {
        print!("{l:>5}");
    }
    println!();
    for k in 1..=k_max {
        print!("  k={k:>2}");
        for l in 1..=k_max {
            let count = count_valid(&family_word(k, l));
            assert_eq!(count, family_count_closed_form(k, l));
            print!("{:>5}", count.to_string());
        }
        println!();
    }

    println!();
    let report = verify_family_recursion(k_max);
    println!(
        "shrink recursion over {} cells: {}",
        report.cells.len(),
        if report.passed() { "all pass" } else { "FAILURES" }
    );
    for cell in report.failures() {
        println!("  FAIL at k={} l={}", cell.k, cell.l);
    }

    println!("\nevery target count is realized on the diagonal:");
    for k in [1usize, 5, 10, 20] {
        let word = family_word(k, k);
        println!(
            "  |V| of the (k={k}) word of length {} = {}",
            word.len(),
            count_valid(&word)
        );
    }
}
