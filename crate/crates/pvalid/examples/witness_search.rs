//! Find words attaining a target valid-matching count.
//!
//!     cargo run --example witness_search -- 3 1 5

use num_bigint::BigUint;
use pvalid::{count_valid, find_witnesses, SurveyParams};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(3);
    let m: u32 = args.next().and_then(|a| a.parse().ok()).unwrap_or(1);
    let k: BigUint = args
        .next()
        .and_then(|a| a.parse().ok())
        .unwrap_or_else(|| BigUint::from(5u32));

    let witnesses = find_witnesses(SurveyParams { n, m }, &k, 10).expect("scan within budget");
    if witnesses.is_empty() {
        println!("no word of length {} over {m} pairs has count {k}", 2 * n);
        return;
    }
    println!(
        "first {} words of length {} over {m} pairs with count {k}:",
        witnesses.len(),
        2 * n
    );
    for word in &witnesses {
        assert_eq!(count_valid(word), k);
        println!("  {word}");
    }
}
