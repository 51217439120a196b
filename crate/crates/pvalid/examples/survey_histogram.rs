//! Exhaustively survey a word space: how many words of length 2n over m
//! pairs attain each valid-matching count, and which counts are realizable.
//!
//!     cargo run --release --example survey_histogram -- 5 1

use pvalid::{survey, verify_monotone, SurveyParams};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(4);
    let m: u32 = args.next().and_then(|a| a.parse().ok()).unwrap_or(1);

    let histogram = survey(SurveyParams { n, m }).expect("survey within budget");
    println!("{histogram}");

    println!("\nevery count realizable at n={n} stays realizable at n={}:", n + 1);
    let report = verify_monotone(n, m).expect("survey within budget");
    println!("{report}");
}
