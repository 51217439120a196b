//! Checkpointed surveys: finished chunks are journaled to disk, so an
//! interrupted scan resumes where it left off and a finished scan replays
//! instantly from the journal.
//!
//!     cargo run --release --example resumable_survey -- 6 1

use std::time::Instant;

use pvalid::{survey_with, SurveyOptions, SurveyParams};

fn main() {
    let mut args = std::env::args().skip(1);
    let n: usize = args.next().and_then(|a| a.parse().ok()).unwrap_or(6);
    let m: u32 = args.next().and_then(|a| a.parse().ok()).unwrap_or(1);

    let dir = std::env::temp_dir();
    let path = dir.join(format!("pvalid-survey-n{n}-m{m}.journal"));
    let _ = std::fs::remove_file(&path);

    let params = SurveyParams { n, m };
    let options = SurveyOptions {
        checkpoint: Some(path.clone()),
        chunk_size: 1 << 10,
        ..Default::default()
    };

    let start = Instant::now();
    let first = survey_with(params, &options).expect("survey within budget");
    println!("first run:  {:?} ({} words)", start.elapsed(), first.scanned);

    let lines = std::fs::read_to_string(&path).unwrap().lines().count();
    println!("journal {} holds {} lines (header + one per chunk)", path.display(), lines);

    // Rerunning consumes the journal instead of rescanning.
    let start = Instant::now();
    let second = survey_with(params, &options).expect("survey within budget");
    println!("second run: {:?} (replayed from the journal)", start.elapsed());
    assert_eq!(first, second);

    println!("\n{first}");
    let _ = std::fs::remove_file(&path);
}
