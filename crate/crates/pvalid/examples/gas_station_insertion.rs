//! Extend a word by a complementary pair without changing its count.
//!
//! The insertion point comes from the circular-track argument: plain
//! occurrences of the base are fuel stations, barred occurrences are miles,
//! and the pair goes right before the station from which the full circuit
//! can be driven on an initially empty tank.
//!
//!     cargo run --example gas_station_insertion -- BbaAAaaABbAaAa

use pvalid::{
    build_track, count_valid, enumerate_valid, find_start_station, insert_forced_pair, Word,
};
use pvalid::insertion::default_base;

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "aAaAAa".to_string());
    let word = Word::parse(&text).expect("word parses");
    let base = default_base(&word).unwrap_or(0);

    println!("word: {word}   count: {}", count_valid(&word));

    match build_track(&word, base) {
        Ok(track) => {
            println!("track for base {base}:");
            println!("  stations at word positions {:?}", track.stations());
            println!("  gaps (miles to the next station): {:?}", track.gaps());
            let start = find_start_station(&track);
            println!("  earliest start that completes the circuit: station {start}");
        }
        Err(err) => println!("no track: {err}"),
    }

    let insertion = insert_forced_pair(&word, base).expect("word is balanced in the base");
    println!(
        "inserted barred+plain pair before position {}: {}",
        insertion.position, insertion.result
    );
    println!("count after insertion: {}", count_valid(&insertion.result));

    let forced = enumerate_valid(&insertion.result, None)
        .matchings
        .iter()
        .all(|m| m.contains_pair(insertion.position, insertion.position + 1));
    println!(
        "inserted pair matched to itself in every valid matching: {forced}"
    );
}
