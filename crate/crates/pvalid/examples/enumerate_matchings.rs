//! List every valid matching of a word, with the plane tree each one
//! corresponds to under the boundary-walk bijection.
//!
//!     cargo run --example enumerate_matchings -- BbaAAaaABbAaAa

use pvalid::{count_valid, enumerate_valid, PlaneTree, Word};

fn main() {
    let text = std::env::args().nth(1).unwrap_or_else(|| "AaAa".to_string());
    let word = Word::parse(&text).expect("word parses");

    println!("word:  {word}");
    println!("count: {}", count_valid(&word));

    let enumeration = enumerate_valid(&word, Some(500));
    for matching in &enumeration.matchings {
        let tree = PlaneTree::from_matching(matching).expect("valid matchings never cross");
        println!("  {matching}  ~  tree {tree}");
    }
    if enumeration.truncated {
        println!("  ... truncated at {}", enumeration.matchings.len());
    }
}
