//! Count the valid matchings of words given on the command line.
//!
//!     cargo run --example count_word -- BbaAAaaABbAaAa AaAaAaAaAa

use pvalid::{catalan, count_valid, Word};

fn main() {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let words = if args.is_empty() {
        vec![
            "Aa".to_string(),
            "AA".to_string(),
            "AaAa".to_string(),
            "AaAaAaAaAa".to_string(),
            "BbaAAaaABbAaAa".to_string(),
        ]
    } else {
        args
    };

    for text in words {
        match Word::parse(&text) {
            Ok(word) => {
                let count = count_valid(&word);
                let bound = if word.len() % 2 == 0 {
                    catalan(word.len() / 2).to_string()
                } else {
                    "0 (odd length)".to_string()
                };
                println!(
                    "{word}: {count} valid matchings (balanced: {}, Catalan bound {bound})",
                    word.is_balanced(),
                );
            }
            Err(err) => println!("{text}: {err}"),
        }
    }
}
