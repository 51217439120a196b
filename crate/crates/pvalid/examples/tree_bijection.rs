//! Walk the tree/matching bijection: every plane tree with n edges maps to
//! a noncrossing perfect matching on 2n points and back, and both families
//! are counted by the Catalan numbers.
//!
//!     cargo run --example tree_bijection -- 4

use pvalid::{catalan, Matching, PlaneTree};

fn main() {
    let n: usize = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(3);

    println!("plane trees with {n} edges <-> noncrossing matchings on {} points", 2 * n);
    for tree in PlaneTree::all_with_edges(n) {
        let matching = Matching::from_tree(&tree);
        let back = PlaneTree::from_matching(&matching).expect("the walk never crosses");
        assert_eq!(back, tree);
        println!("  {:width$}  ->  {matching}", tree.to_parens(), width = 2 * n);
    }

    println!("\ncounts by edge number:");
    for k in 0..=8 {
        println!(
            "  n={k}: {} trees, {} matchings, Catalan({k}) = {}",
            PlaneTree::all_with_edges(k).len(),
            Matching::all_noncrossing(k).len(),
            catalan(k)
        );
    }
}
