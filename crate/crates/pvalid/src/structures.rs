//! Noncrossing perfect matchings, rooted plane trees, and the bijection
//! between them.
//!
//! Both families are counted by the Catalan numbers: plane trees with `n`
//! edges correspond to noncrossing perfect matchings on `2n` points. The
//! correspondence used here numbers each edge traversal of a
//! counter-clockwise boundary walk (root first, children in stored order)
//! with 1..2n; an edge's pair is its (down-step, up-step) numbers. In text
//! form this is exactly the balanced-parenthesis reading of the tree, so
//! `"(())"` (a path of two edges) maps to the matching `(1,4)(2,3)` and
//! `"()()"` (a star with two children) maps to `(1,2)(3,4)`.

use std::fmt;

use thiserror::Error;

use crate::alphabet::Word;

/// A perfect pairing of the positions 1..2n, stored as `(i, j)` pairs with
/// `i < j`, sorted by first coordinate.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Matching {
    pairs: Vec<(usize, usize)>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatchingError {
    #[error("position {position} appears in more than one pair")]
    DuplicatePosition { position: usize },
    #[error("position {position} is outside 1..={size}")]
    PositionOutOfRange { position: usize, size: usize },
    #[error("pair ({position}, {position}) is degenerate")]
    DegeneratePair { position: usize },
}

impl Matching {
    /// Build a matching from unordered pairs, validating that it is perfect
    /// on 1..2n where n is the number of pairs.
    pub fn new(pairs: impl IntoIterator<Item = (usize, usize)>) -> Result<Self, MatchingError> {
        let mut pairs: Vec<(usize, usize)> = pairs
            .into_iter()
            .map(|(a, b)| if a <= b { (a, b) } else { (b, a) })
            .collect();
        pairs.sort_unstable();
        let size = pairs.len() * 2;
        let mut seen = vec![false; size + 1];
        for &(a, b) in &pairs {
            if a == b {
                return Err(MatchingError::DegeneratePair { position: a });
            }
            for p in [a, b] {
                if p == 0 || p > size {
                    return Err(MatchingError::PositionOutOfRange { position: p, size });
                }
                if seen[p] {
                    return Err(MatchingError::DuplicatePosition { position: p });
                }
                seen[p] = true;
            }
        }
        Ok(Matching { pairs })
    }

    /// The empty matching on zero points.
    pub fn empty() -> Self {
        Matching { pairs: Vec::new() }
    }

    pub(crate) fn from_sorted_pairs_unchecked(pairs: Vec<(usize, usize)>) -> Self {
        Matching { pairs }
    }

    /// Pairs sorted by first coordinate, each `(i, j)` with `i < j`.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Number of matched points, `2n`.
    pub fn point_count(&self) -> usize {
        self.pairs.len() * 2
    }

    pub fn contains_pair(&self, i: usize, j: usize) -> bool {
        let key = if i <= j { (i, j) } else { (j, i) };
        self.pairs.binary_search(&key).is_ok()
    }

    /// The position matched with `pos`, if `pos` is within range.
    pub fn partner(&self, pos: usize) -> Option<usize> {
        self.pairs.iter().find_map(|&(a, b)| {
            if a == pos {
                Some(b)
            } else if b == pos {
                Some(a)
            } else {
                None
            }
        })
    }

    /// True iff no two pairs `{a,b}`, `{c,d}` interleave as `a < c < b < d`.
    ///
    /// Chords of a circle cross exactly when their endpoints interleave in
    /// this sense, so this is the circular notion as well.
    pub fn is_noncrossing(&self) -> bool {
        let size = self.point_count();
        let mut partner = vec![0usize; size + 1];
        for &(a, b) in &self.pairs {
            partner[a] = b;
            partner[b] = a;
        }
        let mut stack = Vec::new();
        for pos in 1..=size {
            if partner[pos] > pos {
                stack.push(pos);
            } else {
                match stack.pop() {
                    Some(open) if open == partner[pos] => {}
                    _ => return false,
                }
            }
        }
        true
    }

    /// True iff the matching is noncrossing and every pair receives
    /// complementary letters when `word` is laid along the positions.
    /// A size mismatch between word and matching yields `false`.
    pub fn is_valid_for(&self, word: &Word) -> bool {
        if word.len() != self.point_count() {
            return false;
        }
        let letters = word.letters();
        self.pairs
            .iter()
            .all(|&(a, b)| letters[a - 1].is_complement_of(letters[b - 1]))
            && self.is_noncrossing()
    }

    /// Number the steps of a counter-clockwise boundary walk of `tree`;
    /// each edge becomes the pair of step numbers it receives.
    pub fn from_tree(tree: &PlaneTree) -> Matching {
        let mut pairs = Vec::with_capacity(tree.edge_count());
        let mut step = 0usize;
        fn walk(node: &PlaneTree, step: &mut usize, pairs: &mut Vec<(usize, usize)>) {
            for child in node.children() {
                *step += 1;
                let down = *step;
                walk(child, step, pairs);
                *step += 1;
                pairs.push((down, *step));
            }
        }
        walk(tree, &mut step, &mut pairs);
        pairs.sort_unstable();
        Matching { pairs }
    }

    /// All noncrossing perfect matchings on `2n` points, in lexicographic
    /// order of their sorted pair lists. There are Catalan(n) of them.
    pub fn all_noncrossing(n: usize) -> Vec<Matching> {
        let mut out = Vec::new();
        let positions: Vec<usize> = (1..=2 * n).collect();
        let mut current = Vec::with_capacity(n);
        fn rec(
            ranges: &[&[usize]],
            current: &mut Vec<(usize, usize)>,
            out: &mut Vec<Matching>,
        ) {
            let Some((&range, rest)) = ranges.split_first() else {
                let mut pairs = current.clone();
                pairs.sort_unstable();
                out.push(Matching { pairs });
                return;
            };
            if range.is_empty() {
                rec(rest, current, out);
                return;
            }
            let first = range[0];
            for idx in (1..range.len()).step_by(2) {
                current.push((first, range[idx]));
                let inside = &range[1..idx];
                let outside = &range[idx + 1..];
                let mut next: Vec<&[usize]> = Vec::with_capacity(rest.len() + 2);
                next.push(inside);
                next.push(outside);
                next.extend_from_slice(rest);
                rec(&next, current, out);
                current.pop();
            }
        }
        rec(&[&positions], &mut current, &mut out);
        out.sort_unstable();
        out
    }
}

impl fmt::Display for Matching {
    /// Sorted pair list, e.g. `(1,4)(2,3)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &(a, b) in &self.pairs {
            write!(f, "({},{})", a, b)?;
        }
        Ok(())
    }
}

/// A rooted plane tree: the order of children is significant.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct PlaneTree {
    children: Vec<PlaneTree>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StructureError {
    #[error("matching is crossing: pairs {first:?} and {second:?} interleave")]
    Crossing {
        first: (usize, usize),
        second: (usize, usize),
    },
    #[error("word length {word_len} does not match {expected} boundary steps")]
    SizeMismatch { word_len: usize, expected: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParensError {
    #[error("position {position}: expected '(' or ')', found {found:?}")]
    BadCharacter { position: usize, found: char },
    #[error("position {position}: unmatched ')'")]
    UnmatchedClose { position: usize },
    #[error("{open} unclosed '(' at end of input")]
    UnmatchedOpen { open: usize },
}

impl PlaneTree {
    /// A single node with no children (zero edges).
    pub fn leaf() -> Self {
        PlaneTree::default()
    }

    pub fn new(children: Vec<PlaneTree>) -> Self {
        PlaneTree { children }
    }

    pub fn children(&self) -> &[PlaneTree] {
        &self.children
    }

    pub fn edge_count(&self) -> usize {
        self.children
            .iter()
            .map(|c| 1 + c.edge_count())
            .sum()
    }

    /// Balanced-parenthesis form over the boundary walk: each child subtree
    /// is `(` + subtree + `)`. The 0-edge tree is the empty string.
    pub fn to_parens(&self) -> String {
        let mut out = String::with_capacity(2 * self.edge_count());
        fn emit(node: &PlaneTree, out: &mut String) {
            for child in node.children() {
                out.push('(');
                emit(child, out);
                out.push(')');
            }
        }
        emit(self, &mut out);
        out
    }

    pub fn from_parens(text: &str) -> Result<Self, ParensError> {
        let mut stack = vec![PlaneTree::leaf()];
        for (idx, ch) in text.chars().enumerate() {
            let position = idx + 1;
            match ch {
                '(' => stack.push(PlaneTree::leaf()),
                ')' => {
                    let done = stack.pop().expect("stack holds the root");
                    match stack.last_mut() {
                        Some(parent) => parent.children.push(done),
                        None => return Err(ParensError::UnmatchedClose { position }),
                    }
                }
                _ => return Err(ParensError::BadCharacter { position, found: ch }),
            }
        }
        if stack.len() != 1 {
            return Err(ParensError::UnmatchedOpen {
                open: stack.len() - 1,
            });
        }
        Ok(stack.pop().expect("root remains"))
    }

    /// Invert [`Matching::from_tree`]. Fails if the matching crosses.
    pub fn from_matching(matching: &Matching) -> Result<Self, StructureError> {
        let size = matching.point_count();
        let mut partner = vec![0usize; size + 1];
        for &(a, b) in matching.pairs() {
            partner[a] = b;
            partner[b] = a;
        }
        let mut stack = vec![(PlaneTree::leaf(), 0usize)];
        for pos in 1..=size {
            if partner[pos] > pos {
                stack.push((PlaneTree::leaf(), pos));
            } else {
                let (done, opened_at) = stack.pop().expect("stack holds the root");
                if opened_at != partner[pos] {
                    let a = (opened_at, partner[opened_at]);
                    let b = (partner[pos], pos);
                    let (first, second) = if a.0 < b.0 { (a, b) } else { (b, a) };
                    return Err(StructureError::Crossing { first, second });
                }
                stack
                    .last_mut()
                    .expect("root remains below any opened edge")
                    .0
                    .children
                    .push(done);
            }
        }
        debug_assert_eq!(stack.len(), 1);
        Ok(stack.pop().expect("root remains").0)
    }

    /// True iff every edge receives complementary letters when `word` is
    /// wrapped along the boundary walk. Errors when the word length does
    /// not equal twice the edge count.
    pub fn is_valid_for(&self, word: &Word) -> Result<bool, StructureError> {
        let expected = 2 * self.edge_count();
        if word.len() != expected {
            return Err(StructureError::SizeMismatch {
                word_len: word.len(),
                expected,
            });
        }
        Ok(Matching::from_tree(self).is_valid_for(word))
    }

    /// All plane trees with `n` edges, Catalan(n) many, in a fixed order
    /// (first-child size ascending, then recursively).
    pub fn all_with_edges(n: usize) -> Vec<PlaneTree> {
        if n == 0 {
            return vec![PlaneTree::leaf()];
        }
        let mut out = Vec::new();
        for first_edges in 0..n {
            for first in PlaneTree::all_with_edges(first_edges) {
                for rest in PlaneTree::all_with_edges(n - 1 - first_edges) {
                    let mut children = Vec::with_capacity(1 + rest.children.len());
                    children.push(first.clone());
                    children.extend(rest.children.iter().cloned());
                    out.push(PlaneTree::new(children));
                }
            }
        }
        out
    }
}

impl fmt::Display for PlaneTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_parens())
    }
}
