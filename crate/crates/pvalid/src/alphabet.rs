//! Letters over a complementary alphabet, words, parsing and balance counts.
//!
//! An alphabet of size `m` consists of `m` complementary pairs: for every
//! base index `b < m` there is a plain letter and a barred letter, and the
//! two are complements of each other. The compact text form writes the
//! plain letter of base `b` as the uppercase Latin letter `'A' + b` and the
//! barred letter as the corresponding lowercase letter, so `"Aa"` is a
//! plain/barred pair of base 0. A numeric fallback (`"+1,-1,+2"`, bases
//! 1-based, sign = polarity) covers alphabets with more than 26 pairs.
//!
//! Positions are 1-based in everything user-visible (pair lists, error
//! messages); slices are 0-based internally.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

/// One symbol of a complementary alphabet: a base index plus a polarity.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    base: u32,
    barred: bool,
}

impl Letter {
    pub fn new(base: u32, barred: bool) -> Self {
        Letter { base, barred }
    }

    /// The plain (unbarred) letter of the given base.
    pub fn plain(base: u32) -> Self {
        Letter { base, barred: false }
    }

    /// The barred letter of the given base.
    pub fn barred(base: u32) -> Self {
        Letter { base, barred: true }
    }

    pub fn base(self) -> u32 {
        self.base
    }

    pub fn is_barred(self) -> bool {
        self.barred
    }

    /// Same base, flipped polarity. An involution.
    pub fn complement(self) -> Self {
        Letter {
            base: self.base,
            barred: !self.barred,
        }
    }

    /// True iff the two letters form a complementary pair.
    pub fn is_complement_of(self, other: Letter) -> bool {
        self.base == other.base && self.barred != other.barred
    }

    /// Lexicographic code consistent with compact text order (A < a < B < b ...).
    pub(crate) fn code(self) -> u64 {
        u64::from(self.base) * 2 + u64::from(self.barred)
    }

    pub(crate) fn from_code(code: u64) -> Self {
        Letter {
            base: (code / 2) as u32,
            barred: code % 2 == 1,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.base <= 25 {
            let start = if self.barred { b'a' } else { b'A' };
            write!(f, "{}", (start + self.base as u8) as char)
        } else {
            write!(f, "{}{}", if self.barred { '-' } else { '+' }, self.base + 1)
        }
    }
}

/// A finite sequence of [`Letter`]s; the primary sequence laid along the circle.
///
/// Words may be unbalanced; only matching-related operations require balance.
/// The derived ordering is lexicographic and agrees with compact text order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

/// Error raised while parsing a word from text, naming the offending
/// 1-based position (compact form) or entry (numeric form).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseWordError {
    #[error("position {position}: {found:?} is not one of the first {m} alphabet letters")]
    LetterOutOfRange { position: usize, found: char, m: u32 },
    #[error("position {position}: {found:?} is not an ASCII Latin letter")]
    NotALetter { position: usize, found: char },
    #[error("entry {entry}: {text:?} is not a signed nonzero base index")]
    BadNumericEntry { entry: usize, text: String },
}

/// Error raised when a word cannot be written in compact form.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("base index {base} exceeds 25; use the numeric form instead")]
pub struct CompactFormatError {
    pub base: u32,
}

impl Word {
    pub fn new(letters: Vec<Letter>) -> Self {
        Word { letters }
    }

    pub fn empty() -> Self {
        Word::default()
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    /// The letter at 1-based position `pos`.
    pub fn letter_at(&self, pos: usize) -> Option<Letter> {
        if pos == 0 {
            return None;
        }
        self.letters.get(pos - 1).copied()
    }

    /// Parse the compact form: uppercase = plain, lowercase = barred, base =
    /// alphabetic index. Only the first `m` alphabet letters are admitted
    /// (`m <= 26`); the empty string is the empty word.
    pub fn parse_compact(text: &str, m: u32) -> Result<Self, ParseWordError> {
        let mut letters = Vec::with_capacity(text.len());
        for (idx, ch) in text.chars().enumerate() {
            let position = idx + 1;
            let (base, barred) = match ch {
                'A'..='Z' => (ch as u32 - 'A' as u32, false),
                'a'..='z' => (ch as u32 - 'a' as u32, true),
                _ => return Err(ParseWordError::NotALetter { position, found: ch }),
            };
            if base >= m {
                return Err(ParseWordError::LetterOutOfRange {
                    position,
                    found: ch,
                    m,
                });
            }
            letters.push(Letter::new(base, barred));
        }
        Ok(Word { letters })
    }

    /// Parse the numeric fallback form `"+1,-1,+2"`: comma-separated signed
    /// integers, `+k` = plain base `k`, `-k` = barred base `k`, bases 1-based.
    pub fn parse_numeric(text: &str) -> Result<Self, ParseWordError> {
        if text.is_empty() {
            return Ok(Word::empty());
        }
        let mut letters = Vec::new();
        for (idx, item) in text.split(',').enumerate() {
            let entry = idx + 1;
            let bad = || ParseWordError::BadNumericEntry {
                entry,
                text: item.to_string(),
            };
            let (barred, digits) = match item.as_bytes().first() {
                Some(b'+') => (false, &item[1..]),
                Some(b'-') => (true, &item[1..]),
                _ => (false, item),
            };
            let value: u32 = digits.parse().map_err(|_| bad())?;
            if value == 0 {
                return Err(bad());
            }
            letters.push(Letter::new(value - 1, barred));
        }
        Ok(Word { letters })
    }

    /// Parse either text form, auto-detected: anything starting with a digit
    /// or a sign is numeric, otherwise compact over the full 26-pair alphabet.
    pub fn parse(text: &str) -> Result<Self, ParseWordError> {
        match text.as_bytes().first() {
            Some(b'+') | Some(b'-') | Some(b'0'..=b'9') => Self::parse_numeric(text),
            _ => Self::parse_compact(text, 26),
        }
    }

    /// Compact text form; fails if any base index exceeds 25.
    pub fn compact(&self) -> Result<String, CompactFormatError> {
        let mut out = String::with_capacity(self.letters.len());
        for letter in &self.letters {
            if letter.base() > 25 {
                return Err(CompactFormatError { base: letter.base() });
            }
            let start = if letter.is_barred() { b'a' } else { b'A' };
            out.push((start + letter.base() as u8) as char);
        }
        Ok(out)
    }

    /// Numeric text form, always available.
    pub fn numeric(&self) -> String {
        self.letters
            .iter()
            .map(|l| format!("{}{}", if l.is_barred() { '-' } else { '+' }, l.base() + 1))
            .collect::<Vec<_>>()
            .join(",")
    }

    /// Per-base plain/barred occurrence counts.
    pub fn balance_stats(&self) -> BalanceStats {
        let mut counts: BTreeMap<u32, BaseCount> = BTreeMap::new();
        for letter in &self.letters {
            let entry = counts.entry(letter.base()).or_default();
            if letter.is_barred() {
                entry.barred += 1;
            } else {
                entry.plain += 1;
            }
        }
        BalanceStats { counts }
    }

    /// True iff every base occurs equally often plain and barred. A
    /// necessary condition for any valid matching to exist.
    pub fn is_balanced(&self) -> bool {
        self.balance_stats().is_balanced()
    }

    /// Left-rotation by `r` positions (cyclic).
    pub fn rotated(&self, r: usize) -> Word {
        if self.letters.is_empty() {
            return self.clone();
        }
        let r = r % self.letters.len();
        let mut letters = Vec::with_capacity(self.letters.len());
        letters.extend_from_slice(&self.letters[r..]);
        letters.extend_from_slice(&self.letters[..r]);
        Word { letters }
    }

    /// Largest base index present, if any.
    pub fn max_base(&self) -> Option<u32> {
        self.letters.iter().map(|l| l.base()).max()
    }

    /// Smallest alphabet size this word fits in (at least 1).
    pub fn inferred_alphabet_size(&self) -> u32 {
        self.max_base().map_or(1, |b| b + 1)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<T: IntoIterator<Item = Letter>>(iter: T) -> Self {
        Word {
            letters: iter.into_iter().collect(),
        }
    }
}

impl fmt::Display for Word {
    /// Compact form when every base fits, numeric form otherwise.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.compact() {
            Ok(s) => f.write_str(&s),
            Err(_) => f.write_str(&self.numeric()),
        }
    }
}

/// Plain/barred occurrence counts for one base.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct BaseCount {
    pub plain: u64,
    pub barred: u64,
}

/// Exact per-base occurrence counts of a word.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BalanceStats {
    counts: BTreeMap<u32, BaseCount>,
}

impl BalanceStats {
    /// Counts for a base; zero for bases that do not occur.
    pub fn count(&self, base: u32) -> BaseCount {
        self.counts.get(&base).copied().unwrap_or_default()
    }

    /// Bases that occur at least once, ascending.
    pub fn bases(&self) -> impl Iterator<Item = (u32, BaseCount)> + '_ {
        self.counts.iter().map(|(&b, &c)| (b, c))
    }

    /// Every base has equal plain and barred counts (which forces even total length).
    pub fn is_balanced(&self) -> bool {
        self.counts.values().all(|c| c.plain == c.barred)
    }

    /// Plain count equals barred count for the given base.
    pub fn is_balanced_in(&self, base: u32) -> bool {
        let c = self.count(base);
        c.plain == c.barred
    }

    /// Sum of all plain and barred counts; equals the word length.
    pub fn total(&self) -> u64 {
        self.counts.values().map(|c| c.plain + c.barred).sum()
    }
}
