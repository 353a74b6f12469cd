//! Letters, finite words and their elementary statistics.

use std::fmt;
use std::ops::Index;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::Integer;

use crate::error::{Error, Result};
use crate::rational::Rational;

/// Default cap on the length of any materialized word (2^24 letters).
pub const DEFAULT_MAX_WORD_LEN: usize = 1 << 24;

pub(crate) fn check_len(len: usize, limit: usize) -> Result<()> {
    if len > limit {
        Err(Error::TooLong { len, limit })
    } else {
        Ok(())
    }
}

/// A letter of the ordered binary alphabet, `a < b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    B,
}

impl Letter {
    pub const ALL: [Letter; 2] = [Letter::A, Letter::B];

    /// The other letter.
    pub fn exchange(self) -> Letter {
        match self {
            Letter::A => Letter::B,
            Letter::B => Letter::A,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::A => 'a',
            Letter::B => 'b',
        }
    }

    pub(crate) fn index(self) -> usize {
        self as usize
    }
}

impl TryFrom<char> for Letter {
    type Error = Error;

    fn try_from(c: char) -> Result<Self> {
        match c {
            'a' => Ok(Letter::A),
            'b' => Ok(Letter::B),
            other => Err(Error::InvalidLetter(other)),
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// A finite word over `{a, b}`. The empty word is a valid value.
///
/// Words order lexicographically with `a < b`, a proper prefix sorting
/// before its extensions.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    /// `x^n`.
    pub fn power(x: Letter, n: usize) -> Word {
        Word(vec![x; n])
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> Option<Letter> {
        self.0.first().copied()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn push(&mut self, x: Letter) {
        self.0.push(x);
    }

    pub fn iter(&self) -> impl DoubleEndedIterator<Item = Letter> + ExactSizeIterator + '_ {
        self.0.iter().copied()
    }

    /// `self · other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    /// The factor occupying positions `start..end` (0-based, end exclusive).
    pub fn factor(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn prefix(&self, len: usize) -> Word {
        self.factor(0, len)
    }

    pub fn suffix(&self, len: usize) -> Word {
        self.factor(self.len() - len, self.len())
    }

    pub fn is_prefix_of(&self, other: &Word) -> bool {
        other.0.starts_with(&self.0)
    }

    pub fn is_suffix_of(&self, other: &Word) -> bool {
        other.0.ends_with(&self.0)
    }

    /// The mirror image `w_n ⋯ w_1`.
    pub fn reverse(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn is_palindrome(&self) -> bool {
        self.0.iter().eq(self.0.iter().rev())
    }

    /// Letterwise exchange `a ↔ b`.
    pub fn exchange(&self) -> Word {
        Word(self.0.iter().map(|x| x.exchange()).collect())
    }

    /// `|w|_x`.
    pub fn count_letter(&self, x: Letter) -> usize {
        self.0.iter().filter(|&&y| y == x).count()
    }

    /// Whether positions congruent modulo `p` carry equal letters.
    ///
    /// Any `p >= |w|` is a period.
    pub fn has_period(&self, p: usize) -> Result<bool> {
        if p == 0 {
            return Err(Error::ZeroPeriod);
        }
        Ok(p >= self.len() || self.0[p..].iter().zip(&self.0).all(|(x, y)| x == y))
    }

    /// The least period, with `π(ε) = 1`.
    pub fn minimal_period(&self) -> usize {
        match self.0.len() {
            0 => 1,
            n => n - border_table(&self.0)[n],
        }
    }

    /// Given two periods `p` and `q` of the word, reports whether the word is
    /// long enough (`|w| >= p + q - gcd(p, q)`) to force the period
    /// `gcd(p, q)`.
    pub fn fine_wilf_collapse(&self, p: usize, q: usize) -> Result<bool> {
        for r in [p, q] {
            if !self.has_period(r)? {
                return Err(Error::MissingPeriod(r));
            }
        }
        Ok(self.len() + p.gcd(&q) >= p + q)
    }

    /// `|w|_b / |w|_a` in lowest terms, `1` for the empty word and `∞` for
    /// non-empty words without `a`.
    pub fn slope_eta(&self) -> Rational {
        if self.is_empty() {
            return Rational::one();
        }
        let b = self.count_letter(Letter::B);
        Rational::new(BigUint::from(b), BigUint::from(self.len() - b))
    }

    /// Non-empty and strictly smaller than each of its proper suffixes.
    pub fn is_lyndon(&self) -> bool {
        !self.is_empty() && (1..self.len()).all(|i| self.0[..] < self.0[i..])
    }
}

impl Index<usize> for Word {
    type Output = Letter;

    fn index(&self, i: usize) -> &Letter {
        &self.0[i]
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Word {
        Word(letters)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Word {
        Word(iter.into_iter().collect())
    }
}

impl Extend<Letter> for Word {
    fn extend<I: IntoIterator<Item = Letter>>(&mut self, iter: I) {
        self.0.extend(iter);
    }
}

/// Parses a string of `a`/`b`. The empty string and `ε` both denote the
/// empty word.
impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        if s == "ε" {
            return Ok(Word::empty());
        }
        s.chars().map(Letter::try_from).collect()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: String = self.0.iter().map(|x| x.as_char()).collect();
        f.pad(&s)
    }
}

/// `table[i]` is the length of the longest proper border of `s[..i]`.
pub(crate) fn border_table<T: PartialEq>(s: &[T]) -> Vec<usize> {
    let mut table = vec![0; s.len() + 1];
    let mut k = 0;
    for i in 1..s.len() {
        while k > 0 && s[i] != s[k] {
            k = table[k];
        }
        if s[i] == s[k] {
            k += 1;
        }
        table[i + 1] = k;
    }
    table
}

/// Shorthand for tests and examples; panics on letters other than `a`/`b`.
pub fn w(s: &str) -> Word {
    s.parse().expect("word literal over {a, b}")
}
