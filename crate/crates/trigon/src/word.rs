//! Words over a fixed list of group generators.
//!
//! A word is a literal sequence of letters `gen^exp`; no free reduction or
//! merging of adjacent letters is performed, so `s1 s1` and `s1^2` are
//! different words evaluating to the same element.
//!
//! Grammar (shared by every surface that accepts words):
//!
//! ```text
//! word := term (WS term)*
//! term := gen ("^" signed_int)?
//! gen  := one of the alphabet names, e.g. "s1" | "s2" | "s3"
//! WS   := one or more spaces or "·"
//! ```
//!
//! The empty string denotes the identity.

use crate::error::{Error, Result};
use std::fmt;

/// One letter of a word: a generator index with a nonzero exponent.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Letter {
    /// Zero-based generator index.
    pub gen: usize,
    pub exp: i32,
}

/// A word over abstract generators `0..k`, rendered through an alphabet.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<Letter>,
}

/// Generator names for the triangle-group presentation surface.
pub const TRIANGLE_ALPHABET: [&str; 3] = ["s1", "s2", "s3"];
/// Generator names for free-product (disk) presentation surfaces.
pub const DISK_ALPHABET: [&str; 2] = ["S1", "S2"];

impl Word {
    /// The empty word (identity).
    pub fn identity() -> Self {
        Word { letters: Vec::new() }
    }

    /// Single letter `gen^exp`. Panics if `exp == 0`.
    pub fn letter(gen: usize, exp: i32) -> Self {
        assert!(exp != 0, "zero exponent in word letter");
        Word { letters: vec![Letter { gen, exp }] }
    }

    /// Single generator to the first power.
    pub fn gen(gen: usize) -> Self {
        Self::letter(gen, 1)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Number of letters counted with multiplicity of their exponents.
    pub fn syllable_length(&self) -> usize {
        self.letters.iter().map(|l| l.exp.unsigned_abs() as usize).sum()
    }

    /// Literal concatenation, no simplification.
    pub fn concat(&self, rhs: &Word) -> Word {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&rhs.letters);
        Word { letters }
    }

    /// Formal inverse: letters reversed with exponents negated.
    pub fn inverse(&self) -> Word {
        let letters = self
            .letters
            .iter()
            .rev()
            .map(|l| Letter { gen: l.gen, exp: -l.exp })
            .collect();
        Word { letters }
    }

    /// Literal `k`-th power. `k` may be negative (power of the inverse);
    /// `k == 0` gives the identity.
    pub fn pow(&self, k: i32) -> Word {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..k.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// Conjugate `self · w · self^{-1}`.
    pub fn conjugate(&self, w: &Word) -> Word {
        self.concat(w).concat(&self.inverse())
    }

    /// Largest generator index occurring in the word, if any.
    pub fn max_gen(&self) -> Option<usize> {
        self.letters.iter().map(|l| l.gen).max()
    }

    /// Expand into a flat sequence of `±(gen+1)` letters, one per power step.
    /// Used by the coset enumerator.
    pub fn flat_letters(&self) -> Vec<i32> {
        let mut out = Vec::with_capacity(self.syllable_length());
        for l in &self.letters {
            let signed = if l.exp > 0 { l.gen as i32 + 1 } else { -(l.gen as i32 + 1) };
            for _ in 0..l.exp.unsigned_abs() {
                out.push(signed);
            }
        }
        out
    }

    /// Parse a word in the shared grammar against an alphabet of generator
    /// names. The empty (or all-separator) string is the identity.
    pub fn parse(input: &str, alphabet: &[&str]) -> Result<Word> {
        let mut letters = Vec::new();
        for token in input.split(|c| c == ' ' || c == '·').filter(|t| !t.is_empty()) {
            let (name, exp) = match token.split_once('^') {
                Some((name, e)) => {
                    let exp: i32 = e
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in `{token}`")))?;
                    (name, exp)
                }
                None => (token, 1),
            };
            if exp == 0 {
                return Err(Error::Parse(format!("zero exponent in `{token}`")));
            }
            let gen = alphabet
                .iter()
                .position(|&a| a == name)
                .ok_or_else(|| Error::Parse(format!("unknown generator `{name}`")))?;
            letters.push(Letter { gen, exp });
        }
        Ok(Word { letters })
    }

    /// Render the word through an alphabet, space-separated.
    pub fn display(&self, alphabet: &[&str]) -> String {
        self.letters
            .iter()
            .map(|l| {
                if l.exp == 1 {
                    alphabet[l.gen].to_string()
                } else {
                    format!("{}^{}", alphabet[l.gen], l.exp)
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }
}

impl fmt::Display for Word {
    /// Default rendering uses the triangle alphabet `s1 s2 s3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display(&TRIANGLE_ALPHABET))
    }
}

/// Shorthand for building words from (gen, exp) pairs in code.
pub fn word(pairs: &[(usize, i32)]) -> Word {
    let mut w = Word::identity();
    for &(g, e) in pairs {
        w = w.concat(&Word::letter(g, e));
    }
    w
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_round_trip() {
        let w = Word::parse("s1 s2^-3 · s3^2", &TRIANGLE_ALPHABET).unwrap();
        assert_eq!(w.letters().len(), 3);
        assert_eq!(w.display(&TRIANGLE_ALPHABET), "s1 s2^-3 s3^2");
        let again = Word::parse(&w.display(&TRIANGLE_ALPHABET), &TRIANGLE_ALPHABET).unwrap();
        assert_eq!(w, again);
    }

    #[test]
    fn empty_is_identity() {
        assert!(Word::parse("", &TRIANGLE_ALPHABET).unwrap().is_empty());
        assert!(Word::parse("  ", &TRIANGLE_ALPHABET).unwrap().is_empty());
    }

    #[test]
    fn rejects_bad_tokens() {
        assert!(Word::parse("s4", &TRIANGLE_ALPHABET).is_err());
        assert!(Word::parse("s1^0", &TRIANGLE_ALPHABET).is_err());
        assert!(Word::parse("s1^x", &TRIANGLE_ALPHABET).is_err());
        assert!(Word::parse("s1", &DISK_ALPHABET).is_err());
    }

    #[test]
    fn inverse_reverses_and_negates() {
        let w = word(&[(0, 1), (1, 2)]);
        let inv = w.inverse();
        assert_eq!(inv, word(&[(1, -2), (0, -1)]));
        assert_eq!(w.inverse().inverse(), w);
    }

    #[test]
    fn flat_letters_expand_exponents() {
        let w = word(&[(0, 2), (1, -1)]);
        assert_eq!(w.flat_letters(), vec![1, 1, -2]);
    }

    #[test]
    fn pow_is_literal() {
        let w = word(&[(1, 1), (0, 1)]);
        assert_eq!(w.pow(2), word(&[(1, 1), (0, 1), (1, 1), (0, 1)]));
        assert_eq!(w.pow(-1), w.inverse());
        assert!(w.pow(0).is_empty());
    }
}
