use std::fmt;

use serde::{Deserialize, Serialize};

use super::{Group, WordSyntax};
use crate::error::{Error, Result};

/// A reduced word in the free product `Z2 * ... * Z2`.
///
/// Letters are generator indices starting at 1 and printed as `a, b, c, ...`.
/// Each generator is an involution, so a word is reduced iff no two adjacent
/// letters are equal. The rank `g` is not stored: a word is an element of
/// every free product with at least `max_letter` factors.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct FreeProductWord {
    letters: Vec<u8>,
}

/// Largest generator index accepted by the text syntax (`a` ..= `w`).
pub const MAX_LETTER: u8 = 23;

impl FreeProductWord {
    pub fn generator(letter: u8) -> Self {
        assert!(letter >= 1, "generator indices start at 1");
        FreeProductWord { letters: vec![letter] }
    }

    /// Builds the reduced form of an arbitrary letter sequence.
    pub fn from_letters(letters: impl IntoIterator<Item = u8>) -> Result<Self> {
        let mut word = FreeProductWord::default();
        for letter in letters {
            if letter == 0 {
                return Err(Error::Parse("generator index 0".into()));
            }
            word.push(letter);
        }
        Ok(word)
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn max_letter(&self) -> u8 {
        self.letters.iter().copied().max().unwrap_or(0)
    }

    fn push(&mut self, letter: u8) {
        if self.letters.last() == Some(&letter) {
            self.letters.pop();
        } else {
            self.letters.push(letter);
        }
    }

    /// The homomorphism `Z2^{*g} → Z2^{*(g-1)}` killing generator `g`.
    pub fn project_last_generator(&self, g: u8) -> FreeProductWord {
        let mut out = FreeProductWord::default();
        for &letter in &self.letters {
            if letter != g {
                out.push(letter);
            }
        }
        out
    }

    pub fn letter_symbol(letter: u8) -> char {
        (b'a' + letter - 1) as char
    }
}

impl Group for FreeProductWord {
    fn identity() -> Self {
        FreeProductWord::default()
    }

    fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for &letter in &other.letters {
            out.push(letter);
        }
        out
    }

    fn inverse(&self) -> Self {
        FreeProductWord { letters: self.letters.iter().rev().copied().collect() }
    }

    fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }
}

impl WordSyntax for FreeProductWord {
    fn generator(symbol: char) -> Option<Self> {
        if symbol.is_ascii_lowercase() {
            let letter = symbol as u8 - b'a' + 1;
            (letter <= MAX_LETTER).then(|| FreeProductWord::generator(letter))
        } else {
            None
        }
    }
}

impl fmt::Display for FreeProductWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for &letter in &self.letters {
            write!(f, "{}", Self::letter_symbol(letter))?;
        }
        Ok(())
    }
}

impl fmt::Debug for FreeProductWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
