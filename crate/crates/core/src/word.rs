//! The `Word` carrier and its text/JSON serializations.
//!
//! A word is a finite sequence of non-negative 32-bit letters. Positions in
//! every external surface are 1-based; the backing storage is an ordinary
//! 0-based `Vec<u32>`.

use std::fmt;
use std::ops::Deref;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<u32>);

impl Word {
    pub fn new(letters: Vec<u32>) -> Self {
        Word(letters)
    }

    pub fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn letters(&self) -> &[u32] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<u32> {
        self.0
    }

    /// The factor `w[start..start+length-1]` with a 1-based `start`.
    ///
    /// Panics if the factor does not lie inside the word.
    pub fn factor(&self, start: usize, length: usize) -> &[u32] {
        assert!(start >= 1, "positions are 1-based");
        &self.0[start - 1..start - 1 + length]
    }

    pub fn concat<'a, I>(parts: I) -> Word
    where
        I: IntoIterator<Item = &'a Word>,
    {
        let mut out = Vec::new();
        for p in parts {
            out.extend_from_slice(&p.0);
        }
        Word(out)
    }

    /// Single-line text form: base-10 letters separated by one space, no
    /// trailing newline.
    pub fn to_text(&self) -> String {
        let mut s = String::with_capacity(self.0.len() * 2);
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                s.push(' ');
            }
            s.push_str(&c.to_string());
        }
        s
    }

    /// Parses one line of the word text format.
    pub fn parse_line(line: &str, line_no: usize) -> Result<Word> {
        if line.is_empty() {
            return Ok(Word::empty());
        }
        line.split(' ').map(|tok| parse_letter(tok, line_no)).collect::<Result<Vec<_>>>().map(Word)
    }

    /// Compact digit string, as the words are printed in tables. Letters
    /// above 9 are wrapped in parentheses so the rendering stays unambiguous.
    pub fn to_compact(&self) -> String {
        self.0.iter().map(|&c| if c < 10 { c.to_string() } else { format!("({c})") }).collect()
    }
}

fn parse_letter(tok: &str, line: usize) -> Result<u32> {
    if tok.is_empty() {
        return Err(Error::Parse { line, msg: "empty token (letters must be separated by exactly one space)".into() });
    }
    if tok.starts_with('-') {
        return Err(Error::Parse { line, msg: format!("negative letter {tok:?}") });
    }
    if !tok.bytes().all(|b| b.is_ascii_digit()) {
        return Err(Error::Parse { line, msg: format!("not an integer: {tok:?}") });
    }
    tok.parse::<u32>().map_err(|_| Error::Parse { line, msg: format!("letter {tok} does not fit in 32 bits") })
}

/// Parses a whole file in word text format, one word per line. A final
/// newline does not introduce an extra empty word.
pub fn parse_words(text: &str) -> Result<Vec<Word>> {
    let body = text.strip_suffix('\n').unwrap_or(text);
    if body.is_empty() {
        return Ok(Vec::new());
    }
    body.split('\n')
        .enumerate()
        .map(|(i, line)| Word::parse_line(line.strip_suffix('\r').unwrap_or(line), i + 1))
        .collect()
}

impl Deref for Word {
    type Target = [u32];
    fn deref(&self) -> &[u32] {
        &self.0
    }
}

impl From<Vec<u32>> for Word {
    fn from(v: Vec<u32>) -> Self {
        Word(v)
    }
}

impl From<&[u32]> for Word {
    fn from(v: &[u32]) -> Self {
        Word(v.to_vec())
    }
}

impl<const N: usize> From<[u32; N]> for Word {
    fn from(v: [u32; N]) -> Self {
        Word(v.to_vec())
    }
}

impl FromIterator<u32> for Word {
    fn from_iter<T: IntoIterator<Item = u32>>(iter: T) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word[{}]", self.to_text())
    }
}

/// Word JSON record: `{"k": 5, "length": 13, "letters": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WordRecord {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<u32>,
    pub length: u64,
    pub letters: Vec<u32>,
}

impl WordRecord {
    pub fn new(k: Option<u32>, word: &Word) -> Self {
        WordRecord { k, length: word.len() as u64, letters: word.letters().to_vec() }
    }

    pub fn into_word(self) -> Word {
        Word(self.letters)
    }
}
