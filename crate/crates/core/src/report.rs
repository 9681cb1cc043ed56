//! Serialized shapes shared by the CLI: census JSON, letter tables and the
//! Lyndon-array text format.

use std::collections::{BTreeMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factor_analysis::{CensusReport, FactorOccurrence, RunOccurrence, SquareOccurrence};
use crate::lyndon_array::LyndonArray;
use crate::word::Word;

/// `{"what": ..., "distinct": n, "total": n, "witnesses": [[start, x], ...]}`
/// where `x` is a length for palindromes, runs and Lyndon factors and a
/// period for squares. Starts are 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusJson {
    pub what: String,
    pub distinct: u64,
    pub total: u64,
    pub witnesses: Vec<[u64; 2]>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub by_letter: Option<Vec<[u64; 2]>>,
}

impl CensusJson {
    pub fn palindromes(r: &CensusReport<FactorOccurrence>) -> Self {
        Self::from_factors("palindromes", r)
    }

    pub fn squares(r: &CensusReport<SquareOccurrence>) -> Self {
        CensusJson {
            what: "squares".into(),
            distinct: r.distinct,
            total: r.total,
            witnesses: r.witnesses.iter().map(|o| [o.start as u64, o.period as u64]).collect(),
            by_letter: None,
        }
    }

    /// `distinct` counts distinct run factors, `total` counts runs.
    pub fn runs(w: &[u32], runs: &[RunOccurrence]) -> Self {
        let distinct: HashSet<&[u32]> = runs.iter().map(|r| &w[r.start - 1..r.start - 1 + r.length]).collect();
        CensusJson {
            what: "runs".into(),
            distinct: distinct.len() as u64,
            total: runs.len() as u64,
            witnesses: runs.iter().map(|r| [r.start as u64, r.length as u64]).collect(),
            by_letter: None,
        }
    }

    pub fn lyndon(r: &CensusReport<FactorOccurrence>, by_letter: &BTreeMap<u32, u64>) -> Self {
        let mut out = Self::from_factors("lyndon", r);
        out.by_letter = Some(by_letter.iter().map(|(&c, &n)| [c as u64, n]).collect());
        out
    }

    fn from_factors(what: &str, r: &CensusReport<FactorOccurrence>) -> Self {
        CensusJson {
            what: what.into(),
            distinct: r.distinct,
            total: r.total,
            witnesses: r.witnesses.iter().map(|o| [o.start as u64, o.length as u64]).collect(),
            by_letter: None,
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = format!("what {}\ndistinct {}\ntotal {}\n", self.what, self.distinct, self.total);
        if let Some(by_letter) = &self.by_letter {
            s.push_str("letter count\n");
            for [c, n] in by_letter {
                s.push_str(&format!("{c} {n}\n"));
            }
        }
        s.push_str("witnesses\n");
        for [a, b] in &self.witnesses {
            s.push_str(&format!("{a} {b}\n"));
        }
        s
    }
}

/// `{"what": "letters", "length": n, "counts": [[letter, count], ...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LetterTable {
    pub what: String,
    pub length: u64,
    pub counts: Vec<[u64; 2]>,
}

impl LetterTable {
    pub fn of(w: &[u32]) -> Self {
        let mut counts: BTreeMap<u32, u64> = BTreeMap::new();
        for &c in w {
            *counts.entry(c).or_insert(0) += 1;
        }
        LetterTable {
            what: "letters".into(),
            length: w.len() as u64,
            counts: counts.into_iter().map(|(c, n)| [c as u64, n]).collect(),
        }
    }

    pub fn to_text(&self) -> String {
        let mut s = String::from("letter count\n");
        for [c, n] in &self.counts {
            s.push_str(&format!("{c} {n}\n"));
        }
        s
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LyndonArrayJson {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<u32>,
    pub length: u64,
    pub letters: Vec<u32>,
    pub ell: Vec<u64>,
    pub lambda: Vec<u64>,
}

impl LyndonArrayJson {
    pub fn new(k: Option<u32>, word: &Word, array: &LyndonArray) -> Self {
        LyndonArrayJson {
            k,
            length: word.len() as u64,
            letters: word.letters().to_vec(),
            ell: array.ell().to_vec(),
            lambda: array.lambda(),
        }
    }
}

/// Lyndon-array text format: an optional `#` header line, the word in word
/// text format, then the 1-based `ℒ` values separated by single spaces.
pub fn lyndon_array_text(header: Option<&str>, word: &Word, array: &LyndonArray) -> String {
    let mut s = String::new();
    if let Some(h) = header {
        s.push_str("# ");
        s.push_str(h);
        s.push('\n');
    }
    s.push_str(&word.to_text());
    s.push('\n');
    let ell: Vec<String> = array.ell().iter().map(u64::to_string).collect();
    s.push_str(&ell.join(" "));
    s.push('\n');
    s
}

pub fn parse_lyndon_array_text(text: &str) -> Result<(Word, LyndonArray)> {
    let mut lines: Vec<(usize, &str)> = text.lines().enumerate().map(|(i, l)| (i + 1, l)).collect();
    if lines.first().is_some_and(|(_, l)| l.starts_with('#')) {
        lines.remove(0);
    }
    let [(wl, word_line), (el, ell_line)] = lines[..] else {
        return Err(Error::Parse { line: 1, msg: "expected a word line and an array line".into() });
    };
    let word = Word::parse_line(word_line, wl)?;
    let ell = ell_line
        .split(' ')
        .map(|t| t.parse::<u64>().map_err(|_| Error::Parse { line: el, msg: format!("bad array entry {t:?}") }))
        .collect::<Result<Vec<_>>>()?;
    if ell.len() != word.len() {
        return Err(Error::Parse { line: el, msg: "array length differs from word length".into() });
    }
    Ok((word, LyndonArray::from_ell(ell)))
}
