//! Definition-level censuses of palindromes, squares, runs and Lyndon
//! factors over arbitrary integer-letter words.
//!
//! Nothing here knows about the structure of `W_k`; these scans are the
//! reference the closed forms and Algorithm LA are checked against. All of
//! them are quadratic (with early-exit comparisons) or worse, and meant for
//! words of a few thousand letters.
//!
//! Reported positions are 1-based and results are sorted by start, then by
//! length or period.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::lyndon_array::LyndonArray;
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct FactorOccurrence {
    pub start: usize,
    pub length: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct SquareOccurrence {
    pub start: usize,
    pub period: usize,
}

impl SquareOccurrence {
    pub fn length(&self) -> usize {
        2 * self.period
    }

    pub fn end(&self) -> usize {
        self.start + 2 * self.period - 1
    }
}

/// A maximal periodic factor `w[start..start+length-1]` whose minimal
/// period satisfies `length >= 2 * period`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct RunOccurrence {
    pub start: usize,
    pub length: usize,
    pub period: usize,
}

impl RunOccurrence {
    pub fn is_square(&self) -> bool {
        self.length == 2 * self.period
    }
}

/// Distinct and total counts of some kind of factor, with the occurrences
/// that were counted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CensusReport<T> {
    pub distinct: u64,
    pub total: u64,
    pub witnesses: Vec<T>,
}

/// Number of positions carrying letter `n` (`|w|_n`).
pub fn count_letter(w: &[u32], n: u32) -> u64 {
    w.iter().filter(|&&c| c == n).count() as u64
}

fn is_palindrome(f: &[u32]) -> bool {
    let n = f.len();
    (0..n / 2).all(|i| f[i] == f[n - 1 - i])
}

/// Every non-empty palindromic factor occurrence, single letters included.
pub fn palindrome_census(w: &[u32]) -> CensusReport<FactorOccurrence> {
    let mut distinct: HashSet<&[u32]> = HashSet::new();
    let mut witnesses = Vec::new();
    for s in 0..w.len() {
        for e in s + 1..=w.len() {
            let f = &w[s..e];
            if is_palindrome(f) {
                distinct.insert(f);
                witnesses.push(FactorOccurrence { start: s + 1, length: e - s });
            }
        }
    }
    CensusReport { distinct: distinct.len() as u64, total: witnesses.len() as u64, witnesses }
}

/// The set of distinct palindromic factors.
pub fn distinct_palindrome_set(w: &[u32]) -> BTreeSet<Word> {
    let mut out = BTreeSet::new();
    for s in 0..w.len() {
        for e in s + 1..=w.len() {
            if is_palindrome(&w[s..e]) {
                out.insert(Word::from(&w[s..e]));
            }
        }
    }
    out
}

fn halves_equal(w: &[u32], s: usize, p: usize) -> bool {
    w[s..s + p] == w[s + p..s + 2 * p]
}

/// Every `(start, period)` pair whose factor of length `2 * period` has two
/// identical halves. The half is not required to be primitive.
pub fn square_census(w: &[u32]) -> CensusReport<SquareOccurrence> {
    let n = w.len();
    let mut distinct: HashSet<&[u32]> = HashSet::new();
    let mut witnesses = Vec::new();
    for s in 0..n {
        for p in 1..=(n - s) / 2 {
            if halves_equal(w, s, p) {
                distinct.insert(&w[s..s + 2 * p]);
                witnesses.push(SquareOccurrence { start: s + 1, period: p });
            }
        }
    }
    CensusReport { distinct: distinct.len() as u64, total: witnesses.len() as u64, witnesses }
}

pub fn distinct_square_set(w: &[u32]) -> BTreeSet<Word> {
    square_census(w).witnesses.iter().map(|o| Word::from(&w[o.start - 1..o.end()])).collect()
}

/// Squares whose extent covers both `boundary` and `boundary + 1` (1-based),
/// i.e. squares that cross the cut after position `boundary`.
pub fn straddling_square_census(w: &[u32], boundary: usize) -> Result<CensusReport<SquareOccurrence>> {
    if boundary < 1 || boundary >= w.len() {
        return Err(Error::Boundary { boundary, len: w.len() });
    }
    let all = square_census(w);
    let witnesses: Vec<_> = all.witnesses.into_iter().filter(|o| o.start <= boundary && o.end() > boundary).collect();
    let distinct: HashSet<&[u32]> = witnesses.iter().map(|o| &w[o.start - 1..o.end()]).collect();
    Ok(CensusReport { distinct: distinct.len() as u64, total: witnesses.len() as u64, witnesses })
}

fn has_period(f: &[u32], q: usize) -> bool {
    (q..f.len()).all(|i| f[i] == f[i - q])
}

/// All runs, each reported once at the leftmost position of its maximal
/// extension with its minimal period.
///
/// For every candidate period `p` the positions `i` with `w[i] = w[i+p]`
/// are grouped into maximal blocks; a block of `b` positions is a factor of
/// length `b + p` with period `p`, maximal in both directions. It is a run
/// when `b >= p` and `p` is its least period.
pub fn run_census(w: &[u32]) -> Vec<RunOccurrence> {
    let n = w.len();
    let mut runs = Vec::new();
    for p in 1..=n / 2 {
        let mut i = 0;
        while i + p < n {
            if w[i] != w[i + p] {
                i += 1;
                continue;
            }
            let a = i;
            while i + p < n && w[i] == w[i + p] {
                i += 1;
            }
            let length = i - a + p;
            if length >= 2 * p {
                let f = &w[a..a + length];
                if (1..p).all(|q| !has_period(f, q)) {
                    runs.push(RunOccurrence { start: a + 1, length, period: p });
                }
            }
        }
    }
    runs.sort();
    runs
}

/// Lyndon test by the proper-suffix characterization: `w` is Lyndon iff it
/// is strictly smaller than each of its proper suffixes. Non-primitive words
/// are rejected explicitly.
pub fn is_lyndon(w: &[u32]) -> Result<bool> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    Ok(is_primitive(w) && (1..w.len()).all(|i| w < &w[i..]))
}

fn is_primitive(w: &[u32]) -> bool {
    let n = w.len();
    (1..n).filter(|&q| n.is_multiple_of(q)).all(|q| !has_period(w, q))
}

/// Length of the longest Lyndon prefix of `s`.
///
/// This is the first factor of the Lyndon factorization: scan while the
/// text stays a prefix of a power of a Lyndon word, then the period of that
/// power is the answer.
fn longest_lyndon_prefix(s: &[u32]) -> usize {
    let (mut k, mut j) = (0, 1);
    while j < s.len() && s[k] <= s[j] {
        if s[k] < s[j] {
            k = 0;
        } else {
            k += 1;
        }
        j += 1;
    }
    j - k
}

/// Quadratic Lyndon array: for each position, the longest Lyndon prefix of
/// the suffix starting there.
pub fn lyndon_array_bruteforce(w: &[u32]) -> Result<LyndonArray> {
    if w.is_empty() {
        return Err(Error::EmptyWord);
    }
    let ell = (0..w.len()).map(|i| (i + longest_lyndon_prefix(&w[i..])) as u64).collect();
    Ok(LyndonArray::from_ell(ell))
}

fn distinct_factors(w: &[u32]) -> HashSet<&[u32]> {
    let mut set = HashSet::new();
    for s in 0..w.len() {
        for e in s + 1..=w.len() {
            set.insert(&w[s..e]);
        }
    }
    set
}

/// Number of distinct Lyndon factors, keyed by their first letter. Letters
/// that start no Lyndon factor are absent from the map.
pub fn lyndon_factor_census(w: &[u32]) -> BTreeMap<u32, u64> {
    let mut by_letter = BTreeMap::new();
    for f in distinct_factors(w) {
        if is_lyndon(f).unwrap_or(false) {
            *by_letter.entry(f[0]).or_insert(0) += 1;
        }
    }
    by_letter
}

/// Lyndon factors as a census: `distinct` counts distinct Lyndon factors,
/// `total` counts occurrences, witnesses are the first occurrences of the
/// distinct ones.
pub fn lyndon_census(w: &[u32]) -> CensusReport<FactorOccurrence> {
    let mut seen: HashSet<&[u32]> = HashSet::new();
    let mut witnesses = Vec::new();
    let mut total = 0;
    for s in 0..w.len() {
        for e in s + 1..=w.len() {
            let f = &w[s..e];
            if seen.contains(f) {
                total += 1;
                continue;
            }
            if is_lyndon(f).unwrap_or(false) {
                seen.insert(f);
                total += 1;
                witnesses.push(FactorOccurrence { start: s + 1, length: e - s });
            }
        }
    }
    witnesses.sort();
    CensusReport { distinct: seen.len() as u64, total, witnesses }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::word_core::{fibonacci_word, zww};

    fn w(s: &str) -> Vec<u32> {
        s.bytes().map(|b| (b - b'0') as u32).collect()
    }

    #[test]
    fn letter_counts() {
        assert_eq!(count_letter(&w("01223"), 2), 2);
        assert_eq!(count_letter(&w("01223"), 7), 0);
        assert_eq!(count_letter(&w("0122323423445"), 4), 3);
    }

    #[test]
    fn palindromes() {
        let r = palindrome_census(&w("01223"));
        assert_eq!(r.total, 6);
        let r = palindrome_census(&w("0"));
        assert_eq!((r.total, r.distinct), (1, 1));
        let r = palindrome_census(&w("01223234"));
        assert_eq!((r.total, r.distinct), (11, 8));
        assert!(palindrome_census(&[]).witnesses.is_empty());
    }

    #[test]
    fn squares() {
        let z5 = w("0122323423445");
        let r = square_census(&z5);
        assert_eq!((r.total, r.distinct), (4, 4));
        let expect: BTreeSet<Word> = ["22", "2323", "234234", "44"].iter().map(|s| Word::from(w(s))).collect();
        assert_eq!(distinct_square_set(&z5), expect);
        assert_eq!(square_census(&w("7")).total, 0);
        let r = square_census(&w("0100101001001"));
        assert_eq!((r.total, r.distinct), (11, 8));
        // non-primitive halves count too
        let r = square_census(&w("0000"));
        assert_eq!((r.total, r.distinct), (4, 2));
    }

    #[test]
    fn straddling() {
        let r = straddling_square_census(&w("0122323423445"), 8).unwrap();
        assert_eq!(r.total, 1);
        assert_eq!(r.witnesses, vec![SquareOccurrence { start: 6, period: 3 }]);
        assert_eq!(straddling_square_census(&w("012"), 2).unwrap().total, 0);
        assert_eq!(straddling_square_census(&w("00"), 1).unwrap().total, 1);
        assert!(straddling_square_census(&w("00"), 2).is_err());
        assert!(straddling_square_census(&w("00"), 0).is_err());
    }

    #[test]
    fn runs() {
        let r = run_census(&w("0122323423445"));
        let tuples: Vec<_> = r.iter().map(|r| (r.start, r.length, r.period)).collect();
        assert_eq!(tuples, vec![(3, 2, 1), (4, 4, 2), (6, 6, 3), (11, 2, 1)]);
        let r = run_census(&w("010010"));
        let tuples: Vec<_> = r.iter().map(|r| (r.start, r.length, r.period)).collect();
        assert_eq!(tuples, vec![(1, 6, 3), (3, 2, 1)]);
        assert!(run_census(&w("5")).is_empty());
        // aaaa is one run of period 1, not also one of period 2
        let r = run_census(&w("0000"));
        assert_eq!(r, vec![RunOccurrence { start: 1, length: 4, period: 1 }]);
    }

    #[test]
    fn lyndon() {
        assert!(is_lyndon(&w("01223")).unwrap());
        assert!(!is_lyndon(&w("22")).unwrap());
        assert!(is_lyndon(&w("0")).unwrap());
        assert!(!is_lyndon(&w("0101")).unwrap());
        assert!(!is_lyndon(&w("10")).unwrap());
        assert!(is_lyndon(&w("00101")).unwrap());
        assert_eq!(is_lyndon(&[]), Err(Error::EmptyWord));
    }

    #[test]
    fn lyndon_array_examples() {
        // a -> 0, b -> 1
        let x = w("0100101001");
        let la = lyndon_array_bruteforce(&x).unwrap();
        assert_eq!(la.lambda(), vec![2, 1, 5, 2, 1, 2, 1, 3, 2, 1]);
        assert_eq!(la.ell(), &[2, 2, 7, 5, 5, 7, 7, 10, 10, 10]);
        let la = lyndon_array_bruteforce(&w("01223234")).unwrap();
        assert_eq!(la.ell(), &[8, 8, 8, 8, 5, 8, 8, 8]);
        assert_eq!(lyndon_array_bruteforce(&w("4")).unwrap().lambda(), vec![1]);
        assert_eq!(lyndon_array_bruteforce(&[]), Err(Error::EmptyWord));
    }

    #[test]
    fn lyndon_counts() {
        let c = lyndon_factor_census(&w("01223"));
        assert_eq!(c, BTreeMap::from([(0, 5), (1, 4), (2, 3), (3, 1)]));
        assert_eq!(lyndon_factor_census(&w("0")), BTreeMap::from([(0, 1)]));
        let c5 = lyndon_factor_census(&zww(5).unwrap());
        assert_eq!(c5[&2], 18);
        let census = lyndon_census(&zww(5).unwrap());
        assert_eq!(census.distinct, c5.values().sum::<u64>());
        assert!(census.total >= census.distinct);
    }

    #[test]
    fn fibonacci_word_squares() {
        let r = square_census(&fibonacci_word(4).unwrap());
        assert_eq!((r.total, r.distinct), (4, 4));
        let r = square_census(&fibonacci_word(3).unwrap());
        assert_eq!((r.total, r.distinct), (1, 1));
    }
}
