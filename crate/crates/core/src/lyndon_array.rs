//! The Lyndon array of `W_k` in linear time and constant extra space.
//!
//! `W_k = W_{k-1} · (2 ⊕ W_{k-2})`, and the appended block is a shifted copy
//! of a prefix, so its Lyndon array entries can be copied from the prefix
//! with a shift. Two kinds of position need a different value:
//!
//! - the leading `2` of each appended block, whose longest Lyndon factor
//!   runs to the end of the final word, and
//! - positions whose source factor ran to the end of the final word; their
//!   copy runs to the end of the current block.

use crate::error::{Error, Result};
use crate::word::Word;
use crate::word_core::LengthCap;

/// Longest-Lyndon-factor data for each position of a host word, stored as
/// 1-based end positions (`ℒ`). Lengths (`λ`) are derived on demand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LyndonArray {
    ell: Vec<u64>,
}

impl LyndonArray {
    pub fn from_ell(ell: Vec<u64>) -> Self {
        LyndonArray { ell }
    }

    pub fn ell(&self) -> &[u64] {
        &self.ell
    }

    pub fn into_ell(self) -> Vec<u64> {
        self.ell
    }

    pub fn len(&self) -> usize {
        self.ell.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ell.is_empty()
    }

    pub fn lambda(&self) -> Vec<u64> {
        ell_to_lambda(&self.ell)
    }
}

/// `λ[i] = ℒ[i] - i + 1` with 1-based `i`.
pub fn ell_to_lambda(ell: &[u64]) -> Vec<u64> {
    ell.iter().enumerate().map(|(i, &e)| e - i as u64).collect()
}

#[derive(Debug, Clone, Copy)]
pub struct LaOptions {
    /// Also build `W_k` alongside `ℒ`. Turning this off leaves only the
    /// `ℒ` buffer and a handful of registers.
    pub materialize_word: bool,
    pub cap: LengthCap,
}

impl Default for LaOptions {
    fn default() -> Self {
        LaOptions { materialize_word: true, cap: LengthCap::default() }
    }
}

#[derive(Debug, Clone)]
pub struct LaOutput {
    pub word: Option<Word>,
    pub array: LyndonArray,
    /// Number of inner-loop iterations executed; `f_{k+2} - 2` for `k >= 1`.
    pub iterations: u64,
}

/// `W_k` and its Lyndon array.
pub fn algorithm_la(k: u32) -> Result<(Word, LyndonArray)> {
    let out = algorithm_la_with(k, &LaOptions::default())?;
    Ok((out.word.expect("word requested"), out.array))
}

pub fn algorithm_la_with(k: u32, opts: &LaOptions) -> Result<LaOutput> {
    let mut ell = Vec::new();
    let mut word = Vec::new();
    let iterations = algorithm_la_into(k, &opts.cap, &mut ell, opts.materialize_word.then_some(&mut word))?;
    Ok(LaOutput { word: opts.materialize_word.then(|| Word::new(word)), array: LyndonArray::from_ell(ell), iterations })
}

/// Algorithm LA writing into caller-owned buffers, which are cleared and
/// refilled with `ℒ` (and `W_k` when `word` is given). Reusing the buffers
/// across calls avoids a fresh allocation per call. Returns the inner-loop
/// iteration count.
pub fn algorithm_la_into(k: u32, cap: &LengthCap, ell: &mut Vec<u64>, mut word: Option<&mut Vec<u32>>) -> Result<u64> {
    let wk = cap.check(k)?;
    let n = wk as usize;
    ell.clear();
    ell.reserve(n);
    if let Some(word) = word.as_deref_mut() {
        word.clear();
        word.reserve(n);
    }
    if k == 0 {
        ell.push(1);
        if let Some(word) = word {
            word.push(0);
        }
        return Ok(0);
    }

    // Position p (1-based) is pushed as index p - 1; every source index is
    // already filled when it is read.
    ell.extend([wk, wk]);
    if let Some(word) = word.as_deref_mut() {
        word.extend([0, 1]);
    }
    let mut w1: u64 = 2; // w_{-1}
    let mut w2: u64 = 1; // w_{-2}
    let mut iterations = 0u64;

    for _ in 2..=k {
        let w = w1.checked_add(w2).ok_or(Error::Overflow("Lyndon array register"))?;
        for p in w1 + 1..=w {
            let src = (p - w1 - 1) as usize;
            if let Some(word) = word.as_deref_mut() {
                word.push(word[src] + 2);
            }
            ell.push(if p == w1 + 1 {
                wk
            } else if ell[src] == wk {
                w
            } else {
                ell[src] + w1
            });
            iterations += 1;
        }
        w2 = w1;
        w1 = w;
    }
    Ok(iterations)
}

/// Structural self-test: every position `i >= 2` of `W_k` carrying the
/// letter 2 has `ℒ[i] = |W_k|`.
pub fn two_positions_full_extent_check(k: u32) -> Result<bool> {
    if k < 2 {
        return Err(Error::IndexTooSmall { op: "two_positions_full_extent_check", min: 2, k });
    }
    let (word, array) = algorithm_la(k)?;
    let wk = word.len() as u64;
    Ok(word.iter().zip(array.ell()).skip(1).filter(|(&c, _)| c == 2).all(|(_, &e)| e == wk))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factor_analysis::lyndon_array_bruteforce;
    use crate::word_core::{fib, zww};

    #[test]
    fn small_arrays() {
        assert_eq!(algorithm_la(0).unwrap().1.ell(), &[1]);
        assert_eq!(algorithm_la(1).unwrap().1.ell(), &[2, 2]);
        assert_eq!(algorithm_la(4).unwrap().1.ell(), &[8, 8, 8, 8, 5, 8, 8, 8]);
        assert_eq!(algorithm_la(5).unwrap().1.ell(), &[13, 13, 13, 13, 5, 13, 8, 8, 13, 13, 13, 13, 13]);
    }

    #[test]
    fn lambda_from_ell() {
        assert_eq!(ell_to_lambda(&[2, 2]), vec![2, 1]);
        assert_eq!(ell_to_lambda(&[2, 2, 7, 5, 5, 7, 7, 10, 10, 10]), vec![2, 1, 5, 2, 1, 2, 1, 3, 2, 1]);
        assert_eq!(ell_to_lambda(&[8, 8, 8, 8, 5, 8, 8, 8]), vec![8, 7, 6, 5, 1, 3, 2, 1]);
    }

    #[test]
    fn matches_bruteforce() {
        for k in 0..=12 {
            let (word, array) = algorithm_la(k).unwrap();
            assert_eq!(word, zww(k).unwrap());
            assert_eq!(array, lyndon_array_bruteforce(&word).unwrap(), "k={k}");
        }
    }

    #[test]
    fn without_word() {
        let opts = LaOptions { materialize_word: false, ..LaOptions::default() };
        let out = algorithm_la_with(9, &opts).unwrap();
        assert!(out.word.is_none());
        assert_eq!(out.array, algorithm_la(9).unwrap().1);
    }

    #[test]
    fn iteration_count() {
        for k in 1..=25 {
            let out = algorithm_la_with(k, &LaOptions { materialize_word: false, ..Default::default() }).unwrap();
            assert_eq!(out.iterations, fib(k + 2).unwrap() - 2);
        }
    }

    #[test]
    fn digit_two_rule() {
        assert!(two_positions_full_extent_check(2).unwrap());
        assert!(two_positions_full_extent_check(4).unwrap());
        assert!(two_positions_full_extent_check(12).unwrap());
        assert!(two_positions_full_extent_check(1).is_err());
    }

    #[test]
    fn reused_buffers() {
        let (mut ell, mut word) = (Vec::new(), Vec::new());
        for k in [9, 3, 0, 7] {
            algorithm_la_into(k, &LengthCap::default(), &mut ell, Some(&mut word)).unwrap();
            let (w, a) = algorithm_la(k).unwrap();
            assert_eq!((word.as_slice(), ell.as_slice()), (w.letters(), a.ell()));
        }
    }

    #[test]
    fn cap_respected() {
        let opts = LaOptions { cap: LengthCap::new(100), ..Default::default() };
        assert!(matches!(algorithm_la_with(10, &opts), Err(Error::LengthCap { .. })));
    }
}
