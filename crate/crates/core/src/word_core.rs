//! Generation of the finite ZWW words `W_k`, the finite Fibonacci words
//! `F_k`, and the block factorizations of `W_k`.
//!
//! Fibonacci numbers use the indexing `f_1 = f_2 = 1`, so `|W_k| = f_{k+2}`.
//! There is no `f_0`.

use crate::error::{Error, Result};
use crate::word::Word;

/// Largest index whose Fibonacci number fits in 64 bits (with headroom kept
/// at the same bound as the rest of the crate).
pub const MAX_FIB_INDEX: u32 = 92;

/// Largest word index that can ever be requested: `f_{88}` still fits in 64
/// bits with room for the additions the generators perform.
pub const MAX_WORD_INDEX: u32 = 86;

/// Default largest word index, `k = 40` (`f_42 = 267_914_296` letters).
pub const DEFAULT_MAX_INDEX: u32 = 40;

const FIB: [u64; MAX_FIB_INDEX as usize + 1] = {
    let mut t = [0u64; MAX_FIB_INDEX as usize + 1];
    t[1] = 1;
    t[2] = 1;
    let mut i = 3;
    while i <= MAX_FIB_INDEX as usize {
        t[i] = t[i - 1] + t[i - 2];
        i += 1;
    }
    t
};

pub fn fib(i: u32) -> Result<u64> {
    if i == 0 || i > MAX_FIB_INDEX {
        return Err(Error::FibIndex(i));
    }
    Ok(FIB[i as usize])
}

/// `|W_k| = |F_k| = f_{k+2}`.
pub fn zww_len(k: u32) -> Result<u64> {
    if k > MAX_WORD_INDEX {
        return Err(Error::IndexLimit { k, max: MAX_WORD_INDEX });
    }
    fib(k + 2)
}

/// Upper bound on the length of any generated word.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LengthCap {
    max_len: u64,
}

impl LengthCap {
    pub fn new(max_len: u64) -> Self {
        LengthCap { max_len }
    }

    /// The cap that admits exactly `W_0..=W_k`.
    pub fn for_index(k: u32) -> Self {
        LengthCap { max_len: FIB[k.min(MAX_WORD_INDEX) as usize + 2] }
    }

    pub fn max_len(&self) -> u64 {
        self.max_len
    }

    /// Largest `k` with `|W_k|` within the cap, or `None` if not even `W_0`
    /// fits.
    pub fn max_index(&self) -> Option<u32> {
        (0..=MAX_WORD_INDEX).take_while(|&k| FIB[k as usize + 2] <= self.max_len).last()
    }

    /// Returns `|W_k|` if `W_k` may be materialized.
    pub fn check(&self, k: u32) -> Result<u64> {
        let length = zww_len(k)?;
        if length > self.max_len {
            return Err(Error::LengthCap { k, length, cap: self.max_len });
        }
        Ok(length)
    }
}

impl Default for LengthCap {
    fn default() -> Self {
        LengthCap::for_index(DEFAULT_MAX_INDEX)
    }
}

/// `n ⊕ w`: adds `n` to every letter.
pub fn shift_add(n: u32, w: &[u32]) -> Result<Word> {
    w.iter().map(|&c| c.checked_add(n).ok_or(Error::LetterOverflow { letter: c, shift: n })).collect()
}

pub fn zww(k: u32) -> Result<Word> {
    zww_capped(k, &LengthCap::default())
}

/// Builds `W_k` in place with `W_{i+1} = W_i · (2 ⊕ W_{i-1})`. `W_{i-1}` is
/// a prefix of the buffer, so each step appends a shifted copy of it.
pub fn zww_capped(k: u32, cap: &LengthCap) -> Result<Word> {
    let length = cap.check(k)? as usize;
    let mut buf = Vec::with_capacity(length);
    buf.push(0);
    if k == 0 {
        return Ok(Word::new(buf));
    }
    buf.push(1);
    let mut prev = 1usize;
    for _ in 1..k {
        let cur = buf.len();
        for idx in 0..prev {
            let c = buf[idx];
            buf.push(c + 2);
        }
        prev = cur;
    }
    debug_assert_eq!(buf.len(), length);
    Ok(Word::new(buf))
}

/// The morphism `φ(2i) = (2i)(2i+1)`, `φ(2i+1) = 2i+2`.
pub fn apply_phi(w: &[u32]) -> Result<Word> {
    let mut out = Vec::with_capacity(w.len() * 2);
    for &c in w {
        let next = c.checked_add(1).ok_or(Error::LetterOverflow { letter: c, shift: 1 })?;
        if c % 2 == 0 {
            out.push(c);
            out.push(next);
        } else {
            out.push(next);
        }
    }
    Ok(Word::new(out))
}

pub fn zww_by_morphism(k: u32) -> Result<Word> {
    zww_by_morphism_capped(k, &LengthCap::default())
}

/// `φ^k(0)`. Only used to cross-check [`zww`].
pub fn zww_by_morphism_capped(k: u32, cap: &LengthCap) -> Result<Word> {
    cap.check(k)?;
    let mut w = Word::from([0]);
    for _ in 0..k {
        w = apply_phi(&w)?;
    }
    Ok(w)
}

pub fn fibonacci_word(k: u32) -> Result<Word> {
    fibonacci_word_capped(k, &LengthCap::default())
}

/// `F_k = ψ^k(0)` with `ψ(0) = 01`, `ψ(1) = 0`.
pub fn fibonacci_word_capped(k: u32, cap: &LengthCap) -> Result<Word> {
    let length = cap.check(k)? as usize;
    let mut w = vec![0u32];
    for _ in 0..k {
        let mut next = Vec::with_capacity(w.len() * 2);
        for &c in &w {
            if c == 0 {
                next.extend_from_slice(&[0, 1]);
            } else {
                next.push(0);
            }
        }
        w = next;
    }
    debug_assert_eq!(w.len(), length);
    Ok(Word::new(w))
}

pub fn reduce_mod2(w: &[u32]) -> Word {
    w.iter().map(|c| c % 2).collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FactorizationKind {
    Prefix,
    Parity,
    Suffix,
}

/// An ordered list of blocks whose concatenation is a target word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub kind: FactorizationKind,
    pub blocks: Vec<Word>,
}

impl Factorization {
    pub fn concat(&self) -> Word {
        Word::concat(&self.blocks)
    }

    pub fn block_texts(&self) -> Vec<String> {
        self.blocks.iter().map(Word::to_compact).collect()
    }
}

/// `W_k = 01 · X_0 · X_1 ··· X_{k-2}` with `X_i = 2 ⊕ W_i`, for `k >= 2`.
pub fn prefix_factorization(k: u32) -> Result<Factorization> {
    if k < 2 {
        return Err(Error::IndexTooSmall { op: "prefix_factorization", min: 2, k });
    }
    let cap = LengthCap::default();
    cap.check(k)?;
    // every W_i with i <= k-2 is a prefix of W_{k-2}
    let base = zww_capped(k - 2, &cap)?;
    let mut blocks = vec![Word::from([0, 1])];
    for i in 0..=k - 2 {
        let len = fib(i + 2)? as usize;
        blocks.push(shift_add(2, &base[..len])?);
    }
    Ok(Factorization { kind: FactorizationKind::Prefix, blocks })
}

/// The factorization by parity of the index:
///
/// ```text
/// W_{2m-1} = [ Π_{j=m..1} 2(m-j) ⊕ W_{2j-2} ] · (2m-1)
/// W_{2m}   = [ Π_{j=m..1} 2(m-j) ⊕ W_{2j-1} ] · (2m)
/// ```
pub fn parity_factorization(k: u32) -> Result<Factorization> {
    if k < 1 {
        return Err(Error::IndexTooSmall { op: "parity_factorization", min: 1, k });
    }
    let cap = LengthCap::default();
    cap.check(k)?;
    let m = k.div_ceil(2);
    let odd = k % 2 == 1;
    let top = if odd { 2 * m - 2 } else { 2 * m - 1 };
    let base = zww_capped(top, &cap)?;
    let mut blocks = Vec::with_capacity(m as usize + 1);
    for j in (1..=m).rev() {
        let idx = if odd { 2 * j - 2 } else { 2 * j - 1 };
        let len = fib(idx + 2)? as usize;
        blocks.push(shift_add(2 * (m - j), &base[..len])?);
    }
    blocks.push(Word::from([k]));
    Ok(Factorization { kind: FactorizationKind::Parity, blocks })
}

/// `S_{k,j}`: the suffix of `W_k` of length `|W_j| = f_{j+2}`, `0 <= j <= k`.
/// When `j = k - 2i` this equals `2i ⊕ W_{k-2i}`.
pub fn suffix_block(k: u32, j: u32) -> Result<Word> {
    if j > k {
        return Err(Error::SuffixIndex { k, j });
    }
    let w = zww(k)?;
    suffix_of(&w, j)
}

fn suffix_of(w: &Word, j: u32) -> Result<Word> {
    let len = fib(j + 2)? as usize;
    Ok(Word::from(&w[w.len() - len..]))
}

/// `W_{k+1} = S_{k,k} · S_{k,k-2} ··· S_{k,k-2⌊k/2⌋} · (k+1)`.
pub fn suffix_factorization(k: u32) -> Result<Factorization> {
    LengthCap::default().check(k + 1)?;
    let w = zww(k)?;
    let mut blocks = Vec::with_capacity(k as usize / 2 + 2);
    for i in 0..=k / 2 {
        blocks.push(suffix_of(&w, k - 2 * i)?);
    }
    blocks.push(Word::from([k + 1]));
    Ok(Factorization { kind: FactorizationKind::Suffix, blocks })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.bytes().map(|b| (b - b'0') as u32).collect()
    }

    fn texts(f: &Factorization) -> Vec<String> {
        f.block_texts()
    }

    #[test]
    fn fib_values() {
        assert_eq!(fib(1).unwrap(), 1);
        assert_eq!(fib(2).unwrap(), 1);
        assert_eq!(fib(7).unwrap(), 13);
        assert_eq!(fib(92).unwrap(), 7_540_113_804_746_346_429);
        assert_eq!(fib(0), Err(Error::FibIndex(0)));
        assert_eq!(fib(93), Err(Error::FibIndex(93)));
    }

    #[test]
    fn shift() {
        assert_eq!(shift_add(2, &w("01223")).unwrap(), w("23445"));
        assert_eq!(shift_add(0, &w("0122")).unwrap(), w("0122"));
        assert_eq!(shift_add(4, &w("0")).unwrap(), w("4"));
        assert!(matches!(shift_add(1, &[u32::MAX]), Err(Error::LetterOverflow { .. })));
    }

    #[test]
    fn table_one_words() {
        let zw = ["0", "01", "012", "01223", "01223234", "0122323423445"];
        let fw = ["0", "01", "010", "01001", "01001010", "0100101001001"];
        for k in 0..6u32 {
            assert_eq!(zww(k).unwrap(), w(zw[k as usize]));
            assert_eq!(zww_by_morphism(k).unwrap(), w(zw[k as usize]));
            assert_eq!(fibonacci_word(k).unwrap(), w(fw[k as usize]));
        }
    }

    #[test]
    fn phi() {
        assert_eq!(apply_phi(&w("0")).unwrap(), w("01"));
        assert_eq!(apply_phi(&w("01")).unwrap(), w("012"));
        assert_eq!(apply_phi(&[]).unwrap(), Word::empty());
    }

    #[test]
    fn mod2() {
        assert_eq!(reduce_mod2(&w("01223")), w("01001"));
        assert_eq!(reduce_mod2(&w("0")), w("0"));
        assert_eq!(reduce_mod2(&w("0122323423445")), fibonacci_word(5).unwrap());
    }

    #[test]
    fn length_cap() {
        assert_eq!(LengthCap::default().check(40).unwrap(), 267_914_296);
        assert!(matches!(zww(41), Err(Error::LengthCap { k: 41, .. })));
        assert!(matches!(zww_capped(87, &LengthCap::new(u64::MAX)), Err(Error::IndexLimit { .. })));
        assert_eq!(LengthCap::default().max_index(), Some(40));
        assert_eq!(LengthCap::new(13).max_index(), Some(5));
        assert_eq!(LengthCap::new(0).max_index(), None);
        assert!(zww_capped(6, &LengthCap::new(13)).is_err());
    }

    #[test]
    fn prefix_examples() {
        assert_eq!(texts(&prefix_factorization(5).unwrap()), ["01", "2", "23", "234", "23445"]);
        assert_eq!(texts(&prefix_factorization(2).unwrap()), ["01", "2"]);
        assert_eq!(texts(&prefix_factorization(4).unwrap()), ["01", "2", "23", "234"]);
        assert!(prefix_factorization(1).is_err());
    }

    #[test]
    fn parity_examples() {
        assert_eq!(texts(&parity_factorization(5).unwrap()), ["01223234", "234", "4", "5"]);
        assert_eq!(texts(&parity_factorization(1).unwrap()), ["0", "1"]);
        assert_eq!(texts(&parity_factorization(4).unwrap()), ["01223", "23", "4"]);
        assert!(parity_factorization(0).is_err());
    }

    #[test]
    fn suffix_examples() {
        assert_eq!(suffix_block(5, 3).unwrap(), w("23445"));
        assert_eq!(suffix_block(6, 6).unwrap(), zww(6).unwrap());
        assert_eq!(suffix_block(4, 0).unwrap(), w("4"));
        assert!(suffix_block(3, 4).is_err());
        assert_eq!(texts(&suffix_factorization(4).unwrap()), ["01223234", "234", "4", "5"]);
        assert_eq!(texts(&suffix_factorization(0).unwrap()), ["0", "1"]);
        assert_eq!(texts(&suffix_factorization(3).unwrap()), ["01223", "23", "4"]);
    }

    #[test]
    fn generators_agree() {
        for k in 0..=20 {
            let z = zww(k).unwrap();
            assert_eq!(z, zww_by_morphism(k).unwrap(), "k={k}");
            assert_eq!(z.len() as u64, fib(k + 2).unwrap());
            assert_eq!(reduce_mod2(&z), fibonacci_word(k).unwrap());
            if k >= 1 {
                let prev = zww(k - 1).unwrap();
                assert!(z.starts_with(&prev));
                if k >= 2 {
                    let pp = zww(k - 2).unwrap();
                    let rebuilt = Word::concat([&prev, &shift_add(2, &pp).unwrap()]);
                    assert_eq!(rebuilt, z);
                }
            }
        }
    }

    #[test]
    fn fibonacci_recurrence() {
        for i in 0..=15 {
            let lhs = fibonacci_word(i + 2).unwrap();
            let rhs = Word::concat([&fibonacci_word(i + 1).unwrap(), &fibonacci_word(i).unwrap()]);
            assert_eq!(lhs, rhs);
        }
    }

    #[test]
    fn letter_structure() {
        for k in 0..=20u32 {
            let z = zww(k).unwrap();
            assert_eq!(z[0], 0);
            assert_eq!(*z.last().unwrap(), k);
            assert_eq!(z.iter().filter(|&&c| c == 0).count(), 1);
            assert_eq!(z.iter().filter(|&&c| c == k).count(), 1);
            assert_eq!(*z.iter().max().unwrap(), k);
        }
    }

    #[test]
    fn suffix_nesting() {
        for k in 0..=14u32 {
            for i in 0..=k / 2 {
                let s = suffix_block(k, k - 2 * i).unwrap();
                let shifted = shift_add(2 * i, &zww(k - 2 * i).unwrap()).unwrap();
                assert_eq!(s, shifted, "k={k} i={i}");
            }
            for j in 0..k.saturating_sub(1) {
                let short = suffix_block(k, j).unwrap();
                let long = suffix_block(k, j + 2).unwrap();
                assert!(long.ends_with(&short));
            }
        }
    }
}
