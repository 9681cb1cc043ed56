//! Exact evaluators for the counting formulas over `W_k` (and the Fibonacci
//! word comparison row).
//!
//! Every function here has a brute-force counterpart in
//! [`crate::factor_analysis`]; the verification suite checks them against
//! each other.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::factor_analysis::is_lyndon;
use crate::word::Word;
use crate::word_core::{fib, suffix_block, zww, MAX_WORD_INDEX};

/// `C(x, y)` with `C(x, y) = 0` whenever `y > x`, `x < 0` or `y < 0`.
///
/// Multiplicative evaluation; every prefix product `C(x-y+i, i)` is an
/// integer, so each step divides exactly.
pub fn binomial(x: i64, y: i64) -> Result<u64> {
    if x < 0 || y < 0 || y > x {
        return Ok(0);
    }
    let y = y.min(x - y) as u128;
    let base = x as u128 - y;
    let mut acc: u128 = 1;
    for i in 1..=y {
        acc = acc.checked_mul(base + i).ok_or(Error::Overflow("binomial"))? / i;
    }
    u64::try_from(acc).map_err(|_| Error::Overflow("binomial"))
}

/// `N(i, n) = C(i - n + ⌊n/2⌋, ⌊n/2⌋)`, the number of occurrences of letter
/// `n` in `W_i`.
pub fn letter_count(i: u32, n: u32) -> Result<u64> {
    let half = (n / 2) as i64;
    binomial(i as i64 - n as i64 + half, half)
}

/// Total palindromic factor occurrences in `W_i`, single letters included.
pub fn total_palindromes(i: u32) -> Result<u64> {
    match i {
        0 => Ok(1),
        1 => Ok(2),
        2 => Ok(3),
        3 => Ok(6),
        _ => Ok(fib(i + 3)? - 2 * fib(i - 2)?),
    }
}

/// Distinct non-empty palindromes in `W_i`: `i + 1` for `i <= 2`,
/// `⌊5i/2⌋ - 2` from `i = 3` on.
pub fn distinct_palindromes(i: u32) -> u64 {
    let i = i as u64;
    if i <= 2 {
        i + 1
    } else {
        5 * i / 2 - 2
    }
}

/// The distinct palindromes of `W_i`, by shape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PalindromeInventory {
    /// Letters `0..=i`.
    pub singles: Vec<u32>,
    /// `2j ⊕ 22` for `2j + 3 <= i`.
    pub doubles: Vec<Word>,
    /// `2j ⊕ 232` and `2j ⊕ 323` for `2j + 4 <= i`.
    pub triples: Vec<Word>,
}

impl PalindromeInventory {
    pub fn len(&self) -> usize {
        self.singles.len() + self.doubles.len() + self.triples.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn members(&self) -> BTreeSet<Word> {
        self.singles
            .iter()
            .map(|&c| Word::from([c]))
            .chain(self.doubles.iter().cloned())
            .chain(self.triples.iter().cloned())
            .collect()
    }
}

pub fn palindrome_inventory(i: u32) -> PalindromeInventory {
    let singles = (0..=i).collect();
    let doubles = (0..).map(|j| 2 * j).take_while(|&s| s + 3 <= i).map(|s| Word::from([s + 2, s + 2])).collect();
    let mut triples = Vec::new();
    for s in (0..).map(|j| 2 * j).take_while(|&s| s + 4 <= i) {
        triples.push(Word::from([s + 2, s + 3, s + 2]));
        triples.push(Word::from([s + 3, s + 2, s + 3]));
    }
    PalindromeInventory { singles, doubles, triples }
}

/// Distinct squares in `W_m`, `m >= 1`: `⌊(m-1)/2⌋ · ⌈(m-1)/2⌉`.
///
/// The underlying theorem is stated for `W_{k+1}`; this takes the word
/// index directly.
pub fn distinct_square_count(m: u32) -> Result<u64> {
    if m < 1 {
        return Err(Error::IndexTooSmall { op: "distinct_square_count", min: 1, k: m });
    }
    let k = (m - 1) as u64;
    Ok((k / 2) * k.div_ceil(2))
}

/// The squares that first appear in `W_{k+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareInventory {
    /// `f_k, f_{k-2}, ...`, one per new square.
    pub new_periods: Vec<u64>,
    /// `S_{k,k-2i}²` for `i = 1..=⌊k/2⌋`.
    pub new_squares: Vec<Word>,
    /// Distinct squares in `W_{k+1}`.
    pub distinct_count: u64,
}

pub fn new_squares(k: u32) -> Result<SquareInventory> {
    let mut new_periods = Vec::new();
    let mut squares = Vec::new();
    for i in 1..=k / 2 {
        let block = suffix_block(k, k - 2 * i)?;
        new_periods.push(fib(k - 2 * i + 2)?);
        squares.push(Word::concat([&block, &block]));
    }
    Ok(SquareInventory { new_periods, new_squares: squares, distinct_count: distinct_square_count(k + 1)? })
}

/// Total square occurrences in `W_i`, `i >= 1`: `f_i - 1`.
pub fn total_squares(i: u32) -> Result<u64> {
    if i < 1 {
        return Err(Error::IndexTooSmall { op: "total_squares", min: 1, k: i });
    }
    Ok(fib(i)? - 1)
}

/// Squares of `W_i` crossing the boundary between `W_{i-1}` and
/// `2 ⊕ W_{i-2}`: none for `i < 3`, exactly one afterwards.
pub fn straddling_square_count(i: u32) -> Result<u64> {
    if i < 2 {
        return Err(Error::IndexTooSmall { op: "straddling_square_count", min: 2, k: i });
    }
    Ok(u64::from(i >= 3))
}

/// The unique straddling square of `W_i` (`i >= 3`): `(2 ⊕ W_{i-3})²`,
/// starting at 1-based position `f_i + 1`.
pub fn straddling_square_witness(i: u32) -> Result<Option<(usize, Word)>> {
    if straddling_square_count(i)? == 0 {
        return Ok(None);
    }
    let half = crate::word_core::shift_add(2, &zww(i - 3)?)?;
    let start = fib(i)? as usize + 1;
    Ok(Some((start, Word::concat([&half, &half]))))
}

/// Distinct Lyndon factors of `W_n` beginning with letter `c`.
pub fn lyndon_count(n: u32, c: u32) -> Result<u64> {
    if c > n {
        return Ok(0);
    }
    match c {
        0 => fib(n + 2),
        2 => lyndon_two_count(n),
        c if c % 2 == 1 => Ok(fib(n + 3 - c)? - 1),
        c => lyndon_two_count(n - (c - 2)),
    }
}

/// `Σ_{j=0}^{n-2} { Σ_{i=j}^{n-2} f_{i+2} - (n-2-j) f_{j+2} - f_{j+1} } + 1`
/// for `n >= 2`.
fn lyndon_two_count(n: u32) -> Result<u64> {
    if n < 2 {
        return Ok(0);
    }
    let top = n - 2;
    let mut total: i128 = 1;
    for j in 0..=top {
        let mut inner: i128 = 0;
        for i in j..=top {
            inner += fib(i + 2)? as i128;
        }
        inner -= (top - j) as i128 * fib(j + 2)? as i128;
        inner -= fib(j + 1)? as i128;
        total += inner;
    }
    u64::try_from(total).map_err(|_| Error::Overflow("Lyndon count"))
}

/// Checks that `W_n` is a Lyndon word by running the generic test on it.
pub fn is_zww_lyndon(n: u32) -> Result<bool> {
    is_lyndon(&zww(n)?)
}

/// Lucas numbers with `L_0 = 2`, `L_1 = 1`.
pub fn lucas(m: u32) -> Result<u64> {
    if m == 0 {
        return Ok(2);
    }
    // L_m = f_{m-1} + f_{m+1}
    let prev = if m == 1 { 0 } else { fib(m - 1)? };
    prev.checked_add(fib(m + 1)?).ok_or(Error::Overflow("Lucas number"))
}

/// Sum of the letters of `W_k`.
///
/// With `γ, ψ` the roots of `x² = x + 1` the closed form is
/// `k(γ^{k+1} + ψ^{k+1})(ψ² + γ)/(γ-ψ)² + (ψ^k - γ^k)/(γ-ψ)³`. Since
/// `ψ² + γ = 2`, `(γ-ψ)² = 5` and `γ^m - ψ^m = √5 f_m`, that is
/// `(2k L_{k+1} - f_k) / 5`, evaluated here in integers.
pub fn letter_sum(k: u32) -> Result<u128> {
    if !(1..=MAX_WORD_INDEX).contains(&k) {
        return Err(Error::IndexLimit { k, max: MAX_WORD_INDEX });
    }
    let numerator = 2 * k as u128 * lucas(k + 1)? as u128 - fib(k)? as u128;
    if !numerator.is_multiple_of(5) {
        return Err(Error::InexactDivision("letter sum"));
    }
    Ok(numerator / 5)
}

/// Distinct squares in the finite Fibonacci word `F_n`: `2(f_n - 1)`.
/// Agrees with the census from `n = 4` on; at `n = 3` it gives 2 where
/// `F_3 = 01001` has a single square.
pub fn fib_word_distinct_squares(n: u32) -> Result<u64> {
    if n < 3 {
        return Err(Error::IndexTooSmall { op: "fib_word_distinct_squares", min: 3, k: n });
    }
    Ok(2 * (fib(n)? - 1))
}

/// First index at which [`fib_word_distinct_squares`] matches the census.
pub const FIB_WORD_DISTINCT_SQUARES_FROM: u32 = 4;

/// Total squares in `F_n`:
/// `(4(n+1) f_{n+2} - 2(n+7) f_{n+1}) / 5 - 4 f_n + n + 2`.
pub fn fib_word_total_squares(n: u32) -> Result<u64> {
    if n < 3 {
        return Err(Error::IndexTooSmall { op: "fib_word_total_squares", min: 3, k: n });
    }
    let n128 = n as i128;
    let num = 4 * (n128 + 1) * fib(n + 2)? as i128 - 2 * (n128 + 7) * fib(n + 1)? as i128;
    if num % 5 != 0 {
        return Err(Error::InexactDivision("Fibonacci-word total squares"));
    }
    let value = num / 5 - 4 * fib(n)? as i128 + n128 + 2;
    u64::try_from(value).map_err(|_| Error::Overflow("Fibonacci-word total squares"))
}
