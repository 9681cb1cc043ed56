//! Formula-against-census verification.
//!
//! Each theorem is a check over a range of word indices. The closed forms
//! are reached through [`Formulas`], a table of function pointers, so a
//! caller can substitute a deliberately broken formula and watch the
//! corresponding theorem fail.

use std::collections::hash_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::closed_forms::{self, PalindromeInventory, SquareInventory};
use crate::error::Result;
use crate::factor_analysis::{
    count_letter, distinct_palindrome_set, distinct_square_set, lyndon_array_bruteforce, lyndon_factor_census,
    palindrome_census, run_census, square_census, straddling_square_census,
};
use crate::lyndon_array::{self, LyndonArray};
use crate::word::Word;
use crate::word_core::{fib, fibonacci_word, zww};

/// `L_2(W_n)` for `n = 2..=8`, as published.
pub const PUBLISHED_L2: [u64; 7] = [1, 3, 7, 18, 42, 93, 195];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Selector {
    All,
    LetterCounts,
    Palindromes,
    Squares,
    TotalSquares,
    Runs,
    LyndonCounts,
    LyndonArray,
    LetterSum,
    FibonacciTable,
}

impl Selector {
    pub const VALUES: [Selector; 10] = [
        Selector::All,
        Selector::LetterCounts,
        Selector::Palindromes,
        Selector::Squares,
        Selector::TotalSquares,
        Selector::Runs,
        Selector::LyndonCounts,
        Selector::LyndonArray,
        Selector::LetterSum,
        Selector::FibonacciTable,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            Selector::All => "all",
            Selector::LetterCounts => "letter-counts",
            Selector::Palindromes => "palindromes",
            Selector::Squares => "squares",
            Selector::TotalSquares => "total-squares",
            Selector::Runs => "runs",
            Selector::LyndonCounts => "lyndon-counts",
            Selector::LyndonArray => "lyndon-array",
            Selector::LetterSum => "letter-sum",
            Selector::FibonacciTable => "fibonacci-table",
        }
    }
}

impl FromStr for Selector {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        Selector::VALUES.iter().copied().find(|v| v.as_str() == s).ok_or_else(|| {
            let names: Vec<_> = Selector::VALUES.iter().map(|v| v.as_str()).collect();
            format!("unknown theorem selector {s:?} (expected one of: {})", names.join(", "))
        })
    }
}

impl fmt::Display for Selector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Start (1-based) and letters of a straddling square.
pub type Witness = (usize, Word);

/// The closed forms under test.
#[derive(Clone, Copy)]
pub struct Formulas {
    pub letter_count: fn(u32, u32) -> Result<u64>,
    pub total_palindromes: fn(u32) -> Result<u64>,
    pub distinct_palindromes: fn(u32) -> u64,
    pub palindrome_inventory: fn(u32) -> PalindromeInventory,
    pub distinct_square_count: fn(u32) -> Result<u64>,
    pub new_squares: fn(u32) -> Result<SquareInventory>,
    pub total_squares: fn(u32) -> Result<u64>,
    pub straddling_square_count: fn(u32) -> Result<u64>,
    pub straddling_square_witness: fn(u32) -> Result<Option<Witness>>,
    pub lyndon_count: fn(u32, u32) -> Result<u64>,
    pub letter_sum: fn(u32) -> Result<u128>,
    pub fib_word_distinct_squares: fn(u32) -> Result<u64>,
    pub fib_word_total_squares: fn(u32) -> Result<u64>,
    pub lyndon_array: fn(u32) -> Result<(Word, LyndonArray)>,
}

impl Default for Formulas {
    fn default() -> Self {
        Formulas {
            letter_count: closed_forms::letter_count,
            total_palindromes: closed_forms::total_palindromes,
            distinct_palindromes: closed_forms::distinct_palindromes,
            palindrome_inventory: closed_forms::palindrome_inventory,
            distinct_square_count: closed_forms::distinct_square_count,
            new_squares: closed_forms::new_squares,
            total_squares: closed_forms::total_squares,
            straddling_square_count: closed_forms::straddling_square_count,
            straddling_square_witness: closed_forms::straddling_square_witness,
            lyndon_count: closed_forms::lyndon_count,
            letter_sum: closed_forms::letter_sum,
            fib_word_distinct_squares: closed_forms::fib_word_distinct_squares,
            fib_word_total_squares: closed_forms::fib_word_total_squares,
            lyndon_array: lyndon_array::algorithm_la,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub params: BTreeMap<String, u64>,
    pub expected: String,
    pub actual: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}: expected {}, got {}", params.join(" "), self.expected, self.actual)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerificationOutcome {
    pub theorem: String,
    pub selector: String,
    pub range: [u32; 2],
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Counterexample>,
}

impl VerificationOutcome {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

type Check = fn(&Formulas, &mut Cache, u32) -> Option<Counterexample>;

struct Theorem {
    id: &'static str,
    selector: Selector,
    range: (u32, u32),
    /// Hard upper limit regardless of `max_k` (published tables end there).
    ceiling: Option<u32>,
    check: Check,
}

const THEOREMS: &[Theorem] = &[
    Theorem {
        id: "letter-count",
        selector: Selector::LetterCounts,
        range: (0, 18),
        ceiling: None,
        check: check_letter_count,
    },
    Theorem {
        id: "palindrome-total",
        selector: Selector::Palindromes,
        range: (0, 16),
        ceiling: None,
        check: check_palindrome_total,
    },
    Theorem {
        id: "palindrome-distinct",
        selector: Selector::Palindromes,
        range: (0, 16),
        ceiling: None,
        check: check_palindrome_distinct,
    },
    Theorem {
        id: "palindrome-inventory",
        selector: Selector::Palindromes,
        range: (0, 16),
        ceiling: None,
        check: check_palindrome_inventory,
    },
    Theorem {
        id: "square-distinct",
        selector: Selector::Squares,
        range: (1, 15),
        ceiling: None,
        check: check_square_distinct,
    },
    Theorem { id: "square-new", selector: Selector::Squares, range: (0, 14), ceiling: None, check: check_square_new },
    Theorem {
        id: "square-total",
        selector: Selector::TotalSquares,
        range: (1, 15),
        ceiling: None,
        check: check_square_total,
    },
    Theorem {
        id: "square-straddling",
        selector: Selector::TotalSquares,
        range: (2, 15),
        ceiling: None,
        check: check_square_straddling,
    },
    Theorem { id: "runs-are-squares", selector: Selector::Runs, range: (0, 14), ceiling: None, check: check_runs },
    Theorem {
        id: "lyndon-count",
        selector: Selector::LyndonCounts,
        range: (0, 12),
        ceiling: None,
        check: check_lyndon_count,
    },
    Theorem {
        id: "lyndon-l2-published",
        selector: Selector::LyndonCounts,
        range: (2, 8),
        ceiling: Some(8),
        check: check_l2_published,
    },
    Theorem {
        id: "zww-is-lyndon",
        selector: Selector::LyndonCounts,
        range: (0, 14),
        ceiling: None,
        check: check_zww_lyndon,
    },
    Theorem {
        id: "lyndon-array",
        selector: Selector::LyndonArray,
        range: (0, 16),
        ceiling: None,
        check: check_lyndon_array,
    },
    Theorem {
        id: "lyndon-array-digit-two",
        selector: Selector::LyndonArray,
        range: (2, 16),
        ceiling: None,
        check: check_digit_two,
    },
    Theorem { id: "letter-sum", selector: Selector::LetterSum, range: (1, 30), ceiling: None, check: check_letter_sum },
    Theorem {
        id: "fib-word-total-squares",
        selector: Selector::FibonacciTable,
        range: (3, 12),
        ceiling: None,
        check: check_fib_total,
    },
    Theorem {
        id: "fib-word-distinct-squares",
        selector: Selector::FibonacciTable,
        range: (4, 12),
        ceiling: None,
        check: check_fib_distinct,
    },
];

/// Theorem ids run by a selector, in output order.
pub fn theorem_ids(selector: Selector) -> Vec<&'static str> {
    THEOREMS.iter().filter(|t| selected(t, selector)).map(|t| t.id).collect()
}

fn selected(t: &Theorem, selector: Selector) -> bool {
    selector == Selector::All || t.selector == selector
}

/// Runs every theorem picked by `selector`. `max_k` replaces the upper end
/// of each default range.
pub fn run(formulas: &Formulas, selector: Selector, max_k: Option<u32>) -> Vec<VerificationOutcome> {
    let mut cache = Cache::default();
    THEOREMS
        .iter()
        .filter(|t| selected(t, selector))
        .map(|t| {
            let (lo, default_hi) = t.range;
            let mut hi = max_k.unwrap_or(default_hi);
            if let Some(c) = t.ceiling {
                hi = hi.min(c);
            }
            let counterexample = (lo..=hi).find_map(|k| (t.check)(formulas, &mut cache, k));
            VerificationOutcome {
                theorem: t.id.to_string(),
                selector: t.selector.to_string(),
                range: [lo, hi],
                status: if counterexample.is_some() { Status::Fail } else { Status::Pass },
                counterexample,
            }
        })
        .collect()
}

pub fn render_table(outcomes: &[VerificationOutcome]) -> String {
    let mut s = format!("{:<28} {:<16} {:<9} {:<6} {}\n", "theorem", "selector", "range", "status", "counterexample");
    for o in outcomes {
        let range = format!("{}..={}", o.range[0], o.range[1]);
        let status = if o.passed() { "pass" } else { "FAIL" };
        let ce = o.counterexample.as_ref().map(|c| c.to_string()).unwrap_or_else(|| "-".into());
        s.push_str(&format!("{:<28} {:<16} {:<9} {:<6} {}\n", o.theorem, o.selector, range, status, ce));
    }
    s
}

#[derive(Default)]
struct Cache {
    zww: HashMap<u32, Word>,
}

impl Cache {
    fn zww(&mut self, k: u32) -> Result<&Word> {
        if let Entry::Vacant(slot) = self.zww.entry(k) {
            slot.insert(zww(k)?);
        }
        Ok(&self.zww[&k])
    }
}

fn params(pairs: &[(&str, u64)]) -> BTreeMap<String, u64> {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

fn mismatch(pairs: &[(&str, u64)], expected: impl fmt::Display, actual: impl fmt::Display) -> Option<Counterexample> {
    Some(Counterexample { params: params(pairs), expected: expected.to_string(), actual: actual.to_string() })
}

fn compare<T: PartialEq + fmt::Display>(
    pairs: &[(&str, u64)],
    formula: Result<T>,
    oracle: T,
) -> Option<Counterexample> {
    match formula {
        Ok(v) if v == oracle => None,
        Ok(v) => mismatch(pairs, oracle, v),
        Err(e) => mismatch(pairs, oracle, format!("error: {e}")),
    }
}

macro_rules! try_ce {
    ($pairs:expr, $e:expr) => {
        match $e {
            Ok(v) => v,
            Err(e) => return mismatch($pairs, "a value", format!("error: {e}")),
        }
    };
}

fn check_letter_count(f: &Formulas, c: &mut Cache, i: u32) -> Option<Counterexample> {
    let w = try_ce!(&[("i", i as u64)], c.zww(i));
    (0..=i + 2).find_map(|n| compare(&[("i", i as u64), ("n", n as u64)], (f.letter_count)(i, n), count_letter(w, n)))
}

fn check_palindrome_total(f: &Formulas, c: &mut Cache, i: u32) -> Option<Counterexample> {
    let p = &[("i", i as u64)];
    let w = try_ce!(p, c.zww(i));
    compare(p, (f.total_palindromes)(i), palindrome_census(w).total)
}

fn check_palindrome_distinct(f: &Formulas, c: &mut Cache, i: u32) -> Option<Counterexample> {
    let p = &[("i", i as u64)];
    let w = try_ce!(p, c.zww(i));
    compare(p, Ok((f.distinct_palindromes)(i)), palindrome_census(w).distinct)
}

fn describe(set: &BTreeSet<Word>) -> String {
    let items: Vec<String> = set.iter().map(Word::to_compact).collect();
    format!("{{{}}}", items.join(","))
}

fn check_palindrome_inventory(f: &Formulas, c: &mut Cache, i: u32) -> Option<Counterexample> {
    let p = &[("i", i as u64)];
    let w = try_ce!(p, c.zww(i));
    let oracle = distinct_palindrome_set(w);
    let members = (f.palindrome_inventory)(i).members();
    if members == oracle {
        return None;
    }
    let missing: BTreeSet<_> = oracle.difference(&members).cloned().collect();
    let extra: BTreeSet<_> = members.difference(&oracle).cloned().collect();
    mismatch(p, format!("also {}", describe(&missing)), format!("extra {}", describe(&extra)))
}

fn check_square_distinct(f: &Formulas, c: &mut Cache, m: u32) -> Option<Counterexample> {
    let p = &[("m", m as u64)];
    let w = try_ce!(p, c.zww(m));
    compare(p, (f.distinct_square_count)(m), square_census(w).distinct)
}

fn check_square_new(f: &Formulas, c: &mut Cache, k: u32) -> Option<Counterexample> {
    let p = &[("k", k as u64)];
    let inv = try_ce!(p, (f.new_squares)(k));
    let before = distinct_square_set(try_ce!(p, c.zww(k)));
    let after = distinct_square_set(try_ce!(p, c.zww(k + 1)));
    let oracle: BTreeSet<Word> = after.difference(&before).cloned().collect();
    let claimed: BTreeSet<Word> = inv.new_squares.iter().cloned().collect();
    if claimed != oracle || inv.new_squares.len() != (k / 2) as usize {
        return mismatch(p, describe(&oracle), describe(&claimed));
    }
    let periods: Vec<u64> = try_ce!(p, (1..=k / 2).map(|i| fib(k - 2 * i + 2)).collect::<Result<Vec<_>>>());
    if inv.new_periods != periods {
        return mismatch(p, format!("periods {periods:?}"), format!("periods {:?}", inv.new_periods));
    }
    for (sq, &period) in inv.new_squares.iter().zip(&inv.new_periods) {
        let half = sq.len() / 2;
        if sq.len() as u64 != 2 * period || sq[..half] != sq[half..] {
            return mismatch(p, format!("a square of period {period}"), sq.to_compact());
        }
    }
    compare(p, Ok(inv.distinct_count), after.len() as u64)
}

fn check_square_total(f: &Formulas, c: &mut Cache, m: u32) -> Option<Counterexample> {
    let p = &[("m", m as u64)];
    let w = try_ce!(p, c.zww(m));
    compare(p, (f.total_squares)(m), square_census(w).total)
}

fn check_square_straddling(f: &Formulas, c: &mut Cache, m: u32) -> Option<Counterexample> {
    let p = &[("m", m as u64)];
    let boundary = try_ce!(p, fib(m + 1)) as usize;
    let w = try_ce!(p, c.zww(m));
    let census = try_ce!(p, straddling_square_census(w, boundary));
    if let Some(ce) = compare(p, (f.straddling_square_count)(m), census.total) {
        return Some(ce);
    }
    let witness = try_ce!(p, (f.straddling_square_witness)(m));
    let found = census.witnesses.first().map(|o| (o.start, Word::from(&w[o.start - 1..o.end()])));
    if witness != found {
        let show = |x: &Option<(usize, Word)>| match x {
            Some((s, sq)) => format!("{} at {s}", sq.to_compact()),
            None => "none".into(),
        };
        return mismatch(p, show(&found), show(&witness));
    }
    None
}

fn check_runs(_: &Formulas, c: &mut Cache, k: u32) -> Option<Counterexample> {
    let p = &[("k", k as u64)];
    let w = try_ce!(p, c.zww(k));
    run_census(w).into_iter().find(|r| !r.is_square()).and_then(|r| {
        mismatch(
            &[("k", k as u64), ("start", r.start as u64)],
            format!("length {}", 2 * r.period),
            format!("run of length {} and period {}", r.length, r.period),
        )
    })
}

fn check_lyndon_count(f: &Formulas, c: &mut Cache, n: u32) -> Option<Counterexample> {
    let w = try_ce!(&[("n", n as u64)], c.zww(n));
    let census = lyndon_factor_census(w);
    (0..=n).find_map(|letter| {
        let oracle = census.get(&letter).copied().unwrap_or(0);
        compare(&[("n", n as u64), ("c", letter as u64)], (f.lyndon_count)(n, letter), oracle)
    })
}

fn check_l2_published(f: &Formulas, _: &mut Cache, n: u32) -> Option<Counterexample> {
    compare(&[("n", n as u64)], (f.lyndon_count)(n, 2), PUBLISHED_L2[(n - 2) as usize])
}

fn check_zww_lyndon(_: &Formulas, c: &mut Cache, n: u32) -> Option<Counterexample> {
    let p = &[("n", n as u64)];
    let w = try_ce!(p, c.zww(n));
    compare(p, crate::factor_analysis::is_lyndon(w), true)
}

fn check_lyndon_array(f: &Formulas, c: &mut Cache, k: u32) -> Option<Counterexample> {
    let p = &[("k", k as u64)];
    let (word, array) = try_ce!(p, (f.lyndon_array)(k));
    let w = try_ce!(p, c.zww(k));
    if &word != w {
        return mismatch(p, format!("word {}", w.to_compact()), format!("word {}", word.to_compact()));
    }
    let oracle = try_ce!(p, lyndon_array_bruteforce(w));
    let pos = oracle.ell().iter().zip(array.ell()).position(|(a, b)| a != b);
    match (pos, oracle.len() == array.len()) {
        (None, true) => None,
        (Some(i), _) => mismatch(&[("k", k as u64), ("position", i as u64 + 1)], oracle.ell()[i], array.ell()[i]),
        (None, false) => mismatch(p, format!("{} entries", oracle.len()), format!("{} entries", array.len())),
    }
}

fn check_digit_two(_: &Formulas, _: &mut Cache, k: u32) -> Option<Counterexample> {
    let p = &[("k", k as u64)];
    compare(p, lyndon_array::two_positions_full_extent_check(k), true)
}

fn check_letter_sum(f: &Formulas, c: &mut Cache, k: u32) -> Option<Counterexample> {
    let p = &[("k", k as u64)];
    let w = try_ce!(p, c.zww(k));
    let direct: u128 = w.iter().map(|&x| x as u128).sum();
    compare(p, (f.letter_sum)(k), direct)
}

fn check_fib_total(f: &Formulas, _: &mut Cache, n: u32) -> Option<Counterexample> {
    let p = &[("n", n as u64)];
    let w = try_ce!(p, fibonacci_word(n));
    compare(p, (f.fib_word_total_squares)(n), square_census(&w).total)
}

fn check_fib_distinct(f: &Formulas, _: &mut Cache, n: u32) -> Option<Counterexample> {
    let p = &[("n", n as u64)];
    let w = try_ce!(p, fibonacci_word(n));
    compare(p, (f.fib_word_distinct_squares)(n), square_census(&w).distinct)
}
