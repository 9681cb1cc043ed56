//! The brute-force censuses checked against even more naive definitions,
//! plus structural properties of `W_k` and its Lyndon array.

use std::collections::{BTreeSet, HashSet};

use proptest::prelude::*;

use zww::factor_analysis::{
    is_lyndon, lyndon_array_bruteforce, lyndon_factor_census, palindrome_census, run_census, square_census,
    RunOccurrence, SquareOccurrence,
};
use zww::lyndon_array::algorithm_la;
use zww::word::parse_words;
use zww::word_core::{fib, zww};
use zww::Word;

fn small_word() -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..3, 1..14)
}

/// Lyndon by the conjugate definition: primitive and strictly smaller than
/// every other rotation.
fn lyndon_by_rotation(w: &[u32]) -> bool {
    let n = w.len();
    (1..n).all(|r| {
        let rot: Vec<u32> = w[r..].iter().chain(&w[..r]).copied().collect();
        w < rot.as_slice()
    })
}

fn minimal_period(f: &[u32]) -> usize {
    (1..=f.len()).find(|&p| (p..f.len()).all(|i| f[i] == f[i - p])).unwrap()
}

/// Every factor, its minimal period, and a one-step maximality test.
fn runs_naive(w: &[u32]) -> Vec<RunOccurrence> {
    let n = w.len();
    let mut out = BTreeSet::new();
    for s in 0..n {
        for e in s + 1..=n {
            let f = &w[s..e];
            let p = minimal_period(f);
            if f.len() < 2 * p {
                continue;
            }
            let left_ok = s == 0 || w[s - 1] != w[s - 1 + p];
            let right_ok = e == n || w[e] != w[e - p];
            if left_ok && right_ok {
                out.insert(RunOccurrence { start: s + 1, length: e - s, period: p });
            }
        }
    }
    out.into_iter().collect()
}

proptest! {
    #[test]
    fn lyndon_test_matches_rotation_definition(w in small_word()) {
        prop_assert_eq!(is_lyndon(&w).unwrap(), lyndon_by_rotation(&w));
    }

    #[test]
    fn lyndon_array_is_longest_lyndon_prefix(w in small_word()) {
        let la = lyndon_array_bruteforce(&w).unwrap();
        let n = w.len();
        for i in 0..n {
            let best = (1..=n - i).filter(|&l| is_lyndon(&w[i..i + l]).unwrap()).max().unwrap();
            prop_assert_eq!(la.ell()[i], (i + best) as u64, "position {}", i + 1);
            prop_assert_eq!(la.lambda()[i], best as u64);
        }
    }

    #[test]
    fn runs_match_naive(w in small_word()) {
        prop_assert_eq!(run_census(&w), runs_naive(&w));
    }

    #[test]
    fn squares_are_exhaustive(w in small_word()) {
        let census = square_census(&w);
        let reported: HashSet<SquareOccurrence> = census.witnesses.iter().copied().collect();
        for s in 0..w.len() {
            for p in 1..=(w.len() - s) / 2 {
                let is_sq = (0..p).all(|i| w[s + i] == w[s + p + i]);
                prop_assert_eq!(is_sq, reported.contains(&SquareOccurrence { start: s + 1, period: p }));
            }
        }
        let distinct: HashSet<&[u32]> = census.witnesses.iter().map(|o| &w[o.start - 1..o.end()]).collect();
        prop_assert_eq!(census.distinct, distinct.len() as u64);
        prop_assert!(census.distinct <= census.total);
    }

    #[test]
    fn palindrome_witnesses_are_palindromes(w in small_word()) {
        let census = palindrome_census(&w);
        let mut seen = HashSet::new();
        for o in &census.witnesses {
            let f: Vec<u32> = w[o.start - 1..o.start - 1 + o.length].to_vec();
            let mut r = f.clone();
            r.reverse();
            prop_assert_eq!(&f, &r);
            seen.insert(f);
        }
        // every single letter is a palindrome
        prop_assert!(census.total >= w.len() as u64);
        prop_assert_eq!(census.distinct, seen.len() as u64);
    }

    #[test]
    fn lyndon_census_counts_distinct_factors(w in small_word()) {
        let census = lyndon_factor_census(&w);
        let mut naive: std::collections::BTreeMap<u32, u64> = Default::default();
        let mut seen = HashSet::new();
        for s in 0..w.len() {
            for e in s + 1..=w.len() {
                if seen.insert(w[s..e].to_vec()) && lyndon_by_rotation(&w[s..e]) {
                    *naive.entry(w[s]).or_insert(0) += 1;
                }
            }
        }
        prop_assert_eq!(census, naive);
    }

    #[test]
    fn word_text_round_trip(w in prop::collection::vec(any::<u32>(), 1..20)) {
        let word = Word::new(w);
        let parsed = parse_words(&format!("{}\n", word.to_text())).unwrap();
        prop_assert_eq!(parsed, vec![word]);
    }
}

#[test]
fn zww_runs_are_squares() {
    for k in 0..=14 {
        let w = zww(k).unwrap();
        for r in run_census(&w) {
            assert_eq!(r.length, 2 * r.period, "k={k} run {r:?}");
        }
    }
}

#[test]
fn zww_lyndon_array_maximality() {
    for k in 0..=8 {
        let w = zww(k).unwrap();
        let (_, array) = algorithm_la(k).unwrap();
        for (i, &end) in array.ell().iter().enumerate() {
            let end = end as usize;
            assert!(is_lyndon(&w[i..end]).unwrap());
            for longer in end + 1..=w.len() {
                assert!(!is_lyndon(&w[i..longer]).unwrap(), "k={k} i={}", i + 1);
            }
        }
    }
}

/// `λ_k[i] = λ_{k-1}[i]` on the prefix `W_{k-1}`, except where the factor
/// in `W_{k-1}` already reached its last position.
#[test]
fn lyndon_array_prefix_stability() {
    for k in 1..=16u32 {
        let prev = algorithm_la(k - 1).unwrap().1;
        let cur = algorithm_la(k).unwrap().1;
        let prev_len = fib(k + 1).unwrap();
        let (lp, lc) = (prev.lambda(), cur.lambda());
        for (i, &e) in prev.ell().iter().enumerate() {
            if e < prev_len {
                assert_eq!(lc[i], lp[i], "k={k} i={}", i + 1);
            }
        }
    }
}

/// The letter 2 appears once in each appended block, at its first position.
#[test]
fn digit_two_only_leads_blocks() {
    for k in 2..=16u32 {
        let w = zww(k).unwrap();
        let split = fib(k + 1).unwrap() as usize;
        let tail = &w[split..];
        assert_eq!(tail[0], 2);
        assert!(tail[1..].iter().all(|&c| c != 2), "k={k}");
    }
}
