//! Oracles written independently of the library, and shared corpora.
#![allow(dead_code)]

use std::collections::BTreeMap;

use altsnake::sample::{random_exmore, random_snake};
use altsnake::{AlternatingSnake, Direction, Interval, LWeight, Monomial, RingElement};
use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Pascal's triangle.
pub fn pascal(n: usize, k: usize) -> u128 {
    let mut row = vec![1u128];
    for _ in 0..n {
        let mut next = vec![1u128; row.len() + 1];
        for t in 1..row.len() {
            next[t] = row[t - 1] + row[t];
        }
        row = next;
    }
    row.get(k).copied().unwrap_or(0)
}

/// `ω` from raw exponents, boundary generators dropped by hand.
pub fn weight(exps: &BTreeMap<(i64, i64), i64>, n: u32) -> LWeight {
    let top = n as i64 + 1;
    let gens: Vec<(Interval, i64)> = exps
        .iter()
        .filter(|(&(i, j), &e)| e != 0 && j - i > 0 && j - i < top)
        .map(|(&(i, j), &e)| (Interval::new(i, j), e))
        .collect();
    LWeight::from_generators(gens, n).unwrap()
}

/// `∏ α_{i,j}^{c}` assembled from the four-generator formula.
pub fn root_product(c: &BTreeMap<(i64, i64), u64>, n: u32) -> LWeight {
    let mut exps: BTreeMap<(i64, i64), i64> = BTreeMap::new();
    for (&(i, j), &m) in c {
        let m = m as i64;
        *exps.entry((i, j)).or_default() += m;
        *exps.entry((i + 1, j + 1)).or_default() += m;
        *exps.entry((i + 1, j)).or_default() -= m;
        *exps.entry((i, j + 1)).or_default() -= m;
    }
    weight(&exps, n)
}

/// `ω_a ω_b (ω_{[a.i,b.j]} ω_{[b.i,a.j]})⁻¹`.
pub fn gamma_oracle(a: Interval, b: Interval, n: u32) -> LWeight {
    let mut exps: BTreeMap<(i64, i64), i64> = BTreeMap::new();
    *exps.entry((a.i, a.j)).or_default() += 1;
    *exps.entry((b.i, b.j)).or_default() += 1;
    *exps.entry((a.i, b.j)).or_default() -= 1;
    *exps.entry((b.i, a.j)).or_default() -= 1;
    weight(&exps, n)
}

/// Class of a fundamental module: `None` for zero, the empty monomial on
/// the boundary.
pub fn fundamental(i: i64, j: i64, n: u32) -> Option<Monomial> {
    let len = j - i;
    if len < 0 || len > n as i64 + 1 {
        None
    } else if len == 0 || len == n as i64 + 1 {
        Some(Monomial::one())
    } else {
        Some(Monomial::generator(Interval::new(i, j)))
    }
}

/// `V_a V_b - V_{[a.i,b.j]} V_{[b.i,a.j]}`.
pub fn two_by_two(a: Interval, b: Interval, n: u32) -> RingElement<BigInt> {
    let mut terms = Vec::new();
    if let (Some(x), Some(y)) = (fundamental(a.i, a.j, n), fundamental(b.i, b.j, n)) {
        terms.push((x.mul(&y), BigInt::from(1)));
    }
    if let (Some(x), Some(y)) = (fundamental(a.i, b.j, n), fundamental(b.i, a.j, n)) {
        terms.push((x.mul(&y), BigInt::from(-1)));
    }
    RingElement::from_terms(terms, n).unwrap()
}

/// `[i, j] -> [-j, -i]` applied to the keys.
pub fn relabel_omega(w: &LWeight) -> LWeight {
    let exps: BTreeMap<(i64, i64), i64> = w.iter().map(|(iv, e)| ((-iv.j, -iv.i), e)).collect();
    weight(&exps, w.n())
}

/// Stable snakes with `r <= 7`, `n <= 8`.
pub fn stable_corpus(seed: u64, count: usize) -> Vec<AlternatingSnake> {
    let mut g = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let s = random_snake(&mut g, 7, 8);
        if s.is_stable() {
            out.push(s);
        }
    }
    out
}

/// Members of the explicit prime stable family with `r <= max_r`.
pub fn exmore_corpus(seed: u64, count: usize, max_r: usize) -> Vec<AlternatingSnake> {
    let mut g = rng(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let (s, _) = random_exmore(&mut g, 4, 3);
        if s.len() <= max_r {
            out.push(s);
        }
    }
    out
}

/// Every single-run `Left` snake with first interval `[0, len]`, steps of
/// 1 or 2 in each endpoint, `r <= max_r` and `n <= max_n`.
pub fn left_ladders(max_r: usize, max_n: u32) -> Vec<AlternatingSnake> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let top = n as i64 + 1;
        for len in 0..=top {
            let mut stack = vec![vec![Interval::new(0, len)]];
            while let Some(ivs) = stack.pop() {
                let breaks = if ivs.len() == 1 { vec![1, 1] } else { vec![1, ivs.len()] };
                let s = AlternatingSnake::new(&ivs, &breaks, n).expect("ladder is valid");
                assert!(ivs.len() == 1 || s.first_direction() == Direction::Left);
                out.push(s);
                if ivs.len() == max_r {
                    continue;
                }
                let last = *ivs.last().unwrap();
                for di in 1..=2 {
                    for dj in 1..=2 {
                        let next = Interval::new(last.i - di, last.j - dj);
                        if (0..=top).contains(&next.len()) {
                            let mut v = ivs.clone();
                            v.push(next);
                            stack.push(v);
                        }
                    }
                }
            }
        }
    }
    out
}
