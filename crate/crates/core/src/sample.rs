//! Random generation of valid snakes for testing and benchmarking.
use rand::seq::index::sample;
use rand::Rng;

use crate::gen::{exmore_i_blocks, exmore_j_order, exmore_strict_junction, gen_exmore};
use crate::interval::Interval;
use crate::snake::{AlternatingSnake, Direction};

/// Random break vector for `r` positions.
pub fn random_breaks<R: Rng + ?Sized>(rng: &mut R, r: usize) -> Vec<usize> {
    if r <= 1 {
        return vec![1, 1];
    }
    let inner = r - 2;
    let k_minus_1 = if inner > 0 && rng.gen_bool(0.8) { rng.gen_range(1..=inner) } else { 0 };
    let mut picks: Vec<usize> = sample(rng, inner, k_minus_1).into_iter().map(|x| x + 2).collect();
    picks.sort_unstable();
    let mut out = vec![1];
    out.extend(picks);
    out.push(r);
    out
}

/// One attempt at an interval tuple following `breaks` with alternating
/// run directions; may fail validation.
fn attempt<R: Rng + ?Sized>(rng: &mut R, breaks: &[usize], n: u32, max_step: i64) -> Option<AlternatingSnake> {
    let r = *breaks.last().unwrap();
    let top = n as i64 + 1;
    let len0 = rng.gen_range(0..=top);
    let i0 = rng.gen_range(-3..=3);
    let mut ivs = vec![Interval::new(i0, i0 + len0)];
    let mut dir = if rng.gen_bool(0.5) { Direction::Left } else { Direction::Right };
    let mut m = 1;
    for p in 2..=r {
        if p > breaks[m] {
            m += 1;
            dir = dir.flip();
        }
        let last = ivs[p - 2];
        let mut next = None;
        for _ in 0..40 {
            let di = rng.gen_range(1..=max_step);
            let dj = rng.gen_range(1..=max_step);
            let len = last.len() + dj - di;
            if !(0..=top).contains(&len) {
                continue;
            }
            let cand = match dir {
                Direction::Left => Interval::new(last.i - di, last.j - dj),
                Direction::Right => Interval::new(last.i + di, last.j + dj),
            };
            // positions before an earlier break must not overlap the new one
            let clash = breaks[1..m].iter().any(|&b| ivs[..b - 1].iter().any(|x| x.overlaps(&cand)))
                || ivs.contains(&cand);
            if !clash {
                next = Some(cand);
                break;
            }
        }
        ivs.push(next?);
    }
    AlternatingSnake::new(&ivs, breaks, n).ok()
}

/// A valid snake with `1 <= r <= max_r` and `1 <= n <= max_n`.
pub fn random_snake<R: Rng + ?Sized>(rng: &mut R, max_r: usize, max_n: u32) -> AlternatingSnake {
    loop {
        let r = rng.gen_range(1..=max_r);
        let n = rng.gen_range(1..=max_n);
        let breaks = random_breaks(rng, r);
        let step = if breaks.len() > 2 { rng.gen_range(2..=4) } else { rng.gen_range(1..=3) };
        if let Some(s) = attempt(rng, &breaks, n, step) {
            return s;
        }
    }
}

/// A valid stable snake with `1 <= r <= max_r` and `1 <= n <= max_n`.
pub fn random_stable_snake<R: Rng + ?Sized>(rng: &mut R, max_r: usize, max_n: u32) -> AlternatingSnake {
    loop {
        let s = random_snake(rng, max_r, max_n);
        if s.is_stable() {
            return s;
        }
    }
}

/// A valid single-run snake of the given direction.
pub fn random_ladder<R: Rng + ?Sized>(rng: &mut R, max_r: usize, max_n: u32, dir: Direction) -> AlternatingSnake {
    loop {
        let r = rng.gen_range(1..=max_r);
        let n = rng.gen_range(1..=max_n);
        let breaks = if r == 1 { vec![1, 1] } else { vec![1, r] };
        let step = rng.gen_range(1..=2);
        if let Some(s) = attempt(rng, &breaks, n, step) {
            if r == 1 || s.first_direction() == dir {
                return s;
            }
        }
    }
}

/// Breaks and endpoint vectors satisfying the chains accepted by
/// [`gen_exmore`].
pub fn random_exmore_data<R: Rng + ?Sized>(rng: &mut R, max_k: usize, max_run: usize) -> (Vec<usize>, Vec<i64>, Vec<i64>) {
    let k = rng.gen_range(1..=max_k);
    let mut breaks = vec![1];
    for l in 1..=k {
        let min_gap = if l < k { 2 } else { 1 };
        let gap = rng.gen_range(min_gap..=max_run.max(min_gap));
        breaks.push(breaks[l - 1] + gap);
    }
    let r = breaks[k];
    let mut i = vec![0i64; r];
    let mut cur = rng.gen_range(-3..=3);
    for (b, block) in exmore_i_blocks(&breaks).iter().enumerate() {
        for (t, &p) in block.iter().enumerate() {
            if b > 0 || t > 0 {
                let weak = t == 0 && !exmore_strict_junction(&breaks, b);
                cur += if weak { rng.gen_range(0..=1) } else { rng.gen_range(1..=2) };
            }
            i[p - 1] = cur;
        }
    }
    let max_i = *i.iter().max().unwrap();
    let order = exmore_j_order(&breaks);
    let mut j = vec![0i64; r];
    let mut cur = max_i + rng.gen_range(1..=2);
    for &p in order.iter().rev() {
        j[p - 1] = cur;
        cur += rng.gen_range(1..=2);
    }
    (breaks, i, j)
}

/// A generated member of the family together with its rank.
pub fn random_exmore<R: Rng + ?Sized>(rng: &mut R, max_k: usize, max_run: usize) -> (AlternatingSnake, u32) {
    let (b, i, j) = random_exmore_data(rng, max_k, max_run);
    gen_exmore(&b, &i, &j).expect("sampled data satisfies the chains")
}

/// Random data for the `(μ, λ)` family; `None` when the draw violates the
/// rank bound.
pub fn random_mu_lambda<R: Rng + ?Sized>(rng: &mut R, r: usize, n: u32) -> Option<AlternatingSnake> {
    let mut mu = vec![rng.gen_range(-3..=3)];
    let mut lam = vec![0i64; r];
    for s in 1..r {
        let step = if s % 2 == 1 { rng.gen_range(0..=1) } else { rng.gen_range(1..=2) };
        mu.push(mu[s - 1] + step);
    }
    let mut cur = 0;
    for s in (0..r).rev() {
        lam[s] = cur;
        // λ_s > λ_{s+1} for odd s, λ_s >= λ_{s+1} for even s (1-based)
        cur += if s % 2 == 1 { rng.gen_range(1..=2) } else { rng.gen_range(0..=1) };
    }
    let shift = mu[r - 1] - lam[r - 1] + rng.gen_range(1..=2);
    for x in lam.iter_mut() {
        *x += shift;
    }
    crate::gen::gen_mu_lambda(&mu, &lam, n).ok()
}
