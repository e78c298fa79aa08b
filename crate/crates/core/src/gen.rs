//! Two explicit families of alternating snakes.
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::snake::AlternatingSnake;

fn chain(index: usize, what: impl Into<String>) -> Error {
    Error::Chain { index, what: what.into() }
}

/// Swap `(a, a+1), (a+2, a+3), …` starting at `start`, leaving an unpaired
/// last index fixed. Indices are 1-based.
fn pair_swap(t: usize, r: usize, start: usize) -> usize {
    if t < start {
        return t;
    }
    let off = t - start;
    let partner = if off % 2 == 0 { t + 1 } else { t - 1 };
    if partner > r {
        t
    } else {
        partner
    }
}

/// The snake `([μ1,λ2], [μ3,λ1], [μ2,λ4], [μ5,λ3], …)` with breaks
/// `(1, 2, …, r)`.
pub fn gen_mu_lambda(mu: &[i64], lambda: &[i64], n: u32) -> Result<AlternatingSnake> {
    let r = mu.len();
    if r == 0 || lambda.len() != r {
        return Err(chain(0, format!("need equal nonempty lengths, got {} and {}", r, lambda.len())));
    }
    for s in 1..r {
        let (a, b) = (mu[s - 1], mu[s]);
        let ok = if s % 2 == 1 { a <= b } else { a < b };
        if !ok {
            return Err(chain(s, format!("mu_{} = {} vs mu_{} = {}", s, a, s + 1, b)));
        }
        let (a, b) = (lambda[s - 1], lambda[s]);
        let ok = if s % 2 == 1 { a > b } else { a >= b };
        if !ok {
            return Err(chain(s, format!("lambda_{} = {} vs lambda_{} = {}", s, a, s + 1, b)));
        }
    }
    let first = lambda[0] - mu[0];
    let last = lambda[r - 1] - mu[r - 1];
    if !(n as i64 + 1 > first && first >= last && last > 0) {
        return Err(chain(r, format!("need n+1 > {} >= {} > 0 with n = {}", first, last, n)));
    }
    let ivs: Vec<Interval> =
        (1..=r).map(|t| Interval::new(mu[pair_swap(t, r, 2) - 1], lambda[pair_swap(t, r, 1) - 1])).collect();
    let breaks: Vec<usize> = (1..=r).collect();
    AlternatingSnake::new(&ivs, &breaks, n)
}

/// Blocks of positions in increasing order of the lower endpoints. Values
/// strictly increase inside a block and weakly between blocks.
pub fn exmore_i_blocks(breaks: &[usize]) -> Vec<Vec<usize>> {
    let k = breaks.len() - 1;
    let mut out = Vec::new();
    for t in 1..=k {
        let (lo, hi) = (breaks[t - 1], breaks[t]);
        if t % 2 == 1 {
            out.push((lo..=hi).rev().collect());
        } else {
            let mut b: Vec<usize> = (lo + 1..hi).collect();
            if t == k {
                b.push(hi);
            }
            out.push(b);
        }
    }
    out
}

/// Positions in strictly decreasing order of the upper endpoints.
pub fn exmore_j_order(breaks: &[usize]) -> Vec<usize> {
    let k = breaks.len() - 1;
    let mut out = Vec::new();
    for t in 1..=k {
        let (lo, hi) = (breaks[t - 1], breaks[t]);
        if t == 1 {
            out.extend(lo..hi);
        } else if t % 2 == 0 {
            out.extend((lo..=hi).rev());
        } else {
            out.extend(lo + 1..hi);
        }
        if t == k && t % 2 == 1 {
            out.push(hi);
        }
    }
    out
}

/// Whether the junction entering block `b` of [`exmore_i_blocks`] must be
/// strict. This is the case only for a final odd run of a single step,
/// where equality would repeat a lower endpoint across the last break.
pub fn exmore_strict_junction(breaks: &[usize], b: usize) -> bool {
    let k = breaks.len() - 1;
    b + 1 == k && k >= 3 && k % 2 == 1 && breaks[k] == breaks[k - 1] + 1
}

fn check_exmore_breaks(breaks: &[usize], r: usize) -> Result<()> {
    let k = breaks.len().saturating_sub(1);
    if k == 0 || breaks[0] != 1 || breaks[k] != r || r < 2 {
        return Err(chain(0, format!("breaks {:?} must run from 1 to r = {} >= 2", breaks, r)));
    }
    for l in 1..=k {
        let need = if l < k { breaks[l - 1] + 1 } else { breaks[l - 1] };
        if breaks[l] <= need {
            return Err(chain(l, format!("break r_{} = {} too close to r_{} = {}", l, breaks[l], l - 1, breaks[l - 1])));
        }
    }
    Ok(())
}

/// Validate the inequality chains and build the snake at the smallest
/// admissible rank, returned alongside it.
pub fn gen_exmore(breaks: &[usize], i: &[i64], j: &[i64]) -> Result<(AlternatingSnake, u32)> {
    let r = i.len();
    if j.len() != r {
        return Err(chain(0, format!("lower and upper lengths differ: {} vs {}", r, j.len())));
    }
    check_exmore_breaks(breaks, r)?;
    let blocks = exmore_i_blocks(breaks);
    let mut prev: Option<usize> = None;
    for (bi, b) in blocks.iter().enumerate() {
        for (t, &p) in b.iter().enumerate() {
            if let Some(q) = prev {
                let weak = t == 0 && !exmore_strict_junction(breaks, bi);
                let ok = if weak { i[q - 1] <= i[p - 1] } else { i[q - 1] < i[p - 1] };
                if !ok {
                    return Err(chain(p, format!("i_{} = {} against i_{} = {}", q, i[q - 1], p, i[p - 1])));
                }
            }
            prev = Some(p);
        }
    }
    let order = exmore_j_order(breaks);
    for w in order.windows(2) {
        let (a, b) = (w[0], w[1]);
        if j[a - 1] <= j[b - 1] {
            return Err(chain(b, format!("j_{} = {} against j_{} = {}", a, j[a - 1], b, j[b - 1])));
        }
    }
    let mut need = 1i64;
    for s in 0..r {
        for p in 0..r {
            let delta = i64::from(s == p);
            if j[s] - i[p] < delta {
                return Err(chain(s + 1, format!("j_{} - i_{} = {} < {}", s + 1, p + 1, j[s] - i[p], delta)));
            }
            need = need.max(j[s] - i[p] + delta - 1);
        }
    }
    let n = u32::try_from(need).map_err(|_| chain(0, "rank overflow"))?;
    let ivs: Vec<Interval> = (0..r).map(|t| Interval::new(i[t], j[t])).collect();
    Ok((AlternatingSnake::new(&ivs, breaks, n)?, n))
}
