//! Lattice paths with ±1 steps and their corner weights.
use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::lweight::LWeight;
use crate::snake::{AlternatingSnake, Direction};

/// `g : {0, …, n+1} -> Z` with `g(0) = 2j`, `g(n+1) = n+1+2i` and unit
/// steps.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Path {
    iv: Interval,
    n: u32,
    values: Vec<i64>,
}

impl Path {
    pub fn new(iv: Interval, n: u32, values: Vec<i64>) -> Result<Self> {
        let ok = values.len() == n as usize + 2
            && values[0] == 2 * iv.j
            && values[n as usize + 1] == n as i64 + 1 + 2 * iv.i
            && values.windows(2).all(|w| (w[1] - w[0]).abs() == 1);
        if !ok {
            return Err(Error::Precondition(format!("{:?} is not a path for {} at rank {}", values, iv, n)));
        }
        Ok(Path { iv, n, values })
    }

    pub fn interval(&self) -> Interval {
        self.iv
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    /// Strictly above `other` at every point.
    pub fn dominates(&self, other: &Path) -> bool {
        self.values.iter().zip(&other.values).all(|(a, b)| a > b)
    }
}

/// All paths for `[i, j]`; there are `C(n+1, j-i)` of them.
pub fn enum_paths(iv: Interval, n: u32) -> Result<Vec<Path>> {
    if !iv.in_rank(n) {
        return Err(Error::MalformedInterval { iv, n });
    }
    fn rec(len: usize, downs: i64, vals: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if vals.len() == len {
            if downs == 0 {
                out.push(vals.clone());
            }
            return;
        }
        let remaining = (len - vals.len()) as i64;
        let last = *vals.last().unwrap();
        // up steps first keeps the output sorted
        if remaining > downs {
            vals.push(last + 1);
            rec(len, downs, vals, out);
            vals.pop();
        }
        if downs > 0 {
            vals.push(last - 1);
            rec(len, downs - 1, vals, out);
            vals.pop();
        }
    }
    let len = n as usize + 2;
    let mut vals = Vec::with_capacity(len);
    vals.push(2 * iv.j);
    let mut raw = Vec::new();
    rec(len, iv.len(), &mut vals, &mut raw);
    Ok(raw.into_iter().map(|values| Path { iv, n, values }).collect())
}

/// Local minima (`plus`) and maxima (`minus`) at interior points, each
/// recorded as `[(g(r)-r)/2, (g(r)+r)/2]`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CornerSet {
    pub plus: Vec<Interval>,
    pub minus: Vec<Interval>,
}

pub fn corners(g: &Path) -> CornerSet {
    let v = &g.values;
    let mut out = CornerSet::default();
    for r in 1..v.len() - 1 {
        let iv = Interval::new((v[r] - r as i64) / 2, (v[r] + r as i64) / 2);
        if v[r - 1] == v[r] + 1 && v[r + 1] == v[r] + 1 {
            out.plus.push(iv);
        } else if v[r - 1] == v[r] - 1 && v[r + 1] == v[r] - 1 {
            out.minus.push(iv);
        }
    }
    out
}

/// `ω(g) = ∏_{plus} ω · ∏_{minus} ω⁻¹`.
pub fn path_weight(g: &Path) -> LWeight {
    let c = corners(g);
    let gens = c.plus.iter().map(|&iv| (iv, 1)).chain(c.minus.iter().map(|&iv| (iv, -1)));
    LWeight::from_generators(gens, g.n).expect("corners have interior length")
}

/// The single-run snake whose tuples are enumerated: the snake itself when
/// its run is `Left`, its reversal (same ℓ-weight) when `Right`.
fn left_ladder(s: &AlternatingSnake) -> Result<AlternatingSnake> {
    if s.k() != 1 {
        return Err(Error::Unsupported(format!("path model needs a single run, got {} runs", s.k())));
    }
    Ok(match s.first_direction() {
        Direction::Left => s.clone(),
        Direction::Right => s.reverse(),
    })
}

/// Path tuples `(g_1, …, g_r)`, `g_s` a path for the `s`-th interval,
/// with `g_s > g_{s+1}` pointwise.
pub fn non_crossing_tuples(s: &AlternatingSnake) -> Result<Vec<Vec<Path>>> {
    let s = left_ladder(s)?;
    let per: Vec<Vec<Path>> = s.intervals().iter().map(|&iv| enum_paths(iv, s.n())).collect::<Result<_>>()?;
    let mut out = Vec::new();
    fn rec(per: &[Vec<Path>], cur: &mut Vec<Path>, out: &mut Vec<Vec<Path>>) {
        let t = cur.len();
        if t == per.len() {
            out.push(cur.clone());
            return;
        }
        for g in &per[t] {
            if t == 0 || cur[t - 1].dominates(g) {
                cur.push(g.clone());
                rec(per, cur, out);
                cur.pop();
            }
        }
    }
    rec(&per, &mut Vec::new(), &mut out);
    Ok(out)
}

/// Number of non-crossing tuples, without materializing them.
pub fn snake_dim(s: &AlternatingSnake) -> Result<u128> {
    let s = left_ladder(s)?;
    let per: Vec<Vec<Path>> = s.intervals().iter().map(|&iv| enum_paths(iv, s.n())).collect::<Result<_>>()?;
    // count[x] = number of admissible partial tuples ending in path x
    let mut count: Vec<u128> = vec![1; per[0].len()];
    for t in 1..per.len() {
        count = per[t]
            .iter()
            .map(|g| per[t - 1].iter().zip(&count).filter(|(h, _)| h.dominates(g)).map(|(_, c)| c).sum())
            .collect();
    }
    Ok(count.iter().sum())
}

/// Walk every non-crossing tuple keeping the product of corner weights as
/// a dense exponent vector; `keep` sees the vector and its count of
/// negative entries at each complete tuple.
fn walk_weights<F: FnMut(&[i64], usize)>(s: &AlternatingSnake, mut keep: F) -> Result<Vec<Interval>> {
    let s = left_ladder(s)?;
    let per: Vec<Vec<Path>> = s.intervals().iter().map(|&iv| enum_paths(iv, s.n())).collect::<Result<_>>()?;
    let mut index: BTreeMap<Interval, usize> = BTreeMap::new();
    let mut sparse: Vec<Vec<Vec<(usize, i64)>>> = Vec::with_capacity(per.len());
    for paths in &per {
        let mut ws = Vec::with_capacity(paths.len());
        for g in paths {
            let c = corners(g);
            let mut w = Vec::new();
            for (list, e) in [(&c.plus, 1), (&c.minus, -1)] {
                for iv in list {
                    let next = index.len();
                    w.push((*index.entry(*iv).or_insert(next), e));
                }
            }
            ws.push(w);
        }
        sparse.push(ws);
    }
    // below[t][a] = paths of position t+1 lying under path a of position t
    let below: Vec<Vec<Vec<usize>>> = per
        .windows(2)
        .map(|w| w[0].iter().map(|h| (0..w[1].len()).filter(|&b| h.dominates(&w[1][b])).collect()).collect())
        .collect();

    struct Walk<'a, F> {
        sparse: &'a [Vec<Vec<(usize, i64)>>],
        below: &'a [Vec<Vec<usize>>],
        exps: Vec<i64>,
        neg: usize,
        keep: F,
    }
    impl<F: FnMut(&[i64], usize)> Walk<'_, F> {
        fn shift(&mut self, t: usize, a: usize, sign: i64) {
            for &(x, e) in &self.sparse[t][a] {
                let before = self.exps[x] < 0;
                self.exps[x] += sign * e;
                let after = self.exps[x] < 0;
                match (before, after) {
                    (false, true) => self.neg += 1,
                    (true, false) => self.neg -= 1,
                    _ => {}
                }
            }
        }
        fn visit(&mut self, t: usize, a: usize) {
            self.shift(t, a, 1);
            if t + 1 == self.sparse.len() {
                (self.keep)(&self.exps, self.neg);
            } else {
                for i in 0..self.below[t][a].len() {
                    let b = self.below[t][a][i];
                    self.visit(t + 1, b);
                }
            }
            self.shift(t, a, -1);
        }
    }
    let mut walk = Walk { sparse: &sparse, below: &below, exps: vec![0; index.len()], neg: 0, keep: &mut keep };
    for a in 0..per[0].len() {
        walk.visit(0, a);
    }
    let mut names = vec![Interval::new(0, 0); index.len()];
    for (iv, x) in index {
        names[x] = iv;
    }
    Ok(names)
}

fn collect_weights(s: &AlternatingSnake, dominant_only: bool) -> Result<BTreeSet<LWeight>> {
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let names = walk_weights(s, |exps, neg| {
        if !(dominant_only && neg > 0) && !seen.contains(exps) {
            seen.insert(exps.to_vec());
        }
    })?;
    seen.into_iter()
        .map(|exps| LWeight::from_generators(names.iter().copied().zip(exps).filter(|(_, e)| *e != 0), s.n()))
        .collect()
}

/// Products `ω(g_1)⋯ω(g_r)` over non-crossing tuples.
pub fn ell_weight_set(s: &AlternatingSnake) -> Result<BTreeSet<LWeight>> {
    collect_weights(s, false)
}

/// Members of [`ell_weight_set`] with nonnegative exponents.
pub fn dominant_weights(s: &AlternatingSnake) -> Result<BTreeSet<LWeight>> {
    collect_weights(s, true)
}
