//! Alternating snakes: validation, predicates, sub-snakes, the two
//! symmetries and prime decomposition.
use std::fmt;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::lweight::{gamma_product, LWeight};

/// Direction of a run. `Left` runs have both endpoint sequences strictly
/// decreasing, `Right` runs strictly increasing.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Direction {
    Left,
    Right,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::Left => Direction::Right,
            Direction::Right => Direction::Left,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Direction::Left => "left",
            Direction::Right => "right",
        }
    }

    fn of_pair(a: &Interval, b: &Interval) -> Option<Self> {
        if b.i < a.i && b.j < a.j {
            Some(Direction::Left)
        } else if b.i > a.i && b.j > a.j {
            Some(Direction::Right)
        } else {
            None
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ViolationKind {
    Malformed,
    /// Repeated interval.
    Distinct,
    /// A run that is not a strictly monotone ladder.
    Monotone,
    /// Two consecutive runs with the same direction.
    Alternation,
    /// Overlap across a break.
    BreakOverlap,
}

impl ViolationKind {
    pub fn tag(self) -> &'static str {
        match self {
            ViolationKind::Malformed => "malformed",
            ViolationKind::Distinct => "alt-1",
            ViolationKind::Monotone => "alt0",
            ViolationKind::Alternation => "alt1",
            ViolationKind::BreakOverlap => "alt2",
        }
    }
}

/// A violated condition with 1-based witness positions (or run numbers for
/// `Alternation`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub kind: ViolationKind,
    pub witnesses: Vec<usize>,
    pub message: String,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {:?}: {}", self.kind.tag(), self.witnesses, self.message)
    }
}

/// Interval tuple with a break vector `1 = r_0 < r_1 < … < r_k = r`.
///
/// Run `m` occupies positions `r_{m-1} ..= r_m` (1-based), so adjacent runs
/// share their break position. A single interval is stored with breaks
/// `[1, 1]` and counts as one `Left` run.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct AlternatingSnake {
    n: u32,
    intervals: Vec<Interval>,
    breaks: Vec<usize>,
    dirs: Vec<Direction>,
}

fn violation(kind: ViolationKind, witnesses: Vec<usize>, message: String) -> Violation {
    Violation { kind, witnesses, message }
}

/// Check every condition and build the snake, or list all violations.
pub fn validate(
    intervals: &[Interval],
    breaks: &[usize],
    n: u32,
) -> std::result::Result<AlternatingSnake, Vec<Violation>> {
    use ViolationKind::*;
    let r = intervals.len();
    let mut out = Vec::new();
    if n == 0 {
        out.push(violation(Malformed, vec![], "rank must be positive".into()));
    }
    if r == 0 {
        out.push(violation(Malformed, vec![], "empty interval list".into()));
        return Err(out);
    }
    for (t, iv) in intervals.iter().enumerate() {
        if n > 0 && !iv.in_rank(n) {
            out.push(violation(Malformed, vec![t + 1], format!("{} not well formed at rank {}", iv, n)));
        }
    }
    let breaks: Vec<usize> = if r == 1 && breaks == [1] { vec![1, 1] } else { breaks.to_vec() };
    let breaks_ok = if r == 1 {
        breaks == [1, 1]
    } else {
        breaks.len() >= 2
            && breaks[0] == 1
            && *breaks.last().unwrap() == r
            && breaks.windows(2).all(|w| w[0] < w[1])
    };
    if !breaks_ok {
        out.push(violation(Malformed, vec![], format!("break vector {:?} does not run strictly from 1 to {}", breaks, r)));
        return Err(out);
    }
    for s in 0..r {
        for p in s + 1..r {
            if intervals[s] == intervals[p] {
                out.push(violation(Distinct, vec![s + 1, p + 1], format!("{} repeated", intervals[s])));
            }
        }
    }
    let k = breaks.len() - 1;
    let mut dirs = Vec::with_capacity(k);
    for m in 1..=k {
        let (lo, hi) = (breaks[m - 1], breaks[m]);
        if lo == hi {
            dirs.push(Direction::Left);
            continue;
        }
        let d = Direction::of_pair(&intervals[lo - 1], &intervals[lo]);
        let mut ok = d.is_some();
        if d.is_none() {
            out.push(violation(
                Monotone,
                vec![lo, lo + 1],
                format!("run {} is not strictly monotone at positions {} and {}", m, lo, lo + 1),
            ));
        }
        for t in lo..hi {
            if ok && Direction::of_pair(&intervals[t - 1], &intervals[t]) != d {
                ok = false;
                out.push(violation(
                    Monotone,
                    vec![t, t + 1],
                    format!("run {} is not strictly monotone at positions {} and {}", m, t, t + 1),
                ));
                break;
            }
        }
        match d {
            Some(d) if ok => dirs.push(d),
            _ => dirs.push(Direction::Left),
        }
    }
    let monotone_ok = !out.iter().any(|v| v.kind == Monotone);
    if monotone_ok {
        for m in 1..k {
            if dirs[m - 1] == dirs[m] {
                out.push(violation(
                    Alternation,
                    vec![m, m + 1],
                    format!("runs {} and {} are both {}", m, m + 1, dirs[m].name()),
                ));
            }
        }
    }
    for &b in &breaks[1..k] {
        for s in 1..b {
            for l in b + 1..=r {
                if intervals[s - 1].overlaps(&intervals[l - 1]) {
                    out.push(violation(
                        BreakOverlap,
                        vec![s, l],
                        format!("{} and {} overlap across break {}", intervals[s - 1], intervals[l - 1], b),
                    ));
                }
            }
        }
    }
    if out.is_empty() {
        Ok(AlternatingSnake { n, intervals: intervals.to_vec(), breaks, dirs })
    } else {
        Err(out)
    }
}

impl AlternatingSnake {
    pub fn new(intervals: &[Interval], breaks: &[usize], n: u32) -> Result<Self> {
        validate(intervals, breaks, n).map_err(Error::InvalidSnake)
    }

    /// A single-run snake with breaks `(1, r)`.
    pub fn ladder(intervals: &[Interval], n: u32) -> Result<Self> {
        let r = intervals.len();
        Self::new(intervals, &[1, r.max(1)], n)
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Number of intervals `r`.
    pub fn len(&self) -> usize {
        self.intervals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.intervals.is_empty()
    }

    pub fn intervals(&self) -> &[Interval] {
        &self.intervals
    }

    /// Interval at 1-based position `p`.
    pub fn at(&self, p: usize) -> Interval {
        self.intervals[p - 1]
    }

    pub fn breaks(&self) -> &[usize] {
        &self.breaks
    }

    /// Number of runs `k`.
    pub fn k(&self) -> usize {
        self.breaks.len() - 1
    }

    /// `r_m`, clamped to `1` below zero and to `r` above `k`.
    pub fn brk(&self, m: isize) -> usize {
        if m < 0 {
            1
        } else if m as usize > self.k() {
            self.len()
        } else {
            self.breaks[m as usize]
        }
    }

    /// Direction of run `m` (1-based).
    pub fn direction(&self, m: usize) -> Direction {
        self.dirs[m - 1]
    }

    pub fn directions(&self) -> &[Direction] {
        &self.dirs
    }

    pub fn first_direction(&self) -> Direction {
        self.dirs[0]
    }

    /// Runs containing position `p` (two when `p` is an interior break).
    pub fn runs_of(&self, p: usize) -> Vec<usize> {
        (1..=self.k()).filter(|&m| self.breaks[m - 1] <= p && p <= self.breaks[m]).collect()
    }

    pub fn omega_weight(&self) -> LWeight {
        LWeight::of_intervals(&self.intervals, self.n).expect("validated intervals")
    }

    /// Same intervals and breaks re-validated at rank `n`.
    pub fn with_rank(&self, n: u32) -> Result<Self> {
        Self::new(&self.intervals, &self.breaks, n)
    }

    /// Positions `p+1 ..= p'` with the induced break vector.
    pub fn sub(&self, p: usize, q: usize) -> Result<Self> {
        if p >= q || q > self.len() {
            return Err(Error::IndexOutOfRange(format!("sub-snake ({}, {}) of length {}", p, q, self.len())));
        }
        let len = q - p;
        let mut breaks = vec![1];
        breaks.extend(self.breaks.iter().filter(|&&b| p + 1 < b && b < q).map(|&b| b - p));
        breaks.push(len);
        Self::new(&self.intervals[p..q], &breaks, self.n)
    }

    /// The reversed snake.
    pub fn reverse(&self) -> Self {
        let r = self.len();
        let mut intervals = self.intervals.clone();
        intervals.reverse();
        let breaks: Vec<usize> = if r == 1 { vec![1, 1] } else { self.breaks.iter().rev().map(|&b| r - b + 1).collect() };
        let mut dirs: Vec<Direction> = self.dirs.iter().rev().map(|d| d.flip()).collect();
        if r == 1 {
            dirs = self.dirs.clone();
        }
        AlternatingSnake { n: self.n, intervals, breaks, dirs }
    }

    /// `[i, j] -> [-j, -i]` on every interval, same breaks.
    pub fn omega(&self) -> Self {
        let dirs = if self.len() == 1 { self.dirs.clone() } else { self.dirs.iter().map(|d| d.flip()).collect() };
        AlternatingSnake {
            n: self.n,
            intervals: self.intervals.iter().map(|iv| iv.omega()).collect(),
            breaks: self.breaks.clone(),
            dirs,
        }
    }

    /// Adjacent positions `(p, p+1)` connected.
    pub fn pair_connected(&self, p: usize) -> bool {
        self.at(p).connected(&self.at(p + 1), self.n)
    }

    /// Every adjacent pair in positions `lo ..= hi` connected.
    pub fn span_connected(&self, lo: usize, hi: usize) -> bool {
        (lo..hi).all(|p| self.pair_connected(p))
    }

    pub fn is_connected(&self) -> bool {
        self.span_connected(1, self.len())
    }

    /// Interior breaks `r_1, …, r_{k-1}`.
    pub fn interior_breaks(&self) -> &[usize] {
        let k = self.k();
        if k <= 1 {
            &[]
        } else {
            &self.breaks[1..k]
        }
    }

    pub fn is_stable(&self) -> bool {
        self.interior_breaks().iter().all(|&b| {
            let (a, c) = (self.at(b - 1), self.at(b + 1));
            (c.i >= a.i || c.j < a.i) && (a.j >= c.j || a.j < c.i)
        })
    }

    pub fn is_prime(&self) -> bool {
        self.is_connected()
            && self.interior_breaks().iter().all(|&b| {
                let (a, c) = (self.at(b - 1), self.at(b + 1));
                a.i != c.i && a.j != c.j
            })
    }

    /// First position `p` after which the snake splits, if any.
    fn first_cut(&self) -> Option<usize> {
        let r = self.len();
        let mut best = (1..r).find(|&p| !self.pair_connected(p));
        for (m, &b) in self.breaks.iter().enumerate().take(self.k()).skip(1) {
            let (a, c) = (self.at(b - 1), self.at(b + 1));
            let (ba, bc) = if a.i == c.i {
                (a.j, c.j)
            } else if a.j == c.j {
                (a.i, c.i)
            } else {
                continue;
            };
            let eps = match self.direction(m) {
                Direction::Left => usize::from(ba >= bc),
                Direction::Right => usize::from(ba <= bc),
            };
            let p = b - eps;
            best = Some(best.map_or(p, |q| q.min(p)));
        }
        best
    }

    /// Global cut positions of the prime decomposition.
    pub fn cut_points(&self) -> Vec<usize> {
        let mut cuts = Vec::new();
        let mut offset = 0;
        let mut cur = self.clone();
        while let Some(p) = cur.first_cut() {
            cuts.push(offset + p);
            offset += p;
            cur = cur.sub(p, cur.len()).expect("remainder of a valid snake");
        }
        cuts
    }

    /// Prime factors, left to right.
    pub fn prime_decompose(&self) -> Vec<AlternatingSnake> {
        let mut out = Vec::new();
        let mut last = 0;
        for c in self.cut_points() {
            out.push(self.sub(last, c).expect("cut inside range"));
            last = c;
        }
        out.push(self.sub(last, self.len()).expect("cut inside range"));
        out
    }

    /// Positions `l ..= l'` lie in one prime factor.
    pub fn contained_in_prime_factor(&self, l: usize, lp: usize) -> Result<bool> {
        if l == 0 || l > lp || lp > self.len() {
            return Err(Error::IndexOutOfRange(format!("({}, {}) for length {}", l, lp, self.len())));
        }
        Ok(!self.cut_points().iter().any(|&c| l <= c && c < lp))
    }

    /// Swap the upper endpoints at positions `p, p+1`, returning the new
    /// tuple and the γ factor with `ω_τ = ω_s γ⁻¹`.
    pub fn tau(&self, p: usize) -> Result<(Vec<Interval>, LWeight)> {
        if p == 0 || p >= self.len() {
            return Err(Error::Precondition(format!("need 1 <= p <= r-1, got p={} with r={}", p, self.len())));
        }
        if !self.contained_in_prime_factor(p, p + 1)? {
            return Err(Error::Precondition(format!("positions {} and {} lie in different prime factors", p, p + 1)));
        }
        let (a, b) = (self.at(p), self.at(p + 1));
        let mut out = self.intervals.clone();
        out[p - 1] = Interval::new(b.i, a.j);
        out[p] = Interval::new(a.i, b.j);
        let gamma = if a.i < b.i { gamma_product(a, b, self.n)? } else { gamma_product(b, a, self.n)? };
        Ok((out, gamma))
    }
}

impl fmt::Display for AlternatingSnake {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let ivs: Vec<String> = self.intervals.iter().map(|x| x.to_string()).collect();
        write!(f, "({}) r={:?} n={}", ivs.join(","), self.breaks, self.n)
    }
}
