//! The matrix `A(s)`, its permutation support and two independent
//! determinant algorithms.
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::lweight::LWeight;
use crate::ring::{v_class, RingElement};
use crate::scalar::{sign, Coefficient};
use crate::snake::{AlternatingSnake, Direction};

/// Square matrix of optional interval entries; an absent entry is zero.
/// Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct IntervalMatrix {
    n: u32,
    rows: Vec<Vec<Option<Interval>>>,
}

impl IntervalMatrix {
    pub fn new(rows: Vec<Vec<Option<Interval>>>, n: u32) -> Result<Self> {
        let size = rows.len();
        if rows.iter().any(|r| r.len() != size) {
            return Err(Error::Precondition("matrix is not square".into()));
        }
        Ok(IntervalMatrix { n, rows })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn size(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, row: usize, col: usize) -> Option<Interval> {
        self.rows[row][col]
    }

    pub fn rows(&self) -> &[Vec<Option<Interval>>] {
        &self.rows
    }

    /// Drop one row and one column.
    pub fn minor(&self, row: usize, col: usize) -> IntervalMatrix {
        let rows = self
            .rows
            .iter()
            .enumerate()
            .filter(|(p, _)| *p != row)
            .map(|(_, r)| r.iter().enumerate().filter(|(l, _)| *l != col).map(|(_, x)| *x).collect())
            .collect();
        IntervalMatrix { n: self.n, rows }
    }

    pub fn transpose(&self) -> IntervalMatrix {
        let s = self.size();
        let rows = (0..s).map(|l| (0..s).map(|p| self.rows[p][l]).collect()).collect();
        IntervalMatrix { n: self.n, rows }
    }

    /// Relabel every entry by `[i, j] -> [-j, -i]`.
    pub fn omega(&self) -> IntervalMatrix {
        let rows = self.rows.iter().map(|r| r.iter().map(|x| x.map(|iv| iv.omega())).collect()).collect();
        IntervalMatrix { n: self.n, rows }
    }

    /// Rows of `x` (present) and `0` (absent), space separated.
    pub fn pattern(&self) -> String {
        let lines: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| if x.is_some() { "x" } else { "0" }).collect::<Vec<_>>().join(" "))
            .collect();
        lines.join("\n")
    }
}

impl fmt::Display for IntervalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            let cells: Vec<String> = r.iter().map(|x| x.map_or("0".to_string(), |iv| iv.to_string())).collect();
            writeln!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

fn bool_pattern_string(p: &[Vec<bool>]) -> String {
    let lines: Vec<String> =
        p.iter().map(|r| r.iter().map(|&x| if x { "x" } else { "0" }).collect::<Vec<_>>().join(" ")).collect();
    lines.join("\n")
}

/// Run directions from the first one, alternating.
fn alternating(first: Direction, k: usize) -> Vec<Direction> {
    let mut out = Vec::with_capacity(k);
    let mut d = first;
    for _ in 0..k {
        out.push(d);
        d = d.flip();
    }
    out
}

struct Breaks<'a> {
    r: &'a [usize],
    dirs: Vec<Direction>,
}

impl Breaks<'_> {
    fn k(&self) -> usize {
        self.r.len() - 1
    }

    fn at(&self, m: isize) -> usize {
        if m < 0 {
            1
        } else if m as usize > self.k() {
            *self.r.last().unwrap()
        } else {
            self.r[m as usize]
        }
    }

    fn runs_of(&self, p: usize) -> impl Iterator<Item = usize> + '_ {
        (1..=self.k()).filter(move |&m| self.r[m - 1] <= p && p <= self.r[m])
    }

    /// Row form: some run `m` containing `p` admits column `l`.
    fn row_window(&self, p: usize, l: usize) -> bool {
        self.runs_of(p).any(|m| {
            let m = m as isize;
            let (lo, hi) = match self.dirs[m as usize - 1] {
                Direction::Left => (self.at(m - 2), self.at(m + 1)),
                Direction::Right => (self.at(m - 1), self.at(m)),
            };
            lo <= l && l <= hi
        })
    }

    /// Column form: some run `m` containing `l` admits row `p`.
    fn col_window(&self, p: usize, l: usize) -> bool {
        self.runs_of(l).any(|m| {
            let m = m as isize;
            let (lo, hi) = match self.dirs[m as usize - 1] {
                Direction::Right => (self.at(m - 2), self.at(m + 1)),
                Direction::Left => (self.at(m - 1), self.at(m)),
            };
            lo <= p && p <= hi
        })
    }
}

/// Break-window part of the zero pattern, determined by the break vector
/// and the direction of the first run alone. `true` marks an admitted
/// entry.
pub fn window_pattern(breaks: &[usize], first: Direction) -> Vec<Vec<bool>> {
    let b = Breaks { r: breaks, dirs: alternating(first, breaks.len() - 1) };
    let r = *breaks.last().unwrap();
    (1..=r).map(|p| (1..=r).map(|l| b.row_window(p, l)).collect()).collect()
}

/// [`window_pattern`] rendered as text.
pub fn window_pattern_string(breaks: &[usize], first: Direction) -> String {
    bool_pattern_string(&window_pattern(breaks, first))
}

/// Which formulation of the entry rule to evaluate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EntryRule {
    Row,
    Column,
}

/// Evaluate the entry rule for `A(s)` in the chosen formulation.
pub fn matrix_by_rule(s: &AlternatingSnake, rule: EntryRule) -> IntervalMatrix {
    let b = Breaks { r: s.breaks(), dirs: s.directions().to_vec() };
    let r = s.len();
    let rows = (1..=r)
        .map(|p| {
            (1..=r)
                .map(|l| {
                    let iv = Interval::new(s.at(p).i, s.at(l).j);
                    let window = match rule {
                        EntryRule::Row => b.row_window(p, l),
                        EntryRule::Column => b.col_window(p, l),
                    };
                    let ok = iv.in_rank(s.n()) && s.span_connected(p.min(l), p.max(l)) && window;
                    ok.then_some(iv)
                })
                .collect()
        })
        .collect();
    IntervalMatrix { n: s.n(), rows }
}

/// `A(s)` together with its source snake.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnakeMatrix {
    snake: AlternatingSnake,
    matrix: IntervalMatrix,
}

impl SnakeMatrix {
    pub fn snake(&self) -> &AlternatingSnake {
        &self.snake
    }

    pub fn matrix(&self) -> &IntervalMatrix {
        &self.matrix
    }

    pub fn size(&self) -> usize {
        self.matrix.size()
    }
}

/// Build `A(s)`. The row and column formulations of the entry rule are
/// both evaluated and must agree.
pub fn build_matrix(s: &AlternatingSnake) -> SnakeMatrix {
    let matrix = matrix_by_rule(s, EntryRule::Row);
    let cols = matrix_by_rule(s, EntryRule::Column);
    assert_eq!(matrix, cols, "row and column entry rules disagree for {}", s);
    SnakeMatrix { snake: s.clone(), matrix }
}

/// One-line permutation notation, 1-based: `perm[t - 1] = σ(t)`.
pub type Permutation = Vec<usize>;

pub fn is_odd(perm: &[usize]) -> bool {
    let mut inv = 0usize;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] {
                inv += 1;
            }
        }
    }
    inv % 2 == 1
}

/// All `σ` with a nonzero product along the matrix, column-indexed
/// (`a_{σ(l), l}`) when `by_columns`, row-indexed (`a_{p, σ(p)}`) otherwise.
/// Lexicographic order.
pub fn support_permutations(m: &IntervalMatrix, by_columns: bool) -> Vec<Permutation> {
    fn rec(
        m: &IntervalMatrix,
        by_columns: bool,
        t: usize,
        used: &mut Vec<bool>,
        cur: &mut Permutation,
        out: &mut Vec<Permutation>,
    ) {
        let s = m.size();
        if t == s {
            out.push(cur.clone());
            return;
        }
        for x in 0..s {
            let present = if by_columns { m.get(x, t).is_some() } else { m.get(t, x).is_some() };
            if present && !used[x] {
                used[x] = true;
                cur.push(x + 1);
                rec(m, by_columns, t + 1, used, cur, out);
                cur.pop();
                used[x] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(m, by_columns, 0, &mut vec![false; m.size()], &mut Vec::new(), &mut out);
    out
}

/// `Σ(s)`: column-indexed when the first run is `Left`, row-indexed when
/// it is `Right`.
pub fn sigma_set(m: &SnakeMatrix) -> Vec<Permutation> {
    support_permutations(&m.matrix, m.snake.first_direction() == Direction::Left)
}

/// The tuple `σ(s)`.
pub fn sigma_apply(s: &AlternatingSnake, perm: &[usize]) -> Vec<Interval> {
    (1..=s.len())
        .map(|t| match s.first_direction() {
            Direction::Left => Interval::new(s.at(perm[t - 1]).i, s.at(t).j),
            Direction::Right => Interval::new(s.at(t).i, s.at(perm[t - 1]).j),
        })
        .collect()
}

fn entry_product<C: Coefficient>(m: &IntervalMatrix, perm: &[usize], by_columns: bool) -> RingElement<C> {
    let mut acc = RingElement::one(m.n());
    for (t, &x) in perm.iter().enumerate() {
        let iv = if by_columns { m.get(x - 1, t) } else { m.get(t, x - 1) };
        let v = match iv {
            Some(iv) => v_class(iv, m.n()),
            None => return RingElement::zero(m.n()),
        };
        acc = acc.mul(&v).expect("same rank");
    }
    acc
}

/// Leibniz sum over the permutation support of a general matrix.
pub fn det_leibniz_matrix<C: Coefficient>(m: &IntervalMatrix) -> RingElement<C> {
    let mut out = RingElement::zero(m.n());
    for perm in support_permutations(m, true) {
        let term = entry_product::<C>(m, &perm, true).scale(&sign(is_odd(&perm)));
        out = out.add(&term).expect("same rank");
    }
    out
}

/// Leibniz sum over `Σ(s)`.
pub fn det_leibniz<C: Coefficient>(m: &SnakeMatrix) -> RingElement<C> {
    let by_columns = m.snake.first_direction() == Direction::Left;
    let mut out = RingElement::zero(m.matrix.n());
    for perm in sigma_set(m) {
        let term = entry_product::<C>(&m.matrix, &perm, by_columns).scale(&sign(is_odd(&perm)));
        out = out.add(&term).expect("same rank");
    }
    out
}

/// Cofactor expansion along the sparsest remaining row or column,
/// memoized on the remaining row and column sets.
pub fn det_laplace_matrix<C: Coefficient>(m: &IntervalMatrix) -> RingElement<C> {
    let s = m.size();
    assert!(s <= 64, "matrix too large");
    let full = if s == 64 { u64::MAX } else { (1u64 << s) - 1 };
    let mut memo = HashMap::new();
    laplace_rec(m, full, full, &mut memo)
}

fn bits(mask: u64) -> impl Iterator<Item = usize> {
    (0..64).filter(move |b| mask >> b & 1 == 1)
}

fn laplace_rec<C: Coefficient>(
    m: &IntervalMatrix,
    rows: u64,
    cols: u64,
    memo: &mut HashMap<(u64, u64), RingElement<C>>,
) -> RingElement<C> {
    if rows == 0 {
        return RingElement::one(m.n());
    }
    if let Some(x) = memo.get(&(rows, cols)) {
        return x.clone();
    }
    let row_count = |p: usize| bits(cols).filter(|&l| m.get(p, l).is_some()).count();
    let col_count = |l: usize| bits(rows).filter(|&p| m.get(p, l).is_some()).count();
    let best_row = bits(rows).map(|p| (row_count(p), p)).min().unwrap();
    let best_col = bits(cols).map(|l| (col_count(l), l)).min().unwrap();
    let mut out = RingElement::zero(m.n());
    if best_row.0 == 0 || best_col.0 == 0 {
        memo.insert((rows, cols), out.clone());
        return out;
    }
    let along_row = best_row.0 <= best_col.0;
    let (fixed, fixed_pos) = if along_row {
        (best_row.1, bits(rows).position(|p| p == best_row.1).unwrap())
    } else {
        (best_col.1, bits(cols).position(|l| l == best_col.1).unwrap())
    };
    let others = if along_row { cols } else { rows };
    for (pos, x) in bits(others).enumerate() {
        let (p, l) = if along_row { (fixed, x) } else { (x, fixed) };
        let Some(iv) = m.get(p, l) else { continue };
        let v = v_class::<C>(iv, m.n());
        if v.is_zero() {
            continue;
        }
        let sub = laplace_rec(m, rows & !(1 << p), cols & !(1 << l), memo);
        if sub.is_zero() {
            continue;
        }
        let term = v.mul(&sub).expect("same rank").scale(&sign((pos + fixed_pos) % 2 == 1));
        out = out.add(&term).expect("same rank");
    }
    memo.insert((rows, cols), out.clone());
    out
}

pub fn det_laplace<C: Coefficient>(m: &SnakeMatrix) -> RingElement<C> {
    det_laplace_matrix(&m.matrix)
}

/// Signed standard-module labels: normalized `ω_{σ(s)}` with summed signs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expansion<C: Coefficient> {
    n: u32,
    terms: BTreeMap<LWeight, C>,
}

impl<C: Coefficient> Expansion<C> {
    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn coeff(&self, w: &LWeight) -> C {
        self.terms.get(w).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in canonical weight order.
    pub fn iter(&self) -> impl Iterator<Item = (&LWeight, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Relabel every weight by `Ω`.
    pub fn omega(&self) -> Self {
        Expansion { n: self.n, terms: self.terms.iter().map(|(w, c)| (w.omega(), c.clone())).collect() }
    }

    /// `Σ c [W(ω)]` in the polynomial ring.
    pub fn to_ring(&self) -> Result<RingElement<C>> {
        let mut out = RingElement::zero(self.n);
        for (w, c) in self.iter() {
            out = out.add(&crate::ring::weyl_class::<C>(w)?.scale(c))?;
        }
        Ok(out)
    }
}

/// Signed sum over `Σ(s)` grouped by `ω_{σ(s)}`, for any valid snake.
pub fn sigma_expansion<C: Coefficient>(s: &AlternatingSnake) -> Expansion<C> {
    let m = build_matrix(s);
    let mut terms: BTreeMap<LWeight, C> = BTreeMap::new();
    for perm in sigma_set(&m) {
        let w = LWeight::of_intervals(&sigma_apply(s, &perm), s.n()).expect("entries are well formed");
        let slot = terms.entry(w.clone()).or_insert_with(C::zero);
        *slot = slot.clone() + sign::<C>(is_odd(&perm));
        if slot.is_zero() {
            terms.remove(&w);
        }
    }
    Expansion { n: s.n(), terms }
}

/// `[V(ω_s)] = Σ_{σ ∈ Σ(s)} ± [W(ω_{σ(s)})]` for stable snakes.
pub fn standard_expansion<C: Coefficient>(s: &AlternatingSnake) -> Result<Expansion<C>> {
    if !s.is_stable() {
        return Err(Error::NotStable);
    }
    Ok(sigma_expansion(s))
}

/// Drop the first column and row `p` (first run `Left`) or the first row
/// and column `p` (first run `Right`); `p` is 1-based.
pub fn first_minor(s: &AlternatingSnake, m: &IntervalMatrix, p: usize) -> IntervalMatrix {
    match s.first_direction() {
        Direction::Left => m.minor(p - 1, 0),
        Direction::Right => m.minor(0, p - 1),
    }
}

/// The snake `s_p` whose matrix is compared with the `p`-th first minor.
pub fn derived_snake(s: &AlternatingSnake, p: usize) -> Result<AlternatingSnake> {
    let r = s.len();
    if p == 0 || p > s.brk(1) || r < 2 {
        return Err(Error::IndexOutOfRange(format!("p={} outside 1..={} (r={})", p, s.brk(1), r)));
    }
    if p == 1 {
        return s.sub(1, r);
    }
    let mut ivs: Vec<Interval> = (1..p)
        .map(|t| match s.first_direction() {
            Direction::Left => Interval::new(s.at(t).i, s.at(t + 1).j),
            Direction::Right => Interval::new(s.at(t + 1).i, s.at(t).j),
        })
        .collect();
    ivs.extend_from_slice(&s.intervals()[p..]);
    let mut breaks = vec![1];
    breaks.extend(s.breaks()[1..].iter().map(|b| b - 1).filter(|&b| b > 1));
    if breaks.len() == 1 {
        breaks.push(1);
    }
    AlternatingSnake::new(&ivs, &breaks, s.n())
}

/// Outcome of comparing `A(s_p)` with the first minor `A_p(s)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorReport {
    pub det_equal: bool,
    pub entries_equal: bool,
}

/// Compare `det A(s_p)` with `det A_p(s)` (and the matrices entrywise).
pub fn minor_report(s: &AlternatingSnake, p: usize) -> Result<MinorReport> {
    if !(s.is_prime() && s.is_stable()) {
        return Err(Error::Precondition("minor identity needs a prime stable snake".into()));
    }
    if s.len() == 1 {
        return Ok(MinorReport { det_equal: true, entries_equal: true });
    }
    let sp = derived_snake(s, p)?;
    let lhs = build_matrix(&sp);
    let rhs = first_minor(s, &build_matrix(s).matrix, p);
    let dl: RingElement<num_bigint::BigInt> = det_laplace(&lhs);
    let dr = det_laplace_matrix(&rhs);
    Ok(MinorReport { det_equal: dl == dr, entries_equal: lhs.matrix == rhs })
}

/// `det A(s_p) = det A_p(s)`.
pub fn minor_check(s: &AlternatingSnake, p: usize) -> Result<bool> {
    Ok(minor_report(s, p)?.det_equal)
}

/// `det A(s) = det A(s(0, l)) det A(s(l, r))` at the first prime-factor
/// boundary `l`.
pub fn split_check(s: &AlternatingSnake) -> Result<bool> {
    if !s.is_stable() {
        return Err(Error::NotStable);
    }
    let Some(&l) = s.cut_points().first() else {
        return Err(Error::Precondition("snake is prime".into()));
    };
    let whole: RingElement<num_bigint::BigInt> = det_laplace(&build_matrix(s));
    let left = det_laplace(&build_matrix(&s.sub(0, l)?));
    let right = det_laplace(&build_matrix(&s.sub(l, s.len())?));
    Ok(whole == left.mul(&right)?)
}
