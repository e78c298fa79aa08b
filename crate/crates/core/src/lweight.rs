//! The ℓ-weight group: free abelian group on intervals modulo the boundary
//! identities, the root monoid and the partial order it defines.
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::interval::Interval;

/// Element of the free abelian group on interval generators at rank `n`.
///
/// Stored exponents are nonzero and generators of length `0` or `n + 1`
/// are never stored, so equality is map equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LWeight {
    n: u32,
    exps: BTreeMap<Interval, i64>,
}

impl LWeight {
    pub fn identity(n: u32) -> Self {
        LWeight { n, exps: BTreeMap::new() }
    }

    /// Single generator `ω_{i,j}`.
    pub fn generator(iv: Interval, n: u32) -> Result<Self> {
        Self::from_generators([(iv, 1)], n)
    }

    pub fn from_generators<I>(gens: I, n: u32) -> Result<Self>
    where
        I: IntoIterator<Item = (Interval, i64)>,
    {
        if n == 0 {
            return Err(Error::ZeroRank);
        }
        let mut w = LWeight::identity(n);
        for (iv, e) in gens {
            if !iv.in_rank(n) {
                return Err(Error::MalformedInterval { iv, n });
            }
            w.add_exp(iv, e);
        }
        Ok(w)
    }

    /// Product of the intervals of a tuple, each with exponent one.
    pub fn of_intervals<'a, I>(ivs: I, n: u32) -> Result<Self>
    where
        I: IntoIterator<Item = &'a Interval>,
    {
        Self::from_generators(ivs.into_iter().map(|iv| (*iv, 1)), n)
    }

    fn add_exp(&mut self, iv: Interval, e: i64) {
        if e == 0 || iv.is_boundary(self.n) {
            return;
        }
        let slot = self.exps.entry(iv).or_insert(0);
        *slot += e;
        if *slot == 0 {
            self.exps.remove(&iv);
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// Exponent of `ω_iv` (zero for boundary generators).
    pub fn exp(&self, iv: &Interval) -> i64 {
        self.exps.get(iv).copied().unwrap_or(0)
    }

    /// Generators in `(i, j)` order.
    pub fn iter(&self) -> impl Iterator<Item = (Interval, i64)> + '_ {
        self.exps.iter().map(|(k, v)| (*k, *v))
    }

    pub fn support_len(&self) -> usize {
        self.exps.len()
    }

    pub fn is_identity(&self) -> bool {
        self.exps.is_empty()
    }

    /// Member of the positive monoid: every exponent nonnegative.
    pub fn is_dominant(&self) -> bool {
        self.exps.values().all(|&e| e > 0)
    }

    fn check_rank(&self, other: &LWeight) -> Result<()> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn mul(&self, other: &LWeight) -> Result<LWeight> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (iv, e) in other.iter() {
            out.add_exp(iv, e);
        }
        Ok(out)
    }

    pub fn inv(&self) -> LWeight {
        LWeight { n: self.n, exps: self.exps.iter().map(|(k, v)| (*k, -v)).collect() }
    }

    /// `self · other⁻¹`.
    pub fn div(&self, other: &LWeight) -> Result<LWeight> {
        self.mul(&other.inv())
    }

    pub fn pow(&self, e: i64) -> LWeight {
        let mut out = LWeight::identity(self.n);
        for (iv, x) in self.iter() {
            out.add_exp(iv, x * e);
        }
        out
    }

    /// `ω_{i,j} -> ω_{-j,-i}` on every generator.
    pub fn omega(&self) -> LWeight {
        LWeight { n: self.n, exps: self.exps.iter().map(|(k, v)| (k.omega(), *v)).collect() }
    }

    /// Same generators read at a larger rank.
    pub fn with_rank(&self, n: u32) -> Result<LWeight> {
        Self::from_generators(self.iter(), n)
    }
}

impl fmt::Display for LWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.exps.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(iv, e)| if e == 1 { format!("w{}", iv) } else { format!("w{}^{}", iv, e) })
            .collect();
        write!(f, "{}", parts.join("·"))
    }
}

/// Nonnegative combination of ℓ-roots `∏ α_{i,j}^{c_{i,j}}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RootVector {
    n: u32,
    coeffs: BTreeMap<Interval, u64>,
}

impl RootVector {
    pub fn new<I>(coeffs: I, n: u32) -> Result<Self>
    where
        I: IntoIterator<Item = (Interval, u64)>,
    {
        let mut out = BTreeMap::new();
        for (iv, c) in coeffs {
            if !iv.is_interior(n) {
                return Err(Error::BoundaryRoot { iv, n });
            }
            if c > 0 {
                *out.entry(iv).or_insert(0) += c;
            }
        }
        Ok(RootVector { n, coeffs: out })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn iter(&self) -> impl Iterator<Item = (Interval, u64)> + '_ {
        self.coeffs.iter().map(|(k, v)| (*k, *v))
    }

    pub fn coeff(&self, iv: &Interval) -> u64 {
        self.coeffs.get(iv).copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// The ℓ-weight `∏ α^c`.
    pub fn to_lweight(&self) -> LWeight {
        let mut out = LWeight::identity(self.n);
        for (iv, c) in self.iter() {
            let a = alpha_root(iv, self.n).expect("stored roots are interior");
            out = out.mul(&a.pow(c as i64)).expect("same rank");
        }
        out
    }
}

/// `α_{i,j} = ω_{i,j} ω_{i+1,j+1} (ω_{i+1,j} ω_{i,j+1})⁻¹`.
pub fn alpha_root(iv: Interval, n: u32) -> Result<LWeight> {
    if !iv.is_interior(n) {
        return Err(Error::BoundaryRoot { iv, n });
    }
    let (i, j) = (iv.i, iv.j);
    LWeight::from_generators(
        [
            (Interval::new(i, j), 1),
            (Interval::new(i + 1, j + 1), 1),
            (Interval::new(i + 1, j), -1),
            (Interval::new(i, j + 1), -1),
        ],
        n,
    )
}

fn check_gamma_pair(a: Interval, b: Interval, n: u32) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if !(a.in_rank(n) && b.in_rank(n) && a.i < b.i && a.connected(&b, n)) {
        return Err(Error::NotConnected { a, b });
    }
    Ok(())
}

/// `∏ α_{i,j}` over `a.i <= i < b.i`, `a.j <= j < b.j` for a connected pair
/// with `a.i < b.i`.
pub fn gamma_product(a: Interval, b: Interval, n: u32) -> Result<LWeight> {
    check_gamma_pair(a, b, n)?;
    let mut out = LWeight::identity(n);
    for i in a.i..b.i {
        for j in a.j..b.j {
            out = out.mul(&alpha_root(Interval::new(i, j), n)?)?;
        }
    }
    Ok(out)
}

/// The four-generator form `ω_a ω_b (ω_{[a.i,b.j]} ω_{[b.i,a.j]})⁻¹`.
pub fn gamma_closed_form(a: Interval, b: Interval, n: u32) -> Result<LWeight> {
    check_gamma_pair(a, b, n)?;
    LWeight::from_generators(
        [(a, 1), (b, 1), (Interval::new(a.i, b.j), -1), (Interval::new(b.i, a.j), -1)],
        n,
    )
}

/// Write `g` as a nonnegative product of ℓ-roots, if possible.
///
/// The exponent of `ω_{a,b}` in `∏ α^c` is
/// `c_{a,b} + c_{a-1,b-1} - c_{a-1,b} - c_{a,b-1}`, which is solved for
/// `c_{a,b}` scanning `(a, b)` lexicographically.
pub fn decompose_in_qplus(g: &LWeight) -> Option<RootVector> {
    let n = g.n();
    if g.is_identity() {
        return Some(RootVector { n, coeffs: BTreeMap::new() });
    }
    let amin = g.exps.keys().map(|k| k.i).min()?;
    let amax = g.exps.keys().map(|k| k.i).max()?;
    let mut c: BTreeMap<Interval, i64> = BTreeMap::new();
    let get = |c: &BTreeMap<Interval, i64>, a: i64, b: i64| c.get(&Interval::new(a, b)).copied().unwrap_or(0);
    for a in amin..=amax {
        for b in a + 1..=a + n as i64 {
            let v = g.exp(&Interval::new(a, b)) - get(&c, a - 1, b - 1) + get(&c, a - 1, b) + get(&c, a, b - 1);
            if v < 0 {
                return None;
            }
            if v > 0 {
                c.insert(Interval::new(a, b), v);
            }
        }
    }
    let rv = RootVector { n, coeffs: c.into_iter().map(|(k, v)| (k, v as u64)).collect() };
    if &rv.to_lweight() == g {
        Some(rv)
    } else {
        None
    }
}

/// `a ≼ b`: `b · a⁻¹` is a product of ℓ-roots.
pub fn leq(a: &LWeight, b: &LWeight) -> Result<bool> {
    Ok(decompose_in_qplus(&b.div(a)?).is_some())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(gens: &[(i64, i64, i64)], n: u32) -> LWeight {
        LWeight::from_generators(gens.iter().map(|&(i, j, e)| (Interval::new(i, j), e)), n).unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(w(&[(0, 1, 1), (0, 2, 1)], 1), w(&[(0, 1, 1)], 1));
        assert!(w(&[(0, 1, 1), (0, 1, -1)], 3).is_identity());
        assert_eq!(w(&[(0, 2, 2)], 2).exp(&Interval::new(0, 2)), 2);
        assert!(LWeight::from_generators([(Interval::new(0, 5), 1)], 3).is_err());
        assert!(LWeight::from_generators([(Interval::new(1, 0), 1)], 3).is_err());
    }

    #[test]
    fn group_law() {
        let a = w(&[(0, 1, 1)], 1);
        assert_eq!(a.mul(&a).unwrap(), w(&[(0, 1, 2)], 1));
        assert!(a.mul(&a.inv()).unwrap().is_identity());
        assert_eq!(a.mul(&w(&[(1, 2, 1)], 1)).unwrap(), w(&[(0, 1, 1), (1, 2, 1)], 1));
        assert!(a.mul(&w(&[(0, 1, 1)], 2)).is_err());
    }

    #[test]
    fn roots() {
        assert_eq!(alpha_root((0, 1).into(), 1).unwrap(), w(&[(0, 1, 1), (1, 2, 1)], 1));
        assert_eq!(alpha_root((0, 1).into(), 2).unwrap(), w(&[(0, 1, 1), (1, 2, 1), (0, 2, -1)], 2));
        assert_eq!(alpha_root((1, 2).into(), 3).unwrap(), w(&[(1, 2, 1), (2, 3, 1), (1, 3, -1)], 3));
        assert!(alpha_root((0, 0).into(), 3).is_err());
        assert!(alpha_root((0, 4).into(), 3).is_err());
    }

    #[test]
    fn gamma() {
        assert_eq!(gamma_product((0, 2).into(), (1, 3).into(), 3).unwrap(), alpha_root((0, 2).into(), 3).unwrap());
        assert_eq!(
            gamma_product((0, 1).into(), (1, 2).into(), 2).unwrap(),
            w(&[(0, 1, 1), (1, 2, 1), (0, 2, -1)], 2)
        );
        let g = gamma_product((-1, 1).into(), (0, 2).into(), 2).unwrap();
        assert_eq!(g, w(&[(-1, 1, 1), (0, 2, 1), (0, 1, -1)], 2));
        assert_eq!(g, gamma_closed_form((-1, 1).into(), (0, 2).into(), 2).unwrap());
        assert!(gamma_product((0, 2).into(), (-1, 1).into(), 2).is_err());
        assert!(gamma_product((0, 3).into(), (-5, -2).into(), 8).is_err());
    }

    #[test]
    fn qplus() {
        let a = alpha_root((0, 1).into(), 2).unwrap();
        let rv = decompose_in_qplus(&a).unwrap();
        assert_eq!(rv.iter().collect::<Vec<_>>(), vec![(Interval::new(0, 1), 1)]);

        let g = gamma_product((-1, 1).into(), (1, 2).into(), 4).unwrap();
        let rv = decompose_in_qplus(&g).unwrap();
        assert_eq!(rv.iter().collect::<Vec<_>>(), vec![(Interval::new(-1, 1), 1), (Interval::new(0, 1), 1)]);

        assert!(decompose_in_qplus(&w(&[(0, 1, 1)], 3)).is_none());
        assert!(decompose_in_qplus(&a.inv()).is_none());
        assert!(decompose_in_qplus(&LWeight::identity(3)).unwrap().is_empty());
    }

    #[test]
    fn order() {
        let x = w(&[(0, 2, 1), (3, 4, -2)], 3);
        assert!(leq(&x, &x).unwrap());
        assert!(!leq(&w(&[(0, 1, 1)], 3), &w(&[(1, 2, 1)], 3)).unwrap());
        let a = alpha_root((0, 2).into(), 3).unwrap();
        assert!(leq(&x, &x.mul(&a).unwrap()).unwrap());
        assert!(!leq(&x.mul(&a).unwrap(), &x).unwrap());
    }

    #[test]
    fn omega_map() {
        assert_eq!(w(&[(0, 4, 1)], 4).omega(), w(&[(-4, 0, 1)], 4));
        let a = alpha_root((1, 3).into(), 4).unwrap();
        assert!(decompose_in_qplus(&a.omega()).is_some());
    }
}
