//! Commutative polynomial ring on the symbols `[V_{i,j}]`.
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::lweight::LWeight;
use crate::scalar::{binomial, Coefficient};

/// Product of generators with positive multiplicities, sorted by `(i, j)`.
///
/// Ordered by total degree, then lexicographically on the expanded
/// generator list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(Vec<(Interval, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn generator(iv: Interval) -> Self {
        Monomial(vec![(iv, 1)])
    }

    pub fn from_pairs<I: IntoIterator<Item = (Interval, u32)>>(pairs: I) -> Self {
        let mut m: BTreeMap<Interval, u32> = BTreeMap::new();
        for (iv, e) in pairs {
            if e > 0 {
                *m.entry(iv).or_insert(0) += e;
            }
        }
        Monomial(m.into_iter().collect())
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (Interval, u32)> + '_ {
        self.0.iter().copied()
    }

    fn expanded(&self) -> impl Iterator<Item = Interval> + '_ {
        self.0.iter().flat_map(|&(iv, e)| std::iter::repeat(iv).take(e as usize))
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial::from_pairs(self.iter().chain(other.iter()))
    }

    fn map(&self, f: impl Fn(Interval) -> Interval) -> Monomial {
        Monomial::from_pairs(self.iter().map(|(iv, e)| (f(iv), e)))
    }

    /// The ℓ-weight with the same exponents.
    pub fn to_lweight(&self, n: u32) -> Result<LWeight> {
        LWeight::from_generators(self.iter().map(|(iv, e)| (iv, e as i64)), n)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.expanded().cmp(other.expanded()))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self
            .iter()
            .map(|(iv, e)| if e == 1 { format!("V{}", iv) } else { format!("V{}^{}", iv, e) })
            .collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Exact polynomial in the `[V_{i,j}]` at rank `n`.
///
/// Only generators with `0 < j - i < n + 1` appear in monomials; the two
/// boundary lengths are the unit.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElement<C: Coefficient> {
    n: u32,
    terms: BTreeMap<Monomial, C>,
}

impl<C: Coefficient> RingElement<C> {
    pub fn zero(n: u32) -> Self {
        RingElement { n, terms: BTreeMap::new() }
    }

    pub fn one(n: u32) -> Self {
        Self::constant(C::one(), n)
    }

    pub fn constant(c: C, n: u32) -> Self {
        let mut x = Self::zero(n);
        x.add_term(Monomial::one(), c);
        x
    }

    /// Build from raw terms; every generator must be interior at rank `n`.
    pub fn from_terms<I>(terms: I, n: u32) -> Result<Self>
    where
        I: IntoIterator<Item = (Monomial, C)>,
    {
        let mut x = Self::zero(n);
        for (m, c) in terms {
            if let Some((iv, _)) = m.iter().find(|(iv, _)| !iv.is_interior(n)) {
                return Err(Error::MalformedInterval { iv, n });
            }
            x.add_term(m, c);
        }
        Ok(x)
    }

    fn add_term(&mut self, m: Monomial, c: C) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(m.clone()).or_insert_with(C::zero);
        *slot = slot.clone() + c;
        if slot.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: &Monomial) -> C {
        self.terms.get(m).cloned().unwrap_or_else(C::zero)
    }

    /// Terms in canonical order.
    pub fn iter(&self) -> impl Iterator<Item = (&Monomial, &C)> {
        self.terms.iter()
    }

    fn check_rank(&self, other: &Self) -> Result<()> {
        if self.n != other.n {
            return Err(Error::RankMismatch(self.n, other.n));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = self.clone();
        for (m, c) in other.iter() {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        RingElement { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_rank(other)?;
        let mut out = Self::zero(self.n);
        for (m1, c1) in self.iter() {
            for (m2, c2) in other.iter() {
                out.add_term(m1.mul(m2), c1.clone() * c2.clone());
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.n);
        for (m, x) in self.iter() {
            out.add_term(m.clone(), x.clone() * c.clone());
        }
        out
    }

    /// Relabel `[V_{i,j}] -> [V_{-j,-i}]`.
    pub fn omega_tilde(&self) -> Self {
        let mut out = Self::zero(self.n);
        for (m, c) in self.iter() {
            out.add_term(m.map(|iv| iv.omega()), c.clone());
        }
        out
    }

    /// Substitute `[V_{i,j}] -> C(n+1, j-i)`.
    pub fn dim_eval(&self) -> Result<C> {
        let mut total = C::zero();
        for (m, c) in self.iter() {
            let mut v = c.clone();
            for (iv, e) in m.iter() {
                let b: C = binomial(self.n as u64 + 1, iv.len() as u64).ok_or(Error::Overflow)?;
                for _ in 0..e {
                    v = v * b.clone();
                }
            }
            total = total + v;
        }
        Ok(total)
    }
}

impl<C: Coefficient> fmt::Display for RingElement<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (t, (m, c)) in self.iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (t, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            if m.is_one() {
                write!(f, "{}", a)?;
            } else if a.is_one() {
                write!(f, "{}", m)?;
            } else {
                write!(f, "{}*{}", a, m)?;
            }
        }
        Ok(())
    }
}

/// `[V(ω_{i,j})]`: zero off the rank, the unit on the boundary.
pub fn v_class<C: Coefficient>(iv: Interval, n: u32) -> RingElement<C> {
    if !iv.in_rank(n) {
        RingElement::zero(n)
    } else if iv.is_boundary(n) {
        RingElement::one(n)
    } else {
        let mut x = RingElement::zero(n);
        x.add_term(Monomial::generator(iv), C::one());
        x
    }
}

/// `[W(ω)] = ∏ [V(ω_{i,j})]^{e}` for `ω` with nonnegative exponents.
pub fn weyl_class<C: Coefficient>(w: &LWeight) -> Result<RingElement<C>> {
    let n = w.n();
    let mut pairs = Vec::new();
    for (iv, e) in w.iter() {
        if e < 0 {
            return Err(Error::NegativeExponent { iv, exp: e });
        }
        pairs.push((iv, e as u32));
    }
    RingElement::from_terms([(Monomial::from_pairs(pairs), C::one())], n)
}
