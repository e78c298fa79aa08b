//! Weights for `gl_r` read off a snake, and the coefficient table of the
//! irreducible class in the Verma basis.
use std::collections::BTreeMap;

use crate::det::{build_matrix, is_odd, sigma_apply, sigma_set};
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::scalar::{sign, Coefficient};
use crate::snake::AlternatingSnake;

/// Integer vector in shifted coordinates (`ν + ρ`).
pub type WeightR = Vec<i64>;

/// Positions sorted by decreasing upper endpoint, ties by increasing lower
/// endpoint; `out[t - 1]` is the position placed at slot `t` (1-based).
pub fn sigma_s(s: &AlternatingSnake) -> Vec<usize> {
    let mut idx: Vec<usize> = (1..=s.len()).collect();
    idx.sort_by_key(|&p| (-s.at(p).j, s.at(p).i, p));
    idx
}

/// `(λ + ρ, μ + ρ, ℓ)`.
pub fn lambda_mu(s: &AlternatingSnake) -> (WeightR, WeightR, i64) {
    let order = sigma_s(s);
    let lam: WeightR = order.iter().map(|&p| s.at(p).j).collect();
    let mu: WeightR = order.iter().map(|&p| s.at(p).i).collect();
    let ell = lam.iter().zip(&mu).map(|(a, b)| a - b).sum();
    (lam, mu, ell)
}

/// Weakly decreasing coordinates.
pub fn dominant_check(w: &[i64]) -> bool {
    w.windows(2).all(|x| x[0] >= x[1])
}

/// Smallest rank at which every crossed interval `[i_p, j_l]` is well
/// formed, or `None` if some `j_l < i_p`.
pub fn min_large_rank(s: &AlternatingSnake) -> Option<u32> {
    let ivs = s.intervals();
    let min_i = ivs.iter().map(|x| x.i).min()?;
    let max_i = ivs.iter().map(|x| x.i).max()?;
    let min_j = ivs.iter().map(|x| x.j).min()?;
    let max_j = ivs.iter().map(|x| x.j).max()?;
    if min_j < max_i {
        return None;
    }
    Some((max_j - min_i - 1).max(1) as u32)
}

/// Read the lower endpoints of `pairs` against `lambda`: slot `t` receives
/// the lower endpoint paired with `lambda[t]`, and within a block of equal
/// `lambda` values the lower endpoints are sorted increasingly.
pub fn read_nu(pairs: &[Interval], lambda: &[i64]) -> WeightR {
    let mut by_upper: BTreeMap<i64, Vec<i64>> = BTreeMap::new();
    for iv in pairs {
        by_upper.entry(iv.j).or_default().push(iv.i);
    }
    for v in by_upper.values_mut() {
        v.sort_unstable();
        v.reverse();
    }
    lambda.iter().map(|j| by_upper.get_mut(j).and_then(|v| v.pop()).expect("upper endpoints match λ")).collect()
}

/// Coefficients `c_{μ,ν}` keyed by `ν + ρ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KlTable<C: Coefficient> {
    pub lambda_plus_rho: WeightR,
    pub mu_plus_rho: WeightR,
    pub rows: BTreeMap<WeightR, C>,
}

impl<C: Coefficient> KlTable<C> {
    pub fn coeff(&self, nu: &[i64]) -> C {
        self.rows.get(nu).cloned().unwrap_or_else(C::zero)
    }
}

/// Sum `(-1)^σ` over `Σ(s)`, each `σ(s)` read as a weight `ν + ρ` against
/// `λ + ρ`.
pub fn kl_table<C: Coefficient>(s: &AlternatingSnake) -> Result<KlTable<C>> {
    if !s.is_stable() {
        return Err(Error::NotStable);
    }
    match min_large_rank(s) {
        None => return Err(Error::Unsupported("some upper endpoint lies below some lower endpoint".into())),
        Some(need) if need > s.n() => return Err(Error::RankTooSmall { n: s.n(), need }),
        _ => {}
    }
    let (lam, mu, _) = lambda_mu(s);
    let m = build_matrix(s);
    let mut rows: BTreeMap<WeightR, C> = BTreeMap::new();
    for perm in sigma_set(&m) {
        let nu = read_nu(&sigma_apply(s, &perm), &lam);
        let slot = rows.entry(nu.clone()).or_insert_with(C::zero);
        *slot = slot.clone() + sign::<C>(is_odd(&perm));
        if slot.is_zero() {
            rows.remove(&nu);
        }
    }
    Ok(KlTable { lambda_plus_rho: lam, mu_plus_rho: mu, rows })
}
