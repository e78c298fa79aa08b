//! Coefficient scalars for ring elements and expansions.
use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact signed integer type usable as a polynomial coefficient.
///
/// Fixed-width types (`i64`, `i128`) panic on overflow in debug builds;
/// `BigInt` never overflows.
pub trait Coefficient:
    Clone + Debug + Display + Eq + Ord + Hash + Signed + FromPrimitive + ToPrimitive + FromStr + Send + Sync + 'static
{
}

impl<T> Coefficient for T where
    T: Clone + Debug + Display + Eq + Ord + Hash + Signed + FromPrimitive + ToPrimitive + FromStr + Send + Sync + 'static
{
}

/// `C(n, k)` as a coefficient, or `None` if it does not fit.
pub fn binomial<C: Coefficient>(n: u64, k: u64) -> Option<C> {
    if k > n {
        return Some(C::zero());
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for t in 0..k {
        acc = acc.checked_mul((n - t) as u128)? / (t as u128 + 1);
    }
    C::from_u128(acc)
}

/// `(-1)^odd` as a coefficient.
pub fn sign<C: Coefficient>(odd: bool) -> C {
    if odd {
        -C::one()
    } else {
        C::one()
    }
}
