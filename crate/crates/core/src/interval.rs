use std::fmt;

/// A pair `[i, j]` of integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Interval {
    pub i: i64,
    pub j: i64,
}

impl Interval {
    pub const fn new(i: i64, j: i64) -> Self {
        Interval { i, j }
    }

    pub const fn len(&self) -> i64 {
        self.j - self.i
    }

    /// `0 <= j - i <= n + 1`.
    pub fn in_rank(&self, n: u32) -> bool {
        (0..=n as i64 + 1).contains(&self.len())
    }

    /// Length 0 or `n + 1`: the identity generator.
    pub fn is_boundary(&self, n: u32) -> bool {
        self.len() == 0 || self.len() == n as i64 + 1
    }

    /// Strictly inside: `0 < j - i < n + 1`.
    pub fn is_interior(&self, n: u32) -> bool {
        self.len() > 0 && self.len() < n as i64 + 1
    }

    /// `[i, j] -> [-j, -i]`.
    pub const fn omega(&self) -> Self {
        Interval { i: -self.j, j: -self.i }
    }

    pub fn overlaps(&self, other: &Interval) -> bool {
        let (a, b) = (self, other);
        (a.i < b.i && b.i <= a.j && a.j < b.j) || (b.i < a.i && a.i <= b.j && b.j < a.j)
    }

    /// Overlap plus both crossed intervals well formed at rank `n`.
    pub fn connected(&self, other: &Interval, n: u32) -> bool {
        self.overlaps(other)
            && Interval::new(self.i, other.j).in_rank(n)
            && Interval::new(other.i, self.j).in_rank(n)
    }
}

impl From<(i64, i64)> for Interval {
    fn from((i, j): (i64, i64)) -> Self {
        Interval { i, j }
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{},{}]", self.i, self.j)
    }
}

pub fn interval_in_rank(iv: Interval, n: u32) -> bool {
    iv.in_rank(n)
}

pub fn overlap(a: Interval, b: Interval) -> bool {
    a.overlaps(&b)
}

pub fn connected_pair(a: Interval, b: Interval, n: u32) -> bool {
    a.connected(&b, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_membership() {
        assert!(Interval::new(0, 4).in_rank(4));
        assert!(!Interval::new(-1, 4).in_rank(3));
        assert!(Interval::new(2, 2).in_rank(1));
        assert!(!Interval::new(3, 2).in_rank(9));
    }

    #[test]
    fn overlap_cases() {
        assert!(!overlap((0, 4).into(), (1, 2).into()));
        assert!(overlap((-1, 1).into(), (0, 4).into()));
        let x = Interval::new(0, 3);
        assert!(!overlap(x, x));
    }

    #[test]
    fn connected_cases() {
        assert!(connected_pair((0, 4).into(), (-1, 1).into(), 4));
        assert!(!connected_pair((0, 4).into(), (-1, 1).into(), 3));
        assert!(!connected_pair((0, 3).into(), (-5, -2).into(), 8));
    }
}
