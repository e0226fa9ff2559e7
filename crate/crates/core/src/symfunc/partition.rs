use std::fmt;

use serde::Serialize;

use super::SymError;

/// A weakly decreasing sequence of positive integers.
///
/// The derived order is lexicographic on parts, which refines dominance.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Checks that `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self, SymError> {
        let decreasing = parts.windows(2).all(|w| w[0] >= w[1]);
        if !decreasing || parts.contains(&0) {
            return Err(SymError::NotAPartition(parts));
        }
        Ok(Partition(parts))
    }

    /// Sorts `parts` and drops zeros.
    pub fn from_parts(mut parts: Vec<u32>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// `k^n`.
    pub fn rectangle(k: u32, n: usize) -> Self {
        if k == 0 {
            return Partition::empty();
        }
        Partition(vec![k; n])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> u64 {
        self.0.iter().map(|&x| x as u64).sum()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn first(&self) -> u32 {
        self.part(0)
    }

    pub fn conjugate(&self) -> Partition {
        let mut out = Vec::with_capacity(self.first() as usize);
        for j in 1..=self.first() {
            out.push(self.0.iter().take_while(|&&x| x >= j).count() as u32);
        }
        Partition(out)
    }

    pub fn dominates(&self, other: &Partition) -> Result<bool, SymError> {
        if self.weight() != other.weight() {
            return Err(SymError::WeightMismatch {
                left: self.clone(),
                right: other.clone(),
            });
        }
        let (mut a, mut b) = (0u64, 0u64);
        for i in 0..self.len().max(other.len()) {
            a += self.part(i) as u64;
            b += other.part(i) as u64;
            if a < b {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Multiset union of parts.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = self.0.clone();
        parts.extend_from_slice(&other.0);
        Partition::from_parts(parts)
    }

    /// The `k`-fold union `k * self`.
    pub fn scale_union(&self, k: usize) -> Partition {
        let mut parts = Vec::with_capacity(self.len() * k);
        for _ in 0..k {
            parts.extend_from_slice(&self.0);
        }
        Partition::from_parts(parts)
    }

    /// Whether the diagram fits in `rows` rows of length `cols`.
    pub fn fits(&self, rows: usize, cols: u32) -> bool {
        self.len() <= rows && self.first() <= cols
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

/// Partitions of `n` with parts at most `max_part` and at most `max_len`
/// parts, in decreasing lexicographic order.
pub fn partitions(n: u32, max_part: u32, max_len: usize) -> Vec<Partition> {
    fn go(rest: u32, cap: u32, max_len: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        if ((max_len - cur.len()) as u64) * (cap as u64) < rest as u64 {
            return;
        }
        for part in (1..=cap.min(rest)).rev() {
            cur.push(part);
            go(rest - part, part, max_len, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, max_part, max_len, &mut Vec::new(), &mut out);
    out
}

/// All partitions of `n`.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    partitions(n, n, n as usize)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn construction() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(Partition::from_parts(vec![1, 0, 3, 2]), p(&[3, 2, 1]));
        assert_eq!(Partition::rectangle(0, 3), Partition::empty());
    }

    #[test]
    fn conjugates() {
        assert_eq!(p(&[3]).conjugate(), p(&[1, 1, 1]));
        assert_eq!(p(&[2, 2, 1]).conjugate(), p(&[3, 2]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
    }

    #[test]
    fn dominance() {
        assert!(p(&[3]).dominates(&p(&[1, 1, 1])).unwrap());
        assert!(!p(&[2, 2]).dominates(&p(&[3, 1])).unwrap());
        assert!(p(&[2, 2]).dominates(&p(&[2, 2])).unwrap());
        assert!(p(&[2]).dominates(&p(&[1])).is_err());
    }

    #[test]
    fn unions() {
        assert_eq!(p(&[2, 1]).union(&p(&[2])), p(&[2, 2, 1]));
        assert_eq!(p(&[2, 1]).scale_union(4), p(&[2, 2, 2, 2, 1, 1, 1, 1]));
        assert_eq!(p(&[2, 1]).scale_union(0), Partition::empty());
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(partitions(6, 2, 3), vec![p(&[2, 2, 2])]);
        assert_eq!(partitions(5, 3, 2), vec![p(&[3, 2])]);
        assert!(partitions(7, 3, 2).is_empty());
        let all = partitions_of(6);
        assert!(all.windows(2).all(|w| w[0] > w[1]));
    }
}
