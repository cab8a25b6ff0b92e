use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::{Error, Result};

/// An integer partition: a weakly decreasing sequence of positive parts.
///
/// Partitions are ordered first by size and then reverse-lexicographically, so
/// for a fixed size `(4) < (3,1) < (2,2) < (2,1,1) < (1,1,1,1)`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Partition(Vec<usize>);

impl Partition {
    /// The empty partition of zero.
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    /// Builds a partition from parts in any order. Zero parts are rejected.
    pub fn from_parts(mut parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition(parts))
    }

    /// The one-part partition `(n)`, or the empty partition when `n == 0`.
    pub fn single(n: usize) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// `(1, 1, ..., 1)` with `n` parts.
    pub fn ones(n: usize) -> Self {
        Partition(vec![1; n])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Number of parts.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The multiset union of the parts, re-sorted.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            if self.0[i] >= other.0[j] {
                parts.push(self.0[i]);
                i += 1;
            } else {
                parts.push(other.0[j]);
                j += 1;
            }
        }
        parts.extend_from_slice(&self.0[i..]);
        parts.extend_from_slice(&other.0[j..]);
        Partition(parts)
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        self.size()
            .cmp(&other.size())
            .then_with(|| other.0.cmp(&self.0))
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Formats as `[3,1]`; the empty partition is `[]`.
impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

/// All partitions of `n`, in reverse-lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if n == 0 {
        out.push(Partition::empty());
        return out;
    }
    let mut current = vec![n];
    loop {
        out.push(Partition(current.clone()));
        // rightmost part larger than one
        let Some(pos) = current.iter().rposition(|&p| p > 1) else {
            break;
        };
        let value = current[pos] - 1;
        let mut remainder: usize = current[pos + 1..].iter().sum::<usize>() + 1;
        current.truncate(pos);
        current.push(value);
        while remainder > 0 {
            let part = remainder.min(value);
            current.push(part);
            remainder -= part;
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent oracle: all weakly decreasing sequences with parts at most `max`.
    fn brute(n: usize, max: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        for first in (1..=max.min(n)).rev() {
            for mut rest in brute(n - first, first) {
                rest.insert(0, first);
                out.push(rest);
            }
        }
        out
    }

    #[test]
    fn small_cases() {
        assert_eq!(partitions_of(0), vec![Partition::empty()]);
        assert_eq!(partitions_of(1), vec![Partition::single(1)]);
        let four: Vec<Vec<usize>> = partitions_of(4).into_iter().map(|p| p.0).collect();
        assert_eq!(
            four,
            vec![vec![4], vec![3, 1], vec![2, 2], vec![2, 1, 1], vec![1, 1, 1, 1]]
        );
    }

    #[test]
    fn matches_brute_force_and_is_sorted() {
        let counts = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &count) in counts.iter().enumerate() {
            let parts = partitions_of(n);
            assert_eq!(parts.len(), count);
            let expected: Vec<Vec<usize>> = brute(n, n);
            let got: Vec<Vec<usize>> = parts.iter().map(|p| p.0.clone()).collect();
            assert_eq!(got, expected);
            assert!(parts.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn union_and_order() {
        let a = Partition::from_parts(vec![1, 2]).unwrap();
        let b = Partition::from_parts(vec![3, 1]).unwrap();
        assert_eq!(a.union(&b).parts(), &[3, 2, 1, 1]);
        assert!(Partition::single(2) < Partition::ones(2));
        assert!(Partition::ones(2) < Partition::single(3));
        assert_eq!(Partition::from_parts(vec![0, 1]), Err(Error::InvalidPartition));
        assert_eq!(alloc::format!("{a}"), "[2,1]");
    }
}
