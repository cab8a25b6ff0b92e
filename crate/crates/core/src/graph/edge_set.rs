use core::fmt;

/// A subset of the edges of a fixed host graph, stored as a bit set over edge
/// indices. Iteration is in increasing edge order.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet(u64);

impl EdgeSet {
    pub const fn empty() -> Self {
        EdgeSet(0)
    }

    /// The first `m` edges.
    pub fn full(m: usize) -> Self {
        debug_assert!(m <= 64);
        if m == 64 {
            EdgeSet(u64::MAX)
        } else {
            EdgeSet((1u64 << m) - 1)
        }
    }

    pub const fn from_bits(bits: u64) -> Self {
        EdgeSet(bits)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(e: usize) -> Self {
        EdgeSet(1u64 << e)
    }

    pub fn contains(self, e: usize) -> bool {
        e < 64 && self.0 >> e & 1 == 1
    }

    pub fn insert(&mut self, e: usize) {
        self.0 |= 1u64 << e;
    }

    pub fn remove(&mut self, e: usize) {
        self.0 &= !(1u64 << e);
    }

    #[must_use]
    pub fn with(self, e: usize) -> Self {
        EdgeSet(self.0 | 1u64 << e)
    }

    #[must_use]
    pub fn without(self, e: usize) -> Self {
        EdgeSet(self.0 & !(1u64 << e))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: EdgeSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(self, other: EdgeSet) -> Self {
        EdgeSet(self.0 | other.0)
    }

    pub fn intersection(self, other: EdgeSet) -> Self {
        EdgeSet(self.0 & other.0)
    }

    pub fn difference(self, other: EdgeSet) -> Self {
        EdgeSet(self.0 & !other.0)
    }

    /// Smallest edge index in the set.
    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest edge index in the set.
    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 63 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> Edges {
        Edges(self.0)
    }
}

/// Iterator over the indices of an [`EdgeSet`].
#[derive(Clone, Debug)]
pub struct Edges(u64);

impl Iterator for Edges {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let e = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(e)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Edges {}

impl IntoIterator for EdgeSet {
    type Item = usize;
    type IntoIter = Edges;

    fn into_iter(self) -> Edges {
        self.iter()
    }
}

impl FromIterator<usize> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = EdgeSet::empty();
        for e in iter {
            s.insert(e);
        }
        s
    }
}

impl fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}
