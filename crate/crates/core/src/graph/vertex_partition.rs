use alloc::vec;
use alloc::vec::Vec;

use super::Graph;

/// A set partition of `0..n`.
///
/// Blocks are kept sorted internally and ordered by their smallest vertex, so
/// structural equality is equality of set partitions.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexPartition {
    blocks: Vec<Vec<usize>>,
}

impl VertexPartition {
    /// From a label per vertex; vertices with equal labels share a block.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        let mut slot: Vec<(usize, usize)> = Vec::new();
        for (v, &l) in labels.iter().enumerate() {
            match slot.iter().find(|(label, _)| *label == l) {
                Some(&(_, b)) => blocks[b].push(v),
                None => {
                    slot.push((l, blocks.len()));
                    blocks.push(vec![v]);
                }
            }
        }
        VertexPartition { blocks }
    }

    /// From explicit blocks. Returns `None` unless the blocks are nonempty,
    /// disjoint and cover `0..n`.
    pub fn from_blocks(n: usize, blocks: Vec<Vec<usize>>) -> Option<Self> {
        let mut labels = vec![usize::MAX; n];
        for (i, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return None;
            }
            for &v in block {
                if v >= n || labels[v] != usize::MAX {
                    return None;
                }
                labels[v] = i;
            }
        }
        if labels.contains(&usize::MAX) {
            return None;
        }
        Some(Self::from_labels(&labels))
    }

    /// All singletons.
    pub fn bottom(n: usize) -> Self {
        VertexPartition { blocks: (0..n).map(|v| vec![v]).collect() }
    }

    /// One block, or no blocks when `n == 0`.
    pub fn top(n: usize) -> Self {
        if n == 0 {
            return VertexPartition { blocks: Vec::new() };
        }
        VertexPartition { blocks: vec![(0..n).collect()] }
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.blocks.iter().map(Vec::len).sum()
    }

    /// Block index of every vertex.
    pub fn labels(&self) -> Vec<usize> {
        let mut labels = vec![0; self.vertex_count()];
        for (i, block) in self.blocks.iter().enumerate() {
            for &v in block {
                labels[v] = i;
            }
        }
        labels
    }

    /// Whether every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &VertexPartition) -> bool {
        let theirs = other.labels();
        self.vertex_count() == theirs.len()
            && self
                .blocks
                .iter()
                .all(|b| b.iter().all(|&v| theirs[v] == theirs[b[0]]))
    }

    /// Whether each block induces a connected subgraph of `g`.
    pub fn is_connected_in(&self, g: &Graph) -> bool {
        self.vertex_count() == g.vertex_count() && self.blocks.iter().all(|b| g.induces_connected(b))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn refinement() {
        let bottom = VertexPartition::bottom(3);
        let top = VertexPartition::top(3);
        let mid = VertexPartition::from_labels(&[0, 0, 1]);
        assert!(bottom.refines(&mid) && mid.refines(&top) && bottom.refines(&top));
        assert!(!top.refines(&mid));
        assert!(mid.refines(&mid));
        assert_eq!(VertexPartition::from_labels(&[5, 5, 2]), mid);
        assert_eq!(VertexPartition::from_blocks(3, vec![vec![2], vec![1, 0]]), Some(mid));
        assert_eq!(VertexPartition::from_blocks(3, vec![vec![0, 1]]), None);
        assert_eq!(VertexPartition::from_blocks(2, vec![vec![0, 1], vec![1]]), None);
    }

    #[test]
    fn connectivity() {
        let p3 = Graph::path(3);
        assert!(VertexPartition::from_labels(&[0, 0, 1]).is_connected_in(&p3));
        assert!(!VertexPartition::from_labels(&[0, 1, 0]).is_connected_in(&p3));
        assert!(VertexPartition::top(3).is_connected_in(&p3));
    }
}
