use alloc::vec;
use alloc::vec::Vec;

use super::Graph;
use crate::{Error, Result};

/// A graph with a positive integer weight on every vertex.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeightedGraph {
    graph: Graph,
    weights: Vec<usize>,
}

impl WeightedGraph {
    pub fn new(graph: Graph, weights: Vec<usize>) -> Result<Self> {
        if weights.len() != graph.vertex_count() || weights.contains(&0) {
            return Err(Error::InvalidWeights { expected: graph.vertex_count() });
        }
        Ok(WeightedGraph { graph, weights })
    }

    /// Every vertex gets weight one.
    pub fn unit(graph: Graph) -> Self {
        let weights = vec![1; graph.vertex_count()];
        WeightedGraph { graph, weights }
    }

    /// A single vertex of weight `w`.
    pub fn single_vertex(w: usize) -> Result<Self> {
        Self::new(Graph::edgeless(1), vec![w])
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn weights(&self) -> &[usize] {
        &self.weights
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn total_weight(&self) -> usize {
        self.weights.iter().sum()
    }

    /// Total weight minus the number of vertices.
    pub fn excess_weight(&self) -> usize {
        self.total_weight() - self.vertex_count()
    }

    pub fn is_unit(&self) -> bool {
        self.weights.iter().all(|&w| w == 1)
    }

    pub fn delete_edge(&self, e: usize) -> Result<Self> {
        Ok(WeightedGraph { graph: self.graph.delete_edge(e)?, weights: self.weights.clone() })
    }

    /// Contracts `e`; the merged vertex carries the sum of both endpoint weights.
    pub fn contract_edge(&self, e: usize) -> Result<Self> {
        let (graph, map) = self.graph.contract_edge(e)?;
        let mut weights = vec![0; graph.vertex_count()];
        for (old, &new) in map.iter().enumerate() {
            weights[new] += self.weights[old];
        }
        Ok(WeightedGraph { graph, weights })
    }

    pub fn disjoint_union(&self, other: &WeightedGraph) -> Result<Self> {
        let graph = self.graph.disjoint_union(&other.graph)?;
        let weights = self.weights.iter().chain(&other.weights).copied().collect();
        Ok(WeightedGraph { graph, weights })
    }

    /// The same weighted graph with its edge list sorted. Two weighted graphs
    /// with equal canonical forms have equal chromatic symmetric functions.
    pub fn canonical(&self) -> Self {
        let mut edges = self.graph.edges().to_vec();
        edges.sort_unstable();
        WeightedGraph { graph: Graph { n: self.graph.n, edges }, weights: self.weights.clone() }
    }
}

impl From<Graph> for WeightedGraph {
    fn from(graph: Graph) -> Self {
        WeightedGraph::unit(graph)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn contraction_sums_weights() {
        let k2 = WeightedGraph::unit(Graph::complete(2));
        let c = k2.contract_edge(0).unwrap();
        assert_eq!(c.weights(), &[2]);
        assert_eq!(c.graph(), &Graph::edgeless(1));
        let k3 = WeightedGraph::unit(Graph::complete(3)).contract_edge(1).unwrap();
        assert_eq!(k3.graph(), &Graph::complete(2));
        assert_eq!(k3.weights(), &[2, 1]);
        let c4 = WeightedGraph::unit(Graph::cycle(4)).contract_edge(0).unwrap();
        assert_eq!(c4.graph(), &Graph::cycle(3));
        assert_eq!(c4.weights(), &[2, 1, 1]);
    }

    #[test]
    fn weight_bookkeeping() {
        let g = WeightedGraph::new(Graph::path(3), vec![1, 3, 2]).unwrap();
        assert_eq!(g.total_weight(), 6);
        assert_eq!(g.excess_weight(), 3);
        for e in 0..2 {
            let c = g.contract_edge(e).unwrap();
            assert_eq!(c.total_weight(), 6);
            assert_eq!(c.excess_weight(), 4);
        }
        assert!(WeightedGraph::new(Graph::path(2), vec![1, 0]).is_err());
        assert!(WeightedGraph::new(Graph::path(2), vec![1]).is_err());
    }
}
