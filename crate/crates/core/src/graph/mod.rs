//! Simple graphs with a total edge order, and their vertex-weighted variants.
//!
//! Vertices are `0..n`. The position of an edge in the edge list is its rank in
//! the total edge order; every operation that rebuilds an edge list keeps the
//! relative order of the surviving edges.

mod edge_set;
mod vertex_partition;
mod weighted;

pub use edge_set::{EdgeSet, Edges};
pub use vertex_partition::VertexPartition;
pub use weighted::WeightedGraph;

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::algebra::Partition;
use crate::{Error, Result};

/// Hard limit on vertices and on edges, so that adjacency rows and edge
/// subsets fit in a `u64`.
pub const MAX_SIZE: usize = 64;

/// A simple undirected graph on vertices `0..n` with an ordered edge list.
///
/// Each edge is stored as `(u, v)` with `u < v`. Equality is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    n: usize,
    edges: Vec<(usize, usize)>,
}

/// A connected component: its vertices (ascending) and the edges among them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub edges: EdgeSet,
}

impl Graph {
    /// Validates and builds a graph. Loops, duplicate edges and out-of-range
    /// endpoints are rejected.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > MAX_SIZE {
            return Err(Error::TooLarge { what: "vertices", max: MAX_SIZE, got: n });
        }
        let mut adjacency = vec![0u64; n];
        let mut list = Vec::new();
        for (a, b) in edges {
            for v in [a, b] {
                if v >= n {
                    return Err(Error::InvalidVertex { vertex: v, n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if adjacency[u] >> v & 1 == 1 {
                return Err(Error::DuplicateEdge(u, v));
            }
            adjacency[u] |= 1 << v;
            adjacency[v] |= 1 << u;
            list.push((u, v));
        }
        if list.len() > MAX_SIZE {
            return Err(Error::TooLarge { what: "edges", max: MAX_SIZE, got: list.len() });
        }
        Ok(Graph { n, edges: list })
    }

    /// `n` isolated vertices.
    pub fn edgeless(n: usize) -> Self {
        Graph { n, edges: Vec::new() }
    }

    /// The complete graph, edges in lexicographic order.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
        Self::new(n, edges).expect("complete graph is simple")
    }

    /// The path `0 - 1 - ... - (n-1)`.
    pub fn path(n: usize) -> Self {
        Self::new(n, (1..n).map(|v| (v - 1, v))).expect("path is simple")
    }

    /// The star with centre `0`.
    pub fn star(n: usize) -> Self {
        Self::new(n, (1..n).map(|v| (0, v))).expect("star is simple")
    }

    /// The cycle `0 - 1 - ... - (n-1) - 0`, edges in cyclic order. For `n < 3`
    /// this is the path on `n` vertices.
    pub fn cycle(n: usize) -> Self {
        if n < 3 {
            return Self::path(n);
        }
        let mut g = Self::path(n);
        g.edges.push((0, n - 1));
        g
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn edge(&self, e: usize) -> Result<(usize, usize)> {
        self.edges
            .get(e)
            .copied()
            .ok_or(Error::InvalidEdge { index: e, len: self.edges.len() })
    }

    /// Every edge of the graph.
    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::full(self.edges.len())
    }

    /// Neighbourhood bit masks, one per vertex.
    pub fn adjacency(&self) -> Vec<u64> {
        let mut adj = vec![0u64; self.n];
        for &(u, v) in &self.edges {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        adj
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.edge_index(u, v).is_some()
    }

    /// Position of the edge `uv` in the edge order.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.iter().position(|&e| e == key)
    }

    /// The graph with edge `e` removed; remaining edges keep their order.
    pub fn delete_edge(&self, e: usize) -> Result<Graph> {
        self.edge(e)?;
        let mut edges = self.edges.clone();
        edges.remove(e);
        Ok(Graph { n: self.n, edges })
    }

    /// Contracts edge `e = uv` (`u < v`): `v` merges into `u`, vertices above
    /// `v` shift down by one, loops disappear, and parallel edges collapse onto
    /// the earliest one.
    ///
    /// Also returns where each old vertex went.
    pub fn contract_edge(&self, e: usize) -> Result<(Graph, Vec<usize>)> {
        let (u, v) = self.edge(e)?;
        let map: Vec<usize> = (0..self.n)
            .map(|w| match w.cmp(&v) {
                core::cmp::Ordering::Less => w,
                core::cmp::Ordering::Equal => u,
                core::cmp::Ordering::Greater => w - 1,
            })
            .collect();
        let mut seen = vec![0u64; self.n - 1];
        let mut edges = Vec::with_capacity(self.edges.len() - 1);
        for (i, &(a, b)) in self.edges.iter().enumerate() {
            if i == e {
                continue;
            }
            let (x, y) = (map[a], map[b]);
            if x == y {
                continue;
            }
            let (x, y) = if x < y { (x, y) } else { (y, x) };
            if seen[x] >> y & 1 == 1 {
                continue;
            }
            seen[x] |= 1 << y;
            edges.push((x, y));
        }
        Ok((Graph { n: self.n - 1, edges }, map))
    }

    /// Component label of every vertex in the spanning subgraph `(V, S)`,
    /// labels numbered in order of first appearance, plus the label count.
    pub fn component_labels(&self, s: EdgeSet) -> (Vec<usize>, usize) {
        let mut dsu = Dsu::new(self.n);
        for e in s {
            let (u, v) = self.edges[e];
            dsu.union(u, v);
        }
        let mut label = vec![usize::MAX; self.n];
        let mut root_label = vec![usize::MAX; self.n];
        let mut count = 0;
        for (w, slot) in label.iter_mut().enumerate() {
            let r = dsu.find(w);
            if root_label[r] == usize::MAX {
                root_label[r] = count;
                count += 1;
            }
            *slot = root_label[r];
        }
        (label, count)
    }

    /// Number of components of `(V, S)`.
    pub fn component_count_of(&self, s: EdgeSet) -> usize {
        self.component_labels(s).1
    }

    pub fn component_count(&self) -> usize {
        self.component_count_of(self.all_edges())
    }

    pub fn is_connected(&self) -> bool {
        self.component_count() <= 1
    }

    /// The connected components, ordered by smallest vertex.
    pub fn components(&self) -> Vec<Component> {
        let (label, count) = self.component_labels(self.all_edges());
        let mut out: Vec<Component> = (0..count)
            .map(|_| Component { vertices: Vec::new(), edges: EdgeSet::empty() })
            .collect();
        for (w, &l) in label.iter().enumerate() {
            out[l].vertices.push(w);
        }
        for (i, &(u, _)) in self.edges.iter().enumerate() {
            out[label[u]].edges.insert(i);
        }
        out
    }

    /// Whether `(V, S)` is acyclic.
    pub fn is_forest_set(&self, s: EdgeSet) -> bool {
        let mut dsu = Dsu::new(self.n);
        s.iter().all(|e| {
            let (u, v) = self.edges[e];
            dsu.union(u, v)
        })
    }

    pub fn is_forest(&self) -> bool {
        self.is_forest_set(self.all_edges())
    }

    /// Connected with exactly `n - 1` edges.
    pub fn is_tree(&self) -> bool {
        self.n >= 1 && self.edges.len() + 1 == self.n && self.is_connected()
    }

    /// The partition formed by the component orders of `(V, S)`.
    pub fn lambda_of(&self, s: EdgeSet) -> Partition {
        let (label, count) = self.component_labels(s);
        let mut sizes = vec![0usize; count];
        for l in label {
            sizes[l] += 1;
        }
        Partition::from_parts(sizes).expect("component sizes are positive")
    }

    /// Every `S ⊆ E` whose removal leaves exactly `k` components, in bit order.
    pub fn k_cutsets(&self, k: usize) -> Vec<EdgeSet> {
        let all = self.all_edges().bits();
        let mut out = Vec::new();
        let mut bits = 0u64;
        loop {
            let s = EdgeSet::from_bits(bits);
            if self.component_count_of(self.all_edges().difference(s)) == k {
                out.push(s);
            }
            if bits == all {
                break;
            }
            bits = (bits.wrapping_sub(all)) & all;
        }
        out
    }

    /// Whether the listed (distinct) vertices are pairwise adjacent.
    pub fn is_clique(&self, vertices: &[usize]) -> bool {
        let adj = self.adjacency();
        vertices.iter().enumerate().all(|(i, &u)| {
            u < self.n
                && vertices[i + 1..]
                    .iter()
                    .all(|&v| v != u && v < self.n && adj[u] >> v & 1 == 1)
        })
    }

    /// Whether the listed vertices induce a connected subgraph.
    pub fn induces_connected(&self, vertices: &[usize]) -> bool {
        let Some(&start) = vertices.first() else {
            return true;
        };
        let adj = self.adjacency();
        let mask: u64 = vertices.iter().fold(0, |m, &v| m | 1 << v);
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = adj[v] & mask & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == mask
    }

    /// `self` followed by a relabelled copy of `other`; `other`'s edges come last.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.n;
        Graph::new(
            self.n + other.n,
            self.edges
                .iter()
                .copied()
                .chain(other.edges.iter().map(|&(u, v)| (u + shift, v + shift))),
        )
    }

    /// Glues `g2` onto `g1` by identifying the clique `k2` of `g2` with the
    /// clique `k1` of `g1`, vertex by vertex.
    ///
    /// Vertices of `g1` keep their indices; the remaining vertices of `g2`
    /// follow in increasing order. Edges of `g1` come first, then the new edges
    /// contributed by `g2`.
    pub fn glue_at_clique(g1: &Graph, g2: &Graph, k1: &[usize], k2: &[usize]) -> Result<Graph> {
        if k1.len() != k2.len() {
            return Err(Error::NotAClique(format!(
                "clique sizes differ: {} vs {}",
                k1.len(),
                k2.len()
            )));
        }
        if !g1.is_clique(k1) {
            return Err(Error::NotAClique(format!("{k1:?} in the first graph")));
        }
        if !g2.is_clique(k2) {
            return Err(Error::NotAClique(format!("{k2:?} in the second graph")));
        }
        let mut map = vec![usize::MAX; g2.n];
        for (&a, &b) in k1.iter().zip(k2) {
            map[b] = a;
        }
        let mut next = g1.n;
        for slot in map.iter_mut().filter(|m| **m == usize::MAX) {
            *slot = next;
            next += 1;
        }
        let mut edges = g1.edges.clone();
        for &(u, v) in &g2.edges {
            let (a, b) = (map[u], map[v]);
            let key = if a < b { (a, b) } else { (b, a) };
            if !edges.contains(&key) {
                edges.push(key);
            }
        }
        Graph::new(next, edges)
    }
}

/// Union-find over `0..n` with path halving.
#[derive(Clone, Debug)]
pub(crate) struct Dsu {
    parent: Vec<usize>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect() }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Merges the classes of `a` and `b`; false if they were already merged.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        self.parent[ra.max(rb)] = ra.min(rb);
        true
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(edges: &[usize]) -> EdgeSet {
        edges.iter().copied().collect()
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Graph::new(2, [(0, 0)]), Err(Error::Loop(0)));
        assert_eq!(Graph::new(2, [(0, 1), (1, 0)]), Err(Error::DuplicateEdge(0, 1)));
        assert_eq!(Graph::new(2, [(0, 2)]), Err(Error::InvalidVertex { vertex: 2, n: 2 }));
        assert!(Graph::new(65, []).is_err());
        assert!(Graph::path(3).delete_edge(2).is_err());
        assert!(Graph::path(3).contract_edge(5).is_err());
    }

    #[test]
    fn deletion() {
        let k2 = Graph::complete(2);
        assert_eq!(k2.delete_edge(0).unwrap(), Graph::edgeless(2));
        let k3 = Graph::complete(3);
        let d = k3.delete_edge(0).unwrap();
        assert_eq!(d.edges(), &[(0, 2), (1, 2)]);
        assert!(d.is_tree());
        let p3 = Graph::path(3).delete_edge(0).unwrap();
        assert_eq!(p3.edges(), &[(1, 2)]);
        assert_eq!(p3.component_count(), 2);
    }

    #[test]
    fn contraction() {
        let (k2, _) = Graph::complete(2).contract_edge(0).unwrap();
        assert_eq!(k2, Graph::edgeless(1));
        for e in 0..3 {
            let (g, _) = Graph::complete(3).contract_edge(e).unwrap();
            assert_eq!(g, Graph::complete(2));
        }
        let (c3, map) = Graph::cycle(4).contract_edge(0).unwrap();
        assert_eq!(c3.vertex_count(), 3);
        assert_eq!(c3.edges(), &[(0, 1), (1, 2), (0, 2)]);
        assert_eq!(map, [0, 0, 1, 2]);
        // K4 minus nothing: contracting collapses three parallel pairs
        let (k3, _) = Graph::complete(4).contract_edge(5).unwrap();
        assert_eq!(k3.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn components_and_lambda() {
        assert_eq!(Graph::edgeless(3).components().len(), 3);
        assert_eq!(Graph::path(3).components().len(), 1);
        let g = Graph::new(3, [(0, 1)]).unwrap();
        let comps = g.components();
        assert_eq!(comps[0].vertices, [0, 1]);
        assert_eq!(comps[0].edges, set(&[0]));
        assert_eq!(comps[1].vertices, [2]);
        let k3 = Graph::complete(3);
        assert_eq!(k3.lambda_of(EdgeSet::empty()).parts(), &[1, 1, 1]);
        assert_eq!(k3.lambda_of(set(&[0, 1])).parts(), &[3]);
        assert_eq!(Graph::path(3).lambda_of(set(&[0])).parts(), &[2, 1]);
    }

    #[test]
    fn cutsets() {
        let k3 = Graph::complete(3);
        assert_eq!(
            k3.k_cutsets(1),
            [set(&[]), set(&[0]), set(&[1]), set(&[2])]
        );
        assert_eq!(k3.k_cutsets(3), [set(&[0, 1, 2])]);
        assert_eq!(Graph::path(2).k_cutsets(2), [set(&[0])]);
        // every subset lands in exactly one k
        let c4 = Graph::cycle(4);
        let total: usize = (1..=4).map(|k| c4.k_cutsets(k).len()).sum();
        assert_eq!(total, 16);
    }

    #[test]
    fn gluing() {
        let k3 = Graph::complete(3);
        let diamond = Graph::glue_at_clique(&k3, &k3, &[0, 1], &[0, 1]).unwrap();
        assert_eq!(diamond.vertex_count(), 4);
        assert_eq!(diamond.edge_count(), 5);
        assert!(!diamond.has_edge(2, 3));
        let g = Graph::cycle(5);
        assert_eq!(Graph::glue_at_clique(&g, &Graph::edgeless(1), &[2], &[0]).unwrap(), g);
        let p3 = Graph::glue_at_clique(&Graph::path(2), &Graph::path(2), &[1], &[0]).unwrap();
        assert_eq!(p3, Graph::path(3));
        assert!(matches!(
            Graph::glue_at_clique(&Graph::path(3), &k3, &[0, 2], &[0, 1]),
            Err(Error::NotAClique(_))
        ));
    }

    #[test]
    fn standard_families() {
        assert_eq!(Graph::path(1), Graph::star(1));
        assert_eq!(Graph::path(1), Graph::edgeless(1));
        assert!(!Graph::cycle(4).is_tree());
        assert!(Graph::star(5).is_tree());
        assert!(Graph::path(6).is_tree());
        assert!(!Graph::edgeless(2).is_tree());
        assert!(!Graph::edgeless(0).is_tree());
    }

    #[test]
    fn contraction_and_deletion_component_counts() {
        // exhaustive over all graphs on four vertices
        let pairs: Vec<(usize, usize)> = (0..4).flat_map(|u| (u + 1..4).map(move |v| (u, v))).collect();
        for mask in 0u32..64 {
            let g = Graph::new(4, pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &p)| p)).unwrap();
            for e in 0..g.edge_count() {
                let d = g.delete_edge(e).unwrap();
                assert!(d.component_count() >= g.component_count());
                let (c, _) = g.contract_edge(e).unwrap();
                assert_eq!(c.component_count(), g.component_count());
                assert_eq!(c.vertex_count() + 1, g.vertex_count());
            }
        }
    }
}
