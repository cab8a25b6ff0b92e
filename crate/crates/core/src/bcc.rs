//! The broken circuit complex of a graph and the forest combinatorics on it.
//!
//! A broken circuit is a cycle with its smallest edge removed. The broken
//! circuit complex `B_G` is the family of edge sets containing no broken
//! circuit; its members are exactly the edge sets of internal forests.

use alloc::collections::VecDeque;
use alloc::vec;
use alloc::vec::Vec;

use crate::graph::{EdgeSet, Graph};
use crate::{Error, Result};

/// Every cycle of `g` as an edge set, sorted by bit pattern.
pub fn cycles(g: &Graph) -> Vec<EdgeSet> {
    let n = g.vertex_count();
    let mut index = vec![vec![usize::MAX; n]; n];
    for (i, &(u, v)) in g.edges().iter().enumerate() {
        index[u][v] = i;
        index[v][u] = i;
    }
    let adj = g.adjacency();
    let mut out = Vec::new();
    // Each cycle is found from its smallest vertex, in the direction whose
    // second vertex is smaller than its last.
    for start in 0..n {
        let mut path = vec![start];
        extend_cycles(&adj, &index, start, &mut path, 1u64 << start, EdgeSet::empty(), &mut out);
    }
    out.sort_unstable();
    out
}

fn extend_cycles(
    adj: &[u64],
    index: &[Vec<usize>],
    start: usize,
    path: &mut Vec<usize>,
    visited: u64,
    edges: EdgeSet,
    out: &mut Vec<EdgeSet>,
) {
    let tail = *path.last().expect("path starts at the root");
    let mut next = adj[tail];
    while next != 0 {
        let v = next.trailing_zeros() as usize;
        next &= next - 1;
        if v == start {
            if path.len() >= 3 && path[1] < tail {
                out.push(edges.with(index[tail][v]));
            }
            continue;
        }
        if v < start || visited >> v & 1 == 1 {
            continue;
        }
        path.push(v);
        extend_cycles(adj, index, start, path, visited | 1 << v, edges.with(index[tail][v]), out);
        path.pop();
    }
}

/// One edge set per cycle: the cycle minus its minimal edge. Sorted by bit pattern.
pub fn broken_circuits(g: &Graph) -> Vec<EdgeSet> {
    let mut out: Vec<EdgeSet> = cycles(g)
        .into_iter()
        .map(|c| c.without(c.min().expect("cycles are nonempty")))
        .collect();
    out.sort_unstable();
    out
}

/// The unique cycle of `F ∪ {e}`, if the endpoints of `e` lie in one component
/// of `(V, F)`. `F` must be a forest.
pub fn fundamental_cycle(g: &Graph, forest: EdgeSet, e: usize) -> Result<Option<EdgeSet>> {
    let (u, v) = g.edge(e)?;
    if !g.is_forest_set(forest) {
        return Err(Error::NotAForest);
    }
    if forest.contains(e) {
        return Ok(None);
    }
    Ok(forest_path(g, forest, u, v).map(|p| p.with(e)))
}

/// Edges of the path from `from` to `to` inside the forest, if connected.
fn forest_path(g: &Graph, forest: EdgeSet, from: usize, to: usize) -> Option<EdgeSet> {
    let n = g.vertex_count();
    let mut via = vec![usize::MAX; n];
    let mut seen = vec![false; n];
    seen[from] = true;
    let mut queue = VecDeque::from([from]);
    while let Some(w) = queue.pop_front() {
        if w == to {
            break;
        }
        for e in forest {
            let (a, b) = g.edges()[e];
            let other = if a == w {
                b
            } else if b == w {
                a
            } else {
                continue;
            };
            if !seen[other] {
                seen[other] = true;
                via[other] = e;
                queue.push_back(other);
            }
        }
    }
    if !seen[to] {
        return None;
    }
    let mut path = EdgeSet::empty();
    let mut w = to;
    while w != from {
        let e = via[w];
        path.insert(e);
        let (a, b) = g.edges()[e];
        w = if a == w { b } else { a };
    }
    Some(path)
}

/// Whether `e` closes a cycle with the forest `F` and is the smallest edge on it.
pub fn is_externally_active(g: &Graph, forest: EdgeSet, e: usize) -> Result<bool> {
    Ok(fundamental_cycle(g, forest, e)?.is_some_and(|c| c.min() == Some(e)))
}

/// A forest with no externally active edge.
pub fn is_internal_forest(g: &Graph, s: EdgeSet) -> bool {
    g.is_forest_set(s)
        && g.all_edges()
            .difference(s)
            .iter()
            .all(|e| !is_externally_active(g, s, e).expect("checked forest"))
}

/// `∇(S)`: the edges of `g` joining two different components of `(V, S)`.
pub fn nabla(g: &Graph, s: EdgeSet) -> EdgeSet {
    let (label, _) = g.component_labels(s);
    g.edges()
        .iter()
        .enumerate()
        .filter(|(_, &(u, v))| label[u] != label[v])
        .map(|(i, _)| i)
        .collect()
}

/// The broken circuit complex of a graph, with its members materialized.
#[derive(Clone, Debug)]
pub struct BrokenCircuitComplex {
    host: Graph,
    broken: Vec<EdgeSet>,
    /// broken circuits grouped by their largest edge
    by_max: Vec<Vec<EdgeSet>>,
    members: Vec<EdgeSet>,
}

impl BrokenCircuitComplex {
    pub fn new(g: &Graph) -> Self {
        let broken = broken_circuits(g);
        let mut by_max = vec![Vec::new(); g.edge_count()];
        for &b in &broken {
            by_max[b.max().expect("broken circuits have at least two edges")].push(b);
        }
        let mut bcc = BrokenCircuitComplex { host: g.clone(), broken, by_max, members: Vec::new() };
        let mut members = vec![EdgeSet::empty()];
        bcc.grow(EdgeSet::empty(), 0, &mut members);
        members.sort_unstable();
        debug_assert!(members.iter().all(|&s| g.is_forest_set(s)));
        bcc.members = members;
        bcc
    }

    // The complex is closed downward, so every member is reached by adding its
    // edges in increasing order. Adding `e` above every edge of a member can
    // only complete a broken circuit whose largest edge is `e`.
    fn grow(&self, s: EdgeSet, from: usize, out: &mut Vec<EdgeSet>) {
        for e in from..self.host.edge_count() {
            let t = s.with(e);
            if self.by_max[e].iter().all(|b| !b.is_subset(t)) {
                out.push(t);
                self.grow(t, e + 1, out);
            }
        }
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn broken_circuits(&self) -> &[EdgeSet] {
        &self.broken
    }

    /// All members, sorted by bit pattern.
    pub fn members(&self) -> &[EdgeSet] {
        &self.members
    }

    /// Membership straight from the definition.
    pub fn contains(&self, s: EdgeSet) -> bool {
        s.is_subset(self.host.all_edges()) && self.broken.iter().all(|b| !b.is_subset(s))
    }

    /// Inclusion-maximal members, sorted by bit pattern.
    pub fn maximal_members(&self) -> Vec<EdgeSet> {
        let rest = self.host.all_edges();
        self.members
            .iter()
            .copied()
            .filter(|&s| rest.difference(s).iter().all(|e| !self.contains(s.with(e))))
            .collect()
    }

    /// Whether `(V, S)` has the same component vertex sets as the host.
    pub fn is_maximally_connected(&self, s: EdgeSet) -> bool {
        self.host.component_count_of(s) == self.host.component_count()
    }

    /// Adding the smallest edge of `∇(σ)` to a member `σ` stays in the complex.
    ///
    /// Errors if `σ` is not a member or `∇(σ)` is empty.
    pub fn min_boundary_extends(&self, sigma: EdgeSet) -> Result<bool> {
        if !self.contains(sigma) {
            return Err(Error::NotInComplex);
        }
        let hat = nabla(&self.host, sigma).min().ok_or(Error::EmptyBoundary)?;
        Ok(self.contains(sigma.with(hat)))
    }

    /// The alternating sum over members above `π`, computed directly, and the
    /// maximal members `T ⊇ π` satisfying the boundary ordering condition
    /// (see [`BoundarySum`]).
    pub fn boundary_sum(&self, pi: EdgeSet) -> Result<BoundarySum> {
        if !self.contains(pi) {
            return Err(Error::NotInComplex);
        }
        let sum = self
            .members
            .iter()
            .filter(|&&s| pi.is_subset(s))
            .map(|&s| if self.host.component_count_of(s).is_multiple_of(2) { 1 } else { -1 })
            .sum();
        let boundary = nabla(&self.host, pi);
        let witnesses = self
            .maximal_members()
            .into_iter()
            .filter(|&t| pi.is_subset(t) && self.ordered_by_chords(t, boundary))
            .collect();
        Ok(BoundarySum { sum, witnesses, components: self.host.component_count() })
    }

    /// Pairs `(E, T)` counted by the coefficient of `x^k` in the tree
    /// polynomial, sorted by `(E, T)` bit patterns.
    ///
    /// `E` is a `k`-cutset and `T` a maximal member such that `E` is exactly
    /// the boundary `∇(T ∖ E)`, the smallest edge of `E` is not in `T`, and
    /// each other edge of `E ∩ T` lies on the fundamental cycle (in `T`) of a
    /// smaller edge of `E`.
    pub fn cutset_forest_pairs(&self, k: usize) -> Vec<(EdgeSet, EdgeSet)> {
        let g = &self.host;
        let all = g.all_edges();
        let mut out = Vec::new();
        for t in self.maximal_members() {
            // every candidate E is ∇(A) for A = T ∖ E ⊆ T
            let tb = t.bits();
            let mut sub = 0u64;
            loop {
                let a = EdgeSet::from_bits(sub);
                let cut = nabla(g, a);
                if t.difference(cut) == a
                    && g.component_count_of(all.difference(cut)) == k
                    && self.ordered_by_chords(t, cut)
                {
                    out.push((cut, t));
                }
                if sub == tb {
                    break;
                }
                sub = sub.wrapping_sub(tb) & tb;
            }
        }
        out.sort_unstable();
        out
    }

    /// With `ordered = {e_1 < ... < e_m}`: `e_1 ∉ T`, and every `e_j ∈ T`
    /// (`j > 1`) lies on the fundamental cycle in `T` of some `e_i`, `i < j`.
    fn ordered_by_chords(&self, t: EdgeSet, ordered: EdgeSet) -> bool {
        let list: Vec<usize> = ordered.iter().collect();
        let Some(&first) = list.first() else {
            return true;
        };
        if t.contains(first) {
            return false;
        }
        let cycles: Vec<Option<EdgeSet>> = list
            .iter()
            .map(|&e| fundamental_cycle(&self.host, t, e).expect("members are forests"))
            .collect();
        list.iter().enumerate().skip(1).all(|(j, &ej)| {
            !t.contains(ej)
                || (0..j).any(|i| cycles[i].is_some_and(|c| c.contains(ej)))
        })
    }
}

/// Result of [`BrokenCircuitComplex::boundary_sum`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundarySum {
    /// `Σ (-1)^{ℓ(σ)}` over members `σ ⊇ π`, where `ℓ` counts components.
    pub sum: i64,
    /// Maximal `T ⊇ π` avoiding the smallest boundary edge of `π`, whose other
    /// boundary edges in `T` each lie on the fundamental cycle of a smaller
    /// boundary edge.
    pub witnesses: Vec<EdgeSet>,
    /// Components of the host graph.
    pub components: usize,
}

impl BoundarySum {
    /// `sum == (-1)^{|C(G)|} · |witnesses|`.
    pub fn holds(&self) -> bool {
        let count = self.witnesses.len() as i64;
        let signed = if self.components.is_multiple_of(2) { count } else { -count };
        self.sum == signed
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(edges: &[usize]) -> EdgeSet {
        edges.iter().copied().collect()
    }

    #[test]
    fn broken_circuit_examples() {
        assert!(broken_circuits(&Graph::path(5)).is_empty());
        assert!(broken_circuits(&Graph::star(4)).is_empty());
        assert_eq!(broken_circuits(&Graph::complete(3)), [set(&[1, 2])]);
        assert_eq!(broken_circuits(&Graph::cycle(4)), [set(&[1, 2, 3])]);
    }

    #[test]
    fn cycle_counts() {
        // K4 has 7 cycles, K5 has 37, K6 has 197
        assert_eq!(cycles(&Graph::complete(4)).len(), 7);
        assert_eq!(cycles(&Graph::complete(5)).len(), 37);
        assert_eq!(cycles(&Graph::complete(6)).len(), 197);
        assert!(cycles(&Graph::complete(4)).iter().all(|c| c.len() >= 3));
    }

    #[test]
    fn member_examples() {
        assert_eq!(BrokenCircuitComplex::new(&Graph::edgeless(3)).members(), [EdgeSet::empty()]);
        let tree = Graph::star(5);
        assert_eq!(BrokenCircuitComplex::new(&tree).members().len(), 16);
        let k3 = BrokenCircuitComplex::new(&Graph::complete(3));
        assert_eq!(
            k3.members(),
            [set(&[]), set(&[0]), set(&[1]), set(&[0, 1]), set(&[2]), set(&[0, 2])]
        );
    }

    #[test]
    fn maximal_examples() {
        let tree = Graph::path(4);
        assert_eq!(BrokenCircuitComplex::new(&tree).maximal_members(), [tree.all_edges()]);
        let k3 = BrokenCircuitComplex::new(&Graph::complete(3));
        assert_eq!(k3.maximal_members(), [set(&[0, 1]), set(&[0, 2])]);
        let c4 = BrokenCircuitComplex::new(&Graph::cycle(4));
        assert_eq!(c4.maximal_members(), [set(&[0, 1, 2]), set(&[0, 1, 3]), set(&[0, 2, 3])]);
    }

    #[test]
    fn fundamental_cycle_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(fundamental_cycle(&k3, set(&[0, 1]), 2), Ok(Some(set(&[0, 1, 2]))));
        assert_eq!(fundamental_cycle(&k3, set(&[0]), 1), Ok(None));
        let c4 = Graph::cycle(4);
        assert_eq!(fundamental_cycle(&c4, set(&[0, 1, 2]), 3), Ok(Some(c4.all_edges())));
        assert_eq!(fundamental_cycle(&c4, c4.all_edges(), 3), Err(Error::NotAForest));
        assert!(fundamental_cycle(&c4, EdgeSet::empty(), 9).is_err());
    }

    #[test]
    fn external_activity_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(is_externally_active(&k3, set(&[1, 2]), 0), Ok(true));
        assert_eq!(is_externally_active(&k3, set(&[0, 1]), 2), Ok(false));
        let p3 = Graph::path(3);
        for e in 0..2 {
            assert_eq!(is_externally_active(&p3, EdgeSet::empty(), e), Ok(false));
        }
    }

    #[test]
    fn nabla_examples() {
        let k3 = Graph::complete(3);
        assert_eq!(nabla(&k3, EdgeSet::empty()), k3.all_edges());
        // e1 = 01 merges 0 and 1; the edges 02 and 12 leave the pair
        assert_eq!(nabla(&k3, set(&[0])), set(&[1, 2]));
        assert_eq!(nabla(&k3, set(&[0, 1])), EdgeSet::empty());
    }

    #[test]
    fn boundary_sum_examples() {
        let k3 = BrokenCircuitComplex::new(&Graph::complete(3));
        let r = k3.boundary_sum(EdgeSet::empty()).unwrap();
        assert_eq!((r.sum, r.witnesses.len()), (0, 0));
        let r = k3.boundary_sum(set(&[0])).unwrap();
        assert_eq!((r.sum, r.witnesses.clone()), (-1, vec![set(&[0, 2])]));
        assert!(r.holds());
        let r = k3.boundary_sum(set(&[1])).unwrap();
        assert_eq!((r.sum, r.witnesses.len()), (0, 0));
        assert_eq!(k3.boundary_sum(set(&[1, 2])), Err(Error::NotInComplex));
    }

    #[test]
    fn cutset_pair_examples() {
        let k3 = BrokenCircuitComplex::new(&Graph::complete(3));
        assert_eq!(k3.cutset_forest_pairs(1).len(), 2);
        assert_eq!(k3.cutset_forest_pairs(2), [(set(&[1, 2]), set(&[0, 2]))]);
        assert!(k3.cutset_forest_pairs(3).is_empty());
        for (cut, _) in k3.cutset_forest_pairs(2) {
            assert!(k3.host().k_cutsets(2).contains(&cut));
        }
    }

    #[test]
    fn min_boundary_examples() {
        let k3 = BrokenCircuitComplex::new(&Graph::complete(3));
        assert_eq!(k3.min_boundary_extends(EdgeSet::empty()), Ok(true));
        assert_eq!(k3.min_boundary_extends(set(&[0])), Ok(true));
        assert_eq!(k3.min_boundary_extends(set(&[0, 1])), Err(Error::EmptyBoundary));
        assert_eq!(k3.min_boundary_extends(set(&[1, 2])), Err(Error::NotInComplex));
        let c4 = BrokenCircuitComplex::new(&Graph::cycle(4));
        assert_eq!(c4.min_boundary_extends(set(&[1])), Ok(true));
    }
}
