use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, WeightedGraph};
use crate::{Error, Result};

/// A family `{G_n}` of connected weighted graphs, `G_n` of total weight `n`,
/// generating a multiplicative chromatic basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFamily {
    name: String,
    kind: Kind,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Kind {
    SingleVertex,
    Path,
    Star,
    Complete,
    Cycle,
    Prufer(u64),
    /// `members[n - 1]` is `G_n`.
    Explicit(Vec<WeightedGraph>),
}

impl GraphFamily {
    /// A single vertex of weight `n`; its basis is the power-sum basis.
    pub fn single_vertex() -> Self {
        Self::builtin("vertex", Kind::SingleVertex)
    }

    pub fn path() -> Self {
        Self::builtin("path", Kind::Path)
    }

    pub fn star() -> Self {
        Self::builtin("star", Kind::Star)
    }

    /// Complete graphs; the elementary basis up to sign.
    pub fn complete() -> Self {
        Self::builtin("complete", Kind::Complete)
    }

    /// Cycles, with `C_1 = K_1` and `C_2 = K_2`.
    pub fn cycle() -> Self {
        Self::builtin("cycle", Kind::Cycle)
    }

    /// One pseudorandom labelled tree per order, decoded from a Prüfer sequence
    /// drawn from a generator seeded by `(seed, n)`.
    pub fn random_trees(seed: u64) -> Self {
        GraphFamily { name: format!("prufer-{seed}"), kind: Kind::Prufer(seed) }
    }

    /// An explicit list; `members[n - 1]` must have total weight `n`.
    pub fn explicit(name: impl Into<String>, members: Vec<WeightedGraph>) -> Self {
        GraphFamily { name: name.into(), kind: Kind::Explicit(members) }
    }

    /// An explicit list of unweighted graphs, `graphs[n - 1]` on `n` vertices.
    pub fn from_graphs(name: impl Into<String>, graphs: Vec<Graph>) -> Self {
        Self::explicit(name, graphs.into_iter().map(WeightedGraph::unit).collect())
    }

    fn builtin(name: &str, kind: Kind) -> Self {
        GraphFamily { name: name.to_string(), kind }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// Largest `n` this family can produce, if bounded.
    pub fn max_order(&self) -> Option<usize> {
        match &self.kind {
            Kind::Explicit(members) => Some(members.len()),
            _ => None,
        }
    }

    /// `G_n` for `n >= 1`.
    pub fn member(&self, n: usize) -> Result<WeightedGraph> {
        if n == 0 {
            return Err(self.invalid("members start at n = 1"));
        }
        Ok(match &self.kind {
            Kind::SingleVertex => WeightedGraph::single_vertex(n)?,
            Kind::Path => Graph::path(n).into(),
            Kind::Star => Graph::star(n).into(),
            Kind::Complete => Graph::complete(n).into(),
            Kind::Cycle => Graph::cycle(n).into(),
            Kind::Prufer(seed) => prufer_tree(n, *seed).into(),
            Kind::Explicit(members) => members
                .get(n - 1)
                .cloned()
                .ok_or_else(|| self.invalid(&format!("no member of order {n}")))?,
        })
    }

    /// Checks every member up to `max_degree`: connected, total weight `n`.
    pub fn validate(&self, max_degree: usize) -> Result<()> {
        for n in 1..=max_degree {
            let g = self.member(n)?;
            if g.total_weight() != n {
                return Err(self.invalid(&format!("member {n} has total weight {}", g.total_weight())));
            }
            if !g.graph().is_connected() {
                return Err(self.invalid(&format!("member {n} is disconnected")));
            }
        }
        Ok(())
    }

    /// Whether every member up to `max_degree` is an unweighted tree on `n` vertices.
    pub fn is_tree_family(&self, max_degree: usize) -> bool {
        (1..=max_degree).all(|n| {
            self.member(n)
                .is_ok_and(|g| g.is_unit() && g.vertex_count() == n && g.graph().is_tree())
        })
    }

    /// Whether every member up to `max_degree` is unweighted and connected.
    pub fn is_unweighted_connected(&self, max_degree: usize) -> bool {
        (1..=max_degree).all(|n| {
            self.member(n)
                .is_ok_and(|g| g.is_unit() && g.vertex_count() == n && g.graph().is_connected())
        })
    }

    fn invalid(&self, reason: &str) -> Error {
        Error::InvalidFamily { family: self.name.clone(), reason: reason.to_string() }
    }
}

/// Decodes a pseudorandom Prüfer sequence into a labelled tree on `n` vertices.
fn prufer_tree(n: usize, seed: u64) -> Graph {
    if n <= 2 {
        return Graph::path(n);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (n as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    let code: Vec<usize> = (0..n - 2).map(|_| rng.random_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &c in &code {
        degree[c] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &c in &code {
        let leaf = (0..n).find(|&v| degree[v] == 1).expect("a leaf always exists");
        edges.push((leaf, c));
        degree[leaf] -= 1;
        degree[c] -= 1;
    }
    let rest: Vec<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    Graph::new(n, edges).expect("Prüfer decoding yields a simple tree")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builtin_families_are_valid() {
        for fam in [
            GraphFamily::single_vertex(),
            GraphFamily::path(),
            GraphFamily::star(),
            GraphFamily::complete(),
            GraphFamily::cycle(),
            GraphFamily::random_trees(7),
        ] {
            fam.validate(8).unwrap();
        }
        assert!(GraphFamily::path().is_tree_family(8));
        assert!(GraphFamily::star().is_tree_family(8));
        assert!(GraphFamily::random_trees(1).is_tree_family(12));
        assert!(!GraphFamily::cycle().is_tree_family(3));
        assert!(GraphFamily::cycle().is_unweighted_connected(6));
        assert!(!GraphFamily::single_vertex().is_tree_family(2));
    }

    #[test]
    fn random_trees_are_deterministic_and_varied() {
        let a = GraphFamily::random_trees(42);
        assert_eq!(a.member(9).unwrap(), GraphFamily::random_trees(42).member(9).unwrap());
        let differs = (4..10).any(|n| {
            let g = a.member(n).unwrap();
            g != GraphFamily::path().member(n).unwrap() && g != GraphFamily::star().member(n).unwrap()
        });
        assert!(differs);
    }

    #[test]
    fn explicit_validation() {
        let bad = GraphFamily::from_graphs("bad", vec![Graph::edgeless(1), Graph::edgeless(2)]);
        assert!(matches!(bad.validate(2), Err(Error::InvalidFamily { .. })));
        let short = GraphFamily::from_graphs("short", vec![Graph::edgeless(1)]);
        assert!(short.validate(2).is_err());
        assert_eq!(short.max_order(), Some(1));
        let heavy = GraphFamily::explicit(
            "heavy",
            vec![WeightedGraph::single_vertex(1).unwrap(), WeightedGraph::single_vertex(3).unwrap()],
        );
        assert!(heavy.validate(2).is_err());
    }
}
