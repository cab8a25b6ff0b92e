//! Three independent engines for the chromatic symmetric function.
//!
//! - [`broken_circuit_expansion`] sums `(-1)^{|S|} p_{λ(S)}` over the broken
//!   circuit complex (unweighted graphs only).
//! - [`deletion_contraction`] recurses `X_G = X_{G∖e} - X_{G/e}` on weighted
//!   graphs, down to edgeless graphs where `X = Π p_{ω(v)}`.
//! - [`colouring_coefficient`] counts proper colourings directly and is the
//!   ground truth for monomial coefficients.

use alloc::collections::BTreeMap;
use alloc::vec;

use crate::algebra::{partitions_of, rat, Partition, Rational};
use crate::bcc::BrokenCircuitComplex;
use crate::graph::{Graph, WeightedGraph};
use crate::symfun::{BasisId, SymFun};
use crate::{Error, Result};

/// `X_G = Σ_{S ∈ B_G} (-1)^{|S|} p_{λ(S)}` in the power-sum basis.
pub fn broken_circuit_expansion(g: &Graph) -> SymFun {
    let complex = BrokenCircuitComplex::new(g);
    let mut out = SymFun::zero(BasisId::PowerSum);
    for &s in complex.members() {
        let sign = if s.len() % 2 == 0 { 1 } else { -1 };
        out.add_term(g.lambda_of(s), &rat(sign));
    }
    out
}

/// Which edge the deletion-contraction recursion splits on.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EdgeChoice {
    /// The highest-index edge.
    #[default]
    Last,
    /// The lowest-index edge.
    First,
    /// The edge whose endpoints have the largest degree sum, ties to the lowest index.
    Busiest,
}

/// Deletion-contraction with a memo keyed on the canonical weighted graph.
///
/// The memo can be reused across calls.
#[derive(Clone, Debug, Default)]
pub struct DeletionContraction {
    choice: EdgeChoice,
    memo: BTreeMap<WeightedGraph, SymFun>,
}

impl DeletionContraction {
    pub fn new(choice: EdgeChoice) -> Self {
        DeletionContraction { choice, memo: BTreeMap::new() }
    }

    /// Number of memoized subproblems.
    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn clear(&mut self) {
        self.memo.clear();
    }

    pub fn expand(&mut self, g: &WeightedGraph) -> SymFun {
        let key = g.canonical();
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let result = match self.pick(&key) {
            None => {
                let parts = Partition::from_parts(key.weights().to_vec()).expect("weights are positive");
                SymFun::basis_element(BasisId::PowerSum, parts)
            }
            Some(e) => {
                let deleted = self.expand(&key.delete_edge(e).expect("valid edge"));
                let contracted = self.expand(&key.contract_edge(e).expect("valid edge"));
                deleted.sub(&contracted).expect("both in the power-sum basis")
            }
        };
        self.memo.insert(key, result.clone());
        result
    }

    fn pick(&self, g: &WeightedGraph) -> Option<usize> {
        let m = g.graph().edge_count();
        if m == 0 {
            return None;
        }
        Some(match self.choice {
            EdgeChoice::Last => m - 1,
            EdgeChoice::First => 0,
            EdgeChoice::Busiest => {
                let adj = g.graph().adjacency();
                let load = |&(u, v): &(usize, usize)| adj[u].count_ones() + adj[v].count_ones();
                let edges = g.graph().edges();
                let best = edges.iter().map(load).max().expect("nonempty");
                edges.iter().position(|e| load(e) == best).expect("maximum exists")
            }
        })
    }
}

/// Weighted chromatic symmetric function in the power-sum basis, splitting on
/// the highest-index edge.
pub fn deletion_contraction(g: &WeightedGraph) -> SymFun {
    DeletionContraction::new(EdgeChoice::Last).expand(g)
}

/// Coefficient of `x_1^{λ_1} ⋯ x_ℓ^{λ_ℓ}` in `X_{(G,ω)}`: the number of proper
/// colourings with `ℓ(λ)` colours in which colour `i` carries total weight
/// exactly `λ_i`.
pub fn colouring_coefficient(g: &WeightedGraph, lambda: &Partition) -> Result<Rational> {
    if lambda.size() != g.total_weight() {
        return Err(Error::SizeMismatch { expected: g.total_weight(), got: lambda.size() });
    }
    let adj = g.graph().adjacency();
    let mut colour = vec![usize::MAX; g.vertex_count()];
    let mut remaining = lambda.parts().to_vec();
    let count = count_colourings(&adj, g.weights(), 0, &mut colour, &mut remaining);
    Ok(Rational::from_integer(count.into()))
}

fn count_colourings(
    adj: &[u64],
    weights: &[usize],
    v: usize,
    colour: &mut [usize],
    remaining: &mut [usize],
) -> u64 {
    if v == weights.len() {
        return u64::from(remaining.iter().all(|&r| r == 0));
    }
    let mut total = 0;
    for c in 0..remaining.len() {
        if remaining[c] < weights[v] {
            continue;
        }
        let clash = (0..v).any(|u| adj[v] >> u & 1 == 1 && colour[u] == c);
        if clash {
            continue;
        }
        colour[v] = c;
        remaining[c] -= weights[v];
        total += count_colourings(adj, weights, v + 1, colour, remaining);
        remaining[c] += weights[v];
    }
    colour[v] = usize::MAX;
    total
}

/// Monomial coefficients of `X_{(G,ω)}` for every partition of the total
/// weight, by colouring counts. Zero coefficients are omitted.
pub fn colouring_expansion(g: &WeightedGraph) -> BTreeMap<Partition, Rational> {
    partitions_of(g.total_weight())
        .into_iter()
        .filter_map(|mu| {
            let c = colouring_coefficient(g, &mu).expect("sizes agree");
            (c != Rational::from_integer(0.into())).then_some((mu, c))
        })
        .collect()
}

/// Coefficient of `p_{(1^N)}`, where `N` is the degree. One for the chromatic
/// symmetric function of any unweighted graph.
pub fn all_ones_coefficient(f: &SymFun) -> Rational {
    let n = f.degree().unwrap_or(0);
    f.coeff(&Partition::ones(n))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symfun::p_to_monomials;

    fn p(terms: &[(&[usize], i64)]) -> SymFun {
        let mut f = SymFun::zero(BasisId::PowerSum);
        for (parts, c) in terms {
            f.add_term(Partition::from_parts(parts.to_vec()).unwrap(), &rat(*c));
        }
        f
    }

    #[test]
    fn broken_circuit_examples() {
        assert_eq!(broken_circuit_expansion(&Graph::edgeless(1)), p(&[(&[1], 1)]));
        assert_eq!(broken_circuit_expansion(&Graph::complete(2)), p(&[(&[1, 1], 1), (&[2], -1)]));
        assert_eq!(
            broken_circuit_expansion(&Graph::complete(3)),
            p(&[(&[1, 1, 1], 1), (&[2, 1], -3), (&[3], 2)])
        );
    }

    #[test]
    fn deletion_contraction_examples() {
        assert_eq!(deletion_contraction(&WeightedGraph::single_vertex(4).unwrap()), p(&[(&[4], 1)]));
        let k2 = WeightedGraph::new(Graph::complete(2), vec![2, 1]).unwrap();
        assert_eq!(deletion_contraction(&k2), p(&[(&[2, 1], 1), (&[3], -1)]));
        assert_eq!(
            deletion_contraction(&Graph::complete(3).into()),
            broken_circuit_expansion(&Graph::complete(3))
        );
    }

    #[test]
    fn colouring_examples() {
        let k2: WeightedGraph = Graph::complete(2).into();
        assert_eq!(colouring_coefficient(&k2, &Partition::ones(2)), Ok(rat(2)));
        assert_eq!(colouring_coefficient(&k2, &Partition::single(2)), Ok(rat(0)));
        let k3: WeightedGraph = Graph::complete(3).into();
        assert_eq!(colouring_coefficient(&k3, &Partition::ones(3)), Ok(rat(6)));
        assert_eq!(
            colouring_coefficient(&k3, &Partition::ones(2)),
            Err(Error::SizeMismatch { expected: 3, got: 2 })
        );
    }

    #[test]
    fn edge_choices_agree() {
        let g: WeightedGraph = Graph::new(5, [(0, 1), (1, 2), (2, 3), (3, 0), (1, 4), (2, 4), (0, 2)])
            .unwrap()
            .into();
        let last = DeletionContraction::new(EdgeChoice::Last).expand(&g);
        assert_eq!(DeletionContraction::new(EdgeChoice::First).expand(&g), last);
        assert_eq!(DeletionContraction::new(EdgeChoice::Busiest).expand(&g), last);
        assert_eq!(broken_circuit_expansion(g.graph()), last);
    }

    #[test]
    fn weighted_monomials_match_colourings() {
        let g = WeightedGraph::new(Graph::path(3), vec![2, 1, 1]).unwrap();
        let x = deletion_contraction(&g);
        assert_eq!(p_to_monomials(&x, 4).unwrap(), colouring_expansion(&g));
        assert_eq!(all_ones_coefficient(&deletion_contraction(&Graph::complete(4).into())), rat(1));
    }
}
