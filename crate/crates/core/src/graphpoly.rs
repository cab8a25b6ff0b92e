//! Chromatic and tree polynomials, the transforms between them, and the
//! lattice of contractions.

use alloc::collections::BTreeMap;
use alloc::string::ToString;
use alloc::vec;
use alloc::vec::Vec;
use core::cell::OnceCell;

use num_bigint::BigInt;

use crate::algebra::{binomial, mobius_substitute, rat, sign, Partition, Rational, UniPoly};
use crate::bcc::BrokenCircuitComplex;
use crate::csf::deletion_contraction;
use crate::graph::{Graph, VertexPartition, WeightedGraph};
use crate::symfun::{GraphFamily, TransitionCache};
use crate::{Error, Result};

/// Default vertex bound for [`ContractionLattice::new`].
pub const DEFAULT_LATTICE_BOUND: usize = 8;

/// `x^a (x-1)^b`.
fn shifted_power(a: usize, b: usize) -> UniPoly {
    UniPoly::x().pow(a as u32) * UniPoly::x_minus_one().pow(b as u32)
}

/// Whitney's broken circuit sum `χ_G = Σ_{S ∈ B_G} (-1)^{|S|} x^{n-|S|}`.
pub fn chromatic_poly(g: &Graph) -> UniPoly {
    let n = g.vertex_count();
    let mut coeffs = vec![0i64; n + 1];
    for s in BrokenCircuitComplex::new(g).members() {
        let k = s.len();
        coeffs[n - k] += if k % 2 == 0 { 1 } else { -1 };
    }
    UniPoly::from_ints(&coeffs)
}

/// Chromatic polynomial read off `X_{(G,ω)}`: power-sum coefficients summed by
/// partition length. Independent of the weights.
pub fn chromatic_poly_weighted(g: &WeightedGraph) -> UniPoly {
    deletion_contraction(g).collapse_by_length()
}

/// `[x^k]τ = (-1)^{n+k} Σ_{m=1}^{k} C(n-m, k-m) [x^m]χ`.
///
/// `chi` must have degree exactly `n`; for `n = 0` it must be the constant 1.
pub fn tree_poly_from_chromatic(chi: &UniPoly, n: usize) -> Result<UniPoly> {
    let degree = chi.degree().unwrap_or(0);
    if chi.is_zero() || degree != n {
        return Err(Error::DegreeMismatch { expected: n, got: degree });
    }
    if n == 0 {
        return Ok(UniPoly::one());
    }
    let mut coeffs = vec![Rational::from_integer(BigInt::from(0)); n + 1];
    for (k, slot) in coeffs.iter_mut().enumerate().skip(1) {
        let mut acc = BigInt::from(0);
        for m in 1..=k {
            let c = chi.coeff(m);
            debug_assert!(c.is_integer());
            acc += binomial((n - m) as i64, (k - m) as i64) * c.to_integer();
        }
        *slot = sign(n + k) * Rational::from_integer(acc);
    }
    Ok(UniPoly::from_coeffs(coeffs))
}

/// Deletion-contraction for the tree polynomial,
/// `τ_G = τ_{G∖e} - (x-1) τ_{G/e}`, with `τ = x^n` on edgeless graphs.
///
/// The memo is keyed on the graph with sorted edges and can be reused.
#[derive(Clone, Debug, Default)]
pub struct TreePolyDc {
    memo: BTreeMap<Graph, UniPoly>,
}

impl TreePolyDc {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn tree_poly(&mut self, g: &Graph) -> UniPoly {
        let mut edges = g.edges().to_vec();
        edges.sort_unstable();
        let key = Graph::new(g.vertex_count(), edges).expect("same edges, reordered");
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let m = key.edge_count();
        let result = if m == 0 {
            UniPoly::x().pow(key.vertex_count() as u32)
        } else {
            let deleted = self.tree_poly(&key.delete_edge(m - 1).expect("valid edge"));
            let (contracted, _) = key.contract_edge(m - 1).expect("valid edge");
            let contracted = self.tree_poly(&contracted);
            deleted - UniPoly::x_minus_one() * contracted
        };
        self.memo.insert(key, result.clone());
        result
    }
}

/// [`TreePolyDc`] with a fresh memo.
pub fn tree_poly_dc(g: &Graph) -> UniPoly {
    TreePolyDc::new().tree_poly(g)
}

/// The `B`-polynomial of `X_{(G,ω)}` in the chromatic basis of a tree family,
/// using (and extending) `cache`.
pub fn tree_poly_in_basis(g: &WeightedGraph, family: &GraphFamily, cache: &mut TransitionCache) -> Result<UniPoly> {
    let degree = g.total_weight();
    if !family.is_tree_family(degree) {
        return Err(Error::InvalidFamily {
            family: family.name().to_string(),
            reason: "not a family of unweighted trees".to_string(),
        });
    }
    let basis = cache.register(family, degree)?;
    cache.b_polynomial(&deletion_contraction(g), &basis)
}

/// [`tree_poly_in_basis`] with a fresh cache.
pub fn tree_poly_via_basis(g: &WeightedGraph, family: &GraphFamily) -> Result<UniPoly> {
    tree_poly_in_basis(g, family, &mut TransitionCache::new())
}

/// `τ_{(G,ω)} = (x-1)^{N-n} τ_G`.
pub fn tree_poly_weighted(g: &WeightedGraph) -> UniPoly {
    UniPoly::x_minus_one().pow(g.excess_weight() as u32) * tree_poly_dc(g.graph())
}

/// `τ_{p_λ} = x^{ℓ(λ)} (x-1)^{|λ|-ℓ(λ)}`.
pub fn tau_p_lambda(lambda: &Partition) -> UniPoly {
    shifted_power(lambda.len(), lambda.size() - lambda.len())
}

/// Which polynomial [`reciprocity_transforms`] starts from. Both directions are
/// the same involution.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    ChromaticToTree,
    TreeToChromatic,
}

/// `p ↦ (x-1)^N p(x/(x-1))`, sending `χ_G` to `τ_{(G,ω)}` and back.
pub fn reciprocity_transforms(p: &UniPoly, total_weight: usize, direction: Direction) -> Result<UniPoly> {
    match direction {
        Direction::ChromaticToTree | Direction::TreeToChromatic => mobius_substitute(p, total_weight),
    }
}

/// `τ_H = τ_{G1} τ_{G2} / τ_{K_k}` for `H` the gluing of `g1` and `g2` along
/// the cliques `k1` and `k2`.
///
/// Fails on invalid cliques or if the division is not exact.
pub fn clique_glue_tau(g1: &Graph, g2: &Graph, k1: &[usize], k2: &[usize]) -> Result<UniPoly> {
    Graph::glue_at_clique(g1, g2, k1, k2)?;
    let mut dc = TreePolyDc::new();
    let product = dc.tree_poly(g1) * dc.tree_poly(g2);
    product.exact_div(&dc.tree_poly(&Graph::complete(k1.len())))
}

/// `(-1)^n Σ (-1)^{|C(F)|}` over internal forests `F` of `g` paired with a
/// proper `x`-colouring of the spanning forest `(V, F)`. Equals `τ_G(x)`.
pub fn signed_forest_colouring_eval(g: &Graph, x: u32) -> BigInt {
    let n = g.vertex_count();
    let mut total = BigInt::from(0);
    for &f in BrokenCircuitComplex::new(g).members() {
        let mut adj = vec![0u64; n];
        for e in f.iter() {
            let (u, v) = g.edges()[e];
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let mut colour = vec![0u32; n];
        let count = proper_colourings(&adj, x, 0, &mut colour);
        let components = g.component_count_of(f);
        if components.is_multiple_of(2) {
            total += count;
        } else {
            total -= count;
        }
    }
    if n.is_multiple_of(2) {
        total
    } else {
        -total
    }
}

fn proper_colourings(adj: &[u64], x: u32, v: usize, colour: &mut [u32]) -> BigInt {
    if v == adj.len() {
        return BigInt::from(1);
    }
    let mut total = BigInt::from(0);
    for c in 0..x {
        if (0..v).any(|u| adj[v] >> u & 1 == 1 && colour[u] == c) {
            continue;
        }
        colour[v] = c;
        total += proper_colourings(adj, x, v + 1, colour);
    }
    total
}

/// The connected set partitions of a graph ordered by refinement, with Möbius
/// values computed per row on first use.
///
/// Elements are sorted from finest to coarsest, so index 0 is `0̂`.
#[derive(Clone, Debug)]
pub struct ContractionLattice {
    host: Graph,
    elements: Vec<VertexPartition>,
    /// per element, the block label of every vertex
    labels: Vec<Vec<u8>>,
    /// per element, the smallest vertex in each vertex's block
    reps: Vec<Vec<u8>>,
    rows: Vec<OnceCell<Vec<i64>>>,
}

impl ContractionLattice {
    /// Builds the lattice if `g` has at most [`DEFAULT_LATTICE_BOUND`] vertices.
    pub fn new(g: &Graph) -> Result<Self> {
        Self::with_bound(g, DEFAULT_LATTICE_BOUND)
    }

    pub fn with_bound(g: &Graph, bound: usize) -> Result<Self> {
        let n = g.vertex_count();
        if n > bound {
            return Err(Error::TooLarge { what: "vertices for the contraction lattice", max: bound, got: n });
        }
        let mut elements = Vec::new();
        let mut growth = vec![0usize; n];
        restricted_growth(g, &mut growth, 0, 0, &mut elements);
        elements.sort_by(|a: &VertexPartition, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
        let labels: Vec<Vec<u8>> = elements
            .iter()
            .map(|p| p.labels().into_iter().map(|l| l as u8).collect())
            .collect();
        let reps = elements
            .iter()
            .map(|p| {
                let mut rep = vec![0u8; n];
                for block in p.blocks() {
                    for &v in block {
                        rep[v] = block[0] as u8;
                    }
                }
                rep
            })
            .collect();
        let rows = vec![OnceCell::new(); elements.len()];
        Ok(ContractionLattice { host: g.clone(), elements, labels, reps, rows })
    }

    pub fn host(&self) -> &Graph {
        &self.host
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn elements(&self) -> &[VertexPartition] {
        &self.elements
    }

    pub fn index_of(&self, p: &VertexPartition) -> Option<usize> {
        self.elements.iter().position(|e| e == p)
    }

    /// Index of `0̂`, the all-singletons partition.
    pub fn bottom(&self) -> usize {
        0
    }

    /// Index of the coarsest element: the partition into components.
    pub fn top(&self) -> usize {
        self.elements.len() - 1
    }

    /// Whether element `i` refines element `j`.
    pub fn leq(&self, i: usize, j: usize) -> bool {
        let (rep, theirs) = (&self.reps[i], &self.labels[j]);
        (0..rep.len()).all(|v| theirs[v] == theirs[rep[v] as usize])
    }

    /// `μ(σ, π)` for every `π`, zero where `σ ≰ π`.
    pub fn mobius_row(&self, sigma: usize) -> &[i64] {
        self.rows[sigma].get_or_init(|| {
            let mut row = vec![0i64; self.elements.len()];
            let mut above: Vec<usize> = Vec::new();
            for pi in sigma..self.elements.len() {
                if !self.leq(sigma, pi) {
                    continue;
                }
                row[pi] = if pi == sigma {
                    1
                } else {
                    -above.iter().filter(|&&rho| self.leq(rho, pi)).map(|&rho| row[rho]).sum::<i64>()
                };
                above.push(pi);
            }
            row
        })
    }

    pub fn mobius(&self, sigma: usize, pi: usize) -> i64 {
        self.mobius_row(sigma)[pi]
    }

    /// `Σ_π μ(0̂, π) x^{ℓ(π)}`.
    pub fn chromatic_poly(&self) -> UniPoly {
        let row = self.mobius_row(self.bottom());
        let mut out = UniPoly::zero();
        for (pi, &mu) in row.iter().enumerate().filter(|(_, &mu)| mu != 0) {
            out = out + UniPoly::monomial(rat(mu), self.elements[pi].len());
        }
        out
    }

    /// `τ_G(σ, x) = Σ_{π ≥ σ} μ(σ, π) x^{ℓ(π)} (x-1)^{n-ℓ(π)}`.
    pub fn tau_sigma(&self, sigma: usize) -> UniPoly {
        let n = self.host.vertex_count();
        let row = self.mobius_row(sigma);
        let mut out = UniPoly::zero();
        for (pi, &mu) in row.iter().enumerate().filter(|(_, &mu)| mu != 0) {
            let l = self.elements[pi].len();
            out = out + shifted_power(l, n - l).scale(&rat(mu));
        }
        out
    }
}

fn restricted_growth(g: &Graph, growth: &mut [usize], v: usize, blocks: usize, out: &mut Vec<VertexPartition>) {
    if v == growth.len() {
        let p = VertexPartition::from_labels(growth);
        if p.is_connected_in(g) {
            out.push(p);
        }
        return;
    }
    for b in 0..=blocks {
        growth[v] = b;
        restricted_growth(g, growth, v + 1, blocks.max(b + 1), out);
    }
}

/// `Σ_{π ∈ L_G} μ(0̂, π) x^{ℓ(π)}`.
pub fn chi_via_lattice(g: &Graph) -> Result<UniPoly> {
    Ok(ContractionLattice::new(g)?.chromatic_poly())
}

/// `τ_G(σ, x)` for a connected partition `σ` of `g`.
pub fn tau_sigma(g: &Graph, sigma: &VertexPartition) -> Result<UniPoly> {
    let lattice = ContractionLattice::new(g)?;
    let index = lattice.index_of(sigma).ok_or(Error::NotConnectedPartition)?;
    Ok(lattice.tau_sigma(index))
}
