//! Exhaustive identity harness over all small labelled graphs.
//!
//! Every check is run on every enumerated graph (or weighting) within its
//! bounds. Graphs are processed in parallel and merged in enumeration order,
//! so reports are deterministic apart from their timing fields.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use chromagraph_core::bcc::{is_internal_forest, BrokenCircuitComplex};
use chromagraph_core::csf::{
    all_ones_coefficient, broken_circuit_expansion, colouring_expansion, DeletionContraction, EdgeChoice,
};
use chromagraph_core::graphpoly::{
    chromatic_poly, chromatic_poly_weighted, clique_glue_tau, signed_forest_colouring_eval, tau_p_lambda,
    tree_poly_from_chromatic, tree_poly_weighted, ContractionLattice, TreePolyDc,
};
use chromagraph_core::symfun::{p_multiply, p_to_monomials};
use chromagraph_core::algebra::Matrix;
use chromagraph_core::{
    mobius_substitute, partitions_of, BasisId, EdgeSet, Graph, GraphFamily, Rational, SymFun, TransitionCache,
    UniPoly, WeightedGraph,
};
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use crate::io::graph_to_json;

/// Largest order [`enumerate_labelled_graphs`] accepts.
pub const MAX_ENUMERATION_ORDER: usize = 7;

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error("graph enumeration is limited to {MAX_ENUMERATION_ORDER} vertices, got {0}")]
    TooLarge(usize),
    #[error("{0}")]
    Core(#[from] chromagraph_core::Error),
}

/// Every labelled simple graph on `n` vertices, in increasing order of the
/// edge bitmask over the lexicographically ordered vertex pairs.
pub fn enumerate_labelled_graphs(n: usize) -> Result<impl Iterator<Item = Graph>, VerifyError> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(VerifyError::TooLarge(n));
    }
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    Ok((0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Graph::new(n, edges).expect("distinct pairs")
    }))
}

/// Every weighting of `g` with total weight at most `max_total`, weight
/// vectors in lexicographic order.
pub fn enumerate_weightings(g: &Graph, max_total: usize) -> Vec<WeightedGraph> {
    fn go(g: &Graph, left: usize, w: &mut Vec<usize>, out: &mut Vec<WeightedGraph>) {
        let n = g.vertex_count();
        if w.len() == n {
            out.push(WeightedGraph::new(g.clone(), w.clone()).expect("positive weights"));
            return;
        }
        let reserve = n - w.len() - 1;
        for x in 1..=left.saturating_sub(reserve) {
            w.push(x);
            go(g, left - x, w, out);
            w.pop();
        }
    }
    let mut out = Vec::new();
    if max_total >= g.vertex_count() {
        go(g, max_total, &mut Vec::new(), &mut out);
    }
    out
}

/// The chromatic-to-tree coefficient map under test.
pub type TreeFromChromatic = fn(&UniPoly, usize) -> chromagraph_core::Result<UniPoly>;

#[derive(Clone, Debug)]
pub struct SuiteConfig {
    /// Unweighted checks run on all graphs with `1..=max_n` vertices.
    pub max_n: usize,
    /// Complex, forest-colouring and lattice checks stop at this order.
    pub combinatorial_max_n: usize,
    pub weights: bool,
    pub weighted_max_vertices: usize,
    pub weighted_max_total: usize,
    /// Failures kept per check; all are counted.
    pub failure_sample: usize,
    pub tree_from_chromatic: TreeFromChromatic,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_n: 6,
            combinatorial_max_n: 5,
            weights: true,
            weighted_max_vertices: 4,
            weighted_max_total: 7,
            failure_sample: 10,
            tree_from_chromatic: tree_poly_from_chromatic,
        }
    }
}

impl SuiteConfig {
    pub fn with_max_n(max_n: usize) -> Self {
        SuiteConfig { max_n, ..Self::default() }
    }
}

macro_rules! checks {
    ($($id:ident = $name:literal : $description:literal,)*) => {
        /// Every identity the suite checks.
        #[derive(Clone, Copy, Debug, PartialEq, Eq)]
        pub enum Check { $($id,)* }

        impl Check {
            pub const ALL: &'static [Check] = &[$(Check::$id,)*];

            pub fn name(self) -> &'static str {
                match self { $(Check::$id => $name,)* }
            }

            pub fn description(self) -> &'static str {
                match self { $(Check::$id => $description,)* }
            }

            /// Whether the check runs only on weighted graphs.
            pub fn is_weighted(self) -> bool {
                self.name().starts_with("weighted-")
            }
        }
    };
}

checks! {
    CsfEnginesAgree = "csf-engines-agree":
        "broken circuit and deletion-contraction expansions of X_G coincide",
    CsfShape = "csf-shape":
        "X_G is homogeneous of degree |V| with unit coefficient on p_(1^n)",
    ChromaticWhitney = "chromatic-whitney":
        "Whitney's broken circuit sum equals the length collapse of X_G",
    ChromaticAtOne = "chromatic-at-one":
        "chi_G(1) is 0 exactly when G has an edge, else 1",
    TreeFromChromatic = "tree-from-chromatic":
        "the binomial kernel applied to chi_G gives the deletion-contraction tree polynomial",
    TreeBasisIndependent = "tree-basis-independent":
        "B-polynomials of X_G over path, star and random tree bases all equal tau_G",
    TreeAtOne = "tree-at-one":
        "tau_G(1) = 1",
    ChromaticBasisSum = "chromatic-basis-sum":
        "coefficients of X_G in complete, cycle and path bases sum to 1",
    ForestTreePoly = "forest-tree-poly":
        "a forest with m components has tau = x^m",
    TreeChromaticTransform = "tree-chromatic-transform":
        "(x-1)^n p(x/(x-1)) exchanges chi_G and tau_G",
    DisjointUnion = "disjoint-union":
        "tau and chi are multiplicative over disjoint union",
    CliqueGluing = "clique-gluing":
        "gluing along a clique K gives tau_G1 tau_G2 / tau_K",
    TreeGluing = "tree-gluing":
        "gluing a tree at a vertex leaves tau unchanged",
    BccInternalForests = "bcc-internal-forests":
        "complex members are exactly the internal forests",
    BccDownwardClosed = "bcc-downward-closed":
        "the broken circuit complex is closed under subsets",
    BccMaximal = "bcc-maximal":
        "a member is maximal iff it is maximally connected",
    BccMinBoundary = "bcc-min-boundary":
        "adding the smallest boundary edge keeps a member in the complex",
    BccBoundarySum = "bcc-boundary-sum":
        "alternating sums above a member count boundary-ordered maximal members",
    CutsetForestPairs = "cutset-forest-pairs":
        "cutset-forest pair counts equal signed tree polynomial coefficients",
    ForestColouring = "forest-colouring":
        "signed internal-forest colouring sums equal tau_G(x) for x = 1..4",
    LatticeChromatic = "lattice-chromatic":
        "sum of mu(0,pi) x^l(pi) over the contraction lattice equals chi_G",
    LatticeTauBottom = "lattice-tau-bottom":
        "tau_G(0, x) equals tau_G",
    LatticeInversion = "lattice-inversion":
        "sum of tau_G(sigma, x) over sigma >= pi is x^l(pi) (x-1)^(n-l(pi))",
    WeightedColouring = "weighted-colouring":
        "monomial expansion of weighted X matches colouring counts",
    WeightedValuation = "weighted-valuation":
        "(x-1) divides weighted tau exactly excess-weight times with quotient tau_G",
    WeightedTreeBasis = "weighted-tree-basis":
        "path-basis B-polynomial of weighted X equals (x-1)^excess tau_G",
    WeightedChromatic = "weighted-chromatic":
        "the length collapse of weighted X is chi of the underlying graph",
    WeightedTransform = "weighted-transform":
        "(x-1)^N p(x/(x-1)) exchanges chi_G and weighted tau",
    PowerSumTree = "power-sum-tree":
        "tree B-polynomial of p_lambda is x^l (x-1)^(|lambda|-l)",
    ReciprocityInvolution = "reciprocity-involution":
        "p_lambda -> X_(P_lambda) and p_lambda -> X_(S_lambda) square to the identity",
    BPolyMultiplicative = "b-poly-multiplicative":
        "B-polynomials of products are products of B-polynomials",
    BasisRoundTrip = "basis-round-trip":
        "changing to a chromatic basis and back is the identity",
    ShiftedPowerBasis = "shifted-power-basis":
        "x^k (x-1)^(N-k) are independent and the substitution is an involution",
}

/// Results the suite must cover, each with the checks that exercise it.
pub const CHECKLIST: &[(&str, &[Check])] = &[
    ("chromatic polynomial at one", &[Check::ChromaticAtOne]),
    ("maximal members are maximally connected", &[Check::BccMaximal]),
    ("reciprocity involution for paths and stars", &[Check::ReciprocityInvolution]),
    ("B-polynomial is an algebra homomorphism", &[Check::BPolyMultiplicative]),
    ("shifted powers are a basis", &[Check::ShiftedPowerBasis]),
    ("smallest boundary edge extension", &[Check::BccMinBoundary]),
    ("boundary-ordered alternating sums", &[Check::BccBoundarySum]),
    ("Whitney broken circuit expansion", &[Check::ChromaticWhitney, Check::CsfEnginesAgree]),
    ("forests have tree polynomial x^m", &[Check::ForestTreePoly]),
    ("tree-family independence", &[Check::TreeBasisIndependent]),
    ("tree polynomial from the chromatic polynomial", &[Check::TreeFromChromatic]),
    ("cutset-forest pair counts", &[Check::CutsetForestPairs]),
    ("tree polynomial at one", &[Check::TreeAtOne]),
    ("chromatic basis coefficient sums", &[Check::ChromaticBasisSum]),
    ("multiplicativity over disjoint union", &[Check::DisjointUnion]),
    ("clique gluing quotient", &[Check::CliqueGluing]),
    ("tree gluing invariance", &[Check::TreeGluing]),
    ("weighted tree polynomial valuation", &[Check::WeightedValuation, Check::WeightedTreeBasis]),
    ("tree polynomial deletion-contraction", &[Check::TreeFromChromatic, Check::TreeBasisIndependent]),
    ("weight invariance of the chromatic polynomial", &[Check::WeightedChromatic]),
    ("x/(x-1) reciprocity of chi and tau", &[Check::TreeChromaticTransform, Check::WeightedTransform]),
    ("signed internal-forest colourings", &[Check::ForestColouring]),
    ("tree polynomial of a power sum", &[Check::PowerSumTree]),
    ("chromatic polynomial from the contraction lattice", &[Check::LatticeChromatic]),
    ("Mobius inversion of lattice tree polynomials", &[Check::LatticeTauBottom, Check::LatticeInversion]),
];

/// One failed instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Failure {
    /// Graph JSON, or a description for checks not tied to a graph.
    pub subject: String,
    pub detail: String,
    pub expected: String,
    pub actual: String,
}

#[derive(Clone, Debug, Default)]
struct Tally {
    instances: u64,
    failure_count: u64,
    failures: Vec<Failure>,
    time: Duration,
}

impl Tally {
    fn absorb(&mut self, other: Tally, sample: usize) {
        self.instances += other.instances;
        self.failure_count += other.failure_count;
        self.time += other.time;
        let room = sample.saturating_sub(self.failures.len());
        self.failures.extend(other.failures.into_iter().take(room));
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: &'static str,
    pub description: &'static str,
    pub instances: u64,
    pub failure_count: u64,
    pub failures: Vec<Failure>,
    /// Summed compute time across threads.
    pub time_ms: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ChecklistEntry {
    pub result: &'static str,
    pub checks: Vec<&'static str>,
    /// Every enabled check ran at least once.
    pub exercised: bool,
    /// All checks are weighted and weighted checks are off.
    pub skipped: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SuiteReport {
    pub max_n: usize,
    pub combinatorial_max_n: usize,
    pub weights: bool,
    pub weighted_max_vertices: usize,
    pub weighted_max_total: usize,
    pub graphs: u64,
    pub weighted_graphs: u64,
    pub checks: Vec<CheckReport>,
    pub checklist: Vec<ChecklistEntry>,
    pub wall_time_ms: f64,
}

impl SuiteReport {
    pub fn total_failures(&self) -> u64 {
        self.checks.iter().map(|c| c.failure_count).sum()
    }

    /// No check failed. Checklist entries without instances are reported but
    /// do not fail the run; tiny bounds leave some identities vacuous.
    pub fn passed(&self) -> bool {
        self.total_failures() == 0
    }

    pub fn check(&self, check: Check) -> &CheckReport {
        self.checks.iter().find(|c| c.name == check.name()).expect("every check is reported")
    }

    /// The report as JSON; timing fields are dropped unless `timing` is set.
    pub fn to_json(&self, timing: bool) -> Value {
        let mut v = serde_json::to_value(self).expect("plain data serializes");
        if !timing {
            v.as_object_mut().expect("object").remove("wall_time_ms");
            for c in v["checks"].as_array_mut().expect("array") {
                c.as_object_mut().expect("object").remove("time_ms");
            }
        }
        v
    }

    pub fn to_text(&self, timing: bool) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "graphs: {} (n <= {}), weighted graphs: {}",
            self.graphs, self.max_n, self.weighted_graphs
        );
        for c in &self.checks {
            let status = if c.failure_count == 0 { "ok  " } else { "FAIL" };
            let _ = write!(s, "{status} {:<26} {:>9} instances", c.name, c.instances);
            if c.failure_count > 0 {
                let _ = write!(s, ", {} failures", c.failure_count);
            }
            if timing {
                let _ = write!(s, "  ({:.1} ms)", c.time_ms);
            }
            s.push('\n');
            for f in &c.failures {
                let _ = writeln!(s, "     {} {}: expected {}, got {}", f.subject, f.detail, f.expected, f.actual);
            }
        }
        let missing: Vec<&str> =
            self.checklist.iter().filter(|c| !c.exercised && !c.skipped).map(|c| c.result).collect();
        if !missing.is_empty() {
            let _ = writeln!(s, "not exercised: {}", missing.join("; "));
        }
        let _ = writeln!(s, "{}: {} failures", if self.passed() { "PASS" } else { "FAIL" }, self.total_failures());
        if timing {
            let _ = writeln!(s, "wall time: {:.1} ms", self.wall_time_ms);
        }
        s
    }
}

struct Shared {
    config: SuiteConfig,
    cache: TransitionCache,
    tree_bases: Vec<BasisId>,
    connected_bases: Vec<BasisId>,
    k3: Graph,
    star: Graph,
}

struct Recorder<'a> {
    sample: usize,
    tallies: &'a mut [Tally],
}

impl Recorder<'_> {
    /// Records one instance; `subject` and `detail` are only built on failure.
    fn expect<T: PartialEq + std::fmt::Debug>(
        &mut self,
        check: Check,
        subject: impl FnOnce() -> String,
        detail: impl FnOnce() -> String,
        expected: &T,
        actual: &T,
    ) {
        let tally = &mut self.tallies[check as usize];
        tally.instances += 1;
        if expected != actual {
            tally.failure_count += 1;
            if tally.failures.len() < self.sample {
                tally.failures.push(Failure {
                    subject: subject(),
                    detail: detail(),
                    expected: show(expected),
                    actual: show(actual),
                });
            }
        }
    }

    fn timed(&mut self, check: Check, f: impl FnOnce(&mut Self)) {
        let start = Instant::now();
        f(self);
        self.tallies[check as usize].time += start.elapsed();
    }
}

fn show<T: std::fmt::Debug>(value: &T) -> String {
    format!("{value:?}")
}

/// Polynomials compare and print through this wrapper so failures read as
/// `-x^2 + 2x` rather than coefficient vectors.
#[derive(PartialEq)]
struct P(UniPoly);

impl std::fmt::Debug for P {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

fn r(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

fn shifted_power(a: usize, b: usize) -> UniPoly {
    UniPoly::x().pow(a as u32) * UniPoly::x_minus_one().pow(b as u32)
}

fn graph_checks(shared: &Shared, g: &Graph, rec: &mut Recorder) {
    let config = &shared.config;
    let n = g.vertex_count();
    let unit = WeightedGraph::unit(g.clone());
    let subject = || graph_to_json(&unit);
    let none = String::new;
    let mut dc = TreePolyDc::new();
    let tau = dc.tree_poly(g);
    let chi = chromatic_poly(g);
    let x = broken_circuit_expansion(g);

    rec.timed(Check::CsfEnginesAgree, |rec| {
        let last = DeletionContraction::new(EdgeChoice::Last).expand(&unit);
        let busiest = DeletionContraction::new(EdgeChoice::Busiest).expand(&unit);
        rec.expect(Check::CsfEnginesAgree, subject, || "last edge".into(), &x, &last);
        rec.expect(Check::CsfEnginesAgree, subject, || "busiest edge".into(), &x, &busiest);
    });
    rec.timed(Check::CsfShape, |rec| {
        let shape = (x.degree(), x.is_homogeneous(), all_ones_coefficient(&x));
        rec.expect(Check::CsfShape, subject, none, &(Some(n), true, r(1)), &shape);
    });
    rec.timed(Check::ChromaticWhitney, |rec| {
        rec.expect(Check::ChromaticWhitney, subject, none, &P(chromatic_poly_weighted(&unit)), &P(chi.clone()));
    });
    rec.timed(Check::ChromaticAtOne, |rec| {
        let expected = r(i64::from(g.edge_count() == 0));
        rec.expect(Check::ChromaticAtOne, subject, none, &expected, &chi.eval(&r(1)));
    });
    rec.timed(Check::TreeFromChromatic, |rec| {
        let formula = (config.tree_from_chromatic)(&chi, n).map(P).map_err(|e| e.to_string());
        rec.expect(Check::TreeFromChromatic, subject, none, &Ok(P(tau.clone())), &formula);
    });
    rec.timed(Check::TreeBasisIndependent, |rec| {
        for basis in &shared.tree_bases {
            let b = shared.cache.b_polynomial(&x, basis).map(P).map_err(|e| e.to_string());
            rec.expect(Check::TreeBasisIndependent, subject, || basis.to_string(), &Ok(P(tau.clone())), &b);
        }
    });
    rec.timed(Check::TreeAtOne, |rec| {
        rec.expect(Check::TreeAtOne, subject, none, &r(1), &tau.eval(&r(1)));
    });
    rec.timed(Check::ChromaticBasisSum, |rec| {
        for basis in &shared.connected_bases {
            let sum = shared.cache.change_basis(&x, basis).map(|f| f.coeff_sum()).map_err(|e| e.to_string());
            rec.expect(Check::ChromaticBasisSum, subject, || basis.to_string(), &Ok(r(1)), &sum);
        }
    });
    if g.is_forest() {
        rec.timed(Check::ForestTreePoly, |rec| {
            let power = UniPoly::x().pow(g.component_count() as u32);
            rec.expect(Check::ForestTreePoly, subject, none, &P(power), &P(tau.clone()));
        });
    }
    rec.timed(Check::TreeChromaticTransform, |rec| {
        let forward = mobius_substitute(&chi, n).map(P).map_err(|e| e.to_string());
        let back = mobius_substitute(&tau, n).map(P).map_err(|e| e.to_string());
        rec.expect(Check::TreeChromaticTransform, subject, || "chi to tau".into(), &Ok(P(tau.clone())), &forward);
        rec.expect(Check::TreeChromaticTransform, subject, || "tau to chi".into(), &Ok(P(chi.clone())), &back);
    });

    if n > config.combinatorial_max_n {
        return;
    }

    rec.timed(Check::DisjointUnion, |rec| {
        for other in [&shared.k3, &shared.star] {
            let union = g.disjoint_union(other).expect("small graphs");
            let tau_other = dc.tree_poly(other);
            let expected = (P(tau.clone() * tau_other), P(chi.clone() * chromatic_poly(other)));
            let actual = (P(dc.tree_poly(&union)), P(chromatic_poly(&union)));
            rec.expect(Check::DisjointUnion, subject, || format!("with {other:?}"), &expected, &actual);
        }
    });
    rec.timed(Check::CliqueGluing, |rec| {
        let mut cliques = vec![(vec![0], vec![2])];
        if let Some(&(u, v)) = g.edges().first() {
            cliques.push((vec![u, v], vec![0, 1]));
        }
        for (k1, k2) in cliques {
            let glued = Graph::glue_at_clique(g, &shared.k3, &k1, &k2).expect("cliques");
            let quotient = clique_glue_tau(g, &shared.k3, &k1, &k2).map(P).map_err(|e| e.to_string());
            rec.expect(Check::CliqueGluing, subject, || format!("K3 along {k1:?}"), &Ok(P(dc.tree_poly(&glued))), &quotient);
        }
    });
    rec.timed(Check::TreeGluing, |rec| {
        for v in 0..n {
            let glued = Graph::glue_at_clique(g, &shared.star, &[v], &[1]).expect("single vertices are cliques");
            rec.expect(Check::TreeGluing, subject, || format!("star at {v}"), &P(tau.clone()), &P(dc.tree_poly(&glued)));
        }
    });

    let complex = BrokenCircuitComplex::new(g);
    rec.timed(Check::BccInternalForests, |rec| {
        let forests: Vec<EdgeSet> =
            (0u64..1 << g.edge_count()).map(EdgeSet::from_bits).filter(|&s| is_internal_forest(g, s)).collect();
        rec.expect(Check::BccInternalForests, subject, none, &forests.as_slice(), &complex.members());
    });
    rec.timed(Check::BccDownwardClosed, |rec| {
        for &s in complex.members() {
            let closed = s.iter().all(|e| complex.contains(s.without(e)));
            rec.expect(Check::BccDownwardClosed, subject, || format!("{s:?}"), &true, &closed);
        }
    });
    rec.timed(Check::BccMaximal, |rec| {
        let maximal = complex.maximal_members();
        for &s in complex.members() {
            let connected = complex.is_maximally_connected(s);
            rec.expect(Check::BccMaximal, subject, || format!("{s:?}"), &connected, &maximal.contains(&s));
        }
    });
    rec.timed(Check::BccMinBoundary, |rec| {
        for &s in complex.members() {
            match complex.min_boundary_extends(s) {
                Err(chromagraph_core::Error::EmptyBoundary) => {}
                outcome => rec.expect(Check::BccMinBoundary, subject, || format!("{s:?}"), &Ok(true), &outcome),
            }
        }
    });
    rec.timed(Check::BccBoundarySum, |rec| {
        for &s in complex.members() {
            let holds = complex.boundary_sum(s).map(|b| b.holds());
            rec.expect(Check::BccBoundarySum, subject, || format!("{s:?}"), &Ok(true), &holds);
        }
    });
    rec.timed(Check::CutsetForestPairs, |rec| {
        let c = g.component_count();
        for k in 1..=n {
            let count = complex.cutset_forest_pairs(k).len() as i64;
            let signed = if (c + k).is_multiple_of(2) { count } else { -count };
            rec.expect(Check::CutsetForestPairs, subject, || format!("k={k}"), &tau.coeff(k), &r(signed));
        }
    });
    rec.timed(Check::ForestColouring, |rec| {
        for x in 1..=4u32 {
            let eval = Rational::from_integer(signed_forest_colouring_eval(g, x));
            rec.expect(Check::ForestColouring, subject, || format!("x={x}"), &tau.eval(&r(i64::from(x))), &eval);
        }
    });
    let lattice = ContractionLattice::new(g).expect("within the lattice bound");
    rec.timed(Check::LatticeChromatic, |rec| {
        rec.expect(Check::LatticeChromatic, subject, none, &P(chi.clone()), &P(lattice.chromatic_poly()));
    });
    rec.timed(Check::LatticeTauBottom, |rec| {
        rec.expect(Check::LatticeTauBottom, subject, none, &P(tau.clone()), &P(lattice.tau_sigma(lattice.bottom())));
    });
    rec.timed(Check::LatticeInversion, |rec| {
        let taus: Vec<UniPoly> = (0..lattice.len()).map(|s| lattice.tau_sigma(s)).collect();
        for pi in 0..lattice.len() {
            let l = lattice.elements()[pi].len();
            let above = (0..lattice.len())
                .filter(|&s| lattice.leq(pi, s))
                .fold(UniPoly::zero(), |acc, s| acc + taus[s].clone());
            let detail = || format!("{:?}", lattice.elements()[pi].blocks());
            rec.expect(Check::LatticeInversion, subject, detail, &P(shifted_power(l, n - l)), &P(above));
        }
    });
}

fn weighted_checks(shared: &Shared, w: &WeightedGraph, rec: &mut Recorder) {
    let subject = || graph_to_json(w);
    let none = String::new;
    let g = w.graph();
    let x = DeletionContraction::default().expand(w);
    let total = w.total_weight();
    let excess = w.excess_weight();
    let tau_g = TreePolyDc::new().tree_poly(g);
    let tau_w = tree_poly_weighted(w);
    let chi = chromatic_poly(g);

    rec.timed(Check::WeightedColouring, |rec| {
        let monomials = p_to_monomials(&x, total).map_err(|e| e.to_string());
        rec.expect(Check::WeightedColouring, subject, none, &Ok(colouring_expansion(w)), &monomials);
    });
    rec.timed(Check::WeightedValuation, |rec| {
        let quotient = tau_w
            .exact_div(&UniPoly::x_minus_one().pow(excess as u32))
            .map(P)
            .map_err(|e| e.to_string());
        let actual = (tau_w.root_multiplicity(&r(1)), quotient);
        rec.expect(Check::WeightedValuation, subject, none, &(Some(excess), Ok(P(tau_g.clone()))), &actual);
    });
    rec.timed(Check::WeightedTreeBasis, |rec| {
        let b = shared.cache.b_polynomial(&x, &shared.tree_bases[0]).map(P).map_err(|e| e.to_string());
        rec.expect(Check::WeightedTreeBasis, subject, none, &Ok(P(tau_w.clone())), &b);
    });
    rec.timed(Check::WeightedChromatic, |rec| {
        rec.expect(Check::WeightedChromatic, subject, none, &P(chi.clone()), &P(x.collapse_by_length()));
    });
    rec.timed(Check::WeightedTransform, |rec| {
        let forward = mobius_substitute(&chi, total).map(P).map_err(|e| e.to_string());
        let back = mobius_substitute(&tau_w, total).map(P).map_err(|e| e.to_string());
        rec.expect(Check::WeightedTransform, subject, || "chi to tau".into(), &Ok(P(tau_w.clone())), &forward);
        rec.expect(Check::WeightedTransform, subject, || "tau to chi".into(), &Ok(P(chi.clone())), &back);
    });
}

fn global_checks(shared: &Shared, depth: usize, rec: &mut Recorder) {
    let cache = &shared.cache;
    let all_partitions = || (0..=depth).flat_map(partitions_of);

    rec.timed(Check::PowerSumTree, |rec| {
        for lambda in all_partitions() {
            let p = SymFun::basis_element(BasisId::PowerSum, lambda.clone());
            for basis in &shared.tree_bases {
                let b = cache.b_polynomial(&p, basis).map(P).map_err(|e| e.to_string());
                let detail = || format!("{lambda} in {basis}");
                rec.expect(Check::PowerSumTree, || "p".into(), detail, &Ok(P(tau_p_lambda(&lambda))), &b);
            }
        }
    });
    rec.timed(Check::ReciprocityInvolution, |rec| {
        for name in ["path", "star"] {
            let basis = BasisId::Chromatic(name.into());
            for lambda in (0..=depth.min(6)).flat_map(partitions_of) {
                let p = SymFun::basis_element(BasisId::PowerSum, lambda.clone());
                let twice = cache.reciprocity_map(&p, &basis).and_then(|once| cache.reciprocity_map(&once, &basis));
                rec.expect(Check::ReciprocityInvolution, || name.into(), || lambda.to_string(), &Ok(p), &twice);
            }
        }
    });
    rec.timed(Check::BPolyMultiplicative, |rec| {
        let small: Vec<(Graph, SymFun)> = (1..=3)
            .flat_map(|n| enumerate_labelled_graphs(n).expect("small"))
            .map(|g| {
                let x = broken_circuit_expansion(&g);
                (g, x)
            })
            .collect();
        let bases: Vec<&BasisId> = shared.tree_bases.iter().chain(&shared.connected_bases).collect();
        for (g, xg) in &small {
            for (h, xh) in &small {
                if g.vertex_count() + h.vertex_count() > depth {
                    continue;
                }
                let product = p_multiply(xg, xh).expect("power sums");
                for basis in &bases {
                    let lhs = cache.b_polynomial(&product, basis).map(P).map_err(|e| e.to_string());
                    let rhs = cache
                        .b_polynomial(xg, basis)
                        .and_then(|a| cache.b_polynomial(xh, basis).map(|b| P(a * b)))
                        .map_err(|e| e.to_string());
                    let subject = || format!("{g:?} * {h:?}");
                    rec.expect(Check::BPolyMultiplicative, subject, || basis.to_string(), &rhs, &lhs);
                }
            }
        }
    });
    rec.timed(Check::BasisRoundTrip, |rec| {
        let bases: Vec<&BasisId> = shared.tree_bases.iter().chain(&shared.connected_bases).collect();
        for lambda in all_partitions() {
            let p = SymFun::basis_element(BasisId::PowerSum, lambda.clone());
            for basis in &bases {
                let back = cache.change_basis(&p, basis).and_then(|f| cache.change_basis(&f, &BasisId::PowerSum));
                let detail = || format!("{lambda} via {basis}");
                rec.expect(Check::BasisRoundTrip, || "p".into(), detail, &Ok(p.clone()), &back);
            }
        }
    });
    rec.timed(Check::ShiftedPowerBasis, |rec| {
        for big_n in 0..=depth {
            let columns: Vec<UniPoly> = (0..=big_n).map(|k| shifted_power(k, big_n - k)).collect();
            let m = Matrix::from_fn(big_n + 1, big_n + 1, |i, j| columns[j].coeff(i));
            let invertible = m.inverse().is_some();
            rec.expect(Check::ShiftedPowerBasis, || format!("N={big_n}"), String::new, &true, &invertible);
            for k in 0..=big_n {
                let xk = UniPoly::x().pow(k as u32);
                let twice = mobius_substitute(&xk, big_n).and_then(|p| mobius_substitute(&p, big_n)).map(P);
                rec.expect(Check::ShiftedPowerBasis, || format!("N={big_n}"), || format!("x^{k}"), &Ok(P(xk)), &twice);
            }
        }
    });
}

fn families() -> (Vec<GraphFamily>, Vec<GraphFamily>) {
    let tree = vec![GraphFamily::path(), GraphFamily::star(), GraphFamily::random_trees(0x5eed)];
    let connected = vec![GraphFamily::complete(), GraphFamily::cycle(), GraphFamily::path()];
    (tree, connected)
}

/// Runs every check within the bounds of `config`.
pub fn run_suite(config: &SuiteConfig) -> Result<SuiteReport, VerifyError> {
    let start = Instant::now();
    if config.max_n > MAX_ENUMERATION_ORDER {
        return Err(VerifyError::TooLarge(config.max_n));
    }
    let weighted_vertices = config.weighted_max_vertices.min(config.max_n);
    let depth = if config.weights { config.max_n.max(config.weighted_max_total) } else { config.max_n }.max(6);
    let (tree_families, connected_families) = families();
    let mut cache = TransitionCache::new();
    let mut register = |fams: &[GraphFamily]| -> Result<Vec<BasisId>, VerifyError> {
        fams.iter().map(|f| cache.register(f, depth).map_err(VerifyError::from)).collect()
    };
    let tree_bases = register(&tree_families)?;
    let connected_bases = register(&connected_families)?;
    let shared = Shared {
        config: config.clone(),
        cache,
        tree_bases,
        connected_bases,
        k3: Graph::complete(3),
        star: Graph::star(4),
    };

    let blank = || vec![Tally::default(); Check::ALL.len()];
    let mut totals = blank();
    let sample = config.failure_sample;
    let merge = |totals: &mut Vec<Tally>, part: Vec<Tally>| {
        for (t, p) in totals.iter_mut().zip(part) {
            t.absorb(p, sample);
        }
    };

    let mut graphs = 0u64;
    let mut weighted_graphs = 0u64;
    for n in 1..=config.max_n {
        let all: Vec<Graph> = enumerate_labelled_graphs(n)?.collect();
        graphs += all.len() as u64;
        for chunk in all.chunks(4096) {
            let parts: Vec<Vec<Tally>> = chunk
                .par_iter()
                .map(|g| {
                    let mut tallies = blank();
                    graph_checks(&shared, g, &mut Recorder { sample, tallies: &mut tallies });
                    tallies
                })
                .collect();
            for part in parts {
                merge(&mut totals, part);
            }
        }
        if config.weights && n <= weighted_vertices {
            let weighted: Vec<WeightedGraph> =
                all.iter().flat_map(|g| enumerate_weightings(g, config.weighted_max_total)).collect();
            weighted_graphs += weighted.len() as u64;
            let parts: Vec<Vec<Tally>> = weighted
                .par_iter()
                .map(|w| {
                    let mut tallies = blank();
                    weighted_checks(&shared, w, &mut Recorder { sample, tallies: &mut tallies });
                    tallies
                })
                .collect();
            for part in parts {
                merge(&mut totals, part);
            }
        }
    }
    let mut tallies = blank();
    global_checks(&shared, depth, &mut Recorder { sample, tallies: &mut tallies });
    merge(&mut totals, tallies);

    let checks: Vec<CheckReport> = Check::ALL
        .iter()
        .zip(totals)
        .map(|(&c, t)| CheckReport {
            name: c.name(),
            description: c.description(),
            instances: t.instances,
            failure_count: t.failure_count,
            failures: t.failures,
            time_ms: t.time.as_secs_f64() * 1e3,
        })
        .collect();
    let enabled = |c: &&Check| config.weights || !c.is_weighted();
    let checklist = CHECKLIST
        .iter()
        .map(|(result, list)| {
            let skipped = !list.iter().any(|c| enabled(&c));
            ChecklistEntry {
                result,
                checks: list.iter().map(|c| c.name()).collect(),
                exercised: !skipped && list.iter().filter(enabled).all(|c| checks[*c as usize].instances > 0),
                skipped,
            }
        })
        .collect();
    Ok(SuiteReport {
        max_n: config.max_n,
        combinatorial_max_n: config.combinatorial_max_n,
        weights: config.weights,
        weighted_max_vertices: weighted_vertices,
        weighted_max_total: config.weighted_max_total,
        graphs,
        weighted_graphs,
        checks,
        checklist,
        wall_time_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_labelled_graphs(1).unwrap().count(), 1);
        assert_eq!(enumerate_labelled_graphs(3).unwrap().count(), 8);
        assert_eq!(enumerate_labelled_graphs(5).unwrap().count(), 1024);
        assert!(enumerate_labelled_graphs(8).is_err());
        let first: Vec<Graph> = enumerate_labelled_graphs(3).unwrap().take(3).collect();
        assert_eq!(first[1].edges(), &[(0, 1)]);
        assert_eq!(first[2].edges(), &[(0, 2)]);
    }

    #[test]
    fn weighting_counts() {
        let weights = |g: &Graph, m| -> Vec<Vec<usize>> {
            enumerate_weightings(g, m).iter().map(|w| w.weights().to_vec()).collect()
        };
        assert_eq!(weights(&Graph::edgeless(1), 3), vec![vec![1], vec![2], vec![3]]);
        assert_eq!(weights(&Graph::complete(2), 3), vec![vec![1, 1], vec![1, 2], vec![2, 1]]);
        assert_eq!(weights(&Graph::complete(2), 2), vec![vec![1, 1]]);
        assert!(weights(&Graph::complete(3), 2).is_empty());
    }

    #[test]
    fn checklist_names_are_unique() {
        let mut names: Vec<&str> = Check::ALL.iter().map(|c| c.name()).collect();
        names.sort_unstable();
        names.dedup();
        assert_eq!(names.len(), Check::ALL.len());
        for (i, c) in Check::ALL.iter().enumerate() {
            assert_eq!(*c as usize, i);
        }
    }
}
