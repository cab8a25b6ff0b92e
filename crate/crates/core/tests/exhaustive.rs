//! Identities checked on every labelled graph up to a small order.

mod common;

use chromagraph_core::bcc::{is_internal_forest, BrokenCircuitComplex};
use chromagraph_core::csf::{broken_circuit_expansion, colouring_expansion, deletion_contraction, DeletionContraction, EdgeChoice};
use chromagraph_core::graphpoly::{
    chi_via_lattice, chromatic_poly, chromatic_poly_weighted, signed_forest_colouring_eval, tree_poly_from_chromatic,
    tree_poly_in_basis, tree_poly_weighted, ContractionLattice, TreePolyDc,
};
use chromagraph_core::symfun::p_to_monomials;
use chromagraph_core::{mobius_substitute, EdgeSet, GraphFamily, Rational, TransitionCache, UniPoly, WeightedGraph};
use common::{all_graphs, all_graphs_up_to, weightings};

fn r(v: i64) -> Rational {
    Rational::from_integer(v.into())
}

#[test]
fn complex_is_the_set_of_internal_forests() {
    for g in all_graphs_up_to(5) {
        let complex = BrokenCircuitComplex::new(&g);
        let members: Vec<EdgeSet> =
            (0u64..1 << g.edge_count()).map(EdgeSet::from_bits).filter(|&s| is_internal_forest(&g, s)).collect();
        assert_eq!(complex.members(), members.as_slice(), "{g:?}");
        for &s in complex.members() {
            assert!(complex.contains(s));
            for e in s.iter() {
                assert!(complex.contains(s.without(e)), "downward closure fails for {g:?}");
            }
        }
    }
}

#[test]
fn maximal_iff_maximally_connected() {
    for g in all_graphs_up_to(5) {
        let complex = BrokenCircuitComplex::new(&g);
        let maximal = complex.maximal_members();
        for &s in complex.members() {
            assert_eq!(maximal.contains(&s), complex.is_maximally_connected(s), "{g:?} {s:?}");
        }
    }
}

#[test]
fn boundary_lemmas() {
    for g in all_graphs_up_to(5) {
        let complex = BrokenCircuitComplex::new(&g);
        for &s in complex.members() {
            match complex.min_boundary_extends(s) {
                Ok(extends) => assert!(extends, "{g:?} {s:?}"),
                Err(e) => assert_eq!(e, chromagraph_core::Error::EmptyBoundary),
            }
            assert!(complex.boundary_sum(s).unwrap().holds(), "{g:?} {s:?}");
        }
    }
}

#[test]
fn cutset_pairs_count_tree_coefficients() {
    for g in all_graphs_up_to(6) {
        let complex = BrokenCircuitComplex::new(&g);
        let tau = TreePolyDc::new().tree_poly(&g);
        let c = g.component_count();
        for k in 1..=g.vertex_count() {
            let count = complex.cutset_forest_pairs(k).len() as i64;
            let sign = if (c + k) % 2 == 0 { 1 } else { -1 };
            assert_eq!(r(sign * count), tau.coeff(k), "{g:?} k={k}");
        }
    }
}

#[test]
fn csf_engines_agree_through_five() {
    let mut dc = DeletionContraction::new(EdgeChoice::Last);
    let mut first = DeletionContraction::new(EdgeChoice::First);
    for g in all_graphs_up_to(5) {
        let x = broken_circuit_expansion(&g);
        let w: WeightedGraph = g.clone().into();
        assert_eq!(dc.expand(&w), x, "{g:?}");
        assert_eq!(first.expand(&w), x, "{g:?}");
        assert_eq!(x.degree(), Some(g.vertex_count()));
        assert!(x.is_homogeneous());
        assert_eq!(chromagraph_core::csf::all_ones_coefficient(&x), r(1));
    }
}

#[test]
fn weighted_csf_matches_colourings() {
    for g in all_graphs_up_to(3) {
        for w in weightings(&g, 6) {
            let x = deletion_contraction(&w);
            assert_eq!(p_to_monomials(&x, w.total_weight()).unwrap(), colouring_expansion(&w), "{w:?}");
        }
    }
}

#[test]
fn tree_polynomial_three_ways() {
    let mut cache = TransitionCache::new();
    let families = [GraphFamily::path(), GraphFamily::star(), GraphFamily::random_trees(2024)];
    let mut dc = TreePolyDc::new();
    for g in all_graphs_up_to(5) {
        let n = g.vertex_count();
        let chi = chromatic_poly(&g);
        let tau = tree_poly_from_chromatic(&chi, n).unwrap();
        assert_eq!(dc.tree_poly(&g), tau, "{g:?}");
        for fam in &families {
            assert_eq!(tree_poly_in_basis(&g.clone().into(), fam, &mut cache).unwrap(), tau, "{g:?} {}", fam.name());
        }
        assert_eq!(tau.eval(&r(1)), r(1));
        assert_eq!(chi.eval(&r(1)), r(i64::from(g.edge_count() == 0)));
    }
}

#[test]
fn weighted_duality() {
    for g in all_graphs_up_to(4) {
        let chi = chromatic_poly(&g);
        let tau = TreePolyDc::new().tree_poly(&g);
        for w in weightings(&g, 7) {
            let excess = w.excess_weight();
            let tau_w = tree_poly_weighted(&w);
            assert_eq!(tau_w.root_multiplicity(&r(1)), Some(excess), "{w:?}");
            assert_eq!(tau_w.exact_div(&UniPoly::x_minus_one().pow(excess as u32)).unwrap(), tau);
            assert_eq!(chromatic_poly_weighted(&w), chi, "{w:?}");
            let n = w.total_weight();
            assert_eq!(mobius_substitute(&tau_w, n).unwrap(), chi);
            assert_eq!(mobius_substitute(&chi, n).unwrap(), tau_w);
        }
    }
}

#[test]
fn forest_colourings_evaluate_the_tree_polynomial() {
    for g in all_graphs_up_to(5) {
        let tau = TreePolyDc::new().tree_poly(&g);
        for x in 1..=4u32 {
            let expected = tau.eval(&r(i64::from(x)));
            assert_eq!(Rational::from_integer(signed_forest_colouring_eval(&g, x)), expected, "{g:?} x={x}");
        }
    }
}

#[test]
fn lattice_identities() {
    for g in all_graphs_up_to(5) {
        let lattice = ContractionLattice::new(&g).unwrap();
        assert_eq!(chi_via_lattice(&g).unwrap(), chromatic_poly(&g));
        assert_eq!(lattice.tau_sigma(lattice.bottom()), TreePolyDc::new().tree_poly(&g));
        let n = g.vertex_count();
        for pi in 0..lattice.len() {
            let l = lattice.elements()[pi].len();
            let above = (0..lattice.len())
                .filter(|&s| lattice.leq(pi, s))
                .fold(UniPoly::zero(), |acc, s| acc + lattice.tau_sigma(s));
            let expected = UniPoly::x().pow(l as u32) * UniPoly::x_minus_one().pow((n - l) as u32);
            assert_eq!(above, expected, "{g:?} {pi}");
        }
    }
}

#[test]
fn enumeration_sizes() {
    assert_eq!(all_graphs(1).count(), 1);
    assert_eq!(all_graphs(3).count(), 8);
    assert_eq!(all_graphs(5).count(), 1024);
}
