#![allow(dead_code)]

use chromagraph_core::{Graph, WeightedGraph};

/// Every labelled simple graph on `n` vertices, edges in lexicographic pair order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e);
        Graph::new(n, edges).unwrap()
    })
}

pub fn all_graphs_up_to(n: usize) -> impl Iterator<Item = Graph> {
    (1..=n).flat_map(all_graphs)
}

/// Every weighting of `g` with total weight at most `max_total`.
pub fn weightings(g: &Graph, max_total: usize) -> Vec<WeightedGraph> {
    fn go(g: &Graph, left: usize, w: &mut Vec<usize>, out: &mut Vec<WeightedGraph>) {
        let n = g.vertex_count();
        if w.len() == n {
            out.push(WeightedGraph::new(g.clone(), w.clone()).unwrap());
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
    go(g, max_total, &mut Vec::new(), &mut out);
    out
}
