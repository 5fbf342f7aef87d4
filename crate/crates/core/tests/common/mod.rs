#![allow(dead_code)]

use orcov_core::Graph;
use rand::seq::SliceRandom;
use rand::Rng;

/// Every labelled graph on `n` vertices, by edge subset of the canonical
/// pair order.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0..1u64 << pairs.len()).map(move |mask| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::from_edges(n, edges).unwrap()
    })
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let edges: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .filter(|_| rng.gen_bool(p))
        .collect();
    Graph::from_edges(n, edges).unwrap()
}

/// Random graph on 2..=max_n vertices with at least one edge.
pub fn random_nonempty_graph<R: Rng>(rng: &mut R, max_n: usize) -> Graph {
    loop {
        let n = rng.gen_range(2..=max_n);
        let p = rng.gen_range(0.15..0.9);
        let g = random_graph(rng, n, p);
        if !g.is_edgeless() {
            return g;
        }
    }
}

pub fn random_perm<R: Rng>(rng: &mut R, n: usize) -> Vec<usize> {
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// K_4 with edge {2, 3} removed.
pub fn k4_minus_edge() -> Graph {
    Graph::from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]).unwrap()
}
