//! Simple undirected graphs, their orientations, and exact colouring.
//!
//! Vertices are `0..n`. Edges are kept in a canonical list of pairs `(u, v)`
//! with `u < v`, sorted lexicographically; every per-edge vector in the crate
//! (orientations, certificates) is indexed by position in that list.

mod coloring;
mod parse;

pub use coloring::{
    chromatic_number, chromatic_number_with, proper_coloring, Coloring, DEFAULT_CHI_VERTEX_BOUND,
};
pub use parse::{encode_graph6, parse_edge_list, parse_graph, parse_graph6, GraphFormat};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<FixedBitSet>,
    edges: Vec<(usize, usize)>,
}

impl Graph {
    /// Builds a graph on `n` vertices. Duplicate edges (in either direction)
    /// collapse to one; self-loops and out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        if n == 0 {
            return Err(Error::Domain("graph must have at least one vertex".into()));
        }
        let mut adj = vec![FixedBitSet::with_capacity(n); n];
        for (u, v) in edges {
            if u == v {
                return Err(Error::Domain(format!("self-loop at vertex {u}")));
            }
            if u >= n || v >= n {
                return Err(Error::Domain(format!(
                    "edge ({u}, {v}) out of range for {n} vertices"
                )));
            }
            adj[u].insert(v);
            adj[v].insert(u);
        }
        let edges = (0..n)
            .flat_map(|u| adj[u].ones().filter(move |&v| v > u).map(move |v| (u, v)))
            .collect();
        let g = Graph { n, adj, edges };
        debug_assert!(g.check_invariants());
        Ok(g)
    }

    fn check_invariants(&self) -> bool {
        (0..self.n).all(|u| {
            !self.adj[u].contains(u) && self.adj[u].ones().all(|v| self.adj[v].contains(u))
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    /// Canonical edge list: `u < v`, lexicographically sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_edgeless(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    pub fn row(&self, v: usize) -> &FixedBitSet {
        &self.adj[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].ones()
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones(..)
    }

    /// Position of the edge `{u, v}` in the canonical edge list.
    pub fn edge_index(&self, u: usize, v: usize) -> Option<usize> {
        let key = if u < v { (u, v) } else { (v, u) };
        self.edges.binary_search(&key).ok()
    }

    /// The graph obtained by sending vertex `v` to `perm[v]`.
    pub fn relabel(&self, perm: &[usize]) -> Result<Graph> {
        let mut seen = vec![false; self.n];
        if perm.len() != self.n
            || perm
                .iter()
                .any(|&p| p >= self.n || std::mem::replace(&mut seen[p], true))
        {
            return Err(Error::Domain(
                "relabeling is not a permutation of the vertices".into(),
            ));
        }
        Graph::from_edges(self.n, self.edges.iter().map(|&(u, v)| (perm[u], perm[v])))
    }
}

/// `K_n`.
pub fn complete_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::Domain("complete graph needs n >= 1".into()));
    }
    Graph::from_edges(n, (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))))
}

/// `C_n`, n >= 3.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::Domain("cycle needs n >= 3".into()));
    }
    Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
}

/// Path on `n` vertices.
pub fn path_graph(n: usize) -> Result<Graph> {
    Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))
}

/// Wheel on `n` vertices: hub `0` joined to a rim cycle on `1..n`.
pub fn wheel_graph(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::Domain("wheel needs n >= 4".into()));
    }
    let rim = n - 1;
    Graph::from_edges(
        n,
        (1..n)
            .map(|i| (0, i))
            .chain((0..rim).map(|i| (1 + i, 1 + (i + 1) % rim))),
    )
}

pub fn petersen_graph() -> Graph {
    let outer = (0..5).map(|i| (i, (i + 1) % 5));
    let spokes = (0..5).map(|i| (i, i + 5));
    let inner = (0..5).map(|i| (5 + i, 5 + (i + 2) % 5));
    Graph::from_edges(10, outer.chain(spokes).chain(inner)).expect("static edge list")
}

/// One direction per canonical edge; `dir[e]` means edge `(u, v)`, `u < v`,
/// is oriented `u -> v`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Orientation {
    n: usize,
    dir: Vec<bool>,
}

impl Orientation {
    pub fn new(g: &Graph, dir: Vec<bool>) -> Result<Self> {
        if dir.len() != g.m() {
            return Err(Error::Domain(format!(
                "orientation has {} directions, graph has {} edges",
                dir.len(),
                g.m()
            )));
        }
        Ok(Orientation { n: g.n(), dir })
    }

    /// Orientation whose bit `e` of `code` gives the direction of edge `e`.
    pub fn from_code(g: &Graph, code: u64) -> Self {
        Orientation {
            n: g.n(),
            dir: (0..g.m()).map(|e| code >> e & 1 == 1).collect(),
        }
    }

    /// Orients every edge from the earlier vertex of `order` to the later one.
    pub fn from_order(g: &Graph, order: &[usize]) -> Result<Self> {
        if order.len() != g.n() {
            return Err(Error::Domain("order must list every vertex once".into()));
        }
        let mut pos = vec![usize::MAX; g.n()];
        for (i, &v) in order.iter().enumerate() {
            if v >= g.n() || pos[v] != usize::MAX {
                return Err(Error::Domain("order must list every vertex once".into()));
            }
            pos[v] = i;
        }
        Ok(Orientation {
            n: g.n(),
            dir: g.edges().iter().map(|&(u, v)| pos[u] < pos[v]).collect(),
        })
    }

    pub fn dirs(&self) -> &[bool] {
        &self.dir
    }

    pub fn matches(&self, g: &Graph) -> bool {
        self.n == g.n() && self.dir.len() == g.m()
    }

    /// Whether the edge `{u, v}` points from `u` to `v`. `None` if not an edge.
    pub fn points(&self, g: &Graph, u: usize, v: usize) -> Option<bool> {
        let e = g.edge_index(u, v)?;
        Some(self.dir[e] == (u < v))
    }

    /// Out-neighbourhood bit-row of every vertex.
    pub fn out_rows(&self, g: &Graph) -> Vec<FixedBitSet> {
        let mut rows = vec![FixedBitSet::with_capacity(g.n()); g.n()];
        for (&(u, v), &fwd) in g.edges().iter().zip(&self.dir) {
            if fwd {
                rows[u].insert(v);
            } else {
                rows[v].insert(u);
            }
        }
        rows
    }
}
