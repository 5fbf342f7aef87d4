use super::Graph;
use crate::error::{Error, Result};

/// Exact colouring refuses graphs above this many vertices unless the clique
/// lower bound already meets the greedy upper bound.
pub const DEFAULT_CHI_VERTEX_BOUND: usize = 32;

/// A proper vertex colouring using exactly the colours `0..num_colors()`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<usize>,
    t: usize,
}

impl Coloring {
    pub fn new(g: &Graph, colors: Vec<usize>) -> Result<Self> {
        if colors.len() != g.n() {
            return Err(Error::Domain(
                "colouring length differs from vertex count".into(),
            ));
        }
        let t = colors.iter().max().map_or(0, |&c| c + 1);
        let mut used = vec![false; t];
        colors.iter().for_each(|&c| used[c] = true);
        if used.contains(&false) {
            return Err(Error::Domain("colouring skips a colour index".into()));
        }
        let c = Coloring { colors, t };
        if !c.is_proper(g) {
            return Err(Error::Domain("colouring is not proper".into()));
        }
        Ok(c)
    }

    pub fn colors(&self) -> &[usize] {
        &self.colors
    }

    pub fn color(&self, v: usize) -> usize {
        self.colors[v]
    }

    pub fn num_colors(&self) -> usize {
        self.t
    }

    pub fn is_proper(&self, g: &Graph) -> bool {
        g.edges()
            .iter()
            .all(|&(u, v)| self.colors[u] != self.colors[v])
    }
}

/// Exact chromatic number with the default vertex bound.
pub fn chromatic_number(g: &Graph) -> Result<usize> {
    chromatic_number_with(g, DEFAULT_CHI_VERTEX_BOUND)
}

pub fn chromatic_number_with(g: &Graph, max_vertices: usize) -> Result<usize> {
    let lower = greedy_clique(g);
    let mut best = Dsatur::new(g, g.n())
        .run()
        .expect("n colours always suffice");
    if best.t == lower {
        return Ok(lower);
    }
    if g.n() > max_vertices {
        return Err(Error::Capacity(format!(
            "exact chromatic number limited to {max_vertices} vertices (graph has {}, bounds {lower}..={})",
            g.n(),
            best.t
        )));
    }
    while best.t > lower {
        match Dsatur::new(g, best.t - 1).run() {
            Some(c) => best = c,
            None => break,
        }
    }
    Ok(best.t)
}

/// First proper colouring with at most `t` colours in DSATUR search order.
pub fn proper_coloring(g: &Graph, t: usize) -> Option<Coloring> {
    if t == 0 {
        return None;
    }
    Dsatur::new(g, t).run()
}

/// Largest clique found greedily from each start vertex, scanning the rest
/// by descending degree.
fn greedy_clique(g: &Graph) -> usize {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let mut best = 1;
    for &start in &order {
        let mut clique = vec![start];
        for &v in &order {
            if v != start && clique.iter().all(|&c| g.adjacent(c, v)) {
                clique.push(v);
            }
        }
        best = best.max(clique.len());
    }
    best
}

/// Backtracking DSATUR: pick the uncoloured vertex with most distinct
/// neighbour colours (ties: higher degree, then lower index), try existing
/// colours in order, then one fresh colour.
struct Dsatur<'g> {
    g: &'g Graph,
    limit: usize,
    colors: Vec<Option<usize>>,
    // nbr_count[v][c]: neighbours of v currently holding colour c
    nbr_count: Vec<Vec<u32>>,
    saturation: Vec<usize>,
}

impl<'g> Dsatur<'g> {
    fn new(g: &'g Graph, limit: usize) -> Self {
        let n = g.n();
        Dsatur {
            g,
            limit,
            colors: vec![None; n],
            nbr_count: vec![vec![0; limit.max(1)]; n],
            saturation: vec![0; n],
        }
    }

    fn run(mut self) -> Option<Coloring> {
        if self.search(0, 0) {
            let colors: Vec<usize> = self.colors.into_iter().map(|c| c.unwrap()).collect();
            let t = colors.iter().max().map_or(0, |&c| c + 1);
            Some(Coloring { colors, t })
        } else {
            None
        }
    }

    fn pick(&self) -> Option<usize> {
        (0..self.g.n())
            .filter(|&v| self.colors[v].is_none())
            .max_by_key(|&v| (self.saturation[v], self.g.degree(v), std::cmp::Reverse(v)))
    }

    fn assign(&mut self, v: usize, c: usize) {
        self.colors[v] = Some(c);
        for w in self.g.neighbors(v) {
            let cnt = &mut self.nbr_count[w][c];
            if *cnt == 0 {
                self.saturation[w] += 1;
            }
            *cnt += 1;
        }
    }

    fn unassign(&mut self, v: usize, c: usize) {
        self.colors[v] = None;
        for w in self.g.neighbors(v) {
            let cnt = &mut self.nbr_count[w][c];
            *cnt -= 1;
            if *cnt == 0 {
                self.saturation[w] -= 1;
            }
        }
    }

    fn search(&mut self, colored: usize, used: usize) -> bool {
        if colored == self.g.n() {
            return true;
        }
        let v = self.pick().expect("uncoloured vertex remains");
        let top = (used + 1).min(self.limit);
        for c in 0..top {
            if self.nbr_count[v][c] > 0 {
                continue;
            }
            self.assign(v, c);
            if self.search(colored + 1, used.max(c + 1)) {
                return true;
            }
            self.unassign(v, c);
        }
        false
    }
}
