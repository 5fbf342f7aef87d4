//! Slow, literal reference computations used to check the fast paths on small
//! inputs. Nothing here shares code with the routines it checks beyond the
//! graph type itself.

use std::time::{Duration, Instant};

use fixedbitset::FixedBitSet;

use crate::error::{Error, Result};
use crate::families::SetFamily;
use crate::graph::Graph;

/// Hard ceiling on `max_edges`: the oracle materialises all `2^m` orientations.
pub const MAX_ORACLE_EDGES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_edges: usize,
    pub max_k: usize,
    pub timeout: Duration,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_edges: 8,
            max_k: 3,
            timeout: Duration::from_secs(300),
        }
    }
}

/// Outcome of [`brute_sigma`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BruteSigma {
    Exact(usize),
    /// No cover with at most `max_k` orientations.
    AboveMaxK(usize),
}

/// Families over `[k]` that are intersecting and have no intersecting proper
/// superfamily, by filtering all `2^(2^k)` candidates. Sorted by member vector.
pub fn brute_mifs(k: u8) -> Result<Vec<SetFamily>> {
    if k == 0 || k > 4 {
        return Err(Error::Capacity(format!(
            "brute_mifs supports 1 <= k <= 4, got {k}"
        )));
    }
    let sets = 1u32 << k;
    let intersecting = |fam: u32| {
        (0..sets).all(|s| fam >> s & 1 == 0 || (0..sets).all(|t| fam >> t & 1 == 0 || s & t != 0))
    };
    let mut out = Vec::new();
    for fam in 0..(1u64 << sets) {
        let fam = fam as u32;
        if !intersecting(fam) {
            continue;
        }
        // Any intersecting superfamily contains an intersecting one-set extension.
        let maximal = (0..sets)
            .filter(|&s| fam >> s & 1 == 0)
            .all(|s| !intersecting(fam | 1 << s));
        if maximal {
            out.push(SetFamily::from_member_bits(k, u128::from(fam))?);
        }
    }
    Ok(out)
}

/// Least `t` admitting a proper colouring, by trying every assignment.
pub fn brute_chromatic(g: &Graph) -> Result<usize> {
    let n = g.n();
    if n > 8 {
        return Err(Error::Capacity(format!(
            "brute_chromatic supports n <= 8, got {n}"
        )));
    }
    for t in 1..=n {
        let total = t.pow(n as u32);
        for code in 0..total {
            let color = |v: usize| code / t.pow(v as u32) % t;
            if g.edges().iter().all(|&(u, v)| color(u) != color(v)) {
                return Ok(t);
            }
        }
    }
    Ok(n)
}

/// σ(g) straight from the definition: for k = 1, 2, ... try every multiset
/// of k orientations (indices non-decreasing) until one covers every triple
/// `(x, y, z)` with `xy, xz ∈ E`.
pub fn brute_sigma(g: &Graph, budget: &SearchBudget) -> Result<BruteSigma> {
    if g.is_edgeless() {
        return Err(Error::Domain("σ defined for non-empty graphs".into()));
    }
    let m = g.m();
    if m > budget.max_edges || m > MAX_ORACLE_EDGES {
        return Err(Error::Budget(format!(
            "graph has {m} edges, oracle budget allows {}",
            budget.max_edges.min(MAX_ORACLE_EDGES)
        )));
    }

    // Directed edge x -> y has id 2e when x < y and 2e + 1 otherwise.
    let arc = |x: usize, y: usize| {
        let e = g
            .edges()
            .iter()
            .position(|&p| p == (x.min(y), x.max(y)))
            .unwrap();
        2 * e + usize::from(x > y)
    };
    let mut triples: Vec<(usize, usize)> = Vec::new();
    for x in 0..g.n() {
        for y in g.neighbors(x) {
            for z in g.neighbors(x) {
                triples.push((arc(x, y), arc(x, z)));
            }
        }
    }

    // covered[o]: triples satisfied by orientation o alone.
    let covered: Vec<FixedBitSet> = (0..1u64 << m)
        .map(|o| {
            let has = |a: usize| (o >> (a / 2) & 1 == 1) == a.is_multiple_of(2);
            let mut bits = FixedBitSet::with_capacity(triples.len());
            for (i, &(a, b)) in triples.iter().enumerate() {
                if has(a) && has(b) {
                    bits.insert(i);
                }
            }
            bits
        })
        .collect();

    let mut search = MultisetSearch {
        covered: &covered,
        full: triples.len(),
        started: Instant::now(),
        timeout: budget.timeout,
        ticks: 0,
    };
    for k in 1..=budget.max_k {
        let acc = FixedBitSet::with_capacity(triples.len());
        if search.find(k, 0, &acc)? {
            return Ok(BruteSigma::Exact(k));
        }
    }
    Ok(BruteSigma::AboveMaxK(budget.max_k))
}

struct MultisetSearch<'a> {
    covered: &'a [FixedBitSet],
    full: usize,
    started: Instant,
    timeout: Duration,
    ticks: u64,
}

impl MultisetSearch<'_> {
    fn find(&mut self, remaining: usize, start: usize, acc: &FixedBitSet) -> Result<bool> {
        if remaining == 0 {
            return Ok(acc.count_ones(..) == self.full);
        }
        for o in start..self.covered.len() {
            self.ticks += 1;
            if self.ticks.is_multiple_of(4096) && self.started.elapsed() > self.timeout {
                return Err(Error::Budget(format!("timed out after {:?}", self.timeout)));
            }
            let mut next = acc.clone();
            next.union_with(&self.covered[o]);
            if self.find(remaining - 1, o, &next)? {
                return Ok(true);
            }
        }
        Ok(false)
    }
}
