//! Orientation coverings: verification, the translation between coverings and
//! per-vertex set families, and construction of minimum coverings.
//!
//! Orientation `i` (1-based) of a cover corresponds to element `i` of the
//! ground set `[k]`. For a directed edge `(x, y)`, `S_(x,y)` is the set of
//! orientations that point `x -> y`.

use std::fmt;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::families::{catalog, Limits, Provenance, SetFamily, SubsetMask, K_MAX};
use crate::graph::{proper_coloring, Graph, Orientation};
use crate::sigma::sigma_of_graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CoverVerdict {
    Accept,
    /// No orientation directs both `x -> y` and `x -> z`.
    Counterexample {
        x: usize,
        y: usize,
        z: usize,
    },
}

impl CoverVerdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, CoverVerdict::Accept)
    }
}

impl fmt::Display for CoverVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoverVerdict::Accept => f.write_str("accept"),
            CoverVerdict::Counterexample { x, y, z } => {
                write!(f, "counterexample x={x} y={y} z={z}")
            }
        }
    }
}

fn check_shapes(g: &Graph, cover: &[Orientation]) -> Result<()> {
    match cover.iter().position(|o| !o.matches(g)) {
        Some(i) => Err(Error::Domain(format!(
            "orientation {} does not match the graph shape",
            i + 1
        ))),
        None => Ok(()),
    }
}

/// Checks every triple `(x, y, z)` with `xy, xz ∈ E`, `y = z` included.
/// Reports the lexicographically smallest failing triple.
pub fn verify_cover(g: &Graph, cover: &[Orientation]) -> Result<CoverVerdict> {
    check_shapes(g, cover)?;
    let outs: Vec<_> = cover.iter().map(|o| o.out_rows(g)).collect();
    for x in 0..g.n() {
        let nbrs = g.row(x);
        for y in nbrs.ones() {
            let mut reach = fixedbitset::FixedBitSet::with_capacity(g.n());
            for out in outs.iter().filter(|out| out[x].contains(y)) {
                reach.union_with(&out[x]);
            }
            if let Some(z) = nbrs.difference(&reach).next() {
                return Ok(CoverVerdict::Counterexample { x, y, z });
            }
        }
    }
    Ok(CoverVerdict::Accept)
}

/// `𝒜_v` for every vertex, over a common ground set `[k]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyAssignment {
    k: u8,
    per_vertex: Vec<SetFamily>,
}

impl FamilyAssignment {
    pub fn new(k: u8, per_vertex: Vec<SetFamily>) -> Result<Self> {
        if per_vertex.iter().any(|f| f.k() != k) {
            return Err(Error::Domain(format!("every family must be over [{k}]")));
        }
        Ok(FamilyAssignment { k, per_vertex })
    }

    pub fn k(&self) -> u8 {
        self.k
    }

    pub fn families(&self) -> &[SetFamily] {
        &self.per_vertex
    }

    pub fn family(&self, v: usize) -> &SetFamily {
        &self.per_vertex[v]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AssignmentVerdict {
    Accept,
    /// Edge `uv` has no `S ∈ 𝒜_u`, `T ∈ 𝒜_v` with `S ∩ T = ∅`.
    Condition1 {
        u: usize,
        v: usize,
    },
    /// `𝒜_v` holds two disjoint members (possibly `s = t = ∅`).
    Condition2 {
        v: usize,
        s: SubsetMask,
        t: SubsetMask,
    },
}

impl AssignmentVerdict {
    pub fn is_accept(&self) -> bool {
        matches!(self, AssignmentVerdict::Accept)
    }
}

impl fmt::Display for AssignmentVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AssignmentVerdict::Accept => f.write_str("accept"),
            AssignmentVerdict::Condition1 { u, v } => {
                write!(f, "condition 1 violated at edge ({u}, {v})")
            }
            AssignmentVerdict::Condition2 { v, s, t } => {
                write!(
                    f,
                    "condition 2 violated at vertex {v}: {s} and {t} are disjoint"
                )
            }
        }
    }
}

fn first_disjoint_pair(a: &SetFamily, b: &SetFamily) -> Option<(SubsetMask, SubsetMask)> {
    a.members()
        .find_map(|s| b.members().find(|t| s.is_disjoint(t)).map(|t| (s, t)))
}

/// Condition 1 over the canonical edges, then Condition 2 over the vertices.
pub fn validate_assignment(g: &Graph, fa: &FamilyAssignment) -> Result<AssignmentVerdict> {
    if fa.per_vertex.len() != g.n() {
        return Err(Error::Domain(format!(
            "assignment covers {} vertices, graph has {}",
            fa.per_vertex.len(),
            g.n()
        )));
    }
    for &(u, v) in g.edges() {
        if first_disjoint_pair(fa.family(u), fa.family(v)).is_none() {
            return Ok(AssignmentVerdict::Condition1 { u, v });
        }
    }
    for (v, f) in fa.per_vertex.iter().enumerate() {
        if let Some((s, t)) = first_disjoint_pair(f, f) {
            return Ok(AssignmentVerdict::Condition2 { v, s, t });
        }
    }
    Ok(AssignmentVerdict::Accept)
}

/// `S_(x,y)` for each directed edge, keyed in canonical edge order with
/// `(u, v)` before `(v, u)`.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct DirectionSets {
    sets: IndexMap<(usize, usize), SubsetMask>,
}

impl DirectionSets {
    pub fn get(&self, x: usize, y: usize) -> Option<SubsetMask> {
        self.sets.get(&(x, y)).copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = ((usize, usize), SubsetMask)> + '_ {
        self.sets.iter().map(|(&e, &s)| (e, s))
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }
}

fn ground_for(k: usize) -> Result<u8> {
    if k == 0 || k > K_MAX as usize {
        return Err(Error::Capacity(format!(
            "cover with {k} orientations: set families support 1..={K_MAX}"
        )));
    }
    Ok(k as u8)
}

/// `S_(x,y) = { i : orientation i points x -> y }` for every directed edge.
pub fn direction_sets_from_cover(g: &Graph, cover: &[Orientation]) -> Result<DirectionSets> {
    check_shapes(g, cover)?;
    let k = ground_for(cover.len())?;
    let mut sets = IndexMap::with_capacity(2 * g.m());
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let (mut fwd, mut bwd) = (0u8, 0u8);
        for (i, o) in cover.iter().enumerate() {
            if o.dirs()[e] {
                fwd |= 1 << i;
            } else {
                bwd |= 1 << i;
            }
        }
        sets.insert((u, v), SubsetMask::new(k, fwd)?);
        sets.insert((v, u), SubsetMask::new(k, bwd)?);
    }
    Ok(DirectionSets { sets })
}

/// `𝒜_v = { S_(v,w) : vw ∈ E }`.
pub fn families_from_cover(g: &Graph, cover: &[Orientation]) -> Result<FamilyAssignment> {
    let k = ground_for(cover.len())?;
    let dsets = direction_sets_from_cover(g, cover)?;
    let mut per_vertex = vec![SetFamily::empty(k)?; g.n()];
    for ((x, _), s) in dsets.iter() {
        per_vertex[x].insert(s);
    }
    FamilyAssignment::new(k, per_vertex)
}

/// Construction data attached to a certificate.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct CoverMeta {
    pub coloring: Option<Vec<usize>>,
    /// Catalog index of each vertex's family.
    pub family_indices: Option<Vec<usize>>,
    pub direction_sets: Option<DirectionSets>,
    pub provenance: Option<Provenance>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverCertificate {
    n: usize,
    edges: Vec<(usize, usize)>,
    orientations: Vec<Orientation>,
    pub meta: CoverMeta,
}

impl CoverCertificate {
    pub fn new(g: &Graph, orientations: Vec<Orientation>) -> Result<Self> {
        check_shapes(g, &orientations)?;
        Ok(CoverCertificate {
            n: g.n(),
            edges: g.edges().to_vec(),
            orientations,
            meta: CoverMeta::default(),
        })
    }

    pub fn k(&self) -> usize {
        self.orientations.len()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn orientations(&self) -> &[Orientation] {
        &self.orientations
    }

    /// Whether the certificate was written for exactly this graph.
    pub fn matches(&self, g: &Graph) -> bool {
        self.n == g.n() && self.edges == g.edges()
    }

    pub fn verify(&self, g: &Graph) -> Result<CoverVerdict> {
        if !self.matches(g) {
            return Err(Error::Domain(
                "certificate was issued for a different graph".into(),
            ));
        }
        verify_cover(g, &self.orientations)
    }
}

/// Builds `k` orientations from an assignment satisfying both conditions.
/// Edge `uv` takes the smallest `S_(u,v) ∈ 𝒜_u` that has a disjoint partner
/// in `𝒜_v`, and the smallest such partner as `S_(v,u)`; orientations in
/// neither set point from the lower endpoint to the higher.
pub fn cover_from_families(g: &Graph, fa: &FamilyAssignment) -> Result<CoverCertificate> {
    match validate_assignment(g, fa)? {
        AssignmentVerdict::Condition1 { u, v } => return Err(Error::NoDisjointPair { u, v }),
        AssignmentVerdict::Condition2 { v, .. } => {
            return Err(Error::Domain(format!(
                "condition 2 violated: family of vertex {v} is not intersecting"
            )))
        }
        AssignmentVerdict::Accept => {}
    }
    let k = fa.k();
    let mut sets = IndexMap::with_capacity(2 * g.m());
    let mut dirs = vec![Vec::with_capacity(g.m()); k as usize];
    for &(u, v) in g.edges() {
        let (s, t) = first_disjoint_pair(fa.family(u), fa.family(v))
            .ok_or(Error::NoDisjointPair { u, v })?;
        sets.insert((u, v), s);
        sets.insert((v, u), t);
        for (i, dir) in dirs.iter_mut().enumerate() {
            dir.push(!t.contains(i as u8 + 1));
        }
    }
    let orientations = dirs
        .into_iter()
        .map(|d| Orientation::new(g, d))
        .collect::<Result<Vec<_>>>()?;
    let mut cert = CoverCertificate::new(g, orientations)?;
    cert.meta.direction_sets = Some(DirectionSets { sets });
    Ok(cert)
}

/// A covering with σ(G) orientations: colour `G` with χ colours, give colour
/// class `c` the `c`-th maximal intersecting family over `[σ]`, and read the
/// orientations off that assignment.
pub fn construct_cover(g: &Graph, limits: &Limits) -> Result<CoverCertificate> {
    let sigma = sigma_of_graph(g, limits)?;
    limits.check_enumerable(sigma.value)?;
    let chi = sigma.chi as usize;
    let coloring = proper_coloring(g, chi).expect("χ colours suffice");
    let cat = catalog(sigma.value)?;
    let chosen = &cat.families()[..chi];
    let per_vertex = coloring.colors().iter().map(|&c| chosen[c]).collect();
    let fa = FamilyAssignment::new(sigma.value, per_vertex)?;
    let mut cert = cover_from_families(g, &fa)?;
    cert.meta.coloring = Some(coloring.colors().to_vec());
    cert.meta.family_indices = Some(coloring.colors().to_vec());
    cert.meta.provenance = Some(sigma.provenance);
    Ok(cert)
}

#[derive(Serialize, Deserialize)]
struct CertificateJson {
    n: usize,
    m: usize,
    k: usize,
    edges: Vec<[usize; 2]>,
    orientations: Vec<Vec<bool>>,
    #[serde(default)]
    meta: MetaJson,
}

#[derive(Serialize, Deserialize, Default)]
struct MetaJson {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    coloring: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    family_indices: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    direction_sets: Option<IndexMap<String, Vec<u8>>>,
}

impl CoverCertificate {
    /// Pretty JSON with a fixed field order.
    pub fn to_json(&self) -> String {
        let wire = CertificateJson {
            n: self.n,
            m: self.edges.len(),
            k: self.k(),
            edges: self.edges.iter().map(|&(u, v)| [u, v]).collect(),
            orientations: self
                .orientations
                .iter()
                .map(|o| o.dirs().to_vec())
                .collect(),
            meta: MetaJson {
                coloring: self.meta.coloring.clone(),
                family_indices: self.meta.family_indices.clone(),
                direction_sets: self.meta.direction_sets.as_ref().map(|d| {
                    d.iter()
                        .map(|((x, y), s)| (format!("{x}->{y}"), s.elements().collect()))
                        .collect()
                }),
            },
        };
        serde_json::to_string_pretty(&wire).expect("certificate serializes")
    }

    /// Parses a certificate and checks it is internally consistent. Whether
    /// it belongs to a given graph is checked by [`CoverCertificate::verify`].
    pub fn from_json(text: &str) -> Result<Self> {
        let bad = |msg: String| Error::Certificate(msg);
        let wire: CertificateJson = serde_json::from_str(text).map_err(|e| bad(e.to_string()))?;
        if wire.m != wire.edges.len() {
            return Err(bad(format!(
                "m = {} but {} edges listed",
                wire.m,
                wire.edges.len()
            )));
        }
        if wire.k != wire.orientations.len() {
            return Err(bad(format!(
                "k = {} but {} orientations listed",
                wire.k,
                wire.orientations.len()
            )));
        }
        let edges: Vec<(usize, usize)> = wire.edges.iter().map(|&[u, v]| (u, v)).collect();
        let g = Graph::from_edges(wire.n, edges.iter().copied())
            .map_err(|e| bad(format!("edge list: {e}")))?;
        if g.edges() != edges {
            return Err(bad("edges are not in canonical order".into()));
        }
        let orientations = wire
            .orientations
            .into_iter()
            .map(|d| Orientation::new(&g, d))
            .collect::<Result<Vec<_>>>()
            .map_err(|e| bad(e.to_string()))?;
        let mut cert = CoverCertificate::new(&g, orientations)?;
        cert.meta.coloring = wire.meta.coloring;
        cert.meta.family_indices = wire.meta.family_indices;
        if let Some(raw) = wire.meta.direction_sets {
            let k = ground_for(cert.k()).map_err(|e| bad(e.to_string()))?;
            let mut sets = IndexMap::with_capacity(raw.len());
            for (key, elems) in raw {
                let (x, y) = key
                    .split_once("->")
                    .and_then(|(x, y)| Some((x.trim().parse().ok()?, y.trim().parse().ok()?)))
                    .ok_or_else(|| bad(format!("bad direction-set key `{key}`")))?;
                let s = SubsetMask::from_elements(k, &elems).map_err(|e| bad(e.to_string()))?;
                sets.insert((x, y), s);
            }
            cert.meta.direction_sets = Some(DirectionSets { sets });
        }
        Ok(cert)
    }
}
