//! Orientation covering numbers.
//!
//! An orientation covering of a graph is a list of orientations such that for
//! every vertex `x` and edges `xy`, `xz` some orientation in the list points
//! both edges away from `x`. The least length of such a list is σ(G), and it
//! equals the least `k` for which there are at least χ(G) maximal intersecting
//! families over `[k]`.
//!
//! - [`graph`]: graphs, orientations, parsing, exact colouring.
//! - [`families`]: set families as bit vectors, and λ(k), the count of
//!   maximal intersecting families.
//! - [`sigma`]: σ(K_n), σ(G), and the closed-form estimate.
//! - [`cover`]: building, translating, and verifying coverings.
//! - [`oracle`]: brute-force references for testing.

pub mod cover;
pub mod error;
pub mod families;
pub mod graph;
pub mod oracle;
pub mod sigma;

pub use cover::{
    construct_cover, cover_from_families, families_from_cover, validate_assignment, verify_cover,
    AssignmentVerdict, CoverCertificate, CoverVerdict, FamilyAssignment,
};
pub use error::{Error, Result};
pub use families::{
    enumerate_mifs, find_disjoint_pair, hosten_morris, Lambda, Limits, MifCatalog, Provenance,
    SetFamily, SubsetMask,
};
pub use graph::{
    chromatic_number, complete_graph, parse_graph, proper_coloring, Coloring, Graph, GraphFormat,
    Orientation,
};
pub use sigma::{
    lambda_asymptote, sigma_complete, sigma_estimate, sigma_of_graph, EstimateResult, SigmaResult,
};
