//! σ(G) through the count of maximal intersecting families: σ(G) is the
//! least k with λ(k) ≥ χ(G). Logarithms here are base 2.

use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::families::{hosten_morris, Limits, Provenance};
use crate::graph::{chromatic_number, Graph};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SigmaResult {
    /// σ.
    pub value: u8,
    /// χ of the graph, or n for K_n.
    pub chi: u128,
    /// Least k with λ(k) ≥ chi; always equal to `value`.
    pub witness_k: u8,
    pub provenance: Provenance,
}

/// σ(K_n): the least k with λ(k) ≥ n.
pub fn sigma_complete(n: u128, limits: &Limits) -> Result<SigmaResult> {
    if n < 2 {
        return Err(Error::Domain(
            "σ is defined for non-empty graphs; K_n needs n >= 2".into(),
        ));
    }
    let mut largest = 0u128;
    for k in 1..=limits.lambda_ceiling() {
        let lambda = hosten_morris(k, limits)?;
        if lambda.value >= n {
            return Ok(SigmaResult {
                value: k,
                chi: n,
                witness_k: k,
                provenance: lambda.provenance,
            });
        }
        largest = lambda.value;
    }
    Err(Error::Capacity(format!(
        "n = {n} exceeds the largest supported n = {largest} (λ({}))",
        limits.lambda_ceiling()
    )))
}

/// σ(G) = σ(K_χ(G)).
pub fn sigma_of_graph(g: &Graph, limits: &Limits) -> Result<SigmaResult> {
    if g.is_edgeless() {
        return Err(Error::Domain("σ defined for non-empty graphs".into()));
    }
    let chi = chromatic_number(g)?;
    sigma_complete(chi as u128, limits)
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EstimateResult {
    pub raw: f64,
    pub rounded: i64,
}

/// `log log n + ½ log log log n + ½ (log π + 1)`, rounded up. Only
/// asymptotically exact: the vanishing correction term is dropped.
pub fn sigma_estimate(n: u128) -> Result<EstimateResult> {
    if n < 3 {
        return Err(Error::Domain("estimate needs n >= 3".into()));
    }
    let ll = (n as f64).log2().log2();
    let raw = ll + 0.5 * ll.log2() + 0.5 * (PI.log2() + 1.0);
    Ok(EstimateResult {
        raw,
        rounded: raw.ceil() as i64,
    })
}

/// `2^k / sqrt(2πk)`, the asymptotic size of log λ(k).
pub fn lambda_asymptote(k: u32) -> Result<f64> {
    if k == 0 {
        return Err(Error::Domain("asymptote needs k >= 1".into()));
    }
    Ok(2f64.powi(k as i32) / (2.0 * PI * k as f64).sqrt())
}
