//! Benchmarks for orcov live under `benches/`.
