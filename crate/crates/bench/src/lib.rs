//! Criterion benchmarks for the division searches; see `benches/`.
