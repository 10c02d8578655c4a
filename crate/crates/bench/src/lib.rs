//! Criterion benchmarks for the `peiffer` constructions live in `benches/`.
