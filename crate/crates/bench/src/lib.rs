//! Criterion benchmarks for the scenario engine live in `benches/`.
