//! Criterion benchmarks for `monodromy-core`; see `benches/monodromy.rs`.
