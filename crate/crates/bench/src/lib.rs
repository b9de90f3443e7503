//! Criterion benchmarks for `lzend`; see `benches/`.
