//! Criterion benchmarks for `weberchain`; see `benches/`.
