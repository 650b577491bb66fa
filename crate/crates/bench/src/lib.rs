//! Criterion benchmarks for `wsa-core`; the benchmarks live in `benches/`.
