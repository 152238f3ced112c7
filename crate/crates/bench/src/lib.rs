//! Benchmark targets live in `benches/`.
