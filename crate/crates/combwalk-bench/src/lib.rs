//! Benchmark-only crate; see the `benches` target.
