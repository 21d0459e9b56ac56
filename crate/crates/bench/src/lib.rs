//! Benchmark-only crate; see `benches/exact_ops.rs`.
