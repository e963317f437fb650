//! Criterion benchmarks for `theta2`; see `benches/`. Run with `cargo bench -p theta2-bench`.
