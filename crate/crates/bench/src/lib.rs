//! Criterion benchmarks for the split-graph solvers. Run with `cargo bench -p split-hc-bench`.
