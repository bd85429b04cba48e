//! Criterion benchmarks for `schubert-core`; run with `cargo bench -p schubert-bench`.
