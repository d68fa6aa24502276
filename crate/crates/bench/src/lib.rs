//! Criterion benchmarks for arrangement construction and verification.
//! Run with `cargo bench -p sbl-bench`.
