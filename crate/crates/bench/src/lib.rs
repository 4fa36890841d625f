//! Benchmark-only crate; see `benches/exact_kernels.rs`.
//!
//! The hot paths of the workspace are exact: fraction-free elimination over
//! polynomial entries, per-degree coefficient systems, and big-rational row
//! reduction. The benches track them on fixed catalog inputs.
