//! Exact-arithmetic toolkit for computational Lie theory at desk scale.
//!
//! Everything here is built on arbitrary-precision rational arithmetic: there
//! is no floating point anywhere, so every rank decision, kernel basis and
//! verdict is exact. The crate provides
//!
//! - multivariate polynomials over the rationals and graded linear algebra
//!   over polynomial rings ([`poly`], [`linalg`], [`polymat`]),
//! - finite-dimensional Lie algebras given by structure constants, their
//!   representations, semidirect doubles and symmetric pairs ([`lie`],
//!   [`catalog`]),
//! - the module homomorphisms on spaces of polynomial morphisms that govern
//!   adjoint vector fields, together with graded kernel computation and an
//!   exact decomposition solver with infeasibility certificates
//!   ([`covariants`]),
//! - invariant generators for the catalog algebras, independence tests and
//!   the "3-wonderful" certification ([`invariants`]),
//! - Fitting-condition checks, nilpotent orbit partition arithmetic and
//!   moment-map variety verifications ([`fitting`]),
//! - named check suites producing deterministic JSON reports ([`suites`],
//!   [`report`]).

pub mod catalog;
pub mod covariants;
pub mod error;
pub mod fitting;
pub mod invariants;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod poly;
pub mod polymat;
pub mod qnum;
pub mod report;
pub mod suites;

pub use error::Error;
pub use qnum::Q;

pub use covariants::{DecompositionResult, DixmierSolver, MapKind, PolyMap};
pub use fitting::{MomentData, Partition, StrataReport};
pub use invariants::{InvariantSet, WonderfulReport};
pub use lie::{LieAlgebra, Representation, StabilizerData, SymmetricPair};
pub use linalg::QMatrix;
pub use poly::Polynomial;
pub use report::{CheckRecord, CheckReport, Verdict};
pub use suites::{run_suite, SuiteConfig, SuiteKind};

/// Result alias used throughout the crate.
pub type Result<T> = std::result::Result<T, Error>;
