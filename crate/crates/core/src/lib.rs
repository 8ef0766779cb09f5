//! Integral (co)homology of compact simply connected cohomogeneity one
//! manifolds of dimension at most seven.
//!
//! Layers, bottom up: [`intlin`] (exact lattice arithmetic), [`abgroup`]
//! (groups and graded profiles), [`torus`] (circle and finite subgroups of
//! `T²`), [`families`] (per-family calculators), [`catalog`] (stated and
//! product profiles), [`oracle`] (independent recomputation) and
//! [`classify`] (exceptional-set shapes of seven-manifolds).

pub mod abgroup;
pub mod catalog;
pub mod classify;
pub mod error;
pub mod families;
pub mod intlin;
pub mod oracle;
pub mod sweep;
pub mod torus;

pub use abgroup::{ExtensionDatum, FgAbelian, GradedGroups, Kind};
pub use classify::{classify_theorem_type, Classification, Shape};
pub use error::{Error, Result};
pub use families::{Family, FamilyDiagram, FamilyResult, Invariants, Options};
pub use intlin::{BezoutCert, Int, IntMatrix, SmithDecomposition};
pub use torus::{CircleWithFinite, HatCoeffs, RhoData};
