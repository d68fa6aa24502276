//! Exact-rational engine for stable base locus decompositions of the
//! effective cones of `K(G(k,n), d)` for `d = 2, 3`.
//!
//! The Neron-Severi space has rank three with basis `H11`, `H2`, `Delta`.
//! Divisor classes, test curves and base-locus facts live in a [`Catalog`];
//! the [`arrangement`] module cuts the effective-cone cross-section into
//! cells and [`inference`] labels every cell by sandwiching its stable base
//! locus between a moving-curve lower bound and a nonnegative-combination
//! upper bound.

pub mod arrangement;
pub mod catalog;
mod error;
pub mod inference;
pub mod lin;

pub use arrangement::{
    build_arrangement, Arrangement, ArrangementLine, Chamber, Face, LineOrigin, Location,
    Resolution, Sign,
};
pub use catalog::{
    canonical_class, dual_partition, Catalog, CatalogData, ContainmentFact, CurveEntry,
    DivisorEntry, DivisorFact, Exactness, ExpectedChamber, LocusEntry, LocusKind, LocusSet, Poset,
    Regime, SpaceId, Stated, WallSpec,
};
pub use error::{Error, Result};
pub use inference::{
    decompose, verify_theorem, Decomposition, FaceLabel, Placement, Status, VerificationReport,
};
pub use lin::{Cone, Membership, NSVector, Rational, SlicePoint};
