//! Exact analysis of reduced plane curves and curve arrangements.
//!
//! The library decides freeness, nearly-freeness and the full m-syzygy
//! structure of a reduced curve `C : f = 0` in the projective plane from its
//! defining polynomial, computes local singularity invariants (Milnor and
//! Tjurina numbers), extracts the weak-combinatorics of arrangements of smooth
//! components, and detects Ziegler and weak Ziegler pairs. All arithmetic is
//! exact, over the rationals or a simple extension Q(a) of degree at most 4.
//!
//! Module map:
//! - [`numfield`]: rationals and number fields Q(a), degree <= 4.
//! - [`polyring`]: sparse trivariate homogeneous polynomials, parser, charts.
//! - [`exactla`]: exact dense linear algebra (rank, kernel, rref).
//! - [`localsing`]: local Milnor/Tjurina numbers and singularity labels.
//! - [`syzygy`]: the module of Jacobian relations AR(f), minimal generator and
//!   relation degrees, freeness criteria, classification.
//! - [`arrangements`]: arrangements of smooth components, singular loci,
//!   weak-combinatorics, Levi graphs, Ziegler pair detectors.
//! - [`catalog`]: constructors for the named example arrangements.

pub mod arrangements;
pub mod catalog;
pub mod exactla;
pub mod localsing;
pub mod numfield;
pub mod polyring;
pub mod syzygy;

pub(crate) mod unipoly;

pub use numfield::{Field, FieldElement, NumberField, Rational};

