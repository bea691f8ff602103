//! Exact incidence geometry over local rings.
//!
//! The crate builds projective and affine planes over commutative rings with
//! decidable invertibility, checks the axioms of preprojective and preaffine
//! planes on finite models, and recovers a coordinate ring from a finite plane
//! by translations and dilatations.
//!
//! Modules, bottom-up:
//! - [`ring`]: ring contexts, values, tables and homomorphisms.
//! - [`linalg`]: vectors, determinants, adjugate inverses, the groups `G(R)` and `H(R)`.
//! - [`synthetic`]: finite planes given by relation tables, their file format and
//!   the search engine used by the axiom checkers.
//! - [`projective`]: the plane `ℙ(R)`, the relation `δ`, Desargues and Pappus.
//! - [`affine`]: the plane `𝔸(R)`, derived affine planes and the affine theorems.
//! - [`coordinatize`]: translations, dilatations, the trace-preserving ring and torsors.
//! - [`morphisms`]: plane morphisms, their decomposition and affine-to-projective extension.

// Relation tables are indexed in parallel by point and line number.
#![allow(clippy::needless_range_loop)]

pub mod affine;
pub mod coordinatize;
pub mod error;
pub mod linalg;
pub mod morphisms;
pub mod projective;
pub mod ring;
pub mod synthetic;

pub use error::GeoError;
