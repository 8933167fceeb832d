//! Rationality and cylindricity of forms of blow-ups of `P(1,1,m)`.
//!
//! `S_m^n` is the blow-up of the weighted projective plane `P(1,1,m)` at `n`
//! general points. Its minimal resolution `Y` carries a unique `(-m)`-curve `Q`.
//! This crate provides:
//!
//! * [`lattice`]: the Picard lattice of `Y` in Hirzebruch or plane coordinates;
//! * [`curves`]: closed-form and certified search enumeration of `(-1)`-classes;
//! * [`orbifold`]: anti-plurigenera via orbifold Riemann-Roch and the weighted embeddings;
//! * [`galois`]: Galois actions on curve systems and the invariant `ell_S`;
//! * [`verdict`]: the rationality/cylindricity decision table;
//! * [`poly`] and [`sections`]: exact polynomial tools and hyperplane-section analysis.

pub mod curves;
pub mod error;
pub mod galois;
pub mod lattice;
pub mod orbifold;
pub mod poly;
pub mod rational;
pub mod sections;
pub mod verdict;

pub use error::{Error, Result};
pub use lattice::{BasisTag, DivisorClass, ModelKind, SurfaceModel};
pub use rational::RationalNumber;
pub use verdict::TriState;
