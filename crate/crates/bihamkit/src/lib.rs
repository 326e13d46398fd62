//! Exact-arithmetic analysis of pencils of skew-symmetric bilinear forms
//! and of polynomial bivector pairs.
//!
//! The crate is organized bottom-up:
//!
//! * [`scalar`], [`poly`], [`matrix`], [`subspace`]: exact rationals,
//!   sparse multivariate polynomials, dense rational matrices, canonical
//!   subspace arithmetic.
//! * [`pencil`]: rank structure, minimal indices and block decomposition
//!   of a pencil of skew forms, with a certified normalizing basis.
//! * [`forms`]: polynomial multivectors and differential forms; Schouten
//!   bracket, compatibility checks, Frobenius integrability.
//! * [`web`]: the canonical filtration attached to a complete pencil, its
//!   graded curves and the induced infinitesimal web data.
//! * [`lie`]: structure constants, the shifted pair construction on a Lie
//!   algebra, trace Casimirs of sl(n), Taylor tables and the associated
//!   web generators.
//! * [`fixtures`]: small built-in structures used as ground truth by the
//!   test suite and the `examples verify` command.
//! * [`json`]: serde document types for the CLI interchange formats.
//!
//! All computation is exact; there is no floating point in the crate.

pub mod fixtures;
pub mod forms;
pub mod json;
pub mod lie;
pub mod matrix;
pub mod pencil;
pub mod poly;
pub mod scalar;
pub mod subspace;
pub mod web;

pub use forms::{PolyBivector, PolyForm};
pub use matrix::Mat;
pub use pencil::{Lambda, PencilAnalysis, SkewPencil};
pub use poly::MultiPoly;
pub use scalar::Scalar;
pub use subspace::Subspace;
