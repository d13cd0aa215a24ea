//! Special functions of harmonic analysis on the quantum Lorentz group.
//!
//! This crate computes, at a fixed real deformation parameter `q` in `(0,1)`:
//!
//! - q-numbers, q-factorials, q-binomials and exact Laurent-polynomial
//!   arithmetic in `q^(1/2)` ([`qarith`], [`laurent`]);
//! - Clebsch-Gordan coefficients, R-matrices and 6j symbols of the compact
//!   quantum group, together with the identity suite they satisfy
//!   ([`recoupling`]);
//! - one-parameter complex continuations of 6j symbols with three or four
//!   continued entries ([`continuation`]);
//! - the reduced matrix elements (Lambda coefficients) of the principal and
//!   complementary series, by four independent routes, plus finite-dimensional
//!   characters and Casimir data ([`lorentz`]);
//! - an independent oracle for diagonal Lambda coefficients through the
//!   shifted cocycle `F(x)` ([`cocycle`]);
//! - Haar integrals on the quantum `AN(2)` group and their classical limit as
//!   Jackson-type sums ([`haar`]);
//! - the Plancherel density and a desk-scale verification of the Plancherel
//!   identity, with exact Fourier-mode integration in the spectral parameter
//!   ([`plancherel`]).
//!
//! Everything is a pure function of its inputs and a shared [`QContext`];
//! memo caches inside the context are concurrent-reader safe.

pub mod cmatrix;
pub mod cocycle;
pub mod continuation;
pub mod extended;
pub mod haar;
pub mod laurent;
pub mod lorentz;
pub mod plancherel;
pub mod qarith;
pub mod recoupling;

pub use laurent::LaurentPoly;
pub use qarith::{Half, Mode, QContext};

/// Complex scalar used throughout the float pipelines.
pub type C64 = num_complex::Complex64;
