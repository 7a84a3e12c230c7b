//! Projective geometry over involutive real algebras.
//!
//! The crate works with free modules 𝔽ⁿ over ℝ, ℂ, the dual numbers 𝔻, the
//! split-complex numbers ℂₛ, the (split-)quaternions, ℂ×ℂ and the transition
//! family `K_t ⊂ ℍₛ`, equipped with diagonal Hermitian forms. On top of that
//! it provides projective points, tangent vectors, the Levi-Civita
//! connection, geodesics and curvature, the correspondences between
//! projective lines and spaces of oriented geodesics of S², E² and H², and
//! the projective model of the bidisc.
//!
//! Everything is `no_std` (with `alloc`); IO lives in the companion CLI crate.
#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod algebra;
pub mod bidisc;
pub mod connection;
mod error;
mod float;
pub mod geodesic_spaces;
pub mod hermitian;
pub mod linalg;
pub mod projective;

pub use algebra::{kt_embed, sigma, AlgebraId, Scalar};
pub use error::{Error, Result};
pub use hermitian::{HermitianSpace, ModuleVector};
pub use projective::{MetricConvention, ProjPoint, Regularity, Signature, Tangent};

/// Default tolerance for regularity, equality and classification checks.
pub const DEFAULT_TOL: f64 = 1e-9;
