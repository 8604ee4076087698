//! Exact Gale transforms of vector configurations and certified decisions of
//! starshapedness for realizations of simplicial complexes.
//!
//! Everything in this crate is computed over arbitrary-precision rationals.
//! Every boolean predicate returns a [`Check`], which carries a witness when
//! the property fails, so callers can always produce a certificate.
//!
//! Layout:
//! - [`arith`]: rationals, matrices, determinants, kernels, exact simplex.
//! - [`complexes`]: simplicial complexes, fundamental sets, substitute
//!   existence (uniqueness), replacement graphs, pseudomanifolds.
//! - [`gale`]: linear Gale transforms and the independence/spanning duality.
//! - [`geometry`]: realizations, cone separation, weak and full
//!   starshapedness, kernels, ray casting, rationalization.
//! - [`bosio`]: studiable systems, imbrication conditions, and cross-checks
//!   between the primal (realization) and dual (Gale) sides.

pub mod arith;
pub mod bosio;
pub mod complexes;
pub mod fixtures;
pub mod gale;
pub mod geometry;

mod check;
mod error;

pub use check::Check;
pub use error::{Error, Result};

pub use arith::{Rational, RationalMatrix};
pub use complexes::{FundamentalSet, SimplicialComplex, VertexSet};
pub use gale::{GaleTransform, VectorConfiguration};
pub use geometry::Realization;
pub use bosio::StudiableSystem;
