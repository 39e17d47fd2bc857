//! Classification of Gorenstein-projective modules over finite-dimensional
//! monomial path algebras.
//!
//! The pipeline: build a [`quiver::Quiver`], present an algebra by a set of
//! forbidden paths ([`algebra::MonomialAlgebra`]), then classify via
//! [`classify::perfect_paths`]. Quadratic and Nakayama algebras get faster
//! specialized treatments in [`quadratic`] and [`nakayama`], and
//! [`oracle`] recomputes everything with plain linear algebra over exact
//! rationals for cross-checking.

pub mod algebra;
pub mod classify;
pub mod error;
pub mod format;
pub mod fuzz;
pub mod linalg;
pub mod nakayama;
pub mod oracle;
pub mod presets;
pub mod quadratic;
pub mod quiver;

pub use error::{Error, Result};
