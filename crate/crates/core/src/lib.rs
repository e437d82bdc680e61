//! Finite-dimensional nonassociative algebras over exchangeable coefficient
//! fields: structure constants, the quadratic operator `Vx = x²`, its
//! eigenvectors, idempotents and absolute nilpotents.
//!
//! * [`fields`]: exact and approximate coefficient fields.
//! * [`algebra`]: structure tensors, canonical elements, the odd-degree
//!   quotient construction and spectrum classification.
//! * [`solver`]: the homogeneous eigenvector system and its exhaustive,
//!   exact and numerical solvers, plus solution counting over extensions.

pub mod fields;
pub mod algebra;
pub mod error;
pub mod solver;

pub use error::{Error, Result};
