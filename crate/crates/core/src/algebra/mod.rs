//! Algebras given by structure constants `α_{ik,j}`, so that
//! `(Σ ξ_i e_i)(Σ η_k e_k) = Σ_j (Σ_{i,k} α_{ik,j} ξ_i η_k) e_j`.

mod constructions;
pub mod examples;
pub mod io;
mod ops;
mod spectrum;
mod tensor;

pub use constructions::{
    circle_product, counterexample_algebra, extend_element, project_to_constants, quotient_by_line,
    restrict_element, restrict_scalars,
};
pub use ops::ElementStatus;
pub use spectrum::{
    classify_spectrum, eigenvalue_set, SigmaDescription, SpectrumReport, SpectrumSearch, Witnesses,
};
pub use tensor::{AlgebraElement, StructureTensor, DEFAULT_MAX_DIM};
