//! The eigenvector system `g_j(x, λ) = Σ α_{ik,j} ξ_i ξ_k − λ ξ_j` in the
//! projective space of `(ξ₁ : … : ξ_n : λ)` and the engines that solve it.
//!
//! * [`solve_exhaustive`]: every point of `P^n(𝔽_q)`; the reference engine.
//! * [`count_solutions_extension`] and [`genericity_probe`]: distinct
//!   solutions over `𝔽_{p^k}` and a finiteness heuristic built on them.
//! * [`solve_exact_dim2`]: rational eigen-directions of a 2-dimensional
//!   algebra through the binary cubic `(Vx)₁ξ₂ − (Vx)₂ξ₁`.
//! * [`solve_real`]: multistart damped Newton on the unit sphere.

mod counting;
mod enumerate;
mod exact2;
mod exhaustive;
mod real;
mod report;
mod system;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::fields::Field;

pub use counting::{
    count_solutions, count_solutions_extension, genericity_probe, solve_by_elimination,
    CountingReport, Verdict,
};
pub use enumerate::{projective_point_count, ProjectivePoints};
pub use exact2::{binary_cubic, solve_exact_dim2, Exact2Solutions};
pub use exhaustive::solve_exhaustive;
pub use real::{find_real_eigenpairs, find_real_nilpotent, solve_real, RealEigenpair};
pub use report::{Engine, SolutionEntry, SolutionReport};
pub use system::{Perturbation, QuadraticSystem};

/// Knobs shared by the engines.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolveConfig {
    /// Residual tolerance `‖Vx − λx‖` for the real engine.
    pub tolerance: f64,
    pub max_restarts: usize,
    pub max_newton_iterations: usize,
    /// Largest extension degree used by the genericity probe.
    pub k_max: usize,
    pub seed: u64,
    /// Maximum number of points any enumeration may visit.
    pub budget: u64,
}

impl Default for SolveConfig {
    fn default() -> Self {
        SolveConfig {
            tolerance: 1e-9,
            max_restarts: 200,
            max_newton_iterations: 100,
            k_max: 4,
            seed: 0,
            budget: 10_000_000,
        }
    }
}

impl SolveConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0)
            || self.max_restarts == 0
            || self.max_newton_iterations == 0
            || self.k_max == 0
            || self.budget == 0
        {
            return Err(Error::Format(format!("solver settings must be positive: {self:?}")));
        }
        Ok(())
    }
}

/// A point `(ξ₁ : … : ξ_n : λ)` solving the system.
///
/// Exact points have their leftmost nonzero coordinate equal to 1; real
/// points are scaled so the largest coordinate is +1.
#[derive(Clone, Debug, PartialEq)]
pub struct ProjectiveSolution<F: Field> {
    coords: Vec<F::Elem>,
    normalized: bool,
    residual: f64,
    trivial: bool,
}

impl<F: Field> ProjectiveSolution<F> {
    /// Normalizes an exact point; `None` for the zero vector.
    pub fn exact(field: &F, coords: Vec<F::Elem>) -> Option<Self> {
        let lead = coords.iter().find(|c| !field.is_zero(c))?;
        let inv = field.inv(lead).ok()?;
        let coords: Vec<F::Elem> = coords.iter().map(|c| field.mul(c, &inv)).collect();
        Some(Self::from_normalized(field, coords, 0.0))
    }

    pub(crate) fn from_normalized(field: &F, coords: Vec<F::Elem>, residual: f64) -> Self {
        let n = coords.len() - 1;
        let trivial = coords[..n].iter().all(|c| field.is_zero(c));
        ProjectiveSolution {
            coords,
            normalized: true,
            residual,
            trivial,
        }
    }

    /// All `n + 1` coordinates, `λ` last.
    pub fn coords(&self) -> &[F::Elem] {
        &self.coords
    }

    pub fn x(&self) -> &[F::Elem] {
        &self.coords[..self.coords.len() - 1]
    }

    pub fn lambda(&self) -> &F::Elem {
        self.coords.last().expect("n + 1 coordinates")
    }

    pub fn is_normalized(&self) -> bool {
        self.normalized
    }

    pub fn residual(&self) -> f64 {
        self.residual
    }

    pub fn is_trivial(&self) -> bool {
        self.trivial
    }
}
