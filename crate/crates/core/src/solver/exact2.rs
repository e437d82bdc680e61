use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::StructureTensor;
use crate::error::{Error, Result};
use crate::fields::{rational_roots, Field, Polynomial, Rationals};

use super::{ProjectiveSolution, QuadraticSystem};

/// Rational eigen-directions of a 2-dimensional algebra.
#[derive(Clone, Debug, PartialEq)]
pub struct Exact2Solutions {
    /// Nontrivial solutions first, the trivial point last.
    pub solutions: Vec<ProjectiveSolution<Rationals>>,
    /// Coefficients of `a³, a²b, ab², b³` in `(Vx)₁b − (Vx)₂a`.
    pub cubic: [BigRational; 4],
    /// The cubic vanishes identically: every direction is an eigenvector.
    /// `solutions` then lists `(1:0)`, `(0:1)` and the kernel of the
    /// eigenvalue form `ℓ` (with `Vx = ℓ(x)x`) when that is a third direction.
    pub infinite_family: bool,
}

impl Exact2Solutions {
    pub fn nontrivial(&self) -> impl Iterator<Item = &ProjectiveSolution<Rationals>> {
        self.solutions.iter().filter(|s| !s.is_trivial())
    }

    pub fn has_nontrivial(&self) -> bool {
        self.nontrivial().next().is_some()
    }
}

/// The binary cubic `(Vx)₁b − (Vx)₂a` at `x = (a, b)`, as coefficients of
/// `a³, a²b, ab², b³`.
pub fn binary_cubic(a: &StructureTensor<Rationals>) -> Result<[BigRational; 4]> {
    if a.dim() != 2 {
        return Err(Error::DimensionMismatch { expected: 2, found: a.dim() });
    }
    let f = a.field();
    let sq = |j| a.get(0, 0, j).clone();
    let mixed = |j| f.add(a.get(0, 1, j), a.get(1, 0, j));
    let last = |j| a.get(1, 1, j).clone();
    Ok([
        -sq(1),
        sq(0) - mixed(1),
        mixed(0) - last(1),
        last(0),
    ])
}

/// Solves `Vx = λx` over ℚ in dimension 2 by finding the rational
/// projective roots of [`binary_cubic`].
pub fn solve_exact_dim2(a: &StructureTensor<Rationals>) -> Result<Exact2Solutions> {
    let cubic = binary_cubic(a)?;
    let f = &Rationals;
    let system = QuadraticSystem::build(a);
    let mut directions: Vec<[BigRational; 2]> = Vec::new();
    let infinite_family = cubic.iter().all(Zero::is_zero);
    let (zero, one) = (f.zero(), f.one());
    if infinite_family {
        directions.push([one.clone(), zero.clone()]);
        directions.push([zero.clone(), one.clone()]);
    } else {
        if cubic[0].is_zero() {
            directions.push([one.clone(), zero.clone()]);
        }
        // b = 1, u = a
        let in_u = Polynomial::new(
            f,
            vec![cubic[3].clone(), cubic[2].clone(), cubic[1].clone(), cubic[0].clone()],
        );
        if in_u.degree().unwrap_or(0) > 0 {
            let mut roots = rational_roots(&in_u)?;
            roots.sort();
            for u in roots.into_iter().rev() {
                directions.push([u, one.clone()]);
            }
        }
    }
    let mut solutions = Vec::new();
    for x in directions {
        let vx = system.eval(&x, &zero);
        let pivot = if x[0].is_zero() { 1 } else { 0 };
        let lambda = f.div(&vx[pivot], &x[pivot])?;
        let mut coords = x.to_vec();
        coords.push(lambda);
        solutions.extend(ProjectiveSolution::exact(f, coords));
    }
    if infinite_family {
        // every x is an eigenvector, so (Vx)₁b = (Vx)₂a as forms and the
        // eigenvalue is a linear form ℓ with Vx = ℓ(x)x; add its kernel
        let l0 = solutions[0].lambda().clone();
        let l1 = solutions[1].lambda().clone();
        if !l0.is_zero() && !l1.is_zero() {
            let coords = vec![l1.clone(), -l0.clone(), f.zero()];
            solutions.extend(ProjectiveSolution::exact(f, coords));
        }
    }
    let mut trivial = vec![zero.clone(), zero];
    trivial.push(one);
    solutions.push(ProjectiveSolution::from_normalized(f, trivial, 0.0));
    Ok(Exact2Solutions {
        solutions,
        cubic,
        infinite_family,
    })
}
