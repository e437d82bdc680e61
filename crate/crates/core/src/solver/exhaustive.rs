use crate::error::{Error, Result};
use crate::fields::Field;

use super::enumerate::{projective_point_count, ProjectivePoints};
use super::{ProjectiveSolution, QuadraticSystem, SolveConfig};

pub(crate) fn finite_elements<F: Field>(field: &F) -> Result<Vec<F::Elem>> {
    field
        .elements()
        .ok_or_else(|| Error::unsupported(field.descriptor()))
}

pub(crate) fn check_budget(q: u64, m: usize, budget: u64) -> Result<()> {
    let needed = projective_point_count(q, m);
    if needed > budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    Ok(())
}

/// Every point of `P^n(𝔽_q)` at which all forms vanish, trivial point
/// included, in enumeration order.
pub fn solve_exhaustive<F: Field>(
    system: &QuadraticSystem<F>,
    cfg: &SolveConfig,
) -> Result<Vec<ProjectiveSolution<F>>> {
    let field = system.field();
    let elems = finite_elements(field)?;
    let n = system.n();
    check_budget(elems.len() as u64, n, cfg.budget)?;
    Ok(ProjectivePoints::new(&elems, n + 1)
        .filter(|point| system.is_solution(point))
        .map(|point| ProjectiveSolution::from_normalized(field, point, 0.0))
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{counterexample_algebra, examples};
    use crate::fields::{Polynomial, PrimeField, Rationals};

    fn solve<F: Field>(a: &crate::algebra::StructureTensor<F>) -> Vec<ProjectiveSolution<F>> {
        solve_exhaustive(&QuadraticSystem::build(a), &SolveConfig::default()).unwrap()
    }

    #[test]
    fn f3_quotient_has_only_the_trivial_point() {
        let f3 = PrimeField::new(3).unwrap();
        let a = counterexample_algebra(&f3, &Polynomial::from_i64s(&f3, &[-1, -1, 0, 1])).unwrap();
        let sols = solve(&a);
        assert_eq!(sols.len(), 1);
        assert!(sols[0].is_trivial());
        assert_eq!(sols[0].coords(), &[0, 0, 1]);
    }

    #[test]
    fn zero_algebra_has_a_line_of_solutions() {
        let f3 = PrimeField::new(3).unwrap();
        let sols = solve(&examples::zero_algebra(&f3, 2).unwrap());
        assert_eq!(sols.len(), 5);
        assert_eq!(sols.iter().filter(|s| s.is_trivial()).count(), 1);
        assert!(sols.iter().filter(|s| !s.is_trivial()).all(|s| *s.lambda() == 0));
    }

    #[test]
    fn one_dimensional_field() {
        let f5 = PrimeField::new(5).unwrap();
        let sols = solve(&examples::field_as_algebra(&f5).unwrap());
        let coords: Vec<_> = sols.iter().map(|s| s.coords().to_vec()).collect();
        assert_eq!(coords, vec![vec![1, 1], vec![0, 1]]);
    }

    #[test]
    fn budget_and_field_guards() {
        let f5 = PrimeField::new(5).unwrap();
        let sys = QuadraticSystem::build(&examples::zero_algebra(&f5, 3).unwrap());
        let cfg = SolveConfig { budget: 100, ..SolveConfig::default() };
        assert_eq!(
            solve_exhaustive(&sys, &cfg).unwrap_err(),
            Error::BudgetExceeded { needed: 156, budget: 100 }
        );
        let q = QuadraticSystem::build(&examples::zero_algebra(&Rationals, 2).unwrap());
        assert!(matches!(
            solve_exhaustive(&q, &SolveConfig::default()),
            Err(Error::UnsupportedField(_))
        ));
    }
}
