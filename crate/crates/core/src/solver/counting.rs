use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::fields::{ExtensionField, Field, PrimeField};

use super::enumerate::ProjectivePoints;
use super::exhaustive::{check_budget, finite_elements};
use super::{ProjectiveSolution, QuadraticSystem, SolveConfig};

/// Outcome of the finiteness heuristic.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    LikelyGeneric,
    LikelyPositiveDimensional,
}

/// Distinct solution counts over `𝔽_{p^k}` for `k = 1..=k_max`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CountingReport {
    pub p: u64,
    pub counts: BTreeMap<usize, u128>,
    pub verdict: Verdict,
}

impl CountingReport {
    /// `2^n`, the number of solutions of a generic system counted with
    /// multiplicity.
    pub fn bezout_bound(n: usize) -> u128 {
        1u128 << n
    }

    pub fn summary(&self) -> String {
        let counts: Vec<String> = self.counts.iter().map(|(k, c)| format!("k={k}: {c}")).collect();
        format!("p = {}; {}; {:?}", self.p, counts.join(", "), self.verdict)
    }
}

/// Solutions found by eliminating `λ`: for each normalized `x ∈ P^{n-1}`
/// the pivot equation fixes `λ`, and the remaining equations are checked.
/// The trivial point comes last.
pub fn solve_by_elimination<F: Field>(
    system: &QuadraticSystem<F>,
    cfg: &SolveConfig,
) -> Result<Vec<ProjectiveSolution<F>>> {
    let field = system.field();
    let elems = finite_elements(field)?;
    let n = system.n();
    check_budget(elems.len() as u64, n - 1, cfg.budget)?;
    let zero = field.zero();
    let mut out = Vec::new();
    for x in ProjectivePoints::new(&elems, n) {
        let q = system.eval(&x, &zero);
        let pivot = x.iter().position(|c| !field.is_zero(c)).expect("normalized point");
        // x[pivot] = 1
        let lambda = q[pivot].clone();
        let proportional = q
            .iter()
            .zip(&x)
            .all(|(qj, xj)| field.equals(qj, &field.mul(&lambda, xj)));
        if proportional {
            let mut point = x;
            point.push(lambda);
            out.push(ProjectiveSolution::from_normalized(field, point, 0.0));
        }
    }
    let mut trivial = vec![field.zero(); n];
    trivial.push(field.one());
    out.push(ProjectiveSolution::from_normalized(field, trivial, 0.0));
    Ok(out)
}

/// Number of distinct projective solutions over the finite field itself.
pub fn count_solutions<F: Field>(system: &QuadraticSystem<F>, cfg: &SolveConfig) -> Result<u128> {
    Ok(solve_by_elimination(system, cfg)?.len() as u128)
}

/// Number of distinct projective solutions over `𝔽_{p^k}`, with the
/// coefficients embedded from `𝔽_p`.
pub fn count_solutions_extension(
    system: &QuadraticSystem<PrimeField>,
    k: usize,
    cfg: &SolveConfig,
) -> Result<u128> {
    let p = system.field().p();
    if k == 1 {
        return count_solutions(system, cfg);
    }
    check_budget(p.saturating_pow(k as u32), system.n() - 1, cfg.budget)?;
    let ext = ExtensionField::galois(p, k)?;
    let lifted = system.map_field(&ext, |c| ext.embed(c))?;
    count_solutions(&lifted, cfg)
}

/// Counts over `𝔽_{p^k}`, `k ≤ cfg.k_max`; positive-dimensional is
/// suspected as soon as a count exceeds `2^n`.
pub fn genericity_probe(system: &QuadraticSystem<PrimeField>, cfg: &SolveConfig) -> Result<CountingReport> {
    let bound = CountingReport::bezout_bound(system.n());
    // the largest degree dominates; refuse before doing any work
    check_budget(system.field().p().saturating_pow(cfg.k_max as u32), system.n() - 1, cfg.budget)?;
    let mut counts = BTreeMap::new();
    for k in 1..=cfg.k_max {
        counts.insert(k, count_solutions_extension(system, k, cfg)?);
    }
    let verdict = if counts.values().any(|&c| c > bound) {
        Verdict::LikelyPositiveDimensional
    } else {
        Verdict::LikelyGeneric
    };
    Ok(CountingReport {
        p: system.field().p(),
        counts,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{counterexample_algebra, examples};
    use crate::fields::Polynomial;
    use crate::solver::solve_exhaustive;

    fn f(p: u64) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    fn probe(a: &crate::algebra::StructureTensor<PrimeField>, k_max: usize) -> CountingReport {
        let cfg = SolveConfig { k_max, ..SolveConfig::default() };
        genericity_probe(&QuadraticSystem::build(a), &cfg).unwrap()
    }

    #[test]
    fn zero_algebra_counts_grow() {
        let r = probe(&examples::zero_algebra(&f(3), 2).unwrap(), 3);
        assert_eq!(r.counts.values().copied().collect::<Vec<_>>(), vec![5, 11, 29]);
        assert_eq!(r.verdict, Verdict::LikelyPositiveDimensional);
    }

    #[test]
    fn one_dimensional_field_is_generic() {
        let r = probe(&examples::field_as_algebra(&f(5)).unwrap(), 4);
        assert!(r.counts.values().all(|&c| c == 2));
        assert_eq!(r.verdict, Verdict::LikelyGeneric);
    }

    #[test]
    fn diagonal_idempotents_reach_the_bound() {
        let r = probe(&examples::diagonal_idempotents(&f(5), 2).unwrap(), 4);
        assert!(r.counts.values().all(|&c| c == 4));
        assert_eq!(r.verdict, Verdict::LikelyGeneric);
        let json = serde_json::to_value(&r).unwrap();
        assert_eq!(
            json,
            serde_json::json!({"p":5,"counts":{"1":4,"2":4,"3":4,"4":4},"verdict":"LikelyGeneric"})
        );
        assert_eq!(serde_json::from_value::<CountingReport>(json).unwrap(), r);
    }

    #[test]
    fn f3_quotient_gains_points_in_extensions() {
        let a = counterexample_algebra(&f(3), &Polynomial::from_i64s(&f(3), &[-1, -1, 0, 1])).unwrap();
        let r = probe(&a, 3);
        assert_eq!(r.counts[&1], 1);
        assert!(r.counts.values().all(|&c| c <= 4));
    }

    #[test]
    fn elimination_matches_literal_enumeration() {
        let a = counterexample_algebra(&f(3), &Polynomial::from_i64s(&f(3), &[-1, -1, 0, 1])).unwrap();
        let ext = ExtensionField::galois(3, 2).unwrap();
        let lifted = QuadraticSystem::build(&a).map_field(&ext, |c| ext.embed(c)).unwrap();
        let cfg = SolveConfig::default();
        let mut fast: Vec<_> = solve_by_elimination(&lifted, &cfg).unwrap();
        let mut slow: Vec<_> = solve_exhaustive(&lifted, &cfg).unwrap();
        let key = |s: &ProjectiveSolution<ExtensionField<PrimeField>>| format!("{:?}", s.coords());
        fast.sort_by_key(key);
        slow.sort_by_key(key);
        assert_eq!(fast, slow);
    }
}
