use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_distr::StandardNormal;
use rand_chacha::ChaCha8Rng;

use crate::algebra::StructureTensor;
use crate::error::{Error, Result};
use crate::fields::Reals;

use super::{ProjectiveSolution, SolveConfig};

/// A unit eigenvector with its eigenvalue `λ = ⟨Vx, x⟩`.
#[derive(Clone, Debug, PartialEq)]
pub struct RealEigenpair {
    pub x: Vec<f64>,
    pub lambda: f64,
    /// `‖Vx − λx‖`.
    pub residual: f64,
    /// Index of the restart that produced it.
    pub restart: usize,
}

impl RealEigenpair {
    /// The projective point `(x : λ)` scaled so the largest coordinate is +1.
    pub fn to_solution(&self, field: &Reals) -> ProjectiveSolution<Reals> {
        let mut coords = self.x.clone();
        coords.push(self.lambda);
        let (_, big) = coords
            .iter()
            .enumerate()
            .fold((0, 0.0f64), |(bi, bv), (i, &c)| if c.abs() > bv.abs() { (i, c) } else { (bi, bv) });
        let coords = coords.iter().map(|c| c / big).collect();
        ProjectiveSolution::from_normalized(field, coords, self.residual)
    }
}

/// Symmetrized structure constants `S[m][k][j]` as plain floats.
struct Quadratic {
    n: usize,
    s: Vec<f64>,
}

impl Quadratic {
    fn new(a: &StructureTensor<Reals>) -> Self {
        let n = a.dim();
        let mut s = vec![0.0; n * n * n];
        for i in 0..n {
            for k in 0..n {
                for j in 0..n {
                    s[(i * n + k) * n + j] = 0.5 * (a.get(i, k, j) + a.get(k, i, j));
                }
            }
        }
        Quadratic { n, s }
    }

    fn at(&self, i: usize, k: usize, j: usize) -> f64 {
        self.s[(i * self.n + k) * self.n + j]
    }

    fn apply(&self, x: &[f64]) -> Vec<f64> {
        let n = self.n;
        (0..n)
            .map(|j| {
                let mut v = 0.0;
                for i in 0..n {
                    for k in 0..n {
                        v += self.at(i, k, j) * x[i] * x[k];
                    }
                }
                v
            })
            .collect()
    }

    /// `J[j][m] = ∂(Vx)_j/∂ξ_m = 2 Σ_k S_{mk,j} ξ_k`.
    fn jacobian(&self, x: &[f64]) -> Vec<Vec<f64>> {
        let n = self.n;
        (0..n)
            .map(|j| {
                (0..n)
                    .map(|m| 2.0 * (0..n).map(|k| self.at(m, k, j) * x[k]).sum::<f64>())
                    .collect()
            })
            .collect()
    }
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn norm(a: &[f64]) -> f64 {
    dot(a, a).sqrt()
}

/// Solves `m·x = b` by LU decomposition; `None` if singular.
fn solve_linear(m: Vec<Vec<f64>>, b: Vec<f64>) -> Option<Vec<f64>> {
    let n = b.len();
    let lu = DMatrix::from_fn(n, n, |r, c| m[r][c]).lu();
    let x = lu.solve(&DVector::from_vec(b))?;
    x.iter().all(|c| c.is_finite()).then(|| x.iter().copied().collect())
}

fn random_unit(n: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    loop {
        let x: Vec<f64> = (0..n).map(|_| rng.sample(StandardNormal)).collect();
        let r = norm(&x);
        if r > 1e-8 {
            return x.iter().map(|c| c / r).collect();
        }
    }
}

fn restart_rng(seed: u64, restart: usize) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(restart as u64);
    rng
}

/// `F(x, λ) = [Vx − λx ; (x·x − 1)/2]`.
fn newton_residual(v: &Quadratic, x: &[f64], lambda: f64) -> Vec<f64> {
    let vx = v.apply(x);
    let mut r: Vec<f64> = vx.iter().zip(x).map(|(a, b)| a - lambda * b).collect();
    r.push(0.5 * (dot(x, x) - 1.0));
    r
}

fn finalize(v: &Quadratic, x: &[f64], restart: usize) -> Option<RealEigenpair> {
    let r = norm(x);
    if !(r.is_finite() && r > 1e-12) {
        return None;
    }
    let x: Vec<f64> = x.iter().map(|c| c / r).collect();
    let vx = v.apply(&x);
    let lambda = dot(&vx, &x);
    let residual = norm(&vx.iter().zip(&x).map(|(a, b)| a - lambda * b).collect::<Vec<_>>());
    residual.is_finite().then_some(RealEigenpair { x, lambda, residual, restart })
}

/// Damped Newton on `F(x, λ) = 0` from a random unit start.
fn newton_run(v: &Quadratic, cfg: &SolveConfig, restart: usize) -> Option<RealEigenpair> {
    let n = v.n;
    let mut rng = restart_rng(cfg.seed, restart);
    let mut x = random_unit(n, &mut rng);
    let mut lambda = dot(&v.apply(&x), &x);
    let mut f = newton_residual(v, &x, lambda);
    let mut fnorm = norm(&f);
    for _ in 0..cfg.max_newton_iterations {
        if let Some(pair) = finalize(v, &x, restart).filter(|p| p.residual <= cfg.tolerance * 1e-2) {
            return Some(pair);
        }
        let jv = v.jacobian(&x);
        let mut jac = vec![vec![0.0; n + 1]; n + 1];
        for j in 0..n {
            for m in 0..n {
                jac[j][m] = jv[j][m];
            }
            jac[j][j] -= lambda;
            jac[j][n] = -x[j];
            jac[n][j] = x[j];
        }
        let newton = solve_linear(jac.clone(), f.iter().map(|c| -c).collect());
        let mut accepted = false;
        if let Some(step) = newton {
            let mut t = 1.0;
            while t > 1e-4 {
                let xt: Vec<f64> = x.iter().zip(&step).map(|(a, d)| a + t * d).collect();
                let lt = lambda + t * step[n];
                let ft = newton_residual(v, &xt, lt);
                let nt = norm(&ft);
                if nt < (1.0 - 1e-4 * t) * fnorm {
                    (x, lambda, f, fnorm) = (xt, lt, ft, nt);
                    accepted = true;
                    break;
                }
                t *= 0.5;
            }
        }
        if !accepted {
            // Levenberg–Marquardt step on ‖F‖² when Newton cannot descend
            let jt_j: Vec<Vec<f64>> = (0..=n)
                .map(|a| (0..=n).map(|b| (0..=n).map(|r| jac[r][a] * jac[r][b]).sum()).collect())
                .collect();
            let jt_f: Vec<f64> = (0..=n).map(|a| (0..=n).map(|r| jac[r][a] * f[r]).sum()).collect();
            let mut mu = 1e-6 * (1.0 + (0..=n).map(|a| jt_j[a][a]).fold(0.0, f64::max));
            while mu < 1e8 && !accepted {
                let mut damped = jt_j.clone();
                for (a, row) in damped.iter_mut().enumerate() {
                    row[a] += mu;
                }
                if let Some(step) = solve_linear(damped, jt_f.iter().map(|c| -c).collect()) {
                    let xt: Vec<f64> = x.iter().zip(&step).map(|(a, d)| a + d).collect();
                    let lt = lambda + step[n];
                    let ft = newton_residual(v, &xt, lt);
                    let nt = norm(&ft);
                    if nt < fnorm {
                        (x, lambda, f, fnorm) = (xt, lt, ft, nt);
                        accepted = true;
                    }
                }
                mu *= 10.0;
            }
        }
        if !accepted {
            break;
        }
    }
    finalize(v, &x, restart).filter(|p| p.residual <= cfg.tolerance)
}

/// Levenberg–Marquardt on `[Vx ; (x·x − 1)/2]`, looking for `x² = 0`.
fn nilpotent_run(v: &Quadratic, cfg: &SolveConfig, restart: usize) -> Option<RealEigenpair> {
    let n = v.n;
    let mut rng = restart_rng(cfg.seed ^ 0x9e37_79b9_7f4a_7c15, restart);
    let mut x = random_unit(n, &mut rng);
    let residual = |x: &[f64]| {
        let mut r = v.apply(x);
        r.push(0.5 * (dot(x, x) - 1.0));
        r
    };
    let mut f = residual(&x);
    let mut cost = dot(&f, &f);
    let mut mu = 1e-3;
    for _ in 0..cfg.max_newton_iterations * 4 {
        let jv = v.jacobian(&x);
        // rows: Jv then xᵀ
        let mut jt_j = vec![vec![0.0; n]; n];
        let mut jt_f = vec![0.0; n];
        for a in 0..n {
            for b in 0..n {
                jt_j[a][b] = (0..n).map(|j| jv[j][a] * jv[j][b]).sum::<f64>() + x[a] * x[b];
            }
            jt_f[a] = (0..n).map(|j| jv[j][a] * f[j]).sum::<f64>() + x[a] * f[n];
        }
        let mut damped = jt_j.clone();
        for (a, row) in damped.iter_mut().enumerate() {
            row[a] += mu;
        }
        let Some(step) = solve_linear(damped, jt_f.iter().map(|c| -c).collect()) else {
            mu *= 10.0;
            continue;
        };
        let xt: Vec<f64> = x.iter().zip(&step).map(|(a, d)| a + d).collect();
        let ft = residual(&xt);
        let ct = dot(&ft, &ft);
        if ct < cost {
            x = xt;
            f = ft;
            cost = ct;
            mu = (mu * 0.3).max(1e-15);
        } else {
            mu *= 10.0;
            if mu > 1e12 {
                break;
            }
        }
        if cost.sqrt() <= cfg.tolerance * 1e-2 {
            break;
        }
    }
    let r = norm(&x);
    if !(r.is_finite() && r > 1e-12) {
        return None;
    }
    let x: Vec<f64> = x.iter().map(|c| c / r).collect();
    let residual = norm(&v.apply(&x));
    (residual <= cfg.tolerance).then_some(RealEigenpair { x, lambda: 0.0, residual, restart })
}

/// Runs every restart and keeps the distinct projective eigenpairs found.
pub fn find_real_eigenpairs(a: &StructureTensor<Reals>, cfg: &SolveConfig) -> Result<Vec<RealEigenpair>> {
    cfg.validate()?;
    let v = Quadratic::new(a);
    let mut found: Vec<RealEigenpair> = Vec::new();
    for restart in 0..cfg.max_restarts {
        let Some(pair) = newton_run(&v, cfg, restart) else { continue };
        let same = |q: &RealEigenpair| {
            let d = dot(&q.x, &pair.x);
            // (x : λ) and (−x : −λ) are one projective point
            let s = d.signum();
            (d.abs() - 1.0).abs() < 1e-6 && (q.lambda - s * pair.lambda).abs() < 1e-6
        };
        if !found.iter().any(same) {
            found.push(pair);
        }
    }
    Ok(found)
}

/// A real absolute nilpotent direction, if the search finds one.
pub fn find_real_nilpotent(a: &StructureTensor<Reals>, cfg: &SolveConfig) -> Result<Option<RealEigenpair>> {
    cfg.validate()?;
    let v = Quadratic::new(a);
    Ok((0..cfg.max_restarts).find_map(|restart| nilpotent_run(&v, cfg, restart)))
}

/// The first restart whose Newton run reaches `‖Vx − λx‖ ≤ tolerance`.
pub fn solve_real(a: &StructureTensor<Reals>, cfg: &SolveConfig) -> Result<ProjectiveSolution<Reals>> {
    cfg.validate()?;
    let v = Quadratic::new(a);
    (0..cfg.max_restarts)
        .find_map(|restart| newton_run(&v, cfg, restart))
        .map(|pair| pair.to_solution(a.field()))
        .ok_or(Error::SearchExhausted(cfg.max_restarts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{examples, AlgebraElement};

    #[test]
    fn complex_numbers_have_the_unit_direction() {
        let c = examples::complex_numbers(&Reals::default()).unwrap();
        let cfg = SolveConfig::default();
        let s = solve_real(&c, &cfg).unwrap();
        assert!(s.residual() <= 1e-9);
        assert!((s.x()[0].abs() - 1.0).abs() < 1e-9 && s.x()[1].abs() < 1e-9);
        assert!((s.lambda() - s.x()[0]).abs() < 1e-9);
        assert_eq!(find_real_nilpotent(&c, &SolveConfig { max_restarts: 20, ..cfg }).unwrap(), None);
    }

    #[test]
    fn zero_algebra_has_lambda_zero() {
        let z = examples::zero_algebra(&Reals::default(), 3).unwrap();
        let s = solve_real(&z, &SolveConfig::default()).unwrap();
        assert_eq!(*s.lambda(), 0.0);
        assert!(find_real_nilpotent(&z, &SolveConfig::default()).unwrap().is_some());
    }

    #[test]
    fn lambda_is_the_rayleigh_quotient() {
        let r = Reals::default();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let a = StructureTensor::random(&r, 4, true, &mut rng).unwrap();
            let pairs = find_real_eigenpairs(&a, &SolveConfig { max_restarts: 40, ..Default::default() }).unwrap();
            assert!(!pairs.is_empty());
            for p in pairs {
                let x = AlgebraElement::new(p.x.clone());
                let vx = a.quadratic_operator(&x).unwrap();
                assert!((dot(vx.coords(), &p.x) - p.lambda).abs() < 1e-9);
                assert!(p.residual <= 1e-9);
            }
        }
    }

    #[test]
    fn seeded_runs_repeat() {
        let r = Reals::default();
        let a = StructureTensor::random(&r, 3, true, &mut ChaCha8Rng::seed_from_u64(1)).unwrap();
        let cfg = SolveConfig { seed: 42, ..Default::default() };
        assert_eq!(solve_real(&a, &cfg).unwrap(), solve_real(&a, &cfg).unwrap());
    }

    #[test]
    fn linear_solver() {
        let x = solve_linear(vec![vec![2.0, 1.0], vec![1.0, 3.0]], vec![3.0, 5.0]).unwrap();
        assert!((x[0] - 0.8).abs() < 1e-12 && (x[1] - 1.4).abs() < 1e-12);
        assert!(solve_linear(vec![vec![1.0, 2.0], vec![2.0, 4.0]], vec![1.0, 1.0]).is_none());
    }
}
