use rand::{Rng, RngCore};

use crate::algebra::StructureTensor;
use crate::error::{Error, Result};
use crate::fields::{Field, LaurentField};

/// One perturbation layer: equation `j` loses `ε_j · φ_j(x)²`.
#[derive(Clone, Debug, PartialEq)]
pub struct Perturbation<E> {
    pub eps: Vec<E>,
    /// `phis[j]` holds the coefficients of the linear form `φ_j`.
    pub phis: Vec<Vec<E>>,
}

impl<E: Clone> Perturbation<E> {
    /// Random layer over a finite field: every `ε_j` nonzero, every `φ_j`
    /// a nonzero form.
    pub fn random<F: Field<Elem = E>>(field: &F, n: usize, rng: &mut dyn RngCore) -> Self {
        let nonzero = |rng: &mut dyn RngCore| loop {
            let c = field.random(rng);
            if !field.is_zero(&c) {
                break c;
            }
        };
        let eps = (0..n).map(|_| nonzero(rng)).collect();
        let phis = (0..n)
            .map(|_| {
                let mut phi: Vec<E> = (0..n).map(|_| field.random(rng)).collect();
                if phi.iter().all(|c| field.is_zero(c)) {
                    phi[rng.gen_range(0..n)] = nonzero(rng);
                }
                phi
            })
            .collect();
        Perturbation { eps, phis }
    }
}

/// The `n` homogeneous quadratic forms in `(ξ₁, …, ξ_n, λ)`, optionally
/// perturbed.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadraticSystem<F: Field> {
    tensor: StructureTensor<F>,
    perturbations: Vec<Perturbation<F::Elem>>,
}

/// Affine expansion of `f_j(x) = g_j(x, 1)`: constant, linear and quadratic
/// coefficients.
#[derive(Clone, Debug, PartialEq)]
pub struct AffineForm<E> {
    pub constant: E,
    pub linear: Vec<E>,
    /// `quadratic[i][k]` multiplies `ξ_i ξ_k`.
    pub quadratic: Vec<Vec<E>>,
}

impl<F: Field> QuadraticSystem<F> {
    /// `g_j(x, λ) = Σ α_{ik,j} ξ_i ξ_k − λ ξ_j`.
    pub fn build(tensor: &StructureTensor<F>) -> Self {
        QuadraticSystem {
            tensor: tensor.clone(),
            perturbations: Vec::new(),
        }
    }

    pub fn tensor(&self) -> &StructureTensor<F> {
        &self.tensor
    }

    pub fn field(&self) -> &F {
        self.tensor.field()
    }

    pub fn n(&self) -> usize {
        self.tensor.dim()
    }

    pub fn perturbations(&self) -> &[Perturbation<F::Elem>] {
        &self.perturbations
    }

    pub fn is_perturbed(&self) -> bool {
        !self.perturbations.is_empty()
    }

    fn linear_form(&self, phi: &[F::Elem], x: &[F::Elem]) -> F::Elem {
        let f = self.field();
        phi.iter()
            .zip(x)
            .fold(f.zero(), |acc, (c, xi)| f.add(&acc, &f.mul(c, xi)))
    }

    /// The values `g_j(x, λ)` (with every perturbation applied).
    pub fn eval(&self, x: &[F::Elem], lambda: &F::Elem) -> Vec<F::Elem> {
        let f = self.field();
        let n = self.n();
        let mut out = Vec::with_capacity(n);
        for j in 0..n {
            let mut g = f.neg(&f.mul(lambda, &x[j]));
            for i in 0..n {
                for k in 0..n {
                    let a = self.tensor.get(i, k, j);
                    if !f.is_zero(a) {
                        g = f.add(&g, &f.mul(a, &f.mul(&x[i], &x[k])));
                    }
                }
            }
            for layer in &self.perturbations {
                let phi = self.linear_form(&layer.phis[j], x);
                g = f.sub(&g, &f.mul(&layer.eps[j], &f.mul(&phi, &phi)));
            }
            out.push(g);
        }
        out
    }

    /// Evaluates at a point `(ξ₁, …, ξ_n, λ)`.
    pub fn eval_point(&self, point: &[F::Elem]) -> Vec<F::Elem> {
        let n = self.n();
        self.eval(&point[..n], &point[n])
    }

    pub fn is_solution(&self, point: &[F::Elem]) -> bool {
        let f = self.field();
        self.eval_point(point).iter().all(|g| f.is_zero(g))
    }

    /// Euclidean norm of the form values, by element magnitude.
    pub fn residual(&self, point: &[F::Elem]) -> f64 {
        let f = self.field();
        self.eval_point(point)
            .iter()
            .map(|g| f.magnitude(g).powi(2))
            .sum::<f64>()
            .sqrt()
    }

    /// Subtracts `ε_j φ_j(x)²` from each form.
    ///
    /// Over a field with a valuation the `ε_j` must lie in the maximal
    /// ideal (ν ≥ 1) and the `φ_j` in the valuation ring (ν ≥ 0).
    pub fn perturb(&self, eps: Vec<F::Elem>, phis: Vec<Vec<F::Elem>>) -> Result<Self> {
        let n = self.n();
        if eps.len() != n || phis.len() != n || phis.iter().any(|p| p.len() != n) {
            return Err(Error::PerturbationShape);
        }
        let f = self.field();
        if eps.iter().chain(phis.iter().flatten()).any(|c| !f.contains(c)) {
            return Err(crate::fields::FieldError::FieldMismatch.into());
        }
        for (j, e) in eps.iter().enumerate() {
            if let Some(v) = f.valuation(e).filter(|_| !f.is_zero(e)) {
                if v <= 0 {
                    return Err(Error::ValuationViolation(format!(
                        "epsilon_{} has valuation {v}, needs at least 1",
                        j + 1
                    )));
                }
            }
        }
        for c in phis.iter().flatten() {
            if let Some(v) = f.valuation(c).filter(|_| !f.is_zero(c)) {
                if v < 0 {
                    return Err(Error::ValuationViolation(format!(
                        "linear form coefficient has valuation {v} < 0"
                    )));
                }
            }
        }
        let mut out = self.clone();
        out.perturbations.push(Perturbation { eps, phis });
        Ok(out)
    }

    pub fn with_perturbation(&self, layer: Perturbation<F::Elem>) -> Result<Self> {
        self.perturb(layer.eps, layer.phis)
    }

    /// Expands `f_j(x) = g_j(x, 1)` into monomial coefficients.
    pub fn affine_form(&self, j: usize) -> AffineForm<F::Elem> {
        let f = self.field();
        let n = self.n();
        let mut linear = vec![f.zero(); n];
        linear[j] = f.neg(&f.one());
        let mut quadratic: Vec<Vec<F::Elem>> = (0..n)
            .map(|i| (0..n).map(|k| self.tensor.get(i, k, j).clone()).collect())
            .collect();
        for layer in &self.perturbations {
            let phi = &layer.phis[j];
            for i in 0..n {
                for k in 0..n {
                    let term = f.mul(&layer.eps[j], &f.mul(&phi[i], &phi[k]));
                    quadratic[i][k] = f.sub(&quadratic[i][k], &term);
                }
            }
        }
        AffineForm {
            constant: f.zero(),
            linear,
            quadratic,
        }
    }

    /// Jacobian of `(f_1, …, f_n)` at an affine point `x`.
    pub fn affine_jacobian(&self, x: &[F::Elem]) -> Vec<Vec<F::Elem>> {
        let f = self.field();
        let n = self.n();
        (0..n)
            .map(|j| {
                let form = self.affine_form(j);
                (0..n)
                    .map(|m| {
                        (0..n).fold(form.linear[m].clone(), |acc, k| {
                            let c = f.add(&form.quadratic[m][k], &form.quadratic[k][m]);
                            f.add(&acc, &f.mul(&c, &x[k]))
                        })
                    })
                    .collect()
            })
            .collect()
    }

    /// The Jacobian at the origin equals `−I`, so the trivial solution
    /// `(0 : … : 0 : 1)` is simple.
    pub fn trivial_jacobian_check(&self) -> bool {
        let f = self.field();
        let n = self.n();
        let origin = vec![f.zero(); n];
        let (zero, minus_one) = (f.zero(), f.neg(&f.one()));
        self.affine_jacobian(&origin)
            .iter()
            .enumerate()
            .all(|(j, row)| {
                row.iter().enumerate().all(|(m, c)| {
                    f.equals(c, if j == m { &minus_one } else { &zero })
                })
            })
    }

    /// Re-reads every coefficient through `map` into another field.
    pub fn map_field<G: Field>(
        &self,
        target: &G,
        map: impl Fn(&F::Elem) -> G::Elem,
    ) -> Result<QuadraticSystem<G>> {
        Ok(QuadraticSystem {
            tensor: self.tensor.map_field(target, &map)?,
            perturbations: self
                .perturbations
                .iter()
                .map(|layer| Perturbation {
                    eps: layer.eps.iter().map(&map).collect(),
                    phis: layer
                        .phis
                        .iter()
                        .map(|phi| phi.iter().map(&map).collect())
                        .collect(),
                })
                .collect(),
        })
    }
}

impl<B: Field> QuadraticSystem<LaurentField<B>> {
    /// Sets `t = 0` in every coefficient; all coefficients must be regular.
    pub fn specialize_at_zero(&self) -> Result<QuadraticSystem<B>> {
        let laurent = self.field();
        let coefficients = self.tensor.flat().iter().chain(
            self.perturbations
                .iter()
                .flat_map(|layer| layer.eps.iter().chain(layer.phis.iter().flatten())),
        );
        for c in coefficients {
            laurent.residue_decompose(c)?;
        }
        self.map_field(laurent.base(), |c| {
            laurent.residue_decompose(c).expect("checked above").0
        })
    }
}
