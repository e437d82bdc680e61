use crate::error::{Error, Result};
use crate::fields::Field;

use super::{AlgebraElement, StructureTensor};

/// What squaring does to a single element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ElementStatus {
    /// `x = 0`: nilpotent only trivially.
    Zero,
    Idempotent,
    AbsoluteNilpotent,
    /// `x² = λx` with `λ ∉ {0, 1}`.
    Eigenvector,
    NotAnEigenvector,
}

impl<F: Field> StructureTensor<F> {
    /// `ζ_j = Σ_{i,k} α_{ik,j} ξ_i η_k`.
    pub fn multiply(&self, x: &AlgebraElement<F>, y: &AlgebraElement<F>) -> Result<AlgebraElement<F>> {
        self.check(x)?;
        self.check(y)?;
        Ok(self.multiply_unchecked(x.coords(), y.coords()))
    }

    pub(crate) fn multiply_unchecked(&self, x: &[F::Elem], y: &[F::Elem]) -> AlgebraElement<F> {
        let f = self.field();
        let n = self.dim();
        let mut out = vec![f.zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if f.is_zero(xi) {
                continue;
            }
            for (k, yk) in y.iter().enumerate() {
                if f.is_zero(yk) {
                    continue;
                }
                let w = f.mul(xi, yk);
                for (j, z) in out.iter_mut().enumerate() {
                    let a = self.get(i, k, j);
                    if !f.is_zero(a) {
                        *z = f.add(z, &f.mul(a, &w));
                    }
                }
            }
        }
        AlgebraElement::new(out)
    }

    /// The quadratic operator `Vx = x²`.
    pub fn quadratic_operator(&self, x: &AlgebraElement<F>) -> Result<AlgebraElement<F>> {
        self.multiply(x, x)
    }

    /// Averages `α_{ik,j}` and `α_{ki,j}`; the quadratic operator is unchanged.
    pub fn symmetrize(&self) -> Result<Self> {
        let f = self.field();
        if f.characteristic() == 2 {
            return Err(Error::CharTwo);
        }
        let half = f.inv(&f.from_i64(2))?;
        let n = self.dim();
        StructureTensor::from_flat_with_limit(
            f,
            n,
            (0..n * n * n)
                .map(|idx| {
                    let (i, k, j) = (idx / (n * n), (idx / n) % n, idx % n);
                    f.mul(&f.add(self.get(i, k, j), self.get(k, i, j)), &half)
                })
                .collect(),
            n,
        )
    }

    pub fn is_idempotent(&self, x: &AlgebraElement<F>) -> Result<bool> {
        Ok(self.element_status(x)? == ElementStatus::Idempotent)
    }

    pub fn is_absolute_nilpotent(&self, x: &AlgebraElement<F>) -> Result<bool> {
        Ok(self.element_status(x)? == ElementStatus::AbsoluteNilpotent)
    }

    pub fn element_status(&self, x: &AlgebraElement<F>) -> Result<ElementStatus> {
        self.check(x)?;
        if x.is_zero(self.field()) {
            return Ok(ElementStatus::Zero);
        }
        let f = self.field();
        Ok(match self.eigencheck(x)? {
            None => ElementStatus::NotAnEigenvector,
            Some(l) if f.is_zero(&l) => ElementStatus::AbsoluteNilpotent,
            Some(l) if f.is_one(&l) => ElementStatus::Idempotent,
            Some(_) => ElementStatus::Eigenvector,
        })
    }

    /// The eigenvalue `λ` with `Vx = λx`, if `x` is an eigenvector.
    pub fn eigencheck(&self, x: &AlgebraElement<F>) -> Result<Option<F::Elem>> {
        let vx = self.quadratic_operator(x)?;
        let f = self.field();
        // largest coordinate as pivot keeps the real case well conditioned
        let pivot = x
            .coords()
            .iter()
            .enumerate()
            .filter(|(_, c)| !f.is_zero(c))
            .max_by(|a, b| f.magnitude(a.1).total_cmp(&f.magnitude(b.1)).then(b.0.cmp(&a.0)))
            .map(|(i, _)| i)
            .ok_or(Error::ZeroVector)?;
        let lambda = f.div(&vx.coords()[pivot], &x.coords()[pivot])?;
        let consistent = vx
            .coords()
            .iter()
            .zip(x.coords())
            .all(|(v, xi)| f.equals(v, &f.mul(&lambda, xi)));
        Ok(consistent.then_some(lambda))
    }

    /// An idempotent (`λ ≠ 0`) or absolute nilpotent (`λ = 0`) on the line
    /// through the eigenvector `x`.
    pub fn rescale_to_canonical(
        &self,
        x: &AlgebraElement<F>,
        lambda: &F::Elem,
    ) -> Result<AlgebraElement<F>> {
        let f = self.field();
        match self.eigencheck(x)? {
            Some(l) if f.equals(&l, lambda) => {}
            _ => return Err(Error::NotAnEigenvector),
        }
        if f.is_zero(lambda) {
            Ok(x.clone())
        } else {
            Ok(x.scale(f, &f.inv(lambda)?))
        }
    }

    /// Left-associated power `((x·x)·x)·…·x`.
    pub fn power(&self, x: &AlgebraElement<F>, k: usize) -> Result<AlgebraElement<F>> {
        if k == 0 {
            return Err(Error::InvalidExponent);
        }
        self.check(x)?;
        let mut acc = x.clone();
        for _ in 1..k {
            acc = self.multiply_unchecked(acc.coords(), x.coords());
        }
        Ok(acc)
    }

    /// For `x` nilpotent of order exactly `r` in a power-associative
    /// subalgebra, `x^s` with `s = r - ⌊r/2⌋` squares to zero.
    pub fn absolute_nilpotent_from_nilpotent(
        &self,
        x: &AlgebraElement<F>,
        r: usize,
    ) -> Result<AlgebraElement<F>> {
        if r < 2 {
            return Err(Error::NotNilpotentAtGivenOrder(r));
        }
        let f = self.field();
        let below = self.power(x, r - 1)?;
        let top = self.multiply_unchecked(below.coords(), x.coords());
        if below.is_zero(f) || !top.is_zero(f) {
            return Err(Error::NotNilpotentAtGivenOrder(r));
        }
        let z = self.power(x, r - r / 2)?;
        if !self.multiply_unchecked(z.coords(), z.coords()).is_zero(f) {
            return Err(Error::NotPowerAssociative);
        }
        Ok(z)
    }
}
