//! Small algebras used throughout the tests, the CLI and the demo.

use crate::error::Result;
use crate::fields::Field;

use super::{AlgebraElement, StructureTensor};

/// The field itself as a 1-dimensional algebra: `e₁e₁ = e₁`.
pub fn field_as_algebra<F: Field>(field: &F) -> Result<StructureTensor<F>> {
    let mut a = StructureTensor::zeros(field, 1)?;
    a.set(0, 0, 0, field.one());
    Ok(a)
}

/// Every product is zero.
pub fn zero_algebra<F: Field>(field: &F, dim: usize) -> Result<StructureTensor<F>> {
    StructureTensor::zeros(field, dim)
}

/// `e_i e_i = e_i`, all other products zero.
pub fn diagonal_idempotents<F: Field>(field: &F, dim: usize) -> Result<StructureTensor<F>> {
    diagonal(field, &vec![field.one(); dim])
}

/// `e_i e_i = c_i e_i`, all other products zero.
pub fn diagonal<F: Field>(field: &F, diag: &[F::Elem]) -> Result<StructureTensor<F>> {
    let mut a = StructureTensor::zeros(field, diag.len())?;
    for (i, c) in diag.iter().enumerate() {
        a.set(i, i, i, c.clone());
    }
    Ok(a)
}

/// ℂ as a 2-dimensional algebra on the basis `1, i`.
pub fn complex_numbers<F: Field>(field: &F) -> Result<StructureTensor<F>> {
    let (zero, one) = (field.zero(), field.one());
    let minus_one = field.neg(&one);
    let mut a = StructureTensor::zeros(field, 2)?;
    a.set_product(0, 0, &[one.clone(), zero.clone()]);
    a.set_product(0, 1, &[zero.clone(), one.clone()]);
    a.set_product(1, 0, &[zero, one]);
    a.set_product(1, 1, &[minus_one, field.zero()]);
    Ok(a)
}

/// The full matrix algebra `M_m(F)` on the matrix units `E_ab`, indexed
/// row-major as `a·m + b`; `E_ab E_cd = δ_bc E_ad`.
pub fn matrix_algebra<F: Field>(field: &F, m: usize) -> Result<StructureTensor<F>> {
    let n = m * m;
    let mut a = StructureTensor::zeros_with_limit(field, n, n)?;
    for r in 0..m {
        for s in 0..m {
            for u in 0..m {
                a.set(r * m + s, s * m + u, r * m + u, field.one());
            }
        }
    }
    Ok(a)
}

/// The nilpotent Jordan block of size `m` (ones on the superdiagonal) as an
/// element of [`matrix_algebra`].
pub fn jordan_block<F: Field>(field: &F, m: usize) -> AlgebraElement<F> {
    let mut coords = vec![field.zero(); m * m];
    for r in 0..m.saturating_sub(1) {
        coords[r * m + r + 1] = field.one();
    }
    AlgebraElement::new(coords)
}
