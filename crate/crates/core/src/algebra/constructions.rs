//! The odd-degree quotient algebra and restriction of scalars.
//!
//! For an irreducible `f` of odd degree `d > 1` over `F`, the field
//! `Φ = F[t]/(f)` with the product `x∘y = (x - πx)(y - πy)`, where `π`
//! keeps only the constant coefficient, has `F·1` as an ideal. The
//! quotient `Φ/F` is a commutative `(d-1)`-dimensional `F`-algebra in which
//! `X∘X = λX` has no solution `X ≠ 0`, so it has neither idempotents nor
//! absolute nilpotents.

use crate::error::{Error, Result};
use crate::fields::{ExtensionField, Field, FieldError, Polynomial};

use super::tensor::DEFAULT_MAX_DIM;
use super::{AlgebraElement, StructureTensor};

/// `π`: projection onto the constant line `F·1`.
pub fn project_to_constants<B: Field>(ext: &ExtensionField<B>, x: &[B::Elem]) -> Vec<B::Elem> {
    ext.embed(&x[0])
}

/// `x∘y = (x - πx)(y - πy)` in `Φ`.
pub fn circle_product<B: Field>(
    ext: &ExtensionField<B>,
    x: &[B::Elem],
    y: &[B::Elem],
) -> Vec<B::Elem> {
    let xs = ext.sub(&x.to_vec(), &project_to_constants(ext, x));
    let ys = ext.sub(&y.to_vec(), &project_to_constants(ext, y));
    ext.mul(&xs, &ys)
}

/// The algebra `Φ/F` under `∘`, on the basis `t̄, t̄², …, t̄^{d-1}`.
pub fn quotient_by_line<B: Field>(ext: &ExtensionField<B>) -> Result<StructureTensor<B>> {
    let base = ext.base();
    let d = ext.degree();
    if d < 2 {
        return Err(Error::EvenOrTrivialDegree(d));
    }
    let n = d - 1;
    let monomial = |a: usize| ext.reduce(&Polynomial::monomial(base, base.one(), a));
    let mut alpha = StructureTensor::zeros_with_limit(base, n, n.max(DEFAULT_MAX_DIM))?;
    for i in 0..n {
        for k in 0..n {
            let prod = circle_product(ext, &monomial(i + 1), &monomial(k + 1));
            // drop the constant coefficient: coordinates of the class mod F
            alpha.set_product(i, k, &prod[1..]);
        }
    }
    Ok(alpha)
}

/// The quotient algebra of `F[t]/(f)` by its constant line.
pub fn counterexample_algebra<B: Field>(field: &B, f: &Polynomial<B>) -> Result<StructureTensor<B>> {
    let d = f.degree().ok_or(FieldError::ZeroPolynomial)?;
    if d < 2 || d % 2 == 0 {
        return Err(Error::EvenOrTrivialDegree(d));
    }
    if !field.is_exact() {
        return Err(Error::unsupported(field.descriptor()));
    }
    let ext = ExtensionField::new(field, f.clone()).map_err(|e| match e {
        FieldError::ReducibleModulus => Error::ReducibleModulus,
        other => other.into(),
    })?;
    quotient_by_line(&ext)
}

/// Views an `l`-dimensional `Φ`-algebra as an `l·[Φ:F]`-dimensional
/// `F`-algebra on the basis `t^s e_i`, indexed `i·e + s`.
pub fn restrict_scalars<B: Field>(a: &StructureTensor<ExtensionField<B>>) -> Result<StructureTensor<B>> {
    let ext = a.field();
    let base = ext.base();
    let (l, e) = (a.dim(), ext.degree());
    let m = l * e;
    let t_pow = |s: usize| ext.reduce(&Polynomial::monomial(base, base.one(), s));
    let mut out = StructureTensor::zeros_with_limit(base, m, m.max(DEFAULT_MAX_DIM))?;
    for i in 0..l {
        for k in 0..l {
            for s in 0..e {
                for r in 0..e {
                    let shift = t_pow(s + r);
                    for j in 0..l {
                        let c = ext.mul(&shift, a.get(i, k, j));
                        for (u, cu) in c.into_iter().enumerate() {
                            out.set(i * e + s, k * e + r, j * e + u, cu);
                        }
                    }
                }
            }
        }
    }
    Ok(out)
}

/// Coordinates of a `Φ`-element vector over `F`.
pub fn restrict_element<B: Field>(
    _ext: &ExtensionField<B>,
    x: &AlgebraElement<ExtensionField<B>>,
) -> AlgebraElement<B> {
    AlgebraElement::new(x.coords().iter().flat_map(|c| c.iter().cloned()).collect())
}

/// Inverse of [`restrict_element`].
pub fn extend_element<B: Field>(
    ext: &ExtensionField<B>,
    x: &AlgebraElement<B>,
) -> Result<AlgebraElement<ExtensionField<B>>> {
    let e = ext.degree();
    if x.len() % e != 0 {
        return Err(Error::DimensionMismatch {
            expected: (x.len() / e + 1) * e,
            found: x.len(),
        });
    }
    Ok(AlgebraElement::new(
        x.coords().chunks(e).map(|c| c.to_vec()).collect(),
    ))
}
