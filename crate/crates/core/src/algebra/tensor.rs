use rand::RngCore;

use crate::error::{Error, Result};
use crate::fields::Field;

/// Largest dimension accepted unless a caller raises the limit.
pub const DEFAULT_MAX_DIM: usize = 16;

/// Coordinates of an algebra element in the standard basis.
#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraElement<F: Field> {
    coords: Vec<F::Elem>,
}

impl<F: Field> AlgebraElement<F> {
    pub fn new(coords: Vec<F::Elem>) -> Self {
        AlgebraElement { coords }
    }

    pub fn from_i64s(field: &F, coords: &[i64]) -> Self {
        Self::new(coords.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: &F, n: usize) -> Self {
        Self::new(vec![field.zero(); n])
    }

    pub fn basis(field: &F, n: usize, i: usize) -> Self {
        let mut e = Self::zero(field, n);
        e.coords[i] = field.one();
        e
    }

    pub fn coords(&self) -> &[F::Elem] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<F::Elem> {
        self.coords
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn is_zero(&self, field: &F) -> bool {
        self.coords.iter().all(|c| field.is_zero(c))
    }

    pub fn add(&self, field: &F, other: &Self) -> Self {
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| field.add(a, b))
                .collect(),
        )
    }

    pub fn sub(&self, field: &F, other: &Self) -> Self {
        Self::new(
            self.coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| field.sub(a, b))
                .collect(),
        )
    }

    pub fn scale(&self, field: &F, c: &F::Elem) -> Self {
        Self::new(self.coords.iter().map(|a| field.mul(a, c)).collect())
    }

    /// Coordinatewise field equality.
    pub fn equals(&self, field: &F, other: &Self) -> bool {
        self.len() == other.len()
            && self
                .coords
                .iter()
                .zip(&other.coords)
                .all(|(a, b)| field.equals(a, b))
    }

    pub fn random(field: &F, n: usize, rng: &mut dyn RngCore) -> Self {
        Self::new((0..n).map(|_| field.random(rng)).collect())
    }

    pub fn format(&self, field: &F) -> String {
        let parts: Vec<String> = self.coords.iter().map(|c| field.format(c)).collect();
        format!("[{}]", parts.join(", "))
    }
}

/// Structure constants `α_{ik,j}` of an `n`-dimensional algebra:
/// `e_i e_k = Σ_j α_{ik,j} e_j`.
#[derive(Clone, Debug, PartialEq)]
pub struct StructureTensor<F: Field> {
    field: F,
    dim: usize,
    alpha: Vec<F::Elem>,
}

impl<F: Field> StructureTensor<F> {
    /// Builds from a nested `[i][k][j]` array.
    pub fn new(field: &F, alpha: Vec<Vec<Vec<F::Elem>>>) -> Result<Self> {
        let dim = alpha.len();
        let mut flat = Vec::with_capacity(dim * dim * dim);
        for row in alpha {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
            for col in row {
                if col.len() != dim {
                    return Err(Error::DimensionMismatch {
                        expected: dim,
                        found: col.len(),
                    });
                }
                flat.extend(col);
            }
        }
        Self::from_flat(field, dim, flat)
    }

    /// Builds from a flat array in `[i][k][j]` order.
    pub fn from_flat(field: &F, dim: usize, alpha: Vec<F::Elem>) -> Result<Self> {
        Self::from_flat_with_limit(field, dim, alpha, DEFAULT_MAX_DIM)
    }

    pub fn from_flat_with_limit(
        field: &F,
        dim: usize,
        alpha: Vec<F::Elem>,
        max_dim: usize,
    ) -> Result<Self> {
        if dim == 0 {
            return Err(Error::EmptyDimension);
        }
        if dim > max_dim {
            return Err(Error::DimensionTooLarge { dim, max: max_dim });
        }
        if alpha.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: alpha.len(),
            });
        }
        if !alpha.iter().all(|a| field.contains(a)) {
            return Err(crate::fields::FieldError::FieldMismatch.into());
        }
        Ok(StructureTensor {
            field: field.clone(),
            dim,
            alpha,
        })
    }

    pub fn zeros(field: &F, dim: usize) -> Result<Self> {
        Self::zeros_with_limit(field, dim, DEFAULT_MAX_DIM)
    }

    pub fn zeros_with_limit(field: &F, dim: usize, max_dim: usize) -> Result<Self> {
        Self::from_flat_with_limit(field, dim, vec![field.zero(); dim * dim * dim], max_dim)
    }

    /// Builds from a function of `(i, k, j)`.
    pub fn from_fn(
        field: &F,
        dim: usize,
        mut alpha: impl FnMut(usize, usize, usize) -> F::Elem,
    ) -> Result<Self> {
        let mut flat = Vec::with_capacity(dim * dim * dim);
        for i in 0..dim {
            for k in 0..dim {
                for j in 0..dim {
                    flat.push(alpha(i, k, j));
                }
            }
        }
        Self::from_flat(field, dim, flat)
    }

    /// Random tensor with entries from `field.random`; with `commutative`
    /// the slices are made symmetric.
    pub fn random(field: &F, dim: usize, commutative: bool, rng: &mut dyn RngCore) -> Result<Self> {
        let mut t = Self::zeros(field, dim)?;
        for i in 0..dim {
            for k in 0..dim {
                if commutative && k < i {
                    continue;
                }
                for j in 0..dim {
                    let a = field.random(rng);
                    if commutative {
                        t.set(k, i, j, a.clone());
                    }
                    t.set(i, k, j, a);
                }
            }
        }
        Ok(t)
    }

    fn index(&self, i: usize, k: usize, j: usize) -> usize {
        (i * self.dim + k) * self.dim + j
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `α_{ik,j}`, zero-based.
    pub fn get(&self, i: usize, k: usize, j: usize) -> &F::Elem {
        &self.alpha[self.index(i, k, j)]
    }

    pub fn set(&mut self, i: usize, k: usize, j: usize, value: F::Elem) {
        let idx = self.index(i, k, j);
        self.alpha[idx] = value;
    }

    /// Sets the product `e_i e_k` to the given coordinates.
    pub fn set_product(&mut self, i: usize, k: usize, coords: &[F::Elem]) {
        for (j, c) in coords.iter().enumerate() {
            self.set(i, k, j, c.clone());
        }
    }

    pub fn flat(&self) -> &[F::Elem] {
        &self.alpha
    }

    /// Every slice `[α_{ik,j}]_{i,k}` is symmetric.
    pub fn is_commutative(&self) -> bool {
        (0..self.dim).all(|j| {
            (0..self.dim).all(|i| {
                (0..i).all(|k| self.field.equals(self.get(i, k, j), self.get(k, i, j)))
            })
        })
    }

    pub fn basis(&self, i: usize) -> AlgebraElement<F> {
        AlgebraElement::basis(&self.field, self.dim, i)
    }

    pub fn zero_element(&self) -> AlgebraElement<F> {
        AlgebraElement::zero(&self.field, self.dim)
    }

    /// Validates an element against this algebra's dimension and field.
    pub fn check(&self, x: &AlgebraElement<F>) -> Result<()> {
        if x.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        if !x.coords().iter().all(|c| self.field.contains(c)) {
            return Err(crate::fields::FieldError::FieldMismatch.into());
        }
        Ok(())
    }

    /// Re-reads every structure constant through `map` into another field.
    pub fn map_field<G: Field>(
        &self,
        target: &G,
        map: impl Fn(&F::Elem) -> G::Elem,
    ) -> Result<StructureTensor<G>> {
        StructureTensor::from_flat_with_limit(
            target,
            self.dim,
            self.alpha.iter().map(map).collect(),
            self.dim.max(DEFAULT_MAX_DIM),
        )
    }

    /// The tensor `c·α`, whose quadratic operator is `c·V`.
    pub fn scaled(&self, c: &F::Elem) -> Self {
        StructureTensor {
            field: self.field.clone(),
            dim: self.dim,
            alpha: self.alpha.iter().map(|a| self.field.mul(a, c)).collect(),
        }
    }
}
