//! Coefficient fields.
//!
//! Every backend implements [`Field`]: a field value carries its parameters
//! (the prime, the modulus, the tolerance, the precision) and performs the
//! arithmetic on plain element values. Algebras, systems and solvers are
//! generic over `F: Field`, so the same code runs over ℚ, 𝔽_p, 𝔽_{p^k},
//! ℝ (approximately) and truncated Laurent series.
//!
//! [`FieldDescriptor`] is the serializable name of a field and [`AnyField`]
//! is its runtime realization, used wherever the field is only known after
//! reading a file.

mod descriptor;
mod extension;
mod laurent;
mod poly;
mod prime;
mod rational;
mod real;

use std::fmt;

use rand::RngCore;
use serde_json::Value;

pub use descriptor::{AnyField, FieldDescriptor};
pub use extension::ExtensionField;
pub use laurent::{LaurentField, LaurentSeries};
pub use poly::Polynomial;
pub use prime::{is_prime, PrimeField};
pub use rational::{eisenstein_irreducible, rational_roots, Rationals, MAX_RATIONAL_ROOT_DEGREE};
pub use real::{Reals, DEFAULT_REAL_TOLERANCE};

/// Errors raised by field arithmetic and field construction.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operand does not belong to the field")]
    FieldMismatch,
    #[error("operation is not supported over {0}")]
    UnsupportedField(String),
    #[error("{0} is not a prime")]
    NotPrime(u64),
    #[error("modulus is reducible over the base field")]
    ReducibleModulus,
    #[error("modulus must have degree at least 1")]
    ConstantModulus,
    #[error("cannot decide irreducibility: {0}")]
    IrreducibilityUnknown(String),
    #[error("polynomial does not have integer coefficients")]
    NotIntegerCoefficients,
    #[error("series is zero within its precision")]
    ZeroSeries,
    #[error("series has valuation {0} < 0 and is not in the valuation ring")]
    NotInValuationRing(i64),
    #[error("degree {degree} exceeds the supported limit {limit}")]
    DegreeLimit { degree: usize, limit: usize },
    #[error("Laurent precision must be at least 1")]
    ZeroPrecision,
    #[error("the zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("invalid scalar: {0}")]
    Parse(String),
    #[error("invalid field descriptor: {0}")]
    Descriptor(String),
}

/// A coefficient field.
///
/// Elements are plain values; all arithmetic goes through the field so
/// that parameters (modulus, tolerance, precision) live in one place.
pub trait Field: Clone + fmt::Debug + PartialEq + Send + Sync + 'static {
    type Elem: Clone + fmt::Debug + PartialEq + Send + Sync;

    fn descriptor(&self) -> FieldDescriptor;
    fn characteristic(&self) -> u64;

    /// False only for the floating-point reals.
    fn is_exact(&self) -> bool {
        true
    }

    /// Number of elements, for finite fields.
    fn order(&self) -> Option<u64> {
        None
    }

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, FieldError>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn div(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, FieldError> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    /// Field equality: within tolerance for reals, up to the jointly known
    /// precision for truncated series, exact otherwise.
    fn equals(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a == b
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        self.equals(a, &self.zero())
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        self.equals(a, &self.one())
    }

    /// Whether `a` is a well-formed element of this particular field.
    fn contains(&self, a: &Self::Elem) -> bool;

    /// All elements, for finite fields, in a fixed order: zero first, then one.
    fn elements(&self) -> Option<Vec<Self::Elem>> {
        None
    }

    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem;

    fn to_json(&self, a: &Self::Elem) -> Value;
    fn from_json(&self, v: &Value) -> Result<Self::Elem, FieldError>;
    fn format(&self, a: &Self::Elem) -> String;

    /// Size of an element used for residual reports: `|a|` over the reals,
    /// 0 or 1 for exact fields.
    fn magnitude(&self, a: &Self::Elem) -> f64 {
        if self.is_zero(a) {
            0.0
        } else {
            1.0
        }
    }

    /// Discrete valuation ν of a nonzero element, for fields that carry one.
    fn valuation(&self, _a: &Self::Elem) -> Option<i64> {
        None
    }

    /// A root of `f` in the field, if one exists.
    ///
    /// Finite fields are searched exhaustively; other backends override or
    /// report [`FieldError::UnsupportedField`].
    fn find_root(&self, f: &Polynomial<Self>) -> Result<Option<Self::Elem>, FieldError> {
        if f.is_zero() {
            return Err(FieldError::ZeroPolynomial);
        }
        match self.elements() {
            Some(all) => Ok(all.into_iter().find(|a| self.is_zero(&f.eval(a)))),
            None => Err(FieldError::UnsupportedField(self.descriptor().to_string())),
        }
    }

    /// Irreducibility over this field.
    ///
    /// Degree ≤ 3 reduces to root search; larger degrees over finite fields
    /// use trial division by every monic polynomial of degree ≤ deg/2.
    fn is_irreducible(&self, f: &Polynomial<Self>) -> Result<bool, FieldError> {
        let degree = f.degree().ok_or(FieldError::ZeroPolynomial)?;
        match degree {
            0 => Ok(false),
            1 => Ok(true),
            2 | 3 => Ok(self.find_root(f)?.is_none()),
            _ => {
                if self.order().is_none() {
                    return Err(FieldError::IrreducibilityUnknown(format!(
                        "degree {degree} over {}",
                        self.descriptor()
                    )));
                }
                for d in 1..=degree / 2 {
                    for g in Polynomial::monic_of_degree(self, d)? {
                        if f.div_rem(&g)?.1.is_zero() {
                            return Ok(false);
                        }
                    }
                }
                Ok(true)
            }
        }
    }

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }
}

/// Binary and unary operations accepted by [`field_arith`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
    Neg,
    Inv,
}

/// Checked arithmetic: both operands must belong to `field`.
///
/// Unary operations ignore `b`.
pub fn field_arith<F: Field>(
    field: &F,
    a: &F::Elem,
    b: &F::Elem,
    op: ArithOp,
) -> Result<F::Elem, FieldError> {
    if !field.contains(a) || !field.contains(b) {
        return Err(FieldError::FieldMismatch);
    }
    Ok(match op {
        ArithOp::Add => field.add(a, b),
        ArithOp::Sub => field.sub(a, b),
        ArithOp::Mul => field.mul(a, b),
        ArithOp::Div => field.div(a, b)?,
        ArithOp::Neg => field.neg(a),
        ArithOp::Inv => field.inv(a)?,
    })
}

/// Root search with a witness, for ℚ and finite fields.
pub fn poly_has_root<F: Field>(f: &Polynomial<F>) -> Result<Option<F::Elem>, FieldError> {
    let field = f.field();
    if !field.is_exact() || field.valuation(&field.one()).is_some() {
        return Err(FieldError::UnsupportedField(field.descriptor().to_string()));
    }
    field.find_root(f)
}
