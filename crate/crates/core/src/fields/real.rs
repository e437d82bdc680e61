use rand::{Rng, RngCore};
use serde_json::Value;

use super::{Field, FieldDescriptor, FieldError, Polynomial};

pub const DEFAULT_REAL_TOLERANCE: f64 = 1e-10;

/// Double-precision reals; equality is `|a - b| <= tol`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Reals {
    tol: f64,
}

impl Default for Reals {
    fn default() -> Self {
        Reals {
            tol: DEFAULT_REAL_TOLERANCE,
        }
    }
}

impl Reals {
    pub fn with_tolerance(tol: f64) -> Self {
        Reals { tol: tol.abs() }
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }
}

impl Field for Reals {
    type Elem = f64;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Reals { tol: self.tol }
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn is_exact(&self) -> bool {
        false
    }

    fn zero(&self) -> f64 {
        0.0
    }

    fn one(&self) -> f64 {
        1.0
    }

    fn from_i64(&self, n: i64) -> f64 {
        n as f64
    }

    fn add(&self, a: &f64, b: &f64) -> f64 {
        a + b
    }

    fn neg(&self, a: &f64) -> f64 {
        -a
    }

    fn sub(&self, a: &f64, b: &f64) -> f64 {
        a - b
    }

    fn mul(&self, a: &f64, b: &f64) -> f64 {
        a * b
    }

    fn inv(&self, a: &f64) -> Result<f64, FieldError> {
        if self.is_zero(a) {
            return Err(FieldError::DivisionByZero);
        }
        Ok(1.0 / a)
    }

    fn equals(&self, a: &f64, b: &f64) -> bool {
        (a - b).abs() <= self.tol
    }

    fn contains(&self, a: &f64) -> bool {
        a.is_finite()
    }

    fn random(&self, rng: &mut dyn RngCore) -> f64 {
        rng.gen_range(-1.0..=1.0)
    }

    fn to_json(&self, a: &f64) -> Value {
        serde_json::Number::from_f64(*a)
            .map(Value::Number)
            .unwrap_or(Value::Null)
    }

    fn from_json(&self, v: &Value) -> Result<f64, FieldError> {
        match v {
            Value::Number(n) => n.as_f64().ok_or_else(|| FieldError::Parse(v.to_string())),
            Value::String(s) => s
                .trim()
                .parse()
                .map_err(|_| FieldError::Parse(format!("{s:?} is not a real number"))),
            _ => Err(FieldError::Parse(format!("{v} is not a real scalar"))),
        }
    }

    fn format(&self, a: &f64) -> String {
        format!("{a}")
    }

    fn magnitude(&self, a: &f64) -> f64 {
        a.abs()
    }

    /// Real irreducibles have degree 1, or degree 2 with negative discriminant.
    fn is_irreducible(&self, f: &Polynomial<Self>) -> Result<bool, FieldError> {
        match f.degree().ok_or(FieldError::ZeroPolynomial)? {
            0 => Ok(false),
            1 => Ok(true),
            2 => {
                let (c, b, a) = (f.coeff(0), f.coeff(1), f.coeff(2));
                Ok(b * b - 4.0 * a * c < -self.tol)
            }
            _ => Ok(false),
        }
    }
}
