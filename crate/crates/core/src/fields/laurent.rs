//! Truncated Laurent series `F((t))`.
//!
//! A series stores its valuation `nu` and at most `prec` coefficients
//! starting at `t^nu`, so it is known modulo `t^(nu + len)`. Cancellation
//! in a sum shortens the known part instead of inventing zeros, and
//! equality compares coefficients only where both sides are known. With
//! that convention every field identity holds exactly.

use rand::{Rng, RngCore};
use serde_json::{json, Value};

use super::{Field, FieldDescriptor, FieldError};

pub const DEFAULT_LAURENT_PRECISION: usize = 16;

/// Valuation used for the exact zero; large enough to dominate every real
/// exponent while leaving room for sums of two of them.
const EXACT_ZERO_NU: i64 = i64::MAX / 4;

#[derive(Clone, Debug, PartialEq)]
pub struct LaurentSeries<E> {
    nu: i64,
    coeffs: Vec<E>,
}

impl<E> LaurentSeries<E> {
    /// Leading exponent; for a series that is zero to its precision this is
    /// the exponent up to which it is known.
    pub fn nu(&self) -> i64 {
        self.nu
    }

    pub fn coeffs(&self) -> &[E] {
        &self.coeffs
    }

    pub fn is_exact_zero(&self) -> bool {
        self.nu == EXACT_ZERO_NU
    }

    /// Exponent below which every coefficient is known.
    pub fn absolute_precision(&self) -> i64 {
        self.nu.saturating_add(self.coeffs.len() as i64)
    }
}

/// `base((t))` with relative precision `prec`.
#[derive(Clone, Debug, PartialEq)]
pub struct LaurentField<B: Field> {
    base: B,
    prec: usize,
}

impl<B: Field> LaurentField<B> {
    pub fn new(base: &B, prec: usize) -> Result<Self, FieldError> {
        if prec == 0 {
            return Err(FieldError::ZeroPrecision);
        }
        Ok(LaurentField {
            base: base.clone(),
            prec,
        })
    }

    pub fn base(&self) -> &B {
        &self.base
    }

    pub fn precision(&self) -> usize {
        self.prec
    }

    /// `t^nu (c_0 + c_1 t + …)`, normalized and truncated.
    pub fn series(&self, nu: i64, coeffs: Vec<B::Elem>) -> LaurentSeries<B::Elem> {
        self.normalize(nu, coeffs)
    }

    /// A constant of the base field.
    pub fn constant(&self, c: &B::Elem) -> LaurentSeries<B::Elem> {
        if self.base.is_zero(c) {
            return self.zero();
        }
        let mut coeffs = vec![self.base.zero(); self.prec];
        coeffs[0] = c.clone();
        LaurentSeries { nu: 0, coeffs }
    }

    /// `t^k`
    pub fn t_power(&self, k: i64) -> LaurentSeries<B::Elem> {
        let mut s = self.constant(&self.base.one());
        s.nu = k;
        s
    }

    /// Coefficient of `t^e`; `None` where the series is not known.
    pub fn coeff(&self, a: &LaurentSeries<B::Elem>, e: i64) -> Option<B::Elem> {
        if a.is_exact_zero() || e < a.nu {
            return Some(self.base.zero());
        }
        a.coeffs.get((e - a.nu) as usize).cloned()
    }

    fn normalize(&self, mut nu: i64, mut coeffs: Vec<B::Elem>) -> LaurentSeries<B::Elem> {
        coeffs.truncate(self.prec);
        let lead = coeffs
            .iter()
            .position(|c| !self.base.is_zero(c))
            .unwrap_or(coeffs.len());
        coeffs.drain(..lead);
        nu += lead as i64;
        LaurentSeries { nu, coeffs }
    }

    /// ν(a), the exponent of the leading term.
    pub fn laurent_valuation(&self, a: &LaurentSeries<B::Elem>) -> Result<i64, FieldError> {
        if a.coeffs.is_empty() {
            return Err(FieldError::ZeroSeries);
        }
        Ok(a.nu)
    }

    /// The multiplicative valuation `exp(-ν(a))`.
    pub fn absolute_value(&self, a: &LaurentSeries<B::Elem>) -> f64 {
        match self.laurent_valuation(a) {
            Ok(nu) => (-(nu as f64)).exp(),
            Err(_) => 0.0,
        }
    }

    /// Splits a regular series into its constant term and a tail of
    /// positive valuation.
    pub fn residue_decompose(
        &self,
        a: &LaurentSeries<B::Elem>,
    ) -> Result<(B::Elem, LaurentSeries<B::Elem>), FieldError> {
        if !a.coeffs.is_empty() && a.nu < 0 {
            return Err(FieldError::NotInValuationRing(a.nu));
        }
        let constant = if a.nu == 0 && !a.coeffs.is_empty() {
            a.coeffs[0].clone()
        } else {
            self.base.zero()
        };
        let tail = if a.nu == 0 && !a.coeffs.is_empty() {
            let mut coeffs = a.coeffs.clone();
            coeffs[0] = self.base.zero();
            self.normalize(0, coeffs)
        } else {
            a.clone()
        };
        Ok((constant, tail))
    }

    pub fn recompose(
        &self,
        constant: &B::Elem,
        tail: &LaurentSeries<B::Elem>,
    ) -> LaurentSeries<B::Elem> {
        self.add(&self.constant(constant), tail)
    }
}

impl<B: Field> Field for LaurentField<B> {
    type Elem = LaurentSeries<B::Elem>;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Laurent {
            base: Box::new(self.base.descriptor()),
            prec: self.prec,
        }
    }

    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    fn is_exact(&self) -> bool {
        self.base.is_exact()
    }

    fn zero(&self) -> Self::Elem {
        LaurentSeries {
            nu: EXACT_ZERO_NU,
            coeffs: Vec::new(),
        }
    }

    fn one(&self) -> Self::Elem {
        self.constant(&self.base.one())
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.constant(&self.base.from_i64(n))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_exact_zero() {
            return b.clone();
        }
        if b.is_exact_zero() {
            return a.clone();
        }
        let known = a.absolute_precision().min(b.absolute_precision());
        let lo = a.nu.min(b.nu);
        let hi = known.min(lo + self.prec as i64);
        let coeffs = (lo..hi)
            .map(|e| {
                let x = self.coeff(a, e).expect("below absolute precision");
                let y = self.coeff(b, e).expect("below absolute precision");
                self.base.add(&x, &y)
            })
            .collect::<Vec<_>>();
        if coeffs.is_empty() {
            return LaurentSeries {
                nu: known,
                coeffs,
            };
        }
        self.normalize(lo, coeffs)
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        LaurentSeries {
            nu: a.nu,
            coeffs: a.coeffs.iter().map(|c| self.base.neg(c)).collect(),
        }
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        if a.is_exact_zero() || b.is_exact_zero() {
            return self.zero();
        }
        let nu = a.nu + b.nu;
        if a.coeffs.is_empty() || b.coeffs.is_empty() {
            // zero modulo t^(nu + shorter length)
            let len = a.coeffs.len().min(b.coeffs.len()) as i64;
            return LaurentSeries {
                nu: nu + len,
                coeffs: Vec::new(),
            };
        }
        let len = a.coeffs.len().min(b.coeffs.len());
        let coeffs = (0..len)
            .map(|k| {
                (0..=k).fold(self.base.zero(), |acc, i| {
                    self.base
                        .add(&acc, &self.base.mul(&a.coeffs[i], &b.coeffs[k - i]))
                })
            })
            .collect();
        self.normalize(nu, coeffs)
    }

    /// Power-series inverse of the unit part, term by term.
    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, FieldError> {
        if a.coeffs.is_empty() {
            return Err(FieldError::DivisionByZero);
        }
        let f = &self.base;
        let lead_inv = f.inv(&a.coeffs[0])?;
        let mut out: Vec<B::Elem> = Vec::with_capacity(a.coeffs.len());
        out.push(lead_inv.clone());
        for k in 1..a.coeffs.len() {
            let s = (1..=k).fold(f.zero(), |acc, i| f.add(&acc, &f.mul(&a.coeffs[i], &out[k - i])));
            out.push(f.neg(&f.mul(&lead_inv, &s)));
        }
        Ok(self.normalize(-a.nu, out))
    }

    fn equals(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        if a.is_exact_zero() && b.is_exact_zero() {
            return true;
        }
        let hi = a.absolute_precision().min(b.absolute_precision());
        let lo = a.nu.min(b.nu);
        (lo..hi).all(|e| {
            let x = self.coeff(a, e).expect("known");
            let y = self.coeff(b, e).expect("known");
            self.base.equals(&x, &y)
        })
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        a.coeffs.is_empty()
    }

    fn contains(&self, a: &Self::Elem) -> bool {
        a.coeffs.len() <= self.prec
            && a.coeffs.first().map_or(true, |c| !self.base.is_zero(c))
            && a.coeffs.iter().all(|c| self.base.contains(c))
    }

    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem {
        let nu = rng.gen_range(-2..=2);
        let mut coeffs: Vec<B::Elem> = (0..self.prec).map(|_| self.base.random(rng)).collect();
        while self.base.is_zero(&coeffs[0]) {
            coeffs[0] = self.base.random(rng);
        }
        LaurentSeries { nu, coeffs }
    }

    fn to_json(&self, a: &Self::Elem) -> Value {
        if a.is_exact_zero() {
            return json!({ "nu": null, "coeffs": [] });
        }
        json!({
            "nu": a.nu,
            "coeffs": a.coeffs.iter().map(|c| self.base.to_json(c)).collect::<Vec<_>>(),
        })
    }

    fn from_json(&self, v: &Value) -> Result<Self::Elem, FieldError> {
        let Value::Object(map) = v else {
            return Ok(self.constant(&self.base.from_json(v)?));
        };
        let coeffs = match map.get("coeffs") {
            Some(Value::Array(items)) => items
                .iter()
                .map(|c| self.base.from_json(c))
                .collect::<Result<Vec<_>, _>>()?,
            _ => return Err(FieldError::Parse(format!("{v} lacks a coeffs array"))),
        };
        match map.get("nu") {
            None | Some(Value::Null) if coeffs.is_empty() => Ok(self.zero()),
            Some(Value::Number(n)) if n.is_i64() => {
                if coeffs.len() > self.prec {
                    return Err(FieldError::Parse(format!(
                        "{} coefficients exceed precision {}",
                        coeffs.len(),
                        self.prec
                    )));
                }
                Ok(self.normalize(n.as_i64().expect("i64"), coeffs))
            }
            _ => Err(FieldError::Parse(format!("{v} has no integer nu"))),
        }
    }

    fn format(&self, a: &Self::Elem) -> String {
        if a.is_exact_zero() {
            return "0".to_string();
        }
        let mut terms: Vec<String> = a
            .coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !self.base.is_zero(c))
            .map(|(i, c)| format!("{}*t^{}", self.base.format(c), a.nu + i as i64))
            .collect();
        terms.push(format!("O(t^{})", a.absolute_precision()));
        terms.join(" + ")
    }

    fn magnitude(&self, a: &Self::Elem) -> f64 {
        self.absolute_value(a)
    }

    fn valuation(&self, a: &Self::Elem) -> Option<i64> {
        self.laurent_valuation(a).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fields::Rationals;

    fn field() -> LaurentField<Rationals> {
        LaurentField::new(&Rationals, 8).unwrap()
    }

    fn ints(f: &LaurentField<Rationals>, nu: i64, cs: &[i64]) -> LaurentSeries<num_rational::BigRational> {
        f.series(nu, cs.iter().map(|&c| Rationals.from_i64(c)).collect())
    }

    #[test]
    fn valuations() {
        let f = field();
        assert_eq!(f.laurent_valuation(&ints(&f, 2, &[1, 1])).unwrap(), 2);
        assert_eq!(f.laurent_valuation(&ints(&f, 0, &[3, 1])).unwrap(), 0);
        let a = ints(&f, 1, &[2, 5, 1]);
        let b = ints(&f, -1, &[7, 0, 3]);
        assert_eq!(f.laurent_valuation(&f.mul(&a, &b)).unwrap(), 0);
        assert_eq!(f.laurent_valuation(&f.zero()), Err(FieldError::ZeroSeries));
        // leading zeros are absorbed into nu
        assert_eq!(ints(&f, 0, &[0, 0, 4]).nu(), 2);
    }

    #[test]
    fn decomposition_examples() {
        let f = field();
        let a = ints(&f, 0, &[5, 2, 0, 1]);
        let (c, tail) = f.residue_decompose(&a).unwrap();
        assert_eq!(c, Rationals.from_i64(5));
        assert!(f.equals(&tail, &ints(&f, 1, &[2, 0, 1])));
        let (c, tail) = f.residue_decompose(&ints(&f, 2, &[1])).unwrap();
        assert_eq!(c, Rationals.zero());
        assert_eq!(tail.nu(), 2);
        assert_eq!(
            f.residue_decompose(&ints(&f, -1, &[1])),
            Err(FieldError::NotInValuationRing(-1))
        );
    }

    #[test]
    fn cancellation_shortens_known_part() {
        let f = field();
        let a = ints(&f, 0, &[1, 2, 3, 4, 5, 6, 7, 8]);
        let b = ints(&f, 0, &[-1, -2, 0, 0, 0, 0, 0, 0]);
        let s = f.add(&a, &b);
        assert_eq!(s.nu(), 2);
        assert_eq!(s.coeffs().len(), 6);
        let z = f.sub(&a, &a);
        assert!(f.is_zero(&z));
        assert_eq!(f.inv(&z), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn inverse_of_one_minus_t() {
        let f = field();
        let a = ints(&f, 0, &[1, -1]);
        let inv = f.inv(&a).unwrap();
        assert!(inv.coeffs().iter().all(|c| *c == Rationals.one()));
        assert!(f.is_one(&f.mul(&a, &inv)));
    }

    #[test]
    fn json_round_trip() {
        let f = field();
        let a = ints(&f, -3, &[1, 0, 2]);
        assert!(f.equals(&f.from_json(&f.to_json(&a)).unwrap(), &a));
        assert_eq!(f.from_json(&f.to_json(&f.zero())).unwrap(), f.zero());
        assert!(f.is_one(&f.from_json(&json!("1/1")).unwrap()));
    }
}
