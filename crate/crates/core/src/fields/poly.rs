use std::fmt;

use super::{Field, FieldError};

/// Univariate polynomial over a field, coefficients stored low-to-high.
///
/// The coefficient list never ends in a zero, so the zero polynomial has
/// an empty list and no degree.
#[derive(Clone, Debug, PartialEq)]
pub struct Polynomial<F: Field> {
    field: F,
    coeffs: Vec<F::Elem>,
    var: String,
}

impl<F: Field> Polynomial<F> {
    pub fn new(field: &F, coeffs: Vec<F::Elem>) -> Self {
        let mut p = Polynomial {
            field: field.clone(),
            coeffs,
            var: "t".to_string(),
        };
        p.trim();
        p
    }

    pub fn from_i64s(field: &F, coeffs: &[i64]) -> Self {
        Self::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: &F) -> Self {
        Self::new(field, Vec::new())
    }

    /// `c · var^degree`
    pub fn monomial(field: &F, c: F::Elem, degree: usize) -> Self {
        let mut coeffs = vec![field.zero(); degree + 1];
        coeffs[degree] = c;
        Self::new(field, coeffs)
    }

    pub fn with_var(mut self, var: &str) -> Self {
        self.var = var.to_string();
        self
    }

    fn trim(&mut self) {
        while let Some(last) = self.coeffs.last() {
            if self.field.is_zero(last) {
                self.coeffs.pop();
            } else {
                break;
            }
        }
    }

    pub fn field(&self) -> &F {
        &self.field
    }

    pub fn var(&self) -> &str {
        &self.var
    }

    pub fn coeffs(&self) -> &[F::Elem] {
        &self.coeffs
    }

    /// Coefficient of `var^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> F::Elem {
        self.coeffs.get(i).cloned().unwrap_or_else(|| self.field.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&F::Elem> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| self.field.is_one(c))
    }

    pub fn make_monic(&self) -> Result<Self, FieldError> {
        let lead = self.leading().ok_or(FieldError::ZeroPolynomial)?;
        let inv = self.field.inv(lead)?;
        Ok(self.scale(&inv))
    }

    /// Horner evaluation.
    pub fn eval(&self, x: &F::Elem) -> F::Elem {
        let f = &self.field;
        self.coeffs
            .iter()
            .rev()
            .fold(f.zero(), |acc, c| f.add(&f.mul(&acc, x), c))
    }

    pub fn scale(&self, c: &F::Elem) -> Self {
        let f = &self.field;
        Self::new(f, self.coeffs.iter().map(|a| f.mul(a, c)).collect()).with_var(&self.var)
    }

    pub fn add(&self, other: &Self) -> Self {
        let f = &self.field;
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| f.add(&self.coeff(i), &other.coeff(i))).collect();
        Self::new(f, coeffs).with_var(&self.var)
    }

    pub fn neg(&self) -> Self {
        let f = &self.field;
        Self::new(f, self.coeffs.iter().map(|a| f.neg(a)).collect()).with_var(&self.var)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        let f = &self.field;
        if self.is_zero() || other.is_zero() {
            return Self::zero(f).with_var(&self.var);
        }
        let mut out = vec![f.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(&out[i + j], &f.mul(a, b));
            }
        }
        Self::new(f, out).with_var(&self.var)
    }

    /// Euclidean division: `self = q · divisor + r` with `deg r < deg divisor`.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self), FieldError> {
        let f = &self.field;
        let dd = divisor.degree().ok_or(FieldError::DivisionByZero)?;
        let lead_inv = f.inv(divisor.leading().expect("nonzero divisor"))?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(f).with_var(&self.var), self.clone()));
        }
        let mut quot = vec![f.zero(); rem.len() - dd];
        for shift in (0..quot.len()).rev() {
            let c = f.mul(&rem[shift + dd], &lead_inv);
            if f.is_zero(&c) {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] = f.sub(&rem[shift + i], &f.mul(&c, d));
            }
            quot[shift] = c;
        }
        rem.truncate(dd);
        Ok((
            Self::new(f, quot).with_var(&self.var),
            Self::new(f, rem).with_var(&self.var),
        ))
    }

    /// Inverse of `self` modulo `modulus`, via the extended Euclidean algorithm.
    pub fn inverse_mod(&self, modulus: &Self) -> Result<Self, FieldError> {
        let f = &self.field;
        let (mut r0, mut r1) = (modulus.clone(), self.div_rem(modulus)?.1);
        let (mut s0, mut s1) = (Self::zero(f), Self::new(f, vec![f.one()]));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 is the gcd; a unit exactly when it is a nonzero constant
        if r0.degree() != Some(0) {
            return Err(FieldError::DivisionByZero);
        }
        let c = f.inv(&r0.coeffs[0])?;
        Ok(s0.scale(&c).div_rem(modulus)?.1.with_var(&self.var))
    }

    /// Every monic polynomial of the given degree over a finite field, in
    /// lexicographic order of the lower coefficients.
    pub fn monic_of_degree(field: &F, degree: usize) -> Result<Vec<Self>, FieldError> {
        let elems = field
            .elements()
            .ok_or_else(|| FieldError::UnsupportedField(field.descriptor().to_string()))?;
        let q = elems.len();
        let count = q
            .checked_pow(degree as u32)
            .ok_or(FieldError::DegreeLimit { degree, limit: 0 })?;
        let mut out = Vec::with_capacity(count);
        for mut idx in 0..count {
            let mut coeffs = Vec::with_capacity(degree + 1);
            for _ in 0..degree {
                coeffs.push(elems[idx % q].clone());
                idx /= q;
            }
            coeffs.push(field.one());
            out.push(Self::new(field, coeffs));
        }
        Ok(out)
    }
}

impl<F: Field> fmt::Display for Polynomial<F> {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(out, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if self.field.is_zero(c) {
                continue;
            }
            let mut coeff = self.field.format(c);
            let negative = coeff.starts_with('-');
            if negative {
                coeff.remove(0);
            }
            match (first, negative) {
                (true, true) => write!(out, "-")?,
                (true, false) => {}
                (false, true) => write!(out, " - ")?,
                (false, false) => write!(out, " + ")?,
            }
            first = false;
            let unit = coeff == self.field.format(&self.field.one());
            match i {
                0 => write!(out, "{coeff}")?,
                _ => {
                    if !unit {
                        write!(out, "({coeff})")?;
                    }
                    write!(out, "{}", self.var)?;
                    if i > 1 {
                        write!(out, "^{i}")?;
                    }
                }
            }
        }
        Ok(())
    }
}
