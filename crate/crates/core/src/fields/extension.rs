use rand::RngCore;
use serde_json::Value;

use super::{Field, FieldDescriptor, FieldError, Polynomial, PrimeField};

/// Simple extension `base[t]/(m)` with `m` monic irreducible.
///
/// Elements are coefficient vectors of length `deg m` in the power basis
/// `1, t, …, t^{d-1}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ExtensionField<B: Field> {
    base: B,
    modulus: Polynomial<B>,
}

impl<B: Field> ExtensionField<B> {
    /// Builds the extension after verifying irreducibility of the modulus.
    pub fn new(base: &B, modulus: Polynomial<B>) -> Result<Self, FieldError> {
        let field = Self::new_unchecked(base, modulus)?;
        if !base.is_irreducible(&field.modulus)? {
            return Err(FieldError::ReducibleModulus);
        }
        Ok(field)
    }

    /// Skips the irreducibility check; the modulus is still made monic.
    pub fn new_unchecked(base: &B, modulus: Polynomial<B>) -> Result<Self, FieldError> {
        match modulus.degree() {
            None => return Err(FieldError::ZeroPolynomial),
            Some(0) => return Err(FieldError::ConstantModulus),
            Some(_) => {}
        }
        Ok(ExtensionField {
            base: base.clone(),
            modulus: modulus.make_monic()?,
        })
    }

    pub fn base(&self) -> &B {
        &self.base
    }

    pub fn modulus(&self) -> &Polynomial<B> {
        &self.modulus
    }

    /// The extension degree `[Φ : base]`.
    pub fn degree(&self) -> usize {
        self.modulus.degree().expect("modulus has a degree")
    }

    /// Image of a base scalar.
    pub fn embed(&self, c: &B::Elem) -> Vec<B::Elem> {
        let mut v = vec![self.base.zero(); self.degree()];
        v[0] = c.clone();
        v
    }

    /// The class of `t`.
    pub fn generator(&self) -> Vec<B::Elem> {
        self.reduce(&Polynomial::monomial(&self.base, self.base.one(), 1))
    }

    /// Residue of an arbitrary polynomial modulo the modulus.
    pub fn reduce(&self, f: &Polynomial<B>) -> Vec<B::Elem> {
        let r = f.div_rem(&self.modulus).expect("monic modulus").1;
        (0..self.degree()).map(|i| r.coeff(i)).collect()
    }

    pub fn to_poly(&self, a: &[B::Elem]) -> Polynomial<B> {
        Polynomial::new(&self.base, a.to_vec())
    }

    /// Power-basis coordinates, padded to the full degree.
    pub fn from_coords(&self, coords: &[B::Elem]) -> Result<Vec<B::Elem>, FieldError> {
        if coords.len() > self.degree() || !coords.iter().all(|c| self.base.contains(c)) {
            return Err(FieldError::FieldMismatch);
        }
        let mut v = coords.to_vec();
        v.resize(self.degree(), self.base.zero());
        Ok(v)
    }
}

impl ExtensionField<PrimeField> {
    /// 𝔽_{p^k}, using the lexicographically first monic irreducible of degree k.
    pub fn galois(p: u64, k: usize) -> Result<Self, FieldError> {
        let base = PrimeField::new(p)?;
        if k == 0 {
            return Err(FieldError::ConstantModulus);
        }
        for m in Polynomial::monic_of_degree(&base, k)? {
            if base.is_irreducible(&m)? {
                return Self::new_unchecked(&base, m);
            }
        }
        unreachable!("irreducible polynomials exist in every degree")
    }
}

impl<B: Field> Field for ExtensionField<B> {
    type Elem = Vec<B::Elem>;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Extension {
            base: Box::new(self.base.descriptor()),
            modulus: self
                .modulus
                .coeffs()
                .iter()
                .map(|c| self.base.to_json(c))
                .collect(),
        }
    }

    fn characteristic(&self) -> u64 {
        self.base.characteristic()
    }

    fn is_exact(&self) -> bool {
        self.base.is_exact()
    }

    fn order(&self) -> Option<u64> {
        self.base
            .order()
            .and_then(|q| q.checked_pow(self.degree() as u32))
    }

    fn zero(&self) -> Self::Elem {
        vec![self.base.zero(); self.degree()]
    }

    fn one(&self) -> Self::Elem {
        self.embed(&self.base.one())
    }

    fn from_i64(&self, n: i64) -> Self::Elem {
        self.embed(&self.base.from_i64(n))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.base.add(x, y)).collect()
    }

    fn neg(&self, a: &Self::Elem) -> Self::Elem {
        a.iter().map(|x| self.base.neg(x)).collect()
    }

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        a.iter().zip(b).map(|(x, y)| self.base.sub(x, y)).collect()
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        let f = &self.base;
        let d = self.degree();
        let mut prod = vec![f.zero(); 2 * d - 1];
        for (i, x) in a.iter().enumerate() {
            if f.is_zero(x) {
                continue;
            }
            for (j, y) in b.iter().enumerate() {
                prod[i + j] = f.add(&prod[i + j], &f.mul(x, y));
            }
        }
        // fold t^k for k >= d back with the monic modulus
        let m = self.modulus.coeffs();
        for k in (d..prod.len()).rev() {
            let c = prod[k].clone();
            if f.is_zero(&c) {
                continue;
            }
            for (i, mi) in m[..d].iter().enumerate() {
                prod[k - d + i] = f.sub(&prod[k - d + i], &f.mul(&c, mi));
            }
        }
        prod.truncate(d);
        prod
    }

    fn inv(&self, a: &Self::Elem) -> Result<Self::Elem, FieldError> {
        if self.is_zero(a) {
            return Err(FieldError::DivisionByZero);
        }
        let inv = self.to_poly(a).inverse_mod(&self.modulus)?;
        Ok(self.reduce(&inv))
    }

    fn equals(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        a.len() == b.len() && a.iter().zip(b).all(|(x, y)| self.base.equals(x, y))
    }

    fn contains(&self, a: &Self::Elem) -> bool {
        a.len() == self.degree() && a.iter().all(|c| self.base.contains(c))
    }

    fn elements(&self) -> Option<Vec<Self::Elem>> {
        let base = self.base.elements()?;
        let q = base.len();
        let total = self.order()? as usize;
        // little-endian digits, so index 1 is the unit
        Some(
            (0..total)
                .map(|mut idx| {
                    (0..self.degree())
                        .map(|_| {
                            let c = base[idx % q].clone();
                            idx /= q;
                            c
                        })
                        .collect()
                })
                .collect(),
        )
    }

    fn random(&self, rng: &mut dyn RngCore) -> Self::Elem {
        (0..self.degree()).map(|_| self.base.random(rng)).collect()
    }

    fn to_json(&self, a: &Self::Elem) -> Value {
        Value::Array(a.iter().map(|c| self.base.to_json(c)).collect())
    }

    fn from_json(&self, v: &Value) -> Result<Self::Elem, FieldError> {
        match v {
            Value::Array(items) => {
                let coords = items
                    .iter()
                    .map(|c| self.base.from_json(c))
                    .collect::<Result<Vec<_>, _>>()?;
                self.from_coords(&coords)
                    .map_err(|_| FieldError::Parse(format!("{v} has more than {} coordinates", self.degree())))
            }
            other => Ok(self.embed(&self.base.from_json(other)?)),
        }
    }

    fn format(&self, a: &Self::Elem) -> String {
        let p = self.to_poly(a);
        if p.coeffs().len() > 1 {
            format!("({p})")
        } else {
            p.to_string()
        }
    }

    fn magnitude(&self, a: &Self::Elem) -> f64 {
        a.iter().map(|c| self.base.magnitude(c)).fold(0.0, f64::max)
    }
}
