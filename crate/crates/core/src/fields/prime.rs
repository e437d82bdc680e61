use rand::{Rng, RngCore};
use serde_json::Value;

use super::{Field, FieldDescriptor, FieldError};

/// Trial-division primality test.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// The prime field 𝔽_p; elements are residues in `[0, p)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PrimeField {
    p: u64,
}

impl PrimeField {
    /// Primes up to 2³² are accepted so products fit in a `u64`.
    pub fn new(p: u64) -> Result<Self, FieldError> {
        if !is_prime(p) || p > u32::MAX as u64 {
            return Err(FieldError::NotPrime(p));
        }
        Ok(PrimeField { p })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn reduce(&self, n: i64) -> u64 {
        n.rem_euclid(self.p as i64) as u64
    }

    /// Representative in `(-p/2, p/2]`, for readable output.
    pub fn balanced(&self, a: u64) -> i64 {
        if a > self.p / 2 {
            a as i64 - self.p as i64
        } else {
            a as i64
        }
    }
}

impl Field for PrimeField {
    type Elem = u64;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Prime { p: self.p }
    }

    fn characteristic(&self) -> u64 {
        self.p
    }

    fn order(&self) -> Option<u64> {
        Some(self.p)
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1 % self.p
    }

    fn from_i64(&self, n: i64) -> u64 {
        self.reduce(n)
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        (a + b) % self.p
    }

    fn neg(&self, a: &u64) -> u64 {
        (self.p - a) % self.p
    }

    fn sub(&self, a: &u64, b: &u64) -> u64 {
        (a + self.p - b) % self.p
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        a * b % self.p
    }

    fn inv(&self, a: &u64) -> Result<u64, FieldError> {
        if *a == 0 {
            return Err(FieldError::DivisionByZero);
        }
        Ok(self.pow(a, self.p - 2))
    }

    fn contains(&self, a: &u64) -> bool {
        *a < self.p
    }

    fn elements(&self) -> Option<Vec<u64>> {
        Some((0..self.p).collect())
    }

    fn random(&self, rng: &mut dyn RngCore) -> u64 {
        rng.gen_range(0..self.p)
    }

    fn to_json(&self, a: &u64) -> Value {
        Value::from(*a)
    }

    fn from_json(&self, v: &Value) -> Result<u64, FieldError> {
        match v {
            Value::Number(n) => n
                .as_i64()
                .map(|n| self.reduce(n))
                .ok_or_else(|| FieldError::Parse(format!("{v} is not an integer"))),
            Value::String(s) => s
                .trim()
                .parse::<i64>()
                .map(|n| self.reduce(n))
                .map_err(|_| FieldError::Parse(format!("{s:?} is not an integer"))),
            _ => Err(FieldError::Parse(format!("{v} is not an element of F_{}", self.p))),
        }
    }

    fn format(&self, a: &u64) -> String {
        a.to_string()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_times_two_in_f3() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(f.mul(&2, &2), 1);
    }

    #[test]
    fn rejects_composites() {
        assert_eq!(PrimeField::new(9), Err(FieldError::NotPrime(9)));
        assert_eq!(PrimeField::new(1), Err(FieldError::NotPrime(1)));
    }

    #[test]
    fn inverse_and_zero() {
        let f = PrimeField::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(&a, &f.inv(&a).unwrap()), 1);
        }
        assert_eq!(f.inv(&0), Err(FieldError::DivisionByZero));
    }

    #[test]
    fn json_reduces_negative_integers() {
        let f = PrimeField::new(3).unwrap();
        assert_eq!(f.from_json(&serde_json::json!(-1)).unwrap(), 2);
        assert_eq!(f.from_json(&serde_json::json!("4")).unwrap(), 1);
        assert!(f.from_json(&serde_json::json!(1.5)).is_err());
    }
}
