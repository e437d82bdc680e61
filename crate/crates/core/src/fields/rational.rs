use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, RngCore};
use serde_json::Value;

use super::{is_prime, Field, FieldDescriptor, FieldError, Polynomial};

/// Root search over ℚ enumerates divisor pairs, so it is capped by degree.
pub const MAX_RATIONAL_ROOT_DEGREE: usize = 6;

/// The rational numbers with arbitrary-precision fractions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Rationals;

impl Rationals {
    pub fn ratio(&self, num: i64, den: i64) -> BigRational {
        BigRational::new(num.into(), den.into())
    }
}

fn parse_rational(s: &str) -> Result<BigRational, FieldError> {
    let bad = || FieldError::Parse(format!("{s:?} is not a rational number"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl Field for Rationals {
    type Elem = BigRational;

    fn descriptor(&self) -> FieldDescriptor {
        FieldDescriptor::Rationals
    }

    fn characteristic(&self) -> u64 {
        0
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(n.into())
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Result<BigRational, FieldError> {
        if a.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(a.recip())
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn contains(&self, _a: &BigRational) -> bool {
        true
    }

    fn random(&self, rng: &mut dyn RngCore) -> BigRational {
        self.ratio(rng.gen_range(-9..=9), rng.gen_range(1..=9))
    }

    fn to_json(&self, a: &BigRational) -> Value {
        Value::String(format!("{}/{}", a.numer(), a.denom()))
    }

    fn from_json(&self, v: &Value) -> Result<BigRational, FieldError> {
        match v {
            Value::String(s) => parse_rational(s),
            Value::Number(n) if n.is_i64() || n.is_u64() => parse_rational(&n.to_string()),
            _ => Err(FieldError::Parse(format!("{v} is not a rational scalar"))),
        }
    }

    fn format(&self, a: &BigRational) -> String {
        a.to_string()
    }

    fn find_root(&self, f: &Polynomial<Self>) -> Result<Option<BigRational>, FieldError> {
        Ok(rational_roots(f)?.into_iter().next())
    }

    fn is_irreducible(&self, f: &Polynomial<Self>) -> Result<bool, FieldError> {
        let degree = f.degree().ok_or(FieldError::ZeroPolynomial)?;
        if degree <= 3 {
            return Ok(match degree {
                0 => false,
                1 => true,
                _ => self.find_root(f)?.is_none(),
            });
        }
        let ints = cleared_integers(f);
        let constant = ints[0].abs().to_biguint().expect("absolute value");
        for p in prime_factors(&constant)? {
            let scaled = Polynomial::new(
                self,
                ints.iter().map(|c| BigRational::from_integer(c.clone())).collect(),
            );
            if eisenstein_irreducible(&scaled, p)? {
                return Ok(true);
            }
        }
        Err(FieldError::IrreducibilityUnknown(format!(
            "no Eisenstein prime certifies {f} over Q"
        )))
    }
}

/// Integer polynomial with the same roots: multiply through by the lcm of
/// the denominators.
fn cleared_integers(f: &Polynomial<Rationals>) -> Vec<BigInt> {
    let lcm = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    f.coeffs()
        .iter()
        .map(|c| (c * BigRational::from_integer(lcm.clone())).to_integer())
        .collect()
}

fn small(n: &BigUint) -> Result<u64, FieldError> {
    n.to_u64().ok_or_else(|| {
        FieldError::UnsupportedField(format!("coefficient {n} too large for divisor enumeration"))
    })
}

fn divisors(n: &BigUint) -> Result<Vec<u64>, FieldError> {
    let n = small(n)?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    Ok(out)
}

fn prime_factors(n: &BigUint) -> Result<Vec<u64>, FieldError> {
    Ok(divisors(n)?.into_iter().filter(|&d| is_prime(d)).collect())
}

/// All distinct rational roots, by the rational root theorem.
pub fn rational_roots(f: &Polynomial<Rationals>) -> Result<Vec<BigRational>, FieldError> {
    let degree = f.degree().ok_or(FieldError::ZeroPolynomial)?;
    if degree > MAX_RATIONAL_ROOT_DEGREE {
        return Err(FieldError::DegreeLimit {
            degree,
            limit: MAX_RATIONAL_ROOT_DEGREE,
        });
    }
    let mut ints = cleared_integers(f);
    let mut roots = Vec::new();
    // factor out t^k so the constant term is nonzero
    let zeros = ints.iter().take_while(|c| c.is_zero()).count();
    if zeros > 0 {
        roots.push(BigRational::zero());
        ints.drain(..zeros);
    }
    if ints.len() < 2 {
        return Ok(roots);
    }
    let reduced = Polynomial::new(
        &Rationals,
        ints.iter().map(|c| BigRational::from_integer(c.clone())).collect(),
    );
    let lead = ints.last().expect("nonempty").abs().to_biguint().expect("abs");
    let constant = ints[0].abs().to_biguint().expect("abs");
    for num in divisors(&constant)? {
        for den in divisors(&lead)? {
            for sign in [1i64, -1] {
                let candidate = BigRational::new(
                    BigInt::from(num) * BigInt::from(sign),
                    BigInt::from(den),
                );
                if reduced.eval(&candidate).is_zero() && !roots.contains(&candidate) {
                    roots.push(candidate);
                }
            }
        }
    }
    Ok(roots)
}

/// Eisenstein's criterion at the prime `p` for an integer polynomial.
pub fn eisenstein_irreducible(f: &Polynomial<Rationals>, p: u64) -> Result<bool, FieldError> {
    if !is_prime(p) {
        return Err(FieldError::NotPrime(p));
    }
    if f.coeffs().iter().any(|c| !c.is_integer()) {
        return Err(FieldError::NotIntegerCoefficients);
    }
    let degree = f.degree().ok_or(FieldError::ZeroPolynomial)?;
    if degree == 0 {
        return Ok(false);
    }
    let p = BigInt::from(p);
    let ints: Vec<BigInt> = f.coeffs().iter().map(|c| c.to_integer()).collect();
    let divides = |c: &BigInt| (c % &p).is_zero();
    Ok(ints[..degree].iter().all(divides)
        && !divides(&ints[degree])
        && !(&ints[0] % (&p * &p)).is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        Rationals.ratio(n, d)
    }

    #[test]
    fn third_plus_sixth() {
        assert_eq!(Rationals.add(&q(1, 3), &q(1, 6)), q(1, 2));
    }

    #[test]
    fn cube_minus_two_has_no_rational_root() {
        let f = Polynomial::from_i64s(&Rationals, &[-2, 0, 0, 1]);
        assert_eq!(Rationals.find_root(&f).unwrap(), None);
    }

    #[test]
    fn square_minus_one_roots() {
        let f = Polynomial::from_i64s(&Rationals, &[-1, 0, 1]);
        let roots = rational_roots(&f).unwrap();
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&q(1, 1)) && roots.contains(&q(-1, 1)));
    }

    #[test]
    fn fractional_roots_and_zero_root() {
        // (2t - 1)(3t + 2) t = 6t^3 + t^2 - 2t
        let f = Polynomial::from_i64s(&Rationals, &[0, -2, 1, 6]);
        let mut roots = rational_roots(&f).unwrap();
        roots.sort();
        assert_eq!(roots, vec![q(-2, 3), q(0, 1), q(1, 2)]);
        // non-integer coefficients are cleared first
        let g = Polynomial::new(&Rationals, vec![q(-1, 4), q(0, 1), q(1, 1)]);
        assert_eq!(rational_roots(&g).unwrap().len(), 2);
    }

    #[test]
    fn degree_cap() {
        let f = Polynomial::from_i64s(&Rationals, &[1, 0, 0, 0, 0, 0, 0, 1]);
        assert!(matches!(
            rational_roots(&f),
            Err(FieldError::DegreeLimit { degree: 7, limit: 6 })
        ));
    }

    #[test]
    fn eisenstein_examples() {
        let cube = Polynomial::from_i64s(&Rationals, &[-2, 0, 0, 1]);
        assert!(eisenstein_irreducible(&cube, 2).unwrap());
        let square = Polynomial::from_i64s(&Rationals, &[-1, 0, 1]);
        assert!(!eisenstein_irreducible(&square, 2).unwrap());
        let quintic = Polynomial::from_i64s(&Rationals, &[3, 6, 0, 0, 0, 1]);
        assert!(eisenstein_irreducible(&quintic, 3).unwrap());
        let frac = Polynomial::new(&Rationals, vec![q(1, 2), q(1, 1)]);
        assert_eq!(
            eisenstein_irreducible(&frac, 2),
            Err(FieldError::NotIntegerCoefficients)
        );
    }

    #[test]
    fn irreducibility_over_q() {
        let quintic = Polynomial::from_i64s(&Rationals, &[3, 6, 0, 0, 0, 1]);
        assert!(Rationals.is_irreducible(&quintic).unwrap());
        let cube = Polynomial::from_i64s(&Rationals, &[-8, 0, 0, 1]);
        assert!(!Rationals.is_irreducible(&cube).unwrap());
        let quartic = Polynomial::from_i64s(&Rationals, &[1, 0, 0, 0, 1]);
        assert!(matches!(
            Rationals.is_irreducible(&quartic),
            Err(FieldError::IrreducibilityUnknown(_))
        ));
    }

    #[test]
    fn json_forms() {
        assert_eq!(Rationals.to_json(&q(-4, 6)), Value::String("-2/3".into()));
        assert_eq!(Rationals.from_json(&serde_json::json!("6/4")).unwrap(), q(3, 2));
        assert_eq!(Rationals.from_json(&serde_json::json!(5)).unwrap(), q(5, 1));
        assert!(Rationals.from_json(&serde_json::json!("1/0")).is_err());
    }
}
