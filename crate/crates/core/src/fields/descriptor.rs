use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{json, Value};

use super::laurent::DEFAULT_LAURENT_PRECISION;
use super::{
    ExtensionField, Field, FieldError, LaurentField, Polynomial, PrimeField, Rationals, Reals,
    DEFAULT_REAL_TOLERANCE,
};

/// Serializable name of a coefficient field.
///
/// JSON forms: `{"kind":"rationals"}`, `{"kind":"prime","p":3}`,
/// `{"kind":"ext","p":3,"modulus":[-1,-1,0,1]}` (coefficients low-to-high;
/// a `"base"` descriptor may replace `"p"`), `{"kind":"real","tol":1e-10}`,
/// `{"kind":"laurent","base":…,"prec":16}`.
#[derive(Debug, Clone, PartialEq)]
pub enum FieldDescriptor {
    Rationals,
    Prime { p: u64 },
    Extension { base: Box<FieldDescriptor>, modulus: Vec<Value> },
    Reals { tol: f64 },
    Laurent { base: Box<FieldDescriptor>, prec: usize },
}

impl FieldDescriptor {
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldDescriptor::Rationals | FieldDescriptor::Reals { .. } => 0,
            FieldDescriptor::Prime { p } => *p,
            FieldDescriptor::Extension { base, .. } | FieldDescriptor::Laurent { base, .. } => {
                base.characteristic()
            }
        }
    }

    pub fn is_exact(&self) -> bool {
        match self {
            FieldDescriptor::Reals { .. } => false,
            FieldDescriptor::Extension { base, .. } | FieldDescriptor::Laurent { base, .. } => {
                base.is_exact()
            }
            _ => true,
        }
    }

    pub fn to_json(&self) -> Value {
        match self {
            FieldDescriptor::Rationals => json!({ "kind": "rationals" }),
            FieldDescriptor::Prime { p } => json!({ "kind": "prime", "p": p }),
            FieldDescriptor::Extension { base, modulus } => match **base {
                FieldDescriptor::Prime { p } => json!({ "kind": "ext", "p": p, "modulus": modulus }),
                ref other => json!({ "kind": "ext", "base": other.to_json(), "modulus": modulus }),
            },
            FieldDescriptor::Reals { tol } => json!({ "kind": "real", "tol": tol }),
            FieldDescriptor::Laurent { base, prec } => {
                json!({ "kind": "laurent", "base": base.to_json(), "prec": prec })
            }
        }
    }

    pub fn from_json(v: &Value) -> Result<Self, FieldError> {
        let bad = |why: &str| FieldError::Descriptor(format!("{why} in {v}"));
        let kind = v.get("kind").and_then(Value::as_str).ok_or_else(|| bad("missing kind"))?;
        let p = || v.get("p").and_then(Value::as_u64).ok_or_else(|| bad("missing p"));
        let base = || -> Result<Box<FieldDescriptor>, FieldError> {
            match v.get("base") {
                Some(b) => Ok(Box::new(FieldDescriptor::from_json(b)?)),
                None => Ok(Box::new(FieldDescriptor::Prime { p: p()? })),
            }
        };
        Ok(match kind {
            "rationals" => FieldDescriptor::Rationals,
            "prime" => FieldDescriptor::Prime { p: p()? },
            "ext" => FieldDescriptor::Extension {
                base: base()?,
                modulus: v
                    .get("modulus")
                    .and_then(Value::as_array)
                    .cloned()
                    .ok_or_else(|| bad("missing modulus"))?,
            },
            "real" => FieldDescriptor::Reals {
                tol: v.get("tol").and_then(Value::as_f64).unwrap_or(DEFAULT_REAL_TOLERANCE),
            },
            "laurent" => FieldDescriptor::Laurent {
                base: Box::new(FieldDescriptor::from_json(
                    v.get("base").ok_or_else(|| bad("missing base"))?,
                )?),
                prec: v
                    .get("prec")
                    .map(|p| p.as_u64().ok_or_else(|| bad("non-integer prec")))
                    .transpose()?
                    .map_or(DEFAULT_LAURENT_PRECISION, |p| p as usize),
            },
            other => return Err(bad(&format!("unknown kind {other:?}"))),
        })
    }

    /// Parses JSON or a shorthand: `Q`, `R`, `Fq`/`GF(q)` for a prime power
    /// `q`, `Q((t))` and `Fp((t))`.
    pub fn parse(s: &str) -> Result<Self, FieldError> {
        let s = s.trim();
        if s.starts_with('{') {
            let v: Value =
                serde_json::from_str(s).map_err(|e| FieldError::Descriptor(e.to_string()))?;
            return Self::from_json(&v);
        }
        if let Some(inner) = s.strip_suffix("((t))") {
            return Ok(FieldDescriptor::Laurent {
                base: Box::new(Self::parse(inner)?),
                prec: DEFAULT_LAURENT_PRECISION,
            });
        }
        match s {
            "Q" | "QQ" | "rationals" => return Ok(FieldDescriptor::Rationals),
            "R" | "RR" | "reals" => {
                return Ok(FieldDescriptor::Reals {
                    tol: DEFAULT_REAL_TOLERANCE,
                })
            }
            _ => {}
        }
        let q = s
            .strip_prefix("GF(")
            .and_then(|r| r.strip_suffix(')'))
            .or_else(|| s.strip_prefix('F'))
            .and_then(|n| n.parse::<u64>().ok())
            .ok_or_else(|| FieldError::Descriptor(format!("unrecognized field {s:?}")))?;
        Self::finite(q)
    }

    /// The field with `q` elements, `q` a prime power.
    pub fn finite(q: u64) -> Result<Self, FieldError> {
        let (p, k) = prime_power(q).ok_or(FieldError::NotPrime(q))?;
        if k == 1 {
            return Ok(FieldDescriptor::Prime { p });
        }
        Ok(ExtensionField::galois(p, k)?.descriptor())
    }

    pub fn build(&self) -> Result<AnyField, FieldError> {
        Ok(match self {
            FieldDescriptor::Rationals => AnyField::Rationals(Rationals),
            FieldDescriptor::Prime { p } => AnyField::Prime(PrimeField::new(*p)?),
            FieldDescriptor::Reals { tol } => AnyField::Reals(Reals::with_tolerance(*tol)),
            FieldDescriptor::Extension { base, modulus } => match base.build()? {
                AnyField::Prime(b) => AnyField::PrimeExt(extension(&b, modulus)?),
                AnyField::Rationals(b) => AnyField::RationalExt(extension(&b, modulus)?),
                AnyField::Reals(b) => AnyField::RealExt(extension(&b, modulus)?),
                _ => return Err(unsupported(self)),
            },
            FieldDescriptor::Laurent { base, prec } => match base.build()? {
                AnyField::Prime(b) => AnyField::LaurentPrime(LaurentField::new(&b, *prec)?),
                AnyField::Rationals(b) => AnyField::LaurentRationals(LaurentField::new(&b, *prec)?),
                _ => return Err(unsupported(self)),
            },
        })
    }
}

fn unsupported(d: &FieldDescriptor) -> FieldError {
    FieldError::Descriptor(format!("no backend for {d}"))
}

fn extension<B: Field>(base: &B, modulus: &[Value]) -> Result<ExtensionField<B>, FieldError> {
    let coeffs = modulus
        .iter()
        .map(|c| base.from_json(c))
        .collect::<Result<Vec<_>, _>>()?;
    ExtensionField::new(base, Polynomial::new(base, coeffs))
}

fn prime_power(q: u64) -> Option<(u64, usize)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let (mut rest, mut k) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        k += 1;
    }
    (rest == 1).then_some((p, k))
}

impl fmt::Display for FieldDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldDescriptor::Rationals => write!(f, "Q"),
            FieldDescriptor::Prime { p } => write!(f, "F{p}"),
            FieldDescriptor::Extension { base, modulus } => {
                let m: Vec<String> = modulus.iter().map(|c| c.to_string()).collect();
                write!(f, "{base}[t]/({})", m.join(","))
            }
            FieldDescriptor::Reals { .. } => write!(f, "R"),
            FieldDescriptor::Laurent { base, .. } => write!(f, "{base}((t))"),
        }
    }
}

impl Serialize for FieldDescriptor {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for FieldDescriptor {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let v = Value::deserialize(d)?;
        FieldDescriptor::from_json(&v).map_err(serde::de::Error::custom)
    }
}

/// A field realized from a descriptor at run time.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyField {
    Rationals(Rationals),
    Prime(PrimeField),
    PrimeExt(ExtensionField<PrimeField>),
    RationalExt(ExtensionField<Rationals>),
    RealExt(ExtensionField<Reals>),
    Reals(Reals),
    LaurentRationals(LaurentField<Rationals>),
    LaurentPrime(LaurentField<PrimeField>),
}

/// Runs `$body` with `$f` bound to the concrete field inside an [`AnyField`].
#[macro_export]
macro_rules! with_field {
    ($any:expr, $f:ident => $body:expr) => {
        match $any {
            $crate::fields::AnyField::Rationals($f) => $body,
            $crate::fields::AnyField::Prime($f) => $body,
            $crate::fields::AnyField::PrimeExt($f) => $body,
            $crate::fields::AnyField::RationalExt($f) => $body,
            $crate::fields::AnyField::RealExt($f) => $body,
            $crate::fields::AnyField::Reals($f) => $body,
            $crate::fields::AnyField::LaurentRationals($f) => $body,
            $crate::fields::AnyField::LaurentPrime($f) => $body,
        }
    };
}

impl AnyField {
    pub fn descriptor(&self) -> FieldDescriptor {
        with_field!(self, f => f.descriptor())
    }
}
