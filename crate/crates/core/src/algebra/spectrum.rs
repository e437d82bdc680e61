//! Which of 0 and 1 are eigenvalues of the quadratic operator.
//!
//! If `Vx = λx` with `λ ≠ 0`, then `V(cx) = cλ·cx`, so every nonzero scalar
//! is an eigenvalue and `x/λ` is an idempotent; an eigenvalue 0 is an
//! absolute nilpotent. The point spectrum is therefore decided by
//! `σ_p = σ ∩ {0, 1}`.

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::fields::{ExtensionField, Field, LaurentField, PrimeField, Rationals, Reals};
use crate::solver::{
    find_real_eigenpairs, find_real_nilpotent, projective_point_count, solve_exact_dim2,
    ProjectivePoints, SolveConfig,
};

use super::{AlgebraElement, StructureTensor};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SigmaDescription {
    /// No eigenvector at all.
    Empty,
    /// Only absolute nilpotents.
    ZeroOnly,
    /// Every nonzero scalar, no absolute nilpotent.
    AllNonzero,
    /// Every scalar.
    AllOfF,
}

impl SigmaDescription {
    pub fn from_sigma_p(zero: bool, one: bool) -> Self {
        match (zero, one) {
            (false, false) => SigmaDescription::Empty,
            (true, false) => SigmaDescription::ZeroOnly,
            (false, true) => SigmaDescription::AllNonzero,
            (true, true) => SigmaDescription::AllOfF,
        }
    }

    /// The eigenvalue set this description stands for, as a subset of a
    /// finite field's element list.
    pub fn eigenvalues<F: Field>(self, field: &F) -> Option<Vec<F::Elem>> {
        let all = field.elements()?;
        Some(match self {
            SigmaDescription::Empty => Vec::new(),
            SigmaDescription::ZeroOnly => vec![field.zero()],
            SigmaDescription::AllNonzero => all.into_iter().filter(|c| !field.is_zero(c)).collect(),
            SigmaDescription::AllOfF => all,
        })
    }
}

/// Idempotent / absolute nilpotent witnesses found by a search.
#[derive(Clone, Debug, PartialEq)]
pub struct Witnesses<F: Field> {
    pub idempotent: Option<AlgebraElement<F>>,
    pub nilpotent: Option<AlgebraElement<F>>,
    /// Found by a numerical search, so a missing witness is not a proof.
    pub numeric: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct SpectrumReport<F: Field> {
    pub zero_in_sigma: bool,
    pub one_in_sigma: bool,
    pub description: SigmaDescription,
    pub idempotent: Option<AlgebraElement<F>>,
    pub nilpotent: Option<AlgebraElement<F>>,
    pub numeric: bool,
}

impl<F: Field> SpectrumReport<F> {
    pub fn from_witnesses(w: Witnesses<F>) -> Self {
        let (zero, one) = (w.nilpotent.is_some(), w.idempotent.is_some());
        SpectrumReport {
            zero_in_sigma: zero,
            one_in_sigma: one,
            description: SigmaDescription::from_sigma_p(zero, one),
            idempotent: w.idempotent,
            nilpotent: w.nilpotent,
            numeric: w.numeric,
        }
    }

    pub fn sigma_p(&self) -> Vec<u8> {
        [(self.zero_in_sigma, 0), (self.one_in_sigma, 1)]
            .into_iter()
            .filter_map(|(b, v)| b.then_some(v))
            .collect()
    }

    pub fn to_json(&self, field: &F) -> Value {
        let element = |x: &Option<AlgebraElement<F>>| match x {
            Some(x) => Value::Array(x.coords().iter().map(|c| field.to_json(c)).collect()),
            None => Value::Null,
        };
        json!({
            "sigma_p": self.sigma_p(),
            "description": self.description,
            "idempotent": element(&self.idempotent),
            "nilpotent": element(&self.nilpotent),
            "numeric": self.numeric,
        })
    }

    pub fn summary(&self, field: &F) -> String {
        let sigma: Vec<String> = self.sigma_p().iter().map(|v| v.to_string()).collect();
        let mut out = format!("sigma_p = {{{}}}: {:?}", sigma.join(", "), self.description);
        if let Some(x) = &self.idempotent {
            out.push_str(&format!("\nidempotent {}", x.format(field)));
        }
        if let Some(x) = &self.nilpotent {
            out.push_str(&format!("\nabsolute nilpotent {}", x.format(field)));
        }
        if self.numeric {
            out.push_str("\n(numerical search: a missing witness was not found, not disproved)");
        }
        out
    }
}

/// Fields with a procedure for finding canonical elements.
pub trait SpectrumSearch: Field {
    fn witnesses(a: &StructureTensor<Self>, cfg: &SolveConfig) -> Result<Witnesses<Self>>;
}

/// Decides `σ_p` and attaches witnesses.
pub fn classify_spectrum<F: SpectrumSearch>(
    a: &StructureTensor<F>,
    cfg: &SolveConfig,
) -> Result<SpectrumReport<F>> {
    Ok(SpectrumReport::from_witnesses(F::witnesses(a, cfg)?))
}

/// A nonzero `x` with `Vx = λx` gives a witness for `λ = 0` or for 1.
fn absorb<F: Field>(a: &StructureTensor<F>, w: &mut Witnesses<F>, x: AlgebraElement<F>, lambda: &F::Elem) {
    let f = a.field();
    if f.is_zero(lambda) {
        w.nilpotent.get_or_insert(x);
    } else if w.idempotent.is_none() {
        if let Ok(inv) = f.inv(lambda) {
            w.idempotent = Some(x.scale(f, &inv));
        }
    }
}

fn one_dimensional<F: Field>(a: &StructureTensor<F>, numeric: bool) -> Witnesses<F> {
    let mut w = Witnesses { idempotent: None, nilpotent: None, numeric };
    absorb(a, &mut w, a.basis(0), a.get(0, 0, 0));
    w
}

/// One representative per line of `F^n`.
fn exhaustive<F: Field>(a: &StructureTensor<F>, cfg: &SolveConfig) -> Result<Witnesses<F>> {
    let f = a.field();
    let elems = f.elements().ok_or_else(|| Error::unsupported(f.descriptor()))?;
    let n = a.dim();
    let needed = projective_point_count(elems.len() as u64, n - 1);
    if needed > cfg.budget as u128 {
        return Err(Error::BudgetExceeded { needed, budget: cfg.budget });
    }
    let mut w = Witnesses { idempotent: None, nilpotent: None, numeric: false };
    for x in ProjectivePoints::new(&elems, n) {
        let x = AlgebraElement::new(x);
        if let Some(lambda) = a.eigencheck(&x)? {
            absorb(a, &mut w, x, &lambda);
            if w.idempotent.is_some() && w.nilpotent.is_some() {
                break;
            }
        }
    }
    Ok(w)
}

/// The set `σ(V)` over a finite field, by checking every nonzero vector;
/// listed in the field's element order.
pub fn eigenvalue_set<F: Field>(a: &StructureTensor<F>, cfg: &SolveConfig) -> Result<Vec<F::Elem>> {
    let f = a.field();
    let elems = f.elements().ok_or_else(|| Error::unsupported(f.descriptor()))?;
    let (q, n) = (elems.len(), a.dim());
    let total = (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if total > cfg.budget as u128 {
        return Err(Error::BudgetExceeded { needed: total, budget: cfg.budget });
    }
    let mut hit = vec![false; q];
    let mut digits = vec![0usize; n];
    loop {
        // odometer, skipping the all-zero start
        let Some(pos) = digits.iter().rposition(|&d| d + 1 < q) else { break };
        digits[pos] += 1;
        digits[pos + 1..].iter_mut().for_each(|d| *d = 0);
        let x = AlgebraElement::new(digits.iter().map(|&d| elems[d].clone()).collect());
        if let Some(lambda) = a.eigencheck(&x)? {
            if let Some(i) = elems.iter().position(|e| f.equals(e, &lambda)) {
                hit[i] = true;
            }
        }
    }
    Ok(elems.into_iter().zip(hit).filter_map(|(e, h)| h.then_some(e)).collect())
}

impl SpectrumSearch for PrimeField {
    fn witnesses(a: &StructureTensor<Self>, cfg: &SolveConfig) -> Result<Witnesses<Self>> {
        exhaustive(a, cfg)
    }
}

impl SpectrumSearch for ExtensionField<PrimeField> {
    fn witnesses(a: &StructureTensor<Self>, cfg: &SolveConfig) -> Result<Witnesses<Self>> {
        exhaustive(a, cfg)
    }
}

impl SpectrumSearch for Rationals {
    fn witnesses(a: &StructureTensor<Self>, _cfg: &SolveConfig) -> Result<Witnesses<Self>> {
        match a.dim() {
            1 => Ok(one_dimensional(a, false)),
            2 => {
                let mut w = Witnesses { idempotent: None, nilpotent: None, numeric: false };
                for s in solve_exact_dim2(a)?.nontrivial() {
                    absorb(a, &mut w, AlgebraElement::new(s.x().to_vec()), s.lambda());
                }
                Ok(w)
            }
            n => Err(Error::unsupported(format!("Q in dimension {n} > 2"))),
        }
    }
}

impl SpectrumSearch for Reals {
    fn witnesses(a: &StructureTensor<Self>, cfg: &SolveConfig) -> Result<Witnesses<Self>> {
        if a.dim() == 1 {
            return Ok(one_dimensional(a, false));
        }
        let mut w = Witnesses { idempotent: None, nilpotent: None, numeric: true };
        let tol = a.field().tolerance().max(cfg.tolerance);
        for pair in find_real_eigenpairs(a, cfg)? {
            let x = AlgebraElement::new(pair.x);
            let lambda = if pair.lambda.abs() <= tol { 0.0 } else { pair.lambda };
            absorb(a, &mut w, x, &lambda);
        }
        if w.nilpotent.is_none() {
            w.nilpotent = find_real_nilpotent(a, cfg)?.map(|p| AlgebraElement::new(p.x));
        }
        Ok(w)
    }
}

fn dim_one_only<F: Field>(a: &StructureTensor<F>) -> Result<Witnesses<F>> {
    if a.dim() == 1 {
        Ok(one_dimensional(a, false))
    } else {
        Err(Error::unsupported(format!("{} in dimension {}", a.field().descriptor(), a.dim())))
    }
}

impl SpectrumSearch for ExtensionField<Rationals> {
    fn witnesses(a: &StructureTensor<Self>, _cfg: &SolveConfig) -> Result<Witnesses<Self>> {
        dim_one_only(a)
    }
}

impl SpectrumSearch for ExtensionField<Reals> {
    fn witnesses(a: &StructureTensor<Self>, _cfg: &SolveConfig) -> Result<Witnesses<Self>> {
        dim_one_only(a)
    }
}

impl SpectrumSearch for LaurentField<Rationals> {
    fn witnesses(a: &StructureTensor<Self>, _cfg: &SolveConfig) -> Result<Witnesses<Self>> {
        dim_one_only(a)
    }
}

impl SpectrumSearch for LaurentField<PrimeField> {
    fn witnesses(a: &StructureTensor<Self>, _cfg: &SolveConfig) -> Result<Witnesses<Self>> {
        dim_one_only(a)
    }
}
