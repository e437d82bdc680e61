use std::fmt;
use std::path::Path;

use idempo::algebra::io::{
    algebra_from_json, algebra_to_json_with_provenance, element_from_json, file_field,
    system_from_json, system_to_json,
};
use idempo::algebra::{classify_spectrum, counterexample_algebra, ElementStatus, SpectrumSearch};
use idempo::fields::{poly_has_root, AnyField, Field, FieldDescriptor, FieldError, Polynomial};
use idempo::solver::{
    genericity_probe, solve_exact_dim2, solve_exhaustive, solve_real, Engine, Perturbation,
    ProjectiveSolution, QuadraticSystem, SolutionReport, SolveConfig,
};
use idempo::{with_field, Error};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use crate::modulus::parse_modulus;
use crate::{EngineArg, Options};

/// What a command prints, writes and exits with.
pub struct Outcome {
    pub text: String,
    pub json: Value,
    pub code: u8,
}

#[derive(Debug)]
pub enum CliError {
    Core(Error),
    Input(String),
    Mismatch(String),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl From<FieldError> for CliError {
    fn from(e: FieldError) -> Self {
        CliError::Core(e.into())
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Input(s) | CliError::Mismatch(s) => write!(f, "{s}"),
        }
    }
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 2,
            CliError::Mismatch(_) => 4,
            CliError::Core(e) => match e {
                Error::DimensionMismatch { .. } | Error::DimensionTooLarge { .. } | Error::EmptyDimension => 3,
                Error::UnsupportedField(_) | Error::CharTwo => 4,
                Error::Field(FieldError::UnsupportedField(_)) => 4,
                Error::ReducibleModulus | Error::EvenOrTrivialDegree(_) => 5,
                Error::Field(
                    FieldError::ReducibleModulus
                    | FieldError::ConstantModulus
                    | FieldError::IrreducibilityUnknown(_),
                ) => 5,
                Error::BudgetExceeded { .. } => 6,
                Error::SearchExhausted(_) => 1,
                _ => 2,
            },
        }
    }
}

fn read_json(path: &Path) -> Result<Value, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

fn field_override(o: &Options) -> Result<Option<FieldDescriptor>, CliError> {
    o.field.as_deref().map(FieldDescriptor::parse).transpose().map_err(CliError::from)
}

/// The file and the field it is read over.
fn load(o: &Options, path: &Path) -> Result<(Value, AnyField), CliError> {
    let v = read_json(path)?;
    let d = file_field(&v, field_override(o)?.as_ref())?;
    Ok((v, d.build()?))
}

pub fn check(o: &Options, path: &Path, element: &str) -> Result<Outcome, CliError> {
    let (v, any) = load(o, path)?;
    let x: Value = serde_json::from_str(element)
        .map_err(|e| CliError::Input(format!("element {element:?}: {e}")))?;
    with_field!(any, f => check_in(&f, &v, &x))
}

fn check_in<F: Field>(f: &F, v: &Value, x: &Value) -> Result<Outcome, CliError> {
    let a = algebra_from_json(f, v)?;
    let x = element_from_json(f, x)?;
    let status = a.element_status(&x)?;
    let lambda = match status {
        ElementStatus::Zero => None,
        _ => a.eigencheck(&x)?,
    };
    let (name, text) = match (&status, &lambda) {
        (ElementStatus::Zero, _) => ("zero", "zero vector (x*x = 0 trivially)".to_string()),
        (ElementStatus::Idempotent, _) => ("idempotent", "idempotent, lambda=1".to_string()),
        (ElementStatus::AbsoluteNilpotent, _) => ("absolute nilpotent", "absolute nilpotent, lambda=0".to_string()),
        (ElementStatus::Eigenvector, Some(l)) => ("eigenvector", format!("eigenvector, lambda={}", f.format(l))),
        _ => ("none", "no eigenvalue".to_string()),
    };
    Ok(Outcome {
        text: text + "\n",
        json: json!({
            "status": name,
            "lambda": lambda.as_ref().map(|l| f.to_json(l)),
        }),
        code: 0,
    })
}

fn trivial<F: Field>(f: &F, n: usize) -> ProjectiveSolution<F> {
    let mut coords = vec![f.zero(); n];
    coords.push(f.one());
    ProjectiveSolution::exact(f, coords).expect("nonzero")
}

fn outcome_of(report: SolutionReport, extra: &str) -> Outcome {
    Outcome {
        text: format!("{extra}{}", report.summary()),
        code: if report.has_nontrivial() { 0 } else { 1 },
        json: report.to_json(),
    }
}

fn no_perturbation(v: &Value, engine: &str) -> Result<(), CliError> {
    match v.get("perturbation") {
        None | Some(Value::Null) => Ok(()),
        Some(Value::Array(a)) if a.is_empty() => Ok(()),
        _ => Err(CliError::Mismatch(format!("the {engine} engine does not take perturbed systems"))),
    }
}

pub fn solve(o: &Options, path: &Path) -> Result<Outcome, CliError> {
    let (v, any) = load(o, path)?;
    let cfg = o.config()?;
    let engine = match o.engine {
        Some(e) => e,
        None => match &any {
            AnyField::Prime(_) | AnyField::PrimeExt(_) => EngineArg::Exhaustive,
            AnyField::Rationals(_) => EngineArg::Exact2,
            AnyField::Reals(_) => EngineArg::Real,
            other => {
                return Err(CliError::Mismatch(format!("no engine solves over {}", other.descriptor())))
            }
        },
    };
    match (engine, any) {
        (EngineArg::Exhaustive, AnyField::Prime(f)) => exhaustive(&f, &v, &cfg),
        (EngineArg::Exhaustive, AnyField::PrimeExt(f)) => exhaustive(&f, &v, &cfg),
        (EngineArg::Exact2, AnyField::Rationals(f)) => {
            no_perturbation(&v, "exact2")?;
            let a = algebra_from_json(&f, &v)?;
            let s = solve_exact_dim2(&a)?;
            let report = SolutionReport::new(&f, Engine::Exact2, &s.solutions)
                .with_infinite_family(s.infinite_family);
            let cubic: Vec<String> = s.cubic.iter().map(|c| c.to_string()).collect();
            let mut out = outcome_of(report, &format!("binary cubic coefficients (a^3, a^2 b, a b^2, b^3): {}\n", cubic.join(", ")));
            if out.code == 1 {
                out.text = out.text.replace("no nontrivial solution exists", "no nontrivial rational solution (provably none)");
            }
            Ok(out)
        }
        (EngineArg::Real, AnyField::Reals(f)) => {
            no_perturbation(&v, "real")?;
            let a = algebra_from_json(&f, &v)?;
            let mut sols = Vec::new();
            match solve_real(&a, &cfg) {
                Ok(s) => sols.push(s),
                Err(Error::SearchExhausted(_)) => {}
                Err(e) => return Err(e.into()),
            }
            sols.push(trivial(&f, a.dim()));
            let report = SolutionReport::new(&f, Engine::Real, &sols);
            Ok(outcome_of(report, &format!("seed: {}\n", cfg.seed)))
        }
        (engine, any) => Err(CliError::Mismatch(format!(
            "engine {engine:?} does not run over {}",
            any.descriptor()
        ))),
    }
}

fn exhaustive<F: Field>(f: &F, v: &Value, cfg: &SolveConfig) -> Result<Outcome, CliError> {
    let system = system_from_json(f, v)?;
    let sols = solve_exhaustive(&system, cfg)?;
    Ok(outcome_of(SolutionReport::new(f, Engine::Exhaustive, &sols), ""))
}

pub fn spectrum(o: &Options, path: &Path) -> Result<Outcome, CliError> {
    let (v, any) = load(o, path)?;
    let cfg = o.config()?;
    with_field!(any, f => spectrum_in(&f, &v, &cfg))
}

fn spectrum_in<F: SpectrumSearch>(f: &F, v: &Value, cfg: &SolveConfig) -> Result<Outcome, CliError> {
    let a = algebra_from_json(f, v)?;
    let report = classify_spectrum(&a, cfg)?;
    let seed = if report.numeric { format!("seed: {}\n", cfg.seed) } else { String::new() };
    Ok(Outcome {
        text: format!("{seed}{}\n", report.summary(f)),
        json: report.to_json(f),
        code: 0,
    })
}

pub fn counterexample(o: &Options, modulus: &str) -> Result<Outcome, CliError> {
    let coeffs = parse_modulus(modulus).map_err(CliError::Input)?;
    let d = FieldDescriptor::parse(o.field.as_deref().unwrap_or("Q"))?;
    with_field!(d.build()?, f => counterexample_in(&f, &coeffs))
}

fn counterexample_in<F: Field>(f: &F, coeffs: &[i64]) -> Result<Outcome, CliError> {
    let poly = Polynomial::from_i64s(f, coeffs);
    let a = counterexample_algebra(f, &poly)?;
    let basis: Vec<String> = (1..coeffs.len() - 1)
        .map(|i| if i == 1 { "t".to_string() } else { format!("t^{i}") })
        .collect();
    let provenance = json!({
        "construction": "odd-degree quotient F[t]/(f) modulo constants",
        "field": f.descriptor(),
        "modulus": poly.coeffs().iter().map(|c| f.to_json(c)).collect::<Vec<_>>(),
        "product": "x o y = (x - c(x))(y - c(y)), c = constant coefficient",
        "basis": basis,
    });
    let file = algebra_to_json_with_provenance(&a, provenance);
    let mut text = format!("quotient algebra of {}[t]/({poly}), dimension {}\n", f.descriptor(), a.dim());
    for i in 0..a.dim() {
        for k in i..a.dim() {
            let e = a.multiply(&a.basis(i), &a.basis(k))?;
            text.push_str(&format!("  e{}*e{} = {}\n", i + 1, k + 1, e.format(f)));
        }
    }
    Ok(Outcome { text, json: file, code: 0 })
}

fn prime_system(o: &Options, path: &Path, p: Option<u64>) -> Result<(QuadraticSystem<idempo::fields::PrimeField>, Value), CliError> {
    let v = read_json(path)?;
    let d = match p {
        Some(p) => FieldDescriptor::Prime { p },
        None => file_field(&v, field_override(o)?.as_ref())?,
    };
    match d.build()? {
        AnyField::Prime(f) => Ok((system_from_json(&f, &v)?, v)),
        other => Err(CliError::Mismatch(format!(
            "solution counting needs a prime field, got {}",
            other.descriptor()
        ))),
    }
}

pub fn bezout(o: &Options, path: &Path, p: Option<u64>) -> Result<Outcome, CliError> {
    let (system, _) = prime_system(o, path, p)?;
    let report = genericity_probe(&system, &o.config()?)?;
    Ok(Outcome {
        text: report.summary() + "\n",
        json: serde_json::to_value(&report).expect("json"),
        code: 0,
    })
}

pub fn perturb(o: &Options, path: &Path, p: Option<u64>) -> Result<Outcome, CliError> {
    let (system, _) = prime_system(o, path, p)?;
    let cfg = o.config()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let layer = Perturbation::random(system.field(), system.n(), &mut rng);
    let perturbed = system.with_perturbation(layer)?;
    let before = genericity_probe(&system, &cfg)?;
    let after = genericity_probe(&perturbed, &cfg)?;
    Ok(Outcome {
        text: format!(
            "seed: {}\nbefore: {}\nafter:  {}\n",
            cfg.seed,
            before.summary(),
            after.summary()
        ),
        json: json!({
            "seed": cfg.seed,
            "before": before,
            "after": after,
            "system": system_to_json(&perturbed),
        }),
        code: 0,
    })
}

pub fn witness(o: &Options) -> Result<Outcome, CliError> {
    let text = o
        .field
        .as_deref()
        .ok_or_else(|| CliError::Input("witness needs --field".into()))?;
    let any = FieldDescriptor::parse(text)?.build()?;
    match any {
        AnyField::Rationals(f) => witness_in(&f, &[-2, 0, 0, 1]),
        AnyField::Prime(f) => finite_witness(&f),
        AnyField::PrimeExt(f) => finite_witness(&f),
        other => Err(CliError::Mismatch(format!("no witness polynomial for {}", other.descriptor()))),
    }
}

/// `α^q − α + 1`, or `α^{q+1} − α² + 1` in characteristic 2.
fn finite_witness<F: Field>(f: &F) -> Result<Outcome, CliError> {
    let q = f.order().expect("finite field") as usize;
    let mut coeffs = vec![0i64; q + 2];
    if f.characteristic() == 2 {
        coeffs[q + 1] = 1;
        coeffs[2] = -1;
    } else {
        coeffs[q] = 1;
        coeffs[1] = -1;
    }
    coeffs[0] = 1;
    witness_in(f, &coeffs)
}

fn witness_in<F: Field>(f: &F, coeffs: &[i64]) -> Result<Outcome, CliError> {
    let poly = Polynomial::from_i64s(f, coeffs).with_var("a");
    let root = poly_has_root(&poly)?;
    // integer form, so F5 shows "- a" rather than "4a"
    let shown = Polynomial::from_i64s(&idempo::fields::Rationals, coeffs).with_var("a").to_string();
    let text = match &root {
        None => format!("{shown} has no root in {}\n", f.descriptor()),
        Some(r) => format!("{shown} has the root {} in {}\n", f.format(r), f.descriptor()),
    };
    Ok(Outcome {
        text,
        json: json!({
            "field": f.descriptor(),
            "polynomial": shown,
            "coeffs": poly.coeffs().iter().map(|c| f.to_json(c)).collect::<Vec<_>>(),
            "degree": poly.degree(),
            "rootless": root.is_none(),
            "root": root.as_ref().map(|r| f.to_json(r)),
        }),
        code: if root.is_none() { 0 } else { 1 },
    })
}
