//! Browser entry points. Each takes plain strings and numbers and returns a
//! JSON string; failures come back as `{"error": "..."}`.

use idempo::algebra::{
    classify_spectrum, counterexample_algebra, eigenvalue_set,
    SpectrumSearch, StructureTensor,
};
use idempo::algebra::io::algebra_to_json;
use idempo::fields::{Field, FieldDescriptor, Polynomial, PrimeField, Rationals, Reals};
use idempo::solver::{solve_real, SolveConfig};
use idempo::with_field;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn respond(r: Result<Value, String>) -> String {
    r.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

fn table<F: Field>(a: &StructureTensor<F>) -> Result<Vec<String>, String> {
    let f = a.field();
    let mut rows = Vec::new();
    for i in 0..a.dim() {
        for k in 0..a.dim() {
            let e = a.multiply(&a.basis(i), &a.basis(k)).map_err(|e| e.to_string())?;
            rows.push(format!("e{}*e{} = {}", i + 1, k + 1, e.format(f)));
        }
    }
    Ok(rows)
}

fn spectrum_json<F: SpectrumSearch>(a: &StructureTensor<F>, cfg: &SolveConfig) -> Result<Value, String> {
    let report = classify_spectrum(a, cfg).map_err(|e| e.to_string())?;
    Ok(json!({
        "report": report.to_json(a.field()),
        "summary": report.summary(a.field()),
    }))
}

fn quotient_in<F: SpectrumSearch>(f: &F, coeffs: &[i64]) -> Result<Value, String> {
    let poly = Polynomial::from_i64s(f, coeffs);
    let a = counterexample_algebra(f, &poly).map_err(|e| e.to_string())?;
    Ok(json!({
        "modulus": Polynomial::from_i64s(&Rationals, coeffs).to_string(),
        "dim": a.dim(),
        "table": table(&a)?,
        "spectrum": spectrum_json(&a, &SolveConfig::default())?,
        "file": algebra_to_json(&a),
    }))
}

/// The quotient algebra of `F[t]/(f)` by the constants, with its spectrum.
/// `modulus` lists integer coefficients from the constant term up.
pub fn quotient_report(field: &str, modulus: &str) -> Result<Value, String> {
    let coeffs: Vec<i64> = serde_json::from_str(modulus).map_err(|e| format!("modulus: {e}"))?;
    if coeffs.len() < 2 {
        return Err("modulus needs a positive degree".into());
    }
    let any = FieldDescriptor::parse(field)
        .and_then(|d| d.build())
        .map_err(|e| e.to_string())?;
    with_field!(any, f => quotient_in(&f, &coeffs))
}

/// A random `n`-dimensional algebra over `F_p` with its full eigenvalue set.
pub fn random_finite_report(p: u32, n: u32, seed: u64) -> Result<Value, String> {
    if !(1..=4).contains(&n) {
        return Err("dimension must be between 1 and 4".into());
    }
    let f = PrimeField::new(p as u64).map_err(|e| e.to_string())?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = StructureTensor::random(&f, n as usize, false, &mut rng).map_err(|e| e.to_string())?;
    let cfg = SolveConfig { budget: 2_000_000, ..SolveConfig::default() };
    let sigma = eigenvalue_set(&a, &cfg).map_err(|e| e.to_string())?;
    Ok(json!({
        "seed": seed,
        "table": table(&a)?,
        "eigenvalues": sigma,
        "spectrum": spectrum_json(&a, &cfg)?,
    }))
}

/// An eigenvector of the squaring map of a random commutative real algebra.
pub fn real_eigen_report(n: u32, seed: u64) -> Result<Value, String> {
    if !(1..=8).contains(&n) {
        return Err("dimension must be between 1 and 8".into());
    }
    let r = Reals::default();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let a = StructureTensor::random(&r, n as usize, true, &mut rng).map_err(|e| e.to_string())?;
    let s = solve_real(&a, &SolveConfig { seed, ..SolveConfig::default() }).map_err(|e| e.to_string())?;
    let lambda = *s.lambda();
    let canonical = if lambda.abs() > 1e-9 {
        Some(s.x().iter().map(|c| c / lambda).collect::<Vec<f64>>())
    } else {
        None
    };
    Ok(json!({
        "seed": seed,
        "x": s.x(),
        "lambda": lambda,
        "residual": s.residual(),
        "idempotent": canonical,
    }))
}

#[wasm_bindgen]
pub fn quotient(field: &str, modulus: &str) -> String {
    respond(quotient_report(field, modulus))
}

#[wasm_bindgen]
pub fn random_finite(p: u32, n: u32, seed: u64) -> String {
    respond(random_finite_report(p, n, seed))
}

#[wasm_bindgen]
pub fn real_eigen(n: u32, seed: u64) -> String {
    respond(real_eigen_report(n, seed))
}
