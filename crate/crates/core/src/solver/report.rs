use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};
use crate::fields::{Field, FieldDescriptor};

use super::ProjectiveSolution;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Engine {
    Exhaustive,
    Exact2,
    Real,
}

impl Engine {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "exhaustive" => Some(Engine::Exhaustive),
            "exact2" => Some(Engine::Exact2),
            "real" => Some(Engine::Real),
            _ => None,
        }
    }

    /// Exact engines prove absence; the real engine only fails to find.
    pub fn certifies_absence(self) -> bool {
        !matches!(self, Engine::Real)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionEntry {
    /// `ξ₁, …, ξ_n`.
    pub coords: Vec<Value>,
    pub lambda: Value,
    pub trivial: bool,
    pub residual: f64,
}

/// Serializable summary of an engine run.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SolutionReport {
    pub solutions: Vec<SolutionEntry>,
    pub engine: Engine,
    pub field: FieldDescriptor,
    pub count: usize,
    /// True when an empty nontrivial list means no solution exists.
    pub certified: bool,
    #[serde(default, skip_serializing_if = "std::ops::Not::not")]
    pub infinite_family: bool,
}

impl SolutionReport {
    pub fn new<F: Field>(field: &F, engine: Engine, solutions: &[ProjectiveSolution<F>]) -> Self {
        let solutions: Vec<SolutionEntry> = solutions
            .iter()
            .map(|s| SolutionEntry {
                coords: s.x().iter().map(|c| field.to_json(c)).collect(),
                lambda: field.to_json(s.lambda()),
                trivial: s.is_trivial(),
                residual: s.residual(),
            })
            .collect();
        SolutionReport {
            count: solutions.len(),
            solutions,
            engine,
            field: field.descriptor(),
            certified: engine.certifies_absence(),
            infinite_family: false,
        }
    }

    pub fn with_infinite_family(mut self, flag: bool) -> Self {
        self.infinite_family = flag;
        self
    }

    pub fn nontrivial(&self) -> impl Iterator<Item = &SolutionEntry> {
        self.solutions.iter().filter(|s| !s.trivial)
    }

    pub fn has_nontrivial(&self) -> bool {
        self.nontrivial().next().is_some()
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("report serializes")
    }

    pub fn from_json(v: &Value) -> Result<Self> {
        serde_json::from_value(v.clone()).map_err(|e| Error::Format(e.to_string()))
    }

    /// Human-readable lines for a terminal.
    pub fn summary(&self) -> String {
        let engine = serde_json::to_value(self.engine).expect("engine serializes");
        let mut out = format!(
            "engine {} over {}: {} solution(s)\n",
            engine.as_str().unwrap_or_default(),
            self.field,
            self.count
        );
        for s in &self.solutions {
            let coords: Vec<String> = s.coords.iter().map(show).collect();
            out.push_str(&format!(
                "  ({} : {}){}{}\n",
                coords.join(" : "),
                show(&s.lambda),
                if s.trivial { "  trivial" } else { "" },
                if s.residual > 0.0 { format!("  residual {:.2e}", s.residual) } else { String::new() }
            ));
        }
        if self.infinite_family {
            out.push_str("  every direction is an eigenvector\n");
        }
        if !self.has_nontrivial() {
            out.push_str(if self.certified {
                "no nontrivial solution exists\n"
            } else {
                "no nontrivial solution found (search is not a proof)\n"
            });
        }
        out
    }
}

fn show(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::examples;
    use crate::fields::PrimeField;
    use crate::solver::{solve_exhaustive, QuadraticSystem, SolveConfig};

    #[test]
    fn report_shape_and_round_trip() {
        let f3 = PrimeField::new(3).unwrap();
        let sys = QuadraticSystem::build(&examples::zero_algebra(&f3, 2).unwrap());
        let sols = solve_exhaustive(&sys, &SolveConfig::default()).unwrap();
        let r = SolutionReport::new(&f3, Engine::Exhaustive, &sols);
        let v = r.to_json();
        assert_eq!(v["engine"], "exhaustive");
        assert_eq!(v["count"], 5);
        assert_eq!(v["field"], serde_json::json!({"kind":"prime","p":3}));
        assert_eq!(v["solutions"][0]["coords"], serde_json::json!([1, 0]));
        assert!(v.get("infinite_family").is_none());
        assert_eq!(SolutionReport::from_json(&v).unwrap(), r);
        assert!(r.summary().contains("trivial"));
    }
}
