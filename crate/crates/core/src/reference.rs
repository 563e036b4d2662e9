//! The seven worked examples over `F_31`, one per singularity type, with
//! their expected coefficients, resultants and singular points.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::field::{Field, FieldElement};
use crate::howe::{HoweError, RamificationData};
use crate::report::{analyze, AnalysisError, AnalysisReport};

const TABLE: &str = include_str!("../data/reference_examples.json");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReferenceExample {
    pub label: String,
    pub p: u64,
    pub alphas: [i64; 4],
    pub betas: [i64; 4],
    /// Printed values of `σi - τi`, keyed `d1..d4`.
    pub differences: BTreeMap<String, i64>,
    #[serde(default)]
    pub resultants: BTreeMap<String, i64>,
    /// `(σ3-τ3)^2 - 4(σ2-τ2)(σ4-τ4)` where printed.
    #[serde(default)]
    pub discriminant: Option<i64>,
    pub coefficients: BTreeMap<String, i64>,
    pub singular_points: Vec<String>,
}

impl ReferenceExample {
    pub fn field(&self) -> Field {
        Field::prime(self.p).expect("table primes are valid")
    }

    pub fn data(&self) -> Result<RamificationData, HoweError> {
        RamificationData::from_i64s(&self.field(), self.alphas, self.betas)
    }
}

/// The built-in table.
pub fn reference_examples() -> Vec<ReferenceExample> {
    serde_json::from_str(TABLE).expect("embedded table parses")
}

#[derive(Debug, Clone, PartialEq)]
pub struct ExampleOutcome {
    pub label: String,
    /// One line per mismatch; empty means the example reproduces exactly.
    pub diffs: Vec<String>,
    pub report: Option<AnalysisReport>,
}

impl ExampleOutcome {
    pub fn passed(&self) -> bool {
        self.diffs.is_empty()
    }
}

fn reduce(field: &Field, v: i64) -> FieldElement {
    field.from_i64(v)
}

/// Recomputes each example and lists every field that differs from the table.
pub fn verify_examples(table: &[ReferenceExample], seed: u64) -> Vec<ExampleOutcome> {
    table.iter().map(|ex| verify_one(ex, seed)).collect()
}

fn verify_one(ex: &ReferenceExample, seed: u64) -> ExampleOutcome {
    let fail = |msg: String| ExampleOutcome {
        label: ex.label.clone(),
        diffs: vec![msg],
        report: None,
    };
    let rd = match ex.data() {
        Ok(rd) => rd,
        Err(e) => return fail(format!("input rejected: {e}")),
    };
    let report = match analyze(&rd, seed) {
        Ok(r) => r,
        Err(AnalysisError::Input(e)) => return fail(format!("input rejected: {e}")),
        Err(e) => return fail(format!("analysis failed: {e}")),
    };
    let field = ex.field();
    let mut diffs = Vec::new();

    if report.singularity.label != ex.label {
        diffs.push(format!("type: expected {}, got {}", ex.label, report.singularity.label));
    }
    for (name, expected) in &ex.coefficients {
        let expected = reduce(&field, *expected).to_string();
        match report.coefficients.get(name) {
            Some(got) if *got == expected => {}
            got => diffs.push(format!(
                "{name}: expected {expected}, got {}",
                got.map_or("nothing", String::as_str)
            )),
        }
    }
    if ex.coefficients.len() != 13 {
        diffs.push(format!(
            "table lists {} coefficients, expected 13",
            ex.coefficients.len()
        ));
    }
    for (name, expected) in &ex.resultants {
        let expected = reduce(&field, *expected).to_string();
        match report.singularity.resultants.get(name) {
            Some(got) if *got == expected => {}
            got => diffs.push(format!(
                "{name}: expected {expected}, got {}",
                got.map_or("not computed", String::as_str)
            )),
        }
    }
    let d = rd.differences();
    for (name, expected) in &ex.differences {
        let idx = match name.as_str() {
            "d1" => 0,
            "d2" => 1,
            "d3" => 2,
            "d4" => 3,
            _ => {
                diffs.push(format!("unknown difference {name}"));
                continue;
            }
        };
        let expected = reduce(&field, *expected);
        if d[idx] != expected {
            diffs.push(format!("{name}: expected {expected}, got {}", d[idx]));
        }
    }
    if let Some(expected) = ex.discriminant {
        let got = &(&d[2] * &d[2]) - &(&field.from_u64(4) * &(&d[1] * &d[3]));
        let expected = reduce(&field, expected);
        if got != expected {
            diffs.push(format!("discriminant: expected {expected}, got {got}"));
        }
    }
    let expected: BTreeSet<String> = ex.singular_points.iter().map(|s| s.replace(' ', "")).collect();
    let got: BTreeSet<String> = report.singular_points.iter().map(|p| p.coordinates.clone()).collect();
    if expected != got {
        let missing: Vec<_> = expected.difference(&got).cloned().collect();
        let extra: Vec<_> = got.difference(&expected).cloned().collect();
        diffs.push(format!(
            "singular points: missing [{}], unexpected [{}]",
            missing.join(", "),
            extra.join(", ")
        ));
    }
    if report.singular_points.iter().any(|p| p.multiplicity != 2) {
        diffs.push("a singular point is not a double point".into());
    }
    if !report.irreducibility.irreducible {
        diffs.push("sextic reported reducible".into());
    }
    if !report.checks.all() {
        diffs.push(format!("internal checks failed: {:?}", report.checks));
    }
    ExampleOutcome {
        label: ex.label.clone(),
        diffs,
        report: Some(report),
    }
}
