//! The full analysis pipeline and its serializable report.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::field::FieldError;
use crate::howe::{HoweError, RamificationData, SexticModel};
use crate::irreducible::{is_absolutely_irreducible, IrreducibleError};
use crate::singular::{classify, genus_bound_check, h1_poly, singular_points, SingularError};
use crate::unipoly::PolyError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error(transparent)]
    Input(#[from] HoweError),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error(transparent)]
    Singular(#[from] SingularError),
    #[error(transparent)]
    Irreducible(#[from] IrreducibleError),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct InputEcho {
    pub field: String,
    pub alphas: Vec<String>,
    pub betas: Vec<String>,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SingularitySummary {
    pub label: String,
    pub affine_count: usize,
    pub infinity_count: usize,
    pub total: usize,
    pub resultants: BTreeMap<String, String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub xi: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointEntry {
    pub coordinates: String,
    pub extension_degree: usize,
    pub point_count: usize,
    pub multiplicity: usize,
    pub certificate_partial: String,
    pub certificate_value: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CaseEntry {
    pub label: String,
    pub residuals: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct IrreducibilitySummary {
    pub irreducible: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shape_a_witness: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shape_b_witness: Option<String>,
    pub shape_b_cases: Vec<CaseEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Checks {
    /// The coefficient formulas agree with expanding the defining product.
    pub assembly_matches: bool,
    /// `6F = x F_x + y F_y + z F_z`.
    pub euler_relation: bool,
    /// `f(x, 0) = h1^2`.
    pub restriction_is_h1_squared: bool,
    /// `c42 = -4` and `c04 = 1`.
    pub normalized_coefficients: bool,
    /// `10 - total >= 5`.
    pub genus_bound: bool,
}

impl Checks {
    pub fn all(&self) -> bool {
        self.assembly_matches
            && self.euler_relation
            && self.restriction_is_h1_squared
            && self.normalized_coefficients
            && self.genus_bound
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub total_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub schema: u32,
    pub input: InputEcho,
    pub coefficients: BTreeMap<String, String>,
    pub sextic: String,
    pub singularity: SingularitySummary,
    pub singular_points: Vec<PointEntry>,
    pub irreducibility: IrreducibilitySummary,
    pub checks: Checks,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timing: Option<Timing>,
}

/// Validates nothing further (`rd` is already valid) and runs construction,
/// classification, point location with certificates, and the irreducibility
/// tests.
pub fn analyze(rd: &RamificationData, seed: u64) -> Result<AnalysisReport, AnalysisError> {
    let model = SexticModel::new(rd);
    let field = rd.field();
    let class = classify(rd);
    let points = singular_points(&model, seed)?;
    let verdict = is_absolutely_irreducible(rd)?;
    let h1 = h1_poly(rd);
    let coeffs = model.coeffs();

    let show = |v: &[crate::field::FieldElement]| v.iter().map(|e| e.to_string()).collect();
    let input = InputEcho {
        field: field.to_string(),
        alphas: show(rd.alphas()),
        betas: show(rd.betas()),
        seed,
    };
    let coefficients = coeffs
        .entries()
        .iter()
        .map(|(name, _, v)| (name.to_string(), v.to_string()))
        .collect();
    let singularity = SingularitySummary {
        label: class.kind.label().to_string(),
        affine_count: class.kind.affine_count(),
        infinity_count: class.kind.infinity_count(),
        total: class.kind.total(),
        resultants: class
            .resultants
            .iter()
            .map(|r| (r.name.to_string(), r.value.to_string()))
            .collect(),
        xi: class.xi.as_ref().map(|x| x.to_string()),
    };
    let singular_points = points
        .iter()
        .map(|p| PointEntry {
            coordinates: p.coordinates(),
            extension_degree: p.extension_degree,
            point_count: p.point_count(),
            multiplicity: p.multiplicity,
            certificate_partial: p.certificate.partial.clone(),
            certificate_value: p.certificate.value.to_string(),
        })
        .collect();
    let irreducibility = IrreducibilitySummary {
        irreducible: verdict.irreducible,
        shape_a_witness: verdict
            .shape_a_witness
            .as_ref()
            .map(|w| format!("({}) * ({})", w.h1, w.h2)),
        shape_b_witness: verdict
            .shape_b_witness
            .as_ref()
            .map(|w| format!("{}: ({}) * ({})", w.label, w.factors.h1, w.factors.h2)),
        shape_b_cases: verdict
            .shape_b_cases
            .iter()
            .map(|c| CaseEntry {
                label: c.label.clone(),
                residuals: c.residuals.iter().map(|q| q.to_string()).collect(),
            })
            .collect(),
    };
    let checks = Checks {
        assembly_matches: model.assembly_matches(),
        euler_relation: model.projective().euler_identity_holds(),
        restriction_is_h1_squared: model.f().restrict_y0() == &h1 * &h1,
        normalized_coefficients: coeffs.c42 == field.from_i64(-4) && coeffs.c04.is_one(),
        genus_bound: genus_bound_check(class.kind.total()),
    };
    Ok(AnalysisReport {
        schema: SCHEMA_VERSION,
        input,
        coefficients,
        sextic: model.f().to_string(),
        singularity,
        singular_points,
        irreducibility,
        checks,
        timing: None,
    })
}

impl AnalysisReport {
    /// Pretty JSON with keys sorted at every level.
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string_pretty(&value).expect("value serializes")
    }

    pub fn from_json(text: &str) -> Result<AnalysisReport, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let w = &mut out;
        let _ = writeln!(w, "field: {}", self.input.field);
        let _ = writeln!(w, "alphas: {}", self.input.alphas.join(", "));
        let _ = writeln!(w, "betas: {}", self.input.betas.join(", "));
        let _ = writeln!(w, "f = {}", self.sextic);
        let _ = writeln!(w, "coefficients:");
        for (name, value) in &self.coefficients {
            let _ = writeln!(w, "  {name} = {value}");
        }
        let s = &self.singularity;
        let _ = writeln!(
            w,
            "type {}: (m, n) = ({}, {}), {} singular points",
            s.label, s.affine_count, s.infinity_count, s.total
        );
        for (name, value) in &s.resultants {
            let _ = writeln!(w, "  {name} = {value}");
        }
        if let Some(xi) = &s.xi {
            let _ = writeln!(w, "  xi = {xi}");
        }
        let _ = writeln!(w, "singular points:");
        for p in &self.singular_points {
            let _ = write!(
                w,
                "  {} multiplicity {}, {} = {}",
                p.coordinates, p.multiplicity, p.certificate_partial, p.certificate_value
            );
            if p.extension_degree > 1 {
                let _ = write!(w, ", degree {}", p.extension_degree);
            }
            let _ = writeln!(w);
        }
        let irr = &self.irreducibility;
        let _ = writeln!(w, "absolutely irreducible: {}", irr.irreducible);
        if let Some(a) = &irr.shape_a_witness {
            let _ = writeln!(w, "  shape A factors: {a}");
        }
        if let Some(b) = &irr.shape_b_witness {
            let _ = writeln!(w, "  shape B factors: {b}");
        }
        for case in &irr.shape_b_cases {
            let _ = writeln!(w, "  {}: q = [{}]", case.label, case.residuals.join(", "));
        }
        let c = &self.checks;
        let _ = writeln!(
            w,
            "checks: assembly {}, euler {}, f(x,0) = h1^2 {}, normalized {}, genus bound {}",
            c.assembly_matches, c.euler_relation, c.restriction_is_h1_squared, c.normalized_coefficients, c.genus_bound
        );
        if let Some(t) = &self.timing {
            let _ = writeln!(w, "time: {:.3} ms", t.total_ms);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Field;

    fn i1() -> RamificationData {
        RamificationData::from_i64s(&Field::prime(31).unwrap(), [0, 1, -1, 20], [28, 16, 7, 27]).unwrap()
    }

    #[test]
    fn report_of_first_example() {
        let r = analyze(&i1(), 0).unwrap();
        assert_eq!(r.schema, 1);
        assert_eq!(r.singularity.label, "I-1");
        assert_eq!(r.singularity.resultants["Res(h1, h1')"], "27");
        assert_eq!(r.coefficients["c50"], "22");
        assert_eq!(r.singular_points.len(), 4);
        assert!(r.irreducibility.irreducible);
        assert!(r.checks.all());
        assert!(r.to_text().contains("type I-1: (m, n) = (3, 1), 4 singular points"));
    }

    #[test]
    fn json_round_trips_and_is_stable() {
        let mut r = analyze(&i1(), 7).unwrap();
        let json = r.to_json();
        assert_eq!(AnalysisReport::from_json(&json).unwrap(), r);
        assert_eq!(analyze(&i1(), 7).unwrap().to_json(), json);
        assert!(!json.contains("timing"));
        r.timing = Some(Timing { total_ms: 1.5 });
        assert_eq!(AnalysisReport::from_json(&r.to_json()).unwrap(), r);
    }

    #[test]
    fn json_keys_are_sorted() {
        let json = analyze(&i1(), 0).unwrap().to_json();
        let value: serde_json::Value = serde_json::from_str(&json).unwrap();
        let keys: Vec<_> = value.as_object().unwrap().keys().cloned().collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        let first_key = json.lines().nth(1).unwrap().trim();
        assert!(first_key.starts_with("\"checks\""));
    }

    #[test]
    fn rational_report() {
        let q = Field::rational();
        let rd = RamificationData::from_i64s(&q, [0, 1, -1, 3], [4, -2, 5, -4]).unwrap();
        let r = analyze(&rd, 0).unwrap();
        assert!(r.checks.all());
        let affine: usize = r
            .singular_points
            .iter()
            .filter(|p| !p.coordinates.starts_with("(0:1:0)") && !p.coordinates.starts_with("(1:0:0)"))
            .map(|p| p.point_count)
            .sum();
        assert_eq!(affine, r.singularity.affine_count);
    }
}
