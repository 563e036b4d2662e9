//! Random ramification data and the type distribution over many draws.

use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::field::{Field, FieldElement, FieldError};
use crate::howe::RamificationData;
use crate::irreducible::is_absolutely_irreducible;
use crate::singular::{classify, SingularityType};

/// Integers are drawn from `[-RATIONAL_RANGE, RATIONAL_RANGE]` over `Q`.
pub const RATIONAL_RANGE: i64 = 50;

/// Eight distinct elements drawn uniformly, redrawing the whole tuple on a
/// collision. Over `Q` the elements are integers in `[-50, 50]`.
pub fn random_data(field: &Field, rng: &mut ChaCha8Rng) -> Result<RamificationData, FieldError> {
    use rand::Rng;
    loop {
        let mut v: Vec<FieldElement> = Vec::with_capacity(8);
        for _ in 0..8 {
            v.push(if field.is_rational() {
                field.from_i64(rng.random_range(-RATIONAL_RANGE..=RATIONAL_RANGE))
            } else {
                field.random(rng)?
            });
        }
        let alphas = [v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()];
        let betas = [v[4].clone(), v[5].clone(), v[6].clone(), v[7].clone()];
        if let Ok(rd) = RamificationData::new(alphas, betas) {
            return Ok(rd);
        }
    }
}

/// The generator used for draw `index` of a run seeded with `seed`.
pub fn instance_rng(seed: u64, index: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed ^ index)
}

/// `count` draws, each from its own [`instance_rng`].
pub fn random_instances(field: &Field, count: u64, seed: u64) -> Result<Vec<RamificationData>, FieldError> {
    (0..count)
        .into_par_iter()
        .map(|i| random_data(field, &mut instance_rng(seed, i)))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SampleSummary {
    pub field: String,
    pub count: u64,
    pub seed: u64,
    /// Draws per type label; every label is present.
    pub types: BTreeMap<String, u64>,
    /// Draws per total number of singular points.
    pub totals: BTreeMap<usize, u64>,
    pub irreducibility_failures: u64,
    /// Share of draws with four singular points (types I-1 and II-1); 0 when
    /// `count = 0`.
    pub four_point_fraction: f64,
}

pub fn sample(field: &Field, count: u64, seed: u64) -> Result<SampleSummary, FieldError> {
    let outcomes: Vec<(SingularityType, bool)> = (0..count)
        .into_par_iter()
        .map(|i| {
            let rd = random_data(field, &mut instance_rng(seed, i))?;
            let irreducible = is_absolutely_irreducible(&rd).map(|v| v.irreducible).unwrap_or(false);
            Ok((classify(&rd).kind, irreducible))
        })
        .collect::<Result<_, FieldError>>()?;

    let mut types: BTreeMap<String, u64> = SingularityType::ALL
        .iter()
        .map(|t| (t.label().to_string(), 0))
        .collect();
    let mut totals = BTreeMap::new();
    let mut failures = 0;
    for (kind, irreducible) in &outcomes {
        *types.entry(kind.label().to_string()).or_default() += 1;
        *totals.entry(kind.total()).or_default() += 1;
        if !irreducible {
            failures += 1;
        }
    }
    let four = totals.get(&4).copied().unwrap_or(0);
    Ok(SampleSummary {
        field: field.to_string(),
        count,
        seed,
        types,
        totals,
        irreducibility_failures: failures,
        four_point_fraction: if count == 0 { 0.0 } else { four as f64 / count as f64 },
    })
}

impl SampleSummary {
    pub fn to_json(&self) -> String {
        let value = serde_json::to_value(self).expect("summary serializes");
        serde_json::to_string_pretty(&value).expect("value serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("{} draws over {} (seed {})\n", self.count, self.field, self.seed);
        for (label, n) in &self.types {
            out.push_str(&format!("  {label}: {n}\n"));
        }
        for (total, n) in &self.totals {
            out.push_str(&format!("  {total} singular points: {n}\n"));
        }
        out.push_str(&format!(
            "  irreducibility failures: {}\n",
            self.irreducibility_failures
        ));
        out.push_str(&format!(
            "  fraction with 4 singular points: {:.4}\n",
            self.four_point_fraction
        ));
        out
    }
}
