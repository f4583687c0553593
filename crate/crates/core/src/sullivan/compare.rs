use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::bigraded::BigradedModel;
use super::minimal::MinimalModelReport;
use super::SullivanError;
use crate::mostow::AlgebraPresentation;

/// Stage-0 generators of one degree of a bigraded model and whether a
/// perturbation of the differential can hit them linearly.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeStability {
    pub degree: u32,
    pub stage_zero: usize,
    /// Generators of degree `degree - 1` and stage `≥ 2`.
    pub high_stage_below: Vec<String>,
    /// No generator of degree `degree - 1` and stage `≥ 2` exists, so the
    /// stage-0 generators of this degree survive any perturbation `D` with
    /// `D - d` lowering the lower degree by at least 2.
    pub stable: bool,
    /// Degrees `degree - 1` and `degree` are settled in the bigraded model.
    pub authoritative: bool,
    /// Number of presentation generators in this degree.
    pub presentation_generators: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FiberStabilityReport {
    pub degree_cutoff: u32,
    pub degrees: Vec<DegreeStability>,
    /// Generators of stage `≥ 2` in degrees `≤ 3`.
    pub low_degree_high_stage: Vec<String>,
    /// `(degree, stage) ↦ count` of the bigraded model.
    pub counts: BTreeMap<String, usize>,
}

impl FiberStabilityReport {
    pub fn degree(&self, p: u32) -> Option<&DegreeStability> {
        self.degrees.iter().find(|d| d.degree == p)
    }

    /// Stage-0 count of degree `p` if it is perturbation-stable.
    pub fn stable_count(&self, p: u32) -> Option<usize> {
        self.degree(p).filter(|d| d.stable).map(|d| d.stage_zero)
    }

    /// Stage-0 counts agree with the presentation generator counts.
    pub fn presentation_agrees(&self) -> bool {
        self.degrees.iter().all(|d| d.stage_zero == d.presentation_generators)
    }
}

pub fn fiber_model_analysis(
    pres: &AlgebraPresentation,
    model: &BigradedModel,
) -> Result<FiberStabilityReport, SullivanError> {
    if model.degree_cutoff < 5 {
        return Err(SullivanError::InsufficientCutoff { needed: 5, available: model.degree_cutoff });
    }
    if model.stage_cutoff < 3 && model.stage_cutoff_hit {
        return Err(SullivanError::InsufficientCutoff { needed: 3, available: model.stage_cutoff });
    }
    let alg = &model.algebra;
    let high_stage = |p: u32| -> Vec<String> {
        (0..alg.generator_count() as u32)
            .filter(|&i| alg.generator_degree(i) == p && model.stage(i) >= 2)
            .map(|i| alg.name(i).to_string())
            .collect()
    };
    let degrees = (1..=model.degree_cutoff)
        .map(|p| {
            let below = high_stage(p - 1);
            DegreeStability {
                degree: p,
                stage_zero: model.count(p, 0),
                stable: below.is_empty(),
                high_stage_below: below,
                authoritative: model.is_settled(p - 1) && model.is_settled(p),
                presentation_generators: if p <= pres.cutoff { pres.generators_in(p).count() } else { 0 },
            }
        })
        .collect();
    let low_degree_high_stage = (1..=3).flat_map(high_stage).collect();
    let counts = model.counts().into_iter().map(|((p, n), c)| (format!("{p},{n}"), c)).collect();
    Ok(FiberStabilityReport { degree_cutoff: model.degree_cutoff, degrees, low_degree_high_stage, counts })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum Verdict {
    /// A perturbation-stable fiber count differs from the CE count.
    NoLatticeCertificate { degree: u32, fiber: usize, ce: usize },
    Inconclusive,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComparisonVerdict {
    pub compared_degrees: Vec<u32>,
    /// Stage-0 fiber counts per degree, with their stability.
    pub fiber_counts: BTreeMap<u32, usize>,
    pub fiber_stable: BTreeMap<u32, bool>,
    /// Closed generators of the CE minimal model per degree.
    pub ce_counts: BTreeMap<u32, usize>,
    pub mismatches: Vec<u32>,
    pub verdict: Verdict,
}

impl ComparisonVerdict {
    pub fn is_certificate(&self) -> bool {
        matches!(self.verdict, Verdict::NoLatticeCertificate { .. })
    }
}

/// Compare stage-0 counts of the fiber model with the closed generators of
/// the CE minimal model in the given degrees.
pub fn compare_models(
    fiber: &FiberStabilityReport,
    ce: &MinimalModelReport,
    degrees: &[u32],
) -> Result<ComparisonVerdict, SullivanError> {
    let mut fiber_counts = BTreeMap::new();
    let mut fiber_stable = BTreeMap::new();
    let mut ce_counts = BTreeMap::new();
    let mut mismatches = Vec::new();
    for &p in degrees {
        let f = fiber.degree(p).ok_or(SullivanError::UnsettledDegree { degree: p })?;
        if !f.authoritative || !ce.is_settled(p) {
            return Err(SullivanError::UnsettledDegree { degree: p });
        }
        let c = ce.closed_count(p);
        fiber_counts.insert(p, f.stage_zero);
        fiber_stable.insert(p, f.stable);
        ce_counts.insert(p, c);
        if f.stable && f.stage_zero != c {
            mismatches.push(p);
        }
    }
    let verdict = match mismatches.first() {
        Some(&p) => Verdict::NoLatticeCertificate { degree: p, fiber: fiber_counts[&p], ce: ce_counts[&p] },
        None => Verdict::Inconclusive,
    };
    Ok(ComparisonVerdict { compared_degrees: degrees.to_vec(), fiber_counts, fiber_stable, ce_counts, mismatches, verdict })
}
