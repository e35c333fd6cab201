//! Serializable views of results, one JSON object per output line.
//!
//! Every record carries a `kind` field naming its shape.

use serde::{Deserialize, Serialize};

use crate::census::{CensusAttributes, CensusEntry};
use crate::structure::{GroupPredicates, SubgroupHandle};
use crate::theory::{
    NormalReduction, ReductionStep, ReductionTrace, SkClassification, SplitReport, SquareFreeReport, Terminal,
};
use crate::verify::{SuiteReport, VerificationReport};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupView {
    pub order: usize,
    pub generators: Vec<String>,
}

impl From<&SubgroupHandle> for SubgroupView {
    fn from(s: &SubgroupHandle) -> Self {
        SubgroupView {
            order: s.order(),
            generators: s.generators().iter().map(|p| p.to_string()).collect(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct MtCheckRecord {
    pub kind: String,
    pub degree: usize,
    pub order: usize,
    pub stabilizer: Option<String>,
    /// |G:A| when a stabilizer is given.
    pub index: Option<usize>,
    pub holds: bool,
    /// Verdicts of the definitional, product and maximal-subgroup criteria.
    pub criteria: Option<[bool; 3]>,
    pub core_order: Option<usize>,
    pub witness: Option<SubgroupView>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SylowView {
    pub p: usize,
    pub order: usize,
    pub count: usize,
    pub normal: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalyzeRecord {
    pub kind: String,
    pub degree: usize,
    pub order: usize,
    pub transitive: bool,
    pub minimally_transitive: Option<bool>,
    pub predicates: GroupPredicates,
    pub subgroup_count: usize,
    pub fitting: SubgroupView,
    pub frattini: SubgroupView,
    pub sylows: Vec<SylowView>,
}

#[derive(Debug, Clone, Serialize)]
pub struct NormalReductionRecord {
    pub kind: String,
    pub normal: SubgroupView,
    pub b: SubgroupView,
    pub degree: usize,
    pub orbit_count: usize,
    pub mt_ok: bool,
    pub larger_ok: bool,
    pub equivalent_ok: bool,
    pub holds: bool,
}

impl NormalReductionRecord {
    pub fn new(h: &SubgroupHandle, r: &NormalReduction) -> Self {
        NormalReductionRecord {
            kind: "normal_reduction".into(),
            normal: h.into(),
            b: (&r.b).into(),
            degree: r.orbit_action.degree,
            orbit_count: r.h_orbit_action.degree,
            mt_ok: r.mt_ok,
            larger_ok: r.larger_ok,
            equivalent_ok: r.equivalent_ok,
            holds: r.holds(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct TraceRecord {
    pub kind: String,
    pub p: usize,
    pub q: usize,
    pub steps: Vec<ReductionStep>,
    pub terminal: Terminal,
    pub classification: Option<SkClassification>,
    pub violations: Vec<String>,
}

impl From<&ReductionTrace> for TraceRecord {
    fn from(t: &ReductionTrace) -> Self {
        TraceRecord {
            kind: "reduction_trace".into(),
            p: t.p,
            q: t.q,
            steps: t.steps.clone(),
            terminal: t.terminal,
            classification: t.classification.clone(),
            violations: t.violations.clone(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SplitComponentView {
    pub p: usize,
    pub product: SubgroupView,
    pub stabilizer: SubgroupView,
    pub conjugates_checked: usize,
    pub mt_ok: bool,
    pub corefree_ok: bool,
}

#[derive(Debug, Clone, Serialize)]
pub struct NormalSylowView {
    pub p: usize,
    pub sylow: SubgroupView,
}

#[derive(Debug, Clone, Serialize)]
pub struct SplitRecord {
    pub kind: String,
    pub fitting: SubgroupView,
    pub pi_star: Vec<usize>,
    pub q: SubgroupView,
    pub a_q: SubgroupView,
    pub normal_sylows: Vec<NormalSylowView>,
    pub sylows_outside_pi_star_ok: bool,
    pub components: Vec<SplitComponentView>,
    pub holds: bool,
}

impl From<&SplitReport> for SplitRecord {
    fn from(r: &SplitReport) -> Self {
        SplitRecord {
            kind: "split_report".into(),
            fitting: (&r.fitting).into(),
            pi_star: r.pi_star.primes().to_vec(),
            q: (&r.q).into(),
            a_q: (&r.a_q).into(),
            normal_sylows: r
                .normal_sylows
                .iter()
                .map(|(p, s)| NormalSylowView { p: *p, sylow: s.into() })
                .collect(),
            sylows_outside_pi_star_ok: r.sylows_outside_pi_star_ok,
            components: r
                .components
                .iter()
                .map(|c| SplitComponentView {
                    p: c.p,
                    product: (&c.product).into(),
                    stabilizer: (&c.stabilizer).into(),
                    conjugates_checked: c.conjugates_checked,
                    mt_ok: c.mt_ok,
                    corefree_ok: c.corefree_ok,
                })
                .collect(),
            holds: r.holds(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SquareFreeRecord {
    pub kind: String,
    pub fitting: SubgroupView,
    pub coprime_ok: bool,
    pub sylows_elem_abelian: bool,
    pub nilpotent: bool,
    /// G is cyclic of order n with A = 1.
    pub nilpotent_case: bool,
    pub pi_star: Vec<usize>,
    pub n_star: usize,
    pub hall_q: SubgroupView,
    pub c: SubgroupView,
    pub index_ok: bool,
    pub actions_equivalent_ok: bool,
    pub holds: bool,
}

impl From<&SquareFreeReport> for SquareFreeRecord {
    fn from(r: &SquareFreeReport) -> Self {
        SquareFreeRecord {
            kind: "square_free_report".into(),
            fitting: (&r.fitting).into(),
            coprime_ok: r.coprime_ok,
            sylows_elem_abelian: r.sylows_elem_abelian,
            nilpotent: r.nilpotent,
            nilpotent_case: r.cyclic_regular,
            pi_star: r.pi_star.primes().to_vec(),
            n_star: r.n_star,
            hall_q: (&r.hall_q).into(),
            c: (&r.c).into(),
            index_ok: r.index_ok,
            actions_equivalent_ok: r.actions_equivalent_ok,
            holds: r.holds(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ClassificationRecord {
    pub kind: String,
    #[serde(flatten)]
    pub classification: SkClassification,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRecord {
    pub kind: String,
    pub degree: usize,
    pub order: usize,
    pub generators: Vec<String>,
    pub attributes: CensusAttributes,
}

impl From<&CensusEntry> for CensusRecord {
    fn from(e: &CensusEntry) -> Self {
        CensusRecord {
            kind: "census_entry".into(),
            degree: e.degree,
            order: e.order,
            generators: e.generators.iter().map(|p| p.to_string()).collect(),
            attributes: e.attributes.clone(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteRecord {
    pub kind: String,
    #[serde(flatten)]
    pub report: SuiteReport,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerifySummaryRecord {
    pub kind: String,
    pub groups_checked: usize,
    pub groups_skipped: Vec<String>,
    pub total_violations: usize,
    pub vacuous_suites: Vec<String>,
    pub passed: bool,
}

impl From<&VerificationReport> for VerifySummaryRecord {
    fn from(r: &VerificationReport) -> Self {
        VerifySummaryRecord {
            kind: "verify_summary".into(),
            groups_checked: r.groups_checked.len(),
            groups_skipped: r.groups_skipped.clone(),
            total_violations: r.total_violations(),
            vacuous_suites: r
                .suites
                .iter()
                .filter(|s| s.instances_tested == 0)
                .map(|s| s.suite.clone())
                .collect(),
            passed: r.passed(),
        }
    }
}

/// Parses census output produced with `--json`.
pub fn parse_census_lines(text: &str) -> serde_json::Result<Vec<CensusRecord>> {
    text.lines()
        .filter(|l| !l.trim().is_empty())
        .map(serde_json::from_str)
        .collect()
}
