//! Minimally transitive representations: criteria, reductions and classification.

pub mod classify;
pub mod equivalence;
pub mod mt;
pub mod pipeline;
pub mod reduction;
pub mod solvable;

pub use classify::{classify_degree_pq, SkCase, SkClassification};
pub use equivalence::{actions_equivalent, Relabeling, RelabelingKind};
pub use mt::{
    is_minimally_transitive, is_mt_stabilizer, is_mt_stabilizer_by, is_mt_stabilizer_in, lemma_0009_analyze,
    mt_criteria_agree, order_ideal_check, quasiprimitive_and_simple_check, Lemma0009Case, Lemma0009Report, MtCriterion,
    MtVerdict, QuasiprimitiveReport,
};
pub use pipeline::{reduce_piq_pipeline, ReductionRule, ReductionStep, ReductionTrace, Terminal};
pub use reduction::{
    orbit_action_check, orbit_quotient_action, quotient_transfer, quotient_transfer_with, reduce_by_normal,
    NormalReduction, OrbitActionReport, QuotientTransfer,
};
pub use solvable::{
    assemble_from_split, fitting_split, lemma_4009_check, squarefree_analyze, theorem_1012_check, Assembly,
    NormalQSubgroupReport, SplitComponent, SplitReport, SquareFreeReport, Theorem1012Report,
};
