//! Exhaustive verification of the structure theorems over a catalog.
//!
//! Each suite enumerates every instance of its statement inside each catalog
//! group (subgroups come from the full lattice), counts the instances whose
//! hypotheses hold, and records a replayable counterexample for any instance
//! whose conclusion fails.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;
use crate::catalog::CatalogEntry;
use crate::error::{Error, Result};
use crate::group::GroupRef;
use crate::structure::lattice::{lattice, Lattice};
use crate::structure::primes::{factorize, is_square_free, PrimeSet};
use crate::structure::setops;
use crate::structure::{quotient_group, SubgroupHandle};
use crate::theory::mt::{
    is_mt_index, lemma_0009_on_lattice, mt_table, mt_witness, order_ideal_on_lattice, MtCriterion,
};
use crate::theory::pipeline::{piq_primes, ReductionRule, Terminal};
use crate::theory::solvable::{
    component_check, normal_q_on_lattice, split_context, theorem_1012_on_lattice, Residuals,
};
use crate::theory::{
    assemble_from_split, fitting_split, orbit_action_check, quasiprimitive_and_simple_check, quotient_transfer_with,
    reduce_by_normal, reduce_piq_pipeline, squarefree_analyze, SkCase,
};

#[derive(Debug, Clone, Copy)]
pub struct VerifyBounds {
    pub max_order: usize,
    /// Skip catalog groups acting on more points than this.
    pub max_degree: Option<usize>,
    /// Cap on (A_Q, A_P1, …) combinations tried per group by the assembly suite.
    pub max_assembly_combinations: usize,
    /// Counterexamples kept per suite.
    pub max_counterexamples: usize,
}

impl Default for VerifyBounds {
    fn default() -> Self {
        VerifyBounds {
            max_order: 200,
            max_degree: None,
            max_assembly_combinations: 4096,
            max_counterexamples: 16,
        }
    }
}

/// Everything needed to rebuild a failing instance.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub group: String,
    pub degree: usize,
    pub generators: Vec<String>,
    /// Named subgroups, each listed by its elements.
    pub subgroups: Vec<(String, Vec<String>)>,
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub statement: String,
    pub instances_tested: usize,
    pub inapplicable: usize,
    pub violations: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl SuiteReport {
    fn new(suite: Suite) -> Self {
        SuiteReport {
            suite: suite.name().to_string(),
            statement: suite.statement().to_string(),
            instances_tested: 0,
            inapplicable: 0,
            violations: 0,
            counterexamples: Vec::new(),
        }
    }

    fn merge(&mut self, other: SuiteReport, keep: usize) {
        self.instances_tested += other.instances_tested;
        self.inapplicable += other.inapplicable;
        self.violations += other.violations;
        for c in other.counterexamples {
            if self.counterexamples.len() < keep {
                self.counterexamples.push(c);
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.violations == 0 && self.instances_tested > 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub groups_checked: Vec<String>,
    /// Groups left out because their lattice or closure hit a bound.
    pub groups_skipped: Vec<String>,
    pub suites: Vec<SuiteReport>,
}

impl VerificationReport {
    pub fn total_violations(&self) -> usize {
        self.suites.iter().map(|s| s.violations).sum()
    }

    pub fn suite(&self, name: &str) -> Option<&SuiteReport> {
        self.suites.iter().find(|s| s.suite == name)
    }

    /// No violations and every suite exercised at least once.
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.passed())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    MtCriteriaAgreement,
    MtSubgroupDichotomy,
    CorefreeOrderIdeal,
    QuasiprimitiveSimple,
    NormalExtension,
    NormalOrbitAction,
    QuotientTransfer,
    SolvablePrimeSets,
    FrattiniCriterion,
    PrimePowerDegree,
    FittingSplit,
    SplitAssembly,
    SquarefreeDegree,
    NormalQSubgroup,
    PiqPipeline,
}

impl Suite {
    pub const ALL: [Suite; 15] = [
        Suite::MtCriteriaAgreement,
        Suite::MtSubgroupDichotomy,
        Suite::CorefreeOrderIdeal,
        Suite::QuasiprimitiveSimple,
        Suite::NormalExtension,
        Suite::NormalOrbitAction,
        Suite::QuotientTransfer,
        Suite::SolvablePrimeSets,
        Suite::FrattiniCriterion,
        Suite::PrimePowerDegree,
        Suite::FittingSplit,
        Suite::SplitAssembly,
        Suite::SquarefreeDegree,
        Suite::NormalQSubgroup,
        Suite::PiqPipeline,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::MtCriteriaAgreement => "mt_criteria_agreement",
            Suite::MtSubgroupDichotomy => "mt_subgroup_dichotomy",
            Suite::CorefreeOrderIdeal => "corefree_order_ideal",
            Suite::QuasiprimitiveSimple => "quasiprimitive_simple",
            Suite::NormalExtension => "normal_extension",
            Suite::NormalOrbitAction => "normal_orbit_action",
            Suite::QuotientTransfer => "quotient_transfer",
            Suite::SolvablePrimeSets => "solvable_prime_sets",
            Suite::FrattiniCriterion => "frattini_criterion",
            Suite::PrimePowerDegree => "prime_power_degree",
            Suite::FittingSplit => "fitting_split",
            Suite::SplitAssembly => "split_assembly",
            Suite::SquarefreeDegree => "squarefree_degree",
            Suite::NormalQSubgroup => "normal_q_subgroup",
            Suite::PiqPipeline => "piq_pipeline",
        }
    }

    pub fn statement(self) -> &'static str {
        match self {
            Suite::MtCriteriaAgreement => "definitional, product and maximal-subgroup mt tests agree",
            Suite::MtSubgroupDichotomy => "B <= A mt: B is mt, or K_B != K_A with BK_A mt and a separating witness",
            Suite::CorefreeOrderIdeal => "core-free mt-stabilizers are closed under taking subgroups",
            Suite::QuasiprimitiveSimple => "a quasiprimitive mt action has simple G/K",
            Suite::NormalExtension => "A mt, K < H normal, H != G: AH != A is mt and G:AH is the action on H-orbits",
            Suite::NormalOrbitAction => {
                "a minimally transitive group acts minimally transitively on normal-subgroup orbits"
            }
            Suite::QuotientTransfer => "N normal, N <= A: A/N is mt in G/N iff A is mt in G",
            Suite::SolvablePrimeSets => "G/K solvable, A mt: pi(G:A) = pi(G/K)",
            Suite::FrattiniCriterion => "A/K <= Phi(G/K) implies A mt; conversely when G/K is nilpotent",
            Suite::PrimePowerDegree => "A mt of p-power index: G/K is a p-group and A/K <= Phi(G/K)",
            Suite::FittingSplit => "core-free mt A <= F(G) gives core-free mt A_Q x A_P in Q*P for each normal Sylow P",
            Suite::SplitAssembly => "core-free mt components A_Q x A_Pi reassemble to a core-free mt-stabilizer",
            Suite::SquarefreeDegree => {
                "solvable mt groups of square-free degree: F coprime, elementary abelian Sylows, Q on Q:C"
            }
            Suite::NormalQSubgroup => {
                "q exactly divides the degree: a normal q-subgroup is an irreducible elementary abelian Sylow"
            }
            Suite::PiqPipeline => "the p^i q reduction terminates in a recognized state with decreasing orders",
        }
    }
}

/// Runs every suite over the catalog groups within the bounds.
pub fn verify_theorems(catalog: &[CatalogEntry], bounds: VerifyBounds) -> VerificationReport {
    let selected: Vec<&CatalogEntry> = catalog
        .iter()
        .filter(|e| e.group.order() <= bounds.max_order)
        .filter(|e| bounds.max_degree.is_none_or(|d| e.group.degree() <= d))
        .collect();
    let per_group: Vec<(String, Option<Vec<SuiteReport>>)> = selected
        .par_iter()
        .map(|e| (e.name.clone(), verify_group(e, &bounds).ok()))
        .collect();

    let mut suites: Vec<SuiteReport> = Suite::ALL.iter().map(|&s| SuiteReport::new(s)).collect();
    let mut groups_checked = Vec::new();
    let mut groups_skipped = Vec::new();
    for (name, result) in per_group {
        match result {
            Some(reports) => {
                groups_checked.push(name);
                for (total, part) in suites.iter_mut().zip(reports) {
                    total.merge(part, bounds.max_counterexamples);
                }
            }
            None => groups_skipped.push(name),
        }
    }
    VerificationReport {
        groups_checked,
        groups_skipped,
        suites,
    }
}

struct Ctx<'a> {
    name: &'a str,
    g: &'a GroupRef,
    lat: &'a Lattice,
    keep: usize,
}

impl Ctx<'_> {
    fn elements(&self, set: &ElementSet) -> Vec<String> {
        set.iter().map(|i| self.g.element(i).to_string()).collect()
    }

    fn fail(&self, report: &mut SuiteReport, subgroups: &[(&str, &ElementSet)], detail: impl Into<String>) {
        report.violations += 1;
        if report.counterexamples.len() < self.keep {
            report.counterexamples.push(Counterexample {
                group: self.name.to_string(),
                degree: self.g.degree(),
                generators: self.g.generators().iter().map(|p| p.to_string()).collect(),
                subgroups: subgroups
                    .iter()
                    .map(|(n, s)| (n.to_string(), self.elements(s)))
                    .collect(),
                detail: detail.into(),
            });
        }
    }

    fn record(&self, report: &mut SuiteReport, ok: bool, subgroups: &[(&str, &ElementSet)], detail: &str) {
        report.instances_tested += 1;
        if !ok {
            self.fail(report, subgroups, detail);
        }
    }

    /// Tallies a theory call: inapplicable results count separately, other
    /// errors are violations of the harness itself.
    fn outcome<T>(
        &self,
        report: &mut SuiteReport,
        result: Result<T>,
        subgroups: &[(&str, &ElementSet)],
        check: impl FnOnce(&T) -> Option<String>,
    ) {
        match result {
            Ok(v) => {
                report.instances_tested += 1;
                if let Some(detail) = check(&v) {
                    self.fail(report, subgroups, detail);
                }
            }
            Err(e) if e.is_inapplicable() => report.inapplicable += 1,
            Err(e) => {
                report.instances_tested += 1;
                self.fail(report, subgroups, format!("error: {e}"));
            }
        }
    }

    fn handle(&self, i: usize) -> SubgroupHandle {
        self.lat.handle(self.g, i)
    }
}

fn verify_group(entry: &CatalogEntry, bounds: &VerifyBounds) -> Result<Vec<SuiteReport>> {
    let g = &entry.group;
    let lat = lattice(g)?;
    let t = g.table()?;
    let ctx = Ctx {
        name: &entry.name,
        g,
        lat: &lat,
        keep: bounds.max_counterexamples,
    };
    let full = ElementSet::full(g.order());
    let solvable = setops::is_solvable(t, &full);
    let res = Residuals::of(t);
    mt_table(&lat);

    let mut out: Vec<SuiteReport> = Suite::ALL.iter().map(|&s| SuiteReport::new(s)).collect();
    let [agree, dichotomy, ideal, quasi, ext, orbit, transfer, primes, frattini, ppower, split, assembly, square, normq, piq] =
        &mut out[..]
    else {
        unreachable!()
    };

    let n = lat.len();
    let top = lat.top();
    let cores = lat.cores();
    let mt: Vec<bool> = (0..n).map(|a| is_mt_index(&lat, a)).collect();
    let corefree = |a: usize| lat.order(cores[a]) == 1;

    for a in 0..n {
        let aset = lat.set(a);
        let core = lat.set(cores[a]);
        let verdicts: Vec<bool> = MtCriterion::ALL
            .iter()
            .map(|&c| mt_witness(&lat, top, aset, core, c).is_none())
            .collect();
        ctx.record(
            agree,
            verdicts.iter().all(|&v| v == verdicts[0]),
            &[("A", aset)],
            &format!("criteria disagree: {verdicts:?}"),
        );
    }

    for a in 0..n {
        if !mt[a] {
            dichotomy.inapplicable += 1;
            continue;
        }
        for b in lat.within(lat.set(a)) {
            let (case, _, differ, bk, witness, special) = lemma_0009_on_lattice(&lat, t, a, b);
            let ok = special
                && match case {
                    crate::theory::mt::Lemma0009Case::A => true,
                    crate::theory::mt::Lemma0009Case::B => differ && bk && witness,
                };
            ctx.record(
                dichotomy,
                ok,
                &[("A", lat.set(a)), ("B", lat.set(b))],
                &format!("case {case:?}: cores_differ={differ} bk_mt={bk} witness_ok={witness} special={special}"),
            );
        }
    }

    ctx.record(
        ideal,
        order_ideal_on_lattice(&lat),
        &[],
        "core-free mt set is not downward closed",
    );

    for a in 0..n {
        let r = quasiprimitive_and_simple_check(g, &ctx.handle(a));
        match r {
            Ok(r) if r.quasiprimitive && r.mt && !r.trivial_action => {
                ctx.record(quasi, r.prop_1000_ok, &[("A", lat.set(a))], "G/K is not simple")
            }
            Ok(_) => quasi.inapplicable += 1,
            Err(e) => ctx.fail(quasi, &[("A", lat.set(a))], format!("error: {e}")),
        }
    }

    let normals: Vec<usize> = lat.normal_indices().collect();
    for a in 0..n {
        let ah = ctx.handle(a);
        for &h in &normals {
            let admissible = mt[a] && h != top && h != cores[a] && lat.set(cores[a]).is_subset(lat.set(h));
            if !admissible {
                ext.inapplicable += 1;
                continue;
            }
            let r = reduce_by_normal(g, &ah, &ctx.handle(h));
            ctx.outcome(ext, r, &[("A", lat.set(a)), ("H", lat.set(h))], |r| {
                (!r.holds()).then(|| {
                    format!(
                        "mt_ok={} larger_ok={} equivalent_ok={}",
                        r.mt_ok, r.larger_ok, r.equivalent_ok
                    )
                })
            });
        }
    }

    for a in 0..n {
        if !(mt[a] && corefree(a)) {
            orbit.inapplicable += 1;
            continue;
        }
        for &h in &normals {
            if h == top {
                continue;
            }
            let r = orbit_action_check(g, &ctx.handle(a), &ctx.handle(h));
            ctx.outcome(orbit, r, &[("A", lat.set(a)), ("H", lat.set(h))], |r| {
                (!r.mt_ok).then(|| "action on H-orbits is not minimally transitive".to_string())
            });
        }
    }

    for &nidx in &normals {
        let nh = ctx.handle(nidx);
        let q = quotient_group(g, &nh)?;
        for a in lat.containing(lat.set(nidx)) {
            let r = quotient_transfer_with(&q, g, &nh, &ctx.handle(a));
            ctx.outcome(transfer, r, &[("N", lat.set(nidx)), ("A", lat.set(a))], |r| {
                (!r.biconditional_ok).then(|| format!("in quotient {} vs in G {}", r.mt_in_quotient, r.mt_in_g))
            });
        }
    }

    for a in 0..n {
        let r = theorem_1012_on_lattice(&lat, &res, a);
        let subs = [("A", lat.set(a))];
        if r.part_i_applies {
            ctx.record(primes, r.part_i_ok, &subs, "pi(G:A) != pi(G/K)");
        } else {
            primes.inapplicable += 1;
        }
        if r.part_ii_forward_applies || r.part_ii_converse_applies {
            ctx.record(
                frattini,
                r.part_ii_forward_ok && r.part_ii_converse_ok,
                &subs,
                &format!(
                    "forward_ok={} converse_ok={}",
                    r.part_ii_forward_ok, r.part_ii_converse_ok
                ),
            );
        } else {
            frattini.inapplicable += 1;
        }
        if r.part_iii_applies {
            ctx.record(
                ppower,
                r.part_iii_ok,
                &subs,
                "G/K not a p-group or A/K not in the Frattini subgroup",
            );
        } else {
            ppower.inapplicable += 1;
        }
    }

    let split_ctx = if solvable { split_context(g).ok() } else { None };
    for a in 0..n {
        let admissible = split_ctx.as_ref().is_some_and(|s| {
            mt[a] && corefree(a) && lat.set(a).is_subset(s.fitting.set()) && !s.normal_sylows.is_empty()
        });
        if !admissible {
            split.inapplicable += 1;
            continue;
        }
        let r = fitting_split(g, &ctx.handle(a));
        ctx.outcome(split, r, &[("A", lat.set(a))], |r| {
            (!r.holds()).then(|| {
                let bad: Vec<String> = r
                    .components
                    .iter()
                    .filter(|c| !(c.mt_ok && c.corefree_ok))
                    .map(|c| format!("p={} mt_ok={} corefree_ok={}", c.p, c.mt_ok, c.corefree_ok))
                    .collect();
                format!(
                    "sylows_outside_pi_star={} {}",
                    r.sylows_outside_pi_star_ok,
                    bad.join("; ")
                )
            })
        });
    }

    if let Some(s) = split_ctx.as_ref().filter(|s| !s.normal_sylows.is_empty()) {
        verify_assembly(&ctx, t, s, assembly, bounds.max_assembly_combinations)?;
    } else {
        assembly.inapplicable += 1;
    }

    for a in 0..n {
        let admissible = solvable && mt[a] && corefree(a) && a != top;
        if !(admissible && is_square_free(g.order() / lat.order(a))) {
            square.inapplicable += 1;
            continue;
        }
        let r = squarefree_analyze(g, &ctx.handle(a));
        ctx.outcome(square, r, &[("A", lat.set(a))], |r| {
            (!r.holds()).then(|| {
                format!(
                    "coprime={} elem_abelian={} nilpotent={} cyclic_regular={} index_ok={} equivalent={}",
                    r.coprime_ok,
                    r.sylows_elem_abelian,
                    r.nilpotent,
                    r.cyclic_regular,
                    r.index_ok,
                    r.actions_equivalent_ok
                )
            })
        });
    }

    for a in 0..n {
        if !(solvable && mt[a] && corefree(a)) {
            normq.inapplicable += 1;
            continue;
        }
        let degree = g.order() / lat.order(a);
        for (q, e) in factorize(degree) {
            if e != 1 {
                continue;
            }
            for &ni in &normals {
                let order = lat.order(ni);
                if order == 1 || PrimeSet::of(order) != PrimeSet::new([q]) {
                    continue;
                }
                let r = normal_q_on_lattice(&lat, t, q, ni);
                ctx.record(
                    normq,
                    r.holds(),
                    &[("A", lat.set(a)), ("N", lat.set(ni))],
                    &format!(
                        "q={q} elem_abelian={} sylow={} irreducible={}",
                        r.elem_abelian_ok, r.sylow_ok, r.irreducible_ok
                    ),
                );
            }
        }
    }

    for a in 0..n {
        let admissible = solvable && mt[a] && corefree(a) && piq_primes(g.order() / lat.order(a)).is_some();
        if !admissible {
            piq.inapplicable += 1;
            continue;
        }
        let r = reduce_piq_pipeline(g, &ctx.handle(a));
        ctx.outcome(piq, r, &[("A", lat.set(a))], |tr| {
            let mut problems = tr.violations.clone();
            if tr.terminal == Terminal::Other {
                problems.push("no recognized terminal state".into());
            }
            if tr
                .classification
                .as_ref()
                .is_some_and(|c| c.case == SkCase::Unclassified)
            {
                problems.push("degree pq group matches no case".into());
            }
            for step in &tr.steps {
                let quotient = matches!(step.rule, ReductionRule::QuotientByCore | ReductionRule::FittingStep);
                if quotient && step.output.group_order >= step.input.group_order {
                    problems.push(format!("{:?} did not shrink the group", step.rule));
                }
                if step.output.degree > step.input.degree {
                    problems.push(format!("{:?} increased the degree", step.rule));
                }
            }
            (!problems.is_empty()).then(|| problems.join("; "))
        });
    }

    Ok(out)
}

/// Tries every choice of A_Q ≤ F ∩ Q and A_Pi ≤ P_i whose components pass,
/// and checks the reassembled stabilizer.
fn verify_assembly(
    ctx: &Ctx,
    t: &crate::group::Table,
    s: &crate::theory::solvable::SplitContext,
    report: &mut SuiteReport,
    cap: usize,
) -> Result<()> {
    let lat = ctx.lat;
    let fq = s.fitting.set().intersection(s.q.set());
    let a_qs: Vec<usize> = lat.within(&fq).collect();
    let per_sylow: Vec<Vec<usize>> = s
        .normal_sylows
        .iter()
        .map(|(_, p)| lat.within(p.set()).collect())
        .collect();

    let mut combos = 0usize;
    for &aq in &a_qs {
        // components that pass for this A_Q, per Sylow subgroup
        let passing: Vec<Vec<usize>> = s
            .normal_sylows
            .iter()
            .zip(&per_sylow)
            .map(|((_, p), choices)| {
                choices
                    .iter()
                    .copied()
                    .filter(|&ap| {
                        let (mt, cf) = component_check(lat, t, &s.q_conjugates, p.set(), lat.set(aq), lat.set(ap));
                        mt && cf
                    })
                    .collect()
            })
            .collect();
        let total: usize = per_sylow.iter().map(|c| c.len()).product();
        let admissible: usize = passing.iter().map(|c| c.len()).product();
        report.inapplicable += total - admissible;

        let mut idx = vec![0usize; passing.len()];
        if passing.iter().any(|c| c.is_empty()) {
            continue;
        }
        loop {
            if combos >= cap {
                return Ok(());
            }
            combos += 1;
            let comps: Vec<(SubgroupHandle, SubgroupHandle)> = s
                .normal_sylows
                .iter()
                .zip(&passing)
                .zip(&idx)
                .map(|(((_, p), c), &k)| (p.clone(), ctx.handle(c[k])))
                .collect();
            let mut subs: Vec<(String, ElementSet)> = vec![("A_Q".into(), lat.set(aq).clone())];
            for ((p, _), (_, ap)) in s.normal_sylows.iter().zip(&comps) {
                subs.push((format!("A_P{p}"), ap.set().clone()));
            }
            let named: Vec<(&str, &ElementSet)> = subs.iter().map(|(n, s)| (n.as_str(), s)).collect();
            let r = assemble_from_split(&s.q, &ctx.handle(aq), &comps);
            ctx.outcome(report, r, &named, |r| {
                (!r.holds()).then(|| {
                    format!(
                        "direct_ok={} mt_ok={} corefree_ok={}",
                        r.direct_ok, r.mt_ok, r.corefree_ok
                    )
                })
            });
            // odometer over component choices
            let mut i = 0;
            loop {
                if i == idx.len() {
                    break;
                }
                idx[i] += 1;
                if idx[i] < passing[i].len() {
                    break;
                }
                idx[i] = 0;
                i += 1;
            }
            if i == idx.len() {
                break;
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AgreementReport {
    pub pairs_checked: usize,
    pub disagreements: Vec<Counterexample>,
}

/// Compares the three mt criteria on every (G, A) with |G| ≤ `max_order`.
pub fn criteria_agreement(catalog: &[CatalogEntry], max_order: usize) -> Result<AgreementReport> {
    let parts: Vec<Result<(usize, Vec<Counterexample>)>> = catalog
        .par_iter()
        .filter(|e| e.group.order() <= max_order)
        .map(|e| {
            let g = &e.group;
            let lat = lattice(g)?;
            let ctx = Ctx {
                name: &e.name,
                g,
                lat: &lat,
                keep: usize::MAX,
            };
            let mut r = SuiteReport::new(Suite::MtCriteriaAgreement);
            let cores = lat.cores();
            for a in 0..lat.len() {
                let verdicts: Vec<bool> = MtCriterion::ALL
                    .iter()
                    .map(|&c| mt_witness(&lat, lat.top(), lat.set(a), lat.set(cores[a]), c).is_none())
                    .collect();
                ctx.record(
                    &mut r,
                    verdicts.iter().all(|&v| v == verdicts[0]),
                    &[("A", lat.set(a))],
                    &format!("{verdicts:?}"),
                );
            }
            Ok((r.instances_tested, r.counterexamples))
        })
        .collect();
    let mut out = AgreementReport {
        pairs_checked: 0,
        disagreements: Vec::new(),
    };
    for p in parts {
        let (n, mut d) = p?;
        out.pairs_checked += n;
        out.disagreements.append(&mut d);
    }
    Ok(out)
}

/// Rebuilds the group of a counterexample.
pub fn replay_group(c: &Counterexample) -> Result<crate::group::PermGroup> {
    let gens: Vec<&str> = c.generators.iter().map(String::as_str).collect();
    crate::group::PermGroup::from_cycle_strings(c.degree, &gens)
}

/// Rebuilds a named subgroup of a counterexample inside `g`.
pub fn replay_subgroup(g: &GroupRef, c: &Counterexample, name: &str) -> Result<SubgroupHandle> {
    let (_, elems) = c
        .subgroups
        .iter()
        .find(|(n, _)| n == name)
        .ok_or_else(|| Error::Parse(format!("no subgroup named {name}")))?;
    let perms = elems
        .iter()
        .map(|s| crate::perm::Permutation::parse(s, c.degree))
        .collect::<Result<Vec<_>>>()?;
    SubgroupHandle::generated(g, &perms)
}
