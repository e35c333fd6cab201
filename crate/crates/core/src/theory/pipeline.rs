//! Iterated reduction of a core-free mt-stabilizer of index p^i·q.
//!
//! While the group is neither nilpotent nor of degree pq: with a normal
//! Sylow subgroup S the action on G:AS is recorded and the process ends; else
//! the stabilizer is enlarged by F(G) and the group is replaced by its
//! quotient by the core of AF(G).

use std::sync::Arc;

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::GroupRef;
use crate::structure::lattice::lattice;
use crate::structure::primes::{factorize, p_part, PrimeSet};
use crate::structure::setops;
use crate::structure::{core_of_subgroup, coset_action, fitting_subgroup, quotient_group, SubgroupHandle};

use super::classify::{classify_degree_pq, SkClassification};
use super::mt::is_mt_index;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ReductionRule {
    NormalOrbitReduction,
    QuotientByCore,
    FittingStep,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Terminal {
    Nilpotent,
    SuprunenkoKopylova,
    Other,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct ActionSize {
    pub group_order: usize,
    pub stabilizer_order: usize,
    pub degree: usize,
}

impl ActionSize {
    fn of(g: &GroupRef, a: &SubgroupHandle) -> Self {
        ActionSize {
            group_order: g.order(),
            stabilizer_order: a.order(),
            degree: g.order() / a.order(),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ReductionStep {
    pub rule: ReductionRule,
    pub input: ActionSize,
    pub normal_subgroup_order: usize,
    pub output: ActionSize,
    /// Fitting steps: whether the preimage of F(G/F(G)) lies in the core.
    pub f2_in_core: Option<bool>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReductionTrace {
    pub p: usize,
    pub q: usize,
    pub steps: Vec<ReductionStep>,
    pub terminal: Terminal,
    pub classification: Option<SkClassification>,
    /// Claims of the reduction that failed on this run; empty when all held.
    pub violations: Vec<String>,
}

/// Labels (p, q) for an index p^i·q: q is the prime to the first power,
/// the smaller one when both are.
pub fn piq_primes(n: usize) -> Option<(usize, usize, u32)> {
    match factorize(n).as_slice() {
        [(a, 1), (b, 1)] => Some((*b, *a, 1)),
        [(a, ea), (b, 1)] => Some((*a, *b, *ea)),
        [(a, 1), (b, eb)] => Some((*b, *a, *eb)),
        _ => None,
    }
}

fn exponent_of(mut n: usize, p: usize) -> u32 {
    let mut e = 0;
    while n.is_multiple_of(p) {
        n /= p;
        e += 1;
    }
    e
}

const MAX_STEPS: usize = 64;

pub fn reduce_piq_pipeline(g: &GroupRef, a: &SubgroupHandle) -> Result<ReductionTrace> {
    if !a.belongs_to(g) {
        return Err(Error::NotSubgroup);
    }
    let lat = lattice(g)?;
    let t = g.table()?;
    let ai = lat.find(a.set()).ok_or(Error::NotSubgroup)?;
    if !setops::is_solvable(t, &ElementSet::full(g.order())) {
        return Err(Error::inapplicable("G is not solvable"));
    }
    if !is_mt_index(&lat, ai) {
        return Err(Error::inapplicable("A is not an mt-stabilizer"));
    }
    let (p, q, mut i) = piq_primes(a.index()).ok_or_else(|| Error::inapplicable("|G:A| is not of the form p^i q"))?;

    let mut trace = ReductionTrace {
        p,
        q,
        steps: Vec::new(),
        terminal: Terminal::Other,
        classification: None,
        violations: Vec::new(),
    };
    let (mut grp, mut stab) = (g.clone(), a.clone());

    let k = core_of_subgroup(&grp, &stab)?;
    if !k.is_trivial() {
        let quotient = quotient_group(&grp, &k)?;
        let next = (quotient.group.clone(), quotient.project(&stab));
        trace.steps.push(ReductionStep {
            rule: ReductionRule::QuotientByCore,
            input: ActionSize::of(&grp, &stab),
            normal_subgroup_order: k.order(),
            output: ActionSize::of(&next.0, &next.1),
            f2_in_core: None,
        });
        (grp, stab) = next;
    }

    for _ in 0..MAX_STEPS {
        let t = grp.table()?;
        let full = ElementSet::full(grp.order());
        if setops::is_nilpotent(t, &full) {
            trace.terminal = Terminal::Nilpotent;
            return Ok(trace);
        }
        let degree = stab.index();
        if degree == p * q {
            let image = coset_action(&grp, &stab)?.image;
            trace.classification = Some(classify_degree_pq(&image)?);
            trace.terminal = Terminal::SuprunenkoKopylova;
            return Ok(trace);
        }
        let lat = lattice(&grp)?;
        let normal_sylow = PrimeSet::of(grp.order()).iter().find_map(|r| {
            let target = p_part(grp.order(), r);
            (0..lat.len()).find(|&s| lat.order(s) == target && lat.is_normal(s))
        });
        if let Some(s) = normal_sylow {
            let b = setops::product_set(t, stab.set(), lat.set(s));
            let bi = lat.find(&b).expect("AS is a subgroup for normal S");
            if !is_mt_index(&lat, bi) {
                trace.violations.push("AS is not an mt-stabilizer".into());
            }
            let kb = lat.set(lat.cores()[bi]);
            if !setops::nilpotent_residual(t, &full).is_subset(kb) {
                trace
                    .violations
                    .push("action on G:AS is not of a nilpotent group".into());
            }
            trace.steps.push(ReductionStep {
                rule: ReductionRule::NormalOrbitReduction,
                input: ActionSize::of(&grp, &stab),
                normal_subgroup_order: lat.order(s),
                output: ActionSize::of(&grp, &lat.handle(&grp, bi)),
                f2_in_core: None,
            });
            trace.terminal = Terminal::Nilpotent;
            return Ok(trace);
        }

        let f1 = fitting_subgroup(&grp)?;
        if PrimeSet::of(f1.order()) != PrimeSet::new([p]) {
            trace
                .violations
                .push(format!("F(G) has order {}, not a power of {}", f1.order(), p));
        }
        let b = stab.join(&f1);
        let bi = lat.find(b.set()).expect("lattice is complete");
        if !is_mt_index(&lat, bi) {
            trace.violations.push("AF(G) is not an mt-stabilizer".into());
        }
        let k = lat.handle(&grp, lat.cores()[bi]);
        let quotient = quotient_group(&grp, &k)?;
        let f1_quotient = quotient_group(&grp, &f1)?;
        let f2 = f1_quotient.preimage(&fitting_subgroup(&f1_quotient.group)?);
        let next_grp = quotient.group.clone();
        let next_stab = quotient.project(&b);

        let new_degree = next_stab.index();
        let j = exponent_of(new_degree, p);
        if new_degree != p.pow(j) * q || j >= i {
            trace
                .violations
                .push(format!("degree {} is not p^j q with j < {}", new_degree, i));
        }
        if p_part(next_grp.order(), p) >= p_part(grp.order(), p) {
            trace
                .violations
                .push("the p-part of the group order did not drop".into());
        }
        trace
            .steps
            .push(fitting_record(&grp, &stab, &f1, &next_grp, &next_stab, &f2, &k));
        if next_grp.order() >= grp.order() {
            trace.violations.push("the group order did not drop".into());
            return Ok(trace);
        }
        i = j;
        grp = Arc::clone(&next_grp);
        stab = next_stab;
    }
    trace.violations.push("reduction did not terminate".into());
    Ok(trace)
}

fn fitting_record(
    grp: &GroupRef,
    stab: &SubgroupHandle,
    f1: &SubgroupHandle,
    next_grp: &GroupRef,
    next_stab: &SubgroupHandle,
    f2: &SubgroupHandle,
    k: &SubgroupHandle,
) -> ReductionStep {
    ReductionStep {
        rule: ReductionRule::FittingStep,
        input: ActionSize::of(grp, stab),
        normal_subgroup_order: f1.order(),
        output: ActionSize::of(next_grp, next_stab),
        f2_in_core: Some(f2.is_subgroup_of(k)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::perm::Permutation;

    fn shared(g: crate::group::PermGroup) -> GroupRef {
        Arc::new(g)
    }

    #[test]
    fn piq_labels() {
        assert_eq!(piq_primes(12), Some((2, 3, 2)));
        assert_eq!(piq_primes(6), Some((3, 2, 1)));
        assert_eq!(piq_primes(45), Some((3, 5, 2)));
        assert_eq!(piq_primes(36), None);
        assert_eq!(piq_primes(7), None);
    }

    #[test]
    fn nilpotent_input_has_empty_trace() {
        let g = shared(catalog::cyclic(12));
        let tr = reduce_piq_pipeline(&g, &SubgroupHandle::trivial(&g)).unwrap();
        assert!(tr.steps.is_empty());
        assert_eq!(tr.terminal, Terminal::Nilpotent);
    }

    #[test]
    fn degree_pq_input_is_classified() {
        let g = shared(catalog::symmetric(3));
        let tr = reduce_piq_pipeline(&g, &SubgroupHandle::trivial(&g)).unwrap();
        assert!(tr.steps.is_empty());
        assert_eq!(tr.terminal, Terminal::SuprunenkoKopylova);
        assert!(tr.classification.is_some());
    }

    #[test]
    fn s4_on_twelve_points_takes_a_fitting_step() {
        let g = shared(catalog::symmetric(4));
        let a = SubgroupHandle::generated(&g, &[Permutation::parse("(1 2)(3 4)", 4).unwrap()]).unwrap();
        let tr = reduce_piq_pipeline(&g, &a).unwrap();
        assert!(tr.violations.is_empty(), "{:?}", tr.violations);
        assert_eq!(tr.steps.len(), 1);
        let step = &tr.steps[0];
        assert_eq!(step.rule, ReductionRule::FittingStep);
        assert_eq!(step.input.degree, 12);
        assert_eq!(step.output.degree, 6);
        assert_eq!(step.output.group_order, 6);
        assert_eq!(tr.terminal, Terminal::SuprunenkoKopylova);
    }

    #[test]
    fn normal_sylow_ends_the_process() {
        let g = shared(catalog::alternating(4));
        let tr = reduce_piq_pipeline(&g, &SubgroupHandle::trivial(&g)).unwrap();
        assert_eq!(tr.steps.len(), 1);
        assert_eq!(tr.steps[0].rule, ReductionRule::NormalOrbitReduction);
        assert_eq!(tr.terminal, Terminal::Nilpotent);
        assert!(tr.violations.is_empty());
    }
}
