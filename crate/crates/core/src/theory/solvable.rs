//! Structure of minimally transitive actions of solvable groups.
//!
//! Properties of G/K for a normal subgroup K are read off inside G: G/K is
//! solvable (nilpotent) iff K contains the last term of the derived (lower
//! central) series of G, and subgroups of Φ(G/K) correspond to subgroups of
//! G lying in every maximal subgroup that contains K.

use std::sync::Arc;

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::{GroupRef, Table};
use crate::structure::lattice::{lattice, Lattice};
use crate::structure::primes::{factorize, is_square_free, PrimeSet};
use crate::structure::setops;
use crate::structure::special::set_predicates;
use crate::structure::{coset_action, fitting_subgroup, hall_subgroups, SubgroupHandle};

use super::equivalence::actions_equivalent;
use super::mt::{is_mt_index, mt_witness, MtCriterion};

fn require(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::inapplicable(what))
    }
}

fn index_of(lat: &Lattice, a: &SubgroupHandle) -> Result<usize> {
    lat.find(a.set()).ok_or(Error::NotSubgroup)
}

/// Series residuals of a group, cached by callers that test many subgroups.
pub(crate) struct Residuals {
    pub solvable: ElementSet,
    pub nilpotent: ElementSet,
}

impl Residuals {
    pub(crate) fn of(t: &Table) -> Residuals {
        let full = ElementSet::full(t.order());
        Residuals {
            solvable: setops::solvable_residual(t, &full),
            nilpotent: setops::nilpotent_residual(t, &full),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Theorem1012Report {
    pub mt: bool,
    pub quotient_solvable: bool,
    pub quotient_nilpotent: bool,
    /// A/K lies in Φ(G/K).
    pub frattini_condition: bool,
    pub part_i_applies: bool,
    pub part_i_ok: bool,
    pub part_ii_forward_applies: bool,
    pub part_ii_forward_ok: bool,
    pub part_ii_converse_applies: bool,
    pub part_ii_converse_ok: bool,
    pub part_iii_applies: bool,
    pub part_iii_ok: bool,
}

impl Theorem1012Report {
    pub fn holds(&self) -> bool {
        self.part_i_ok && self.part_ii_forward_ok && self.part_ii_converse_ok && self.part_iii_ok
    }
}

pub(crate) fn theorem_1012_on_lattice(lat: &Lattice, res: &Residuals, a: usize) -> Theorem1012Report {
    let k = lat.cores()[a];
    let kset = lat.set(k);
    let go = lat.order(lat.top());
    let degree = go / lat.order(a);
    let quotient_order = go / lat.order(k);
    let mt = is_mt_index(lat, a);
    let quotient_solvable = res.solvable.is_subset(kset);
    let quotient_nilpotent = res.nilpotent.is_subset(kset);
    let frattini_condition = lat
        .maximal()
        .iter()
        .filter(|&&m| kset.is_subset(lat.set(m)))
        .all(|&m| lat.set(a).is_subset(lat.set(m)));

    let part_i_applies = quotient_solvable && mt;
    let part_i_ok = !part_i_applies || PrimeSet::of(degree) == PrimeSet::of(quotient_order);
    let part_ii_forward_applies = frattini_condition;
    let part_ii_forward_ok = !part_ii_forward_applies || mt;
    let part_ii_converse_applies = quotient_nilpotent && mt;
    let part_ii_converse_ok = !part_ii_converse_applies || frattini_condition;
    let degree_primes = PrimeSet::of(degree);
    let part_iii_applies = mt && degree_primes.len() == 1;
    let part_iii_ok = !part_iii_applies || (PrimeSet::of(quotient_order) == degree_primes && frattini_condition);
    Theorem1012Report {
        mt,
        quotient_solvable,
        quotient_nilpotent,
        frattini_condition,
        part_i_applies,
        part_i_ok,
        part_ii_forward_applies,
        part_ii_forward_ok,
        part_ii_converse_applies,
        part_ii_converse_ok,
        part_iii_applies,
        part_iii_ok,
    }
}

/// Evaluates the three parts of the solvable-degree theorem on (G, A). Each
/// `*_ok` flag is true unless this instance falsifies the implication.
pub fn theorem_1012_check(g: &GroupRef, a: &SubgroupHandle) -> Result<Theorem1012Report> {
    let lat = lattice(g)?;
    let t = g.table()?;
    let ai = index_of(&lat, a)?;
    Ok(theorem_1012_on_lattice(&lat, &Residuals::of(t), ai))
}

/// Data shared by the forward and converse splitting checks.
pub(crate) struct SplitContext {
    pub fitting: SubgroupHandle,
    pub pi_star: PrimeSet,
    pub q: SubgroupHandle,
    /// Conjugates of Q that are checked.
    pub q_conjugates: Vec<ElementSet>,
    pub normal_sylows: Vec<(usize, SubgroupHandle)>,
}

/// All conjugates up to this group order, a deterministic sample above it.
const ALL_CONJUGATES_UP_TO: usize = 200;
const CONJUGATE_SAMPLE: usize = 16;

pub(crate) fn split_context(g: &GroupRef) -> Result<SplitContext> {
    let lat = lattice(g)?;
    let t = g.table()?;
    require(
        setops::is_solvable(t, &ElementSet::full(g.order())),
        "G is not solvable",
    )?;
    let fitting = fitting_subgroup(g)?;
    let pi_star = PrimeSet::of(fitting.index());
    let q_target = pi_star.part_of(g.order());
    let qi = (0..lat.len())
        .find(|&i| lat.order(i) == q_target)
        .ok_or_else(|| Error::Internal("solvable group without a Hall subgroup".into()))?;
    let q = lat.handle(g, qi);
    let mut q_conjugates = setops::conjugates(t, q.set(), &ElementSet::full(g.order()));
    if g.order() > ALL_CONJUGATES_UP_TO {
        q_conjugates.truncate(CONJUGATE_SAMPLE);
    }
    let normal_sylows = PrimeSet::of(g.order())
        .iter()
        .filter_map(|p| {
            let target = crate::structure::p_part(g.order(), p);
            (0..lat.len())
                .find(|&i| lat.order(i) == target && lat.is_normal(i))
                .map(|i| (p, lat.handle(g, i)))
        })
        .collect();
    Ok(SplitContext {
        fitting,
        pi_star,
        q,
        q_conjugates,
        normal_sylows,
    })
}

/// For every conjugate Q* checked: is (A_Q)(A_P) a core-free mt-stabilizer in Q*P?
/// Returns (mt_ok, corefree_ok).
pub(crate) fn component_check(
    lat: &Lattice,
    t: &Table,
    q_conjugates: &[ElementSet],
    p: &ElementSet,
    a_q: &ElementSet,
    a_p: &ElementSet,
) -> (bool, bool) {
    let stab = setops::product_set(t, a_q, a_p);
    let mut mt_ok = true;
    let mut corefree_ok = true;
    for qs in q_conjugates {
        let x = setops::product_set(t, qs, p);
        let Some(xi) = lat.find(&x) else {
            return (false, false);
        };
        if !a_q.is_subset(qs) || !stab.is_subset(&x) || lat.find(&stab).is_none() {
            return (false, false);
        }
        let core = setops::core_in(t, &stab, &x);
        corefree_ok &= core.count() == 1;
        mt_ok &= mt_witness(lat, xi, &stab, &core, MtCriterion::Product).is_none();
    }
    (mt_ok, corefree_ok)
}

#[derive(Debug, Clone)]
pub struct SplitComponent {
    pub p: usize,
    /// Q·P for the chosen Hall subgroup Q.
    pub product: SubgroupHandle,
    /// A_Q × A_P.
    pub stabilizer: SubgroupHandle,
    pub conjugates_checked: usize,
    pub mt_ok: bool,
    pub corefree_ok: bool,
}

#[derive(Debug, Clone)]
pub struct SplitReport {
    pub fitting: SubgroupHandle,
    pub pi_star: PrimeSet,
    pub q: SubgroupHandle,
    pub a_q: SubgroupHandle,
    pub normal_sylows: Vec<(usize, SubgroupHandle)>,
    /// No normal Sylow prime lies in π*.
    pub sylows_outside_pi_star_ok: bool,
    pub components: Vec<SplitComponent>,
}

impl SplitReport {
    pub fn holds(&self) -> bool {
        self.sylows_outside_pi_star_ok && self.components.iter().all(|c| c.mt_ok && c.corefree_ok)
    }
}

/// Splits a core-free A ⊂ₘ G with A ⊆ F(G) along the normal Sylow subgroups.
pub fn fitting_split(g: &GroupRef, a: &SubgroupHandle) -> Result<SplitReport> {
    require(a.belongs_to(g), "A is not a subgroup of G")?;
    let lat = lattice(g)?;
    let t = g.table()?;
    let ai = index_of(&lat, a)?;
    let ctx = split_context(g)?;
    require(lat.order(lat.cores()[ai]) == 1, "A is not core-free")?;
    require(is_mt_index(&lat, ai), "A is not an mt-stabilizer")?;
    require(
        a.is_subgroup_of(&ctx.fitting),
        "A is not contained in the Fitting subgroup",
    )?;
    require(!ctx.normal_sylows.is_empty(), "G has no normal Sylow subgroup")?;

    let a_q = a.intersection(&ctx.q);
    let sylows_outside_pi_star_ok = ctx.normal_sylows.iter().all(|(p, _)| !ctx.pi_star.contains(*p));
    let mut components = Vec::new();
    for (p, sylow) in &ctx.normal_sylows {
        let a_p = a.intersection(sylow);
        // A ∩ Q* is the same for every conjugate, as A ⊆ F
        let (mt_ok, corefree_ok) = component_check(&lat, t, &ctx.q_conjugates, sylow.set(), a_q.set(), a_p.set());
        let product_set = setops::product_set(t, ctx.q.set(), sylow.set());
        let stab_set = setops::product_set(t, a_q.set(), a_p.set());
        let product = lat
            .find(&product_set)
            .map(|i| lat.handle(g, i))
            .ok_or_else(|| Error::Internal("QP is not a subgroup".into()))?;
        let stabilizer = match lat.find(&stab_set) {
            Some(i) => lat.handle(g, i),
            None => a_q.join(&a_p),
        };
        components.push(SplitComponent {
            p: *p,
            product,
            stabilizer,
            conjugates_checked: ctx.q_conjugates.len(),
            mt_ok,
            corefree_ok,
        });
    }
    Ok(SplitReport {
        fitting: ctx.fitting,
        pi_star: ctx.pi_star,
        q: ctx.q,
        a_q,
        normal_sylows: ctx.normal_sylows,
        sylows_outside_pi_star_ok,
        components,
    })
}

#[derive(Debug, Clone)]
pub struct Assembly {
    /// A_Q × A_P1 × … × A_Pt.
    pub a: SubgroupHandle,
    /// |A| is the product of the factor orders.
    pub direct_ok: bool,
    pub mt_ok: bool,
    pub corefree_ok: bool,
}

impl Assembly {
    pub fn holds(&self) -> bool {
        self.direct_ok && self.mt_ok && self.corefree_ok
    }
}

/// Reassembles a stabilizer from split components after verifying that each
/// component is a core-free mt-stabilizer in Q*P_i for every conjugate Q*.
pub fn assemble_from_split(
    q: &SubgroupHandle,
    a_q: &SubgroupHandle,
    sylow_components: &[(SubgroupHandle, SubgroupHandle)],
) -> Result<Assembly> {
    let g = q.parent().clone();
    require(
        a_q.belongs_to(&g)
            && sylow_components
                .iter()
                .all(|(p, ap)| p.belongs_to(&g) && ap.belongs_to(&g)),
        "components do not share a parent group",
    )?;
    let lat = lattice(&g)?;
    let t = g.table()?;
    let ctx = split_context(&g)?;
    require(q.order() == ctx.q.order(), "Q is not a Hall subgroup for π(G:F)")?;
    let mut listed: Vec<&ElementSet> = sylow_components.iter().map(|(p, _)| p.set()).collect();
    let mut normal: Vec<&ElementSet> = ctx.normal_sylows.iter().map(|(_, p)| p.set()).collect();
    listed.sort_by(|a, b| a.cmp_elements(b));
    normal.sort_by(|a, b| a.cmp_elements(b));
    require(listed == normal, "the P_i are not exactly the normal Sylow subgroups")?;
    require(
        a_q.is_subgroup_of(&ctx.fitting.intersection(q)),
        "A_Q is not contained in F ∩ Q",
    )?;
    require(
        sylow_components.iter().all(|(p, ap)| ap.is_subgroup_of(p)),
        "some A_P is not contained in its Sylow subgroup",
    )?;
    let q_conjugates = {
        let mut c = setops::conjugates(t, q.set(), &ElementSet::full(g.order()));
        if g.order() > ALL_CONJUGATES_UP_TO {
            c.truncate(CONJUGATE_SAMPLE);
        }
        c
    };
    for (p, ap) in sylow_components {
        let (mt, corefree) = component_check(&lat, t, &q_conjugates, p.set(), a_q.set(), ap.set());
        require(mt && corefree, "a component is not a core-free mt-stabilizer")?;
    }

    let mut a = a_q.clone();
    for (_, ap) in sylow_components {
        a = a.join(ap);
    }
    let expected: usize = a_q.order() * sylow_components.iter().map(|(_, ap)| ap.order()).product::<usize>();
    let ai = index_of(&lat, &a)?;
    Ok(Assembly {
        direct_ok: a.order() == expected,
        mt_ok: is_mt_index(&lat, ai),
        corefree_ok: lat.order(lat.cores()[ai]) == 1,
        a,
    })
}

#[derive(Debug, Clone)]
pub struct SquareFreeReport {
    pub fitting: SubgroupHandle,
    /// |F| coprime to |G:F|.
    pub coprime_ok: bool,
    pub sylows_elem_abelian: bool,
    pub nilpotent: bool,
    /// G is cyclic of order n = |G:A| and A = 1.
    pub cyclic_regular: bool,
    pub pi_star: PrimeSet,
    pub n_star: usize,
    pub hall_q: SubgroupHandle,
    pub c: SubgroupHandle,
    /// |Q:C| = n*.
    pub index_ok: bool,
    /// Q on Q:C is permutationally equivalent to G on G:AF.
    pub actions_equivalent_ok: bool,
}

impl SquareFreeReport {
    pub fn holds(&self) -> bool {
        self.coprime_ok
            && self.sylows_elem_abelian
            && self.nilpotent == self.cyclic_regular
            && self.index_ok
            && self.actions_equivalent_ok
    }
}

/// Checks the conclusions of the square-free degree theorem on (G, A).
pub fn squarefree_analyze(g: &GroupRef, a: &SubgroupHandle) -> Result<SquareFreeReport> {
    require(a.belongs_to(g), "A is not a subgroup of G")?;
    let lat = lattice(g)?;
    let t = g.table()?;
    let ai = index_of(&lat, a)?;
    let full = ElementSet::full(g.order());
    require(setops::is_solvable(t, &full), "G is not solvable")?;
    require(lat.order(lat.cores()[ai]) == 1, "A is not core-free")?;
    require(is_mt_index(&lat, ai), "A is not an mt-stabilizer")?;
    let n = a.index();
    require(is_square_free(n), "|G:A| is not square-free")?;

    let fitting = fitting_subgroup(g)?;
    let coprime_ok = gcd(fitting.order(), fitting.index()) == 1;
    let sylows_elem_abelian = PrimeSet::of(fitting.order()).iter().all(|p| {
        let target = crate::structure::p_part(fitting.order(), p);
        lat.within(fitting.set())
            .find(|&i| lat.order(i) == target)
            .is_some_and(|i| set_predicates(t, lat.set(i)).is_elementary_abelian)
    });
    let nilpotent = setops::is_nilpotent(t, &full);
    let cyclic_regular = setops::is_cyclic(t, &full) && g.order() == n && a.is_trivial();

    let pi_star = PrimeSet::of(n).difference(&PrimeSet::of(fitting.order()));
    let n_star = pi_star.product();
    let c_target = pi_star.part_of(a.order());
    let ci = lat
        .within(a.set())
        .find(|&i| lat.order(i) == c_target)
        .ok_or_else(|| Error::Internal("A has no Hall subgroup".into()))?;
    let c = lat.handle(g, ci);
    let hall_q = hall_subgroups(g, &pi_star)?
        .into_iter()
        .find(|q| c.is_subgroup_of(q))
        .ok_or_else(|| Error::Internal("no Hall subgroup of G contains C".into()))?;
    let index_ok = hall_q.order() / c.order() == n_star;

    let q_group: GroupRef = Arc::new(hall_q.as_group());
    let c_in_q = c.transfer_to(&q_group)?;
    let q_on_c = coset_action(&q_group, &c_in_q)?;
    let af = a.join(&fitting);
    let g_on_af = coset_action(g, &af)?.restrict(&hall_q, &q_group)?;
    let actions_equivalent_ok = actions_equivalent(&q_on_c, &g_on_af).is_some();

    Ok(SquareFreeReport {
        fitting,
        coprime_ok,
        sylows_elem_abelian,
        nilpotent,
        cyclic_regular,
        pi_star,
        n_star,
        hall_q,
        c,
        index_ok,
        actions_equivalent_ok,
    })
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NormalQSubgroupReport {
    pub q: usize,
    pub elem_abelian_ok: bool,
    pub sylow_ok: bool,
    /// No normal subgroup of G lies strictly between 1 and N.
    pub irreducible_ok: bool,
}

impl NormalQSubgroupReport {
    pub fn holds(&self) -> bool {
        self.elem_abelian_ok && self.sylow_ok && self.irreducible_ok
    }
}

/// For core-free A ⊂ₘ G with q ∥ |G:A| and a normal q-subgroup N ≠ 1, checks
/// that N is an elementary abelian Sylow subgroup on which G acts irreducibly.
pub fn lemma_4009_check(g: &GroupRef, a: &SubgroupHandle, n: &SubgroupHandle) -> Result<NormalQSubgroupReport> {
    require(a.belongs_to(g) && n.belongs_to(g), "subgroups of another group")?;
    let lat = lattice(g)?;
    let t = g.table()?;
    let ai = index_of(&lat, a)?;
    let ni = index_of(&lat, n)?;
    require(
        setops::is_solvable(t, &ElementSet::full(g.order())),
        "G is not solvable",
    )?;
    require(lat.order(lat.cores()[ai]) == 1, "A is not core-free")?;
    require(is_mt_index(&lat, ai), "A is not an mt-stabilizer")?;
    require(lat.is_normal(ni), "N is not normal in G")?;
    let f = factorize(n.order());
    require(f.len() == 1, "N is not a nontrivial prime-power group")?;
    let q = f[0].0;
    require(
        factorize(a.index()).iter().any(|&(p, e)| p == q && e == 1),
        "q does not divide |G:A| exactly once",
    )?;
    Ok(normal_q_on_lattice(&lat, t, q, ni))
}

pub(crate) fn normal_q_on_lattice(lat: &Lattice, t: &Table, q: usize, ni: usize) -> NormalQSubgroupReport {
    let nset = lat.set(ni);
    let go = lat.order(lat.top());
    let elem_abelian_ok = setops::is_elementary_abelian(t, nset);
    let sylow_ok = lat.order(ni) == crate::structure::p_part(go, q);
    let irreducible_ok = !lat
        .normal_indices()
        .any(|m| m != ni && lat.order(m) > 1 && lat.set(m).is_subset(nset));
    NormalQSubgroupReport {
        q,
        elem_abelian_ok,
        sylow_ok,
        irreducible_ok,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::PermGroup;
    use crate::perm::Permutation;
    use crate::structure::all_subgroups;

    fn grp(degree: usize, gens: &[&str]) -> GroupRef {
        Arc::new(PermGroup::from_cycle_strings(degree, gens).unwrap())
    }

    fn sub(g: &GroupRef, gens: &[&str]) -> SubgroupHandle {
        let perms: Vec<Permutation> = gens
            .iter()
            .map(|s| Permutation::parse(s, g.degree()).unwrap())
            .collect();
        SubgroupHandle::generated(g, &perms).unwrap()
    }

    fn c6() -> GroupRef {
        grp(6, &["(1 2 3 4 5 6)"])
    }

    fn s3_regular() -> GroupRef {
        grp(6, &["(1 2 3)(4 5 6)", "(1 4)(2 6)(3 5)"])
    }

    #[test]
    fn theorem_1012_examples() {
        let g = c6();
        let r = theorem_1012_check(&g, &SubgroupHandle::trivial(&g)).unwrap();
        assert!(r.part_i_applies && r.holds());

        let c4 = grp(4, &["(1 2 3 4)"]);
        let a = sub(&c4, &["(1 3)(2 4)"]);
        let r = theorem_1012_check(&c4, &a).unwrap();
        assert!(r.mt && r.frattini_condition && r.part_iii_applies && r.holds());
    }

    #[test]
    fn theorem_1012_holds_on_all_subgroups() {
        for g in [
            grp(4, &["(1 2 3 4)", "(1 2)"]),
            grp(4, &["(1 2 3 4)", "(1 3)"]),
            s3_regular(),
        ] {
            for a in all_subgroups(&g).unwrap() {
                assert!(theorem_1012_check(&g, &a).unwrap().holds());
            }
        }
    }

    #[test]
    fn split_of_regular_s3() {
        let g = s3_regular();
        let one = SubgroupHandle::trivial(&g);
        let r = fitting_split(&g, &one).unwrap();
        assert_eq!(r.fitting.order(), 3);
        assert_eq!(r.pi_star, PrimeSet::new([2]));
        assert_eq!(r.q.order(), 2);
        assert_eq!(r.normal_sylows.len(), 1);
        assert_eq!(r.components[0].product.order(), 6);
        assert_eq!(r.components[0].conjugates_checked, 3);
        assert!(r.holds());

        let comps: Vec<(SubgroupHandle, SubgroupHandle)> =
            r.normal_sylows.iter().map(|(_, p)| (p.clone(), one.clone())).collect();
        let back = assemble_from_split(&r.q, &r.a_q, &comps).unwrap();
        assert!(back.a.is_trivial() && back.holds());
    }

    #[test]
    fn split_of_nilpotent_group() {
        let g = c6();
        let r = fitting_split(&g, &SubgroupHandle::trivial(&g)).unwrap();
        assert!(r.pi_star.is_empty());
        assert!(r.q.is_trivial());
        assert_eq!(r.normal_sylows.len(), 2);
        assert!(r.holds());
    }

    #[test]
    fn split_hypotheses_are_reported() {
        let g = grp(3, &["(1 2 3)", "(1 2)"]);
        let b = sub(&g, &["(1 2)"]);
        assert!(fitting_split(&g, &b).unwrap_err().is_inapplicable());
        let a5 = grp(5, &["(1 2 3 4 5)", "(1 2 3)"]);
        assert!(fitting_split(&a5, &SubgroupHandle::trivial(&a5))
            .unwrap_err()
            .is_inapplicable());
    }

    #[test]
    fn squarefree_examples() {
        let g = c6();
        let r = squarefree_analyze(&g, &SubgroupHandle::trivial(&g)).unwrap();
        assert!(r.nilpotent && r.cyclic_regular && r.holds());

        let g = s3_regular();
        let r = squarefree_analyze(&g, &SubgroupHandle::trivial(&g)).unwrap();
        assert_eq!(r.fitting.order(), 3);
        assert!(r.coprime_ok && r.sylows_elem_abelian);
        assert_eq!(r.pi_star, PrimeSet::new([2]));
        assert_eq!(r.n_star, 2);
        assert!(r.holds());
    }

    #[test]
    fn lemma_4009_examples() {
        let g = s3_regular();
        let one = SubgroupHandle::trivial(&g);
        let n = sub(&g, &["(1 2 3)(4 5 6)"]);
        assert!(lemma_4009_check(&g, &one, &n).unwrap().holds());

        let c4 = grp(4, &["(1 2 3 4)"]);
        let n = sub(&c4, &["(1 3)(2 4)"]);
        let err = lemma_4009_check(&c4, &SubgroupHandle::trivial(&c4), &n).unwrap_err();
        assert!(err.is_inapplicable());
    }
}
