//! Minimal transitivity of coset actions.
//!
//! `A` is an mt-stabilizer in `X` when every subgroup `H` of `X` that is
//! transitive on the cosets `X:A` satisfies `H·K = X`, where `K` is the core
//! of `A` in `X`. A subgroup `H` is transitive on `X:A` exactly when
//! `|AH| = |X|`, which is what all the scans below test.

use serde::Serialize;

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::GroupRef;
use crate::structure::lattice::{lattice, Lattice};
use crate::structure::setops::{self, product_order};
use crate::structure::subgroup::SubgroupHandle;
use crate::structure::{group_predicates, quotient_group};

/// Three equivalent ways of deciding minimal transitivity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum MtCriterion {
    /// Scan the subgroups H with K ⊆ H ≠ X for one transitive on X:A.
    Definitional,
    /// Every H with AH = X must satisfy HK = X.
    Product,
    /// Every maximal subgroup of X containing K must be intransitive.
    Maximal,
}

impl MtCriterion {
    pub const ALL: [MtCriterion; 3] = [MtCriterion::Definitional, MtCriterion::Product, MtCriterion::Maximal];
}

#[derive(Debug, Clone)]
pub struct MtVerdict {
    pub holds: bool,
    /// When `holds` is false: a subgroup H with AH = X and HK ≠ X.
    pub witness: Option<SubgroupHandle>,
}

/// Lattice-level mt test of `a` inside the lattice subgroup `ambient`.
/// Returns the lattice index of a witness, or `None` when `a` is an mt-stabilizer.
pub(crate) fn mt_witness(
    lat: &Lattice,
    ambient: usize,
    a: &ElementSet,
    core: &ElementSet,
    criterion: MtCriterion,
) -> Option<usize> {
    let x = lat.set(ambient);
    let xo = lat.order(ambient);
    match criterion {
        MtCriterion::Definitional => lat
            .within(x)
            .filter(|&h| h != ambient && core.is_subset(lat.set(h)))
            .find(|&h| product_order(a, lat.set(h)) == xo),
        MtCriterion::Product => lat.within(x).find(|&h| {
            let hs = lat.set(h);
            product_order(a, hs) == xo && product_order(hs, core) != xo
        }),
        MtCriterion::Maximal => lat
            .maximal_within(ambient)
            .into_iter()
            .filter(|&m| core.is_subset(lat.set(m)))
            .find(|&m| product_order(a, lat.set(m)) == xo),
    }
}

fn check_parent(g: &GroupRef, a: &SubgroupHandle) -> Result<()> {
    if a.belongs_to(g) {
        Ok(())
    } else {
        Err(Error::NotSubgroup)
    }
}

/// Is `a` an mt-stabilizer in the subgroup `ambient` of `g`?
pub fn is_mt_stabilizer_in(
    g: &GroupRef,
    ambient: &SubgroupHandle,
    a: &SubgroupHandle,
    criterion: MtCriterion,
) -> Result<MtVerdict> {
    check_parent(g, a)?;
    check_parent(g, ambient)?;
    if !a.is_subgroup_of(ambient) {
        return Err(Error::NotSubgroup);
    }
    let lat = lattice(g)?;
    let t = g.table()?;
    let x = lat.find(ambient.set()).ok_or(Error::NotSubgroup)?;
    let core = setops::core_in(t, a.set(), ambient.set());
    let witness = mt_witness(&lat, x, a.set(), &core, criterion);
    Ok(MtVerdict {
        holds: witness.is_none(),
        witness: witness.map(|h| lat.handle(g, h)),
    })
}

pub fn is_mt_stabilizer_by(g: &GroupRef, a: &SubgroupHandle, criterion: MtCriterion) -> Result<MtVerdict> {
    is_mt_stabilizer_in(g, &SubgroupHandle::whole(g), a, criterion)
}

/// Decides A ⊂ₘ G using the definitional scan.
pub fn is_mt_stabilizer(g: &GroupRef, a: &SubgroupHandle) -> Result<MtVerdict> {
    is_mt_stabilizer_by(g, a, MtCriterion::Definitional)
}

/// Runs all three criteria and reports whether they agree.
pub fn mt_criteria_agree(g: &GroupRef, a: &SubgroupHandle) -> Result<bool> {
    let verdicts = MtCriterion::ALL
        .iter()
        .map(|&c| is_mt_stabilizer_by(g, a, c).map(|v| v.holds))
        .collect::<Result<Vec<bool>>>()?;
    Ok(verdicts.iter().all(|&v| v == verdicts[0]))
}

/// Is the permutation group `g` minimally transitive on its points?
pub fn is_minimally_transitive(g: &GroupRef) -> Result<MtVerdict> {
    if !g.is_transitive() {
        return Err(Error::NotTransitive);
    }
    let lat = lattice(g)?;
    let n = g.degree();
    let stab = g.point_stabilizer_set(0);
    let top = lat.top();
    // H is transitive iff its orbit of point 0 has length n
    let witness = (0..lat.len())
        .filter(|&h| h != top)
        .find(|&h| lat.order(h) / lat.set(h).intersection_count(&stab) == n);
    Ok(MtVerdict {
        holds: witness.is_none(),
        witness: witness.map(|h| lat.handle(g, h)),
    })
}

/// Cached product-criterion witnesses for every subgroup of the lattice,
/// relative to the whole group. `None` marks an mt-stabilizer.
pub(crate) fn mt_table(lat: &Lattice) -> &[Option<usize>] {
    lat.mt_witness.get_or_init(|| {
        let cores = lat.cores();
        let top = lat.top();
        (0..lat.len())
            .map(|a| mt_witness(lat, top, lat.set(a), lat.set(cores[a]), MtCriterion::Product))
            .collect()
    })
}

pub(crate) fn is_mt_index(lat: &Lattice, a: usize) -> bool {
    mt_table(lat)[a].is_none()
}

#[derive(Debug, Clone, Serialize)]
pub struct QuasiprimitiveReport {
    pub quasiprimitive: bool,
    pub mt: bool,
    /// G/K simple; only computed when the action is quasiprimitive and mt.
    pub quotient_simple: Option<bool>,
    /// The action has degree 1 (A = G); the proposition says nothing here.
    pub trivial_action: bool,
    pub prop_1000_ok: bool,
}

/// Quasiprimitivity of G on G:A and the "quasiprimitive + mt ⇒ G/K simple" check.
pub fn quasiprimitive_and_simple_check(g: &GroupRef, a: &SubgroupHandle) -> Result<QuasiprimitiveReport> {
    check_parent(g, a)?;
    let lat = lattice(g)?;
    let ai = lat.find(a.set()).ok_or(Error::NotSubgroup)?;
    let k = lat.cores()[ai];
    let go = g.order();
    let quasiprimitive = lat
        .normal_indices()
        .filter(|&n| n != k && lat.set(k).is_subset(lat.set(n)))
        .all(|n| product_order(a.set(), lat.set(n)) == go);
    let mt = mt_witness(&lat, lat.top(), a.set(), lat.set(k), MtCriterion::Definitional).is_none();
    let trivial_action = a.is_whole();
    let quotient_simple = if quasiprimitive && mt && !trivial_action {
        let kh = lat.handle(g, k);
        let q = quotient_group(g, &kh)?;
        Some(group_predicates(&q.group)?.is_simple)
    } else {
        None
    };
    Ok(QuasiprimitiveReport {
        quasiprimitive,
        mt,
        quotient_simple,
        trivial_action,
        prop_1000_ok: quotient_simple.unwrap_or(true),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Lemma0009Case {
    /// B is itself an mt-stabilizer.
    A,
    /// B is not; the second alternative's conclusions are checked.
    B,
}

#[derive(Debug, Clone)]
pub struct Lemma0009Report {
    pub case: Lemma0009Case,
    pub witness_h: Option<SubgroupHandle>,
    /// Case b: K_{G:B} ≠ K_{G:A}.
    pub cores_differ: bool,
    /// Case b: B·K_{G:A} is an mt-stabilizer.
    pub bk_mt: bool,
    /// Case b: the witness satisfies H·K_{G:B} ≠ H·K_{G:A} = G.
    pub witness_ok: bool,
    /// K_{G:A} ⊆ B ⊆ A forces case a.
    pub special_case_ok: bool,
}

impl Lemma0009Report {
    pub fn holds(&self) -> bool {
        self.special_case_ok
            && match self.case {
                Lemma0009Case::A => true,
                Lemma0009Case::B => self.cores_differ && self.bk_mt && self.witness_ok,
            }
    }
}

pub(crate) fn lemma_0009_on_lattice(
    lat: &Lattice,
    t: &crate::group::Table,
    a: usize,
    b: usize,
) -> (Lemma0009Case, Option<usize>, bool, bool, bool, bool) {
    let cores = lat.cores();
    let table = mt_table(lat);
    let (ka, kb) = (lat.set(cores[a]), lat.set(cores[b]));
    let go = lat.order(lat.top());
    let b_mt = table[b].is_none();
    let special = !ka.is_subset(lat.set(b)) || b_mt;
    if b_mt {
        return (Lemma0009Case::A, None, false, false, false, special);
    }
    let cores_differ = cores[a] != cores[b];
    let bk = setops::product_set(t, lat.set(b), ka);
    let bk_idx = lat.find(&bk).expect("B·K_A is a subgroup since K_A is normal");
    let bk_mt = table[bk_idx].is_none();
    let h = table[b].expect("non-mt subgroup has a witness");
    let hs = lat.set(h);
    let witness_ok = product_order(hs, ka) == go && product_order(hs, kb) != go;
    (Lemma0009Case::B, Some(h), cores_differ, bk_mt, witness_ok, special)
}

/// Given A ⊂ₘ G and B ≤ A, decides which alternative holds and checks its conclusions.
pub fn lemma_0009_analyze(g: &GroupRef, a: &SubgroupHandle, b: &SubgroupHandle) -> Result<Lemma0009Report> {
    check_parent(g, a)?;
    check_parent(g, b)?;
    if !b.is_subgroup_of(a) {
        return Err(Error::inapplicable("B is not contained in A"));
    }
    if !is_mt_stabilizer(g, a)?.holds {
        return Err(Error::inapplicable("A is not an mt-stabilizer"));
    }
    let lat = lattice(g)?;
    let t = g.table()?;
    let ai = lat.find(a.set()).ok_or(Error::NotSubgroup)?;
    let bi = lat.find(b.set()).ok_or(Error::NotSubgroup)?;
    let (case, h, cores_differ, bk_mt, witness_ok, special_case_ok) = lemma_0009_on_lattice(&lat, t, ai, bi);
    Ok(Lemma0009Report {
        case,
        witness_h: h.map(|h| lat.handle(g, h)),
        cores_differ,
        bk_mt,
        witness_ok,
        special_case_ok,
    })
}

/// Are the core-free mt-stabilizers downward closed in the subgroup lattice?
pub fn order_ideal_check(g: &GroupRef) -> Result<bool> {
    let lat = lattice(g)?;
    Ok(order_ideal_on_lattice(&lat))
}

pub(crate) fn order_ideal_on_lattice(lat: &Lattice) -> bool {
    let cores = lat.cores();
    let member = |i: usize| is_mt_index(lat, i) && lat.order(cores[i]) == 1;
    (0..lat.len())
        .filter(|&a| member(a))
        .all(|a| lat.within(lat.set(a)).all(member))
}
