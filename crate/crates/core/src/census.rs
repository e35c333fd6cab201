//! Minimally transitive subgroups of Sym(n) up to relabeling of points.
//!
//! Every transitive group K has an intransitive subgroup H and an element g
//! with K = ⟨H, g⟩ unless all its maximal subgroups are transitive, in which
//! case it contains a smaller transitive group. So a breadth-first search
//! over conjugacy classes of intransitive subgroups, adjoining one element at
//! a time, meets every minimally transitive group. For each class
//! representative H the element g only matters up to H·g·H and conjugation
//! by the normalizer of H in Sym(n); a bitset over permutation ranks keeps
//! one g per orbit.
//!
//! A transitive group found this way is minimally transitive exactly when it
//! contains no conjugate of a smaller minimally transitive group, which is
//! decided by processing candidates in order of size.
//!
//! Groups beyond the order cap are skipped, so the search is complete for
//! all minimally transitive groups whose order fits under the cap. For
//! n ≤ 7 the cap exceeds n! and the search is unconditionally complete.

use std::collections::HashMap;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::group::{GroupRef, Limits, PermGroup};
use crate::perm::Permutation;
use crate::relabel::{find_conjugator, find_conjugator_unchecked, invariant, GroupInvariant};
use crate::structure::lattice::lattice;
use crate::structure::setops;
use crate::structure::SubgroupHandle;
use crate::theory::classify::pq_split;
use crate::theory::{classify_degree_pq, SkClassification};

/// Largest degree the census accepts by default.
pub const DEFAULT_DEGREE_BOUND: usize = 10;
const MAXN: usize = 10;

type Img = [u8; MAXN];

#[derive(Debug, Clone)]
pub struct CensusEntry {
    pub degree: usize,
    pub order: usize,
    pub generators: Vec<Permutation>,
    pub attributes: CensusAttributes,
    pub group: GroupRef,
}

/// Structural flags; the table-based ones are absent past the lattice bound.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusAttributes {
    pub abelian: bool,
    pub regular: bool,
    pub solvable: Option<bool>,
    pub nilpotent: Option<bool>,
    pub sk_classification: Option<SkClassification>,
}

#[derive(Debug, Clone, Copy)]
pub struct CensusOptions {
    pub degree_bound: usize,
    pub limits: Limits,
}

impl Default for CensusOptions {
    fn default() -> Self {
        CensusOptions {
            degree_bound: DEFAULT_DEGREE_BOUND,
            limits: Limits::from_env(),
        }
    }
}

pub fn mt_census(degree: usize) -> Result<Vec<CensusEntry>> {
    mt_census_with(degree, CensusOptions::default())
}

pub fn mt_census_with(degree: usize, opts: CensusOptions) -> Result<Vec<CensusEntry>> {
    let bound = opts.degree_bound.min(MAXN);
    if degree == 0 || degree > bound {
        return Err(Error::CensusBoundExceeded { degree, bound });
    }
    let candidates = transitive_candidates(degree, opts.limits);
    let mut accepted: Vec<PermGroup> = Vec::new();
    for k in candidates {
        let contains_smaller = accepted
            .iter()
            .any(|m| m.order() < k.order() && k.order() % m.order() == 0 && find_conjugator_unchecked(m, &k).is_some());
        if !contains_smaller {
            accepted.push(k);
        }
    }
    let mut out: Vec<CensusEntry> = accepted.into_iter().map(|g| entry(degree, g)).collect();
    out.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| a.generators.cmp(&b.generators)));
    Ok(out)
}

fn entry(degree: usize, g: PermGroup) -> CensusEntry {
    let generators = canonical_generators(&g);
    let order = g.order();
    let abelian = generators
        .iter()
        .all(|a| generators.iter().all(|b| a.compose(b).ok() == b.compose(a).ok()));
    let full = ElementSet::full(order);
    let table = g.table().ok();
    let solvable = table.map(|t| setops::is_solvable(t, &full));
    let nilpotent = table.map(|t| setops::is_nilpotent(t, &full));
    let sk_classification = if solvable == Some(true) && pq_split(degree).is_some() {
        classify_degree_pq(&g).ok()
    } else {
        None
    };
    CensusEntry {
        degree,
        order,
        generators,
        attributes: CensusAttributes {
            abelian,
            regular: order == degree,
            solvable,
            nilpotent,
            sk_classification,
        },
        group: Arc::new(g),
    }
}

/// Generators picked greedily from the sorted element list, then pruned of
/// any that the others already generate.
pub fn canonical_generators(g: &PermGroup) -> Vec<Permutation> {
    let n = g.degree();
    let limits = g.limits();
    let span = |gens: &[Permutation]| {
        PermGroup::with_limits(n, gens.to_vec(), limits)
            .map(|h| h.order())
            .unwrap_or(usize::MAX)
    };
    let mut gens: Vec<Permutation> = Vec::new();
    let mut current = PermGroup::trivial(n).relimited(limits);
    for p in g.elements() {
        if !current.contains(p) {
            gens.push(p.clone());
            current = PermGroup::with_limits(n, gens.clone(), limits).expect("subgroup of g fits");
            if current.order() == g.order() {
                break;
            }
        }
    }
    let mut i = 0;
    while i < gens.len() {
        let mut rest = gens.clone();
        rest.remove(i);
        if span(&rest) == g.order() {
            gens = rest;
        } else {
            i += 1;
        }
    }
    gens
}

/// Transitive groups of the form ⟨H, g⟩ with H intransitive, one per
/// conjugacy class, sorted by order.
fn transitive_candidates(n: usize, limits: Limits) -> Vec<PermGroup> {
    let mut intransitive = ClassList::default();
    let mut transitive = ClassList::default();
    let trivial = PermGroup::trivial(n).relimited(limits);
    if n == 1 {
        return vec![trivial];
    }
    intransitive.insert(trivial.clone());
    let mut layer = vec![trivial];
    while !layer.is_empty() {
        let mut next = Vec::new();
        // small chunks keep the undeduplicated extensions in memory briefly
        for chunk in layer.chunks(2 * rayon::current_num_threads()) {
            let found: Vec<Vec<PermGroup>> = chunk.par_iter().map(|h| extensions(n, h, limits)).collect();
            for k in found.into_iter().flatten() {
                if k.is_transitive() {
                    transitive.insert(k);
                } else if let Some(k) = intransitive.insert(k) {
                    next.push(k);
                }
            }
        }
        layer = next;
    }
    let mut out = transitive.into_groups();
    out.sort_by(|a, b| a.order().cmp(&b.order()).then_with(|| a.elements().cmp(b.elements())));
    out
}

/// Conjugacy-class representatives, bucketed by invariant.
#[derive(Default)]
struct ClassList {
    buckets: HashMap<GroupInvariant, Vec<usize>>,
    groups: Vec<PermGroup>,
}

impl ClassList {
    /// Adds `g` when no conjugate is present; returns a copy of the new representative.
    fn insert(&mut self, g: PermGroup) -> Option<PermGroup> {
        let inv = invariant(&g);
        let bucket = self.buckets.entry(inv).or_default();
        if bucket.iter().any(|&i| find_conjugator(&self.groups[i], &g).is_some()) {
            return None;
        }
        bucket.push(self.groups.len());
        self.groups.push(g.clone());
        Some(g)
    }

    fn into_groups(self) -> Vec<PermGroup> {
        self.groups
    }
}

/// The groups ⟨H, g⟩ for one g per orbit of H × H × N(H) on Sym(n) ∖ H.
fn extensions(n: usize, h: &PermGroup, limits: Limits) -> Vec<PermGroup> {
    let total = factorial(n);
    let h_gens: Vec<Img> = h.generators().iter().map(to_img).collect();
    let h_ranks: ElementSet = ElementSet::from_indices(total, h.elements().iter().map(|p| rank(&to_img(p), n)));
    let n_gens = normalizer_generators(n, &h_gens, &h_ranks);

    let mut visited = h_ranks.clone();
    let mut out = Vec::new();
    let mut g = identity(n);
    for r in 0..total {
        if !visited.contains(r) {
            mark_orbit(n, g, &h_gens, &n_gens, &mut visited);
            let mut imgs = h_gens.clone();
            imgs.push(g);
            if generates_transitive(n, &imgs) && !could_be_minimal(n, &imgs, limits.order_cap) {
                next_permutation(&mut g[..n]);
                continue;
            }
            let mut gens: Vec<Permutation> = h.generators().to_vec();
            gens.push(from_img(&g, n));
            if let Ok(k) = PermGroup::with_limits(n, gens, limits) {
                out.push(k);
            }
        }
        next_permutation(&mut g[..n]);
    }
    out
}

fn generates_transitive(n: usize, gens: &[Img]) -> bool {
    let mut seen = [false; MAXN];
    seen[0] = true;
    let mut stack = vec![0usize];
    let mut count = 1;
    while let Some(p) = stack.pop() {
        for g in gens {
            let q = g[p] as usize;
            if !seen[q] {
                seen[q] = true;
                count += 1;
                stack.push(q);
            }
        }
    }
    count == n
}

/// False once the closure of a transitive generating set is seen to hold an
/// n-cycle together with more than n elements, or to pass the order cap.
fn could_be_minimal(n: usize, gens: &[Img], cap: usize) -> bool {
    let mut seen = std::collections::HashSet::new();
    let mut stack = vec![identity(n)];
    seen.insert(identity(n));
    let mut has_n_cycle = false;
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = compose(&x, g, n);
            if seen.insert(y) {
                has_n_cycle |= is_n_cycle(&y, n);
                if (has_n_cycle && seen.len() > n) || seen.len() > cap {
                    return false;
                }
                stack.push(y);
            }
        }
    }
    true
}

fn is_n_cycle(x: &Img, n: usize) -> bool {
    let mut p = 0;
    for step in 1..=n {
        p = x[p] as usize;
        if p == 0 {
            return step == n;
        }
    }
    false
}

fn mark_orbit(n: usize, g: Img, h_gens: &[Img], n_gens: &[Img], visited: &mut ElementSet) {
    visited.insert(rank(&g, n));
    let mut stack = vec![g];
    while let Some(x) = stack.pop() {
        let moves = h_gens
            .iter()
            .flat_map(|h| [compose(h, &x, n), compose(&x, h, n)])
            .chain(n_gens.iter().map(|y| conjugate(&x, y, n)));
        for y in moves {
            if visited.insert(rank(&y, n)) {
                stack.push(y);
            }
        }
    }
}

/// Generators of the normalizer of H in Sym(n), found by a full scan.
fn normalizer_generators(n: usize, h_gens: &[Img], h_ranks: &ElementSet) -> Vec<Img> {
    let total = factorial(n);
    let mut gens: Vec<Img> = Vec::new();
    let mut span = ElementSet::from_indices(total, [0]);
    let mut x = identity(n);
    for r in 0..total {
        if !span.contains(r) && h_gens.iter().all(|h| h_ranks.contains(rank(&conjugate(h, &x, n), n))) {
            gens.push(x);
            span = closure_ranks(n, &gens, total);
        }
        next_permutation(&mut x[..n]);
    }
    gens
}

fn closure_ranks(n: usize, gens: &[Img], total: usize) -> ElementSet {
    let mut seen = ElementSet::from_indices(total, [0]);
    let mut stack = vec![identity(n)];
    while let Some(x) = stack.pop() {
        for g in gens {
            let y = compose(&x, g, n);
            if seen.insert(rank(&y, n)) {
                stack.push(y);
            }
        }
    }
    seen
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

fn identity(n: usize) -> Img {
    let mut a = [0u8; MAXN];
    for (i, v) in a.iter_mut().enumerate().take(n) {
        *v = i as u8;
    }
    a
}

fn to_img(p: &Permutation) -> Img {
    let mut a = [0u8; MAXN];
    for (i, &v) in p.images().iter().enumerate() {
        a[i] = v as u8;
    }
    a
}

fn from_img(a: &Img, n: usize) -> Permutation {
    Permutation::from_images(a[..n].iter().map(|&v| v as usize).collect()).expect("valid permutation")
}

/// Apply `a` first, then `b`.
fn compose(a: &Img, b: &Img, n: usize) -> Img {
    let mut c = [0u8; MAXN];
    for i in 0..n {
        c[i] = b[a[i] as usize];
    }
    c
}

/// x⁻¹ g x: sends x(p) to x(g(p)).
fn conjugate(g: &Img, x: &Img, n: usize) -> Img {
    let mut c = [0u8; MAXN];
    for p in 0..n {
        c[x[p] as usize] = x[g[p] as usize];
    }
    c
}

/// Lexicographic rank via the Lehmer code.
fn rank(a: &Img, n: usize) -> usize {
    let mut r = 0;
    for i in 0..n {
        let smaller = (i + 1..n).filter(|&j| a[j] < a[i]).count();
        r = r * (n - i) + smaller;
    }
    r
}

fn next_permutation(a: &mut [u8]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        a.reverse();
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

/// Transitive subgroups of `g` containing no smaller transitive subgroup, from the lattice.
pub fn minimal_transitive_subgroups(g: &GroupRef) -> Result<Vec<SubgroupHandle>> {
    let lat = lattice(g)?;
    let n = g.degree();
    let stab = g.point_stabilizer_set(0);
    let transitive: Vec<usize> = (0..lat.len())
        .filter(|&i| lat.order(i) / lat.set(i).intersection_count(&stab) == n)
        .collect();
    Ok(transitive
        .iter()
        .copied()
        .filter(|&i| {
            !transitive
                .iter()
                .any(|&j| j != i && lat.order(j) < lat.order(i) && lat.set(j).is_subset(lat.set(i)))
        })
        .map(|i| lat.handle(g, i))
        .collect())
}

/// One representative per relabeling class, keeping the first of each.
pub fn dedup_by_relabeling(groups: Vec<PermGroup>) -> Vec<PermGroup> {
    let mut classes = ClassList::default();
    for g in groups {
        classes.insert(g);
    }
    classes.into_groups()
}
