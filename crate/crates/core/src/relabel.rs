//! Equivalence of permutation groups under relabeling of points.
//!
//! Two groups of the same degree are equivalent when some permutation `x`
//! conjugates one onto the other. The search assigns `x` point by point in
//! breadth-first order along the generators of the first group, keeping for
//! each generator the candidate images in the second group that agree with the
//! partial assignment.

use std::collections::BTreeMap;

use crate::group::PermGroup;
use crate::perm::Permutation;

/// Conjugacy invariant used to bucket groups before searching.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupInvariant {
    pub order: usize,
    pub orbit_lengths: Vec<usize>,
    pub cycle_types: Vec<(Vec<usize>, usize)>,
}

pub fn invariant(g: &PermGroup) -> GroupInvariant {
    let mut orbit_lengths: Vec<usize> = g.orbits().blocks.iter().map(|b| b.len()).collect();
    orbit_lengths.sort_unstable();
    let mut hist: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for p in g.elements() {
        *hist.entry(p.cycle_type()).or_default() += 1;
    }
    GroupInvariant {
        order: g.order(),
        orbit_lengths,
        cycle_types: hist.into_iter().collect(),
    }
}

/// A permutation `x` with `{h.conjugate_by(x) : h ∈ from} = to`, if any.
pub fn find_conjugator(from: &PermGroup, to: &PermGroup) -> Option<Permutation> {
    if from.degree() != to.degree() || from.order() != to.order() {
        return None;
    }
    if invariant(from) != invariant(to) {
        return None;
    }
    find_conjugator_unchecked(from, to)
}

/// As [`find_conjugator`] but without the invariant pre-check.
pub fn find_conjugator_unchecked(from: &PermGroup, to: &PermGroup) -> Option<Permutation> {
    let n = from.degree();
    let gens: Vec<&Permutation> = small_generating_set(from);
    if gens.is_empty() {
        return if to.order() == 1 {
            Some(Permutation::identity(n))
        } else {
            None
        };
    }
    let cands: Vec<Vec<&Permutation>> = gens
        .iter()
        .map(|g| {
            let ct = g.cycle_type();
            to.elements().iter().filter(|y| y.cycle_type() == ct).collect()
        })
        .collect();
    if cands.iter().any(|c| c.is_empty()) {
        return None;
    }

    // breadth-first point order; pred[p] = (q, i) with gens[i](q) = p
    let mut order = Vec::with_capacity(n);
    let mut pred: Vec<Option<(usize, usize)>> = vec![None; n];
    let mut placed = vec![false; n];
    for start in 0..n {
        if placed[start] {
            continue;
        }
        placed[start] = true;
        order.push(start);
        let mut head = order.len() - 1;
        while head < order.len() {
            let q = order[head];
            head += 1;
            for (i, g) in gens.iter().enumerate() {
                let p = g.apply(q);
                if !placed[p] {
                    placed[p] = true;
                    pred[p] = Some((q, i));
                    order.push(p);
                }
            }
        }
    }

    let inv_gens: Vec<Permutation> = gens.iter().map(|g| g.inverse()).collect();
    let search = Search {
        n,
        gens: &gens,
        inv_gens: &inv_gens,
        order: &order,
        pred: &pred,
    };
    let mut x = vec![usize::MAX; n];
    let mut used = vec![false; n];
    let result = search.descend(0, &mut x, &mut used, cands)?;
    let conj = Permutation::from_images(result).ok()?;
    // every generator lands in `to`, and orders agree, so the images coincide
    debug_assert!(gens.iter().all(|g| to.contains(&g.conjugate_by(&conj))));
    Some(conj)
}

struct Search<'a> {
    n: usize,
    gens: &'a [&'a Permutation],
    inv_gens: &'a [Permutation],
    order: &'a [usize],
    pred: &'a [Option<(usize, usize)>],
}

impl Search<'_> {
    fn descend(
        &self,
        depth: usize,
        x: &mut Vec<usize>,
        used: &mut Vec<bool>,
        cands: Vec<Vec<&Permutation>>,
    ) -> Option<Vec<usize>> {
        if depth == self.n {
            return Some(x.clone());
        }
        let p = self.order[depth];
        let values: Vec<usize> = match self.pred[p] {
            Some((q, i)) => {
                let mut v: Vec<usize> = cands[i].iter().map(|y| y.apply(x[q])).collect();
                v.sort_unstable();
                v.dedup();
                v.retain(|&v| !used[v]);
                v
            }
            None => (0..self.n).filter(|&v| !used[v]).collect(),
        };
        for v in values {
            x[p] = v;
            used[v] = true;
            if let Some(filtered) = self.filter(p, x, &cands) {
                if let Some(found) = self.descend(depth + 1, x, used, filtered) {
                    return Some(found);
                }
            }
            used[v] = false;
            x[p] = usize::MAX;
        }
        None
    }

    /// Keeps candidates y_i with y_i(x(q)) = x(g_i(q)) on every pair touching `p`.
    fn filter<'b>(&self, p: usize, x: &[usize], cands: &[Vec<&'b Permutation>]) -> Option<Vec<Vec<&'b Permutation>>> {
        let mut out = Vec::with_capacity(cands.len());
        for (i, g) in self.gens.iter().enumerate() {
            let mut pairs: Vec<(usize, usize)> = Vec::with_capacity(2);
            let gp = g.apply(p);
            if x[gp] != usize::MAX {
                pairs.push((x[p], x[gp]));
            }
            // q with g(q) = p
            let q = self.inv_gens[i].apply(p);
            if q != p && x[q] != usize::MAX {
                pairs.push((x[q], x[p]));
            }
            let kept: Vec<&Permutation> = cands[i]
                .iter()
                .copied()
                .filter(|y| pairs.iter().all(|&(a, b)| y.apply(a) == b))
                .collect();
            if kept.is_empty() {
                return None;
            }
            out.push(kept);
        }
        Some(out)
    }
}

fn small_generating_set(g: &PermGroup) -> Vec<&Permutation> {
    let mut gens: Vec<&Permutation> = Vec::new();
    let mut span: Option<PermGroup> = None;
    for c in g.generators().iter().filter(|p| !p.is_identity()) {
        if span.as_ref().is_some_and(|s| s.contains(c)) {
            continue;
        }
        gens.push(c);
        let s = PermGroup::with_limits(g.degree(), gens.iter().map(|p| (*p).clone()).collect(), g.limits())
            .expect("subgroup of a materialized group fits the cap");
        if s.order() == g.order() {
            break;
        }
        span = Some(s);
    }
    gens
}

pub fn are_equivalent(a: &PermGroup, b: &PermGroup) -> bool {
    find_conjugator(a, b).is_some()
}
