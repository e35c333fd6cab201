//! Permutational equivalence of transitive actions.

use serde::Serialize;

use crate::group::OrbitSystem;
use crate::perm::Permutation;
use crate::relabel;
use crate::structure::CosetActionRecord;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum RelabelingKind {
    /// Both actions have the same source group and β(x·g) = β(x)·g for every g.
    Intertwining,
    /// Different sources: the image groups are conjugate in the symmetric group.
    Conjugate,
}

/// A point bijection `points[i] = β(i)` from X's points to Y's points.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Relabeling {
    pub points: Vec<usize>,
    pub kind: RelabelingKind,
}

/// A relabeling carrying the action `x` onto the action `y`, if one exists.
///
/// When both records act with the same source group, the isomorphism between
/// the images is the one induced by the source, and β must intertwine every
/// element. Otherwise any isomorphism is allowed, which for permutation
/// groups means conjugacy of the images.
pub fn actions_equivalent(x: &CosetActionRecord, y: &CosetActionRecord) -> Option<Relabeling> {
    if x.degree != y.degree {
        return None;
    }
    if std::sync::Arc::ptr_eq(&x.source, &y.source) || x.source.same_group(&y.source) {
        return intertwining(x, y).map(|points| Relabeling {
            points,
            kind: RelabelingKind::Intertwining,
        });
    }
    let c = relabel::find_conjugator(&x.image, &y.image)?;
    Some(Relabeling {
        points: c.images(),
        kind: RelabelingKind::Conjugate,
    })
}

/// Backtracking over orbit representatives; β is forced along each orbit.
fn intertwining(x: &CosetActionRecord, y: &CosetActionRecord) -> Option<Vec<usize>> {
    if x.kernel.set() != y.kernel.set() {
        return None;
    }
    let n = x.degree;
    let src = &x.source;
    let gen_idx: Vec<usize> = src
        .generators()
        .iter()
        .map(|p| src.index_of(p).expect("generator in group"))
        .collect();
    let xg: Vec<&Permutation> = gen_idx.iter().map(|&i| x.image_of(i)).collect();
    let yg: Vec<&Permutation> = gen_idx.iter().map(|&i| y.image_of(i)).collect();
    let x_orbits = OrbitSystem::from_generators(n, &xg.iter().map(|p| (*p).clone()).collect::<Vec<_>>());
    let mut beta = vec![usize::MAX; n];
    let mut used = vec![false; n];
    if assign(0, &x_orbits.blocks, &xg, &yg, &mut beta, &mut used) {
        Some(beta)
    } else {
        None
    }
}

fn assign(
    orbit: usize,
    orbits: &[Vec<usize>],
    xg: &[&Permutation],
    yg: &[&Permutation],
    beta: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    if orbit == orbits.len() {
        return true;
    }
    let rep = orbits[orbit][0];
    for j in 0..beta.len() {
        if used[j] {
            continue;
        }
        let saved = beta.clone();
        let saved_used = used.clone();
        if propagate(rep, j, xg, yg, beta, used) && assign(orbit + 1, orbits, xg, yg, beta, used) {
            return true;
        }
        *beta = saved;
        *used = saved_used;
    }
    false
}

/// Sets β(rep) = j and extends along the generators; false on any conflict.
fn propagate(
    rep: usize,
    j: usize,
    xg: &[&Permutation],
    yg: &[&Permutation],
    beta: &mut [usize],
    used: &mut [bool],
) -> bool {
    beta[rep] = j;
    used[j] = true;
    let mut stack = vec![rep];
    while let Some(i) = stack.pop() {
        for (gx, gy) in xg.iter().zip(yg) {
            let (xi, yi) = (gx.apply(i), gy.apply(beta[i]));
            if beta[xi] == usize::MAX {
                if used[yi] {
                    return false;
                }
                beta[xi] = yi;
                used[yi] = true;
                stack.push(xi);
            } else if beta[xi] != yi {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{GroupRef, PermGroup};
    use crate::structure::{coset_action, SubgroupHandle};
    use std::sync::Arc;

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

    fn check_intertwines(x: &CosetActionRecord, y: &CosetActionRecord, r: &Relabeling) {
        for g in 0..x.source.order() {
            for i in 0..x.degree {
                assert_eq!(r.points[x.image_of(g).apply(i)], y.image_of(g).apply(r.points[i]));
            }
        }
    }

    #[test]
    fn action_is_equivalent_to_itself() {
        let g = grp(4, &["(1 2 3 4)", "(1 3)"]);
        let x = coset_action(&g, &sub(&g, &["(1 3)"])).unwrap();
        let r = actions_equivalent(&x, &x).unwrap();
        assert_eq!(r.points, vec![0, 1, 2, 3]);
        assert_eq!(r.kind, RelabelingKind::Intertwining);
    }

    #[test]
    fn regular_c4_and_klein_are_not_equivalent() {
        let c4 = grp(4, &["(1 2 3 4)"]);
        let v4 = grp(4, &["(1 2)(3 4)", "(1 3)(2 4)"]);
        let x = coset_action(&c4, &SubgroupHandle::trivial(&c4)).unwrap();
        let y = coset_action(&v4, &SubgroupHandle::trivial(&v4)).unwrap();
        assert!(actions_equivalent(&x, &y).is_none());
    }

    #[test]
    fn conjugate_stabilizers_give_equivalent_actions() {
        let g = grp(3, &["(1 2 3)", "(1 2)"]);
        let x = coset_action(&g, &sub(&g, &["(1 2)"])).unwrap();
        let y = coset_action(&g, &sub(&g, &["(2 3)"])).unwrap();
        let r = actions_equivalent(&x, &y).unwrap();
        assert_eq!(r.kind, RelabelingKind::Intertwining);
        check_intertwines(&x, &y, &r);
    }

    #[test]
    fn non_conjugate_stabilizers_are_not_intertwined() {
        // the two classes of V4 in S4 have equal index but are not conjugate
        let g = grp(4, &["(1 2 3 4)", "(1 2)"]);
        let x = coset_action(&g, &sub(&g, &["(1 2)", "(3 4)"])).unwrap();
        let y = coset_action(&g, &sub(&g, &["(1 2)(3 4)", "(1 3)(2 4)"])).unwrap();
        assert!(actions_equivalent(&x, &y).is_none());
    }

    #[test]
    fn different_sources_use_image_conjugacy() {
        let a = grp(3, &["(1 2 3)", "(1 2)"]);
        let b = grp(6, &["(1 2 3)(4 5 6)", "(1 4)(2 6)(3 5)"]);
        let x = coset_action(&a, &sub(&a, &["(1 2)"])).unwrap();
        let bs = sub(&b, &["(1 4)(2 6)(3 5)"]);
        let y = coset_action(&b, &bs).unwrap();
        let r = actions_equivalent(&x, &y).unwrap();
        assert_eq!(r.kind, RelabelingKind::Conjugate);
    }
}
