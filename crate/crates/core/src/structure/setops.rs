//! Subgroup arithmetic on element sets of a group with a multiplication table.

use crate::bitset::ElementSet;
use crate::group::Table;

/// A small generating set, chosen greedily in element order.
pub fn generating_set(t: &Table, set: &ElementSet) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut span = ElementSet::from_indices(t.order(), [0]);
    for x in set.iter() {
        if !span.contains(x) {
            span = t.extend(&span, &gens, &[x]);
            gens.push(x);
        }
    }
    gens
}

/// |XY| for subgroups X, Y: |X||Y| / |X ∩ Y|.
pub fn product_order(x: &ElementSet, y: &ElementSet) -> usize {
    x.count() * y.count() / x.intersection_count(y)
}

/// The set XY, a subgroup when one of the factors normalizes the other.
pub fn product_set(t: &Table, x: &ElementSet, y: &ElementSet) -> ElementSet {
    let mut out = ElementSet::empty(t.order());
    let ys: Vec<usize> = y.iter().collect();
    for a in x.iter() {
        for &b in &ys {
            out.insert(t.mul(a, b));
        }
    }
    out
}

pub fn conjugate_set(t: &Table, set: &ElementSet, x: usize) -> ElementSet {
    ElementSet::from_indices(t.order(), set.iter().map(|a| t.conj(a, x)))
}

/// Does every element of `by` normalize `set`?
pub fn is_normalized_by(t: &Table, set: &ElementSet, set_gens: &[usize], by: &[usize]) -> bool {
    by.iter().all(|&x| set_gens.iter().all(|&s| set.contains(t.conj(s, x))))
}

/// Smallest subgroup containing `gens` that is normalized by `ambient_gens`.
pub fn normal_closure(t: &Table, gens: &[usize], ambient_gens: &[usize]) -> ElementSet {
    let mut current_gens: Vec<usize> = gens.to_vec();
    let mut set = t.closure(current_gens.iter().copied());
    loop {
        let mut extra = Vec::new();
        for &s in &current_gens {
            for &x in ambient_gens {
                let c = t.conj(s, x);
                if !set.contains(c) && !extra.contains(&c) {
                    extra.push(c);
                }
            }
        }
        if extra.is_empty() {
            return set;
        }
        set = t.extend(&set, &current_gens, &extra);
        current_gens.extend(extra);
    }
}

/// `[x, y] = x^-1 y^-1 x y`
pub fn commutator(t: &Table, x: usize, y: usize) -> usize {
    t.mul(t.mul(t.inv(x), t.inv(y)), t.mul(x, y))
}

/// The subgroup generated by all commutators [x, y], x ∈ X, y ∈ Y.
pub fn commutator_subgroup(t: &Table, x: &ElementSet, y: &ElementSet) -> ElementSet {
    let mut comms = ElementSet::empty(t.order());
    let ys: Vec<usize> = y.iter().collect();
    for a in x.iter() {
        for &b in &ys {
            comms.insert(commutator(t, a, b));
        }
    }
    let gens = generating_set(t, &comms);
    t.closure(gens)
}

pub fn is_abelian(t: &Table, set: &ElementSet) -> bool {
    let gens = generating_set(t, set);
    gens.iter().all(|&a| gens.iter().all(|&b| t.mul(a, b) == t.mul(b, a)))
}

/// Last term of the derived series; trivial exactly when the subgroup is solvable.
pub fn solvable_residual(t: &Table, set: &ElementSet) -> ElementSet {
    let mut cur = set.clone();
    loop {
        let next = commutator_subgroup(t, &cur, &cur);
        if next.count() == cur.count() {
            return cur;
        }
        cur = next;
    }
}

/// Last term of the lower central series; trivial exactly when nilpotent.
pub fn nilpotent_residual(t: &Table, set: &ElementSet) -> ElementSet {
    let mut cur = set.clone();
    loop {
        let next = commutator_subgroup(t, &cur, set);
        if next.count() == cur.count() {
            return cur;
        }
        cur = next;
    }
}

pub fn is_solvable(t: &Table, set: &ElementSet) -> bool {
    solvable_residual(t, set).count() == 1
}

pub fn is_nilpotent(t: &Table, set: &ElementSet) -> bool {
    nilpotent_residual(t, set).count() == 1
}

pub fn is_cyclic(t: &Table, set: &ElementSet) -> bool {
    let n = set.count();
    set.iter().any(|x| t.element_order(x) == n)
}

/// Abelian with all non-identity elements of one common prime order.
pub fn is_elementary_abelian(t: &Table, set: &ElementSet) -> bool {
    if !is_abelian(t, set) {
        return false;
    }
    let mut prime = None;
    for x in set.iter().filter(|&x| x != 0) {
        let o = t.element_order(x);
        if !super::primes::is_prime(o) {
            return false;
        }
        match prime {
            None => prime = Some(o),
            Some(p) if p != o => return false,
            _ => {}
        }
    }
    true
}

pub fn is_simple(t: &Table, set: &ElementSet) -> bool {
    let n = set.count();
    if n == 1 {
        return false;
    }
    if is_abelian(t, set) {
        return super::primes::is_prime(n);
    }
    if is_solvable(t, set) {
        return false;
    }
    let gens = generating_set(t, set);
    set.iter()
        .filter(|&x| x != 0)
        .all(|x| normal_closure(t, &[x], &gens).count() == n)
}

/// Subgroups of `ambient` conjugate to `set` under `ambient`.
pub fn conjugates(t: &Table, set: &ElementSet, ambient: &ElementSet) -> Vec<ElementSet> {
    let mut out: Vec<ElementSet> = Vec::new();
    for x in ambient.iter() {
        let c = conjugate_set(t, set, x);
        if !out.contains(&c) {
            out.push(c);
        }
    }
    out.sort_by(|a, b| a.cmp_elements(b));
    out
}

/// Intersection of all `ambient`-conjugates of `set`.
pub fn core_in(t: &Table, set: &ElementSet, ambient: &ElementSet) -> ElementSet {
    let mut core = set.clone();
    for x in ambient.iter() {
        if core.count() == 1 {
            break;
        }
        core.intersect_with(&conjugate_set(t, set, x));
    }
    core
}
