//! Brute-force oracles shared by the integration tests.
//!
//! Everything here works on raw permutations and plain collections so that it
//! stays independent of the crate's tables, lattices and relabeling search.

#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};

use mintrans_core::{PermGroup, Permutation};

pub fn perm(degree: usize, cycles: &str) -> Permutation {
    Permutation::parse(cycles, degree).unwrap()
}

/// Closure of a generating set by breadth-first multiplication.
pub fn closure(degree: usize, gens: &[Permutation]) -> BTreeSet<Vec<usize>> {
    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let id: Vec<usize> = (0..degree).collect();
    let mut queue = VecDeque::from([id.clone()]);
    seen.insert(id);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y: Vec<usize> = x.iter().map(|&i| g.apply(i)).collect();
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

/// All permutations of 0..n in lexicographic order.
pub fn all_permutations(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                go(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// A finite group given by its elements and a multiplication table built from
/// image tuples (apply left factor first).
pub struct Brute {
    pub degree: usize,
    pub elements: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub inv: Vec<usize>,
}

impl Brute {
    pub fn new(degree: usize, elements: Vec<Vec<usize>>) -> Brute {
        let index: HashMap<&Vec<usize>, usize> = elements.iter().enumerate().map(|(i, e)| (e, i)).collect();
        let mul: Vec<Vec<usize>> = elements
            .iter()
            .map(|a| {
                elements
                    .iter()
                    .map(|b| index[&a.iter().map(|&i| b[i]).collect::<Vec<_>>()])
                    .collect()
            })
            .collect();
        let id: Vec<usize> = (0..degree).collect();
        let e = index[&id];
        let inv = (0..elements.len())
            .map(|a| (0..elements.len()).find(|&b| mul[a][b] == e).unwrap())
            .collect();
        Brute {
            degree,
            elements,
            mul,
            inv,
        }
    }

    pub fn of(g: &PermGroup) -> Brute {
        Brute::new(g.degree(), g.elements().iter().map(|p| p.images()).collect())
    }

    pub fn symmetric(n: usize) -> Brute {
        Brute::new(n, all_permutations(n))
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        let id: Vec<usize> = (0..self.degree).collect();
        self.elements.iter().position(|e| *e == id).unwrap()
    }

    /// Closure of `base ∪ extra`, where `base` is already a subgroup.
    pub fn join(&self, base: &[bool], extra: usize) -> Vec<bool> {
        let mut set = base.to_vec();
        let mut members: Vec<usize> = (0..set.len()).filter(|&i| set[i]).collect();
        let mut gens: Vec<usize> = members.clone();
        gens.push(extra);
        if !set[extra] {
            set[extra] = true;
            members.push(extra);
        }
        let mut i = 0;
        while i < members.len() {
            let x = members[i];
            for &g in &gens {
                let y = self.mul[x][g];
                if !set[y] {
                    set[y] = true;
                    members.push(y);
                }
            }
            i += 1;
        }
        set
    }

    /// Every subgroup, found by adjoining one element at a time to known
    /// subgroups, starting from the trivial one.
    pub fn subgroups_by_extension(&self) -> Vec<Vec<bool>> {
        let n = self.order();
        let mut trivial = vec![false; n];
        trivial[self.identity()] = true;
        let mut seen: HashSet<Vec<bool>> = HashSet::from([trivial.clone()]);
        let mut queue = VecDeque::from([trivial]);
        let mut out = Vec::new();
        while let Some(h) = queue.pop_front() {
            let mut covered = h.clone();
            for x in 0..n {
                if covered[x] {
                    continue;
                }
                // <H, x> depends only on the double coset HxH
                for a in (0..n).filter(|&a| h[a]) {
                    for b in (0..n).filter(|&b| h[b]) {
                        covered[self.mul[self.mul[a][x]][b]] = true;
                    }
                }
                let k = self.join(&h, x);
                if seen.insert(k.clone()) {
                    queue.push_back(k);
                }
            }
            out.push(h);
        }
        out
    }

    /// Every subgroup, found by a decision tree over the elements: each
    /// element is either forced into the subgroup (with its closure) or
    /// excluded, and branches whose closure hits an excluded element die.
    pub fn subgroups_by_subset_search(&self) -> Vec<Vec<bool>> {
        let n = self.order();
        let mut start = vec![false; n];
        start[self.identity()] = true;
        let mut out = Vec::new();
        let mut excluded = vec![false; n];
        self.search(0, &start, &mut excluded, &mut out);
        out
    }

    fn search(&self, next: usize, current: &[bool], excluded: &mut Vec<bool>, out: &mut Vec<Vec<bool>>) {
        let n = self.order();
        let Some(x) = (next..n).find(|&x| !current[x]) else {
            out.push(current.to_vec());
            return;
        };
        let with = self.join(current, x);
        if !(0..n).any(|i| with[i] && excluded[i]) {
            self.search(x + 1, &with, excluded, out);
        }
        excluded[x] = true;
        self.search(x + 1, current, excluded, out);
        excluded[x] = false;
    }

    pub fn is_transitive(&self, set: &[bool]) -> bool {
        let mut orbit = vec![false; self.degree];
        for (i, e) in self.elements.iter().enumerate() {
            if set[i] {
                orbit[e[0]] = true;
            }
        }
        orbit.iter().all(|&b| b)
    }

    pub fn conjugate_set(&self, set: &[bool], x: usize) -> Vec<bool> {
        let mut out = vec![false; set.len()];
        for (h, &inside) in set.iter().enumerate() {
            if inside {
                out[self.mul[self.mul[self.inv[x]][h]][x]] = true;
            }
        }
        out
    }

    /// Intersection of all conjugates of `a`.
    pub fn core(&self, a: &[bool]) -> Vec<bool> {
        let mut core = a.to_vec();
        for x in 0..self.order() {
            let c = self.conjugate_set(a, x);
            for i in 0..core.len() {
                core[i] &= c[i];
            }
        }
        core
    }

    /// Elements fixing every right coset of `a`: those g with (a x g) = (a x)
    /// for every x.
    pub fn coset_action_kernel(&self, a: &[bool]) -> Vec<bool> {
        let n = self.order();
        let cosets: Vec<BTreeSet<usize>> = (0..n)
            .map(|x| (0..n).filter(|&h| a[h]).map(|h| self.mul[h][x]).collect())
            .collect();
        (0..n)
            .map(|g| {
                (0..n).all(|x| {
                    let moved: BTreeSet<usize> = cosets[x].iter().map(|&y| self.mul[y][g]).collect();
                    moved == cosets[x]
                })
            })
            .collect()
    }

    pub fn to_group(&self, set: &[bool]) -> PermGroup {
        let gens: Vec<Permutation> = (0..set.len())
            .filter(|&i| set[i])
            .map(|i| Permutation::from_images(self.elements[i].clone()).unwrap())
            .collect();
        PermGroup::new(self.degree, gens).unwrap()
    }
}

/// Minimal transitive subgroups of Sym(n), one per conjugacy class, found by
/// enumerating every subgroup of Sym(n).
pub fn minimal_transitive_classes(n: usize) -> Vec<PermGroup> {
    let s = Brute::symmetric(n);
    let subs = s.subgroups_by_extension();
    let transitive: Vec<&Vec<bool>> = subs.iter().filter(|h| s.is_transitive(h)).collect();
    let strictly_inside = |a: &Vec<bool>, b: &Vec<bool>| a != b && a.iter().zip(b).all(|(&x, &y)| !x || y);
    let minimal: Vec<&Vec<bool>> = transitive
        .iter()
        .copied()
        .filter(|t| !transitive.iter().any(|u| strictly_inside(u, t)))
        .collect();
    let mut reps: Vec<&Vec<bool>> = Vec::new();
    for t in minimal {
        let known = reps.iter().any(|r| (0..s.order()).any(|x| s.conjugate_set(r, x) == *t));
        if !known {
            reps.push(t);
        }
    }
    reps.into_iter().map(|r| s.to_group(r)).collect()
}

/// Are two groups of degree n conjugate in Sym(n)? Exhaustive over Sym(n).
pub fn conjugate_in_symmetric(a: &PermGroup, b: &PermGroup) -> bool {
    if a.degree() != b.degree() || a.order() != b.order() {
        return false;
    }
    let target: HashSet<Vec<usize>> = b.elements().iter().map(|p| p.images()).collect();
    all_permutations(a.degree()).into_iter().any(|x| {
        let x = Permutation::from_images(x).unwrap();
        a.generators()
            .iter()
            .all(|g| target.contains(&g.conjugate_by(&x).images()))
    })
}

/// Least k ≥ 1 with a^k ≡ 1 (mod m), by repeated multiplication.
pub fn order_mod(a: usize, m: usize) -> usize {
    let mut x = a % m;
    let mut k = 1;
    while x != 1 {
        x = x * a % m;
        k += 1;
        assert!(k <= m, "{a} is not a unit mod {m}");
    }
    k
}

pub fn primes_dividing(n: usize) -> Vec<usize> {
    (2..=n)
        .filter(|&p| n.is_multiple_of(p) && (2..p).all(|d| p % d != 0))
        .collect()
}

/// Largest power of p dividing n.
pub fn p_part(n: usize, p: usize) -> usize {
    let mut part = 1;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
        part *= p;
    }
    part
}
