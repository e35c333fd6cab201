//! Permutation groups given by generators, with an eagerly computed closure.

use std::collections::{HashMap, VecDeque};
use std::sync::{Arc, OnceLock};

use crate::bitset::ElementSet;
use crate::error::{Error, Result};
use crate::perm::Permutation;
use crate::structure::lattice::Lattice;

pub const DEFAULT_ORDER_CAP: usize = 20_000;
pub const DEFAULT_LATTICE_BOUND: usize = 2_000;

/// Computational bounds carried by every group and inherited by derived groups.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    /// Largest closure that will be materialized.
    pub order_cap: usize,
    /// Largest order for which multiplication tables and subgroup lattices are built.
    pub lattice_bound: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            order_cap: DEFAULT_ORDER_CAP,
            lattice_bound: DEFAULT_LATTICE_BOUND,
        }
    }
}

impl Limits {
    /// Defaults, with `MINTRANS_MAX_ORDER` overriding the order cap.
    pub fn from_env() -> Self {
        let mut limits = Limits::default();
        if let Some(cap) = std::env::var("MINTRANS_MAX_ORDER")
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
        {
            limits.order_cap = cap;
        }
        limits
    }
}

/// Multiplication table over element indices. Index 0 is the identity.
pub struct Table {
    n: usize,
    mul: Vec<u32>,
    inv: Vec<u32>,
}

impl Table {
    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.mul[a * self.n + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inv[a] as usize
    }

    /// `x^-1 a x`
    #[inline]
    pub fn conj(&self, a: usize, x: usize) -> usize {
        self.mul(self.mul(self.inv(x), a), x)
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Subgroup generated by `gens`, as an element set.
    pub fn closure(&self, gens: impl IntoIterator<Item = usize>) -> ElementSet {
        let gens: Vec<usize> = gens.into_iter().filter(|&g| g != 0).collect();
        let mut set = ElementSet::empty(self.n);
        set.insert(0);
        let mut queue = vec![0usize];
        while let Some(x) = queue.pop() {
            for &g in &gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    queue.push(y);
                }
            }
        }
        set
    }

    /// Closure of `base` (already a subgroup) together with extra generators.
    pub fn extend(&self, base: &ElementSet, base_gens: &[usize], extra: &[usize]) -> ElementSet {
        let gens: Vec<usize> = base_gens.iter().chain(extra).copied().collect();
        let mut set = base.clone();
        let mut queue: Vec<usize> = base.iter().collect();
        while let Some(x) = queue.pop() {
            for &g in &gens {
                let y = self.mul(x, g);
                if set.insert(y) {
                    queue.push(y);
                }
            }
        }
        set
    }

    pub fn is_subgroup(&self, set: &ElementSet) -> bool {
        if !set.contains(0) {
            return false;
        }
        let elems = set.to_vec();
        elems
            .iter()
            .all(|&a| elems.iter().all(|&b| set.contains(self.mul(a, b))))
    }

    pub fn element_order(&self, a: usize) -> usize {
        let mut k = 1;
        let mut x = a;
        while x != 0 {
            x = self.mul(x, a);
            k += 1;
        }
        k
    }
}

/// Partition of the point set into orbits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OrbitSystem {
    /// Orbits, each sorted, ordered by least point.
    pub blocks: Vec<Vec<usize>>,
    /// Common orbit length when all orbits have the same size.
    pub block_size: Option<usize>,
}

impl OrbitSystem {
    pub fn from_generators(degree: usize, gens: &[Permutation]) -> Self {
        let mut parent: Vec<usize> = (0..degree).collect();
        fn find(parent: &mut [usize], mut x: usize) -> usize {
            while parent[x] != x {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            x
        }
        for g in gens {
            for p in 0..degree {
                let (a, b) = (find(&mut parent, p), find(&mut parent, g.apply(p)));
                if a != b {
                    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                    parent[hi] = lo;
                }
            }
        }
        let mut by_root: HashMap<usize, Vec<usize>> = HashMap::new();
        for p in 0..degree {
            let r = find(&mut parent, p);
            by_root.entry(r).or_default().push(p);
        }
        let mut blocks: Vec<Vec<usize>> = by_root.into_values().collect();
        blocks.sort();
        let block_size = match blocks.first() {
            Some(b) if blocks.iter().all(|x| x.len() == b.len()) => Some(b.len()),
            _ => None,
        };
        OrbitSystem { blocks, block_size }
    }

    pub fn is_transitive(&self) -> bool {
        self.blocks.len() == 1
    }

    pub fn block_of(&self, point: usize) -> usize {
        self.blocks
            .iter()
            .position(|b| b.binary_search(&point).is_ok())
            .expect("point outside orbit system")
    }
}

pub struct PermGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    limits: Limits,
    table: OnceLock<Table>,
    pub(crate) lattice: OnceLock<Arc<Lattice>>,
}

/// Clones the elements and generators; cached tables and lattices are rebuilt on demand.
impl Clone for PermGroup {
    fn clone(&self) -> Self {
        self.relimited(self.limits)
    }
}

impl std::fmt::Debug for PermGroup {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("PermGroup")
            .field("degree", &self.degree)
            .field("order", &self.order())
            .field("generators", &self.generators)
            .finish()
    }
}

impl PermGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::with_limits(degree, generators, Limits::default())
    }

    /// Breadth-first closure of the generators; fails once more than
    /// `limits.order_cap` elements have been produced.
    pub fn with_limits(degree: usize, generators: Vec<Permutation>, limits: Limits) -> Result<Self> {
        if degree == 0 {
            return Err(Error::InvalidPermutation("degree must be at least 1".into()));
        }
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::DegreeMismatch {
                    left: degree,
                    right: g.degree(),
                });
            }
        }
        let identity = Permutation::identity(degree);
        let mut seen: HashMap<Permutation, ()> = HashMap::new();
        seen.insert(identity.clone(), ());
        let mut queue = VecDeque::from([identity]);
        let mut found = Vec::new();
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = x.then(g);
                if !seen.contains_key(&y) {
                    if seen.len() >= limits.order_cap {
                        return Err(Error::OrderCapExceeded { cap: limits.order_cap });
                    }
                    seen.insert(y.clone(), ());
                    queue.push_back(y);
                }
            }
            found.push(x);
        }
        Ok(Self::from_elements_unchecked(degree, generators, found, limits))
    }

    /// Builds a group from a known complete element list.
    pub(crate) fn from_elements_unchecked(
        degree: usize,
        generators: Vec<Permutation>,
        mut elements: Vec<Permutation>,
        limits: Limits,
    ) -> Self {
        elements.sort();
        elements.dedup();
        let index = elements.iter().enumerate().map(|(i, p)| (p.clone(), i)).collect();
        PermGroup {
            degree,
            generators,
            elements,
            index,
            limits,
            table: OnceLock::new(),
            lattice: OnceLock::new(),
        }
    }

    pub fn trivial(degree: usize) -> Self {
        Self::new(degree, vec![]).expect("trivial group")
    }

    /// Parses generators in 1-based cycle notation.
    pub fn from_cycle_strings(degree: usize, gens: &[&str]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|s| Permutation::parse(s, degree))
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, gens)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn limits(&self) -> Limits {
        self.limits
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// All elements in lexicographic order of their image tables.
    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.index.contains_key(p)
    }

    pub fn orbits(&self) -> OrbitSystem {
        OrbitSystem::from_generators(self.degree, &self.generators)
    }

    pub fn is_transitive(&self) -> bool {
        self.orbits().is_transitive()
    }

    /// Elements fixing `point`.
    pub fn point_stabilizer_set(&self, point: usize) -> ElementSet {
        ElementSet::from_indices(
            self.order(),
            self.elements
                .iter()
                .enumerate()
                .filter(|(_, p)| p.apply(point) == point)
                .map(|(i, _)| i),
        )
    }

    /// Same group with different limits; cached structure is not carried over.
    pub fn relimited(&self, limits: Limits) -> PermGroup {
        Self::from_elements_unchecked(self.degree, self.generators.clone(), self.elements.clone(), limits)
    }

    /// True when both groups have the same degree and element set.
    pub fn same_group(&self, other: &PermGroup) -> bool {
        std::ptr::eq(self, other) || (self.degree == other.degree && self.elements == other.elements)
    }

    pub fn check_lattice_bound(&self) -> Result<()> {
        if self.order() > self.limits.lattice_bound {
            Err(Error::LatticeBoundExceeded {
                order: self.order(),
                bound: self.limits.lattice_bound,
            })
        } else {
            Ok(())
        }
    }

    /// Multiplication table over element indices, built on first use.
    pub fn table(&self) -> Result<&Table> {
        self.check_lattice_bound()?;
        Ok(self.table.get_or_init(|| self.build_table()))
    }

    fn build_table(&self) -> Table {
        let n = self.order();
        let gens: Vec<&Permutation> = self.generators.iter().filter(|g| !g.is_identity()).collect();
        // right multiplication by each generator
        let right: Vec<Vec<u32>> = gens
            .iter()
            .map(|g| self.elements.iter().map(|x| self.index[&x.then(g)] as u32).collect())
            .collect();
        // spanning tree: every element is parent * generator
        let mut col_parent: Vec<Option<(usize, usize)>> = vec![None; n];
        let mut order = vec![0usize];
        let mut seen = vec![false; n];
        seen[0] = true;
        let mut head = 0;
        while head < order.len() {
            let x = order[head];
            head += 1;
            for (gi, r) in right.iter().enumerate() {
                let y = r[x] as usize;
                if !seen[y] {
                    seen[y] = true;
                    col_parent[y] = Some((x, gi));
                    order.push(y);
                }
            }
        }
        debug_assert_eq!(order.len(), n);
        let mut mul = vec![0u32; n * n];
        for i in 0..n {
            mul[i * n] = i as u32;
        }
        for &j in order.iter().skip(1) {
            let (p, gi) = col_parent[j].expect("spanning tree");
            let r = &right[gi];
            for i in 0..n {
                mul[i * n + j] = r[mul[i * n + p] as usize];
            }
        }
        let mut inv = vec![0u32; n];
        for i in 0..n {
            for j in 0..n {
                if mul[i * n + j] == 0 {
                    inv[i] = j as u32;
                    break;
                }
            }
        }
        Table { n, mul, inv }
    }

    /// Permutation group generated by the given elements (by index).
    pub fn subgroup_as_group(&self, set: &ElementSet, gens: &[usize]) -> PermGroup {
        let elements: Vec<Permutation> = set.iter().map(|i| self.elements[i].clone()).collect();
        let generators = gens.iter().map(|&i| self.elements[i].clone()).collect();
        Self::from_elements_unchecked(self.degree, generators, elements, self.limits)
    }
}

/// Shared handle to a group.
pub type GroupRef = Arc<PermGroup>;
