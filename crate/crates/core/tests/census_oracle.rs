mod common;

use std::sync::Arc;

use common::{conjugate_in_symmetric, minimal_transitive_classes, Brute};
use mintrans_core::catalog::{cyclic, dihedral, direct_product, quaternion, regular, symmetric};
use mintrans_core::census::{
    canonical_generators, dedup_by_relabeling, minimal_transitive_subgroups, mt_census, CensusEntry,
};
use mintrans_core::cli::report::CensusRecord;
use mintrans_core::relabel::are_equivalent;
use mintrans_core::theory::is_minimally_transitive;
use mintrans_core::{GroupRef, PermGroup};

fn orders(groups: impl IntoIterator<Item = usize>) -> Vec<usize> {
    let mut v: Vec<usize> = groups.into_iter().collect();
    v.sort_unstable();
    v
}

#[test]
fn census_matches_exhaustive_subgroup_search() {
    for n in 1..=6 {
        let oracle = minimal_transitive_classes(n);
        let census = mt_census(n).unwrap();
        assert_eq!(census.len(), oracle.len(), "degree {n}");
        assert_eq!(
            orders(census.iter().map(|e| e.order)),
            orders(oracle.iter().map(|g| g.order())),
            "degree {n}"
        );
        for e in &census {
            let hits = oracle.iter().filter(|o| conjugate_in_symmetric(&e.group, o)).count();
            assert_eq!(hits, 1, "degree {n}, entry of order {}", e.order);
        }
    }
}

#[test]
fn census_matches_lattice_descent_in_symmetric_group() {
    for n in 2..=6 {
        let s: GroupRef = Arc::new(symmetric(n));
        let found = minimal_transitive_subgroups(&s).unwrap();
        let classes = dedup_by_relabeling(found.iter().map(|h| h.as_group()).collect());
        let census = mt_census(n).unwrap();
        assert_eq!(classes.len(), census.len(), "degree {n}");
        for c in &classes {
            assert_eq!(census.iter().filter(|e| are_equivalent(&e.group, c)).count(), 1);
        }
    }
}

#[test]
fn symmetric_group_descent_examples() {
    let s3: GroupRef = Arc::new(symmetric(3));
    let m = minimal_transitive_subgroups(&s3).unwrap();
    assert_eq!(m.len(), 1);
    assert_eq!(m[0].order(), 3);

    let s4: GroupRef = Arc::new(symmetric(4));
    let m = minimal_transitive_subgroups(&s4).unwrap();
    assert_eq!(orders(m.iter().map(|h| h.order())), vec![4, 4, 4, 4]);
    assert_eq!(m.iter().filter(|h| h.is_normal()).count(), 1);

    let c5: GroupRef = Arc::new(cyclic(5));
    let m = minimal_transitive_subgroups(&c5).unwrap();
    assert_eq!(m.len(), 1);
    assert!(m[0].is_whole());
}

#[test]
fn descent_results_are_mt_and_cover_every_transitive_subgroup() {
    let s4: GroupRef = Arc::new(symmetric(4));
    let brute = Brute::of(&s4);
    let found = minimal_transitive_subgroups(&s4).unwrap();
    for h in &found {
        assert!(is_minimally_transitive(&Arc::new(h.as_group())).unwrap().holds);
    }
    for t in brute.subgroups_by_subset_search() {
        if !brute.is_transitive(&t) {
            continue;
        }
        let tg = brute.to_group(&t);
        assert!(found.iter().any(|h| h.elements().iter().all(|p| tg.contains(p))));
    }
}

#[test]
fn prime_degrees_give_only_the_cyclic_group() {
    for p in [2, 3, 5, 7] {
        let census = mt_census(p).unwrap();
        assert_eq!(census.len(), 1, "degree {p}");
        assert_eq!(census[0].order, p);
        assert!(census[0].attributes.abelian && census[0].attributes.regular);
    }
}

#[test]
fn degree_eight_contains_the_regular_groups_of_order_eight() {
    let census = mt_census(8).unwrap();
    let c2 = cyclic(2);
    let regulars = [
        cyclic(8),
        regular(&direct_product(&cyclic(4), &c2)),
        regular(&direct_product(&direct_product(&c2, &c2), &c2)),
        regular(&dihedral(4)),
        regular(&quaternion()),
    ];
    for g in &regulars {
        assert_eq!(g.degree(), 8);
        assert_eq!(census.iter().filter(|e| are_equivalent(&e.group, g)).count(), 1);
    }
    assert!(census.iter().all(|e| e.order.is_power_of_two()));
}

fn check_entries(census: &[CensusEntry]) {
    for (i, e) in census.iter().enumerate() {
        assert!(is_minimally_transitive(&e.group).unwrap().holds);
        assert_eq!(e.group.degree(), e.degree);
        let regenerated = PermGroup::new(e.degree, e.generators.clone()).unwrap();
        assert!(regenerated.same_group(&e.group));
        for j in 0..e.generators.len() {
            let mut fewer = e.generators.clone();
            fewer.remove(j);
            let smaller = PermGroup::new(e.degree, fewer).unwrap();
            assert!(!smaller.is_transitive() || smaller.order() < e.order);
        }
        for f in &census[i + 1..] {
            assert!(!are_equivalent(&e.group, &f.group));
        }
    }
}

#[test]
fn entries_are_mt_irredundant_and_inequivalent() {
    for n in 1..=7 {
        check_entries(&mt_census(n).unwrap());
    }
}

#[test]
fn census_output_is_sorted_and_reproducible() {
    for n in [4, 6] {
        let first: Vec<CensusRecord> = mt_census(n).unwrap().iter().map(Into::into).collect();
        let second: Vec<CensusRecord> = mt_census(n).unwrap().iter().map(Into::into).collect();
        assert_eq!(
            serde_json::to_string(&first).unwrap(),
            serde_json::to_string(&second).unwrap()
        );
        let keys: Vec<_> = mt_census(n)
            .unwrap()
            .iter()
            .map(|e| (e.order, e.generators.clone()))
            .collect();
        assert!(keys.windows(2).all(|w| w[0] <= w[1]));
    }
}

#[test]
fn canonical_generators_regenerate_the_group() {
    for g in [symmetric(4), regular(&quaternion()), dihedral(6)] {
        let gens = canonical_generators(&g);
        assert!(PermGroup::new(g.degree(), gens.clone()).unwrap().same_group(&g));
        assert_eq!(
            canonical_generators(&PermGroup::new(g.degree(), gens.clone()).unwrap()),
            gens
        );
    }
}

#[test]
fn relabeling_dedup_is_an_equivalence() {
    let sample: Vec<PermGroup> = mt_census(6)
        .unwrap()
        .iter()
        .map(|e| e.group.as_ref().clone())
        .chain([
            regular(&symmetric(3)),
            cyclic(6),
            regular(&direct_product(&cyclic(2), &cyclic(3))),
        ])
        .collect();
    for a in &sample {
        assert!(are_equivalent(a, a));
        for b in &sample {
            assert_eq!(are_equivalent(a, b), are_equivalent(b, a));
            for c in &sample {
                if are_equivalent(a, b) && are_equivalent(b, c) {
                    assert!(are_equivalent(a, c));
                }
            }
        }
    }
    assert_eq!(dedup_by_relabeling(sample).len(), 4);
}
