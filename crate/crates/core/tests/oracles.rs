//! Cross-checks of the structural machinery against slow, independent
//! reimplementations on the corpus groups.

use std::collections::{BTreeSet, HashSet};

use oortscan::construct::{build, corpus, CorpusEntry, FamilySpec, Profile};
use oortscan::structure::{
    cyclic_by_p_decompose, frattini, p_group_prime, quotient, recognize, sylow,
};
use oortscan::{FiniteGroup, IsoType};

/// Distinct groups of the smoke corpus, one per spec string.
fn corpus_groups(max_order: usize) -> Vec<(String, FiniteGroup)> {
    let mut seen = HashSet::new();
    corpus(Profile::Smoke)
        .into_iter()
        .filter(|e: &CorpusEntry| seen.insert(e.spec.to_string()))
        .filter_map(|e| {
            let g = build(&e.spec).unwrap();
            (g.order() <= max_order).then(|| (e.spec.to_string(), g))
        })
        .collect()
}

fn close(g: &FiniteGroup, seed: &BTreeSet<usize>) -> BTreeSet<usize> {
    let mut set = seed.clone();
    set.insert(0);
    loop {
        let mut grown = set.clone();
        for &a in &set {
            for &b in &set {
                grown.insert(g.mul(a, b));
            }
        }
        if grown.len() == set.len() {
            return set;
        }
        set = grown;
    }
}

/// Every subgroup: cyclic subgroups, then pairwise joins until nothing new.
fn naive_lattice(g: &FiniteGroup) -> BTreeSet<BTreeSet<usize>> {
    let mut all: BTreeSet<BTreeSet<usize>> = (0..g.order())
        .map(|x| close(g, &BTreeSet::from([x])))
        .collect();
    loop {
        let list: Vec<_> = all.iter().cloned().collect();
        let mut next = all.clone();
        for (i, a) in list.iter().enumerate() {
            for b in &list[i + 1..] {
                if a.is_subset(b) || b.is_subset(a) {
                    continue;
                }
                next.insert(close(g, &a.union(b).copied().collect()));
            }
        }
        if next.len() == all.len() {
            return all;
        }
        all = next;
    }
}

#[test]
fn lattice_matches_naive_fixpoint() {
    let groups = corpus_groups(48);
    assert!(groups.len() > 40);
    for (name, g) in groups {
        let fast: BTreeSet<BTreeSet<usize>> = g
            .all_subgroups()
            .unwrap()
            .iter()
            .map(|h| h.members().collect())
            .collect();
        assert_eq!(fast, naive_lattice(&g), "{name}");
    }
}

#[test]
fn s4_has_thirty_subgroups() {
    let s4 = build(&FamilySpec::S4).unwrap();
    assert_eq!(naive_lattice(&s4).len(), 30);
    assert_eq!(s4.all_subgroups().unwrap().len(), 30);
}

#[test]
fn frattini_equals_powers_and_commutators() {
    for (name, g) in corpus_groups(64) {
        let Some(p) = p_group_prime(&g) else { continue };
        if p > 3 {
            continue;
        }
        let mut gens: Vec<usize> = (0..g.order()).map(|x| g.pow(x, p)).collect();
        for a in 0..g.order() {
            for b in 0..g.order() {
                gens.push(g.commutator(a, b));
            }
        }
        let expected = g.subgroup_generated(&gens);
        assert_eq!(frattini(&g).unwrap(), expected, "{name}");
    }
}

#[test]
fn burnside_basis() {
    for (name, g) in corpus_groups(64) {
        if p_group_prime(&g).is_none() {
            continue;
        }
        let phi = frattini(&g).unwrap();
        let q = quotient(&g, &phi).unwrap();
        let cyclic = (0..g.order()).any(|x| g.order_of(x) == g.order());
        let q_cyclic = (0..q.model().order()).any(|x| q.model().order_of(x) == q.model().order());
        assert_eq!(cyclic, q_cyclic, "{name}");
    }
}

#[test]
fn quotient_projection_is_a_homomorphism() {
    for (name, g) in corpus_groups(48) {
        for n in g.normal_subgroups() {
            let q = quotient(&g, &n).unwrap();
            assert_eq!(q.model().order() * n.order(), g.order(), "{name}");
            for a in 0..g.order() {
                for &b in g.generator_indices() {
                    assert_eq!(
                        q.project(g.mul(a, b)),
                        q.model().mul(q.project(a), q.project(b)),
                        "{name}"
                    );
                }
            }
        }
    }
}

#[test]
fn decomposition_exactly_when_sylow_normal_and_quotient_cyclic() {
    for (name, g) in corpus_groups(128) {
        for p in [2, 3, 5, 7] {
            let s = sylow(&g, p);
            let expected = g.is_normal(&s) && {
                let q = quotient(&g, &s).unwrap();
                (0..q.model().order()).any(|x| q.model().order_of(x) == q.model().order())
            };
            assert_eq!(
                cyclic_by_p_decompose(&g, p).is_some(),
                expected,
                "{name} p={p}"
            );
        }
    }
}

#[test]
fn recognize_round_trip_up_to_256() {
    let mut specs: Vec<FamilySpec> = Vec::new();
    for n in 1..=256u64 {
        specs.push(FamilySpec::Cyclic(n));
    }
    for n in (4..=256u64).step_by(2) {
        specs.push(FamilySpec::Dihedral(n));
    }
    for a in 3..=8u32 {
        specs.push(FamilySpec::GeneralizedQuaternion(1 << a));
        if a >= 4 {
            specs.push(FamilySpec::SemiDihedral(1 << a));
        }
    }
    for (p, r) in [
        (2, 2),
        (2, 3),
        (2, 5),
        (3, 2),
        (3, 4),
        (5, 3),
        (7, 2),
        (11, 2),
    ] {
        specs.push(FamilySpec::ElementaryAbelian { p, rank: r });
    }
    specs.extend([
        FamilySpec::A4,
        FamilySpec::S4,
        FamilySpec::A5,
        FamilySpec::SL23,
    ]);
    for spec in specs {
        let tag = spec.expected_tag().unwrap();
        let got = recognize(&build(&spec).unwrap());
        assert!(got.matches(&tag), "{spec}: {got} vs {tag}");
    }
}

#[test]
fn order_16_trio_is_distinguished() {
    let tags: HashSet<IsoType> = ["D:16", "SD:16", "Q:16"]
        .iter()
        .map(|s| recognize(&build(&s.parse().unwrap()).unwrap()))
        .collect();
    assert_eq!(tags.len(), 3);
}

#[test]
fn builds_are_deterministic() {
    for e in corpus(Profile::Smoke).iter().take(200) {
        let a = build(&e.spec).unwrap();
        let b = build(&e.spec).unwrap();
        assert_eq!(a.elements(), b.elements(), "{}", e.spec);
    }
}
