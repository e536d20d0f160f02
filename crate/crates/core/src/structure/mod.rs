//! Characteristic subgroups, quotients, Sylow subgroups and cyclic-by-p
//! decompositions.

mod action;
mod recognize;

pub use action::{
    acts_by_inversion, acts_faithfully, acts_irreducibly, acts_trivially, acts_without_fixed_points,
};
pub use recognize::{recognize, IsoType};

use fixedbitset::FixedBitSet;

use crate::arith;
use crate::error::GroupError;
use crate::group::{FiniteGroup, Subgroup};
use crate::perm::Permutation;

fn check_parent(g: &FiniteGroup, h: &Subgroup) -> Result<(), GroupError> {
    if h.parent().ptr_eq(g) {
        Ok(())
    } else {
        Err(GroupError::NotASubgroup)
    }
}

fn filtered(g: &FiniteGroup, keep: impl Fn(usize) -> bool) -> Subgroup {
    let mut members = FixedBitSet::with_capacity(g.order());
    for x in 0..g.order() {
        if keep(x) {
            members.insert(x);
        }
    }
    g.subgroup_from_members_unchecked(members)
}

pub fn center(g: &FiniteGroup) -> Subgroup {
    let gens = g.generator_indices();
    filtered(g, |x| gens.iter().all(|&s| g.mul(x, s) == g.mul(s, x)))
}

/// `C_G(H)`.
pub fn centralizer(g: &FiniteGroup, h: &Subgroup) -> Result<Subgroup, GroupError> {
    check_parent(g, h)?;
    let hg = h.generators();
    Ok(filtered(g, |x| {
        hg.iter().all(|&s| g.mul(x, s) == g.mul(s, x))
    }))
}

/// `N_G(H)`.
pub fn normalizer(g: &FiniteGroup, h: &Subgroup) -> Result<Subgroup, GroupError> {
    check_parent(g, h)?;
    let hg = h.generators();
    Ok(filtered(g, |x| {
        hg.iter().all(|&s| h.contains(g.conj(x, s)))
    }))
}

/// `[G, G]`, the normal closure of commutators of generators.
pub fn derived_subgroup(g: &FiniteGroup) -> Subgroup {
    let gens = g.generator_indices();
    let mut comms = Vec::new();
    for (i, &a) in gens.iter().enumerate() {
        for &b in &gens[i + 1..] {
            comms.push(g.commutator(a, b));
        }
    }
    g.normal_closure(&comms)
}

/// Prime `q` if `|G| = q^k` with `k >= 1`.
pub fn p_group_prime(g: &FiniteGroup) -> Option<u64> {
    let f = arith::factorize(g.order() as u64);
    match f.as_slice() {
        [(q, _)] => Some(*q),
        _ => None,
    }
}

/// Maximal subgroups, read off the subgroup lattice.
pub fn maximal_subgroups(g: &FiniteGroup) -> Result<Vec<Subgroup>, GroupError> {
    let subs = g.all_subgroups()?;
    let n = g.order();
    let mut out = Vec::new();
    for m in subs.iter().filter(|m| !m.is_whole()) {
        // One adjoined element per right coset decides maximality.
        let mut seen = m.member_set().clone();
        let mut maximal = true;
        for x in 0..n {
            if seen.contains(x) {
                continue;
            }
            let k = g.closure_extend(m.member_set(), m.generators(), &[x]);
            if k.count_ones(..) != n {
                maximal = false;
                break;
            }
            for y in m.members() {
                seen.insert(g.mul(y, x));
            }
        }
        if maximal {
            out.push(m.clone());
        }
    }
    Ok(out)
}

/// Intersection of the maximal subgroups. For `p`-groups the result is also
/// computed as `<x^p, [x, y]>` and the two must agree.
pub fn frattini(g: &FiniteGroup) -> Result<Subgroup, GroupError> {
    let mut members = FixedBitSet::with_capacity(g.order());
    members.insert_range(..);
    for m in maximal_subgroups(g)? {
        members.intersect_with(m.member_set());
    }
    let phi = g.subgroup_from_members_unchecked(members);
    if let Some(p) = p_group_prime(g) {
        let alt = p_group_frattini(g, &g.whole(), p);
        assert_eq!(
            phi.member_set(),
            alt.member_set(),
            "Frattini subgroup mismatch for a {p}-group of order {}",
            g.order()
        );
    }
    Ok(phi)
}

/// `<x^p, [x, y] : x, y in P>` for a `p`-subgroup `P` of `g`.
pub fn p_group_frattini(g: &FiniteGroup, pgrp: &Subgroup, p: u64) -> Subgroup {
    let mut seeds = Vec::new();
    let members: Vec<usize> = pgrp.members().collect();
    for &x in &members {
        seeds.push(g.pow(x, p));
    }
    let gens = pgrp.generators();
    for &a in gens {
        for &b in gens {
            seeds.push(g.commutator(a, b));
        }
    }
    seeds.sort_unstable();
    seeds.dedup();
    // Powers and commutators of generators suffice for commutators, but the
    // normal closure inside P is needed to pick up their conjugates.
    let mut h = g.subgroup_generated(&seeds);
    loop {
        let mut extra = Vec::new();
        for &x in h.generators() {
            for &s in gens {
                let y = g.conj(s, x);
                if !h.contains(y) {
                    extra.push(y);
                }
            }
        }
        if extra.is_empty() {
            break;
        }
        let mut all = h.generators().to_vec();
        all.extend(extra);
        h = g.subgroup_generated(&all);
    }
    h
}

/// A Sylow `p`-subgroup. Grown one step at a time from the trivial subgroup
/// by adjoining the first `x` in `N(P) \ P` with `x^p` in `P`.
pub fn sylow(g: &FiniteGroup, p: u64) -> Subgroup {
    let target = arith::p_part(g.order() as u64, p) as usize;
    let mut pg = g.trivial_subgroup();
    while pg.order() < target {
        let norm = normalizer(g, &pg).expect("same parent");
        let x = norm
            .members()
            .find(|&x| !pg.contains(x) && pg.contains(g.pow(x, p)))
            .expect("a p-subgroup below the Sylow order has a larger normalizing p-element");
        pg = pg.join(&g.subgroup_generated(&[x]));
    }
    pg
}

/// `G/N` realized as the permutation action of `G` on the right cosets of `N`.
#[derive(Clone, Debug)]
pub struct QuotientGroup {
    parent: FiniteGroup,
    kernel: Subgroup,
    model: FiniteGroup,
    projection: Vec<usize>,
}

impl QuotientGroup {
    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    pub fn kernel(&self) -> &Subgroup {
        &self.kernel
    }

    pub fn model(&self) -> &FiniteGroup {
        &self.model
    }

    /// Image in the model of the parent element at index `x`.
    pub fn project(&self, x: usize) -> usize {
        self.projection[x]
    }

    /// Full preimage of a subgroup of the model.
    pub fn preimage(&self, h: &Subgroup) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.parent.order());
        for x in 0..self.parent.order() {
            if h.contains(self.projection[x]) {
                members.insert(x);
            }
        }
        self.parent.subgroup_from_members_unchecked(members)
    }
}

pub fn quotient(g: &FiniteGroup, n: &Subgroup) -> Result<QuotientGroup, GroupError> {
    check_parent(g, n)?;
    if !g.is_normal(n) {
        return Err(GroupError::NotNormal);
    }
    let order = g.order();
    let mut coset = vec![usize::MAX; order];
    let mut reps = Vec::new();
    for x in 0..order {
        if coset[x] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(x);
        for y in n.members() {
            coset[g.mul(y, x)] = id;
        }
    }
    let k = reps.len();
    let action = |x: usize| -> Permutation {
        Permutation::new(reps.iter().map(|&r| coset[g.mul(r, x)]).collect())
            .expect("right multiplication permutes cosets")
    };
    let gens: Vec<Permutation> = g.generator_indices().iter().map(|&s| action(s)).collect();
    let model = FiniteGroup::build(k, &gens, g.caps())?;
    let projection: Vec<usize> = (0..order)
        .map(|x| model.index_of(&action(x)).expect("image lies in the model"))
        .collect();
    assert_eq!(model.order() * n.order(), order);
    for &a in g.generator_indices() {
        for &b in g.generator_indices() {
            assert_eq!(
                projection[g.mul(a, b)],
                model.mul(projection[a], projection[b])
            );
        }
    }
    Ok(QuotientGroup {
        parent: g.clone(),
        kernel: n.clone(),
        model,
        projection,
    })
}

/// `G = P.C` with `P` the normal Sylow `p`-subgroup and `C = <c>` cyclic of
/// order `m` prime to `p`.
#[derive(Clone, Debug)]
pub struct CyclicByPDecomposition {
    pub p: u64,
    pub sylow: Subgroup,
    pub complement: Subgroup,
    pub m: u64,
    pub c_gen: usize,
    /// Order of the automorphism of `P` induced by conjugation by `c_gen`.
    pub action_order: u64,
}

pub fn cyclic_by_p_decompose(g: &FiniteGroup, p: u64) -> Option<CyclicByPDecomposition> {
    let pg = sylow(g, p);
    if !g.is_normal(&pg) {
        return None;
    }
    let m = g.order() / pg.order();
    let c = (0..g.order()).find(|&x| g.order_of(x) == m)?;
    let complement = g.subgroup_generated(&[c]);
    let action_order = induced_action_order(g, c, &pg);
    Some(CyclicByPDecomposition {
        p,
        sylow: pg,
        complement,
        m: m as u64,
        c_gen: c,
        action_order,
    })
}

/// Least `k >= 1` such that `c^k` centralizes `P`.
pub fn induced_action_order(g: &FiniteGroup, c: usize, pg: &Subgroup) -> u64 {
    let mut ck = c;
    let mut k = 1;
    loop {
        if pg
            .generators()
            .iter()
            .all(|&x| g.mul(ck, x) == g.mul(x, ck))
        {
            return k;
        }
        ck = g.mul(ck, c);
        k += 1;
    }
}

pub fn minimal_normal_subgroups(g: &FiniteGroup) -> Vec<Subgroup> {
    let normals = g.normal_subgroups();
    let nontrivial: Vec<&Subgroup> = normals.iter().filter(|n| !n.is_trivial()).collect();
    nontrivial
        .iter()
        .filter(|n| {
            !nontrivial
                .iter()
                .any(|m| m.order() < n.order() && m.is_subgroup_of(n))
        })
        .map(|n| (*n).clone())
        .collect()
}

/// True when the group is cyclic-by-`p`.
pub fn is_cyclic_by_p(g: &FiniteGroup, p: u64) -> bool {
    g.whole().is_cyclic_by_p(p)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build, FamilySpec};

    fn b(s: &str) -> FiniteGroup {
        build(&s.parse::<FamilySpec>().unwrap()).unwrap()
    }

    #[test]
    fn center_and_friends() {
        assert_eq!(center(&b("Q:8")).order(), 2);
        assert_eq!(derived_subgroup(&b("A4")).order(), 4);
        let d16 = b("D:16");
        let whole = d16.whole();
        assert_eq!(centralizer(&d16, &whole).unwrap(), center(&d16));
        assert_eq!(center(&d16).order(), 2);
        assert_eq!(derived_subgroup(&b("S4")).order(), 12);
        assert_eq!(derived_subgroup(&b("C:12")).order(), 1);
        assert!(center(&b("S4")).is_trivial());
        let other = b("C:4");
        assert_eq!(
            centralizer(&d16, &other.whole()),
            Err(GroupError::NotASubgroup)
        );
    }

    #[test]
    fn normalizer_of_sylow_in_s4() {
        let s4 = b("S4");
        let p3 = sylow(&s4, 3);
        assert_eq!(p3.order(), 3);
        // S3 normalizes a 3-cycle subgroup in S4.
        assert_eq!(normalizer(&s4, &p3).unwrap().order(), 6);
    }

    #[test]
    fn frattini_examples() {
        assert_eq!(frattini(&b("C:8")).unwrap().order(), 4);
        assert_eq!(frattini(&b("EA:2^2")).unwrap().order(), 1);
        assert_eq!(frattini(&b("Q:8")).unwrap().order(), 2);
        assert_eq!(frattini(&b("D:16")).unwrap().order(), 4);
        assert_eq!(frattini(&b("S4")).unwrap().order(), 1);
        assert_eq!(frattini(&b("C:12")).unwrap().order(), 2);
    }

    #[test]
    fn frattini_brute_force_q8() {
        let q8 = b("Q:8");
        let maxes = maximal_subgroups(&q8).unwrap();
        assert_eq!(maxes.len(), 3);
        assert!(maxes.iter().all(|m| m.order() == 4 && m.is_cyclic()));
        let meet = maxes[0].intersection(&maxes[1]).intersection(&maxes[2]);
        assert_eq!(meet, frattini(&q8).unwrap());
    }

    #[test]
    fn sylow_examples() {
        let a4 = b("A4");
        let s = sylow(&a4, 2);
        assert_eq!(s.order(), 4);
        assert!(a4.is_normal(&s));
        assert_eq!(sylow(&b("C:12"), 3).order(), 3);
        let s4 = b("S4");
        let s2 = sylow(&s4, 2);
        assert_eq!(s2.order(), 8);
        assert!(!s4.is_normal(&s2));
        assert!(sylow(&b("C:5"), 2).is_trivial());
    }

    #[test]
    fn quotient_examples() {
        let q8 = b("Q:8");
        let q = quotient(&q8, &center(&q8)).unwrap();
        assert_eq!(recognize(q.model()), IsoType::Dihedral(4));
        let c6 = b("C:6");
        let c3 = sylow(&c6, 3);
        assert_eq!(
            recognize(quotient(&c6, &c3).unwrap().model()),
            IsoType::Cyclic(2)
        );
        let d16 = b("D:16");
        let q = quotient(&d16, &center(&d16)).unwrap();
        assert_eq!(recognize(q.model()), IsoType::Dihedral(8));
        let s4 = b("S4");
        let t = s4.subgroup_generated(&[1]);
        assert_eq!(quotient(&s4, &t).unwrap_err(), GroupError::NotNormal);
    }

    #[test]
    fn quotient_projection_is_homomorphism_everywhere() {
        let g = b("SL23");
        for n in g.normal_subgroups() {
            let q = quotient(&g, &n).unwrap();
            for a in 0..g.order() {
                for c in 0..g.order() {
                    assert_eq!(
                        q.project(g.mul(a, c)),
                        q.model().mul(q.project(a), q.project(c))
                    );
                }
            }
            assert_eq!(q.preimage(&q.model().trivial_subgroup()), n);
        }
    }

    #[test]
    fn decompose_examples() {
        let d = cyclic_by_p_decompose(&b("A4"), 2).unwrap();
        assert_eq!((d.sylow.order(), d.m, d.action_order), (4, 3, 3));
        let d = cyclic_by_p_decompose(&b("D:18"), 3).unwrap();
        assert_eq!((d.sylow.order(), d.m, d.action_order), (9, 2, 2));
        assert!(acts_by_inversion(d.sylow.parent(), d.c_gen, &d.sylow));
        assert!(cyclic_by_p_decompose(&b("S4"), 2).is_none());
        let d = cyclic_by_p_decompose(&b("C:15"), 3).unwrap();
        assert_eq!((d.sylow.order(), d.m, d.action_order), (3, 5, 1));
    }

    #[test]
    fn minimal_normals() {
        let m = minimal_normal_subgroups(&b("A4"));
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].order(), 4);
        assert_eq!(minimal_normal_subgroups(&b("EA:2^2")).len(), 3);
        let a5 = minimal_normal_subgroups(&b("A5"));
        assert_eq!(a5.len(), 1);
        assert!(a5[0].is_whole());
    }
}
