//! Fully enumerated permutation groups and their subgroups.
//!
//! A [`FiniteGroup`] stores every element in lexicographic order of its image
//! sequence (so the identity is always index 0) together with a complete
//! multiplication table. Elements are addressed by their index in that table.
//! A [`Subgroup`] is an explicit member set over those indices.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::sync::{Arc, OnceLock};

use fixedbitset::FixedBitSet;

use crate::arith;
use crate::caps::Caps;
use crate::error::GroupError;
use crate::perm::Permutation;

#[derive(Clone)]
pub struct FiniteGroup {
    inner: Arc<GroupData>,
}

struct GroupData {
    degree: usize,
    generators: Vec<Permutation>,
    gen_idx: Vec<usize>,
    elements: Vec<Permutation>,
    lookup: HashMap<Permutation, u32>,
    table: Vec<u32>,
    inverses: Vec<u32>,
    orders: Vec<u32>,
    caps: Caps,
    lattice: OnceLock<Result<Vec<Member>, GroupError>>,
    normals: OnceLock<Vec<Member>>,
}

/// A subgroup as its member bitset plus generators.
type Member = (FixedBitSet, Vec<usize>);

/// Closure of `gens` under composition, with the default [`Caps`].
pub fn generate(degree: usize, gens: &[Permutation]) -> Result<FiniteGroup, GroupError> {
    FiniteGroup::generate(degree, gens)
}

impl FiniteGroup {
    pub fn generate(degree: usize, gens: &[Permutation]) -> Result<Self, GroupError> {
        Self::generate_with_caps(degree, gens, Caps::default())
    }

    pub fn generate_with_caps(
        degree: usize,
        gens: &[Permutation],
        caps: Caps,
    ) -> Result<Self, GroupError> {
        if degree == 0 {
            return Err(GroupError::BadPermutation("degree must be positive".into()));
        }
        if degree > caps.degree {
            return Err(GroupError::CapExceeded {
                what: "degree",
                limit: caps.degree,
                actual: degree,
            });
        }
        Self::build(degree, gens, caps)
    }

    /// Closure without the degree cap; used for coset actions and regular
    /// representations built internally.
    pub(crate) fn build(
        degree: usize,
        gens: &[Permutation],
        caps: Caps,
    ) -> Result<Self, GroupError> {
        for g in gens {
            if g.degree() != degree {
                return Err(GroupError::BadPermutation(format!(
                    "generator {g} has degree {}, expected {degree}",
                    g.degree()
                )));
            }
        }
        let generators: Vec<Permutation> = if gens.is_empty() {
            vec![Permutation::identity(degree)]
        } else {
            gens.to_vec()
        };
        let k = generators.len();

        // Breadth-first closure under right multiplication by generators.
        let identity = Permutation::identity(degree);
        let mut found = vec![identity.clone()];
        let mut lookup: HashMap<Permutation, u32> = HashMap::from([(identity, 0)]);
        let mut parent: Vec<(u32, u32)> = vec![(0, u32::MAX)];
        let mut rmul: Vec<u32> = Vec::new();
        let mut i = 0;
        while i < found.len() {
            for (s, gen) in generators.iter().enumerate() {
                let y = found[i].compose(gen);
                let j = match lookup.get(&y) {
                    Some(&j) => j,
                    None => {
                        if found.len() >= caps.order {
                            return Err(GroupError::CapExceeded {
                                what: "order",
                                limit: caps.order,
                                actual: found.len() + 1,
                            });
                        }
                        let j = found.len() as u32;
                        lookup.insert(y.clone(), j);
                        found.push(y);
                        parent.push((i as u32, s as u32));
                        j
                    }
                };
                rmul.push(j);
            }
            i += 1;
        }
        let n = found.len();

        // Canonical order: lexicographic on image sequences.
        let mut order: Vec<u32> = (0..n as u32).collect();
        order.sort_by(|&a, &b| found[a as usize].cmp(&found[b as usize]));
        let mut new_of_old = vec![0u32; n];
        for (new, &old) in order.iter().enumerate() {
            new_of_old[old as usize] = new as u32;
        }
        let mut rmul_new = vec![0u32; n * k];
        for old in 0..n {
            let new = new_of_old[old] as usize;
            for s in 0..k {
                rmul_new[new * k + s] = new_of_old[rmul[old * k + s] as usize];
            }
        }

        // Row a of the table follows the discovery tree: a * (b s) = (a b) s.
        let mut table = vec![0u32; n * n];
        for a in 0..n {
            let row = &mut table[a * n..(a + 1) * n];
            row[new_of_old[0] as usize] = a as u32;
            for old_b in 1..n {
                let (par, s) = parent[old_b];
                let ab_par = row[new_of_old[par as usize] as usize] as usize;
                row[new_of_old[old_b] as usize] = rmul_new[ab_par * k + s as usize];
            }
        }

        let elements: Vec<Permutation> = order
            .iter()
            .map(|&old| found[old as usize].clone())
            .collect();
        let lookup: HashMap<Permutation, u32> = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let inverses: Vec<u32> = elements.iter().map(|p| lookup[&p.inverse()]).collect();
        let gen_idx: Vec<usize> = generators.iter().map(|g| lookup[g] as usize).collect();

        let mut orders = vec![0u32; n];
        for a in 0..n {
            let mut x = a;
            let mut k = 1;
            while x != 0 {
                x = table[x * n + a] as usize;
                k += 1;
            }
            orders[a] = k;
        }

        Ok(FiniteGroup {
            inner: Arc::new(GroupData {
                degree,
                generators,
                gen_idx,
                elements,
                lookup,
                table,
                inverses,
                orders,
                caps,
                lattice: OnceLock::new(),
                normals: OnceLock::new(),
            }),
        })
    }

    pub fn degree(&self) -> usize {
        self.inner.degree
    }

    pub fn order(&self) -> usize {
        self.inner.elements.len()
    }

    pub fn caps(&self) -> Caps {
        self.inner.caps
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.inner.generators
    }

    pub fn generator_indices(&self) -> &[usize] {
        &self.inner.gen_idx
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.inner.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.inner.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.inner.lookup.get(p).map(|&i| i as usize)
    }

    pub fn contains(&self, p: &Permutation) -> bool {
        self.inner.lookup.contains_key(p)
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn ptr_eq(&self, other: &FiniteGroup) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner)
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.inner.table[a * self.order() + b] as usize
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inner.inverses[a] as usize
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let ord = self.order_of(a) as u64;
        let mut x = 0;
        for _ in 0..k % ord {
            x = self.mul(x, a);
        }
        x
    }

    /// `g x g^-1`.
    #[inline]
    pub fn conj(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(g, x), self.inv(g))
    }

    /// `a^-1 b^-1 a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    /// Order of the element at index `a`.
    #[inline]
    pub fn order_of(&self, a: usize) -> usize {
        self.inner.orders[a] as usize
    }

    /// Order of a permutation that must belong to the group.
    pub fn element_order(&self, g: &Permutation) -> Result<u64, GroupError> {
        let i = self.index_of(g).ok_or(GroupError::NotAMember)?;
        Ok(self.order_of(i) as u64)
    }

    pub fn is_abelian(&self) -> bool {
        let gens = self.generator_indices();
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn exponent(&self) -> u64 {
        (0..self.order()).fold(1, |acc, a| arith::lcm(acc, self.order_of(a) as u64))
    }

    /// Element-order multiset as `(order, count)` pairs, ascending.
    pub fn order_statistics(&self) -> Vec<(usize, usize)> {
        let mut counts: std::collections::BTreeMap<usize, usize> = Default::default();
        for a in 0..self.order() {
            *counts.entry(self.order_of(a)).or_default() += 1;
        }
        counts.into_iter().collect()
    }

    pub fn conjugacy_class(&self, a: usize) -> Vec<usize> {
        let mut seen = FixedBitSet::with_capacity(self.order());
        seen.insert(a);
        let mut queue = vec![a];
        let mut out = vec![a];
        while let Some(x) = queue.pop() {
            for &s in self.generator_indices() {
                let y = self.conj(s, x);
                if !seen.put(y) {
                    queue.push(y);
                    out.push(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Smallest subgroup containing `base` (assumed closed under `base_gens`)
    /// and the elements `extra`.
    pub(crate) fn closure_extend(
        &self,
        base: &FixedBitSet,
        base_gens: &[usize],
        extra: &[usize],
    ) -> FixedBitSet {
        let mut set = base.clone();
        let mut queue = Vec::new();
        for x in base.ones() {
            for &s in extra {
                let y = self.mul(x, s);
                if !set.put(y) {
                    queue.push(y);
                }
            }
        }
        while let Some(x) = queue.pop() {
            for &s in base_gens.iter().chain(extra) {
                let y = self.mul(x, s);
                if !set.put(y) {
                    queue.push(y);
                }
            }
        }
        set
    }

    fn singleton_identity(&self) -> FixedBitSet {
        let mut set = FixedBitSet::with_capacity(self.order());
        set.insert(0);
        set
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup::from_parts(self.clone(), self.singleton_identity(), Vec::new())
    }

    pub fn whole(&self) -> Subgroup {
        let mut all = FixedBitSet::with_capacity(self.order());
        all.insert_range(..);
        Subgroup::from_parts(self.clone(), all, self.generator_indices().to_vec())
    }

    /// Subgroup generated by element indices.
    pub fn subgroup_generated(&self, elems: &[usize]) -> Subgroup {
        let members = self.closure_extend(&self.singleton_identity(), &[], elems);
        let gens: Vec<usize> = elems.iter().copied().filter(|&e| e != 0).collect();
        Subgroup::from_parts(self.clone(), members, gens)
    }

    /// Subgroup generated by permutations, which must all lie in the group.
    pub fn subgroup_generated_by(&self, elems: &[Permutation]) -> Result<Subgroup, GroupError> {
        let idx = elems
            .iter()
            .map(|p| self.index_of(p).ok_or(GroupError::NotAMember))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.subgroup_generated(&idx))
    }

    /// Wraps an explicit member set, verifying that it is a subgroup.
    pub fn subgroup_from_members(&self, members: FixedBitSet) -> Result<Subgroup, GroupError> {
        if members.len() != self.order() || !members.contains(0) {
            return Err(GroupError::NotASubgroup);
        }
        let idx: Vec<usize> = members.ones().collect();
        for &a in &idx {
            if !members.contains(self.inv(a)) {
                return Err(GroupError::NotASubgroup);
            }
            for &b in &idx {
                if !members.contains(self.mul(a, b)) {
                    return Err(GroupError::NotASubgroup);
                }
            }
        }
        let gens = greedy_generators(self, &members);
        Ok(Subgroup::from_parts(self.clone(), members, gens))
    }

    /// Wraps a member set already known to be a subgroup.
    pub(crate) fn subgroup_from_members_unchecked(&self, members: FixedBitSet) -> Subgroup {
        let gens = greedy_generators(self, &members);
        Subgroup::from_parts(self.clone(), members, gens)
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        debug_assert!(h.parent.ptr_eq(self));
        let hg = h.generators();
        self.generator_indices()
            .iter()
            .all(|&g| hg.iter().all(|&x| h.contains(self.conj(g, x))))
    }

    /// `g H g^-1`.
    pub fn conjugate(&self, h: &Subgroup, g: usize) -> Subgroup {
        let mut members = FixedBitSet::with_capacity(self.order());
        for x in h.members() {
            members.insert(self.conj(g, x));
        }
        let gens = h.generators().iter().map(|&x| self.conj(g, x)).collect();
        Subgroup::from_parts(self.clone(), members, gens)
    }

    /// Conjugate by a permutation of the group.
    pub fn conjugate_by(&self, h: &Subgroup, g: &Permutation) -> Result<Subgroup, GroupError> {
        let g = self.index_of(g).ok_or(GroupError::NotAMember)?;
        Ok(self.conjugate(h, g))
    }

    /// Every subgroup, each once, sorted by order then member list.
    pub fn all_subgroups(&self) -> Result<Vec<Subgroup>, GroupError> {
        let lattice = self.inner.lattice.get_or_init(|| self.compute_lattice());
        match lattice {
            Ok(list) => Ok(list
                .iter()
                .map(|(m, g)| Subgroup::from_parts(self.clone(), m.clone(), g.clone()))
                .collect()),
            Err(e) => Err(e.clone()),
        }
    }

    // Grows the lattice from the trivial subgroup by adjoining one element at
    // a time. Every subgroup K is <M, x> for a maximal subgroup M of K, so the
    // fixpoint reaches all of them. Elements h g^j and g^j h with gcd(j, |g|) = 1
    // give the same join with H and are skipped.
    fn compute_lattice(&self) -> Result<Vec<Member>, GroupError> {
        let n = self.order();
        let limit = self.inner.caps.subgroups;
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        let mut list: Vec<(FixedBitSet, Vec<usize>)> = Vec::new();
        let trivial = self.singleton_identity();
        seen.insert(trivial.clone());
        list.push((trivial, Vec::new()));
        let mut i = 0;
        while i < list.len() {
            let (h, hgens) = list[i].clone();
            let mut skip = h.clone();
            let h_members: Vec<usize> = h.ones().collect();
            for g in 0..n {
                if skip.contains(g) {
                    continue;
                }
                let k = self.closure_extend(&h, &hgens, &[g]);
                let ord = self.order_of(g) as u64;
                let mut gj = g;
                for j in 1..ord {
                    if arith::gcd(j, ord) == 1 {
                        for &x in &h_members {
                            skip.insert(self.mul(x, gj));
                            skip.insert(self.mul(gj, x));
                        }
                    }
                    gj = self.mul(gj, g);
                }
                if !seen.contains(&k) {
                    if list.len() >= limit {
                        return Err(GroupError::CapExceeded {
                            what: "subgroup count",
                            limit,
                            actual: list.len() + 1,
                        });
                    }
                    seen.insert(k.clone());
                    let mut gens = hgens.clone();
                    gens.push(g);
                    list.push((k, gens));
                }
            }
            i += 1;
        }
        list.sort_by(|a, b| compare_member_sets(&a.0, &b.0));
        Ok(list)
    }

    /// Every normal subgroup, sorted like [`FiniteGroup::all_subgroups`].
    ///
    /// Computed from normal closures of single elements and their products,
    /// without enumerating the full lattice.
    pub fn normal_subgroups(&self) -> Vec<Subgroup> {
        self.inner
            .normals
            .get_or_init(|| self.compute_normals())
            .iter()
            .map(|(m, g)| Subgroup::from_parts(self.clone(), m.clone(), g.clone()))
            .collect()
    }

    /// Normal closure of a set of elements: the smallest normal subgroup containing them.
    pub fn normal_closure(&self, elems: &[usize]) -> Subgroup {
        let (members, gens) = self.normal_closure_parts(&self.singleton_identity(), &[], elems);
        Subgroup::from_parts(self.clone(), members, gens)
    }

    fn normal_closure_parts(
        &self,
        base: &FixedBitSet,
        base_gens: &[usize],
        extra: &[usize],
    ) -> (FixedBitSet, Vec<usize>) {
        let mut gens: Vec<usize> = base_gens.to_vec();
        let mut set = base.clone();
        let mut pending: Vec<usize> = extra.to_vec();
        loop {
            let fresh: Vec<usize> = pending.drain(..).filter(|&x| !set.contains(x)).collect();
            if fresh.is_empty() {
                break;
            }
            let mut added = Vec::new();
            for x in fresh {
                if !set.contains(x) {
                    set = self.closure_extend(&set, &gens, &[x]);
                    gens.push(x);
                    added.push(x);
                }
            }
            for &x in &added {
                for &s in self.generator_indices() {
                    pending.push(self.conj(s, x));
                }
            }
            // Conjugates of older generators are already inside by induction.
        }
        (set, gens)
    }

    fn compute_normals(&self) -> Vec<(FixedBitSet, Vec<usize>)> {
        let n = self.order();
        let mut seen: HashSet<FixedBitSet> = HashSet::new();
        let mut list: Vec<(FixedBitSet, Vec<usize>)> = Vec::new();
        let trivial = self.singleton_identity();
        seen.insert(trivial.clone());
        list.push((trivial.clone(), Vec::new()));
        let mut classified = FixedBitSet::with_capacity(n);
        for a in 1..n {
            if classified.contains(a) {
                continue;
            }
            for c in self.conjugacy_class(a) {
                classified.insert(c);
            }
            let (members, gens) = self.normal_closure_parts(&trivial, &[], &[a]);
            if seen.insert(members.clone()) {
                list.push((members, gens));
            }
        }
        // Products of normal subgroups until no new ones appear.
        let mut i = 0;
        while i < list.len() {
            for j in 0..i {
                let (a, ag) = &list[i];
                let (b, bg) = &list[j];
                if a.is_subset(b) || b.is_subset(a) {
                    continue;
                }
                let joined = self.closure_extend(a, ag, bg);
                if !seen.contains(&joined) {
                    seen.insert(joined.clone());
                    let gens: Vec<usize> = ag.iter().chain(bg).copied().collect();
                    list.push((joined, gens));
                }
            }
            i += 1;
        }
        list.sort_by(|a, b| compare_member_sets(&a.0, &b.0));
        list
    }

    /// Cyclic-by-`p` subgroups: normal Sylow `p`-subgroup with cyclic quotient.
    pub fn cyclic_by_p_subgroups(&self, p: u64) -> Result<Vec<Subgroup>, GroupError> {
        Ok(self
            .all_subgroups()?
            .into_iter()
            .filter(|h| h.is_cyclic_by_p(p))
            .collect())
    }
}

impl fmt::Debug for FiniteGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FiniteGroup")
            .field("degree", &self.degree())
            .field("order", &self.order())
            .field("generators", &self.generators())
            .finish()
    }
}

/// Orders member sets by cardinality, then by ascending member list.
fn compare_member_sets(a: &FixedBitSet, b: &FixedBitSet) -> Ordering {
    a.count_ones(..)
        .cmp(&b.count_ones(..))
        .then_with(|| a.ones().cmp(b.ones()))
}

fn greedy_generators(g: &FiniteGroup, members: &FixedBitSet) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut current = g.singleton_identity();
    for x in members.ones() {
        if !current.contains(x) {
            current = g.closure_extend(&current, &gens, &[x]);
            gens.push(x);
        }
    }
    gens
}

/// A subgroup of a [`FiniteGroup`], stored as a member set over the parent's
/// element indices together with a generating set.
#[derive(Clone)]
pub struct Subgroup {
    parent: FiniteGroup,
    members: FixedBitSet,
    order: usize,
    gens: Vec<usize>,
}

impl Subgroup {
    fn from_parts(parent: FiniteGroup, members: FixedBitSet, gens: Vec<usize>) -> Self {
        let order = members.count_ones(..);
        Subgroup {
            parent,
            members,
            order,
            gens,
        }
    }

    pub fn parent(&self) -> &FiniteGroup {
        &self.parent
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn index(&self) -> usize {
        self.parent.order() / self.order
    }

    pub fn contains(&self, i: usize) -> bool {
        self.members.contains(i)
    }

    pub fn contains_perm(&self, p: &Permutation) -> bool {
        self.parent.index_of(p).is_some_and(|i| self.contains(i))
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.members.ones()
    }

    pub fn member_set(&self) -> &FixedBitSet {
        &self.members
    }

    /// A generating set (element indices in the parent).
    pub fn generators(&self) -> &[usize] {
        &self.gens
    }

    pub fn is_trivial(&self) -> bool {
        self.order == 1
    }

    pub fn is_whole(&self) -> bool {
        self.order == self.parent.order()
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.members.is_subset(&other.members)
    }

    pub fn is_normal(&self) -> bool {
        self.parent.is_normal(self)
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.parent;
        self.gens
            .iter()
            .all(|&a| self.gens.iter().all(|&b| g.mul(a, b) == g.mul(b, a)))
    }

    pub fn is_cyclic(&self) -> bool {
        self.members()
            .any(|x| self.parent.order_of(x) == self.order)
    }

    pub fn intersection(&self, other: &Subgroup) -> Subgroup {
        let mut members = self.members.clone();
        members.intersect_with(&other.members);
        let gens = greedy_generators(&self.parent, &members);
        Subgroup::from_parts(self.parent.clone(), members, gens)
    }

    pub fn join(&self, other: &Subgroup) -> Subgroup {
        let members = self
            .parent
            .closure_extend(&self.members, &self.gens, &other.gens);
        let gens = self.gens.iter().chain(&other.gens).copied().collect();
        Subgroup::from_parts(self.parent.clone(), members, gens)
    }

    /// Normal Sylow `p`-subgroup with cyclic quotient, decided from element
    /// orders: the `p`-elements must number exactly the `p`-part of the order,
    /// and some element must have the complementary order.
    pub fn is_cyclic_by_p(&self, p: u64) -> bool {
        let n = self.order as u64;
        let pp = arith::p_part(n, p);
        let m = (n / pp) as usize;
        let g = &self.parent;
        let p_elems = self
            .members()
            .filter(|&x| arith::p_power_exponent(g.order_of(x) as u64, p).is_some())
            .count() as u64;
        p_elems == pp && self.members().any(|x| g.order_of(x) == m)
    }

    /// The subgroup as a group in its own right, with the embedding of its
    /// element indices into the parent.
    pub fn to_group_with_embedding(&self) -> (FiniteGroup, Vec<usize>) {
        let parent = &self.parent;
        let embed: Vec<usize> = self.members().collect();
        let mut pos = vec![u32::MAX; parent.order()];
        for (i, &x) in embed.iter().enumerate() {
            pos[x] = i as u32;
        }
        let n = embed.len();
        let mut table = vec![0u32; n * n];
        for (i, &a) in embed.iter().enumerate() {
            for (j, &b) in embed.iter().enumerate() {
                table[i * n + j] = pos[parent.mul(a, b)];
            }
        }
        let elements: Vec<Permutation> = embed.iter().map(|&x| parent.element(x).clone()).collect();
        let lookup = elements
            .iter()
            .enumerate()
            .map(|(i, p)| (p.clone(), i as u32))
            .collect();
        let inverses = embed.iter().map(|&x| pos[parent.inv(x)]).collect();
        let orders = embed.iter().map(|&x| parent.order_of(x) as u32).collect();
        let gens = if self.gens.is_empty() {
            vec![0]
        } else {
            self.gens.clone()
        };
        let generators = gens.iter().map(|&x| parent.element(x).clone()).collect();
        let gen_idx = gens.iter().map(|&x| pos[x] as usize).collect();
        let group = FiniteGroup {
            inner: Arc::new(GroupData {
                degree: parent.degree(),
                generators,
                gen_idx,
                elements,
                lookup,
                table,
                inverses,
                orders,
                caps: parent.caps(),
                lattice: OnceLock::new(),
                normals: OnceLock::new(),
            }),
        };
        (group, embed)
    }

    pub fn to_group(&self) -> FiniteGroup {
        self.to_group_with_embedding().0
    }
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.parent.ptr_eq(&other.parent) && self.members == other.members
    }
}

impl Eq for Subgroup {}

impl PartialOrd for Subgroup {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Subgroup {
    fn cmp(&self, other: &Self) -> Ordering {
        compare_member_sets(&self.members, &other.members)
    }
}

impl fmt::Debug for Subgroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Subgroup")
            .field("order", &self.order)
            .field("parent_order", &self.parent.order())
            .field(
                "generators",
                &self
                    .gens
                    .iter()
                    .map(|&x| self.parent.element(x).to_string())
                    .collect::<Vec<_>>(),
            )
            .finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        Permutation::from_cycles(n, &cycles.iter().map(|c| c.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    fn sym4() -> FiniteGroup {
        generate(4, &[cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[0, 1]])]).unwrap()
    }

    fn alt4() -> FiniteGroup {
        generate(4, &[cyc(4, &[&[0, 1, 2]]), cyc(4, &[&[0, 1], &[2, 3]])]).unwrap()
    }

    fn cyclic(n: usize) -> FiniteGroup {
        let c: Vec<usize> = (0..n).collect();
        generate(n, &[Permutation::from_cycles(n, &[c]).unwrap()]).unwrap()
    }

    #[test]
    fn generate_examples() {
        assert_eq!(cyclic(3).order(), 3);
        let d8 = generate(4, &[cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[1, 3]])]).unwrap();
        assert_eq!(d8.order(), 8);
        let trivial = generate(1, &[Permutation::identity(1)]).unwrap();
        assert_eq!(trivial.order(), 1);
        assert_eq!(trivial.trivial_subgroup().order(), 1);
    }

    #[test]
    fn canonical_order_and_identity() {
        let g = sym4();
        assert!(g.element(0).is_identity());
        assert!(g.elements().windows(2).all(|w| w[0] < w[1]));
        for a in 0..g.order() {
            assert_eq!(g.mul(a, g.inv(a)), 0);
            for b in 0..g.order() {
                let expect = g.element(a).compose(g.element(b));
                assert_eq!(g.element(g.mul(a, b)), &expect);
            }
        }
    }

    #[test]
    fn caps_are_enforced() {
        let caps = Caps::default().with_order(10);
        let err = FiniteGroup::generate_with_caps(4, sym4().generators(), caps).unwrap_err();
        assert!(matches!(err, GroupError::CapExceeded { what: "order", .. }));
        let big = Permutation::identity(65);
        assert!(matches!(
            generate(65, &[big]),
            Err(GroupError::CapExceeded { what: "degree", .. })
        ));
        assert!(matches!(
            generate(4, &[Permutation::identity(3)]),
            Err(GroupError::BadPermutation(_))
        ));
    }

    #[test]
    fn element_orders() {
        let d8 = generate(4, &[cyc(4, &[&[0, 1, 2, 3]]), cyc(4, &[&[1, 3]])]).unwrap();
        assert_eq!(d8.element_order(&Permutation::identity(4)).unwrap(), 1);
        assert_eq!(d8.element_order(&cyc(4, &[&[0, 1, 2, 3]])).unwrap(), 4);
        assert_eq!(d8.element_order(&cyc(4, &[&[0, 1], &[2, 3]])).unwrap(), 2);
        assert_eq!(
            d8.element_order(&cyc(4, &[&[0, 1]])),
            Err(GroupError::NotAMember)
        );
    }

    #[test]
    fn subgroup_generated_examples() {
        let a4 = alt4();
        assert_eq!(a4.subgroup_generated(&[]).order(), 1);
        let v = a4
            .subgroup_generated_by(&[cyc(4, &[&[0, 1], &[2, 3]]), cyc(4, &[&[0, 2], &[1, 3]])])
            .unwrap();
        assert_eq!(v.order(), 4);
        let c6 = cyclic(6);
        let g = c6.generator_indices()[0];
        assert_eq!(c6.subgroup_generated(&[g]).order(), 6);
        assert!(matches!(
            a4.subgroup_generated_by(&[cyc(4, &[&[0, 1]])]),
            Err(GroupError::NotAMember)
        ));
    }

    #[test]
    fn lattice_counts() {
        assert_eq!(cyclic(6).all_subgroups().unwrap().len(), 4);
        let klein = generate(
            4,
            &[cyc(4, &[&[0, 1], &[2, 3]]), cyc(4, &[&[0, 2], &[1, 3]])],
        )
        .unwrap();
        assert_eq!(klein.all_subgroups().unwrap().len(), 5);
        assert_eq!(sym4().all_subgroups().unwrap().len(), 30);
        assert_eq!(alt4().all_subgroups().unwrap().len(), 10);
        for n in 1..=24 {
            let expected = crate::arith::divisors(n as u64).len();
            assert_eq!(cyclic(n).all_subgroups().unwrap().len(), expected, "C{n}");
        }
    }

    #[test]
    fn lattice_is_sorted_and_closed() {
        let g = sym4();
        let subs = g.all_subgroups().unwrap();
        assert!(subs.windows(2).all(|w| w[0] < w[1]));
        for h in &subs {
            assert_eq!(g.order() % h.order(), 0);
            let regen = g.subgroup_generated(&h.members().collect::<Vec<_>>());
            assert_eq!(&regen, h);
            assert!(g.subgroup_from_members(h.member_set().clone()).is_ok());
        }
    }

    #[test]
    fn subgroup_cap() {
        let caps = Caps {
            subgroups: 10,
            ..Caps::default()
        };
        let g = FiniteGroup::generate_with_caps(4, sym4().generators(), caps).unwrap();
        assert!(matches!(
            g.all_subgroups(),
            Err(GroupError::CapExceeded {
                what: "subgroup count",
                ..
            })
        ));
    }

    #[test]
    fn normality_and_conjugation() {
        let s4 = sym4();
        let t = s4.subgroup_generated_by(&[cyc(4, &[&[0, 1]])]).unwrap();
        assert!(!s4.is_normal(&t));
        let a4 = alt4();
        let sylow3 = a4.subgroup_generated_by(&[cyc(4, &[&[0, 1, 2]])]).unwrap();
        let other = a4
            .conjugate_by(&sylow3, &cyc(4, &[&[0, 1], &[2, 3]]))
            .unwrap();
        assert_eq!(other.order(), 3);
        assert_ne!(other, sylow3);
        // Brute force: the conjugate is one of the four Sylow 3-subgroups.
        let threes: Vec<_> = a4
            .all_subgroups()
            .unwrap()
            .into_iter()
            .filter(|h| h.order() == 3)
            .collect();
        assert_eq!(threes.len(), 4);
        assert!(threes.contains(&other));
    }

    #[test]
    fn normal_subgroups_match_lattice_filter() {
        for g in [sym4(), alt4(), cyclic(12)] {
            let from_lattice: Vec<_> = g
                .all_subgroups()
                .unwrap()
                .into_iter()
                .filter(|h| g.is_normal(h))
                .collect();
            assert_eq!(g.normal_subgroups(), from_lattice);
        }
        assert_eq!(sym4().normal_subgroups().len(), 4);
    }

    #[test]
    fn cyclic_by_p_examples() {
        let a4 = alt4();
        let cbp: Vec<usize> = a4
            .cyclic_by_p_subgroups(2)
            .unwrap()
            .iter()
            .map(|h| h.order())
            .collect();
        // trivial, three C2, four C3, Klein four, A4
        assert_eq!(cbp, vec![1, 2, 2, 2, 3, 3, 3, 3, 4, 12]);
        let s4 = sym4();
        assert!(s4
            .cyclic_by_p_subgroups(2)
            .unwrap()
            .iter()
            .all(|h| h.order() != 24));
        assert_eq!(cyclic(15).cyclic_by_p_subgroups(3).unwrap().len(), 4);
    }

    #[test]
    fn subgroup_as_group() {
        let s4 = sym4();
        let a4 = s4
            .normal_subgroups()
            .into_iter()
            .find(|h| h.order() == 12)
            .unwrap();
        let (g, embed) = a4.to_group_with_embedding();
        assert_eq!(g.order(), 12);
        assert_eq!(g.all_subgroups().unwrap().len(), 10);
        for (i, &j) in embed.iter().enumerate() {
            assert_eq!(g.element(i), s4.element(j));
        }
    }
}
