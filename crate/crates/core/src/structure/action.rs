//! Conjugation actions of a subgroup `C` on a normal `p`-subgroup `P`.

use crate::error::GroupError;
use crate::group::{FiniteGroup, Subgroup};

fn is_elementary_abelian(p: &Subgroup) -> bool {
    if !p.is_abelian() {
        return false;
    }
    let g = p.parent();
    let mut prime = None;
    for x in p.members().filter(|&x| x != 0) {
        let o = g.order_of(x);
        match prime {
            None if crate::arith::is_prime(o as u64) => prime = Some(o),
            Some(q) if q == o => {}
            _ => return false,
        }
    }
    true
}

/// `g x g^-1 = x^-1` for every `x` in `P`.
pub fn acts_by_inversion(g: &FiniteGroup, elem: usize, p: &Subgroup) -> bool {
    p.members().all(|x| g.conj(elem, x) == g.inv(x))
}

/// Every element of `C` centralizes `P`.
pub fn acts_trivially(g: &FiniteGroup, c: &Subgroup, p: &Subgroup) -> bool {
    c.generators()
        .iter()
        .all(|&s| p.generators().iter().all(|&x| g.mul(s, x) == g.mul(x, s)))
}

/// Only the identity of `C` centralizes `P`.
pub fn acts_faithfully(g: &FiniteGroup, c: &Subgroup, p: &Subgroup) -> bool {
    c.members()
        .filter(|&s| s != 0)
        .all(|s| p.generators().iter().any(|&x| g.mul(s, x) != g.mul(x, s)))
}

/// No subgroup strictly between 1 and `P` is invariant under `C`, decided by
/// scanning the subgroup lattice of `P`.
pub fn acts_irreducibly(g: &FiniteGroup, c: &Subgroup, p: &Subgroup) -> Result<bool, GroupError> {
    if !is_elementary_abelian(p) {
        return Err(GroupError::NotElementaryAbelian);
    }
    if p.is_trivial() {
        return Ok(false);
    }
    let (pg, embed) = p.to_group_with_embedding();
    for t in pg.all_subgroups()? {
        if t.is_trivial() || t.is_whole() {
            continue;
        }
        let invariant = c.generators().iter().all(|&s| {
            t.generators().iter().all(|&x| {
                let y = g.conj(s, embed[x]);
                embed
                    .binary_search(&y)
                    .map(|i| t.contains(i))
                    .unwrap_or(false)
            })
        });
        if invariant {
            return Ok(false);
        }
    }
    Ok(true)
}

/// No nonidentity element of `P` is fixed by the generators of `C`.
pub fn acts_without_fixed_points(
    g: &FiniteGroup,
    c: &Subgroup,
    p: &Subgroup,
) -> Result<bool, GroupError> {
    if !is_elementary_abelian(p) {
        return Err(GroupError::NotElementaryAbelian);
    }
    Ok(p.members()
        .filter(|&x| x != 0)
        .all(|x| c.generators().iter().any(|&s| g.conj(s, x) != x)))
}
