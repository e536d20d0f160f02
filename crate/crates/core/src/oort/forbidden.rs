//! Recognition of the forbidden quotient types and the scan over all
//! quotients of a group.

use serde::Serialize;

use crate::arith;
use crate::error::GroupError;
use crate::group::{FiniteGroup, Subgroup};
use crate::structure::{
    acts_by_inversion, acts_irreducibly, acts_without_fixed_points, center, cyclic_by_p_decompose,
    quotient, CyclicByPDecomposition,
};

/// Parameters read off a matched type.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct TypeDetails {
    /// Order of the cyclic complement.
    pub m: u64,
    /// The auxiliary odd prime of the `D_2p x C_l`, `C_2^2 x C_l` and
    /// `C_2^2 . C_3l` types.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub l: Option<u64>,
    /// Rank of the Sylow subgroup when it is elementary abelian.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rank: Option<u32>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Detection {
    pub type_index: u8,
    pub details: TypeDetails,
}

/// A quotient `G/N` of forbidden type.
#[derive(Clone, Debug, Serialize)]
pub struct ForbiddenTypeHit {
    pub p: u64,
    pub type_index: u8,
    #[serde(skip)]
    pub kernel: Subgroup,
    pub kernel_order: usize,
    /// Generators of the kernel in cycle notation.
    pub kernel_generators: Vec<String>,
    pub quotient_order: usize,
    pub details: TypeDetails,
}

/// Rank of `P` if it is elementary abelian of exponent `p` (0 when trivial).
fn ea_rank(pg: &Subgroup, p: u64) -> Option<u32> {
    if !pg.is_abelian() {
        return None;
    }
    let g = pg.parent();
    if pg.members().any(|x| x != 0 && g.order_of(x) as u64 != p) {
        return None;
    }
    arith::p_power_exponent(pg.order() as u64, p)
}

fn is_c4_squared(pg: &Subgroup) -> bool {
    let g = pg.parent();
    pg.order() == 16
        && pg.is_abelian()
        && pg.members().all(|x| g.order_of(x) <= 4)
        && pg.members().filter(|&x| g.order_of(x) <= 2).count() == 4
}

fn odd_prime(l: u64) -> Option<u64> {
    (l > 2 && arith::is_prime(l)).then_some(l)
}

fn details(d: &CyclicByPDecomposition, l: Option<u64>) -> TypeDetails {
    TypeDetails {
        m: d.m,
        l,
        rank: ea_rank(&d.sylow, d.p),
    }
}

/// `D_2p x C_l`: some `r` of order `p`, involution `t` inverting it, and a
/// central `z` of order `l` outside `<r, t>`.
fn is_dihedral_times_cyclic(q: &FiniteGroup, p: u64, l: u64) -> bool {
    let n = q.order();
    let z_center = center(q);
    let zs: Vec<usize> = z_center
        .members()
        .filter(|&z| q.order_of(z) as u64 == l)
        .collect();
    if zs.is_empty() {
        return false;
    }
    let involutions: Vec<usize> = (0..n).filter(|&t| q.order_of(t) == 2).collect();
    (0..n).filter(|&r| q.order_of(r) as u64 == p).any(|r| {
        let r_inv = q.inv(r);
        involutions.iter().any(|&t| {
            if q.conj(t, r) != r_inv {
                return false;
            }
            let rt = q.subgroup_generated(&[r, t]);
            zs.iter().any(|&z| !rt.contains(z))
        })
    })
}

/// Every type index whose defining conditions hold for `q`, in list order.
/// Detection uses the first; the full list exists to test exclusivity.
pub fn matching_types(q: &FiniteGroup, p: u64) -> Vec<Detection> {
    let Some(d) = cyclic_by_p_decompose(q, p) else {
        return Vec::new();
    };
    let n = q.order() as u64;
    let rank = ea_rank(&d.sylow, p);
    let faithful = d.action_order == d.m;
    let irreducible = || {
        rank.is_some_and(|r| r >= 1)
            && acts_irreducibly(q, &d.complement, &d.sylow).unwrap_or(false)
    };
    let mut out = Vec::new();
    let mut hit = |t: u8, l: Option<u64>| {
        out.push(Detection {
            type_index: t,
            details: details(&d, l),
        })
    };
    if p != 2 {
        if n == p * p && rank == Some(2) {
            hit(1, None);
        }
        if d.m >= 3 && faithful && irreducible() {
            hit(2, None);
        }
        if n == 2 * p * p && rank == Some(2) && d.m == 2 && acts_by_inversion(q, d.c_gen, &d.sylow)
        {
            hit(3, None);
        }
        if n.is_multiple_of(2 * p) {
            if let Some(l) = odd_prime(n / (2 * p)) {
                if is_dihedral_times_cyclic(q, p, l) {
                    hit(4, Some(l));
                }
            }
        }
        if n == 4 * p
            && d.sylow.order() as u64 == p
            && d.m == 4
            && acts_by_inversion(q, d.c_gen, &d.sylow)
        {
            hit(5, None);
        }
        return out;
    }
    if d.m >= 5 && faithful && irreducible() {
        hit(1, None);
    }
    if rank == Some(4)
        && d.m == 3
        && acts_without_fixed_points(q, &d.complement, &d.sylow).unwrap_or(false)
    {
        hit(2, None);
    }
    if is_c4_squared(&d.sylow) && d.m == 3 && faithful {
        hit(3, None);
    }
    if rank == Some(3) && (d.m == 1 || d.m == 3) && faithful {
        hit(4, None);
    }
    if rank == Some(2) && odd_prime(d.m).is_some() && d.action_order == 1 {
        hit(5, Some(d.m));
    }
    if rank == Some(2) && d.m % 3 == 0 && d.action_order == 3 {
        if let Some(l) = odd_prime(d.m / 3) {
            hit(6, Some(l));
        }
    }
    if n == 8 && q.is_abelian() && q.exponent() == 4 {
        hit(7, None);
    }
    out
}

/// The forbidden type of `q` at `p`, if any.
pub fn detect_forbidden_type(q: &FiniteGroup, p: u64) -> Option<Detection> {
    matching_types(q, p).into_iter().next()
}

/// Every quotient `G/N` of forbidden type, sorted by quotient order then type.
pub fn forbidden_quotient_scan(
    g: &FiniteGroup,
    p: u64,
) -> Result<Vec<ForbiddenTypeHit>, GroupError> {
    let mut hits = Vec::new();
    for n in g.normal_subgroups() {
        let q_order = g.order() / n.order();
        // Every forbidden type has order divisible by p.
        if !(q_order as u64).is_multiple_of(p) {
            continue;
        }
        let detection = if n.is_trivial() {
            detect_forbidden_type(g, p)
        } else {
            let q = quotient(g, &n)?;
            if !q.model().whole().is_cyclic_by_p(p) {
                continue;
            }
            detect_forbidden_type(q.model(), p)
        };
        if let Some(d) = detection {
            hits.push(ForbiddenTypeHit {
                p,
                type_index: d.type_index,
                kernel_order: n.order(),
                kernel_generators: n
                    .generators()
                    .iter()
                    .map(|&x| g.element(x).to_string())
                    .collect(),
                kernel: n,
                quotient_order: q_order,
                details: d.details,
            });
        }
    }
    hits.sort_by_key(|h| (h.quotient_order, h.type_index));
    Ok(hits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build, forbidden_fixture, FamilySpec};

    fn b(s: &str) -> FiniteGroup {
        build(&s.parse::<FamilySpec>().unwrap()).unwrap()
    }

    #[test]
    fn detects_examples() {
        let g = forbidden_fixture(7, 2, None).unwrap();
        let d = detect_forbidden_type(&g, 7).unwrap();
        assert_eq!((d.type_index, d.details.m), (2, 3));
        assert_eq!(
            detect_forbidden_type(&b("prod(C:4,C:2)"), 2)
                .unwrap()
                .type_index,
            7
        );
        assert_eq!(detect_forbidden_type(&b("C:10"), 5), None);
    }

    #[test]
    fn c7_by_c3_action_by_brute_force() {
        // The C3 generator acts on C7 by an automorphism of order exactly 3.
        let g = forbidden_fixture(7, 2, None).unwrap();
        let c = (0..g.order()).find(|&x| g.order_of(x) == 3).unwrap();
        let r = (0..g.order()).find(|&x| g.order_of(x) == 7).unwrap();
        let images: Vec<usize> = (1..=3)
            .map(|k| {
                let ck = g.pow(c, k);
                g.conj(ck, r)
            })
            .collect();
        assert_ne!(images[0], r);
        assert_ne!(images[1], r);
        assert_eq!(images[2], r);
    }

    #[test]
    fn scan_examples() {
        let hits = forbidden_quotient_scan(&b("sd(EA:3^2,2,inv)"), 3).unwrap();
        assert_eq!(hits.len(), 1);
        assert_eq!((hits[0].kernel_order, hits[0].type_index), (1, 3));

        let hits = forbidden_quotient_scan(&b("prod(D:6,C:5)"), 3).unwrap();
        assert!(hits
            .iter()
            .any(|h| h.kernel_order == 1 && h.type_index == 4 && h.details.l == Some(5)));

        assert!(forbidden_quotient_scan(&b("D:18"), 3).unwrap().is_empty());
    }

    #[test]
    fn fixtures_match_exactly_their_type() {
        let mut cases: Vec<(u64, u8, Option<u64>)> = Vec::new();
        for p in [3, 5, 7] {
            for t in 1..=5 {
                cases.push((p, t, None));
            }
            cases.push((p, 4, Some(p)));
        }
        for t in 1..=7 {
            cases.push((2, t, None));
        }
        cases.extend([
            (2, 4, Some(3)),
            (2, 1, Some(5)),
            (2, 6, Some(3)),
            (2, 5, Some(5)),
            (3, 2, Some(8)),
            (5, 2, Some(3)),
        ]);
        for (p, t, x) in cases {
            let g = forbidden_fixture(p, t, x).unwrap();
            let types: Vec<u8> = matching_types(&g, p).iter().map(|d| d.type_index).collect();
            assert_eq!(types, vec![t], "ff({p},{t},{x:?})");
        }
    }

    #[test]
    fn hits_reproduce_on_quotients() {
        for (spec, p) in [
            ("prod(D:18,C:5)", 3),
            ("prod(Q:8,C:3)", 2),
            ("sd(C:9,4,inv)", 3),
            ("prod(A4,C:4)", 2),
        ] {
            let g = b(spec);
            let hits = forbidden_quotient_scan(&g, p).unwrap();
            assert!(!hits.is_empty(), "{spec}");
            for h in hits {
                let q = quotient(&g, &h.kernel).unwrap();
                assert_eq!(
                    detect_forbidden_type(q.model(), p).map(|d| d.type_index),
                    Some(h.type_index)
                );
            }
        }
    }
}
