//! Numeric obstructions to lifting covers to characteristic 0.

use serde::Serialize;

use super::cover::{tame_rh_genus, CoverSpec};
use crate::arith;
use crate::construct::forbidden_fixture;
use crate::error::RamificationError;
use crate::group::FiniteGroup;

fn bad(msg: impl Into<String>) -> RamificationError {
    RamificationError::BadParameters(msg.into())
}

fn odd_prime(p: u64) -> Result<(), RamificationError> {
    if p == 2 || !arith::is_prime(p) {
        return Err(bad(format!("{p} is not an odd prime")));
    }
    Ok(())
}

/// Whether `2(p+1) = (n-1)p` has no solution: symbolically (`p` would divide
/// 2), and by direct Riemann-Hurwitz evaluation of the `C_p^2` cover with `n`
/// branch points of index `p` for every `n <= n_max`.
pub fn odd_p_parity_equation(p: u64, n_max: u64) -> Result<bool, RamificationError> {
    odd_prime(p)?;
    let symbolic = !(2 * (p + 1)).is_multiple_of(p);
    let target = p * (p - 1) / 2;
    for n in 0..=n_max {
        let linear = n >= 1 && 2 * (p + 1) == (n - 1) * p;
        let cover = CoverSpec::tame(p * p, 0, &vec![p; n as usize])?;
        let rh = tame_rh_genus(&cover).is_ok_and(|g| g == target);
        if linear != rh {
            return Err(bad(format!(
                "linear form and Riemann-Hurwitz disagree at n = {n}"
            )));
        }
        if linear {
            return Ok(false);
        }
    }
    Ok(symbolic)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LiftBound {
    /// Lower bound on the characteristic-0 genus.
    pub char0_lower_bound: u64,
    /// Genus of the characteristic-`p` curve.
    pub char_p_genus: u64,
    pub contradiction: bool,
}

/// `z^p - z = y^l` has genus `(p-1)(l-1)/2`, while a characteristic-0 `C_l`
/// cover of the line branched at `2p` points has genus `(p-1)(l-1)`.
pub fn dihedral_lift_bound(p: u64, l: u64) -> Result<LiftBound, RamificationError> {
    odd_prime(p)?;
    if !arith::is_prime(l) {
        return Err(bad(format!("{l} is not prime")));
    }
    let cover = CoverSpec::tame(l, 0, &vec![l; 2 * p as usize])?;
    let bound = tame_rh_genus(&cover)?;
    let genus = (p - 1) * (l - 1) / 2;
    if l != p {
        debug_assert_eq!(super::artin_schreier_genus(p, l), Ok(genus));
    }
    Ok(LiftBound {
        char0_lower_bound: bound,
        char_p_genus: genus,
        contradiction: bound > genus,
    })
}

/// Size of the pullback of a branch set: the sum of the fiber sizes.
pub fn branch_pullback_count(
    subcover_group_order: u64,
    fibers: &[u64],
) -> Result<u64, RamificationError> {
    if let Some(&f) = fibers
        .iter()
        .find(|&&f| f == 0 || !subcover_group_order.is_multiple_of(f))
    {
        return Err(bad(format!(
            "fiber size {f} does not divide {subcover_group_order}"
        )));
    }
    Ok(fibers.iter().sum())
}

/// In characteristic 0 inertia groups are cyclic, so every orbit of `G` on a
/// branch set has size `|G|/d` for some element order `d`. The count is
/// forced even when all of these are.
pub fn char0_even_required(g: &FiniteGroup) -> bool {
    let n = g.order();
    (0..n).all(|x| (n / g.order_of(x)).is_multiple_of(2))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct A4ExtensionParity {
    pub n_order: u64,
    pub group_order: u64,
    /// Orders of nontrivial elements.
    pub element_orders: Vec<u64>,
    /// `|G|/d ≡ 0 mod 4` for every `d`.
    pub all_quotients_divisible_by_4: bool,
    /// Branch vectors tried; every consistent one gave odd genus.
    pub branch_vectors_checked: usize,
    pub char0_genus_odd: bool,
}

/// The extension of `A4` by `N` with `|N| = n_order`: `A4 x C2` or `C4^2 . C3`.
pub fn a4_extension(n_order: u64) -> Result<FiniteGroup, RamificationError> {
    match n_order {
        2 => Ok(forbidden_fixture(2, 4, Some(3))?),
        4 => Ok(forbidden_fixture(2, 3, None)?),
        _ => Err(bad(format!("|N| must be 2 or 4, got {n_order}"))),
    }
}

fn element_orders(g: &FiniteGroup) -> Vec<u64> {
    let mut d: Vec<u64> = (1..g.order()).map(|x| g.order_of(x) as u64).collect();
    d.sort_unstable();
    d.dedup();
    d
}

/// Tame Riemann-Hurwitz over a genus-0 base for every branch vector with at
/// most `per_order` points of each element order; all consistent genera must
/// be odd.
pub fn char0_parity_obstruction_a4ext(
    n_order: u64,
) -> Result<A4ExtensionParity, RamificationError> {
    let g = a4_extension(n_order)?;
    let order = g.order() as u64;
    let orders = element_orders(&g);
    let divisible =
        orders.iter().all(|&d| (order / d).is_multiple_of(4)) && (2 * order).is_multiple_of(4);
    let per_order = 3usize;
    let mut checked = 0;
    let mut all_odd = true;
    let mut counts = vec![0usize; orders.len()];
    loop {
        let indices: Vec<u64> = orders
            .iter()
            .zip(&counts)
            .flat_map(|(&d, &c)| std::iter::repeat_n(d, c))
            .collect();
        if let Ok(genus) = tame_rh_genus(&CoverSpec::tame(order, 0, &indices)?) {
            checked += 1;
            all_odd &= genus % 2 == 1;
        }
        let mut k = 0;
        while k < counts.len() && counts[k] == per_order {
            counts[k] = 0;
            k += 1;
        }
        if k == counts.len() {
            break;
        }
        counts[k] += 1;
    }
    Ok(A4ExtensionParity {
        n_order,
        group_order: order,
        element_orders: orders,
        all_quotients_divisible_by_4: divisible,
        branch_vectors_checked: checked,
        char0_genus_odd: divisible && all_odd,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{build, FamilySpec};

    #[test]
    fn parity_equation() {
        assert_eq!(odd_p_parity_equation(3, 200), Ok(true));
        assert_eq!(odd_p_parity_equation(5, 200), Ok(true));
        assert!(odd_p_parity_equation(2, 10).is_err());
    }

    #[test]
    fn lift_bounds() {
        let b = |p, l| {
            let r = dihedral_lift_bound(p, l).unwrap();
            (r.char0_lower_bound, r.char_p_genus, r.contradiction)
        };
        assert_eq!(b(3, 5), (8, 4, true));
        assert_eq!(b(5, 3), (8, 4, true));
        assert_eq!(b(3, 3), (4, 2, true));
        assert_eq!(b(7, 2), (6, 3, true));
        assert!(dihedral_lift_bound(3, 9).is_err());
    }

    #[test]
    fn pullbacks() {
        assert_eq!(branch_pullback_count(4, &[4, 1]), Ok(5));
        assert_eq!(branch_pullback_count(4, &[1]), Ok(1));
        assert_eq!(branch_pullback_count(4, &[4, 4]), Ok(8));
        assert!(branch_pullback_count(4, &[3]).is_err());
        let v4 = build(&"EA:2^2".parse::<FamilySpec>().unwrap()).unwrap();
        assert!(char0_even_required(&v4));
        let c4 = build(&"C:4".parse::<FamilySpec>().unwrap()).unwrap();
        assert!(!char0_even_required(&c4));
    }

    #[test]
    fn a4_extensions_force_odd_genus() {
        for n in [2, 4] {
            let r = char0_parity_obstruction_a4ext(n).unwrap();
            assert_eq!(r.group_order, 12 * n);
            assert!(r.all_quotients_divisible_by_4);
            assert!(r.char0_genus_odd);
            assert!(r.branch_vectors_checked > 0);
        }
        assert_eq!((24 / 2) % 4, 0);
        assert!(char0_parity_obstruction_a4ext(3).is_err());
    }
}
