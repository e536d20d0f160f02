//! Targeted recognition of the isomorphism types the classification needs.

use std::fmt;

use serde::Serialize;

use crate::arith;
use crate::group::FiniteGroup;
use crate::structure::{center, sylow};

/// Recognized structural class. Orders are group orders, so `Dihedral(8)`
/// is the symmetry group of a square and `Dihedral(4)` the Klein four group.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum IsoType {
    Cyclic(u64),
    Dihedral(u64),
    SemiDihedral(u64),
    GeneralizedQuaternion(u64),
    ElementaryAbelian(u64, u32),
    A4,
    S4,
    A5,
    SL23,
    Other,
}

impl IsoType {
    /// Other names for the same group.
    pub fn aliases(&self) -> Vec<IsoType> {
        match *self {
            IsoType::Dihedral(4) => vec![IsoType::ElementaryAbelian(2, 2)],
            IsoType::Cyclic(2) => vec![IsoType::Dihedral(2), IsoType::ElementaryAbelian(2, 1)],
            IsoType::Cyclic(n) if arith::is_prime(n) => vec![IsoType::ElementaryAbelian(n, 1)],
            _ => Vec::new(),
        }
    }

    /// True if `self` or one of its aliases equals `other`.
    pub fn matches(&self, other: &IsoType) -> bool {
        self == other || self.aliases().contains(other)
    }

    pub fn is_dihedral_2_group(&self) -> bool {
        match *self {
            IsoType::Dihedral(n) => n.is_power_of_two(),
            IsoType::Cyclic(2) | IsoType::Cyclic(1) => true,
            _ => false,
        }
    }

    /// Compact symbol such as `D18` or `Q16`.
    pub fn symbol(&self) -> String {
        match *self {
            IsoType::Cyclic(n) => format!("C{n}"),
            IsoType::Dihedral(n) => format!("D{n}"),
            IsoType::SemiDihedral(n) => format!("SD{n}"),
            IsoType::GeneralizedQuaternion(n) => format!("Q{n}"),
            IsoType::ElementaryAbelian(p, r) => format!("C{p}^{r}"),
            IsoType::A4 => "A4".into(),
            IsoType::S4 => "S4".into(),
            IsoType::A5 => "A5".into(),
            IsoType::SL23 => "SL(2,3)".into(),
            IsoType::Other => "other".into(),
        }
    }
}

impl fmt::Display for IsoType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            IsoType::Cyclic(n) => write!(f, "Cyclic({n})"),
            IsoType::Dihedral(n) => write!(f, "Dihedral({n})"),
            IsoType::SemiDihedral(n) => write!(f, "SemiDihedral({n})"),
            IsoType::GeneralizedQuaternion(n) => write!(f, "GeneralizedQuaternion({n})"),
            IsoType::ElementaryAbelian(p, r) => write!(f, "ElementaryAbelian({p},{r})"),
            IsoType::A4 => f.write_str("A4"),
            IsoType::S4 => f.write_str("S4"),
            IsoType::A5 => f.write_str("A5"),
            IsoType::SL23 => f.write_str("SL23"),
            IsoType::Other => f.write_str("Other"),
        }
    }
}

fn stats_are(g: &FiniteGroup, expected: &[(usize, usize)]) -> bool {
    g.order_statistics() == expected
}

fn is_dihedral(g: &FiniteGroup) -> bool {
    let n = g.order();
    if n < 4 || !n.is_multiple_of(2) {
        return false;
    }
    let half = n / 2;
    let mut tried = vec![false; n];
    for r in (0..n).filter(|&r| g.order_of(r) == half) {
        if tried[r] {
            continue;
        }
        let rot = g.subgroup_generated(&[r]);
        for x in rot.members() {
            tried[x] = true;
        }
        let r_inv = g.inv(r);
        if (0..n).any(|t| g.order_of(t) == 2 && !rot.contains(t) && g.conj(t, r) == r_inv) {
            return true;
        }
    }
    false
}

fn is_semidihedral(g: &FiniteGroup) -> bool {
    let n = g.order() as u64;
    if n < 16 || !n.is_power_of_two() {
        return false;
    }
    let a = n.trailing_zeros();
    let half = (n / 2) as usize;
    let exp = (half as u64 / 2) - 1; // -1 + 2^(a-2), taken mod 2^(a-1)
    debug_assert_eq!(exp + 1, 1 << (a - 2));
    let involutions: Vec<usize> = (0..g.order()).filter(|&y| g.order_of(y) == 2).collect();
    (0..g.order()).filter(|&x| g.order_of(x) == half).any(|x| {
        let target = g.pow(x, exp);
        involutions.iter().any(|&y| g.mul(g.mul(y, x), y) == target)
    })
}

/// Structural class of `g`, resolving aliases with the fixed priority
/// Cyclic, then Klein four as `Dihedral(4)`, then ElementaryAbelian, then
/// Dihedral, GeneralizedQuaternion, SemiDihedral and the named small groups.
pub fn recognize(g: &FiniteGroup) -> IsoType {
    let n = g.order();
    let n64 = n as u64;
    if (0..n).any(|x| g.order_of(x) == n) {
        return IsoType::Cyclic(n64);
    }
    let abelian = g.is_abelian();
    if abelian {
        if let [(q, r)] = arith::factorize(n64).as_slice() {
            if g.exponent() == *q {
                if n == 4 {
                    return IsoType::Dihedral(4);
                }
                return IsoType::ElementaryAbelian(*q, *r);
            }
        }
        return IsoType::Other;
    }
    if is_dihedral(g) {
        return IsoType::Dihedral(n64);
    }
    let involutions = (0..n).filter(|&x| g.order_of(x) == 2).count();
    if n64.is_power_of_two() && n >= 8 && involutions == 1 {
        return IsoType::GeneralizedQuaternion(n64);
    }
    if is_semidihedral(g) {
        return IsoType::SemiDihedral(n64);
    }
    match n {
        12 if stats_are(g, &[(1, 1), (2, 3), (3, 8)]) => {
            let s = sylow(g, 2);
            if g.is_normal(&s) && s.order() == 4 && !s.is_cyclic() && center(g).is_trivial() {
                return IsoType::A4;
            }
        }
        24 if stats_are(g, &[(1, 1), (2, 1), (3, 8), (4, 6), (6, 8)]) => {
            let s2 = sylow(g, 2);
            let s3 = sylow(g, 3);
            if g.is_normal(&s2) && !g.is_normal(&s3) {
                return IsoType::SL23;
            }
        }
        24 if stats_are(g, &[(1, 1), (2, 9), (3, 8), (4, 6)]) => {
            if center(g).is_trivial() && !g.is_normal(&sylow(g, 2)) && !g.is_normal(&sylow(g, 3)) {
                return IsoType::S4;
            }
        }
        60 if stats_are(g, &[(1, 1), (2, 15), (3, 20), (5, 24)])
            && g.normal_subgroups().len() == 2 =>
        {
            return IsoType::A5;
        }
        _ => {}
    }
    IsoType::Other
}
