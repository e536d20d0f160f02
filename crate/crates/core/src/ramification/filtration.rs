//! Lower ramification filtrations given by their order sequences, the
//! Herbrand transform, and the Hasse-Arf divisibility test.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::arith;
use crate::error::RamificationError;

/// `[|G_0|, |G_1|, ..., |G_r|]` with `G_i` trivial beyond `r`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct RamificationFiltration {
    p: u64,
    orders: Vec<u64>,
}

fn bad(msg: impl Into<String>) -> RamificationError {
    RamificationError::BadParameters(msg.into())
}

impl RamificationFiltration {
    /// Validates the order sequence; trailing 1s are dropped.
    pub fn new(p: u64, orders: &[u64]) -> Result<Self, RamificationError> {
        if !arith::is_prime(p) {
            return Err(bad(format!("{p} is not prime")));
        }
        let mut orders = orders.to_vec();
        while orders.last() == Some(&1) {
            orders.pop();
        }
        if orders.is_empty() {
            return Err(bad("G_0 must be nontrivial"));
        }
        if orders.contains(&0) {
            return Err(bad("orders must be positive"));
        }
        for w in orders.windows(2) {
            if w[0] % w[1] != 0 {
                return Err(bad(format!("{} does not divide {}", w[1], w[0])));
            }
        }
        let g1 = orders.get(1).copied().unwrap_or(1);
        if arith::p_power_exponent(g1, p).is_none() {
            return Err(bad(format!("|G_1| = {g1} is not a power of {p}")));
        }
        if (orders[0] / g1).is_multiple_of(p) {
            return Err(bad(format!(
                "tame quotient of order {} is divisible by {p}",
                orders[0] / g1
            )));
        }
        Ok(RamificationFiltration { p, orders })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn orders(&self) -> &[u64] {
        &self.orders
    }

    /// `|G_0|`.
    pub fn inertia_order(&self) -> u64 {
        self.orders[0]
    }

    /// `|G_i|`, 1 past the end.
    pub fn order_at(&self, i: usize) -> u64 {
        self.orders.get(i).copied().unwrap_or(1)
    }

    /// Lower indices `i` with `G_i != G_{i+1}`.
    pub fn lower_jumps(&self) -> Vec<usize> {
        (0..self.orders.len())
            .filter(|&i| self.order_at(i) > self.order_at(i + 1))
            .collect()
    }
}

impl fmt::Display for RamificationFiltration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list: Vec<String> = self.orders.iter().map(|o| o.to_string()).collect();
        write!(f, "[{}]", list.join(","))
    }
}

/// `sum_i (|G_i| - 1)`.
pub fn different_exponent(f: &RamificationFiltration) -> u64 {
    f.orders.iter().map(|&o| o - 1).sum()
}

/// Herbrand function at an integer lower index: `sum_{j=1..i} |G_j| / |G_0|`.
pub fn herbrand_phi(f: &RamificationFiltration, i: usize) -> BigRational {
    let g0 = BigInt::from(f.inertia_order());
    (1..=i).fold(BigRational::zero(), |acc, j| {
        acc + BigRational::new(BigInt::from(f.order_at(j)), g0.clone())
    })
}

/// One step of the upper filtration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UpperJump {
    pub lower: usize,
    /// Upper jump `phi(lower)` as an exact fraction.
    #[serde(serialize_with = "serialize_rational")]
    pub upper: BigRational,
    /// Order of the group just past the jump.
    pub order_after: u64,
}

fn serialize_rational<S: serde::Serializer>(r: &BigRational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn lower_to_upper(f: &RamificationFiltration) -> Vec<UpperJump> {
    f.lower_jumps()
        .into_iter()
        .map(|i| UpperJump {
            lower: i,
            upper: herbrand_phi(f, i),
            order_after: f.order_at(i + 1),
        })
        .collect()
}

/// Inverse Herbrand transform: rebuilds the lower order sequence from `|G_0|`
/// and the upper jumps `(u_k, order after the jump)`, using
/// `i_k = i_{k-1} + (u_k - u_{k-1}) |G_0| / |G_{i_k}|`.
pub fn upper_to_lower(
    g0: u64,
    jumps: &[(BigRational, u64)],
) -> Result<Vec<u64>, RamificationError> {
    let mut orders = vec![g0];
    let mut cur_i: usize = 0;
    let mut cur_u = BigRational::zero();
    let mut cur_order = g0;
    for (k, (u, after)) in jumps.iter().enumerate() {
        if *u < cur_u || (k > 0 && *u == cur_u) {
            return Err(bad("upper jumps must increase"));
        }
        let steps = (u - &cur_u) * BigRational::new(BigInt::from(g0), BigInt::from(cur_order));
        if !steps.is_integer() {
            return Err(bad(format!(
                "upper jump {} gives a fractional lower index",
                format_rational(u)
            )));
        }
        let steps = steps
            .to_integer()
            .to_usize()
            .ok_or_else(|| bad("lower index out of range"))?;
        if k > 0 && steps == 0 {
            return Err(bad("repeated lower jump"));
        }
        let i_k = cur_i + steps;
        orders.resize(i_k + 1, cur_order);
        if *after >= cur_order || !cur_order.is_multiple_of(*after) {
            return Err(bad(format!(
                "order after a jump must be a proper divisor of {cur_order}"
            )));
        }
        cur_i = i_k;
        cur_u = u.clone();
        cur_order = *after;
    }
    if cur_order != 1 {
        return Err(bad("the filtration must end at the trivial group"));
    }
    Ok(orders)
}

/// Hasse-Arf test for the subgroup order `s`: the number of indices `i >= 1`
/// with `|G_i| = s` must be divisible by `|G_0| / s`, and every upper jump
/// must be an integer.
pub fn hasse_arf_check(
    f: &RamificationFiltration,
    sub_order: u64,
) -> Result<bool, RamificationError> {
    let g0 = f.inertia_order();
    if sub_order == 0 || !g0.is_multiple_of(sub_order) {
        return Err(RamificationError::BadOrder(sub_order));
    }
    let count = f.orders[1..].iter().filter(|&&o| o == sub_order).count() as u64;
    Ok(count.is_multiple_of(g0 / sub_order) && upper_jumps_integral(f))
}

pub fn upper_jumps_integral(f: &RamificationFiltration) -> bool {
    lower_to_upper(f).iter().all(|j| j.upper.is_integer())
}

/// The count condition of [`hasse_arf_check`] for every order in the filtration.
pub fn hasse_arf_counts_hold(f: &RamificationFiltration) -> bool {
    let g0 = f.inertia_order();
    let mut orders: Vec<u64> = f.orders.clone();
    orders.dedup();
    orders.iter().all(|&s| {
        let count = f.orders[1..].iter().filter(|&&o| o == s).count() as u64;
        count.is_multiple_of(g0 / s)
    })
}

/// Every valid filtration at `p` with `|G_0| <= max_order` and at most
/// `max_len` entries, in lexicographic order.
pub fn enumerate_filtrations(
    p: u64,
    max_order: u64,
    max_len: usize,
) -> Vec<RamificationFiltration> {
    fn extend(
        p: u64,
        prefix: &mut Vec<u64>,
        max_len: usize,
        out: &mut Vec<RamificationFiltration>,
    ) {
        out.push(RamificationFiltration {
            p,
            orders: prefix.clone(),
        });
        if prefix.len() >= max_len {
            return;
        }
        let last = *prefix.last().expect("nonempty prefix");
        if prefix.len() == 1 {
            let g1 = arith::p_part(last, p);
            if g1 > 1 {
                prefix.push(g1);
                extend(p, prefix, max_len, out);
                prefix.pop();
            }
            return;
        }
        let mut next = last;
        while next > 1 {
            prefix.push(next);
            extend(p, prefix, max_len, out);
            prefix.pop();
            next /= p;
        }
    }
    let mut out = Vec::new();
    if max_len == 0 {
        return out;
    }
    for g0 in 2..=max_order {
        let mut prefix = vec![g0];
        extend(p, &mut prefix, max_len, &mut out);
    }
    out.retain(|f| RamificationFiltration::new(p, &f.orders).is_ok());
    out
}

/// `n/d` as an exact rational.
pub fn rational(n: i64, d: i64) -> BigRational {
    if d == 1 {
        BigRational::from_integer(BigInt::from(n))
    } else {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }
}
