//! Small finite fields `F_{p^r}`, used to write down irreducible actions of
//! cyclic groups on elementary abelian groups.

use crate::arith;
use crate::error::GroupError;

/// `F_p[x] / (f)` for the lexicographically first monic irreducible `f` of
/// degree `r`. Elements are coefficient vectors, lowest degree first, and are
/// numbered `sum c_i p^i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    r: u32,
    /// Coefficients of `f` below the leading term.
    modulus: Vec<u64>,
}

impl FiniteField {
    pub fn new(p: u64, r: u32) -> Result<Self, GroupError> {
        if !arith::is_prime(p) || r == 0 {
            return Err(GroupError::BadParameters(format!(
                "no field of order {p}^{r}"
            )));
        }
        let size = p
            .checked_pow(r)
            .filter(|&q| q <= 1 << 20)
            .ok_or_else(|| GroupError::BadParameters(format!("field {p}^{r} too large")))?;
        let modulus = (0..size)
            .map(|code| digits(code, p, r as usize))
            .find(|low| {
                let mut f = low.clone();
                f.push(1);
                is_irreducible(&f, p)
            })
            .expect("irreducible polynomials exist in every degree");
        Ok(FiniteField { p, r, modulus })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.r
    }

    pub fn size(&self) -> u64 {
        self.p.pow(self.r)
    }

    pub fn element(&self, code: u64) -> Vec<u64> {
        digits(code, self.p, self.r as usize)
    }

    pub fn code(&self, v: &[u64]) -> u64 {
        v.iter().rev().fold(0, |acc, &c| acc * self.p + c)
    }

    pub fn mul(&self, a: &[u64], b: &[u64]) -> Vec<u64> {
        let r = self.r as usize;
        let p = self.p;
        let mut prod = vec![0u64; 2 * r];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                prod[i + j] = (prod[i + j] + x * y) % p;
            }
        }
        // x^r = -(modulus), reduce from the top.
        for k in (r..2 * r).rev() {
            let c = prod[k];
            if c == 0 {
                continue;
            }
            prod[k] = 0;
            for (i, &m) in self.modulus.iter().enumerate() {
                prod[k - r + i] = (prod[k - r + i] + (p - m) * c) % p;
            }
        }
        prod.truncate(r);
        prod
    }

    /// Multiplicative order of a nonzero element.
    pub fn order_of(&self, a: &[u64]) -> u64 {
        let one = self.element(1);
        assert!(
            a.iter().any(|&c| c != 0),
            "zero has no multiplicative order"
        );
        let mut x = a.to_vec();
        let mut k = 1;
        while x != one {
            x = self.mul(&x, a);
            k += 1;
        }
        k
    }

    /// The nonzero element of multiplicative order `m` with the smallest code.
    pub fn element_of_order(&self, m: u64) -> Option<Vec<u64>> {
        if !(self.size() - 1).is_multiple_of(m) {
            return None;
        }
        (1..self.size())
            .map(|c| self.element(c))
            .find(|a| self.order_of(a) == m)
    }

    /// Images of the basis `1, x, .., x^(r-1)` under multiplication by `z`.
    pub fn multiplication_images(&self, z: &[u64]) -> Vec<Vec<u64>> {
        (0..self.r as usize)
            .map(|i| {
                let mut basis = vec![0; self.r as usize];
                basis[i] = 1;
                self.mul(&basis, z)
            })
            .collect()
    }
}

fn digits(mut code: u64, p: u64, len: usize) -> Vec<u64> {
    let mut v = Vec::with_capacity(len);
    for _ in 0..len {
        v.push(code % p);
        code /= p;
    }
    v
}

fn poly_rem(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = mod_inverse(b[db], p);
    while r.len() > db {
        let c = r[r.len() - 1] * lead_inv % p;
        let shift = r.len() - 1 - db;
        for (i, &bc) in b.iter().enumerate() {
            r[shift + i] = (r[shift + i] + (p - c) * bc % p) % p;
        }
        r.pop();
    }
    r
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    (1..p).find(|&x| a * x % p == 1).expect("nonzero mod prime")
}

/// Trial division by every monic polynomial of degree up to `deg f / 2`.
fn is_irreducible(f: &[u64], p: u64) -> bool {
    let n = f.len() - 1;
    for d in 1..=n / 2 {
        for code in 0..p.pow(d as u32) {
            let mut g = digits(code, p, d);
            g.push(1);
            if poly_rem(f, &g, p).iter().all(|&c| c == 0) {
                return false;
            }
        }
    }
    true
}

/// Multiplicative order of `p` modulo `m`.
pub(crate) fn order_mod(p: u64, m: u64) -> Option<u32> {
    if m == 1 {
        return Some(1);
    }
    if arith::gcd(p, m) != 1 {
        return None;
    }
    let mut x = p % m;
    let mut k = 1;
    while x != 1 {
        x = x * p % m;
        k += 1;
    }
    Some(k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn multiplicative_groups_are_cyclic() {
        for (p, r) in [
            (2, 1),
            (2, 2),
            (2, 3),
            (2, 4),
            (2, 5),
            (3, 2),
            (5, 2),
            (7, 1),
        ] {
            let f = FiniteField::new(p, r).unwrap();
            let q = f.size();
            assert!(f.element_of_order(q - 1).is_some(), "{p}^{r}");
            for c in 1..q {
                assert_eq!((q - 1) % f.order_of(&f.element(c)), 0);
            }
        }
    }

    #[test]
    fn multiplication_is_associative_and_commutative() {
        let f = FiniteField::new(3, 2).unwrap();
        for a in 0..9 {
            for b in 0..9 {
                let (x, y) = (f.element(a), f.element(b));
                assert_eq!(f.mul(&x, &y), f.mul(&y, &x));
                for c in 0..9 {
                    let z = f.element(c);
                    assert_eq!(f.mul(&f.mul(&x, &y), &z), f.mul(&x, &f.mul(&y, &z)));
                }
            }
        }
    }

    #[test]
    fn irreducibility_matches_root_count_in_low_degree() {
        // Degree 2 and 3: irreducible iff no roots.
        for p in [2u64, 3, 5] {
            for deg in 2..=3usize {
                for code in 0..p.pow(deg as u32) {
                    let mut f = digits(code, p, deg);
                    f.push(1);
                    let has_root =
                        (0..p).any(|x| f.iter().rev().fold(0, |acc, &c| (acc * x + c) % p) == 0);
                    assert_eq!(is_irreducible(&f, p), !has_root, "{f:?} mod {p}");
                }
            }
        }
    }

    #[test]
    fn order_mod_examples() {
        assert_eq!(order_mod(2, 7), Some(3));
        assert_eq!(order_mod(2, 9), Some(6));
        assert_eq!(order_mod(5, 24), Some(2));
        assert_eq!(order_mod(3, 6), None);
    }
}
