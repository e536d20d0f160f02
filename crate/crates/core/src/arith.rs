//! Small integer helpers shared across modules.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorisation as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Largest power of `p` dividing `n`.
pub fn p_part(mut n: u64, p: u64) -> u64 {
    let mut part = 1;
    while n > 0 && n.is_multiple_of(p) {
        n /= p;
        part *= p;
    }
    part
}

/// `Some(k)` when `n == p^k`.
pub fn p_power_exponent(n: u64, p: u64) -> Option<u32> {
    if n == 0 || p < 2 {
        return None;
    }
    let mut k = 0;
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
        k += 1;
    }
    (m == 1).then_some(k)
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    num_integer::lcm(a, b)
}

pub fn divisors(n: u64) -> Vec<u64> {
    (1..=n).filter(|d| n.is_multiple_of(*d)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_parts() {
        assert!(is_prime(2) && is_prime(97) && !is_prime(1) && !is_prime(91));
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(p_part(48, 2), 16);
        assert_eq!(p_part(48, 5), 1);
        assert_eq!(p_power_exponent(27, 3), Some(3));
        assert_eq!(p_power_exponent(1, 3), Some(0));
        assert_eq!(p_power_exponent(12, 2), None);
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
    }
}
