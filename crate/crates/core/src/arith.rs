//! Small-integer number theory used across the crate.

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Prime factorization as `(prime, exponent)` pairs in increasing order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            let mut e = 0;
            while n.is_multiple_of(d) {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += if d == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

pub fn prime_divisors(n: u64) -> Vec<u64> {
    factorize(n).into_iter().map(|(p, _)| p).collect()
}

/// True when `n` is a power of `p` (including `p^0 = 1`).
pub fn is_power_of(mut n: u64, p: u64) -> bool {
    if n == 0 {
        return false;
    }
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

/// The first `count` primes that are at least `from`.
pub fn primes_from(from: u64, count: usize) -> Vec<u64> {
    (from..).filter(|&n| is_prime(n)).take(count).collect()
}

/// A generator of the multiplicative group mod the prime `p`.
pub fn primitive_root(p: u64) -> u64 {
    if p == 2 {
        return 1;
    }
    let factors = prime_divisors(p - 1);
    (2..p)
        .find(|&g| factors.iter().all(|&q| pow_mod(g, (p - 1) / q, p) != 1))
        .expect("primes have primitive roots")
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % m as u128) as u64;
        }
        b = ((b as u128 * b as u128) % m as u128) as u64;
        e >>= 1;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn primes_and_factors() {
        assert_eq!(
            primes_from(5, 10),
            vec![5, 7, 11, 13, 17, 19, 23, 29, 31, 37]
        );
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(factorize(1), vec![]);
        assert!(is_power_of(243, 3));
        assert!(!is_power_of(6, 2));
        assert_eq!(primitive_root(7), 3);
        assert_eq!(primitive_root(5), 2);
    }
}
