//! Exact arithmetic substrate: Z[ζ], its fractions, finite fields F_{p^k},
//! polynomials over Q, and arbitrary-precision real/complex numbers.

pub mod big;
pub mod eis;
pub mod fq;
pub mod frac;
pub mod qpoly;

/// Deterministic Miller-Rabin for u64.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    // These witnesses are exact for all n < 3.3e24.
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a % n, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, b, m);
        }
        b = mul_mod(b, b, m);
        e >>= 1;
    }
    acc
}

/// Primes in [lo, hi) by a simple sieve.
pub fn primes_in(lo: u64, hi: u64) -> Vec<u64> {
    if hi <= 2 {
        return vec![];
    }
    let mut sieve = vec![true; hi as usize];
    sieve[0] = false;
    if hi > 1 {
        sieve[1] = false;
    }
    let mut i = 2usize;
    while i * i < hi as usize {
        if sieve[i] {
            let mut j = i * i;
            while j < hi as usize {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    (lo.max(2)..hi).filter(|&n| sieve[n as usize]).collect()
}
