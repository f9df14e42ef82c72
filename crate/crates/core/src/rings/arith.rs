//! Integer helpers shared by the instances.

use num_bigint::BigInt;
use num_integer::Integer as _;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Extended Euclid on integers: `(g, x, y)` with `g = a·x + b·y`, `g ≥ 0`.
pub fn ext_gcd(a: &BigInt, b: &BigInt) -> (BigInt, BigInt, BigInt) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut x0, mut x1) = (BigInt::one(), BigInt::zero());
    let (mut y0, mut y1) = (BigInt::zero(), BigInt::one());
    while !r1.is_zero() {
        let q = r0.div_floor(&r1);
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let x2 = &x0 - &q * &x1;
        x0 = std::mem::replace(&mut x1, x2);
        let y2 = &y0 - &q * &y1;
        y0 = std::mem::replace(&mut y1, y2);
    }
    if r0.is_negative() {
        (-r0, -x0, -y0)
    } else {
        (r0, x0, y0)
    }
}

pub fn ext_gcd_i128(a: i128, b: i128) -> (i128, i128, i128) {
    let (mut r0, mut r1) = (a, b);
    let (mut x0, mut x1) = (1i128, 0i128);
    let (mut y0, mut y1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0.div_euclid(r1);
        (r0, r1) = (r1, r0 - q * r1);
        (x0, x1) = (x1, x0 - q * x1);
        (y0, y1) = (y1, y0 - q * y1);
    }
    if r0 < 0 {
        (-r0, -x0, -y0)
    } else {
        (r0, x0, y0)
    }
}

pub fn gcd_u64(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// Inverse of `a` modulo `m`, if it exists.
pub fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (g, x, _) = ext_gcd_i128(a as i128, m as i128);
    (g == 1).then(|| x.rem_euclid(m as i128) as u64)
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Prime factorization by trial division, as `(prime, exponent)` ascending.
pub fn factorize_u64(mut n: u64) -> Vec<(u64, u32)> {
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

/// Distinct prime divisors of a nonzero integer, ascending, by trial division.
pub fn prime_divisors(n: &BigInt) -> Vec<BigInt> {
    if let Some(small) = n.abs().to_u64() {
        return factorize_u64(small)
            .into_iter()
            .map(|(p, _)| BigInt::from(p))
            .collect();
    }
    let mut m = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::from(2);
    while &d * &d <= m {
        if (&m % &d).is_zero() {
            while (&m % &d).is_zero() {
                m /= &d;
            }
            out.push(d.clone());
        }
        d += 1;
    }
    if m > BigInt::one() {
        out.push(m);
    }
    out
}

/// Product of the distinct primes dividing `n`.
pub fn radical(n: u64) -> u64 {
    factorize_u64(n).into_iter().map(|(p, _)| p).product()
}

/// Exponent of the prime `p` in the nonzero integer `n`, and the cofactor.
pub fn split_valuation(n: &BigInt, p: u32) -> (u32, BigInt) {
    let p = BigInt::from(p);
    let mut m = n.clone();
    let mut v = 0;
    while !m.is_zero() && (&m % &p).is_zero() {
        m /= &p;
        v += 1;
    }
    (v, m)
}
