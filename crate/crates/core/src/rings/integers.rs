use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_traits::{One, Signed, Zero};
use rand::Rng as RandRng;

use super::arith;
use super::{
    BezoutRing, BezoutWitness, EuclideanRing, MaximalSpectrum, Ring, RingDescriptor, RingError,
};

/// The ring of integers.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Integers;

impl Ring for Integers {
    type Elem = BigInt;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::Integers
    }

    fn zero(&self) -> BigInt {
        BigInt::zero()
    }

    fn one(&self) -> BigInt {
        BigInt::one()
    }

    fn from_i64(&self, n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn add(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a + b
    }

    fn neg(&self, a: &BigInt) -> BigInt {
        -a
    }

    fn mul(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a * b
    }

    fn sub(&self, a: &BigInt, b: &BigInt) -> BigInt {
        a - b
    }

    fn is_zero(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn inverse(&self, a: &BigInt) -> Option<BigInt> {
        (a.abs().is_one()).then(|| a.clone())
    }

    fn try_divide(&self, a: &BigInt, b: &BigInt) -> Result<BigInt, RingError> {
        if b.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let (q, r) = a.div_rem(b);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(RingError::NotDivisible)
        }
    }

    fn canonical_associate(&self, a: &BigInt) -> (BigInt, BigInt) {
        if a.is_negative() {
            (-BigInt::one(), -a)
        } else {
            (BigInt::one(), a.clone())
        }
    }

    fn jacobson_membership(&self, a: &BigInt) -> bool {
        a.is_zero()
    }

    fn parse_elem(&self, s: &str) -> Result<BigInt, RingError> {
        s.trim()
            .parse::<BigInt>()
            .map_err(|e| RingError::parse(s, e.to_string()))
    }

    fn format_elem(&self, a: &BigInt) -> String {
        a.to_string()
    }

    fn sample<G: RandRng + ?Sized>(&self, rng: &mut G, scale: u32) -> BigInt {
        let s = scale as i64;
        BigInt::from(rng.gen_range(-s..=s))
    }
}

impl BezoutRing for Integers {
    fn extended_gcd(&self, a: &BigInt, b: &BigInt) -> BezoutWitness<BigInt> {
        let (d, x, y) = arith::ext_gcd(a, b);
        BezoutWitness { d, x, y }
    }

    fn residues(&self, c: &BigInt) -> Option<Box<dyn Iterator<Item = BigInt> + '_>> {
        if c.is_zero() {
            return None;
        }
        let n = c.abs();
        Some(Box::new(num_iter(n)))
    }

    /// Residue scan for small `c`, otherwise CRT over the prime divisors.
    fn comaximal_shift(&self, a: &BigInt, b: &BigInt, c: &BigInt) -> Option<BigInt> {
        if c.is_zero() {
            return None;
        }
        if c.magnitude() <= &BigUint::from(SHIFT_SCAN_LIMIT) {
            return super::residue_search(self, a, b, c, usize::MAX);
        }
        crt_shift(a, b, c)
    }
}

const SHIFT_SCAN_LIMIT: u64 = 1 << 16;

/// For each prime `l | c`, `p = 0` works unless `l | b`, in which case
/// `l ∤ a` and `p = 1` works; the residues combine by CRT.
pub(crate) fn crt_shift(a: &BigInt, b: &BigInt, c: &BigInt) -> Option<BigInt> {
    let mut p = BigInt::zero();
    let mut modulus = BigInt::one();
    for l in arith::prime_divisors(c) {
        let want = if (b % &l).is_zero() {
            if (a % &l).is_zero() {
                return None;
            }
            BigInt::one()
        } else {
            BigInt::zero()
        };
        // p + modulus·k ≡ want (mod l)
        let (_, inv, _) = arith::ext_gcd(&modulus.mod_floor(&l), &l);
        let k = ((&want - &p) * inv).mod_floor(&l);
        p += &modulus * k;
        modulus *= &l;
    }
    Some(p)
}

fn num_iter(n: BigInt) -> impl Iterator<Item = BigInt> {
    let mut k = BigInt::zero();
    std::iter::from_fn(move || {
        if k < n {
            let out = k.clone();
            k += 1;
            Some(out)
        } else {
            None
        }
    })
}

impl EuclideanRing for Integers {
    fn size(&self, a: &BigInt) -> BigUint {
        a.magnitude().clone()
    }

    fn div_rem(&self, a: &BigInt, b: &BigInt) -> (BigInt, BigInt) {
        a.div_mod_floor(b)
    }
}

impl MaximalSpectrum for Integers {
    fn mspec(&self, a: &BigInt) -> Result<Vec<BigInt>, RingError> {
        if a.is_zero() {
            return Err(RingError::ZeroHasFullSpectrum);
        }
        Ok(arith::prime_divisors(a))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn z(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn arithmetic_and_units() {
        let r = Integers;
        assert_eq!(r.add(&z(2), &z(3)), z(5));
        assert!(r.is_unit(&z(-1)));
        assert!(!r.is_unit(&z(2)));
    }

    #[test]
    fn division() {
        let r = Integers;
        assert_eq!(r.try_divide(&z(12), &z(4)), Ok(z(3)));
        assert_eq!(r.try_divide(&z(12), &z(5)), Err(RingError::NotDivisible));
        assert_eq!(r.try_divide(&z(1), &z(0)), Err(RingError::DivisionByZero));
    }

    #[test]
    fn gcd_witness() {
        let r = Integers;
        let w = r.extended_gcd(&z(12), &z(8));
        assert_eq!(w.d, z(4));
        assert_eq!(z(12) * &w.x + z(8) * &w.y, z(4));
        let w = r.extended_gcd(&z(-7), &z(0));
        assert_eq!(w.d, z(7));
        assert_eq!(w.x, z(-1));
        assert_eq!(w.y, z(0));
        assert_eq!(r.extended_gcd(&z(0), &z(0)).d, z(0));
    }

    #[test]
    fn crt_shift_avoids_every_prime() {
        let (a, b, c) = (z(6), z(35), z(2 * 3 * 5 * 7 * 11 * 13));
        let p = crt_shift(&a, &b, &c).unwrap();
        let e = &p * &a + &b;
        assert_eq!(Integers.gcd(&e, &c), z(1));
        let big = z(1_000_003) * z(999_983);
        let p = Integers
            .comaximal_shift(&z(1_000_003), &z(999_983), &big)
            .unwrap();
        assert_eq!(Integers.gcd(&(&p * z(1_000_003) + z(999_983)), &big), z(1));
    }

    #[test]
    fn canonical_and_spectrum() {
        let r = Integers;
        assert_eq!(r.canonical_associate(&z(-6)), (z(-1), z(6)));
        assert_eq!(r.mspec(&z(12)), Ok(vec![z(2), z(3)]));
        assert_eq!(r.mspec(&z(1)), Ok(vec![]));
        assert_eq!(r.mspec(&z(0)), Err(RingError::ZeroHasFullSpectrum));
        assert!(r.jacobson_membership(&z(0)));
        assert!(!r.jacobson_membership(&z(7)));
    }
}
