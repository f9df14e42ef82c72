use num_bigint::BigInt;
use num_traits::ToPrimitive;
use rand::Rng as RandRng;

use super::arith;
use super::{BezoutRing, BezoutWitness, Ring, RingDescriptor, RingError};

/// Residues modulo `n ≥ 2`. Not a domain unless `n` is prime; used as the
/// concrete quotient `Z/nZ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ModularIntegers {
    n: u64,
}

impl ModularIntegers {
    pub fn new(n: u64) -> Result<Self, RingError> {
        if !(2..1 << 32).contains(&n) {
            return Err(RingError::InvalidParameter(format!(
                "modulus {n} must lie in [2, 2^32)"
            )));
        }
        Ok(Self { n })
    }

    pub fn modulus(&self) -> u64 {
        self.n
    }

    pub fn reduce_i128(&self, a: i128) -> u64 {
        a.rem_euclid(self.n as i128) as u64
    }

    fn mulm(&self, a: u64, b: u64) -> u64 {
        ((a as u128 * b as u128) % self.n as u128) as u64
    }

    /// Units of `Z/n` as a lookup table.
    pub fn unit_table(&self) -> Vec<bool> {
        (0..self.n)
            .map(|a| arith::gcd_u64(a, self.n) == 1)
            .collect()
    }
}

impl Ring for ModularIntegers {
    type Elem = u64;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::ModularIntegers(self.n)
    }

    fn zero(&self) -> u64 {
        0
    }

    fn one(&self) -> u64 {
        1
    }

    fn from_i64(&self, n: i64) -> u64 {
        self.reduce_i128(n as i128)
    }

    fn add(&self, a: &u64, b: &u64) -> u64 {
        ((*a as u128 + *b as u128) % self.n as u128) as u64
    }

    fn neg(&self, a: &u64) -> u64 {
        (self.n - a % self.n) % self.n
    }

    fn mul(&self, a: &u64, b: &u64) -> u64 {
        self.mulm(*a, *b)
    }

    fn is_domain(&self) -> bool {
        arith::is_prime(self.n)
    }

    fn inverse(&self, a: &u64) -> Option<u64> {
        arith::mod_inverse(*a, self.n)
    }

    fn try_divide(&self, a: &u64, b: &u64) -> Result<u64, RingError> {
        if *b == 0 {
            return Err(RingError::DivisionByZero);
        }
        let g = arith::gcd_u64(*b, self.n);
        if !a.is_multiple_of(g) {
            return Err(RingError::NotDivisible);
        }
        let m = self.n / g;
        let inv = arith::mod_inverse((b / g) % m, m).expect("cofactor is a unit mod n/g");
        Ok(((a / g) as u128 * inv as u128 % m as u128) as u64)
    }

    fn canonical_associate(&self, a: &u64) -> (u64, u64) {
        if *a == 0 {
            return (1, 0);
        }
        let g = arith::gcd_u64(*a, self.n);
        let step = self.n / g;
        let mut u = (a / g) % step;
        while arith::gcd_u64(u, self.n) != 1 {
            u += step;
        }
        (u % self.n, g)
    }

    fn jacobson_membership(&self, a: &u64) -> bool {
        a.is_multiple_of(arith::radical(self.n))
    }

    fn parse_elem(&self, s: &str) -> Result<u64, RingError> {
        let v: BigInt = s
            .trim()
            .parse()
            .map_err(|_| RingError::parse(s, "expected an integer"))?;
        let m = BigInt::from(self.n);
        Ok((((v % &m) + &m) % &m).to_u64().unwrap())
    }

    fn format_elem(&self, a: &u64) -> String {
        a.to_string()
    }

    fn sample<G: RandRng + ?Sized>(&self, rng: &mut G, _scale: u32) -> u64 {
        rng.gen_range(0..self.n)
    }
}

impl BezoutRing for ModularIntegers {
    fn extended_gcd(&self, a: &u64, b: &u64) -> BezoutWitness<u64> {
        let (g, x, y) = arith::ext_gcd_i128(*a as i128, *b as i128);
        if g == 0 {
            return BezoutWitness { d: 0, x: 1, y: 0 };
        }
        let (u, d) = self.canonical_associate(&self.reduce_i128(g));
        let u_inv = self.inverse(&u).expect("associate factor is a unit");
        BezoutWitness {
            d,
            x: self.mulm(self.reduce_i128(x), u_inv),
            y: self.mulm(self.reduce_i128(y), u_inv),
        }
    }

    /// Lifts to the integers so the block has determinant exactly one.
    fn bezout_block(&self, a: &u64, b: &u64) -> (u64, [u64; 4]) {
        let (g, x, y) = arith::ext_gcd_i128(*a as i128, *b as i128);
        if g == 0 {
            return (0, [1, 0, 0, 1]);
        }
        let a1 = *a as i128 / g;
        let b1 = *b as i128 / g;
        (
            self.reduce_i128(g),
            [
                self.reduce_i128(x),
                self.reduce_i128(-b1),
                self.reduce_i128(y),
                self.reduce_i128(a1),
            ],
        )
    }

    fn residues(&self, c: &u64) -> Option<Box<dyn Iterator<Item = u64> + '_>> {
        if *c == 0 {
            return None;
        }
        Some(Box::new(0..arith::gcd_u64(*c, self.n)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_is_gcd_with_modulus() {
        let r = ModularIntegers::new(12).unwrap();
        for a in 0..12u64 {
            let (u, c) = r.canonical_associate(&a);
            assert!(r.is_unit(&u));
            assert_eq!(r.mul(&u, &c), a);
            assert_eq!(c, if a == 0 { 0 } else { arith::gcd_u64(a, 12) });
        }
    }

    #[test]
    fn jacobson_radical_of_z12() {
        let r = ModularIntegers::new(12).unwrap();
        assert!(r.jacobson_membership(&6));
        assert!(r.jacobson_membership(&0));
        assert!(!r.jacobson_membership(&4));
    }

    #[test]
    fn division_with_zero_divisors() {
        let r = ModularIntegers::new(12).unwrap();
        let c = r.try_divide(&8, &4).unwrap();
        assert_eq!(r.mul(&4, &c), 8);
        assert_eq!(r.try_divide(&3, &4), Err(RingError::NotDivisible));
    }

    #[test]
    fn gcd_witness_holds() {
        let r = ModularIntegers::new(12).unwrap();
        for a in 0..12u64 {
            for b in 0..12u64 {
                let w = r.extended_gcd(&a, &b);
                assert_eq!(r.add(&r.mul(&a, &w.x), &r.mul(&b, &w.y)), w.d);
                assert!(r.divides(&w.d, &a) && r.divides(&w.d, &b));
                let (g, q) = r.bezout_block(&a, &b);
                assert_eq!(r.add(&r.mul(&a, &q[0]), &r.mul(&b, &q[2])), g);
                assert_eq!(r.add(&r.mul(&a, &q[1]), &r.mul(&b, &q[3])), 0);
            }
        }
    }
}
