use num_bigint::{BigInt, BigUint};
use num_integer::Integer as _;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng as RandRng;

use super::arith;
use super::{
    BezoutRing, BezoutWitness, EuclideanRing, MaximalSpectrum, Ring, RingDescriptor, RingError,
};

/// Rationals whose reduced denominator is coprime to 6, i.e. the
/// intersection of the localizations of `Z` at 2 and at 3.
///
/// Divisibility depends only on the 2- and 3-adic valuations, so every
/// nonzero element is a unit times `2^i·3^j`. The Jacobson radical is `6R`.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct LocalizedIntegers;

/// Valuations and unit part of a nonzero element: `a = unit·2^v2·3^v3`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalParts {
    pub v2: u32,
    pub v3: u32,
    pub unit: BigRational,
}

fn coprime_to_six(n: &BigInt) -> bool {
    !(n % 2u32).is_zero() && !(n % 3u32).is_zero()
}

fn pow23(v2: u32, v3: u32) -> BigInt {
    num_traits::pow(BigInt::from(2), v2 as usize) * num_traits::pow(BigInt::from(3), v3 as usize)
}

impl LocalizedIntegers {
    pub fn fraction(&self, num: i64, den: i64) -> Result<BigRational, RingError> {
        if den == 0 {
            return Err(RingError::DivisionByZero);
        }
        let q = BigRational::new(BigInt::from(num), BigInt::from(den));
        if !coprime_to_six(q.denom()) {
            return Err(RingError::InvalidParameter(format!(
                "{num}/{den} has a denominator divisible by 2 or 3"
            )));
        }
        Ok(q)
    }

    pub fn parts(&self, a: &BigRational) -> Option<LocalParts> {
        if a.is_zero() {
            return None;
        }
        let (v2, rest) = arith::split_valuation(a.numer(), 2);
        let (v3, rest) = arith::split_valuation(&rest, 3);
        Some(LocalParts {
            v2,
            v3,
            unit: BigRational::new(rest, a.denom().clone()),
        })
    }

    /// The image of `a` in `R/6R ≅ Z/6`.
    pub fn residue_mod6(&self, a: &BigRational) -> u64 {
        let n = a.numer().mod_floor(&BigInt::from(6)).to_u64().unwrap();
        let d = a.denom().mod_floor(&BigInt::from(6)).to_u64().unwrap();
        let d_inv = arith::mod_inverse(d, 6).expect("denominator is coprime to 6");
        n * d_inv % 6
    }

    pub fn from_integer(&self, n: BigInt) -> BigRational {
        BigRational::from_integer(n)
    }
}

impl Ring for LocalizedIntegers {
    type Elem = BigRational;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::LocalizedIntegers
    }

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }

    fn one(&self) -> BigRational {
        BigRational::one()
    }

    fn from_i64(&self, n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }

    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }

    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }

    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }

    fn inverse(&self, a: &BigRational) -> Option<BigRational> {
        (!a.is_zero() && coprime_to_six(a.numer())).then(|| a.recip())
    }

    fn try_divide(&self, a: &BigRational, b: &BigRational) -> Result<BigRational, RingError> {
        if b.is_zero() {
            return Err(RingError::DivisionByZero);
        }
        let q = a / b;
        if coprime_to_six(q.denom()) {
            Ok(q)
        } else {
            Err(RingError::NotDivisible)
        }
    }

    fn canonical_associate(&self, a: &BigRational) -> (BigRational, BigRational) {
        match self.parts(a) {
            None => (self.one(), self.zero()),
            Some(p) => (p.unit, BigRational::from_integer(pow23(p.v2, p.v3))),
        }
    }

    fn jacobson_membership(&self, a: &BigRational) -> bool {
        self.parts(a).is_none_or(|p| p.v2 >= 1 && p.v3 >= 1)
    }

    fn parse_elem(&self, s: &str) -> Result<BigRational, RingError> {
        let t = s.trim();
        let (num, den) = match t.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (t, "1"),
        };
        let num: BigInt = num
            .parse()
            .map_err(|_| RingError::parse(s, "bad numerator"))?;
        let den: BigInt = den
            .parse()
            .map_err(|_| RingError::parse(s, "bad denominator"))?;
        if den.is_zero() {
            return Err(RingError::parse(s, "zero denominator"));
        }
        let q = BigRational::new(num, den);
        if !coprime_to_six(q.denom()) {
            return Err(RingError::parse(s, "denominator must be coprime to 6"));
        }
        Ok(q)
    }

    fn format_elem(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn sample<G: RandRng + ?Sized>(&self, rng: &mut G, scale: u32) -> BigRational {
        let s = scale.max(1) as i64;
        let num = rng.gen_range(-s..=s);
        let den = loop {
            let d = rng.gen_range(1..=s.min(35));
            if d % 2 != 0 && d % 3 != 0 {
                break d;
            }
        };
        BigRational::new(BigInt::from(num), BigInt::from(den))
    }
}

impl BezoutRing for LocalizedIntegers {
    fn extended_gcd(&self, a: &BigRational, b: &BigRational) -> BezoutWitness<BigRational> {
        match (self.parts(a), self.parts(b)) {
            (None, None) => BezoutWitness {
                d: self.zero(),
                x: self.one(),
                y: self.zero(),
            },
            (Some(pa), None) => BezoutWitness {
                d: BigRational::from_integer(pow23(pa.v2, pa.v3)),
                x: pa.unit.recip(),
                y: self.zero(),
            },
            (None, Some(pb)) => BezoutWitness {
                d: BigRational::from_integer(pow23(pb.v2, pb.v3)),
                x: self.zero(),
                y: pb.unit.recip(),
            },
            (Some(pa), Some(pb)) => {
                let ia = pow23(pa.v2, pa.v3);
                let ib = pow23(pb.v2, pb.v3);
                let (g, x, y) = arith::ext_gcd(&ia, &ib);
                BezoutWitness {
                    d: BigRational::from_integer(g),
                    x: BigRational::from_integer(x) / pa.unit,
                    y: BigRational::from_integer(y) / pb.unit,
                }
            }
        }
    }

    fn residues(&self, c: &BigRational) -> Option<Box<dyn Iterator<Item = BigRational> + '_>> {
        let p = self.parts(c)?;
        let count = pow23(p.v2, p.v3).to_u64()?;
        Some(Box::new(
            (0..count).map(|k| BigRational::from_integer(BigInt::from(k))),
        ))
    }
}

impl EuclideanRing for LocalizedIntegers {
    fn size(&self, a: &BigRational) -> BigUint {
        let p = self.parts(a).expect("size of a nonzero element");
        BigUint::from(p.v2 + p.v3)
    }

    fn div_rem(&self, a: &BigRational, b: &BigRational) -> (BigRational, BigRational) {
        if let Ok(q) = self.try_divide(a, b) {
            return (q, self.zero());
        }
        // Some q in {0, 1, 2} lowers both valuations as far as the coset allows.
        let target = self.size(b);
        for k in 0..6i64 {
            let q = self.from_i64(k);
            let r = a - b * &q;
            if !r.is_zero() && self.size(&r) < target {
                return (q, r);
            }
        }
        unreachable!("a small integer quotient always lowers the size")
    }
}

impl MaximalSpectrum for LocalizedIntegers {
    fn mspec(&self, a: &BigRational) -> Result<Vec<BigInt>, RingError> {
        let p = self.parts(a).ok_or(RingError::ZeroHasFullSpectrum)?;
        let mut out = Vec::new();
        if p.v2 > 0 {
            out.push(BigInt::from(2));
        }
        if p.v3 > 0 {
            out.push(BigInt::from(3));
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        LocalizedIntegers.fraction(n, d).unwrap()
    }

    #[test]
    fn units_and_inverses() {
        let r = LocalizedIntegers;
        assert_eq!(r.mul(&q(1, 5), &q(5, 1)), r.one());
        assert!(r.is_unit(&q(5, 7)));
        assert!(!r.is_unit(&q(2, 1)));
        assert!(!r.is_unit(&q(3, 1)));
    }

    #[test]
    fn division_by_valuation() {
        let r = LocalizedIntegers;
        assert_eq!(r.try_divide(&q(2, 1), &q(10, 1)), Ok(q(1, 5)));
        assert_eq!(
            r.try_divide(&q(3, 1), &q(2, 1)),
            Err(RingError::NotDivisible)
        );
    }

    #[test]
    fn gcd_of_associate_parts() {
        let r = LocalizedIntegers;
        let (a, b) = (q(4, 5), q(6, 1));
        let w = r.extended_gcd(&a, &b);
        assert_eq!(w.d, q(2, 1));
        assert_eq!(&a * &w.x + &b * &w.y, w.d);
    }

    #[test]
    fn canonical_jacobson_spectrum() {
        let r = LocalizedIntegers;
        assert_eq!(r.canonical_associate(&q(20, 7)), (q(5, 7), q(4, 1)));
        assert!(r.jacobson_membership(&q(12, 5)));
        assert!(!r.jacobson_membership(&q(4, 1)));
        assert_eq!(r.mspec(&q(4, 7)), Ok(vec![BigInt::from(2)]));
        assert_eq!(r.residue_mod6(&q(5, 7)), 5);
        assert_eq!(r.residue_mod6(&q(-1, 1)), 5);
    }

    #[test]
    fn parsing() {
        let r = LocalizedIntegers;
        assert_eq!(r.parse_elem("20/7").unwrap(), q(20, 7));
        assert_eq!(r.parse_elem("-3").unwrap(), q(-3, 1));
        assert!(r.parse_elem("1/2").is_err());
        assert!(r.parse_elem("1/0").is_err());
        assert_eq!(r.format_elem(&q(-1, 1)), "-1");
        assert_eq!(r.format_elem(&q(4, 35)), "4/35");
    }

    #[test]
    fn euclidean_remainder_is_smaller() {
        let r = LocalizedIntegers;
        let (a, b) = (q(3, 1), q(2, 1));
        let (qq, rr) = r.div_rem(&a, &b);
        assert_eq!(&b * &qq + &rr, a);
        assert!(r.size(&rr) < r.size(&b));
    }
}
