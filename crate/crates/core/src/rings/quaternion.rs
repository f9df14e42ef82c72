use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng as RandRng;

use super::{BezoutRing, BezoutWitness, Ring, RingDescriptor, RingError};

/// `w + x·i + y·j + z·k` with exact rational components.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Quaternion {
    pub w: BigRational,
    pub x: BigRational,
    pub y: BigRational,
    pub z: BigRational,
}

impl Quaternion {
    pub fn new(w: BigRational, x: BigRational, y: BigRational, z: BigRational) -> Self {
        Self { w, x, y, z }
    }

    pub fn from_ints(w: i64, x: i64, y: i64, z: i64) -> Self {
        let r = |v: i64| BigRational::from_integer(BigInt::from(v));
        Self::new(r(w), r(x), r(y), r(z))
    }

    pub fn scalar(w: BigRational) -> Self {
        Self::new(
            w,
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
        )
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1, 0, 0)
    }

    pub fn j() -> Self {
        Self::from_ints(0, 0, 1, 0)
    }

    pub fn k() -> Self {
        Self::from_ints(0, 0, 0, 1)
    }

    pub fn is_zero(&self) -> bool {
        self.w.is_zero() && self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn is_scalar(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn conjugate(&self) -> Self {
        Self::new(self.w.clone(), -&self.x, -&self.y, -&self.z)
    }

    pub fn norm(&self) -> BigRational {
        &self.w * &self.w + &self.x * &self.x + &self.y * &self.y + &self.z * &self.z
    }

    fn scale(&self, c: &BigRational) -> Self {
        Self::new(&self.w * c, &self.x * c, &self.y * c, &self.z * c)
    }
}

fn fmt_rational(q: &BigRational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_scalar() {
            write!(f, "{}", fmt_rational(&self.w))
        } else {
            write!(
                f,
                "{},{},{},{}",
                fmt_rational(&self.w),
                fmt_rational(&self.x),
                fmt_rational(&self.y),
                fmt_rational(&self.z)
            )
        }
    }
}

/// Hamilton's quaternions over `Q`: a noncommutative division ring.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RationalQuaternions;

fn parse_rational(s: &str, whole: &str) -> Result<BigRational, RingError> {
    let t = s.trim();
    let (n, d) = t.split_once('/').unwrap_or((t, "1"));
    let n: BigInt = n
        .trim()
        .parse()
        .map_err(|_| RingError::parse(whole, format!("bad component {t:?}")))?;
    let d: BigInt = d
        .trim()
        .parse()
        .map_err(|_| RingError::parse(whole, format!("bad component {t:?}")))?;
    if d.is_zero() {
        return Err(RingError::parse(whole, "zero denominator"));
    }
    Ok(BigRational::new(n, d))
}

impl Ring for RationalQuaternions {
    type Elem = Quaternion;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::RationalQuaternions
    }

    fn zero(&self) -> Quaternion {
        Quaternion::default()
    }

    fn one(&self) -> Quaternion {
        Quaternion::from_ints(1, 0, 0, 0)
    }

    fn from_i64(&self, n: i64) -> Quaternion {
        Quaternion::from_ints(n, 0, 0, 0)
    }

    fn add(&self, a: &Quaternion, b: &Quaternion) -> Quaternion {
        Quaternion::new(&a.w + &b.w, &a.x + &b.x, &a.y + &b.y, &a.z + &b.z)
    }

    fn neg(&self, a: &Quaternion) -> Quaternion {
        Quaternion::new(-&a.w, -&a.x, -&a.y, -&a.z)
    }

    fn mul(&self, a: &Quaternion, b: &Quaternion) -> Quaternion {
        Quaternion::new(
            &a.w * &b.w - &a.x * &b.x - &a.y * &b.y - &a.z * &b.z,
            &a.w * &b.x + &a.x * &b.w + &a.y * &b.z - &a.z * &b.y,
            &a.w * &b.y - &a.x * &b.z + &a.y * &b.w + &a.z * &b.x,
            &a.w * &b.z + &a.x * &b.y - &a.y * &b.x + &a.z * &b.w,
        )
    }

    fn is_zero(&self, a: &Quaternion) -> bool {
        a.is_zero()
    }

    fn is_commutative(&self) -> bool {
        false
    }

    fn inverse(&self, a: &Quaternion) -> Option<Quaternion> {
        if a.is_zero() {
            return None;
        }
        Some(a.conjugate().scale(&a.norm().recip()))
    }

    fn try_divide(&self, a: &Quaternion, b: &Quaternion) -> Result<Quaternion, RingError> {
        let inv = self.inverse(b).ok_or(RingError::DivisionByZero)?;
        Ok(self.mul(&inv, a))
    }

    fn canonical_associate(&self, a: &Quaternion) -> (Quaternion, Quaternion) {
        if a.is_zero() {
            (self.one(), self.zero())
        } else {
            (a.clone(), self.one())
        }
    }

    fn jacobson_membership(&self, a: &Quaternion) -> bool {
        a.is_zero()
    }

    fn generates_unit_ideal(&self, a: &Quaternion) -> bool {
        !a.is_zero()
    }

    fn parse_elem(&self, s: &str) -> Result<Quaternion, RingError> {
        let parts: Vec<&str> = s.split(',').collect();
        match parts.as_slice() {
            [w] => Ok(Quaternion::scalar(parse_rational(w, s)?)),
            [w, x, y, z] => Ok(Quaternion::new(
                parse_rational(w, s)?,
                parse_rational(x, s)?,
                parse_rational(y, s)?,
                parse_rational(z, s)?,
            )),
            _ => Err(RingError::parse(s, "expected w or w,x,y,z")),
        }
    }

    fn format_elem(&self, a: &Quaternion) -> String {
        a.to_string()
    }

    fn sample<G: RandRng + ?Sized>(&self, rng: &mut G, scale: u32) -> Quaternion {
        let s = scale as i64;
        let mut comp = || {
            let n = rng.gen_range(-s..=s);
            let d = if rng.gen_bool(0.25) {
                rng.gen_range(1..=4)
            } else {
                1
            };
            BigRational::new(BigInt::from(n), BigInt::from(d))
        };
        Quaternion::new(comp(), comp(), comp(), comp())
    }
}

impl BezoutRing for RationalQuaternions {
    /// Every nonzero element is invertible, so the generator is 1 unless
    /// both inputs vanish.
    fn extended_gcd(&self, a: &Quaternion, b: &Quaternion) -> BezoutWitness<Quaternion> {
        if let Some(inv) = self.inverse(a) {
            BezoutWitness {
                d: self.one(),
                x: inv,
                y: self.zero(),
            }
        } else if let Some(inv) = self.inverse(b) {
            BezoutWitness {
                d: self.one(),
                x: self.zero(),
                y: inv,
            }
        } else {
            BezoutWitness {
                d: self.zero(),
                x: self.one(),
                y: self.zero(),
            }
        }
    }

    fn residues(&self, c: &Quaternion) -> Option<Box<dyn Iterator<Item = Quaternion> + '_>> {
        (!c.is_zero())
            .then(|| Box::new(std::iter::once(self.zero())) as Box<dyn Iterator<Item = _>>)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hamilton_table() {
        let h = RationalQuaternions;
        let (i, j, k) = (Quaternion::i(), Quaternion::j(), Quaternion::k());
        assert_eq!(h.mul(&i, &j), k);
        assert_eq!(h.mul(&j, &i), h.neg(&k));
        assert_eq!(h.mul(&j, &k), i);
        assert_eq!(h.mul(&k, &i), j);
        assert_eq!(h.mul(&i, &i), h.from_i64(-1));
    }

    #[test]
    fn every_nonzero_is_unit() {
        let h = RationalQuaternions;
        let q = Quaternion::from_ints(1, 2, -3, 4);
        let inv = h.inverse(&q).unwrap();
        assert_eq!(h.mul(&q, &inv), h.one());
        assert_eq!(h.mul(&inv, &q), h.one());
        assert!(!h.is_unit(&h.zero()));
    }

    #[test]
    fn right_division() {
        let h = RationalQuaternions;
        let (a, b) = (
            Quaternion::from_ints(0, 1, 2, 0),
            Quaternion::from_ints(3, 0, 0, 1),
        );
        let c = h.try_divide(&a, &b).unwrap();
        assert_eq!(h.mul(&b, &c), a);
    }

    #[test]
    fn text_encoding() {
        let h = RationalQuaternions;
        let q = h.parse_elem("1/2,0,-1,3").unwrap();
        assert_eq!(h.format_elem(&q), "1/2,0,-1,3");
        assert_eq!(h.format_elem(&h.one()), "1");
        assert_eq!(h.parse_elem("0,0,1,0").unwrap(), Quaternion::j());
        assert!(h.parse_elem("1,2").is_err());
    }
}
