use crate::error::{Error, Result};
use crate::rings::BezoutRing;

/// Certificate that `(p·a + q·b)R + (q·c)R = R`, with the derived triple
/// `r·a + s·b + t·c = 1` and `r·t = s·rt_quotient`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KaplanskyWitness<E> {
    pub p: E,
    pub q: E,
    /// `x·(p·a + q·b) + y·(q·c) = 1`.
    pub x: E,
    pub y: E,
    pub r: E,
    pub s: E,
    pub t: E,
    pub rt_quotient: E,
}

/// Finds `p, q` with `p·a + q·b` comaximal to `q·c`, given that `a, b, c`
/// generate the unit ideal.
///
/// A unit `a` gives `(1, 0)`. For `c = 0` the pair comes from the Bézout
/// relation of `a, b`. Otherwise `q = 1` and `p` is searched for by
/// [`BezoutRing::comaximal_shift`].
pub fn kaplansky_step<R: BezoutRing>(
    ring: &R,
    a: &R::Elem,
    b: &R::Elem,
    c: &R::Elem,
) -> Result<KaplanskyWitness<R::Elem>> {
    if !ring.is_commutative() {
        return Err(Error::Unsupported(ring.descriptor()));
    }
    if !ring.is_unit(&ring.gcd(&ring.gcd(a, b), c)) {
        return Err(Error::NotComaximal);
    }
    let (p, q) = if ring.is_unit(a) {
        (ring.one(), ring.zero())
    } else if ring.is_zero(c) {
        let w = ring.extended_gcd(a, b);
        let u = ring.inverse(&w.d).ok_or(Error::NotComaximal)?;
        (ring.mul(&w.x, &u), ring.mul(&w.y, &u))
    } else {
        let p = ring
            .comaximal_shift(a, b, c)
            .ok_or_else(|| Error::SearchExhausted("no p makes p·a + b comaximal to c".into()))?;
        (p, ring.one())
    };

    let e = ring.add(&ring.mul(&p, a), &ring.mul(&q, b));
    let f = ring.mul(&q, c);
    let w = ring.extended_gcd(&e, &f);
    let u = ring.inverse(&w.d).ok_or(Error::NotComaximal)?;
    let x = ring.mul(&w.x, &u);
    let y = ring.mul(&w.y, &u);
    let r = ring.mul(&x, &p);
    let s = ring.mul(&x, &q);
    let t = ring.mul(&y, &q);
    let rt_quotient = ring.mul(&p, &y);

    let total = ring.sum([&ring.mul(&r, a), &ring.mul(&s, b), &ring.mul(&t, c)]);
    if !ring.is_one(&total) || ring.mul(&r, &t) != ring.mul(&s, &rt_quotient) {
        return Err(Error::Verification("Kaplansky triple".into()));
    }
    Ok(KaplanskyWitness {
        p,
        q,
        x,
        y,
        r,
        s,
        t,
        rt_quotient,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{Integers, PolyOverPrimeField, RationalQuaternions, Ring};
    use num_bigint::BigInt;

    fn z(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn pq(a: i64, b: i64, c: i64) -> (BigInt, BigInt) {
        let w = kaplansky_step(&Integers, &z(a), &z(b), &z(c)).unwrap();
        (w.p, w.q)
    }

    #[test]
    fn small_integer_triples() {
        assert_eq!(pq(10, 3, 4), (z(0), z(1)));
        assert_eq!(pq(6, 10, 15), (z(1), z(1)));
        assert_eq!(pq(1, 8, 9), (z(1), z(0)));
        assert_eq!(pq(-1, 0, 0), (z(1), z(0)));
    }

    #[test]
    fn zero_third_entry_uses_bezout_pair() {
        let w = kaplansky_step(&Integers, &z(4), &z(9), &z(0)).unwrap();
        assert_eq!(w.p * z(4) + w.q * z(9), z(1));
    }

    #[test]
    fn non_comaximal_triple() {
        assert_eq!(
            kaplansky_step(&Integers, &z(6), &z(10), &z(4)),
            Err(Error::NotComaximal)
        );
    }

    #[test]
    fn large_third_entry_uses_crt() {
        let c = z(1_000_003) * z(999_983) * z(6);
        let w = kaplansky_step(&Integers, &z(999_983), &z(2 * 1_000_003), &c).unwrap();
        assert_eq!(
            &w.r * z(999_983) + &w.s * z(2 * 1_000_003) + &w.t * &c,
            z(1)
        );
    }

    #[test]
    fn polynomial_triple() {
        let f = PolyOverPrimeField::new(5).unwrap();
        let (a, b, c) = (f.poly(&[0, 1]), f.poly(&[0, 1]), f.poly(&[1, 0, 1]));
        let w = kaplansky_step(&f, &a, &b, &c).unwrap();
        let total = f.sum([&f.mul(&w.r, &a), &f.mul(&w.s, &b), &f.mul(&w.t, &c)]);
        assert!(f.is_one(&total));
    }

    #[test]
    fn quaternions_unsupported() {
        let h = RationalQuaternions;
        assert!(matches!(
            kaplansky_step(&h, &h.one(), &h.one(), &h.one()),
            Err(Error::Unsupported(_))
        ));
    }
}
