use std::fmt;

use num_bigint::{BigInt, BigUint};
use rand::Rng as RandRng;

use super::arith;
use super::{BezoutRing, BezoutWitness, EuclideanRing, Ring, RingDescriptor, RingError};

/// Dense univariate polynomial over `Z/p`, lowest degree first.
///
/// The coefficient vector never ends in a zero; the zero polynomial is the
/// empty vector.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Poly(Vec<u64>);

impl Poly {
    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<u64> {
        self.0.last().copied()
    }

    fn trimmed(mut v: Vec<u64>) -> Self {
        while v.last() == Some(&0) {
            v.pop();
        }
        Poly(v)
    }
}

/// `F_p[x]` for a prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PolyOverPrimeField {
    p: u64,
}

impl PolyOverPrimeField {
    pub fn new(p: u64) -> Result<Self, RingError> {
        if !arith::is_prime(p) || p >= 1 << 31 {
            return Err(RingError::InvalidParameter(format!(
                "{p} is not a prime below 2^31"
            )));
        }
        Ok(Self { p })
    }

    pub fn modulus(&self) -> u64 {
        self.p
    }

    /// Builds a polynomial from integer coefficients, lowest degree first.
    pub fn poly(&self, coeffs: &[i64]) -> Poly {
        let p = self.p as i64;
        Poly::trimmed(coeffs.iter().map(|c| c.rem_euclid(p) as u64).collect())
    }

    pub fn monomial(&self, coeff: u64, deg: usize) -> Poly {
        let mut v = vec![0; deg + 1];
        v[deg] = coeff % self.p;
        Poly::trimmed(v)
    }

    fn inv_coeff(&self, c: u64) -> u64 {
        arith::mod_inverse(c, self.p).expect("nonzero coefficient in a prime field")
    }

    fn scale(&self, a: &Poly, c: u64) -> Poly {
        let p = self.p;
        Poly::trimmed(a.0.iter().map(|x| x * c % p).collect())
    }

    /// Division with remainder by a nonzero polynomial.
    pub fn poly_div_rem(&self, a: &Poly, b: &Poly) -> (Poly, Poly) {
        let p = self.p;
        let db = b.degree().expect("division by the zero polynomial");
        let lead_inv = self.inv_coeff(b.leading().unwrap());
        let mut rem = a.0.clone();
        let Some(da) = a.degree().filter(|&da| da >= db) else {
            return (Poly::default(), a.clone());
        };
        let mut quot = vec![0u64; da - db + 1];
        for k in (0..=da - db).rev() {
            let c = rem[k + db] * lead_inv % p;
            quot[k] = c;
            if c != 0 {
                for (i, bc) in b.0.iter().enumerate() {
                    rem[k + i] = (rem[k + i] + p - c * bc % p) % p;
                }
            }
        }
        (Poly::trimmed(quot), Poly::trimmed(rem))
    }

    fn count_below_degree(&self, d: usize) -> Option<u64> {
        self.p.checked_pow(d as u32)
    }

    /// The polynomial whose coefficients are the base-`p` digits of `index`.
    fn from_index(&self, mut index: u64) -> Poly {
        let mut v = Vec::new();
        while index > 0 {
            v.push(index % self.p);
            index /= self.p;
        }
        Poly::trimmed(v)
    }

    fn parse_term(&self, term: &str, whole: &str) -> Result<(u64, usize), RingError> {
        let (neg, body) = match term.strip_prefix('-') {
            Some(rest) => (true, rest),
            None => (false, term.strip_prefix('+').unwrap_or(term)),
        };
        if body.is_empty() {
            return Err(RingError::parse(whole, "empty term"));
        }
        let (coef_str, var_part) = match body.find('x') {
            None => (body, None),
            Some(pos) => {
                let coef = body[..pos].strip_suffix('*').unwrap_or(&body[..pos]);
                (coef, Some(&body[pos + 1..]))
            }
        };
        let coef: BigInt = if coef_str.is_empty() {
            if var_part.is_none() {
                return Err(RingError::parse(whole, "missing coefficient"));
            }
            BigInt::from(1)
        } else {
            coef_str
                .parse()
                .map_err(|_| RingError::parse(whole, format!("bad coefficient {coef_str:?}")))?
        };
        let deg = match var_part {
            None => 0,
            Some("") => 1,
            Some(rest) => {
                let exp = rest
                    .strip_prefix('^')
                    .ok_or_else(|| RingError::parse(whole, format!("bad exponent {rest:?}")))?;
                exp.parse::<usize>()
                    .map_err(|_| RingError::parse(whole, format!("bad exponent {exp:?}")))?
            }
        };
        let m = BigInt::from(self.p);
        let mut c = ((coef % &m) + &m) % &m;
        if neg {
            c = (&m - c) % &m;
        }
        let c: u64 = c.try_into().expect("residue fits in u64");
        Ok((c, deg))
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                write!(f, "+")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*x")?,
                _ => write!(f, "{c}*x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Ring for PolyOverPrimeField {
    type Elem = Poly;

    fn descriptor(&self) -> RingDescriptor {
        RingDescriptor::PolyOverPrimeField(self.p)
    }

    fn zero(&self) -> Poly {
        Poly::default()
    }

    fn one(&self) -> Poly {
        Poly(vec![1])
    }

    fn from_i64(&self, n: i64) -> Poly {
        self.poly(&[n])
    }

    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let p = self.p;
        let n = a.0.len().max(b.0.len());
        let v = (0..n)
            .map(|i| (a.0.get(i).copied().unwrap_or(0) + b.0.get(i).copied().unwrap_or(0)) % p)
            .collect();
        Poly::trimmed(v)
    }

    fn neg(&self, a: &Poly) -> Poly {
        let p = self.p;
        Poly::trimmed(a.0.iter().map(|&c| (p - c) % p).collect())
    }

    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        if a.0.is_empty() || b.0.is_empty() {
            return Poly::default();
        }
        let p = self.p;
        let mut v = vec![0u64; a.0.len() + b.0.len() - 1];
        for (i, x) in a.0.iter().enumerate() {
            if *x == 0 {
                continue;
            }
            for (j, y) in b.0.iter().enumerate() {
                v[i + j] = (v[i + j] + x * y) % p;
            }
        }
        Poly::trimmed(v)
    }

    fn is_zero(&self, a: &Poly) -> bool {
        a.0.is_empty()
    }

    fn inverse(&self, a: &Poly) -> Option<Poly> {
        (a.degree() == Some(0)).then(|| Poly(vec![self.inv_coeff(a.0[0])]))
    }

    fn try_divide(&self, a: &Poly, b: &Poly) -> Result<Poly, RingError> {
        if b.0.is_empty() {
            return Err(RingError::DivisionByZero);
        }
        let (q, r) = self.poly_div_rem(a, b);
        if r.0.is_empty() {
            Ok(q)
        } else {
            Err(RingError::NotDivisible)
        }
    }

    fn canonical_associate(&self, a: &Poly) -> (Poly, Poly) {
        match a.leading() {
            None | Some(1) => (self.one(), a.clone()),
            Some(lead) => (Poly(vec![lead]), self.scale(a, self.inv_coeff(lead))),
        }
    }

    fn jacobson_membership(&self, a: &Poly) -> bool {
        a.0.is_empty()
    }

    fn parse_elem(&self, s: &str) -> Result<Poly, RingError> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(RingError::parse(s, "empty polynomial"));
        }
        let mut terms = Vec::new();
        let mut start = 0;
        let bytes = compact.as_bytes();
        for i in 1..bytes.len() {
            if (bytes[i] == b'+' || bytes[i] == b'-') && bytes[i - 1] != b'^' {
                terms.push(&compact[start..i]);
                start = i;
            }
        }
        terms.push(&compact[start..]);
        let mut acc = self.zero();
        for t in terms {
            let (c, d) = self.parse_term(t, s)?;
            acc = self.add(&acc, &self.monomial(c, d));
        }
        Ok(acc)
    }

    fn format_elem(&self, a: &Poly) -> String {
        a.to_string()
    }

    fn sample<G: RandRng + ?Sized>(&self, rng: &mut G, scale: u32) -> Poly {
        let deg = rng.gen_range(0..=scale as usize);
        let v = (0..=deg).map(|_| rng.gen_range(0..self.p)).collect();
        Poly::trimmed(v)
    }
}

impl BezoutRing for PolyOverPrimeField {
    fn extended_gcd(&self, a: &Poly, b: &Poly) -> BezoutWitness<Poly> {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut x0, mut x1) = (self.one(), self.zero());
        let (mut y0, mut y1) = (self.zero(), self.one());
        while !r1.0.is_empty() {
            let (q, r2) = self.poly_div_rem(&r0, &r1);
            r0 = std::mem::replace(&mut r1, r2);
            let x2 = self.sub(&x0, &self.mul(&q, &x1));
            x0 = std::mem::replace(&mut x1, x2);
            let y2 = self.sub(&y0, &self.mul(&q, &y1));
            y0 = std::mem::replace(&mut y1, y2);
        }
        match r0.leading() {
            None | Some(1) => BezoutWitness {
                d: r0,
                x: x0,
                y: y0,
            },
            Some(lead) => {
                let inv = self.inv_coeff(lead);
                BezoutWitness {
                    d: self.scale(&r0, inv),
                    x: self.scale(&x0, inv),
                    y: self.scale(&y0, inv),
                }
            }
        }
    }

    fn residues(&self, c: &Poly) -> Option<Box<dyn Iterator<Item = Poly> + '_>> {
        let count = self.count_below_degree(c.degree()?)?;
        Some(Box::new((0..count).map(move |i| self.from_index(i))))
    }
}

impl EuclideanRing for PolyOverPrimeField {
    fn size(&self, a: &Poly) -> BigUint {
        BigUint::from(a.degree().unwrap_or(0))
    }

    fn div_rem(&self, a: &Poly, b: &Poly) -> (Poly, Poly) {
        self.poly_div_rem(a, b)
    }
}
