//! Constructive checks of element-level ring conditions.
//!
//! Stable range one of `Z/n` is certified by exhaustive enumeration, PM
//! witnesses in `Z/a` by exhaustive search, and splits by gcd saturation,
//! which needs no factorization and so works the same way over `F_p[x]`.
//! In the localized integers `J(R) = 6R` and the idempotents of
//! `R/J ≅ Z/6` lift to `{0, 1, 3, 4}`.

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::batch::{map_indexed, Execution};
use crate::error::{Error, Result};
use crate::rings::{arith, BezoutRing, Integers, LocalizedIntegers, Ring};

pub const STABLE_RANGE_MAX: u64 = 10_000;
/// Moduli up to this size keep their full witness table.
pub const STABLE_RANGE_TABLE_MAX: u64 = 1_024;
pub const PM_WITNESS_MAX: u64 = 1_000;

/// Witness table over `Z/n`: for every comaximal pair `(x, b)` some `y`
/// with `x + b·y` a unit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableRangeTable {
    modulus: u64,
    ys: Vec<u16>,
}

impl StableRangeTable {
    const NOT_COMAXIMAL: u16 = u16::MAX;

    /// The stored `y` for `(x, b)`, or `None` when the pair is not comaximal.
    pub fn witness(&self, x: u64, b: u64) -> Option<u64> {
        let n = self.modulus;
        let y = self.ys[((x % n) * n + b % n) as usize];
        (y != Self::NOT_COMAXIMAL).then_some(y as u64)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StableRangeCertificate {
    pub modulus: u64,
    /// Comaximal pairs examined.
    pub pairs_checked: u64,
    /// Kept for moduli up to [`STABLE_RANGE_TABLE_MAX`].
    pub table: Option<StableRangeTable>,
    pub verdict: bool,
    pub counterexample: Option<(u64, u64)>,
}

struct Row {
    ys: Vec<u16>,
    pairs: u64,
    counterexample: Option<(u64, u64)>,
}

/// Enumerates every pair `(x, b)` of `Z/n` with `x·Z/n + b·Z/n` the whole
/// ring and searches for `y` with `x + b·y` a unit.
pub fn stable_range_one(n: u64) -> Result<StableRangeCertificate> {
    stable_range_one_with(n, Execution::default())
}

pub fn stable_range_one_with(n: u64, exec: Execution) -> Result<StableRangeCertificate> {
    if n < 2 {
        return Err(Error::Precondition(format!(
            "modulus {n} must be at least 2"
        )));
    }
    if n > STABLE_RANGE_MAX {
        return Err(Error::BudgetExceeded(format!(
            "modulus {n} exceeds {STABLE_RANGE_MAX}"
        )));
    }
    let primes: Vec<u64> = arith::factorize_u64(n)
        .into_iter()
        .map(|(p, _)| p)
        .collect();
    let unit: Vec<bool> = (0..n).map(|v| primes.iter().all(|p| v % p != 0)).collect();
    let keep = n <= STABLE_RANGE_TABLE_MAX;

    let rows = map_indexed(exec, n as usize, |x| {
        let x = x as u64;
        let mut row = Row {
            ys: Vec::new(),
            pairs: 0,
            counterexample: None,
        };
        for b in 0..n {
            let comaximal = primes.iter().all(|p| !x.is_multiple_of(*p) || b % p != 0);
            if !comaximal {
                if keep {
                    row.ys.push(StableRangeTable::NOT_COMAXIMAL);
                }
                continue;
            }
            row.pairs += 1;
            let y = (0..n).find(|&y| unit[((x + b * y) % n) as usize]);
            match y {
                Some(y) if keep => row.ys.push(y as u16),
                Some(_) => {}
                None => {
                    row.counterexample.get_or_insert((x, b));
                    if keep {
                        row.ys.push(StableRangeTable::NOT_COMAXIMAL);
                    }
                }
            }
        }
        row
    });

    let pairs_checked = rows.iter().map(|r| r.pairs).sum();
    let counterexample = rows.iter().find_map(|r| r.counterexample);
    let table = keep.then(|| StableRangeTable {
        modulus: n,
        ys: rows.into_iter().flat_map(|r| r.ys).collect(),
    });
    Ok(StableRangeCertificate {
        modulus: n,
        pairs_checked,
        table,
        verdict: counterexample.is_none(),
        counterexample,
    })
}

/// Certificates for every modulus in `lo..=hi`.
pub fn stable_range_sweep(
    exec: Execution,
    lo: u64,
    hi: u64,
) -> Result<Vec<StableRangeCertificate>> {
    let moduli: Vec<u64> = (lo..=hi).collect();
    map_indexed(exec, moduli.len(), |i| {
        stable_range_one_with(moduli[i], Execution::Sequential)
    })
    .into_iter()
    .collect()
}

/// `a = r·s` with `r` comaximal to `b` and every non-unit divisor of `s`
/// sharing a factor with `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AdequateSplit<E> {
    pub r: E,
    pub s: E,
}

/// Moves the common part of `a` and `b` into `s` by repeated gcds.
pub fn adequate_split<R: BezoutRing>(
    ring: &R,
    a: &R::Elem,
    b: &R::Elem,
) -> Result<AdequateSplit<R::Elem>> {
    if !ring.is_commutative() {
        return Err(Error::Unsupported(ring.descriptor()));
    }
    if ring.is_zero(a) {
        return Err(Error::Precondition("adequate split of zero".into()));
    }
    let mut s = ring.gcd(a, b);
    let mut r = ring.try_divide(a, &s)?;
    loop {
        let g = ring.gcd(&r, &s);
        if ring.is_unit(&g) {
            break;
        }
        r = ring.try_divide(&r, &g)?;
        s = ring.mul(&s, &g);
    }
    Ok(AdequateSplit { r, s })
}

/// For integers: each prime divisor of `s` with its gcd against `b`.
/// Every listed gcd is greater than one for a valid split.
pub fn prime_audit(split: &AdequateSplit<BigInt>, b: &BigInt) -> Vec<(BigInt, BigInt)> {
    if split.s == BigInt::from(0) {
        return Vec::new();
    }
    arith::prime_divisors(&split.s)
        .into_iter()
        .map(|p| {
            let g = Integers.gcd(&p, b);
            (p, g)
        })
        .collect()
}

/// `a = r·s` with `r` comaximal to `b` and `s` comaximal to `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PmSplit<E> {
    pub r: E,
    pub s: E,
}

/// Splits `a` against comaximal `b, c`: the part of `a` supported on the
/// primes of `c` is comaximal to `b`, the rest is comaximal to `c`.
pub fn pm_split<R: BezoutRing>(
    ring: &R,
    a: &R::Elem,
    b: &R::Elem,
    c: &R::Elem,
) -> Result<PmSplit<R::Elem>> {
    if !ring.is_unit(&ring.gcd(b, c)) {
        return Err(Error::Precondition("b and c must be comaximal".into()));
    }
    let split = adequate_split(ring, a, c)?;
    Ok(PmSplit {
        r: split.s,
        s: split.r,
    })
}

/// The first `(r, s)` in lexicographic order with
/// `(1 + b·r)(1 + c·s) ≡ 0 (mod a)`, for `b + c ≡ 1`.
pub fn pm_witness(a: u64, b: u64, c: u64) -> Result<(u64, u64)> {
    if !(2..=PM_WITNESS_MAX).contains(&a) {
        return Err(Error::Precondition(format!(
            "modulus {a} outside 2..={PM_WITNESS_MAX}"
        )));
    }
    let (b, c) = (b % a, c % a);
    if (b + c) % a != 1 {
        return Err(Error::Precondition(format!("{b} + {c} is not 1 mod {a}")));
    }
    for r in 0..a {
        let left = (1 + b * r) % a;
        for s in 0..a {
            if (left * ((1 + c * s) % a)).is_multiple_of(a) {
                return Ok((r, s));
            }
        }
    }
    Err(Error::SearchExhausted(format!(
        "no PM witness for a = {a}, b = {b}, c = {c}"
    )))
}

/// Runs [`pm_witness`] on every `b + c ≡ 1` pair for each modulus in
/// `2..=max_a`, verifying each product. Returns the number of pairs.
pub fn pm_witness_sweep(exec: Execution, max_a: u64) -> Result<u64> {
    let moduli: Vec<u64> = (2..=max_a).collect();
    let counts = map_indexed(exec, moduli.len(), |i| -> Result<u64> {
        let a = moduli[i];
        for b in 0..a {
            let c = (a + 1 - b) % a;
            let (r, s) = pm_witness(a, b, c)?;
            if !((1 + b * r) % a * ((1 + c * s) % a)).is_multiple_of(a) {
                return Err(Error::Verification(format!(
                    "PM product nonzero for a = {a}, b = {b}"
                )));
            }
        }
        Ok(a)
    });
    counts.into_iter().sum()
}

/// `a = e + unit` with `e² − e` in the Jacobson radical.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FecklyCleanWitness<E> {
    pub e: E,
    pub unit: E,
}

/// Lifts of the idempotents of `Z/6`, tried in this order.
pub const IDEMPOTENT_LIFTS: [i64; 4] = [0, 1, 3, 4];

pub fn feckly_clean_decompose(a: &BigRational) -> Result<FecklyCleanWitness<BigRational>> {
    let l = LocalizedIntegers;
    for k in IDEMPOTENT_LIFTS {
        let e = l.from_i64(k);
        let unit = l.sub(a, &e);
        if l.is_unit(&unit) {
            let defect = l.sub(&l.mul(&e, &e), &e);
            if !l.jacobson_membership(&defect) {
                return Err(Error::Verification(format!("{k}² − {k} is outside J")));
            }
            return Ok(FecklyCleanWitness { e, unit });
        }
    }
    Err(Error::SearchExhausted(format!(
        "no idempotent lift works for {}",
        l.format_elem(a)
    )))
}

/// Whether `RaR = R` forces `a` to be a unit.
pub fn lam_check<R: Ring>(ring: &R, a: &R::Elem) -> bool {
    !ring.generates_unit_ideal(a) || ring.is_unit(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{ModularIntegers, PolyOverPrimeField, Quaternion, RationalQuaternions};

    fn z(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn stable_range_small_moduli() {
        let c = stable_range_one(6).unwrap();
        assert!(c.verdict);
        let t = c.table.as_ref().unwrap();
        assert_eq!(t.witness(2, 5), Some(1));
        assert_eq!(t.witness(2, 4), None);
        assert!(stable_range_one(2).unwrap().verdict);
        let c = stable_range_one(12).unwrap();
        let y = c.table.unwrap().witness(3, 4).unwrap();
        assert!(arith::gcd_u64((3 + 4 * y) % 12, 12) == 1);
    }

    #[test]
    fn stable_range_budget() {
        assert!(matches!(stable_range_one(1), Err(Error::Precondition(_))));
        assert!(matches!(
            stable_range_one(10_001),
            Err(Error::BudgetExceeded(_))
        ));
        let c = stable_range_one(2048).unwrap();
        assert!(c.verdict && c.table.is_none());
    }

    #[test]
    fn stable_range_modes_agree() {
        let seq = stable_range_sweep(Execution::Sequential, 2, 40).unwrap();
        let par = stable_range_sweep(Execution::Parallel, 2, 40).unwrap();
        assert_eq!(seq, par);
        assert!(seq.iter().all(|c| c.verdict));
    }

    fn split(a: i64, b: i64) -> (BigInt, BigInt) {
        let s = adequate_split(&Integers, &z(a), &z(b)).unwrap();
        (s.r, s.s)
    }

    #[test]
    fn adequate_splits() {
        assert_eq!(split(12, 2), (z(3), z(4)));
        assert_eq!(split(7, 10), (z(7), z(1)));
        assert_eq!(split(36, 6), (z(1), z(36)));
        assert!(adequate_split(&Integers, &z(0), &z(3)).is_err());
        let s = adequate_split(&Integers, &z(360), &z(10)).unwrap();
        assert!(prime_audit(&s, &z(10)).iter().all(|(_, g)| g > &z(1)));
    }

    #[test]
    fn adequate_split_over_polynomials() {
        let f = PolyOverPrimeField::new(3).unwrap();
        let a = f.mul(&f.poly(&[0, 0, 1]), &f.poly(&[1, 1]));
        let s = adequate_split(&f, &a, &f.poly(&[0, 1])).unwrap();
        assert_eq!(s.s, f.poly(&[0, 0, 1]));
        assert_eq!(f.mul(&s.r, &s.s), a);
    }

    #[test]
    fn pm_splits() {
        let s = pm_split(&Integers, &z(12), &z(5), &z(2)).unwrap();
        assert_eq!((s.r, s.s), (z(4), z(3)));
        let s = pm_split(&Integers, &z(30), &z(7), &z(6)).unwrap();
        assert_eq!((s.r, s.s), (z(6), z(5)));
        let s = pm_split(&Integers, &z(1), &z(9), &z(4)).unwrap();
        assert_eq!((s.r, s.s), (z(1), z(1)));
        assert!(pm_split(&Integers, &z(12), &z(4), &z(2)).is_err());
    }

    #[test]
    fn pm_witnesses() {
        assert_eq!(pm_witness(6, 3, 4), Ok((1, 2)));
        assert_eq!(pm_witness(2, 0, 1), Ok((0, 1)));
        let (r, s) = pm_witness(12, 4, 9).unwrap();
        assert_eq!((1 + 4 * r) * (1 + 9 * s) % 12, 0);
        assert!(pm_witness(6, 3, 3).is_err());
        assert_eq!(
            pm_witness_sweep(Execution::Sequential, 20),
            pm_witness_sweep(Execution::Parallel, 20)
        );
    }

    #[test]
    fn feckly_clean() {
        let l = LocalizedIntegers;
        let w = feckly_clean_decompose(&l.zero()).unwrap();
        assert_eq!((w.e, w.unit), (l.one(), l.from_i64(-1)));
        let w = feckly_clean_decompose(&l.from_i64(3)).unwrap();
        assert_eq!((w.e, w.unit), (l.from_i64(4), l.from_i64(-1)));
        let w = feckly_clean_decompose(&l.fraction(5, 7).unwrap()).unwrap();
        assert_eq!(w.e, l.zero());
    }

    #[test]
    fn lam() {
        assert!(lam_check(&Integers, &z(2)));
        assert!(lam_check(&RationalQuaternions, &Quaternion::j()));
        assert!(lam_check(&ModularIntegers::new(6).unwrap(), &5));
    }
}
