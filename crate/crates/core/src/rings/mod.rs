//! Exact ring arithmetic over the five concrete Bézout instances.
//!
//! Every instance implements [`Ring`] (exact arithmetic, units, right
//! division, canonical associates) and [`BezoutRing`] (extended gcd with a
//! witness). Instances with a Euclidean size also implement
//! [`EuclideanRing`], used by the pivot-growth reduction loop.

pub mod arith;
mod descriptor;
mod integers;
mod localized;
mod modular;
mod poly;
mod quaternion;

pub use descriptor::{RingDescriptor, RingElement, RingVisitor};
pub use integers::Integers;
pub use localized::LocalizedIntegers;
pub use modular::ModularIntegers;
pub use poly::{Poly, PolyOverPrimeField};
pub use quaternion::{Quaternion, RationalQuaternions};

use std::fmt::Debug;

use num_bigint::{BigInt, BigUint};
use rand::Rng as RandRng;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("ring descriptor mismatch: {0} vs {1}")]
    DescriptorMismatch(RingDescriptor, RingDescriptor),
    #[error("element is not divisible")]
    NotDivisible,
    #[error("division by zero")]
    DivisionByZero,
    #[error("element is not a unit")]
    NotAUnit,
    #[error("every maximal ideal contains zero")]
    ZeroHasFullSpectrum,
    #[error("operation not supported over {0}")]
    Unsupported(RingDescriptor),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
    #[error("invalid ring parameter: {0}")]
    InvalidParameter(String),
}

impl RingError {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        RingError::Parse {
            input: input.to_string(),
            reason: reason.into(),
        }
    }
}

/// An associative ring with identity and exactly representable elements.
///
/// Multiplication is never assumed commutative; row operations multiply on
/// the left and column operations on the right.
pub trait Ring: Clone + Debug + Send + Sync {
    type Elem: Clone + PartialEq + Eq + Debug + Send + Sync;

    fn descriptor(&self) -> RingDescriptor;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn from_i64(&self, n: i64) -> Self::Elem;

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn is_one(&self, a: &Self::Elem) -> bool {
        *a == self.one()
    }

    fn is_commutative(&self) -> bool {
        true
    }

    /// No nonzero zero divisors.
    fn is_domain(&self) -> bool {
        true
    }

    /// Two-sided inverse, if `a` is a unit.
    fn inverse(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn is_unit(&self, a: &Self::Elem) -> bool {
        self.inverse(a).is_some()
    }

    /// Right division: returns `c` with `a = b·c`.
    fn try_divide(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, RingError>;

    fn divides(&self, b: &Self::Elem, a: &Self::Elem) -> bool {
        if self.is_zero(b) {
            return self.is_zero(a);
        }
        self.try_divide(a, b).is_ok()
    }

    /// Splits `a = u·c` with `u` a unit and `c` the canonical representative
    /// of the associate class of `a`.
    fn canonical_associate(&self, a: &Self::Elem) -> (Self::Elem, Self::Elem);

    fn canonical(&self, a: &Self::Elem) -> Self::Elem {
        self.canonical_associate(a).1
    }

    fn associates(&self, a: &Self::Elem, b: &Self::Elem) -> bool {
        self.canonical(a) == self.canonical(b)
    }

    fn jacobson_membership(&self, a: &Self::Elem) -> bool;

    /// Whether the two-sided ideal `RaR` is the whole ring.
    fn generates_unit_ideal(&self, a: &Self::Elem) -> bool {
        self.is_unit(a)
    }

    fn parse_elem(&self, s: &str) -> Result<Self::Elem, RingError>;
    fn format_elem(&self, a: &Self::Elem) -> String;

    /// Draws a random element whose size is controlled by `scale`.
    fn sample<G: RandRng + ?Sized>(&self, rng: &mut G, scale: u32) -> Self::Elem;

    fn sum<'a, I>(&self, items: I) -> Self::Elem
    where
        I: IntoIterator<Item = &'a Self::Elem>,
        Self::Elem: 'a,
    {
        items
            .into_iter()
            .fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    fn mul3(&self, a: &Self::Elem, b: &Self::Elem, c: &Self::Elem) -> Self::Elem {
        self.mul(&self.mul(a, b), c)
    }
}

/// Certificate for a principal generator of `aR + bR`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BezoutWitness<E> {
    pub d: E,
    pub x: E,
    pub y: E,
}

pub trait BezoutRing: Ring {
    /// `d = a·x + b·y` with `d | a`, `d | b` and `d` canonical.
    fn extended_gcd(&self, a: &Self::Elem, b: &Self::Elem) -> BezoutWitness<Self::Elem>;

    fn gcd(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.extended_gcd(a, b).d
    }

    /// A determinant-one matrix `[[q00, q01], [q10, q11]]` (row-major) with
    /// `(a, b)·Q = (g, 0)` for a generator `g` of `aR + bR`, together with
    /// `g`. Only meaningful for commutative instances.
    fn bezout_block(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, [Self::Elem; 4]) {
        let w = self.extended_gcd(a, b);
        if self.is_zero(&w.d) {
            return (w.d, [self.one(), self.zero(), self.zero(), self.one()]);
        }
        let a1 = self.try_divide(a, &w.d).expect("gcd divides a");
        let b1 = self.try_divide(b, &w.d).expect("gcd divides b");
        (w.d, [w.x, self.neg(&b1), w.y, a1])
    }

    /// A complete residue system modulo the nonzero element `c`, i.e. one
    /// representative of every class of `R/cR`. `None` when it is infinite
    /// or not enumerable.
    fn residues(&self, c: &Self::Elem) -> Option<Box<dyn Iterator<Item = Self::Elem> + '_>>;

    /// Some `p` with `p·a + b` comaximal to the nonzero `c`, given that
    /// `a, b, c` generate the unit ideal. Such a `p` avoids one residue class
    /// per maximal ideal over `c`, so a full residue system modulo `c`
    /// always contains one.
    fn comaximal_shift(
        &self,
        a: &Self::Elem,
        b: &Self::Elem,
        c: &Self::Elem,
    ) -> Option<Self::Elem> {
        residue_search(self, a, b, c, usize::MAX)
    }
}

/// Scans at most `budget` residues modulo `c` for a `p` making `p·a + b`
/// comaximal to `c`.
pub fn residue_search<R: BezoutRing + ?Sized>(
    ring: &R,
    a: &R::Elem,
    b: &R::Elem,
    c: &R::Elem,
    budget: usize,
) -> Option<R::Elem> {
    ring.residues(c)?.take(budget).find(|p| {
        let e = ring.add(&ring.mul(p, a), b);
        ring.is_unit(&ring.gcd(&e, c))
    })
}

/// Bézout instances with a size that strictly drops under division with remainder.
pub trait EuclideanRing: BezoutRing {
    /// Size of a nonzero element.
    fn size(&self, a: &Self::Elem) -> BigUint;

    /// `a = b·q + r` with `r = 0` or `size(r) < size(b)`.
    fn div_rem(&self, a: &Self::Elem, b: &Self::Elem) -> (Self::Elem, Self::Elem);
}

/// Enumeration of the maximal ideals containing an element.
pub trait MaximalSpectrum: Ring {
    /// Generators of the maximal ideals containing `a`, sorted ascending.
    fn mspec(&self, a: &Self::Elem) -> Result<Vec<BigInt>, RingError>;
}
