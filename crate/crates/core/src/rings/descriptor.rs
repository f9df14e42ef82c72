//! Runtime selection of a ring instance and dynamically typed elements.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::{
    arith, BezoutRing, Integers, LocalizedIntegers, ModularIntegers, Poly, PolyOverPrimeField,
    Quaternion, RationalQuaternions, Ring, RingError,
};

/// Names one of the five ring instances. Text form: `int`, `poly:p`,
/// `zloc23`, `mod:n`, `quat`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingDescriptor {
    Integers,
    PolyOverPrimeField(u64),
    LocalizedIntegers,
    ModularIntegers(u64),
    RationalQuaternions,
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Integers => write!(f, "int"),
            RingDescriptor::PolyOverPrimeField(p) => write!(f, "poly:{p}"),
            RingDescriptor::LocalizedIntegers => write!(f, "zloc23"),
            RingDescriptor::ModularIntegers(n) => write!(f, "mod:{n}"),
            RingDescriptor::RationalQuaternions => write!(f, "quat"),
        }
    }
}

impl FromStr for RingDescriptor {
    type Err = RingError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let param = |rest: &str| {
            rest.parse::<u64>()
                .map_err(|_| RingError::parse(s, "bad ring parameter"))
        };
        let desc = match s {
            "int" => RingDescriptor::Integers,
            "zloc23" => RingDescriptor::LocalizedIntegers,
            "quat" => RingDescriptor::RationalQuaternions,
            _ => {
                if let Some(rest) = s.strip_prefix("poly:") {
                    RingDescriptor::PolyOverPrimeField(param(rest)?)
                } else if let Some(rest) = s.strip_prefix("mod:") {
                    RingDescriptor::ModularIntegers(param(rest)?)
                } else {
                    return Err(RingError::parse(s, "unknown ring"));
                }
            }
        };
        desc.validate()?;
        Ok(desc)
    }
}

/// Callback invoked with the concrete ring a descriptor names.
pub trait RingVisitor {
    type Output;
    fn visit<R: BezoutRing + 'static>(self, ring: R) -> Self::Output;
}

impl RingDescriptor {
    pub fn validate(&self) -> Result<(), RingError> {
        match *self {
            RingDescriptor::PolyOverPrimeField(p) => PolyOverPrimeField::new(p).map(|_| ()),
            RingDescriptor::ModularIntegers(n) => ModularIntegers::new(n).map(|_| ()),
            _ => Ok(()),
        }
    }

    pub fn visit<V: RingVisitor>(&self, v: V) -> Result<V::Output, RingError> {
        Ok(match *self {
            RingDescriptor::Integers => v.visit(Integers),
            RingDescriptor::PolyOverPrimeField(p) => v.visit(PolyOverPrimeField::new(p)?),
            RingDescriptor::LocalizedIntegers => v.visit(LocalizedIntegers),
            RingDescriptor::ModularIntegers(n) => v.visit(ModularIntegers::new(n)?),
            RingDescriptor::RationalQuaternions => v.visit(RationalQuaternions),
        })
    }

    pub fn is_domain(&self) -> bool {
        match *self {
            RingDescriptor::ModularIntegers(n) => arith::is_prime(n),
            _ => true,
        }
    }
}

/// An element tagged with the instance it belongs to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingElement {
    Integer(BigInt),
    Poly { p: u64, value: Poly },
    Localized(BigRational),
    Modular { n: u64, value: u64 },
    Quaternion(Quaternion),
}

macro_rules! binary {
    ($name:ident) => {
        pub fn $name(&self, other: &RingElement) -> Result<RingElement, RingError> {
            use RingElement::*;
            match (self, other) {
                (Integer(a), Integer(b)) => Ok(Integer(Integers.$name(a, b))),
                (Poly { p, value: a }, Poly { p: q, value: b }) if p == q => Ok(Poly {
                    p: *p,
                    value: PolyOverPrimeField::new(*p)?.$name(a, b),
                }),
                (Localized(a), Localized(b)) => Ok(Localized(LocalizedIntegers.$name(a, b))),
                (Modular { n, value: a }, Modular { n: m, value: b }) if n == m => Ok(Modular {
                    n: *n,
                    value: ModularIntegers::new(*n)?.$name(a, b),
                }),
                (Quaternion(a), Quaternion(b)) => Ok(Quaternion(RationalQuaternions.$name(a, b))),
                _ => Err(RingError::DescriptorMismatch(
                    self.descriptor(),
                    other.descriptor(),
                )),
            }
        }
    };
}

impl RingElement {
    pub fn descriptor(&self) -> RingDescriptor {
        match self {
            RingElement::Integer(_) => RingDescriptor::Integers,
            RingElement::Poly { p, .. } => RingDescriptor::PolyOverPrimeField(*p),
            RingElement::Localized(_) => RingDescriptor::LocalizedIntegers,
            RingElement::Modular { n, .. } => RingDescriptor::ModularIntegers(*n),
            RingElement::Quaternion(_) => RingDescriptor::RationalQuaternions,
        }
    }

    pub fn parse(desc: RingDescriptor, s: &str) -> Result<Self, RingError> {
        Ok(match desc {
            RingDescriptor::Integers => RingElement::Integer(Integers.parse_elem(s)?),
            RingDescriptor::PolyOverPrimeField(p) => RingElement::Poly {
                p,
                value: PolyOverPrimeField::new(p)?.parse_elem(s)?,
            },
            RingDescriptor::LocalizedIntegers => {
                RingElement::Localized(LocalizedIntegers.parse_elem(s)?)
            }
            RingDescriptor::ModularIntegers(n) => RingElement::Modular {
                n,
                value: ModularIntegers::new(n)?.parse_elem(s)?,
            },
            RingDescriptor::RationalQuaternions => {
                RingElement::Quaternion(RationalQuaternions.parse_elem(s)?)
            }
        })
    }

    binary!(add);
    binary!(mul);
    binary!(sub);

    pub fn neg(&self) -> RingElement {
        match self {
            RingElement::Integer(a) => RingElement::Integer(-a),
            RingElement::Poly { p, value } => RingElement::Poly {
                p: *p,
                value: PolyOverPrimeField::new(*p)
                    .expect("validated modulus")
                    .neg(value),
            },
            RingElement::Localized(a) => RingElement::Localized(-a),
            RingElement::Modular { n, value } => RingElement::Modular {
                n: *n,
                value: (n - value % n) % n,
            },
            RingElement::Quaternion(a) => RingElement::Quaternion(RationalQuaternions.neg(a)),
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElement::Integer(a) => write!(f, "{a}"),
            RingElement::Poly { value, .. } => write!(f, "{value}"),
            RingElement::Localized(a) => write!(f, "{}", LocalizedIntegers.format_elem(a)),
            RingElement::Modular { value, .. } => write!(f, "{value}"),
            RingElement::Quaternion(q) => write!(f, "{q}"),
        }
    }
}
