//! Triangularization over Bézout instances and unimodular row completion.
//!
//! Every Bézout domain is Hermite: a row `(a, b)` can be brought to
//! `(d, 0)` by an invertible 2×2 column transform. Sweeping that step along
//! each pivot row makes a matrix lower triangular.

use crate::error::{Error, Result};
use crate::matrices::{ElementaryOp, Matrix, OpTranscript};
use crate::rings::{BezoutRing, Ring};

/// An invertible 2×2 transform (row-major) with its inverse and the
/// generator it produces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GcdBlock<E> {
    pub d: E,
    pub block: [E; 4],
    pub inverse: [E; 4],
}

impl<E: Clone + PartialEq> GcdBlock<E> {
    pub fn is_identity<R: crate::rings::Ring<Elem = E>>(&self, ring: &R) -> bool {
        self.block == [ring.one(), ring.zero(), ring.zero(), ring.one()]
    }

    fn transposed(self) -> Self {
        let t = |[a, b, c, d]: [E; 4]| [a, c, b, d];
        GcdBlock {
            d: self.d,
            block: t(self.block),
            inverse: t(self.inverse),
        }
    }
}

fn identity_block<R: Ring>(ring: &R, d: R::Elem) -> GcdBlock<R::Elem> {
    let id = [ring.one(), ring.zero(), ring.zero(), ring.one()];
    GcdBlock {
        d,
        block: id.clone(),
        inverse: id,
    }
}

/// Column transform `Q` with `(a, b)·Q = (d, 0)` and `d` the canonical
/// generator of `aR + bR`.
pub fn row_gcd_step<R: BezoutRing>(ring: &R, a: &R::Elem, b: &R::Elem) -> GcdBlock<R::Elem> {
    let (zero, one) = (ring.zero(), ring.one());
    if !ring.is_commutative() {
        // Division ring: any nonzero entry is promoted to 1.
        if let Some(a_inv) = ring.inverse(a) {
            let k = ring.mul(&a_inv, b);
            return GcdBlock {
                d: one.clone(),
                block: [a_inv, ring.neg(&k), zero.clone(), one.clone()],
                inverse: [a.clone(), b.clone(), zero, one],
            };
        }
        if let Some(b_inv) = ring.inverse(b) {
            return GcdBlock {
                d: one.clone(),
                block: [zero.clone(), one.clone(), b_inv, zero.clone()],
                inverse: [zero, b.clone(), one, ring.zero()],
            };
        }
        return identity_block(ring, zero);
    }

    if ring.is_zero(a) && ring.is_zero(b) {
        return identity_block(ring, zero);
    }
    if !ring.is_zero(a) {
        if let Ok(k) = ring.try_divide(b, a) {
            // a | b: eliminate without changing the ideal, then normalize.
            let (u, d) = ring.canonical_associate(a);
            let u_inv = ring.inverse(&u).expect("associate factor is a unit");
            return GcdBlock {
                d,
                block: [u_inv, ring.neg(&k), zero.clone(), one.clone()],
                inverse: [u.clone(), ring.mul(&u, &k), zero, one],
            };
        }
    }
    let (g, q) = ring.bezout_block(a, b);
    let inverse = [q[3].clone(), ring.neg(&q[1]), ring.neg(&q[2]), q[0].clone()];
    let (u, d) = ring.canonical_associate(&g);
    if ring.is_one(&u) {
        return GcdBlock {
            d,
            block: q,
            inverse,
        };
    }
    let u_inv = ring.inverse(&u).expect("associate factor is a unit");
    let [q0, q1, q2, q3] = q;
    let [i0, i1, i2, i3] = inverse;
    GcdBlock {
        d,
        block: [ring.mul(&q0, &u_inv), q1, ring.mul(&q2, &u_inv), q3],
        inverse: [ring.mul(&u, &i0), ring.mul(&u, &i1), i2, i3],
    }
}

/// Row transform `P` with `P·(a; b) = (d; 0)`.
pub fn column_gcd_step<R: BezoutRing>(ring: &R, a: &R::Elem, b: &R::Elem) -> GcdBlock<R::Elem> {
    if ring.is_commutative() {
        return row_gcd_step(ring, a, b).transposed();
    }
    let (zero, one) = (ring.zero(), ring.one());
    if let Some(a_inv) = ring.inverse(a) {
        let k = ring.mul(b, &a_inv);
        return GcdBlock {
            d: one.clone(),
            block: [a_inv, zero.clone(), ring.neg(&k), one.clone()],
            inverse: [a.clone(), zero, b.clone(), one],
        };
    }
    if let Some(b_inv) = ring.inverse(b) {
        return GcdBlock {
            d: one.clone(),
            block: [zero.clone(), b_inv, one.clone(), zero.clone()],
            inverse: [zero, one, b.clone(), ring.zero()],
        };
    }
    identity_block(ring, zero)
}

/// An invertible 2×2 matrix with prescribed first row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Completion<R: Ring> {
    pub u: Matrix<R>,
    pub u_inv: Matrix<R>,
}

impl<R: Ring> Completion<R> {
    pub fn block(&self) -> [R::Elem; 4] {
        let e = self.u.entries();
        [e[0].clone(), e[1].clone(), e[2].clone(), e[3].clone()]
    }

    pub fn inverse_block(&self) -> [R::Elem; 4] {
        let e = self.u_inv.entries();
        [e[0].clone(), e[1].clone(), e[2].clone(), e[3].clone()]
    }
}

/// Completes a unimodular row `(p, q)` to an invertible matrix
/// `[[p, q], [*, *]]`.
pub fn unimodular_completion<R: BezoutRing>(
    ring: &R,
    p: &R::Elem,
    q: &R::Elem,
) -> Result<Completion<R>> {
    let (zero, one) = (ring.zero(), ring.one());
    let (u, u_inv) = if ring.is_commutative() {
        let w = ring.extended_gcd(p, q);
        let unit_inv = ring.inverse(&w.d).ok_or(Error::NotComaximal)?;
        let x = ring.mul(&w.x, &unit_inv);
        let y = ring.mul(&w.y, &unit_inv);
        (
            vec![p.clone(), q.clone(), ring.neg(&y), x.clone()],
            vec![x, ring.neg(q), y, p.clone()],
        )
    } else if let Some(p_inv) = ring.inverse(p) {
        let k = ring.mul(&p_inv, q);
        (
            vec![p.clone(), q.clone(), zero.clone(), one.clone()],
            vec![p_inv, ring.neg(&k), zero, one],
        )
    } else if let Some(q_inv) = ring.inverse(q) {
        (
            vec![zero.clone(), q.clone(), one.clone(), zero.clone()],
            vec![zero.clone(), one, q_inv, zero],
        )
    } else {
        return Err(Error::NotComaximal);
    };
    Ok(Completion {
        u: Matrix::new(ring.clone(), 2, 2, u)?,
        u_inv: Matrix::new(ring.clone(), 2, 2, u_inv)?,
    })
}

/// `T = A·Q` lower triangular, with the column operations that produced it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HermiteForm<R: Ring> {
    pub transcript: OpTranscript<R::Elem>,
    pub t: Matrix<R>,
}

/// Clears every entry above the main diagonal, pivot row by pivot row,
/// using [`row_gcd_step`] on column pairs; pivots end up canonical.
pub fn hermite_triangularize<R: BezoutRing>(a: &Matrix<R>) -> Result<HermiteForm<R>> {
    let ring = a.ring().clone();
    let mut t = a.clone();
    let mut transcript = OpTranscript::new();
    for i in 0..a.rows().min(a.cols()) {
        for j in i + 1..a.cols() {
            if ring.is_zero(t.get(i, j)) {
                continue;
            }
            let step = row_gcd_step(&ring, t.get(i, i), t.get(i, j));
            let op = ElementaryOp::ColBlock {
                first: i,
                second: j,
                block: step.block,
                inverse: step.inverse,
            };
            t.apply_in_place(&op)?;
            transcript.push(op);
        }
        normalize_col_pivot(&ring, &mut t, &mut transcript, i)?;
    }
    Ok(HermiteForm { transcript, t })
}

pub(crate) fn normalize_col_pivot<R: Ring>(
    ring: &R,
    t: &mut Matrix<R>,
    transcript: &mut OpTranscript<R::Elem>,
    i: usize,
) -> Result<()> {
    let (u, _) = ring.canonical_associate(t.get(i, i));
    if ring.is_one(&u) {
        return Ok(());
    }
    let unit = ring.inverse(&u).expect("associate factor is a unit");
    let op = ElementaryOp::ScaleColRight { col: i, unit };
    t.apply_in_place(&op)?;
    transcript.push(op);
    Ok(())
}
