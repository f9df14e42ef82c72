//! Diagonal reduction with a divisibility chain.
//!
//! [`diagonal_reduce`] triangularizes with column gcd blocks, clears the
//! remaining off-diagonal entries pivot by pivot, then merges the diagonal
//! into a chain `d0 | d1 | ...` with zeros last. Over commutative domains a
//! pair `diag(a, c)` with `a ∤ c` is repaired through [`kaplansky_step`]
//! applied to the coupled block `[[a, 0], [a, c]]`.

mod jacobson;
mod kaplansky;
mod pivot_loop;

pub use jacobson::{lift_op, reduce_mod_jacobson};
pub use kaplansky::{kaplansky_step, KaplanskyWitness};
pub use pivot_loop::mspec_pivot_loop;

use crate::error::{Error, Result};
use crate::hermite::{column_gcd_step, hermite_triangularize, row_gcd_step, unimodular_completion};
use crate::matrices::{realize, ElementaryOp, Matrix, OpTranscript};
use crate::rings::{BezoutRing, Ring};

/// `D = P·A·Q` with explicit inverses and the transcript that built them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionResult<R: Ring> {
    pub p: Matrix<R>,
    pub p_inv: Matrix<R>,
    pub q: Matrix<R>,
    pub q_inv: Matrix<R>,
    pub d: Matrix<R>,
    /// Diagonal of `d`, each entry dividing the next.
    pub chain: Vec<R::Elem>,
    pub transcript: OpTranscript<R::Elem>,
    /// Successive pivots of the pivot-growth loop, each generating a
    /// strictly larger ideal. Empty for the other algorithms.
    pub pivot_chain: Vec<R::Elem>,
}

impl<R: Ring> ReductionResult<R> {
    /// Builds the result by realizing `transcript` and checking it against `a`.
    pub fn from_transcript(a: &Matrix<R>, transcript: OpTranscript<R::Elem>) -> Result<Self> {
        let ring = a.ring();
        let realized = realize(ring, &transcript, a.rows(), a.cols())?;
        let d = realized.p.mul(a)?.mul(&realized.q)?;
        let out = ReductionResult {
            chain: d.diagonal(),
            p: realized.p,
            p_inv: realized.p_inv,
            q: realized.q,
            q_inv: realized.q_inv,
            d,
            transcript,
            pivot_chain: Vec::new(),
        };
        out.verify(a)?;
        Ok(out)
    }

    /// Checks every invariant exactly against the input matrix.
    pub fn verify(&self, a: &Matrix<R>) -> Result<()> {
        let ring = a.ring();
        let fail = |m: &str| Err(Error::Verification(m.to_string()));
        if self.p.mul(a)?.mul(&self.q)? != self.d {
            return fail("P·A·Q differs from D");
        }
        if self.transcript.replay(a)? != self.d {
            return fail("transcript replay differs from D");
        }
        for (m, inv) in [(&self.p, &self.p_inv), (&self.q, &self.q_inv)] {
            if !m.mul(inv)?.is_identity() || !inv.mul(m)?.is_identity() {
                return fail("transform and inverse do not multiply to I");
            }
        }
        if !self.d.is_diagonal() {
            return fail("D is not diagonal");
        }
        if self.chain != self.d.diagonal() {
            return fail("chain differs from the diagonal of D");
        }
        for w in self.chain.windows(2) {
            if !ring.divides(&w[0], &w[1]) {
                return fail("chain entry does not divide its successor");
            }
            if ring.is_zero(&w[0]) && !ring.is_zero(&w[1]) {
                return fail("zero before a nonzero chain entry");
            }
        }
        if self.chain.iter().any(|c| ring.canonical(c) != *c) {
            return fail("chain entry is not canonical");
        }
        Ok(())
    }
}

fn push<R: Ring>(
    m: &mut Matrix<R>,
    transcript: &mut OpTranscript<R::Elem>,
    op: ElementaryOp<R::Elem>,
) -> Result<()> {
    m.apply_in_place(&op)?;
    transcript.push(op);
    Ok(())
}

/// Clears everything off the diagonal; zero pivots only appear once the
/// remaining submatrix vanishes, so zeros trail.
fn clear_off_diagonal<R: BezoutRing>(
    m: &mut Matrix<R>,
    tr: &mut OpTranscript<R::Elem>,
) -> Result<()> {
    let ring = m.ring().clone();
    let (rows, cols) = (m.rows(), m.cols());
    for t in 0..rows.min(cols) {
        if ring.is_zero(m.get(t, t)) {
            let found = (t..rows)
                .flat_map(|i| (t..cols).map(move |j| (i, j)))
                .find(|&(i, j)| !ring.is_zero(m.get(i, j)));
            let Some((i, j)) = found else { break };
            if i != t {
                push(m, tr, ElementaryOp::SwapRows(t, i))?;
            }
            if j != t {
                push(m, tr, ElementaryOp::SwapCols(t, j))?;
            }
        }
        loop {
            for j in t + 1..cols {
                if ring.is_zero(m.get(t, j)) {
                    continue;
                }
                let step = row_gcd_step(&ring, m.get(t, t), m.get(t, j));
                push(
                    m,
                    tr,
                    ElementaryOp::ColBlock {
                        first: t,
                        second: j,
                        block: step.block,
                        inverse: step.inverse,
                    },
                )?;
            }
            for i in t + 1..rows {
                if ring.is_zero(m.get(i, t)) {
                    continue;
                }
                let step = column_gcd_step(&ring, m.get(t, t), m.get(i, t));
                push(
                    m,
                    tr,
                    ElementaryOp::RowBlock {
                        first: t,
                        second: i,
                        block: step.block,
                        inverse: step.inverse,
                    },
                )?;
            }
            if (t + 1..cols).all(|j| ring.is_zero(m.get(t, j))) {
                break;
            }
        }
    }
    Ok(())
}

/// `diag(a, c) → diag(gcd, *)` on positions `i < j` via the coupled block
/// `[[a, 0], [a, c]]` and a unimodular row `(p, q)` from [`kaplansky_step`].
fn kaplansky_fix<R: BezoutRing>(
    m: &mut Matrix<R>,
    tr: &mut OpTranscript<R::Elem>,
    i: usize,
    j: usize,
) -> Result<()> {
    let ring = m.ring().clone();
    let (a, c) = (m.get(i, i).clone(), m.get(j, j).clone());
    let g = ring.gcd(&a, &c);
    let a1 = ring.try_divide(&a, &g)?;
    let c1 = ring.try_divide(&c, &g)?;
    let w = kaplansky_step(&ring, &a1, &a1, &c1)?;
    let completion = unimodular_completion(&ring, &w.p, &w.q)?;

    let mut scratch = m.clone();
    let mut local = OpTranscript::new();
    push(
        &mut scratch,
        &mut local,
        ElementaryOp::AddLeftMultiple {
            target: j,
            source: i,
            factor: ring.one(),
        },
    )?;
    push(
        &mut scratch,
        &mut local,
        ElementaryOp::RowBlock {
            first: i,
            second: j,
            block: completion.block(),
            inverse: completion.inverse_block(),
        },
    )?;
    let step = row_gcd_step(&ring, scratch.get(i, i), scratch.get(i, j));
    push(
        &mut scratch,
        &mut local,
        ElementaryOp::ColBlock {
            first: i,
            second: j,
            block: step.block,
            inverse: step.inverse,
        },
    )?;
    let factor = ring.try_divide(scratch.get(j, i), scratch.get(i, i))?;
    push(
        &mut scratch,
        &mut local,
        ElementaryOp::AddLeftMultiple {
            target: j,
            source: i,
            factor: ring.neg(&factor),
        },
    )?;
    *m = scratch;
    tr.extend(local);
    Ok(())
}

/// The same repair without a domain: `[[a, c], [0, c]]`, gcd block on the
/// top row, then clear below. Valid over any commutative Bézout ring.
fn gcd_fix<R: BezoutRing>(
    m: &mut Matrix<R>,
    tr: &mut OpTranscript<R::Elem>,
    i: usize,
    j: usize,
) -> Result<()> {
    let ring = m.ring().clone();
    push(
        m,
        tr,
        ElementaryOp::AddLeftMultiple {
            target: i,
            source: j,
            factor: ring.one(),
        },
    )?;
    let step = row_gcd_step(&ring, m.get(i, i), m.get(i, j));
    push(
        m,
        tr,
        ElementaryOp::ColBlock {
            first: i,
            second: j,
            block: step.block,
            inverse: step.inverse,
        },
    )?;
    if !ring.is_zero(m.get(j, i)) {
        let factor = ring.try_divide(m.get(j, i), m.get(i, i))?;
        push(
            m,
            tr,
            ElementaryOp::AddLeftMultiple {
                target: j,
                source: i,
                factor: ring.neg(&factor),
            },
        )?;
    }
    Ok(())
}

fn fix_chain<R: BezoutRing>(m: &mut Matrix<R>, tr: &mut OpTranscript<R::Elem>) -> Result<()> {
    let ring = m.ring().clone();
    let k = m.diagonal().iter().take_while(|d| !ring.is_zero(d)).count();
    for i in 0..k {
        for j in i + 1..k {
            if ring.divides(m.get(i, i), m.get(j, j)) {
                continue;
            }
            let kaplansky = ring.is_commutative() && ring.is_domain();
            if !kaplansky || kaplansky_fix(m, tr, i, j).is_err() {
                gcd_fix(m, tr, i, j)?;
            }
        }
    }
    Ok(())
}

pub(crate) fn canonicalize_diagonal<R: Ring>(
    m: &mut Matrix<R>,
    tr: &mut OpTranscript<R::Elem>,
) -> Result<()> {
    let ring = m.ring().clone();
    for i in 0..m.rows().min(m.cols()) {
        let (u, _) = ring.canonical_associate(m.get(i, i));
        if ring.is_one(&u) {
            continue;
        }
        let unit = ring.inverse(&u).expect("associate factor is a unit");
        push(m, tr, ElementaryOp::ScaleRowLeft { row: i, unit })?;
    }
    Ok(())
}

/// Reduces `A` to `D = P·A·Q`, diagonal with canonical entries forming a
/// divisibility chain and zeros last.
pub fn diagonal_reduce<R: BezoutRing>(a: &Matrix<R>) -> Result<ReductionResult<R>> {
    let h = hermite_triangularize(a)?;
    let mut m = h.t;
    let mut tr = h.transcript;
    clear_off_diagonal(&mut m, &mut tr)?;
    fix_chain(&mut m, &mut tr)?;
    canonicalize_diagonal(&mut m, &mut tr)?;
    ReductionResult::from_transcript(a, tr)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{
        Integers, LocalizedIntegers, ModularIntegers, PolyOverPrimeField, Quaternion,
        RationalQuaternions,
    };
    use num_bigint::BigInt;

    fn z(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn two_by_two_integer_chain() {
        let a = Matrix::from_i64(Integers, &[&[2, 4], &[6, 8]]).unwrap();
        let r = diagonal_reduce(&a).unwrap();
        assert_eq!(r.chain, vec![z(2), z(4)]);
    }

    #[test]
    fn identity_and_zero() {
        let a = Matrix::identity(Integers, 2);
        let r = diagonal_reduce(&a).unwrap();
        assert_eq!(r.chain, vec![z(1), z(1)]);
        assert!(r.p.is_identity() && r.q.is_identity());
        let r = diagonal_reduce(&Matrix::zeros(Integers, 2, 2)).unwrap();
        assert_eq!(r.chain, vec![z(0), z(0)]);
    }

    #[test]
    fn coprime_diagonal_needs_fix_up() {
        let a = Matrix::from_i64(Integers, &[&[2, 0], &[0, 3]]).unwrap();
        let r = diagonal_reduce(&a).unwrap();
        assert_eq!(r.chain, vec![z(1), z(6)]);
        let a = Matrix::from_i64(Integers, &[&[4, 0, 0], &[0, 6, 0], &[0, 0, 0]]).unwrap();
        assert_eq!(diagonal_reduce(&a).unwrap().chain, vec![z(2), z(12), z(0)]);
    }

    #[test]
    fn reduced_input_is_a_fixed_point() {
        let d = Matrix::from_i64(Integers, &[&[1, 0, 0], &[0, 6, 0], &[0, 0, 0]]).unwrap();
        let r = diagonal_reduce(&d).unwrap();
        assert!(r.transcript.is_empty());
        assert_eq!(r.d, d);
    }

    #[test]
    fn polynomial_chain() {
        let f = PolyOverPrimeField::new(5).unwrap();
        let x = |k| f.monomial(1, k);
        let a = Matrix::from_rows(f, vec![vec![x(1), x(2)], vec![f.zero(), x(3)]]).unwrap();
        let r = diagonal_reduce(&a).unwrap();
        assert_eq!(r.chain, vec![x(1), x(3)]);
    }

    #[test]
    fn localized_and_modular() {
        let l = LocalizedIntegers;
        let a = Matrix::from_i64(l, &[&[2, 0], &[0, 3]]).unwrap();
        assert_eq!(
            diagonal_reduce(&a).unwrap().chain,
            vec![l.one(), l.from_i64(6)]
        );
        let m = ModularIntegers::new(12).unwrap();
        let a = Matrix::from_i64(m, &[&[4, 0], &[0, 3]]).unwrap();
        assert_eq!(diagonal_reduce(&a).unwrap().chain, vec![1, 0]);
        let a = Matrix::from_i64(m, &[&[8, 2], &[6, 9]]).unwrap();
        let r = diagonal_reduce(&a).unwrap();
        assert!(r.verify(&a).is_ok());
    }

    #[test]
    fn quaternion_pivots_become_one() {
        let h = RationalQuaternions;
        let a = Matrix::from_rows(
            h,
            vec![vec![Quaternion::j(), h.zero()], vec![h.zero(), h.zero()]],
        )
        .unwrap();
        assert_eq!(diagonal_reduce(&a).unwrap().chain, vec![h.one(), h.zero()]);
        let a = Matrix::from_rows(
            h,
            vec![
                vec![Quaternion::i(), Quaternion::j()],
                vec![Quaternion::k(), Quaternion::from_ints(1, 1, 0, 0)],
            ],
        )
        .unwrap();
        let r = diagonal_reduce(&a).unwrap();
        assert_eq!(r.chain[0], h.one());
    }

    #[test]
    fn degenerate_shapes() {
        let a = Matrix::from_i64(Integers, &[&[6, 4, 10]]).unwrap();
        assert_eq!(diagonal_reduce(&a).unwrap().chain, vec![z(2)]);
        let a = Matrix::from_i64(Integers, &[&[6], &[-9]]).unwrap();
        assert_eq!(diagonal_reduce(&a).unwrap().chain, vec![z(3)]);
        let a = Matrix::zeros(Integers, 0, 3);
        assert!(diagonal_reduce(&a).unwrap().chain.is_empty());
    }
}
