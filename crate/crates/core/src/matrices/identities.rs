//! Explicit 2×2 factorizations into elementary matrices.
//!
//! With `B12(λ) = [[1, λ], [0, 1]]` and `B21(λ) = [[1, 0], [λ, 1]]`,
//!
//! ```text
//! B21(-wt)·B12(s-1)·B21(1)·B12(wt-1) = [[s, swt-1], [1-wts, 2wt-wtswt]]
//! ```
//!
//! which is `[[s, 0], [1-wts, wt]]` exactly when `s·w·t = 1`. The order of
//! products matters over the quaternions.

use crate::rings::Ring;

use super::{realize, ElementaryOp, Matrix, MatrixError, OpTranscript};

fn b12<E>(factor: E) -> ElementaryOp<E> {
    ElementaryOp::AddLeftMultiple {
        target: 0,
        source: 1,
        factor,
    }
}

fn b21<E>(factor: E) -> ElementaryOp<E> {
    ElementaryOp::AddLeftMultiple {
        target: 1,
        source: 0,
        factor,
    }
}

/// The same elementary matrix expressed as a column operation.
fn as_column_op<E: Clone>(op: &ElementaryOp<E>) -> ElementaryOp<E> {
    match op {
        ElementaryOp::AddLeftMultiple {
            target,
            source,
            factor,
        } => ElementaryOp::AddRightMultiple {
            target: *source,
            source: *target,
            factor: factor.clone(),
        },
        other => other.clone(),
    }
}

/// Four elementary factors in written order, their product, and the
/// closed-form matrix the product must equal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ElementaryFactorization<R: Ring> {
    pub factors: [ElementaryOp<R::Elem>; 4],
    pub product: Matrix<R>,
    pub target: Matrix<R>,
}

impl<R: Ring> ElementaryFactorization<R> {
    /// Row operations whose replay on the identity yields `product`.
    pub fn row_transcript(&self) -> OpTranscript<R::Elem> {
        OpTranscript {
            left_ops: self.factors.iter().rev().cloned().collect(),
            right_ops: vec![],
        }
    }

    /// Column operations whose replay on the identity yields `product`.
    pub fn column_transcript(&self) -> OpTranscript<R::Elem> {
        OpTranscript {
            left_ops: vec![],
            right_ops: self.factors.iter().map(as_column_op).collect(),
        }
    }

    pub fn holds(&self) -> bool {
        self.product == self.target
    }
}

fn build<R: Ring>(
    ring: &R,
    s: &R::Elem,
    t: &R::Elem,
    w: &R::Elem,
) -> Result<ElementaryFactorization<R>, MatrixError> {
    let wt = ring.mul(w, t);
    let one = ring.one();
    let factors = [
        b21(ring.neg(&wt)),
        b12(ring.sub(s, &one)),
        b21(one.clone()),
        b12(ring.sub(&wt, &one)),
    ];
    let mut product = Matrix::identity(ring.clone(), 2);
    for op in factors.iter().rev() {
        product.apply_in_place(op)?;
    }
    let target = Matrix::from_rows(
        ring.clone(),
        vec![
            vec![s.clone(), ring.zero()],
            vec![ring.sub(&one, &ring.mul(&wt, s)), wt],
        ],
    )?;
    Ok(ElementaryFactorization {
        factors,
        product,
        target,
    })
}

/// `[[s, 0], [1-wts, wt]] = B21(-wt)·B12(s-1)·B21(1)·B12(wt-1)`, which
/// requires `s·w·t = 1`.
pub fn theorem21_factorization<R: Ring>(
    ring: &R,
    s: &R::Elem,
    t: &R::Elem,
    w: &R::Elem,
) -> Result<ElementaryFactorization<R>, MatrixError> {
    if !ring.is_one(&ring.mul3(s, w, t)) {
        return Err(MatrixError::Precondition("s·w·t must equal 1".into()));
    }
    let f = build(ring, s, t, w)?;
    if !f.holds() {
        return Err(MatrixError::Precondition(
            "elementary product differs from target".into(),
        ));
    }
    Ok(f)
}

/// `[[sw, 0], [1-tsw, t]] = B21(-t)·B12(sw-1)·B21(1)·B12(t-1)`, the same
/// identity with `(s·w, t, 1)` substituted.
pub fn companion_factorization<R: Ring>(
    ring: &R,
    s: &R::Elem,
    w: &R::Elem,
    t: &R::Elem,
) -> Result<ElementaryFactorization<R>, MatrixError> {
    theorem21_factorization(ring, &ring.mul(s, w), t, &ring.one())
}

/// The product `B21(-wt)·B12(s-1)·B21(1)·B12(wt-1)` for arbitrary
/// `s, t, w`, written out entrywise.
pub fn elementary_product_closed_form<R: Ring>(
    ring: &R,
    s: &R::Elem,
    t: &R::Elem,
    w: &R::Elem,
) -> Matrix<R> {
    let one = ring.one();
    let wt = ring.mul(w, t);
    let swt = ring.mul(s, &wt);
    let wts = ring.mul(&wt, s);
    let two_wt = ring.add(&wt, &wt);
    let entries = vec![
        s.clone(),
        ring.sub(&swt, &one),
        ring.sub(&one, &wts),
        ring.sub(&two_wt, &ring.mul(&wts, &wt)),
    ];
    Matrix::new(ring.clone(), 2, 2, entries).expect("2x2")
}

/// Bringing a unit onto the pivot of `[[a, 0], [b, c]]` from `s·b·t = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PivotIdentity<R: Ring> {
    /// `[[s, 0], [1-bts, bt]]`, applied after swapping the two rows.
    pub left_factor: ElementaryFactorization<R>,
    /// `[[t, 0], [1-sbt, sb]]`, applied on the right.
    pub right_factor: ElementaryFactorization<R>,
    pub transcript: OpTranscript<R::Elem>,
    /// `P·A·Q`, with a 1 in position (0, 0).
    pub conjugated: Matrix<R>,
    /// The conjugated matrix cleared to `diag(1, *)`.
    pub reduced: Matrix<R>,
}

/// Verifies that a lower-triangular 2×2 block whose (1, 0) entry `b`
/// satisfies `s·b·t = 1` is equivalent to `diag(1, *)` through matrices
/// with explicit elementary factorizations.
pub fn pivot_identity<R: Ring>(
    ring: &R,
    s: &R::Elem,
    t: &R::Elem,
    block: &Matrix<R>,
) -> Result<PivotIdentity<R>, MatrixError> {
    if block.rows() != 2 || block.cols() != 2 || !ring.is_zero(&block[(0, 1)]) {
        return Err(MatrixError::Precondition(
            "expected a block [[a, 0], [b, c]]".into(),
        ));
    }
    let b = block[(1, 0)].clone();
    if !ring.is_one(&ring.mul3(s, &b, t)) {
        return Err(MatrixError::Precondition("s·b·t must equal 1".into()));
    }
    let left_factor = theorem21_factorization(ring, s, t, &b)?;
    let right_factor = theorem21_factorization(ring, t, &b, s)?;

    let mut transcript = OpTranscript::new();
    transcript.push(ElementaryOp::SwapRows(0, 1));
    transcript.extend(left_factor.row_transcript());
    transcript.extend(right_factor.column_transcript());

    let realized = realize(ring, &transcript, 2, 2)?;
    let conjugated = realized.p.mul(block)?.mul(&realized.q)?;
    if conjugated != transcript.replay(block)? {
        return Err(MatrixError::Precondition(
            "transcript replay disagrees with P·A·Q".into(),
        ));
    }
    if !ring.is_one(&conjugated[(0, 0)]) {
        return Err(MatrixError::Precondition("pivot did not become 1".into()));
    }

    let mut clear = OpTranscript::new();
    clear.push(ElementaryOp::AddLeftMultiple {
        target: 1,
        source: 0,
        factor: ring.neg(&conjugated[(1, 0)]),
    });
    clear.push(ElementaryOp::AddRightMultiple {
        target: 1,
        source: 0,
        factor: ring.neg(&conjugated[(0, 1)]),
    });
    let reduced = clear.replay(&conjugated)?;
    transcript.extend(clear);

    Ok(PivotIdentity {
        left_factor,
        right_factor,
        transcript,
        conjugated,
        reduced,
    })
}
