use crate::rings::Ring;

use super::{ElementaryOp, Matrix, MatrixError, Side};

/// Ordered row-side and column-side operations, in application order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OpTranscript<E> {
    pub left_ops: Vec<ElementaryOp<E>>,
    pub right_ops: Vec<ElementaryOp<E>>,
}

impl<E> Default for OpTranscript<E> {
    fn default() -> Self {
        Self {
            left_ops: Vec::new(),
            right_ops: Vec::new(),
        }
    }
}

impl<E: Clone> OpTranscript<E> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, op: ElementaryOp<E>) {
        match op.side() {
            Side::Left => self.left_ops.push(op),
            Side::Right => self.right_ops.push(op),
        }
    }

    pub fn extend(&mut self, other: OpTranscript<E>) {
        self.left_ops.extend(other.left_ops);
        self.right_ops.extend(other.right_ops);
    }

    pub fn is_empty(&self) -> bool {
        self.left_ops.is_empty() && self.right_ops.is_empty()
    }

    pub fn len(&self) -> usize {
        self.left_ops.len() + self.right_ops.len()
    }

    /// Applies every operation to `a`, rows then columns.
    pub fn replay<R: Ring<Elem = E>>(&self, a: &Matrix<R>) -> Result<Matrix<R>, MatrixError> {
        let mut m = a.clone();
        for op in &self.left_ops {
            if op.side() != Side::Left {
                return Err(MatrixError::WrongSide);
            }
            m.apply_in_place(op)?;
        }
        for op in &self.right_ops {
            if op.side() != Side::Right {
                return Err(MatrixError::WrongSide);
            }
            m.apply_in_place(op)?;
        }
        Ok(m)
    }
}

/// The transforms a transcript stands for.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Realized<R: Ring> {
    pub p: Matrix<R>,
    pub p_inv: Matrix<R>,
    pub q: Matrix<R>,
    pub q_inv: Matrix<R>,
}

/// Accumulates `P` (size `size_left`) and `Q` (size `size_right`) so that
/// replaying the transcript on `A` equals `P·A·Q`. The inverses are built
/// from the inverse operations in reverse order, never from determinants.
pub fn realize<R: Ring>(
    ring: &R,
    transcript: &OpTranscript<R::Elem>,
    size_left: usize,
    size_right: usize,
) -> Result<Realized<R>, MatrixError> {
    let mut p = Matrix::identity(ring.clone(), size_left);
    let mut p_inv = Matrix::identity(ring.clone(), size_left);
    for op in &transcript.left_ops {
        if op.side() != Side::Left {
            return Err(MatrixError::WrongSide);
        }
        p.apply_in_place(op)?;
    }
    for op in transcript.left_ops.iter().rev() {
        p_inv.apply_in_place(&op.inverse(ring)?)?;
    }
    let mut q = Matrix::identity(ring.clone(), size_right);
    let mut q_inv = Matrix::identity(ring.clone(), size_right);
    for op in &transcript.right_ops {
        if op.side() != Side::Right {
            return Err(MatrixError::WrongSide);
        }
        q.apply_in_place(op)?;
    }
    for op in transcript.right_ops.iter().rev() {
        q_inv.apply_in_place(&op.inverse(ring)?)?;
    }
    Ok(Realized { p, p_inv, q, q_inv })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::Integers;
    use num_bigint::BigInt;

    #[test]
    fn empty_transcript_is_identity() {
        let r = realize(&Integers, &OpTranscript::new(), 2, 3).unwrap();
        assert!(r.p.is_identity() && r.p_inv.is_identity());
        assert!(r.q.is_identity() && r.q_inv.is_identity());
        assert_eq!(r.q.rows(), 3);
    }

    #[test]
    fn single_row_addition() {
        let mut t = OpTranscript::new();
        t.push(ElementaryOp::AddLeftMultiple {
            target: 1,
            source: 0,
            factor: BigInt::from(2),
        });
        let r = realize(&Integers, &t, 2, 2).unwrap();
        assert_eq!(
            r.p,
            Matrix::from_i64(Integers, &[&[1, 0], &[2, 1]]).unwrap()
        );
        assert_eq!(
            r.p_inv,
            Matrix::from_i64(Integers, &[&[1, 0], &[-2, 1]]).unwrap()
        );
    }

    #[test]
    fn wrong_side_is_rejected() {
        let t = OpTranscript {
            left_ops: vec![ElementaryOp::<BigInt>::SwapCols(0, 1)],
            right_ops: vec![],
        };
        assert_eq!(realize(&Integers, &t, 2, 2), Err(MatrixError::WrongSide));
    }
}
