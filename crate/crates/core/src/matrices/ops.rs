use crate::rings::Ring;

use super::{Matrix, MatrixError};

/// Which side of the matrix an operation multiplies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Row operations: left multiplication.
    Left,
    /// Column operations: right multiplication.
    Right,
}

/// An invertible elementary transformation.
///
/// Row kinds multiply the affected entries on the left, column kinds on the
/// right; in noncommutative instances the distinction matters. Blocks are
/// general invertible 2×2 transforms stored with their explicit inverse,
/// row-major as `[b00, b01, b10, b11]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ElementaryOp<E> {
    /// `row[target] += factor · row[source]`
    AddLeftMultiple {
        target: usize,
        source: usize,
        factor: E,
    },
    /// `col[target] += col[source] · factor`
    AddRightMultiple {
        target: usize,
        source: usize,
        factor: E,
    },
    SwapRows(usize, usize),
    SwapCols(usize, usize),
    /// `row[row] = unit · row[row]`
    ScaleRowLeft {
        row: usize,
        unit: E,
    },
    /// `col[col] = col[col] · unit`
    ScaleColRight {
        col: usize,
        unit: E,
    },
    /// Left multiplication by `block` embedded at rows `(first, second)`.
    RowBlock {
        first: usize,
        second: usize,
        block: [E; 4],
        inverse: [E; 4],
    },
    /// Right multiplication by `block` embedded at columns `(first, second)`.
    ColBlock {
        first: usize,
        second: usize,
        block: [E; 4],
        inverse: [E; 4],
    },
}

impl<E: Clone> ElementaryOp<E> {
    pub fn side(&self) -> Side {
        match self {
            ElementaryOp::AddLeftMultiple { .. }
            | ElementaryOp::SwapRows(..)
            | ElementaryOp::ScaleRowLeft { .. }
            | ElementaryOp::RowBlock { .. } => Side::Left,
            _ => Side::Right,
        }
    }

    pub fn inverse<R: Ring<Elem = E>>(&self, ring: &R) -> Result<Self, MatrixError> {
        use ElementaryOp::*;
        Ok(match self {
            AddLeftMultiple {
                target,
                source,
                factor,
            } => AddLeftMultiple {
                target: *target,
                source: *source,
                factor: ring.neg(factor),
            },
            AddRightMultiple {
                target,
                source,
                factor,
            } => AddRightMultiple {
                target: *target,
                source: *source,
                factor: ring.neg(factor),
            },
            SwapRows(i, j) => SwapRows(*i, *j),
            SwapCols(i, j) => SwapCols(*i, *j),
            ScaleRowLeft { row, unit } => ScaleRowLeft {
                row: *row,
                unit: ring.inverse(unit).ok_or(MatrixError::NonUnitScale)?,
            },
            ScaleColRight { col, unit } => ScaleColRight {
                col: *col,
                unit: ring.inverse(unit).ok_or(MatrixError::NonUnitScale)?,
            },
            RowBlock {
                first,
                second,
                block,
                inverse,
            } => RowBlock {
                first: *first,
                second: *second,
                block: inverse.clone(),
                inverse: block.clone(),
            },
            ColBlock {
                first,
                second,
                block,
                inverse,
            } => ColBlock {
                first: *first,
                second: *second,
                block: inverse.clone(),
                inverse: block.clone(),
            },
        })
    }
}

fn check_pair(i: usize, j: usize, bound: usize) -> Result<(), MatrixError> {
    for index in [i, j] {
        if index >= bound {
            return Err(MatrixError::IndexOutOfRange { index, bound });
        }
    }
    if i == j {
        return Err(MatrixError::RepeatedIndex(i));
    }
    Ok(())
}

fn check_index(i: usize, bound: usize) -> Result<(), MatrixError> {
    if i >= bound {
        return Err(MatrixError::IndexOutOfRange { index: i, bound });
    }
    Ok(())
}

/// Whether `block · inverse` and `inverse · block` are both the identity.
pub(crate) fn is_inverse_pair<R: Ring>(ring: &R, b: &[R::Elem; 4], c: &[R::Elem; 4]) -> bool {
    let prod = |x: &[R::Elem; 4], y: &[R::Elem; 4]| {
        [
            ring.add(&ring.mul(&x[0], &y[0]), &ring.mul(&x[1], &y[2])),
            ring.add(&ring.mul(&x[0], &y[1]), &ring.mul(&x[1], &y[3])),
            ring.add(&ring.mul(&x[2], &y[0]), &ring.mul(&x[3], &y[2])),
            ring.add(&ring.mul(&x[2], &y[1]), &ring.mul(&x[3], &y[3])),
        ]
    };
    let id = [ring.one(), ring.zero(), ring.zero(), ring.one()];
    prod(b, c) == id && prod(c, b) == id
}

impl<R: Ring> Matrix<R> {
    pub fn apply_in_place(&mut self, op: &ElementaryOp<R::Elem>) -> Result<(), MatrixError> {
        use ElementaryOp::*;
        let ring = self.ring.clone();
        let (rows, cols) = (self.rows, self.cols);
        match op {
            AddLeftMultiple {
                target,
                source,
                factor,
            } => {
                check_pair(*target, *source, rows)?;
                for c in 0..cols {
                    let add = ring.mul(factor, self.get(*source, c));
                    let v = ring.add(self.get(*target, c), &add);
                    self.set(*target, c, v);
                }
            }
            AddRightMultiple {
                target,
                source,
                factor,
            } => {
                check_pair(*target, *source, cols)?;
                for r in 0..rows {
                    let add = ring.mul(self.get(r, *source), factor);
                    let v = ring.add(self.get(r, *target), &add);
                    self.set(r, *target, v);
                }
            }
            SwapRows(i, j) => {
                check_pair(*i, *j, rows)?;
                for c in 0..cols {
                    self.entries.swap(i * cols + c, j * cols + c);
                }
            }
            SwapCols(i, j) => {
                check_pair(*i, *j, cols)?;
                for r in 0..rows {
                    self.entries.swap(r * cols + i, r * cols + j);
                }
            }
            ScaleRowLeft { row, unit } => {
                check_index(*row, rows)?;
                if !ring.is_unit(unit) {
                    return Err(MatrixError::NonUnitScale);
                }
                for c in 0..cols {
                    let v = ring.mul(unit, self.get(*row, c));
                    self.set(*row, c, v);
                }
            }
            ScaleColRight { col, unit } => {
                check_index(*col, cols)?;
                if !ring.is_unit(unit) {
                    return Err(MatrixError::NonUnitScale);
                }
                for r in 0..rows {
                    let v = ring.mul(self.get(r, *col), unit);
                    self.set(r, *col, v);
                }
            }
            RowBlock {
                first,
                second,
                block,
                inverse,
            } => {
                check_pair(*first, *second, rows)?;
                if !is_inverse_pair(&ring, block, inverse) {
                    return Err(MatrixError::InvalidBlock);
                }
                for c in 0..cols {
                    let x = self.get(*first, c).clone();
                    let y = self.get(*second, c).clone();
                    let nx = ring.add(&ring.mul(&block[0], &x), &ring.mul(&block[1], &y));
                    let ny = ring.add(&ring.mul(&block[2], &x), &ring.mul(&block[3], &y));
                    self.set(*first, c, nx);
                    self.set(*second, c, ny);
                }
            }
            ColBlock {
                first,
                second,
                block,
                inverse,
            } => {
                check_pair(*first, *second, cols)?;
                if !is_inverse_pair(&ring, block, inverse) {
                    return Err(MatrixError::InvalidBlock);
                }
                for r in 0..rows {
                    let x = self.get(r, *first).clone();
                    let y = self.get(r, *second).clone();
                    let nx = ring.add(&ring.mul(&x, &block[0]), &ring.mul(&y, &block[2]));
                    let ny = ring.add(&ring.mul(&x, &block[1]), &ring.mul(&y, &block[3]));
                    self.set(r, *first, nx);
                    self.set(r, *second, ny);
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{Integers, Quaternion, RationalQuaternions};
    use num_bigint::BigInt;

    fn z(n: i64) -> BigInt {
        BigInt::from(n)
    }

    #[test]
    fn add_multiple_clears_entry() {
        let m = Matrix::from_i64(Integers, &[&[1, 0], &[3, 1]]).unwrap();
        let op = ElementaryOp::AddLeftMultiple {
            target: 1,
            source: 0,
            factor: z(-3),
        };
        assert!(m.apply(&op).unwrap().is_identity());
    }

    #[test]
    fn swap_twice_is_identity() {
        let m = Matrix::from_i64(Integers, &[&[1, 2], &[3, 4]]).unwrap();
        let op = ElementaryOp::SwapRows(0, 1);
        assert_eq!(m.apply(&op).unwrap().apply(&op).unwrap(), m);
    }

    #[test]
    fn quaternion_row_op_multiplies_on_left() {
        let h = RationalQuaternions;
        let m = Matrix::from_rows(
            h,
            vec![vec![h.zero(), h.zero()], vec![Quaternion::j(), h.zero()]],
        )
        .unwrap();
        let op = ElementaryOp::AddLeftMultiple {
            target: 0,
            source: 1,
            factor: Quaternion::i(),
        };
        let out = m.apply(&op).unwrap();
        assert_eq!(out[(0, 0)], Quaternion::k());
        assert_eq!(out[(1, 0)], Quaternion::j());
    }

    #[test]
    fn rejects_bad_ops() {
        let m = Matrix::from_i64(Integers, &[&[1, 2], &[3, 4]]).unwrap();
        assert_eq!(
            m.apply(&ElementaryOp::SwapRows(0, 2)),
            Err(MatrixError::IndexOutOfRange { index: 2, bound: 2 })
        );
        assert_eq!(
            m.apply(&ElementaryOp::SwapCols(1, 1)),
            Err(MatrixError::RepeatedIndex(1))
        );
        assert_eq!(
            m.apply(&ElementaryOp::ScaleRowLeft { row: 0, unit: z(2) }),
            Err(MatrixError::NonUnitScale)
        );
        let bad = ElementaryOp::ColBlock {
            first: 0,
            second: 1,
            block: [z(2), z(0), z(0), z(1)],
            inverse: [z(1), z(0), z(0), z(1)],
        };
        assert_eq!(m.apply(&bad), Err(MatrixError::InvalidBlock));
    }
}
