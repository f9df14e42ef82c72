//! Dense matrices over a ring instance, elementary operations with recorded
//! inverses, and transcripts that realize the accumulated transforms.

mod identities;
mod json;
mod ops;
mod transcript;

pub use identities::{
    companion_factorization, elementary_product_closed_form, pivot_identity,
    theorem21_factorization, ElementaryFactorization, PivotIdentity,
};
pub use json::{MatrixJson, OpJson};
pub use ops::{ElementaryOp, Side};
pub use transcript::{realize, OpTranscript, Realized};

use std::fmt;
use std::ops::Index;

use thiserror::Error;

use crate::rings::{Ring, RingError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("entry count {len} does not match a {rows}x{cols} shape")]
    Shape {
        rows: usize,
        cols: usize,
        len: usize,
    },
    #[error("cannot multiply {0}x{1} by {2}x{3}")]
    DimensionMismatch(usize, usize, usize, usize),
    #[error("index {index} out of range for dimension {bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("elementary operation needs two distinct indices, got {0} twice")]
    RepeatedIndex(usize),
    #[error("scale factor is not a unit")]
    NonUnitScale,
    #[error("block and its stored inverse do not multiply to the identity")]
    InvalidBlock,
    #[error("operation on the wrong side of the transcript")]
    WrongSide,
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error(transparent)]
    Ring(#[from] RingError),
}

/// A dense `rows × cols` matrix stored row-major.
#[derive(Clone, Debug)]
pub struct Matrix<R: Ring> {
    ring: R,
    rows: usize,
    cols: usize,
    entries: Vec<R::Elem>,
}

impl<R: Ring> PartialEq for Matrix<R> {
    fn eq(&self, other: &Self) -> bool {
        self.rows == other.rows && self.cols == other.cols && self.entries == other.entries
    }
}

impl<R: Ring> Eq for Matrix<R> {}

impl<R: Ring> Matrix<R> {
    pub fn new(
        ring: R,
        rows: usize,
        cols: usize,
        entries: Vec<R::Elem>,
    ) -> Result<Self, MatrixError> {
        if entries.len() != rows * cols {
            return Err(MatrixError::Shape {
                rows,
                cols,
                len: entries.len(),
            });
        }
        Ok(Self {
            ring,
            rows,
            cols,
            entries,
        })
    }

    pub fn from_rows(ring: R, rows: Vec<Vec<R::Elem>>) -> Result<Self, MatrixError> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut entries = Vec::with_capacity(r * c);
        for row in rows {
            if row.len() != c {
                return Err(MatrixError::Shape {
                    rows: r,
                    cols: c,
                    len: row.len(),
                });
            }
            entries.extend(row);
        }
        Self::new(ring, r, c, entries)
    }

    /// Builds a matrix from small integer entries.
    pub fn from_i64(ring: R, rows: &[&[i64]]) -> Result<Self, MatrixError> {
        let data = rows
            .iter()
            .map(|row| row.iter().map(|&v| ring.from_i64(v)).collect())
            .collect();
        Self::from_rows(ring, data)
    }

    pub fn zeros(ring: R, rows: usize, cols: usize) -> Self {
        let entries = vec![ring.zero(); rows * cols];
        Self {
            ring,
            rows,
            cols,
            entries,
        }
    }

    pub fn identity(ring: R, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.entries[i * n + i] = m.ring.one();
        }
        m
    }

    pub fn ring(&self) -> &R {
        &self.ring
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[R::Elem] {
        &self.entries
    }

    pub fn get(&self, i: usize, j: usize) -> &R::Elem {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: R::Elem) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[R::Elem] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul(&self, other: &Matrix<R>) -> Result<Matrix<R>, MatrixError> {
        if self.cols != other.rows {
            return Err(MatrixError::DimensionMismatch(
                self.rows, self.cols, other.rows, other.cols,
            ));
        }
        let r = &self.ring;
        let mut out = Vec::with_capacity(self.rows * other.cols);
        for i in 0..self.rows {
            for j in 0..other.cols {
                let mut acc = r.zero();
                for k in 0..self.cols {
                    let a = self.get(i, k);
                    let b = other.get(k, j);
                    if r.is_zero(a) || r.is_zero(b) {
                        continue;
                    }
                    acc = r.add(&acc, &r.mul(a, b));
                }
                out.push(acc);
            }
        }
        Matrix::new(self.ring.clone(), self.rows, other.cols, out)
    }

    pub fn transpose(&self) -> Matrix<R> {
        let mut out = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                out.push(self.get(i, j).clone());
            }
        }
        Matrix {
            ring: self.ring.clone(),
            rows: self.cols,
            cols: self.rows,
            entries: out,
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(|e| self.ring.is_zero(e))
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        self.ring.is_one(e)
                    } else {
                        self.ring.is_zero(e)
                    }
                })
            })
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.ring.is_zero(self.get(i, j))))
    }

    /// Entries above the main diagonal vanish.
    pub fn is_lower_triangular(&self) -> bool {
        (0..self.rows).all(|i| (i + 1..self.cols).all(|j| self.ring.is_zero(self.get(i, j))))
    }

    pub fn diagonal(&self) -> Vec<R::Elem> {
        (0..self.rows.min(self.cols))
            .map(|i| self.get(i, i).clone())
            .collect()
    }

    /// Entrywise image in another ring.
    pub fn map<S: Ring>(&self, ring: S, f: impl Fn(&R::Elem) -> S::Elem) -> Matrix<S> {
        Matrix {
            entries: self.entries.iter().map(f).collect(),
            ring,
            rows: self.rows,
            cols: self.cols,
        }
    }

    pub fn apply(&self, op: &ElementaryOp<R::Elem>) -> Result<Matrix<R>, MatrixError> {
        let mut m = self.clone();
        m.apply_in_place(op)?;
        Ok(m)
    }
}

impl<R: Ring> Index<(usize, usize)> for Matrix<R> {
    type Output = R::Elem;

    fn index(&self, (i, j): (usize, usize)) -> &R::Elem {
        self.get(i, j)
    }
}

impl<R: Ring> fmt::Display for Matrix<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.ring.format_elem(self.get(i, j)))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{Integers, Quaternion, RationalQuaternions};

    #[test]
    fn product_and_identity() {
        let a = Matrix::from_i64(Integers, &[&[1, 2], &[3, 4]]).unwrap();
        let i = Matrix::identity(Integers, 2);
        assert_eq!(a.mul(&i).unwrap(), a);
        let b = Matrix::from_i64(Integers, &[&[0, 1], &[1, 0]]).unwrap();
        assert_eq!(
            a.mul(&b).unwrap(),
            Matrix::from_i64(Integers, &[&[2, 1], &[4, 3]]).unwrap()
        );
        assert!(a.mul(&Matrix::zeros(Integers, 3, 1)).is_err());
    }

    #[test]
    fn shape_checks() {
        assert!(Matrix::new(Integers, 2, 2, vec![]).is_err());
        let t = Matrix::from_i64(Integers, &[&[1, 0, 0], &[5, 2, 0]]).unwrap();
        assert!(t.is_lower_triangular());
        assert!(!t.is_diagonal());
        assert_eq!(t.transpose().rows(), 3);
    }

    #[test]
    fn noncommutative_product_order() {
        let h = RationalQuaternions;
        let a = Matrix::from_rows(h, vec![vec![Quaternion::i()]]).unwrap();
        let b = Matrix::from_rows(h, vec![vec![Quaternion::j()]]).unwrap();
        assert_eq!(a.mul(&b).unwrap()[(0, 0)], Quaternion::k());
        assert_eq!(b.mul(&a).unwrap()[(0, 0)], h.neg(&Quaternion::k()));
    }
}
