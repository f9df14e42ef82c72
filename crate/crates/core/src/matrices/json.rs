//! JSON encodings: `{"ring", "rows", "cols", "entries"}` for matrices, with
//! every element written in its ring's text encoding.

use serde::{Deserialize, Serialize};

use crate::rings::{Ring, RingDescriptor, RingError};

use super::{ElementaryOp, Matrix, MatrixError};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub ring: String,
    pub rows: usize,
    pub cols: usize,
    pub entries: Vec<Vec<String>>,
}

impl MatrixJson {
    pub fn descriptor(&self) -> Result<RingDescriptor, RingError> {
        self.ring.parse()
    }
}

impl<R: Ring> Matrix<R> {
    pub fn to_json(&self) -> MatrixJson {
        MatrixJson {
            ring: self.ring.descriptor().to_string(),
            rows: self.rows,
            cols: self.cols,
            entries: (0..self.rows)
                .map(|i| {
                    self.row(i)
                        .iter()
                        .map(|e| self.ring.format_elem(e))
                        .collect()
                })
                .collect(),
        }
    }

    pub fn from_json(ring: R, json: &MatrixJson) -> Result<Self, MatrixError> {
        let desc = json.descriptor()?;
        if desc != ring.descriptor() {
            return Err(RingError::DescriptorMismatch(desc, ring.descriptor()).into());
        }
        if json.entries.len() != json.rows {
            return Err(MatrixError::Shape {
                rows: json.rows,
                cols: json.cols,
                len: json.entries.len(),
            });
        }
        let mut entries = Vec::with_capacity(json.rows * json.cols);
        for row in &json.entries {
            if row.len() != json.cols {
                return Err(MatrixError::Shape {
                    rows: json.rows,
                    cols: json.cols,
                    len: row.len(),
                });
            }
            for s in row {
                entries.push(ring.parse_elem(s)?);
            }
        }
        Matrix::new(ring, json.rows, json.cols, entries)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "op", rename_all = "snake_case")]
pub enum OpJson {
    AddLeftMultiple {
        target: usize,
        source: usize,
        factor: String,
    },
    AddRightMultiple {
        target: usize,
        source: usize,
        factor: String,
    },
    SwapRows {
        i: usize,
        j: usize,
    },
    SwapCols {
        i: usize,
        j: usize,
    },
    ScaleRowLeft {
        row: usize,
        unit: String,
    },
    ScaleColRight {
        col: usize,
        unit: String,
    },
    RowBlock {
        first: usize,
        second: usize,
        block: [String; 4],
        inverse: [String; 4],
    },
    ColBlock {
        first: usize,
        second: usize,
        block: [String; 4],
        inverse: [String; 4],
    },
}

impl<E: Clone> ElementaryOp<E> {
    pub fn to_json<R: Ring<Elem = E>>(&self, ring: &R) -> OpJson {
        let f = |e: &E| ring.format_elem(e);
        let f4 = |b: &[E; 4]| [f(&b[0]), f(&b[1]), f(&b[2]), f(&b[3])];
        match self {
            ElementaryOp::AddLeftMultiple {
                target,
                source,
                factor,
            } => OpJson::AddLeftMultiple {
                target: *target,
                source: *source,
                factor: f(factor),
            },
            ElementaryOp::AddRightMultiple {
                target,
                source,
                factor,
            } => OpJson::AddRightMultiple {
                target: *target,
                source: *source,
                factor: f(factor),
            },
            ElementaryOp::SwapRows(i, j) => OpJson::SwapRows { i: *i, j: *j },
            ElementaryOp::SwapCols(i, j) => OpJson::SwapCols { i: *i, j: *j },
            ElementaryOp::ScaleRowLeft { row, unit } => OpJson::ScaleRowLeft {
                row: *row,
                unit: f(unit),
            },
            ElementaryOp::ScaleColRight { col, unit } => OpJson::ScaleColRight {
                col: *col,
                unit: f(unit),
            },
            ElementaryOp::RowBlock {
                first,
                second,
                block,
                inverse,
            } => OpJson::RowBlock {
                first: *first,
                second: *second,
                block: f4(block),
                inverse: f4(inverse),
            },
            ElementaryOp::ColBlock {
                first,
                second,
                block,
                inverse,
            } => OpJson::ColBlock {
                first: *first,
                second: *second,
                block: f4(block),
                inverse: f4(inverse),
            },
        }
    }

    pub fn from_json<R: Ring<Elem = E>>(ring: &R, json: &OpJson) -> Result<Self, RingError> {
        let p = |s: &String| ring.parse_elem(s);
        let p4 = |b: &[String; 4]| -> Result<[E; 4], RingError> {
            Ok([p(&b[0])?, p(&b[1])?, p(&b[2])?, p(&b[3])?])
        };
        Ok(match json {
            OpJson::AddLeftMultiple {
                target,
                source,
                factor,
            } => ElementaryOp::AddLeftMultiple {
                target: *target,
                source: *source,
                factor: p(factor)?,
            },
            OpJson::AddRightMultiple {
                target,
                source,
                factor,
            } => ElementaryOp::AddRightMultiple {
                target: *target,
                source: *source,
                factor: p(factor)?,
            },
            OpJson::SwapRows { i, j } => ElementaryOp::SwapRows(*i, *j),
            OpJson::SwapCols { i, j } => ElementaryOp::SwapCols(*i, *j),
            OpJson::ScaleRowLeft { row, unit } => ElementaryOp::ScaleRowLeft {
                row: *row,
                unit: p(unit)?,
            },
            OpJson::ScaleColRight { col, unit } => ElementaryOp::ScaleColRight {
                col: *col,
                unit: p(unit)?,
            },
            OpJson::RowBlock {
                first,
                second,
                block,
                inverse,
            } => ElementaryOp::RowBlock {
                first: *first,
                second: *second,
                block: p4(block)?,
                inverse: p4(inverse)?,
            },
            OpJson::ColBlock {
                first,
                second,
                block,
                inverse,
            } => ElementaryOp::ColBlock {
                first: *first,
                second: *second,
                block: p4(block)?,
                inverse: p4(inverse)?,
            },
        })
    }
}
