use crate::error::{Error, Result};
use crate::matrices::{ElementaryOp, Matrix, OpTranscript};
use crate::rings::EuclideanRing;

use super::{canonicalize_diagonal, push, ReductionResult};

/// Euclid on the pivot and `(row, col)` of the first row or column; leaves
/// the pivot generating the ideal of both and the other entry zero.
fn euclid<R: EuclideanRing>(
    m: &mut Matrix<R>,
    tr: &mut OpTranscript<R::Elem>,
    on_row: bool,
) -> Result<()> {
    let ring = m.ring().clone();
    let other = |m: &Matrix<R>| {
        if on_row {
            m.get(0, 1).clone()
        } else {
            m.get(1, 0).clone()
        }
    };
    loop {
        let b = other(m);
        if ring.is_zero(&b) {
            return Ok(());
        }
        let (quot, _) = ring.div_rem(m.get(0, 0), &b);
        let factor = ring.neg(&quot);
        let skip = ring.is_zero(&factor);
        if on_row {
            if !skip {
                push(
                    m,
                    tr,
                    ElementaryOp::AddRightMultiple {
                        target: 0,
                        source: 1,
                        factor,
                    },
                )?;
            }
            push(m, tr, ElementaryOp::SwapCols(0, 1))?;
        } else {
            if !skip {
                push(
                    m,
                    tr,
                    ElementaryOp::AddLeftMultiple {
                        target: 0,
                        source: 1,
                        factor,
                    },
                )?;
            }
            push(m, tr, ElementaryOp::SwapRows(0, 1))?;
        }
    }
}

/// Reduces a 2×2 matrix by alternating row and column Euclid steps on the
/// pivot. Each time the pivot fails to divide an entry of its row, column
/// or the opposite corner, it is replaced by a proper divisor, so its
/// Euclidean size strictly drops and the loop terminates. The successive
/// pivots are recorded in `pivot_chain`.
pub fn mspec_pivot_loop<R: EuclideanRing>(a: &Matrix<R>) -> Result<ReductionResult<R>> {
    if a.rows() != 2 || a.cols() != 2 {
        return Err(Error::Precondition(
            "pivot loop expects a 2×2 matrix".into(),
        ));
    }
    let ring = a.ring().clone();
    let mut m = a.clone();
    let mut tr = OpTranscript::new();
    let mut pivots = Vec::new();

    let smallest = [(0, 0), (0, 1), (1, 0), (1, 1)]
        .into_iter()
        .filter(|&(i, j)| !ring.is_zero(m.get(i, j)))
        .min_by_key(|&(i, j)| ring.size(m.get(i, j)));
    if let Some((i, j)) = smallest {
        if i != 0 {
            push(&mut m, &mut tr, ElementaryOp::SwapRows(0, 1))?;
        }
        if j != 0 {
            push(&mut m, &mut tr, ElementaryOp::SwapCols(0, 1))?;
        }
        pivots.push(ring.canonical(m.get(0, 0)));
        loop {
            euclid(&mut m, &mut tr, true)?;
            euclid(&mut m, &mut tr, false)?;
            let pivot = ring.canonical(m.get(0, 0));
            if !ring.associates(&pivot, pivots.last().expect("nonempty")) {
                pivots.push(pivot);
            }
            if !ring.is_zero(m.get(0, 1)) {
                continue;
            }
            if ring.divides(m.get(0, 0), m.get(1, 1)) {
                break;
            }
            push(
                &mut m,
                &mut tr,
                ElementaryOp::AddLeftMultiple {
                    target: 0,
                    source: 1,
                    factor: ring.one(),
                },
            )?;
        }
    }
    canonicalize_diagonal(&mut m, &mut tr)?;
    let mut out = ReductionResult::from_transcript(a, tr)?;
    out.pivot_chain = pivots;
    Ok(out)
}
