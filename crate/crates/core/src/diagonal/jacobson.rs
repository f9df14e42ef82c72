use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::matrices::{ElementaryOp, Matrix, OpTranscript};
use crate::rings::{LocalizedIntegers, ModularIntegers, Ring};

use super::{diagonal_reduce, push, ReductionResult};

fn lift(k: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(k))
}

/// Inverse of a lift whose residue is invertible mod 6. The product with
/// the lifted residue inverse lies in `1 + J`, and `1 + J` consists of units.
fn certified_inverse(u: &BigRational) -> Result<BigRational> {
    let l = LocalizedIntegers;
    let z6 = ModularIntegers::new(6)?;
    let residue_inv = z6
        .inverse(&l.residue_mod6(u))
        .ok_or(Error::Ring(crate::rings::RingError::NotAUnit))?;
    let defect = l.sub(&l.mul(u, &lift(residue_inv)), &l.one());
    if !l.jacobson_membership(&defect) {
        return Err(Error::Verification(
            "lifted unit is not a unit modulo J".into(),
        ));
    }
    l.inverse(u)
        .ok_or(Error::Verification("element of 1 + J is not a unit".into()))
}

/// Lifts an elementary operation over `Z/6` to the localized integers,
/// taking integer representatives in `[0, 6)`.
pub fn lift_op(op: &ElementaryOp<u64>) -> Result<ElementaryOp<BigRational>> {
    use ElementaryOp::*;
    let l = LocalizedIntegers;
    let lift_block = |b: &[u64; 4]| -> Result<([BigRational; 4], [BigRational; 4])> {
        let [b0, b1, b2, b3] = b.map(lift);
        let det = l.sub(&l.mul(&b0, &b3), &l.mul(&b1, &b2));
        let d = certified_inverse(&det)?;
        let inverse = [
            l.mul(&d, &b3),
            l.neg(&l.mul(&d, &b1)),
            l.neg(&l.mul(&d, &b2)),
            l.mul(&d, &b0),
        ];
        Ok(([b0, b1, b2, b3], inverse))
    };
    Ok(match op {
        AddLeftMultiple {
            target,
            source,
            factor,
        } => AddLeftMultiple {
            target: *target,
            source: *source,
            factor: lift(*factor),
        },
        AddRightMultiple {
            target,
            source,
            factor,
        } => AddRightMultiple {
            target: *target,
            source: *source,
            factor: lift(*factor),
        },
        SwapRows(i, j) => SwapRows(*i, *j),
        SwapCols(i, j) => SwapCols(*i, *j),
        ScaleRowLeft { row, unit } => {
            let u = lift(*unit);
            certified_inverse(&u)?;
            ScaleRowLeft { row: *row, unit: u }
        }
        ScaleColRight { col, unit } => {
            let u = lift(*unit);
            certified_inverse(&u)?;
            ScaleColRight { col: *col, unit: u }
        }
        RowBlock {
            first,
            second,
            block,
            ..
        } => {
            let (block, inverse) = lift_block(block)?;
            RowBlock {
                first: *first,
                second: *second,
                block,
                inverse,
            }
        }
        ColBlock {
            first,
            second,
            block,
            ..
        } => {
            let (block, inverse) = lift_block(block)?;
            ColBlock {
                first: *first,
                second: *second,
                block,
                inverse,
            }
        }
    })
}

/// Reduces the image of `A` in `R/J ≅ Z/6`, replays the lifted operations
/// on `A`, and finishes the divisibility chain over `R`.
pub fn reduce_mod_jacobson(
    a: &Matrix<LocalizedIntegers>,
) -> Result<ReductionResult<LocalizedIntegers>> {
    let l = LocalizedIntegers;
    let z6 = ModularIntegers::new(6)?;
    let image = a.map(z6, |x| l.residue_mod6(x));
    let residue = diagonal_reduce(&image)?;

    let mut m = a.clone();
    let mut tr = OpTranscript::new();
    for op in residue
        .transcript
        .left_ops
        .iter()
        .chain(&residue.transcript.right_ops)
    {
        push(&mut m, &mut tr, lift_op(op)?)?;
    }
    let finish = diagonal_reduce(&m)?;
    tr.extend(finish.transcript);
    ReductionResult::from_transcript(a, tr)
}
