use std::path::Path;

use bezout_core::diagonal::{
    diagonal_reduce, mspec_pivot_loop, reduce_mod_jacobson, ReductionResult,
};
use bezout_core::matrices::{Matrix, MatrixJson, OpJson};
use bezout_core::rings::{
    BezoutRing, Integers, LocalizedIntegers, PolyOverPrimeField, Ring, RingDescriptor, RingVisitor,
};
use serde::Serialize;

use crate::error::CliError;
use crate::Algorithm;

const MAX_SIZE_VAR: &str = "BEZOUT_REDUCE_MAX_SIZE";
const DEFAULT_MAX_SIZE: usize = 8;

#[derive(Serialize)]
struct TranscriptJson {
    left: Vec<OpJson>,
    right: Vec<OpJson>,
}

#[derive(Serialize)]
struct ReduceOutput {
    #[serde(rename = "P")]
    p: MatrixJson,
    #[serde(rename = "Pinv")]
    p_inv: MatrixJson,
    #[serde(rename = "Q")]
    q: MatrixJson,
    #[serde(rename = "Qinv")]
    q_inv: MatrixJson,
    #[serde(rename = "D")]
    d: MatrixJson,
    chain: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pivot_chain: Option<Vec<String>>,
    verified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    transcript: Option<TranscriptJson>,
}

fn max_size() -> Result<usize, CliError> {
    match std::env::var(MAX_SIZE_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| CliError::Input(format!("{MAX_SIZE_VAR}={v:?} is not a size"))),
        Err(_) => Ok(DEFAULT_MAX_SIZE),
    }
}

fn render<R: Ring>(
    a: &Matrix<R>,
    result: ReductionResult<R>,
    with_pivots: bool,
    emit_transcript: bool,
) -> Result<String, CliError> {
    result
        .verify(a)
        .map_err(|e| CliError::Verification(e.to_string()))?;
    let ring = a.ring();
    let fmt = |v: &[R::Elem]| v.iter().map(|e| ring.format_elem(e)).collect::<Vec<_>>();
    let transcript = emit_transcript.then(|| TranscriptJson {
        left: result
            .transcript
            .left_ops
            .iter()
            .map(|op| op.to_json(ring))
            .collect(),
        right: result
            .transcript
            .right_ops
            .iter()
            .map(|op| op.to_json(ring))
            .collect(),
    });
    let out = ReduceOutput {
        p: result.p.to_json(),
        p_inv: result.p_inv.to_json(),
        q: result.q.to_json(),
        q_inv: result.q_inv.to_json(),
        d: result.d.to_json(),
        chain: fmt(&result.chain),
        pivot_chain: with_pivots.then(|| fmt(&result.pivot_chain)),
        verified: true,
        transcript,
    };
    serde_json::to_string(&out).map_err(|e| CliError::Verification(e.to_string()))
}

struct DiagonalVisitor<'a> {
    json: &'a MatrixJson,
    emit_transcript: bool,
}

impl RingVisitor for DiagonalVisitor<'_> {
    type Output = Result<String, CliError>;

    fn visit<R: BezoutRing + 'static>(self, ring: R) -> Self::Output {
        let a = Matrix::from_json(ring, self.json).map_err(|e| CliError::Input(e.to_string()))?;
        let result = diagonal_reduce(&a)?;
        render(&a, result, false, self.emit_transcript)
    }
}

fn pivot_loop<R: bezout_core::rings::EuclideanRing>(
    ring: R,
    json: &MatrixJson,
    emit_transcript: bool,
) -> Result<String, CliError> {
    let a = Matrix::from_json(ring, json).map_err(|e| CliError::Input(e.to_string()))?;
    let result = mspec_pivot_loop(&a)?;
    render(&a, result, true, emit_transcript)
}

pub fn run(
    ring: Option<&str>,
    input: &Path,
    algorithm: Algorithm,
    emit_transcript: bool,
) -> Result<String, CliError> {
    let text = std::fs::read_to_string(input)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", input.display())))?;
    let json: MatrixJson = serde_json::from_str(&text)
        .map_err(|e| CliError::Input(format!("bad matrix JSON: {e}")))?;
    let file_desc = json.descriptor()?;
    let desc = match ring {
        Some(r) => {
            let d: RingDescriptor = r.parse()?;
            if d != file_desc {
                return Err(CliError::Input(format!(
                    "--ring {d} disagrees with the file's ring {file_desc}"
                )));
            }
            d
        }
        None => file_desc,
    };
    let cap = max_size()?;
    if json.rows > cap || json.cols > cap {
        return Err(CliError::Input(format!(
            "{}×{} exceeds the size cap {cap} ({MAX_SIZE_VAR})",
            json.rows, json.cols
        )));
    }

    match algorithm {
        Algorithm::Diagonal => desc.visit(DiagonalVisitor {
            json: &json,
            emit_transcript,
        })?,
        Algorithm::MspecLoop => {
            if json.rows != 2 || json.cols != 2 {
                return Err(CliError::Unsupported(
                    "mspec-loop takes 2×2 matrices".into(),
                ));
            }
            match desc {
                RingDescriptor::Integers => pivot_loop(Integers, &json, emit_transcript),
                RingDescriptor::PolyOverPrimeField(p) => {
                    pivot_loop(PolyOverPrimeField::new(p)?, &json, emit_transcript)
                }
                RingDescriptor::LocalizedIntegers => {
                    pivot_loop(LocalizedIntegers, &json, emit_transcript)
                }
                other => Err(CliError::Unsupported(format!(
                    "mspec-loop needs a Euclidean size, not {other}"
                ))),
            }
        }
        Algorithm::ModJacobson => {
            if desc != RingDescriptor::LocalizedIntegers {
                return Err(CliError::Unsupported(format!(
                    "mod-jacobson runs over zloc23, not {desc}"
                )));
            }
            let a = Matrix::from_json(LocalizedIntegers, &json)
                .map_err(|e| CliError::Input(e.to_string()))?;
            let result = reduce_mod_jacobson(&a)?;
            render(&a, result, false, emit_transcript)
        }
    }
}
