use bezout_core::conditions::{
    adequate_split, feckly_clean_decompose, lam_check, pm_split, pm_witness, stable_range_one,
};
use bezout_core::rings::{
    BezoutRing, Integers, LocalizedIntegers, PolyOverPrimeField, Ring, RingDescriptor, RingVisitor,
};
use serde_json::json;

use crate::error::CliError;
use crate::Condition;

fn arity(condition: Condition) -> usize {
    match condition {
        Condition::StableRange | Condition::FecklyClean | Condition::Lam => 1,
        Condition::Adequate => 2,
        Condition::PmSplit | Condition::PmWitness => 3,
    }
}

fn parse_u64(s: &str) -> Result<u64, CliError> {
    s.trim()
        .parse()
        .map_err(|_| CliError::Input(format!("{s:?} is not a nonnegative integer")))
}

/// Rings whose gcd saturation yields adequate and PM splits.
fn split_ring(desc: RingDescriptor) -> Result<SplitRing, CliError> {
    match desc {
        RingDescriptor::Integers => Ok(SplitRing::Int),
        RingDescriptor::PolyOverPrimeField(p) => Ok(SplitRing::Poly(PolyOverPrimeField::new(p)?)),
        RingDescriptor::LocalizedIntegers => Ok(SplitRing::Zloc),
        other => Err(CliError::Unsupported(format!(
            "splits are not defined over {other}"
        ))),
    }
}

enum SplitRing {
    Int,
    Poly(PolyOverPrimeField),
    Zloc,
}

fn splits<R: BezoutRing>(
    ring: R,
    condition: Condition,
    args: &[String],
) -> Result<String, CliError> {
    let parsed = args
        .iter()
        .map(|s| ring.parse_elem(s))
        .collect::<Result<Vec<_>, _>>()?;
    let (r, s) = if condition == Condition::Adequate {
        let out = adequate_split(&ring, &parsed[0], &parsed[1])?;
        (out.r, out.s)
    } else {
        let out = pm_split(&ring, &parsed[0], &parsed[1], &parsed[2])?;
        (out.r, out.s)
    };
    Ok(json!({ "r": ring.format_elem(&r), "s": ring.format_elem(&s) }).to_string())
}

struct LamVisitor<'a>(&'a str);

impl RingVisitor for LamVisitor<'_> {
    type Output = Result<bool, CliError>;

    fn visit<R: BezoutRing + 'static>(self, ring: R) -> Self::Output {
        let a = ring.parse_elem(self.0)?;
        Ok(lam_check(&ring, &a))
    }
}

pub fn run(condition: Condition, args: &[String], ring: Option<&str>) -> Result<String, CliError> {
    if args.len() != arity(condition) {
        return Err(CliError::Input(format!(
            "expected {} argument(s), got {}",
            arity(condition),
            args.len()
        )));
    }
    let desc: Option<RingDescriptor> = ring.map(str::parse).transpose()?;
    match condition {
        Condition::StableRange => {
            let cert = stable_range_one(parse_u64(&args[0])?)?;
            if cert.verdict {
                Ok(json!({ "verdict": true }).to_string())
            } else {
                let (x, b) = cert
                    .counterexample
                    .expect("false verdict stores a counterexample");
                Err(CliError::Verdict(
                    json!({ "verdict": false, "counterexample": [x.to_string(), b.to_string()] })
                        .to_string(),
                ))
            }
        }
        Condition::Adequate | Condition::PmSplit => {
            match split_ring(desc.unwrap_or(RingDescriptor::Integers))? {
                SplitRing::Int => splits(Integers, condition, args),
                SplitRing::Poly(f) => splits(f, condition, args),
                SplitRing::Zloc => splits(LocalizedIntegers, condition, args),
            }
        }
        Condition::PmWitness => {
            let (r, s) = pm_witness(
                parse_u64(&args[0])?,
                parse_u64(&args[1])?,
                parse_u64(&args[2])?,
            )?;
            Ok(json!({ "r": r.to_string(), "s": s.to_string() }).to_string())
        }
        Condition::FecklyClean => {
            let desc = desc.unwrap_or(RingDescriptor::LocalizedIntegers);
            if desc != RingDescriptor::LocalizedIntegers {
                return Err(CliError::Unsupported(format!(
                    "feckly-clean runs over zloc23, not {desc}"
                )));
            }
            let l = LocalizedIntegers;
            let w = feckly_clean_decompose(&l.parse_elem(&args[0])?)?;
            Ok(json!({ "e": l.format_elem(&w.e), "unit": l.format_elem(&w.unit) }).to_string())
        }
        Condition::Lam => {
            let verdict = desc
                .unwrap_or(RingDescriptor::Integers)
                .visit(LamVisitor(&args[0]))??;
            let out = json!({ "verdict": verdict }).to_string();
            if verdict {
                Ok(out)
            } else {
                Err(CliError::Verdict(out))
            }
        }
    }
}
