//! Bundled invariant suites, sized to finish in a few seconds.

use bezout_core::batch::{map_indexed, Execution};
use bezout_core::conditions::{
    adequate_split, feckly_clean_decompose, pm_split, pm_witness_sweep, stable_range_sweep,
    IDEMPOTENT_LIFTS,
};
use bezout_core::diagonal::{
    diagonal_reduce, kaplansky_step, mspec_pivot_loop, reduce_mod_jacobson,
};
use bezout_core::matrices::{
    elementary_product_closed_form, theorem21_factorization, ElementaryOp, Matrix,
};
use bezout_core::rings::{
    BezoutRing, Integers, LocalizedIntegers, ModularIntegers, PolyOverPrimeField,
    RationalQuaternions, Ring,
};
use bezout_core::verify::chain_matches_minors;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::CliError;

type Outcome = Result<String, String>;

pub const SUITES: [&str; 7] = [
    "minors",
    "transforms",
    "factorization",
    "kaplansky",
    "stable-range",
    "splits",
    "cross-check",
];

fn ensure(ok: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(what())
    }
}

fn random_matrix<R: Ring, G: Rng>(
    ring: &R,
    rng: &mut G,
    rows: usize,
    cols: usize,
    scale: u32,
) -> Matrix<R> {
    let entries = (0..rows * cols).map(|_| ring.sample(rng, scale)).collect();
    Matrix::new(ring.clone(), rows, cols, entries).expect("shape")
}

fn minors(rng: &mut ChaCha8Rng) -> Outcome {
    let mut n = 0;
    for (rows, cols) in [(2, 2), (2, 3), (3, 3)] {
        for _ in 0..40 {
            let a = random_matrix(&Integers, rng, rows, cols, 20);
            let r = diagonal_reduce(&a).map_err(|e| e.to_string())?;
            ensure(chain_matches_minors(&a, &r.chain), || {
                format!("chain disagrees with minors of\n{a}")
            })?;
            n += 1;
        }
    }
    Ok(format!("{n} integer matrices"))
}

fn check_transforms<R: BezoutRing, G: Rng>(
    ring: &R,
    rng: &mut G,
    count: usize,
    scale: u32,
) -> Result<usize, String> {
    for i in 0..count {
        let (rows, cols) = [(2, 2), (2, 3), (3, 2)][i % 3];
        let a = random_matrix(ring, rng, rows, cols, scale);
        let r = diagonal_reduce(&a).map_err(|e| e.to_string())?;
        r.verify(&a).map_err(|e| format!("{e} on\n{a}"))?;
    }
    Ok(count)
}

fn transforms(rng: &mut ChaCha8Rng) -> Outcome {
    let mut n = check_transforms(&PolyOverPrimeField::new(5).unwrap(), rng, 30, 4)?;
    n += check_transforms(&LocalizedIntegers, rng, 30, 50)?;
    n += check_transforms(&ModularIntegers::new(12).unwrap(), rng, 30, 0)?;
    n += check_transforms(&RationalQuaternions, rng, 15, 3)?;
    Ok(format!("{n} matrices over four instances"))
}

fn factorization(rng: &mut ChaCha8Rng) -> Outcome {
    let h = RationalQuaternions;
    for _ in 0..50 {
        let s = loop {
            let s = h.sample(rng, 3);
            if !h.is_zero(&s) {
                break s;
            }
        };
        let w = loop {
            let w = h.sample(rng, 3);
            if !h.is_zero(&w) {
                break w;
            }
        };
        let t = h.inverse(&h.mul(&s, &w)).expect("nonzero");
        let f = theorem21_factorization(&h, &s, &t, &w).map_err(|e| e.to_string())?;
        ensure(f.holds(), || "quaternion factorization".into())?;
    }
    for _ in 0..50 {
        let [s, t, w] = [0; 3].map(|_| BigInt::from(rng.gen_range(-9i64..=9)));
        let closed = elementary_product_closed_form(&Integers, &s, &t, &w);
        let wt = &w * &t;
        let mut product = Matrix::identity(Integers, 2);
        for (target, source, factor) in [
            (0, 1, &wt - 1),
            (1, 0, BigInt::from(1)),
            (0, 1, &s - 1),
            (1, 0, -wt.clone()),
        ] {
            product
                .apply_in_place(&ElementaryOp::AddLeftMultiple {
                    target,
                    source,
                    factor,
                })
                .unwrap();
        }
        ensure(product == closed, || {
            format!("closed form for ({s}, {t}, {w})")
        })?;
    }
    Ok("50 unit triples, 50 closed forms".into())
}

fn kaplansky(rng: &mut ChaCha8Rng) -> Outcome {
    let mut n = 0;
    while n < 200 {
        let [a, b, c] = [0; 3].map(|_| BigInt::from(rng.gen_range(-500i64..=500)));
        let z = Integers;
        if !z.is_one(&z.gcd(&z.gcd(&a, &b), &c)) {
            continue;
        }
        let w = kaplansky_step(&z, &a, &b, &c).map_err(|e| e.to_string())?;
        let e = &w.p * &a + &w.q * &b;
        ensure(z.is_one(&z.gcd(&e, &(&w.q * &c))), || {
            format!("({a}, {b}, {c})")
        })?;
        ensure(z.is_one(&(&w.r * &a + &w.s * &b + &w.t * &c)), || {
            format!("triple for ({a}, {b}, {c})")
        })?;
        n += 1;
    }
    Ok(format!("{n} comaximal triples"))
}

fn stable_range() -> Outcome {
    let certs = stable_range_sweep(Execution::default(), 2, 120).map_err(|e| e.to_string())?;
    let bad = certs.iter().find(|c| !c.verdict);
    ensure(bad.is_none(), || {
        format!("Z/{} fails", bad.unwrap().modulus)
    })?;
    Ok(format!(
        "Z/n for 2 ≤ n ≤ 120, {} pairs",
        certs.iter().map(|c| c.pairs_checked).sum::<u64>()
    ))
}

fn splits(rng: &mut ChaCha8Rng) -> Outcome {
    let z = Integers;
    for _ in 0..200 {
        let a = BigInt::from(rng.gen_range(1i64..=100_000));
        let b = BigInt::from(rng.gen_range(-1000i64..=1000));
        let s = adequate_split(&z, &a, &b).map_err(|e| e.to_string())?;
        ensure(&s.r * &s.s == a && z.is_one(&z.gcd(&s.r, &b)), || {
            format!("adequate ({a}, {b})")
        })?;
        let c = &b + 1;
        let p = pm_split(&z, &a, &b, &c).map_err(|e| e.to_string())?;
        ensure(
            &p.r * &p.s == a && z.is_one(&z.gcd(&p.r, &b)) && z.is_one(&z.gcd(&p.s, &c)),
            || format!("pm split ({a}, {b}, {c})"),
        )?;
    }
    let pairs = pm_witness_sweep(Execution::default(), 30).map_err(|e| e.to_string())?;
    let l = LocalizedIntegers;
    for k in 0..6 {
        let w = feckly_clean_decompose(&l.from_i64(k)).map_err(|e| e.to_string())?;
        ensure(
            IDEMPOTENT_LIFTS.iter().any(|&e| l.from_i64(e) == w.e),
            || format!("lift for {k}"),
        )?;
    }
    Ok(format!(
        "200 adequate, 200 PM splits, {pairs} PM witnesses, 6 residues"
    ))
}

fn cross_check(rng: &mut ChaCha8Rng) -> Outcome {
    for _ in 0..100 {
        let a = random_matrix(&Integers, rng, 2, 2, 30);
        let x = mspec_pivot_loop(&a).map_err(|e| e.to_string())?;
        let y = diagonal_reduce(&a).map_err(|e| e.to_string())?;
        ensure(x.chain == y.chain, || {
            format!("pivot loop disagrees on\n{a}")
        })?;
    }
    for _ in 0..50 {
        let a = random_matrix(&LocalizedIntegers, rng, 2, 2, 40);
        let x = reduce_mod_jacobson(&a).map_err(|e| e.to_string())?;
        let y = diagonal_reduce(&a).map_err(|e| e.to_string())?;
        ensure(x.chain == y.chain, || {
            format!("mod-J reduction disagrees on\n{a}")
        })?;
    }
    Ok("100 integer and 50 localized matrices".into())
}

fn run_suite(name: &str, seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match name {
        "minors" => minors(&mut rng),
        "transforms" => transforms(&mut rng),
        "factorization" => factorization(&mut rng),
        "kaplansky" => kaplansky(&mut rng),
        "stable-range" => stable_range(),
        "splits" => splits(&mut rng),
        "cross-check" => cross_check(&mut rng),
        _ => unreachable!("suite names are validated"),
    }
}

pub fn run(suite: Option<&str>, seed: u64) -> Result<String, CliError> {
    let names: Vec<&str> = match suite {
        Some(s) if SUITES.contains(&s) => vec![s],
        Some(s) => {
            return Err(CliError::Input(format!(
                "unknown suite {s:?}; expected one of {}",
                SUITES.join(", ")
            )))
        }
        None => SUITES.to_vec(),
    };
    let outcomes = map_indexed(Execution::default(), names.len(), |i| {
        run_suite(names[i], seed)
    });
    let mut lines = Vec::new();
    let mut passed = 0;
    for (name, outcome) in names.iter().zip(&outcomes) {
        match outcome {
            Ok(detail) => {
                passed += 1;
                lines.push(format!("PASS {name}: {detail}"));
            }
            Err(why) => lines.push(format!("FAIL {name}: {why}")),
        }
    }
    lines.push(format!("{passed}/{} suites passed", names.len()));
    let report = lines.join("\n");
    if passed == names.len() {
        Ok(report)
    } else {
        Err(CliError::Verdict(report))
    }
}
