use bezout_core::diagonal::{diagonal_reduce, kaplansky_step};
use bezout_core::matrices::{realize, ElementaryOp, Matrix, OpTranscript};
use bezout_core::rings::{
    BezoutRing, Integers, LocalizedIntegers, ModularIntegers, PolyOverPrimeField,
    RationalQuaternions, Ring,
};
use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn elems<R: Ring>(ring: &R, seed: u64, n: usize, scale: u32) -> Vec<R::Elem> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..n).map(|_| ring.sample(&mut rng, scale)).collect()
}

fn matrix<R: Ring>(ring: &R, seed: u64, rows: usize, cols: usize, scale: u32) -> Matrix<R> {
    Matrix::new(
        ring.clone(),
        rows,
        cols,
        elems(ring, seed, rows * cols, scale),
    )
    .unwrap()
}

fn ring_axioms<R: Ring>(ring: &R, seed: u64, scale: u32) {
    let v = elems(ring, seed, 3, scale);
    let (a, b, c) = (&v[0], &v[1], &v[2]);
    assert_eq!(ring.add(&ring.add(a, b), c), ring.add(a, &ring.add(b, c)));
    assert_eq!(ring.mul(&ring.mul(a, b), c), ring.mul(a, &ring.mul(b, c)));
    assert_eq!(
        ring.mul(a, &ring.add(b, c)),
        ring.add(&ring.mul(a, b), &ring.mul(a, c))
    );
    assert_eq!(
        ring.mul(&ring.add(a, b), c),
        ring.add(&ring.mul(a, c), &ring.mul(b, c))
    );
    assert!(ring.is_zero(&ring.add(a, &ring.neg(a))));
    assert_eq!(ring.mul(a, &ring.one()), a.clone());
    if ring.is_commutative() {
        assert_eq!(ring.mul(a, b), ring.mul(b, a));
    }
    if let Some(inv) = ring.inverse(a) {
        assert!(ring.is_one(&ring.mul(a, &inv)) && ring.is_one(&ring.mul(&inv, a)));
    }
    let (unit, canon) = ring.canonical_associate(a);
    assert_eq!(ring.mul(&unit, &canon), a.clone());
    assert!(ring.is_unit(&unit));
    assert!(ring.associates(&canon, a));
    assert_eq!(ring.canonical(&canon), canon);
}

fn gcd_identity<R: BezoutRing>(ring: &R, seed: u64, scale: u32) {
    let v = elems(ring, seed, 2, scale);
    let w = ring.extended_gcd(&v[0], &v[1]);
    assert_eq!(
        ring.add(&ring.mul(&v[0], &w.x), &ring.mul(&v[1], &w.y)),
        w.d
    );
    assert!(ring.divides(&w.d, &v[0]) && ring.divides(&w.d, &v[1]));
    assert_eq!(ring.canonical(&w.d), w.d);
}

fn reduction_invariants<R: BezoutRing>(ring: &R, seed: u64, rows: usize, cols: usize, scale: u32) {
    let a = matrix(ring, seed, rows, cols, scale);
    let r = diagonal_reduce(&a).unwrap();
    r.verify(&a).unwrap();
    assert_eq!(r.chain.len(), rows.min(cols));
    // Reducing D again changes nothing.
    let again = diagonal_reduce(&r.d).unwrap();
    assert_eq!(again.d, r.d);
}

fn random_ops<R: Ring>(ring: &R, seed: u64, n: usize, count: usize) -> OpTranscript<R::Elem> {
    let factors = elems(ring, seed, count, 5);
    let mut t = OpTranscript::new();
    for (k, factor) in factors.into_iter().enumerate() {
        let (i, j) = (k % n, (k + 1) % n);
        t.push(match k % 4 {
            0 => ElementaryOp::AddLeftMultiple {
                target: i,
                source: j,
                factor,
            },
            1 => ElementaryOp::AddRightMultiple {
                target: j,
                source: i,
                factor,
            },
            2 => ElementaryOp::SwapRows(i, j),
            _ => ElementaryOp::SwapCols(i, j),
        });
    }
    t
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn axioms_hold(seed in any::<u64>()) {
        ring_axioms(&Integers, seed, 1000);
        ring_axioms(&PolyOverPrimeField::new(7).unwrap(), seed, 5);
        ring_axioms(&LocalizedIntegers, seed, 100);
        ring_axioms(&ModularIntegers::new(36).unwrap(), seed, 0);
        ring_axioms(&RationalQuaternions, seed, 5);
    }

    #[test]
    fn extended_gcd_is_a_witness(seed in any::<u64>()) {
        gcd_identity(&Integers, seed, 10_000);
        gcd_identity(&PolyOverPrimeField::new(3).unwrap(), seed, 6);
        gcd_identity(&LocalizedIntegers, seed, 500);
        gcd_identity(&ModularIntegers::new(60).unwrap(), seed, 0);
    }

    #[test]
    fn op_inverse_undoes_op(seed in any::<u64>(), n in 2usize..5) {
        let z = Integers;
        let a = matrix(&z, seed, n, n, 30);
        for op in random_ops(&z, seed ^ 1, n, 8).left_ops.iter().chain(&random_ops(&z, seed ^ 1, n, 8).right_ops) {
            let back = a.apply(op).unwrap().apply(&op.inverse(&z).unwrap()).unwrap();
            prop_assert_eq!(back, a.clone());
        }
    }

    #[test]
    fn realize_matches_replay(seed in any::<u64>(), n in 2usize..5) {
        let z = Integers;
        let a = matrix(&z, seed, n, n, 30);
        let t = random_ops(&z, seed ^ 2, n, 12);
        let r = realize(&z, &t, n, n).unwrap();
        prop_assert_eq!(r.p.mul(&a).unwrap().mul(&r.q).unwrap(), t.replay(&a).unwrap());
        prop_assert!(r.p.mul(&r.p_inv).unwrap().is_identity());
        prop_assert!(r.q_inv.mul(&r.q).unwrap().is_identity());
    }

    #[test]
    fn diagonal_reduction_integers(seed in any::<u64>(), rows in 1usize..5, cols in 1usize..5) {
        reduction_invariants(&Integers, seed, rows, cols, 40);
    }

    #[test]
    fn diagonal_reduction_other_rings(seed in any::<u64>(), rows in 1usize..4, cols in 1usize..4) {
        reduction_invariants(&PolyOverPrimeField::new(5).unwrap(), seed, rows, cols, 3);
        reduction_invariants(&LocalizedIntegers, seed, rows, cols, 40);
        reduction_invariants(&ModularIntegers::new(12).unwrap(), seed, rows, cols, 0);
        reduction_invariants(&RationalQuaternions, seed, rows.min(2), cols.min(2), 3);
    }

    #[test]
    fn kaplansky_identities(a in -5000i64..5000, b in -5000i64..5000, c in -5000i64..5000) {
        let z = Integers;
        let (a, b, c) = (BigInt::from(a), BigInt::from(b), BigInt::from(c));
        prop_assume!(z.is_one(&z.gcd(&z.gcd(&a, &b), &c)));
        let w = kaplansky_step(&z, &a, &b, &c).unwrap();
        prop_assert!(z.is_one(&z.gcd(&(&w.p * &a + &w.q * &b), &(&w.q * &c))));
        prop_assert!(z.is_one(&(&w.r * &a + &w.s * &b + &w.t * &c)));
        prop_assert_eq!(&w.r * &w.t, &w.s * &w.rt_quotient);
    }
}
