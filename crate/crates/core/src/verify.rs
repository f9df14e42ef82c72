//! Independent checks of reduction output against determinantal data.
//!
//! Over a commutative domain the product of the first `k` chain entries
//! generates the same ideal as the `k×k` minors of the input, which pins
//! the chain down up to units.

use crate::matrices::Matrix;
use crate::rings::{BezoutRing, Ring};

/// Determinant by cofactor expansion along the first row.
pub fn determinant<R: Ring>(m: &Matrix<R>) -> R::Elem {
    assert_eq!(m.rows(), m.cols(), "determinant of a non-square matrix");
    let idx: Vec<usize> = (0..m.rows()).collect();
    minor(m, &idx, &idx)
}

fn minor<R: Ring>(m: &Matrix<R>, rows: &[usize], cols: &[usize]) -> R::Elem {
    let ring = m.ring();
    match rows.len() {
        0 => ring.one(),
        1 => m.get(rows[0], cols[0]).clone(),
        _ => {
            let mut acc = ring.zero();
            for (k, &c) in cols.iter().enumerate() {
                let entry = m.get(rows[0], c);
                if ring.is_zero(entry) {
                    continue;
                }
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let term = ring.mul(entry, &minor(m, &rows[1..], &rest));
                acc = if k % 2 == 0 {
                    ring.add(&acc, &term)
                } else {
                    ring.sub(&acc, &term)
                };
            }
            acc
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![vec![]];
    }
    if k > n {
        return vec![];
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Canonical gcd of all `k×k` minors; `1` for `k = 0`.
pub fn minor_gcd<R: BezoutRing>(a: &Matrix<R>, k: usize) -> R::Elem {
    let ring = a.ring();
    let mut g = ring.zero();
    for rows in subsets(a.rows(), k) {
        for cols in subsets(a.cols(), k) {
            g = ring.gcd(&g, &minor(a, &rows, &cols));
        }
    }
    if k == 0 {
        ring.one()
    } else {
        ring.canonical(&g)
    }
}

/// Whether every prefix product of `chain` is associate to the matching
/// minor gcd of `a`.
pub fn chain_matches_minors<R: BezoutRing>(a: &Matrix<R>, chain: &[R::Elem]) -> bool {
    let ring = a.ring();
    let mut prefix = ring.one();
    chain.iter().enumerate().all(|(i, c)| {
        prefix = ring.mul(&prefix, c);
        ring.associates(&prefix, &minor_gcd(a, i + 1))
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::Integers;
    use num_bigint::BigInt;

    #[test]
    fn determinants() {
        let m = Matrix::from_i64(Integers, &[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]]).unwrap();
        assert_eq!(determinant(&m), BigInt::from(6));
        assert_eq!(determinant(&Matrix::zeros(Integers, 0, 0)), BigInt::from(1));
    }

    #[test]
    fn minors_of_two_by_two() {
        let m = Matrix::from_i64(Integers, &[&[2, 4], &[6, 8]]).unwrap();
        assert_eq!(minor_gcd(&m, 1), BigInt::from(2));
        assert_eq!(minor_gcd(&m, 2), BigInt::from(8));
        assert!(chain_matches_minors(
            &m,
            &[BigInt::from(2), BigInt::from(4)]
        ));
        assert!(!chain_matches_minors(
            &m,
            &[BigInt::from(1), BigInt::from(8)]
        ));
        assert_eq!(subsets(4, 2).len(), 6);
    }
}
