//! Data-parallel drivers for independent work items.
//!
//! With the `parallel` feature (on by default) [`Execution::Parallel`] runs
//! on the rayon pool; without it every mode runs sequentially.

use crate::diagonal::{diagonal_reduce, ReductionResult};
use crate::error::Result;
use crate::matrices::Matrix;
use crate::rings::BezoutRing;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Execution {
    Sequential,
    Parallel,
}

impl Default for Execution {
    fn default() -> Self {
        if cfg!(feature = "parallel") {
            Execution::Parallel
        } else {
            Execution::Sequential
        }
    }
}

/// `f(0), ..., f(n-1)` in index order.
pub fn map_indexed<T, F>(exec: Execution, n: usize, f: F) -> Vec<T>
where
    T: Send,
    F: Fn(usize) -> T + Sync + Send,
{
    match exec {
        #[cfg(feature = "parallel")]
        Execution::Parallel => {
            use rayon::prelude::*;
            (0..n).into_par_iter().map(f).collect()
        }
        _ => (0..n).map(f).collect(),
    }
}

/// Reduces every matrix independently.
pub fn reduce_batch<R: BezoutRing>(
    exec: Execution,
    mats: &[Matrix<R>],
) -> Vec<Result<ReductionResult<R>>> {
    map_indexed(exec, mats.len(), |i| diagonal_reduce(&mats[i]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::Integers;

    #[test]
    fn modes_agree() {
        let mats: Vec<_> = (1..20i64)
            .map(|k| Matrix::from_i64(Integers, &[&[k, 2 * k + 1], &[k * k, 6]]).unwrap())
            .collect();
        let seq = reduce_batch(Execution::Sequential, &mats);
        let par = reduce_batch(Execution::Parallel, &mats);
        assert_eq!(seq, par);
        assert_eq!(
            map_indexed(Execution::Parallel, 5, |i| i * i),
            vec![0, 1, 4, 9, 16]
        );
    }
}
