//! Shared fixtures for unit tests: the 2-dimensional reference instance
//! (q = 2, a = a* = 1) whose operator values are frozen from independent
//! hand computation.

use crate::field::FieldConfig;
use crate::pair::{verify_tridiagonal_pair, TridiagonalPair};
use crate::{rat, Mat, Rat};

pub fn q2() -> FieldConfig<Rat> {
    FieldConfig::new(rat(2, 1)).unwrap()
}

/// A = [[1/2, 0], [1, 2]], A* = [[2, 1], [0, 1/2]].
pub fn e1_ops() -> (Mat, Mat) {
    (
        Mat::from_rows(vec![
            vec![rat(1, 2), rat(0, 1)],
            vec![rat(1, 1), rat(2, 1)],
        ]),
        Mat::from_rows(vec![
            vec![rat(2, 1), rat(1, 1)],
            vec![rat(0, 1), rat(1, 2)],
        ]),
    )
}

pub fn e1_pair() -> TridiagonalPair<Rat> {
    let (a, astar) = e1_ops();
    verify_tridiagonal_pair(&a, &astar, &q2(), &rat(1, 1), &rat(1, 1))
        .unwrap()
        .pair
        .expect("reference instance verifies")
}

/// A 1-dimensional pair: every table and relation collapses to scalars.
pub fn d0_pair() -> TridiagonalPair<Rat> {
    let a = Mat::from_rows(vec![vec![rat(1, 1)]]);
    let astar = Mat::from_rows(vec![vec![rat(1, 1)]]);
    verify_tridiagonal_pair(&a, &astar, &q2(), &rat(1, 1), &rat(1, 1))
        .unwrap()
        .pair
        .expect("1-dimensional pair verifies")
}
