//! Small exact determinants.
//!
//! Two routes are provided. `determinant` works over any commutative ring
//! (polynomial matrices included) by Laplace expansion with memoized minors,
//! fine for the ranks that occur here (at most ~12). `rational_determinant`
//! is the fast path for scalar matrices: fraction-free is unnecessary over
//! the rationals, plain Gaussian elimination is exact.

use num_traits::{One, Zero};
use std::ops::{Add, Mul, Neg, Sub};

use crate::rational::Rational;

/// Determinant over a commutative ring, by column-subset dynamic
/// programming (memoized Laplace expansion along rows).
pub fn determinant<T>(rows: &[Vec<T>]) -> T
where
    T: Clone + Zero + One + Add<Output = T> + Sub<Output = T> + Mul<Output = T> + Neg<Output = T>,
{
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
    if n == 0 {
        return T::one();
    }
    assert!(n <= 20, "determinant table grows as 2^n");
    // minors[mask] = det of the top |mask| rows restricted to columns in mask
    let mut minors: Vec<Option<T>> = vec![None; 1usize << n];
    minors[0] = Some(T::one());
    for mask in 1usize..(1 << n) {
        let row = (mask.count_ones() - 1) as usize;
        let mut acc = T::zero();
        let mut pos = 0usize; // index of col within the mask's column set
        for col in 0..n {
            if mask & (1 << col) == 0 {
                continue;
            }
            let entry = &rows[row][col];
            if !entry.is_zero() {
                let sub = minors[mask ^ (1 << col)]
                    .as_ref()
                    .expect("minor computed earlier")
                    .clone();
                let term = entry.clone() * sub;
                acc = if (row + pos) % 2 == 0 {
                    acc + term
                } else {
                    acc - term
                };
            }
            pos += 1;
        }
        minors[mask] = Some(acc);
    }
    minors[(1 << n) - 1].take().unwrap()
}

/// Exact determinant of a rational matrix by Gaussian elimination with
/// row pivoting.
pub fn rational_determinant(rows: &[Vec<Rational>]) -> Rational {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
    let mut m: Vec<Vec<Rational>> = rows.to_vec();
    let mut det = Rational::one();
    for col in 0..n {
        let Some(pivot_row) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rational::zero();
        };
        if pivot_row != col {
            m.swap(pivot_row, col);
            det = -det;
        }
        let pivot = m[col][col].clone();
        det = det * pivot.clone();
        let inv = pivot.recip().unwrap();
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] * &inv;
            for c in col..n {
                let delta = &factor * &m[col][c];
                m[r][c] = &m[r][c] - &delta;
            }
        }
    }
    det
}
