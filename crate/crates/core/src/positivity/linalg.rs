//! Fraction-free (Bareiss) elimination over any [`Ring`] with exact division.

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::Ring;

/// One elimination step on `a` with pivot row/column `k`; every division is exact.
fn eliminate<R: Ring>(a: &mut [Vec<R>], k: usize, prev: &R) {
    let n = a.len();
    for i in k + 1..n {
        for j in k + 1..n {
            let v = a[i][j].clone() * a[k][k].clone() - a[i][k].clone() * a[k][j].clone();
            a[i][j] = v.exact_div(prev);
        }
        a[i][k] = R::zero();
    }
}

/// Determinant by Bareiss elimination with row swaps on zero pivots.
pub fn bareiss_det<R: Ring>(m: &Matrix<R>) -> Result<R> {
    if !m.is_square() {
        return Err(Error::Shape(format!(
            "determinant of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    if n == 0 {
        return Ok(R::one());
    }
    let mut a = m.to_rows();
    let mut negate = false;
    let mut prev = R::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    negate = !negate;
                }
                None => return Ok(R::zero()),
            }
        }
        eliminate(&mut a, k, &prev);
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if negate { -det } else { det })
}

/// All leading principal minors d_1, …, d_n of a square matrix.
///
/// Without pivoting the k-th Bareiss pivot is exactly the k-th leading minor.
/// Once a pivot vanishes the remaining minors are computed one by one.
pub fn leading_minors<R: Ring>(m: &Matrix<R>) -> Result<Vec<R>> {
    if !m.is_square() {
        return Err(Error::Shape(format!(
            "minors of a {}x{} matrix",
            m.rows(),
            m.cols()
        )));
    }
    let n = m.rows();
    let mut a = m.to_rows();
    let mut minors = Vec::with_capacity(n);
    let mut prev = R::one();
    for k in 0..n {
        let pivot = a[k][k].clone();
        minors.push(pivot.clone());
        if pivot.is_zero() {
            for size in k + 2..=n {
                minors.push(bareiss_det(&m.leading(size))?);
            }
            return Ok(minors);
        }
        eliminate(&mut a, k, &prev);
        prev = pivot;
    }
    Ok(minors)
}
