#![allow(dead_code)]

pub mod suites;

use cesaro_core::scalar::{rat, Rational};
use cesaro_core::Matrix;
use num_traits::Zero;
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_rational(rng: &mut impl Rng) -> Rational {
    rat(rng.gen_range(-9..=9), rng.gen_range(1..=6))
}

pub fn random_matrix(rng: &mut impl Rng, rows: usize, cols: usize) -> Matrix<Rational> {
    Matrix::from_fn(rows, cols, |_, _| random_rational(rng))
}

/// Laplace expansion along the first row; the oracle for every determinant.
pub fn cofactor_det(m: &[Vec<Rational>]) -> Rational {
    let n = m.len();
    if n == 0 {
        return rat(1, 1);
    }
    let mut acc = Rational::zero();
    for c in 0..n {
        if m[0][c].is_zero() {
            continue;
        }
        let minor: Vec<Vec<Rational>> = m[1..]
            .iter()
            .map(|row| {
                row.iter()
                    .enumerate()
                    .filter(|&(j, _)| j != c)
                    .map(|(_, v)| v.clone())
                    .collect()
            })
            .collect();
        let term = m[0][c].clone() * cofactor_det(&minor);
        acc = if c % 2 == 0 { acc + term } else { acc - term };
    }
    acc
}

/// Determinants of every principal submatrix (all nonempty index subsets).
pub fn principal_minors(m: &Matrix<Rational>) -> Vec<Rational> {
    let n = m.rows();
    (1u32..(1 << n))
        .map(|mask| {
            let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
            let sub: Vec<Vec<Rational>> = idx
                .iter()
                .map(|&i| idx.iter().map(|&j| m.get(i, j).clone()).collect())
                .collect();
            cofactor_det(&sub)
        })
        .collect()
}

pub fn quadratic_form(m: &Matrix<Rational>, x: &[Rational]) -> Rational {
    let mx = m.apply(x).unwrap();
    mx.iter()
        .zip(x)
        .fold(Rational::zero(), |acc, (a, b)| acc + a.clone() * b.clone())
}
