//! Oracle suites shared by the `oracles` tests and the acceptance target.
//! Each returns the first disagreement as an error message.

use cesaro_core::operators::{b_entry, pb_closed_form};
use cesaro_core::positivity::{bareiss_det, ldlt_minors, leading_minors, Classification};
use cesaro_core::scalar::{int, rat};
use cesaro_core::{Matrix, Rational};
use num_traits::{Signed, Zero};
use rand::Rng;

use super::{cofactor_det, principal_minors, quadratic_form, random_matrix, random_rational, rng};

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

pub const SAMPLE_ALPHAS: [(i64, i64); 6] = [(-1, 2), (0, 1), (1, 3), (1, 2), (1, 1), (5, 2)];

pub fn sample_alphas() -> Vec<Rational> {
    SAMPLE_ALPHAS.iter().map(|&(n, d)| rat(n, d)).collect()
}

pub fn bareiss_vs_cofactor(trials: usize, seed: u64) -> Result<(), String> {
    let mut r = rng(seed);
    for trial in 0..trials {
        let mut rows = random_matrix(&mut r, 4, 4).to_rows();
        // Every fourth trial forces a zero leading pivot or a repeated row.
        match trial % 8 {
            0 => rows[0][0] = Rational::zero(),
            4 => rows[3] = rows[1].clone(),
            _ => {}
        }
        let m = Matrix::from_rows(rows).unwrap();
        let got = bareiss_det(&m).map_err(|e| e.to_string())?;
        let want = cofactor_det(&m.to_rows());
        ensure!(
            got == want,
            "trial {trial}: bareiss {got} vs cofactor {want}"
        );
        let minors = leading_minors(&m).map_err(|e| e.to_string())?;
        for (k, d) in minors.iter().enumerate() {
            let want = cofactor_det(&m.leading(k + 1).to_rows());
            ensure!(
                *d == want,
                "trial {trial}: leading minor {} is {d}, cofactor gives {want}",
                k + 1
            );
        }
    }
    Ok(())
}

fn random_symmetric(r: &mut impl Rng, trial: usize) -> Matrix<Rational> {
    match trial % 3 {
        0 => {
            let a = random_matrix(r, 4, 4);
            Matrix::from_fn(4, 4, |i, j| a.get(i.min(j), i.max(j)).clone())
        }
        // Gram matrices: PSD, singular when the factor has rank below 4.
        1 => {
            let b = random_matrix(r, 4, 4);
            b.transpose().mul(&b).unwrap()
        }
        _ => {
            let b = random_matrix(r, 2, 4);
            b.transpose().mul(&b).unwrap()
        }
    }
}

/// Classification against all principal minors, leading minors against
/// cofactor expansion, and the verdict against the quadratic form on 100
/// random vectors. Returns how many matrices fell in each class.
pub fn ldlt_vs_brute_force(trials: usize, seed: u64) -> Result<[usize; 3], String> {
    let mut r = rng(seed);
    let mut seen = [0usize; 3];
    for trial in 0..trials {
        let m = random_symmetric(&mut r, trial);
        let report = ldlt_minors(&m).map_err(|e| e.to_string())?;
        let all = principal_minors(&m);
        let expected = if all.iter().all(Signed::is_positive) {
            Classification::PositiveDefinite
        } else if all.iter().all(|d| !d.is_negative()) {
            Classification::PositiveSemidefinite
        } else {
            Classification::Indefinite
        };
        ensure!(
            report.classification == expected,
            "trial {trial}: {:?} vs brute force {:?}",
            report.classification,
            expected
        );
        seen[expected as usize] += 1;

        let leading: Vec<Rational> = (1..=4)
            .map(|k| cofactor_det(&m.leading(k).to_rows()))
            .collect();
        ensure!(
            report.minors == leading,
            "trial {trial}: leading minors differ"
        );
        ensure!(
            report.first_violation.is_none() == report.is_positive_definite(),
            "trial {trial}: first_violation inconsistent with verdict"
        );

        for _ in 0..100 {
            let mut x: Vec<Rational> = (0..4).map(|_| random_rational(&mut r)).collect();
            if x.iter().all(Zero::is_zero) {
                x[0] = int(1);
            }
            let q = quadratic_form(&m, &x);
            match expected {
                Classification::PositiveDefinite => {
                    ensure!(q.is_positive(), "trial {trial}: x'Ax = {q} on a PD matrix")
                }
                Classification::PositiveSemidefinite => {
                    ensure!(
                        !q.is_negative(),
                        "trial {trial}: x'Ax = {q} on a PSD matrix"
                    )
                }
                Classification::Indefinite => {}
            }
        }
    }
    Ok(seen)
}

/// b_ij recomputed from the case formula, independent of the library generator.
pub fn b_oracle(a: &Rational, i: usize, j: usize) -> Rational {
    let (i, j) = (i as i64, j as i64);
    let den = (int(j + 3) + a) * (int(j + 4) + a);
    if j > i - 2 {
        int(2) * (int(j + 1 - 3 * i) - int(2) * a) / den
    } else if j == i - 2 {
        (int(j + 1) + a) * (int(j + 2) + a) / den
    } else {
        Rational::zero()
    }
}

/// pB(i, j) against Σ_k b_ki b_kj for all i, j ≤ `max_index`.
pub fn pb_vs_column_sums(alpha: &Rational, max_index: usize) -> Result<(), String> {
    // Column j of B vanishes below row j + 2, so `depth` rows cover every term.
    let depth = max_index + 3;
    let b = Matrix::from_fn(depth, max_index + 1, |k, j| b_oracle(alpha, k, j));
    for k in 0..depth {
        for j in 0..=max_index {
            ensure!(
                b.get(k, j) == &b_entry(alpha, k, j),
                "alpha={alpha}: b_entry({k},{j}) differs from formula"
            );
        }
    }
    for i in 0..=max_index {
        for j in 0..=max_index {
            let sum = (0..depth).fold(Rational::zero(), |acc, k| acc + b.get(k, i) * b.get(k, j));
            let closed = pb_closed_form(alpha, i, j);
            ensure!(
                closed == sum,
                "alpha={alpha} ({i},{j}): closed form {closed} vs column sum {sum}"
            );
        }
    }
    Ok(())
}
