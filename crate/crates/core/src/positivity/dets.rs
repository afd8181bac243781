//! Symbolic determinants in α: the 2×2 corner of Q, the leading blocks of
//! Q − I, and the leading blocks S_n of I − B*B.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::operators::{c2_q_matrix, pb_closed_form, symbolic_alpha};
use crate::positivity::linalg::bareiss_det;
use crate::ratfun::{AlphaPoly, AlphaRatFun};
use crate::scalar::{as_string, int, Field, Rational};

/// Reference closed forms the computed determinants are compared against.
pub mod reference {
    use super::*;

    /// (1 + α)(2 + α)²(3 + α) / 12.
    pub fn corner_q_det() -> AlphaRatFun {
        let l = |c: i64| AlphaPoly::linear(int(c));
        AlphaRatFun::new(l(1) * l(2).pow(2) * l(3), AlphaPoly::from_i64s(&[12]))
    }

    /// α(13 + 9α + 2α²)/6 for index 0 and α²(α − 1)(1 + α)/12 for index 1.
    pub fn z_det(index: usize) -> Option<AlphaRatFun> {
        match index {
            0 => Some(AlphaRatFun::new(
                AlphaPoly::from_i64s(&[0, 13, 9, 2]),
                AlphaPoly::from_i64s(&[6]),
            )),
            1 => Some(AlphaRatFun::new(
                AlphaPoly::from_i64s(&[0, 0, 1])
                    * AlphaPoly::from_i64s(&[-1, 1])
                    * AlphaPoly::from_i64s(&[1, 1]),
                AlphaPoly::from_i64s(&[12]),
            )),
            _ => None,
        }
    }

    /// det(S_n) numerators as (prefactor, coefficients constant term first).
    pub fn s_det_numerator(n: usize) -> Option<(i64, &'static [i64])> {
        const S0: [i64; 4] = [120, 140, 28, 8];
        const S1: [i64; 7] = [2100, 4340, 2901, 1004, 234, 38, 3];
        const S2: [i64; 10] = [
            1134000, 3175200, 3319710, 1884493, 686703, 178049, 34359, 4742, 408, 16,
        ];
        const S3: [i64; 13] = [
            1047816000, 3582532800, 4875510240, 3747078072, 1885128129, 675769080, 182338742,
            38146384, 6184561, 750976, 63688, 3328, 80,
        ];
        match n {
            0 => Some((1, &S0)),
            1 => Some((16, &S1)),
            2 => Some((16, &S2)),
            3 => Some((16, &S3)),
            _ => None,
        }
    }

    /// det(S_n) denominators as (c, e) pairs meaning (c + α)^e.
    pub fn s_det_denominator(n: usize) -> Option<&'static [(i64, u32)]> {
        match n {
            0 => Some(&[(3, 2), (4, 2)]),
            1 => Some(&[(3, 2), (4, 4), (5, 2)]),
            2 => Some(&[(3, 2), (4, 4), (5, 4), (6, 2)]),
            3 => Some(&[(3, 2), (4, 4), (5, 4), (6, 4), (7, 2)]),
            _ => None,
        }
    }

    pub fn s_det_polynomial(n: usize) -> Option<AlphaPoly> {
        let (prefactor, coeffs) = s_det_numerator(n)?;
        Some(AlphaPoly::from_i64s(coeffs).scale(&int(prefactor)))
    }
}

/// det of the 2×2 corner of Q.
pub fn det_corner_q<F: Field>(alpha: &F) -> F {
    bareiss_det(&c2_q_matrix(alpha, 2).expect("n = 2")).expect("square")
}

pub fn det_corner_q_symbolic() -> AlphaRatFun {
    det_corner_q(&symbolic_alpha())
}

/// Determinant of Z_index, the leading (index + 1)-block of Q − I.
pub fn det_z<F: Field>(alpha: &F, index: usize) -> Result<F> {
    if index > 1 {
        return Err(Error::Index(format!(
            "Z blocks exist for index 0 and 1, got {index}"
        )));
    }
    let size = index + 1;
    let q = c2_q_matrix(alpha, 2)?.leading(size);
    bareiss_det(&q.sub(&Matrix::identity(size))?)
}

pub fn det_z_symbolic(index: usize) -> Result<AlphaRatFun> {
    det_z(&symbolic_alpha(), index)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DetStatus {
    MatchesReference,
    DiffersFromReference,
    UnverifiedExtension,
}

/// One disagreement between a computed det(S_n) and the reference one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum DetDiff {
    Coefficient {
        power: usize,
        #[serde(serialize_with = "as_string::serialize")]
        computed: Rational,
        #[serde(serialize_with = "as_string::serialize")]
        reference: Rational,
    },
    Denominator {
        computed: Vec<(i64, u32)>,
        reference: Vec<(i64, u32)>,
    },
}

/// `(shift + α)^exponent`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LinearFactor {
    pub shift: i64,
    pub exponent: u32,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DetPolynomial {
    pub n: usize,
    pub numerator: AlphaPoly,
    pub denominator_factors: Vec<LinearFactor>,
    pub status: DetStatus,
}

impl DetPolynomial {
    pub fn denominator(&self) -> AlphaPoly {
        self.denominator_factors
            .iter()
            .fold(AlphaPoly::one(), |acc, f| {
                acc * AlphaPoly::linear(int(f.shift)).pow(f.exponent)
            })
    }

    pub fn to_ratfun(&self) -> AlphaRatFun {
        AlphaRatFun::new(self.numerator.clone(), self.denominator())
    }

    pub fn eval(&self, alpha: &Rational) -> Result<Rational> {
        self.to_ratfun().eval(alpha)
    }
}

/// (i + 3 + α)(i + 4 + α), the row/column scale clearing B*B's denominators.
fn row_scale(i: usize) -> AlphaPoly {
    AlphaPoly::linear(int(i as i64 + 3)) * AlphaPoly::linear(int(i as i64 + 4))
}

/// D (I − B*B) D on the leading `size` block, D = diag(row_scale); the entries
/// are polynomials in α.
pub fn scaled_section(size: usize) -> Matrix<AlphaPoly> {
    let a = symbolic_alpha();
    Matrix::from_fn(size, size, |i, j| {
        let delta = if i == j {
            AlphaRatFun::one()
        } else {
            AlphaRatFun::zero()
        };
        let scale = AlphaRatFun::from_poly(row_scale(i) * row_scale(j));
        let entry = scale * (delta - pb_closed_form(&a, i, j));
        // canonical form has a monic denominator, so a polynomial entry has den = 1
        assert!(
            entry.is_polynomial(),
            "scaled entry ({i}, {j}) is not polynomial"
        );
        entry.num().clone()
    })
}

/// det(S_n) for the (n + 1)-block of I − B*B as numerator over the cleared
/// denominator Π_i (i + 3 + α)²(i + 4 + α)², together with every difference
/// from the reference polynomial. Larger n has no reference and no diff.
pub fn det_s_with_diff(n: usize) -> Result<(DetPolynomial, Vec<DetDiff>)> {
    let numerator = bareiss_det(&scaled_section(n + 1))?;
    let mut exps: BTreeMap<i64, u32> = BTreeMap::new();
    for i in 0..=n as i64 {
        *exps.entry(i + 3).or_default() += 2;
        *exps.entry(i + 4).or_default() += 2;
    }
    let denominator_factors: Vec<LinearFactor> = exps
        .into_iter()
        .map(|(shift, exponent)| LinearFactor { shift, exponent })
        .collect();

    let mut diff = Vec::new();
    let status = match (
        reference::s_det_polynomial(n),
        reference::s_det_denominator(n),
    ) {
        (Some(want), Some(want_den)) => {
            let len = want.coeffs().len().max(numerator.coeffs().len());
            for power in 0..len {
                let (computed, reference) = (numerator.coeff(power), want.coeff(power));
                if computed != reference {
                    diff.push(DetDiff::Coefficient {
                        power,
                        computed,
                        reference,
                    });
                }
            }
            let got_den: Vec<(i64, u32)> = denominator_factors
                .iter()
                .map(|f| (f.shift, f.exponent))
                .collect();
            if got_den != want_den {
                diff.push(DetDiff::Denominator {
                    computed: got_den,
                    reference: want_den.to_vec(),
                });
            }
            if diff.is_empty() {
                DetStatus::MatchesReference
            } else {
                DetStatus::DiffersFromReference
            }
        }
        _ => DetStatus::UnverifiedExtension,
    };
    let det = DetPolynomial {
        n,
        numerator,
        denominator_factors,
        status,
    };
    Ok((det, diff))
}

/// [`det_s_with_diff`] that fails on the first difference from the reference
/// polynomial.
pub fn det_s_polynomial(n: usize) -> Result<DetPolynomial> {
    let (det, diff) = det_s_with_diff(n)?;
    match diff.first() {
        None => Ok(det),
        Some(DetDiff::Coefficient { power, .. }) => {
            Err(Error::CoefficientMismatch { n, index: *power })
        }
        Some(DetDiff::Denominator { .. }) => Err(Error::DenominatorMismatch { n }),
    }
}
