use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::positivity::linalg::leading_minors;
use crate::scalar::{as_string, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    PositiveDefinite,
    PositiveSemidefinite,
    /// Anything that is not positive semidefinite.
    Indefinite,
}

impl Classification {
    pub fn is_psd(self) -> bool {
        self != Classification::Indefinite
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Classification::PositiveDefinite => "positive-definite",
            Classification::PositiveSemidefinite => "positive-semidefinite",
            Classification::Indefinite => "indefinite",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Size of the leading block whose minor is not positive.
    pub size: usize,
    #[serde(serialize_with = "as_string::serialize")]
    pub minor: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PositivityReport {
    /// Leading blocks of sizes 1..=size were checked.
    pub size: usize,
    #[serde(serialize_with = "as_string::serialize_vec")]
    pub minors: Vec<Rational>,
    pub classification: Classification,
    pub first_violation: Option<Violation>,
}

impl PositivityReport {
    pub fn is_positive_definite(&self) -> bool {
        self.classification == Classification::PositiveDefinite
    }

    pub fn is_psd(&self) -> bool {
        self.classification.is_psd()
    }
}

/// Leading principal minors and a PD / PSD / indefinite verdict.
///
/// PD follows from Sylvester's criterion. When some leading minor is not
/// positive, PSD is decided by [`is_psd_ldlt`].
pub fn ldlt_minors(m: &Matrix<Rational>) -> Result<PositivityReport> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let minors = leading_minors(m)?;
    let first_violation = minors
        .iter()
        .position(|d| !d.is_positive())
        .map(|k| Violation {
            size: k + 1,
            minor: minors[k].clone(),
        });
    let classification = match first_violation {
        None => Classification::PositiveDefinite,
        Some(_) if is_psd_ldlt(m)? => Classification::PositiveSemidefinite,
        Some(_) => Classification::Indefinite,
    };
    Ok(PositivityReport {
        size: m.rows(),
        minors,
        classification,
        first_violation,
    })
}

/// Exact LDLᵀ with symmetric (diagonal) pivoting.
///
/// At each stage the Schur complement must have a nonnegative diagonal, a
/// zero diagonal entry must sit in a zero row, and a positive pivot is
/// eliminated. The matrix is PSD iff this runs to completion.
pub fn is_psd_ldlt(m: &Matrix<Rational>) -> Result<bool> {
    if !m.is_symmetric() {
        return Err(Error::NotSymmetric);
    }
    let mut s = m.to_rows();
    loop {
        let n = s.len();
        if n == 0 {
            return Ok(true);
        }
        if s.iter().enumerate().any(|(i, row)| row[i].is_negative()) {
            return Ok(false);
        }
        // Zero diagonal entries force zero rows; drop them.
        let mut keep = Vec::with_capacity(n);
        for (i, row) in s.iter().enumerate() {
            if !row[i].is_zero() {
                keep.push(i);
            } else if row.iter().any(|x| !x.is_zero()) {
                return Ok(false);
            }
        }
        if keep.is_empty() {
            return Ok(true);
        }
        let p = keep[0];
        let pivot = s[p][p].clone();
        let rest: Vec<usize> = keep[1..].to_vec();
        s = rest
            .iter()
            .map(|&i| {
                rest.iter()
                    .map(|&j| s[i][j].clone() - s[i][p].clone() * s[p][j].clone() / pivot.clone())
                    .collect()
            })
            .collect();
    }
}
