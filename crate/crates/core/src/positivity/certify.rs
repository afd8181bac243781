//! Positivity certificates for hyponormality of M.
//!
//! Two routes: the interrupter pair (Q, P) with Q ≥ I ≥ P ≥ 0, and the
//! posinormal route with Q = I and P = B*B, where I − B*B ≥ 0 suffices.
//! Finite sections can refute the second route but never prove it.

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::operators::{c2_p_diag, c2_q_matrix, pb_closed_form, Alpha};
use crate::positivity::definiteness::{ldlt_minors, PositivityReport};
use crate::scalar::{as_string, int, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InterrupterCertificate {
    pub alpha: String,
    pub n: usize,
    /// Every diagonal entry of P on the section is nonnegative.
    pub p_nonnegative: bool,
    pub i_minus_p: PositivityReport,
    pub q_minus_i: PositivityReport,
    pub hyponormal_certified: bool,
}

/// Checks Q ≥ I ≥ P ≥ 0 on the `n × n` section. Beyond index 1, Q − I
/// vanishes and P stays diagonal, so the section decides the operator
/// inequality whenever n ≥ 2.
pub fn certify_interrupter_pair(alpha: &Alpha, n: usize) -> Result<InterrupterCertificate> {
    if n < 2 {
        return Err(Error::Index(format!("certificate needs n >= 2, got {n}")));
    }
    let a = alpha.value();
    let p: Vec<Rational> = (0..n).map(|k| c2_p_diag(a, k)).collect();
    let p_nonnegative = p.iter().all(|v| !v.is_negative());
    let i_minus_p = Matrix::from_fn(n, n, |i, j| {
        if i == j {
            int(1) - p[i].clone()
        } else {
            Rational::zero()
        }
    });
    let q_minus_i = c2_q_matrix(a, n)?.sub(&Matrix::identity(n))?;
    let i_minus_p = ldlt_minors(&i_minus_p)?;
    let q_minus_i = ldlt_minors(&q_minus_i)?;
    let hyponormal_certified = p_nonnegative && i_minus_p.is_psd() && q_minus_i.is_psd();
    Ok(InterrupterCertificate {
        alpha: alpha.to_string(),
        n,
        p_nonnegative,
        i_minus_p,
        q_minus_i,
        hyponormal_certified,
    })
}

/// α = 0 or α ≥ 1: where the (Q, P) certificate is expected to succeed.
pub fn in_certified_region(alpha: &Alpha) -> bool {
    alpha.value().is_zero() || *alpha.value() >= int(1)
}

/// The leading `size` block of I − B*B.
pub fn i_minus_pb_section(alpha: &Alpha, size: usize) -> Matrix<Rational> {
    let a = alpha.value();
    Matrix::from_fn(size, size, |i, j| {
        let delta = if i == j { int(1) } else { Rational::zero() };
        delta - pb_closed_form(a, i, j)
    })
}

/// Leading minors det(S_0), …, det(S_{n_max−1}) of I − B*B and their verdict.
pub fn certify_conjecture_route(alpha: &Alpha, n_max: usize) -> Result<PositivityReport> {
    if n_max < 1 {
        return Err(Error::Index("conjecture route needs n_max >= 1".into()));
    }
    ldlt_minors(&i_minus_pb_section(alpha, n_max))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Severity {
    Info,
    ConjectureCounterexampleCandidate,
}

/// A nonpositive leading minor of I − B*B found during a sweep.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FindingRecord {
    pub alpha: String,
    pub section_size: usize,
    #[serde(serialize_with = "as_string::serialize")]
    pub minor: Rational,
    pub severity: Severity,
}

/// One record per nonpositive minor. Inside 0 < α < 1 such a minor would
/// contradict hyponormality via this route, so it is flagged as a candidate.
pub fn findings(alpha: &Alpha, report: &PositivityReport) -> Vec<FindingRecord> {
    let open_unit = alpha.value().is_positive() && *alpha.value() < int(1);
    report
        .minors
        .iter()
        .enumerate()
        .filter(|(_, d)| !d.is_positive())
        .map(|(k, d)| FindingRecord {
            alpha: alpha.to_string(),
            section_size: k + 1,
            minor: d.clone(),
            severity: if open_unit {
                Severity::ConjectureCounterexampleCandidate
            } else {
                Severity::Info
            },
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::positivity::definiteness::Classification;
    use crate::positivity::dets::det_s_polynomial;

    fn alpha(s: &str) -> Alpha {
        Alpha::parse(s).unwrap()
    }

    #[test]
    fn interrupter_pair_examples() {
        let c = certify_interrupter_pair(&alpha("0"), 10).unwrap();
        assert!(c.hyponormal_certified);
        assert_eq!(
            c.q_minus_i.classification,
            Classification::PositiveSemidefinite
        );
        assert_eq!(c.i_minus_p.classification, Classification::PositiveDefinite);
        assert!(
            certify_interrupter_pair(&alpha("2"), 30)
                .unwrap()
                .hyponormal_certified
        );
        let c = certify_interrupter_pair(&alpha("1/2"), 10).unwrap();
        assert!(!c.hyponormal_certified);
        assert_eq!(c.q_minus_i.classification, Classification::Indefinite);
        let c = certify_interrupter_pair(&alpha("-1/2"), 10).unwrap();
        assert!(!c.hyponormal_certified);
        assert_eq!(c.q_minus_i.first_violation.as_ref().unwrap().size, 1);
        assert!(certify_interrupter_pair(&alpha("1"), 1).is_err());
    }

    #[test]
    fn region_predicate() {
        assert!(in_certified_region(&alpha("0")));
        assert!(in_certified_region(&alpha("1")));
        assert!(!in_certified_region(&alpha("99/100")));
        assert!(!in_certified_region(&alpha("-1/2")));
    }

    #[test]
    fn conjecture_route_small() {
        let r = certify_conjecture_route(&alpha("0"), 10).unwrap();
        assert!(r.is_positive_definite());
        let a = alpha("1/2");
        let r = certify_conjecture_route(&a, 4).unwrap();
        assert!(r.is_positive_definite());
        for n in 0..4 {
            assert_eq!(
                r.minors[n],
                det_s_polynomial(n).unwrap().eval(a.value()).unwrap()
            );
        }
        assert!(findings(&a, &r).is_empty());
    }

    #[test]
    fn findings_severity() {
        let report = PositivityReport {
            size: 2,
            minors: vec![int(1), int(-1)],
            classification: Classification::Indefinite,
            first_violation: None,
        };
        let f = findings(&alpha("1/2"), &report);
        assert_eq!(f.len(), 1);
        assert_eq!(f[0].section_size, 2);
        assert_eq!(f[0].severity, Severity::ConjectureCounterexampleCandidate);
        assert_eq!(findings(&alpha("2"), &report)[0].severity, Severity::Info);
    }
}
