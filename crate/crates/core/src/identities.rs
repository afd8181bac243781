//! Entrywise verification of the operator identities on finite sections.
//!
//! Each check compares two independently computed sides exactly. Infinite
//! series are never truncated: their values come from a verified
//! [`TelescopeWitness`], with a partial sum plus exact remainder as a second
//! route to the same number.

use std::collections::HashMap;

use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::operators::{
    b_entry, c1_entry, c1_q_diag, c2_entry, c2_q_entry, cesaro_entry, hausdorff_entry,
    mpm_closed_form, pb_closed_form, symbolic_alpha, Alpha, MomentSequence,
};
use crate::poly::Poly;
use crate::ratfun::KRatFun;
use crate::scalar::{Field, Rational, Ring};
use crate::telescope::{linear_product, telescope_verify, TelescopeWitness};

/// Number of leading series terms summed explicitly in the cross-check.
const PARTIAL_TERMS: usize = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    #[serde(rename = "exact-pass")]
    ExactPass,
    #[serde(rename = "fail")]
    Fail,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub i: usize,
    pub j: usize,
    pub lhs: String,
    pub rhs: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub identity: String,
    pub alpha: String,
    pub n: usize,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_mismatch: Option<Mismatch>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.verdict == Verdict::ExactPass
    }

    fn pass(identity: &str, alpha: String, n: usize) -> Self {
        IdentityReport {
            identity: identity.to_string(),
            alpha,
            n,
            verdict: Verdict::ExactPass,
            first_mismatch: None,
        }
    }

    fn fail(identity: &str, alpha: String, n: usize, mismatch: Mismatch) -> Self {
        IdentityReport {
            identity: identity.to_string(),
            alpha,
            n,
            verdict: Verdict::Fail,
            first_mismatch: Some(mismatch),
        }
    }
}

/// One side of a comparison: the value, or the reason it could not be formed.
type Side<F> = std::result::Result<F, String>;

fn compare_section<F: Field>(
    identity: &str,
    alpha: String,
    n: usize,
    mut lhs: impl FnMut(usize, usize) -> Side<F>,
    mut rhs: impl FnMut(usize, usize) -> Side<F>,
) -> IdentityReport {
    for i in 0..n {
        for j in 0..n {
            let (l, r) = (lhs(i, j), rhs(i, j));
            let mismatch = match (&l, &r) {
                (Ok(a), Ok(b)) if a == b => continue,
                (Ok(a), Ok(b)) => Mismatch {
                    i,
                    j,
                    lhs: a.to_string(),
                    rhs: b.to_string(),
                    detail: None,
                },
                _ => Mismatch {
                    i,
                    j,
                    lhs: l
                        .as_ref()
                        .map_or_else(|e| format!("<{e}>"), ToString::to_string),
                    rhs: r
                        .as_ref()
                        .map_or_else(|e| format!("<{e}>"), ToString::to_string),
                    detail: l.err().or(r.err()),
                },
            };
            return IdentityReport::fail(identity, alpha, n, mismatch);
        }
    }
    IdentityReport::pass(identity, alpha, n)
}

/// `k + n + α + offset` as a polynomial in k.
fn kfactor<F: Field>(alpha: &F, n: usize, offset: i64) -> Poly<F> {
    Poly::linear(F::from_i64(n as i64 + offset) + alpha.clone())
}

fn kden<F: Field>(alpha: &F, n: usize, offsets: &[i64]) -> Poly<F> {
    linear_product(
        offsets
            .iter()
            .map(|&o| F::from_i64(n as i64 + o) + alpha.clone()),
    )
}

/// k + c as a polynomial with constant c.
fn kpoly<F: Field>(constant: F, slope: i64) -> Poly<F> {
    Poly::new(vec![constant, F::from_i64(slope)])
}

/// Witness for Σ_k (M*)_{lo, hi+k} P_{hi+k} M_{hi+k, hi}, lo ≤ hi, built with
/// the antidifference coefficients a = 4, b = 2(3hi + 5 − lo + 2α),
/// c = (2/3)(3hi + 3 − lo + 2α)(hi + 3 + α).
pub fn mpm_witness<F: Field>(alpha: &F, lo: usize, hi: usize) -> Result<TelescopeWitness<F>> {
    if lo > hi {
        return Err(Error::Index(format!(
            "mpm witness needs lo <= hi, got {lo} > {hi}"
        )));
    }
    let two = F::from_i64(2);
    let fixed = |v: i64| F::from_i64(v);
    let (l, h) = (lo as i64, hi as i64);
    // M_{hi+k, lo} = 2(hi + k + 1 − lo) / ((k+hi+1+α)(k+hi+2+α))
    let m_lo = KRatFun::new(
        kpoly(fixed(2 * (h + 1 - l)), 2),
        kfactor(alpha, hi, 1) * kfactor(alpha, hi, 2),
    );
    let m_hi = KRatFun::new(
        kpoly(fixed(2), 2),
        kfactor(alpha, hi, 1) * kfactor(alpha, hi, 2),
    );
    let p = KRatFun::new(
        kfactor(alpha, hi, 1) * kfactor(alpha, hi, 2),
        kfactor(alpha, hi, 3) * kfactor(alpha, hi, 4),
    );
    let summand = m_lo * p * m_hi;

    let b = two.clone() * (fixed(3 * h + 5 - l) + two.clone() * alpha.clone());
    let c = two.clone() / fixed(3)
        * (fixed(3 * h + 3 - l) + two * alpha.clone())
        * (fixed(h + 3) + alpha.clone());
    let s = KRatFun::new(Poly::new(vec![c, b, fixed(4)]), kden(alpha, hi, &[1, 2, 3]));
    telescope_verify(summand, s)
}

/// Witness for the j ≥ i series of (BM)_{ij}: Σ_k b_{i, j+k} M_{j+k, j}.
pub fn bm_upper_witness<F: Field>(alpha: &F, i: usize, j: usize) -> Result<TelescopeWitness<F>> {
    if j < i {
        return Err(Error::Index(format!(
            "upper BM witness needs j >= i, got ({i}, {j})"
        )));
    }
    let fixed = |v: i64| F::from_i64(v);
    let two = fixed(2);
    let (ii, jj) = (i as i64, j as i64);
    // b_{i, j+k} = 2(j + k + 1 − 3i − 2α) / ((k+j+3+α)(k+j+4+α))
    let b = KRatFun::new(
        kpoly(fixed(2 * (jj + 1 - 3 * ii)) - fixed(4) * alpha.clone(), 2),
        kden(alpha, j, &[3, 4]),
    );
    let m = KRatFun::new(kpoly(two.clone(), 2), kden(alpha, j, &[1, 2]));
    let summand = b * m;
    // s(k) = (4k² + (10 + 6j − 6i)k + 2(j + 1 − i)(j + 3 + α)) / ((k+j+1+α)(k+j+2+α)(k+j+3+α))
    let c = two * fixed(jj + 1 - ii) * (fixed(jj + 3) + alpha.clone());
    let s = KRatFun::new(
        Poly::new(vec![c, fixed(10 + 6 * jj - 6 * ii), fixed(4)]),
        kden(alpha, j, &[1, 2, 3]),
    );
    telescope_verify(summand, s)
}

/// Witness for the infinite part of the j < i series of (BM)_{ij}: Σ_k b_{i, i+k} M_{i+k, j}.
pub fn bm_lower_witness<F: Field>(alpha: &F, i: usize, j: usize) -> Result<TelescopeWitness<F>> {
    if j >= i {
        return Err(Error::Index(format!(
            "lower BM witness needs j < i, got ({i}, {j})"
        )));
    }
    let fixed = |v: i64| F::from_i64(v);
    let two = fixed(2);
    let (ii, jj) = (i as i64, j as i64);
    // b_{i, i+k} = 2(k + 1 − 2i − 2α) / ((k+i+3+α)(k+i+4+α))
    let b = KRatFun::new(
        kpoly(fixed(2 * (1 - 2 * ii)) - fixed(4) * alpha.clone(), 2),
        kden(alpha, i, &[3, 4]),
    );
    // M_{i+k, j} = 2(i + k + 1 − j) / ((k+i+1+α)(k+i+2+α))
    let m = KRatFun::new(kpoly(fixed(2 * (ii + 1 - jj)), 2), kden(alpha, i, &[1, 2]));
    let summand = b * m;
    // c = 6 + (4 − 2α)i − (2 − 2α)j + 2ij − 2i² + 2α
    let a = alpha.clone();
    let c = fixed(6) + (fixed(4) - two.clone() * a.clone()) * fixed(ii)
        - (fixed(2) - two.clone() * a.clone()) * fixed(jj)
        + fixed(2 * ii * jj - 2 * ii * ii)
        + two * a;
    let s = KRatFun::new(
        Poly::new(vec![c, fixed(10 + 2 * ii - 2 * jj), fixed(4)]),
        kden(alpha, i, &[1, 2, 3]),
    );
    telescope_verify(summand, s)
}

/// Witness for Σ_k C_{m+k, i} P_{m+k} C_{m+k, j} of the order-one identity, m = max(i, j).
pub fn c1_witness<F: Field>(alpha: &F, m: usize) -> Result<TelescopeWitness<F>> {
    let c = KRatFun::new(Poly::one(), kfactor(alpha, m, 1));
    let p = KRatFun::new(kfactor(alpha, m, 1), kfactor(alpha, m, 2));
    let summand = c.clone() * p * c;
    let s = KRatFun::new(Poly::one(), kfactor(alpha, m, 1));
    telescope_verify(summand, s)
}

fn witness_value<F: Field>(w: Result<TelescopeWitness<F>>) -> Side<F> {
    let w = w.map_err(|e| e.to_string())?;
    match w.check_partial(PARTIAL_TERMS) {
        Ok(true) => Ok(w.value().clone()),
        Ok(false) => Err("partial sum plus remainder disagrees with s(0)".into()),
        Err(e) => Err(e.to_string()),
    }
}

/// (MQM*)_{ij} by finite sums: row i of M has i + 1 nonzeros and Q couples
/// only indices 0 and 1 off the diagonal.
pub fn mqm_finite_entry<F: Field>(alpha: &F, i: usize, j: usize) -> F {
    let mut acc = F::zero();
    for r in 0..=i {
        let partners = if r < 2 { 0..2 } else { r..r + 1 };
        for t in partners.filter(|&t| t <= j) {
            let q = c2_q_entry(alpha, r, t);
            if q.is_zero() {
                continue;
            }
            acc = acc + c2_entry(alpha, i, r) * q * c2_entry(alpha, j, t);
        }
    }
    acc
}

fn mqm_report<F: Field>(alpha: &F, label: String, n: usize) -> IdentityReport {
    let mut series: HashMap<(usize, usize), Side<F>> = HashMap::new();
    compare_section(
        "MQM*=M*PM",
        label,
        n,
        |i, j| Ok(mqm_finite_entry(alpha, i, j)),
        |i, j| {
            let key = (i.min(j), i.max(j));
            let value = series
                .entry(key)
                .or_insert_with(|| witness_value(mpm_witness(alpha, key.0, key.1)))
                .clone()?;
            let closed = mpm_closed_form(alpha, i, j);
            if value != closed {
                return Err(format!(
                    "series value {value} differs from closed form {closed}"
                ));
            }
            Ok(value)
        },
    )
}

/// (BM)_{ij} via the telescoped series (plus the two explicit leading terms when j < i).
pub fn bm_series_entry<F: Field>(alpha: &F, i: usize, j: usize) -> Result<F> {
    if j >= i {
        let w = bm_upper_witness(alpha, i, j)?;
        return Ok(w.value().clone());
    }
    let w = bm_lower_witness(alpha, i, j)?;
    Ok(bm_leading_terms(alpha, i, j) + w.value().clone())
}

/// b_{i,i−2} M_{i−2,j} + b_{i,i−1} M_{i−1,j}, the finitely many terms before the series starts.
fn bm_leading_terms<F: Field>(alpha: &F, i: usize, j: usize) -> F {
    [i.checked_sub(2), i.checked_sub(1)]
        .into_iter()
        .flatten()
        .fold(F::zero(), |acc, r| {
            acc + b_entry(alpha, i, r) * c2_entry(alpha, r, j)
        })
}

fn bm_report<F: Field>(alpha: &F, label: String, n: usize) -> IdentityReport {
    compare_section(
        "BM=M*",
        label,
        n,
        |i, j| {
            if j >= i {
                return witness_value(bm_upper_witness(alpha, i, j));
            }
            Ok(bm_leading_terms(alpha, i, j) + witness_value(bm_lower_witness(alpha, i, j))?)
        },
        |i, j| Ok(c2_entry(alpha, j, i)),
    )
}

/// (B*B)_{ij} by the finite column sum over k ≤ min(i, j) + 2.
pub fn bb_finite_entry<F: Field>(alpha: &F, i: usize, j: usize) -> F {
    (0..=i.min(j) + 2).fold(F::zero(), |acc, k| {
        acc + b_entry(alpha, k, i) * b_entry(alpha, k, j)
    })
}

/// Diagonal of B*B as the explicit sum of squares of column i.
fn bb_diagonal_display<F: Field>(alpha: &F, i: usize) -> F {
    let fixed = |v: i64| F::from_i64(v);
    let d3 = fixed(i as i64 + 3) + alpha.clone();
    let d4 = fixed(i as i64 + 4) + alpha.clone();
    let den = d3.clone() * d3 * d4.clone() * d4;
    let mut acc = F::zero();
    for k in 0..=i + 1 {
        let t = fixed(i as i64 + 1 - 3 * k as i64) - fixed(2) * alpha.clone();
        acc = acc + fixed(4) * t.clone() * t / den.clone();
    }
    let e1 = fixed(i as i64 + 1) + alpha.clone();
    let e2 = fixed(i as i64 + 2) + alpha.clone();
    acc + e1.clone() * e1 * e2.clone() * e2 / den
}

fn bb_report<F: Field>(alpha: &F, label: String, n: usize) -> IdentityReport {
    compare_section(
        "B*B=P",
        label,
        n,
        |i, j| {
            let v = bb_finite_entry(alpha, i, j);
            if i == j {
                let shown = bb_diagonal_display(alpha, i);
                if shown != v {
                    return Err(format!(
                        "diagonal sum-of-squares form {shown} differs from column sum {v}"
                    ));
                }
            }
            Ok(v)
        },
        |i, j| Ok(pb_closed_form(alpha, i, j)),
    )
}

fn c1_report<F: Field>(alpha: &F, label: String, n: usize) -> IdentityReport {
    compare_section(
        "C1 Q C1* = C1* P C1",
        label,
        n,
        |i, j| {
            Ok((0..=i.min(j)).fold(F::zero(), |acc, r| {
                acc + c1_entry(alpha, i, r) * c1_q_diag(alpha, r) * c1_entry(alpha, j, r)
            }))
        },
        |i, j| {
            let m = i.max(j);
            let v = witness_value(c1_witness(alpha, m))?;
            let direct = c1_entry(alpha, m, 0);
            if v != direct {
                return Err(format!(
                    "series value {v} differs from 1/(m+1+α) = {direct}"
                ));
            }
            Ok(v)
        },
    )
}

pub fn check_mqm_identity(alpha: &Alpha, n: usize) -> IdentityReport {
    mqm_report(alpha.value(), alpha.to_string(), n)
}

/// MQM* = M*PM with α left symbolic: a rational-function identity in α.
pub fn check_mqm_identity_symbolic(n: usize) -> IdentityReport {
    mqm_report(&symbolic_alpha(), "α".into(), n)
}

pub fn check_bm_identity(alpha: &Alpha, n: usize) -> IdentityReport {
    bm_report(alpha.value(), alpha.to_string(), n)
}

pub fn check_bm_identity_symbolic(n: usize) -> IdentityReport {
    bm_report(&symbolic_alpha(), "α".into(), n)
}

pub fn check_bb_identity(alpha: &Alpha, n: usize) -> IdentityReport {
    bb_report(alpha.value(), alpha.to_string(), n)
}

pub fn check_bb_identity_symbolic(n: usize) -> IdentityReport {
    bb_report(&symbolic_alpha(), "α".into(), n)
}

pub fn check_c1_identity(alpha: &Alpha, n: usize) -> IdentityReport {
    c1_report(alpha.value(), alpha.to_string(), n)
}

/// Applies the `rows × rows` section of M to ½(n+1+α)(n+2+α)(e_n − 2e_{n+1} + e_{n+2})
/// and compares with e_n.
pub fn check_preimage(alpha: &Alpha, index: usize, rows: usize) -> Result<IdentityReport> {
    if rows < index + 3 {
        return Err(Error::Index(format!(
            "preimage of e_{index} needs at least {} rows, got {rows}",
            index + 3
        )));
    }
    let a = alpha.value();
    let half = (Rational::from_i64(index as i64 + 1) + a.clone())
        * (Rational::from_i64(index as i64 + 2) + a.clone())
        / Rational::from_i64(2);
    let mut v = vec![Rational::zero(); rows];
    v[index] = half.clone();
    v[index + 1] = -half.clone() * Rational::from_i64(2);
    v[index + 2] = half;
    let name = format!("M preimage of e_{index}");
    for i in 0..rows {
        let got = (0..=i).fold(Rational::zero(), |acc, t| {
            acc + c2_entry(a, i, t) * v[t].clone()
        });
        let want = if i == index {
            Rational::one()
        } else {
            Rational::zero()
        };
        if got != want {
            return Ok(IdentityReport::fail(
                &name,
                alpha.to_string(),
                rows,
                Mismatch {
                    i,
                    j: 0,
                    lhs: got.to_string(),
                    rhs: want.to_string(),
                    detail: Some("nonzero residual coordinate".into()),
                },
            ));
        }
    }
    Ok(IdentityReport::pass(&name, alpha.to_string(), rows))
}

/// Hausdorff entries from Cesàro moments against the direct Cesàro entries.
pub fn check_hausdorff_consistency(alpha: &Alpha, beta: u32, n: usize) -> Result<IdentityReport> {
    let a = alpha.value();
    let mu = MomentSequence::cesaro(a.clone(), beta)?;
    Ok(compare_section(
        &format!("hausdorff(cesaro moments, beta={beta}) = cesaro(beta={beta})"),
        alpha.to_string(),
        n,
        |i, j| Ok(hausdorff_entry(a, &mu, i, j)),
        |i, j| cesaro_entry(a, beta, i, j).map_err(|e| e.to_string()),
    ))
}

/// β values swept by the combined Hausdorff consistency check.
pub const CONSISTENCY_BETAS: [u32; 3] = [1, 2, 3];

/// Hausdorff consistency for every β in [`CONSISTENCY_BETAS`], reported once:
/// the first failing β, or a pass covering all of them.
pub fn check_hausdorff_consistency_all(alpha: &Alpha, n: usize) -> IdentityReport {
    for beta in CONSISTENCY_BETAS {
        let report = check_hausdorff_consistency(alpha, beta, n).expect("beta >= 1");
        if !report.passed() {
            return report;
        }
    }
    IdentityReport::pass(
        "hausdorff(cesaro moments) = cesaro, beta=1..3",
        alpha.to_string(),
        n,
    )
}

/// Preimages of e_0, …, e_{rows−3} under the `rows × rows` section, reported once.
pub fn check_preimages(alpha: &Alpha, rows: usize) -> Result<IdentityReport> {
    if rows < 3 {
        return Err(Error::Index(format!(
            "preimages need at least 3 rows, got {rows}"
        )));
    }
    for index in 0..=rows - 3 {
        let report = check_preimage(alpha, index, rows)?;
        if !report.passed() {
            return Ok(report);
        }
    }
    Ok(IdentityReport::pass(
        "M preimages of e_k",
        alpha.to_string(),
        rows,
    ))
}

/// All six identity families at one α with section size n, in a fixed order.
pub fn run_all(alpha: &Alpha, n: usize) -> Vec<IdentityReport> {
    vec![
        check_mqm_identity(alpha, n),
        check_bm_identity(alpha, n),
        check_bb_identity(alpha, n),
        check_c1_identity(alpha, n),
        check_preimages(alpha, n.max(3)).expect("rows >= 3"),
        check_hausdorff_consistency_all(alpha, n),
    ]
}

/// The symbolic checks, certifying identities as rational functions of α.
pub fn run_symbolic(n: usize) -> Vec<IdentityReport> {
    vec![
        check_mqm_identity_symbolic(n),
        check_bb_identity_symbolic(n),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, rat};

    fn alpha(s: &str) -> Alpha {
        Alpha::parse(s).unwrap()
    }

    #[test]
    fn mpm_witness_origin() {
        let w = mpm_witness(&int(0), 0, 0).unwrap();
        assert_eq!(w.value(), &int(1));
        assert!(mpm_witness(&int(0), 2, 1).is_err());
    }

    #[test]
    fn witnesses_partial_sums() {
        for a in [rat(-1, 2), int(0), rat(1, 3), int(1)] {
            let ws = [
                mpm_witness(&a, 1, 3).unwrap(),
                bm_upper_witness(&a, 1, 3).unwrap(),
                bm_lower_witness(&a, 4, 1).unwrap(),
                c1_witness(&a, 2).unwrap(),
            ];
            for w in &ws {
                for last in [0, 1, 5, 50] {
                    assert!(w.check_partial(last).unwrap());
                }
            }
        }
    }

    #[test]
    fn bm_entries() {
        assert_eq!(bm_series_entry(&int(0), 0, 0).unwrap(), int(1));
        assert_eq!(bm_series_entry(&int(0), 2, 0).unwrap(), int(0));
    }

    #[test]
    fn mqm_sample_alphas() {
        for a in ["0", "1/3", "-1/2"] {
            let r = check_mqm_identity(&alpha(a), 25);
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn mqm_section_is_symmetric() {
        let a = rat(2, 7);
        for i in 0..12 {
            for j in 0..12 {
                assert_eq!(mqm_finite_entry(&a, i, j), mqm_finite_entry(&a, j, i));
            }
        }
    }

    #[test]
    fn bm_and_bb() {
        assert!(check_bm_identity(&alpha("1"), 15).passed());
        let r = check_bb_identity(&alpha("0"), 20);
        assert!(r.passed());
        for i in 0..20 {
            for j in 0..20 {
                if i != j {
                    assert!(bb_finite_entry(&int(0), i, j).is_zero());
                }
            }
        }
        assert_eq!(bb_finite_entry(&int(1), 0, 1), rat(-1, 25));
        assert!(check_bb_identity(&alpha("1/2"), 20).passed());
    }

    #[test]
    fn c1_examples() {
        let a = int(0);
        let lhs = |i: usize, j: usize| {
            (0..=i.min(j)).fold(int(0), |acc, r| {
                acc + c1_entry(&a, i, r) * c1_q_diag(&a, r) * c1_entry(&a, j, r)
            })
        };
        assert_eq!(lhs(0, 0), int(1));
        assert_eq!(lhs(0, 1), rat(1, 2));
        assert_eq!(c1_witness(&a, 1).unwrap().value(), &rat(1, 2));
        assert!(check_c1_identity(&alpha("3/2"), 20).passed());
    }

    #[test]
    fn preimage_examples() {
        assert!(check_preimage(&alpha("0"), 0, 10).unwrap().passed());
        assert!(check_preimage(&alpha("1/2"), 3, 12).unwrap().passed());
        assert!(check_preimage(&alpha("1/2"), 3, 5).is_err());
        assert!(check_preimages(&alpha("5/2"), 9).unwrap().passed());
        assert!(check_preimages(&alpha("0"), 2).is_err());
    }

    #[test]
    fn run_all_has_six_passing_reports() {
        let reports = run_all(&alpha("1/2"), 8);
        assert_eq!(reports.len(), 6);
        assert!(reports.iter().all(IdentityReport::passed));
    }

    #[test]
    fn hausdorff_examples() {
        assert!(check_hausdorff_consistency(&alpha("0"), 2, 10)
            .unwrap()
            .passed());
        assert!(check_hausdorff_consistency(&alpha("1/3"), 1, 10)
            .unwrap()
            .passed());
        assert!(check_hausdorff_consistency(&alpha("2"), 3, 8)
            .unwrap()
            .passed());
        assert!(check_hausdorff_consistency(&alpha("2"), 0, 8).is_err());
    }

    #[test]
    fn mismatch_is_reported() {
        let r = compare_section::<Rational>(
            "demo",
            "0".into(),
            3,
            |i, j| Ok(int((i * j) as i64)),
            |i, j| {
                Ok(if (i, j) == (1, 2) {
                    int(5)
                } else {
                    int((i * j) as i64)
                })
            },
        );
        assert_eq!(r.verdict, Verdict::Fail);
        let m = r.first_mismatch.unwrap();
        assert_eq!((m.i, m.j, m.lhs.as_str(), m.rhs.as_str()), (1, 2, "2", "5"));
    }

    #[test]
    fn symbolic_small() {
        assert!(check_mqm_identity_symbolic(4).passed());
        assert!(check_bb_identity_symbolic(4).passed());
        assert!(check_bm_identity_symbolic(3).passed());
    }
}
