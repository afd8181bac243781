use std::io::Write;

use cesaro_core::identities::{
    check_bb_identity, check_bb_identity_symbolic, check_bm_identity, check_bm_identity_symbolic,
    check_c1_identity, check_hausdorff_consistency_all, check_mqm_identity,
    check_mqm_identity_symbolic, check_preimages, IdentityReport,
};
use cesaro_core::operators::{finite_section, OperatorSpec};
use cesaro_core::positivity::{
    certify_conjecture_route, certify_interrupter_pair, det_s_with_diff, findings,
    in_certified_region, DetDiff, DetStatus, FindingRecord, InterrupterCertificate, LinearFactor,
};
use cesaro_core::{format_rational, Alpha};
use num_traits::Signed;
use rayon::prelude::*;
use serde::Serialize;

use crate::args::{
    Check, ConjectureArgs, DetsArgs, Format, MatrixArgs, OutputArgs, RegionArgs, VerifyArgs,
};
use crate::output;
use crate::{Failure, Outcome};

/// Default `verify` grid: both sides of every boundary at −1, 0 and 1.
pub const VERIFY_ALPHAS: [&str; 6] = ["-1/2", "0", "1/3", "1/2", "1", "5/2"];
pub const REGION_ALPHAS: [&str; 7] = ["0", "1/10", "1/2", "9/10", "1", "3/2", "10"];
pub const CONJECTURE_ALPHAS: [&str; 9] = [
    "1/10", "1/5", "3/10", "2/5", "1/2", "3/5", "7/10", "4/5", "9/10",
];

/// Maps `f` over `items` on a pool of `threads` workers; results keep input order.
fn par_map<T: Sync, R: Send>(
    threads: usize,
    items: &[T],
    f: impl Fn(&T) -> R + Sync + Send,
) -> Result<Vec<R>, Failure> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Failure::Internal(format!("thread pool: {e}")))?;
    Ok(pool.install(|| items.par_iter().map(f).collect()))
}

fn outcome(ok: bool) -> Outcome {
    if ok {
        Outcome::Success
    } else {
        Outcome::Violation
    }
}

fn run_check(alpha: &Alpha, check: Check, n: usize) -> IdentityReport {
    match check {
        Check::Mqm => check_mqm_identity(alpha, n),
        Check::Bm => check_bm_identity(alpha, n),
        Check::Bb => check_bb_identity(alpha, n),
        Check::C1 => check_c1_identity(alpha, n),
        Check::Preimage => check_preimages(alpha, n.max(3)).expect("at least 3 rows"),
        Check::Hausdorff => check_hausdorff_consistency_all(alpha, n),
    }
}

fn run_symbolic(check: Check, n: usize) -> Option<IdentityReport> {
    match check {
        Check::Mqm => Some(check_mqm_identity_symbolic(n)),
        Check::Bm => Some(check_bm_identity_symbolic(n)),
        Check::Bb => Some(check_bb_identity_symbolic(n)),
        _ => None,
    }
}

#[derive(Serialize)]
struct VerifyRow<'a> {
    identity: &'a str,
    alpha: &'a str,
    n: usize,
    verdict: &'a str,
    mismatch_i: Option<usize>,
    mismatch_j: Option<usize>,
    lhs: Option<&'a str>,
    rhs: Option<&'a str>,
    detail: Option<&'a str>,
}

impl<'a> From<&'a IdentityReport> for VerifyRow<'a> {
    fn from(r: &'a IdentityReport) -> Self {
        let m = r.first_mismatch.as_ref();
        VerifyRow {
            identity: &r.identity,
            alpha: &r.alpha,
            n: r.n,
            verdict: if r.passed() { "exact-pass" } else { "fail" },
            mismatch_i: m.map(|m| m.i),
            mismatch_j: m.map(|m| m.j),
            lhs: m.map(|m| m.lhs.as_str()),
            rhs: m.map(|m| m.rhs.as_str()),
            detail: m.and_then(|m| m.detail.as_deref()),
        }
    }
}

pub fn verify(args: &VerifyArgs) -> Result<Outcome, Failure> {
    let default_suite = args.alphas.is_empty();
    let alphas = args.alphas.resolve(&VERIFY_ALPHAS);
    let mut checks = if args.only.is_empty() {
        vec![
            Check::Mqm,
            Check::Bm,
            Check::Bb,
            Check::C1,
            Check::Preimage,
            Check::Hausdorff,
        ]
    } else {
        args.only.clone()
    };
    checks.sort();
    checks.dedup();
    let n = args.n as usize;

    let tasks: Vec<(&Alpha, Check)> = alphas
        .iter()
        .flat_map(|a| checks.iter().map(move |&c| (a, c)))
        .collect();
    let threads = args.output.threads();
    let mut reports = par_map(threads, &tasks, |&(a, c)| run_check(a, c, n))?;
    if default_suite || args.symbolic {
        let symbolic_n = args.symbolic_n as usize;
        reports.extend(
            par_map(threads, &checks, |&c| run_symbolic(c, symbolic_n))?
                .into_iter()
                .flatten(),
        );
    }

    let out = output::open(args.output.out.as_deref())?;
    match args.output.format(Format::Json) {
        Format::Json => output::json_lines(out, &reports)?,
        Format::Csv => output::csv_rows(
            out,
            &reports.iter().map(VerifyRow::from).collect::<Vec<_>>(),
        )?,
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    eprintln!("verify: {passed}/{} exact-pass", reports.len());
    Ok(outcome(passed == reports.len()))
}

#[derive(Serialize)]
struct RegionRow {
    alpha: String,
    n: usize,
    certified: bool,
    expected: bool,
    p_nonnegative: bool,
    i_minus_p: &'static str,
    q_minus_i: &'static str,
    violation_size: Option<usize>,
    violation_minor: Option<String>,
    note: String,
}

fn region_row(alpha: &Alpha, cert: &InterrupterCertificate) -> RegionRow {
    let expected = in_certified_region(alpha);
    let violation = cert
        .q_minus_i
        .first_violation
        .as_ref()
        .or(cert.i_minus_p.first_violation.as_ref());
    let note = if cert.hyponormal_certified != expected {
        "certificate disagrees with the region {0} ∪ [1, ∞)".to_string()
    } else if alpha.value().is_negative() {
        "alpha < 0 lies outside the claimed hyponormality region".to_string()
    } else {
        String::new()
    };
    RegionRow {
        alpha: alpha.to_string(),
        n: cert.n,
        certified: cert.hyponormal_certified,
        expected,
        p_nonnegative: cert.p_nonnegative,
        i_minus_p: cert.i_minus_p.classification.as_str(),
        q_minus_i: cert.q_minus_i.classification.as_str(),
        violation_size: violation.map(|v| v.size),
        violation_minor: violation.map(|v| format_rational(&v.minor)),
        note,
    }
}

pub fn region(args: &RegionArgs) -> Result<Outcome, Failure> {
    let alphas = args.alphas.resolve(&REGION_ALPHAS);
    let n = args.n as usize;
    let certs = par_map(args.output.threads(), &alphas, |a| {
        certify_interrupter_pair(a, n)
    })?
    .into_iter()
    .collect::<Result<Vec<_>, _>>()?;
    let rows: Vec<RegionRow> = alphas
        .iter()
        .zip(&certs)
        .map(|(a, c)| region_row(a, c))
        .collect();
    for row in rows.iter().filter(|r| !r.note.is_empty()) {
        eprintln!("note: alpha={}: {}", row.alpha, row.note);
    }
    write_rows(&args.output, Format::Csv, &rows)?;
    Ok(outcome(rows.iter().all(|r| r.certified == r.expected)))
}

#[derive(Serialize)]
struct ConjectureRow {
    alpha: String,
    n: usize,
    minor_num: String,
    minor_den: String,
    verdict: &'static str,
}

pub fn conjecture(args: &ConjectureArgs) -> Result<Outcome, Failure> {
    let alphas = args.alphas.resolve(&CONJECTURE_ALPHAS);
    let n = args.n as usize;
    let reports = par_map(args.output.threads(), &alphas, |a| {
        certify_conjecture_route(a, n)
    })?
    .into_iter()
    .collect::<Result<Vec<_>, _>>()?;

    let mut rows = Vec::with_capacity(alphas.len() * n);
    let mut records: Vec<FindingRecord> = Vec::new();
    for (alpha, report) in alphas.iter().zip(&reports) {
        let mut positive_so_far = true;
        for (k, minor) in report.minors.iter().enumerate() {
            positive_so_far &= minor.is_positive();
            rows.push(ConjectureRow {
                alpha: alpha.to_string(),
                n: k + 1,
                minor_num: minor.numer().to_string(),
                minor_den: minor.denom().to_string(),
                verdict: if positive_so_far {
                    "positive-definite"
                } else {
                    "not-positive-definite"
                },
            });
        }
        records.extend(findings(alpha, report));
    }
    write_rows(&args.output, Format::Csv, &rows)?;

    // Findings are exploration results, kept apart from the report stream.
    match &args.findings {
        Some(path) => output::json_lines(output::open(Some(path))?, &records)?,
        None => output::json_lines(std::io::stderr().lock(), &records)?,
    }
    let pd = reports.iter().filter(|r| r.is_positive_definite()).count();
    eprintln!(
        "conjecture: {pd}/{} alphas positive definite up to n={n}; {} findings",
        reports.len(),
        records.len()
    );
    Ok(Outcome::Success)
}

#[derive(Serialize)]
struct DetReport {
    n: usize,
    numerator_coeffs: Vec<String>,
    denominator_factors: Vec<LinearFactor>,
    status: DetStatus,
    diff: Vec<DetDiff>,
}

#[derive(Serialize)]
struct DetCsvRow {
    n: usize,
    power: usize,
    coefficient: String,
    status: DetStatus,
}

pub fn dets(args: &DetsArgs) -> Result<Outcome, Failure> {
    let ns: Vec<usize> = (0..=args.n as usize).collect();
    let computed = par_map(args.output.threads(), &ns, |&n| det_s_with_diff(n))?
        .into_iter()
        .collect::<Result<Vec<_>, _>>()?;
    let reports: Vec<DetReport> = computed
        .into_iter()
        .map(|(det, diff)| DetReport {
            n: det.n,
            numerator_coeffs: det.numerator.coeffs().iter().map(format_rational).collect(),
            denominator_factors: det.denominator_factors,
            status: det.status,
            diff,
        })
        .collect();
    let out = output::open(args.output.out.as_deref())?;
    match args.output.format(Format::Json) {
        Format::Json => output::json_document(out, &reports)?,
        Format::Csv => {
            let rows: Vec<DetCsvRow> = reports
                .iter()
                .flat_map(|r| {
                    r.numerator_coeffs
                        .iter()
                        .enumerate()
                        .map(|(power, c)| DetCsvRow {
                            n: r.n,
                            power,
                            coefficient: c.clone(),
                            status: r.status,
                        })
                })
                .collect();
            output::csv_rows(out, &rows)?
        }
    }
    for r in reports.iter().filter(|r| !r.diff.is_empty()) {
        eprintln!(
            "dets: S_{} differs from the reference polynomial in {} places",
            r.n,
            r.diff.len()
        );
    }
    Ok(outcome(reports.iter().all(|r| r.diff.is_empty())))
}

pub fn matrix(args: &MatrixArgs) -> Result<Outcome, Failure> {
    let kind = args
        .operator_kind()
        .map_err(|e| Failure::Usage(e.to_string()))?;
    let spec =
        OperatorSpec::new(kind, args.alpha.clone()).map_err(|e| Failure::Usage(e.to_string()))?;
    let m = finite_section(&spec, args.n as usize)?;
    let rows: Vec<Vec<String>> = m
        .to_rows()
        .iter()
        .map(|r| r.iter().map(format_rational).collect())
        .collect();
    let out = output::open(args.output.out.as_deref())?;
    match args.output.format(Format::Json) {
        Format::Json => output::json_lines(out, &[rows])?,
        Format::Csv => output::csv_records(out, &rows)?,
    }
    Ok(Outcome::Success)
}

fn write_rows<T: Serialize>(args: &OutputArgs, default: Format, rows: &[T]) -> Result<(), Failure> {
    let out: Box<dyn Write> = output::open(args.out.as_deref())?;
    match args.format(default) {
        Format::Json => output::json_lines(out, rows),
        Format::Csv => output::csv_rows(out, rows),
    }
}
