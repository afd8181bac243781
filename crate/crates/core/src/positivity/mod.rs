//! Exact positivity certification of finite sections.

pub mod certify;
pub mod definiteness;
pub mod dets;
pub mod linalg;
pub mod sturm;

pub use certify::{
    certify_conjecture_route, certify_interrupter_pair, findings, i_minus_pb_section,
    in_certified_region, FindingRecord, InterrupterCertificate, Severity,
};
pub use definiteness::{is_psd_ldlt, ldlt_minors, Classification, PositivityReport, Violation};
pub use dets::{
    det_corner_q, det_corner_q_symbolic, det_s_polynomial, det_s_with_diff, det_z, det_z_symbolic,
    reference, DetDiff, DetPolynomial, DetStatus, LinearFactor,
};
pub use linalg::{bareiss_det, leading_minors};
pub use sturm::{sturm_root_count, sturm_root_count_open, sturm_sequence};
