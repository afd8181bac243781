use cesaro_core::identities::{
    bm_lower_witness, bm_upper_witness, c1_witness, check_bb_identity, check_bb_identity_symbolic,
    check_bm_identity, check_c1_identity, check_mqm_identity, check_mqm_identity_symbolic,
    mpm_witness, mqm_finite_entry, IdentityReport,
};
use cesaro_core::scalar::rat;
use cesaro_core::telescope::telescope_verify;
use cesaro_core::{Alpha, KRatFun, Poly, Rational};

const ALPHAS: [&str; 8] = ["-1/2", "-1/10", "0", "1/3", "1/2", "1", "5/2", "10"];

fn assert_pass(r: IdentityReport) {
    assert!(r.passed(), "{r:?}");
}

#[test]
fn section_identities_hold_at_sample_alphas() {
    for a in ALPHAS {
        let alpha = Alpha::parse(a).unwrap();
        assert_pass(check_mqm_identity(&alpha, 25));
        assert_pass(check_bb_identity(&alpha, 25));
        assert_pass(check_c1_identity(&alpha, 25));
        assert_pass(check_bm_identity(&alpha, 25));
    }
}

#[test]
fn symbolic_identities_hold() {
    assert_pass(check_mqm_identity_symbolic(8));
    assert_pass(check_bb_identity_symbolic(8));
}

#[test]
fn mqm_section_is_symmetric() {
    for a in ALPHAS {
        let a = Alpha::parse(a).unwrap().value().clone();
        for i in 0..25 {
            for j in 0..i {
                assert_eq!(mqm_finite_entry(&a, i, j), mqm_finite_entry(&a, j, i));
            }
        }
    }
}

#[test]
fn telescoping_partial_sums_collapse() {
    for a in ALPHAS {
        let a = Alpha::parse(a).unwrap().value().clone();
        for (lo, hi) in [(0, 0), (0, 3), (2, 5), (4, 4)] {
            let witnesses = [
                mpm_witness(&a, lo, hi).unwrap(),
                bm_upper_witness(&a, lo, hi).unwrap(),
                bm_lower_witness(&a, hi + 1, lo).unwrap(),
                c1_witness(&a, hi).unwrap(),
            ];
            for w in &witnesses {
                for last in [0, 1, 5, 50] {
                    assert!(
                        w.check_partial(last).unwrap(),
                        "alpha={a} ({lo},{hi}) K={last}"
                    );
                }
            }
        }
    }
}

#[test]
fn witness_rejects_wrong_antidifference() {
    let w = mpm_witness(&rat(1, 3), 1, 2).unwrap();
    let wrong: KRatFun<Rational> = w.antidifference().clone()
        + KRatFun::new(Poly::from_i64s(&[1]), Poly::from_i64s(&[1, 1, 1]));
    assert!(telescope_verify(w.summand().clone(), wrong).is_err());
}
