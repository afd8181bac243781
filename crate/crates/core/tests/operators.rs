use cesaro_core::operators::{
    b_entry, b_shift_decomposition, c1_entry, c2_entry, c2_q_matrix, cesaro_entry,
    cesaro_entry_general, cesaro_moment, check_b_upper_range, finite_section, forward_difference,
    forward_difference_recursive, hausdorff_entry, mpm_closed_form, pb_closed_form, MomentSequence,
    OperatorKind, OperatorSpec,
};
use cesaro_core::scalar::{int, rat};
use cesaro_core::{Alpha, Matrix, Rational};
use num_traits::Zero;

fn sample_alphas() -> Vec<Rational> {
    vec![rat(-1, 2), int(0), rat(1, 3), int(1), rat(5, 2)]
}

#[test]
fn hausdorff_moments_reproduce_cesaro_entries() {
    for a in sample_alphas() {
        for beta in 1..=3 {
            let mu = MomentSequence::cesaro(a.clone(), beta).unwrap();
            for i in 0..=12 {
                for j in 0..=i {
                    assert_eq!(
                        hausdorff_entry(&a, &mu, i, j),
                        cesaro_entry(&a, beta, i, j).unwrap(),
                        "alpha={a} beta={beta} ({i},{j})"
                    );
                }
            }
        }
    }
}

#[test]
fn fast_paths_agree_with_general_formula() {
    for a in sample_alphas() {
        for i in 0..15 {
            for j in 0..=i {
                assert_eq!(
                    c1_entry(&a, i, j),
                    cesaro_entry_general(&a, 1, i, j).unwrap()
                );
                assert_eq!(
                    c2_entry(&a, i, j),
                    cesaro_entry_general(&a, 2, i, j).unwrap()
                );
            }
        }
    }
}

#[test]
fn explicit_and_recursive_differences_agree() {
    let mu = MomentSequence::cesaro(rat(1, 3), 2).unwrap();
    let custom = MomentSequence::custom(|k| rat(1, (k * k + 1) as i64));
    for n in 0..8 {
        for k in 0..6 {
            assert_eq!(
                forward_difference(&mu, n, k),
                forward_difference_recursive(&mu, n, k)
            );
            assert_eq!(
                forward_difference(&custom, n, k),
                forward_difference_recursive(&custom, n, k)
            );
        }
    }
    assert_eq!(cesaro_moment(&int(0), 1, 0).unwrap(), int(1));
}

#[test]
fn generated_matrices_are_lower_triangular() {
    for a in sample_alphas() {
        let alpha = Alpha::new(a).unwrap();
        for kind in [
            OperatorKind::C1,
            OperatorKind::C2,
            OperatorKind::Cesaro { beta: 3 },
            OperatorKind::Hausdorff(MomentSequence::cesaro(alpha.value().clone(), 2).unwrap()),
        ] {
            assert!(kind.is_lower_triangular());
            let m = finite_section(&OperatorSpec::new(kind, alpha.clone()).unwrap(), 10).unwrap();
            for i in 0..10 {
                for j in i + 1..10 {
                    assert!(m.get(i, j).is_zero());
                }
            }
        }
    }
}

#[test]
fn rows_sum_to_one_at_zero() {
    for i in 0..=30 {
        let row1 = (0..=i).fold(int(0), |acc, j| acc + c1_entry(&int(0), i, j));
        let row2 = (0..=i).fold(int(0), |acc, j| acc + c2_entry(&int(0), i, j));
        assert_eq!(row1, int(1), "row {i}");
        assert_eq!(row2, int(1), "row {i}");
    }
}

#[test]
fn boundary_values_at_zero() {
    assert!(c2_q_matrix(&int(0), 6).unwrap().is_identity());
    for i in 0..20usize {
        for j in 0..20usize {
            let want = if i == j {
                let n = i as i64;
                rat((n + 1) * (n + 2), (n + 3) * (n + 4))
            } else {
                int(0)
            };
            assert_eq!(pb_closed_form(&int(0), i, j), want);
        }
    }
}

#[test]
fn shift_decomposition_matches_entries() {
    for a in sample_alphas() {
        for i in 0..=30 {
            for j in 0..=30 {
                assert_eq!(
                    b_shift_decomposition(&a, i, j),
                    b_entry(&a, i, j),
                    "alpha={a} ({i},{j})"
                );
            }
        }
    }
}

#[test]
fn closed_forms_are_symmetric() {
    for a in sample_alphas() {
        for i in 0..15 {
            for j in 0..15 {
                assert_eq!(mpm_closed_form(&a, i, j), mpm_closed_form(&a, j, i));
                assert_eq!(pb_closed_form(&a, i, j), pb_closed_form(&a, j, i));
            }
        }
    }
}

#[test]
fn b_entries_stay_in_range() {
    for a in sample_alphas() {
        assert_eq!(check_b_upper_range(&Alpha::new(a).unwrap(), 30), None);
    }
}

#[test]
fn sections_match_generators() {
    let spec = OperatorSpec::new(OperatorKind::C2, Alpha::parse("0").unwrap()).unwrap();
    let want = Matrix::from_rows(vec![vec![int(1), int(0)], vec![rat(2, 3), rat(1, 3)]]).unwrap();
    assert_eq!(finite_section(&spec, 2).unwrap(), want);
    assert!(finite_section(&spec, 0).is_err());
}
