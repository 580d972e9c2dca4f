use std::collections::BTreeSet;

use itertools::Itertools;
use traceless::partitions::enumerate_partitions;
use traceless::spectrum::{
    is_saturated, polynomial_pairs, projector_factors, restricted_spec, restricted_spec_union,
    spec_a, spec_a_affine, spec_a_tilde_candidates, wb_spec_a, AffineEigenvalue, SpectrumRequest,
};
use traceless::tensor::oracle::{build_operator_matrix, kernel_dimension, OpSpec};
use traceless::{Error, Partition};

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn req(m: usize, n: usize, big_n: usize) -> SpectrumRequest {
    SpectrumRequest::new(m, n, big_n).unwrap()
}

fn sweep() -> impl Iterator<Item = (usize, usize, usize)> {
    (1..=3)
        .cartesian_product(1..=3)
        .cartesian_product(1..=5)
        .map(|((m, n), big_n)| (m, n, big_n))
}

#[test]
fn union_of_restricted_spectra_is_the_spectrum() {
    for (m, n, big_n) in sweep() {
        let r = req(m, n, big_n);
        let pairs = polynomial_pairs(&r);
        let whole = spec_a(&r);
        for (rho, sigma) in &pairs {
            assert!(restricted_spec(rho, sigma, &r).unwrap().is_subset(&whole));
        }
        assert_eq!(
            restricted_spec_union(&pairs, &r).unwrap(),
            whole,
            "({m},{n},{big_n})"
        );
        assert!(restricted_spec_union(&[], &r).unwrap().is_empty());
    }
}

#[test]
fn spectrum_is_symmetric_under_swapping_sides() {
    for (m, n, big_n) in sweep() {
        assert_eq!(spec_a(&req(m, n, big_n)), spec_a(&req(n, m, big_n)));
    }
}

#[test]
fn zero_appears_only_at_r_zero() {
    for (m, n, big_n) in sweep() {
        for (value, forms) in spec_a_affine(&req(m, n, big_n)) {
            if value == 0 {
                assert!(forms.contains(&AffineEigenvalue::new(0, 0)));
            }
            assert!(value >= 0);
        }
    }
}

#[test]
fn zero_eigenvalue_iff_nonzero_traceless_space() {
    for (m, n, big_n) in sweep().filter(|&(m, n, big_n)| big_n.pow((m + n) as u32) <= 256) {
        let a = build_operator_matrix(&OpSpec::A, m, n, big_n).unwrap();
        let has_kernel = kernel_dimension(&a) > 0;
        assert_eq!(
            spec_a(&req(m, n, big_n)).contains(&0),
            has_kernel,
            "({m},{n},{big_n})"
        );
    }
}

#[test]
fn walled_brauer_forms_specialize_to_the_spectrum() {
    for (m, n) in (1..=3).cartesian_product(1..=3) {
        let forms = wb_spec_a(m, n);
        assert_eq!(forms.iter().filter(|f| f.r == 0).count(), 1);
        for big_n in (m + n - 1).max(1)..=m + n + 1 {
            let mut values: BTreeSet<i64> = forms.iter().map(|f| f.at(big_n as i64)).collect();
            let spec = spec_a(&req(m, n, big_n));
            // (1,1) at N=1 has no traceless tensors, so 0 drops out of spec_A there.
            if (m, n, big_n) == (1, 1, 1) {
                values.remove(&0);
            }
            assert_eq!(values, spec, "({m},{n},{big_n})");
        }
    }
    assert_eq!(
        wb_spec_a(2, 1),
        BTreeSet::from([
            AffineEigenvalue::new(0, 0),
            AffineEigenvalue::new(1, -1),
            AffineEigenvalue::new(1, 1),
        ])
    );
}

#[test]
fn tilde_witnesses() {
    let cands = spec_a_tilde_candidates(&req(4, 4, 4));
    let col = |k| Partition::column(k);
    assert!(cands
        .iter()
        .any(|c| c.value == -2 && c.rho == col(4) && c.sigma == col(4) && c.mu == col(2)));
    assert!(cands.iter().any(|c| c.value == 0
        && c.eigenvalue.r == 3
        && c.rho == col(4)
        && c.mu == col(1)
        && c.nu == col(1)));
}

#[test]
fn saturation_examples() {
    assert!(is_saturated(3, 2, 4));
    assert!(!is_saturated(3, 2, 2));
    assert!(is_saturated(1, 3, 2));
}

#[test]
fn riemann_label_set_drops_n_plus_two() {
    for big_n in 3..=6i64 {
        let x = [(p(&[2, 1]), p(&[1])), (p(&[1, 1, 1]), p(&[1]))];
        let mut got = restricted_spec_union(&x, &req(3, 1, big_n as usize)).unwrap();
        got.remove(&0);
        assert_eq!(got, BTreeSet::from([big_n + 1, big_n - 1, big_n - 2]));
        assert!(spec_a(&req(3, 1, big_n as usize)).contains(&(big_n + 2)));
    }
}

#[test]
fn factor_lists() {
    assert_eq!(
        projector_factors(&BTreeSet::from([0, 4]), true).unwrap(),
        vec![4]
    );
    assert_eq!(
        projector_factors(&BTreeSet::from([0, 3, 5]), true).unwrap(),
        vec![5, 3]
    );
    assert_eq!(
        projector_factors(&BTreeSet::from([0]), true).unwrap(),
        Vec::<i64>::new()
    );
    assert_eq!(
        projector_factors(&BTreeSet::from([0, 4]), false),
        Err(Error::ZeroFactor)
    );
}

#[test]
fn symbolic_rendering() {
    assert_eq!(AffineEigenvalue::new(1, 1).symbolic("N"), "N+1");
    assert_eq!(AffineEigenvalue::new(2, -3).symbolic("N"), "2N−3");
    assert_eq!(AffineEigenvalue::new(0, 5).symbolic("N"), "5");
}

#[test]
fn invalid_requests() {
    assert!(SpectrumRequest::new(0, 1, 2).is_err());
    let r = req(2, 1, 3);
    assert!(restricted_spec(&p(&[1]), &p(&[1]), &r).is_err());
    assert!(enumerate_partitions(2, 2).contains(&p(&[1, 1])));
}
