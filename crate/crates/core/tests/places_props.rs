mod common;

use proptest::prelude::*;

use common::*;
use flatcert_core::exact::rational::int;
use flatcert_core::flats::length_sq;
use flatcert_core::places::{
    classify, discover_places, drift_profile, Classification, DriftProfile,
};
use flatcert_core::{QMatrix, Rational, Tolerances};

fn tol() -> Tolerances {
    Tolerances::default()
}

fn assert_profiles_close(
    a: &DriftProfile,
    b: &DriftProfile,
    arch_tol: f64,
) -> Result<(), TestCaseError> {
    prop_assert_eq!(&a.padic, &b.padic);
    prop_assert_eq!(a.arch.len(), b.arch.len());
    for (x, y) in a.arch.iter().zip(&b.arch) {
        prop_assert!(close(*x, *y, arch_tol), "{} vs {}", x, y);
    }
    Ok(())
}

fn same_class(a: &Classification, b: &Classification) -> Result<(), TestCaseError> {
    match (a, b) {
        (
            Classification::Ballistic {
                diagonalizable: da,
                length2: la,
            },
            Classification::Ballistic {
                diagonalizable: db,
                length2: lb,
            },
        ) => {
            prop_assert_eq!(da, db);
            prop_assert_eq!(&la.nonarch, &lb.nonarch);
            prop_assert!(close(la.arch, lb.arch, 1e-9));
        }
        _ => prop_assert_eq!(a, b),
    }
    Ok(())
}

fn matrix() -> impl Strategy<Value = QMatrix> {
    (2usize..=4).prop_flat_map(det_one)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn conjugation_invariance((m, c) in (2usize..=4).prop_flat_map(|n| (det_one(n), unimodular(n)))) {
        let places = discover_places(std::slice::from_ref(&m)).unwrap();
        let mc = conj(&c, &m);
        same_class(&classify(&m, &places, &tol()).unwrap(), &classify(&mc, &places, &tol()).unwrap())?;
        assert_profiles_close(
            &drift_profile(&m, &places, &tol()).unwrap(),
            &drift_profile(&mc, &places, &tol()).unwrap(),
            1e-9,
        )?;
    }

    #[test]
    fn inverse_symmetry(m in matrix()) {
        let places = discover_places(std::slice::from_ref(&m)).unwrap();
        let inv = m.inverse().unwrap();
        let p = drift_profile(&m, &places, &tol()).unwrap();
        let q = drift_profile(&inv, &places, &tol()).unwrap();
        assert_profiles_close(&q, &p.negated(), 1e-9)?;
        let (a, b) = (p.length_sq(), q.length_sq());
        prop_assert_eq!(a.nonarch, b.nonarch);
        prop_assert!(rel_close(a.arch, b.arch, 1e-9));
    }

    #[test]
    fn power_scaling(m in matrix(), k in 1i64..=5) {
        let places = discover_places(std::slice::from_ref(&m)).unwrap();
        let l1 = length_sq(&m, &places, &tol()).unwrap();
        let lk = length_sq(&m.pow(k).unwrap(), &places, &tol()).unwrap();
        prop_assert_eq!(lk.nonarch, l1.nonarch * Rational::from_integer((k * k).into()));
        prop_assert!(rel_close(lk.arch, (k * k) as f64 * l1.arch, 1e-8) || lk.arch.abs() < 1e-12);
    }

    #[test]
    fn triangular_reduction(t in (2usize..=4).prop_flat_map(triangular_det_one)) {
        let places = discover_places(std::slice::from_ref(&t)).unwrap();
        let diag: Vec<Rational> = (0..t.dim()).map(|i| t[(i, i)].clone()).collect();
        let d = QMatrix::diagonal(&diag);
        assert_profiles_close(
            &drift_profile(&t, &places, &tol()).unwrap(),
            &drift_profile(&d, &places, &tol()).unwrap(),
            1e-9,
        )?;
    }

    #[test]
    fn profiles_sum_to_zero(m in matrix()) {
        let places = discover_places(std::slice::from_ref(&m)).unwrap();
        let p = drift_profile(&m, &places, &tol()).unwrap();
        prop_assert!(p.arch.iter().sum::<f64>().abs() < 1e-9);
        for v in p.padic.values() {
            prop_assert_eq!(v.iter().sum::<Rational>(), int(0));
        }
    }

    #[test]
    fn classification_is_consistent(m in matrix()) {
        let places = discover_places(std::slice::from_ref(&m)).unwrap();
        let class = classify(&m, &places, &tol()).unwrap();
        let profile = drift_profile(&m, &places, &tol()).unwrap();
        match class {
            Classification::Identity => prop_assert!(m.is_identity()),
            Classification::Unipotent => prop_assert!(!m.is_identity() && profile.is_zero()),
            Classification::FiniteOrder { order } => {
                prop_assert!(m.pow(order as i64).unwrap().is_identity());
                prop_assert!(profile.is_zero());
            }
            Classification::VirtuallyUnipotent { order } => {
                let p = m.pow(order as i64).unwrap();
                prop_assert!(flatcert_core::linalg::is_unipotent(&p) && !p.is_identity());
            }
            Classification::Ballistic { length2, .. } => {
                prop_assert!(!profile.is_zero());
                prop_assert!(length2.total() > 0.0);
            }
        }
    }
}
