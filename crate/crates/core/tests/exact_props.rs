mod common;

use num_bigint::BigInt;
use num_complex::Complex64;
use proptest::prelude::*;

use common::*;
use flatcert_core::exact::newton::endpoint_sum;
use flatcert_core::exact::rational::{int, to_f64};
use flatcert_core::exact::roots::DEFAULT_TOLERANCE;
use flatcert_core::exact::{
    complex_roots, factor_q, make_field, newton_slopes, regular_matrix, squarefree_decomposition,
    FieldElement,
};
use flatcert_core::{Poly, Rational};

fn poly_with_nonzero_constant() -> impl Strategy<Value = Poly> {
    (
        small_rational().prop_filter("nonzero", |c| *c != int(0)),
        prop::collection::vec(small_rational(), 0..6),
        small_rational().prop_filter("nonzero", |c| *c != int(0)),
    )
        .prop_map(|(c0, mid, lead)| {
            let mut cs = vec![c0];
            cs.extend(mid);
            cs.push(lead);
            Poly::new(cs)
        })
}

fn monic_unit_constant() -> impl Strategy<Value = Poly> {
    (prop::bool::ANY, prop::collection::vec(-3i64..=3, 0..5)).prop_map(|(neg, mid)| {
        let mut cs = vec![if neg { -1 } else { 1 }];
        cs.extend(mid);
        cs.push(1);
        Poly::from_ints(&cs)
    })
}

fn expand(factors: &[(Poly, u32)]) -> Poly {
    factors
        .iter()
        .fold(Poly::one(), |acc, (f, e)| &acc * &f.pow(*e))
}

/// Multiset comparison of complex numbers within `tol`.
fn same_roots(mut a: Vec<Complex64>, b: Vec<Complex64>, tol: f64) -> bool {
    if a.len() != b.len() {
        return false;
    }
    for z in b {
        match a.iter().position(|w| (w - z).norm() <= tol) {
            Some(i) => {
                a.swap_remove(i);
            }
            None => return false,
        }
    }
    true
}

fn quadratic_roots(b: Complex64, c: Complex64) -> [Complex64; 2] {
    let d = (b * b - 4.0 * c).sqrt();
    [(-b + d) / 2.0, (-b - d) / 2.0]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn newton_endpoint_identity(p in poly_with_nonzero_constant(), q in prop::sample::select(vec![2u64, 3, 5])) {
        let prime = BigInt::from(q);
        let s = newton_slopes(&p, &prime).unwrap();
        prop_assert_eq!(s.valuations.len(), p.degree());
        prop_assert_eq!(s.sum(), endpoint_sum(&p, &prime).unwrap());
    }

    #[test]
    fn unit_constant_sums_vanish(p in monic_unit_constant()) {
        for q in [2u64, 3] {
            prop_assert_eq!(newton_slopes(&p, &BigInt::from(q)).unwrap().sum(), int(0));
        }
        let roots = complex_roots(&p, DEFAULT_TOLERANCE).unwrap();
        let logs: f64 = roots.iter().map(|r| r.value.norm().ln()).sum();
        prop_assert!(logs.abs() < 1e-9, "sum of logs {}", logs);
    }

    #[test]
    fn factorization_reexpands(p in poly_with_nonzero_constant()) {
        let fs = factor_q(&p);
        let back = expand(&fs).scale(&p.leading());
        prop_assert_eq!(back, p.clone());
        let sq = squarefree_decomposition(&p);
        prop_assert_eq!(expand(&sq).scale(&p.leading()), p);
    }

    #[test]
    fn products_of_cyclotomic_and_linear_factors(k in 1usize..4, r in prop::sample::select(vec![2i64, 3, -5])) {
        // (x^k - 1)(x - r)^2 re-expands and exposes the repeated factor.
        let mut xk = vec![int(-1)];
        xk.extend(std::iter::repeat_n(int(0), k - 1));
        xk.push(int(1));
        let lin = Poly::linear(int(r));
        let p = &Poly::new(xk) * &lin.pow(2);
        let fs = factor_q(&p);
        prop_assert_eq!(expand(&fs), p);
        prop_assert!(fs.contains(&(lin, 2)));
    }

    #[test]
    fn regular_matrix_is_a_ring_homomorphism(
        which in 0usize..3,
        a in prop::collection::vec(small_rational(), 4),
        b in prop::collection::vec(small_rational(), 4),
    ) {
        let minpoly = [
            Poly::from_ints(&[-2, 0, 1]),
            Poly::from_ints(&[-2, 0, 0, 1]),
            Poly::from_ints(&[1, 1, 1, 1, 1]),
        ][which].clone();
        let k = make_field(&minpoly).unwrap();
        let d = k.degree();
        let x = FieldElement::new(&k, a[..d].to_vec()).unwrap();
        let y = FieldElement::new(&k, b[..d].to_vec()).unwrap();
        let xy = x.try_mul(&y).unwrap();
        prop_assert_eq!(regular_matrix(&xy), regular_matrix(&x).mul(&regular_matrix(&y)));
        let s = x.try_add(&y).unwrap();
        prop_assert_eq!(regular_matrix(&s), regular_matrix(&x).add(&regular_matrix(&y)));
    }

    #[test]
    fn norm_polynomial_roots_are_conjugate_roots(a in -3i64..=3, b in -3i64..=3, c in -3i64..=3, d in -3i64..=3) {
        // chi = x^2 + (a + b s) x + (c + d s) over Q(s), s^2 = 2.
        prop_assume!(b != 0 || d != 0);
        prop_assume!(a * a + 2 * b * b - 4 * c != 0 || 2 * a * b - 4 * d != 0);
        let norm = Poly::from_ints(&[c * c - 2 * d * d, 2 * a * c - 4 * b * d, a * a - 2 * b * b + 2 * c, 2 * a, 1]);
        let s = 2f64.sqrt();
        let mut expected = Vec::new();
        for sign in [1.0, -1.0] {
            let bb = Complex64::new(a as f64 + sign * b as f64 * s, 0.0);
            let cc = Complex64::new(c as f64 + sign * d as f64 * s, 0.0);
            expected.extend(quadratic_roots(bb, cc));
        }
        let got: Vec<Complex64> = complex_roots(&norm, DEFAULT_TOLERANCE).unwrap().iter().map(|r| r.value).collect();
        prop_assert!(same_roots(got.clone(), expected.clone(), 1e-9), "{:?} vs {:?}", got, expected);
    }

    #[test]
    fn complex_roots_have_small_residuals(p in monic_unit_constant()) {
        let coeffs: Vec<f64> = p.coeffs().iter().map(to_f64).collect();
        for r in complex_roots(&p, DEFAULT_TOLERANCE).unwrap() {
            prop_assert!(r.radius <= DEFAULT_TOLERANCE);
            let v = coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, c| acc * r.value + c);
            let scale: f64 = coeffs.iter().map(|c| c.abs()).sum::<f64>() * (1.0 + r.value.norm()).powi(p.degree() as i32);
            prop_assert!(v.norm() <= 1e-9 * scale);
        }
    }
}

#[test]
fn rational_polynomials_factor_over_common_denominators() {
    let p = Poly::new(vec![
        int(1),
        Rational::new(BigInt::from(-5), BigInt::from(2)),
        int(1),
    ]);
    let fs = factor_q(&p);
    assert_eq!(fs.len(), 2);
    assert_eq!(expand(&fs), p);
}
