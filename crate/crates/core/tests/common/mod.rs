#![allow(dead_code)]

use num_bigint::BigInt;
use num_traits::Signed;
use proptest::prelude::*;

use flatcert_core::exact::rational::{int, rat, valuation};
use flatcert_core::{QMatrix, Rational};

pub fn small_rational() -> impl Strategy<Value = Rational> {
    prop::sample::select(vec![
        int(0),
        int(1),
        int(-1),
        int(2),
        int(-2),
        rat(1, 2),
        rat(-1, 2),
        int(3),
        rat(-1, 3),
    ])
}

pub fn elementary(n: usize, i: usize, j: usize, c: Rational) -> QMatrix {
    let mut m = QMatrix::identity(n);
    m[(i, j)] = c;
    m
}

/// Product of integer elementary matrices; determinant 1, integer inverse.
pub fn unimodular(n: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec((0..n, 0..n, -2i64..=2), 1..6).prop_map(move |ops| {
        ops.into_iter()
            .filter(|(i, j, _)| i != j)
            .fold(QMatrix::identity(n), |acc, (i, j, c)| {
                acc.mul(&elementary(n, i, j, int(c)))
            })
    })
}

/// `2^a 3^b` with `|a|, |b| <= 3`.
pub fn smooth(a: i64, b: i64) -> Rational {
    let p = |base: i64, e: i64| {
        if e >= 0 {
            int(base.pow(e as u32))
        } else {
            rat(1, base.pow((-e) as u32))
        }
    };
    p(2, a) * p(3, b)
}

/// Diagonal entries `2^a 3^b` whose product is 1.
pub fn smooth_diagonal(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    prop::collection::vec((-3i64..=3, -3i64..=3), n - 1).prop_map(|ab| {
        let mut sa = 0;
        let mut sb = 0;
        let mut out: Vec<Rational> = ab
            .iter()
            .map(|&(a, b)| {
                sa += a;
                sb += b;
                smooth(a, b)
            })
            .collect();
        out.push(smooth(-sa, -sb));
        out
    })
}

pub fn upper_unitriangular(n: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(small_rational(), n * (n - 1) / 2).prop_map(move |xs| {
        let mut m = QMatrix::identity(n);
        let mut it = xs.into_iter();
        for i in 0..n {
            for j in i + 1..n {
                m[(i, j)] = it.next().unwrap();
            }
        }
        m
    })
}

/// Upper-triangular with a determinant-one smooth diagonal.
pub fn triangular_det_one(n: usize) -> impl Strategy<Value = QMatrix> {
    (smooth_diagonal(n), upper_unitriangular(n)).prop_map(|(d, u)| QMatrix::diagonal(&d).mul(&u))
}

/// Conjugated triangular matrices, plus conjugated rotations and unipotents.
pub fn det_one(n: usize) -> impl Strategy<Value = QMatrix> {
    let tri = (triangular_det_one(n), unimodular(n)).prop_map(|(t, c)| conj(&c, &t));
    let uni = (upper_unitriangular(n), unimodular(n)).prop_map(|(t, c)| conj(&c, &t));
    let rot = (unimodular(n), prop::bool::ANY).prop_map(move |(c, neg)| {
        let mut m = QMatrix::identity(n);
        m[(0, 0)] = int(0);
        m[(0, 1)] = int(-1);
        m[(1, 0)] = int(1);
        m[(1, 1)] = int(if neg { -1 } else { 0 });
        conj(&c, &m)
    });
    prop_oneof![3 => tri, 1 => uni, 1 => rot]
}

pub fn conj(c: &QMatrix, m: &QMatrix) -> QMatrix {
    c.mul(m).mul(&c.inverse().unwrap())
}

pub fn ln_abs(q: &Rational) -> f64 {
    flatcert_core::exact::rational::to_f64(&q.abs()).ln()
}

pub fn val(q: &Rational, p: u64) -> i64 {
    valuation(q, &BigInt::from(p)).unwrap()
}

pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol
}

pub fn rel_close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * a.abs().max(b.abs()).max(1e-300)
}
