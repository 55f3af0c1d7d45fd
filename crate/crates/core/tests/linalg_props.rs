mod common;

use std::collections::BTreeMap;

use proptest::prelude::*;

use common::*;
use flatcert_core::exact::factor_q;
use flatcert_core::exact::rational::int;
use flatcert_core::linalg::{
    block_decompose, charpoly, charpoly_faddeev_leverrier, is_diagonalizable, is_unipotent,
    poly_at_matrix,
};
use flatcert_core::word::word_eval;
use flatcert_core::{Poly, QMatrix, Rational, Word};

fn square(n: usize) -> impl Strategy<Value = QMatrix> {
    prop::collection::vec(small_rational(), n * n)
        .prop_map(move |xs| QMatrix::from_rows(xs.chunks(n).map(<[Rational]>::to_vec).collect()))
}

/// A random polynomial of degree <= 2 with small coefficients.
fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(small_rational(), 1..=3).prop_map(Poly::new)
}

fn word(depth: u32) -> BoxedStrategy<Word> {
    let leaf = prop::sample::select(vec!["a", "b", "c"]).prop_map(|n| Word::Gen(n.to_string()));
    leaf.prop_recursive(depth, 8, 2, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone())
                .prop_map(|(l, r)| Word::Product(Box::new(l), Box::new(r))),
            (inner, -3i64..=3).prop_map(|(b, e)| Word::Power(Box::new(b), e)),
        ]
    })
    .boxed()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn charpoly_is_conjugation_invariant((m, c) in (2usize..=4).prop_flat_map(|n| (square(n), unimodular(n)))) {
        prop_assert_eq!(charpoly(&conj(&c, &m)), charpoly(&m));
        prop_assert_eq!(charpoly(&m), charpoly_faddeev_leverrier(&m));
    }

    #[test]
    fn triangular_charpoly_is_product_of_diagonal(n in 2usize..=4, xs in prop::collection::vec(small_rational(), 16)) {
        let mut m = QMatrix::zeros(n);
        let mut it = xs.into_iter();
        for i in 0..n {
            for j in i..n {
                m[(i, j)] = it.next().unwrap();
            }
        }
        let expected = (0..n).fold(Poly::one(), |acc, i| &acc * &Poly::linear(m[(i, i)].clone()));
        prop_assert_eq!(charpoly(&m), expected);
    }

    #[test]
    fn block_decomposition_reassembles(
        (m, c) in (2usize..=4).prop_flat_map(|n| (square(n), unimodular(n))),
        p in small_poly(),
    ) {
        let gens = [m.clone(), poly_at_matrix(&p, &m)];
        let gens: Vec<QMatrix> = gens.iter().map(|g| conj(&c, g)).collect();
        let dec = block_decompose(&gens).unwrap();
        prop_assert_eq!(dec.conjugator.det(), int(1));
        let inv = dec.conjugator.inverse().unwrap();
        for (i, g) in gens.iter().enumerate() {
            prop_assert_eq!(&dec.conjugator.mul(&dec.block_diagonal(i)).mul(&inv), g);
            let prod = dec.blocks.iter().fold(Poly::one(), |acc, b| &acc * &b.charpolys[i]);
            prop_assert_eq!(prod, charpoly(g));
        }
        for b in &dec.blocks {
            for cp in &b.charpolys {
                prop_assert_eq!(factor_q(cp).len(), 1);
            }
        }
    }

    #[test]
    fn unipotent_is_not_diagonalizable_unless_identity(
        (u, c) in (2usize..=4).prop_flat_map(|n| (upper_unitriangular(n), unimodular(n))),
    ) {
        let m = conj(&c, &u);
        prop_assert!(is_unipotent(&m));
        prop_assert_eq!(is_diagonalizable(&m), m.is_identity());
    }

    #[test]
    fn word_times_inverse_is_identity(
        w in word(3),
        a in det_one(3),
        b in det_one(3),
        c in det_one(3),
    ) {
        let gens = BTreeMap::from([("a".to_string(), a), ("b".to_string(), b), ("c".to_string(), c)]);
        let text = format!("({w})*({w})^-1");
        prop_assert!(word_eval(&text, &gens).unwrap().is_identity());
    }
}
