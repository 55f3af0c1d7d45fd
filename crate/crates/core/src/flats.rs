//! Commuting families: Gram matrices of drift vectors and lattice certificates.
//!
//! Commuting matrices can be triangularized simultaneously, so eigenvalues
//! pair up along a joint indexing and the drift of a product is the sum of
//! the drifts. The pairing is therefore recovered from squared lengths by
//! polarization, `<g,h> = (Q(gh) - Q(gh^-1)) / 4`, which only needs
//! characteristic polynomials of products.

use nalgebra::{DMatrix, SymmetricEigen};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::exact::rational::{to_f64, Rational};
use crate::linalg::{null_space, QMatrix};
use crate::places::{classify, drift_profile, Classification, LengthSq, PlaceSet};
use crate::report;
use crate::word::{monomial_word, Word};
use crate::Tolerances;

/// Result of the exact pairwise commutation check.
#[derive(Clone, Debug, PartialEq)]
pub enum Commutation {
    Commuting,
    /// First non-commuting pair (0-based) and the commutator `g_i g_j g_i^-1 g_j^-1`.
    Witness {
        i: usize,
        j: usize,
        commutator: QMatrix,
    },
}

pub fn verify_commuting(gens: &[QMatrix]) -> Commutation {
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            if !gens[i].commutes_with(&gens[j]) {
                let (gi, gj) = (&gens[i], &gens[j]);
                let commutator = match (gi.inverse(), gj.inverse()) {
                    (Ok(ii), Ok(ij)) => gi.mul(gj).mul(&ii).mul(&ij),
                    _ => gi.mul(gj).sub(&gj.mul(gi)),
                };
                return Commutation::Witness { i, j, commutator };
            }
        }
    }
    Commutation::Commuting
}

/// `Q(m)`: squared drift length, approximate archimedean and exact non-archimedean parts.
pub fn length_sq(m: &QMatrix, places: &PlaceSet, tol: &Tolerances) -> Result<LengthSq> {
    Ok(drift_profile(m, places, tol)?.length_sq())
}

/// A verified commuting family; members are words so that derived elements
/// (such as commutators) can take part.
#[derive(Clone, Debug)]
pub struct CommutingFamily {
    members: Vec<Word>,
    gens: Vec<QMatrix>,
    places: PlaceSet,
}

impl CommutingFamily {
    pub fn new(members: Vec<Word>, gens: Vec<QMatrix>, places: PlaceSet) -> Result<Self> {
        let first = gens.first().ok_or(Error::EmptyFamily)?;
        if members.len() != gens.len() {
            return Err(Error::DimensionMismatch {
                expected: gens.len(),
                found: members.len(),
            });
        }
        for g in &gens {
            if g.dim() != first.dim() {
                return Err(Error::DimensionMismatch {
                    expected: first.dim(),
                    found: g.dim(),
                });
            }
        }
        if let Commutation::Witness { i, j, .. } = verify_commuting(&gens) {
            return Err(Error::NotCommuting(i, j));
        }
        Ok(CommutingFamily {
            members,
            gens,
            places,
        })
    }

    /// Family whose members are plain generator names.
    pub fn named(names: &[&str], gens: Vec<QMatrix>, places: PlaceSet) -> Result<Self> {
        let members = names.iter().map(|n| Word::Gen(n.to_string())).collect();
        Self::new(members, gens, places)
    }

    pub fn members(&self) -> &[Word] {
        &self.members
    }

    pub fn gens(&self) -> &[QMatrix] {
        &self.gens
    }

    pub fn places(&self) -> &PlaceSet {
        &self.places
    }

    pub fn rank(&self) -> usize {
        self.gens.len()
    }

    /// `prod g_i^{a_i}` in member order.
    pub fn combination(&self, exponents: &[i64]) -> Result<QMatrix> {
        let n = self.gens[0].dim();
        let mut acc = QMatrix::identity(n);
        for (g, &e) in self.gens.iter().zip(exponents) {
            if e != 0 {
                acc = acc.mul(&g.pow(e)?);
            }
        }
        Ok(acc)
    }
}

/// Gram matrix of drift vectors, split like [`LengthSq`].
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct GramData {
    #[serde(serialize_with = "report::rational_matrix")]
    pub nonarch: Vec<Vec<Rational>>,
    #[serde(serialize_with = "report::float_matrix")]
    pub arch: Vec<Vec<f64>>,
}

impl GramData {
    pub fn combined(&self) -> Vec<Vec<f64>> {
        self.nonarch
            .iter()
            .zip(&self.arch)
            .map(|(n, a)| n.iter().zip(a).map(|(x, y)| to_f64(x) + y).collect())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.nonarch.len()
    }
}

/// Polarized pairing of two commuting matrices.
pub fn pairing(g: &QMatrix, h: &QMatrix, places: &PlaceSet, tol: &Tolerances) -> Result<LengthSq> {
    let plus = length_sq(&g.mul(h), places, tol)?;
    let minus = length_sq(&g.mul(&h.inverse()?), places, tol)?;
    Ok(LengthSq {
        arch: (plus.arch - minus.arch) / 4.0,
        nonarch: (plus.nonarch - minus.nonarch) / Rational::from_integer(4.into()),
    })
}

pub fn gram(family: &CommutingFamily, tol: &Tolerances) -> Result<GramData> {
    let r = family.rank();
    let jobs: Vec<(usize, usize)> = (0..r).flat_map(|i| (i..r).map(move |j| (i, j))).collect();
    let entries: Vec<LengthSq> = jobs
        .par_iter()
        .map(|&(i, j)| {
            let (g, h) = (&family.gens[i], &family.gens[j]);
            if i == j {
                length_sq(g, &family.places, tol)
            } else {
                pairing(g, h, &family.places, tol)
            }
        })
        .collect::<Result<_>>()?;
    let mut nonarch = vec![vec![Rational::zero(); r]; r];
    let mut arch = vec![vec![0.0; r]; r];
    for (&(i, j), e) in jobs.iter().zip(entries) {
        nonarch[i][j] = e.nonarch.clone();
        nonarch[j][i] = e.nonarch;
        arch[i][j] = e.arch;
        arch[j][i] = e.arch;
    }
    Ok(GramData { nonarch, arch })
}

/// Exact `L D L^T` test for positive semidefiniteness of a symmetric rational matrix.
pub fn is_psd_exact(m: &[Vec<Rational>]) -> bool {
    let n = m.len();
    let mut a = m.to_vec();
    for k in 0..n {
        let d = a[k][k].clone();
        if d.is_negative() {
            return false;
        }
        if d.is_zero() {
            if (k + 1..n).any(|j| !a[k][j].is_zero()) {
                return false;
            }
            continue;
        }
        for i in k + 1..n {
            let f = &a[i][k] / &d;
            if f.is_zero() {
                continue;
            }
            let pivot = a[k].clone();
            for (x, p) in a[i][k..].iter_mut().zip(&pivot[k..]) {
                *x -= &f * p;
            }
        }
    }
    true
}

fn to_dmatrix(m: &[Vec<f64>]) -> DMatrix<f64> {
    let n = m.len();
    DMatrix::from_fn(n, n, |i, j| m[i][j])
}

/// Best rational approximation with denominator at most `max_den`.
pub fn rationalize(x: f64, max_den: i64) -> Rational {
    let (mut h0, mut h1) = (0i128, 1i128);
    let (mut k0, mut k1) = (1i128, 0i128);
    let mut v = x;
    for _ in 0..64 {
        let a = v.floor();
        if a.abs() > 1e15 {
            break;
        }
        let ai = a as i128;
        let (h2, k2) = (ai * h1 + h0, ai * k1 + k0);
        if k2 > max_den as i128 {
            break;
        }
        (h0, h1, k0, k1) = (h1, h2, k1, k2);
        let frac = v - a;
        if frac.abs() < 1e-12 {
            break;
        }
        v = 1.0 / frac;
    }
    if k1 == 0 {
        return crate::exact::rational::from_f64(x);
    }
    Rational::new(BigInt::from(h1), BigInt::from(k1))
}

/// Clears denominators and divides by the content; first nonzero entry positive.
fn primitive_integer(v: &[Rational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let ints: Vec<BigInt> = v
        .iter()
        .map(|q| (q * Rational::from_integer(l.clone())).to_integer())
        .collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g.is_zero() {
        return ints;
    }
    let sign = if ints
        .iter()
        .find(|x| !x.is_zero())
        .is_some_and(|x| x.is_negative())
    {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    ints.iter().map(|x| x / &g * &sign).collect()
}

/// Float RREF with partial pivoting; returns the nonzero rows.
fn float_rref(mut rows: Vec<Vec<f64>>, ncols: usize, eps: f64) -> Vec<Vec<f64>> {
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let p = (r..rows.len())
            .max_by(|&a, &b| rows[a][c].abs().total_cmp(&rows[b][c].abs()))
            .unwrap();
        if rows[p][c].abs() <= eps {
            continue;
        }
        rows.swap(r, p);
        let piv = rows[r][c];
        for x in rows[r].iter_mut() {
            *x /= piv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r {
                let f = row[c];
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    *x -= f * y;
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

fn big_ints<S: Serializer>(v: &[BigInt], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(v.len()))?;
    for x in v {
        match x.to_i64() {
            Some(i) => seq.serialize_element(&i)?,
            None => seq.serialize_element(&x.to_string())?,
        }
    }
    seq.end()
}

fn big_int_lists<S: Serializer>(vs: &[Vec<BigInt>], s: S) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    struct Row<'a>(&'a [BigInt]);
    impl Serialize for Row<'_> {
        fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
            big_ints(self.0, s)
        }
    }
    let mut seq = s.serialize_seq(Some(vs.len()))?;
    for v in vs {
        seq.serialize_element(&Row(v))?;
    }
    seq.end()
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "tag")]
pub enum FlatCertificate {
    Lattice {
        rank: usize,
        #[serde(serialize_with = "report::float")]
        covolume: f64,
    },
    #[serde(rename_all = "camelCase")]
    Degenerate {
        /// Selected primitive kernel vector.
        #[serde(serialize_with = "big_ints")]
        null_vector: Vec<BigInt>,
        /// Independent primitive kernel vectors.
        #[serde(serialize_with = "big_int_lists")]
        null_vectors: Vec<Vec<BigInt>>,
        #[serde(serialize_with = "report::display")]
        witness: Word,
        witness_class: Classification,
        /// `rank - null_vectors.len()`.
        lattice_rank: usize,
    },
}

impl FlatCertificate {
    pub fn is_lattice(&self) -> bool {
        matches!(self, FlatCertificate::Lattice { .. })
    }
}

const MAX_DENOMINATOR: i64 = 1_000_000;

/// Lattice certificate when the Gram matrix is positive definite, otherwise
/// an exact integer relation among the generators with a classified witness.
pub fn flat_certificate(family: &CommutingFamily, tol: &Tolerances) -> Result<FlatCertificate> {
    let g = gram(family, tol)?;
    certificate_from_gram(family, &g, tol)
}

pub fn certificate_from_gram(
    family: &CommutingFamily,
    g: &GramData,
    tol: &Tolerances,
) -> Result<FlatCertificate> {
    let r = g.rank();
    if !is_psd_exact(&g.nonarch) {
        return Err(Error::NumericalInconclusive(
            "non-archimedean Gram part is not positive semidefinite".into(),
        ));
    }
    let combined = g.combined();
    let trace: f64 = (0..r).map(|i| combined[i][i]).sum();
    let eig = SymmetricEigen::new(to_dmatrix(&combined));
    let min = eig
        .eigenvalues
        .iter()
        .copied()
        .fold(f64::INFINITY, f64::min);
    if trace > 0.0 && min > tol.pd_epsilon * trace {
        let det: f64 = eig.eigenvalues.iter().product();
        return Ok(FlatCertificate::Lattice {
            rank: r,
            covolume: det.sqrt(),
        });
    }

    // The combined kernel lies inside the exact kernel of the non-archimedean part.
    let kernel = null_space(&g.nonarch, r);
    if kernel.is_empty() {
        return Err(Error::NumericalInconclusive(
            "floating Gram is not positive definite but its exact part is".into(),
        ));
    }
    let k = kernel.len();
    let kf: Vec<Vec<f64>> = kernel
        .iter()
        .map(|v| v.iter().map(to_f64).collect())
        .collect();
    let restricted: Vec<Vec<f64>> = (0..k)
        .map(|a| {
            (0..k)
                .map(|b| {
                    (0..r)
                        .map(|i| {
                            (0..r)
                                .map(|j| kf[a][i] * g.arch[i][j] * kf[b][j])
                                .sum::<f64>()
                        })
                        .sum()
                })
                .collect()
        })
        .collect();
    // Scale the threshold back to the original coordinates.
    let kk: f64 = kf.iter().flatten().map(|x| x * x).sum();
    let rtrace = trace * kk;
    let reig = SymmetricEigen::new(to_dmatrix(&restricted));
    let mut directions: Vec<Vec<f64>> = Vec::new();
    for (idx, &lambda) in reig.eigenvalues.iter().enumerate() {
        if lambda <= tol.pd_epsilon * rtrace {
            let c = reig.eigenvectors.column(idx);
            directions.push(
                (0..r)
                    .map(|i| (0..k).map(|a| c[a] * kf[a][i]).sum())
                    .collect(),
            );
        }
    }
    if directions.is_empty() {
        return Err(Error::NumericalInconclusive(
            "no null direction found for a non-definite Gram".into(),
        ));
    }
    let basis = float_rref(directions, r, 1e-9);
    let null_vectors: Vec<Vec<BigInt>> = basis
        .iter()
        .map(|row| {
            primitive_integer(
                &row.iter()
                    .map(|x| rationalize(*x, MAX_DENOMINATOR))
                    .collect::<Vec<_>>(),
            )
        })
        .collect();

    // Exact check on the non-archimedean part, exact classification for the rest.
    let as_i64 = |v: &[BigInt]| -> Result<Vec<i64>> {
        v.iter()
            .map(|x| {
                x.to_i64().ok_or_else(|| {
                    Error::NumericalInconclusive("null vector entry too large".into())
                })
            })
            .collect()
    };
    for v in &null_vectors {
        let q: Vec<Rational> = v
            .iter()
            .map(|x| Rational::from_integer(x.clone()))
            .collect();
        let exact_zero = g.nonarch.iter().all(|row| {
            row.iter()
                .zip(&q)
                .map(|(a, b)| a * b)
                .sum::<Rational>()
                .is_zero()
        });
        if !exact_zero || v.iter().all(Zero::is_zero) {
            return Err(Error::NumericalInconclusive(
                "rationalized null vector fails the exact check".into(),
            ));
        }
        let m = family.combination(&as_i64(v)?)?;
        if classify(&m, &family.places, tol)?.is_ballistic() {
            return Err(Error::NumericalInconclusive(
                "null vector combination is ballistic".into(),
            ));
        }
    }

    let null_vector = select_witness(&null_vectors);
    let exps = as_i64(&null_vector)?;
    let witness = monomial_word(&family.members, &exps).expect("nonzero null vector");
    let witness_class = classify(&family.combination(&exps)?, &family.places, tol)?;
    if witness_class.is_ballistic() {
        return Err(Error::NumericalInconclusive("witness is ballistic".into()));
    }
    Ok(FlatCertificate::Degenerate {
        null_vector,
        lattice_rank: r - null_vectors.len(),
        null_vectors,
        witness,
        witness_class,
    })
}

/// Smallest max-norm among basis vectors and their pairwise sums and
/// differences, then fewest nonzero entries, then lexicographically largest
/// so that earlier generators are preferred.
fn select_witness(basis: &[Vec<BigInt>]) -> Vec<BigInt> {
    let mut candidates: Vec<Vec<BigInt>> = basis.to_vec();
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            for sign in [1, -1] {
                let v: Vec<Rational> = basis[i]
                    .iter()
                    .zip(&basis[j])
                    .map(|(a, b)| Rational::from_integer(a + b * BigInt::from(sign)))
                    .collect();
                candidates.push(primitive_integer(&v));
            }
        }
    }
    let max_norm = |v: &Vec<BigInt>| v.iter().map(|x| x.abs()).max().unwrap_or_default();
    let support = |v: &Vec<BigInt>| v.iter().filter(|x| !x.is_zero()).count();
    candidates
        .into_iter()
        .min_by(|a, b| {
            max_norm(a)
                .cmp(&max_norm(b))
                .then_with(|| support(a).cmp(&support(b)))
                .then_with(|| b.cmp(a))
        })
        .expect("nonempty basis")
}

/// Angle between the drift vectors of members `i` and `j`.
pub fn tits_angle(family: &CommutingFamily, i: usize, j: usize, tol: &Tolerances) -> Result<f64> {
    let places = &family.places;
    let (g, h) = (&family.gens[i], &family.gens[j]);
    if !classify(g, places, tol)?.is_ballistic() || !classify(h, places, tol)?.is_ballistic() {
        return Err(Error::NotBallistic);
    }
    let gg = length_sq(g, places, tol)?.total();
    let hh = length_sq(h, places, tol)?.total();
    let gh = pairing(g, h, places, tol)?.total();
    Ok((gh / (gg * hh).sqrt()).clamp(-1.0, 1.0).acos())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn d(a: i64, b: i64) -> QMatrix {
        QMatrix::diagonal(&[rat(a, b), rat(b, a)])
    }

    fn tol() -> Tolerances {
        Tolerances::default()
    }

    fn family(gens: Vec<QMatrix>, primes: &[u64]) -> CommutingFamily {
        let names = ["a", "b", "c", "d"];
        CommutingFamily::named(&names[..gens.len()], gens, PlaceSet::from_u64(primes)).unwrap()
    }

    #[test]
    fn commutation() {
        assert_eq!(
            verify_commuting(&[d(2, 1), d(3, 1)]),
            Commutation::Commuting
        );
        assert_eq!(verify_commuting(&[d(2, 1)]), Commutation::Commuting);
        let a = QMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        let b = QMatrix::from_i64(&[&[1, 0], &[1, 1]]);
        match verify_commuting(&[a, b]) {
            Commutation::Witness { i, j, commutator } => {
                assert_eq!((i, j), (0, 1));
                assert_eq!(commutator, QMatrix::from_i64(&[&[3, -1], &[1, 0]]));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn lengths() {
        let l = length_sq(&QMatrix::identity(2), &PlaceSet::default(), &tol()).unwrap();
        assert_eq!(l, LengthSq::zero());
        let (ln2, ln3) = (2f64.ln(), 3f64.ln());
        let l = length_sq(&d(2, 1), &PlaceSet::from_u64(&[2]), &tol()).unwrap();
        assert!((l.arch - 2.0 * ln2 * ln2).abs() < 1e-12);
        assert_eq!(l.nonarch, int(2));
        let l = length_sq(&d(3, 1), &PlaceSet::from_u64(&[2, 3]), &tol()).unwrap();
        assert!((l.arch - 2.0 * ln3 * ln3).abs() < 1e-12);
        assert_eq!(l.nonarch, int(2));
    }

    #[test]
    #[allow(clippy::needless_range_loop)]
    fn gram_examples() {
        let (ln2, ln3) = (2f64.ln(), 3f64.ln());
        let g = gram(&family(vec![d(2, 1), d(3, 1)], &[2, 3]), &tol()).unwrap();
        assert_eq!(g.nonarch, vec![vec![int(2), int(0)], vec![int(0), int(2)]]);
        let expect = [
            [2.0 * ln2 * ln2, 2.0 * ln2 * ln3],
            [2.0 * ln2 * ln3, 2.0 * ln3 * ln3],
        ];
        for i in 0..2 {
            for j in 0..2 {
                assert!((g.arch[i][j] - expect[i][j]).abs() < 1e-12);
            }
        }
        let u1 = QMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        let u5 = QMatrix::from_i64(&[&[1, 5], &[0, 1]]);
        let g = gram(&family(vec![u1, u5], &[]), &tol()).unwrap();
        assert!(g.nonarch.iter().flatten().all(Zero::is_zero));
        assert!(g.arch.iter().flatten().all(|x| *x == 0.0));
    }

    #[test]
    fn certificates() {
        let (ln2, ln3) = (2f64.ln(), 3f64.ln());
        match flat_certificate(&family(vec![d(2, 1), d(3, 1)], &[2, 3]), &tol()).unwrap() {
            FlatCertificate::Lattice { rank, covolume } => {
                assert_eq!(rank, 2);
                let expect = (4.0 * (ln2 * ln2 + ln3 * ln3 + 1.0)).sqrt();
                assert!((covolume - expect).abs() < 1e-8 * expect);
            }
            other => panic!("{other:?}"),
        }
        let u = QMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        match flat_certificate(&family(vec![u], &[]), &tol()).unwrap() {
            FlatCertificate::Degenerate {
                null_vector,
                witness,
                witness_class,
                lattice_rank,
                ..
            } => {
                assert_eq!(null_vector, vec![BigInt::from(1)]);
                assert_eq!(witness.to_string(), "a");
                assert_eq!(witness_class, Classification::Unipotent);
                assert_eq!(lattice_rank, 0);
            }
            other => panic!("{other:?}"),
        }
        match flat_certificate(&family(vec![d(2, 1), d(4, 1)], &[2]), &tol()).unwrap() {
            FlatCertificate::Degenerate {
                null_vector,
                witness,
                witness_class,
                ..
            } => {
                assert_eq!(null_vector, vec![BigInt::from(2), BigInt::from(-1)]);
                assert_eq!(witness.to_string(), "a^2*b^-1");
                assert_eq!(witness_class, Classification::Identity);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn angles() {
        let f = family(vec![d(2, 1), d(1, 2)], &[2]);
        assert!((tits_angle(&f, 0, 1, &tol()).unwrap() - std::f64::consts::PI).abs() < 1e-9);
        let m = QMatrix::from_i64(&[&[2, 1], &[1, 1]]);
        let f = family(vec![m.clone(), m.mul(&m)], &[]);
        assert!(tits_angle(&f, 0, 1, &tol()).unwrap().abs() < 1e-6);
        let f = family(vec![d(2, 1), d(3, 1)], &[2, 3]);
        assert!((tits_angle(&f, 0, 1, &tol()).unwrap() - 1.1359341).abs() < 1e-6);
        let f = family(vec![d(2, 1), QMatrix::identity(2)], &[2]);
        assert_eq!(tits_angle(&f, 0, 1, &tol()), Err(Error::NotBallistic));
    }

    #[test]
    fn rationalization() {
        assert_eq!(rationalize(0.5, 10), rat(1, 2));
        assert_eq!(rationalize(-2.0000000001, 1000), int(-2));
        assert_eq!(rationalize(1.0 / 3.0, 1_000_000), rat(1, 3));
        assert_eq!(
            primitive_integer(&[rat(-1, 2), rat(1, 4)]),
            vec![BigInt::from(2), BigInt::from(-1)]
        );
    }

    #[test]
    fn exact_psd() {
        assert!(is_psd_exact(&[vec![int(1), int(2)], vec![int(2), int(4)]]));
        assert!(!is_psd_exact(&[vec![int(1), int(2)], vec![int(2), int(3)]]));
        assert!(!is_psd_exact(&[vec![int(0), int(1)], vec![int(1), int(0)]]));
        assert!(is_psd_exact(&[vec![int(0), int(0)], vec![int(0), int(0)]]));
    }
}
