//! Simultaneous block decomposition of a commuting family over the rationals.
//!
//! Any generator whose characteristic polynomial has two coprime factors
//! splits the space into the kernels of `f(g)^e`; the other generators
//! preserve those kernels because they commute with `g`. Recursing until no
//! generator splits leaves blocks on which every generator's characteristic
//! polynomial is a power of a single irreducible.

use std::cmp::Ordering;

use num_traits::{One, Zero};
use serde::Serialize;

use super::{charpoly, kernel_basis, poly_at_matrix, QMatrix};
use crate::error::{Error, Result};
use crate::exact::factor::factor_q;
use crate::exact::poly::Poly;
use crate::exact::rational::Rational;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Block {
    pub size: usize,
    /// One restricted matrix per generator.
    #[serde(serialize_with = "ser_matrices")]
    pub matrices: Vec<QMatrix>,
    /// One characteristic polynomial per generator.
    pub charpolys: Vec<Poly>,
}

fn ser_matrices<S: serde::Serializer>(
    ms: &[QMatrix],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(ms.len()))?;
    for m in ms {
        seq.serialize_element(&m.to_strings())?;
    }
    seq.end()
}

fn ser_matrix<S: serde::Serializer>(m: &QMatrix, s: S) -> std::result::Result<S::Ok, S::Error> {
    m.to_strings().serialize(s)
}

/// `gen = conjugator * diag(blocks) * conjugator^-1` for every generator.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BlockDecomposition {
    #[serde(serialize_with = "ser_matrix")]
    pub conjugator: QMatrix,
    pub blocks: Vec<Block>,
}

impl BlockDecomposition {
    /// Block-diagonal matrix for generator `g`.
    pub fn block_diagonal(&self, g: usize) -> QMatrix {
        let n = self.blocks.iter().map(|b| b.size).sum();
        let mut out = QMatrix::zeros(n);
        let mut off = 0;
        for b in &self.blocks {
            for i in 0..b.size {
                for j in 0..b.size {
                    out[(off + i, off + j)] = b.matrices[g][(i, j)].clone();
                }
            }
            off += b.size;
        }
        out
    }
}

type Columns = Vec<Vec<Rational>>;

/// Solves `basis * x = images` for a full-column-rank basis via normal equations.
fn restrict(basis: &Columns, image_cols: &Columns) -> QMatrix {
    let k = basis.len();
    let dot =
        |a: &[Rational], b: &[Rational]| -> Rational { a.iter().zip(b).map(|(x, y)| x * y).sum() };
    let mut gram = QMatrix::zeros(k);
    let mut rhs = QMatrix::zeros(k);
    for i in 0..k {
        for j in 0..k {
            gram[(i, j)] = dot(&basis[i], &basis[j]);
            rhs[(i, j)] = dot(&basis[i], &image_cols[j]);
        }
    }
    gram.inverse().expect("independent basis").mul(&rhs)
}

fn columns_times(m: &QMatrix, cols: &Columns) -> Columns {
    cols.iter().map(|c| m.apply(c)).collect()
}

/// Expresses restricted-coordinate vectors in the ambient basis.
fn lift(basis: &Columns, coords: &[Rational]) -> Vec<Rational> {
    let n = basis[0].len();
    let mut v = vec![Rational::zero(); n];
    for (b, c) in basis.iter().zip(coords) {
        if c.is_zero() {
            continue;
        }
        for (x, y) in v.iter_mut().zip(b) {
            *x += c * y;
        }
    }
    v
}

fn split(basis: Columns, restricted: Vec<QMatrix>, out: &mut Vec<Columns>) {
    for m in &restricted {
        let factors = factor_q(&charpoly(m));
        if factors.len() < 2 {
            continue;
        }
        for (f, e) in factors {
            let kernel = kernel_basis(&poly_at_matrix(&f.pow(e), m));
            let sub_basis: Columns = kernel.iter().map(|k| lift(&basis, k)).collect();
            let sub_restricted = restricted
                .iter()
                .map(|g| restrict(&kernel, &columns_times(g, &kernel)))
                .collect();
            split(sub_basis, sub_restricted, out);
        }
        return;
    }
    out.push(basis);
}

fn cmp_polys(a: &[Poly], b: &[Poly]) -> Ordering {
    a.iter()
        .zip(b)
        .map(|(x, y)| {
            x.coeffs()
                .len()
                .cmp(&y.coeffs().len())
                .then_with(|| x.coeffs().cmp(y.coeffs()))
        })
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// Finest rational simultaneous block decomposition of a commuting family.
pub fn block_decompose(gens: &[QMatrix]) -> Result<BlockDecomposition> {
    let first = gens.first().ok_or(Error::EmptyFamily)?;
    let n = first.dim();
    for g in gens {
        if g.dim() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: g.dim(),
            });
        }
    }
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            if !gens[i].commutes_with(&gens[j]) {
                return Err(Error::NotCommuting(i, j));
            }
        }
    }

    let id = QMatrix::identity(n);
    let standard: Columns = (0..n).map(|i| id.rows().nth(i).unwrap().to_vec()).collect();
    let mut pieces = Vec::new();
    split(standard, gens.to_vec(), &mut pieces);

    // Order blocks by (size, per-generator charpolys) using the unscaled pieces.
    let mut keyed: Vec<(Columns, Vec<Poly>)> = pieces
        .into_iter()
        .map(|cols| {
            let polys = gens
                .iter()
                .map(|g| charpoly(&restrict(&cols, &columns_times(g, &cols))))
                .collect();
            (cols, polys)
        })
        .collect();
    keyed.sort_by(|a, b| {
        a.0.len()
            .cmp(&b.0.len())
            .then_with(|| cmp_polys(&a.1, &b.1))
    });

    let mut conjugator = QMatrix::zeros(n);
    let mut col = 0;
    for (cols, _) in &keyed {
        for c in cols {
            for (r, x) in c.iter().enumerate() {
                conjugator[(r, col)] = x.clone();
            }
            col += 1;
        }
    }
    // Scale the first column (inside the first block) so that det = 1.
    let det = conjugator.det();
    if !det.is_one() {
        let s = det.recip();
        for r in 0..n {
            let v = &conjugator[(r, 0)] * &s;
            conjugator[(r, 0)] = v;
        }
    }
    let inv = conjugator.inverse()?;

    let conjugated: Vec<QMatrix> = gens.iter().map(|g| inv.mul(g).mul(&conjugator)).collect();
    let mut blocks = Vec::with_capacity(keyed.len());
    let mut off = 0;
    for (cols, polys) in keyed {
        let size = cols.len();
        let matrices = conjugated
            .iter()
            .map(|d| {
                QMatrix::from_rows(
                    (0..size)
                        .map(|i| (0..size).map(|j| d[(off + i, off + j)].clone()).collect())
                        .collect(),
                )
            })
            .collect();
        blocks.push(Block {
            size,
            matrices,
            charpolys: polys,
        });
        off += size;
    }
    Ok(BlockDecomposition { conjugator, blocks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn check(gens: &[QMatrix], dec: &BlockDecomposition) {
        assert_eq!(dec.conjugator.det(), int(1));
        let inv = dec.conjugator.inverse().unwrap();
        for (i, g) in gens.iter().enumerate() {
            assert_eq!(&dec.conjugator.mul(&dec.block_diagonal(i)).mul(&inv), g);
        }
    }

    #[test]
    fn already_split_diagonal() {
        let g = QMatrix::diagonal(&[int(2), rat(1, 2)]);
        let dec = block_decompose(std::slice::from_ref(&g)).unwrap();
        assert_eq!(dec.blocks.len(), 2);
        assert!(dec.blocks.iter().all(|b| b.size == 1));
        check(&[g], &dec);
    }

    #[test]
    fn unipotent_single_block() {
        let g = QMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        let dec = block_decompose(std::slice::from_ref(&g)).unwrap();
        assert_eq!(dec.blocks.len(), 1);
        assert_eq!(dec.blocks[0].charpolys[0], Poly::from_ints(&[1, -2, 1]));
        check(&[g], &dec);
    }

    #[test]
    fn groups_equal_eigenvalues() {
        let a = QMatrix::diagonal(&[int(2), int(2), rat(1, 4)]);
        let b = QMatrix::diagonal(&[int(3), int(5), rat(1, 15)]);
        let dec = block_decompose(&[a.clone(), b.clone()]).unwrap();
        check(&[a.clone(), b.clone()], &dec);
        // b separates the repeated eigenvalue of a, so the finest split has three blocks.
        assert_eq!(dec.blocks.len(), 3);
        let dec_a = block_decompose(std::slice::from_ref(&a)).unwrap();
        let sizes: Vec<usize> = dec_a.blocks.iter().map(|b| b.size).collect();
        assert_eq!(sizes, vec![1, 2]);
        check(&[a], &dec_a);
    }

    #[test]
    fn rejects_noncommuting() {
        let a = QMatrix::from_i64(&[&[1, 1], &[0, 1]]);
        let b = QMatrix::from_i64(&[&[1, 0], &[1, 1]]);
        assert_eq!(block_decompose(&[a, b]), Err(Error::NotCommuting(0, 1)));
    }
}
