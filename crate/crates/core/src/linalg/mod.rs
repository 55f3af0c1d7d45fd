//! Exact matrix algebra over the rationals and over number fields.

mod decompose;
mod matrix;

pub use decompose::{block_decompose, Block, BlockDecomposition};
pub use matrix::{Matrix, QMatrix};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::field::{regular_matrix, FieldElement};
use crate::exact::poly::{squarefree_part, Poly};
use crate::exact::rational::Rational;

/// Characteristic polynomial `det(xI - m)` via reduction to upper Hessenberg form.
pub fn charpoly(m: &QMatrix) -> Poly {
    let n = m.dim();
    let mut h = m.clone();
    for j in 0..n.saturating_sub(2) {
        let Some(piv) = (j + 1..n).find(|&i| !h[(i, j)].is_zero()) else {
            continue;
        };
        if piv != j + 1 {
            h.swap_rows(piv, j + 1);
            for r in 0..n {
                let t = h[(r, piv)].clone();
                h[(r, piv)] = h[(r, j + 1)].clone();
                h[(r, j + 1)] = t;
            }
        }
        let pinv = h[(j + 1, j)].recip();
        for r in j + 2..n {
            let f = &h[(r, j)] * &pinv;
            if f.is_zero() {
                continue;
            }
            for c in 0..n {
                let t = &f * &h[(j + 1, c)];
                h[(r, c)] -= t;
            }
            for c in 0..n {
                let t = &f * &h[(c, r)];
                h[(c, j + 1)] += t;
            }
        }
    }
    // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_ik (prod_{l=i+1..k} h_{l,l-1}) p_{i-1}
    let mut ps: Vec<Poly> = vec![Poly::one()];
    for k in 0..n {
        let mut pk = &Poly::linear(h[(k, k)].clone()) * &ps[k];
        let mut sub = Rational::one();
        for i in (0..k).rev() {
            sub *= &h[(i + 1, i)];
            if sub.is_zero() {
                break;
            }
            let coef = &h[(i, k)] * &sub;
            if !coef.is_zero() {
                pk = &pk - &ps[i].scale(&coef);
            }
        }
        ps.push(pk);
    }
    ps.pop().unwrap()
}

/// Characteristic polynomial by the Faddeev–LeVerrier recurrence; an
/// independent route used to cross-check [`charpoly`].
pub fn charpoly_faddeev_leverrier(m: &QMatrix) -> Poly {
    let n = m.dim();
    let mut coeffs = vec![Rational::zero(); n + 1];
    coeffs[n] = Rational::one();
    let mut mk = QMatrix::zeros(n);
    let id = QMatrix::identity(n);
    for k in 1..=n {
        mk = m.mul(&mk).add(&id.scale(&coeffs[n - k + 1]));
        let am = m.mul(&mk);
        coeffs[n - k] = -am.trace() / Rational::from_integer((k as i64).into());
    }
    Poly::new(coeffs)
}

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut [Vec<Rational>], ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut() {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row) {
                *x -= &f * y;
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Basis of the right null space of a (possibly rectangular) row list.
pub fn null_space(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut a = rows.to_vec();
    let pivots = rref(&mut a, ncols);
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (r, &pc) in pivots.iter().enumerate() {
                v[pc] = -a[r][f].clone();
            }
            v
        })
        .collect()
}

/// Exact basis of the null space of a square rational matrix.
pub fn kernel_basis(m: &QMatrix) -> Vec<Vec<Rational>> {
    let rows: Vec<Vec<Rational>> = m.rows().map(<[Rational]>::to_vec).collect();
    null_space(&rows, m.dim())
}

/// Evaluates a polynomial at a square matrix (Horner).
pub fn poly_at_matrix(p: &Poly, m: &QMatrix) -> QMatrix {
    let n = m.dim();
    let id = QMatrix::identity(n);
    p.coeffs()
        .iter()
        .rev()
        .fold(QMatrix::zeros(n), |acc, c| acc.mul(m).add(&id.scale(c)))
}

/// Replaces every entry by its regular representation, giving an `nd x nd`
/// rational matrix whose characteristic polynomial is the product of all
/// conjugates of the original one.
pub fn embed_regular(m: &Matrix<FieldElement>) -> Result<QMatrix> {
    let det = m.det();
    if det != crate::exact::Scalar::one_like(&det) {
        return Err(Error::DeterminantNotOne {
            name: None,
            det: det.to_string(),
        });
    }
    Ok(embed_regular_unchecked(m))
}

pub(crate) fn embed_regular_unchecked(m: &Matrix<FieldElement>) -> QMatrix {
    let n = m.dim();
    let d = m[(0, 0)].field().degree();
    let mut out = QMatrix::zeros(n * d);
    for i in 0..n {
        for j in 0..n {
            let block = regular_matrix(&m[(i, j)]);
            for a in 0..d {
                for b in 0..d {
                    out[(i * d + a, j * d + b)] = block[(a, b)].clone();
                }
            }
        }
    }
    out
}

/// `charpoly(m) == (x - 1)^n`.
pub fn is_unipotent(m: &QMatrix) -> bool {
    charpoly(m) == Poly::linear(Rational::one()).pow(m.dim() as u32)
}

/// The minimal polynomial is square-free iff the square-free part of the
/// characteristic polynomial annihilates `m`.
pub fn is_diagonalizable(m: &QMatrix) -> bool {
    let p = squarefree_part(&charpoly(m));
    poly_at_matrix(&p, m).entries().iter().all(Zero::is_zero)
}

pub fn euler_phi(mut k: u64) -> u64 {
    let mut result = k;
    let mut p = 2;
    while p * p <= k {
        if k.is_multiple_of(p) {
            while k.is_multiple_of(p) {
                k /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if k > 1 {
        result -= result / k;
    }
    result
}

/// Largest `k` with `phi(k) <= n`; bounds the order of any root of unity of degree `<= n`.
pub fn order_bound(n: usize) -> u64 {
    let n = n as u64;
    // phi(k) >= sqrt(k/2), so k <= 2 n^2 covers every candidate.
    (1..=2 * n * n + 2)
        .filter(|&k| euler_phi(k) <= n)
        .max()
        .unwrap_or(1)
}

/// Smallest `k <= bound` with `m^k = I`.
pub fn finite_order(m: &QMatrix, bound: Option<u64>) -> Option<u64> {
    let bound = bound.unwrap_or_else(|| order_bound(m.dim()));
    let mut p = m.clone();
    for k in 1..=bound {
        if p.is_identity() {
            return Some(k);
        }
        p = p.mul(m);
    }
    None
}
