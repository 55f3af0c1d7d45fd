use std::fmt;
use std::ops::{Index, IndexMut};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exact::rational::{format_rational, Rational};
use crate::exact::Scalar;

/// Dense square matrix stored row-major.
#[derive(Clone, PartialEq)]
pub struct Matrix<S> {
    dim: usize,
    data: Vec<S>,
}

pub type QMatrix = Matrix<Rational>;

impl<S> Index<(usize, usize)> for Matrix<S> {
    type Output = S;
    fn index(&self, (i, j): (usize, usize)) -> &S {
        &self.data[i * self.dim + j]
    }
}

impl<S> IndexMut<(usize, usize)> for Matrix<S> {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut S {
        &mut self.data[i * self.dim + j]
    }
}

impl<S: Scalar> Matrix<S> {
    pub fn try_from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let dim = rows.len();
        if dim == 0 {
            return Err(Error::NotSquare);
        }
        for r in &rows {
            if r.len() != dim {
                return Err(Error::NotSquare);
            }
        }
        Ok(Matrix {
            dim,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Panics if the rows do not form a nonempty square array.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        Self::try_from_rows(rows).expect("square matrix")
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.data.chunks(self.dim)
    }

    pub fn entries(&self) -> &[S] {
        &self.data
    }

    pub fn identity_like(&self) -> Self {
        let zero = self.data[0].zero_like();
        let one = self.data[0].one_like();
        let n = self.dim;
        Matrix {
            dim: n,
            data: (0..n * n)
                .map(|k| {
                    if k / n == k % n {
                        one.clone()
                    } else {
                        zero.clone()
                    }
                })
                .collect(),
        }
    }

    pub fn is_identity(&self) -> bool {
        let n = self.dim;
        self.data.iter().enumerate().all(|(k, x)| {
            if k / n == k % n {
                *x == x.one_like()
            } else {
                x.is_zero()
            }
        })
    }

    pub fn transpose(&self) -> Self {
        let n = self.dim;
        Matrix {
            dim: n,
            data: (0..n * n).map(|k| self[(k % n, k / n)].clone()).collect(),
        }
    }

    pub fn try_mul(&self, rhs: &Self) -> Result<Self> {
        if self.dim != rhs.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: rhs.dim,
            });
        }
        let n = self.dim;
        let zero = self.data[0].zero_like();
        let mut data = vec![zero; n * n];
        for i in 0..n {
            for k in 0..n {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let t = a.mul(&rhs[(k, j)]);
                    data[i * n + j] = data[i * n + j].add(&t);
                }
            }
        }
        Ok(Matrix { dim: n, data })
    }

    /// Panics on dimension mismatch.
    pub fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("dimension mismatch")
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        Matrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.sub(b))
                .collect(),
        }
    }

    pub fn add(&self, rhs: &Self) -> Self {
        Matrix {
            dim: self.dim,
            data: self
                .data
                .iter()
                .zip(&rhs.data)
                .map(|(a, b)| a.add(b))
                .collect(),
        }
    }

    pub fn scale(&self, s: &S) -> Self {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(|a| a.mul(s)).collect(),
        }
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> S {
        let n = self.dim;
        let mut a = self.clone();
        let mut det = self.data[0].one_like();
        for col in 0..n {
            let Some(piv) = (col..n).find(|&r| !a[(r, col)].is_zero()) else {
                return self.data[0].zero_like();
            };
            if piv != col {
                a.swap_rows(piv, col);
                det = det.neg();
            }
            let p = a[(col, col)].clone();
            det = det.mul(&p);
            let pinv = p.inv().expect("nonzero pivot");
            for r in col + 1..n {
                let f = a[(r, col)].mul(&pinv);
                if f.is_zero() {
                    continue;
                }
                for c in col..n {
                    let t = f.mul(&a[(col, c)]);
                    a[(r, c)] = a[(r, c)].sub(&t);
                }
            }
        }
        det
    }

    pub fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for c in 0..self.dim {
            self.data.swap(i * self.dim + c, j * self.dim + c);
        }
    }

    /// Gauss–Jordan inverse.
    pub fn inverse(&self) -> Result<Self> {
        let n = self.dim;
        let mut a = self.clone();
        let mut inv = self.identity_like();
        for col in 0..n {
            let piv = (col..n)
                .find(|&r| !a[(r, col)].is_zero())
                .ok_or(Error::Singular)?;
            a.swap_rows(piv, col);
            inv.swap_rows(piv, col);
            let pinv = a[(col, col)].inv().expect("nonzero pivot");
            for c in 0..n {
                a[(col, c)] = a[(col, c)].mul(&pinv);
                inv[(col, c)] = inv[(col, c)].mul(&pinv);
            }
            for r in 0..n {
                if r == col || a[(r, col)].is_zero() {
                    continue;
                }
                let f = a[(r, col)].clone();
                for c in 0..n {
                    let t = f.mul(&a[(col, c)]);
                    a[(r, c)] = a[(r, c)].sub(&t);
                    let t = f.mul(&inv[(col, c)]);
                    inv[(r, c)] = inv[(r, c)].sub(&t);
                }
            }
        }
        Ok(inv)
    }

    /// Integer power by repeated squaring; negative exponents use the exact inverse.
    pub fn pow(&self, e: i64) -> Result<Self> {
        let mut base = if e < 0 { self.inverse()? } else { self.clone() };
        let mut e = e.unsigned_abs();
        let mut acc = self.identity_like();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        Ok(acc)
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.mul(other) == other.mul(self)
    }

    pub fn map<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Matrix<T> {
        Matrix {
            dim: self.dim,
            data: self.data.iter().map(f).collect(),
        }
    }
}

impl QMatrix {
    pub fn zeros(n: usize) -> Self {
        Matrix {
            dim: n,
            data: vec![Rational::zero(); n * n],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m[(i, i)] = Rational::one();
        }
        m
    }

    pub fn diagonal(entries: &[Rational]) -> Self {
        let mut m = Self::zeros(entries.len());
        for (i, e) in entries.iter().enumerate() {
            m[(i, i)] = e.clone();
        }
        m
    }

    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter()
                .map(|r| {
                    r.iter()
                        .map(|&x| Rational::from_integer(x.into()))
                        .collect()
                })
                .collect(),
        )
    }

    pub fn trace(&self) -> Rational {
        (0..self.dim).map(|i| self[(i, i)].clone()).sum()
    }

    /// Row-major strings, the serialized form used in reports.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        self.rows()
            .map(|r| r.iter().map(format_rational).collect())
            .collect()
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        self.rows()
            .map(|r| r.iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }
}

impl<S: fmt::Display> fmt::Debug for Matrix<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, row) in self.data.chunks(self.dim).enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            let parts: Vec<String> = row.iter().map(|x| x.to_string()).collect();
            write!(f, "[{}]", parts.join(", "))?;
        }
        write!(f, "]")
    }
}
