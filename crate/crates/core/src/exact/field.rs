use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use super::factor::factor_q;
use super::poly::Poly;
use super::rational::{format_rational, Rational};
use super::Scalar;
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// A number field `Q[x]/(minpoly)` given by a primitive element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NumberField {
    minpoly: Poly,
}

impl NumberField {
    pub fn minpoly(&self) -> &Poly {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.minpoly.degree()
    }

    /// The rationals as the degree-1 field `Q[x]/(x)`.
    pub fn rationals() -> Arc<Self> {
        Arc::new(NumberField { minpoly: Poly::x() })
    }
}

/// Validates a monic irreducible integer polynomial and builds its field.
pub fn make_field(minpoly: &Poly) -> Result<Arc<NumberField>> {
    if minpoly.is_constant() || !minpoly.is_monic() {
        return Err(Error::NotMonic);
    }
    if !minpoly.has_integer_coeffs() {
        return Err(Error::NonIntegerMinpoly);
    }
    let factors = factor_q(minpoly);
    if factors.len() != 1 || factors[0].1 != 1 {
        return Err(Error::NotIrreducible {
            factor: factors[0].0.to_string(),
        });
    }
    Ok(Arc::new(NumberField {
        minpoly: minpoly.clone(),
    }))
}

/// An element of a number field in the power basis `1, a, ..., a^(d-1)`.
#[derive(Clone)]
pub struct FieldElement {
    field: Arc<NumberField>,
    coords: Vec<Rational>,
}

impl PartialEq for FieldElement {
    fn eq(&self, other: &Self) -> bool {
        self.coords == other.coords && self.field == other.field
    }
}

impl FieldElement {
    pub fn new(field: &Arc<NumberField>, coords: Vec<Rational>) -> Result<Self> {
        let d = field.degree();
        if coords.len() > d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: coords.len(),
            });
        }
        let mut coords = coords;
        coords.resize(d, Rational::zero());
        Ok(FieldElement {
            field: field.clone(),
            coords,
        })
    }

    pub fn from_rational(field: &Arc<NumberField>, q: Rational) -> Self {
        let mut coords = vec![Rational::zero(); field.degree()];
        coords[0] = q;
        FieldElement {
            field: field.clone(),
            coords,
        }
    }

    /// The primitive element itself.
    pub fn generator(field: &Arc<NumberField>) -> Self {
        Self::from_poly(field, &Poly::x())
    }

    fn from_poly(field: &Arc<NumberField>, p: &Poly) -> Self {
        let r = p.rem(&field.minpoly);
        let coords = (0..field.degree()).map(|i| r.coeff(i)).collect();
        FieldElement {
            field: field.clone(),
            coords,
        }
    }

    pub fn field(&self) -> &Arc<NumberField> {
        &self.field
    }

    pub fn coords(&self) -> &[Rational] {
        &self.coords
    }

    pub fn as_poly(&self) -> Poly {
        Poly::new(self.coords.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(Zero::is_zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if Arc::ptr_eq(&self.field, &other.field) || self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(FieldElement {
            field: self.field.clone(),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(FieldElement {
            field: self.field.clone(),
            coords: self
                .coords
                .iter()
                .zip(&other.coords)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self::from_poly(
            &self.field,
            &(&self.as_poly() * &other.as_poly()),
        ))
    }

    /// Inverse via extended Euclid against the minimal polynomial.
    pub fn try_inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivideByZero);
        }
        let (g, s, _) = self.as_poly().ext_gcd(&self.field.minpoly);
        debug_assert!(g.is_one_poly());
        Ok(Self::from_poly(&self.field, &s))
    }

    pub fn try_div(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        self.try_mul(&other.try_inv()?)
    }
}

impl Poly {
    fn is_one_poly(&self) -> bool {
        self.degree() == 0 && self.coeff(0).is_one()
    }
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.field.degree() == 1 {
            return write!(f, "{}", format_rational(&self.coords[0]));
        }
        let parts: Vec<String> = self.coords.iter().map(format_rational).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl Scalar for FieldElement {
    fn zero_like(&self) -> Self {
        FieldElement::from_rational(&self.field, Rational::zero())
    }
    fn one_like(&self) -> Self {
        FieldElement::from_rational(&self.field, Rational::one())
    }
    fn is_zero(&self) -> bool {
        FieldElement::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self.try_add(rhs).expect("field mismatch")
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.try_sub(rhs).expect("field mismatch")
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.try_mul(rhs).expect("field mismatch")
    }
    fn neg(&self) -> Self {
        FieldElement {
            field: self.field.clone(),
            coords: self.coords.iter().map(|c| -c).collect(),
        }
    }
    fn inv(&self) -> Option<Self> {
        self.try_inv().ok()
    }
}

/// Matrix of multiplication by `a` in the power basis: column `j` holds the
/// coordinates of `a * alpha^j`.
pub fn regular_matrix(a: &FieldElement) -> Matrix<Rational> {
    let d = a.field.degree();
    let mut m = Matrix::zeros(d);
    let mut basis = FieldElement::from_rational(&a.field, Rational::one());
    let alpha = FieldElement::generator(&a.field);
    for j in 0..d {
        let col = a.try_mul(&basis).expect("same field");
        for (i, c) in col.coords.into_iter().enumerate() {
            m[(i, j)] = c;
        }
        basis = basis.try_mul(&alpha).expect("same field");
    }
    m
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};

    fn qsqrt2() -> Arc<NumberField> {
        make_field(&Poly::from_ints(&[-2, 0, 1])).unwrap()
    }

    #[test]
    fn make_field_examples() {
        assert_eq!(make_field(&Poly::from_ints(&[-1, 1])).unwrap().degree(), 1);
        assert_eq!(qsqrt2().degree(), 2);
        match make_field(&Poly::from_ints(&[-1, 0, 1])) {
            Err(Error::NotIrreducible { factor }) => assert_eq!(factor, "x - 1"),
            other => panic!("unexpected {other:?}"),
        }
        assert_eq!(make_field(&Poly::from_ints(&[1, 2])), Err(Error::NotMonic));
    }

    #[test]
    fn arithmetic() {
        let k = qsqrt2();
        let s = FieldElement::generator(&k);
        assert_eq!(
            s.try_mul(&s).unwrap(),
            FieldElement::from_rational(&k, int(2))
        );
        let one_plus = FieldElement::new(&k, vec![int(1), int(1)]).unwrap();
        let inv = one_plus.try_inv().unwrap();
        assert_eq!(inv, FieldElement::new(&k, vec![int(-1), int(1)]).unwrap());
        assert_eq!(one_plus.try_mul(&inv).unwrap(), s.one_like());
        assert_eq!(s.try_add(&s.zero_like()).unwrap(), s);
        assert_eq!(s.zero_like().try_inv(), Err(Error::DivideByZero));
        let other = make_field(&Poly::from_ints(&[-3, 0, 1])).unwrap();
        let t = FieldElement::generator(&other);
        assert_eq!(s.try_add(&t), Err(Error::FieldMismatch));
    }

    #[test]
    fn regular_matrix_examples() {
        let k = qsqrt2();
        let m = regular_matrix(&FieldElement::generator(&k));
        assert_eq!(
            m,
            Matrix::from_rows(vec![vec![int(0), int(2)], vec![int(1), int(0)]])
        );
        assert_eq!(
            regular_matrix(&FieldElement::from_rational(&k, int(1))),
            Matrix::identity(2)
        );
        let q = NumberField::rationals();
        assert_eq!(
            regular_matrix(&FieldElement::from_rational(&q, int(3))),
            Matrix::from_rows(vec![vec![int(3)]])
        );
        let half_sqrt = FieldElement::new(&k, vec![int(0), rat(1, 2)]).unwrap();
        assert_eq!(
            regular_matrix(&half_sqrt),
            Matrix::from_rows(vec![vec![int(0), int(1)], vec![rat(1, 2), int(0)]])
        );
    }
}
