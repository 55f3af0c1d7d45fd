use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::Poly;
use super::rational::{int, valuation, Rational};
use crate::error::{Error, Result};

/// Valuations of the roots of a polynomial at a prime, with multiplicity.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NewtonSlopes {
    pub prime: BigInt,
    /// Sorted descending.
    pub valuations: Vec<Rational>,
}

impl NewtonSlopes {
    pub fn sum(&self) -> Rational {
        self.valuations.iter().sum()
    }
}

/// Root valuations from the lower convex hull of `(i, v_p(a_i))`.
///
/// A hull edge of slope `s` and horizontal length `l` contributes `l` roots
/// of valuation `-s`.
pub fn newton_slopes(p: &Poly, prime: &BigInt) -> Result<NewtonSlopes> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.coeff(0).is_zero() {
        return Err(Error::ZeroConstantTerm);
    }
    let points: Vec<(i64, i64)> = p
        .coeffs()
        .iter()
        .enumerate()
        .filter_map(|(i, c)| valuation(c, prime).map(|v| (i as i64, v)))
        .collect();

    // Andrew's monotone chain, lower half; points are already sorted by x.
    let mut hull: Vec<(i64, i64)> = Vec::with_capacity(points.len());
    for &pt in &points {
        while hull.len() >= 2 {
            let (ax, ay) = hull[hull.len() - 2];
            let (bx, by) = hull[hull.len() - 1];
            let cross =
                (bx - ax) as i128 * (pt.1 - ay) as i128 - (by - ay) as i128 * (pt.0 - ax) as i128;
            if cross <= 0 {
                hull.pop();
            } else {
                break;
            }
        }
        hull.push(pt);
    }

    let mut valuations = Vec::with_capacity(p.degree());
    for w in hull.windows(2) {
        let (len, rise) = (w[1].0 - w[0].0, w[1].1 - w[0].1);
        let v = -Rational::new(rise.into(), len.into());
        valuations.extend(std::iter::repeat_n(v, len as usize));
    }
    valuations.sort_by(|a, b| b.cmp(a));
    Ok(NewtonSlopes {
        prime: prime.clone(),
        valuations,
    })
}

/// Exact check of the hull endpoint identity `sum = v(a_0) - v(a_N)`.
pub fn endpoint_sum(p: &Poly, prime: &BigInt) -> Option<Rational> {
    let a0 = valuation(&p.coeff(0), prime)?;
    let an = valuation(&p.leading(), prime)?;
    Some(int(a0 - an))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::rat;

    fn two() -> BigInt {
        BigInt::from(2)
    }

    #[test]
    fn quadratic_with_rational_roots() {
        let p = Poly::new(vec![int(1), rat(-5, 2), int(1)]);
        let s = newton_slopes(&p, &two()).unwrap();
        assert_eq!(s.valuations, vec![int(1), int(-1)]);
    }

    #[test]
    fn linear_unit() {
        let s = newton_slopes(&Poly::from_ints(&[-1, 1]), &BigInt::from(7)).unwrap();
        assert_eq!(s.valuations, vec![int(0)]);
    }

    #[test]
    fn regular_rep_of_sqrt2_diagonal() {
        // (x^2 - 2)(x^2 - 1/2) = x^4 - 5/2 x^2 + 1
        let p = Poly::new(vec![int(1), int(0), rat(-5, 2), int(0), int(1)]);
        let s = newton_slopes(&p, &two()).unwrap();
        assert_eq!(
            s.valuations,
            vec![rat(1, 2), rat(1, 2), rat(-1, 2), rat(-1, 2)]
        );
    }

    #[test]
    fn zero_constant_term_rejected() {
        assert_eq!(
            newton_slopes(&Poly::from_ints(&[0, 1]), &two()),
            Err(Error::ZeroConstantTerm)
        );
    }

    #[test]
    fn non_monic_endpoint_identity() {
        let p = Poly::new(vec![rat(3, 4), int(5), int(12)]);
        let s = newton_slopes(&p, &two()).unwrap();
        assert_eq!(s.sum(), endpoint_sum(&p, &two()).unwrap());
    }
}
