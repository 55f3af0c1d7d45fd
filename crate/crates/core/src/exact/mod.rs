//! Exact scalar substrate: rationals, number fields, polynomials, rational
//! factorization, complex root isolation and Newton polygons.

pub mod factor;
pub mod field;
mod modp;
pub mod newton;
pub mod poly;
pub mod primes;
pub mod rational;
pub mod roots;

use std::fmt::Debug;

use num_traits::{One, Zero};

pub use factor::{factor_q, is_irreducible};
pub use field::{make_field, regular_matrix, FieldElement, NumberField};
pub use newton::{newton_slopes, NewtonSlopes};
pub use poly::{squarefree_decomposition, squarefree_part, Poly};
pub use primes::prime_factors;
pub use rational::{parse_rational, Rational};
pub use roots::{complex_roots, RootApprox};

/// Field operations needed by the generic matrix code.
///
/// `zero_like`/`one_like` take a sample value so that elements of a number
/// field can produce constants in the same field.
pub trait Scalar: Clone + PartialEq + Debug + Send + Sync {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    /// Multiplicative inverse; `None` for zero.
    fn inv(&self) -> Option<Self>;
}

impl Scalar for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}
