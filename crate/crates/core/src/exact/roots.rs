//! Numerical isolation of complex roots with certified error radii.
//!
//! Multiplicities are determined exactly by square-free decomposition. Each
//! square-free part is solved by Aberth–Ehrlich iteration, polished with
//! Newton steps whose residuals are evaluated exactly, and bounded with the
//! Weierstrass inclusion radius `n |p(z_i)| / |lc * prod_{j != i}(z_i - z_j)|`.

use num_complex::Complex64;
use num_traits::Zero;

use super::poly::{squarefree_decomposition, Poly};
use super::rational::{from_f64, to_f64, Rational};
use crate::error::{Error, Result};

pub const DEFAULT_TOLERANCE: f64 = 1e-12;
pub const MAX_ITERATIONS: usize = 1000;
pub const CLUSTER_RADIUS: f64 = 1e-8;

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootApprox {
    pub value: Complex64,
    /// A true root lies within this distance of `value`.
    pub radius: f64,
    pub multiplicity: u32,
}

/// Exact value of `p(z)` for a float point `z`, rounded to f64 at the end.
fn eval_exact(p: &Poly, z: Complex64) -> Complex64 {
    let (x, y) = (from_f64(z.re), from_f64(z.im));
    let mut re = Rational::zero();
    let mut im = Rational::zero();
    for c in p.coeffs().iter().rev() {
        let nre = &re * &x - &im * &y + c;
        let nim = &re * &y + &im * &x;
        re = nre;
        im = nim;
    }
    Complex64::new(to_f64(&re), to_f64(&im))
}

fn eval_f64(coeffs: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for &c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

fn aberth(coeffs: &[f64]) -> (Vec<Complex64>, bool) {
    let n = coeffs.len() - 1;
    let lc = coeffs[n];
    // Cauchy bound and a rotated circle of starting points.
    let radius = 1.0
        + coeffs[..n]
            .iter()
            .map(|c| (c / lc).abs())
            .fold(0.0, f64::max);
    let lower = {
        // reciprocal Cauchy bound keeps starting points away from 0
        let a0 = coeffs[0];
        if a0 != 0.0 {
            let m = coeffs[1..]
                .iter()
                .map(|c| (c / a0).abs())
                .fold(0.0, f64::max);
            1.0 / (1.0 + m)
        } else {
            0.0
        }
    };
    let r0 = 0.5 * (radius + lower);
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| {
            let theta = 2.0 * std::f64::consts::PI * (k as f64) / (n as f64) + 0.4;
            Complex64::from_polar(r0, theta)
        })
        .collect();
    for _ in 0..MAX_ITERATIONS {
        let mut max_step: f64 = 0.0;
        for i in 0..n {
            let (p, dp) = eval_f64(coeffs, z[i]);
            if p == Complex64::zero() {
                continue;
            }
            let ratio = p / dp;
            let repulsion: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| Complex64::new(1.0, 0.0) / (z[i] - z[j]))
                .sum();
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * repulsion);
            if step.is_finite() {
                z[i] -= step;
                max_step = max_step.max(step.norm() / z[i].norm().max(1.0));
            }
        }
        if max_step < 1e-15 {
            return (z, true);
        }
    }
    (z, false)
}

fn inclusion_radii(p: &Poly, lc: f64, z: &[Complex64]) -> Vec<f64> {
    let n = z.len();
    (0..n)
        .map(|i| {
            let value = eval_exact(p, z[i]);
            let denom: Complex64 = (0..n)
                .filter(|&j| j != i)
                .map(|j| z[i] - z[j])
                .fold(Complex64::new(lc, 0.0), |acc, d| acc * d);
            // Relative rounding in the product is at most ~2n ulps.
            n as f64 * value.norm() / denom.norm() * (1.0 + 4.0 * n as f64 * f64::EPSILON)
        })
        .collect()
}

fn disjoint(z: &[Complex64], radii: &[f64]) -> bool {
    (0..z.len()).all(|i| (i + 1..z.len()).all(|j| (z[i] - z[j]).norm() > radii[i] + radii[j]))
}

fn solve_squarefree(p: &Poly, tol: f64) -> Result<Vec<(Complex64, f64)>> {
    let n = p.degree();
    if n == 0 {
        return Ok(Vec::new());
    }
    let coeffs: Vec<f64> = p.coeffs().iter().map(to_f64).collect();
    if n == 1 {
        let root = -&p.coeff(0) / p.coeff(1);
        let approx = to_f64(&root);
        let err = (to_f64(&(from_f64(approx) - &root))).abs();
        return Ok(vec![(Complex64::new(approx, 0.0), err)]);
    }
    let (mut z, _) = aberth(&coeffs);
    let dp = p.derivative();
    // Newton polishing with exact residuals.
    for _ in 0..3 {
        for zi in z.iter_mut() {
            let v = eval_exact(p, *zi);
            let d = eval_exact(&dp, *zi);
            if d != Complex64::zero() {
                let next = *zi - v / d;
                if next.is_finite() {
                    *zi = next;
                }
            }
        }
    }
    let lc = coeffs[n];
    let radii = inclusion_radii(p, lc, &z);
    if !disjoint(&z, &radii) || !radii.iter().all(|r| *r <= tol) {
        return Err(Error::ToleranceNotReached(MAX_ITERATIONS));
    }
    Ok(z.into_iter().zip(radii).collect())
}

/// All `deg(p)` complex roots of `p`, each within its reported radius (`<= tol`)
/// of a distinct true root, sorted by decreasing modulus then argument.
pub fn complex_roots(p: &Poly, tol: f64) -> Result<Vec<RootApprox>> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut out = Vec::with_capacity(p.degree());
    for (factor, mult) in squarefree_decomposition(p) {
        for (value, radius) in solve_squarefree(&factor, tol)? {
            for _ in 0..mult {
                out.push(RootApprox {
                    value,
                    radius,
                    multiplicity: mult,
                });
            }
        }
    }
    out.sort_by(|a, b| {
        b.value
            .norm()
            .total_cmp(&a.value.norm())
            .then(a.value.arg().total_cmp(&b.value.arg()))
    });
    Ok(out)
}

/// Groups approximations lying within `radius` of each other (single linkage).
pub fn clusters(roots: &[RootApprox], radius: f64) -> Vec<Vec<usize>> {
    let n = roots.len();
    let mut label: Vec<usize> = (0..n).collect();
    fn find(label: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while label[r] != r {
            r = label[r];
        }
        label[i] = r;
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if (roots[i].value - roots[j].value).norm() <= radius {
                let (a, b) = (find(&mut label, i), find(&mut label, j));
                label[a.max(b)] = a.min(b);
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut index = std::collections::BTreeMap::new();
    for i in 0..n {
        let r = find(&mut label, i);
        let g = *index.entry(r).or_insert_with(|| {
            groups.push(Vec::new());
            groups.len() - 1
        });
        groups[g].push(i);
    }
    groups
}
