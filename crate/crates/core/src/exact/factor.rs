//! Factorization over the rationals: square-free decomposition, factorization
//! modulo a small prime, quadratic Hensel lifting and Zassenhaus recombination.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::modp::{Fp, PolyP};
use super::poly::{squarefree_decomposition, Poly};

type ZPoly = Vec<BigInt>;

fn trim(mut f: ZPoly) -> ZPoly {
    while f.last().is_some_and(Zero::is_zero) {
        f.pop();
    }
    f
}

fn reduce(f: &[BigInt], m: &BigInt) -> ZPoly {
    trim(f.iter().map(|c| c.mod_floor(m)).collect())
}

/// Coefficients reduced into the symmetric range `(-m/2, m/2]`.
fn symmetric(f: &[BigInt], m: &BigInt) -> ZPoly {
    let half = m >> 1;
    trim(
        f.iter()
            .map(|c| {
                let r = c.mod_floor(m);
                if r > half {
                    r - m
                } else {
                    r
                }
            })
            .collect(),
    )
}

fn zmul(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    reduce(&out, m)
}

fn zadd(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    let v: ZPoly = (0..n)
        .map(|i| a.get(i).unwrap_or(&z) + b.get(i).unwrap_or(&z))
        .collect();
    reduce(&v, m)
}

fn zsub(a: &[BigInt], b: &[BigInt], m: &BigInt) -> ZPoly {
    let n = a.len().max(b.len());
    let z = BigInt::zero();
    let v: ZPoly = (0..n)
        .map(|i| a.get(i).unwrap_or(&z) - b.get(i).unwrap_or(&z))
        .collect();
    reduce(&v, m)
}

/// Division by a monic polynomial modulo `m`.
fn zdivrem_monic(a: &[BigInt], b: &[BigInt], m: &BigInt) -> (ZPoly, ZPoly) {
    let db = b.len() - 1;
    debug_assert!(b[db].is_one());
    if a.len() < b.len() {
        return (Vec::new(), reduce(a, m));
    }
    let mut rem = a.to_vec();
    let mut quot = vec![BigInt::zero(); a.len() - db];
    for i in (0..quot.len()).rev() {
        let c = rem[i + db].mod_floor(m);
        if !c.is_zero() {
            for (j, y) in b.iter().enumerate() {
                rem[i + j] -= &c * y;
            }
        }
        quot[i] = c;
    }
    rem.truncate(db);
    (reduce(&quot, m), reduce(&rem, m))
}

fn to_z(f: &PolyP) -> ZPoly {
    f.iter().map(|&c| BigInt::from(c)).collect()
}

fn to_p(f: &[BigInt], p: u64) -> PolyP {
    let pb = BigInt::from(p);
    let mut v: PolyP = f
        .iter()
        .map(|c| c.mod_floor(&pb).to_u64().unwrap())
        .collect();
    while v.last() == Some(&0) {
        v.pop();
    }
    v
}

/// One quadratic Hensel step: from `f = g h mod m`, `s g + t h = 1 mod m`,
/// `h` monic, to the same relations modulo `m^2`.
fn hensel_step(
    f: &[BigInt],
    g: &[BigInt],
    h: &[BigInt],
    s: &[BigInt],
    t: &[BigInt],
    m: &BigInt,
) -> (ZPoly, ZPoly, ZPoly, ZPoly) {
    let m2 = m * m;
    let e = zsub(f, &zmul(g, h, &m2), &m2);
    let (q, r) = zdivrem_monic(&zmul(s, &e, &m2), h, &m2);
    let g2 = zadd(&zadd(g, &zmul(t, &e, &m2), &m2), &zmul(&q, g, &m2), &m2);
    let h2 = zadd(h, &r, &m2);
    let b = zsub(
        &zadd(&zmul(s, &g2, &m2), &zmul(t, &h2, &m2), &m2),
        &[BigInt::one()],
        &m2,
    );
    let (c, d) = zdivrem_monic(&zmul(s, &b, &m2), &h2, &m2);
    let s2 = zsub(s, &d, &m2);
    let t2 = zsub(&zsub(t, &zmul(t, &b, &m2), &m2), &zmul(&c, &g2, &m2), &m2);
    (g2, h2, s2, t2)
}

/// Lifts `f = lc(f) * prod(factors) mod p` to a factorization modulo `modulus = p^(2^k)`.
/// Returns monic lifted factors in the same order.
fn multifactor_lift(f: &[BigInt], factors: &[PolyP], fp: &Fp, modulus: &BigInt) -> Vec<ZPoly> {
    if factors.len() == 1 {
        let lc = f.last().unwrap().clone();
        let inv = lc.modinv(modulus).expect("leading coefficient is a unit");
        return vec![reduce(
            &f.iter().map(|c| c * &inv).collect::<Vec<_>>(),
            modulus,
        )];
    }
    let (left, right) = factors.split_at(factors.len() / 2);
    let prod = |fs: &[PolyP]| fs.iter().fold(vec![1u64], |acc, g| fp.mul_poly(&acc, g));
    // h is the monic half, g carries the leading coefficient.
    let h0 = prod(left);
    let lc_p = to_p(&[f.last().unwrap().clone()], fp.p)[0];
    let g0: PolyP = prod(right).iter().map(|&c| c * lc_p % fp.p).collect();
    let (_, s0, t0) = fp.ext_gcd(&g0, &h0);
    let p = BigInt::from(fp.p);
    let (mut g, mut h, mut s, mut t) = (to_z(&g0), to_z(&h0), to_z(&s0), to_z(&t0));
    let mut m = p.clone();
    while &m < modulus {
        let (g2, h2, s2, t2) = hensel_step(f, &g, &h, &s, &t, &m);
        g = g2;
        h = h2;
        s = s2;
        t = t2;
        m = &m * &m;
    }
    let mut out = multifactor_lift(&h, left, fp, modulus);
    out.extend(multifactor_lift(&g, right, fp, modulus));
    out
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).filter(|&n| (2..).take_while(|d| d * d <= n).all(|d| n % d != 0))
}

fn exact_div(f: &[BigInt], g: &[BigInt]) -> Option<ZPoly> {
    let fq = Poly::from_bigints(f);
    let gq = Poly::from_bigints(g);
    let (q, r) = fq.div_rem(&gq);
    if !r.is_zero() || !q.has_integer_coeffs() {
        return None;
    }
    Some(q.coeffs().iter().map(|c| c.to_integer()).collect())
}

fn primitive(f: &[BigInt]) -> ZPoly {
    let g = f.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    let sign = if f.last().is_some_and(|c| c.is_negative()) {
        -BigInt::one()
    } else {
        BigInt::one()
    };
    f.iter().map(|c| c / &g * &sign).collect()
}

fn for_each_subset(n: usize, k: usize, visit: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(
        start: usize,
        n: usize,
        k: usize,
        cur: &mut Vec<usize>,
        visit: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == k {
            return visit(cur);
        }
        for i in start..n {
            cur.push(i);
            if rec(i + 1, n, k, cur, visit) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(0, n, k, &mut Vec::new(), visit)
}

/// Irreducible factors (primitive, positive leading coefficient) of a
/// primitive square-free integer polynomial of positive degree.
fn factor_squarefree_z(f: &ZPoly) -> Vec<ZPoly> {
    let n = f.len() - 1;
    if n == 1 {
        return vec![f.clone()];
    }
    let lc = f.last().unwrap().clone();

    // Pick the prime giving the fewest modular factors among a few candidates.
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut best: Option<(Fp, Vec<PolyP>)> = None;
    let mut tried = 0;
    for p in small_primes() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = Fp::new(p);
        let fm = to_p(f, p);
        if !fp.is_squarefree(&fm) {
            continue;
        }
        let fs = fp.factor_squarefree(&fm, &mut rng);
        if fs.len() == 1 {
            return vec![f.clone()];
        }
        if best.as_ref().is_none_or(|(_, b)| fs.len() < b.len()) {
            best = Some((fp, fs));
        }
        tried += 1;
        if tried >= 5 {
            break;
        }
    }
    let (fp, modular) = best.expect("a suitable prime always exists");

    // Mignotte-style bound on factor coefficients, times the leading coefficient.
    let norm_sq: BigInt = f.iter().map(|c| c * c).sum();
    let norm = norm_sq.sqrt() + 1u32;
    let bound: BigInt = (BigInt::one() << n) * norm * lc.abs() * 2u32;
    let p = BigInt::from(fp.p);
    let mut modulus = p.clone();
    while modulus <= bound {
        modulus = &modulus * &modulus;
    }
    let mut lifted = multifactor_lift(f, &modular, &fp, &modulus);

    let mut rest = f.clone();
    let mut found = Vec::new();
    let mut k = 1;
    while 2 * k <= lifted.len() {
        let mut hit: Option<(Vec<usize>, ZPoly, ZPoly)> = None;
        let lc_rest = rest.last().unwrap().clone();
        for_each_subset(lifted.len(), k, &mut |subset| {
            let mut cand = vec![lc_rest.clone()];
            for &i in subset {
                cand = zmul(&cand, &lifted[i], &modulus);
            }
            let cand = primitive(&symmetric(&cand, &modulus));
            if let Some(q) = exact_div(&rest, &cand) {
                hit = Some((subset.to_vec(), cand, q));
                true
            } else {
                false
            }
        });
        match hit {
            Some((subset, g, q)) => {
                found.push(g);
                rest = q;
                for &i in subset.iter().rev() {
                    lifted.remove(i);
                }
            }
            None => k += 1,
        }
    }
    found.push(primitive(&rest));
    found
}

fn sort_key(p: &Poly) -> (usize, Vec<num_rational::BigRational>) {
    (p.degree(), p.coeffs().to_vec())
}

/// Factors a nonzero polynomial over the rationals into monic irreducible
/// factors with multiplicities, sorted by degree then coefficients.
///
/// The product of `factor^multiplicity` equals `p.monic()`.
pub fn factor_q(p: &Poly) -> Vec<(Poly, u32)> {
    assert!(!p.is_zero(), "factor_q of the zero polynomial");
    let mut out = Vec::new();
    for (sqf, mult) in squarefree_decomposition(p) {
        let (_, prim) = sqf.primitive_part();
        for g in factor_squarefree_z(&prim) {
            out.push((Poly::from_bigints(&g).monic(), mult));
        }
    }
    out.sort_by_key(|a| sort_key(&a.0));
    out
}

pub fn is_irreducible(p: &Poly) -> bool {
    if p.is_constant() {
        return false;
    }
    let f = factor_q(p);
    f.len() == 1 && f[0].1 == 1
}
