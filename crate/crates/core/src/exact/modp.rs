//! Dense polynomials over a small prime field `F_p` (`p < 2^31`).

use rand::Rng;
use rand_chacha::ChaCha8Rng;

#[derive(Clone, Copy, Debug)]
pub(crate) struct Fp {
    pub p: u64,
}

pub(crate) type PolyP = Vec<u64>;

impl Fp {
    pub fn new(p: u64) -> Self {
        debug_assert!(p > 2 && p < (1 << 31));
        Fp { p }
    }

    fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.p - b) % self.p
    }

    fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.p
    }

    pub fn pow(&self, mut a: u64, mut e: u64) -> u64 {
        let mut acc = 1;
        a %= self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: u64) -> u64 {
        debug_assert!(!a.is_multiple_of(self.p));
        self.pow(a, self.p - 2)
    }

    pub fn trim(&self, mut f: PolyP) -> PolyP {
        while f.last() == Some(&0) {
            f.pop();
        }
        f
    }

    pub fn deg(f: &PolyP) -> usize {
        f.len().saturating_sub(1)
    }

    pub fn sub_poly(&self, a: &PolyP, b: &PolyP) -> PolyP {
        let n = a.len().max(b.len());
        let v = (0..n)
            .map(|i| self.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
            .collect();
        self.trim(v)
    }

    pub fn mul_poly(&self, a: &PolyP, b: &PolyP) -> PolyP {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0u64; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            if x == 0 {
                continue;
            }
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % self.p;
            }
        }
        self.trim(out)
    }

    pub fn div_rem(&self, a: &PolyP, b: &PolyP) -> (PolyP, PolyP) {
        assert!(!b.is_empty());
        if a.len() < b.len() {
            return (Vec::new(), a.clone());
        }
        let mut rem = a.clone();
        let db = b.len() - 1;
        let inv_lc = self.inv(b[db]);
        let mut quot = vec![0u64; a.len() - db];
        for i in (0..quot.len()).rev() {
            let c = self.mul(rem[i + db], inv_lc);
            if c != 0 {
                for (j, &y) in b.iter().enumerate() {
                    rem[i + j] = self.sub(rem[i + j], self.mul(c, y));
                }
            }
            quot[i] = c;
        }
        rem.truncate(db);
        (self.trim(quot), self.trim(rem))
    }

    pub fn rem(&self, a: &PolyP, b: &PolyP) -> PolyP {
        self.div_rem(a, b).1
    }

    pub fn monic(&self, f: &PolyP) -> PolyP {
        match f.last() {
            None => Vec::new(),
            Some(&lc) => {
                let inv = self.inv(lc);
                f.iter().map(|&c| self.mul(c, inv)).collect()
            }
        }
    }

    pub fn gcd(&self, a: &PolyP, b: &PolyP) -> PolyP {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_empty() {
            let r = self.rem(&a, &b);
            a = b;
            b = r;
        }
        self.monic(&a)
    }

    /// Returns `(g, s, t)` with `s*a + t*b = g` monic.
    pub fn ext_gcd(&self, a: &PolyP, b: &PolyP) -> (PolyP, PolyP, PolyP) {
        let (mut r0, mut r1) = (a.clone(), b.clone());
        let (mut s0, mut s1) = (vec![1u64], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
        while !r1.is_empty() {
            let (q, r) = self.div_rem(&r0, &r1);
            let s = self.sub_poly(&s0, &self.mul_poly(&q, &s1));
            let t = self.sub_poly(&t0, &self.mul_poly(&q, &t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        let inv = self.inv(*r0.last().expect("gcd of zero polynomials"));
        let sc = |v: &PolyP| self.trim(v.iter().map(|&c| self.mul(c, inv)).collect());
        (sc(&r0), sc(&s0), sc(&t0))
    }

    pub fn derivative(&self, f: &PolyP) -> PolyP {
        let v = f
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| self.mul(c, i as u64 % self.p))
            .collect();
        self.trim(v)
    }

    pub fn powmod(&self, base: &PolyP, mut e: u128, modulus: &PolyP) -> PolyP {
        let mut acc = vec![1u64];
        let mut b = self.rem(base, modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.rem(&self.mul_poly(&acc, &b), modulus);
            }
            b = self.rem(&self.mul_poly(&b, &b), modulus);
            e >>= 1;
        }
        acc
    }

    pub fn is_squarefree(&self, f: &PolyP) -> bool {
        let d = self.derivative(f);
        !d.is_empty() && self.gcd(f, &d).len() == 1
    }

    /// Distinct-degree factorization of a monic square-free polynomial.
    fn distinct_degree(&self, f: &PolyP) -> Vec<(PolyP, usize)> {
        let mut out = Vec::new();
        let mut rest = f.clone();
        let x = vec![0u64, 1];
        let mut h = x.clone();
        let mut d = 0;
        while Fp::deg(&rest) >= 2 * (d + 1) {
            d += 1;
            h = self.powmod(&h, self.p as u128, &rest);
            let g = self.gcd(&self.sub_poly(&h, &x), &rest);
            if g.len() > 1 {
                out.push((g.clone(), d));
                rest = self.div_rem(&rest, &g).0;
                h = self.rem(&h, &rest);
            }
        }
        if rest.len() > 1 {
            let deg = Fp::deg(&rest);
            out.push((rest, deg));
        }
        out
    }

    /// Cantor–Zassenhaus splitting of a product of distinct monic irreducibles of degree `d`.
    fn equal_degree(&self, f: &PolyP, d: usize, rng: &mut ChaCha8Rng, out: &mut Vec<PolyP>) {
        let n = Fp::deg(f);
        if n == d {
            out.push(f.clone());
            return;
        }
        loop {
            let a: PolyP = self.trim((0..n).map(|_| rng.gen_range(0..self.p)).collect());
            if a.len() < 2 {
                continue;
            }
            // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p - 1)/2)
            let mut frob = a.clone();
            let mut norm = a.clone();
            for _ in 1..d {
                frob = self.powmod(&frob, self.p as u128, f);
                norm = self.rem(&self.mul_poly(&norm, &frob), f);
            }
            let b = self.sub_poly(&self.powmod(&norm, (self.p as u128 - 1) / 2, f), &vec![1]);
            let g = self.gcd(&b, f);
            if g.len() > 1 && g.len() < f.len() {
                let h = self.div_rem(f, &g).0;
                self.equal_degree(&g, d, rng, out);
                self.equal_degree(&h, d, rng, out);
                return;
            }
        }
    }

    /// Monic irreducible factors of a square-free polynomial.
    pub fn factor_squarefree(&self, f: &PolyP, rng: &mut ChaCha8Rng) -> Vec<PolyP> {
        let f = self.monic(f);
        let mut out = Vec::new();
        for (g, d) in self.distinct_degree(&f) {
            self.equal_degree(&g, d, rng, &mut out);
        }
        out.sort();
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;

    #[test]
    fn factors_x4_minus_1_mod_5() {
        let fp = Fp::new(5);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let f = vec![4, 0, 0, 0, 1];
        let fs = fp.factor_squarefree(&f, &mut rng);
        assert_eq!(fs.len(), 4);
        let prod = fs.iter().fold(vec![1], |acc, g| fp.mul_poly(&acc, g));
        assert_eq!(prod, f);
    }

    #[test]
    fn irreducible_quadratic_mod_7() {
        let fp = Fp::new(7);
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        // x^2 + 1 is irreducible mod 7 since -1 is a non-residue
        let fs = fp.factor_squarefree(&vec![1, 0, 1], &mut rng);
        assert_eq!(fs, vec![vec![1, 0, 1]]);
    }
}
