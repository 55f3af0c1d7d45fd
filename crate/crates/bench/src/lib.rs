//! Fixed inputs shared by the benchmarks.

use flatcert_core::exact::rational::{int, rat};
use flatcert_core::flats::CommutingFamily;
use flatcert_core::{PlaceSet, Poly, QMatrix};

/// Dense `n x n` matrix with small rational entries and a fixed pattern.
pub fn dense(n: usize) -> QMatrix {
    let rows = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match (i * 7 + j * 3) % 5 {
                    0 => int(1),
                    1 => rat(-1, 2),
                    2 => int(2),
                    3 => int(0),
                    _ => rat(1, 3),
                })
                .collect()
        })
        .collect();
    QMatrix::from_rows(rows)
}

/// `x^d - x - 1`, irreducible for every `d >= 2`.
pub fn selmer(d: usize) -> Poly {
    let mut cs = vec![int(-1), int(-1)];
    cs.resize(d, int(0));
    cs.push(int(1));
    Poly::new(cs)
}

/// `(x^2 - 2)(x^3 - x - 1)(x^2 + x + 1)^2`.
pub fn composite() -> Poly {
    let a = Poly::from_ints(&[-2, 0, 1]);
    let c = Poly::from_ints(&[1, 1, 1]);
    &(&a * &selmer(3)) * &c.pow(2)
}

/// Rank-`r` family of commuting diagonal matrices in dimension `r + 1`.
pub fn diagonal_family(r: usize) -> CommutingFamily {
    let primes = [2i64, 3, 5, 7, 11, 13];
    let n = r + 1;
    let gens: Vec<QMatrix> = (0..r)
        .map(|k| {
            let mut d = vec![int(1); n];
            d[k] = int(primes[k]);
            d[k + 1] = rat(1, primes[k]);
            QMatrix::diagonal(&d)
        })
        .collect();
    let names: Vec<String> = (0..r).map(|k| format!("g{k}")).collect();
    let names: Vec<&str> = names.iter().map(String::as_str).collect();
    let places = PlaceSet::from_u64(&[2, 3, 5, 7, 11, 13][..r]);
    CommutingFamily::named(&names, gens, places).expect("diagonal matrices commute")
}
