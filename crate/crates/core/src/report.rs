//! Serialization helpers shared by the report types.
//!
//! Exact values are emitted as strings; floats are rounded to 12 significant
//! digits so that reports are byte-stable across platforms and runs.

use serde::ser::{SerializeMap, SerializeSeq};
use serde::Serializer;

use crate::exact::rational::Rational;

/// Rounds to 12 significant digits; `-0.0` becomes `0.0`.
pub fn sig12(x: f64) -> f64 {
    if !x.is_finite() || x == 0.0 {
        return if x == 0.0 { 0.0 } else { x };
    }
    let r: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    if r == 0.0 {
        0.0
    } else {
        r
    }
}

pub fn float<S: Serializer>(x: &f64, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64(sig12(*x))
}

pub fn floats<S: Serializer>(xs: &[f64], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(xs.len()))?;
    for x in xs {
        seq.serialize_element(&sig12(*x))?;
    }
    seq.end()
}

pub fn float_matrix<S: Serializer>(rows: &[Vec<f64>], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(rows.len()))?;
    for r in rows {
        seq.serialize_element(&r.iter().map(|x| sig12(*x)).collect::<Vec<_>>())?;
    }
    seq.end()
}

pub fn rational<S: Serializer>(q: &Rational, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

pub fn rationals<S: Serializer>(qs: &[Rational], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(qs.len()))?;
    for q in qs {
        seq.serialize_element(&q.to_string())?;
    }
    seq.end()
}

pub fn rational_matrix<S: Serializer>(rows: &[Vec<Rational>], s: S) -> Result<S::Ok, S::Error> {
    let mut seq = s.serialize_seq(Some(rows.len()))?;
    for r in rows {
        seq.serialize_element(&r.iter().map(ToString::to_string).collect::<Vec<_>>())?;
    }
    seq.end()
}

/// A map keyed by anything printable, values as rational-string lists.
pub fn rational_lists_by_key<K: ToString, S: Serializer>(
    entries: &std::collections::BTreeMap<K, Vec<Rational>>,
    s: S,
) -> Result<S::Ok, S::Error> {
    let mut map = s.serialize_map(Some(entries.len()))?;
    for (k, v) in entries {
        map.serialize_entry(
            &k.to_string(),
            &v.iter().map(ToString::to_string).collect::<Vec<_>>(),
        )?;
    }
    map.end()
}

pub fn display<T: std::fmt::Display, S: Serializer>(v: &T, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(v)
}
