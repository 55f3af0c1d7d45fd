//! JSON session input: an optional number field and named generators.
//!
//! ```json
//! {"field": ["-2", "0", "1"],
//!  "generators": {"a": [[["0","1"], "0"], ["0", ["0","1/2"]]]}}
//! ```
//!
//! Field coefficients are listed from the constant term up. A scalar is a
//! rational string (or JSON integer) or an array of coordinates in the power
//! basis of the field. Generators are embedded as rational matrices by the
//! regular representation right after parsing.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::Deserialize;

use crate::error::{Error, Result};
use crate::exact::field::{make_field, FieldElement, NumberField};
use crate::exact::poly::Poly;
use crate::exact::rational::parse_rational;
use crate::exact::Scalar;
use crate::linalg::{embed_regular_unchecked, Matrix, QMatrix};
use crate::places::{discover_places, PlaceSet};
use crate::word::{is_valid_name, parse_word};

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub(crate) enum RawScalar {
    Int(i64),
    Text(String),
    Coords(Vec<RawScalar>),
}

pub(crate) type RawMatrix = Vec<Vec<RawScalar>>;

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawSession {
    field: Option<Vec<RawScalar>>,
    generators: BTreeMap<String, RawMatrix>,
}

pub(crate) fn json_error(e: serde_json::Error) -> Error {
    Error::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    }
}

fn scalar_text(s: &RawScalar) -> Result<String> {
    match s {
        RawScalar::Int(i) => Ok(i.to_string()),
        RawScalar::Text(t) => Ok(t.clone()),
        RawScalar::Coords(_) => Err(Error::InvalidScalar("nested coordinate array".into())),
    }
}

pub(crate) fn parse_field(raw: Option<&[RawScalar]>) -> Result<Arc<NumberField>> {
    match raw {
        None => Ok(NumberField::rationals()),
        Some(coeffs) => {
            let cs = coeffs
                .iter()
                .map(|c| parse_rational(&scalar_text(c)?))
                .collect::<Result<Vec<_>>>()?;
            make_field(&Poly::new(cs))
        }
    }
}

fn parse_scalar(field: &Arc<NumberField>, s: &RawScalar) -> Result<FieldElement> {
    match s {
        RawScalar::Coords(cs) => {
            if cs.len() > field.degree() {
                return Err(Error::InvalidScalar(format!(
                    "{} coordinates for a field of degree {}",
                    cs.len(),
                    field.degree()
                )));
            }
            let coords = cs
                .iter()
                .map(|c| parse_rational(&scalar_text(c)?))
                .collect::<Result<Vec<_>>>()?;
            FieldElement::new(field, coords)
        }
        other => Ok(FieldElement::from_rational(
            field,
            parse_rational(&scalar_text(other)?)?,
        )),
    }
}

pub(crate) fn parse_matrix(
    field: &Arc<NumberField>,
    raw: &RawMatrix,
) -> Result<Matrix<FieldElement>> {
    let rows = raw
        .iter()
        .map(|r| {
            r.iter()
                .map(|s| parse_scalar(field, s))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    Matrix::try_from_rows(rows)
}

/// Checks `det = 1` in the field and embeds; the error names the generator.
pub(crate) fn embed_named(name: &str, m: &Matrix<FieldElement>) -> Result<QMatrix> {
    let det = m.det();
    if det != det.one_like() {
        return Err(Error::DeterminantNotOne {
            name: Some(name.to_string()),
            det: det.to_string(),
        });
    }
    Ok(embed_regular_unchecked(m))
}

#[derive(Clone, Debug)]
pub struct SessionSpec {
    pub field: Arc<NumberField>,
    /// Size of the input matrices before embedding.
    pub dim: usize,
    /// Embedded generators, `dim * deg(field)` square.
    pub generators: BTreeMap<String, QMatrix>,
}

impl SessionSpec {
    pub fn places(&self) -> Result<PlaceSet> {
        discover_places(&self.generators.values().cloned().collect::<Vec<_>>())
    }

    pub fn eval(&self, word: &str) -> Result<QMatrix> {
        parse_word(word)?.eval(&self.generators)
    }

    pub fn get(&self, name: &str) -> Result<&QMatrix> {
        self.generators
            .get(name)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }
}

pub fn parse_session(text: &str) -> Result<SessionSpec> {
    let raw: RawSession = serde_json::from_str(text).map_err(json_error)?;
    let field = parse_field(raw.field.as_deref())?;
    let mut dim = None;
    let mut generators = BTreeMap::new();
    for (name, rm) in &raw.generators {
        if !is_valid_name(name) {
            return Err(Error::InvalidName(name.clone()));
        }
        let m = parse_matrix(&field, rm)?;
        match dim {
            None => dim = Some(m.dim()),
            Some(d) if d != m.dim() => {
                return Err(Error::DimensionMismatch {
                    expected: d,
                    found: m.dim(),
                })
            }
            _ => {}
        }
        generators.insert(name.clone(), embed_named(name, &m)?);
    }
    Ok(SessionSpec {
        field,
        dim: dim.unwrap_or(0),
        generators,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rational::{int, rat};
    use crate::linalg::charpoly;

    #[test]
    fn rational_session() {
        let s = parse_session(r#"{"generators": {"a": [["2","0"],["0","1/2"]]}}"#).unwrap();
        assert_eq!(s.generators["a"], QMatrix::diagonal(&[int(2), rat(1, 2)]));
        assert_eq!(s.places().unwrap().primes().len(), 1);
        let s = parse_session(r#"{"generators": {"u": [[1, 1], [0, 1]]}}"#).unwrap();
        assert_eq!(
            s.eval("u^3").unwrap(),
            QMatrix::from_i64(&[&[1, 3], &[0, 1]])
        );
    }

    #[test]
    fn errors() {
        assert!(matches!(
            parse_session(r#"{"generators": {"g": [["2","0"],["0","1"]]}}"#),
            Err(Error::DeterminantNotOne { name: Some(n), .. }) if n == "g"
        ));
        assert!(matches!(
            parse_session(r#"{"field": ["-1","0","1"], "generators": {}}"#),
            Err(Error::NotIrreducible { .. })
        ));
        assert!(matches!(
            parse_session("{\"generators\":\n {\"a\": [[1,]]}}"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_session(r#"{"generators": {"a": [[1]], "b": [[1,0],[0,1]]}}"#),
            Err(Error::DimensionMismatch { .. })
        ));
        assert!(matches!(
            parse_session(r#"{"generators": {"A": [[1]]}}"#),
            Err(Error::InvalidName(_))
        ));
        assert!(matches!(
            parse_session(r#"{"generators": {"a": [["x"]]}}"#),
            Err(Error::InvalidScalar(_))
        ));
    }

    #[test]
    fn quadratic_field() {
        let s = parse_session(
            r#"{"field": ["-2","0","1"],
                "generators": {"a": [[["0","1"], "0"], ["0", ["0","1/2"]]]}}"#,
        )
        .unwrap();
        let a = &s.generators["a"];
        assert_eq!(a.dim(), 4);
        assert_eq!(s.dim, 2);
        assert_eq!(
            charpoly(a),
            Poly::new(vec![int(1), int(0), rat(-5, 2), int(0), int(1)])
        );
    }
}
