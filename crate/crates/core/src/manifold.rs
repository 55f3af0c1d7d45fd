//! Representations restricted to the JSJ tori of a graph manifold.
//!
//! Each torus carries the images `A`, `B` of a basis of its fundamental
//! group. A gluing re-expresses the torus subgroup in the basis preferred by
//! the block on the other side: the columns of `U` give the second basis in
//! terms of the first, `A' = A^u11 B^u21` and `B' = A^u12 B^u22`.
//!
//! When every torus acts as a rank-2 lattice of translations the
//! representation meets the hypothesis of the NPC gluing construction;
//! otherwise a nontrivial torus element with non-ballistic image is reported.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exact::field::NumberField;
use crate::exact::rational::Rational;
use crate::exact::Scalar;
use crate::flats::{flat_certificate, gram, CommutingFamily, FlatCertificate, GramData};
use crate::linalg::{embed_regular_unchecked, QMatrix};
use crate::places::{denominator_primes, Classification, PlaceSet};
use crate::report;
use crate::session::{json_error, parse_field, parse_matrix, RawMatrix, RawScalar};
use crate::word::{parse_word, Word};
use crate::Tolerances;

#[derive(Clone, Debug)]
pub struct TorusRep {
    pub id: String,
    /// Embedded images of the basis.
    pub a: QMatrix,
    pub b: QMatrix,
    /// Determinants in the base field, rendered, when they differ from 1.
    pub bad_determinants: Vec<(String, String)>,
    /// Optional side labels, carried through untouched.
    pub sides: Option<serde_json::Value>,
}

impl TorusRep {
    pub fn generators(&self) -> BTreeMap<String, QMatrix> {
        BTreeMap::from([
            ("a".to_string(), self.a.clone()),
            ("b".to_string(), self.b.clone()),
        ])
    }
}

#[derive(Clone, Debug)]
pub struct GluingSpec {
    pub torus: String,
    /// Integer change of basis; columns express the second basis in the first.
    pub u: [[i64; 2]; 2],
    pub second_basis_words: [String; 2],
}

impl GluingSpec {
    pub fn det(&self) -> i64 {
        self.u[0][0] * self.u[1][1] - self.u[0][1] * self.u[1][0]
    }
}

#[derive(Clone, Debug)]
pub struct GraphRep {
    pub field: Arc<NumberField>,
    pub tori: Vec<TorusRep>,
    pub gluings: Vec<GluingSpec>,
    pub places: PlaceSet,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTorus {
    id: String,
    #[serde(rename = "A")]
    a: RawMatrix,
    #[serde(rename = "B")]
    b: RawMatrix,
    sides: Option<serde_json::Value>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields, rename_all = "camelCase")]
struct RawGluing {
    torus: String,
    #[serde(rename = "U")]
    u: [[i64; 2]; 2],
    second_basis_words: [String; 2],
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGraph {
    field: Option<Vec<RawScalar>>,
    tori: Vec<RawTorus>,
    #[serde(default)]
    gluings: Vec<RawGluing>,
}

/// Parses the graph JSON; determinant problems are kept for [`validate`].
pub fn parse_graph(text: &str) -> Result<GraphRep> {
    let raw: RawGraph = serde_json::from_str(text).map_err(json_error)?;
    let field = parse_field(raw.field.as_deref())?;
    let mut tori = Vec::with_capacity(raw.tori.len());
    for t in raw.tori {
        let (fa, fb) = (parse_matrix(&field, &t.a)?, parse_matrix(&field, &t.b)?);
        let mut bad = Vec::new();
        for (name, m) in [("A", &fa), ("B", &fb)] {
            let det = m.det();
            if det != det.one_like() {
                bad.push((name.to_string(), det.to_string()));
            }
        }
        tori.push(TorusRep {
            id: t.id,
            a: embed_regular_unchecked(&fa),
            b: embed_regular_unchecked(&fb),
            bad_determinants: bad,
            sides: t.sides,
        });
    }
    let gluings = raw
        .gluings
        .into_iter()
        .map(|g| GluingSpec {
            torus: g.torus,
            u: g.u,
            second_basis_words: g.second_basis_words,
        })
        .collect();
    Ok(GraphRep::new(field, tori, gluings))
}

impl GraphRep {
    /// Discovers places over every torus matrix.
    pub fn new(field: Arc<NumberField>, tori: Vec<TorusRep>, gluings: Vec<GluingSpec>) -> Self {
        let places = PlaceSet::new(tori.iter().flat_map(|t| {
            denominator_primes(&t.a)
                .into_iter()
                .chain(denominator_primes(&t.b))
        }));
        GraphRep {
            field,
            tori,
            gluings,
            places,
        }
    }

    pub fn torus(&self, id: &str) -> Option<&TorusRep> {
        self.tori.iter().find(|t| t.id == id)
    }

    fn family(&self, a: QMatrix, b: QMatrix) -> Result<CommutingFamily> {
        CommutingFamily::named(&["a", "b"], vec![a, b], self.places.clone())
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "kind", rename_all = "camelCase")]
pub enum Violation {
    NotCommuting {
        torus: String,
    },
    DeterminantNotOne {
        torus: String,
        generator: String,
        det: String,
    },
    DimensionMismatch {
        torus: String,
        expected: usize,
        found: usize,
    },
    DuplicateTorus {
        torus: String,
    },
    UnknownTorus {
        gluing: usize,
        torus: String,
    },
    NotUnimodular {
        gluing: usize,
        det: i64,
    },
    InvalidWord {
        gluing: usize,
        word: String,
        message: String,
    },
    BasisMismatch {
        gluing: usize,
        torus: String,
        index: usize,
    },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::NotCommuting { torus } => write!(f, "torus {torus}: A and B do not commute"),
            Violation::DeterminantNotOne {
                torus,
                generator,
                det,
            } => {
                write!(f, "torus {torus}: det {generator} = {det}")
            }
            Violation::DimensionMismatch {
                torus,
                expected,
                found,
            } => {
                write!(f, "torus {torus}: dimension {found}, expected {expected}")
            }
            Violation::DuplicateTorus { torus } => write!(f, "torus {torus} defined twice"),
            Violation::UnknownTorus { gluing, torus } => {
                write!(f, "gluing {gluing}: unknown torus {torus}")
            }
            Violation::NotUnimodular { gluing, det } => write!(f, "gluing {gluing}: det U = {det}"),
            Violation::InvalidWord {
                gluing,
                word,
                message,
            } => {
                write!(f, "gluing {gluing}: word `{word}`: {message}")
            }
            Violation::BasisMismatch {
                gluing,
                torus,
                index,
            } => {
                write!(f, "gluing {gluing}: second basis element {index} of torus {torus} does not match U")
            }
        }
    }
}

/// Second basis predicted by `U`.
fn rebased(t: &TorusRep, u: &[[i64; 2]; 2]) -> Result<[QMatrix; 2]> {
    let col = |j: usize| -> Result<QMatrix> { Ok(t.a.pow(u[0][j])?.mul(&t.b.pow(u[1][j])?)) };
    Ok([col(0)?, col(1)?])
}

fn second_basis(
    t: &TorusRep,
    g: &GluingSpec,
) -> std::result::Result<[QMatrix; 2], (String, Error)> {
    let gens = t.generators();
    let eval = |w: &str| {
        parse_word(w)
            .and_then(|p| p.eval(&gens))
            .map_err(|e| (w.to_string(), e))
    };
    Ok([
        eval(&g.second_basis_words[0])?,
        eval(&g.second_basis_words[1])?,
    ])
}

/// All violations of the representation constraints; empty when valid.
pub fn validate(rep: &GraphRep) -> Vec<Violation> {
    let mut out = Vec::new();
    let dim = rep.tori.first().map(|t| t.a.dim());
    for (k, t) in rep.tori.iter().enumerate() {
        if rep.tori[..k].iter().any(|s| s.id == t.id) {
            out.push(Violation::DuplicateTorus {
                torus: t.id.clone(),
            });
        }
        for m in [&t.a, &t.b] {
            if Some(m.dim()) != dim {
                out.push(Violation::DimensionMismatch {
                    torus: t.id.clone(),
                    expected: dim.unwrap_or(0),
                    found: m.dim(),
                });
            }
        }
        for (generator, det) in &t.bad_determinants {
            out.push(Violation::DeterminantNotOne {
                torus: t.id.clone(),
                generator: generator.clone(),
                det: det.clone(),
            });
        }
        if t.a.dim() == t.b.dim() && !t.a.commutes_with(&t.b) {
            out.push(Violation::NotCommuting {
                torus: t.id.clone(),
            });
        }
    }
    for (i, g) in rep.gluings.iter().enumerate() {
        let Some(t) = rep.torus(&g.torus) else {
            out.push(Violation::UnknownTorus {
                gluing: i,
                torus: g.torus.clone(),
            });
            continue;
        };
        if g.det().abs() != 1 {
            out.push(Violation::NotUnimodular {
                gluing: i,
                det: g.det(),
            });
            continue;
        }
        if !t.bad_determinants.is_empty() || t.a.dim() != t.b.dim() {
            continue;
        }
        let actual = match second_basis(t, g) {
            Ok(m) => m,
            Err((word, e)) => {
                out.push(Violation::InvalidWord {
                    gluing: i,
                    word,
                    message: e.to_string(),
                });
                continue;
            }
        };
        let Ok(expected) = rebased(t, &g.u) else {
            continue;
        };
        for index in 0..2 {
            if actual[index] != expected[index] {
                out.push(Violation::BasisMismatch {
                    gluing: i,
                    torus: t.id.clone(),
                    index,
                });
            }
        }
    }
    out
}

fn require_valid(rep: &GraphRep) -> Result<()> {
    match validate(rep).first() {
        Some(v) => Err(Error::InvalidGraph(v.to_string())),
        None => Ok(()),
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TorusCertificate {
    pub torus: String,
    pub certificate: FlatCertificate,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "tag")]
#[allow(clippy::large_enum_variant)]
pub enum NpcCertificate {
    /// Every torus acts as a rank-2 lattice of translations.
    #[serde(rename = "NPC")]
    Npc { tori: Vec<TorusCertificate> },
    /// A nontrivial torus element whose image is not ballistic. An identity
    /// image counts: the identity is unipotent.
    #[serde(rename_all = "camelCase")]
    Obstruction {
        torus: String,
        #[serde(serialize_with = "report::display")]
        witness: Word,
        witness_class: Classification,
        certificate: FlatCertificate,
    },
}

impl NpcCertificate {
    pub fn is_npc(&self) -> bool {
        matches!(self, NpcCertificate::Npc { .. })
    }
}

pub fn npc_certificate(rep: &GraphRep, tol: &Tolerances) -> Result<NpcCertificate> {
    require_valid(rep)?;
    let certs: Vec<FlatCertificate> = rep
        .tori
        .par_iter()
        .map(|t| flat_certificate(&rep.family(t.a.clone(), t.b.clone())?, tol))
        .collect::<Result<_>>()?;
    for (t, c) in rep.tori.iter().zip(&certs) {
        match c {
            FlatCertificate::Lattice { rank: 2, .. } => {}
            FlatCertificate::Degenerate {
                witness,
                witness_class,
                ..
            } => {
                return Ok(NpcCertificate::Obstruction {
                    torus: t.id.clone(),
                    witness: witness.clone(),
                    witness_class: witness_class.clone(),
                    certificate: c.clone(),
                })
            }
            FlatCertificate::Lattice { rank, .. } => {
                return Err(Error::InvalidGraph(format!(
                    "torus {} has lattice rank {rank}",
                    t.id
                )))
            }
        }
    }
    Ok(NpcCertificate::Npc {
        tori: rep
            .tori
            .iter()
            .zip(certs)
            .map(|(t, certificate)| TorusCertificate {
                torus: t.id.clone(),
                certificate,
            })
            .collect(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct CovarianceCheck {
    pub gluing: usize,
    pub torus: String,
    /// `G' = U^T G U` holds exactly on the non-archimedean part.
    pub nonarch_exact: bool,
    /// Largest entry of `|G' - U^T G U|` relative to the largest entry of `U^T G U`.
    #[serde(serialize_with = "report::float")]
    pub arch_relative_error: f64,
    pub passed: bool,
}

pub const COVARIANCE_TOLERANCE: f64 = 1e-8;

/// `U^T G U` for the exact and approximate parts.
pub fn transform_gram(g: &GramData, u: &[[i64; 2]; 2]) -> GramData {
    let mut nonarch = vec![vec![Rational::zero(); 2]; 2];
    let mut arch = vec![vec![0.0; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            for k in 0..2 {
                for l in 0..2 {
                    let c = u[k][i] * u[l][j];
                    if c != 0 {
                        nonarch[i][j] += &g.nonarch[k][l] * Rational::from_integer(BigInt::from(c));
                        arch[i][j] += c as f64 * g.arch[k][l];
                    }
                }
            }
        }
    }
    GramData { nonarch, arch }
}

pub fn gluing_covariance(rep: &GraphRep, tol: &Tolerances) -> Result<Vec<CovarianceCheck>> {
    require_valid(rep)?;
    rep.gluings
        .par_iter()
        .enumerate()
        .map(|(i, gl)| {
            let t = rep.torus(&gl.torus).expect("validated");
            let first = gram(&rep.family(t.a.clone(), t.b.clone())?, tol)?;
            let [a2, b2] = second_basis(t, gl).map_err(|(_, e)| e)?;
            let second = gram(&rep.family(a2, b2)?, tol)?;
            let predicted = transform_gram(&first, &gl.u);
            let nonarch_exact = predicted.nonarch == second.nonarch;
            let scale = predicted
                .arch
                .iter()
                .flatten()
                .fold(0.0f64, |m, x| m.max(x.abs()));
            let diff = predicted
                .arch
                .iter()
                .flatten()
                .zip(second.arch.iter().flatten())
                .fold(0.0f64, |m, (x, y)| m.max((x - y).abs()));
            let arch_relative_error = if diff == 0.0 {
                0.0
            } else {
                diff / scale.max(f64::MIN_POSITIVE)
            };
            Ok(CovarianceCheck {
                gluing: i,
                torus: t.id.clone(),
                nonarch_exact,
                arch_relative_error,
                passed: nonarch_exact && arch_relative_error <= COVARIANCE_TOLERANCE,
            })
        })
        .collect()
}

/// Copy of `rep` in which torus `index` is re-based by the unimodular `u`.
pub fn rebase_torus(rep: &GraphRep, index: usize, u: &[[i64; 2]; 2]) -> Result<GraphRep> {
    let mut out = rep.clone();
    let [a, b] = rebased(&rep.tori[index], u)?;
    out.tori[index].a = a;
    out.tori[index].b = b;
    let id = out.tori[index].id.clone();
    out.gluings.retain(|g| g.torus != id);
    Ok(out)
}
