use thiserror::Error;

/// Errors raised by the certificate pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("minimal polynomial is not irreducible; factor {factor}")]
    NotIrreducible { factor: String },
    #[error("minimal polynomial must have integer coefficients")]
    NonIntegerMinpoly,
    #[error("division by zero")]
    DivideByZero,
    #[error("field elements belong to different fields")]
    FieldMismatch,
    #[error("root isolation did not reach tolerance after {0} iterations")]
    ToleranceNotReached(usize),
    #[error("valuation of a zero constant term is undefined")]
    ZeroConstantTerm,
    #[error("the zero polynomial has no roots")]
    ZeroPolynomial,
    #[error("determinant is {det}, expected 1{}", name.as_ref().map(|n| format!(" for generator {n}")).unwrap_or_default())]
    DeterminantNotOne { name: Option<String>, det: String },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("matrix is not square")]
    NotSquare,
    #[error("matrix is singular")]
    Singular,
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("parse error at position {position}: expected {}", expected.join(" or "))]
    WordParse {
        position: usize,
        expected: Vec<String>,
    },
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid scalar `{0}`")]
    InvalidScalar(String),
    #[error("invalid generator name `{0}`")]
    InvalidName(String),
    #[error("generators {0} and {1} do not commute")]
    NotCommuting(usize, usize),
    #[error("prime {0} divides a denominator but is not in the place set")]
    PlaceSetIncomplete(String),
    #[error("element is not ballistic")]
    NotBallistic,
    #[error("numerical result inconclusive: {0}")]
    NumericalInconclusive(String),
    #[error("empty generator family")]
    EmptyFamily,
    #[error("invalid graph specification: {0}")]
    InvalidGraph(String),
}

impl Error {
    /// Name of the module an error originates from, used when rendering reports.
    pub fn module(&self) -> &'static str {
        use Error::*;
        match self {
            NotMonic
            | NotIrreducible { .. }
            | NonIntegerMinpoly
            | DivideByZero
            | FieldMismatch
            | ToleranceNotReached(_)
            | ZeroConstantTerm
            | ZeroPolynomial
            | InvalidScalar(_) => "exact",
            DeterminantNotOne { .. }
            | DimensionMismatch { .. }
            | NotSquare
            | Singular
            | UnknownGenerator(_)
            | NotCommuting(..) => "linalg",
            PlaceSetIncomplete(_) | NotBallistic => "places",
            NumericalInconclusive(_) | EmptyFamily => "flats",
            InvalidGraph(_) => "manifold",
            WordParse { .. } | Parse { .. } | InvalidName(_) => "cli",
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
