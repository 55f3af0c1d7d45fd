//! Exact certificates for the translation behaviour of finitely generated
//! subgroups of `SL_n` over number fields acting on products of symmetric
//! spaces and Euclidean buildings.
//!
//! The pipeline is layered:
//!
//! * [`exact`]: rationals, number fields, polynomials, factorization over
//!   the rationals, complex root isolation and Newton polygons;
//! * [`linalg`]: exact matrices, characteristic polynomials, the regular
//!   representation embedding and simultaneous block decomposition;
//! * [`places`]: place discovery, drift profiles and element classification;
//! * [`flats`]: Gram matrices of commuting families and lattice certificates;
//! * [`manifold`]: NPC certificates or unipotent obstructions for
//!   representations restricted to JSJ tori.

pub mod error;
pub mod exact;
pub mod flats;
pub mod linalg;
pub mod manifold;
pub mod places;
pub mod report;
pub mod session;
pub mod word;

pub use error::{Error, Result};
pub use exact::{Poly, Rational};
pub use flats::{flat_certificate, gram, CommutingFamily, FlatCertificate, GramData};
pub use linalg::{Matrix, QMatrix};
pub use manifold::{npc_certificate, parse_graph, GraphRep, NpcCertificate};
pub use places::{
    classify, discover_places, drift_profile, Classification, DriftProfile, PlaceSet,
};
pub use session::{parse_session, SessionSpec};
pub use word::{parse_word, Word};

/// Numerical tolerances used wherever floating values enter a decision.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Tolerances {
    /// Certified radius for complex root approximations.
    pub root: f64,
    /// Relative threshold (against the trace) for positive definiteness.
    pub pd_epsilon: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            root: exact::roots::DEFAULT_TOLERANCE,
            pd_epsilon: 1e-8,
        }
    }
}
