//! Places, drift profiles and the element classification.
//!
//! The archimedean place aggregates every complex embedding through the
//! regular representation, so a single list of `N` log-moduli covers all of
//! them. Each prime dividing a generator denominator contributes the Newton
//! slopes of the characteristic polynomial.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::exact::factor::factor_q;
use crate::exact::newton::newton_slopes;
use crate::exact::poly::Poly;
use crate::exact::primes::prime_factors;
use crate::exact::rational::{lcm_denominators, to_f64, Rational};
use crate::exact::roots::complex_roots;
use crate::linalg::{charpoly, euler_phi, is_diagonalizable, is_unipotent, order_bound, QMatrix};
use crate::report;
use crate::Tolerances;

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Place {
    Arch,
    Prime(BigInt),
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Arch => write!(f, "arch"),
            Place::Prime(p) => write!(f, "{p}"),
        }
    }
}

/// The archimedean place plus a sorted list of distinct rational primes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PlaceSet {
    primes: Vec<BigInt>,
}

impl PlaceSet {
    pub fn new(primes: impl IntoIterator<Item = BigInt>) -> Self {
        let mut primes: Vec<BigInt> = primes.into_iter().collect();
        primes.sort();
        primes.dedup();
        PlaceSet { primes }
    }

    pub fn from_u64(primes: &[u64]) -> Self {
        Self::new(primes.iter().map(|&p| BigInt::from(p)))
    }

    pub fn primes(&self) -> &[BigInt] {
        &self.primes
    }

    pub fn contains(&self, p: &BigInt) -> bool {
        self.primes.binary_search(p).is_ok()
    }

    /// Archimedean place first, then primes ascending.
    pub fn places(&self) -> Vec<Place> {
        std::iter::once(Place::Arch)
            .chain(self.primes.iter().cloned().map(Place::Prime))
            .collect()
    }
}

impl Serialize for PlaceSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("PlaceSet", 2)?;
        st.serialize_field("archimedean", &true)?;
        st.serialize_field(
            "primes",
            &self
                .primes
                .iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>(),
        )?;
        st.end()
    }
}

/// Primes dividing some entry denominator of `m`.
pub fn denominator_primes(m: &QMatrix) -> Vec<BigInt> {
    let l = lcm_denominators(m.entries());
    prime_factors(&l.magnitude().clone())
        .into_iter()
        .map(|(p, _)| BigInt::from(p))
        .collect()
}

/// Primes dividing any entry denominator of any generator.
pub fn discover_places(gens: &[QMatrix]) -> Result<PlaceSet> {
    for g in gens {
        let det = g.det();
        if !det.is_one() {
            return Err(Error::DeterminantNotOne {
                name: None,
                det: det.to_string(),
            });
        }
    }
    Ok(PlaceSet::new(gens.iter().flat_map(denominator_primes)))
}

/// Squared drift length split into its approximate and exact parts.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LengthSq {
    #[serde(serialize_with = "report::float")]
    pub arch: f64,
    #[serde(serialize_with = "report::rational")]
    pub nonarch: Rational,
}

impl LengthSq {
    pub fn zero() -> Self {
        LengthSq {
            arch: 0.0,
            nonarch: Rational::zero(),
        }
    }

    pub fn total(&self) -> f64 {
        self.arch + to_f64(&self.nonarch)
    }
}

/// Per-place multisets of eigenvalue log-moduli and valuations.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DriftProfile {
    /// Sorted descending.
    #[serde(serialize_with = "report::floats")]
    pub arch: Vec<f64>,
    /// Sorted descending per prime.
    #[serde(serialize_with = "report::rational_lists_by_key")]
    pub padic: BTreeMap<BigInt, Vec<Rational>>,
}

impl DriftProfile {
    pub fn length_sq(&self) -> LengthSq {
        LengthSq {
            arch: self.arch.iter().map(|x| x * x).sum(),
            nonarch: self.padic.values().flatten().map(|v| v * v).sum(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.arch.iter().all(|x| *x == 0.0) && self.padic.values().flatten().all(Zero::is_zero)
    }

    /// Coordinates of one place as floats.
    pub fn coordinates(&self, place: &Place) -> Vec<f64> {
        match place {
            Place::Arch => self.arch.clone(),
            Place::Prime(p) => self
                .padic
                .get(p)
                .map(|v| v.iter().map(to_f64).collect())
                .unwrap_or_default(),
        }
    }

    /// Profile of the inverse element.
    pub fn negated(&self) -> Self {
        let mut arch: Vec<f64> = self.arch.iter().map(|x| -x).collect();
        arch.reverse();
        let padic = self
            .padic
            .iter()
            .map(|(p, v)| (p.clone(), v.iter().rev().map(|x| -x).collect()))
            .collect();
        DriftProfile { arch, padic }
    }
}

/// Order of the roots of a monic irreducible `f` if they are roots of unity.
pub fn cyclotomic_order(f: &Poly) -> Option<u64> {
    if !f.is_monic() || !f.has_integer_coeffs() {
        return None;
    }
    let d = f.degree();
    if d == 0 {
        return None;
    }
    let bound = order_bound(d);
    // x^k mod f, advanced one power at a time.
    let mut r = Poly::one();
    for k in 1..=bound {
        r = (&r * &Poly::x()).rem(f);
        if euler_phi(k) == d as u64 && r == Poly::one() {
            return Some(k);
        }
    }
    None
}

/// Drift profile of `m` at the given places.
pub fn drift_profile(m: &QMatrix, places: &PlaceSet, tol: &Tolerances) -> Result<DriftProfile> {
    let cp = charpoly(m);
    let mut arch = Vec::with_capacity(m.dim());
    for (f, e) in factor_q(&cp) {
        let logs: Vec<f64> = if cyclotomic_order(&f).is_some() {
            vec![0.0; f.degree()]
        } else {
            complex_roots(&f, tol.root)?
                .iter()
                .map(|r| r.value.norm().ln())
                .collect()
        };
        for _ in 0..e {
            arch.extend_from_slice(&logs);
        }
    }
    arch.sort_by(|a, b| b.total_cmp(a));
    let mut padic = BTreeMap::new();
    for p in places.primes() {
        padic.insert(p.clone(), newton_slopes(&cp, p)?.valuations);
    }
    Ok(DriftProfile { arch, padic })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "tag")]
pub enum Classification {
    Identity,
    Unipotent,
    /// Least `k` with `m^k = I`.
    FiniteOrder {
        order: u64,
    },
    /// `m^order` is unipotent and not the identity.
    VirtuallyUnipotent {
        order: u64,
    },
    Ballistic {
        diagonalizable: bool,
        length2: LengthSq,
    },
}

impl Classification {
    pub fn tag(&self) -> &'static str {
        match self {
            Classification::Identity => "Identity",
            Classification::Unipotent => "Unipotent",
            Classification::FiniteOrder { .. } => "FiniteOrder",
            Classification::VirtuallyUnipotent { .. } => "VirtuallyUnipotent",
            Classification::Ballistic { .. } => "Ballistic",
        }
    }

    pub fn is_ballistic(&self) -> bool {
        matches!(self, Classification::Ballistic { .. })
    }
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::FiniteOrder { order }
            | Classification::VirtuallyUnipotent { order } => {
                write!(f, "{}({order})", self.tag())
            }
            _ => write!(f, "{}", self.tag()),
        }
    }
}

fn check_places(m: &QMatrix, places: &PlaceSet) -> Result<()> {
    match denominator_primes(m)
        .into_iter()
        .find(|p| !places.contains(p))
    {
        Some(p) => Err(Error::PlaceSetIncomplete(p.to_string())),
        None => Ok(()),
    }
}

/// Exact classification of a determinant-one rational matrix.
///
/// A characteristic polynomial all of whose irreducible factors are
/// cyclotomic is exactly the zero-drift case: such factors have integer
/// coefficients and unimodular roots, and conversely (Kronecker) an integral
/// factor with all roots on the unit circle is cyclotomic, while a factor
/// with a denominator prime has a root of nonzero valuation there.
pub fn classify(m: &QMatrix, places: &PlaceSet, tol: &Tolerances) -> Result<Classification> {
    check_places(m, places)?;
    if m.is_identity() {
        return Ok(Classification::Identity);
    }
    if is_unipotent(m) {
        return Ok(Classification::Unipotent);
    }
    let factors = factor_q(&charpoly(m));
    let orders: Option<Vec<u64>> = factors.iter().map(|(f, _)| cyclotomic_order(f)).collect();
    if let Some(orders) = orders {
        let k = orders.into_iter().fold(1u64, |acc, o| acc.lcm(&o));
        return Ok(if m.pow(k as i64)?.is_identity() {
            Classification::FiniteOrder { order: k }
        } else {
            Classification::VirtuallyUnipotent { order: k }
        });
    }
    let profile = drift_profile(m, places, tol)?;
    Ok(Classification::Ballistic {
        diagonalizable: is_diagonalizable(m),
        length2: profile.length_sq(),
    })
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PlaceDirection {
    #[serde(serialize_with = "report::display")]
    pub place: Place,
    #[serde(serialize_with = "report::float")]
    pub norm: f64,
    /// Drift coordinates divided by `norm`; all zero when `norm` is zero.
    #[serde(serialize_with = "report::floats")]
    pub unit: Vec<f64>,
}

/// Join angle `atan(r_to / r_from)`, measured from the `from` factor.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct JoinAngle {
    #[serde(serialize_with = "report::display")]
    pub from: Place,
    #[serde(serialize_with = "report::display")]
    pub to: Place,
    #[serde(serialize_with = "report::float")]
    pub theta: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DirectionProfile {
    pub places: Vec<PlaceDirection>,
    pub angles: Vec<JoinAngle>,
}

/// Per-place norms and unit drift vectors of a ballistic element, with the
/// join angle for every pair of places in canonical order.
pub fn direction_profile(
    m: &QMatrix,
    places: &PlaceSet,
    tol: &Tolerances,
) -> Result<DirectionProfile> {
    if !classify(m, places, tol)?.is_ballistic() {
        return Err(Error::NotBallistic);
    }
    let profile = drift_profile(m, places, tol)?;
    let dirs: Vec<PlaceDirection> = places
        .places()
        .into_iter()
        .map(|place| {
            let coords = profile.coordinates(&place);
            let norm = match &place {
                Place::Arch => coords.iter().map(|x| x * x).sum::<f64>().sqrt(),
                Place::Prime(p) => {
                    to_f64(&profile.padic[p].iter().map(|v| v * v).sum::<Rational>()).sqrt()
                }
            };
            let unit = if norm > 0.0 {
                coords.iter().map(|x| x / norm).collect()
            } else {
                vec![0.0; coords.len()]
            };
            PlaceDirection { place, norm, unit }
        })
        .collect();
    let mut angles = Vec::new();
    for (i, p) in dirs.iter().enumerate() {
        for q in &dirs[i + 1..] {
            let theta = if q.norm == 0.0 {
                0.0
            } else {
                q.norm.atan2(p.norm)
            };
            angles.push(JoinAngle {
                from: p.place.clone(),
                to: q.place.clone(),
                theta,
            });
        }
    }
    Ok(DirectionProfile {
        places: dirs,
        angles,
    })
}
