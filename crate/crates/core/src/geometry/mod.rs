//! Exact rational geometry: point configurations, a phase-one simplex
//! feasibility kernel, and the hull-intersection test built on it.

mod hulls;
mod lp;

pub use hulls::{hulls_intersect, join_map_eval, IntersectionResult, JoinMapValue};
pub use lp::{lp_feasible, LpOutcome};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

/// Exact rational number, always kept in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GeometryError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("face {0} is empty")]
    EmptyFace(usize),
    #[error("faces {0} and {1} share vertex {2}")]
    OverlappingFaces(usize, usize, usize),
    #[error("vertex id {id} out of range for {count} points")]
    VertexOutOfRange { id: usize, count: usize },
    #[error("invalid barycentric input: {0}")]
    InvalidBarycentric(String),
    #[error("configuration needs at least one point and d >= 1")]
    EmptyConfiguration,
    #[error("bad rational {0:?}")]
    BadRational(String),
}

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `p/q` or a bare integer.
pub fn parse_rational(token: &str) -> Result<Rational, GeometryError> {
    let bad = || GeometryError::BadRational(token.to_string());
    let (num, den) = match token.split_once('/') {
        Some((n, d)) => (n, d),
        None => (token, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// `p/q`, or just `p` when the denominator is one.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn rational_to_f64(q: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    q.to_f64().unwrap_or(if q.is_negative() { f64::MIN } else { f64::MAX })
}

/// Images of the vertices under the map; point `k` realizes vertex `k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointConfiguration {
    d: usize,
    points: Vec<Vec<Rational>>,
}

impl PointConfiguration {
    pub fn new(d: usize, points: Vec<Vec<Rational>>) -> Result<Self, GeometryError> {
        if d == 0 || points.is_empty() {
            return Err(GeometryError::EmptyConfiguration);
        }
        if let Some((k, p)) = points.iter().enumerate().find(|(_, p)| p.len() != d) {
            return Err(GeometryError::DimensionMismatch(format!(
                "point {k} has {} coordinates, expected {d}",
                p.len()
            )));
        }
        Ok(PointConfiguration { d, points })
    }

    pub fn from_integers(d: usize, points: &[Vec<i64>]) -> Result<Self, GeometryError> {
        Self::new(d, points.iter().map(|p| p.iter().map(|&x| int(x)).collect()).collect())
    }

    pub fn dim(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn point(&self, k: usize) -> &[Rational] {
        &self.points[k]
    }

    pub fn points(&self) -> &[Vec<Rational>] {
        &self.points
    }

    /// Image under `x -> A x + t` with `A` given row-major.
    pub fn transformed(&self, matrix: &[Vec<Rational>], shift: &[Rational]) -> Self {
        assert_eq!(matrix.len(), self.d);
        assert_eq!(shift.len(), self.d);
        let points = self
            .points
            .iter()
            .map(|p| {
                matrix
                    .iter()
                    .zip(shift)
                    .map(|(row, t)| row.iter().zip(p).fold(t.clone(), |acc, (a, x)| acc + a * x))
                    .collect()
            })
            .collect();
        PointConfiguration { d: self.d, points }
    }

    /// Weighted combination of the points of `face`.
    pub fn combination(&self, face: &[usize], weights: &[Rational]) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.d];
        for (&v, w) in face.iter().zip(weights) {
            for (acc, x) in out.iter_mut().zip(&self.points[v]) {
                *acc += w * x;
            }
        }
        out
    }
}
