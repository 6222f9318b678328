//! Constrained rainbow partitions: colorings, cap vectors, the verifier,
//! and exhaustive / randomized search over capped rainbow face tuples.

mod enumerate;
mod heuristic;

pub use enumerate::{count_partitions, estimate_candidates, find_exhaustive};
pub use heuristic::find_heuristic;

use thiserror::Error;

use crate::geometry::{hulls_intersect, GeometryError, PointConfiguration, Rational};

/// Default ceiling on the estimated number of candidate face tuples.
pub const DEFAULT_ENUM_BOUND: u64 = 10_000_000;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SearchError {
    #[error("color class {0} is empty")]
    EmptyColorClass(usize),
    #[error("color {color} of vertex {vertex} outside 0..{m}")]
    ColorOutOfRange { vertex: usize, color: usize, m: usize },
    #[error("cap l_{index} = {cap} violates 1 <= l_i <= r = {r}")]
    CapOutOfRange { index: usize, cap: usize, r: usize },
    #[error("{caps} caps given for {m} colors")]
    CapCount { caps: usize, m: usize },
    #[error("invalid instance: {0}")]
    InvalidInstance(String),
    #[error("instance has no coordinates; geometry cannot be checked")]
    NoGeometry,
    #[error("estimated {estimate} candidates exceeds enumeration bound {bound}")]
    BoundExceeded { estimate: u128, bound: u64 },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Assignment of every vertex to one of `m` colors (0-based internally).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    m: usize,
    color_of: Vec<usize>,
}

impl Coloring {
    pub fn new(m: usize, color_of: Vec<usize>) -> Result<Self, SearchError> {
        let mut seen = vec![false; m];
        for (vertex, &color) in color_of.iter().enumerate() {
            if color >= m {
                return Err(SearchError::ColorOutOfRange { vertex, color, m });
            }
            seen[color] = true;
        }
        if let Some(empty) = seen.iter().position(|&s| !s) {
            return Err(SearchError::EmptyColorClass(empty));
        }
        Ok(Coloring { m, color_of })
    }

    /// Contiguous blocks: the first `sizes[0]` vertices get color 0, and so on.
    pub fn from_sizes(sizes: &[usize]) -> Result<Self, SearchError> {
        let color_of = sizes.iter().enumerate().flat_map(|(c, &n)| std::iter::repeat_n(c, n)).collect();
        Self::new(sizes.len(), color_of)
    }

    pub fn num_colors(&self) -> usize {
        self.m
    }

    pub fn num_vertices(&self) -> usize {
        self.color_of.len()
    }

    pub fn color(&self, vertex: usize) -> usize {
        self.color_of[vertex]
    }

    pub fn colors(&self) -> &[usize] {
        &self.color_of
    }

    pub fn class(&self, color: usize) -> Vec<usize> {
        (0..self.color_of.len()).filter(|&v| self.color_of[v] == color).collect()
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut sizes = vec![0; self.m];
        for &c in &self.color_of {
            sizes[c] += 1;
        }
        sizes
    }
}

/// Per-color budgets `l_1, …, l_m` with `1 <= l_i <= r`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CapVector(Vec<usize>);

impl CapVector {
    pub fn new(caps: Vec<usize>, r: usize) -> Result<Self, SearchError> {
        if let Some((index, &cap)) = caps.iter().enumerate().find(|(_, &c)| c == 0 || c > r) {
            return Err(SearchError::CapOutOfRange { index: index + 1, cap, r });
        }
        Ok(CapVector(caps))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Instance {
    pub d: usize,
    pub r: usize,
    pub coloring: Coloring,
    pub caps: CapVector,
    /// `None` for coordinate-free instances, which only support the
    /// combinatorial checks.
    pub config: Option<PointConfiguration>,
}

impl Instance {
    pub fn new(
        d: usize,
        r: usize,
        coloring: Coloring,
        caps: CapVector,
        config: Option<PointConfiguration>,
    ) -> Result<Self, SearchError> {
        if d == 0 {
            return Err(SearchError::InvalidInstance("d must be at least 1".into()));
        }
        if r < 2 {
            return Err(SearchError::InvalidInstance("r must be at least 2".into()));
        }
        if caps.0.len() != coloring.m {
            return Err(SearchError::CapCount { caps: caps.0.len(), m: coloring.m });
        }
        // revalidate against this r in case the caps were built for another
        CapVector::new(caps.0.clone(), r)?;
        if let Some(cfg) = &config {
            if cfg.dim() != d {
                return Err(SearchError::InvalidInstance(format!(
                    "configuration lives in R^{} but d = {d}",
                    cfg.dim()
                )));
            }
            if cfg.len() != coloring.num_vertices() {
                return Err(SearchError::InvalidInstance(format!(
                    "{} points for {} colored vertices",
                    cfg.len(),
                    coloring.num_vertices()
                )));
            }
        }
        Ok(Instance { d, r, coloring, caps, config })
    }

    pub fn num_vertices(&self) -> usize {
        self.coloring.num_vertices()
    }

    fn geometry(&self) -> Result<&PointConfiguration, SearchError> {
        self.config.as_ref().ok_or(SearchError::NoGeometry)
    }
}

/// `r` faces listed in canonical order (each ascending, faces ordered by
/// their smallest vertex), with an optional exact common point.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RainbowPartition {
    faces: Vec<Vec<usize>>,
    pub witness: Option<Vec<Rational>>,
}

impl RainbowPartition {
    /// Canonicalizes the given faces; validity is the verifier's job.
    pub fn new(mut faces: Vec<Vec<usize>>) -> Self {
        for f in &mut faces {
            f.sort_unstable();
        }
        faces.sort_by_key(|f| f.first().copied().unwrap_or(usize::MAX));
        RainbowPartition { faces, witness: None }
    }

    pub fn with_witness(mut self, witness: Vec<Rational>) -> Self {
        self.witness = Some(witness);
        self
    }

    pub fn faces(&self) -> &[Vec<usize>] {
        &self.faces
    }
}

/// True iff no color occurs twice in `face`.
pub fn is_rainbow(coloring: &Coloring, face: &[usize]) -> bool {
    let mut seen = vec![false; coloring.num_colors()];
    face.iter().all(|&v| !std::mem::replace(&mut seen[coloring.color(v)], true))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    WrongFaceCount { expected: usize, found: usize },
    EmptyFace(usize),
    VertexOutOfRange(usize),
    Overlap { vertex: usize },
    NotRainbow { face: usize, color: usize },
    NoCommonPoint,
    CapExceeded { color: usize, usage: usize, cap: usize },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::WrongFaceCount { expected, found } => {
                write!(f, "structural: {found} faces, expected {expected}")
            }
            Violation::EmptyFace(j) => write!(f, "structural: face {} is empty", j + 1),
            Violation::VertexOutOfRange(v) => write!(f, "structural: vertex {v} out of range"),
            Violation::Overlap { vertex } => write!(f, "structural: vertex {vertex} in two faces"),
            Violation::NotRainbow { face, color } => {
                write!(f, "(i): face {} repeats color {}", face + 1, color + 1)
            }
            Violation::NoCommonPoint => write!(f, "(ii): hulls have no common point"),
            Violation::CapExceeded { color, usage, cap } => {
                write!(f, "(iii): color {} used {usage} > {cap}", color + 1)
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VerificationReport {
    pub structural_ok: bool,
    /// Condition (i).
    pub rainbow_ok: bool,
    /// Condition (ii); `None` when geometry was not checked.
    pub intersection_ok: Option<bool>,
    /// Condition (iii).
    pub caps_ok: bool,
    /// Number of vertices of each color in the union of the faces.
    pub usage: Vec<usize>,
    pub first_violation: Option<Violation>,
    pub witness: Option<Vec<Rational>>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// Checks the structural requirements and conditions (i)–(iii).
pub fn verify_partition(
    instance: &Instance,
    partition: &RainbowPartition,
    check_geometry: bool,
) -> Result<VerificationReport, SearchError> {
    let coloring = &instance.coloring;
    let n = instance.num_vertices();
    let faces = partition.faces();
    let mut violations = Vec::new();

    if faces.len() != instance.r {
        violations.push(Violation::WrongFaceCount { expected: instance.r, found: faces.len() });
    }
    let mut owner = vec![false; n];
    let mut in_range = true;
    for (j, face) in faces.iter().enumerate() {
        if face.is_empty() {
            violations.push(Violation::EmptyFace(j));
        }
        for &v in face {
            match owner.get_mut(v) {
                None => {
                    in_range = false;
                    violations.push(Violation::VertexOutOfRange(v));
                }
                Some(slot) if *slot => violations.push(Violation::Overlap { vertex: v }),
                Some(slot) => *slot = true,
            }
        }
    }
    let structural_ok = violations.is_empty();

    let mut usage = vec![0; coloring.num_colors()];
    let mut rainbow_ok = true;
    if in_range {
        for (j, face) in faces.iter().enumerate() {
            let mut seen = vec![false; coloring.num_colors()];
            for &v in face {
                let c = coloring.color(v);
                usage[c] += 1;
                if std::mem::replace(&mut seen[c], true) && rainbow_ok {
                    rainbow_ok = false;
                    violations.push(Violation::NotRainbow { face: j, color: c });
                }
            }
        }
    } else {
        rainbow_ok = false;
    }

    let mut intersection_ok = None;
    let mut witness = None;
    if check_geometry {
        let config = instance.geometry()?;
        if structural_ok {
            let res = hulls_intersect(config, faces)?;
            intersection_ok = Some(res.feasible);
            if !res.feasible {
                violations.push(Violation::NoCommonPoint);
            }
            witness = res.witness;
        } else {
            intersection_ok = Some(false);
        }
    }

    let caps = instance.caps.as_slice();
    let mut caps_ok = in_range;
    for (color, (&used, &cap)) in usage.iter().zip(caps).enumerate() {
        if used > cap {
            caps_ok = false;
            violations.push(Violation::CapExceeded { color, usage: used, cap });
        }
    }

    Ok(VerificationReport {
        structural_ok,
        rainbow_ok,
        intersection_ok,
        caps_ok,
        usage,
        first_violation: violations.into_iter().next(),
        witness,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Strategy {
    Exhaustive,
    Heuristic { restarts: u64, seed: u64 },
}

/// Searches for a partition satisfying (i), (ii) and (iii).
///
/// The exhaustive strategy is complete; the heuristic one may miss.
pub fn find_partition(
    instance: &Instance,
    strategy: Strategy,
    enum_bound: u64,
) -> Result<Option<RainbowPartition>, SearchError> {
    match strategy {
        Strategy::Exhaustive => find_exhaustive(instance, enum_bound),
        Strategy::Heuristic { restarts, seed } => find_heuristic(instance, restarts, seed),
    }
}
