//! Finite abstract simplicial complexes: chessboard complexes, skeleta,
//! joins and the capped configuration complex used by the search.

use std::collections::{BTreeSet, HashSet};
use std::fmt::Write as _;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ComplexError {
    #[error("vertex id {id} out of range (complex has {num_vertices} vertices)")]
    VertexOutOfRange { id: usize, num_vertices: usize },
    #[error("empty facet at position {0}")]
    EmptyFacet(usize),
    #[error("simplex vertices must be strictly ascending: {0:?}")]
    NotAscending(Vec<usize>),
    #[error("chessboard dimensions must be positive, got {rows}x{cols}")]
    EmptyBoard { rows: usize, cols: usize },
    #[error("cap {cap} for color block {block} outside [1, {r}]")]
    CapOutOfRange { block: usize, cap: usize, r: usize },
    #[error("color block {0} has size zero")]
    EmptyBlock(usize),
    #[error("sizes and caps differ in length ({sizes} vs {caps})")]
    LengthMismatch { sizes: usize, caps: usize },
    #[error("cx1 line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// A nonempty simplex given by strictly ascending vertex ids.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Simplex(Vec<usize>);

impl Simplex {
    pub fn new(vertices: Vec<usize>) -> Result<Self, ComplexError> {
        if vertices.is_empty() || vertices.windows(2).any(|w| w[0] >= w[1]) {
            return Err(ComplexError::NotAscending(vertices));
        }
        Ok(Simplex(vertices))
    }

    /// Sorts and deduplicates; `None` when nothing is left.
    pub fn from_unsorted(mut vertices: Vec<usize>) -> Option<Self> {
        vertices.sort_unstable();
        vertices.dedup();
        (!vertices.is_empty()).then_some(Simplex(vertices))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn dim(&self) -> usize {
        self.0.len() - 1
    }

    /// Codimension-one faces, the i-th one omitting vertex i.
    pub fn facets(&self) -> impl Iterator<Item = Simplex> + '_ {
        let n = self.0.len();
        (0..if n > 1 { n } else { 0 })
            .map(move |skip| Simplex(self.0.iter().enumerate().filter(|&(i, _)| i != skip).map(|(_, &v)| v).collect()))
    }
}

/// Complex stored as every face, grouped by dimension and sorted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex {
    num_vertices: usize,
    faces_by_dim: Vec<Vec<Simplex>>,
}

impl SimplicialComplex {
    pub fn empty(num_vertices: usize) -> Self {
        SimplicialComplex { num_vertices, faces_by_dim: Vec::new() }
    }

    /// Builds from per-dimension face sets that are already downward closed.
    fn from_layers(num_vertices: usize, layers: Vec<BTreeSet<Simplex>>) -> Self {
        let mut faces_by_dim: Vec<Vec<Simplex>> = layers.into_iter().map(|set| set.into_iter().collect()).collect();
        while faces_by_dim.last().is_some_and(|l| l.is_empty()) {
            faces_by_dim.pop();
        }
        SimplicialComplex { num_vertices, faces_by_dim }
    }

    fn from_unsorted_layers(num_vertices: usize, mut layers: Vec<Vec<Simplex>>) -> Self {
        for layer in &mut layers {
            layer.sort_unstable();
            layer.dedup();
        }
        while layers.last().is_some_and(|l| l.is_empty()) {
            layers.pop();
        }
        SimplicialComplex { num_vertices, faces_by_dim: layers }
    }

    pub fn num_vertices(&self) -> usize {
        self.num_vertices
    }

    pub fn is_empty(&self) -> bool {
        self.faces_by_dim.is_empty()
    }

    /// Dimension of the complex; `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.faces_by_dim.len().checked_sub(1)
    }

    pub fn faces(&self, k: usize) -> &[Simplex] {
        self.faces_by_dim.get(k).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn iter_faces(&self) -> impl Iterator<Item = &Simplex> {
        self.faces_by_dim.iter().flatten()
    }

    pub fn contains(&self, s: &Simplex) -> bool {
        self.faces(s.dim()).binary_search(s).is_ok()
    }

    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_dim.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.f_vector().iter().enumerate().map(|(k, &f)| if k % 2 == 0 { f as i64 } else { -(f as i64) }).sum()
    }

    /// Maximal faces in lexicographic order of their vertex sequences.
    pub fn facets(&self) -> Vec<Simplex> {
        let mut covered: HashSet<Simplex> = HashSet::new();
        let mut out = Vec::new();
        for k in (0..self.faces_by_dim.len()).rev() {
            for s in &self.faces_by_dim[k] {
                if !covered.contains(s) {
                    out.push(s.clone());
                }
            }
            covered = self.faces_by_dim[k].iter().flat_map(Simplex::facets).collect();
        }
        out.sort();
        out
    }

    /// Checks the structural invariants; used by tests and file readers.
    pub fn check_invariants(&self) -> Result<(), String> {
        for (k, layer) in self.faces_by_dim.iter().enumerate() {
            if layer.is_empty() {
                return Err(format!("dimension {k} has no faces"));
            }
            if layer.windows(2).any(|w| w[0] >= w[1]) {
                return Err(format!("dimension {k} not strictly sorted"));
            }
            for s in layer {
                if s.dim() != k {
                    return Err(format!("{s:?} stored in dimension {k}"));
                }
                if s.vertices().iter().any(|&v| v >= self.num_vertices) {
                    return Err(format!("{s:?} has a vertex >= {}", self.num_vertices));
                }
                for t in s.facets() {
                    if !self.contains(&t) {
                        return Err(format!("{s:?} is missing its face {t:?}"));
                    }
                }
            }
        }
        Ok(())
    }
}

/// Downward closure of the given facets.
pub fn make_complex(num_vertices: usize, facets: &[Vec<usize>]) -> Result<SimplicialComplex, ComplexError> {
    let mut layers: Vec<BTreeSet<Simplex>> = Vec::new();
    for (pos, facet) in facets.iter().enumerate() {
        if let Some(&id) = facet.iter().find(|&&v| v >= num_vertices) {
            return Err(ComplexError::VertexOutOfRange { id, num_vertices });
        }
        let s = Simplex::from_unsorted(facet.clone()).ok_or(ComplexError::EmptyFacet(pos))?;
        let verts = s.vertices();
        if layers.len() <= s.dim() {
            layers.resize_with(s.dim() + 1, BTreeSet::new);
        }
        if layers[s.dim()].contains(&s) {
            continue;
        }
        // all nonempty subsets via bitmasks; facets are small at desk scale
        let n = verts.len();
        assert!(n < usize::BITS as usize, "facet too large to close");
        for mask in 1usize..(1 << n) {
            let sub: Vec<usize> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| verts[i]).collect();
            let dim = sub.len() - 1;
            layers[dim].insert(Simplex(sub));
        }
    }
    Ok(SimplicialComplex::from_layers(num_vertices, layers))
}

/// Row-major labelling of the cells of an `rows x cols` board, 0-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ChessboardLabel {
    pub rows: usize,
    pub cols: usize,
}

impl ChessboardLabel {
    pub fn vertex(&self, row: usize, col: usize) -> usize {
        debug_assert!(row < self.rows && col < self.cols);
        row * self.cols + col
    }

    pub fn cell(&self, vertex: usize) -> (usize, usize) {
        (vertex / self.cols, vertex % self.cols)
    }
}

/// The chessboard complex: nonempty partial matchings of the grid,
/// i.e. sets of cells with no two in a common row or column.
pub fn chessboard(rows: usize, cols: usize) -> Result<SimplicialComplex, ComplexError> {
    if rows == 0 || cols == 0 {
        return Err(ComplexError::EmptyBoard { rows, cols });
    }
    let label = ChessboardLabel { rows, cols };
    let mut layers: Vec<Vec<Simplex>> = vec![Vec::new(); rows.min(cols)];
    let mut current = Vec::new();
    let mut used_cols = vec![false; cols];

    // Rows are visited in increasing order, so vertex ids come out ascending.
    fn extend(
        start_row: usize,
        label: &ChessboardLabel,
        current: &mut Vec<usize>,
        used_cols: &mut [bool],
        layers: &mut [Vec<Simplex>],
    ) {
        for row in start_row..label.rows {
            for col in 0..label.cols {
                if used_cols[col] {
                    continue;
                }
                used_cols[col] = true;
                current.push(label.vertex(row, col));
                layers[current.len() - 1].push(Simplex(current.clone()));
                extend(row + 1, label, current, used_cols, layers);
                current.pop();
                used_cols[col] = false;
            }
        }
    }
    extend(0, &label, &mut current, &mut used_cols, &mut layers);
    Ok(SimplicialComplex::from_unsorted_layers(rows * cols, layers))
}

/// Faces of dimension at most `k`.
pub fn skeleton(complex: &SimplicialComplex, k: usize) -> SimplicialComplex {
    let keep = complex.faces_by_dim.len().min(k + 1);
    SimplicialComplex { num_vertices: complex.num_vertices, faces_by_dim: complex.faces_by_dim[..keep].to_vec() }
}

/// Join with the vertices of `other` shifted past those of `first`.
pub fn join(first: &SimplicialComplex, other: &SimplicialComplex) -> SimplicialComplex {
    let offset = first.num_vertices;
    let top = first.faces_by_dim.len() + other.faces_by_dim.len();
    let mut layers: Vec<Vec<Simplex>> = vec![Vec::new(); top];

    let empty: [usize; 0] = [];
    let left = std::iter::once(&empty[..]).chain(first.iter_faces().map(Simplex::vertices));
    for a in left {
        let right = std::iter::once(&empty[..]).chain(other.iter_faces().map(Simplex::vertices));
        for b in right {
            if a.is_empty() && b.is_empty() {
                continue;
            }
            let mut verts = Vec::with_capacity(a.len() + b.len());
            verts.extend_from_slice(a);
            verts.extend(b.iter().map(|v| v + offset));
            layers[verts.len() - 1].push(Simplex(verts));
        }
    }
    SimplicialComplex::from_unsorted_layers(first.num_vertices + other.num_vertices, layers)
}

/// Join over color blocks of the `(cap-1)`-skeleton of the chessboard
/// `size x r`; block `i` occupies the vertex range after blocks `0..i`.
pub fn configuration_complex(sizes: &[usize], caps: &[usize], r: usize) -> Result<SimplicialComplex, ComplexError> {
    if sizes.len() != caps.len() {
        return Err(ComplexError::LengthMismatch { sizes: sizes.len(), caps: caps.len() });
    }
    let mut acc = SimplicialComplex::empty(0);
    for (block, (&size, &cap)) in sizes.iter().zip(caps).enumerate() {
        if size == 0 {
            return Err(ComplexError::EmptyBlock(block));
        }
        if cap == 0 || cap > r {
            return Err(ComplexError::CapOutOfRange { block, cap, r });
        }
        let piece = skeleton(&chessboard(size, r)?, cap - 1);
        acc = join(&acc, &piece);
    }
    Ok(acc)
}

/// Connectivity value `min{m, n, floor((m+n+1)/3)} - 2` of the chessboard complex.
pub fn connectivity_formula(m: usize, n: usize) -> i64 {
    let third = (m + n + 1) / 3;
    m.min(n).min(third) as i64 - 2
}

/// Serializes as `cx1`: header line, then facets in lexicographic order.
pub fn write_cx1(complex: &SimplicialComplex) -> String {
    let mut out = format!("cx1 {}\n", complex.num_vertices);
    for facet in complex.facets() {
        let line: Vec<String> = facet.vertices().iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

pub fn parse_cx1(text: &str) -> Result<SimplicialComplex, ComplexError> {
    let mut num_vertices = None;
    let mut facets = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |msg: String| ComplexError::Parse { line: line_no, msg };
        match num_vertices {
            None => {
                let mut parts = line.split_whitespace();
                if parts.next() != Some("cx1") {
                    return Err(err("expected header `cx1 <num_vertices>`".into()));
                }
                let n = parts
                    .next()
                    .ok_or_else(|| err("missing vertex count".into()))?
                    .parse::<usize>()
                    .map_err(|e| err(format!("bad vertex count: {e}")))?;
                if parts.next().is_some() {
                    return Err(err("trailing tokens after header".into()));
                }
                num_vertices = Some(n);
            }
            Some(n) => {
                let facet = line
                    .split_whitespace()
                    .map(|t| t.parse::<usize>().map_err(|e| err(format!("bad vertex id {t:?}: {e}"))))
                    .collect::<Result<Vec<_>, _>>()?;
                if facet.windows(2).any(|w| w[0] >= w[1]) {
                    return Err(err("facet ids must be strictly ascending".into()));
                }
                if let Some(&id) = facet.iter().find(|&&v| v >= n) {
                    return Err(err(format!("vertex id {id} >= {n}")));
                }
                facets.push(facet);
            }
        }
    }
    let n = num_vertices.ok_or(ComplexError::Parse { line: 0, msg: "missing header".into() })?;
    make_complex(n, &facets)
}
