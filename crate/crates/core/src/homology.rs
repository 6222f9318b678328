//! Reduced simplicial homology ranks over the prime field F_p.
//!
//! Only ranks are computed, so the vanishing statements we certify are
//! homological: a complex with `b̃_i = 0` for `i <= h` over every tested
//! prime is reported as homologically `h`-connected. Nothing here looks at
//! the fundamental group.

use std::collections::HashMap;

use thiserror::Error;

use crate::simplicial::{Simplex, SimplicialComplex};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum HomologyError {
    #[error("{0} is not a prime")]
    NotPrime(u32),
    #[error("boundary degree {k} outside 0..={dim}")]
    DegreeOutOfRange { k: usize, dim: usize },
    #[error("homology of the empty complex is not defined here")]
    EmptyComplex,
}

pub fn is_prime(p: u32) -> bool {
    p >= 2 && (2..).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

/// Sparse matrix over F_p stored by columns; each column is a list of
/// `(row, value)` pairs sorted by row with values in `1..p`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MatrixModP {
    p: u32,
    rows: usize,
    columns: Vec<Vec<(usize, u32)>>,
}

impl MatrixModP {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Result<Self, HomologyError> {
        if !is_prime(p) {
            return Err(HomologyError::NotPrime(p));
        }
        Ok(MatrixModP { p, rows, columns: vec![Vec::new(); cols] })
    }

    /// Builds from signed integer entries in row-major order.
    pub fn from_dense(p: u32, entries: &[Vec<i64>]) -> Result<Self, HomologyError> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        let mut m = Self::zeros(p, rows, cols)?;
        for (i, row) in entries.iter().enumerate() {
            assert_eq!(row.len(), cols, "ragged dense matrix");
            for (j, &v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    pub fn prime(&self) -> u32 {
        self.p
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.columns.len()
    }

    fn reduce(&self, v: i64) -> u32 {
        v.rem_euclid(self.p as i64) as u32
    }

    pub fn set(&mut self, row: usize, col: usize, value: i64) {
        assert!(row < self.rows && col < self.columns.len());
        let value = self.reduce(value);
        let column = &mut self.columns[col];
        match column.binary_search_by_key(&row, |&(r, _)| r) {
            Ok(pos) if value == 0 => {
                column.remove(pos);
            }
            Ok(pos) => column[pos].1 = value,
            Err(_) if value == 0 => {}
            Err(pos) => column.insert(pos, (row, value)),
        }
    }

    pub fn get(&self, row: usize, col: usize) -> u32 {
        let column = &self.columns[col];
        column.binary_search_by_key(&row, |&(r, _)| r).map_or(0, |pos| column[pos].1)
    }

    pub fn column(&self, col: usize) -> &[(usize, u32)] {
        &self.columns[col]
    }

    /// Product `self * other`, for the chain-complex identity check.
    pub fn mul(&self, other: &MatrixModP) -> MatrixModP {
        assert_eq!(self.p, other.p);
        assert_eq!(self.cols(), other.rows);
        let p = self.p as u64;
        let mut out = MatrixModP { p: self.p, rows: self.rows, columns: Vec::new() };
        for col in &other.columns {
            let mut acc: HashMap<usize, u64> = HashMap::new();
            for &(k, b) in col {
                for &(i, a) in &self.columns[k] {
                    *acc.entry(i).or_default() += a as u64 * b as u64 % p;
                }
            }
            let mut entries: Vec<(usize, u32)> =
                acc.into_iter().filter_map(|(i, v)| (v % p != 0).then_some((i, (v % p) as u32))).collect();
            entries.sort_unstable();
            out.columns.push(entries);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }
}

fn inverse_mod(a: u32, p: u32) -> u32 {
    // Fermat: a^(p-2)
    let (mut base, mut exp, mut acc) = (a as u64 % p as u64, p as u64 - 2, 1u64);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p as u64;
        }
        base = base * base % p as u64;
        exp >>= 1;
    }
    acc as u32
}

/// Rank over F_p by column elimination. Columns are processed left to
/// right; each is reduced against earlier pivots keyed by their first
/// nonzero row until it is zero or has a fresh pivot row.
pub fn rank_mod_p(matrix: &MatrixModP) -> usize {
    let p = matrix.p as u64;
    let mut pivots: HashMap<usize, Vec<(usize, u32)>> = HashMap::new();
    for column in &matrix.columns {
        let mut col = column.clone();
        while let Some(&(lead, value)) = col.first() {
            let Some(pivot) = pivots.get(&lead) else {
                // normalise so the stored pivot has leading coefficient one
                let inv = inverse_mod(value, matrix.p) as u64;
                for entry in &mut col {
                    entry.1 = (entry.1 as u64 * inv % p) as u32;
                }
                pivots.insert(lead, col);
                break;
            };
            col = axpy(&col, pivot, (p - value as u64) as u32, matrix.p);
        }
    }
    pivots.len()
}

/// `x + factor * y` over F_p for sorted sparse vectors.
fn axpy(x: &[(usize, u32)], y: &[(usize, u32)], factor: u32, p: u32) -> Vec<(usize, u32)> {
    let (p, factor) = (p as u64, factor as u64);
    let mut out = Vec::with_capacity(x.len() + y.len());
    let (mut i, mut j) = (0, 0);
    while i < x.len() || j < y.len() {
        let take_x = j == y.len() || (i < x.len() && x[i].0 < y[j].0);
        let take_y = i == x.len() || (j < y.len() && y[j].0 < x[i].0);
        if take_x {
            out.push(x[i]);
            i += 1;
        } else if take_y {
            out.push((y[j].0, (factor * y[j].1 as u64 % p) as u32));
            j += 1;
        } else {
            let v = (x[i].1 as u64 + factor * y[j].1 as u64) % p;
            if v != 0 {
                out.push((x[i].0, v as u32));
            }
            i += 1;
            j += 1;
        }
    }
    out
}

/// Matrix of `∂_k` from k-chains to (k-1)-chains with the usual alternating
/// signs; `∂_0` is the augmentation onto a one-dimensional target.
pub fn boundary_matrix(complex: &SimplicialComplex, k: usize, p: u32) -> Result<MatrixModP, HomologyError> {
    let dim = complex.dim().ok_or(HomologyError::EmptyComplex)?;
    if k > dim {
        return Err(HomologyError::DegreeOutOfRange { k, dim });
    }
    let sources = complex.faces(k);
    if k == 0 {
        let mut m = MatrixModP::zeros(p, 1, sources.len())?;
        for j in 0..sources.len() {
            m.set(0, j, 1);
        }
        return Ok(m);
    }
    let targets = complex.faces(k - 1);
    let index: HashMap<&Simplex, usize> = targets.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut m = MatrixModP::zeros(p, targets.len(), sources.len())?;
    for (j, s) in sources.iter().enumerate() {
        let mut column: Vec<(usize, u32)> = s
            .facets()
            .enumerate()
            .map(|(i, t)| {
                let row = index[&t];
                let sign = if i % 2 == 0 { 1 } else { m.reduce(-1) };
                (row, sign)
            })
            .collect();
        column.sort_unstable();
        m.columns[j] = column;
    }
    Ok(m)
}

/// Reduced Betti numbers over F_p, from degree 0 up to the dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiProfile {
    pub prime: u32,
    pub reduced_betti: Vec<usize>,
}

impl BettiProfile {
    /// Alternating sum of the reduced Betti numbers.
    pub fn reduced_euler(&self) -> i64 {
        self.reduced_betti.iter().enumerate().map(|(k, &b)| if k % 2 == 0 { b as i64 } else { -(b as i64) }).sum()
    }

    pub fn connectivity(&self) -> Connectivity {
        match self.reduced_betti.iter().position(|&b| b != 0) {
            Some(first) => Connectivity::Bounded(first as i64 - 1),
            None => Connectivity::AllVanishing { dim: self.reduced_betti.len() as i64 - 1 },
        }
    }
}

pub fn betti_numbers(complex: &SimplicialComplex, p: u32) -> Result<BettiProfile, HomologyError> {
    let dim = complex.dim().ok_or(HomologyError::EmptyComplex)?;
    if !is_prime(p) {
        return Err(HomologyError::NotPrime(p));
    }
    let ranks: Vec<usize> =
        (0..=dim).map(|k| boundary_matrix(complex, k, p).map(|m| rank_mod_p(&m))).collect::<Result<_, _>>()?;
    let f = complex.f_vector();
    let reduced_betti = (0..=dim).map(|k| f[k] - ranks[k] - ranks.get(k + 1).copied().unwrap_or(0)).collect();
    Ok(BettiProfile { prime: p, reduced_betti })
}

/// Homological connectivity: the largest `h` with `b̃_i = 0` for all `i <= h`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Connectivity {
    /// `b̃_{h+1}` is the first nonvanishing reduced Betti number.
    Bounded(i64),
    /// Every reduced Betti number vanishes; `dim` is the complex dimension.
    AllVanishing { dim: i64 },
}

impl Connectivity {
    /// The reported integer: `h`, or the dimension for the all-vanishing case.
    pub fn value(self) -> i64 {
        match self {
            Connectivity::Bounded(h) => h,
            Connectivity::AllVanishing { dim } => dim,
        }
    }

    /// Lower bound usable in inequalities; all-vanishing counts as unbounded.
    pub fn lower_bound(self) -> Option<i64> {
        match self {
            Connectivity::Bounded(h) => Some(h),
            Connectivity::AllVanishing { .. } => None,
        }
    }

    /// True when `b̃_i = 0` for every `i <= h`.
    pub fn at_least(self, h: i64) -> bool {
        self.lower_bound().is_none_or(|v| v >= h)
    }
}

impl std::fmt::Display for Connectivity {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Connectivity::Bounded(h) => write!(f, "{h}"),
            Connectivity::AllVanishing { dim } => write!(f, "{dim}*"),
        }
    }
}

/// Connectivity convention for the empty complex.
pub const EMPTY_COMPLEX_CONNECTIVITY: i64 = -2;

pub fn homological_connectivity(complex: &SimplicialComplex, p: u32) -> Result<Connectivity, HomologyError> {
    Ok(betti_numbers(complex, p)?.connectivity())
}
