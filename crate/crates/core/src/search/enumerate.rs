use std::ops::ControlFlow;

use super::{Instance, RainbowPartition, SearchError};
use crate::geometry::{hulls_intersect, PointConfiguration};

/// Upper bound on the number of face tuples the exhaustive search visits:
/// the product over colors of the number of partial injections of the
/// color class into the `r` faces using at most `l_i` vertices.
pub fn estimate_candidates(instance: &Instance) -> u128 {
    let r = instance.r as u128;
    instance
        .coloring
        .sizes()
        .iter()
        .zip(instance.caps.as_slice())
        .map(|(&size, &cap)| {
            let mut total: u128 = 1;
            let (mut choose, mut arrange) = (1u128, 1u128);
            for k in 1..=cap.min(size) as u128 {
                choose = choose * (size as u128 - k + 1) / k;
                arrange *= r - k + 1;
                total = total.saturating_add(choose.saturating_mul(arrange));
            }
            total
        })
        .fold(1u128, u128::saturating_mul)
}

fn guard(instance: &Instance, bound: u64) -> Result<(), SearchError> {
    let estimate = estimate_candidates(instance);
    if estimate > bound as u128 {
        return Err(SearchError::BoundExceeded { estimate, bound });
    }
    Ok(())
}

/// Depth-first walk over capped rainbow face tuples in canonical form.
///
/// Vertices are decided in ascending id order. A vertex may join an open
/// face lacking its color, open the next face, or stay unused; faces are
/// opened in order, so face `j`'s smallest vertex precedes face `j+1`'s and
/// each unordered tuple is produced exactly once. Only complete tuples with
/// all `r` faces nonempty reach `visit`.
struct Walker<'a> {
    colors: &'a [usize],
    caps: &'a [usize],
    r: usize,
    faces: Vec<Vec<usize>>,
    has_color: Vec<Vec<bool>>,
    usage: Vec<usize>,
}

impl<'a> Walker<'a> {
    fn new(instance: &'a Instance) -> Self {
        let m = instance.coloring.num_colors();
        Walker {
            colors: instance.coloring.colors(),
            caps: instance.caps.as_slice(),
            r: instance.r,
            faces: Vec::with_capacity(instance.r),
            has_color: Vec::with_capacity(instance.r),
            usage: vec![0; m],
        }
    }

    fn walk<F>(&mut self, v: usize, visit: &mut F) -> Result<ControlFlow<()>, SearchError>
    where
        F: FnMut(&[Vec<usize>]) -> Result<ControlFlow<()>, SearchError>,
    {
        let n = self.colors.len();
        let opened = self.faces.len();
        if n - v < self.r - opened {
            return Ok(ControlFlow::Continue(()));
        }
        if v == n {
            return visit(&self.faces);
        }
        let c = self.colors[v];
        if self.usage[c] < self.caps[c] {
            self.usage[c] += 1;
            for j in 0..opened {
                if self.has_color[j][c] {
                    continue;
                }
                self.faces[j].push(v);
                self.has_color[j][c] = true;
                let flow = self.walk(v + 1, visit);
                self.has_color[j][c] = false;
                self.faces[j].pop();
                if flow?.is_break() {
                    self.usage[c] -= 1;
                    return Ok(ControlFlow::Break(()));
                }
            }
            if opened < self.r {
                let mut mask = vec![false; self.usage.len()];
                mask[c] = true;
                self.faces.push(vec![v]);
                self.has_color.push(mask);
                let flow = self.walk(v + 1, visit);
                self.faces.pop();
                self.has_color.pop();
                if flow?.is_break() {
                    self.usage[c] -= 1;
                    return Ok(ControlFlow::Break(()));
                }
            }
            self.usage[c] -= 1;
        }
        self.walk(v + 1, visit)
    }
}

fn geometry(instance: &Instance) -> Result<&PointConfiguration, SearchError> {
    instance.config.as_ref().ok_or(SearchError::NoGeometry)
}

/// Complete search: returns a partition whenever one exists.
pub fn find_exhaustive(instance: &Instance, enum_bound: u64) -> Result<Option<RainbowPartition>, SearchError> {
    let config = geometry(instance)?;
    guard(instance, enum_bound)?;
    let mut found = None;
    let _ = Walker::new(instance).walk(0, &mut |faces: &[Vec<usize>]| {
        let res = hulls_intersect(config, faces)?;
        if let Some(witness) = res.witness {
            found = Some(RainbowPartition::new(faces.to_vec()).with_witness(witness));
            return Ok(ControlFlow::Break(()));
        }
        Ok(ControlFlow::Continue(()))
    })?;
    Ok(found)
}

/// Number of canonical partitions satisfying (i), (ii) and (iii).
pub fn count_partitions(instance: &Instance, enum_bound: u64) -> Result<u64, SearchError> {
    let config = geometry(instance)?;
    guard(instance, enum_bound)?;
    let mut count = 0u64;
    let _ = Walker::new(instance).walk(0, &mut |faces: &[Vec<usize>]| {
        if hulls_intersect(config, faces)?.feasible {
            count += 1;
        }
        Ok(ControlFlow::Continue(()))
    })?;
    Ok(count)
}

/// Every canonical capped rainbow tuple, ignoring geometry.
#[cfg(test)]
pub(crate) fn all_candidates(instance: &Instance) -> Vec<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    let _ = Walker::new(instance)
        .walk(0, &mut |faces: &[Vec<usize>]| {
            out.push(faces.to_vec());
            Ok(ControlFlow::Continue(()))
        })
        .unwrap();
    out
}
