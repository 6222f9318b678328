use num_traits::{One, Signed, Zero};

use super::lp::{lp_feasible, LpOutcome};
use super::{GeometryError, PointConfiguration, Rational};

/// Outcome of the common-point test for `r` face hulls.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntersectionResult {
    pub feasible: bool,
    pub witness: Option<Vec<Rational>>,
    /// Barycentric weights per face, in the face's vertex order.
    pub weights: Option<Vec<Vec<Rational>>>,
}

impl IntersectionResult {
    fn infeasible() -> Self {
        IntersectionResult { feasible: false, witness: None, weights: None }
    }

    /// Recomputes every face combination and compares with the witness.
    pub fn verify(&self, config: &PointConfiguration, faces: &[Vec<usize>]) -> bool {
        if !self.feasible {
            return self.witness.is_none() && self.weights.is_none();
        }
        let (Some(witness), Some(weights)) = (&self.witness, &self.weights) else {
            return false;
        };
        weights.len() == faces.len()
            && faces.iter().zip(weights).all(|(face, w)| {
                w.len() == face.len()
                    && w.iter().all(|x| !x.is_negative())
                    && w.iter().sum::<Rational>().is_one()
                    && config.combination(face, w) == *witness
            })
    }
}

fn check_faces(config: &PointConfiguration, faces: &[Vec<usize>]) -> Result<(), GeometryError> {
    let mut owner = vec![None; config.len()];
    for (j, face) in faces.iter().enumerate() {
        if face.is_empty() {
            return Err(GeometryError::EmptyFace(j));
        }
        for &v in face {
            let slot = owner.get_mut(v).ok_or(GeometryError::VertexOutOfRange { id: v, count: config.len() })?;
            if let Some(prev) = *slot {
                return Err(GeometryError::OverlappingFaces(prev, j, v));
            }
            *slot = Some(j);
        }
    }
    Ok(())
}

/// Decides whether the convex hulls of the images of `faces` share a point.
///
/// The unknowns are barycentric weights, face by face and vertex by vertex
/// within a face: each face's weights sum to one, and the first face's
/// combination equals every other face's combination coordinate-wise.
pub fn hulls_intersect(config: &PointConfiguration, faces: &[Vec<usize>]) -> Result<IntersectionResult, GeometryError> {
    check_faces(config, faces)?;
    let d = config.dim();
    let num_vars: usize = faces.iter().map(Vec::len).sum();
    let offsets: Vec<usize> = faces
        .iter()
        .scan(0, |acc, f| {
            let start = *acc;
            *acc += f.len();
            Some(start)
        })
        .collect();

    let mut a = Vec::new();
    let mut b = Vec::new();
    for (face, &start) in faces.iter().zip(&offsets) {
        let mut row = vec![Rational::zero(); num_vars];
        for slot in &mut row[start..start + face.len()] {
            *slot = Rational::one();
        }
        a.push(row);
        b.push(Rational::one());
    }
    for (face, &start) in faces.iter().zip(&offsets).skip(1) {
        for c in 0..d {
            let mut row = vec![Rational::zero(); num_vars];
            for (k, &v) in faces[0].iter().enumerate() {
                row[k] = config.point(v)[c].clone();
            }
            for (k, &v) in face.iter().enumerate() {
                row[start + k] = -config.point(v)[c].clone();
            }
            a.push(row);
            b.push(Rational::zero());
        }
    }

    let LpOutcome::Feasible(x) = lp_feasible(&a, &b, num_vars)? else {
        return Ok(IntersectionResult::infeasible());
    };
    let weights: Vec<Vec<Rational>> =
        faces.iter().zip(&offsets).map(|(face, &start)| x[start..start + face.len()].to_vec()).collect();
    let witness = config.combination(&faces[0], &weights[0]);
    Ok(IntersectionResult { feasible: true, witness: Some(witness), weights: Some(weights) })
}

/// Value of the join map at `Σ_j mix_j x_j`, where `x_j` is the point of
/// face `j` with the given barycentric weights.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinMapValue {
    /// Blocks `(mix_j, mix_j * f(x_j))`, each of length `d + 1`.
    pub coords: Vec<Rational>,
    /// All blocks equal, i.e. the value lies on the diagonal.
    pub on_diagonal: bool,
}

fn check_simplex_weights(w: &[Rational], what: &str) -> Result<(), GeometryError> {
    if w.iter().any(Signed::is_negative) {
        return Err(GeometryError::InvalidBarycentric(format!("{what} has a negative entry")));
    }
    if !w.iter().sum::<Rational>().is_one() {
        return Err(GeometryError::InvalidBarycentric(format!("{what} does not sum to 1")));
    }
    Ok(())
}

pub fn join_map_eval(
    config: &PointConfiguration,
    faces: &[Vec<usize>],
    weights: &[Vec<Rational>],
    mix: &[Rational],
) -> Result<JoinMapValue, GeometryError> {
    check_faces(config, faces)?;
    if weights.len() != faces.len() || mix.len() != faces.len() {
        return Err(GeometryError::InvalidBarycentric(format!(
            "{} faces, {} weight vectors, {} mixing weights",
            faces.len(),
            weights.len(),
            mix.len()
        )));
    }
    check_simplex_weights(mix, "mixing vector")?;
    let d = config.dim();
    let mut coords = Vec::with_capacity((d + 1) * faces.len());
    for (j, ((face, w), lambda)) in faces.iter().zip(weights).zip(mix).enumerate() {
        if w.len() != face.len() {
            return Err(GeometryError::InvalidBarycentric(format!(
                "face {j} has {} vertices but {} weights",
                face.len(),
                w.len()
            )));
        }
        check_simplex_weights(w, &format!("weights of face {j}"))?;
        coords.push(lambda.clone());
        coords.extend(config.combination(face, w).into_iter().map(|x| x * lambda));
    }
    let first = &coords[..d + 1];
    let on_diagonal = coords.chunks(d + 1).all(|block| block == first);
    Ok(JoinMapValue { coords, on_diagonal })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::{int, ratio};

    fn line(xs: &[i64]) -> PointConfiguration {
        PointConfiguration::from_integers(1, &xs.iter().map(|&x| vec![x]).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn distinct_singletons() {
        let res = hulls_intersect(&line(&[0, 1]), &[vec![0], vec![1]]).unwrap();
        assert!(!res.feasible);
        assert!(res.witness.is_none());
    }

    #[test]
    fn point_inside_segment() {
        let cfg = line(&[0, 2, 1]);
        let faces = [vec![0, 1], vec![2]];
        let res = hulls_intersect(&cfg, &faces).unwrap();
        assert!(res.feasible);
        assert_eq!(res.witness, Some(vec![int(1)]));
        assert!(res.verify(&cfg, &faces));
    }

    #[test]
    fn point_on_triangle_edge() {
        let cfg = PointConfiguration::from_integers(2, &[vec![0, 0], vec![2, 0], vec![0, 2], vec![1, 1]]).unwrap();
        let faces = [vec![0, 1, 2], vec![3]];
        let res = hulls_intersect(&cfg, &faces).unwrap();
        assert_eq!(res.witness, Some(vec![int(1), int(1)]));
        assert!(res.verify(&cfg, &faces));
        // (1,1) is on the segment (2,0)-(0,2): orient((2,0),(0,2),(1,1)) = 0
        let (ax, ay, bx, by, cx, cy) = (2, 0, 0, 2, 1, 1);
        assert_eq!((bx - ax) * (cy - ay) - (by - ay) * (cx - ax), 0);
    }

    #[test]
    fn degenerate_inputs_need_no_special_case() {
        let cfg = PointConfiguration::from_integers(2, &[vec![1, 1], vec![1, 1], vec![2, 2], vec![0, 0]]).unwrap();
        assert!(hulls_intersect(&cfg, &[vec![0], vec![1]]).unwrap().feasible);
        assert!(hulls_intersect(&cfg, &[vec![2, 3], vec![0]]).unwrap().feasible);
        let res = hulls_intersect(&cfg, &[vec![2, 3], vec![0], vec![1]]).unwrap();
        assert_eq!(res.witness, Some(vec![int(1), int(1)]));
    }

    #[test]
    fn face_errors() {
        let cfg = line(&[0, 1, 2]);
        assert_eq!(hulls_intersect(&cfg, &[vec![0], vec![]]), Err(GeometryError::EmptyFace(1)));
        assert_eq!(hulls_intersect(&cfg, &[vec![0, 1], vec![1]]), Err(GeometryError::OverlappingFaces(0, 1, 1)));
        assert_eq!(
            hulls_intersect(&cfg, &[vec![0], vec![3]]),
            Err(GeometryError::VertexOutOfRange { id: 3, count: 3 })
        );
    }

    #[test]
    fn join_map_examples() {
        let cfg = line(&[0, 0]);
        let faces = [vec![0], vec![1]];
        let w = [vec![int(1)], vec![int(1)]];
        let v = join_map_eval(&cfg, &faces, &w, &[ratio(1, 2), ratio(1, 2)]).unwrap();
        assert_eq!(v.coords, vec![ratio(1, 2), int(0), ratio(1, 2), int(0)]);
        assert!(v.on_diagonal);
        let v = join_map_eval(&cfg, &faces, &w, &[int(1), int(0)]).unwrap();
        assert_eq!(v.coords, vec![int(1), int(0), int(0), int(0)]);
        assert!(!v.on_diagonal);
    }

    #[test]
    fn join_map_on_witness_is_diagonal() {
        let cfg = line(&[0, 4, 1, 3, 7]);
        let faces = [vec![0, 1], vec![2, 3], vec![4]];
        let faces_hit = [vec![0, 1], vec![2, 3]];
        assert!(!hulls_intersect(&cfg, &faces).unwrap().feasible);
        let res = hulls_intersect(&cfg, &faces_hit).unwrap();
        let weights = res.weights.unwrap();
        let v = join_map_eval(&cfg, &faces_hit, &weights, &[ratio(1, 2), ratio(1, 2)]).unwrap();
        assert!(v.on_diagonal);
    }

    #[test]
    fn join_map_rejects_bad_weights() {
        let cfg = line(&[0, 1, 2]);
        let faces = [vec![0, 1], vec![2]];
        let good = [vec![ratio(1, 2), ratio(1, 2)], vec![int(1)]];
        let half = [ratio(1, 2), ratio(1, 2)];
        assert!(join_map_eval(&cfg, &faces, &good, &half).is_ok());
        let neg = [vec![int(2), int(-1)], vec![int(1)]];
        assert!(join_map_eval(&cfg, &faces, &neg, &half).is_err());
        let short = [vec![int(1)], vec![int(1)]];
        assert!(join_map_eval(&cfg, &faces, &short, &half).is_err());
        assert!(join_map_eval(&cfg, &faces, &good, &[int(1), int(1)]).is_err());
    }
}
