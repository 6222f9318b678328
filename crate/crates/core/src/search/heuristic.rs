use rand::seq::SliceRandom;

use super::{Instance, RainbowPartition, SearchError};
use crate::geometry::hulls_intersect;
use crate::rng::{derive_seed, stream};

/// Randomized search over maximal capped rainbow assignments.
///
/// Each restart draws, per color, `min(l_i, |C_i|)` vertices and sends
/// them to distinct faces; tuples with an empty face are discarded and the
/// rest are LP-checked. Any valid partition extends to such a maximal one
/// (hulls only grow), so a positive instance has positive hit probability.
/// Restart `t` uses the stream `derive_seed(seed, t)`.
pub fn find_heuristic(instance: &Instance, restarts: u64, seed: u64) -> Result<Option<RainbowPartition>, SearchError> {
    let config = instance.config.as_ref().ok_or(SearchError::NoGeometry)?;
    let classes: Vec<Vec<usize>> = (0..instance.coloring.num_colors()).map(|c| instance.coloring.class(c)).collect();
    let caps = instance.caps.as_slice();
    let mut targets: Vec<usize> = (0..instance.r).collect();

    for restart in 0..restarts {
        let mut rng = stream(derive_seed(seed, restart));
        let mut faces: Vec<Vec<usize>> = vec![Vec::new(); instance.r];
        for (class, &cap) in classes.iter().zip(caps) {
            let k = cap.min(class.len());
            let picked: Vec<usize> = class.choose_multiple(&mut rng, k).copied().collect();
            targets.shuffle(&mut rng);
            for (&v, &j) in picked.iter().zip(&targets) {
                faces[j].push(v);
            }
        }
        if faces.iter().any(Vec::is_empty) {
            continue;
        }
        let res = hulls_intersect(config, &faces)?;
        if let Some(witness) = res.witness {
            return Ok(Some(RainbowPartition::new(faces).with_witness(witness)));
        }
    }
    Ok(None)
}
