use std::collections::HashSet;

use num_bigint::BigInt;
use rand::Rng;

use super::campaign::CampaignParams;
use crate::geometry::{PointConfiguration, Rational};
use crate::rng::{derive_seed, stream};
use crate::search::{CapVector, Coloring, Instance, SearchError};

/// Half-width of the integer box for `cube` coordinates.
pub const CUBE_HALF_WIDTH: i64 = 1_000_000;
/// Moment-curve parameters are drawn from `[-MOMENT_RANGE, MOMENT_RANGE]`.
pub const MOMENT_RANGE: i64 = 1_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Distribution {
    /// Independent uniform integer coordinates in the cube.
    Cube,
    /// Points `(t, t^2, …, t^d)` for distinct integers `t`.
    Moment,
}

impl Distribution {
    pub fn name(self) -> &'static str {
        match self {
            Distribution::Cube => "cube",
            Distribution::Moment => "moment",
        }
    }
}

impl std::str::FromStr for Distribution {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "cube" => Ok(Distribution::Cube),
            "moment" => Ok(Distribution::Moment),
            other => Err(format!("unknown distribution {other:?} (cube|moment)")),
        }
    }
}

/// Instance `trial_index` of a campaign, a pure function of the seed and
/// index. Colors occupy contiguous vertex blocks in order.
pub fn random_instance(params: &CampaignParams, trial_index: u64) -> Result<Instance, SearchError> {
    let mut rng = stream(derive_seed(params.seed, trial_index));
    let coloring = Coloring::from_sizes(&params.sizes)?;
    let n = coloring.num_vertices();
    let d = params.d;
    let points: Vec<Vec<Rational>> = match params.distribution {
        Distribution::Cube => (0..n)
            .map(|_| {
                (0..d)
                    .map(|_| Rational::from_integer(rng.gen_range(-CUBE_HALF_WIDTH..=CUBE_HALF_WIDTH).into()))
                    .collect()
            })
            .collect(),
        Distribution::Moment => {
            assert!(n as i64 <= 2 * MOMENT_RANGE + 1, "too many points for distinct moment parameters");
            let mut used = HashSet::with_capacity(n);
            (0..n)
                .map(|_| {
                    let t = loop {
                        let t = rng.gen_range(-MOMENT_RANGE..=MOMENT_RANGE);
                        if used.insert(t) {
                            break BigInt::from(t);
                        }
                    };
                    let mut power = BigInt::from(1);
                    (0..d)
                        .map(|_| {
                            power *= &t;
                            Rational::from_integer(power.clone())
                        })
                        .collect()
                })
                .collect()
        }
    };
    let config = PointConfiguration::new(d, points)?;
    let caps = CapVector::new(params.caps.clone(), params.r)?;
    Instance::new(d, params.r, coloring, caps, Some(config))
}
