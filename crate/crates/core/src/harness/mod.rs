//! Files, seeded instance generation, validation campaigns and figures.

mod campaign;
mod format;
mod generate;
mod svg;

pub use campaign::{
    hunt_counterexample, is_prime_power, replay_trial, run_campaign, CampaignError, CampaignParams, CampaignReport,
    CampaignStrategy, Method, ParamError, Target, TrialOutcome, TrialRecord,
};
pub use format::{parse_instance, parse_partition, render_instance, render_partition, FormatError};
pub use generate::{random_instance, Distribution, CUBE_HALF_WIDTH, MOMENT_RANGE};
pub use svg::{emit_svg, SvgError};
