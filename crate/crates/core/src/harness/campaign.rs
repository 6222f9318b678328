//! Validation campaigns and the counterexample hunt.
//!
//! A campaign draws seeded random instances satisfying a statement's
//! hypotheses and searches each one for a partition. Under validated
//! hypotheses every trial must end in `found`; an exhaustive `not-found`
//! there means the search (not the statement) is broken and is flagged.

use std::fmt::Write as _;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use super::format::{render_instance, render_partition};
use super::generate::{random_instance, Distribution};
use crate::geometry::format_rational;
use crate::rng::derive_seed;
use crate::search::{
    count_partitions, find_exhaustive, find_heuristic, verify_partition, RainbowPartition, SearchError,
    DEFAULT_ENUM_BOUND,
};

/// The statement whose hypotheses a parameter set is checked against.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Target {
    /// Any number of colors, each of size `>= 2r-1`, with `Σ l_i > (d+1)(r-1)`.
    CapSum,
    /// The `m = d+1` case of `CapSum`.
    CapSumTight,
    /// `m = d+1`, caps `(r-1, …, r-1, r)`.
    OneUncapped,
    /// `d+1` colors of size `>= 2r-1` plus a single-vertex color, all caps `r-1`.
    ExtraSingleton,
    /// `r >= 3`; `d` colors of size `>= 2r-4` capped at `r-1`, one of size `>= 2r-1` uncapped.
    SmallClasses,
    /// `r >= 3`; `d+1` colors of size `>= 2r-4` plus a single-vertex color, all caps `r-1`.
    SmallClassesSingleton,
    /// The open case: `d+1` colors of size `>= 2r-1`, every cap `r-1`.
    AllCapsBelowR,
}

impl Target {
    pub fn name(self) -> &'static str {
        match self {
            Target::CapSum => "thm51",
            Target::CapSumTight => "cor53",
            Target::OneUncapped => "cor55",
            Target::ExtraSingleton => "thm57",
            Target::SmallClasses => "thm58",
            Target::SmallClassesSingleton => "thm59",
            Target::AllCapsBelowR => "prob56",
        }
    }

    /// Minimal color sizes and caps realizing the statement for `(d, r)`.
    pub fn preset(self, d: usize, r: usize) -> (Vec<usize>, Vec<usize>) {
        let big = 2 * r - 1;
        let small = (2 * r).saturating_sub(4).max(1);
        let rep = |x: usize, k: usize| vec![x; k];
        let cat = |mut a: Vec<usize>, b: Vec<usize>| {
            a.extend(b);
            a
        };
        match self {
            Target::CapSum | Target::CapSumTight => (rep(big, d + 1), rep(r, d + 1)),
            Target::OneUncapped => (rep(big, d + 1), cat(rep(r - 1, d), vec![r])),
            Target::ExtraSingleton => (cat(rep(big, d + 1), vec![1]), rep(r - 1, d + 2)),
            Target::SmallClasses => (cat(rep(small, d), vec![big]), cat(rep(r - 1, d), vec![r])),
            Target::SmallClassesSingleton => (cat(rep(small, d + 1), vec![1]), rep(r - 1, d + 2)),
            Target::AllCapsBelowR => (rep(big, d + 1), rep(r - 1, d + 1)),
        }
    }
}

impl std::str::FromStr for Target {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s {
            "thm51" => Target::CapSum,
            "cor53" => Target::CapSumTight,
            "cor55" => Target::OneUncapped,
            "thm57" => Target::ExtraSingleton,
            "thm58" => Target::SmallClasses,
            "thm59" => Target::SmallClassesSingleton,
            "prob56" => Target::AllCapsBelowR,
            other => return Err(format!("unknown target {other:?}")),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CampaignStrategy {
    /// Randomized restarts, then exhaustive search if they all miss.
    HeuristicFirst {
        restarts: u64,
    },
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CampaignParams {
    pub target: Target,
    pub d: usize,
    pub r: usize,
    pub sizes: Vec<usize>,
    pub caps: Vec<usize>,
    pub trials: u64,
    pub seed: u64,
    pub distribution: Distribution,
    pub strategy: CampaignStrategy,
    pub enum_bound: u64,
    /// Skip hypothesis validation (exploratory runs).
    pub override_hypotheses: bool,
}

impl CampaignParams {
    pub fn new(target: Target, d: usize, r: usize, sizes: Vec<usize>, caps: Vec<usize>) -> Self {
        CampaignParams {
            target,
            d,
            r,
            sizes,
            caps,
            trials: 1,
            seed: 0,
            distribution: Distribution::Cube,
            strategy: CampaignStrategy::HeuristicFirst { restarts: 10_000 },
            enum_bound: DEFAULT_ENUM_BOUND,
            override_hypotheses: false,
        }
    }

    pub fn from_preset(target: Target, d: usize, r: usize) -> Self {
        let (sizes, caps) = target.preset(d, r);
        Self::new(target, d, r, sizes, caps)
    }

    fn check_shape(&self) -> Result<(), ParamError> {
        let shape = |msg: String| Err(ParamError::Shape(msg));
        if self.d == 0 {
            return shape("d must be at least 1".into());
        }
        if self.r < 2 {
            return shape("r must be at least 2".into());
        }
        if self.sizes.is_empty() {
            return shape("at least one color is required".into());
        }
        if self.sizes.len() != self.caps.len() {
            return shape(format!("{} color sizes but {} caps", self.sizes.len(), self.caps.len()));
        }
        if self.sizes.contains(&0) {
            return shape("color sizes must be positive".into());
        }
        if let Some(&cap) = self.caps.iter().find(|&&c| c == 0 || c > self.r) {
            return shape(format!("cap {cap} violates 1 <= l_i <= r = {}", self.r));
        }
        Ok(())
    }

    /// Checks the target statement's hypotheses exactly.
    pub fn validate(&self) -> Result<(), ParamError> {
        self.check_shape()?;
        let (d, r) = (self.d, self.r);
        let m = self.sizes.len();
        let fail = |reason: String| Err(ParamError::Hypothesis { target: self.target, reason });
        if !is_prime_power(r) {
            return fail(format!("r = {r} is not a prime power"));
        }
        let big = 2 * r - 1;
        let need_colors = |k: usize| -> Result<(), ParamError> {
            if m != k {
                return Err(ParamError::Hypothesis {
                    target: self.target,
                    reason: format!("needs exactly {k} colors, got {m}"),
                });
            }
            Ok(())
        };
        let sizes_at_least = |range: std::ops::Range<usize>, min: usize| -> Result<(), ParamError> {
            match range.clone().find(|&i| self.sizes[i] < min) {
                Some(i) => Err(ParamError::Hypothesis {
                    target: self.target,
                    reason: format!("|C_{}| = {} < {min}", i + 1, self.sizes[i]),
                }),
                None => Ok(()),
            }
        };
        let caps_at_least = |range: std::ops::Range<usize>, min: usize| -> Result<(), ParamError> {
            match range.clone().find(|&i| self.caps[i] < min) {
                Some(i) => Err(ParamError::Hypothesis {
                    target: self.target,
                    reason: format!("l_{} = {} < {min}", i + 1, self.caps[i]),
                }),
                None => Ok(()),
            }
        };
        let single_vertex = |i: usize| -> Result<(), ParamError> {
            if self.sizes[i] != 1 {
                return Err(ParamError::Hypothesis {
                    target: self.target,
                    reason: format!("C_{} must be a single vertex, has {}", i + 1, self.sizes[i]),
                });
            }
            Ok(())
        };
        let at_least_three = || -> Result<(), ParamError> {
            if r < 3 {
                return Err(ParamError::Hypothesis { target: self.target, reason: format!("needs r >= 3, got {r}") });
            }
            Ok(())
        };

        match self.target {
            Target::CapSum | Target::CapSumTight => {
                if self.target == Target::CapSumTight {
                    need_colors(d + 1)?;
                }
                sizes_at_least(0..m, big)?;
                let total: usize = self.caps.iter().sum();
                let threshold = (d + 1) * (r - 1);
                if total <= threshold {
                    return fail(format!("sum of caps {total} is not > (d+1)(r-1) = {threshold}"));
                }
            }
            Target::OneUncapped => {
                need_colors(d + 1)?;
                sizes_at_least(0..m, big)?;
                caps_at_least(0..d, r - 1)?;
                caps_at_least(d..d + 1, r)?;
            }
            Target::ExtraSingleton => {
                need_colors(d + 2)?;
                sizes_at_least(0..d + 1, big)?;
                single_vertex(d + 1)?;
                caps_at_least(0..m, r - 1)?;
            }
            Target::SmallClasses => {
                at_least_three()?;
                need_colors(d + 1)?;
                sizes_at_least(0..d, 2 * r - 4)?;
                sizes_at_least(d..d + 1, big)?;
                caps_at_least(0..d, r - 1)?;
                caps_at_least(d..d + 1, r)?;
            }
            Target::SmallClassesSingleton => {
                at_least_three()?;
                need_colors(d + 2)?;
                sizes_at_least(0..d + 1, 2 * r - 4)?;
                single_vertex(d + 1)?;
                caps_at_least(0..m, r - 1)?;
            }
            Target::AllCapsBelowR => {
                need_colors(d + 1)?;
                sizes_at_least(0..m, big)?;
                if let Some(i) = self.caps.iter().position(|&c| c != r - 1) {
                    return fail(format!("every cap must be r-1 = {}, l_{} = {}", r - 1, i + 1, self.caps[i]));
                }
            }
        }
        Ok(())
    }
}

pub fn is_prime_power(n: usize) -> bool {
    if n < 2 {
        return false;
    }
    let p = (2..=n).find(|p| n.is_multiple_of(*p)).unwrap();
    let mut k = n;
    while k.is_multiple_of(p) {
        k /= p;
    }
    k == 1
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParamError {
    #[error("malformed parameters: {0}")]
    Shape(String),
    #[error("hypotheses of {} not met: {reason}", target.name())]
    Hypothesis { target: Target, reason: String },
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CampaignError {
    #[error(transparent)]
    Params(#[from] ParamError),
    #[error(transparent)]
    Search(#[from] SearchError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Method {
    Heuristic,
    Exhaustive,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TrialOutcome {
    Found {
        method: Method,
        partition: RainbowPartition,
    },
    /// Exhaustive search completed without a partition.
    NotFound,
    /// Neither the heuristic nor a bounded exhaustive search could decide.
    BoundExceeded,
    /// A returned partition failed re-verification.
    VerificationFailed(String),
    /// Hunt mode: exact number of canonical partitions.
    Counted(u64),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrialRecord {
    pub index: u64,
    pub seed: u64,
    pub outcome: TrialOutcome,
    pub wall_time: Duration,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Mode {
    Campaign,
    Hunt,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CampaignReport {
    mode: Mode,
    pub params: CampaignParams,
    pub trials: Vec<TrialRecord>,
}

impl CampaignReport {
    pub fn found(&self) -> usize {
        self.count(|o| matches!(o, TrialOutcome::Found { .. }))
    }

    pub fn not_found(&self) -> usize {
        self.count(|o| matches!(o, TrialOutcome::NotFound))
    }

    pub fn bound_exceeded(&self) -> usize {
        self.count(|o| matches!(o, TrialOutcome::BoundExceeded))
    }

    pub fn verification_failures(&self) -> usize {
        self.count(|o| matches!(o, TrialOutcome::VerificationFailed(_)))
    }

    fn count(&self, pred: impl Fn(&TrialOutcome) -> bool) -> usize {
        self.trials.iter().filter(|t| pred(&t.outcome)).count()
    }

    /// Validated hypotheses but some trial could not be satisfied.
    pub fn contradiction(&self) -> bool {
        self.mode == Mode::Campaign
            && !self.params.override_hypotheses
            && (self.not_found() > 0 || self.verification_failures() > 0)
    }

    /// Hunt mode: trials whose exact count is zero.
    pub fn candidates(&self) -> Vec<&TrialRecord> {
        self.trials.iter().filter(|t| t.outcome == TrialOutcome::Counted(0)).collect()
    }

    /// Text report; identical inputs give identical bytes unless timings
    /// are requested.
    pub fn render(&self, include_timings: bool) -> String {
        let p = &self.params;
        let list = |xs: &[usize]| xs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
        let mut out = String::new();
        let mode = match self.mode {
            Mode::Campaign => "campaign",
            Mode::Hunt => "hunt",
        };
        let _ = writeln!(out, "report1 {mode}");
        let _ = writeln!(out, "target {}", p.target.name());
        let _ = writeln!(out, "hypotheses {}", if p.override_hypotheses { "override" } else { "validated" });
        let _ = writeln!(out, "d {}", p.d);
        let _ = writeln!(out, "r {}", p.r);
        let _ = writeln!(out, "sizes {}", list(&p.sizes));
        let _ = writeln!(out, "caps {}", list(&p.caps));
        let _ = writeln!(out, "distribution {}", p.distribution.name());
        match (self.mode, p.strategy) {
            (Mode::Hunt, _) | (_, CampaignStrategy::Exhaustive) => out.push_str("strategy exhaustive\n"),
            (_, CampaignStrategy::HeuristicFirst { restarts }) => {
                let _ = writeln!(out, "strategy heuristic-first {restarts}");
            }
        }
        let _ = writeln!(out, "enum_bound {}", p.enum_bound);
        let _ = writeln!(out, "seed {}", p.seed);
        let _ = writeln!(out, "trials {}", p.trials);
        for t in &self.trials {
            let _ = write!(out, "trial {} seed {:016x} ", t.index, t.seed);
            match &t.outcome {
                TrialOutcome::Found { method, partition } => {
                    let how = match method {
                        Method::Heuristic => "heuristic",
                        Method::Exhaustive => "exhaustive",
                    };
                    let faces: Vec<String> = partition.faces().iter().map(|f| list(f)).collect();
                    let _ = write!(out, "found {how} faces {}", faces.join(" | "));
                    if let Some(w) = &partition.witness {
                        let xs: Vec<String> = w.iter().map(format_rational).collect();
                        let _ = write!(out, " witness {}", xs.join(" "));
                    }
                }
                TrialOutcome::NotFound => out.push_str("not-found exhaustive"),
                TrialOutcome::BoundExceeded => out.push_str("inconclusive bound-exceeded"),
                TrialOutcome::VerificationFailed(msg) => {
                    let _ = write!(out, "verification-failed {msg}");
                }
                TrialOutcome::Counted(n) => {
                    let _ = write!(out, "count {n}");
                    if *n == 0 {
                        out.push_str(" candidate");
                    }
                }
            }
            if include_timings {
                let _ = write!(out, " ms {}", t.wall_time.as_millis());
            }
            out.push('\n');
        }
        match self.mode {
            Mode::Campaign => {
                let _ = writeln!(
                    out,
                    "summary found {} not_found {} bound_exceeded {} verify_failed {} of {}",
                    self.found(),
                    self.not_found(),
                    self.bound_exceeded(),
                    self.verification_failures(),
                    self.trials.len()
                );
                let _ = writeln!(out, "contradiction {}", if self.contradiction() { "YES" } else { "no" });
                let first_failure = self
                    .trials
                    .iter()
                    .find(|t| matches!(t.outcome, TrialOutcome::NotFound | TrialOutcome::VerificationFailed(_)));
                if let Some(t) = first_failure {
                    self.append_instance(&mut out, "failure", t.index);
                }
            }
            Mode::Hunt => {
                let candidates = self.candidates();
                let _ = writeln!(
                    out,
                    "summary decided {} inconclusive {} candidates {} of {}",
                    self.trials.len() - self.bound_exceeded(),
                    self.bound_exceeded(),
                    candidates.len(),
                    self.trials.len()
                );
                for t in candidates {
                    self.append_instance(&mut out, "candidate", t.index);
                }
            }
        }
        out
    }

    fn append_instance(&self, out: &mut String, label: &str, index: u64) {
        let _ = writeln!(out, "begin {label} {index}");
        // regenerating is deterministic and the parameters were valid
        if let Ok(inst) = random_instance(&self.params, index) {
            out.push_str(&render_instance(&inst));
        }
        let _ = writeln!(out, "end {label} {index}");
    }

    /// Serialized instances between `begin <label>` / `end <label>` markers.
    pub fn embedded_instances(text: &str, label: &str) -> Vec<(u64, String)> {
        let mut found = Vec::new();
        let mut current: Option<(u64, String)> = None;
        for line in text.lines() {
            let mut tokens = line.split_whitespace();
            match (tokens.next(), tokens.next(), tokens.next()) {
                (Some("begin"), Some(l), Some(idx)) if l == label => {
                    current = idx.parse().ok().map(|i| (i, String::new()));
                }
                (Some("end"), Some(l), Some(_)) if l == label => found.extend(current.take()),
                _ => {
                    if let Some((_, body)) = &mut current {
                        body.push_str(line);
                        body.push('\n');
                    }
                }
            }
        }
        found
    }
}

fn campaign_trial(params: &CampaignParams, index: u64) -> Result<TrialRecord, SearchError> {
    let start = Instant::now();
    let seed = derive_seed(params.seed, index);
    let instance = random_instance(params, index)?;
    let mut found = None;
    if let CampaignStrategy::HeuristicFirst { restarts } = params.strategy {
        found = find_heuristic(&instance, restarts, seed)?.map(|p| (Method::Heuristic, p));
    }
    let outcome = match found {
        Some(hit) => Some(hit),
        None => match find_exhaustive(&instance, params.enum_bound) {
            Ok(p) => p.map(|p| (Method::Exhaustive, p)),
            Err(SearchError::BoundExceeded { .. }) => {
                return Ok(TrialRecord {
                    index,
                    seed,
                    outcome: TrialOutcome::BoundExceeded,
                    wall_time: start.elapsed(),
                })
            }
            Err(e) => return Err(e),
        },
    };
    let outcome = match outcome {
        None => TrialOutcome::NotFound,
        Some((method, partition)) => {
            let report = verify_partition(&instance, &partition, true)?;
            match report.first_violation {
                None => TrialOutcome::Found { method, partition },
                Some(v) => TrialOutcome::VerificationFailed(format!("{v} for {}", render_partition(&partition).trim())),
            }
        }
    };
    Ok(TrialRecord { index, seed, outcome, wall_time: start.elapsed() })
}

fn hunt_trial(params: &CampaignParams, index: u64) -> Result<TrialRecord, SearchError> {
    let start = Instant::now();
    let seed = derive_seed(params.seed, index);
    let instance = random_instance(params, index)?;
    let outcome = match count_partitions(&instance, params.enum_bound) {
        Ok(n) => TrialOutcome::Counted(n),
        Err(SearchError::BoundExceeded { .. }) => TrialOutcome::BoundExceeded,
        Err(e) => return Err(e),
    };
    Ok(TrialRecord { index, seed, outcome, wall_time: start.elapsed() })
}

fn run_trials(
    params: &CampaignParams,
    trial: fn(&CampaignParams, u64) -> Result<TrialRecord, SearchError>,
) -> Result<Vec<TrialRecord>, SearchError> {
    // collected in index order whatever the completion order
    (0..params.trials).into_par_iter().map(|i| trial(params, i)).collect()
}

/// Runs a validation campaign over `params.trials` seeded instances.
pub fn run_campaign(params: &CampaignParams) -> Result<CampaignReport, CampaignError> {
    if params.override_hypotheses {
        params.check_shape()?;
    } else {
        params.validate()?;
    }
    let trials = run_trials(params, campaign_trial)?;
    Ok(CampaignReport { mode: Mode::Campaign, params: params.clone(), trials })
}

/// Exhaustively counts partitions on random instances of the all-caps
/// `r-1` setting and reports every instance with none.
pub fn hunt_counterexample(params: &CampaignParams) -> Result<CampaignReport, CampaignError> {
    let mut params = params.clone();
    params.target = Target::AllCapsBelowR;
    params.strategy = CampaignStrategy::Exhaustive;
    if params.override_hypotheses {
        params.check_shape()?;
    } else {
        params.validate()?;
    }
    let trials = run_trials(&params, hunt_trial)?;
    Ok(CampaignReport { mode: Mode::Hunt, params, trials })
}

/// Re-runs one trial of a campaign (or hunt, for `Target::AllCapsBelowR`).
pub fn replay_trial(params: &CampaignParams, index: u64) -> Result<TrialRecord, SearchError> {
    if params.target == Target::AllCapsBelowR {
        hunt_trial(params, index)
    } else {
        campaign_trial(params, index)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_powers() {
        let pp: Vec<usize> = (0..30).filter(|&n| is_prime_power(n)).collect();
        assert_eq!(pp, vec![2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25, 27, 29]);
    }

    #[test]
    fn presets_satisfy_their_own_hypotheses() {
        for target in [Target::CapSumTight, Target::OneUncapped, Target::ExtraSingleton, Target::AllCapsBelowR] {
            for d in 1..=3 {
                for r in [2, 3, 4, 5] {
                    CampaignParams::from_preset(target, d, r).validate().unwrap();
                }
            }
        }
        for target in [Target::SmallClasses, Target::SmallClassesSingleton] {
            for d in 1..=3 {
                for r in [3, 4, 5] {
                    CampaignParams::from_preset(target, d, r).validate().unwrap();
                }
                assert!(CampaignParams::from_preset(target, d, 2).validate().is_err());
            }
        }
        assert_eq!(Target::OneUncapped.preset(2, 3), (vec![5, 5, 5], vec![2, 2, 3]));
        assert_eq!(Target::ExtraSingleton.preset(1, 2), (vec![3, 3, 1], vec![1, 1, 1]));
        assert_eq!(Target::SmallClasses.preset(1, 3), (vec![2, 5], vec![2, 3]));
        assert_eq!(Target::SmallClassesSingleton.preset(1, 3), (vec![2, 2, 1], vec![2, 2, 2]));
    }

    #[test]
    fn cap_sum_hypotheses_are_exact() {
        let p = |sizes: Vec<usize>, caps: Vec<usize>, d, r| CampaignParams::new(Target::CapSum, d, r, sizes, caps);
        assert!(p(vec![3, 3], vec![2, 1], 1, 2).validate().is_ok());
        // Σ l_i = 2 = (d+1)(r-1)
        assert!(matches!(p(vec![3, 3], vec![1, 1], 1, 2).validate(), Err(ParamError::Hypothesis { .. })));
        assert!(p(vec![3, 2], vec![2, 1], 1, 2).validate().is_err());
        assert!(p(vec![11; 3], vec![6, 6, 6], 1, 6).validate().is_err(), "6 is not a prime power");
        assert!(p(vec![3, 3, 3], vec![2, 1, 1], 2, 2).validate().is_ok());
        assert!(p(vec![5, 5, 5], vec![2, 2, 3], 2, 3).validate().is_ok());
        assert!(matches!(p(vec![3, 3], vec![3, 1], 1, 2).validate(), Err(ParamError::Shape(_))));
    }

    #[test]
    fn invalid_params_need_override() {
        let mut params = CampaignParams::new(Target::CapSum, 1, 2, vec![3, 3], vec![1, 1]);
        params.trials = 2;
        assert!(matches!(run_campaign(&params), Err(CampaignError::Params(_))));
        params.override_hypotheses = true;
        let report = run_campaign(&params).unwrap();
        assert_eq!(report.trials.len(), 2);
        assert!(!report.contradiction());
    }

    #[test]
    fn small_campaign_is_reproducible() {
        let mut params = CampaignParams::new(Target::CapSum, 1, 2, vec![3, 3], vec![2, 1]);
        params.trials = 10;
        params.seed = 5;
        let a = run_campaign(&params).unwrap();
        assert_eq!(a.found(), 10);
        assert!(!a.contradiction());
        let b = run_campaign(&params).unwrap();
        assert_eq!(a.render(false), b.render(false));
        let replay = replay_trial(&params, 3).unwrap();
        assert_eq!(replay.outcome, a.trials[3].outcome);
    }

    #[test]
    fn hunt_reports_separated_instances() {
        let mut params = CampaignParams::from_preset(Target::AllCapsBelowR, 1, 2);
        params.trials = 5;
        params.seed = 11;
        let report = hunt_counterexample(&params).unwrap();
        let text = report.render(false);
        let embedded = CampaignReport::embedded_instances(&text, "candidate");
        assert_eq!(embedded.len(), report.candidates().len());
        assert!(text.contains("summary decided 5 inconclusive 0"));
    }
}
