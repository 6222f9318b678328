use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use colored_tverberg::harness::{
    emit_svg, hunt_counterexample, parse_instance, parse_partition, render_partition, run_campaign, CampaignError,
    CampaignParams, CampaignStrategy, Distribution, Target,
};
use colored_tverberg::homology::betti_numbers;
use colored_tverberg::search::{
    count_partitions, find_partition, verify_partition, Instance, SearchError, Strategy, DEFAULT_ENUM_BOUND,
};
use colored_tverberg::simplicial::{chessboard, connectivity_formula, parse_cx1, write_cx1};

#[derive(Parser)]
#[command(name = "ctverberg", version, about = "Chessboard homology and constrained colored Tverberg partitions")]
struct Cli {
    /// Master seed for every randomized step.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Comma-separated primes for homology computations.
    #[arg(long, global = true, value_delimiter = ',', default_values_t = [2u32, 3, 5])]
    primes: Vec<u32>,
    /// Maximum number of candidate tuples an exhaustive search may visit.
    #[arg(long, global = true, default_value_t = DEFAULT_ENUM_BOUND)]
    enum_bound: u64,
    /// Write the primary output here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the chessboard complex as cx1.
    Chessboard {
        #[arg(long)]
        rows: usize,
        #[arg(long)]
        cols: usize,
    },
    /// Reduced Betti numbers of a cx1 complex.
    Homology {
        #[arg(long)]
        complex: PathBuf,
    },
    /// Compare chessboard connectivity with the closed formula.
    ConnCheck {
        #[arg(long, default_value_t = 5)]
        max_rows: usize,
        #[arg(long, default_value_t = 5)]
        max_cols: usize,
    },
    /// Search an instance for a partition; prints part1 or `none`.
    Find {
        #[arg(long)]
        instance: PathBuf,
        /// Randomized restarts; exhaustive search when omitted.
        #[arg(long)]
        restarts: Option<u64>,
    },
    /// Check a partition against an instance.
    Verify {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        partition: PathBuf,
    },
    /// Exact number of partitions of an instance.
    Count {
        #[arg(long)]
        instance: PathBuf,
    },
    /// Seeded validation campaign.
    Campaign(CampaignArgs),
    /// Exhaustive search for instances with no partition when every cap is r-1.
    Hunt(HuntArgs),
    /// SVG of a planar instance and optional partition.
    Plot {
        #[arg(long)]
        instance: PathBuf,
        #[arg(long)]
        partition: Option<PathBuf>,
    },
}

#[derive(Args)]
struct CampaignArgs {
    /// Named statement supplying sizes and caps (cor53|cor55|thm57|thm58|thm59).
    #[arg(long, conflicts_with = "target")]
    preset: Option<Target>,
    /// Statement whose hypotheses are validated when sizes/caps are explicit.
    #[arg(long, default_value = "thm51")]
    target: Target,
    #[arg(long)]
    d: usize,
    #[arg(long)]
    r: usize,
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    #[arg(long, value_delimiter = ',')]
    caps: Option<Vec<usize>>,
    #[arg(long, default_value_t = 100)]
    trials: u64,
    #[arg(long, default_value = "cube")]
    distribution: Distribution,
    #[arg(long, default_value_t = 10_000)]
    restarts: u64,
    /// Skip the heuristic and search exhaustively.
    #[arg(long)]
    exhaustive: bool,
    /// Run even if the hypotheses fail.
    #[arg(long = "override")]
    override_hypotheses: bool,
    /// Append per-trial wall times (makes the report non-reproducible).
    #[arg(long)]
    timings: bool,
}

#[derive(Args)]
struct HuntArgs {
    #[arg(long)]
    d: usize,
    #[arg(long)]
    r: usize,
    #[arg(long, value_delimiter = ',')]
    sizes: Option<Vec<usize>>,
    #[arg(long, default_value_t = 50)]
    trials: u64,
    #[arg(long, default_value = "cube")]
    distribution: Distribution,
    #[arg(long)]
    timings: bool,
}

enum Failure {
    Usage(String),
    Verification(String),
    Bound(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 1,
            Failure::Verification(_) => 2,
            Failure::Bound(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Verification(m) | Failure::Bound(m) => m,
        }
    }
}

impl From<SearchError> for Failure {
    fn from(e: SearchError) -> Self {
        match e {
            SearchError::BoundExceeded { .. } => Failure::Bound(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<CampaignError> for Failure {
    fn from(e: CampaignError) -> Self {
        match e {
            CampaignError::Search(s) => s.into(),
            other => Failure::Usage(other.to_string()),
        }
    }
}

/// Output text, plus a failure to report after it has been written.
type Outcome = Result<(String, Option<Failure>), Failure>;

fn read(path: &PathBuf) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_instance(path: &PathBuf) -> Result<Instance, Failure> {
    parse_instance(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn run(cli: &Cli) -> Outcome {
    let ok = |s: String| Ok((s, None));
    match &cli.command {
        Command::Chessboard { rows, cols } => {
            ok(write_cx1(&chessboard(*rows, *cols).map_err(|e| Failure::Usage(e.to_string()))?))
        }
        Command::Homology { complex } => {
            let cx = parse_cx1(&read(complex)?).map_err(|e| Failure::Usage(e.to_string()))?;
            let mut out = String::new();
            for &p in &cli.primes {
                let profile = betti_numbers(&cx, p).map_err(|e| Failure::Usage(e.to_string()))?;
                let list: Vec<String> = profile.reduced_betti.iter().map(usize::to_string).collect();
                out.push_str(&format!("betti {p} {}\n", list.join(" ")));
                out.push_str(&format!("connectivity {p} {}\n", profile.connectivity()));
            }
            ok(out)
        }
        Command::ConnCheck { max_rows, max_cols } => {
            let mut out = String::new();
            let mut failed = 0;
            for m in 1..=*max_rows {
                for n in 1..=*max_cols {
                    if (m, n) == (1, 1) {
                        continue;
                    }
                    let cx = chessboard(m, n).map_err(|e| Failure::Usage(e.to_string()))?;
                    let formula = connectivity_formula(m, n);
                    let mut vanish = true;
                    let mut sharp = false;
                    let mut seen = Vec::new();
                    for &p in &cli.primes {
                        let profile = betti_numbers(&cx, p).map_err(|e| Failure::Usage(e.to_string()))?;
                        let conn = profile.connectivity();
                        vanish &= conn.at_least(formula);
                        sharp |= conn == colored_tverberg::homology::Connectivity::Bounded(formula);
                        seen.push(format!("p{p}={conn}"));
                    }
                    let pass = vanish && sharp;
                    failed += usize::from(!pass);
                    out.push_str(&format!(
                        "{m}x{n} formula {formula} {} {}\n",
                        seen.join(" "),
                        if pass { "PASS" } else { "FAIL" }
                    ));
                }
            }
            let failure = (failed > 0).then(|| Failure::Verification(format!("{failed} boards disagree")));
            Ok((out, failure))
        }
        Command::Find { instance, restarts } => {
            let inst = load_instance(instance)?;
            let strategy = match restarts {
                Some(restarts) => Strategy::Heuristic { restarts: *restarts, seed: cli.seed },
                None => Strategy::Exhaustive,
            };
            ok(match find_partition(&inst, strategy, cli.enum_bound)? {
                Some(part) => render_partition(&part),
                None => "none\n".to_string(),
            })
        }
        Command::Verify { instance, partition } => {
            let inst = load_instance(instance)?;
            let part = parse_partition(&read(partition)?).map_err(|e| Failure::Usage(e.to_string()))?;
            let geometry = inst.config.is_some();
            let rep = verify_partition(&inst, &part, geometry)?;
            let yn = |b: bool| if b { "yes" } else { "no" };
            let usage: Vec<String> = rep.usage.iter().map(usize::to_string).collect();
            let mut out = format!(
                "structural {}\nrainbow {}\nintersection {}\ncaps {}\nusage {}\n",
                yn(rep.structural_ok),
                yn(rep.rainbow_ok),
                rep.intersection_ok.map_or("unchecked", yn),
                yn(rep.caps_ok),
                usage.join(" ")
            );
            let failure = match &rep.first_violation {
                None => {
                    out.push_str("result PASS\n");
                    None
                }
                Some(v) => {
                    out.push_str(&format!("result FAIL {v}\n"));
                    Some(Failure::Verification(v.to_string()))
                }
            };
            Ok((out, failure))
        }
        Command::Count { instance } => {
            let inst = load_instance(instance)?;
            ok(format!("{}\n", count_partitions(&inst, cli.enum_bound)?))
        }
        Command::Campaign(args) => {
            let target = args.preset.unwrap_or(args.target);
            let (preset_sizes, preset_caps) = target.preset(args.d, args.r.max(2));
            let (sizes, caps) = match (&args.sizes, &args.caps, args.preset) {
                (Some(s), Some(c), _) => (s.clone(), c.clone()),
                (s, c, Some(_)) => (s.clone().unwrap_or(preset_sizes), c.clone().unwrap_or(preset_caps)),
                _ => return Err(Failure::Usage("--sizes and --caps are required without --preset".into())),
            };
            let mut params = CampaignParams::new(target, args.d, args.r, sizes, caps);
            params.trials = args.trials;
            params.seed = cli.seed;
            params.distribution = args.distribution;
            params.enum_bound = cli.enum_bound;
            params.override_hypotheses = args.override_hypotheses;
            params.strategy = if args.exhaustive {
                CampaignStrategy::Exhaustive
            } else {
                CampaignStrategy::HeuristicFirst { restarts: args.restarts }
            };
            let report = run_campaign(&params)?;
            let failure = report
                .contradiction()
                .then(|| Failure::Verification("exhaustive search failed under validated hypotheses".into()));
            Ok((report.render(args.timings), failure))
        }
        Command::Hunt(args) => {
            let (preset_sizes, caps) = Target::AllCapsBelowR.preset(args.d, args.r.max(2));
            let sizes = args.sizes.clone().unwrap_or(preset_sizes);
            let mut params = CampaignParams::new(Target::AllCapsBelowR, args.d, args.r, sizes, caps);
            params.trials = args.trials;
            params.seed = cli.seed;
            params.distribution = args.distribution;
            params.enum_bound = cli.enum_bound;
            let report = hunt_counterexample(&params)?;
            Ok((report.render(args.timings), None))
        }
        Command::Plot { instance, partition } => {
            let inst = load_instance(instance)?;
            let part = match partition {
                Some(path) => Some(parse_partition(&read(path)?).map_err(|e| Failure::Usage(e.to_string()))?),
                None => None,
            };
            ok(emit_svg(&inst, part.as_ref()).map_err(|e| Failure::Usage(e.to_string()))?)
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    let (text, failure) = match run(&cli) {
        Ok(done) => done,
        Err(f) => (String::new(), Some(f)),
    };
    if !text.is_empty() {
        match &cli.out {
            Some(path) => {
                if let Err(e) = fs::write(path, &text) {
                    eprintln!("error: {}: {e}", path.display());
                    return ExitCode::from(1);
                }
            }
            None => print!("{text}"),
        }
    }
    match failure {
        None => ExitCode::SUCCESS,
        Some(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
