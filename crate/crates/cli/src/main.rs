mod verify;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use aegame::game::{play_match, Convention, GameRules, Role};
use aegame::graph::BoundVariant;
use aegame::harness::{parse_property, parse_strategy, report_bounds, rows_to_csv, run_sweep, summarize, SweepConfig, SweepSummary};
use aegame::regularity::{validate_constants, ConstantSchedule, ValidationOptions};
use aegame::solver::{solve_tau, SolveValue, DEFAULT_NODE_BUDGET};
use aegame::strategy::DEFAULT_MONITOR_PAIRS;
use aegame::{parse_rational, Rational};

const EXIT_VALIDATION: u8 = 2;
const EXIT_BUDGET: u8 = 3;

#[derive(Parser)]
#[command(name = "aegame", version, about = "Avoider-Enforcer edge games on K_n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Play one match and write its JSON Lines transcript.
    Play(PlayArgs),
    /// Exact hitting round on a tiny board.
    Solve(SolveArgs),
    /// Batch of matches over a range of board sizes, as CSV or JSON.
    Sweep(SweepArgs),
    /// Pseudo-randomness and regularity checks on a graph file.
    Verify(verify::VerifyArgs),
    /// Check a constant schedule against its inequalities.
    Constants(ConstantsArgs),
    /// Table of lower bounds and leading upper-bound terms.
    Bounds(BoundsArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum ConventionArg {
    AvoiderEnforcer,
    MakerBreaker,
}

#[derive(Clone, Copy, ValueEnum)]
enum SeatArg {
    Avoider,
    Enforcer,
    Maker,
    Breaker,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
    Text,
}

#[derive(Args)]
struct RulesArgs {
    /// Property descriptor: edge, subgraph:<name>, induced:<name>, nc:<k>, family:<path>.
    #[arg(long, default_value = "subgraph:K3")]
    property: String,
    #[arg(long, value_enum, default_value = "avoider-enforcer")]
    convention: ConventionArg,
    /// Defaults to the seat whose graph is tested.
    #[arg(long, value_enum)]
    first_mover: Option<SeatArg>,
}

impl RulesArgs {
    fn rules(&self, n: usize) -> Result<GameRules> {
        let property = parse_property(&self.property)?;
        let convention = match self.convention {
            ConventionArg::AvoiderEnforcer => Convention::AvoiderEnforcer,
            ConventionArg::MakerBreaker => Convention::MakerBreaker,
        };
        let first = match self.first_mover {
            None | Some(SeatArg::Avoider | SeatArg::Maker) => Role::Avoider,
            Some(SeatArg::Enforcer | SeatArg::Breaker) => Role::Enforcer,
        };
        Ok(GameRules::new(n, property).with_convention(convention).with_first_mover(first))
    }
}

#[derive(Args)]
struct PlayArgs {
    #[arg(long)]
    n: usize,
    #[arg(long, default_value = "turan:2")]
    avoider: String,
    #[arg(long, default_value = "jumbleg:0.1")]
    enforcer: String,
    #[command(flatten)]
    rules: RulesArgs,
    /// Seed for strategies without their own.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long)]
    max_rounds: Option<usize>,
    /// Transcript path; stdout when absent.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct SolveArgs {
    #[arg(long)]
    n: usize,
    #[command(flatten)]
    rules: RulesArgs,
    #[arg(long, default_value_t = DEFAULT_NODE_BUDGET)]
    budget: u64,
    /// Disable canonicalization under vertex permutations.
    #[arg(long)]
    no_symmetry: bool,
}

#[derive(Args)]
struct SweepArgs {
    /// Board sizes: `40` or `40..80`.
    #[arg(long)]
    n: String,
    #[arg(long, default_value_t = 1)]
    step: usize,
    #[arg(long, default_value_t = 10)]
    trials: usize,
    #[arg(long, default_value = "turan:2")]
    avoider: String,
    #[arg(long, default_value = "jumbleg:0.1")]
    enforcer: String,
    #[command(flatten)]
    rules: RulesArgs,
    /// Master seed.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Monitor parameter.
    #[arg(long, default_value = "0.1")]
    eps: String,
    #[arg(long, default_value_t = DEFAULT_MONITOR_PAIRS)]
    monitor_pairs: usize,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args)]
struct ConstantsArgs {
    #[arg(long)]
    delta: String,
    #[arg(long)]
    f: u64,
    /// Chromatic number of the forbidden family; defaults to `f`.
    #[arg(long)]
    k: Option<u64>,
    #[arg(long)]
    gamma: String,
    #[arg(long)]
    s1: u64,
    #[arg(long)]
    e0: String,
    #[arg(long)]
    s0: u64,
    #[arg(long)]
    eps: String,
    /// Also require E1 = gamma.
    #[arg(long)]
    strict: bool,
    /// Also check eps against the pseudo-randomness threshold for this board size.
    #[arg(long)]
    n: Option<u64>,
}

#[derive(Args)]
struct BoundsArgs {
    /// Board sizes: `100`, `40..80` (with --step) or `10,20,30`.
    #[arg(long)]
    n: String,
    #[arg(long, default_value_t = 1)]
    step: u64,
    #[arg(long)]
    k: u64,
    #[arg(long, value_enum, default_value = "family")]
    variant: VariantArg,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

#[derive(Clone, Copy, ValueEnum)]
enum VariantArg {
    Family,
    Nc,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Play(a) => play(a),
        Command::Solve(a) => solve(a),
        Command::Sweep(a) => sweep(a),
        Command::Verify(a) => verify::run(a),
        Command::Constants(a) => constants(a),
        Command::Bounds(a) => bounds(a),
    };
    match result {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            exit_code_for(&e)
        }
    }
}

fn exit_code_for(e: &anyhow::Error) -> ExitCode {
    if let Some(err) = e.downcast_ref::<aegame::Error>() {
        return ExitCode::from(match err {
            aegame::Error::BudgetExhausted(_) => EXIT_BUDGET,
            _ => EXIT_VALIDATION,
        });
    }
    if e.downcast_ref::<std::io::Error>().is_some() {
        return ExitCode::FAILURE;
    }
    ExitCode::from(EXIT_VALIDATION)
}

pub(crate) fn rational(s: &str, what: &str) -> Result<Rational> {
    parse_rational(s).with_context(|| format!("bad {what} `{s}`"))
}

fn write_output(out: Option<&PathBuf>, text: &str) -> Result<()> {
    match out {
        Some(path) => fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn parse_sizes(spec: &str, step: u64) -> Result<Vec<u64>> {
    if step == 0 {
        bail!("step must be positive");
    }
    let num = |s: &str| s.trim().parse::<u64>().with_context(|| format!("bad board size `{s}`"));
    let sizes = if let Some((a, b)) = spec.split_once("..") {
        (num(a)?..=num(b)?).step_by(step as usize).collect()
    } else {
        spec.split(',').map(num).collect::<Result<Vec<_>>>()?
    };
    if sizes.is_empty() {
        bail!("empty size range `{spec}`");
    }
    Ok(sizes)
}

fn play(a: PlayArgs) -> Result<ExitCode> {
    let rules = a.rules.rules(a.n)?;
    let mut avoider = parse_strategy(&a.avoider)?.build(a.seed);
    let mut enforcer = parse_strategy(&a.enforcer)?.build(a.seed.wrapping_add(1));
    let t = play_match(avoider.as_mut(), enforcer.as_mut(), &rules, a.max_rounds, Some(a.seed))?;
    write_output(a.out.as_ref(), &t.to_jsonl())?;
    eprintln!("outcome: {}", t.outcome.as_signed());
    Ok(ExitCode::SUCCESS)
}

#[derive(Serialize)]
struct SolveOutput {
    n: usize,
    property: String,
    convention: &'static str,
    first_mover: &'static str,
    value: serde_json::Value,
    nodes: u64,
    elapsed_ms: u64,
}

fn solve(a: SolveArgs) -> Result<ExitCode> {
    let rules = a.rules.rules(a.n)?;
    let start = Instant::now();
    let r = solve_tau(&rules, a.budget, !a.no_symmetry)?;
    let value = match r.value {
        SolveValue::Exact(t) => json!(t),
        SolveValue::Never => json!("never"),
        SolveValue::Unknown => json!("unknown"),
    };
    let out = SolveOutput {
        n: a.n,
        property: rules.property.to_string(),
        convention: rules.convention.name(),
        first_mover: rules.convention.role_name(rules.first_mover),
        value,
        nodes: r.nodes,
        elapsed_ms: start.elapsed().as_millis() as u64,
    };
    println!("{}", serde_json::to_string(&out)?);
    Ok(match r.value {
        SolveValue::Unknown => ExitCode::from(EXIT_BUDGET),
        _ => ExitCode::SUCCESS,
    })
}

fn sweep(a: SweepArgs) -> Result<ExitCode> {
    let sizes = parse_sizes(&a.n, 1)?;
    let rules = a.rules.rules(2)?;
    let cfg = SweepConfig {
        n_min: *sizes.iter().min().expect("nonempty") as usize,
        n_max: *sizes.iter().max().expect("nonempty") as usize,
        n_step: a.step,
        trials: a.trials,
        avoider: parse_strategy(&a.avoider)?,
        enforcer: parse_strategy(&a.enforcer)?,
        property: rules.property,
        convention: rules.convention,
        first_mover: rules.first_mover,
        master_seed: a.seed,
        eps: rational(&a.eps, "eps")?,
        monitor_pairs: a.monitor_pairs,
    };
    let rows = run_sweep(&cfg)?;
    let text = match a.format {
        Format::Csv | Format::Text => rows_to_csv(&rows),
        Format::Json => {
            let list: Vec<_> = rows
                .iter()
                .map(|r| {
                    json!({
                        "n": r.n, "trial": r.trial, "seed": r.seed, "hit_round": r.hit_round,
                        "lower": r.lower, "upper_main": r.upper_main.to_string(), "violations": r.violations,
                    })
                })
                .collect();
            format!("{}\n", serde_json::to_string_pretty(&list)?)
        }
    };
    write_output(a.out.as_ref(), &text)?;
    eprint!("{}", SweepSummary::render(&summarize(&rows)));
    Ok(ExitCode::SUCCESS)
}

fn constants(a: ConstantsArgs) -> Result<ExitCode> {
    let c = ConstantSchedule::from_selection_order(
        a.f,
        a.k.unwrap_or(a.f),
        rational(&a.delta, "delta")?,
        rational(&a.gamma, "gamma")?,
        a.s1,
        rational(&a.e0, "e0")?,
        a.s0,
        rational(&a.eps, "eps")?,
    );
    let v = validate_constants(&c, ValidationOptions { strict: a.strict, n: a.n });
    let checks: Vec<_> = v
        .checks
        .iter()
        .map(|(c, ok)| json!({"constraint": c.label(), "ok": ok}))
        .collect();
    let out = json!({
        "valid": v.valid,
        "checks": checks,
        "violations": v.violations.iter().map(|c| c.label()).collect::<Vec<_>>(),
        "derived": {"eta": c.eta.to_string(), "e1": c.e1.to_string(), "m": c.m},
    });
    println!("{}", serde_json::to_string_pretty(&out)?);
    Ok(if v.valid {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_VALIDATION)
    })
}

fn bounds(a: BoundsArgs) -> Result<ExitCode> {
    let sizes = parse_sizes(&a.n, a.step)?;
    let variant = match a.variant {
        VariantArg::Family => BoundVariant::Family,
        VariantArg::Nc => BoundVariant::Nc,
    };
    let report = report_bounds(&sizes, a.k, variant)?;
    match a.format {
        Format::Json => println!("{}", report.to_json()),
        Format::Text | Format::Csv => print!("{}", report.to_text()),
    }
    Ok(ExitCode::SUCCESS)
}
