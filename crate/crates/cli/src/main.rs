use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::builder::PossibleValuesParser;
use clap::{Args, CommandFactory, Parser, Subcommand};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use isgkit::induction::CosetTable;
use isgkit::io::{load_or_build, read_semigroup};
use isgkit::lattice::ProjLattice;
use isgkit::report::{Check, Meta, Report, Status};
use isgkit::suites::{run_random_trial, run_regression, sigma_checks, Suite, SuiteConfig, Trial};
use isgkit::Isg;

const MAX_DEGREE: usize = 5;

#[derive(Parser)]
#[command(name = "isgkit", version, about = "Verification suites for finite inverse semigroups and their algebras")]
struct Cli {
    /// TOML file with default settings
    #[arg(long, global = true, env = "ISGKIT_CONFIG")]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a property suite over random instances and the regression fixtures
    Verify(VerifyArgs),
    /// Describe a semigroup given by generators
    Analyze(AnalyzeArgs),
}

#[derive(Args)]
struct Common {
    #[arg(long)]
    seed: Option<u64>,
    /// Largest degree n of I_n for random instances (at most 5)
    #[arg(long)]
    degree: Option<usize>,
    /// Semigroup size cap
    #[arg(long)]
    cap: Option<usize>,
    /// Tolerance for floating-point comparisons; arithmetic here is exact
    #[arg(long)]
    tol: Option<f64>,
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, value_parser = suite_names())]
    suite: String,
    #[arg(long)]
    trials: Option<u64>,
    /// Largest dimension of random algebras
    #[arg(long)]
    max_dim: Option<usize>,
    #[command(flatten)]
    common: Common,
}

#[derive(Args)]
struct AnalyzeArgs {
    input: PathBuf,
    /// Largest number of sub-inverse semigroups to tabulate
    #[arg(long)]
    max_subs: Option<usize>,
    /// Directory for multiplication-table caches
    #[arg(long)]
    cache_dir: Option<PathBuf>,
    #[command(flatten)]
    common: Common,
}

fn suite_names() -> PossibleValuesParser {
    let mut names: Vec<&'static str> = Suite::ALL.iter().map(|s| s.name()).collect();
    names.push("all");
    PossibleValuesParser::new(names)
}

#[derive(Default, Deserialize)]
#[serde(deny_unknown_fields)]
struct FileConfig {
    seed: Option<u64>,
    trials: Option<u64>,
    degree: Option<usize>,
    cap: Option<usize>,
    tol: Option<f64>,
    max_dim: Option<usize>,
    max_subs: Option<usize>,
    out: Option<PathBuf>,
    cache_dir: Option<PathBuf>,
}

#[derive(Serialize)]
struct RunConfig {
    seed: u64,
    trials: u64,
    degree: usize,
    cap: usize,
    tol: f64,
    max_dim: usize,
    max_subs: usize,
}

struct ConfigError(String);

fn load_file_config(path: Option<&Path>) -> Result<FileConfig, ConfigError> {
    let Some(path) = path else { return Ok(FileConfig::default()) };
    let text = fs::read_to_string(path).map_err(|e| ConfigError(format!("{}: {e}", path.display())))?;
    toml::from_str(&text).map_err(|e| ConfigError(format!("{}: {e}", path.display())))
}

fn resolve(common: &Common, file: &FileConfig, trials: Option<u64>, max_dim: Option<usize>, max_subs: Option<usize>) -> Result<RunConfig, ConfigError> {
    let cfg = RunConfig {
        seed: common.seed.or(file.seed).unwrap_or(0),
        trials: trials.or(file.trials).unwrap_or(50),
        degree: common.degree.or(file.degree).unwrap_or(4),
        cap: common.cap.or(file.cap).unwrap_or(60),
        tol: common.tol.or(file.tol).unwrap_or(1e-8),
        max_dim: max_dim.or(file.max_dim).unwrap_or(4),
        max_subs: max_subs.or(file.max_subs).unwrap_or(256),
    };
    if cfg.degree == 0 || cfg.degree > MAX_DEGREE {
        return Err(ConfigError(format!("degree must lie in 1..={MAX_DEGREE}, got {}", cfg.degree)));
    }
    if cfg.cap == 0 || cfg.max_dim == 0 || cfg.max_subs == 0 {
        return Err(ConfigError("cap, max-dim and max-subs must be positive".into()));
    }
    if !(cfg.tol.is_finite() && cfg.tol > 0.0) {
        return Err(ConfigError(format!("tolerance must be positive, got {}", cfg.tol)));
    }
    Ok(cfg)
}

fn config_hash(command: &str, target: &str, cfg: &RunConfig) -> String {
    let doc = json!({ "command": command, "target": target, "config": cfg });
    hex::encode(Sha256::digest(serde_json::to_vec(&doc).expect("config serializes")))
}

fn meta(command: &str, target: &str, cfg: &RunConfig) -> Meta {
    Meta {
        tool: "isgkit".into(),
        version: env!("CARGO_PKG_VERSION").into(),
        command: command.into(),
        seed: cfg.seed,
        config_hash: config_hash(command, target, cfg),
    }
}

fn emit(report: &Report, out: Option<&Path>) -> Result<(), ConfigError> {
    let text = report.to_json();
    match out {
        Some(p) => fs::write(p, text).map_err(|e| ConfigError(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn verify(args: &VerifyArgs, file: &FileConfig) -> Result<bool, ConfigError> {
    let cfg = resolve(&args.common, file, args.trials, args.max_dim, None)?;
    let suites: Vec<Suite> = if args.suite == "all" {
        Suite::ALL.to_vec()
    } else {
        vec![args.suite.parse().map_err(|e: isgkit::Error| ConfigError(e.to_string()))?]
    };
    let suite_cfg = SuiteConfig { degree: cfg.degree, cap: cfg.cap, max_dim: cfg.max_dim };
    let mut trials: Vec<Trial> = Vec::new();
    for &suite in &suites {
        trials.extend(run_regression(suite, &suite_cfg, cfg.seed));
        let random: Vec<Trial> =
            (0..cfg.trials).into_par_iter().map(|t| run_random_trial(suite, &suite_cfg, cfg.seed, t)).collect();
        trials.extend(random);
    }
    let mut checks = Vec::new();
    let mut summary = Vec::new();
    for t in &trials {
        let id = format!("{}/{}", t.suite, t.id);
        for c in &t.checks {
            let mut c = c.clone();
            c.trial = Some(id.clone());
            checks.push(c);
        }
        summary.push(json!({
            "id": id,
            "seed": t.seed,
            "instance": t.instance,
            "status": if t.passed() { Status::Pass } else { Status::Fail },
        }));
    }
    for &suite in &suites {
        let ts: Vec<&Trial> = trials.iter().filter(|t| t.suite == suite).collect();
        let failed = ts.iter().filter(|t| !t.passed()).count();
        eprintln!("{suite}: {} trials, {failed} failed", ts.len());
    }
    let report = Report {
        meta: meta("verify", &args.suite, &cfg),
        instance: json!({ "suite": args.suite, "config": cfg, "trials": summary }),
        checks,
    };
    emit(&report, args.common.out.as_deref().or(file.out.as_deref()))?;
    Ok(report.passed())
}

fn analyze_semigroup(s: &std::sync::Arc<Isg>, max_subs: usize) -> (Value, Vec<Check>) {
    let one_based = |i: usize| s.element(i).one_based();
    let lattice = ProjLattice::of_isg(s.clone());
    let atoms: Vec<Value> = lattice
        .idempotents()
        .iter()
        .enumerate()
        .map(|(i, &e)| {
            let word = lattice.atom_word(e).expect("lattice idempotent");
            let expansion: Vec<(usize, i64)> = word.expand(s).terms().collect();
            json!({
                "idempotent": e,
                "atom": i,
                "word": { "lead": word.lead, "negatives": word.negatives },
                "expansion": expansion,
                "sigma": lattice.sigma(&lattice.atom(e).expect("lattice idempotent")).ok(),
            })
        })
        .collect();
    let order: Vec<(usize, usize)> = s.order_relation().into_iter().filter(|(a, b)| a != b).collect();
    let peirce = s.minimal_idempotent_group().map(|(e0, group)| json!({ "idempotent": e0, "group": group }));
    let mut checks = vec![Check::expect("inverse semigroup axioms", s.check_axioms().is_empty(), || {
        s.check_axioms().join("; ")
    })];
    let whole = s.restrict(&(0..s.len()).collect::<Vec<_>>()).expect("whole semigroup is closed");
    checks.extend(sigma_checks(s, &whole));
    let mut subs = Vec::new();
    for members in s.all_subsemigroups(max_subs) {
        let sub = s.restrict(&members).expect("enumerated subsets are closed");
        match CosetTable::new(s, &sub) {
            Ok(c) => {
                let v = c.check(s, &sub);
                if !v.is_empty() {
                    checks.push(Check::from_violations(format!("coset table of {members:?}"), &v));
                }
                subs.push(json!({
                    "members": members,
                    "g_h": c.members(),
                    "classes": c.classes(),
                    "representatives": c.reps(),
                }));
            }
            Err(e) => checks.push(Check::fail(format!("coset table of {members:?}"), e.to_string())),
        }
    }
    checks.push(Check::info("sub-inverse semigroups tabulated", json!(subs.len())));
    let doc = json!({
        "degree": s.degree(),
        "order": s.len(),
        "elements": (0..s.len()).map(one_based).collect::<Vec<_>>(),
        "idempotents": s.idempotents(),
        "zero": s.zero(),
        "unit": s.unit(),
        "natural_order": order,
        "atoms": atoms,
        "minimal_idempotent_group": peirce,
        "subsemigroups": subs,
    });
    (doc, checks)
}

enum Failure {
    Config(String),
    Input(String),
}

fn analyze(args: &AnalyzeArgs, file: &FileConfig) -> Result<bool, Failure> {
    let cfg = resolve(&args.common, file, None, None, args.max_subs).map_err(|e| Failure::Config(e.0))?;
    let input = read_semigroup(&args.input).map_err(|e| Failure::Input(e.to_string()))?;
    let cache_dir = args.cache_dir.as_deref().or(file.cache_dir.as_deref());
    let (s, _) = load_or_build(&input, cfg.cap, cache_dir).map_err(|e| Failure::Input(e.to_string()))?;
    let (mut doc, checks) = analyze_semigroup(&s, cfg.max_subs);
    doc["name"] = json!(input.name);
    doc["generators"] = json!(input.generators.iter().map(|p| p.one_based()).collect::<Vec<_>>());
    let target = serde_json::to_string(&doc["generators"]).expect("generators serialize");
    let report = Report { meta: meta("analyze", &target, &cfg), instance: doc, checks };
    emit(&report, args.common.out.as_deref().or(file.out.as_deref())).map_err(|e| Failure::Config(e.0))?;
    Ok(report.passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let file = match load_file_config(cli.config.as_deref()) {
        Ok(f) => f,
        Err(e) => {
            eprintln!("error: {}", e.0);
            return ExitCode::from(2);
        }
    };
    let outcome = match &cli.command {
        Command::Verify(args) => verify(args, &file).map_err(|e| Failure::Config(e.0)),
        Command::Analyze(args) => analyze(args, &file),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}\n");
            eprintln!("{}", Cli::command().render_usage());
            ExitCode::from(2)
        }
        Err(Failure::Input(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
