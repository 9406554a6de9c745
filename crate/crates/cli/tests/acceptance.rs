//! Acceptance run: one line per criterion, nonzero exit if any fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use rayon::prelude::*;

use isgkit::crossed::imprimitivity_check;
use isgkit::fixtures;
use isgkit::models::epsilon_algebra;
use isgkit::report::{Check, Status};
use isgkit::suites::{run_random_trial, run_regression, Suite, SuiteConfig, Trial};

const SEED: u64 = 20_241_015;

struct Run {
    trials: Vec<Trial>,
    times: Vec<Duration>,
    wall: Duration,
}

impl Run {
    fn random(&self) -> usize {
        self.trials.iter().filter(|t| t.id.starts_with("random:")).count()
    }

    fn checks(&self) -> impl Iterator<Item = (&Trial, &Check)> {
        self.trials.iter().flat_map(|t| t.checks.iter().map(move |c| (t, c)))
    }

    fn first_failure(&self) -> Option<String> {
        self.checks()
            .find(|(_, c)| c.status == Status::Fail)
            .map(|(t, c)| format!("{} {}: {}", t.id, c.name, c.witness.clone().unwrap_or_default()))
    }

    fn slowest(&self) -> Duration {
        self.times.iter().copied().max().unwrap_or_default()
    }
}

fn run(suite: Suite, trials: u64) -> Run {
    let cfg = SuiteConfig::default();
    let start = Instant::now();
    let mut out: Vec<(Trial, Duration)> = run_regression(suite, &cfg, SEED).into_iter().map(|t| (t, Duration::ZERO)).collect();
    let random: Vec<(Trial, Duration)> = (0..trials)
        .into_par_iter()
        .map(|k| {
            let t0 = Instant::now();
            let t = run_random_trial(suite, &cfg, SEED, k);
            (t, t0.elapsed())
        })
        .collect();
    out.extend(random);
    let wall = start.elapsed();
    let (trials, times) = out.into_iter().unzip();
    Run { trials, times, wall }
}

struct Line {
    label: String,
    pass: bool,
    note: String,
}

fn line(label: &str, pass: bool, note: String) -> Line {
    Line { label: label.to_string(), pass, note }
}

fn suite_line(label: &str, r: &Run, min_random: usize) -> Line {
    let enough = r.random() >= min_random;
    let failure = r.first_failure();
    let note = match &failure {
        Some(f) => format!("first failure {f}"),
        None if !enough => format!("only {} random trials", r.random()),
        None => format!("{} trials ({} random), {:.2} s", r.trials.len(), r.random(), r.wall.as_secs_f64()),
    };
    line(label, failure.is_none() && enough, note)
}

fn cli(args: &[&str]) -> (Vec<u8>, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_isgkit")).args(args).env_remove("ISGKIT_CONFIG").output().expect("binary runs");
    (out.stdout, out.status.code().unwrap_or(-1))
}

fn main() -> ExitCode {
    let mut lines = Vec::new();

    let sigma = run(Suite::Sigma, 200);
    let mut l = suite_line("criterion 1 (leading-coefficient calculus)", &sigma, 200);
    let bounded = sigma.trials.iter().all(|t| t.instance.degree <= 4 && t.instance.order <= 60);
    let fast = sigma.wall < Duration::from_secs(60);
    l.pass &= bounded && fast;
    if !bounded {
        l.note = format!("instance outside n ≤ 4, |G| ≤ 60; {}", l.note);
    }
    if !fast {
        l.note = format!("took {:.1} s; {}", sigma.wall.as_secs_f64(), l.note);
    }
    lines.push(l);

    let delta = run(Suite::Delta, 200);
    let mut l = suite_line("criterion 2 (δ bijection and primed model)", &delta, 200);
    let same_pool = sigma
        .trials
        .iter()
        .zip(&delta.trials)
        .all(|(a, b)| a.id == b.id && a.instance.generators == b.instance.generators && a.instance.sub_members == b.instance.sub_members);
    if !same_pool {
        l.pass = false;
        l.note = format!("instance pool differs from criterion 1; {}", l.note);
    }
    lines.push(l);

    lines.push(suite_line("criterion 3 (induction validity and rotation invariance)", &run(Suite::Induction, 100), 100));
    lines.push(suite_line("criterion 4 (μ and τ isomorphisms)", &run(Suite::MuTau, 100), 100));

    let adj = run(Suite::Adjunction, 100);
    let mut l = suite_line("criterion 5 (triangle identities)", &adj, 100);
    let example = adj.trials.iter().find(|t| t.id == "regression:semilattice_1e/e");
    let example_ok = example.is_some_and(|t| t.passed() && t.checks.len() == 4);
    if !example_ok {
        l.pass = false;
        l.note = format!("example configuration missing or failing; {}", l.note);
    }
    lines.push(l);

    let l2 = run(Suite::L2, 50);
    let mingo = run(Suite::Mingo, 50);
    let mut l = suite_line("criterion 6 (ℓ²(G) module and V operator)", &l2, 50);
    let m = suite_line("", &mingo, 50);
    l.pass &= m.pass;
    l.note = format!("ℓ²: {}; V: {}", l.note, m.note);
    lines.push(l);

    let imp = run(Suite::Imprimitivity, 60);
    let mut l = suite_line("criterion 7 (imprimitivity block counts)", &imp, 50);
    let mut fixture_note = Vec::new();
    let mut fixtures_ok = true;
    let (eg, eh) = fixtures::example_pair();
    let z2 = fixtures::z2();
    let cases = [
        ("Z/2 over {1}", z2.clone(), fixtures::unit_subgroup(&z2), 1),
        ("Z/2 over Z/2", z2.clone(), z2.restrict(&(0..z2.len()).collect::<Vec<_>>()).expect("closed"), 2),
        ("{1,e} over {e}", eg, eh, 1),
    ];
    for (name, g, h, expected) in cases {
        let t0 = Instant::now();
        let a = epsilon_algebra(h.isg.clone());
        match imprimitivity_check(g, &h, &a, None, SEED, false) {
            Ok(r) => {
                let (x, y) = (r.induced_blocks.k0_rank, r.base_blocks.k0_rank);
                fixtures_ok &= x == expected && y == expected && t0.elapsed() < Duration::from_secs(5);
                fixture_note.push(format!("{name}: {x} = {y}"));
            }
            Err(e) => {
                fixtures_ok = false;
                fixture_note.push(format!("{name}: {e}"));
            }
        }
    }
    let slow = imp.slowest() >= Duration::from_secs(5);
    l.pass &= fixtures_ok && !slow;
    l.note = format!("{}; {}; slowest {:.2} s", fixture_note.join(", "), l.note, imp.slowest().as_secs_f64());
    lines.push(l);

    let res = run(Suite::Restriction, 100);
    let fibered: Vec<&Check> = res.checks().map(|(_, c)| c).filter(|c| c.name.ends_with("is fibered")).collect();
    let bad = fibered.iter().filter(|c| c.status != Status::Pass).count();
    lines.push(line(
        "criterion 8 (random G-algebras are fibered)",
        bad == 0 && res.random() >= 100,
        format!("{} algebras over {} instances, {bad} not fibered", fibered.len(), res.trials.len()),
    ));

    let args = ["verify", "--suite", "all", "--trials", "3", "--seed", "7"];
    let (a, code_a) = cli(&args);
    let (b, code_b) = cli(&args);
    let (c, _) = cli(&["verify", "--suite", "all", "--trials", "3", "--seed", "8"]);
    let (_, bad_code) = cli(&["verify", "--suite", "nonsense"]);
    let dir = std::env::temp_dir().join(format!("isgkit-acceptance-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("temp dir");
    let input = dir.join("i2.json");
    std::fs::write(&input, r#"{"degree": 2, "generators": [[2, 1], [1, null]]}"#).expect("write input");
    let path = input.to_str().expect("utf-8 path");
    let (x, code_x) = cli(&["analyze", path]);
    let (y, _) = cli(&["analyze", path]);
    let _ = std::fs::remove_dir_all(&dir);
    let identical = a == b && x == y && !a.is_empty() && !x.is_empty();
    let ok = identical && code_a == 0 && code_b == 0 && code_x == 0 && a != c && bad_code == 2;
    lines.push(line(
        "criterion 9 (byte-identical reports)",
        ok,
        format!(
            "verify {} bytes, analyze {} bytes, identical: {identical}, exit codes {code_a}/{code_x}, bad suite exit {bad_code}",
            a.len(),
            x.len()
        ),
    ));

    let supporting = suite_line("supporting: restriction suite, all checks", &res, 100);
    lines.push(supporting);

    let mut all = true;
    for l in &lines {
        all &= l.pass;
        println!("{}: {} ({})", l.label, if l.pass { "PASS" } else { "FAIL" }, l.note);
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
