//! Command-line driver: verification suites as JSON reports, crystal graphs as JSON or DOT.
//!
//! Exit status is 0 when every requested check passes, 1 when a check fails and 2 on a usage
//! error. One `name: status` line per check goes to stderr.

use clap::{Args, Parser, Subcommand, ValueEnum};
use heckecliff::cartan::Weight;
use heckecliff::grothendieck::{character_library, integrality_check, serre_degree, serre_verify, ses_check};
use heckecliff::realizations::{check_binfty, check_blambda, generate_binfty, generate_blambda, CrystalGraph};
use heckecliff::supermodules::{builder_suite, section_suite, Check};
use serde_json::{json, Value};
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "heckecliff", version, about = "Hecke-Clifford supermodule checks and D(2)_l crystals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct Common {
    /// Rank: q is a primitive 4l-th root of unity.
    #[arg(long)]
    l: usize,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<std::path::PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Explicit modules: defining relations and the irreducibility suite.
    Relations {
        #[command(flatten)]
        common: Common,
        #[arg(long, value_enum, default_value = "s5")]
        suite: Suite,
    },
    /// Generate B(∞) or B(λ) to a given depth.
    Crystal {
        #[arg(value_enum)]
        kind: CrystalKind,
        #[command(flatten)]
        common: Common,
        #[arg(long)]
        depth: usize,
        /// Dominant weight "k0,k1,…" meaning Σ k_i Λ_i (B(λ) only).
        #[arg(long)]
        lambda: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Serre relations on the irreducible characters of each rank-two block.
    Serre {
        #[command(flatten)]
        common: Common,
    },
    /// Character library, integrality and the induction identities.
    Char {
        #[command(flatten)]
        common: Common,
    },
    /// Everything above at one rank.
    All {
        #[command(flatten)]
        common: Common,
        /// Depth for the crystal checks.
        #[arg(long, default_value_t = 5)]
        depth: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    S5,
    Builders,
}

#[derive(Clone, Copy, ValueEnum)]
enum CrystalKind {
    Binfty,
    Blambda,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

/// A usage problem (exit 2) or a failed computation (exit 1).
enum Failure {
    Usage(String),
    Error(String),
}

/// A report ready to print: its JSON and the summary lines.
struct Outcome {
    json: Value,
    lines: Vec<(String, bool)>,
}

impl Outcome {
    fn merge(parts: Vec<(&str, Outcome)>) -> Outcome {
        let mut map = serde_json::Map::new();
        let mut lines = Vec::new();
        for (k, o) in parts {
            map.insert(k.to_string(), o.json);
            lines.extend(o.lines);
        }
        Outcome { json: Value::Object(map), lines }
    }
}

fn check_l(l: usize) -> Result<(), Failure> {
    if l < 2 {
        return Err(Failure::Usage(format!("--l must be at least 2, got {l}")));
    }
    Ok(())
}

fn err<E: std::fmt::Display>(e: E) -> Failure {
    Failure::Error(e.to_string())
}

fn check_name(c: &Check) -> String {
    match (c.i, c.j) {
        (Some(i), Some(j)) => format!("{} ({i},{j})", c.check),
        (Some(i), None) => format!("{} ({i})", c.check),
        _ => c.check.clone(),
    }
}

fn relations(l: usize, suite: Suite) -> Result<Outcome, Failure> {
    let checks = match suite {
        Suite::S5 => section_suite(l),
        Suite::Builders => builder_suite(l),
    }
    .map_err(err)?;
    let lines = checks.iter().map(|c| (check_name(c), c.passed())).collect();
    Ok(Outcome { json: serde_json::to_value(&checks).map_err(err)?, lines })
}

fn serre(l: usize) -> Result<Outcome, Failure> {
    let r = serre_verify(l).map_err(err)?;
    let lines = r.checks.iter().map(|c| (format!("serre ({},{}) {:?}", c.i, c.j, c.module), c.pass)).collect();
    Ok(Outcome { json: serde_json::to_value(&r).map_err(err)?, lines })
}

fn characters(l: usize) -> Result<Outcome, Failure> {
    let lib = character_library(l).map_err(err)?;
    let mut lines = Vec::new();
    let mut entries = Vec::new();
    for e in &lib {
        let ok = integrality_check(e).is_ok();
        lines.push((format!("integrality {:?}", e.module), ok));
        let mut v = serde_json::to_value(e).map_err(err)?;
        v["integral"] = json!(ok);
        entries.push(v);
    }
    let mut ses = Vec::new();
    for i in 0..l {
        for j in 0..l {
            if i.abs_diff(j) != 1 {
                continue;
            }
            let k = serre_degree(l, i, j).map_err(err)?;
            for a in 0..k {
                for b in 0..(k - a) {
                    let ok = ses_check(l, i, j, a, b).map_err(err)?;
                    lines.push((format!("ses ({i},{j}) a={a} b={b}"), ok));
                    ses.push(json!({"i": i, "j": j, "a": a, "b": b, "pass": ok}));
                }
            }
        }
    }
    Ok(Outcome { json: json!({"l": l, "library": entries, "ses": ses}), lines })
}

fn parse_lambda(l: usize, s: Option<&str>) -> Result<Weight, Failure> {
    let s = s.ok_or_else(|| Failure::Usage("blambda needs --lambda".into()))?;
    let w = Weight::parse_lambda(s, l).map_err(|e| Failure::Usage(e.to_string()))?;
    if !w.is_dominant_lambda() {
        return Err(Failure::Usage(format!("--lambda {s} is not dominant")));
    }
    Ok(w)
}

fn graph_outcome(g: &CrystalGraph, format: Format, report: Vec<(String, bool)>) -> (String, Vec<(String, bool)>) {
    let text = match format {
        Format::Json => pretty(&g.to_json()),
        Format::Dot => g.to_dot(),
    };
    (text, report)
}

fn crystal(kind: CrystalKind, l: usize, depth: usize, lambda: Option<&str>, format: Format) -> Result<(String, Vec<(String, bool)>), Failure> {
    match kind {
        CrystalKind::Binfty => {
            if lambda.is_some() {
                return Err(Failure::Usage("--lambda only applies to blambda".into()));
            }
            let g = generate_binfty(l, depth).map_err(err)?;
            let r = check_binfty(l, depth).map_err(err)?;
            Ok(graph_outcome(&g, format, r.checks.iter().map(|c| (c.name.clone(), c.pass)).collect()))
        }
        CrystalKind::Blambda => {
            let w = parse_lambda(l, lambda)?;
            let g = generate_blambda(l, &w, depth).map_err(err)?;
            let r = check_blambda(l, &w, depth).map_err(err)?;
            Ok(graph_outcome(&g, format, r.checks.iter().map(|c| (c.name.clone(), c.pass)).collect()))
        }
    }
}

fn crystal_checks(l: usize, depth: usize) -> Result<Outcome, Failure> {
    let mut reports = vec![check_binfty(l, depth).map_err(err)?];
    for lam in [vec![(0, 1)], vec![(l - 1, 1)], vec![(0, 1), (l - 1, 1)]] {
        let mut w = Weight::zero(l);
        for (i, k) in lam {
            w.lam[i] += k;
        }
        reports.push(check_blambda(l, &w, depth).map_err(err)?);
    }
    let mut lines = Vec::new();
    for r in &reports {
        let tag = match &r.lambda {
            Some(lam) => format!("B({lam:?})"),
            None => "B(inf)".into(),
        };
        lines.extend(r.checks.iter().map(|c| (format!("{tag} {}", c.name), c.pass)));
    }
    Ok(Outcome { json: serde_json::to_value(&reports).map_err(err)?, lines })
}

fn pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

fn emit(text: &str, out: Option<&std::path::Path>) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Usage(format!("cannot write {}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let (text, lines, out) = match cli.command {
        Command::Relations { common, suite } => {
            check_l(common.l)?;
            let o = relations(common.l, suite)?;
            (pretty(&o.json), o.lines, common.out)
        }
        Command::Crystal { kind, common, depth, lambda, format } => {
            check_l(common.l)?;
            let (text, lines) = crystal(kind, common.l, depth, lambda.as_deref(), format)?;
            (text, lines, common.out)
        }
        Command::Serre { common } => {
            check_l(common.l)?;
            let o = serre(common.l)?;
            (pretty(&o.json), o.lines, common.out)
        }
        Command::Char { common } => {
            check_l(common.l)?;
            let o = characters(common.l)?;
            (pretty(&o.json), o.lines, common.out)
        }
        Command::All { common, depth } => {
            check_l(common.l)?;
            let l = common.l;
            let o = Outcome::merge(vec![
                ("builders", relations(l, Suite::Builders)?),
                ("suite", relations(l, Suite::S5)?),
                ("serre", serre(l)?),
                ("char", characters(l)?),
                ("crystal", crystal_checks(l, depth)?),
            ]);
            (pretty(&o.json), o.lines, common.out)
        }
    };
    emit(&text, out.as_deref())?;
    for (name, ok) in &lines {
        eprintln!("{name}: {}", if *ok { "pass" } else { "fail" });
    }
    Ok(lines.iter().all(|(_, ok)| *ok))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Error(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
    }
}
