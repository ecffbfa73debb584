//! Command-line front end: generate digraph families, compute metrics,
//! classify, enumerate extremal sets, run verification sweeps, export DOT.
//!
//! Exit codes: 0 success, 1 usage or input error, 2 verification failure,
//! 3 undefined metric (F when Z = 0 under the loop rule).

use std::io::Read as _;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use zforce::bitset::VertexSet;
use zforce::digraph::{self, Digraph, OrientationSpec};
use zforce::error::Error;
use zforce::{classify, closed, forcing, io, solve, verify};

#[derive(Parser)]
#[command(name = "zforce", version, about = "Zero forcing and failed zero forcing on digraphs")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a digraph family and print it in the text format.
    ///
    /// Families and parameters: cycle N, path N, complete N, empty N,
    /// weakpath SPEC, weakcycle SPEC, star SPEC (SPEC is one f/b/2
    /// character per edge), debruijn D M, kautz D M, thm412 N K,
    /// linegraph FILE, outjoin FILE FILE, union FILE [FILE...].
    Gen {
        family: String,
        params: Vec<String>,
    },
    /// Compute a metric of a digraph file (`-` reads the standard input).
    Compute {
        #[arg(value_enum, ignore_case = true)]
        metric: Metric,
        file: PathBuf,
        /// Initial filled set for `closure`, e.g. `0,2,5` (may be empty: ``).
        #[arg(long)]
        set: Option<String>,
        /// Force the exact solver even when a closed form applies.
        #[arg(long, conflicts_with = "auto")]
        exact: bool,
        /// Dispatch to a closed form when a family matcher fires (default).
        #[arg(long)]
        auto: bool,
        /// Emit one JSON record instead of key: value lines.
        #[arg(long)]
        json: bool,
    },
    /// Recognize the digraph's class within the F < Z characterization.
    Classify {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Enumerate all minimal ZFS or all maximal FZFS.
    Enumerate {
        #[arg(value_enum)]
        what: EnumerateWhat,
        file: PathBuf,
        /// Largest order admitted to the exponential enumeration.
        #[arg(long, default_value_t = solve::DEFAULT_ENUMERATION_BOUND)]
        bound: usize,
        #[arg(long)]
        json: bool,
    },
    /// Run a verification sweep; exits 2 on any violation.
    Verify {
        #[arg(value_enum)]
        suite: Suite,
    },
    /// Render a digraph file as Graphviz DOT.
    ExportDot {
        file: PathBuf,
        #[arg(long, default_value = "D")]
        name: String,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Metric {
    Z,
    F,
    Mincrit,
    Closure,
}

#[derive(Clone, Copy, ValueEnum)]
enum EnumerateWhat {
    MinimalZfs,
    MaximalFzfs,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    Duality,
    Formulas,
    Census3,
    Census4,
    Oriented5,
    Kernel,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    match run(cli) {
        Ok(code) => code,
        Err(Error::UndefinedF) => {
            eprintln!("error: {}", Error::UndefinedF);
            ExitCode::from(3)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> zforce::Result<ExitCode> {
    match cli.cmd {
        Cmd::Gen { family, params } => {
            let d = generate(&family, &params)?;
            print!("{}", io::write_digraph(&d));
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Compute {
            metric,
            file,
            set,
            exact,
            json,
            ..
        } => compute(metric, &file, set.as_deref(), exact, json),
        Cmd::Classify { file, json } => {
            let d = read_digraph(&file)?;
            let kind = classify::classify_f_less_than_z(&d)?;
            let threshold = classify::critical_threshold(&d)?;
            if json {
                println!(
                    "{}",
                    serde_json::json!({ "n": d.n(), "class": kind, "critical_threshold": threshold })
                );
            } else {
                println!("n: {}", d.n());
                println!("class: {}", serde_json::to_string(&kind).expect("serializable"));
                println!("critical_threshold: {}", opt_str(threshold));
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Enumerate {
            what,
            file,
            bound,
            json,
        } => {
            let d = read_digraph(&file)?;
            let (label, sets) = match what {
                EnumerateWhat::MinimalZfs => ("minimal-zfs", solve::enumerate_minimal_zfs(&d, bound)?),
                EnumerateWhat::MaximalFzfs => ("maximal-fzfs", solve::enumerate_maximal_fzfs(&d, bound)?),
            };
            if json {
                println!("{}", serde_json::json!({ "n": d.n(), "kind": label, "count": sets.len(), "sets": sets }));
            } else {
                println!("n: {}", d.n());
                println!("kind: {label}");
                println!("count: {}", sets.len());
                for s in &sets {
                    println!("set: {}", join(&s.to_vec()));
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Verify { suite } => {
            let report = match suite {
                Suite::Duality => verify::duality(5),
                Suite::Formulas => verify::formulas(),
                Suite::Census3 => verify::census(3),
                Suite::Census4 => verify::census(4),
                Suite::Oriented5 => verify::oriented5(),
                Suite::Kernel => verify::kernel(50, 20),
            };
            println!("{report}");
            Ok(if report.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(2)
            })
        }
        Cmd::ExportDot { file, name } => {
            let d = read_digraph(&file)?;
            print!("{}", io::to_dot(&d, &name));
            Ok(ExitCode::SUCCESS)
        }
    }
}

#[derive(Serialize)]
struct ComputeRecord {
    n: usize,
    metric: &'static str,
    value: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<Vec<usize>>,
    method: closed::Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    forces: Option<Vec<forcing::Force>>,
    elapsed_ms: f64,
}

fn compute(
    metric: Metric,
    file: &PathBuf,
    set: Option<&str>,
    exact: bool,
    json: bool,
) -> zforce::Result<ExitCode> {
    let d = read_digraph(file)?;
    let start = Instant::now();
    let mut record = ComputeRecord {
        n: d.n(),
        metric: "",
        value: None,
        reason: None,
        witness: None,
        method: closed::Method::Exact,
        forces: None,
        elapsed_ms: 0.0,
    };
    match metric {
        Metric::Z => {
            let (z, witness) = solve::zero_forcing_number(&d);
            record.metric = "Z";
            record.value = Some(z);
            record.witness = Some(witness.to_vec());
        }
        Metric::F => {
            record.metric = "F";
            if exact {
                match solve::failed_zero_forcing_number(&d) {
                    Some((f, witness)) => {
                        record.value = Some(f);
                        record.witness = Some(witness.to_vec());
                    }
                    None => record.reason = Some("Z=0 under loop rule"),
                }
            } else {
                let (value, method) = closed::f_auto(&d);
                record.value = value;
                record.method = method;
                if value.is_none() {
                    record.reason = Some("Z=0 under loop rule");
                }
            }
        }
        Metric::Mincrit => {
            record.metric = "mincrit";
            match solve::min_critical_set(&d, d.has_loops()) {
                Some(w) => {
                    record.value = Some(w.len());
                    record.witness = Some(w.to_vec());
                }
                None => record.reason = Some("no critical set; Z=0 under loop rule"),
            }
        }
        Metric::Closure => {
            record.metric = "closure";
            let spec = set.ok_or_else(|| {
                Error::InvalidParams("closure requires --set with comma-separated vertices".into())
            })?;
            let s = parse_set(&d, spec)?;
            let trace = forcing::closure(&d, &s);
            record.value = Some(trace.final_set.len());
            record.witness = Some(trace.final_set.to_vec());
            record.forces = Some(trace.rounds);
        }
    }
    record.elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
    if json {
        println!("{}", serde_json::to_string(&record).expect("serializable"));
    } else {
        println!("n: {}", record.n);
        println!("metric: {}", record.metric);
        println!("value: {}", opt_str(record.value));
        if let Some(reason) = record.reason {
            println!("reason: {reason}");
        }
        if let Some(w) = &record.witness {
            println!("witness: {}", join(w));
        }
        println!(
            "method: {}",
            match record.method {
                closed::Method::ClosedForm => "closed-form",
                closed::Method::Exact => "exact",
            }
        );
        if let Some(forces) = &record.forces {
            for f in forces {
                println!("force: round {} vertex {} -> {}", f.round, f.forcer, f.forced);
            }
        }
        println!("elapsed_ms: {:.3}", record.elapsed_ms);
    }
    if record.value.is_none() && record.reason.is_some() {
        return Err(Error::UndefinedF);
    }
    Ok(ExitCode::SUCCESS)
}

fn generate(family: &str, params: &[String]) -> zforce::Result<Digraph> {
    let usage = |msg: &str| Error::InvalidParams(format!("{family}: {msg}"));
    let int = |i: usize| -> zforce::Result<usize> {
        params
            .get(i)
            .ok_or_else(|| usage("missing parameter"))?
            .parse()
            .map_err(|e| usage(&format!("bad integer: {e}")))
    };
    let spec = |i: usize| -> zforce::Result<OrientationSpec> {
        params
            .get(i)
            .ok_or_else(|| usage("missing orientation spec"))?
            .parse()
    };
    let file = |i: usize| -> zforce::Result<Digraph> {
        read_digraph(&PathBuf::from(
            params.get(i).ok_or_else(|| usage("missing file parameter"))?,
        ))
    };
    match family {
        "cycle" => digraph::directed_cycle(int(0)?),
        "path" => digraph::directed_path(int(0)?),
        "complete" => Ok(digraph::complete(int(0)?)),
        "empty" => Ok(digraph::empty(int(0)?)),
        "weakpath" => Ok(digraph::weak_path(&spec(0)?)),
        "weakcycle" => digraph::weak_cycle(&spec(0)?),
        "star" => {
            let s = spec(0)?;
            digraph::star(s.len(), &s)
        }
        "debruijn" => digraph::de_bruijn(int(0)?, int(1)?),
        "kautz" => digraph::kautz(int(0)?, int(1)?),
        "thm412" => closed::construct_weak_cycle(int(0)?, int(1)?),
        "linegraph" => Ok(digraph::line_digraph(&file(0)?).0),
        "outjoin" => Ok(digraph::outjoin(&file(0)?, &file(1)?)),
        "union" => {
            if params.is_empty() {
                return Err(usage("needs at least one file"));
            }
            let parts: Vec<Digraph> = (0..params.len())
                .map(file)
                .collect::<zforce::Result<_>>()?;
            Ok(digraph::disjoint_union(&parts))
        }
        other => Err(Error::InvalidParams(format!(
            "unknown family {other:?}; expected one of cycle, path, weakpath, weakcycle, star, \
             complete, empty, debruijn, kautz, outjoin, linegraph, union, thm412"
        ))),
    }
}

fn read_digraph(path: &PathBuf) -> zforce::Result<Digraph> {
    let text = if path.as_os_str() == "-" {
        let mut buf = String::new();
        std::io::stdin().read_to_string(&mut buf)?;
        buf
    } else {
        std::fs::read_to_string(path)?
    };
    io::parse_digraph(&text)
}

fn parse_set(d: &Digraph, spec: &str) -> zforce::Result<VertexSet> {
    let mut s = VertexSet::empty(d.n());
    for part in spec.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        let v: usize = part
            .parse()
            .map_err(|e| Error::InvalidParams(format!("bad vertex {part:?}: {e}")))?;
        if v >= d.n() {
            return Err(Error::VertexOutOfRange(v, d.n()));
        }
        s.insert(v);
    }
    Ok(s)
}

fn opt_str(v: Option<usize>) -> String {
    v.map_or_else(|| "null".into(), |x| x.to_string())
}

fn join(xs: &[usize]) -> String {
    if xs.is_empty() {
        "[]".into()
    } else {
        xs.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}
