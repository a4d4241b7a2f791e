use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use bilateral::analysis::Analysis;
use bilateral::generator::{generate, GeneratorParams};
use bilateral::kernel::{check, CoordMode, Deduction, SystemConfig};
use bilateral::normalizer::{atomize_nc, normalize, NormalizeError, Outcome, DEFAULT_MAX_STEPS};
use bilateral::textio::{parse, print, print_indented, trace_to_json};

const OK: u8 = 0;
const FAILED: u8 = 1;
const PARSE_ERROR: u8 = 2;
const INTERNAL: u8 = 3;

#[derive(Parser)]
#[command(
    name = "bnd",
    version,
    about = "Check, analyse and normalize bilateral natural deductions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
struct SystemArgs {
    /// B, B+tonk, B+conk, B+honk or B-coord
    #[arg(long, default_value = "B")]
    system: String,
    /// Override non-contradiction: general, atomic or off
    #[arg(long)]
    nc: Option<String>,
    /// Override reductio: general, atomic or off
    #[arg(long)]
    red: Option<String>,
}

#[derive(Subcommand)]
enum Command {
    /// Check a deduction against the rules of a system
    Check {
        file: PathBuf,
        #[command(flatten)]
        sys: SystemArgs,
    },
    /// List maximal formulas, segments and the rank
    Analyze {
        file: PathBuf,
        #[command(flatten)]
        sys: SystemArgs,
        /// Print the analysis as JSON
        #[arg(long)]
        json: bool,
    },
    /// Normalize and print the result
    Normalize {
        file: PathBuf,
        #[command(flatten)]
        sys: SystemArgs,
        #[arg(long, default_value_t = DEFAULT_MAX_STEPS)]
        max_steps: usize,
        /// Write the step trace as JSON to this file
        #[arg(long)]
        trace_json: Option<PathBuf>,
        /// Print one node per line
        #[arg(long)]
        indent: bool,
    },
    /// Replace non-contradiction on compound formulas by applications to atoms
    Atomize {
        file: PathBuf,
        #[command(flatten)]
        sys: SystemArgs,
    },
    /// Print a random check-valid deduction
    Generate {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        max_nodes: usize,
        #[arg(long, default_value = "B")]
        system: String,
        /// Chance of steering towards detours, between 0 and 1
        #[arg(long, default_value_t = 0.5)]
        bias: f64,
    },
}

struct Failure(u8, String);

fn config(sys: &SystemArgs) -> Result<SystemConfig, Failure> {
    let mut cfg = SystemConfig::from_system_name(&sys.system)
        .ok_or_else(|| Failure(PARSE_ERROR, format!("unknown system {:?}", sys.system)))?;
    let mode = |flag: &Option<String>, name: &str| -> Result<Option<CoordMode>, Failure> {
        flag.as_deref()
            .map(|s| {
                CoordMode::from_flag(s).ok_or_else(|| {
                    Failure(
                        PARSE_ERROR,
                        format!("--{name} expects general, atomic or off, not {s:?}"),
                    )
                })
            })
            .transpose()
    };
    if let Some(m) = mode(&sys.nc, "nc")? {
        cfg.nc = m;
    }
    if let Some(m) = mode(&sys.red, "red")? {
        cfg.reductio = m;
    }
    Ok(cfg)
}

fn load(file: &Path) -> Result<Deduction, Failure> {
    let text = fs::read_to_string(file)
        .map_err(|e| Failure(PARSE_ERROR, format!("{}: {e}", file.display())))?;
    parse(&text).map_err(|e| Failure(PARSE_ERROR, format!("{}: {e}", file.display())))
}

fn load_checked(file: &Path, cfg: &SystemConfig) -> Result<Deduction, Failure> {
    let d = load(file)?;
    let report = check(&d, cfg);
    if !report.ok() {
        let lines: Vec<String> = report.violations.iter().map(ToString::to_string).collect();
        return Err(Failure(FAILED, lines.join("\n")));
    }
    Ok(d)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Check { file, sys } => {
            let cfg = config(&sys)?;
            load_checked(&file, &cfg)?;
            println!("ok");
            Ok(OK)
        }
        Command::Analyze { file, sys, json } => {
            let cfg = config(&sys)?;
            let d = load_checked(&file, &cfg)?;
            analyze(&d, json);
            Ok(OK)
        }
        Command::Normalize {
            file,
            sys,
            max_steps,
            trace_json,
            indent,
        } => {
            let cfg = config(&sys)?;
            let d = load_checked(&file, &cfg)?;
            let (out, trace) = match normalize(&d, &cfg, max_steps) {
                Ok(r) => r,
                Err(NormalizeError::IllFormed(r)) => return Err(Failure(FAILED, format!("{r:?}"))),
                Err(e) => return Err(Failure(INTERNAL, format!("internal error: {e}"))),
            };
            if let Some(path) = trace_json {
                fs::write(&path, trace_to_json(&trace) + "\n")
                    .map_err(|e| Failure(INTERNAL, format!("{}: {e}", path.display())))?;
            }
            match trace.outcome {
                Outcome::Normal => {
                    if indent {
                        print!("{}", print_indented(&out));
                    } else {
                        println!("{}", print(&out));
                    }
                    eprintln!("normal after {} step(s)", trace.steps.len());
                    Ok(OK)
                }
                Outcome::Stuck => {
                    for s in &trace.stuck_redexes {
                        eprintln!(
                            "stuck: {} redex on {} has no reduction step, at {:?} ({})",
                            s.kind, s.connective, s.position, s.formula
                        );
                    }
                    println!("{}", print(&out));
                    Ok(FAILED)
                }
                Outcome::StepLimit => {
                    eprintln!("step limit of {max_steps} reached");
                    println!("{}", print(&out));
                    Ok(FAILED)
                }
            }
        }
        Command::Atomize { file, sys } => {
            let cfg = config(&sys)?;
            let d = load_checked(&file, &cfg)?;
            let out = atomize_nc(&d).map_err(|e| Failure(FAILED, e.to_string()))?;
            let atomic = SystemConfig {
                nc: CoordMode::AtomicOnly,
                ..cfg
            };
            let report = check(&out, &atomic);
            if !report.ok() {
                return Err(Failure(
                    INTERNAL,
                    format!("internal error: atomized deduction fails: {report:?}"),
                ));
            }
            println!("{}", print(&out));
            Ok(OK)
        }
        Command::Generate {
            seed,
            max_nodes,
            system,
            bias,
        } => {
            let cfg = SystemConfig::from_system_name(&system)
                .ok_or_else(|| Failure(PARSE_ERROR, format!("unknown system {system:?}")))?;
            let d = generate(&GeneratorParams {
                seed,
                max_nodes: max_nodes.max(1),
                cfg,
                redex_bias: bias,
            });
            println!("{}", print(&d));
            Ok(OK)
        }
    }
}

fn analyze(d: &Deduction, json: bool) {
    let a = Analysis::of(d);
    if json {
        let redexes: Vec<serde_json::Value> = a
            .redexes
            .iter()
            .map(|r| {
                serde_json::json!({
                    "kind": r.kind.name(),
                    "position": r.path,
                    "formula": r.formula.to_string(),
                    "effectiveDegree": r.effective_degree,
                    "segment": r.segment.as_ref().map(|s| &s.positions),
                })
            })
            .collect();
        let segments: Vec<serde_json::Value> = a
            .segments
            .iter()
            .map(|s| serde_json::json!({"positions": s.positions, "formula": s.formula.to_string(), "maximal": s.maximal}))
            .collect();
        let v = serde_json::json!({"redexes": redexes, "segments": segments, "rank": a.rank()});
        println!("{v}");
        return;
    }
    for r in &a.redexes {
        let extra = match &r.segment {
            Some(s) => format!(" segment of length {} from {:?}", s.len(), s.first()),
            None => String::new(),
        };
        println!(
            "{} at {:?}: {} degree {}{}",
            r.kind, r.path, r.formula, r.effective_degree, extra
        );
    }
    for s in a.segments.iter().filter(|s| !s.maximal) {
        println!("segment {:?} (not maximal): {}", s.positions, s.formula);
    }
    println!("rank {}", a.rank());
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure(code, msg)) => {
            eprintln!("{msg}");
            ExitCode::from(code)
        }
    }
}
