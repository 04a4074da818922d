use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use cozero::report::{
    cmd_analyze, cmd_graph, sweep_csv, sweep_rows, verify_json, verify_text, write_atomic, GraphFormat, GraphKind,
    ReportError,
};
use cozero::theorems::{run_suite, FamilySpec, SpecError, DEFAULT_SPEC};

#[derive(Parser)]
#[command(name = "cozero", about = "Cozero-divisor graphs of finite commutative rings")]
struct Cli {
    /// Worker threads for verify and sweep.
    #[arg(long, global = true)]
    jobs: Option<usize>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Export a graph as DOT or JSON.
    Graph {
        ring: String,
        #[arg(long, default_value = "zero")]
        ideal: String,
        /// cozero, cozeroI or zdivI.
        #[arg(long, default_value = "cozeroI")]
        kind: GraphKind,
        #[arg(long, value_enum, default_value = "dot")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print graph invariants.
    Analyze {
        ring: String,
        #[arg(long, default_value = "zero")]
        ideal: String,
        #[arg(long, default_value = "cozeroI")]
        kind: GraphKind,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the checkers over a family spec (built-in products family by default).
    Verify {
        spec: Option<PathBuf>,
        /// Let audit-mode failures decide the exit code too.
        #[arg(long)]
        audit: bool,
        /// Seed for `sample = N` specs.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Invariants of every instance of a family spec, as CSV.
    Sweep {
        spec: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

enum Failure {
    Usage(String),
    Run(String),
}

impl From<ReportError> for Failure {
    fn from(e: ReportError) -> Self {
        match e {
            ReportError::Expr(_) | ReportError::Spec(_) => Failure::Usage(e.to_string()),
            _ => Failure::Run(e.to_string()),
        }
    }
}

fn emit(out: &Option<PathBuf>, text: &str) -> Result<(), Failure> {
    match out {
        Some(p) => write_atomic(p, text).map_err(|e| Failure::Run(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load_spec(path: &Option<PathBuf>, seed: Option<u64>) -> Result<FamilySpec, Failure> {
    let text = match path {
        Some(p) => std::fs::read_to_string(p).map_err(|e| Failure::Usage(format!("{}: {e}", p.display())))?,
        None => DEFAULT_SPEC.to_string(),
    };
    let mut spec = FamilySpec::parse(&text).map_err(|e: SpecError| {
        let name = path.as_deref().unwrap_or(Path::new("<default>"));
        Failure::Usage(format!("{}: {e}", name.display()))
    })?;
    if let Some(s) = seed {
        spec.seed = s;
    }
    Ok(spec)
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.cmd {
        Cmd::Graph {
            ring,
            ideal,
            kind,
            format,
            out,
        } => {
            let f = match format {
                Format::Dot => GraphFormat::Dot,
                Format::Json => GraphFormat::Json,
                Format::Text => return Err(Failure::Usage("graph supports --format dot or json".into())),
            };
            emit(&out, &cmd_graph(&ring, &ideal, kind, f)?)?;
            Ok(0)
        }
        Cmd::Analyze {
            ring,
            ideal,
            kind,
            format,
            out,
        } => {
            let json = match format {
                Format::Text => false,
                Format::Json => true,
                Format::Dot => return Err(Failure::Usage("analyze supports --format text or json".into())),
            };
            emit(&out, &cmd_analyze(&ring, &ideal, kind, json)?)?;
            Ok(0)
        }
        Cmd::Verify {
            spec,
            audit,
            seed,
            format,
            out,
        } => {
            let spec = load_spec(&spec, seed)?;
            let gate_audit = audit || spec.audit;
            let report = run_suite(&spec).map_err(|e| Failure::Usage(e.to_string()))?;
            let text = match format {
                Format::Json => verify_json(&report, gate_audit),
                _ => verify_text(&report, gate_audit),
            };
            emit(&out, &text)?;
            Ok(cozero::report::exit_code(&report, gate_audit) as u8)
        }
        Cmd::Sweep { spec, seed, out } => {
            let spec = load_spec(&spec, seed)?;
            emit(&out, &sweep_csv(&sweep_rows(&spec)?)?)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(n) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n).build_global() {
            eprintln!("cozero: --jobs: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(m)) => {
            eprintln!("cozero: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Run(m)) => {
            eprintln!("cozero: {m}");
            ExitCode::from(1)
        }
    }
}
