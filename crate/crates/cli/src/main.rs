use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use coverreg_core::graph::DEFAULT_MAX_VERTICES;
use coverreg_core::oracle::explicit::Family;
use coverreg_core::oracle::verify::SuiteFamily;
use coverreg_core::resolution::DEFAULT_LATTICE_CAP;
use coverreg_core::spec::{GraphFamily, GraphSpec, IdealKind, IdealSpec};
use coverreg_core::Error;

mod commands;

/// Cover ideals of (multi)partite graphs: covers, Betti tables, regularity,
/// Hilbert series and verification of closed forms.
#[derive(Debug, Parser)]
#[command(name = "coverreg", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// List the minimal vertex covers of a graph.
    Covers(InputArgs),
    /// Print the minimal generators of an ideal.
    Ideal(InputArgs),
    /// Graded Betti table of R/I.
    Betti(ComputeArgs),
    /// Castelnuovo-Mumford regularity of I.
    Reg(ComputeArgs),
    /// Hilbert series of R/I.
    Hilbert(ComputeArgs),
    /// Build an explicit resolution and check it against the engine.
    SyzygyCheck(SyzygyArgs),
    /// Compare engine results with every closed-form prediction in range.
    Verify(VerifyArgs),
}

#[derive(Debug, Clone, Args)]
struct InputArgs {
    /// JSON graph or ideal spec (a wrapper object with a "spec" key also works).
    #[arg(long, conflicts_with = "family")]
    file: Option<PathBuf>,
    /// Named graph family: complete_multipartite, cm_bipartite, nested_bipartite.
    #[arg(long)]
    family: Option<String>,
    /// Family parameters, comma separated (part sizes, n, or n1,n2,m1,m2).
    #[arg(long, alias = "params", value_delimiter = ',')]
    parts: Vec<usize>,
    /// Power s of the ideal.
    #[arg(long)]
    power: Option<u32>,
    /// cover or edge.
    #[arg(long)]
    kind: Option<String>,
    /// One variable per part of degree equal to the part size.
    #[arg(long)]
    compressed: bool,
    /// Machine-readable output.
    #[arg(long)]
    json: bool,
    /// Vertex bound for exhaustive cover enumeration.
    #[arg(long, default_value_t = DEFAULT_MAX_VERTICES)]
    max_vertices: usize,
}

#[derive(Debug, Clone, Args)]
struct EngineArgs {
    /// Field characteristic; 0 selects the rationals.
    #[arg(long, default_value_t = 32003)]
    field: u64,
    /// Largest lcm lattice the engine will walk.
    #[arg(long, default_value_t = DEFAULT_LATTICE_CAP)]
    lattice_cap: usize,
    /// Worker threads (defaults to all cores).
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Debug, Clone, Args)]
struct ComputeArgs {
    #[command(flatten)]
    input: InputArgs,
    #[command(flatten)]
    engine: EngineArgs,
}

#[derive(Debug, Clone, Args)]
struct SyzygyArgs {
    /// K3, K4 or P4.
    #[arg(long)]
    complex: String,
    #[arg(long, default_value_t = 2)]
    power: u32,
    /// Variable degrees, comma separated (defaults to all ones).
    #[arg(long, value_delimiter = ',')]
    grading: Vec<u32>,
    /// Print the differentials.
    #[arg(long)]
    show: bool,
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    engine: EngineArgs,
}

#[derive(Debug, Clone, Args)]
struct VerifyArgs {
    /// Largest number of parts (and block size bound) to generate.
    #[arg(long, default_value_t = 4)]
    max_m: usize,
    /// Largest power.
    #[arg(long, default_value_t = 4)]
    max_s: usize,
    /// Suite families, comma separated (default: all).
    #[arg(long, value_delimiter = ',')]
    families: Vec<String>,
    /// Write the JSON report to this file.
    #[arg(long)]
    report: Option<PathBuf>,
    #[arg(long)]
    json: bool,
    #[command(flatten)]
    engine: EngineArgs,
}

/// Exit codes beyond 0.
pub(crate) mod exit {
    pub const MISMATCH: u8 = 1;
    pub const USAGE: u8 = 2;
    pub const RESOURCE: u8 = 3;
    pub const COUNTEREXAMPLE: u8 = 4;
}

impl InputArgs {
    fn spec(&self) -> coverreg_core::Result<IdealSpec> {
        let mut spec = match (&self.file, &self.family) {
            (Some(path), _) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
                IdealSpec::from_json(&text)?
            }
            (None, Some(name)) => {
                let family: GraphFamily = name.parse()?;
                if self.parts.is_empty() {
                    return Err(Error::InvalidArgument(format!("--family {name} needs --parts/--params")));
                }
                IdealSpec {
                    graph: GraphSpec::Family {
                        family,
                        params: self.parts.clone(),
                    },
                    kind: IdealKind::Cover,
                    compressed: false,
                    power: 1,
                }
            }
            (None, None) => return Err(Error::InvalidArgument("give --file or --family".into())),
        };
        if let Some(p) = self.power {
            spec.power = p;
        }
        if let Some(k) = &self.kind {
            spec.kind = k.parse()?;
        }
        spec.compressed |= self.compressed;
        if spec.power == 0 {
            return Err(Error::InvalidArgument("--power must be at least 1".into()));
        }
        Ok(spec)
    }
}

fn parse_families(names: &[String]) -> coverreg_core::Result<Vec<SuiteFamily>> {
    if names.is_empty() {
        return Ok(SuiteFamily::ALL.to_vec());
    }
    names.iter().map(|n| n.parse()).collect()
}

fn parse_complex(name: &str) -> coverreg_core::Result<Family> {
    name.parse()
}

fn error_code(e: &Error) -> u8 {
    match e {
        Error::TooLarge { .. } | Error::Overflow => exit::RESOURCE,
        _ => exit::USAGE,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let threads = match &cli.command {
        Command::Betti(a) | Command::Reg(a) | Command::Hilbert(a) => a.engine.threads,
        Command::SyzygyCheck(a) => a.engine.threads,
        Command::Verify(a) => a.engine.threads,
        _ => None,
    };
    if let Some(n) = threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(n.max(1)).build_global() {
            eprintln!("error: cannot configure thread pool: {e}");
            return ExitCode::from(exit::USAGE);
        }
    }
    let result = match &cli.command {
        Command::Covers(a) => commands::covers(a),
        Command::Ideal(a) => commands::ideal(a),
        Command::Betti(a) => commands::betti(a),
        Command::Reg(a) => commands::reg(a),
        Command::Hilbert(a) => commands::hilbert(a),
        Command::SyzygyCheck(a) => commands::syzygy_check(a),
        Command::Verify(a) => commands::verify(a),
    };
    match result {
        Ok(out) => {
            print!("{}", out.text);
            ExitCode::from(out.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(error_code(&e))
        }
    }
}
