use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use h4e8_cli::{run, Command, Format, RunConfig};

#[derive(Parser)]
#[command(name = "h4e8", version, about = "Exact E8 roots, golden-ratio folding to H4, and quaternion polytopes")]
struct Cli {
    /// Read the whole run configuration from a JSON file instead.
    #[arg(long)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Option<Sub>,
}

#[derive(Args, Clone, Default)]
struct Common {
    /// Output file; standard output when absent.
    #[arg(short, long)]
    output: Option<PathBuf>,
    #[arg(short, long, value_enum, default_value = "json")]
    format: Format,
    /// Shell grouping tolerance.
    #[arg(long)]
    tolerance: Option<f64>,
}

#[derive(Subcommand)]
enum Sub {
    /// Weyl orbits of a group, or a named quaternion construction.
    Generate {
        #[arg(long)]
        group: Option<String>,
        /// Ringed-node label such as 0001, or 421 / 241 / 142 for E8.
        #[arg(long)]
        orbit: Option<String>,
        /// T, Tp, S, Sp, I, Ip, A, Ap, J, Jp, F4 or dual-snub.
        #[arg(long)]
        construction: Option<String>,
        /// Also compute minimal-length edges.
        #[arg(long)]
        edges: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Fold the 240 roots with U and list both halves.
    Fold {
        #[command(flatten)]
        common: Common,
    },
    /// Run the invariant checks; exits nonzero when any fails.
    Verify {
        #[arg(long)]
        isomorphism: bool,
        #[arg(long)]
        constructions: bool,
        #[arg(long)]
        tables: bool,
        /// Check a JSON vertex dump (or 421 / 241 / 142).
        #[arg(long)]
        input: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Petrie (2D) or platonic (3D shells) projection.
    Project {
        #[arg(long)]
        petrie: bool,
        #[arg(long)]
        platonic: bool,
        /// 421, 241, 142, or a JSON vertex dump.
        #[arg(long)]
        input: String,
        /// Share of innermost edges left out of SVG output.
        #[arg(long, default_value_t = 0.0)]
        cull_fraction: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Convert a vertex dump to another format.
    Export {
        #[arg(long)]
        input: String,
        #[arg(long, default_value_t = 0.0)]
        cull_fraction: f64,
        #[command(flatten)]
        common: Common,
    },
    /// Octonion multiplication tables.
    Tables {
        /// default or palindromic
        #[arg(long)]
        table: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

fn to_config(sub: Sub) -> RunConfig {
    let (mut cfg, common) = match sub {
        Sub::Generate { group, orbit, construction, edges, common } => {
            let mut c = RunConfig::new(Command::Generate);
            c.group = group;
            c.orbit = orbit;
            c.construction = construction;
            c.edges = edges;
            (c, common)
        }
        Sub::Fold { common } => (RunConfig::new(Command::Fold), common),
        Sub::Verify { isomorphism, constructions, tables, input, common } => {
            let mut c = RunConfig::new(Command::Verify);
            c.input = input;
            c.isomorphism = isomorphism;
            c.constructions = constructions;
            c.tables = tables;
            (c, common)
        }
        Sub::Project { petrie, platonic, input, cull_fraction, common } => {
            let mut c = RunConfig::new(Command::Project);
            c.petrie = petrie;
            c.platonic = platonic;
            c.input = Some(input);
            c.cull_fraction = cull_fraction;
            (c, common)
        }
        Sub::Export { input, cull_fraction, common } => {
            let mut c = RunConfig::new(Command::Export);
            c.input = Some(input);
            c.cull_fraction = cull_fraction;
            (c, common)
        }
        Sub::Tables { table, common } => {
            let mut c = RunConfig::new(Command::Tables);
            c.table = table;
            (c, common)
        }
    };
    cfg.output = common.output;
    cfg.format = common.format;
    cfg.tolerance = common.tolerance;
    cfg
}

fn main_inner(cli: Cli) -> Result<bool> {
    let cfg = match (cli.config, cli.command) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(&path).with_context(|| format!("reading {}", path.display()))?;
            RunConfig::from_json(&text)?
        }
        (None, Some(sub)) => to_config(sub),
        (None, None) => anyhow::bail!("no command given; see --help"),
    };
    let mut progress = |msg: &str| eprintln!("h4e8: {}", msg);
    let outcome = run(&cfg, &mut progress)?;
    match &cfg.output {
        Some(path) => {
            if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
                std::fs::create_dir_all(dir)?;
            }
            std::fs::write(path, &outcome.bytes).with_context(|| format!("writing {}", path.display()))?;
            eprintln!("h4e8: wrote {}", path.display());
        }
        None => std::io::stdout().lock().write_all(&outcome.bytes)?,
    }
    if !outcome.passed {
        eprintln!("h4e8: verification failed");
    }
    Ok(outcome.passed)
}

fn main() -> ExitCode {
    match main_inner(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let report = serde_json::json!({
                "error": format!("{}", e),
                "causes": e.chain().skip(1).map(|c| c.to_string()).collect::<Vec<_>>(),
            });
            eprintln!("{}", report);
            ExitCode::from(2)
        }
    }
}
