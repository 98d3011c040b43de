use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};
use typecount::commands::{self, ModelArg, RouteArg};
use typecount::config::GlobalFile;
use typecount::parse::{parse_budget, parse_eigs, parse_weight};
use typecount::report::{Format, Table};
use typecount::suites;
use typecount::{CliError, CliResult, EXIT_BUDGET};

#[derive(Parser, Debug)]
#[command(name = "typecount", version, about = "Finite-level trace bounds and multiplicity counts for GL_n types")]
struct Cli {
    #[command(flatten)]
    common: Common,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Args, Debug)]
struct Common {
    /// Enumeration budget (elements visited); accepts `1e8`.
    #[arg(long, global = true, env = "TYPECOUNT_BUDGET", value_parser = parse_budget, default_value = "1e8")]
    budget: u64,
    /// Write the table here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Fixed points of g on the coset model X_k.
    Census {
        #[arg(long, value_enum)]
        model: ModelArg,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: usize,
        /// Row-major entries, each a polynomial in t such as `1+t`.
        #[arg(long)]
        matrix: String,
        #[arg(long, value_enum, default_value_t = RouteArg::Auto)]
        route: RouteArg,
    },
    /// Cuspidal character table of GL_n(F_q).
    Green {
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
    },
    /// Gram matrix of the alternating pairing on J^1/H^1.
    Pairing {
        #[arg(long, value_enum, default_value_t = ModelArg::Unram)]
        model: ModelArg,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: usize,
    },
    /// Trace bound of the minimal type of level m at g.
    Bound {
        #[arg(long, value_enum, default_value_t = ModelArg::Unram)]
        model: ModelArg,
        #[arg(long)]
        q: u64,
        #[arg(long)]
        n: u32,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        matrix: String,
    },
    /// Weyl dimensions, the dimension polynomial, and character scans.
    Weyl {
        #[arg(long)]
        n: usize,
        /// Highest weight, e.g. `2,1,0`.
        #[arg(long, allow_hyphen_values = true)]
        weight: Option<String>,
        /// Eigenvalue angles in turns, e.g. `0,0,1/2`.
        #[arg(long, allow_hyphen_values = true)]
        eigs: Option<String>,
        #[arg(long = "box", default_value_t = 20)]
        box_size: u64,
    },
    /// Global lower bounds from a JSON configuration.
    Global {
        #[arg(long)]
        config: PathBuf,
        /// Overrides the box given in the configuration.
        #[arg(long = "box")]
        box_size: Option<u64>,
    },
    /// Runs an acceptance suite by name, or `all`.
    Verify {
        #[arg(long, default_value = "all")]
        suite: String,
    },
}

fn emit(table: &Table, common: &Common) -> CliResult<()> {
    match &common.out {
        Some(path) => {
            let mut w = BufWriter::new(File::create(path)?);
            table.write(&mut w, common.format)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            table.write(stdout.lock(), common.format)?;
        }
    }
    Ok(())
}

/// Runs the command; `Ok(false)` means a verification failure.
fn run(cli: &Cli) -> CliResult<bool> {
    let c = &cli.common;
    match &cli.cmd {
        Cmd::Census { model, q, n, k, matrix, route } => {
            emit(&commands::census(*model, *q, *n, *k, matrix, *route, c.budget)?, c)?;
        }
        Cmd::Green { q, n } => emit(&commands::green(*q, *n, c.budget)?, c)?,
        Cmd::Pairing { model, q, n, m } => {
            let (t, summary) = commands::pairing(*model, *q, *n, *m)?;
            emit(&t, c)?;
            eprintln!("{summary}");
        }
        Cmd::Bound { model, q, n, m, matrix } => {
            emit(&commands::bound(*model, *q, *n, *m, matrix)?, c)?;
        }
        Cmd::Weyl { n, weight, eigs, box_size } => {
            let w = weight.as_deref().map(parse_weight).transpose()?;
            let x = eigs.as_deref().map(parse_eigs).transpose()?;
            let (t, summary) = commands::weyl(*n, w.as_ref(), x.as_deref(), *box_size)?;
            emit(&t, c)?;
            if let Some(s) = summary {
                eprintln!("{s}");
            }
        }
        Cmd::Global { config, box_size } => {
            let text = std::fs::read_to_string(config)?;
            let input = GlobalFile::from_json(&text)?.into_input()?;
            emit(&commands::global(&input, *box_size)?, c)?;
        }
        Cmd::Verify { suite } => {
            if suite != "all" && !suites::SUITES.contains(&suite.as_str()) {
                return Err(CliError::Usage(format!(
                    "unknown suite '{suite}'; expected all or one of {}",
                    suites::SUITES.join(", ")
                )));
            }
            let (t, ok) = suites::verify(suite, c.budget)?;
            emit(&t, c)?;
            eprintln!("{}", if ok { "all suites passed" } else { "some suites FAILED" });
            return Ok(ok);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let start = Instant::now();
    let result = run(&cli);
    eprintln!("elapsed {:.3}s", start.elapsed().as_secs_f64());
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e}");
            if e.is_budget() {
                ExitCode::from(EXIT_BUDGET as u8)
            } else if matches!(e, CliError::Usage(_)) {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}
