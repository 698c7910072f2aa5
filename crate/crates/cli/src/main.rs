mod report;
mod tables;
mod verify;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};

use lyalg::catalog;
use lyalg::json::StructureFile;

use report::{table_json, table_text};
use tables::Table;
use verify::Mode;

#[derive(Parser)]
#[command(name = "lyalg", version, about = "Build and verify Lie-Yamaguti algebras, Tits constructions and symplectic triple systems")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Run Jacobi and LY axiom checks on structures of dimension 150 or more.
    #[arg(long, global = true)]
    deep: bool,
    /// Worker threads; defaults to the number of CPUs.
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Include wall-clock time in reports.
    #[arg(long, global = true)]
    timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Build a named construction and write its structure constants.
    Build {
        /// Construction name, e.g. "ly-sl(2,3)" or "tits:O,H3(O)".
        name: String,
        /// Output file; standard output when absent.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Verify a structure file, or a construction given by name.
    Check {
        /// Path to a structure file, or a construction name.
        input: String,
        #[arg(long, value_enum, default_value_t = Mode::Full)]
        mode: Mode,
    },
    /// Build, verify and tabulate a family.
    Table {
        #[arg(value_enum)]
        which: Table,
    },
    /// List example construction names.
    List,
}

enum Failure {
    Usage(String),
    Verification(String),
}

fn usage(e: impl std::fmt::Display) -> Failure {
    Failure::Usage(e.to_string())
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(p) => std::fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn run_table(cli: &Cli, which: Table, out: Option<&Path>) -> Result<(), Failure> {
    let start = Instant::now();
    let rows = tables::rows(which, cli.deep).map_err(|e| Failure::Verification(format!("{}: {e:#}", which.name())))?;
    let text = match cli.format {
        Format::Json => {
            let mut v = table_json(which.name(), &rows);
            if cli.timing {
                v["elapsed_ms"] = (start.elapsed().as_millis() as u64).into();
            }
            serde_json::to_string_pretty(&v).expect("serializable") + "\n"
        }
        Format::Text => {
            let mut t = table_text(&rows);
            if cli.timing {
                t += &format!("elapsed: {} ms\n", start.elapsed().as_millis());
            }
            t
        }
    };
    emit(&text, out)?;
    match rows.iter().find(|r| !r.ok) {
        Some(r) => Err(Failure::Verification(format!("{}: cell {} failed verification", which.name(), r.cells[0].1))),
        None => Ok(()),
    }
}

fn load(input: &str) -> Result<StructureFile, Failure> {
    if Path::new(input).is_file() {
        let text = std::fs::read_to_string(input).map_err(|e| usage(format!("{input}: {e}")))?;
        return StructureFile::parse(&text).map_err(|e| usage(format!("{input}: {e}")));
    }
    catalog::build(input).map(|b| b.to_file()).map_err(|e| usage(format!("{input} is neither a readable file nor a construction: {e}")))
}

fn run(cli: &Cli) -> Result<(), Failure> {
    if let Some(w) = cli.workers {
        rayon::ThreadPoolBuilder::new().num_threads(w.max(1)).build_global().map_err(usage)?;
    }
    match &cli.command {
        Command::Build { name, out } => {
            if name == "magic-square" {
                return run_table(cli, Table::MagicSquare, out.as_deref());
            }
            let built = catalog::build(name).map_err(usage)?;
            emit(&built.to_file().to_json(), out.as_deref())
        }
        Command::Check { input, mode } => {
            let start = Instant::now();
            let file = load(input)?;
            let mut rep = verify::check(input, &file, *mode, cli.deep);
            if cli.timing {
                rep.elapsed_ms = Some(start.elapsed().as_millis() as u64);
            }
            let text = match cli.format {
                Format::Json => serde_json::to_string_pretty(&rep.to_json()).expect("serializable") + "\n",
                Format::Text => rep.to_text(),
            };
            print!("{text}");
            if rep.passed() {
                Ok(())
            } else {
                Err(Failure::Verification(format!("{input}: verification failed")))
            }
        }
        Command::Table { which } => run_table(cli, *which, None),
        Command::List => {
            for n in catalog::EXAMPLES {
                println!("{n}");
            }
            println!("magic-square");
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification(m)) => {
            eprintln!("lyalg: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("lyalg: {m}");
            ExitCode::from(2)
        }
    }
}
