use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use threetypes_cli::commands::{self, render_report, render_signature};
use threetypes_cli::{load, parse_file, serialize, to_json, CliError, CliResult, Structure};

#[derive(Parser)]
#[command(name = "threetypes", version, about = "Check, convert and compare finite models of homotopy 3-types")]
struct Cli {
    /// Print every kept witness, not just the first per axiom.
    #[arg(long, global = true)]
    verbose: bool,
    /// Largest group order an isomorphism search may examine.
    #[arg(long, global = true, default_value_t = 64)]
    max_order: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Check every axiom of the structure in FILE.
    Check { file: PathBuf },
    /// Apply a functor and write the result.
    Convert {
        #[arg(long)]
        to: String,
        #[arg(long)]
        out: PathBuf,
        file: PathBuf,
    },
    /// Print π1, π2, π3.
    Homotopy { file: PathBuf },
    /// Run every route from a crossed square and compare the results.
    Diagram { file: PathBuf },
    /// Write a built-in example.
    Demo {
        name: String,
        /// Defaults to standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn read(path: &Path) -> CliResult<Structure> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.display().to_string(),
        source,
    })?;
    load(&parse_file(&text)?)
}

fn write(path: Option<&Path>, s: &Structure) -> CliResult<()> {
    let text = to_json(&serialize(s));
    match path {
        Some(p) => std::fs::write(p, text + "\n").map_err(|source| CliError::Io {
            path: p.display().to_string(),
            source,
        }),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn run(cli: &Cli) -> CliResult<u8> {
    match &cli.command {
        Command::Check { file } => {
            let s = read(file)?;
            let r = commands::check(&s);
            print!("{}: {}", s.kind(), render_report(&r, cli.verbose));
            Ok(if r.is_ok() { 0 } else { 1 })
        }
        Command::Convert { to, out, file } => {
            let s = read(file)?;
            let t = commands::convert(&s, to)?;
            write(Some(out), &t)?;
            println!("wrote {} to {}", t.kind(), out.display());
            Ok(0)
        }
        Command::Homotopy { file } => {
            let sig = commands::homotopy(&read(file)?)?;
            print!("{}", render_signature(&sig));
            Ok(0)
        }
        Command::Diagram { file } => {
            let d = commands::diagram(&read(file)?, cli.max_order)?;
            for line in &d.lines {
                println!("{line}");
            }
            println!("{}", if d.ok { "diagram commutes" } else { "diagram does not commute" });
            Ok(if d.ok { 0 } else { 1 })
        }
        Command::Demo { name, out } => {
            write(out.as_deref(), &commands::demo(name)?)?;
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
