use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use treecalc::delta::{build_matrix, build_sequence, StrategyRegistry};
use treecalc::poupard::poupard_triangle;
use treecalc::report::Status;
use treecalc::series::{lambda_rhs, omega_rhs};
use treecalc::trees::{for_each_tree, ENUMERATION_BOUND};
use treecalc::verify::{tree_count_line, CheckRegistry, VerifyConfig, DEFAULT_ENUMERATION_CAP};

#[derive(Parser)]
#[command(
    name = "treecalc",
    version,
    about = "Delta-sequence matrices, ordered binary trees and their generating functions"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Pretty)]
    format: Format,

    /// Shorthand for `--format json`
    #[arg(long, global = true)]
    json: bool,

    /// Lift the default cap on enumeration-backed work
    #[arg(long, global = true)]
    force: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Pretty,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    Lambda,
    Omega,
}

#[derive(Subcommand)]
enum Command {
    /// Print the matrix M_n
    Matrix {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=200))]
        n: u32,
        #[arg(long, default_value = "d1")]
        strategy: String,
    },
    /// Print rows 0..=n-max of the Poupard triangle
    Triangle {
        #[arg(long, default_value_t = 4)]
        n_max: usize,
    },
    /// Print every tree on 2n+1 labels with its eoc and pom
    Trees {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=30))]
        n: u32,
    },
    /// Dump a generating function as `i j k a_num/a_den b_num/b_den` lines
    Gf {
        #[arg(long, default_value_t = 6)]
        cap: usize,
        #[arg(long, value_enum)]
        which: Which,
    },
    /// Run verification suites
    Verify {
        #[arg(long, default_value_t = 8, value_parser = clap::value_parser!(u32).range(1..=60))]
        n_max: u32,
        /// Comma-separated suite names, or `all`
        #[arg(long, value_delimiter = ',', default_value = "all")]
        checks: Vec<String>,
        /// Total-degree cap for the trivariate generating functions
        #[arg(long, default_value_t = 10)]
        cap: usize,
        /// Total-degree cap for the bivariate closed forms
        #[arg(long, default_value_t = 12)]
        closed_cap: usize,
        /// Directory of fixture files replacing the built-in ones
        #[arg(long)]
        fixtures: Option<PathBuf>,
    },
    /// Write M_1..M_{n-max}, the triangle and its b-file into a directory
    Export {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=200))]
        n_max: u32,
        #[arg(long)]
        dir: PathBuf,
        #[arg(long, default_value = "d1")]
        strategy: String,
    },
}

enum Failure {
    Usage(String),
    Verification,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    let format = if cli.json { Format::Json } else { cli.format };
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    match cli.command {
        Command::Matrix { n, strategy } => {
            let registry = StrategyRegistry::catalog();
            let m = build_matrix(n as usize, registry.get(&strategy)?)?;
            match format {
                Format::Pretty => write!(out, "{}", m.to_pretty())?,
                Format::Json => writeln!(out, "{}", m.to_json())?,
                Format::Csv => write!(out, "{}", m.to_csv())?,
            }
        }
        Command::Triangle { n_max } => {
            let t = poupard_triangle(n_max);
            match format {
                Format::Json => writeln!(out, "{}", t.to_json())?,
                Format::Pretty | Format::Csv => {
                    let sep = if format == Format::Csv { "," } else { " " };
                    for row in t.rows() {
                        let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                        writeln!(out, "{}", cells.join(sep))?;
                    }
                }
            }
        }
        Command::Trees { n } => {
            let n = n as usize;
            let bound = if cli.force { ENUMERATION_BOUND } else { DEFAULT_ENUMERATION_CAP };
            if n > bound {
                return Err(Failure::Usage(format!(
                    "n = {n} exceeds the enumeration cap {bound}; pass --force to raise it"
                )));
            }
            let mut result = Ok(());
            for_each_tree(n, |t| {
                if result.is_err() {
                    return;
                }
                let (eoc, pom) = (t.eoc().expect("n >= 1"), t.pom().expect("n >= 1"));
                result = match format {
                    Format::Json => writeln!(out, "{{\"tree\":\"{t}\",\"eoc\":{eoc},\"pom\":{pom}}}"),
                    Format::Csv => writeln!(out, "\"{t}\",{eoc},{pom}"),
                    Format::Pretty => writeln!(out, "{t} eoc={eoc} pom={pom}"),
                };
            });
            result?;
        }
        Command::Gf { cap, which } => {
            let series = match which {
                Which::Lambda => lambda_rhs(cap),
                Which::Omega => omega_rhs(cap),
            };
            write!(out, "{}", series.dump())?;
        }
        Command::Verify { n_max, checks, cap, closed_cap, fixtures } => {
            let config = VerifyConfig {
                n_max: n_max as usize,
                gf_cap: cap,
                closed_cap,
                force: cli.force,
                fixtures,
                ..VerifyConfig::default()
            };
            let report = CheckRegistry::standard().run(&checks, config)?;
            if format == Format::Json {
                writeln!(out, "{}", report.to_json())?;
            } else {
                for record in &report.records {
                    writeln!(out, "{record}")?;
                }
                if let Some(line) = tree_count_line(&report) {
                    writeln!(out, "{line}")?;
                }
                let count = |s: Status| report.records.iter().filter(|r| r.status == s).count();
                writeln!(
                    out,
                    "summary: {} passed, {} failed, {} skipped",
                    count(Status::Pass),
                    count(Status::Fail),
                    count(Status::Skipped)
                )?;
            }
            out.flush()?;
            if report.exit_code() != 0 {
                return Err(Failure::Verification);
            }
        }
        Command::Export { n_max, dir, strategy } => {
            let registry = StrategyRegistry::catalog();
            let seq = build_sequence(n_max as usize, registry.get(&strategy)?)?;
            fs::create_dir_all(&dir)?;
            for m in seq.iter() {
                let (ext, body) = match format {
                    Format::Csv => ("csv", m.to_csv()),
                    _ => ("json", m.to_json() + "\n"),
                };
                fs::write(dir.join(format!("m{}.{ext}", m.n())), body)?;
            }
            let t = poupard_triangle(n_max as usize);
            fs::write(dir.join("triangle.json"), t.to_json() + "\n")?;
            fs::write(dir.join("triangle.b.txt"), t.to_bfile())?;
            writeln!(out, "wrote {} matrices and the triangle to {}", seq.max_n(), dir.display())?;
        }
    }
    out.flush()?;
    Ok(())
}
