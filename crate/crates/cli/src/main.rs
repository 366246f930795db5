//! Subcommand front end for the exact graded-algebra toolkit.
//!
//! Exit codes: 0 when every check passes, 1 when a check is violated,
//! 2 on malformed input. Reports are deterministic: per-degree work may
//! fan out across threads (`--jobs`, or the `GS_FORGE_JOBS` environment
//! variable, which wins over the flag), but output is always assembled in
//! degree order.

use clap::{Parser, Subcommand};
use gs_forge_core::error::Error;
use gs_forge_core::scalar::{format_rat, parse_rat, Rat};
use serde_json::{json, Value};
use std::path::PathBuf;
use std::process::ExitCode;

mod commands;

#[derive(Parser)]
#[command(name = "gs-forge", version, about = "exact dimension counts, boundary-map checks, and series certificates for finitely presented graded algebras and group algebras")]
struct Cli {
    /// Worker threads for per-degree fan-out (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,
    /// Emit one JSON object instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Graded component dimensions b_0..b_N of a presented algebra.
    Dims {
        file: PathBuf,
        #[arg(long)]
        max_degree: u32,
    },
    /// The generator/relation inequality, degree by degree.
    GsCheck {
        file: PathBuf,
        #[arg(long)]
        max_degree: u32,
    },
    /// Boundary matrices per degree with exactness and counting checks.
    Koszul {
        file: PathBuf,
        #[arg(long)]
        max_degree: u32,
        /// Materialize a kernel basis of the relation-indexed map.
        #[arg(long)]
        kernel_basis: bool,
    },
    /// Hilbert series of the quotient and the certificate product.
    Hilbert {
        file: PathBuf,
        #[arg(long)]
        max_degree: u32,
    },
    /// Relation-count bounds and the closed-form series certificate.
    Golod {
        /// Number of degree-one generators.
        #[arg(long)]
        gens: u64,
        /// Slack parameter, a rational like 1/2.
        #[arg(long, value_parser = rat_arg)]
        eps: Rat,
        #[arg(long, default_value_t = 20)]
        max_degree: u32,
    },
    /// Growth witness for the recurrence a_{n+2} >= d1 a_{n+1} - d2 a_n + 1.
    Serre {
        #[arg(long, value_parser = rat_arg)]
        d1: Rat,
        #[arg(long, value_parser = rat_arg)]
        d2: Rat,
        #[arg(long, value_parser = rat_arg)]
        a1: Rat,
        #[arg(long)]
        steps: usize,
    },
    /// Fox derivative table of a group presentation, with reconstruction.
    Fox { file: PathBuf },
    /// Augmentation-filtration dimensions of a finite group algebra.
    GroupFiltration {
        file: PathBuf,
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        max_n: usize,
    },
    /// The filtered-algebra inequality for a presentation and a group table.
    Vinberg {
        grp: PathBuf,
        gtab: PathBuf,
        #[arg(long)]
        prime: u64,
        #[arg(long)]
        max_n: usize,
    },
    /// Abelianization invariants and the relation-count threshold.
    Dab { file: PathBuf },
}

fn rat_arg(s: &str) -> Result<Rat, String> {
    parse_rat(s).ok_or_else(|| format!("`{s}` is not a rational (use p or p/q)"))
}

/// Everything a subcommand produces: the text report, its JSON twin, and
/// whether all checks passed.
pub struct Report {
    text: String,
    json: Value,
    ok: bool,
}

impl Report {
    fn new() -> Report {
        Report {
            text: String::new(),
            json: Value::Null,
            ok: true,
        }
    }

    fn line(&mut self, s: impl AsRef<str>) {
        self.text.push_str(s.as_ref());
        self.text.push('\n');
    }

    fn set_json(&mut self, v: Value) {
        let mut v = v;
        if let Value::Object(map) = &mut v {
            map.insert("schemaVersion".into(), json!(1));
        }
        self.json = v;
    }
}

fn pass(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

fn ok_str(b: bool) -> &'static str {
    if b {
        "OK"
    } else {
        "FAIL"
    }
}

fn rats_json(rs: &[Rat]) -> Value {
    Value::Array(rs.iter().map(|r| json!(format_rat(r))).collect())
}

fn read_file(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(Error::Io)
}

fn run(cmd: &Command) -> Result<Report, Error> {
    match cmd {
        Command::Dims { file, max_degree } => commands::dims(&read_file(file)?, *max_degree),
        Command::GsCheck { file, max_degree } => {
            commands::gs_check(&read_file(file)?, *max_degree)
        }
        Command::Koszul {
            file,
            max_degree,
            kernel_basis,
        } => commands::koszul(&read_file(file)?, *max_degree, *kernel_basis),
        Command::Hilbert { file, max_degree } => {
            commands::hilbert(&read_file(file)?, *max_degree)
        }
        Command::Golod {
            gens,
            eps,
            max_degree,
        } => commands::golod(*gens, eps, *max_degree as usize),
        Command::Serre { d1, d2, a1, steps } => commands::serre(d1, d2, a1, *steps),
        Command::Fox { file } => commands::fox(&read_file(file)?),
        Command::GroupFiltration { file, prime, max_n } => {
            commands::group_filtration(&read_file(file)?, *prime, *max_n)
        }
        Command::Vinberg {
            grp,
            gtab,
            prime,
            max_n,
        } => commands::vinberg(&read_file(grp)?, &read_file(gtab)?, *prime, *max_n),
        Command::Dab { file } => commands::dab(&read_file(file)?),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();

    let jobs = match std::env::var("GS_FORGE_JOBS") {
        Ok(s) => match s.parse::<usize>() {
            Ok(j) if j >= 1 => Some(j),
            _ => {
                eprintln!("error: GS_FORGE_JOBS must be a positive integer, got `{s}`");
                return ExitCode::from(2);
            }
        },
        Err(_) => cli.jobs,
    };
    if jobs == Some(0) {
        eprintln!("error: --jobs must be a positive integer");
        return ExitCode::from(2);
    }

    let outcome = match jobs {
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j)
                .build()
                .expect("thread pool");
            pool.install(|| run(&cli.command))
        }
        None => run(&cli.command),
    };

    match outcome {
        Ok(report) => {
            if cli.json {
                println!("{}", report.json);
            } else {
                print!("{}", report.text);
            }
            if report.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_input_error() { 2 } else { 1 })
        }
    }
}
