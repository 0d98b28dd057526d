use std::io::Write;
use std::path::PathBuf;
use std::process;

use clap::{Args, Parser, Subcommand, ValueEnum};

use monodromy_cli::{analyze_report, default_dot_path, exit, exit_code_for, survey};
use monodromy_core::{group, Dessin, Triple};

/// Monodromy groups of dessins on rational triangular billiards surfaces.
#[derive(Parser, Debug)]
#[command(name = "monodromy", version, about)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug)]
struct TripleArgs {
    #[arg(allow_negative_numbers = true)]
    p0: i64,
    #[arg(allow_negative_numbers = true)]
    p1: i64,
    #[arg(allow_negative_numbers = true)]
    p2: i64,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print invariants, predicted group orders and dessin statistics.
    Analyze(TripleArgs),
    /// Enumerate the monodromy group and check the semidirect decomposition.
    Verify {
        #[command(flatten)]
        triple: TripleArgs,
        /// Maximum number of group elements to enumerate
        #[arg(long, default_value_t = group::DEFAULT_LIMIT)]
        limit: usize,
    },
    /// One row per canonical reduced triple with n <= max-n.
    Survey {
        #[arg(long)]
        max_n: u64,
        #[arg(long, value_enum, default_value_t = Format::Csv)]
        format: Format,
        /// Enumerate groups only for n up to this bound
        #[arg(long, default_value_t = 30)]
        brute_force_max: u64,
    },
    /// Write the dessin as an undirected DOT graph.
    ExportDot {
        #[command(flatten)]
        triple: TripleArgs,
        /// Output path; defaults to dessin_<p0>_<p1>_<p2>.dot
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn triple(args: &TripleArgs) -> Result<Triple, i32> {
    Triple::reduce(args.p0, args.p1, args.p2).map_err(|e| {
        eprintln!("error: {e}");
        exit::USAGE
    })
}

fn core_failure(e: monodromy_core::Error) -> i32 {
    eprintln!("error: {e}");
    exit_code_for(&e)
}

fn io_failure(e: std::io::Error) -> i32 {
    eprintln!("error: {e}");
    exit::IO
}

fn run(cli: Cli) -> Result<i32, i32> {
    let stdout = std::io::stdout();
    match cli.command {
        Command::Analyze(args) => {
            let t = triple(&args)?;
            let report = analyze_report(&t).map_err(core_failure)?;
            stdout
                .lock()
                .write_all(report.as_bytes())
                .map_err(io_failure)?;
            Ok(exit::SUCCESS)
        }
        Command::Verify {
            triple: args,
            limit,
        } => {
            let t = triple(&args)?;
            let report = group::verify_theorem(&t, limit).map_err(core_failure)?;
            let mut out = stdout.lock();
            serde_json::to_writer_pretty(&mut out, &report).map_err(|e| io_failure(e.into()))?;
            writeln!(out).map_err(io_failure)?;
            Ok(if report.all_pass {
                exit::SUCCESS
            } else {
                exit::VERIFICATION_FAILED
            })
        }
        Command::Survey {
            max_n,
            format,
            brute_force_max,
        } => {
            if max_n < 3 {
                eprintln!("error: --max-n must be at least 3");
                return Err(exit::USAGE);
            }
            let rows = survey::survey_rows(max_n, brute_force_max).map_err(core_failure)?;
            let format = match format {
                Format::Csv => survey::SurveyFormat::Csv,
                Format::Json => survey::SurveyFormat::Json,
            };
            survey::write_rows(&rows, format, stdout.lock()).map_err(io_failure)?;
            Ok(if rows.iter().all(|r| r.verified) {
                exit::SUCCESS
            } else {
                exit::VERIFICATION_FAILED
            })
        }
        Command::ExportDot { triple: args, out } => {
            let t = triple(&args)?;
            let dessin = Dessin::new(&t);
            let graph = dessin.graph();
            let path = out.unwrap_or_else(|| PathBuf::from(default_dot_path(&t)));
            std::fs::write(&path, dessin.export_dot()).map_err(io_failure)?;
            println!(
                "wrote {}: {} nodes, {} edges",
                path.display(),
                graph.black + graph.white,
                graph.edges.len()
            );
            Ok(exit::SUCCESS)
        }
    }
}

fn main() {
    let cli = Cli::parse();
    let code = run(cli).unwrap_or_else(|code| code);
    process::exit(code);
}
