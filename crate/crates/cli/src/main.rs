use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde_json::json;

use rootcase::caseengine::{self, Tables};
use rootcase::pattern::format_vector;
use rootcase::pipeline::{self, Filter, ModelSpec, RunOptions};
use rootcase::report::{Format, ReportItem, Status, VerificationReport};
use rootcase::{AngleClass, CartanType, Family, RootSystem};

#[derive(Parser, Debug)]
#[command(name = "rootcase", version, about = "Exact root-system case analysis")]
struct Cli {
    /// Seed for the randomized parameter sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Zero the per-item timings.
    #[arg(long, global = true)]
    no_timing: bool,
    /// json, md or tsv.
    #[arg(long, global = true, default_value = "json", value_parser = parse_format)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the roots of one system as TSV.
    Roots { family: Family, rank: usize },
    /// Pair classes of one system with their angles and subcases.
    Pairs {
        family: Family,
        rank: usize,
        #[arg(long)]
        outer: bool,
        /// Keep only classes at this angle (e.g. pi/2).
        #[arg(long)]
        angle: Option<AngleClass>,
    },
    /// Model files.
    Model {
        #[command(subcommand)]
        action: ModelAction,
    },
    /// Check the bundled tables against the computed classes.
    VerifyTables(TableArgs),
    /// Bad-pair scan and list membership of an equal-rank model file.
    EvenScan { file: PathBuf },
    /// Centralizer certificates and the seeded sp(2) sweep.
    MatrixChecks,
    /// Verdicts for the transitive sphere actions.
    SphereReport,
    /// Run everything and write the report.
    Report(AllArgs),
    /// Same as report.
    All(AllArgs),
}

#[derive(Subcommand, Debug)]
enum ModelAction {
    /// Rank data and case of a model file.
    Check { file: PathBuf },
}

#[derive(Args, Debug)]
struct TableArgs {
    /// Exhaustive enumeration for E8.
    #[arg(long)]
    deep: bool,
    #[arg(long, requires = "rank")]
    family: Option<Family>,
    #[arg(long, requires = "family")]
    rank: Option<usize>,
}

#[derive(Args, Debug)]
struct AllArgs {
    #[arg(long)]
    deep: bool,
}

fn parse_format(s: &str) -> Result<Format, String> {
    s.parse().map_err(|e: rootcase::Error| e.to_string())
}

enum Failure {
    Config(String),
    Verification,
}

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Config(e.to_string())
    }
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(p) => std::fs::write(p, text).map_err(|e| Failure::Config(format!("{}: {e}", p.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn emit_report(cli: &Cli, report: VerificationReport) -> Result<(), Failure> {
    let report = if cli.no_timing { report.without_timing() } else { report };
    emit(cli, &report.render(cli.format))?;
    if report.ok() {
        Ok(())
    } else {
        Err(Failure::Verification)
    }
}

fn load_model(path: &PathBuf) -> Result<rootcase::model::HomModel, Failure> {
    let src = std::fs::read_to_string(path).map_err(|e| Failure::Config(format!("{}: {e}", path.display())))?;
    Ok(ModelSpec::from_json(&src)?.build()?)
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Roots { family, rank } => {
            let rs = RootSystem::of(*family, *rank)?;
            let mut s = String::new();
            for r in rs.roots() {
                s.push_str(&format!("{}\t{}\t{}\n", format_vector(r), r, r.norm_sq()));
            }
            emit(cli, &s)
        }
        Command::Pairs { family, rank, outer, angle } => {
            let t = CartanType::new(*family, *rank)?;
            let tables = Tables::load()?;
            let mut s = String::from("alpha\tbeta\ttheta\tsubcase\n");
            for (pc, theta) in caseengine::enumerate_case3(t, *outer) {
                if angle.is_some_and(|a| a != theta) {
                    continue;
                }
                let label = caseengine::assign_subcase(&pc, theta, &tables.t6)
                    .map(|l| l.to_string())
                    .unwrap_or_else(|e| e.to_string());
                s.push_str(&format!("{}\t{}\t{}\t{label}\n", format_vector(&pc.alpha), format_vector(&pc.beta), theta.as_str()));
            }
            emit(cli, &s)
        }
        Command::Model { action: ModelAction::Check { file } } => {
            let model = load_model(file)?;
            let rd = model.rank_data();
            let case = model.classify_case().map(|c| format!("{c:?}"));
            let witness = json!({
                "label": model.label,
                "rank_data": rd,
                "h_roots": model.h.h_roots().iter().map(format_vector).collect::<Vec<_>>(),
                "diagonal": model.h.diagonal.len(),
                "consistent": model.h.is_consistent(),
                "case": case.as_ref().map_or_else(|e| e.to_string(), Clone::clone),
            });
            let ok = rd.parity_ok && rd.rank_gap_ok && model.h.is_consistent();
            emit_report(cli, VerificationReport::new(vec![ReportItem::new("model.check", Status::from_bool(ok), witness)]))
        }
        Command::VerifyTables(args) => {
            let ctype = match (args.family, args.rank) {
                (Some(f), Some(n)) => Some(CartanType::new(f, n)?),
                _ => None,
            };
            let tables = Tables::load()?;
            emit_report(cli, pipeline::tables_report(&tables, Filter { ctype }, args.deep))
        }
        Command::EvenScan { file } => {
            let model = load_model(file)?;
            let bad = caseengine::even_pair_scan(&model)?;
            let member = caseengine::wallach_membership(&model, &rootcase::data::wallach()?)?;
            let pairs: Vec<[String; 2]> = bad.iter().map(|(a, b)| [format_vector(a), format_vector(b)]).collect();
            let item = ReportItem::new(
                "even.scan",
                Status::from_bool(bad.is_empty()),
                json!({ "label": model.label, "bad_pairs": pairs, "membership": member }),
            );
            emit_report(cli, VerificationReport::new(vec![item]))
        }
        Command::MatrixChecks => emit_report(cli, pipeline::matrix_report(cli.seed)),
        Command::SphereReport => emit_report(cli, caseengine::sphere_report()),
        Command::Report(args) | Command::All(args) => {
            let report = pipeline::run_all(RunOptions { seed: cli.seed, deep: args.deep, timing: !cli.no_timing })?;
            emit_report(cli, report)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Config(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
