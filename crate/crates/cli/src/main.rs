use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, ValueEnum};
use cohom_cli::{parse_bounds, parse_input, render, run, sweep, Report, Select};
use cohom_core::Family;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

/// Integral (co)homology of cohomogeneity one manifolds from group-diagram
/// parameters.
#[derive(Parser, Debug)]
#[command(name = "cohom", version)]
#[command(group(ArgGroup::new("source").required(true).args(["input", "sweep"])))]
#[command(group(ArgGroup::new("degrees").args(["homology", "cohomology"])))]
struct Args {
    /// Diagram file in the schema-1 JSON format; `-` reads stdin.
    input: Option<PathBuf>,
    /// Enumerate the valid diagrams of FAMILY in a box given as
    /// `slope=S,order=O,reduced=R,signs=one|both`.
    #[arg(long, num_args = 2, value_names = ["FAMILY", "BOUNDS"])]
    sweep: Option<Vec<String>>,
    /// Cross-check every formula against the oracle.
    #[arg(long)]
    check: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Print homology only.
    #[arg(long)]
    homology: bool,
    /// Print cohomology only.
    #[arg(long)]
    cohomology: bool,
}

fn read_input(path: &PathBuf) -> Result<String, String> {
    if path.as_os_str() == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| format!("stdin: {e}"))?;
        return Ok(s);
    }
    std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn reports(args: &Args) -> Result<(Vec<Report>, bool), String> {
    if let Some(sw) = &args.sweep {
        let family = Family::from_name(&sw[0]).ok_or_else(|| format!("unknown family `{}`", sw[0]))?;
        let bounds = parse_bounds(&sw[1])?;
        return Ok((sweep(family, &bounds, args.check), true));
    }
    let path = args.input.as_ref().expect("clap requires a source");
    let text = read_input(path)?;
    let file = parse_input(&text).map_err(|e| format!("{}: {e}", path.display()))?;
    Ok((file.diagrams.iter().map(|e| run(e, args.check)).collect(), false))
}

fn main() -> ExitCode {
    let args = Args::parse();
    let select = Select {
        cohomology: !args.homology,
        homology: !args.cohomology,
    };
    let (reports, tabulate) = match reports(&args) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    let out = match (args.format, tabulate) {
        (Format::Json, _) => render::json(&reports, select),
        (Format::Text, true) => render::table(&reports, select),
        (Format::Text, false) => render::text(&reports, select),
    };
    print!("{out}");
    if reports.iter().all(Report::passed) {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
