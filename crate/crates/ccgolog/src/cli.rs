//! `ccgolog project | check | bench`.
//!
//! Exit codes: 0 completed, 1 I/O failure, 2 blocked, 3 syntax, validation
//! or evaluation error (and bad usage), 4 step limit.

use std::ffi::OsString;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::{Duration, Instant};

use ccgolog_core::engine::{project, Outcome};
use ccgolog_core::ProjectionResult;
use clap::{Parser, Subcommand, ValueEnum};

use crate::scenarios::{self, Scenario};
use crate::trace::{decimal, format_trace, Format, TraceDocument};
use crate::{load, LoadError};

pub const EXIT_COMPLETED: i32 = 0;
pub const EXIT_IO: i32 = 1;
pub const EXIT_BLOCKED: i32 = 2;
pub const EXIT_INVALID: i32 = 3;
pub const EXIT_STEP_LIMIT: i32 = 4;

#[derive(Parser, Debug)]
#[command(name = "ccgolog", version, about = "Projects cc-Golog programs over continuous-time action theories")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Projects a program and prints its trace.
    Project(RunArgs),
    /// Projects a program and prints only whether it is executable.
    Check(RunArgs),
    /// Times the bundled office scenarios.
    Bench(BenchArgs),
}

#[derive(clap::Args, Debug)]
struct RunArgs {
    #[arg(long)]
    domain: PathBuf,
    #[arg(long)]
    program: PathBuf,
    #[arg(long, default_value_t = 100_000, value_parser = clap::value_parser!(u64).range(1..))]
    max_steps: u64,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the trace here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum BenchScenario {
    Intro,
    Opportunity,
    Long,
}

#[derive(clap::Args, Debug)]
struct BenchArgs {
    #[arg(long, value_enum)]
    scenario: BenchScenario,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    repeat: u32,
}

pub fn exit_code(result: &ProjectionResult) -> i32 {
    match result.outcome {
        Outcome::Completed { .. } => EXIT_COMPLETED,
        Outcome::Blocked { .. } => EXIT_BLOCKED,
        Outcome::StepLimit { .. } => EXIT_STEP_LIMIT,
    }
}

/// Runs the command line `args` (program name first).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_COMPLETED };
            let text = e.render().to_string();
            let _ = if e.use_stderr() { err.write_all(text.as_bytes()) } else { out.write_all(text.as_bytes()) };
            return code;
        }
    };
    match cli.command {
        Command::Project(args) => run_project(&args, false, out, err),
        Command::Check(args) => run_project(&args, true, out, err),
        Command::Bench(args) => run_bench(&args, out, err),
    }
}

fn read(path: &Path, err: &mut dyn Write) -> Option<String> {
    match std::fs::read_to_string(path) {
        Ok(text) => Some(text),
        Err(e) => {
            let _ = writeln!(err, "error: cannot read {}: {e}", path.display());
            None
        }
    }
}

fn report_load_error(e: &LoadError, args: &RunArgs, err: &mut dyn Write) {
    let _ = match e {
        LoadError::DomainSyntax(p) => writeln!(err, "error: {}:{p}", args.domain.display()),
        LoadError::ProgramSyntax(p) => writeln!(err, "error: {}:{p}", args.program.display()),
        LoadError::Domain(d) => writeln!(err, "error: {}: {d}", args.domain.display()),
        LoadError::Program(d) => writeln!(err, "error: {}: {d}", args.program.display()),
    };
}

fn run_project(args: &RunArgs, check_only: bool, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let (Some(domain_text), Some(program_text)) = (read(&args.domain, err), read(&args.program, err)) else {
        return EXIT_IO;
    };
    let (program, domain) = match load(&domain_text, &program_text) {
        Ok(loaded) => loaded,
        Err(e) => {
            report_load_error(&e, args, err);
            return EXIT_INVALID;
        }
    };
    let max_steps = usize::try_from(args.max_steps).unwrap_or(usize::MAX);
    let result = match project(&program, &domain, max_steps) {
        Ok(result) => result,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INVALID;
        }
    };
    let doc = TraceDocument::from_result(&result);
    let code = exit_code(&result);
    if let Some(reason) = &doc.reason {
        let _ = writeln!(err, "{}: {reason}", doc.status.as_str());
    }
    let text = if check_only {
        let end = decimal(doc.end_time.value(), 6);
        match &doc.reason {
            None => format!("executable: {} actions, ends at {end}\n", doc.entries.len()),
            Some(reason) => format!("not executable ({}) at {end}: {reason}\n", doc.status.as_str()),
        }
    } else {
        format_trace(&doc, args.format)
    };
    let written = match &args.out {
        Some(path) if !check_only => std::fs::write(path, text),
        _ => out.write_all(text.as_bytes()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return EXIT_IO;
    }
    code
}

/// Result of timing one bundled scenario.
#[derive(Clone, Debug)]
pub struct BenchRow {
    pub scenario: &'static str,
    pub steps: usize,
    pub actions: usize,
    pub times: Vec<Duration>,
}

/// Loads and projects `scenario` `repeat` times; each repetition is timed
/// from parsing to the finished trace.
pub fn bench(scenario: Scenario, repeat: u32) -> Result<(BenchRow, ProjectionResult), String> {
    let mut times = Vec::new();
    let mut last = None;
    for _ in 0..repeat {
        let started = Instant::now();
        let (program, domain) = load(scenario.domain, scenario.program).map_err(|e| e.to_string())?;
        let result = project(&program, &domain, 100_000).map_err(|e| e.to_string())?;
        times.push(started.elapsed());
        last = Some(result);
    }
    let result = last.ok_or("no repetitions")?;
    let row = BenchRow {
        scenario: scenario.name,
        steps: result.steps,
        actions: TraceDocument::from_result(&result).entries.len(),
        times,
    };
    Ok((row, result))
}

fn run_bench(args: &BenchArgs, out: &mut dyn Write, err: &mut dyn Write) -> i32 {
    let scenario = match args.scenario {
        BenchScenario::Intro => scenarios::INTRO,
        BenchScenario::Opportunity => scenarios::OPPORTUNITY,
        BenchScenario::Long => scenarios::LONG,
    };
    let (row, result) = match bench(scenario, args.repeat) {
        Ok(r) => r,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_INVALID;
        }
    };
    let ms = |d: &Duration| d.as_secs_f64() * 1e3;
    let mean = row.times.iter().map(ms).sum::<f64>() / row.times.len() as f64;
    let min = row.times.iter().map(ms).fold(f64::INFINITY, f64::min);
    let _ = writeln!(out, "scenario\tstatus\tsteps\tactions\trepeat\tmean_ms\tmin_ms");
    let _ = writeln!(
        out,
        "{}\t{}\t{}\t{}\t{}\t{mean:.3}\t{min:.3}",
        row.scenario,
        TraceDocument::from_result(&result).status.as_str(),
        row.steps,
        row.actions,
        row.times.len(),
    );
    exit_code(&result)
}
