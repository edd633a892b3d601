use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mtcodes::audit::{run_audit, AuditBounds};
use mtcodes::fixtures::{run_suite, SuiteOptions, Status, FIXTURES};
use mtcodes::report::{Report, ReportOptions};
use mtcodes::specfile::parse_spec;
use mtcodes::{Error, DEFAULT_CAP};

const EXIT_INPUT: u8 = 2;
const EXIT_ASSERTION: u8 = 3;

#[derive(Parser)]
#[command(name = "mtcodes", version, about = "Analyze multi-twisted codes over small finite fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Analyze the code described by a spec file.
    Analyze {
        path: PathBuf,
        /// Compute the minimum distance.
        #[arg(long)]
        mindist: bool,
        /// Largest number of codewords to enumerate for the distance.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u128,
        /// Analyze the dual code instead.
        #[arg(long)]
        dual: bool,
        /// Print key=value lines.
        #[arg(long)]
        machine: bool,
    },
    /// Run the built-in fixtures.
    Suite {
        /// List fixture names and summaries without running them.
        #[arg(long)]
        list: bool,
        /// Enumerate minimum distances instead of using parity-check shortcuts.
        #[arg(long)]
        mindist: bool,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: u128,
    },
    /// Check structural properties on random codes.
    Audit {
        #[arg(long, default_value_t = 1000)]
        trials: u64,
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Literal { .. }
        | Error::Syntax { .. }
        | Error::Semantic { .. }
        | Error::InvalidSpec(_)
        | Error::ZeroShift(_) => EXIT_INPUT,
        _ => EXIT_ASSERTION,
    }
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(exit_code(e))
}

fn analyze(path: &PathBuf, mindist: bool, cap: u128, dual: bool, machine: bool) -> ExitCode {
    let src = match fs::read_to_string(path) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(EXIT_INPUT);
        }
    };
    let spec = match parse_spec(&src) {
        Ok(s) => s,
        Err(e) => {
            eprintln!("error: {}: {e}", path.display());
            return ExitCode::from(exit_code(&e));
        }
    };
    let spec = if dual {
        match spec.dual_spec() {
            Ok(s) => s,
            Err(e) => return fail(&e),
        }
    } else {
        spec
    };
    let opts = ReportOptions { distance_cap: mindist.then_some(cap) };
    match Report::build(&spec, &opts) {
        Ok(r) => {
            print!("{}", if machine { r.render_machine() } else { r.render_text() });
            ExitCode::SUCCESS
        }
        Err(e) => fail(&e),
    }
}

fn suite(list: bool, mindist: bool, cap: u128) -> ExitCode {
    if list {
        for f in &FIXTURES {
            println!("{:<26} {}", f.name, f.summary);
        }
        return ExitCode::SUCCESS;
    }
    let reports = run_suite(&SuiteOptions { distance_cap: cap, exhaustive: mindist });
    let mut passed = 0;
    for r in &reports {
        let status = if r.passed() { "pass" } else { "FAIL" };
        println!("{status:<5} {:<26} {} claims", r.name, r.claims.len());
        for c in r.claims.iter().filter(|c| c.status != Status::Pass) {
            println!("      {}: {}: {}", c.status, c.claim, c.detail);
        }
        passed += r.passed() as usize;
    }
    println!("{passed}/{} fixtures pass", reports.len());
    if passed == reports.len() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_ASSERTION)
    }
}

fn audit(trials: u64, seed: u64) -> ExitCode {
    if trials == 0 {
        eprintln!("error: --trials must be at least 1");
        return ExitCode::from(EXIT_INPUT);
    }
    match run_audit(&AuditBounds::default(), trials, seed) {
        Ok(s) => {
            print!("{}", s.render());
            if s.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_ASSERTION)
            }
        }
        Err(e) => fail(&e),
    }
}

fn main() -> ExitCode {
    match Cli::parse().command {
        Command::Analyze { path, mindist, cap, dual, machine } => analyze(&path, mindist, cap, dual, machine),
        Command::Suite { list, mindist, cap } => suite(list, mindist, cap),
        Command::Audit { trials, seed } => audit(trials, seed),
    }
}
