//! The `subshift-lab` command line: argument parsing, dispatch and exit codes.
//!
//! Exit codes: 0 pass, 1 mathematical negative (counterexample, untileable),
//! 2 usage error or corrupt input, 3 budget exceeded.

mod args;
mod commands;

use std::ffi::OsString;
use std::io::Write;

use clap::Parser;

use crate::entropy::EntropyError;
use crate::height::HeightError;
use crate::homshift::HomError;
use crate::lattice::LatticeError;
use crate::tiling::TilingError;
use crate::FormatError;

pub use args::{Cli, Command, Dims, EntropyCmd, Family, Format, Lemma, VerifyCmd, Widths};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;

/// Why a command did not pass.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Failure {
    Usage(String),
    Negative(String),
    Budget(String),
}

impl Failure {
    pub fn exit_code(&self) -> i32 {
        match self {
            Failure::Usage(_) => EXIT_USAGE,
            Failure::Negative(_) => EXIT_NEGATIVE,
            Failure::Budget(_) => EXIT_BUDGET,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Negative(m) | Failure::Budget(m) => m,
        }
    }
}

impl From<HomError> for Failure {
    fn from(e: HomError) -> Self {
        match e {
            HomError::Budget(_) => Failure::Budget(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<TilingError> for Failure {
    fn from(e: TilingError) -> Self {
        match e {
            TilingError::Budget(_) => Failure::Budget(e.to_string()),
            TilingError::NotCertified(_)
            | TilingError::NotRepresentable(_)
            | TilingError::NoMarkerPair(_) => Failure::Negative(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

impl From<EntropyError> for Failure {
    fn from(e: EntropyError) -> Self {
        if e.is_budget() {
            Failure::Budget(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<HeightError> for Failure {
    fn from(e: HeightError) -> Self {
        if e.is_budget() {
            Failure::Budget(e.to_string())
        } else {
            Failure::Usage(e.to_string())
        }
    }
}

impl From<LatticeError> for Failure {
    fn from(e: LatticeError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<FormatError> for Failure {
    fn from(e: FormatError) -> Self {
        Failure::Usage(e.to_string())
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Usage(e.to_string())
    }
}

/// Parses `args` (including the program name), runs the command and returns
/// the exit code. Main output goes to `--out` or `out`, diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let text = e.render().to_string();
            let sink: &mut dyn Write = if code == EXIT_OK { out } else { err };
            let _ = sink.write_all(text.as_bytes());
            return code;
        }
    };
    let pool = match rayon::ThreadPoolBuilder::new().num_threads(cli.workers).build() {
        Ok(p) => p,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return EXIT_USAGE;
        }
    };
    let mut main = Vec::new();
    let mut diag = Vec::new();
    let result = pool.install(|| commands::execute(&cli, &mut main, &mut diag));
    let written = match &cli.out {
        Some(path) if !main.is_empty() || result.is_ok() => std::fs::write(path, &main),
        Some(_) => Ok(()),
        None => out.write_all(&main),
    };
    let _ = err.write_all(&diag);
    if let Err(e) = written {
        let _ = writeln!(err, "error: cannot write output: {e}");
        return EXIT_USAGE;
    }
    match result {
        Ok(()) => EXIT_OK,
        Err(f) => {
            let _ = writeln!(err, "{}: {}", label(&f), f.message());
            f.exit_code()
        }
    }
}

fn label(f: &Failure) -> &'static str {
    match f {
        Failure::Usage(_) => "error",
        Failure::Negative(_) => "negative",
        Failure::Budget(_) => "budget exceeded",
    }
}
