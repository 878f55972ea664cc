//! Command-line surface.  Flags mirror the config-file keys; flags win.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::config::{RunConfig, SamplePolicy};
use crate::error::CliError;
use crate::golden::{compare_golden, record_golden};
use crate::run::{run, Command};

#[derive(Debug, Parser)]
#[command(name = "stdmono", version, about = "Straight tableaux, section spaces and their verification reports")]
pub struct Cli {
    /// Key-value config file; flags override its entries.
    #[arg(long, global = true)]
    pub config: Option<PathBuf>,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Compare the report against this golden file (timing ignored).
    #[arg(long, global = true)]
    pub golden: Option<PathBuf>,
    /// Write the report as a golden file.
    #[arg(long, global = true)]
    pub record_golden: Option<PathBuf>,
    /// Worker threads (default: all cores).  Reports do not depend on it.
    #[arg(long, global = true)]
    pub threads: Option<usize>,
    /// Leave the timing section out of the report.
    #[arg(long, global = true)]
    pub no_timing: bool,
    #[command(subcommand)]
    pub command: Cmd,
}

#[derive(Debug, Subcommand)]
pub enum Cmd {
    /// Column sets K^(r) of a word.
    Columns(Params),
    /// Count ordered, within-block and straight tableaux of a shape.
    Enumerate(Params),
    /// Dimension of the section space, primal and opposite.
    Dim(Params),
    /// Verification suites.
    #[command(subcommand)]
    Verify(Verify),
    /// Fiber product over the Richardson ring.
    #[command(subcommand)]
    Fiber(Fiber),
}

#[derive(Debug, Subcommand)]
pub enum Verify {
    /// Straight tableaux against the exact rank.
    Bs(Params),
    /// Restriction to a subword: kernel, rank-nullity, straight condition.
    Restriction(Params),
    /// Schubert-filtered flag monomials against the sampling oracle.
    Schubert(Params),
    /// Richardson sandwich counts against the sampling oracle.
    Richardson(Params),
    /// Leading monomials, initial pieces and degree-wise SAGBI checks.
    Sagbi(Params),
}

#[derive(Debug, Subcommand)]
pub enum Fiber {
    /// Graded pieces of the coproduct.
    Dim(Params),
}

#[derive(Debug, Default, Args)]
pub struct Params {
    /// Size of the board: permutations of 1..n
    #[arg(long)]
    pub n: Option<usize>,
    /// Word, e.g. 1,2,1 (0 marks an omitted letter); defaults to the longest word.
    #[arg(long)]
    pub word: Option<String>,
    /// Subword for the restriction and the left factor of the fiber product; defaults to the word
    #[arg(long)]
    pub j: Option<String>,
    /// Subword for the right factor of the fiber product
    #[arg(long)]
    pub k: Option<String>,
    /// Multiplicities, comma separated.
    #[arg(long)]
    pub mult: Option<String>,
    /// Permutation in one-line notation, e.g. [3,1,2].
    #[arg(long)]
    pub w: Option<String>,
    /// Lower permutation of the Richardson pair
    #[arg(long)]
    pub v: Option<String>,
    /// Powers p of the multiplicity to check, comma separated
    #[arg(long)]
    pub powers: Option<String>,
    /// Sampling seeds, comma separated (default 0)
    #[arg(long)]
    pub seeds: Option<String>,
    /// 'auto' (dim + 25) or a fixed sample count.
    #[arg(long)]
    pub samples: Option<SamplePolicy>,
    /// Write the straight tableaux in grid text to this file.
    #[arg(long)]
    pub dump_tableaux: Option<PathBuf>,
}

impl Cli {
    fn split(&self) -> (Command, &Params) {
        match &self.command {
            Cmd::Columns(p) => (Command::Columns, p),
            Cmd::Enumerate(p) => (Command::Enumerate, p),
            Cmd::Dim(p) => (Command::Dim, p),
            Cmd::Verify(Verify::Bs(p)) => (Command::VerifyBs, p),
            Cmd::Verify(Verify::Restriction(p)) => (Command::VerifyRestriction, p),
            Cmd::Verify(Verify::Schubert(p)) => (Command::VerifySchubert, p),
            Cmd::Verify(Verify::Richardson(p)) => (Command::VerifyRichardson, p),
            Cmd::Verify(Verify::Sagbi(p)) => (Command::VerifySagbi, p),
            Cmd::Fiber(Fiber::Dim(p)) => (Command::FiberDim, p),
        }
    }

    /// The effective configuration: file entries overridden by flags.
    pub fn config(&self) -> Result<(Command, RunConfig), CliError> {
        let (cmd, p) = self.split();
        let flags = RunConfig {
            n: p.n,
            word: p.word.clone(),
            j: p.j.clone(),
            k: p.k.clone(),
            mult: p.mult.clone(),
            w: p.w.clone(),
            v: p.v.clone(),
            powers: p.powers.clone(),
            seeds: p.seeds.clone(),
            samples: p.samples,
            threads: self.threads,
            output: self.output.clone(),
            dump_tableaux: p.dump_tableaux.clone(),
        };
        let file = match &self.config {
            Some(path) => RunConfig::load(path)?,
            None => RunConfig::default(),
        };
        Ok((cmd, file.merged(flags)))
    }
}

/// Runs the CLI and returns the process exit code: 0 when every check
/// passes, 2 for findings (failed checks or golden mismatches), 1 for usage
/// and configuration errors.
pub fn main_with(args: impl IntoIterator<Item = std::ffi::OsString>) -> i32 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    match execute(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli) -> Result<i32, CliError> {
    let (cmd, cfg) = cli.config()?;
    let report = run(cmd, &cfg)?;
    let text = report.to_json(!cli.no_timing);
    match &cfg.output {
        Some(path) => std::fs::write(path, &text).map_err(|source| CliError::Io { path: path.clone(), source })?,
        None => {
            let _ = std::io::stdout().write_all(text.as_bytes());
        }
    }
    if let Some(path) = &cli.record_golden {
        record_golden(&report, path)?;
    }
    let mut code = report.exit_code();
    if let Some(path) = &cli.golden {
        let diffs = compare_golden(&report, path)?;
        for d in &diffs {
            eprintln!("golden mismatch: {d}");
        }
        if !diffs.is_empty() {
            code = 2;
        }
    }
    for c in report.checks.iter().filter(|c| !c.pass) {
        eprintln!("FAIL {}", c.id);
    }
    Ok(code)
}
