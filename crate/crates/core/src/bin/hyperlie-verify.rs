use clap::{Parser, Subcommand};
use hyperlie::verify::{combined_summary, write_outputs, Campaign, CampaignConfig};
use std::ffi::OsString;
use std::path::PathBuf;
use std::process::ExitCode;

/// Runs verification campaigns and writes CSV tables plus `summary.json`.
///
/// Exit status: 0 when every check passes, 1 on any failed check, 2 on a
/// usage or configuration error.
#[derive(Debug, Parser)]
#[command(name = "hyperlie-verify", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// JSON config with flat keys (`grid.nr`, `tol.compare`, ...).
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Output directory; defaults to the config's `outdir`, else `verify-out`.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Seed for randomised checks; overrides the config.
    #[arg(long, global = true)]
    seed: Option<u64>,
}

#[derive(Debug, Clone, Copy, Subcommand)]
enum Command {
    /// Sampled ball maximum of the adjoint norm.
    AdjointMax,
    /// Harmonic function with non-vanishing gradient decay.
    Harmonic,
    /// Radial solutions and flux conservation.
    Radial,
    /// Two-grid convergence of the finite-volume solver.
    Solve2d,
    /// Comparison principle and gradient bound on random pairs.
    Compare,
    /// Residuals of left-translated solutions.
    TranslateCheck,
    /// Decay-indicator classification.
    DecayScan,
    /// Every campaign in order.
    All,
}

impl Command {
    fn campaigns(self) -> Vec<Campaign> {
        match self {
            Command::AdjointMax => vec![Campaign::AdjointMax],
            Command::Harmonic => vec![Campaign::Harmonic],
            Command::Radial => vec![Campaign::Radial],
            Command::Solve2d => vec![Campaign::Solve2d],
            Command::Compare => vec![Campaign::Compare],
            Command::TranslateCheck => vec![Campaign::TranslateCheck],
            Command::DecayScan => vec![Campaign::DecayScan],
            Command::All => Campaign::ALL.to_vec(),
        }
    }
}

fn main() -> ExitCode {
    ExitCode::from(run(std::env::args_os()))
}

/// Parses `args` (program name first), runs, and returns the exit status.
fn run<I: IntoIterator<Item = OsString>>(args: I) -> u8 {
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 2 } else { 0 };
        }
    };
    let mut cfg = match &cli.config {
        Some(path) => match CampaignConfig::load(path) {
            Ok(cfg) => cfg,
            Err(e) => {
                eprintln!("error: {e}");
                return 2;
            }
        },
        None => CampaignConfig::default(),
    };
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    let out = cli
        .out
        .or_else(|| cfg.outdir.clone())
        .unwrap_or_else(|| PathBuf::from("verify-out"));

    let reports: Vec<_> = cli
        .command
        .campaigns()
        .into_iter()
        .map(|c| {
            let report = c.run(&cfg);
            println!(
                "{:<16} {:>4} checks  {:>3} failed  {:7.2}s  {}",
                report.campaign,
                report.rows.len(),
                report.n_failed(),
                report.walltime_s,
                if report.pass() { "PASS" } else { "FAIL" }
            );
            report
        })
        .collect();
    let summary = match reports.as_slice() {
        [one] if !matches!(cli.command, Command::All) => one.summary(),
        _ => combined_summary("all", &reports),
    };
    if let Err(e) = write_outputs(&out, &summary, &reports) {
        eprintln!("error: cannot write outputs to {}: {e}", out.display());
        return 2;
    }
    for failure in summary.campaigns.iter().flat_map(|s| &s.failures).chain(&summary.failures) {
        eprintln!(
            "failed: {}{}{}",
            failure.check_id,
            failure.param_r.map(|r| format!(" (r = {r})")).unwrap_or_default(),
            failure.note.as_deref().map(|n| format!(": {n}")).unwrap_or_default()
        );
    }
    if summary.pass {
        0
    } else {
        1
    }
}
