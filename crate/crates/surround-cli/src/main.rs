//! Command line front end for the pursuit-game laboratory.
//!
//! Exit codes: 0 decided/passed, 1 usage or input error, 2 resource limit
//! or indeterminate result, 3 assertion failure (a check that ran and
//! came out wrong).

use std::path::PathBuf;

use anyhow::Result;
use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use surround::solver::SolveError;

mod config;
mod controllers;
mod dot;
mod gen;
mod play;
mod pool;
mod report;
mod simulate;
mod solve;
mod table;
mod verify;

use config::Settings;
use report::RunReport;

#[derive(Debug, Parser)]
#[command(
    name = "surround",
    version,
    about = "Exact solver and strategy laboratory for pursuit games on graphs"
)]
struct Cli {
    /// TOML file with defaults for the shared settings below.
    #[arg(long, global = true, value_name = "FILE")]
    config: Option<PathBuf>,
    /// Worker threads for batched work.
    #[arg(long, global = true, value_name = "N")]
    workers: Option<usize>,
    /// Solver state budget.
    #[arg(long, global = true, value_name = "STATES")]
    budget: Option<u64>,
    /// Round limit for matches.
    #[arg(long, global = true, value_name = "ROUNDS")]
    steps: Option<u32>,
    /// Seed or inclusive range (e.g. 0..49) for batch commands.
    #[arg(long, global = true, value_name = "RANGE")]
    seeds: Option<String>,
    /// Seed for single-seed randomized pieces.
    #[arg(long, global = true, value_name = "SEED")]
    seed: Option<u64>,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Construct a named graph family (or MOLS tables) and write JSON.
    Gen(gen::GenArgs),
    /// Solve one graph exactly at fixed k or for the minimal cop count.
    Solve(solve::SolveArgs),
    /// Run a named battery of instances with known expected values.
    Table(table::TableArgs),
    /// Play controller matches over a seed range and dump transcripts.
    Simulate(simulate::SimulateArgs),
    /// Check the inequalities between the five game numbers on a corpus.
    VerifyBounds(verify::VerifyArgs),
    /// Play one side interactively in the terminal.
    Play(play::PlayArgs),
    /// Render a graph JSON file as Graphviz dot.
    ExportDot(dot::DotArgs),
}

fn dispatch(cli: &Cli) -> Result<i32> {
    let file = config::load(cli.config.as_deref())?;
    let settings = Settings::merge(
        &file,
        cli.workers,
        cli.budget,
        cli.steps,
        cli.seeds.as_deref(),
        cli.seed,
    )?;
    let command = std::env::args().collect::<Vec<_>>().join(" ");
    let hash = config::config_hash(&command, &settings);
    let report = || RunReport::start(command.clone(), hash.clone());

    match &cli.cmd {
        Cmd::Gen(a) => gen::run(a),
        Cmd::Solve(a) => solve::run(a, settings.budget, report()),
        Cmd::Table(a) => table::run(a, settings.budget, settings.workers, report()),
        Cmd::Simulate(a) => simulate::run(
            a,
            &settings.seed_list(),
            settings.steps,
            settings.budget,
            settings.workers,
        ),
        Cmd::VerifyBounds(a) => verify::run(
            a,
            settings.seed,
            settings.budget,
            settings.workers,
            report(),
        ),
        Cmd::Play(a) => play::run(a, settings.seed, settings.steps, settings.budget),
        Cmd::ExportDot(a) => dot::run(a),
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match dispatch(&cli) {
        Ok(code) => std::process::exit(code),
        Err(err) => {
            eprintln!("error: {err:#}");
            let code = if err.downcast_ref::<SolveError>().is_some() {
                2
            } else {
                1
            };
            std::process::exit(code);
        }
    }
}
