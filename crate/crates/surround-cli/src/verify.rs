//! `verify-bounds`: solve every variant on a corpus of graphs and check the
//! known inequalities between the five game numbers.

use std::path::PathBuf;
use std::sync::Arc;

use anyhow::{bail, Result};
use clap::Args;
use serde_json::json;
use surround::solver::suite::{
    all_connected_graphs, game_numbers, random_connected_graphs, verify_corpus, violated_laws,
    SuiteError,
};

use crate::report::RunReport;
use crate::solve::load_graph;

#[derive(Debug, Args)]
pub struct VerifyArgs {
    /// Check every connected graph up to --max-n vertices.
    #[arg(long, conflicts_with_all = ["random", "graph"])]
    pub all_connected: bool,
    /// Vertex cap for --all-connected (default 5).
    #[arg(long)]
    pub max_n: Option<u32>,
    /// Check COUNT random connected graphs on 2..=7 vertices.
    #[arg(long, conflicts_with = "graph")]
    pub random: Option<usize>,
    /// Check a single graph JSON file.
    #[arg(long)]
    pub graph: Option<PathBuf>,
    /// Report file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn check_one(
    path: &PathBuf,
    budget: u64,
    mut report: RunReport,
    out: Option<&PathBuf>,
) -> Result<i32> {
    let g = load_graph(path)?;
    if !g.is_connected() {
        bail!("connected graphs only: {} is disconnected", path.display());
    }
    let g = Arc::new(g);
    let numbers = match game_numbers(&g, budget) {
        Ok(n) => n,
        Err(e @ SuiteError::Unsolved { .. }) => {
            eprintln!("{e}");
            report.push(json!({ "graphs_checked": 0, "error": e.to_string() }));
            report.finish();
            report.emit(out.map(|p| p.as_path()))?;
            return Ok(2);
        }
        Err(e) => return Err(e.into()),
    };
    let laws = violated_laws(&numbers);
    let ok = laws.is_empty();
    report.push(json!({
        "graphs_checked": 1,
        "numbers": numbers,
        "violations": laws,
    }));
    report.finish();
    report.emit(out.map(|p| p.as_path()))?;
    if ok {
        eprintln!("graph satisfies all inequalities");
        Ok(0)
    } else {
        Ok(3)
    }
}

pub fn run(
    args: &VerifyArgs,
    seed: u64,
    budget: u64,
    workers: usize,
    mut report: RunReport,
) -> Result<i32> {
    if let Some(path) = &args.graph {
        return check_one(path, budget, report, args.out.as_ref());
    }

    let graphs: Vec<surround::graph::Graph> = if args.all_connected {
        let max_n = args.max_n.unwrap_or(5);
        if max_n == 0 || max_n > 7 {
            bail!("--max-n must be between 1 and 7");
        }
        all_connected_graphs(max_n as usize)
    } else if let Some(count) = args.random {
        if let Some(max_n) = args.max_n {
            if max_n < 7 {
                bail!("--max-n is fixed at 7 for --random (graphs draw 2..=7 vertices)");
            }
        }
        random_connected_graphs(count, seed)
    } else {
        bail!("pick one of --all-connected, --random COUNT, or --graph FILE");
    };

    eprintln!("checking {} graph(s) with {workers} worker(s)", graphs.len());
    let suite = verify_corpus(&graphs, budget, workers);
    let ok = suite.ok();

    report.push(json!({
        "graphs_checked": suite.graphs_checked,
        "violations": suite.violations,
    }));
    report.finish();
    report.emit(args.out.as_deref())?;
    if ok {
        eprintln!("all {} graphs satisfy the inequalities", suite.graphs_checked);
        Ok(0)
    } else {
        for v in &suite.violations {
            eprintln!(
                "violation on a {}-vertex graph {:?}: {}",
                v.n,
                v.edges,
                v.laws.join("; ")
            );
        }
        Ok(3)
    }
}
