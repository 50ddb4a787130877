//! `solve`: exact verdict for one graph and variant, at a fixed cop count
//! or as a minimum-cop-count search.

use std::path::PathBuf;
use std::str::FromStr;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::Args;
use serde_json::json;
use surround::graph::Graph;
use surround::rules::{GameSpec, Variant};
use surround::solver::search::{cop_number, CopNumberOptions};
use surround::solver::{solve_fixed_k, SolveOptions, Verdict};

use crate::report::RunReport;

#[derive(Debug, Args)]
pub struct SolveArgs {
    /// Graph JSON file (see `gen`).
    #[arg(long)]
    pub graph: PathBuf,
    /// Game variant: classical, vertex, vertex-r, edge, edge-r.
    #[arg(long)]
    pub variant: String,
    /// Solve this exact cop count.
    #[arg(long)]
    pub k: Option<u32>,
    /// Ascend from small k until the cops win.
    #[arg(long)]
    pub find_min: bool,
    /// Start the ascent at the structural lower bound instead of 1.
    #[arg(long)]
    pub trust_bounds: bool,
    /// Record minimax ranks (needed to extract strategies; more memory).
    #[arg(long)]
    pub ranks: bool,
    /// Report file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn load_graph(path: &PathBuf) -> Result<Graph> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let value: serde_json::Value =
        serde_json::from_str(&text).with_context(|| format!("parsing {}", path.display()))?;
    Ok(Graph::from_json(&value)?)
}

pub fn parse_variant(text: &str) -> Result<Variant> {
    Variant::from_str(text)
        .map_err(|_| anyhow::anyhow!("unknown variant {text:?}; use classical, vertex, vertex-r, edge, or edge-r"))
}

pub fn run(args: &SolveArgs, budget: u64, mut report: RunReport) -> Result<i32> {
    let graph = Arc::new(load_graph(&args.graph)?);
    let variant = parse_variant(&args.variant)?;
    if args.k.is_some() == args.find_min {
        bail!("pick exactly one of --k K and --find-min");
    }

    let lower_bounds = json!({
        "delta": graph.min_degree(),
        "Delta": graph.max_degree(),
        "degeneracy": graph.degeneracy().0,
    });

    let mut exit = 0;
    let item = if let Some(k) = args.k {
        let spec = GameSpec::new(Arc::clone(&graph), variant, k)?;
        let opts = SolveOptions {
            budget_states: budget,
            compute_ranks: args.ranks,
            ..SolveOptions::default()
        };
        match solve_fixed_k(&spec, &opts) {
            Ok(sol) => {
                let win = sol.verdict() == Verdict::CopWin;
                json!({
                    "variant": variant.code(),
                    "k_star": if win { Some(k) } else { None },
                    "verdicts": [{
                        "k": k,
                        "verdict": sol.verdict(),
                        "states": sol.stats().states,
                        "millis": sol.stats().millis,
                    }],
                    "lower_bounds": lower_bounds,
                    "stats": sol.stats(),
                })
            }
            Err(e) => {
                exit = 2;
                json!({
                    "variant": variant.code(),
                    "k_star": null,
                    "verdicts": [{ "k": k, "verdict": null, "error": e.to_string() }],
                    "lower_bounds": lower_bounds,
                    "stats": null,
                })
            }
        }
    } else {
        let opts = CopNumberOptions {
            budget_states: budget,
            trust_lower_bounds: args.trust_bounds,
            max_k: None,
        };
        let res = cop_number(Arc::clone(&graph), variant, &opts)?;
        if res.value.is_none() {
            exit = 2;
        }
        let runs = res.runs.len();
        json!({
            "variant": variant.code(),
            "k_star": res.value,
            "verdicts": res.runs,
            "lower_bounds": lower_bounds,
            "stats": { "runs": runs, "not_below": res.lower },
        })
    };

    report.push(item);
    report.finish();
    report.emit(args.out.as_deref())?;
    Ok(exit)
}
