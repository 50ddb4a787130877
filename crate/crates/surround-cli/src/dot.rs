//! `export-dot`: render a graph JSON file as Graphviz dot.

use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::Args;

use crate::solve::load_graph;

#[derive(Debug, Args)]
pub struct DotArgs {
    /// Graph JSON file (see `gen`).
    #[arg(long)]
    pub graph: PathBuf,
    /// Name of the dot graph.
    #[arg(long, default_value = "G")]
    pub name: String,
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

pub fn run(args: &DotArgs) -> Result<i32> {
    let g = load_graph(&args.graph)?;
    let text = g.to_dot(&args.name);
    match &args.out {
        Some(path) => {
            std::fs::write(path, &text).with_context(|| format!("writing {}", path.display()))?;
            eprintln!("wrote {}", path.display());
        }
        None => print!("{text}"),
    }
    Ok(0)
}
