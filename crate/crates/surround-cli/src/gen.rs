//! `gen`: construct a named graph family and write annotated graph JSON.

use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::Args;
use serde_json::json;
use surround::families;
use surround::graph::{complete_graph, cycle_graph, path_graph, Graph};
use surround::latin::{generate_mols, juxtapose};

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Family: k-bipartite A B, leafy-bipartite A B L, mols-graph K,
    /// line-complete N, base S, expanded S L, hslm S L M, cycle N,
    /// complete N, path N, or mols (with --order).
    pub family: String,
    /// Family parameters, for example `gen k-bipartite 3 3`.
    pub params: Vec<u64>,
    /// Latin square order for `gen mols`.
    #[arg(long)]
    pub order: Option<u32>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn want(params: &[u64], n: usize, usage: &str) -> Result<()> {
    if params.len() != n {
        bail!("expected {usage}");
    }
    Ok(())
}

fn stamped(mut graph: Graph, family: &str, params: &[u64]) -> Graph {
    graph.set_label("family", json!({ "name": family, "params": params }));
    graph
}

pub fn build_family(family: &str, params: &[u64]) -> Result<Graph> {
    let graph = match family {
        "k-bipartite" => {
            want(params, 2, "gen k-bipartite A B")?;
            families::complete_bipartite(params[0] as usize, params[1] as usize)?.graph
        }
        "leafy-bipartite" => {
            want(params, 3, "gen leafy-bipartite A B L")?;
            let bip = families::complete_bipartite(params[0] as usize, params[1] as usize)?;
            families::attach_leaves(&bip.graph, params[2] as usize)?.graph
        }
        "mols-graph" => {
            want(params, 1, "gen mols-graph K")?;
            families::mols_graph(params[0] as u32)?.graph
        }
        "line-complete" => {
            want(params, 1, "gen line-complete N")?;
            families::line_complete(params[0] as usize)?.graph
        }
        "base" => {
            want(params, 1, "gen base S")?;
            families::base_graph(params[0] as u32)?.graph().clone()
        }
        "expanded" => {
            want(params, 2, "gen expanded S L")?;
            families::expanded_graph(params[0] as u32, params[1] as u32)?.graph
        }
        "hslm" => {
            want(params, 3, "gen hslm S L M")?;
            families::full_construction(params[0] as u32, params[1] as u32, params[2] as u32)?.graph
        }
        "cycle" => {
            want(params, 1, "gen cycle N")?;
            if params[0] < 3 {
                bail!("a cycle needs at least 3 vertices");
            }
            cycle_graph(params[0] as usize)
        }
        "complete" => {
            want(params, 1, "gen complete N")?;
            if params[0] < 1 {
                bail!("a complete graph needs at least 1 vertex");
            }
            complete_graph(params[0] as usize)
        }
        "path" => {
            want(params, 1, "gen path N")?;
            if params[0] < 1 {
                bail!("a path needs at least 1 vertex");
            }
            path_graph(params[0] as usize)
        }
        other => bail!(
            "unknown family {other:?}; known: k-bipartite, leafy-bipartite, mols-graph, \
             line-complete, base, expanded, hslm, cycle, complete, path, mols"
        ),
    };
    Ok(stamped(graph, family, params))
}

fn print_square(name: &str, rows: &[Vec<u32>], out: &mut String) {
    out.push_str(name);
    out.push('\n');
    for row in rows {
        let line: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        out.push_str("  ");
        out.push_str(&line.join(" "));
        out.push('\n');
    }
}

/// Squares plus the juxtaposition of the first two, as text.
pub fn mols_text(order: u32) -> Result<String> {
    let squares = generate_mols(order)?;
    let mut text = String::new();
    for (i, sq) in squares.iter().enumerate() {
        let rows: Vec<Vec<u32>> = (0..order)
            .map(|r| (0..order).map(|c| sq.get(r, c)).collect())
            .collect();
        print_square(&format!("L{}", i + 1), &rows, &mut text);
    }
    if squares.len() >= 2 {
        text.push_str("L1 x L2 (each ordered pair exactly once)\n");
        let cells = juxtapose(&squares[0], &squares[1]);
        for r in 0..order as usize {
            let line: Vec<String> = (0..order as usize)
                .map(|c| {
                    let (a, b) = cells[r * order as usize + c];
                    format!("({a},{b})")
                })
                .collect();
            text.push_str("  ");
            text.push_str(&line.join(" "));
            text.push('\n');
        }
    }
    Ok(text)
}

pub fn run(args: &GenArgs) -> Result<i32> {
    if args.family == "mols" {
        let order = args
            .order
            .context("gen mols needs --order K (a prime power up to 27)")?;
        let text = mols_text(order)?;
        match &args.out {
            Some(path) => std::fs::write(path, &text)
                .with_context(|| format!("writing {}", path.display()))?,
            None => print!("{text}"),
        }
        return Ok(0);
    }

    let graph = build_family(&args.family, &args.params)?;
    let text = serde_json::to_string_pretty(&graph.to_json())?;
    match &args.out {
        Some(path) => {
            std::fs::write(path, text + "\n")
                .with_context(|| format!("writing {}", path.display()))?;
            eprintln!(
                "{}: {} vertices, {} edges",
                path.display(),
                graph.vertex_count(),
                graph.edge_count()
            );
        }
        None => println!("{text}"),
    }
    Ok(0)
}
