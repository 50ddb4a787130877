//! `simulate`: play one match per seed between two controllers and write
//! the transcripts as JSON lines.

use std::io::Write;
use std::path::{Path, PathBuf};
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::Args;
use surround::rules::GameSpec;
use surround::strategy::{run_match, MatchOptions, Transcript, Winner};

use crate::controllers::{build_cops, build_robber, natural_cop_count, prepare_cops, prepare_robber};
use crate::pool::run_ordered;
use crate::solve::{load_graph, parse_variant};

#[derive(Debug, Args)]
pub struct SimulateArgs {
    /// Graph JSON file (see `gen`).
    #[arg(long)]
    pub graph: PathBuf,
    /// Game variant: classical, vertex, vertex-r, edge, edge-r.
    #[arg(long)]
    pub variant: String,
    /// Cop count; defaults to what a scripted cop strategy wants.
    #[arg(long)]
    pub k: Option<u32>,
    /// Cop controller: scripted:<key>, adversary:<kind>, or extracted.
    #[arg(long)]
    pub cops: String,
    /// Robber controller: scripted:<key>, adversary:<kind>, or extracted.
    #[arg(long)]
    pub robber: String,
    /// Output: a .jsonl file, or an existing directory for one file per
    /// seed; stdout when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn write_transcripts(transcripts: &[(u64, Transcript)], out: Option<&Path>) -> Result<()> {
    match out {
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            for (_, t) in transcripts {
                serde_json::to_writer(&mut lock, t)?;
                writeln!(lock)?;
            }
        }
        Some(path) if path.is_dir() => {
            for (seed, t) in transcripts {
                let file = path.join(format!("match-{seed:04}.json"));
                let text = serde_json::to_string_pretty(t)?;
                std::fs::write(&file, text + "\n")
                    .with_context(|| format!("writing {}", file.display()))?;
            }
        }
        Some(path) => {
            let mut lines = String::new();
            for (_, t) in transcripts {
                lines.push_str(&serde_json::to_string(t)?);
                lines.push('\n');
            }
            std::fs::write(path, lines).with_context(|| format!("writing {}", path.display()))?;
        }
    }
    Ok(())
}

pub fn run(
    args: &SimulateArgs,
    seeds: &[u64],
    steps: u32,
    budget: u64,
    workers: usize,
) -> Result<i32> {
    let graph = Arc::new(load_graph(&args.graph)?);
    let variant = parse_variant(&args.variant)?;

    let k = match args.k {
        Some(k) => k,
        None => match natural_cop_count(&args.cops, &graph, variant)? {
            Some(k) => k,
            None => bail!("--k is required unless --cops is a scripted strategy"),
        },
    };
    let game = GameSpec::new(Arc::clone(&graph), variant, k)?;
    let cops = prepare_cops(&args.cops, &game, budget)?;
    let robber = prepare_robber(&args.robber, &game, budget)?;

    let opts = MatchOptions {
        max_rounds: Some(steps),
    };
    let results: Vec<Result<(u64, Transcript)>> = run_ordered(seeds, workers, |_, &seed| {
        let mut c = build_cops(&cops, &game, seed)?;
        let mut r = build_robber(&robber, &game, seed)?;
        let t = run_match(&game, c.as_mut(), r.as_mut(), &opts)?;
        Ok((seed, t))
    });
    let transcripts: Vec<(u64, Transcript)> = results.into_iter().collect::<Result<_>>()?;

    let cop_wins = transcripts
        .iter()
        .filter(|(_, t)| t.winner == Winner::Cops)
        .count();
    eprintln!(
        "{} matches: cops won {}, robber won {} ({} vs {})",
        transcripts.len(),
        cop_wins,
        transcripts.len() - cop_wins,
        cops.label(),
        robber.label(),
    );
    write_transcripts(&transcripts, args.out.as_deref())?;
    Ok(0)
}
