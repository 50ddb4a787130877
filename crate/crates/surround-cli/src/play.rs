//! `play`: interactive terminal match. The human drives one side through
//! legal-move menus; a machine controller drives the other.

use std::io::Write as _;
use std::path::PathBuf;
use std::sync::Arc;

use anyhow::{bail, Context, Result};
use clap::Args;
use surround::graph::Graph;
use surround::rules::GameSpec;
use surround::strategy::{run_match, CopController, MatchOptions, RobberController, Winner};

use crate::controllers::{build_cops, build_robber, prepare_cops, prepare_robber};
use crate::solve::{load_graph, parse_variant};

#[derive(Debug, Args)]
pub struct PlayArgs {
    /// Graph JSON file (see `gen`).
    #[arg(long)]
    pub graph: PathBuf,
    /// Game variant: classical, vertex, vertex-r, edge, edge-r.
    #[arg(long)]
    pub variant: String,
    /// Cop count.
    #[arg(long)]
    pub k: u32,
    /// Which side you play: cops or robber.
    #[arg(long)]
    pub role: String,
    /// Machine controller for the other side (default: extracted).
    #[arg(long)]
    pub opponent: Option<String>,
    /// Write the finished transcript to this JSON file.
    #[arg(long)]
    pub save: Option<PathBuf>,
}

fn pos_label(spec: &GameSpec, p: u32) -> String {
    if spec.variant().cops_on_edges() {
        let (u, v) = spec.graph().endpoints(p);
        format!("edge {u}-{v}")
    } else {
        format!("vertex {p}")
    }
}

fn show_board(spec: &GameSpec, cops: &[u32], robber: Option<u32>) {
    let mut line = String::from("  cops:");
    for (i, &c) in cops.iter().enumerate() {
        line.push_str(&format!(" [{i}] {}", pos_label(spec, c)));
    }
    println!("{line}");
    match robber {
        Some(r) => println!("  robber: vertex {r}"),
        None => println!("  robber: not placed yet"),
    }
}

/// Prints a numbered menu and reads a choice from stdin, re-prompting on
/// anything that is not a listed number. Exits cleanly if stdin closes.
fn choose(spec: &GameSpec, what: &str, options: &[u32], as_vertices: bool) -> u32 {
    println!("{what}:");
    for (i, &p) in options.iter().enumerate() {
        let label = if as_vertices {
            format!("vertex {p}")
        } else {
            pos_label(spec, p)
        };
        println!("  [{i}] {label}");
    }
    let stdin = std::io::stdin();
    loop {
        print!("> ");
        let _ = std::io::stdout().flush();
        let mut line = String::new();
        match stdin.read_line(&mut line) {
            Ok(0) | Err(_) => {
                println!();
                println!("input closed; leaving the match");
                std::process::exit(0);
            }
            Ok(_) => match line.trim().parse::<usize>() {
                Ok(i) if i < options.len() => return options[i],
                _ => println!("pick a number from 0 to {}", options.len() - 1),
            },
        }
    }
}

struct HumanCops {
    spec: GameSpec,
}

impl CopController for HumanCops {
    fn name(&self) -> String {
        "human".into()
    }

    fn place(&mut self) -> Vec<u32> {
        let domain: Vec<u32> = (0..self.spec.cop_domain_size()).collect();
        let mut out = Vec::new();
        for i in 0..self.spec.k() {
            println!();
            out.push(choose(&self.spec, &format!("place cop {i}"), &domain, false));
        }
        out
    }

    fn step(&mut self, cops: &[u32], robber: u32) -> Vec<u32> {
        println!();
        show_board(&self.spec, cops, Some(robber));
        let mut out = Vec::with_capacity(cops.len());
        for (i, &p) in cops.iter().enumerate() {
            let options = self.spec.cop_moves(p);
            println!();
            out.push(choose(
                &self.spec,
                &format!("move cop {i} (now on {})", pos_label(&self.spec, p)),
                &options,
                false,
            ));
        }
        out
    }
}

struct HumanRobber {
    spec: GameSpec,
}

impl RobberController for HumanRobber {
    fn name(&self) -> String {
        "human".into()
    }

    fn place(&mut self, cops: &[u32]) -> Option<u32> {
        println!();
        show_board(&self.spec, cops, None);
        let options = self.spec.robber_placements(cops);
        if options.is_empty() {
            println!("no legal placement for the robber; the cops win");
            return None;
        }
        println!();
        Some(choose(&self.spec, "place the robber", &options, true))
    }

    fn step(&mut self, cops: &[u32], robber: u32) -> u32 {
        println!();
        show_board(&self.spec, cops, Some(robber));
        let options = self.spec.robber_moves(cops, robber);
        println!();
        choose(
            &self.spec,
            &format!("move the robber (now on vertex {robber})"),
            &options,
            true,
        )
    }
}

fn print_intro(graph: &Graph, variant: &str, k: u32, role: &str) {
    println!(
        "{} vertices, {} edges; variant {variant}, {k} cop(s); you play the {role}",
        graph.vertex_count(),
        graph.edge_count()
    );
    let mut legend = String::from("  edges:");
    for (e, (u, v)) in graph.edges().iter().enumerate() {
        legend.push_str(&format!(" {e}:{u}-{v}"));
    }
    println!("{legend}");
}

pub fn run(args: &PlayArgs, seed: u64, steps: u32, budget: u64) -> Result<i32> {
    let graph = Arc::new(load_graph(&args.graph)?);
    let variant = parse_variant(&args.variant)?;
    let game = GameSpec::new(Arc::clone(&graph), variant, args.k)?;
    let opponent = args.opponent.as_deref().unwrap_or("extracted");

    print_intro(&graph, variant.code(), args.k, &args.role);

    let transcript = match args.role.as_str() {
        "cops" | "cop" => {
            let prepared = prepare_robber(opponent, &game, budget).with_context(|| {
                format!(
                    "no machine robber available; try --opponent adversary:greedy \
                     or a scripted key instead of {opponent}"
                )
            })?;
            let mut machine = build_robber(&prepared, &game, seed)?;
            println!("opponent: {}", machine.name());
            let mut human = HumanCops { spec: game.clone() };
            run_match(
                &game,
                &mut human,
                machine.as_mut(),
                &MatchOptions {
                    max_rounds: Some(steps),
                },
            )?
        }
        "robber" => {
            let prepared = prepare_cops(opponent, &game, budget).with_context(|| {
                format!(
                    "no machine cops available; try --opponent adversary:greedy \
                     or a scripted key instead of {opponent}"
                )
            })?;
            let mut machine = build_cops(&prepared, &game, seed)?;
            println!("opponent: {}", machine.name());
            let mut human = HumanRobber { spec: game.clone() };
            run_match(
                &game,
                machine.as_mut(),
                &mut human,
                &MatchOptions {
                    max_rounds: Some(steps),
                },
            )?
        }
        other => bail!("--role must be cops or robber, not {other}"),
    };

    println!();
    match transcript.winner {
        Winner::Cops => println!(
            "cops win after {} round(s): {}",
            transcript.rounds, transcript.reason
        ),
        Winner::Robber => println!(
            "robber wins after {} round(s): {}",
            transcript.rounds, transcript.reason
        ),
    }
    if let Some(path) = &args.save {
        let text = serde_json::to_string_pretty(&transcript)?;
        std::fs::write(path, text + "\n").with_context(|| format!("writing {}", path.display()))?;
        println!("transcript saved to {}", path.display());
    }
    Ok(0)
}
