//! Turns `--cops` and `--robber` argument strings into live controllers.
//!
//! Three spec forms exist:
//!
//! * `scripted:<key>` - a hand-built strategy for a generated family.  The
//!   graph file must carry the `family` label that `gen` stamps, and the
//!   family rebuilt from those parameters must match the loaded graph edge
//!   for edge.
//! * `adversary:<kind>` - a baseline opponent: `random`, `greedy-distance`,
//!   or (robber only) `stationary`.
//! * `extracted` - optimal play read out of a fresh exact solve.

use std::sync::Arc;

use anyhow::{bail, Context, Result};
use surround::families;
use surround::graph::Graph;
use surround::rules::{GameSpec, Variant};
use surround::solver::{solve_fixed_k, Solution, SolveOptions, Verdict};
use surround::strategy::adversary::{
    GreedyCops, GreedyRobber, RandomCops, RandomRobber, StationaryRobber,
};
use surround::strategy::extracted::{SolvedCops, SolvedRobber};
use surround::strategy::{
    bipartite::BipartiteCops,
    hslm_cops::HslmCops,
    hslm_robber::HslmRobber,
    leafy::{SafeRobber, TwoPhaseEdgeCops, TwoPhaseVertexCops},
    linegraph::{LineCops, LineEdgeRobber},
    mols::SquaresCops,
    CopController, RobberController,
};

/// Family name and parameters stamped into a generated graph file.
pub fn family_of(g: &Graph) -> Option<(String, Vec<u64>)> {
    let v = g.labels().get("family")?;
    let name = v.get("name")?.as_str()?.to_string();
    let params = v
        .get("params")?
        .as_array()?
        .iter()
        .map(|p| p.as_u64())
        .collect::<Option<Vec<u64>>>()?;
    Some((name, params))
}

fn need_family(g: &Graph, key: &str) -> Result<(String, Vec<u64>)> {
    family_of(g).with_context(|| {
        format!("scripted:{key} needs a graph generated by `gen` (no family label found)")
    })
}

fn same_graph(loaded: &Graph, rebuilt: &Graph, key: &str) -> Result<()> {
    if loaded.vertex_count() != rebuilt.vertex_count() || loaded.edges() != rebuilt.edges() {
        bail!("graph file does not match the family its label claims (needed by scripted:{key})");
    }
    Ok(())
}

fn params_n(params: &[u64], want: usize, key: &str) -> Result<Vec<u64>> {
    if params.len() != want {
        bail!("family label for scripted:{key} should carry {want} parameters");
    }
    Ok(params.to_vec())
}

/// A parsed controller spec, ready to mint per-seed instances.
pub enum Prepared {
    Scripted(String),
    Random,
    Greedy,
    Stationary,
    Extracted(Arc<Solution>),
}

impl Prepared {
    pub fn label(&self) -> String {
        match self {
            Prepared::Scripted(key) => format!("scripted:{key}"),
            Prepared::Random => "adversary:random".into(),
            Prepared::Greedy => "adversary:greedy-distance".into(),
            Prepared::Stationary => "adversary:stationary".into(),
            Prepared::Extracted(_) => "extracted".into(),
        }
    }
}

pub const COP_KEYS: &[&str] = &[
    "bipartite-cops",
    "leafy-two-phase-v",
    "leafy-two-phase-e",
    "mols-cops-classical",
    "mols-cops-vr",
    "linegraph-cops-v",
    "hslm-cops-classical",
];

pub const ROBBER_KEYS: &[&str] = &[
    "leafy-safe-robber",
    "linegraph-robber-e",
    "linegraph-robber-er",
    "hslm-robber-vr",
];

fn scripted_cops(key: &str, graph: &Graph, variant: Variant) -> Result<Box<dyn CopController>> {
    let (family, params) = need_family(graph, key)?;
    let wrong = |want: &str| -> anyhow::Error {
        anyhow::anyhow!("scripted:{key} expects a {want} graph, file says {family}")
    };
    match key {
        "bipartite-cops" => {
            if family != "k-bipartite" {
                return Err(wrong("k-bipartite"));
            }
            let p = params_n(&params, 2, key)?;
            let bip = families::complete_bipartite(p[0] as usize, p[1] as usize)?;
            same_graph(graph, &bip.graph, key)?;
            Ok(Box::new(BipartiteCops::new(bip, variant)))
        }
        "leafy-two-phase-v" | "leafy-two-phase-e" => {
            if family != "leafy-bipartite" {
                return Err(wrong("leafy-bipartite"));
            }
            let p = params_n(&params, 3, key)?;
            let bip = families::complete_bipartite(p[0] as usize, p[1] as usize)?;
            let l = p[2] as usize;
            let leafy = families::attach_leaves(&bip.graph, l)?;
            same_graph(graph, &leafy.graph, key)?;
            if key == "leafy-two-phase-v" {
                Ok(Box::new(TwoPhaseVertexCops::new(&bip, l)?))
            } else {
                Ok(Box::new(TwoPhaseEdgeCops::new(&bip, l)?))
            }
        }
        "mols-cops-classical" | "mols-cops-vr" => {
            if family != "mols-graph" {
                return Err(wrong("mols-graph"));
            }
            let p = params_n(&params, 1, key)?;
            let m = families::mols_graph(p[0] as u32)?;
            same_graph(graph, &m.graph, key)?;
            if key == "mols-cops-classical" {
                Ok(Box::new(SquaresCops::classical(m)))
            } else {
                Ok(Box::new(SquaresCops::restrictive_vertex(m)))
            }
        }
        "linegraph-cops-v" => {
            if family != "line-complete" {
                return Err(wrong("line-complete"));
            }
            let p = params_n(&params, 1, key)?;
            let lc = families::line_complete(p[0] as usize)?;
            same_graph(graph, &lc.graph, key)?;
            Ok(Box::new(LineCops::new(lc)))
        }
        "hslm-cops-classical" => {
            if family != "hslm" {
                return Err(wrong("hslm"));
            }
            let p = params_n(&params, 3, key)?;
            let h = families::full_construction(p[0] as u32, p[1] as u32, p[2] as u32)?;
            same_graph(graph, &h.graph, key)?;
            Ok(Box::new(HslmCops::new(h)?))
        }
        _ => bail!(
            "unknown scripted cop key {key:?}; known keys: {}",
            COP_KEYS.join(", ")
        ),
    }
}

fn scripted_robber(
    key: &str,
    graph: &Graph,
    variant: Variant,
) -> Result<Box<dyn RobberController>> {
    let (family, params) = need_family(graph, key)?;
    let wrong = |want: &str| -> anyhow::Error {
        anyhow::anyhow!("scripted:{key} expects a {want} graph, file says {family}")
    };
    match key {
        "leafy-safe-robber" => {
            if family != "leafy-bipartite" {
                return Err(wrong("leafy-bipartite"));
            }
            let p = params_n(&params, 3, key)?;
            let bip = families::complete_bipartite(p[0] as usize, p[1] as usize)?;
            let l = p[2] as usize;
            let leafy = families::attach_leaves(&bip.graph, l)?;
            same_graph(graph, &leafy.graph, key)?;
            Ok(Box::new(SafeRobber::new(&bip.graph, l, variant)))
        }
        "linegraph-robber-e" | "linegraph-robber-er" => {
            if family != "line-complete" {
                return Err(wrong("line-complete"));
            }
            let p = params_n(&params, 1, key)?;
            let lc = families::line_complete(p[0] as usize)?;
            same_graph(graph, &lc.graph, key)?;
            Ok(Box::new(LineEdgeRobber::new(
                lc,
                key == "linegraph-robber-er",
            )))
        }
        "hslm-robber-vr" => {
            if family != "hslm" {
                return Err(wrong("hslm"));
            }
            let p = params_n(&params, 3, key)?;
            let h = families::full_construction(p[0] as u32, p[1] as u32, p[2] as u32)?;
            same_graph(graph, &h.graph, key)?;
            Ok(Box::new(HslmRobber::new(h)?))
        }
        _ => bail!(
            "unknown scripted robber key {key:?}; known keys: {}",
            ROBBER_KEYS.join(", ")
        ),
    }
}

fn parse(spec: &str) -> Result<Prepared> {
    if spec == "extracted" {
        // The solve happens in prepare_* once the game shape is known.
        bail!("internal: extracted is resolved by the prepare functions");
    }
    if let Some(key) = spec.strip_prefix("scripted:") {
        return Ok(Prepared::Scripted(key.to_string()));
    }
    if let Some(kind) = spec.strip_prefix("adversary:") {
        return match kind {
            "random" => Ok(Prepared::Random),
            "greedy-distance" | "greedy" => Ok(Prepared::Greedy),
            "stationary" => Ok(Prepared::Stationary),
            _ => bail!(
                "unknown adversary {kind:?}; known kinds: random, greedy-distance, stationary"
            ),
        };
    }
    bail!("controller spec {spec:?} is not scripted:<key>, adversary:<kind>, or extracted")
}

fn solve_for_extraction(game: &GameSpec, budget: u64) -> Result<Arc<Solution>> {
    let opts = SolveOptions {
        budget_states: budget,
        compute_ranks: true,
        ..SolveOptions::default()
    };
    let sol = solve_fixed_k(game, &opts)?;
    Ok(Arc::new(sol))
}

/// Parses a cop spec and runs any one-time work (the solve for
/// `extracted`); `build_cops` then mints per-seed instances.
pub fn prepare_cops(spec: &str, game: &GameSpec, budget: u64) -> Result<Prepared> {
    if spec == "extracted" {
        let sol = solve_for_extraction(game, budget)?;
        if sol.verdict() != Verdict::CopWin {
            eprintln!(
                "note: {} cops lose the {} game here; extracted cops will chase anyway",
                game.k(),
                game.variant()
            );
        }
        return Ok(Prepared::Extracted(sol));
    }
    let p = parse(spec)?;
    if matches!(p, Prepared::Stationary) {
        bail!("adversary:stationary only exists for the robber");
    }
    if let Prepared::Scripted(key) = &p {
        // Build one throwaway instance now so bad keys fail before any match.
        scripted_cops(key, game.graph(), game.variant())?;
    }
    Ok(p)
}

pub fn prepare_robber(spec: &str, game: &GameSpec, budget: u64) -> Result<Prepared> {
    if spec == "extracted" {
        return Ok(Prepared::Extracted(solve_for_extraction(game, budget)?));
    }
    let p = parse(spec)?;
    if let Prepared::Scripted(key) = &p {
        scripted_robber(key, game.graph(), game.variant())?;
    }
    Ok(p)
}

pub fn build_cops(p: &Prepared, game: &GameSpec, seed: u64) -> Result<Box<dyn CopController>> {
    Ok(match p {
        Prepared::Scripted(key) => scripted_cops(key, game.graph(), game.variant())?,
        Prepared::Random => Box::new(RandomCops::new(game.clone(), seed)),
        Prepared::Greedy => Box::new(GreedyCops::new(game.clone())),
        Prepared::Stationary => bail!("adversary:stationary only exists for the robber"),
        Prepared::Extracted(sol) => Box::new(SolvedCops::new(Arc::clone(sol))),
    })
}

pub fn build_robber(p: &Prepared, game: &GameSpec, seed: u64) -> Result<Box<dyn RobberController>> {
    Ok(match p {
        Prepared::Scripted(key) => scripted_robber(key, game.graph(), game.variant())?,
        Prepared::Random => Box::new(RandomRobber::new(game.clone(), seed)),
        Prepared::Greedy => Box::new(GreedyRobber::new(game.clone())),
        Prepared::Stationary => Box::new(StationaryRobber::new(game.clone())),
        Prepared::Extracted(sol) => Box::new(SolvedRobber::new(Arc::clone(sol))),
    })
}

/// Cop count a scripted strategy wants, so `--k` may be omitted.
pub fn natural_cop_count(spec: &str, graph: &Graph, variant: Variant) -> Result<Option<u32>> {
    if let Some(key) = spec.strip_prefix("scripted:") {
        let mut cops = scripted_cops(key, graph, variant)?;
        return Ok(Some(cops.place().len() as u32));
    }
    Ok(None)
}
