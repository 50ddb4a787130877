//! Relation checks between the five game numbers over graph corpora.
//!
//! For each graph all five cop numbers are computed exactly (no trusted
//! shortcuts) and checked against the expected relations: restrictive
//! games never need more cops than their plain versions, surround games
//! are bounded below by maximum degree (degeneracy for the restrictive
//! vertex game), and each pair of variants bounds the other within a
//! factor of the maximum degree (or two, between vertex and edge games).
//! Corpora: every connected labeled graph up to a size cap, plus seeded
//! random connected graphs.

use crate::graph::{build_graph, Graph};
use crate::rules::{RulesError, Variant};
use crate::solver::search::{cop_number, CopNumberOptions};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::{Arc, Mutex};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum SuiteError {
    #[error(transparent)]
    Rules(#[from] RulesError),
    #[error("{variant} game unsolved within budget (cop number is at least {lower})")]
    Unsolved { variant: Variant, lower: u32 },
}

/// All five exact game numbers of one graph. Edge games are undefined on
/// edgeless graphs and stay `None` there.
#[derive(Debug, Clone, Serialize)]
pub struct GameNumbers {
    pub n: usize,
    pub m: usize,
    pub max_degree: u32,
    pub degeneracy: u32,
    pub classical: u32,
    pub vertex: u32,
    pub vertex_r: u32,
    pub edge: Option<u32>,
    pub edge_r: Option<u32>,
}

pub fn game_numbers(graph: &Arc<Graph>, budget_states: u64) -> Result<GameNumbers, SuiteError> {
    let opts = CopNumberOptions {
        budget_states,
        ..CopNumberOptions::default()
    };
    let value = |variant: Variant| -> Result<u32, SuiteError> {
        let res = cop_number(Arc::clone(graph), variant, &opts)?;
        res.value.ok_or(SuiteError::Unsolved {
            variant,
            lower: res.lower,
        })
    };
    let has_edges = graph.edge_count() > 0;
    Ok(GameNumbers {
        n: graph.vertex_count(),
        m: graph.edge_count(),
        max_degree: graph.max_degree(),
        degeneracy: graph.degeneracy().0,
        classical: value(Variant::Classical)?,
        vertex: value(Variant::VertexSurround)?,
        vertex_r: value(Variant::VertexSurroundRestrictive)?,
        edge: has_edges.then(|| value(Variant::EdgeSurround)).transpose()?,
        edge_r: has_edges
            .then(|| value(Variant::EdgeSurroundRestrictive))
            .transpose()?,
    })
}

/// Names of the relations violated by these numbers. Relations scaled by
/// the maximum degree or involving edge games only apply to graphs with
/// at least one edge.
pub fn violated_laws(v: &GameNumbers) -> Vec<String> {
    let mut bad = Vec::new();
    let mut check = |ok: bool, law: &str| {
        if !ok {
            bad.push(law.to_string());
        }
    };
    let d = v.max_degree;
    check(v.vertex_r <= v.vertex, "vertex-r <= vertex");
    check(v.vertex_r >= v.degeneracy, "vertex-r >= degeneracy");
    check(v.vertex >= d, "vertex >= max degree");
    if let (Some(e), Some(er)) = (v.edge, v.edge_r) {
        check(er <= e, "edge-r <= edge");
        check(e >= d, "edge >= max degree");
        check(er >= d, "edge-r >= max degree");
        check(v.vertex <= d * v.vertex_r, "vertex <= maxdeg * vertex-r");
        check(e <= d * er, "edge <= maxdeg * edge-r");
        check(v.vertex <= 2 * e, "vertex <= 2 * edge");
        check(v.vertex_r <= 2 * er, "vertex-r <= 2 * edge-r");
        check(e <= d * v.vertex, "edge <= maxdeg * vertex");
        check(er <= d * v.vertex_r, "edge-r <= maxdeg * vertex-r");
    }
    bad
}

#[derive(Debug, Clone, Serialize)]
pub struct LawViolation {
    pub n: usize,
    pub edges: Vec<(u32, u32)>,
    pub numbers: GameNumbers,
    pub laws: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub graphs_checked: usize,
    pub violations: Vec<LawViolation>,
}

impl SuiteReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Every connected graph on 1..=max_n labeled vertices.
pub fn all_connected_graphs(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let pairs: Vec<(u32, u32)> = (0..n as u32)
            .flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)))
            .collect();
        for mask in 0u64..(1u64 << pairs.len()) {
            let edges: Vec<(u32, u32)> = pairs
                .iter()
                .enumerate()
                .filter(|(i, _)| mask >> i & 1 == 1)
                .map(|(_, &e)| e)
                .collect();
            let g = build_graph(n, &edges).unwrap();
            if g.is_connected() {
                out.push(g);
            }
        }
    }
    out
}

/// Seeded sparse random connected graphs: n uniform in 2..=7, each edge
/// kept with probability drawn from 0.25..0.45, resampled until connected.
pub fn random_connected_graphs(count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.random_range(2..=7usize);
        let p: f64 = rng.random_range(0.25..0.45);
        let edges: Vec<(u32, u32)> = (0..n as u32)
            .flat_map(|u| (u + 1..n as u32).map(move |v| (u, v)))
            .filter(|_| rng.random_bool(p))
            .collect();
        let g = build_graph(n, &edges).unwrap();
        if g.is_connected() {
            out.push(g);
        }
    }
    out
}

/// Computes and checks all graphs; `workers` threads share the list and
/// the report order matches the input regardless of scheduling.
pub fn verify_corpus(graphs: &[Graph], budget_states: u64, workers: usize) -> SuiteReport {
    let workers = workers.max(1);
    let next = AtomicUsize::new(0);
    let results: Mutex<Vec<Option<LawViolation>>> = Mutex::new(vec![None; graphs.len()]);
    std::thread::scope(|scope| {
        for _ in 0..workers {
            scope.spawn(|| loop {
                let i = next.fetch_add(1, Ordering::Relaxed);
                if i >= graphs.len() {
                    break;
                }
                let g = Arc::new(graphs[i].clone());
                let numbers = game_numbers(&g, budget_states).expect("suite graph solvable");
                let laws = violated_laws(&numbers);
                if !laws.is_empty() {
                    results.lock().unwrap()[i] = Some(LawViolation {
                        n: g.vertex_count(),
                        edges: g.edges().to_vec(),
                        numbers,
                        laws,
                    });
                }
            });
        }
    });
    let violations = results
        .into_inner()
        .unwrap()
        .into_iter()
        .flatten()
        .collect();
    SuiteReport {
        graphs_checked: graphs.len(),
        violations,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::complete_bipartite;

    #[test]
    fn corpus_counts_match_known_values() {
        // Connected labeled graph counts: 1, 1, 4, 38, 728.
        let all = all_connected_graphs(4);
        assert_eq!(all.len(), 1 + 1 + 4 + 38);
        assert_eq!(
            all_connected_graphs(3).len(),
            6,
            "1 + 1 + 4 connected labeled graphs up to n = 3"
        );
        for g in &all {
            assert!(g.is_connected());
        }
    }

    #[test]
    fn random_corpus_is_deterministic_and_connected() {
        let a = random_connected_graphs(20, 7);
        let b = random_connected_graphs(20, 7);
        assert_eq!(a.len(), 20);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.vertex_count(), y.vertex_count());
            assert_eq!(x.edges(), y.edges());
            assert!(x.is_connected());
            assert!((2..=7).contains(&x.vertex_count()));
        }
        let c = random_connected_graphs(20, 8);
        assert!(a.iter().zip(&c).any(|(x, y)| x.edges() != y.edges()));
    }

    #[test]
    fn known_numbers_pass_and_fabricated_numbers_fail() {
        let g = Arc::new(complete_bipartite(2, 3).unwrap().graph);
        let nums = game_numbers(&g, 10_000_000).unwrap();
        assert_eq!(nums.classical, 2);
        assert_eq!(nums.vertex, 3);
        assert_eq!(nums.vertex_r, 2);
        assert_eq!(nums.edge, Some(3));
        assert_eq!(nums.edge_r, Some(3));
        assert!(violated_laws(&nums).is_empty());

        let mut forged = nums.clone();
        forged.vertex = 1; // below the maximum degree
        let broken = violated_laws(&forged);
        assert!(broken.iter().any(|l| l == "vertex >= max degree"));
    }

    #[test]
    fn edgeless_graph_skips_edge_laws() {
        let g = Arc::new(build_graph(1, &[]).unwrap());
        let nums = game_numbers(&g, 1_000_000).unwrap();
        assert_eq!(nums.classical, 1);
        assert_eq!(nums.vertex, 1);
        assert_eq!(nums.vertex_r, 1);
        assert_eq!(nums.edge, None);
        assert!(violated_laws(&nums).is_empty());
    }

    #[test]
    fn small_corpus_satisfies_all_laws() {
        let graphs = all_connected_graphs(4);
        let report = verify_corpus(&graphs, 10_000_000, 2);
        assert_eq!(report.graphs_checked, 44);
        assert!(report.ok(), "violations: {:?}", report.violations);
    }
}
