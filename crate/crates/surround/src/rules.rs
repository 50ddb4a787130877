//! Game definitions: the five pursuit variants, whose turn it is, and
//! which placements, moves, and terminal positions are legal.
//!
//! In every variant the robber walks on vertices. Cops walk on vertices in
//! the capture and vertex-surround variants and on edges in the
//! edge-surround variants (moving between edges that share an endpoint).
//! Cops may stack. Play order: cops place, the robber places seeing them,
//! then the cops move first. "Restrictive" rules additionally forbid the
//! robber from ending a turn on a cop vertex (vertex game) or from
//! traversing a cop edge (edge game).

use crate::graph::{Graph, VertexId};
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use thiserror::Error;

/// Which pursuit game is being played.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum Variant {
    /// Cops win by sharing a vertex with the robber.
    Classical,
    /// Cops win by occupying every neighbor of the robber.
    VertexSurround,
    /// Vertex surround where the robber may never end a turn on a cop.
    VertexSurroundRestrictive,
    /// Cops stand on edges and win by occupying every edge at the robber.
    EdgeSurround,
    /// Edge surround where the robber cannot traverse occupied edges.
    EdgeSurroundRestrictive,
}

impl Variant {
    pub const ALL: [Variant; 5] = [
        Variant::Classical,
        Variant::VertexSurround,
        Variant::VertexSurroundRestrictive,
        Variant::EdgeSurround,
        Variant::EdgeSurroundRestrictive,
    ];

    /// Short stable identifier used on the command line and in reports.
    pub fn code(self) -> &'static str {
        match self {
            Variant::Classical => "classical",
            Variant::VertexSurround => "vertex",
            Variant::VertexSurroundRestrictive => "vertex-r",
            Variant::EdgeSurround => "edge",
            Variant::EdgeSurroundRestrictive => "edge-r",
        }
    }

    pub fn cops_on_edges(self) -> bool {
        matches!(self, Variant::EdgeSurround | Variant::EdgeSurroundRestrictive)
    }

    pub fn is_restrictive(self) -> bool {
        matches!(
            self,
            Variant::VertexSurroundRestrictive | Variant::EdgeSurroundRestrictive
        )
    }
}

impl fmt::Display for Variant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.code())
    }
}

impl FromStr for Variant {
    type Err = RulesError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Variant::ALL
            .into_iter()
            .find(|v| v.code() == s)
            .ok_or_else(|| RulesError::UnknownVariant(s.to_string()))
    }
}

impl TryFrom<String> for Variant {
    type Error = RulesError;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<Variant> for String {
    fn from(v: Variant) -> String {
        v.code().to_string()
    }
}

/// Whose half-move comes next.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Side {
    CopsToMove = 0,
    RobberToMove = 1,
}

impl Side {
    pub fn index(self) -> usize {
        self as usize
    }

    pub fn from_index(i: usize) -> Side {
        if i == 0 {
            Side::CopsToMove
        } else {
            Side::RobberToMove
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RulesError {
    #[error("unknown variant '{0}' (expected classical, vertex, vertex-r, edge, or edge-r)")]
    UnknownVariant(String),
    #[error("the game graph must be connected")]
    DisconnectedGraph,
    #[error("at least one cop is required")]
    ZeroCops,
    #[error("edge variants need a graph with at least one edge")]
    NoEdges,
}

/// A concrete game: graph, variant, and number of cops.
#[derive(Debug, Clone)]
pub struct GameSpec {
    graph: Arc<Graph>,
    variant: Variant,
    k: u32,
}

impl GameSpec {
    pub fn new(graph: Arc<Graph>, variant: Variant, k: u32) -> Result<GameSpec, RulesError> {
        if k == 0 {
            return Err(RulesError::ZeroCops);
        }
        if !graph.is_connected() {
            return Err(RulesError::DisconnectedGraph);
        }
        if variant.cops_on_edges() && graph.edge_count() == 0 {
            return Err(RulesError::NoEdges);
        }
        Ok(GameSpec { graph, variant, k })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn graph_arc(&self) -> Arc<Graph> {
        Arc::clone(&self.graph)
    }

    pub fn variant(&self) -> Variant {
        self.variant
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn with_k(&self, k: u32) -> Result<GameSpec, RulesError> {
        GameSpec::new(Arc::clone(&self.graph), self.variant, k)
    }

    /// Number of positions a single cop can stand on.
    pub fn cop_domain_size(&self) -> u32 {
        if self.variant.cops_on_edges() {
            self.graph.edge_count() as u32
        } else {
            self.graph.vertex_count() as u32
        }
    }

    /// Sorted closed neighborhood of a cop position: stay plus one step.
    pub fn cop_moves(&self, p: u32) -> Vec<u32> {
        let adjacent: &[u32] = if self.variant.cops_on_edges() {
            self.graph.adjacent_edges(p)
        } else {
            self.graph.neighbors(p)
        };
        let mut out = Vec::with_capacity(adjacent.len() + 1);
        let mut placed = false;
        for &q in adjacent {
            if !placed && p < q {
                out.push(p);
                placed = true;
            }
            out.push(q);
        }
        if !placed {
            out.push(p);
        }
        out
    }

    /// Whether a single cop on `from` may be on `to` after one half-move.
    /// The relation is symmetric.
    pub fn cop_move_legal(&self, from: u32, to: u32) -> bool {
        if from == to {
            return true;
        }
        if self.variant.cops_on_edges() {
            self.graph.adjacent_edges(from).binary_search(&to).is_ok()
        } else {
            self.graph.has_edge(from, to)
        }
    }

    /// Vertices where the robber may start, given the placed cops
    /// (sorted positions). Empty means the robber cannot enter the game
    /// and the cops win outright.
    pub fn robber_placements(&self, cops: &[u32]) -> Vec<VertexId> {
        let n = self.graph.vertex_count() as u32;
        match self.variant {
            Variant::VertexSurroundRestrictive => {
                (0..n).filter(|v| !cops.contains(v)).collect()
            }
            _ => (0..n).collect(),
        }
    }

    /// Sorted legal destinations for the robber (staying included when
    /// the rules allow it).
    pub fn robber_moves(&self, cops: &[u32], r: VertexId) -> Vec<VertexId> {
        match self.variant {
            Variant::Classical | Variant::VertexSurround | Variant::EdgeSurround => {
                self.closed_neighborhood(r)
            }
            Variant::VertexSurroundRestrictive => self
                .closed_neighborhood(r)
                .into_iter()
                .filter(|v| !cops.contains(v))
                .collect(),
            Variant::EdgeSurroundRestrictive => {
                let mut out = Vec::with_capacity(self.graph.degree(r) as usize + 1);
                let mut placed = false;
                for (&v, &e) in self
                    .graph
                    .neighbors(r)
                    .iter()
                    .zip(self.graph.incident_edges(r))
                {
                    if !placed && r < v {
                        out.push(r);
                        placed = true;
                    }
                    if !cops.contains(&e) {
                        out.push(v);
                    }
                }
                if !placed {
                    out.push(r);
                }
                out
            }
        }
    }

    pub fn robber_move_count(&self, cops: &[u32], r: VertexId) -> u32 {
        match self.variant {
            Variant::Classical | Variant::VertexSurround | Variant::EdgeSurround => {
                self.graph.degree(r) + 1
            }
            _ => self.robber_moves(cops, r).len() as u32,
        }
    }

    /// Legality of a robber step `from -> to`; callers must already know
    /// that `to` is `from` or one of its neighbors.
    pub fn robber_move_legal(&self, cops: &[u32], from: VertexId, to: VertexId) -> bool {
        debug_assert!(from == to || self.graph.has_edge(from, to));
        match self.variant {
            Variant::Classical | Variant::VertexSurround | Variant::EdgeSurround => true,
            Variant::VertexSurroundRestrictive => !cops.contains(&to),
            Variant::EdgeSurroundRestrictive => {
                from == to || !cops.contains(&self.graph.edge_id(from, to).unwrap())
            }
        }
    }

    /// Whether the position is an immediate cop win. Capture is checked on
    /// both sides (walking into a cop loses); surround conditions are
    /// checked once the cops have moved, i.e. with the robber to move.
    pub fn is_cop_win_terminal(&self, cops: &[u32], r: VertexId, side: Side) -> bool {
        match self.variant {
            Variant::Classical => cops.contains(&r),
            Variant::VertexSurround | Variant::VertexSurroundRestrictive => {
                side == Side::RobberToMove
                    && self.graph.neighbors(r).iter().all(|v| cops.contains(v))
            }
            Variant::EdgeSurround | Variant::EdgeSurroundRestrictive => {
                side == Side::RobberToMove
                    && self
                        .graph
                        .incident_edges(r)
                        .iter()
                        .all(|e| cops.contains(e))
            }
        }
    }

    fn closed_neighborhood(&self, r: VertexId) -> Vec<VertexId> {
        let mut out = Vec::with_capacity(self.graph.degree(r) as usize + 1);
        let mut placed = false;
        for &v in self.graph.neighbors(r) {
            if !placed && r < v {
                out.push(r);
                placed = true;
            }
            out.push(v);
        }
        if !placed {
            out.push(r);
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, cycle_graph, path_graph};
    use proptest::prelude::*;

    fn spec(graph: Graph, variant: Variant, k: u32) -> GameSpec {
        GameSpec::new(Arc::new(graph), variant, k).unwrap()
    }

    #[test]
    fn variant_codes_roundtrip() {
        for v in Variant::ALL {
            assert_eq!(v.code().parse::<Variant>().unwrap(), v);
            let json = serde_json::to_string(&v).unwrap();
            assert_eq!(serde_json::from_str::<Variant>(&json).unwrap(), v);
        }
        assert!(matches!(
            "capture".parse::<Variant>(),
            Err(RulesError::UnknownVariant(_))
        ));
    }

    #[test]
    fn validation_rejects_bad_games() {
        let two = build_graph(2, &[]).unwrap();
        assert_eq!(
            GameSpec::new(Arc::new(two), Variant::Classical, 1).unwrap_err(),
            RulesError::DisconnectedGraph
        );
        let p2 = path_graph(2);
        assert_eq!(
            GameSpec::new(Arc::new(p2), Variant::Classical, 0).unwrap_err(),
            RulesError::ZeroCops
        );
        let k1 = build_graph(1, &[]).unwrap();
        assert!(GameSpec::new(Arc::new(k1.clone()), Variant::VertexSurround, 1).is_ok());
        assert_eq!(
            GameSpec::new(Arc::new(k1), Variant::EdgeSurround, 1).unwrap_err(),
            RulesError::NoEdges
        );
    }

    #[test]
    fn cop_moves_cover_closed_neighborhoods() {
        let g = spec(path_graph(4), Variant::Classical, 1);
        assert_eq!(g.cop_moves(0), vec![0, 1]);
        assert_eq!(g.cop_moves(1), vec![0, 1, 2]);
        assert_eq!(g.cop_domain_size(), 4);

        // Edges of P_4: 0=(0,1), 1=(1,2), 2=(2,3).
        let e = spec(path_graph(4), Variant::EdgeSurround, 1);
        assert_eq!(e.cop_domain_size(), 3);
        assert_eq!(e.cop_moves(0), vec![0, 1]);
        assert_eq!(e.cop_moves(1), vec![0, 1, 2]);
        assert!(e.cop_move_legal(0, 1) && !e.cop_move_legal(0, 2));
    }

    #[test]
    fn restrictive_vertex_rules_exclude_cop_vertices() {
        let g = spec(cycle_graph(4), Variant::VertexSurroundRestrictive, 2);
        assert_eq!(g.robber_placements(&[0, 2]), vec![1, 3]);
        // From vertex 1 with cops on 0 and 2, only staying is legal.
        assert_eq!(g.robber_moves(&[0, 2], 1), vec![1]);
        // A cop standing on the robber forces him out.
        assert_eq!(g.robber_moves(&[1, 3], 1), vec![0, 2]);
        assert!(!g.robber_move_legal(&[0, 2], 1, 0));
        assert!(g.robber_move_legal(&[0, 2], 1, 1));
    }

    #[test]
    fn restrictive_edge_rules_block_occupied_edges_but_allow_staying() {
        // C_4 edges in insertion order: 0=(0,1), 1=(1,2), 2=(2,3), 3=(0,3).
        let g = spec(cycle_graph(4), Variant::EdgeSurroundRestrictive, 2);
        assert_eq!(g.robber_moves(&[0, 1], 1), vec![1]);
        assert_eq!(g.robber_moves(&[0], 1), vec![1, 2]);
        assert_eq!(g.robber_moves(&[], 1), vec![0, 1, 2]);
        assert!(g.robber_move_legal(&[0, 1], 1, 1));
        assert!(!g.robber_move_legal(&[0, 1], 1, 0));
        assert!(g.robber_move_legal(&[0], 1, 2));
    }

    #[test]
    fn terminal_checks_by_variant() {
        let g = spec(path_graph(3), Variant::Classical, 1);
        assert!(g.is_cop_win_terminal(&[1], 1, Side::CopsToMove));
        assert!(g.is_cop_win_terminal(&[1], 1, Side::RobberToMove));
        assert!(!g.is_cop_win_terminal(&[1], 2, Side::RobberToMove));

        let v = spec(path_graph(3), Variant::VertexSurround, 2);
        assert!(v.is_cop_win_terminal(&[0, 2], 1, Side::RobberToMove));
        assert!(!v.is_cop_win_terminal(&[0, 2], 1, Side::CopsToMove));
        assert!(!v.is_cop_win_terminal(&[0, 1], 1, Side::RobberToMove));
        // Degree-one endpoint: one cop suffices.
        assert!(v.is_cop_win_terminal(&[1, 1], 0, Side::RobberToMove));

        let e = spec(path_graph(3), Variant::EdgeSurround, 2);
        assert!(e.is_cop_win_terminal(&[0, 1], 1, Side::RobberToMove));
        assert!(!e.is_cop_win_terminal(&[0, 0], 1, Side::RobberToMove));
        assert!(e.is_cop_win_terminal(&[0, 1], 0, Side::RobberToMove));
    }

    fn arbitrary_connected_graph() -> impl Strategy<Value = Graph> {
        (2usize..7, any::<u64>()).prop_map(|(n, seed)| {
            // Random spanning tree plus random extra edges, seeded.
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let mut edges = Vec::new();
            for v in 1..n as u32 {
                let parent = rng.random_range(0..v);
                edges.push((parent, v));
            }
            for u in 0..n as u32 {
                for v in u + 1..n as u32 {
                    if !edges.contains(&(u, v)) && rng.random_bool(0.3) {
                        edges.push((u, v));
                    }
                }
            }
            build_graph(n, &edges).unwrap()
        })
    }

    proptest! {
        #[test]
        fn restrictive_moves_are_a_subset(g in arbitrary_connected_graph(), cops in proptest::collection::vec(0u32..6, 1..4), r in 0u32..6) {
            let n = g.vertex_count() as u32;
            let cops: Vec<u32> = {
                let mut c: Vec<u32> = cops.into_iter().map(|c| c % n).collect();
                c.sort_unstable();
                c
            };
            let r = r % n;
            let free = spec(g.clone(), Variant::VertexSurround, cops.len() as u32);
            let tight = spec(g, Variant::VertexSurroundRestrictive, cops.len() as u32);
            let free_moves = free.robber_moves(&cops, r);
            let tight_moves = tight.robber_moves(&cops, r);
            for m in &tight_moves {
                prop_assert!(free_moves.contains(m));
                prop_assert!(!cops.contains(m));
            }
            prop_assert!(tight_moves.is_sorted());
            prop_assert!(free_moves.is_sorted());
            prop_assert_eq!(free_moves.len() as u32, free.robber_move_count(&cops, r));
        }

        #[test]
        fn move_membership_matches_legality(g in arbitrary_connected_graph(), cops in proptest::collection::vec(0u32..6, 1..4), r in 0u32..6) {
            let n = g.vertex_count() as u32;
            let cops: Vec<u32> = {
                let mut c: Vec<u32> = cops.into_iter().map(|c| c % n).collect();
                c.sort_unstable();
                c
            };
            let r = r % n;
            for variant in [Variant::Classical, Variant::VertexSurround, Variant::VertexSurroundRestrictive] {
                let s = spec(g.clone(), variant, cops.len() as u32);
                let moves = s.robber_moves(&cops, r);
                let mut expected: Vec<u32> = (0..n)
                    .filter(|&v| v == r || s.graph().has_edge(r, v))
                    .filter(|&v| s.robber_move_legal(&cops, r, v))
                    .collect();
                expected.sort_unstable();
                prop_assert_eq!(moves, expected);
            }
        }
    }
}
