//! Cop-strategy adaptors between game variants.
//!
//! A winning cop strategy for one variant converts into a winning strategy
//! for a related variant at the cost of multiplying the cop count.  Six
//! conversions are supported, each wrapping an inner controller whose moves
//! are simulated by groups of real cops:
//!
//! * restrictive vertex to plain vertex, factor max degree: each simulated
//!   cop becomes a stack of cops on its vertex that mirrors it move for
//!   move.  The plain robber may step onto a stack, a move the restrictive
//!   game forbids; the stack then fans out over the neighbors of that
//!   vertex, which surrounds the robber on the spot.
//! * restrictive edge to plain edge, factor max degree: the same idea with
//!   stacks on edges.  When the robber crosses an occupied edge, the stack
//!   riding that edge fans out over the edges at the robber's new vertex.
//! * plain edge to plain vertex, factor two: each edge cop becomes two
//!   vertex cops standing on its endpoints.  When the edge game ends, every
//!   edge at the robber's vertex is occupied, so the endpoint cops already
//!   cover all of its neighbors.
//! * restrictive edge to restrictive vertex, factor two: as above.  A
//!   vertex next to the robber is cop-free only when no simulated edge
//!   touches it, so every move the restricted robber can make is also legal
//!   inside the simulation.
//! * plain vertex to plain edge, factor max degree: each vertex cop becomes
//!   a stack of edge cops riding the edge the cop last traversed, which
//!   keeps the stack incident to the simulated vertex.  Once the simulated
//!   cops surround the robber the stacks need one extra move: if the robber
//!   stays, each neighbor's stack pushes onto the connecting edge; if the
//!   robber moves next door, the stack waiting there fans out over the
//!   edges at his new vertex.
//! * restrictive vertex to restrictive edge, factor max degree: as above,
//!   and a robber stepping onto a simulated cop's vertex triggers the same
//!   fan-out early.

use std::collections::HashSet;

use thiserror::Error;

use super::CopController;
use crate::graph::VertexId;
use crate::rules::{GameSpec, RulesError, Side, Variant};

#[derive(Debug, Error)]
pub enum LiftError {
    #[error("no lift from {from} to {to}")]
    UnsupportedPair { from: Variant, to: Variant },
    #[error("the graph has no edges to lift onto")]
    NoEdges,
    #[error(transparent)]
    Rules(#[from] RulesError),
}

/// How the real cops simulate the inner ones.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Mode {
    /// Stacks standing on the simulated cop's vertex.
    StackVertex,
    /// Stacks standing on the simulated cop's edge.
    StackEdge,
    /// Two cops on the endpoints of the simulated cop's edge.
    Pair,
    /// Stacks riding the edge the simulated cop last traversed.
    Ride,
}

fn mode_for(from: Variant, to: Variant) -> Option<Mode> {
    use Variant::*;
    match (from, to) {
        (VertexSurroundRestrictive, VertexSurround) => Some(Mode::StackVertex),
        (EdgeSurroundRestrictive, EdgeSurround) => Some(Mode::StackEdge),
        (EdgeSurround, VertexSurround) => Some(Mode::Pair),
        (EdgeSurroundRestrictive, VertexSurroundRestrictive) => Some(Mode::Pair),
        (VertexSurround, EdgeSurround) => Some(Mode::Ride),
        (VertexSurroundRestrictive, EdgeSurroundRestrictive) => Some(Mode::Ride),
        _ => None,
    }
}

/// Cop-count multiplier of the lift between two variants, if one exists.
pub fn lift_factor(from: Variant, to: Variant, graph: &crate::graph::Graph) -> Option<u32> {
    match mode_for(from, to)? {
        Mode::Pair => Some(2),
        _ => Some(graph.max_degree()),
    }
}

/// Cop controller for the target variant built around a controller for the
/// source variant.
#[derive(Clone)]
pub struct LiftedCops<C: CopController> {
    inner: C,
    inner_spec: GameSpec,
    outer_spec: GameSpec,
    mode: Mode,
    factor: u32,
    inner_cops: Vec<u32>,
    last_robber: Option<u32>,
    /// Robber vertex where the simulated ride-mode game ended; the next
    /// move runs the finisher instead of the simulation.
    armed: Option<u32>,
    /// A fan-out was played; the game is decided and every cop holds.
    finished: bool,
}

impl<C: CopController> LiftedCops<C> {
    pub fn new(inner: C, inner_spec: GameSpec, to: Variant) -> Result<LiftedCops<C>, LiftError> {
        let from = inner_spec.variant();
        let mode = mode_for(from, to).ok_or(LiftError::UnsupportedPair { from, to })?;
        if inner_spec.graph().edge_count() == 0 {
            return Err(LiftError::NoEdges);
        }
        let factor = lift_factor(from, to, inner_spec.graph()).expect("mode implies a factor");
        let outer_spec = GameSpec::new(inner_spec.graph_arc(), to, inner_spec.k() * factor)?;
        Ok(LiftedCops {
            inner,
            inner_spec,
            outer_spec,
            mode,
            factor,
            inner_cops: Vec::new(),
            last_robber: None,
            armed: None,
            finished: false,
        })
    }

    pub fn outer_spec(&self) -> &GameSpec {
        &self.outer_spec
    }

    pub fn factor(&self) -> u32 {
        self.factor
    }

    fn group(&self, i: usize) -> std::ops::Range<usize> {
        let f = self.factor as usize;
        i * f..(i + 1) * f
    }

    /// Internal state besides the visible positions, for the exhaustive
    /// checker's memo key.
    fn key_parts(&self) -> (Vec<u32>, u32, u32, bool) {
        let wild = u32::MAX;
        (
            self.inner_cops.clone(),
            self.last_robber.unwrap_or(wild),
            self.armed.unwrap_or(wild),
            self.finished,
        )
    }

    /// Surrounds a robber whose last move the simulated game forbids, by
    /// fanning out the group it collided with.
    fn violation_response(&self, cops: &[u32], robber: u32) -> Option<Vec<u32>> {
        let g = self.outer_spec.graph();
        let f = self.factor as usize;
        match self.mode {
            Mode::StackVertex => {
                let i = self.inner_cops.iter().position(|&c| c == robber)?;
                let mut out = cops.to_vec();
                for (j, &u) in g.neighbors(robber).iter().enumerate().take(f) {
                    out[i * f + j] = u;
                }
                Some(out)
            }
            Mode::StackEdge => {
                let prev = self.last_robber?;
                if prev == robber {
                    return None;
                }
                let crossed = g.edge_id(prev, robber)?;
                let i = self.inner_cops.iter().position(|&c| c == crossed)?;
                let mut out = cops.to_vec();
                for (j, &e) in g.incident_edges(robber).iter().enumerate().take(f) {
                    out[i * f + j] = e;
                }
                Some(out)
            }
            Mode::Ride if self.inner_spec.variant().is_restrictive() => {
                let i = self.inner_cops.iter().position(|&c| c == robber)?;
                let mut out = cops.to_vec();
                for (j, &e) in g.incident_edges(robber).iter().enumerate().take(f) {
                    out[i * f + j] = e;
                }
                Some(out)
            }
            _ => None,
        }
    }

    /// One move after the simulated ride-mode game ended with the robber at
    /// `center`: complete the edge surround based on where he went.
    fn finisher(&self, cops: &[u32], robber: u32, center: u32) -> Vec<u32> {
        let g = self.outer_spec.graph();
        let f = self.factor as usize;
        let mut out = cops.to_vec();
        if robber == center {
            // The robber stayed: every neighbor hosts a simulated cop, and
            // its stack rides an edge at that neighbor, so one push covers
            // the connecting edge.
            for &u in g.neighbors(center) {
                if let Some(i) = self.inner_cops.iter().position(|&c| c == u) {
                    if let Some(e) = g.edge_id(center, u) {
                        for slot in self.group(i) {
                            out[slot] = e;
                        }
                    }
                }
            }
        } else if let Some(i) = self.inner_cops.iter().position(|&c| c == robber) {
            // The robber moved next door; the stack waiting there fans out
            // over all edges at his new vertex.
            for (j, &e) in g.incident_edges(robber).iter().enumerate().take(f) {
                out[i * f + j] = e;
            }
        }
        out
    }
}

impl<C: CopController> CopController for LiftedCops<C> {
    fn name(&self) -> String {
        format!(
            "lift-{}-to-{}({})",
            self.inner_spec.variant().code(),
            self.outer_spec.variant().code(),
            self.inner.name()
        )
    }

    fn place(&mut self) -> Vec<u32> {
        self.inner_cops = self.inner.place();
        self.last_robber = None;
        self.armed = None;
        self.finished = false;
        let g = self.outer_spec.graph();
        let f = self.factor as usize;
        let mut out = Vec::with_capacity(self.inner_cops.len() * f);
        match self.mode {
            Mode::StackVertex | Mode::StackEdge => {
                for &c in &self.inner_cops {
                    out.extend(std::iter::repeat(c).take(f));
                }
            }
            Mode::Pair => {
                for &e in &self.inner_cops {
                    let (u, v) = g.endpoints(e);
                    out.push(u);
                    out.push(v);
                }
            }
            Mode::Ride => {
                for &c in &self.inner_cops {
                    let e = *g
                        .incident_edges(c)
                        .iter()
                        .min()
                        .expect("connected graph with an edge has no isolated vertex");
                    out.extend(std::iter::repeat(e).take(f));
                }
            }
        }
        out
    }

    fn step(&mut self, cops: &[u32], robber: u32) -> Vec<u32> {
        if self.finished {
            self.last_robber = Some(robber);
            return cops.to_vec();
        }
        if let Some(center) = self.armed {
            let out = self.finisher(cops, robber, center);
            self.finished = true;
            self.last_robber = Some(robber);
            return out;
        }
        if let Some(out) = self.violation_response(cops, robber) {
            self.finished = true;
            self.last_robber = Some(robber);
            return out;
        }

        // The robber's position is legal inside the simulation; relay it.
        let inner_next = self.inner.step(&self.inner_cops, robber);
        let g = self.outer_spec.graph_arc();
        let mut out = cops.to_vec();
        match self.mode {
            Mode::StackVertex | Mode::StackEdge => {
                for (i, &c) in inner_next.iter().enumerate() {
                    for slot in self.group(i) {
                        out[slot] = c;
                    }
                }
            }
            Mode::Pair => {
                for (i, &new) in inner_next.iter().enumerate() {
                    let old = self.inner_cops[i];
                    if old == new {
                        continue;
                    }
                    // Adjacent edges share a vertex: the cop on the shared
                    // end crosses the new edge, the other cop replaces it.
                    let (a, b) = g.endpoints(new);
                    let (x, y) = g.endpoints(old);
                    let shared = if x == a || x == b { x } else { y };
                    let far = if shared == a { b } else { a };
                    if out[2 * i] == shared {
                        out[2 * i] = far;
                        out[2 * i + 1] = shared;
                    } else {
                        out[2 * i + 1] = far;
                        out[2 * i] = shared;
                    }
                }
            }
            Mode::Ride => {
                for (i, &new) in inner_next.iter().enumerate() {
                    let old = self.inner_cops[i];
                    if old == new {
                        continue;
                    }
                    let e = g
                        .edge_id(old, new)
                        .expect("simulated cops move along edges");
                    for slot in self.group(i) {
                        out[slot] = e;
                    }
                }
            }
        }
        self.inner_cops = inner_next;
        if self.mode == Mode::Ride
            && self
                .inner_spec
                .is_cop_win_terminal(&self.inner_cops, robber, Side::RobberToMove)
        {
            self.armed = Some(robber);
        }
        self.last_robber = Some(robber);
        out
    }
}

#[derive(Debug, Error)]
pub enum LiftCheckError {
    #[error("lifted cop {index} made an illegal move from {from} to {to}")]
    IllegalMove { index: usize, from: u32, to: u32 },
    #[error("the lift returned {got} positions instead of {want}")]
    WrongCount { got: usize, want: usize },
    #[error("the robber can force the play back to an earlier position")]
    Cycle,
    #[error("state budget of {0} exhausted")]
    Budget(usize),
}

type CheckKey = (Vec<u32>, Vec<u32>, u32, u32, bool, u32);

/// Plays the lifted strategy against every robber behavior and confirms
/// that each line of play ends in a cop win with only legal moves.
///
/// The inner controller must be deterministic and memoryless, meaning its
/// move is a function of the visible positions alone; solver-extracted
/// controllers qualify.  Returns the number of distinct decision states
/// explored.
pub fn check_lift_exhaustive<C>(
    proto: &LiftedCops<C>,
    max_states: usize,
) -> Result<usize, LiftCheckError>
where
    C: CopController + Clone,
{
    let mut lift = proto.clone();
    let start = lift.place();
    let spec = lift.outer_spec.clone();
    let want = spec.k() as usize;
    if start.len() != want {
        return Err(LiftCheckError::WrongCount {
            got: start.len(),
            want,
        });
    }
    let mut proven: HashSet<CheckKey> = HashSet::new();
    let mut on_path: HashSet<CheckKey> = HashSet::new();
    let mut states = 0usize;
    for r0 in spec.robber_placements(&start) {
        if spec.is_cop_win_terminal(&start, r0, Side::CopsToMove) {
            continue;
        }
        explore(
            &lift,
            &spec,
            &start,
            r0,
            &mut proven,
            &mut on_path,
            &mut states,
            max_states,
        )?;
    }
    Ok(states)
}

#[allow(clippy::too_many_arguments)]
fn explore<C>(
    lift: &LiftedCops<C>,
    spec: &GameSpec,
    cops: &[u32],
    robber: VertexId,
    proven: &mut HashSet<CheckKey>,
    on_path: &mut HashSet<CheckKey>,
    states: &mut usize,
    max_states: usize,
) -> Result<(), LiftCheckError>
where
    C: CopController + Clone,
{
    let (ic, lr, ar, fin) = lift.key_parts();
    let key: CheckKey = (cops.to_vec(), ic, lr, ar, fin, robber);
    if proven.contains(&key) {
        return Ok(());
    }
    if !on_path.insert(key.clone()) {
        return Err(LiftCheckError::Cycle);
    }
    *states += 1;
    if *states > max_states {
        return Err(LiftCheckError::Budget(max_states));
    }

    let mut me = lift.clone();
    let next = me.step(cops, robber);
    if next.len() != cops.len() {
        return Err(LiftCheckError::WrongCount {
            got: next.len(),
            want: cops.len(),
        });
    }
    for (index, (&from, &to)) in cops.iter().zip(next.iter()).enumerate() {
        if !spec.cop_move_legal(from, to) {
            return Err(LiftCheckError::IllegalMove { index, from, to });
        }
    }

    if !spec.is_cop_win_terminal(&next, robber, Side::RobberToMove) {
        // Not over yet: every robber reply must still lose.  An empty move
        // list and a move into a capture both end the game for the cops.
        for mv in spec.robber_moves(&next, robber) {
            if spec.is_cop_win_terminal(&next, mv, Side::CopsToMove) {
                continue;
            }
            explore(&me, spec, &next, mv, proven, on_path, states, max_states)?;
        }
    }

    on_path.remove(&key);
    proven.insert(key);
    Ok(())
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::graph::{build_graph, complete_graph, cycle_graph, Graph};
    use crate::solver::search::{cop_number, CopNumberOptions};
    use crate::solver::{solve_fixed_k, SolveOptions, Verdict};
    use crate::strategy::adversary::{RandomRobber, StationaryRobber};
    use crate::strategy::extracted::{SolvedCops, SolvedRobber};
    use crate::strategy::{run_match, MatchOptions, Winner};

    #[derive(Clone)]
    struct Parked(Vec<u32>);

    impl CopController for Parked {
        fn name(&self) -> String {
            "parked".into()
        }
        fn place(&mut self) -> Vec<u32> {
            self.0.clone()
        }
        fn step(&mut self, cops: &[u32], _robber: u32) -> Vec<u32> {
            cops.to_vec()
        }
    }

    fn solved_cops(graph: &Arc<Graph>, variant: Variant, k: u32) -> (SolvedCops, GameSpec) {
        let spec = GameSpec::new(Arc::clone(graph), variant, k).unwrap();
        let opts = SolveOptions {
            compute_ranks: true,
            ..SolveOptions::default()
        };
        let sol = solve_fixed_k(&spec, &opts).unwrap();
        assert_eq!(sol.verdict(), Verdict::CopWin, "{variant} k={k} should win");
        (SolvedCops::new(Arc::new(sol)), spec)
    }

    fn solved_robber(graph: &Arc<Graph>, variant: Variant, k: u32) -> SolvedRobber {
        let spec = GameSpec::new(Arc::clone(graph), variant, k).unwrap();
        let opts = SolveOptions {
            compute_ranks: true,
            ..SolveOptions::default()
        };
        SolvedRobber::new(Arc::new(solve_fixed_k(&spec, &opts).unwrap()))
    }

    #[test]
    fn unsupported_pairs_are_rejected() {
        let g = Arc::new(cycle_graph(4));
        let spec = GameSpec::new(Arc::clone(&g), Variant::Classical, 2).unwrap();
        let (inner, _) = solved_cops(&g, Variant::Classical, 2);
        let err = LiftedCops::new(inner.clone(), spec, Variant::VertexSurround)
            .err()
            .expect("rejected");
        assert!(matches!(err, LiftError::UnsupportedPair { .. }));

        // Plain to restrictive has no general conversion either.
        let spec = GameSpec::new(Arc::clone(&g), Variant::VertexSurround, 2).unwrap();
        let (inner, _) = solved_cops(&g, Variant::VertexSurround, 2);
        let err = LiftedCops::new(inner, spec, Variant::VertexSurroundRestrictive).err().expect("rejected");
        assert!(matches!(err, LiftError::UnsupportedPair { .. }));

        // A graph without edges leaves the lifted cops nowhere to go.
        let lone = Arc::new(build_graph(1, &[]).unwrap());
        let spec = GameSpec::new(lone, Variant::VertexSurroundRestrictive, 1).unwrap();
        let err = LiftedCops::new(Parked(vec![0]), spec, Variant::VertexSurround).err().expect("rejected");
        assert!(matches!(err, LiftError::NoEdges));
    }

    #[test]
    fn stacks_turn_restrictive_vertex_cops_into_plain_ones() {
        // Star: one restrictive cop on the hub wins, and the lift turns it
        // into max-degree plain cops.
        let g = Arc::new(build_graph(4, &[(0, 1), (0, 2), (0, 3)]).unwrap());
        let (inner, spec) = solved_cops(&g, Variant::VertexSurroundRestrictive, 1);
        let lift = LiftedCops::new(inner, spec, Variant::VertexSurround).unwrap();
        assert_eq!(lift.factor(), 3);
        let states = check_lift_exhaustive(&lift, 10_000).unwrap();
        assert!(states > 0);

        // The lifted cops also beat the strongest robber in live play.
        let outer = lift.outer_spec().clone();
        let mut cops = lift.clone();
        let mut robber = solved_robber(&g, Variant::VertexSurround, outer.k());
        let t = run_match(&outer, &mut cops, &mut robber, &MatchOptions::default()).unwrap();
        assert_eq!(t.winner, Winner::Cops);
        assert_eq!(t.reason, "surrounded");

        // A robber parking on a stack is surrounded by the fan-out.
        let mut cops = lift.clone();
        let mut still = StationaryRobber::new(outer.clone());
        let t = run_match(&outer, &mut cops, &mut still, &MatchOptions::default()).unwrap();
        assert_eq!(t.winner, Winner::Cops);
    }

    #[test]
    fn endpoint_pairs_turn_edge_cops_into_vertex_cops() {
        // Restrictive edge cops on the complete bipartite graph lift to
        // twice as many restrictive vertex cops.
        let g = Arc::new(crate::families::complete_bipartite(3, 3).unwrap().graph);
        let res = cop_number(
            Arc::clone(&g),
            Variant::EdgeSurroundRestrictive,
            &CopNumberOptions::default(),
        )
        .unwrap();
        let k = res.value.unwrap();
        let (inner, spec) = solved_cops(&g, Variant::EdgeSurroundRestrictive, k);
        let lift = LiftedCops::new(inner, spec, Variant::VertexSurroundRestrictive).unwrap();
        assert_eq!(lift.factor(), 2);
        check_lift_exhaustive(&lift, 200_000).unwrap();

        let outer = lift.outer_spec().clone();
        let mut cops = lift.clone();
        let mut robber = solved_robber(&g, Variant::VertexSurroundRestrictive, outer.k());
        let t = run_match(&outer, &mut cops, &mut robber, &MatchOptions::default()).unwrap();
        assert_eq!(t.winner, Winner::Cops);

        // Plain flavor of the same conversion on a cycle.
        let c4 = Arc::new(cycle_graph(4));
        let (inner, spec) = solved_cops(&c4, Variant::EdgeSurround, 2);
        let lift = LiftedCops::new(inner, spec, Variant::VertexSurround).unwrap();
        assert_eq!(lift.factor(), 2);
        check_lift_exhaustive(&lift, 50_000).unwrap();
    }

    #[test]
    fn riders_follow_vertex_cops_and_finish_one_move_later() {
        // Two plain vertex cops win on a four-cycle; the lifted edge cops
        // ride along and close the surround after the simulated game ends.
        let c4 = Arc::new(cycle_graph(4));
        let (inner, spec) = solved_cops(&c4, Variant::VertexSurround, 2);
        let lift = LiftedCops::new(inner, spec, Variant::EdgeSurround).unwrap();
        assert_eq!(lift.factor(), 2);
        check_lift_exhaustive(&lift, 50_000).unwrap();

        let outer = lift.outer_spec().clone();
        for seed in 0..5 {
            let mut cops = lift.clone();
            let mut robber = RandomRobber::new(outer.clone(), seed);
            let t = run_match(&outer, &mut cops, &mut robber, &MatchOptions::default()).unwrap();
            assert_eq!(t.winner, Winner::Cops, "seed {seed}");
            assert_eq!(t.reason, "surrounded");
        }

        // Restrictive flavor on the complete graph, where stepping onto a
        // simulated cop triggers the early fan-out.
        let k4 = Arc::new(complete_graph(4));
        let res = cop_number(
            Arc::clone(&k4),
            Variant::VertexSurroundRestrictive,
            &CopNumberOptions::default(),
        )
        .unwrap();
        let k = res.value.unwrap();
        let (inner, spec) = solved_cops(&k4, Variant::VertexSurroundRestrictive, k);
        let lift = LiftedCops::new(inner, spec, Variant::EdgeSurroundRestrictive).unwrap();
        check_lift_exhaustive(&lift, 200_000).unwrap();
    }

    #[test]
    fn every_lift_wins_on_the_small_connected_corpus() {
        use crate::solver::suite::all_connected_graphs;
        let pairs = [
            (Variant::VertexSurroundRestrictive, Variant::VertexSurround),
            (Variant::EdgeSurroundRestrictive, Variant::EdgeSurround),
            (Variant::EdgeSurround, Variant::VertexSurround),
            (
                Variant::EdgeSurroundRestrictive,
                Variant::VertexSurroundRestrictive,
            ),
            (Variant::VertexSurround, Variant::EdgeSurround),
            (
                Variant::VertexSurroundRestrictive,
                Variant::EdgeSurroundRestrictive,
            ),
        ];
        let mut checked = 0;
        for graph in all_connected_graphs(4) {
            if graph.edge_count() == 0 {
                // The single-vertex graph is covered by the rejection test.
                continue;
            }
            let g = Arc::new(graph);
            for &(from, to) in &pairs {
                let res = cop_number(Arc::clone(&g), from, &CopNumberOptions::default()).unwrap();
                let k = res.value.expect("small graphs are solvable");
                let (inner, spec) = solved_cops(&g, from, k);
                let lift = LiftedCops::new(inner, spec, to).unwrap();
                check_lift_exhaustive(&lift, 500_000)
                    .unwrap_or_else(|e| panic!("lift {from}->{to} on n={}: {e}", g.vertex_count()));
                checked += 1;
            }
        }
        assert!(checked >= 60, "checked only {checked} lifts");
    }
}
