//! Strategies built around pendant leaves.
//!
//! When every vertex of a host graph carries `l` pendant leaves, a host
//! vertex and its leaves form a bundle: surrounding a robber inside the
//! bundle requires covering every leaf (or pendant edge), and cops can
//! only reach those positions from within the bundle's immediate
//! vicinity. The cop strategies here play that fact forward on complete
//! bipartite hosts: block the host exits first, then walk spare cops
//! into the bundle. The robber strategy plays it backward: count the
//! cops near each nearby bundle and sit wherever not enough of them can
//! finish a surround within one turn.

use crate::families::{attach_leaves, Bipartite, FamilyError, Leafy};
use crate::graph::{Graph, VertexId};
use crate::rules::Variant;
use crate::strategy::{CopController, RobberController};

/// Restrictive vertex cops on a complete bipartite host with pendant
/// leaves: the smaller class is occupied for good, which traps the
/// robber inside a single bundle on the other side, and one spare cop
/// then walks onto the bundle's host vertex. The robber has to step
/// onto a leaf, where he is surrounded.
pub struct TwoPhaseVertexCops {
    leafy: Leafy,
    small: Vec<VertexId>,
}

impl TwoPhaseVertexCops {
    pub fn new(bip: &Bipartite, l: usize) -> Result<TwoPhaseVertexCops, FamilyError> {
        let leafy = attach_leaves(&bip.graph, l)?;
        Ok(TwoPhaseVertexCops {
            leafy,
            small: bip.smaller_class().collect(),
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.leafy.graph
    }

    /// Smaller host class plus one spare.
    pub fn cop_count(&self) -> u32 {
        self.small.len() as u32 + 1
    }
}

impl CopController for TwoPhaseVertexCops {
    fn name(&self) -> String {
        "leafy-two-phase-vr".into()
    }

    fn place(&mut self) -> Vec<u32> {
        let mut cops = self.small.clone();
        cops.push(self.small[0]);
        cops
    }

    fn step(&mut self, cops: &[u32], robber: u32) -> Vec<u32> {
        let v = self.leafy.project(robber);
        let mut next = cops.to_vec();
        let spare = cops.len() - 1;
        // A bundle under the occupied class is already sealed: its host
        // vertex holds a cop, so a robber there sits on a leaf whose only
        // neighbor is covered. Otherwise the spare hops from its
        // small-class post onto the bundle's host vertex and waits.
        if !self.small.contains(&v) && cops[spare] != v {
            next[spare] = v;
        }
        next
    }
}

/// Restrictive edge cops on a complete bipartite host with pendant
/// leaves: edge posts pivot onto the robber's full host star in one
/// move, pinning him inside his bundle, and the `l` spare cops then walk
/// onto the bundle's pendant edges one by one until it is sealed.
pub struct TwoPhaseEdgeCops {
    leafy: Leafy,
    line: Graph,
    small: Vec<VertexId>,
    large: Vec<VertexId>,
    pinned: Option<VertexId>,
}

impl TwoPhaseEdgeCops {
    pub fn new(bip: &Bipartite, l: usize) -> Result<TwoPhaseEdgeCops, FamilyError> {
        let leafy = attach_leaves(&bip.graph, l)?;
        let line = leafy.graph.line_graph();
        Ok(TwoPhaseEdgeCops {
            leafy,
            line,
            small: bip.smaller_class().collect(),
            large: bip.larger_class().collect(),
            pinned: None,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.leafy.graph
    }

    /// One cop per larger-class vertex plus one per leaf.
    pub fn cop_count(&self) -> u32 {
        (self.large.len() + self.leafy.leaf_count()) as u32
    }

    fn edge_of(&self, u: VertexId, v: VertexId) -> u32 {
        self.leafy.graph.edge_id(u, v).expect("host edge")
    }

    /// Initial post of host cop j: the edge from small-class vertex
    /// `j mod a` to larger-class vertex j, so every cop's post touches a
    /// known vertex of each class.
    fn edge_post(&self, j: usize) -> u32 {
        self.edge_of(self.small[j % self.small.len()], self.large[j])
    }

    /// Pivot the host cops onto every host edge at v; each assigned cop
    /// shares an endpoint with its target, so the pivot is a single move.
    fn cover_host_star(&self, next: &mut [u32], v: VertexId) {
        let a = self.small.len();
        if self.small.contains(&v) {
            for j in 0..self.large.len() {
                next[j] = self.edge_of(v, self.large[j]);
            }
        } else {
            let j_rob = self.large.iter().position(|&w| w == v).unwrap();
            for (i, &s) in self.small.iter().enumerate() {
                let j = if i == j_rob % a {
                    j_rob
                } else {
                    (0..self.large.len()).find(|&j| j % a == i).unwrap()
                };
                next[j] = self.edge_of(s, v);
            }
        }
    }
}

impl CopController for TwoPhaseEdgeCops {
    fn name(&self) -> String {
        "leafy-two-phase-er".into()
    }

    fn place(&mut self) -> Vec<u32> {
        self.pinned = None;
        let mut cops: Vec<u32> = (0..self.large.len()).map(|j| self.edge_post(j)).collect();
        for _ in 0..self.leafy.leaf_count() {
            cops.push(self.edge_post(0));
        }
        cops
    }

    fn step(&mut self, cops: &[u32], robber: u32) -> Vec<u32> {
        let b = self.large.len();
        let mut next = cops.to_vec();
        let v = match self.pinned {
            None => {
                // First move: cover the host star of the robber's bundle.
                // The host cops never move again, so the robber cannot
                // traverse out of the bundle for the rest of the match.
                let v = self.leafy.project(robber);
                self.cover_host_star(&mut next, v);
                self.pinned = Some(v);
                v
            }
            Some(v) => v,
        };
        for (s, target) in self.leafy.leaf_edges_of(v).enumerate() {
            let here = next[b + s];
            if here == target {
                continue;
            }
            let dist = self.line.distances_from(target);
            let hop = self
                .line
                .neighbors(here)
                .iter()
                .copied()
                .filter(|&e| dist[e as usize] < dist[here as usize])
                .min()
                .expect("line graph is connected");
            next[b + s] = hop;
        }
        next
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Rule {
    /// Count cops inside the bundle itself (the vertex and its leaves,
    /// or the edges at the vertex). Fewer than `l` of them cannot take
    /// all leaves or pendant edges within one turn.
    Pendant,
    /// Count cops within two moves of the candidate's neighborhood,
    /// discounting everything next to the robber's current position. On
    /// hosts without short cycles those regions are disjoint between
    /// candidates, so some candidate is always undermanned.
    Ball,
}

/// Robber for the surround games on a host with `l` pendant leaves per
/// vertex (`l` may be zero). Each turn it counts, for every host vertex
/// it could move to, the cops that could contribute to a surround there
/// by the next cop turn, and moves where that count is lowest. As long
/// as the cop team is below the matching threshold, some candidate is
/// always too thinly covered to be completed, so the robber survives
/// indefinitely.
pub struct SafeRobber {
    game: Graph,
    n_host: usize,
    l: usize,
    variant: Variant,
    rule: Rule,
}

impl SafeRobber {
    /// Builds the game graph itself: the host with `l` leaves attached,
    /// or the bare host when `l` is zero.
    pub fn new(host: &Graph, l: usize, variant: Variant) -> SafeRobber {
        assert!(
            variant != Variant::Classical,
            "the safe robber plays the surround games"
        );
        let game = if l == 0 {
            host.clone()
        } else {
            attach_leaves(host, l).unwrap().graph
        };
        let girth = host.girth().unwrap_or(u32::MAX);
        let k = host.max_degree() as u64;
        let lu = l as u64;
        let ball_score = |min_girth: u32| {
            if girth >= min_girth {
                k * (k + lu).saturating_sub(1)
            } else {
                0
            }
        };
        let (pendant, ball) = if variant.cops_on_edges() {
            let pendant = if l == 0 {
                0
            } else if girth >= 4 {
                k * lu
            } else {
                ((k + 1) * lu).div_ceil(2)
            };
            (pendant, ball_score(6))
        } else {
            let pendant = if l == 0 { 0 } else { (k + 1) * lu };
            (pendant, ball_score(7))
        };
        let rule = if ball > pendant { Rule::Ball } else { Rule::Pendant };
        SafeRobber {
            game,
            n_host: host.vertex_count(),
            l,
            variant,
            rule,
        }
    }

    pub fn for_leafy(leafy: &Leafy, variant: Variant) -> SafeRobber {
        SafeRobber::new(&leafy.host, leafy.leaf_count(), variant)
    }

    pub fn graph(&self) -> &Graph {
        &self.game
    }

    fn is_leaf_of(&self, v: VertexId, c: VertexId) -> bool {
        self.l > 0 && (c as usize) >= self.n_host && (c as usize - self.n_host) / self.l == v as usize
    }

    fn host_nbrs(&self, v: VertexId) -> Vec<VertexId> {
        self.game
            .neighbors(v)
            .iter()
            .copied()
            .filter(|&w| (w as usize) < self.n_host)
            .collect()
    }

    /// Cops standing inside the bundle of v. Only they can occupy a leaf
    /// of v after one more cop move.
    fn bundle_cops(&self, cops: &[u32], v: VertexId) -> u32 {
        cops.iter()
            .filter(|&&c| c == v || self.is_leaf_of(v, c))
            .count() as u32
    }

    /// Cop edges touching v. Only they can cover a pendant edge of v
    /// after one more cop move.
    fn star_cops(&self, cops: &[u32], v: VertexId) -> u32 {
        cops.iter()
            .filter(|&&e| {
                let (x, y) = self.game.endpoints(e);
                x == v || y == v
            })
            .count() as u32
    }

    /// Cops that could stand on a neighbor of v other than `from` after
    /// one move: everything in a closed neighborhood of such a neighbor.
    fn ball_vertex_cops(&self, cops: &[u32], v: VertexId, from: VertexId) -> u32 {
        cops.iter()
            .filter(|&&c| {
                self.game
                    .neighbors(v)
                    .iter()
                    .any(|&w| w != from && (c == w || self.game.has_edge(c, w)))
            })
            .count() as u32
    }

    /// Cop edges that could cover an edge at v other than the edge back
    /// to `from` after one move: edges touching the closed neighborhood
    /// of v while avoiding `from`.
    fn ball_edge_cops(&self, cops: &[u32], v: VertexId, from: VertexId) -> u32 {
        cops.iter()
            .filter(|&&e| {
                let (x, y) = self.game.endpoints(e);
                x != from
                    && y != from
                    && (x == v || y == v || self.game.has_edge(v, x) || self.game.has_edge(v, y))
            })
            .count() as u32
    }

    fn danger(&self, cops: &[u32], v: VertexId, from: Option<VertexId>) -> u32 {
        let on_edges = self.variant.cops_on_edges();
        match (self.rule, on_edges) {
            (Rule::Pendant, false) => self.bundle_cops(cops, v),
            (Rule::Pendant, true) => self.star_cops(cops, v),
            (Rule::Ball, false) => self.ball_vertex_cops(cops, v, from.unwrap_or(v)),
            (Rule::Ball, true) => self.ball_edge_cops(cops, v, from.unwrap_or(v)),
        }
    }
}

impl RobberController for SafeRobber {
    fn name(&self) -> String {
        format!("leafy-safe-robber/{}", self.variant)
    }

    fn place(&mut self, cops: &[u32]) -> Option<u32> {
        let hosts = 0..self.n_host as u32;
        match self.variant {
            Variant::VertexSurroundRestrictive => {
                // Stay off cop vertices; a host spot is worth more than a
                // leaf because leaves are sealed by a single cop.
                hosts
                    .clone()
                    .filter(|v| !cops.contains(v))
                    .min_by_key(|&v| (self.bundle_cops(cops, v), v))
                    .or_else(|| {
                        (self.n_host as u32..self.game.vertex_count() as u32)
                            .find(|v| !cops.contains(v))
                    })
            }
            Variant::EdgeSurroundRestrictive => {
                hosts.min_by_key(|&v| (self.star_cops(cops, v), v))
            }
            _ => match self.rule {
                Rule::Pendant => hosts.min_by_key(|&v| (self.danger(cops, v, None), v)),
                Rule::Ball => {
                    // Pretend the robber arrived from a neighbor so the
                    // discounting in the ball count applies from the start.
                    let mut best: Option<(u32, u32, u32)> = None;
                    for u in hosts {
                        for v in self.host_nbrs(u) {
                            let key = (self.danger(cops, v, Some(u)), v, u);
                            if best.map_or(true, |b| key < b) {
                                best = Some(key);
                            }
                        }
                    }
                    best.map(|(_, v, _)| v)
                }
            },
        }
    }

    fn step(&mut self, cops: &[u32], robber: u32) -> u32 {
        match self.variant {
            Variant::VertexSurroundRestrictive => {
                if !cops.contains(&robber) {
                    return robber;
                }
                // Pushed off: take the quietest free host neighbor, or a
                // free leaf as a last resort.
                self.host_nbrs(robber)
                    .into_iter()
                    .filter(|v| !cops.contains(v))
                    .min_by_key(|&v| (self.bundle_cops(cops, v), v))
                    .or_else(|| {
                        self.game
                            .neighbors(robber)
                            .iter()
                            .copied()
                            .find(|v| !cops.contains(v))
                    })
                    .unwrap_or(robber)
            }
            Variant::EdgeSurroundRestrictive => robber,
            _ => match self.rule {
                Rule::Pendant => {
                    let mut cands = vec![robber];
                    cands.extend(self.host_nbrs(robber));
                    cands
                        .into_iter()
                        .min_by_key(|&v| {
                            (self.danger(cops, v, None), u32::from(v != robber), v)
                        })
                        .unwrap()
                }
                Rule::Ball => self
                    .host_nbrs(robber)
                    .into_iter()
                    .min_by_key(|&v| (self.danger(cops, v, Some(robber)), v))
                    .unwrap_or(robber),
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete_bipartite, mols_graph};
    use crate::rules::GameSpec;
    use crate::solver::{solve_fixed_k, SolveOptions, Solution, Verdict};
    use crate::strategy::adversary::{GreedyCops, GreedyRobber, RandomCops, StationaryRobber};
    use crate::strategy::extracted::{SolvedCops, SolvedRobber};
    use crate::strategy::{run_match, MatchOptions, Winner};
    use std::sync::Arc;

    fn solve(graph: &Graph, variant: Variant, k: u32) -> Arc<Solution> {
        let spec = GameSpec::new(Arc::new(graph.clone()), variant, k).unwrap();
        Arc::new(solve_fixed_k(&spec, &SolveOptions::default()).unwrap())
    }

    fn expect_verdicts(graph: &Graph, variant: Variant, k: u32) -> Arc<Solution> {
        let win = solve(graph, variant, k);
        assert_eq!(win.verdict(), Verdict::CopWin, "{variant} k={k}");
        if k > 1 {
            let lose = solve(graph, variant, k - 1);
            assert_eq!(lose.verdict(), Verdict::RobberWin, "{variant} k={}", k - 1);
        }
        win
    }

    #[test]
    fn two_phase_vertex_cops_seal_the_bundle() {
        for (a, b, l) in [(2, 2, 2), (1, 1, 2), (3, 3, 1)] {
            let bip = complete_bipartite(a, b).unwrap();
            let mut cops = TwoPhaseVertexCops::new(&bip, l).unwrap();
            let k = cops.cop_count();
            let sol = expect_verdicts(cops.graph(), Variant::VertexSurroundRestrictive, k);
            let mut robber = SolvedRobber::new(sol.clone());
            let t = run_match(sol.spec(), &mut cops, &mut robber, &MatchOptions::default())
                .unwrap();
            assert_eq!(t.winner, Winner::Cops, "K_{a},{b} l={l}");
            assert_eq!(t.reason, "surrounded");
        }
    }

    #[test]
    fn two_phase_edge_cops_seal_the_bundle() {
        for (a, b, l) in [(2, 2, 2), (1, 1, 2), (3, 3, 1)] {
            let bip = complete_bipartite(a, b).unwrap();
            let mut cops = TwoPhaseEdgeCops::new(&bip, l).unwrap();
            let k = cops.cop_count();
            let sol = expect_verdicts(cops.graph(), Variant::EdgeSurroundRestrictive, k);
            let mut robber = SolvedRobber::new(sol.clone());
            let t = run_match(sol.spec(), &mut cops, &mut robber, &MatchOptions::default())
                .unwrap();
            assert_eq!(t.winner, Winner::Cops, "K_{a},{b} l={l}");
            assert_eq!(t.reason, "surrounded");
        }
    }

    #[test]
    fn two_phase_cops_beat_adversary_pool() {
        let bip = complete_bipartite(2, 2).unwrap();

        let mut vr = TwoPhaseVertexCops::new(&bip, 2).unwrap();
        let spec = GameSpec::new(
            Arc::new(vr.graph().clone()),
            Variant::VertexSurroundRestrictive,
            vr.cop_count(),
        )
        .unwrap();
        let mut pool: Vec<Box<dyn crate::strategy::RobberController>> = vec![
            Box::new(GreedyRobber::new(spec.clone())),
            Box::new(StationaryRobber::new(spec.clone())),
            Box::new(crate::strategy::adversary::RandomRobber::new(spec.clone(), 7)),
        ];
        for robber in pool.iter_mut() {
            let t = run_match(&spec, &mut vr, robber.as_mut(), &MatchOptions::default()).unwrap();
            assert_eq!(t.winner, Winner::Cops, "vr vs {}", robber.name());
        }

        let mut er = TwoPhaseEdgeCops::new(&bip, 2).unwrap();
        let spec = GameSpec::new(
            Arc::new(er.graph().clone()),
            Variant::EdgeSurroundRestrictive,
            er.cop_count(),
        )
        .unwrap();
        let mut pool: Vec<Box<dyn crate::strategy::RobberController>> = vec![
            Box::new(GreedyRobber::new(spec.clone())),
            Box::new(StationaryRobber::new(spec.clone())),
            Box::new(crate::strategy::adversary::RandomRobber::new(spec.clone(), 7)),
        ];
        for robber in pool.iter_mut() {
            let t = run_match(&spec, &mut er, robber.as_mut(), &MatchOptions::default()).unwrap();
            assert_eq!(t.winner, Winner::Cops, "er vs {}", robber.name());
        }
    }

    /// One cop short of the surround threshold, the bundle-counting
    /// robber escapes everyone, including a perfect-play cop team.
    #[test]
    fn safe_robber_outlasts_cop_deficit_vertex() {
        let bip = complete_bipartite(2, 2).unwrap();
        let mut robber = SafeRobber::new(&bip.graph, 2, Variant::VertexSurround);
        assert_eq!(robber.rule, Rule::Pendant);
        expect_verdicts(robber.graph(), Variant::VertexSurround, 6);
        let sol = solve(robber.graph(), Variant::VertexSurround, 5);
        let spec = sol.spec().clone();
        let mut cops: Vec<Box<dyn CopController>> = vec![
            Box::new(SolvedCops::new(sol)),
            Box::new(GreedyCops::new(spec.clone())),
            Box::new(RandomCops::new(spec.clone(), 11)),
        ];
        for team in cops.iter_mut() {
            let t = run_match(&spec, team.as_mut(), &mut robber, &MatchOptions::default()).unwrap();
            assert_eq!(t.winner, Winner::Robber, "vs {}", team.name());
        }
    }

    #[test]
    fn safe_robber_outlasts_cop_deficit_edge() {
        let bip = complete_bipartite(2, 2).unwrap();
        let mut robber = SafeRobber::new(&bip.graph, 2, Variant::EdgeSurround);
        assert_eq!(robber.rule, Rule::Pendant);
        expect_verdicts(robber.graph(), Variant::EdgeSurround, 4);
        let sol = solve(robber.graph(), Variant::EdgeSurround, 3);
        let spec = sol.spec().clone();
        let mut cops: Vec<Box<dyn CopController>> = vec![
            Box::new(SolvedCops::new(sol)),
            Box::new(GreedyCops::new(spec.clone())),
            Box::new(RandomCops::new(spec.clone(), 11)),
        ];
        for team in cops.iter_mut() {
            let t = run_match(&spec, team.as_mut(), &mut robber, &MatchOptions::default()).unwrap();
            assert_eq!(t.winner, Winner::Robber, "vs {}", team.name());
        }
    }

    /// With no leaves at all the robber falls back to the two-move ball
    /// counts, which need a host without short cycles. The order-2
    /// squares graph is an 8-cycle, the smallest such host.
    #[test]
    fn safe_robber_ball_rule_on_large_girth_host() {
        let host = mols_graph(2).unwrap().graph;
        for variant in [Variant::VertexSurround, Variant::EdgeSurround] {
            let mut robber = SafeRobber::new(&host, 0, variant);
            assert_eq!(robber.rule, Rule::Ball, "{variant}");
            let sol = solve(robber.graph(), variant, 1);
            assert_eq!(sol.verdict(), Verdict::RobberWin);
            let spec = sol.spec().clone();
            let mut cops: Vec<Box<dyn CopController>> = vec![
                Box::new(SolvedCops::new(sol)),
                Box::new(GreedyCops::new(spec.clone())),
            ];
            for team in cops.iter_mut() {
                let t =
                    run_match(&spec, team.as_mut(), &mut robber, &MatchOptions::default()).unwrap();
                assert_eq!(t.winner, Winner::Robber, "{variant} vs {}", team.name());
            }
        }
    }

    /// In the restrictive games a robber on a high-degree vertex cannot
    /// be surrounded by fewer cops than its degree, so holding position
    /// is already enough.
    #[test]
    fn restrictive_safe_robbers_hold_position() {
        let bip = complete_bipartite(2, 2).unwrap();
        for (variant, k) in [
            (Variant::VertexSurroundRestrictive, 2),
            (Variant::EdgeSurroundRestrictive, 3),
        ] {
            let mut robber = SafeRobber::new(&bip.graph, 2, variant);
            let sol = solve(robber.graph(), variant, k);
            assert_eq!(sol.verdict(), Verdict::RobberWin, "{variant}");
            let spec = sol.spec().clone();
            let mut cops: Vec<Box<dyn CopController>> = vec![
                Box::new(SolvedCops::new(sol)),
                Box::new(GreedyCops::new(spec.clone())),
            ];
            for team in cops.iter_mut() {
                let t =
                    run_match(&spec, team.as_mut(), &mut robber, &MatchOptions::default()).unwrap();
                assert_eq!(t.winner, Winner::Robber, "{variant} vs {}", team.name());
            }
        }
    }
}
