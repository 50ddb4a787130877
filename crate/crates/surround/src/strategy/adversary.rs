//! Generic opponents: seeded random walkers, greedy distance players,
//! and a robber that never moves. Useful as stress opponents for
//! scripted strategies and as baselines in simulations.

use crate::rules::GameSpec;
use crate::strategy::{CopController, RobberController};
use rand::prelude::IndexedRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn all_pairs_distances(spec: &GameSpec) -> Vec<Vec<u32>> {
    let g = spec.graph();
    (0..g.vertex_count() as u32)
        .map(|v| g.distances_from(v))
        .collect()
}

/// Distance from vertex `v` to a cop position (vertex, or nearer endpoint
/// of an edge position).
fn cop_distance(spec: &GameSpec, apsp: &[Vec<u32>], pos: u32, v: u32) -> u32 {
    if spec.variant().cops_on_edges() {
        let (a, b) = spec.graph().endpoints(pos);
        apsp[a as usize][v as usize].min(apsp[b as usize][v as usize])
    } else {
        apsp[pos as usize][v as usize]
    }
}

fn nearest_cop(spec: &GameSpec, apsp: &[Vec<u32>], cops: &[u32], v: u32) -> u32 {
    cops.iter()
        .map(|&c| cop_distance(spec, apsp, c, v))
        .min()
        .unwrap_or(u32::MAX)
}

/// Picks uniformly among legal placements and moves.
pub struct RandomRobber {
    spec: GameSpec,
    rng: ChaCha8Rng,
    seed: u64,
}

impl RandomRobber {
    pub fn new(spec: GameSpec, seed: u64) -> RandomRobber {
        RandomRobber {
            spec,
            rng: ChaCha8Rng::seed_from_u64(seed),
            seed,
        }
    }
}

impl RobberController for RandomRobber {
    fn name(&self) -> String {
        format!("random-robber(seed={})", self.seed)
    }

    fn place(&mut self, cops: &[u32]) -> Option<u32> {
        let mut sorted = cops.to_vec();
        sorted.sort_unstable();
        self.spec
            .robber_placements(&sorted)
            .choose(&mut self.rng)
            .copied()
    }

    fn step(&mut self, cops: &[u32], robber: u32) -> u32 {
        let mut sorted = cops.to_vec();
        sorted.sort_unstable();
        *self
            .spec
            .robber_moves(&sorted, robber)
            .choose(&mut self.rng)
            .expect("non-terminal states always offer a robber move")
    }
}

/// Maximizes distance to the nearest cop, breaking ties toward larger
/// total distance and then the smallest vertex.
pub struct GreedyRobber {
    spec: GameSpec,
    apsp: Vec<Vec<u32>>,
}

impl GreedyRobber {
    pub fn new(spec: GameSpec) -> GreedyRobber {
        let apsp = all_pairs_distances(&spec);
        GreedyRobber { spec, apsp }
    }

    fn pick(&self, cops: &[u32], candidates: &[u32]) -> Option<u32> {
        candidates
            .iter()
            .map(|&v| {
                let near = nearest_cop(&self.spec, &self.apsp, cops, v);
                let total: u64 = cops
                    .iter()
                    .map(|&c| cop_distance(&self.spec, &self.apsp, c, v) as u64)
                    .sum();
                (near, total, std::cmp::Reverse(v))
            })
            .zip(candidates.iter())
            .max_by_key(|(score, _)| *score)
            .map(|(_, &v)| v)
    }
}

impl RobberController for GreedyRobber {
    fn name(&self) -> String {
        "greedy-robber".into()
    }

    fn place(&mut self, cops: &[u32]) -> Option<u32> {
        let mut sorted = cops.to_vec();
        sorted.sort_unstable();
        let placements = self.spec.robber_placements(&sorted);
        self.pick(cops, &placements)
    }

    fn step(&mut self, cops: &[u32], robber: u32) -> u32 {
        let mut sorted = cops.to_vec();
        sorted.sort_unstable();
        let moves = self.spec.robber_moves(&sorted, robber);
        self.pick(cops, &moves)
            .expect("non-terminal states always offer a robber move")
    }
}

/// Places like the greedy robber, then stays put whenever staying is
/// legal (the restrictive vertex game can force it off a vertex).
pub struct StationaryRobber {
    inner: GreedyRobber,
}

impl StationaryRobber {
    pub fn new(spec: GameSpec) -> StationaryRobber {
        StationaryRobber {
            inner: GreedyRobber::new(spec),
        }
    }
}

impl RobberController for StationaryRobber {
    fn name(&self) -> String {
        "stationary-robber".into()
    }

    fn place(&mut self, cops: &[u32]) -> Option<u32> {
        self.inner.place(cops)
    }

    fn step(&mut self, cops: &[u32], robber: u32) -> u32 {
        let mut sorted = cops.to_vec();
        sorted.sort_unstable();
        let moves = self.inner.spec.robber_moves(&sorted, robber);
        if moves.contains(&robber) {
            robber
        } else {
            moves[0]
        }
    }
}

/// Uniformly random cop placement and moves.
pub struct RandomCops {
    spec: GameSpec,
    rng: ChaCha8Rng,
    seed: u64,
}

impl RandomCops {
    pub fn new(spec: GameSpec, seed: u64) -> RandomCops {
        RandomCops {
            spec,
            rng: ChaCha8Rng::seed_from_u64(seed),
            seed,
        }
    }
}

impl CopController for RandomCops {
    fn name(&self) -> String {
        format!("random-cops(seed={})", self.seed)
    }

    fn place(&mut self) -> Vec<u32> {
        let domain: Vec<u32> = (0..self.spec.cop_domain_size()).collect();
        (0..self.spec.k())
            .map(|_| *domain.choose(&mut self.rng).unwrap())
            .collect()
    }

    fn step(&mut self, cops: &[u32], _robber: u32) -> Vec<u32> {
        cops.iter()
            .map(|&c| *self.spec.cop_moves(c).choose(&mut self.rng).unwrap())
            .collect()
    }
}

/// Every cop independently shortens its distance to the robber,
/// breaking ties toward the smallest position.
pub struct GreedyCops {
    spec: GameSpec,
    apsp: Vec<Vec<u32>>,
}

impl GreedyCops {
    pub fn new(spec: GameSpec) -> GreedyCops {
        let apsp = all_pairs_distances(&spec);
        GreedyCops { spec, apsp }
    }
}

impl CopController for GreedyCops {
    fn name(&self) -> String {
        "greedy-cops".into()
    }

    fn place(&mut self) -> Vec<u32> {
        // Spread evenly over the position domain.
        let d = self.spec.cop_domain_size() as u64;
        let k = self.spec.k() as u64;
        (0..k).map(|i| (i * d / k) as u32).collect()
    }

    fn step(&mut self, cops: &[u32], robber: u32) -> Vec<u32> {
        cops.iter()
            .map(|&c| {
                self.spec
                    .cop_moves(c)
                    .into_iter()
                    .min_by_key(|&q| (cop_distance(&self.spec, &self.apsp, q, robber), q))
                    .unwrap()
            })
            .collect()
    }
}
