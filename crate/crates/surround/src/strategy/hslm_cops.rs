//! Two classical cops on the glued two-copy construction.
//!
//! The graph has an outer cycle through the `q(a)` vertices, pendant
//! paths down to the copy-1 tree roots, and two glued copies of the
//! expansion whose connecting paths are much longer than the cycle,
//! the pendant paths, and the trees combined. That length gap is what
//! the strategy exploits: one cop can always reposition across the
//! cycle faster than the robber can traverse a connecting path.
//!
//! The first cop guards: it holds the cycle vertex `q(a)` above the
//! robber's current sphere, so the robber can never surface onto the
//! cycle. Whenever the robber commits to one half of a connecting
//! path, the guard sprints to the copy-1 leaf at the end of that half.
//! The robber then either runs into the waiting cop (if it travels in
//! copy 1) or arrives on the mirror vertex in copy 2, at which point
//! the guard locks into shadowing: it repeats every robber move in
//! copy 1. A shadowed robber is captured the moment it touches a
//! shared middle-edge vertex, so it is confined to one copy with all
//! middle edges cut, which is a forest.
//!
//! The second cop chases greedily along shortest paths that avoid the
//! outer cycle edges, forcing the robber to keep moving; a robber
//! trapped in the forest is cornered by the chaser. While the robber
//! is on the outer cycle itself, the chaser instead parks on the cycle
//! as a roadblock and the guard pursues directly.

use crate::families::{FamilyError, Hslm};
use crate::graph::{EdgeId, VertexId};
use crate::strategy::CopController;

enum Spot {
    Cycle(VertexId),
    Sphere(VertexId),
    Glue,
    Half { edge: EdgeId, head: bool },
}

pub struct HslmCops {
    h: Hslm,
    shadow: Option<usize>,
    pending_note: Option<String>,
}

impl HslmCops {
    pub fn new(h: Hslm) -> Result<HslmCops, FamilyError> {
        if !h.supports_two_cop_capture() {
            return Err(FamilyError::BadParameter(
                "connecting paths must be longer than cycle, pendant path, and tree depth combined"
                    .into(),
            ));
        }
        Ok(HslmCops {
            h,
            shadow: None,
            pending_note: None,
        })
    }

    pub fn graph(&self) -> &crate::graph::Graph {
        &self.h.graph
    }

    pub fn cop_count(&self) -> u32 {
        2
    }

    fn spot(&self, v: VertexId) -> Spot {
        if let Some((_, local)) = self.h.local_of(v) {
            let t = &self.h.template;
            if t.is_tree_vertex(local) {
                return Spot::Sphere(t.tree_owner(local));
            }
            let (edge, off) = t.path_coord(local).unwrap();
            let l = t.l();
            if off == l - 1 || off == l {
                Spot::Glue
            } else {
                Spot::Half {
                    edge,
                    head: off > l,
                }
            }
        } else {
            match self.h.region_of(v) {
                crate::families::Region::Cycle(a) => Spot::Cycle(a),
                crate::families::Region::Sphere(a) => Spot::Sphere(a),
            }
        }
    }

    /// One step from `from` that decreases the given distance field, or
    /// `from` when already minimal.
    fn descend(&self, from: VertexId, dist: &[u32]) -> VertexId {
        let mut best = (dist[from as usize], from);
        for &w in self.h.graph.neighbors(from) {
            let key = (dist[w as usize], w);
            if key < best {
                best = key;
            }
        }
        best.1
    }

    fn toward(&self, from: VertexId, target: VertexId) -> VertexId {
        self.descend(from, &self.h.graph.distances_from(target))
    }

    /// Greedy pursuit along shortest paths that ignore the outer cycle
    /// edges.
    fn chase(&self, from: VertexId, robber: VertexId) -> VertexId {
        if self.h.graph.has_edge(from, robber) {
            return robber;
        }
        self.descend(from, &self.h.h_minus_distances(robber))
    }
}

impl CopController for HslmCops {
    fn name(&self) -> String {
        "hslm-cops-classical".into()
    }

    fn place(&mut self) -> Vec<u32> {
        self.shadow = None;
        vec![self.h.q(0); 2]
    }

    fn step(&mut self, cops: &[u32], robber: u32) -> Vec<u32> {
        let g = &self.h.graph;
        let mut next = cops.to_vec();

        if self.shadow.is_none() {
            if let Some((2, _)) = self.h.local_of(robber) {
                for (i, &c) in cops.iter().enumerate() {
                    if self.h.mirror(robber) == Some(c) {
                        self.shadow = Some(i);
                        break;
                    }
                }
            }
        }

        let mut shadowed = false;
        if let Some(i) = self.shadow {
            match self.h.mirror(robber) {
                Some(m) if m == cops[i] || g.has_edge(cops[i], m) => {
                    next[i] = m;
                    next[1 - i] = self.chase(cops[1 - i], robber);
                    shadowed = true;
                }
                _ => self.shadow = None,
            }
        }

        if !shadowed {
            match self.spot(robber) {
                Spot::Cycle(a) => {
                    next[0] = self.toward(cops[0], robber);
                    next[1] = if self.h.is_cycle_vertex(cops[1]) {
                        cops[1]
                    } else {
                        let block = self.h.q((a + self.h.n_base() / 2) % self.h.n_base());
                        self.toward(cops[1], block)
                    };
                }
                Spot::Sphere(a) => {
                    let dist_q = g.distances_from(self.h.q(a));
                    next[0] = self.descend(cops[0], &dist_q);
                    // If the robber would win the race to the cycle exit,
                    // both cops converge on it; otherwise chase as usual.
                    next[1] = if dist_q[robber as usize] < dist_q[cops[0] as usize] {
                        self.descend(cops[1], &dist_q)
                    } else {
                        self.chase(cops[1], robber)
                    };
                }
                Spot::Glue => {
                    next[1] = self.chase(cops[1], robber);
                }
                Spot::Half { edge, head } => {
                    let leaf = if head {
                        self.h.template.in_leaf(edge)
                    } else {
                        self.h.template.out_leaf(edge)
                    };
                    next[0] = self.toward(cops[0], leaf);
                    next[1] = self.chase(cops[1], robber);
                }
            }
        }

        for (i, &c) in cops.iter().enumerate() {
            if g.has_edge(c, robber) {
                next[i] = robber;
            }
        }
        next
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::full_construction;
    use crate::rules::{GameSpec, Variant};
    use crate::strategy::adversary::{GreedyRobber, RandomRobber, StationaryRobber};
    use crate::strategy::{run_match, MatchOptions, RobberController, Winner};
    use std::sync::Arc;

    #[test]
    fn construction_gate_requires_dominant_path_length() {
        assert!(HslmCops::new(full_construction(1, 13, 3).unwrap()).is_ok());
        // Path length exactly at the budget is not enough.
        assert!(HslmCops::new(full_construction(1, 12, 3).unwrap()).is_err());
        assert!(HslmCops::new(full_construction(2, 8, 6).unwrap()).is_err());
    }

    #[test]
    fn two_cops_capture_on_the_glued_construction() {
        for (s, l, m) in [(1u32, 13u32, 3u32), (1, 13, 1)] {
            let h = full_construction(s, l, m).unwrap();
            let spec = GameSpec::new(Arc::new(h.graph.clone()), Variant::Classical, 2).unwrap();
            let mut pool: Vec<Box<dyn RobberController>> = vec![
                Box::new(GreedyRobber::new(spec.clone())),
                Box::new(StationaryRobber::new(spec.clone())),
            ];
            for seed in 0..20 {
                pool.push(Box::new(RandomRobber::new(spec.clone(), seed)));
            }
            for robber in pool.iter_mut() {
                let mut cops = HslmCops::new(h.clone()).unwrap();
                let t = run_match(&spec, &mut cops, robber.as_mut(), &MatchOptions::default())
                    .unwrap();
                assert_eq!(
                    t.winner,
                    Winner::Cops,
                    "params ({s},{l},{m}) vs {}: {}",
                    robber.name(),
                    t.reason
                );
                assert!(
                    t.reason == "captured" || t.reason == "robber walked into capture",
                    "unexpected reason {}",
                    t.reason
                );
            }
        }
    }
}
