//! Evasion on the glued two-copy construction in the restrictive
//! vertex game.
//!
//! The robber lives entirely in copy 2, hopping from tree root to tree
//! root along oriented base edges. A full hop takes `2s + 2l + 1`
//! steps: down the out-subtree, across the connecting path, and up the
//! in-subtree of the next root. The safety radius around a copy-`i`
//! root of base vertex `a` is the set `F_i(a)` of vertices within
//! distance `2s` of the root once the edge toward the in-subtree is
//! cut; a hop is safe if the destination's copy-2 radius stays
//! cop-free until arrival.
//!
//! Before each hop the robber marks an out-neighbor `b` as blocked
//! when some cop outside `F_1(a)` is within `2l + 2s + 1` steps of
//! `F_2(b)`: such a cop could reach the destination first. Cops inside
//! `F_1(a)` (hovering in copy 1 above the robber) are handled during
//! the descent instead: at every branching of the out-subtree the
//! robber compares, per child, the number of unblocked exits below it
//! against the number of cops sitting in the copy-1 image of that
//! subtree and on the copy-1 connecting paths of those exits, and
//! descends where exits outnumber cops. With at most one fewer cop
//! than exits this choice always exists, and it forces any copy-1
//! pursuer to commit to a branch the robber then avoids.

use crate::families::{FamilyError, Hslm};
use crate::graph::{EdgeId, VertexId, INFINITY};
use crate::strategy::RobberController;
use std::collections::VecDeque;

pub struct HslmRobber {
    h: Hslm,
    /// Per base vertex: marked unsafe for the current hop.
    blocked: Vec<bool>,
    breaches: u32,
}

impl HslmRobber {
    pub fn new(h: Hslm) -> Result<HslmRobber, FamilyError> {
        if !h.supports_evasion() {
            return Err(FamilyError::BadParameter(
                "pendant paths and connecting paths must be long relative to the tree depth"
                    .into(),
            ));
        }
        let n_base = h.n_base() as usize;
        Ok(HslmRobber {
            h,
            blocked: vec![false; n_base],
            breaches: 0,
        })
    }

    pub fn graph(&self) -> &crate::graph::Graph {
        &self.h.graph
    }

    /// Times the scripted plan was locally impossible and a fallback
    /// move was taken; stays zero against at most `2^(s-1) - 1` cops.
    pub fn breaches(&self) -> u32 {
        self.breaches
    }

    fn occupied(&self, cops: &[u32], v: VertexId) -> bool {
        cops.contains(&v)
    }

    /// Distances from the set `from` out to radius `r` (INFINITY beyond).
    fn bounded_distances(&self, from: &[VertexId], r: u32) -> Vec<u32> {
        let mut dist = vec![INFINITY; self.h.graph.vertex_count()];
        let mut queue = VecDeque::new();
        for &v in from {
            dist[v as usize] = 0;
            queue.push_back(v);
        }
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            if du == r {
                continue;
            }
            for &w in self.h.graph.neighbors(u) {
                if dist[w as usize] == INFINITY {
                    dist[w as usize] = du + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Recompute the blocked set for a hop out of base vertex `a`.
    fn begin_hop(&mut self, cops: &[u32], a: VertexId) {
        let t = &self.h.template;
        let radius = 2 * self.h.l() + 2 * self.h.s() + 1;
        let f1a = self.h.f_set(1, a);
        let f2a = self.h.f_set(2, a);
        if cops.iter().any(|c| f2a.binary_search(c).is_ok()) {
            self.breaches += 1;
        }
        self.blocked.iter_mut().for_each(|b| *b = false);
        for &e in t.out_edge_ids(a) {
            let b = t.arc(e).1;
            let f2b = self.h.f_set(2, b);
            let dist = self.bounded_distances(&f2b, radius);
            self.blocked[b as usize] = cops.iter().any(|&c| {
                dist[c as usize] != INFINITY && f1a.binary_search(&c).is_err()
            });
        }
    }

    /// Heap node indices of the subtree below `node` (inclusive).
    fn heap_subtree(&self, node: u32) -> Vec<u32> {
        let size = self.h.template.tree_size();
        let mut out = vec![node];
        let mut i = 0;
        while i < out.len() {
            for child in [2 * out[i] + 1, 2 * out[i] + 2] {
                if child < size {
                    out.push(child);
                }
            }
            i += 1;
        }
        out
    }

    fn is_under_out_root(&self, mut node: u32) -> bool {
        while node > 2 {
            node = (node - 1) / 2;
        }
        node == 1
    }

    /// Unblocked exit edges whose out-leaf lies below heap `node` of the
    /// tree at `a`, and the number of cops on the copy-1 image of that
    /// subtree plus the copy-1 paths of those exits.
    fn child_budget(&self, cops: &[u32], a: VertexId, node: u32) -> (usize, usize) {
        let t = &self.h.template;
        let leaf_start = (1u32 << t.s()) - 1;
        let half = 1u32 << (t.s() - 1);
        let sub = self.heap_subtree(node);
        let mut exits = 0usize;
        let mut watched: Vec<VertexId> =
            sub.iter().map(|&tn| a * t.tree_size() + tn).collect();
        for &tn in &sub {
            if tn >= leaf_start && tn < leaf_start + half {
                let e: EdgeId = t.out_edge_ids(a)[(tn - leaf_start) as usize];
                if !self.blocked[t.arc(e).1 as usize] {
                    exits += 1;
                    watched.extend(t.path_vertices(e));
                }
            }
        }
        let in_watch = cops
            .iter()
            .filter(|c| watched.contains(c))
            .count();
        (exits, in_watch)
    }

    /// The next vertex on the scripted route, ignoring occupancy.
    fn plan(&mut self, cops: &[u32], robber: u32) -> u32 {
        let t = &self.h.template;
        let local = match self.h.local_of(robber) {
            Some((2, local)) => local,
            Some((1, local)) if self.h.is_glue(robber) => local,
            _ => {
                // Off the scripted region; hold position.
                self.breaches += 1;
                return robber;
            }
        };
        if let Some((e, off)) = t.path_coord(local) {
            let next = if off + 1 < 2 * t.l() {
                t.path_inner(e).start + off + 1
            } else {
                t.in_leaf(e)
            };
            return self.h.copy2(next);
        }
        let a = t.tree_owner(local);
        let tn = t.tree_node(local);
        if tn == 0 {
            let out = self.h.copy2(t.root_out(a));
            self.begin_hop(cops, a);
            return out;
        }
        if !self.is_under_out_root(tn) {
            // In-subtree: climb toward the root.
            return self.h.copy2(a * t.tree_size() + (tn - 1) / 2);
        }
        let leaf_start = (1u32 << t.s()) - 1;
        let half = 1u32 << (t.s() - 1);
        if tn >= leaf_start {
            debug_assert!(tn < leaf_start + half);
            let e = t.out_edge_ids(a)[(tn - leaf_start) as usize];
            return self.h.copy2(t.path_inner(e).start);
        }
        // Branching point: descend where unblocked exits outnumber the
        // watched cops.
        let mut pick: Option<(i64, u32)> = None;
        let mut safe = false;
        for child in [2 * tn + 1, 2 * tn + 2] {
            let (exits, in_watch) = self.child_budget(cops, a, child);
            if exits == 0 {
                continue;
            }
            let margin = exits as i64 - in_watch as i64;
            let better = match pick {
                None => true,
                Some((m, _)) => margin > m,
            };
            if better {
                pick = Some((margin, child));
                safe = in_watch < exits;
            }
        }
        match pick {
            Some((_, child)) => {
                if !safe {
                    self.breaches += 1;
                }
                self.h.copy2(a * t.tree_size() + child)
            }
            None => {
                self.breaches += 1;
                self.h.copy2(a * t.tree_size() + 2 * tn + 1)
            }
        }
    }
}

impl RobberController for HslmRobber {
    fn name(&self) -> String {
        "hslm-robber-vr".into()
    }

    fn place(&mut self, cops: &[u32]) -> Option<u32> {
        self.breaches = 0;
        let mut best: Option<(usize, u32)> = None;
        for a in 0..self.h.n_base() {
            let root = self.h.root2(a);
            if self.occupied(cops, root) {
                continue;
            }
            let f2a = self.h.f_set(2, a);
            let inside = cops
                .iter()
                .filter(|c| f2a.binary_search(c).is_ok())
                .count();
            if best.map_or(true, |(n, _)| inside < n) {
                best = Some((inside, root));
            }
        }
        best.map(|(_, root)| root)
    }

    fn step(&mut self, cops: &[u32], robber: u32) -> u32 {
        let target = self.plan(cops, robber);
        if target != robber && self.occupied(cops, target) {
            self.breaches += 1;
            return robber;
        }
        target
    }
}
