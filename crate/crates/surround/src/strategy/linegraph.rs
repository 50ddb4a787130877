//! Strategies on line graphs of complete graphs.
//!
//! Vertices of this graph are the unordered pairs {x,y} of base
//! vertices, adjacent when they share an element. With base vertices
//! labelled 0..n, the cops start on {0,x} for all x and on {1,y} for
//! the middle y, and from those posts the whole neighborhood of any
//! start vertex of the robber can be occupied within a single move:
//! every pair neighbors the robber's pair through one shared element,
//! and the posts distribute so that each needed pair has its own
//! adjacent cop. Care is needed when the robber starts on an occupied
//! pair, since the resident cop must join the surround without
//! uncovering its own post if that post is also a neighbor.
//!
//! The robber strategies for the edge games count, for every base
//! vertex v, how many cop edges correspond to a two-edge base path
//! containing v. A surround at {u,w} needs n-2 cops on paths with
//! midpoint u and another n-2 with midpoint w, and a cop's midpoint
//! after a move lies inside its previous path, so keeping one endpoint
//! of the robber's pair under a load threshold makes a surround
//! impossible to finish within one cop turn.

use crate::families::LineComplete;
use crate::graph::VertexId;
use crate::strategy::{CopController, RobberController};

/// Vertex-surround cops (plain or restrictive) with one move to win.
pub struct LineCops {
    lc: LineComplete,
    fired: bool,
}

impl LineCops {
    pub fn new(lc: LineComplete) -> LineCops {
        LineCops { lc, fired: false }
    }

    pub fn graph(&self) -> &crate::graph::Graph {
        &self.lc.graph
    }

    /// Twice the base order minus four: the degree of every vertex.
    pub fn cop_count(&self) -> u32 {
        2 * (self.lc.base_n() as u32 - 2)
    }

    pub fn posts(&self) -> Vec<(u32, u32)> {
        let n = self.lc.base_n() as u32;
        let mut posts: Vec<(u32, u32)> = (1..n).map(|x| (0, x)).collect();
        posts.extend((2..n - 1).map(|y| (1, y)));
        posts
    }

    fn v(&self, a: u32, b: u32) -> VertexId {
        self.lc.vertex_of_pair(a, b)
    }

    /// The reassignments that cover every neighbor of the pair (u, w) in
    /// one move, as (from, to) pairs; unlisted cops hold their posts.
    fn surround_moves(&self, u: u32, w: u32) -> Vec<((u32, u32), (u32, u32))> {
        let n = self.lc.base_n() as u32;
        let last = n - 1;
        let mid = |skip: &[u32]| {
            let skip = skip.to_vec();
            (2..last).filter(move |z| !skip.contains(z))
        };
        let mut mv = Vec::new();
        match (u, w) {
            (0, 1) => mv.push(((0, 1), (1, last))),
            (0, x) if x < last => {
                mv.push(((0, x), (x, last)));
                mv.extend(mid(&[x]).map(|z| ((1, z), (x, z))));
            }
            (0, _) => {
                mv.push(((0, 1), (1, last)));
                mv.push(((0, last), (0, 1)));
                mv.extend(mid(&[]).map(|z| ((1, z), (z, last))));
            }
            (1, y) if y < last => {
                mv.push(((1, y), (y, last)));
                mv.push(((0, last), (1, last)));
                mv.extend(mid(&[y]).map(|z| ((0, z), (y, z))));
            }
            (1, _) => {
                mv.extend(mid(&[]).map(|z| ((0, z), (z, last))));
            }
            (x, y) if y < last => {
                mv.push(((0, y), (y, last)));
                mv.push(((0, 1), (0, y)));
                mv.push(((0, last), (x, last)));
                mv.extend(mid(&[x, y]).map(|z| ((0, z), (x, z))));
                mv.extend(mid(&[x, y]).map(|z| ((1, z), (y, z))));
            }
            (x, _) => {
                mv.push(((0, 1), (1, last)));
                mv.extend(mid(&[x]).map(|z| ((0, z), (x, z))));
                mv.extend(mid(&[x]).map(|z| ((1, z), (z, last))));
            }
        }
        mv
    }
}

impl CopController for LineCops {
    fn name(&self) -> String {
        "linegraph-cops-v".into()
    }

    fn place(&mut self) -> Vec<u32> {
        self.fired = false;
        self.posts().iter().map(|&(a, b)| self.v(a, b)).collect()
    }

    fn step(&mut self, cops: &[u32], robber: u32) -> Vec<u32> {
        if self.fired {
            return cops.to_vec();
        }
        self.fired = true;
        let (u, w) = self.lc.pair(robber);
        let mut next = cops.to_vec();
        for (from, to) in self.surround_moves(u, w) {
            let from_v = self.v(from.0, from.1);
            let i = cops
                .iter()
                .position(|&c| c == from_v)
                .expect("mover stands on its post");
            next[i] = self.v(to.0, to.1);
        }
        next
    }
}

/// Edge-game robber keeping one endpoint of its pair on a lightly
/// loaded base vertex. `restrictive` switches the threshold from n-2 to
/// n/2 and makes the robber check that its connecting edge is free.
pub struct LineEdgeRobber {
    lc: LineComplete,
    restrictive: bool,
    anchor: Option<u32>,
}

impl LineEdgeRobber {
    pub fn new(lc: LineComplete, restrictive: bool) -> LineEdgeRobber {
        LineEdgeRobber {
            lc,
            restrictive,
            anchor: None,
        }
    }

    pub fn graph(&self) -> &crate::graph::Graph {
        &self.lc.graph
    }

    /// For every base vertex, the number of cop edges whose two-edge
    /// base path contains it.
    pub fn loads(&self, cops: &[u32]) -> Vec<u32> {
        let mut p = vec![0u32; self.lc.base_n()];
        for &e in cops {
            let (lu, lv) = self.lc.graph.endpoints(e);
            let (a, b) = self.lc.pair(lu);
            let (c, d) = self.lc.pair(lv);
            let mut verts = [a, b, c, d];
            verts.sort_unstable();
            let mut prev = u32::MAX;
            for x in verts {
                if x != prev {
                    p[x as usize] += 1;
                    prev = x;
                }
            }
        }
        p
    }

    /// Strictly below n-2 (plain) or n/2 (restrictive).
    pub fn is_low(&self, load: u32) -> bool {
        let n = self.lc.base_n() as u32;
        if self.restrictive {
            2 * load < n
        } else {
            load < n - 2
        }
    }
}

impl RobberController for LineEdgeRobber {
    fn name(&self) -> String {
        if self.restrictive {
            "linegraph-robber-er".into()
        } else {
            "linegraph-robber-e".into()
        }
    }

    fn place(&mut self, cops: &[u32]) -> Option<u32> {
        let p = self.loads(cops);
        let n = self.lc.base_n() as u32;
        let mut order: Vec<u32> = (0..n).collect();
        order.sort_unstable_by_key(|&v| (p[v as usize], v));
        self.anchor = Some(order[0]);
        Some(self.v_of(order[0], order[1]))
    }

    fn step(&mut self, cops: &[u32], robber: u32) -> u32 {
        let p = self.loads(cops);
        let (x, y) = self.lc.pair(robber);
        let lighter = if (p[x as usize], x) <= (p[y as usize], y) {
            x
        } else {
            y
        };
        if self.is_low(p[lighter as usize]) {
            self.anchor = Some(lighter);
            return robber;
        }
        // Both endpoints overloaded: pivot around the anchor to a fresh
        // lightly loaded partner.
        let a = match self.anchor {
            Some(a) if a == x || a == y => a,
            _ => lighter,
        };
        let n = self.lc.base_n() as u32;
        let mut best: Option<(u32, u32, u32)> = None;
        for w in 0..n {
            if w == x || w == y || !self.is_low(p[w as usize]) {
                continue;
            }
            let target = self.v_of(a, w);
            if self.restrictive {
                let step_edge = self
                    .lc
                    .graph
                    .edge_id(robber, target)
                    .expect("pairs sharing the anchor are adjacent");
                if cops.contains(&step_edge) {
                    continue;
                }
            }
            let key = (p[w as usize], w, target);
            if best.map_or(true, |b| key < b) {
                best = Some(key);
            }
        }
        match best {
            Some((_, w, target)) => {
                self.anchor = Some(w);
                target
            }
            None => robber,
        }
    }
}

impl LineEdgeRobber {
    fn v_of(&self, a: u32, b: u32) -> VertexId {
        self.lc.vertex_of_pair(a, b)
    }
}
