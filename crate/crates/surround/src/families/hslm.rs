//! Tree-and-path expansions of an oriented base graph, and the two-copy
//! glued construction with escape paths and an outer cycle.
//!
//! Expansion: every base vertex `a` becomes a complete binary tree of
//! height `s` (heap-indexed, root first); every oriented base edge `a -> b`
//! becomes a path with `2l` new inner vertices joining an "out" leaf of
//! `a`'s tree to an "in" leaf of `b`'s tree. Out-leaves, in left-to-right
//! tree order, match outgoing edges sorted by neighbor id (same for
//! in-leaves).
//!
//! Full construction: two copies of the expansion share the two endpoints
//! of each path's middle edge, copy 1 additionally gets a pendant path
//! `Q(a)` of `m` new vertices at each tree root, and the far path endpoints
//! `q(a)` are joined into a cycle `C` in increasing base-vertex order.

use super::{base_graph, BaseGraph, FamilyError};
use crate::graph::{build_graph, EdgeId, Graph, VertexId, INFINITY};
use serde_json::json;
use std::collections::VecDeque;
use std::ops::Range;

/// H[s, l]: trees plus connecting paths over the oriented base graph.
#[derive(Debug, Clone)]
pub struct Expanded {
    pub graph: Graph,
    pub base: BaseGraph,
    s: u32,
    l: u32,
    tree_size: u32,
    tree_total: u32,
    /// Edge ids of the base graph leaving `a`, aligned with the ascending
    /// out-neighbor list (same for incoming).
    out_edges: Vec<Vec<EdgeId>>,
    in_edges: Vec<Vec<EdgeId>>,
    /// Oriented endpoints per base edge: (tail, head).
    arc: Vec<(VertexId, VertexId)>,
    /// Leaf vertices per base edge: (out leaf at the tail, in leaf at the head).
    leaf_ends: Vec<(VertexId, VertexId)>,
}

pub fn expanded_graph(s: u32, l: u32) -> Result<Expanded, FamilyError> {
    if l == 0 {
        return Err(FamilyError::BadParameter("path parameter l must be >= 1".into()));
    }
    let base = base_graph(s)?;
    Ok(build_expanded(base, s, l))
}

fn build_expanded(base: BaseGraph, s: u32, l: u32) -> Expanded {
    let bg = base.graph();
    let n_base = bg.vertex_count() as u32;
    let m_base = bg.edge_count() as u32;
    let tree_size = (1u32 << (s + 1)) - 1;
    let tree_total = n_base * tree_size;
    let n = tree_total + m_base * 2 * l;

    let mut arc = Vec::with_capacity(m_base as usize);
    for e in 0..m_base {
        let (u, v) = bg.endpoints(e);
        arc.push(if base.orientation.is_forward(e) { (u, v) } else { (v, u) });
    }
    let mut out_edges = vec![Vec::new(); n_base as usize];
    let mut in_edges = vec![Vec::new(); n_base as usize];
    for a in 0..n_base {
        for &b in base.orientation.out_neighbors(a) {
            out_edges[a as usize].push(bg.edge_id(a, b).unwrap());
        }
        for &c in base.orientation.in_neighbors(a) {
            in_edges[a as usize].push(bg.edge_id(c, a).unwrap());
        }
    }

    let leaf_start = (1u32 << s) - 1;
    let half_leaves = 1u32 << (s - 1);
    let out_leaf = |a: u32, rank: u32| a * tree_size + leaf_start + rank;
    let in_leaf = |a: u32, rank: u32| a * tree_size + leaf_start + half_leaves + rank;
    let mut leaf_ends = vec![(0, 0); m_base as usize];
    for a in 0..n_base {
        for (rank, &e) in out_edges[a as usize].iter().enumerate() {
            leaf_ends[e as usize].0 = out_leaf(a, rank as u32);
        }
        for (rank, &e) in in_edges[a as usize].iter().enumerate() {
            leaf_ends[e as usize].1 = in_leaf(a, rank as u32);
        }
    }

    let mut edges = Vec::new();
    for a in 0..n_base {
        for node in 1..tree_size {
            edges.push((a * tree_size + (node - 1) / 2, a * tree_size + node));
        }
    }
    for e in 0..m_base {
        let first = tree_total + e * 2 * l;
        let mut prev = leaf_ends[e as usize].0;
        for t in 0..2 * l {
            edges.push((prev, first + t));
            prev = first + t;
        }
        edges.push((prev, leaf_ends[e as usize].1));
    }

    let mut graph = build_graph(n as usize, &edges).unwrap();
    graph.set_label("params", json!({"s": s, "l": l}));
    graph.set_label(
        "roots",
        json!((0..n_base).map(|a| a * tree_size).collect::<Vec<_>>()),
    );
    Expanded {
        graph,
        base,
        s,
        l,
        tree_size,
        tree_total,
        out_edges,
        in_edges,
        arc,
        leaf_ends,
    }
}

impl Expanded {
    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn l(&self) -> u32 {
        self.l
    }

    pub fn n_base(&self) -> u32 {
        self.base.graph().vertex_count() as u32
    }

    pub fn m_base(&self) -> u32 {
        self.base.graph().edge_count() as u32
    }

    pub fn tree_size(&self) -> u32 {
        self.tree_size
    }

    /// (tail, head) of the oriented base edge `e`.
    pub fn arc(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.arc[e as usize]
    }

    pub fn root(&self, a: VertexId) -> VertexId {
        a * self.tree_size
    }

    /// Child of the root whose subtree carries the out-leaves.
    pub fn root_out(&self, a: VertexId) -> VertexId {
        a * self.tree_size + 1
    }

    pub fn root_in(&self, a: VertexId) -> VertexId {
        a * self.tree_size + 2
    }

    pub fn tree_range(&self, a: VertexId) -> Range<u32> {
        a * self.tree_size..(a + 1) * self.tree_size
    }

    pub fn is_tree_vertex(&self, v: VertexId) -> bool {
        v < self.tree_total
    }

    /// Heap node index within its tree (only for tree vertices).
    pub fn tree_node(&self, v: VertexId) -> u32 {
        debug_assert!(self.is_tree_vertex(v));
        v % self.tree_size
    }

    pub fn tree_owner(&self, v: VertexId) -> VertexId {
        debug_assert!(self.is_tree_vertex(v));
        v / self.tree_size
    }

    /// Base edges leaving `a`, aligned with ascending out-neighbors.
    pub fn out_edge_ids(&self, a: VertexId) -> &[EdgeId] {
        &self.out_edges[a as usize]
    }

    pub fn in_edge_ids(&self, a: VertexId) -> &[EdgeId] {
        &self.in_edges[a as usize]
    }

    /// Leaf at the tail of the path for base edge `e`.
    pub fn out_leaf(&self, e: EdgeId) -> VertexId {
        self.leaf_ends[e as usize].0
    }

    pub fn in_leaf(&self, e: EdgeId) -> VertexId {
        self.leaf_ends[e as usize].1
    }

    /// The `2l` inner path vertices of base edge `e`, tail side first.
    pub fn path_inner(&self, e: EdgeId) -> Range<u32> {
        let first = self.tree_total + e * 2 * self.l;
        first..first + 2 * self.l
    }

    /// Inner path vertices plus both leaf endpoints, in path order.
    pub fn path_vertices(&self, e: EdgeId) -> Vec<VertexId> {
        let mut p = vec![self.out_leaf(e)];
        p.extend(self.path_inner(e));
        p.push(self.in_leaf(e));
        p
    }

    /// Endpoints of the middle edge of path `e`: the tail-side vertex
    /// first. These are the vertices shared between copies in the full
    /// construction.
    pub fn middle(&self, e: EdgeId) -> (VertexId, VertexId) {
        let first = self.tree_total + e * 2 * self.l;
        (first + self.l - 1, first + self.l)
    }

    pub fn middle_edge_id(&self, e: EdgeId) -> EdgeId {
        let (x, y) = self.middle(e);
        self.graph.edge_id(x, y).unwrap()
    }

    /// Base edge and offset along its inner path (0-based from the tail
    /// side) for inner path vertices; `None` for tree vertices.
    pub fn path_coord(&self, v: VertexId) -> Option<(EdgeId, u32)> {
        if self.is_tree_vertex(v) {
            return None;
        }
        let off = v - self.tree_total;
        Some((off / (2 * self.l), off % (2 * self.l)))
    }

    /// Base vertex whose ball of radius `s + l` contains `v`; the balls
    /// partition the vertex set, splitting each path at its middle edge.
    pub fn ball_of(&self, v: VertexId) -> VertexId {
        if self.is_tree_vertex(v) {
            self.tree_owner(v)
        } else {
            let off = v - self.tree_total;
            let e = off / (2 * self.l);
            let t = off % (2 * self.l);
            if t < self.l {
                self.arc[e as usize].0
            } else {
                self.arc[e as usize].1
            }
        }
    }
}

/// Which part of the full construction a vertex belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Region {
    /// On the outer cycle (the far endpoints `q(a)`).
    Cycle(VertexId),
    /// In the sphere of base vertex `a`: its two balls plus the interior
    /// of its pendant path.
    Sphere(VertexId),
}

/// H[s, l, m]: two glued expansion copies, pendant paths, outer cycle.
#[derive(Debug, Clone)]
pub struct Hslm {
    pub graph: Graph,
    pub template: Expanded,
    m: u32,
    n1: u32,
    /// Copy-2 id of every template vertex (glue vertices map to copy 1).
    copy2_map: Vec<VertexId>,
    /// Template vertex of every copy-2-proper id (offset by n1).
    copy2_inv: Vec<VertexId>,
    q_offset: u32,
    cycle_edge_ids: Vec<EdgeId>,
}

pub fn full_construction(s: u32, l: u32, m: u32) -> Result<Hslm, FamilyError> {
    if m == 0 {
        return Err(FamilyError::BadParameter("path parameter m must be >= 1".into()));
    }
    let template = expanded_graph(s, l)?;
    let n1 = template.graph.vertex_count() as u32;
    let m_base = template.m_base();
    let n_base = template.n_base();

    let mut is_glue = vec![false; n1 as usize];
    for e in 0..m_base {
        let (x, y) = template.middle(e);
        is_glue[x as usize] = true;
        is_glue[y as usize] = true;
    }
    let mut copy2_map = vec![0u32; n1 as usize];
    let mut copy2_inv = Vec::with_capacity((n1 - 2 * m_base) as usize);
    let mut next = n1;
    for v in 0..n1 {
        if is_glue[v as usize] {
            copy2_map[v as usize] = v;
        } else {
            copy2_map[v as usize] = next;
            copy2_inv.push(v);
            next += 1;
        }
    }
    let q_offset = next;
    let total = q_offset + n_base * m;

    let mut edges: Vec<(u32, u32)> = template.graph.edges().to_vec();
    let middle_ids: Vec<EdgeId> = (0..m_base).map(|e| template.middle_edge_id(e)).collect();
    let mut is_middle = vec![false; template.graph.edge_count()];
    for &id in &middle_ids {
        is_middle[id as usize] = true;
    }
    for (id, &(u, v)) in template.graph.edges().iter().enumerate() {
        if !is_middle[id] {
            edges.push((copy2_map[u as usize], copy2_map[v as usize]));
        }
    }
    for a in 0..n_base {
        let mut prev = template.root(a);
        for t in 0..m {
            let qv = q_offset + a * m + t;
            edges.push((prev, qv));
            prev = qv;
        }
    }
    let cycle_first = edges.len() as u32;
    for a in 0..n_base {
        let qa = q_offset + a * m + (m - 1);
        let qb = q_offset + ((a + 1) % n_base) * m + (m - 1);
        edges.push((qa, qb));
    }
    let cycle_edge_ids: Vec<EdgeId> = (cycle_first..cycle_first + n_base).collect();

    let mut graph = build_graph(total as usize, &edges).unwrap();
    graph.set_label("params", json!({"s": s, "l": l, "m": m}));
    graph.set_label(
        "cycle",
        json!((0..n_base)
            .map(|a| q_offset + a * m + (m - 1))
            .collect::<Vec<_>>()),
    );
    graph.set_label(
        "roots-1",
        json!((0..n_base).map(|a| template.root(a)).collect::<Vec<_>>()),
    );
    graph.set_label(
        "roots-2",
        json!((0..n_base)
            .map(|a| copy2_map[template.root(a) as usize])
            .collect::<Vec<_>>()),
    );
    Ok(Hslm {
        graph,
        template,
        m,
        n1,
        copy2_map,
        copy2_inv,
        q_offset,
        cycle_edge_ids,
    })
}

impl Hslm {
    pub fn s(&self) -> u32 {
        self.template.s()
    }

    pub fn l(&self) -> u32 {
        self.template.l()
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n_base(&self) -> u32 {
        self.template.n_base()
    }

    /// Copy-1 id of a template vertex (identity by construction).
    pub fn copy1(&self, local: VertexId) -> VertexId {
        local
    }

    pub fn copy2(&self, local: VertexId) -> VertexId {
        self.copy2_map[local as usize]
    }

    pub fn is_glue(&self, v: VertexId) -> bool {
        v < self.n1 && self.copy2_map[v as usize] == v
    }

    /// Template vertex and copy index (1 or 2) for a copied vertex; `None`
    /// for pendant-path and cycle vertices. Glue vertices report copy 1.
    pub fn local_of(&self, v: VertexId) -> Option<(u8, VertexId)> {
        if v < self.n1 {
            Some((1, v))
        } else if v < self.q_offset {
            Some((2, self.copy2_inv[(v - self.n1) as usize]))
        } else {
            None
        }
    }

    /// The same vertex in the other copy; glue vertices are their own
    /// mirror, pendant-path and cycle vertices have none.
    pub fn mirror(&self, v: VertexId) -> Option<VertexId> {
        let (copy, local) = self.local_of(v)?;
        Some(match copy {
            1 => self.copy2(local),
            _ => local,
        })
    }

    pub fn root1(&self, a: VertexId) -> VertexId {
        self.template.root(a)
    }

    pub fn root2(&self, a: VertexId) -> VertexId {
        self.copy2(self.template.root(a))
    }

    /// Pendant path of `a` from the vertex next to the root out to `q(a)`.
    pub fn q_path(&self, a: VertexId) -> Vec<VertexId> {
        (0..self.m).map(|t| self.q_offset + a * self.m + t).collect()
    }

    pub fn q(&self, a: VertexId) -> VertexId {
        self.q_offset + a * self.m + (self.m - 1)
    }

    pub fn is_cycle_vertex(&self, v: VertexId) -> bool {
        v >= self.q_offset && (v - self.q_offset) % self.m == self.m - 1
    }

    /// Cycle vertices in cycle order (ascending base vertex).
    pub fn cycle(&self) -> Vec<VertexId> {
        (0..self.n_base()).map(|a| self.q(a)).collect()
    }

    pub fn cycle_edge_ids(&self) -> &[EdgeId] {
        &self.cycle_edge_ids
    }

    pub fn region_of(&self, v: VertexId) -> Region {
        match self.local_of(v) {
            Some((_, local)) => Region::Sphere(self.template.ball_of(local)),
            None => {
                let a = (v - self.q_offset) / self.m;
                if self.is_cycle_vertex(v) {
                    Region::Cycle(a)
                } else {
                    Region::Sphere(a)
                }
            }
        }
    }

    /// Trees of both copies plus the pendant-path interior: the robber
    /// region that a cycle cop at `q(a)` cuts off from the rest of `C`.
    pub fn core(&self, a: VertexId) -> Vec<VertexId> {
        let mut out: Vec<VertexId> = self
            .template
            .tree_range(a)
            .flat_map(|local| {
                let c2 = self.copy2(local);
                std::iter::once(local).chain((c2 != local).then_some(c2))
            })
            .collect();
        out.extend((0..self.m - 1).map(|t| self.q_offset + a * self.m + t));
        out.sort_unstable();
        out
    }

    /// Path vertices of base edge `e` in the given copy, tail leaf first.
    pub fn path(&self, copy: u8, e: EdgeId) -> Vec<VertexId> {
        let p = self.template.path_vertices(e);
        match copy {
            1 => p,
            _ => p.into_iter().map(|v| self.copy2(v)).collect(),
        }
    }

    /// Shared middle-edge endpoints of base edge `e = (a -> b)`:
    /// tail-side vertex first.
    pub fn middle(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.template.middle(e)
    }

    /// Vertices within distance `< 2s` of the copy-`copy` root of `a` when
    /// the edge toward the in-subtree is removed.
    pub fn f_set(&self, copy: u8, a: VertexId) -> Vec<VertexId> {
        let root_local = self.template.root(a);
        let in_local = self.template.root_in(a);
        let (root, blocked) = match copy {
            1 => (self.copy1(root_local), self.copy1(in_local)),
            _ => (self.copy2(root_local), self.copy2(in_local)),
        };
        let radius = 2 * self.s();
        let mut dist = vec![INFINITY; self.graph.vertex_count()];
        let mut queue = VecDeque::new();
        dist[root as usize] = 0;
        queue.push_back(root);
        let mut out = vec![root];
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            if du + 1 >= radius {
                continue;
            }
            for &w in self.graph.neighbors(u) {
                if u == root && w == blocked {
                    continue;
                }
                if dist[w as usize] == INFINITY {
                    dist[w as usize] = du + 1;
                    out.push(w);
                    queue.push_back(w);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// BFS distances ignoring the cycle edges.
    pub fn h_minus_distances(&self, from: VertexId) -> Vec<u32> {
        let mut skip = vec![false; self.graph.edge_count()];
        for &e in &self.cycle_edge_ids {
            skip[e as usize] = true;
        }
        let mut dist = vec![INFINITY; self.graph.vertex_count()];
        let mut queue = VecDeque::new();
        dist[from as usize] = 0;
        queue.push_back(from);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            for (&w, &e) in self
                .graph
                .neighbors(u)
                .iter()
                .zip(self.graph.incident_edges(u))
            {
                if !skip[e as usize] && dist[w as usize] == INFINITY {
                    dist[w as usize] = du + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Both cops can clear the construction classically when the connecting
    /// paths dwarf everything a chase must traverse.
    pub fn supports_two_cop_capture(&self) -> bool {
        self.l() > self.n_base() + self.m + self.s()
    }

    /// The expansion trees are deep enough and the paths long enough for
    /// the root-hopping evasion argument.
    pub fn supports_evasion(&self) -> bool {
        self.m > 2 * self.s() + 1 && self.l() > 3 * self.s() + 1
    }
}
