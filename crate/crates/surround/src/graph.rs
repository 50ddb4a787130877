//! Undirected simple graphs with stable vertex and edge ids.
//!
//! Vertices are `0..n`. Edge ids follow insertion order, so constructions
//! that build edge lists deterministically get reproducible edge ids. All
//! derived structure (adjacency, incidence, edge adjacency) is precomputed
//! because the game solver hammers on it.

use serde::{Deserialize, Serialize};
use std::collections::VecDeque;
use std::fmt::Write as _;
use thiserror::Error;

pub type VertexId = u32;
pub type EdgeId = u32;

/// Sentinel distance for unreachable vertices.
pub const INFINITY: u32 = u32::MAX;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("edge ({0}, {1}) has an endpoint outside 0..{2}")]
    EndpointOutOfRange(u32, u32, usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(u32),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(u32, u32),
    #[error("graph is not connected")]
    NotConnected,
    #[error("vertex {0} has odd degree {1}; an Eulerian orientation needs all degrees even")]
    OddDegree(u32, u32),
    #[error("invalid graph JSON: {0}")]
    Json(String),
}

pub type Labels = serde_json::Map<String, serde_json::Value>;

#[derive(Debug, Clone)]
pub struct Graph {
    n: usize,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<VertexId>>,
    vertex_edges: Vec<Vec<EdgeId>>,
    edge_adj: Vec<Vec<EdgeId>>,
    labels: Labels,
}

/// Validates endpoints, forbids self-loops and duplicates, and builds all
/// incidence structure. Edge endpoints are normalized to `(min, max)` but
/// keep their insertion order as ids.
pub fn build_graph(n: usize, edges: &[(u32, u32)]) -> Result<Graph, GraphError> {
    let mut norm = Vec::with_capacity(edges.len());
    for &(a, b) in edges {
        if a as usize >= n || b as usize >= n {
            return Err(GraphError::EndpointOutOfRange(a, b, n));
        }
        if a == b {
            return Err(GraphError::SelfLoop(a));
        }
        norm.push((a.min(b), a.max(b)));
    }
    let mut seen = norm.clone();
    seen.sort_unstable();
    for w in seen.windows(2) {
        if w[0] == w[1] {
            return Err(GraphError::DuplicateEdge(w[0].0, w[0].1));
        }
    }

    let mut adj = vec![Vec::new(); n];
    let mut vertex_edges = vec![Vec::new(); n];
    for (id, &(u, v)) in norm.iter().enumerate() {
        adj[u as usize].push(v);
        adj[v as usize].push(u);
        vertex_edges[u as usize].push(id as EdgeId);
        vertex_edges[v as usize].push(id as EdgeId);
    }
    for v in 0..n {
        let mut order: Vec<usize> = (0..adj[v].len()).collect();
        order.sort_unstable_by_key(|&i| adj[v][i]);
        adj[v] = order.iter().map(|&i| adj[v][i]).collect();
        vertex_edges[v] = order.iter().map(|&i| vertex_edges[v][i]).collect();
    }

    let mut edge_adj = vec![Vec::new(); norm.len()];
    for (id, &(u, v)) in norm.iter().enumerate() {
        for &w in [u, v].iter() {
            for &e in &vertex_edges[w as usize] {
                if e as usize != id {
                    edge_adj[id].push(e);
                }
            }
        }
        edge_adj[id].sort_unstable();
        edge_adj[id].dedup();
    }

    Ok(Graph {
        n,
        edges: norm,
        adj,
        vertex_edges,
        edge_adj,
        labels: Labels::new(),
    })
}

impl Graph {
    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> (VertexId, VertexId) {
        self.edges[e as usize]
    }

    /// Neighbors of `v`, sorted ascending.
    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v as usize]
    }

    /// Edge ids incident to `v`, sorted by the neighbor at the far end.
    pub fn incident_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.vertex_edges[v as usize]
    }

    /// Edge ids sharing an endpoint with `e`, sorted ascending.
    pub fn adjacent_edges(&self, e: EdgeId) -> &[EdgeId] {
        &self.edge_adj[e as usize]
    }

    pub fn degree(&self, v: VertexId) -> u32 {
        self.adj[v as usize].len() as u32
    }

    pub fn degrees(&self) -> Vec<u32> {
        (0..self.n).map(|v| self.adj[v].len() as u32).collect()
    }

    pub fn min_degree(&self) -> u32 {
        self.degrees().into_iter().min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> u32 {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        self.adj[u as usize].binary_search(&v).is_ok()
    }

    /// Edge id for the pair `(u, v)` if present.
    pub fn edge_id(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        let pos = self.adj[u as usize].binary_search(&v).ok()?;
        Some(self.vertex_edges[u as usize][pos])
    }

    pub fn labels(&self) -> &Labels {
        &self.labels
    }

    pub fn set_label(&mut self, key: &str, value: serde_json::Value) {
        self.labels.insert(key.to_string(), value);
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let dist = self.distances_from(0);
        dist.iter().all(|&d| d != INFINITY)
    }

    /// BFS distances from `start`; unreachable vertices get `INFINITY`.
    pub fn distances_from(&self, start: VertexId) -> Vec<u32> {
        let mut dist = vec![INFINITY; self.n];
        let mut queue = VecDeque::new();
        dist[start as usize] = 0;
        queue.push_back(start);
        while let Some(u) = queue.pop_front() {
            let du = dist[u as usize];
            for &w in &self.adj[u as usize] {
                if dist[w as usize] == INFINITY {
                    dist[w as usize] = du + 1;
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    /// Length of a shortest cycle, or `None` for forests.
    ///
    /// One BFS per root; a non-tree edge seen from root `s` witnesses a
    /// closed walk of length `dist[u] + dist[w] + 1`, which always contains
    /// a cycle no longer than itself, and for some root the witness is a
    /// shortest cycle. The minimum over roots is therefore exact.
    pub fn girth(&self) -> Option<u32> {
        let mut best: u32 = INFINITY;
        let mut dist = vec![INFINITY; self.n];
        let mut via_edge = vec![INFINITY; self.n];
        for s in 0..self.n as u32 {
            dist.fill(INFINITY);
            via_edge.fill(INFINITY);
            let mut queue = VecDeque::new();
            dist[s as usize] = 0;
            queue.push_back(s);
            while let Some(u) = queue.pop_front() {
                let du = dist[u as usize];
                if du.saturating_mul(2) >= best {
                    continue;
                }
                for (&w, &e) in self.adj[u as usize]
                    .iter()
                    .zip(&self.vertex_edges[u as usize])
                {
                    if e == via_edge[u as usize] {
                        continue;
                    }
                    if dist[w as usize] == INFINITY {
                        dist[w as usize] = du + 1;
                        via_edge[w as usize] = e;
                        queue.push_back(w);
                    } else {
                        best = best.min(du + dist[w as usize] + 1);
                    }
                }
            }
            if best == 3 {
                return Some(3);
            }
        }
        (best != INFINITY).then_some(best)
    }

    /// Degeneracy and a corresponding elimination order (repeatedly remove
    /// a minimum-degree vertex; ties broken by smallest id).
    pub fn degeneracy(&self) -> (u32, Vec<VertexId>) {
        if self.n == 0 {
            return (0, Vec::new());
        }
        let mut deg: Vec<u32> = self.degrees();
        let mut removed = vec![false; self.n];
        let mut order = Vec::with_capacity(self.n);
        let mut degeneracy = 0;
        for _ in 0..self.n {
            let v = (0..self.n)
                .filter(|&v| !removed[v])
                .min_by_key(|&v| (deg[v], v))
                .unwrap();
            degeneracy = degeneracy.max(deg[v]);
            removed[v] = true;
            order.push(v as VertexId);
            for &w in &self.adj[v] {
                if !removed[w as usize] {
                    deg[w as usize] -= 1;
                }
            }
        }
        (degeneracy, order)
    }

    /// Line graph: vertex `i` of the result corresponds to edge `i` of
    /// `self`; two vertices are adjacent when the edges share an endpoint.
    pub fn line_graph(&self) -> Graph {
        let m = self.edges.len();
        let mut edges = Vec::new();
        for e in 0..m as u32 {
            for &f in &self.edge_adj[e as usize] {
                if f > e {
                    edges.push((e, f));
                }
            }
        }
        build_graph(m, &edges).expect("line graph construction is always valid")
    }

    /// Orients every edge along an Eulerian circuit, so each vertex ends up
    /// with in-degree equal to out-degree. Requires a connected graph with
    /// all degrees even.
    pub fn eulerian_orientation(&self) -> Result<Orientation, GraphError> {
        for v in 0..self.n {
            if self.adj[v].len() % 2 != 0 {
                return Err(GraphError::OddDegree(v as u32, self.adj[v].len() as u32));
            }
        }
        if !self.is_connected() {
            return Err(GraphError::NotConnected);
        }
        let m = self.edges.len();
        let mut forward = vec![false; m];
        if m == 0 {
            return Ok(Orientation::from_forward(self, forward));
        }

        // Hierholzer: walk unused edges greedily, splicing sub-circuits.
        let mut used = vec![false; m];
        let mut cursor = vec![0usize; self.n];
        let mut stack: Vec<VertexId> = vec![self.edges[0].0];
        let mut stack_edges: Vec<Option<EdgeId>> = vec![None];
        let mut circuit_edges: Vec<(EdgeId, VertexId)> = Vec::with_capacity(m);
        while let Some(&v) = stack.last() {
            let vi = v as usize;
            let mut advanced = false;
            while cursor[vi] < self.vertex_edges[vi].len() {
                let e = self.vertex_edges[vi][cursor[vi]];
                cursor[vi] += 1;
                if !used[e as usize] {
                    used[e as usize] = true;
                    let (a, b) = self.edges[e as usize];
                    let w = if a == v { b } else { a };
                    stack.push(w);
                    stack_edges.push(Some(e));
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                stack.pop();
                if let Some(Some(e)) = stack_edges.pop() {
                    // Edge e was traversed from the new stack top to v.
                    circuit_edges.push((e, v));
                }
            }
        }
        debug_assert_eq!(circuit_edges.len(), m, "Eulerian circuit must cover all edges");
        // circuit_edges is the circuit reversed; orientation only needs a
        // consistent direction per edge, and reversing a circuit still
        // balances in/out degrees, so record directions as traversed.
        for &(e, head) in &circuit_edges {
            let (_, b) = self.edges[e as usize];
            forward[e as usize] = head == b;
        }
        Ok(Orientation::from_forward(self, forward))
    }

    /// Serializes to the interchange schema `{"n", "edges", "labels"}`.
    pub fn to_json(&self) -> serde_json::Value {
        let repr = GraphRepr {
            n: self.n,
            edges: self.edges.clone(),
            labels: if self.labels.is_empty() {
                None
            } else {
                Some(self.labels.clone())
            },
        };
        serde_json::to_value(repr).expect("graph serialization cannot fail")
    }

    pub fn from_json(value: &serde_json::Value) -> Result<Graph, GraphError> {
        let repr: GraphRepr =
            serde_json::from_value(value.clone()).map_err(|e| GraphError::Json(e.to_string()))?;
        let mut g = build_graph(repr.n, &repr.edges)?;
        if let Some(labels) = repr.labels {
            g.labels = labels;
        }
        Ok(g)
    }

    /// GraphViz dot output; vertex roles from the labels map become node
    /// comments so layouts stay readable.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "graph {name} {{");
        for v in 0..self.n {
            let _ = writeln!(out, "  v{v};");
        }
        for &(u, v) in &self.edges {
            let _ = writeln!(out, "  v{u} -- v{v};");
        }
        if !self.labels.is_empty() {
            for (key, value) in &self.labels {
                let _ = writeln!(out, "  // {key}: {value}");
            }
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct GraphRepr {
    n: usize,
    edges: Vec<(u32, u32)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    labels: Option<Labels>,
}

/// A direction assignment for every edge of a graph.
#[derive(Debug, Clone)]
pub struct Orientation {
    /// `forward[e]` means edge `e = (u, v)` with `u < v` is oriented `u -> v`.
    forward: Vec<bool>,
    out: Vec<Vec<VertexId>>,
    in_: Vec<Vec<VertexId>>,
}

impl Orientation {
    fn from_forward(g: &Graph, forward: Vec<bool>) -> Orientation {
        let mut out = vec![Vec::new(); g.n];
        let mut in_ = vec![Vec::new(); g.n];
        for (e, &(u, v)) in g.edges.iter().enumerate() {
            let (tail, head) = if forward[e] { (u, v) } else { (v, u) };
            out[tail as usize].push(head);
            in_[head as usize].push(tail);
        }
        for v in 0..g.n {
            out[v].sort_unstable();
            in_[v].sort_unstable();
        }
        Orientation { forward, out, in_ }
    }

    pub fn is_forward(&self, e: EdgeId) -> bool {
        self.forward[e as usize]
    }

    /// Heads of edges oriented out of `v`, sorted ascending.
    pub fn out_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.out[v as usize]
    }

    /// Tails of edges oriented into `v`, sorted ascending.
    pub fn in_neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.in_[v as usize]
    }

    pub fn out_degree(&self, v: VertexId) -> u32 {
        self.out[v as usize].len() as u32
    }

    pub fn in_degree(&self, v: VertexId) -> u32 {
        self.in_[v as usize].len() as u32
    }
}

/// Cycle graph on `n >= 3` vertices; handy in tests and generators.
pub fn cycle_graph(n: usize) -> Graph {
    assert!(n >= 3);
    let edges: Vec<(u32, u32)> = (0..n as u32).map(|i| (i, (i + 1) % n as u32)).collect();
    build_graph(n, &edges).unwrap()
}

/// Complete graph on `n` vertices with lexicographic edge order.
pub fn complete_graph(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            edges.push((u, v));
        }
    }
    build_graph(n, &edges).unwrap()
}

/// Path graph on `n >= 1` vertices.
pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<(u32, u32)> = (1..n as u32).map(|i| (i - 1, i)).collect();
    build_graph(n, &edges).unwrap()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn build_rejects_bad_edges() {
        assert!(matches!(
            build_graph(3, &[(0, 3)]),
            Err(GraphError::EndpointOutOfRange(0, 3, 3))
        ));
        assert!(matches!(build_graph(3, &[(1, 1)]), Err(GraphError::SelfLoop(1))));
        assert!(matches!(
            build_graph(3, &[(0, 1), (1, 0)]),
            Err(GraphError::DuplicateEdge(0, 1))
        ));
    }

    #[test]
    fn adjacency_and_incidence_are_sorted_and_consistent() {
        let g = build_graph(4, &[(2, 3), (0, 2), (0, 1), (1, 2)]).unwrap();
        assert_eq!(g.neighbors(2), &[0, 1, 3]);
        assert_eq!(g.incident_edges(2), &[1, 3, 0]);
        for v in 0..4u32 {
            for (&w, &e) in g.neighbors(v).iter().zip(g.incident_edges(v)) {
                let (a, b) = g.endpoints(e);
                assert!((a == v && b == w) || (a == w && b == v));
            }
        }
        assert_eq!(g.edge_id(0, 2), Some(1));
        assert_eq!(g.edge_id(0, 3), None);
    }

    #[test]
    fn connectivity_and_distances() {
        let g = build_graph(5, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        assert!(!g.is_connected());
        let d = g.distances_from(0);
        assert_eq!(d, vec![0, 1, 2, INFINITY, INFINITY]);
        assert!(path_graph(4).is_connected());
    }

    // Independent girth oracle: remove each edge, then the shortest cycle
    // through it is 1 + dist(endpoints) in the remaining graph.
    fn girth_oracle(g: &Graph) -> Option<u32> {
        let mut best = INFINITY;
        for e in 0..g.edge_count() {
            let (u, v) = g.endpoints(e as u32);
            let edges: Vec<(u32, u32)> = g
                .edges()
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != e)
                .map(|(_, &uv)| uv)
                .collect();
            let h = build_graph(g.vertex_count(), &edges).unwrap();
            let d = h.distances_from(u)[v as usize];
            if d != INFINITY {
                best = best.min(d + 1);
            }
        }
        (best != INFINITY).then_some(best)
    }

    #[test]
    fn girth_matches_oracle_on_fixed_graphs() {
        let cases: Vec<Graph> = vec![
            cycle_graph(3),
            cycle_graph(4),
            cycle_graph(8),
            complete_graph(5),
            path_graph(6),
            build_graph(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 3)]).unwrap(),
            // Petersen graph, girth 5.
            build_graph(
                10,
                &[
                    (0, 1),
                    (1, 2),
                    (2, 3),
                    (3, 4),
                    (4, 0),
                    (0, 5),
                    (1, 6),
                    (2, 7),
                    (3, 8),
                    (4, 9),
                    (5, 7),
                    (7, 9),
                    (9, 6),
                    (6, 8),
                    (8, 5),
                ],
            )
            .unwrap(),
        ];
        let expected = [Some(3), Some(4), Some(8), Some(3), None, Some(3), Some(5)];
        for (g, want) in cases.iter().zip(expected) {
            assert_eq!(g.girth(), want);
            assert_eq!(g.girth(), girth_oracle(g));
        }
    }

    #[test]
    fn degeneracy_on_fixed_graphs() {
        assert_eq!(path_graph(5).degeneracy().0, 1);
        assert_eq!(cycle_graph(6).degeneracy().0, 2);
        assert_eq!(complete_graph(4).degeneracy().0, 3);
        // Independent check for K_{3,3} by exhaustive induced-subgraph scan:
        // degeneracy = max over induced subgraphs of their min degree.
        let k33 = build_graph(
            6,
            &[(0, 3), (0, 4), (0, 5), (1, 3), (1, 4), (1, 5), (2, 3), (2, 4), (2, 5)],
        )
        .unwrap();
        let mut oracle = 0u32;
        for mask in 1u32..64 {
            let verts: Vec<u32> = (0..6).filter(|v| mask & (1 << v) != 0).collect();
            let min_deg = verts
                .iter()
                .map(|&v| {
                    k33.neighbors(v)
                        .iter()
                        .filter(|&&w| mask & (1 << w) != 0)
                        .count() as u32
                })
                .min()
                .unwrap();
            oracle = oracle.max(min_deg);
        }
        assert_eq!(oracle, 3);
        assert_eq!(k33.degeneracy().0, 3);
    }

    #[test]
    fn line_graph_of_k4_is_octahedron() {
        let lg = complete_graph(4).line_graph();
        assert_eq!(lg.vertex_count(), 6);
        assert_eq!(lg.edge_count(), 12);
        assert!(lg.degrees().iter().all(|&d| d == 4));
        // Octahedron: complement is a perfect matching.
        for v in 0..6u32 {
            let non: Vec<u32> = (0..6)
                .filter(|&w| w != v && !lg.has_edge(v, w))
                .collect();
            assert_eq!(non.len(), 1);
        }
    }

    #[test]
    fn line_graph_degree_law() {
        let g = build_graph(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let lg = g.line_graph();
        for e in 0..g.edge_count() as u32 {
            let (u, v) = g.endpoints(e);
            assert_eq!(lg.degree(e), g.degree(u) + g.degree(v) - 2);
        }
    }

    #[test]
    fn eulerian_orientation_balances_degrees() {
        for g in [cycle_graph(5), complete_graph(5), cycle_graph(8)] {
            let o = g.eulerian_orientation().unwrap();
            for v in 0..g.vertex_count() as u32 {
                assert_eq!(o.out_degree(v), g.degree(v) / 2);
                assert_eq!(o.in_degree(v), g.degree(v) / 2);
                assert_eq!(o.out_degree(v) + o.in_degree(v), g.degree(v));
            }
            // Every edge oriented exactly once, consistently.
            for e in 0..g.edge_count() as u32 {
                let (u, v) = g.endpoints(e);
                let (tail, head) = if o.is_forward(e) { (u, v) } else { (v, u) };
                assert!(o.out_neighbors(tail).contains(&head));
                assert!(o.in_neighbors(head).contains(&tail));
            }
        }
    }

    #[test]
    fn eulerian_orientation_rejects_odd_degree_and_disconnected() {
        assert!(matches!(
            complete_graph(4).eulerian_orientation(),
            Err(GraphError::OddDegree(_, 3))
        ));
        let two_triangles =
            build_graph(6, &[(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert!(matches!(
            two_triangles.eulerian_orientation(),
            Err(GraphError::NotConnected)
        ));
    }

    #[test]
    fn json_roundtrip_preserves_structure_and_labels() {
        let mut g = build_graph(3, &[(0, 1), (1, 2)]).unwrap();
        g.set_label("ends", serde_json::json!([0, 2]));
        let j = g.to_json();
        let h = Graph::from_json(&j).unwrap();
        assert_eq!(h.vertex_count(), 3);
        assert_eq!(h.edges(), g.edges());
        assert_eq!(h.labels(), g.labels());
        assert!(Graph::from_json(&serde_json::json!({"n": 2, "edges": [[0, 5]]})).is_err());
    }

    #[test]
    fn dot_output_lists_all_edges() {
        let g = path_graph(3);
        let dot = g.to_dot("p3");
        assert!(dot.starts_with("graph p3 {"));
        assert!(dot.contains("v0 -- v1;"));
        assert!(dot.contains("v1 -- v2;"));
    }
}
