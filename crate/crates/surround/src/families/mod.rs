//! Deterministic graph constructions used throughout the test batteries.
//!
//! Every constructor documents its vertex and edge index layout and returns
//! a typed wrapper exposing the layout, so strategies and tests can address
//! specific vertices without searching. The underlying `Graph` also carries
//! a label map describing vertex roles for JSON export.

mod hslm;

pub use hslm::{expanded_graph, full_construction, Expanded, Hslm, Region};

use crate::graph::{build_graph, Graph, Orientation, VertexId};
use crate::latin::{generate_mols, LatinError, LatinSquare};
use serde_json::json;
use std::ops::Range;
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FamilyError {
    #[error("complete bipartite classes must be non-empty")]
    EmptyClass,
    #[error("attach_leaves needs at least one leaf per vertex")]
    NoLeaves,
    #[error("line_complete needs n >= 2")]
    TooSmall,
    #[error("expansion parameters out of range: {0}")]
    BadParameter(String),
    #[error(transparent)]
    Latin(#[from] LatinError),
}

/// K_{a,b}. Class A is `0..a`, class B is `a..a+b`; edges are ordered
/// `(i, a+j)` with `i` outer and `j` inner.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Bipartite, FamilyError> {
    if a == 0 || b == 0 {
        return Err(FamilyError::EmptyClass);
    }
    let mut edges = Vec::with_capacity(a * b);
    for i in 0..a as u32 {
        for j in 0..b as u32 {
            edges.push((i, a as u32 + j));
        }
    }
    let mut graph = build_graph(a + b, &edges).unwrap();
    graph.set_label("class-a", json!((0..a).collect::<Vec<_>>()));
    graph.set_label("class-b", json!((a..a + b).collect::<Vec<_>>()));
    Ok(Bipartite { graph, a, b })
}

#[derive(Debug, Clone)]
pub struct Bipartite {
    pub graph: Graph,
    a: usize,
    b: usize,
}

impl Bipartite {
    pub fn class_a(&self) -> Range<u32> {
        0..self.a as u32
    }

    pub fn class_b(&self) -> Range<u32> {
        self.a as u32..(self.a + self.b) as u32
    }

    /// The class with fewer vertices (ties go to A).
    pub fn smaller_class(&self) -> Range<u32> {
        if self.a <= self.b {
            self.class_a()
        } else {
            self.class_b()
        }
    }

    pub fn larger_class(&self) -> Range<u32> {
        if self.a <= self.b {
            self.class_b()
        } else {
            self.class_a()
        }
    }
}

/// Attaches `l` pendant leaves to every vertex of the host graph.
///
/// Host vertices keep their ids; leaf `t` of host vertex `v` is
/// `n_host + v*l + t`. Host edges keep their ids; the leaf edge to that
/// leaf is `m_host + v*l + t`.
pub fn attach_leaves(host: &Graph, l: usize) -> Result<Leafy, FamilyError> {
    if l == 0 {
        return Err(FamilyError::NoLeaves);
    }
    let n = host.vertex_count();
    let mut edges: Vec<(u32, u32)> = host.edges().to_vec();
    for v in 0..n {
        for t in 0..l {
            edges.push((v as u32, (n + v * l + t) as u32));
        }
    }
    let mut graph = build_graph(n + n * l, &edges).unwrap();
    graph.set_label("host-vertices", json!((0..n).collect::<Vec<_>>()));
    graph.set_label("leaves-per-vertex", json!(l));
    Ok(Leafy {
        graph,
        host: host.clone(),
        l,
    })
}

#[derive(Debug, Clone)]
pub struct Leafy {
    pub graph: Graph,
    pub host: Graph,
    l: usize,
}

impl Leafy {
    pub fn leaf_count(&self) -> usize {
        self.l
    }

    pub fn host_vertices(&self) -> Range<u32> {
        0..self.host.vertex_count() as u32
    }

    pub fn is_host_vertex(&self, v: VertexId) -> bool {
        (v as usize) < self.host.vertex_count()
    }

    pub fn leaves_of(&self, v: VertexId) -> Range<u32> {
        let n = self.host.vertex_count();
        let start = (n + v as usize * self.l) as u32;
        start..start + self.l as u32
    }

    pub fn host_of_leaf(&self, leaf: VertexId) -> VertexId {
        debug_assert!(!self.is_host_vertex(leaf));
        ((leaf as usize - self.host.vertex_count()) / self.l) as u32
    }

    /// Edge ids of the pendant edges at host vertex `v`, aligned with
    /// `leaves_of(v)`.
    pub fn leaf_edges_of(&self, v: VertexId) -> Range<u32> {
        let start = (self.host.edge_count() + v as usize * self.l) as u32;
        start..start + self.l as u32
    }

    /// Host vertex seen as "where the robber effectively is": host vertices
    /// map to themselves, leaves to their support.
    pub fn project(&self, v: VertexId) -> VertexId {
        if self.is_host_vertex(v) {
            v
        } else {
            self.host_of_leaf(v)
        }
    }
}

/// Incidence graph of the k-1 squares: position (i,j) is `i*k + j`,
/// row i is `k*k + i`, and symbol class n of square s (1-based s) is
/// `k*k + k + (s-1)*k + n`. Each position connects to its row and to the
/// symbol class it carries in every square, giving a k-regular bipartite
/// graph on 2k^2 vertices.
pub fn mols_graph(k: u32) -> Result<MolsGraph, FamilyError> {
    let squares = generate_mols(k)?;
    let ku = k as usize;
    let n = 2 * ku * ku;
    let mut edges = Vec::new();
    for i in 0..k {
        for j in 0..k {
            let p = i * k + j;
            edges.push((p, k * k + i));
            for (si, sq) in squares.iter().enumerate() {
                let sym = sq.get(i, j);
                edges.push((p, k * k + k + si as u32 * k + sym));
            }
        }
    }
    let mut graph = build_graph(n, &edges).unwrap();
    graph.set_label("positions", json!((0..ku * ku).collect::<Vec<_>>()));
    graph.set_label("rows", json!((ku * ku..ku * ku + ku).collect::<Vec<_>>()));
    graph.set_label(
        "symbol-classes",
        json!((ku * ku + ku..2 * ku * ku).collect::<Vec<_>>()),
    );
    Ok(MolsGraph { graph, squares, k })
}

#[derive(Debug, Clone)]
pub struct MolsGraph {
    pub graph: Graph,
    pub squares: Vec<LatinSquare>,
    k: u32,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MolsVertex {
    /// Grid position (row, column).
    Position(u32, u32),
    /// Row vertex.
    Row(u32),
    /// Symbol class `n` of square `s` (0-based square index).
    SymbolClass(u32, u32),
}

impl MolsGraph {
    pub fn order(&self) -> u32 {
        self.k
    }

    pub fn position(&self, i: u32, j: u32) -> VertexId {
        i * self.k + j
    }

    pub fn row(&self, i: u32) -> VertexId {
        self.k * self.k + i
    }

    pub fn symbol_class(&self, square: u32, symbol: u32) -> VertexId {
        self.k * self.k + self.k + square * self.k + symbol
    }

    pub fn rows(&self) -> Range<u32> {
        self.k * self.k..self.k * self.k + self.k
    }

    pub fn classify(&self, v: VertexId) -> MolsVertex {
        let k = self.k;
        if v < k * k {
            MolsVertex::Position(v / k, v % k)
        } else if v < k * k + k {
            MolsVertex::Row(v - k * k)
        } else {
            let off = v - k * k - k;
            MolsVertex::SymbolClass(off / k, off % k)
        }
    }
}

/// Line graph of K_n: vertex ids follow the lexicographic pair order
/// (0,1), (0,2), ..., (n-2, n-1).
pub fn line_complete(n: usize) -> Result<LineComplete, FamilyError> {
    if n < 2 {
        return Err(FamilyError::TooSmall);
    }
    let base = crate::graph::complete_graph(n);
    let mut graph = base.line_graph();
    let pairs: Vec<(u32, u32)> = base.edges().to_vec();
    graph.set_label("pairs", json!(pairs));
    Ok(LineComplete {
        graph,
        pairs: base.edges().to_vec(),
        n,
    })
}

#[derive(Debug, Clone)]
pub struct LineComplete {
    pub graph: Graph,
    pairs: Vec<(u32, u32)>,
    n: usize,
}

impl LineComplete {
    pub fn base_n(&self) -> usize {
        self.n
    }

    pub fn pair(&self, v: VertexId) -> (u32, u32) {
        self.pairs[v as usize]
    }

    pub fn vertex_of_pair(&self, x: u32, y: u32) -> VertexId {
        let (a, b) = (x.min(y), x.max(y));
        self.pairs
            .iter()
            .position(|&p| p == (a, b))
            .expect("pair exists") as u32
    }
}

/// The 2^s-regular incidence graph together with an Eulerian orientation,
/// so every vertex has 2^{s-1} outgoing and 2^{s-1} incoming edges.
pub fn base_graph(s: u32) -> Result<BaseGraph, FamilyError> {
    if !(1..=4).contains(&s) {
        return Err(FamilyError::BadParameter(format!(
            "tree parameter s={s} outside 1..=4"
        )));
    }
    let mols = mols_graph(1 << s)?;
    let orientation = mols
        .graph
        .eulerian_orientation()
        .expect("incidence graph is connected and regular of even degree");
    Ok(BaseGraph { mols, orientation, s })
}

#[derive(Debug, Clone)]
pub struct BaseGraph {
    pub mols: MolsGraph,
    pub orientation: Orientation,
    s: u32,
}

impl BaseGraph {
    pub fn s(&self) -> u32 {
        self.s
    }

    pub fn graph(&self) -> &Graph {
        &self.mols.graph
    }
}
