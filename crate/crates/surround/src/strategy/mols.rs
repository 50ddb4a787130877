//! Cop strategies on the Latin-squares incidence graphs.
//!
//! The incidence graph of k-1 pairwise orthogonal order-k squares has
//! three vertex classes: grid positions, rows, and symbol classes. Every
//! position touches its row and one class per square; every row and
//! every symbol class touches exactly k positions, one per row. Parking
//! one cop per row therefore dominates the whole position class, and
//! because each symbol class meets every row once, the same k cops can
//! drop onto the full neighborhood of any symbol-class vertex in a
//! single move.

use crate::families::{MolsGraph, MolsVertex};
use crate::graph::VertexId;
use crate::strategy::CopController;

/// Classical pursuit with one cop per row: a robber on a position is
/// captured by his row's cop immediately, and a robber on a symbol
/// class has his k position neighbors occupied in one move, after which
/// any of those cops walks onto him.
pub struct SquaresCops {
    mols: MolsGraph,
    /// With a spare cop the same plan surrounds a restrictive vertex
    /// robber: the spare pushes a position robber off his vertex, and
    /// his only legal exits are symbol classes.
    spare: bool,
}

impl SquaresCops {
    pub fn classical(mols: MolsGraph) -> SquaresCops {
        SquaresCops { mols, spare: false }
    }

    pub fn restrictive_vertex(mols: MolsGraph) -> SquaresCops {
        SquaresCops { mols, spare: true }
    }

    pub fn graph(&self) -> &crate::graph::Graph {
        &self.mols.graph
    }

    pub fn cop_count(&self) -> u32 {
        self.mols.order() + u32::from(self.spare)
    }

    /// The position of symbol `n` of square `s` in row `i`.
    fn part_position(&self, s: u32, n: u32, i: u32) -> VertexId {
        let j = (0..self.mols.order())
            .find(|&j| self.mols.squares[s as usize].get(i, j) == n)
            .expect("each symbol appears once per row");
        self.mols.position(i, j)
    }

    fn rows_home(&self, cops: &[u32]) -> bool {
        (0..self.mols.order()).all(|i| cops[i as usize] == self.mols.row(i))
    }

    /// Defensive fallback for states the plan never reaches: the nearest
    /// cop advances along a shortest path.
    fn chase(&self, cops: &[u32], robber: u32) -> Vec<u32> {
        let dist = self.mols.graph.distances_from(robber);
        let mut next = cops.to_vec();
        let (i, &c) = cops
            .iter()
            .enumerate()
            .min_by_key(|&(i, &c)| (dist[c as usize], i))
            .unwrap();
        if dist[c as usize] > 0 {
            next[i] = self
                .mols
                .graph
                .neighbors(c)
                .iter()
                .copied()
                .filter(|&w| dist[w as usize] < dist[c as usize])
                .min()
                .unwrap();
        }
        next
    }
}

impl CopController for SquaresCops {
    fn name(&self) -> String {
        if self.spare {
            "mols-cops-vr".into()
        } else {
            "mols-cops-classical".into()
        }
    }

    fn place(&mut self) -> Vec<u32> {
        let mut cops: Vec<u32> = (0..self.mols.order()).map(|i| self.mols.row(i)).collect();
        if self.spare {
            cops.push(self.mols.row(0));
        }
        cops
    }

    fn step(&mut self, cops: &[u32], robber: u32) -> Vec<u32> {
        let k = self.mols.order();
        match self.mols.classify(robber) {
            MolsVertex::Position(i, _) => {
                if self.spare {
                    // Row cops hold their posts; the spare walks up and
                    // eventually stands on the robber's vertex, forcing
                    // him onto a symbol class.
                    let mut next = cops.to_vec();
                    let spare = k as usize;
                    let dist = self.mols.graph.distances_from(robber);
                    let here = cops[spare];
                    if dist[here as usize] > 0 {
                        next[spare] = self
                            .mols
                            .graph
                            .neighbors(here)
                            .iter()
                            .copied()
                            .filter(|&w| dist[w as usize] < dist[here as usize])
                            .min()
                            .unwrap();
                    }
                    next
                } else if cops[i as usize] == self.mols.row(i) {
                    let mut next = cops.to_vec();
                    next[i as usize] = robber;
                    next
                } else {
                    self.chase(cops, robber)
                }
            }
            MolsVertex::SymbolClass(s, n) => {
                let targets: Vec<u32> = (0..k).map(|i| self.part_position(s, n, i)).collect();
                if self.rows_home(cops) {
                    // One cop per row drops onto the robber's class, one
                    // position each; that covers his whole neighborhood.
                    let mut next = cops.to_vec();
                    for (i, &t) in targets.iter().enumerate() {
                        next[i] = t;
                    }
                    next
                } else if !self.spare && targets.iter().all(|t| cops.contains(t)) {
                    // Already surrounded; finish by stepping onto him.
                    let mut next = cops.to_vec();
                    let i = cops.iter().position(|c| targets.contains(c)).unwrap();
                    next[i] = robber;
                    next
                } else {
                    self.chase(cops, robber)
                }
            }
            MolsVertex::Row(_) => self.chase(cops, robber),
        }
    }
}
