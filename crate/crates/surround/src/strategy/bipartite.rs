//! Hand-written optimal cop strategies on complete bipartite graphs.
//!
//! With classes A (size a) and B (size b), a <= b up to renaming:
//! capture needs min(2, a) cops (one per class, then walk onto the
//! robber), plain vertex surround needs b cops parked on the larger
//! class, restrictive vertex surround only a cops parked on the smaller
//! class (the robber must start opposite them and is born surrounded),
//! and both edge games need b cops on edges chosen so that every vertex
//! of either class can have its whole edge star occupied in one move.

use crate::families::Bipartite;
use crate::rules::Variant;
use crate::strategy::CopController;

pub struct BipartiteCops {
    bip: Bipartite,
    variant: Variant,
}

impl BipartiteCops {
    pub fn new(bip: Bipartite, variant: Variant) -> BipartiteCops {
        BipartiteCops { bip, variant }
    }

    /// Cops this strategy wants; matches the exact game number.
    pub fn cop_count(&self) -> u32 {
        let small = self.bip.smaller_class().len() as u32;
        let large = self.bip.larger_class().len() as u32;
        match self.variant {
            Variant::Classical => small.min(2),
            Variant::VertexSurround => large,
            Variant::VertexSurroundRestrictive => small,
            Variant::EdgeSurround | Variant::EdgeSurroundRestrictive => large,
        }
    }

    fn edge_of(&self, u: u32, v: u32) -> u32 {
        self.bip.graph.edge_id(u, v).expect("bipartite edge")
    }

    /// Initial edge post of edge cop j: connects small-class vertex
    /// j mod a with large-class vertex j, so each large vertex owns a
    /// cop and small vertices share them round-robin.
    fn edge_post(&self, j: u32) -> u32 {
        let small: Vec<u32> = self.bip.smaller_class().collect();
        let large: Vec<u32> = self.bip.larger_class().collect();
        self.edge_of(small[(j as usize) % small.len()], large[j as usize])
    }
}

impl CopController for BipartiteCops {
    fn name(&self) -> String {
        format!("bipartite-cops/{}", self.variant)
    }

    fn place(&mut self) -> Vec<u32> {
        let small: Vec<u32> = self.bip.smaller_class().collect();
        let large: Vec<u32> = self.bip.larger_class().collect();
        match self.variant {
            Variant::Classical => {
                if small.len() == 1 {
                    // The lone opposite vertex dominates everything.
                    vec![small[0]]
                } else {
                    vec![small[0], large[0]]
                }
            }
            Variant::VertexSurround => large,
            Variant::VertexSurroundRestrictive => small,
            Variant::EdgeSurround | Variant::EdgeSurroundRestrictive => {
                (0..large.len() as u32).map(|j| self.edge_post(j)).collect()
            }
        }
    }

    fn step(&mut self, cops: &[u32], robber: u32) -> Vec<u32> {
        let small: Vec<u32> = self.bip.smaller_class().collect();
        let large: Vec<u32> = self.bip.larger_class().collect();
        let robber_in_small = small.contains(&robber);
        match self.variant {
            Variant::Classical => {
                // Whichever cop stands opposite the robber walks onto him.
                let mut next = cops.to_vec();
                for (i, &c) in cops.iter().enumerate() {
                    let cop_in_small = small.contains(&c);
                    if cop_in_small != robber_in_small {
                        next[i] = robber;
                        break;
                    }
                }
                next
            }
            Variant::VertexSurround => {
                if robber_in_small {
                    // Already surrounded by the parked cops.
                    cops.to_vec()
                } else {
                    // Cops 0..a leave their large-class posts to blanket
                    // the small class; the rest keep the large class.
                    let mut next = cops.to_vec();
                    for (i, &target) in small.iter().enumerate() {
                        next[i] = target;
                    }
                    next
                }
            }
            Variant::VertexSurroundRestrictive => cops.to_vec(),
            Variant::EdgeSurround | Variant::EdgeSurroundRestrictive => {
                let a = small.len();
                if robber_in_small {
                    // Every cop pivots its edge onto the robber's star.
                    (0..cops.len())
                        .map(|j| self.edge_of(robber, large[j]))
                        .collect()
                } else {
                    // One cop per small vertex pivots onto the robber's
                    // star: residue class representatives, with the
                    // robber's own cop staying in place.
                    let j_rob = large.iter().position(|&v| v == robber).unwrap();
                    let mut next = cops.to_vec();
                    for i in 0..a {
                        let j = if i == j_rob % a {
                            j_rob
                        } else {
                            // Smallest cop whose post touches small[i].
                            (0..cops.len()).find(|&j| j % a == i).unwrap()
                        };
                        next[j] = self.edge_of(small[i], robber);
                    }
                    next
                }
            }
        }
    }
}
