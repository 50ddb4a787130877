//! Brute-force reference solver kept deliberately independent of the
//! main one: ordered cop tuples instead of canonical multisets, repeated
//! full sweeps instead of a frontier, no shared indexing code. Only fit
//! for tiny games; used to validate the optimized solver.

use crate::rules::{GameSpec, Side};
use crate::solver::Verdict;

pub struct NaiveSolution {
    win: Vec<bool>,
    n: u32,
    d: u32,
    verdict: Verdict,
}

impl NaiveSolution {
    fn tuple_index(&self, cops: &[u32]) -> usize {
        let mut idx = 0usize;
        for &c in cops.iter().rev() {
            idx = idx * self.d as usize + c as usize;
        }
        idx
    }

    fn state_index(&self, cops: &[u32], r: u32, side: Side) -> usize {
        (self.tuple_index(cops) * self.n as usize + r as usize) * 2 + side.index()
    }

    pub fn is_cop_win(&self, cops: &[u32], r: u32, side: Side) -> bool {
        self.win[self.state_index(cops, r, side)]
    }

    pub fn verdict(&self) -> Verdict {
        self.verdict
    }
}

/// Exhaustive fixpoint solve; panics if the game is beyond toy size.
pub fn naive_solve(spec: &GameSpec) -> NaiveSolution {
    let n = spec.graph().vertex_count() as u32;
    let d = spec.cop_domain_size();
    let k = spec.k();
    let tuples = (d as u64).pow(k);
    let states = tuples * n as u64 * 2;
    assert!(states <= 2_000_000, "naive solver is for toy games only");

    let mut win = vec![false; states as usize];
    let mut cops = vec![0u32; k as usize];
    let decode = |mut t: u64, cops: &mut [u32]| {
        for c in cops.iter_mut() {
            *c = (t % d as u64) as u32;
            t /= d as u64;
        }
    };
    let index = |t: u64, r: u32, side: Side| -> usize {
        ((t * n as u64 + r as u64) * 2 + side.index() as u64) as usize
    };

    loop {
        let mut changed = false;
        for t in 0..tuples {
            decode(t, &mut cops);
            for r in 0..n {
                for side in [Side::CopsToMove, Side::RobberToMove] {
                    let i = index(t, r, side);
                    if win[i] {
                        continue;
                    }
                    let won = if spec.is_cop_win_terminal(&cops, r, side) {
                        true
                    } else if side == Side::CopsToMove {
                        // Some joint cop move reaches a won state.
                        let lists: Vec<Vec<u32>> =
                            cops.iter().map(|&c| spec.cop_moves(c)).collect();
                        let mut picks = vec![0usize; k as usize];
                        let mut found = false;
                        'product: loop {
                            let mut t2 = 0u64;
                            for (i, l) in lists.iter().enumerate().rev() {
                                t2 = t2 * d as u64 + l[picks[i]] as u64;
                            }
                            if win[index(t2, r, Side::RobberToMove)] {
                                found = true;
                                break;
                            }
                            let mut pos = 0;
                            loop {
                                if pos == k as usize {
                                    break 'product;
                                }
                                picks[pos] += 1;
                                if picks[pos] < lists[pos].len() {
                                    break;
                                }
                                picks[pos] = 0;
                                pos += 1;
                            }
                        }
                        found
                    } else {
                        // Every legal robber move (none at all counts) is won.
                        spec.robber_moves(&cops, r)
                            .into_iter()
                            .all(|r2| win[index(t, r2, Side::CopsToMove)])
                    };
                    if won {
                        win[i] = true;
                        changed = true;
                    }
                }
            }
        }
        if !changed {
            break;
        }
    }

    let mut verdict = Verdict::RobberWin;
    for t in 0..tuples {
        decode(t, &mut cops);
        let ok = (0..n)
            .filter(|r| !spec.variant().is_restrictive() || spec.variant().cops_on_edges() || !cops.contains(r))
            .all(|r| win[index(t, r, Side::CopsToMove)]);
        if ok {
            verdict = Verdict::CopWin;
            break;
        }
    }

    NaiveSolution { win, n, d, verdict }
}
