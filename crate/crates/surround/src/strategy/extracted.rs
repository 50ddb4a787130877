//! Controllers that read their moves out of a solved game.
//!
//! The cop player heads for the won successor with the smallest
//! remaining distance; the robber player stays outside the cop-win set
//! while one exists and otherwise maximizes the remaining distance,
//! making it the optimal delayer. Both break remaining ties
//! lexicographically, so play is deterministic.

use crate::rules::Side;
use crate::solver::Solution;
use crate::strategy::{CopController, RobberController};
use std::sync::Arc;

fn for_each_ordered_product<F: FnMut(&[u32])>(lists: &[Vec<u32>], mut f: F) {
    let k = lists.len();
    let mut idx = vec![0usize; k];
    let mut pick = vec![0u32; k];
    loop {
        for i in 0..k {
            pick[i] = lists[i][idx[i]];
        }
        f(&pick);
        let mut i = 0;
        loop {
            if i == k {
                return;
            }
            idx[i] += 1;
            if idx[i] < lists[i].len() {
                break;
            }
            idx[i] = 0;
            i += 1;
        }
    }
}

#[derive(Clone)]
pub struct SolvedCops {
    sol: Arc<Solution>,
    apsp: Vec<Vec<u32>>,
}

impl SolvedCops {
    pub fn new(sol: Arc<Solution>) -> SolvedCops {
        let g = sol.spec().graph();
        let apsp = (0..g.vertex_count() as u32)
            .map(|v| g.distances_from(v))
            .collect();
        SolvedCops { sol, apsp }
    }

    fn chase_distance(&self, pos: u32, robber: u32) -> u32 {
        if self.sol.spec().variant().cops_on_edges() {
            let (a, b) = self.sol.spec().graph().endpoints(pos);
            self.apsp[a as usize][robber as usize].min(self.apsp[b as usize][robber as usize])
        } else {
            self.apsp[pos as usize][robber as usize]
        }
    }
}

impl CopController for SolvedCops {
    fn name(&self) -> String {
        "solved-cops".into()
    }

    fn place(&mut self) -> Vec<u32> {
        match self.sol.winning_start() {
            Some(start) => start.to_vec(),
            None => vec![0; self.sol.spec().k() as usize],
        }
    }

    fn step(&mut self, cops: &[u32], robber: u32) -> Vec<u32> {
        let spec = self.sol.spec();
        let lists: Vec<Vec<u32>> = cops.iter().map(|&c| spec.cop_moves(c)).collect();
        // Best won successor: smallest remaining rank, then lexicographic.
        let mut best: Option<(u32, Vec<u32>)> = None;
        // Fallback while losing: close in on the robber anyway.
        let mut fallback: Option<(u64, Vec<u32>)> = None;
        for_each_ordered_product(&lists, |pick| {
            if self.sol.is_cop_win(pick, robber, Side::RobberToMove) {
                let rank = self
                    .sol
                    .rank_of(pick, robber, Side::RobberToMove)
                    .unwrap_or(u32::MAX);
                let better = match &best {
                    None => true,
                    Some((r, p)) => rank < *r || (rank == *r && pick < p.as_slice()),
                };
                if better {
                    best = Some((rank, pick.to_vec()));
                }
            } else if best.is_none() {
                let score: u64 = pick
                    .iter()
                    .map(|&p| self.chase_distance(p, robber) as u64)
                    .sum();
                let better = match &fallback {
                    None => true,
                    Some((s, p)) => score < *s || (score == *s && pick < p.as_slice()),
                };
                if better {
                    fallback = Some((score, pick.to_vec()));
                }
            }
        });
        match best {
            Some((_, pick)) => pick,
            None => fallback.expect("some cop move always exists").1,
        }
    }
}

pub struct SolvedRobber {
    sol: Arc<Solution>,
}

impl SolvedRobber {
    pub fn new(sol: Arc<Solution>) -> SolvedRobber {
        SolvedRobber { sol }
    }

    /// Safe vertex (outside the cop-win set) with the smallest id, or the
    /// losing vertex that takes the cops longest.
    fn pick(&self, cops: &[u32], candidates: &[u32]) -> Option<u32> {
        let safe = candidates
            .iter()
            .find(|&&r| !self.sol.is_cop_win(cops, r, Side::CopsToMove));
        if let Some(&r) = safe {
            return Some(r);
        }
        candidates
            .iter()
            .map(|&r| {
                (
                    self.sol
                        .rank_of(cops, r, Side::CopsToMove)
                        .unwrap_or(u32::MAX),
                    std::cmp::Reverse(r),
                )
            })
            .zip(candidates.iter())
            .max_by_key(|(key, _)| *key)
            .map(|(_, &r)| r)
    }
}

impl RobberController for SolvedRobber {
    fn name(&self) -> String {
        "solved-robber".into()
    }

    fn place(&mut self, cops: &[u32]) -> Option<u32> {
        let mut sorted = cops.to_vec();
        sorted.sort_unstable();
        let placements = self.sol.spec().robber_placements(&sorted);
        self.pick(cops, &placements)
    }

    fn step(&mut self, cops: &[u32], robber: u32) -> u32 {
        let mut sorted = cops.to_vec();
        sorted.sort_unstable();
        let moves = self.sol.spec().robber_moves(&sorted, robber);
        self.pick(cops, &moves)
            .expect("non-terminal states always offer a robber move")
    }
}
