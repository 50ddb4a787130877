//! Exact game solving by backward induction over the full state space.
//!
//! A state is (cop configuration, robber vertex, side to move). Cop
//! configurations are multisets indexed by [`multiset::MultisetIndexer`];
//! the state index packs (configuration rank, robber, side). The solver
//! seeds every terminal cop win, then grows the cop-win set backwards:
//! a cops-to-move state is won as soon as one cop move reaches a won
//! state, a robber-to-move state once every legal robber move does
//! (tracked with a countdown per state). The FIFO frontier yields for
//! every won state the number of half-moves the cops need against best
//! play, which is what strategy extraction consumes.

pub mod multiset;
pub mod naive;
pub mod search;
pub mod suite;

use crate::bits::BitSet;
use crate::graph::VertexId;
use crate::rules::{GameSpec, Side};
use multiset::MultisetIndexer;
use serde::{Deserialize, Serialize};
use std::collections::VecDeque;
use std::time::Instant;
use thiserror::Error;

/// Who wins with optimal play.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    CopWin,
    RobberWin,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("{states} states exceed the solve budget of {budget}; raise the budget or lower k")]
    StateSpace { states: u64, budget: u64 },
    #[error("{states} states exceed the addressable limit of this solver")]
    AddressLimit { states: u64 },
}

#[derive(Debug, Clone)]
pub struct SolveOptions {
    /// Hard cap on the number of states the solver may allocate.
    pub budget_states: u64,
    /// Record per-state minimax distances (needed to extract strategies).
    pub compute_ranks: bool,
    /// Precompute configuration successor lists when their total size
    /// stays under this many entries; otherwise successors are
    /// re-enumerated on the fly.
    pub csr_pair_cap: u64,
}

impl Default for SolveOptions {
    fn default() -> SolveOptions {
        SolveOptions {
            budget_states: 200_000_000,
            compute_ranks: true,
            csr_pair_cap: 300_000_000,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct SolveStats {
    pub configs: u64,
    pub states: u64,
    pub seeds: u64,
    pub cop_win_states: u64,
    pub max_rank: u32,
    pub used_config_csr: bool,
    pub millis: u128,
}

/// Compact row-per-position adjacency used for cop moves.
struct Csr {
    offsets: Vec<u64>,
    items: Vec<u32>,
}

impl Csr {
    fn row(&self, i: u32) -> &[u32] {
        let lo = self.offsets[i as usize] as usize;
        let hi = self.offsets[i as usize + 1] as usize;
        &self.items[lo..hi]
    }
}

/// Full solve result for one (graph, variant, k).
pub struct Solution {
    spec: GameSpec,
    indexer: MultisetIndexer,
    win: BitSet,
    ranks: Option<Vec<u32>>,
    verdict: Verdict,
    winning_start: Option<Vec<u32>>,
    stats: SolveStats,
}

impl Solution {
    pub fn spec(&self) -> &GameSpec {
        &self.spec
    }

    pub fn indexer(&self) -> &MultisetIndexer {
        &self.indexer
    }

    pub fn verdict(&self) -> Verdict {
        self.verdict
    }

    /// A winning initial cop configuration (lowest rank), if any.
    pub fn winning_start(&self) -> Option<&[u32]> {
        self.winning_start.as_deref()
    }

    pub fn stats(&self) -> &SolveStats {
        &self.stats
    }

    fn state_index(&self, config_rank: u64, r: VertexId, side: Side) -> usize {
        let n = self.spec.graph().vertex_count() as u64;
        ((config_rank * n + r as u64) * 2 + side.index() as u64) as usize
    }

    /// Cop-win status for arbitrary (unsorted) cop positions.
    pub fn is_cop_win(&self, cops: &[u32], r: VertexId, side: Side) -> bool {
        let mut sorted = cops.to_vec();
        sorted.sort_unstable();
        self.win.get(self.state_index(self.indexer.rank(&sorted), r, side))
    }

    /// Half-moves the cops need from a won state; `None` when the robber
    /// wins it or ranks were not recorded.
    pub fn rank_of(&self, cops: &[u32], r: VertexId, side: Side) -> Option<u32> {
        let ranks = self.ranks.as_ref()?;
        let mut sorted = cops.to_vec();
        sorted.sort_unstable();
        let v = ranks[self.state_index(self.indexer.rank(&sorted), r, side)];
        (v != u32::MAX).then_some(v)
    }

    pub fn has_ranks(&self) -> bool {
        self.ranks.is_some()
    }

    /// Whether `cops` is a winning initial placement: every legal robber
    /// answer lands in the cop-win set (no answer at all is also a win).
    pub fn start_wins(&self, cops: &[u32]) -> bool {
        let mut sorted = cops.to_vec();
        sorted.sort_unstable();
        let mr = self.indexer.rank(&sorted);
        let placements = self.spec.robber_placements(&sorted);
        placements
            .iter()
            .all(|&r| self.win.get(self.state_index(mr, r, Side::CopsToMove)))
    }
}

/// Iterates every ordered pick from `lists`, presenting it sorted.
fn for_each_product<F: FnMut(&[u32])>(lists: &[&[u32]], scratch: &mut [u32], mut f: F) {
    let k = lists.len();
    let mut idx = vec![0usize; k];
    loop {
        for i in 0..k {
            scratch[i] = lists[i][idx[i]];
        }
        scratch.sort_unstable();
        f(scratch);
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

/// Sum over all configurations of the product of per-cop move counts:
/// the exact size of the successor table before deduplication.
fn product_sum(move_counts: &[u64], k: u32) -> u128 {
    let mut dp = vec![0u128; k as usize + 1];
    dp[0] = 1;
    for &x in move_counts {
        for j in 1..=k as usize {
            let add = dp[j - 1].saturating_mul(x as u128);
            dp[j] = dp[j].saturating_add(add);
        }
    }
    dp[k as usize]
}

pub fn solve_fixed_k(spec: &GameSpec, opts: &SolveOptions) -> Result<Solution, SolveError> {
    let started = Instant::now();
    let graph = spec.graph();
    let n = graph.vertex_count() as u64;
    let n32 = graph.vertex_count() as u32;
    let k = spec.k() as usize;
    let domain = spec.cop_domain_size();
    let indexer = MultisetIndexer::new(domain, spec.k());
    let configs = indexer.count();
    let states = configs
        .checked_mul(n * 2)
        .ok_or(SolveError::AddressLimit { states: u64::MAX })?;
    if states > opts.budget_states {
        return Err(SolveError::StateSpace {
            states,
            budget: opts.budget_states,
        });
    }
    if states > u32::MAX as u64 {
        return Err(SolveError::AddressLimit { states });
    }

    // Per-position cop move lists (stay plus one step), as a CSR table.
    let cop_moves = {
        let mut offsets = Vec::with_capacity(domain as usize + 1);
        let mut items = Vec::new();
        offsets.push(0u64);
        for p in 0..domain {
            items.extend(spec.cop_moves(p));
            offsets.push(items.len() as u64);
        }
        Csr { offsets, items }
    };

    let sidx = |mr: u64, r: u32, side: Side| -> usize {
        ((mr * n + r as u64) * 2 + side.index() as u64) as usize
    };

    let mut win = BitSet::new(states as usize);
    let mut ranks = opts
        .compute_ranks
        .then(|| vec![u32::MAX; states as usize]);
    let mut counters = vec![0u16; (configs * n) as usize];
    let mut queue: VecDeque<u32> = VecDeque::new();
    let mut seeds = 0u64;

    // Seed terminals and fill robber-move countdowns.
    {
        let mut cops = indexer.first();
        let mut mr = 0u64;
        loop {
            for r in 0..n32 {
                if spec.is_cop_win_terminal(&cops, r, Side::CopsToMove) {
                    let i = sidx(mr, r, Side::CopsToMove);
                    win.set(i);
                    if let Some(rk) = ranks.as_mut() {
                        rk[i] = 0;
                    }
                    queue.push_back(i as u32);
                    seeds += 1;
                }
                let moves = spec.robber_move_count(&cops, r);
                let i = sidx(mr, r, Side::RobberToMove);
                if spec.is_cop_win_terminal(&cops, r, Side::RobberToMove) || moves == 0 {
                    win.set(i);
                    if let Some(rk) = ranks.as_mut() {
                        rk[i] = 0;
                    }
                    queue.push_back(i as u32);
                    seeds += 1;
                } else {
                    counters[(mr * n + r as u64) as usize] = moves as u16;
                }
            }
            mr += 1;
            if !indexer.advance(&mut cops) {
                break;
            }
        }
        debug_assert_eq!(mr, configs);
    }

    // Knowing every successor configuration of every configuration up
    // front turns the hot loop into table lookups; fall back to
    // re-enumeration when the table would not fit.
    let mut config_succ: Option<Csr> = None;
    if seeds > 0 {
        let move_counts: Vec<u64> = (0..domain).map(|p| cop_moves.row(p).len() as u64).collect();
        let est = product_sum(&move_counts, spec.k());
        if est <= opts.csr_pair_cap as u128 {
            let mut offsets = Vec::with_capacity(configs as usize + 1);
            let mut items: Vec<u32> = Vec::new();
            offsets.push(0u64);
            let mut cops = indexer.first();
            let mut scratch = vec![0u32; k];
            let mut row: Vec<u32> = Vec::new();
            loop {
                row.clear();
                let lists: Vec<&[u32]> = cops.iter().map(|&c| cop_moves.row(c)).collect();
                for_each_product(&lists, &mut scratch, |sorted| {
                    row.push(indexer.rank(sorted) as u32);
                });
                row.sort_unstable();
                row.dedup();
                items.extend_from_slice(&row);
                offsets.push(items.len() as u64);
                if !indexer.advance(&mut cops) {
                    break;
                }
            }
            config_succ = Some(Csr { offsets, items });
        }
    }
    let used_config_csr = config_succ.is_some();

    // Backward attractor sweep.
    let mut cops_buf = vec![0u32; k];
    let mut scratch = vec![0u32; k];
    let mut max_rank = 0u32;
    while let Some(idx) = queue.pop_front() {
        let idx = idx as u64;
        let side = Side::from_index((idx & 1) as usize);
        let r = ((idx >> 1) % n) as u32;
        let mr = (idx >> 1) / n;
        let next_rank = match ranks.as_ref() {
            Some(rk) => rk[idx as usize].saturating_add(1),
            None => 0,
        };
        match side {
            Side::RobberToMove => {
                // Any configuration that can move to this one is a cop win
                // with the cops to move; the move relation is symmetric.
                let mut mark = |prank: u64| {
                    let i = sidx(prank, r, Side::CopsToMove);
                    if win.set(i) {
                        if let Some(rk) = ranks.as_mut() {
                            rk[i] = next_rank;
                            max_rank = max_rank.max(next_rank);
                        }
                        queue.push_back(i as u32);
                    }
                };
                match &config_succ {
                    Some(csr) => {
                        for &prank in csr.row(mr as u32) {
                            mark(prank as u64);
                        }
                    }
                    None => {
                        indexer.unrank(mr, &mut cops_buf);
                        let lists: Vec<&[u32]> =
                            cops_buf.iter().map(|&c| cop_moves.row(c)).collect();
                        for_each_product(&lists, &mut scratch, |sorted| {
                            mark(indexer.rank(sorted));
                        });
                    }
                }
            }
            Side::CopsToMove => {
                // Robber predecessors stayed or stepped from a neighbor;
                // count down their remaining escapes.
                let restrictive = spec.variant().is_restrictive();
                if restrictive {
                    indexer.unrank(mr, &mut cops_buf);
                }
                let mut visit = |rp: u32| {
                    if restrictive && !spec.robber_move_legal(&cops_buf, rp, r) {
                        return;
                    }
                    let i = sidx(mr, rp, Side::RobberToMove);
                    if win.get(i) {
                        return;
                    }
                    let c = &mut counters[(mr * n + rp as u64) as usize];
                    debug_assert!(*c > 0);
                    *c -= 1;
                    if *c == 0 {
                        win.set(i);
                        if let Some(rk) = ranks.as_mut() {
                            rk[i] = next_rank;
                            max_rank = max_rank.max(next_rank);
                        }
                        queue.push_back(i as u32);
                    }
                };
                visit(r);
                for &rp in graph.neighbors(r) {
                    visit(rp);
                }
            }
        }
    }
    drop(counters);
    drop(config_succ);

    // Overall verdict: some start configuration must beat every legal
    // robber placement.
    let mut verdict = Verdict::RobberWin;
    let mut winning_start = None;
    {
        let mut cops = indexer.first();
        let mut mr = 0u64;
        loop {
            let ok = match spec.variant() {
                v if v.is_restrictive() && !v.cops_on_edges() => {
                    // Placement skips cop vertices; no vertex left is a win.
                    (0..n32)
                        .filter(|v| cops.binary_search(v).is_err())
                        .all(|r| win.get(sidx(mr, r, Side::CopsToMove)))
                }
                _ => (0..n32).all(|r| win.get(sidx(mr, r, Side::CopsToMove))),
            };
            if ok {
                verdict = Verdict::CopWin;
                winning_start = Some(cops.clone());
                break;
            }
            mr += 1;
            if !indexer.advance(&mut cops) {
                break;
            }
        }
    }

    let stats = SolveStats {
        configs,
        states,
        seeds,
        cop_win_states: win.count_ones() as u64,
        max_rank,
        used_config_csr,
        millis: started.elapsed().as_millis(),
    };
    Ok(Solution {
        spec: spec.clone(),
        indexer,
        win,
        ranks,
        verdict,
        winning_start,
        stats,
    })
}
