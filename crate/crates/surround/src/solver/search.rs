//! Minimum cop count search: solve with k = 1, 2, ... until the cops win.
//!
//! Stacking extra cops never hurts, so the verdict is monotone in k and
//! the first winning k is the game's cop number. With every position
//! occupied the cops always win, so the ascent terminates at the domain
//! size at the latest. Known structural lower bounds can be trusted to
//! skip the smallest k values; the verification suite never does that.

use crate::graph::Graph;
use crate::rules::{GameSpec, RulesError, Variant};
use crate::solver::{solve_fixed_k, SolveOptions, Verdict};
use serde::Serialize;
use std::sync::Arc;

#[derive(Debug, Clone)]
pub struct CopNumberOptions {
    pub budget_states: u64,
    /// Start the ascent at the structural lower bound instead of 1.
    pub trust_lower_bounds: bool,
    /// Stop after this k even without a cop win.
    pub max_k: Option<u32>,
}

impl Default for CopNumberOptions {
    fn default() -> CopNumberOptions {
        CopNumberOptions {
            budget_states: SolveOptions::default().budget_states,
            trust_lower_bounds: false,
            max_k: None,
        }
    }
}

/// One solve attempt during the ascent.
#[derive(Debug, Clone, Serialize)]
pub struct KRun {
    pub k: u32,
    pub verdict: Option<Verdict>,
    pub states: u64,
    pub millis: u128,
    pub error: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct CopNumberResult {
    pub variant: Variant,
    /// The cop number, when the ascent reached a cop win.
    pub value: Option<u32>,
    /// Smallest k not ruled out: every k below it lost or was skipped by
    /// a trusted bound.
    pub lower: u32,
    pub runs: Vec<KRun>,
}

impl CopNumberResult {
    /// Whether the search ended without an answer (budget or k cap).
    pub fn is_bracket(&self) -> bool {
        self.value.is_none()
    }
}

/// Cop count that the variant provably needs on this graph: the robber
/// survives with fewer by known arguments (maximum degree for surround
/// variants, degeneracy for the restrictive vertex game).
pub fn structural_lower_bound(graph: &Graph, variant: Variant) -> u32 {
    let bound = match variant {
        Variant::Classical => 1,
        Variant::VertexSurround | Variant::EdgeSurround | Variant::EdgeSurroundRestrictive => {
            graph.max_degree()
        }
        Variant::VertexSurroundRestrictive => graph.degeneracy().0,
    };
    bound.max(1)
}

pub fn cop_number(
    graph: Arc<Graph>,
    variant: Variant,
    opts: &CopNumberOptions,
) -> Result<CopNumberResult, RulesError> {
    // Validate the game shape once before the ascent.
    let probe = GameSpec::new(Arc::clone(&graph), variant, 1)?;
    let domain = probe.cop_domain_size();
    let start = if opts.trust_lower_bounds {
        structural_lower_bound(&graph, variant)
    } else {
        1
    };
    let stop = opts.max_k.unwrap_or(domain).min(domain);
    let solve_opts = SolveOptions {
        budget_states: opts.budget_states,
        compute_ranks: false,
        ..SolveOptions::default()
    };

    let mut runs = Vec::new();
    let mut value = None;
    let mut lower = start;
    for k in start..=stop.max(start) {
        let spec = GameSpec::new(Arc::clone(&graph), variant, k)?;
        match solve_fixed_k(&spec, &solve_opts) {
            Ok(sol) => {
                runs.push(KRun {
                    k,
                    verdict: Some(sol.verdict()),
                    states: sol.stats().states,
                    millis: sol.stats().millis,
                    error: None,
                });
                if sol.verdict() == Verdict::CopWin {
                    value = Some(k);
                    break;
                }
                lower = k + 1;
            }
            Err(e) => {
                runs.push(KRun {
                    k,
                    verdict: None,
                    states: 0,
                    millis: 0,
                    error: Some(e.to_string()),
                });
                break;
            }
        }
    }
    Ok(CopNumberResult {
        variant,
        value,
        lower,
        runs,
    })
}
