//! Strategy interfaces and the referee that plays them against each other.
//!
//! Controllers produce placements and half-moves for one side; the
//! referee validates every move against the rules, applies terminal
//! checks in the same order as the solver (capture on either half-move,
//! surround after the cops moved), and records a full transcript. A
//! robber that survives the step limit wins the match.

pub mod adversary;
pub mod bipartite;
pub mod extracted;
pub mod hslm_cops;
pub mod hslm_robber;
pub mod leafy;
pub mod lift;
pub mod linegraph;
pub mod mols;

use crate::rules::{GameSpec, Side, Variant};
use serde::Serialize;
use thiserror::Error;

/// Plays the cops: ordered positions, one entry per cop.
pub trait CopController {
    fn name(&self) -> String;
    /// Initial positions (length k).
    fn place(&mut self) -> Vec<u32>;
    /// Next positions; entry i must be a legal move for cop i.
    fn step(&mut self, cops: &[u32], robber: u32) -> Vec<u32>;
    /// Optional diagnostic about the half-move just emitted; the referee
    /// appends it to the transcript for manual review (for example which
    /// cop took over a pursuit role).
    fn note(&mut self) -> Option<String> {
        None
    }
}

/// Plays the robber.
pub trait RobberController {
    fn name(&self) -> String;
    /// Start vertex after seeing the cops; `None` concedes that no legal
    /// placement exists.
    fn place(&mut self, cops: &[u32]) -> Option<u32>;
    /// Next vertex (staying allowed where the rules permit it).
    fn step(&mut self, cops: &[u32], robber: u32) -> u32;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Winner {
    Cops,
    Robber,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum MatchError {
    #[error("cop controller returned {got} positions for {want} cops")]
    WrongCopCount { got: usize, want: usize },
    #[error("position {pos} is outside the cop domain of size {domain}")]
    PositionOutOfRange { pos: u32, domain: u32 },
    #[error("cop {index} cannot move from {from} to {to}")]
    IllegalCopMove { index: usize, from: u32, to: u32 },
    #[error("robber cannot move from {from} to {to}")]
    IllegalRobberMove { from: u32, to: u32 },
    #[error("robber placement at {0} is illegal")]
    IllegalPlacement(u32),
    #[error("robber conceded placement although legal vertices exist")]
    PlacementRefused,
}

/// One recorded half-move: the acting side and the position after it.
#[derive(Debug, Clone, Serialize)]
pub struct HalfMove {
    pub side: Side,
    pub cops: Vec<u32>,
    pub robber: u32,
}

#[derive(Debug, Clone, Serialize)]
pub struct Transcript {
    pub variant: Variant,
    pub k: u32,
    pub n: usize,
    pub cop_player: String,
    pub robber_player: String,
    pub initial_cops: Vec<u32>,
    pub initial_robber: Option<u32>,
    pub moves: Vec<HalfMove>,
    pub winner: Winner,
    pub reason: String,
    pub rounds: u32,
    /// Controller diagnostics worth a human look, tagged with the round
    /// they were raised in.
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Debug, Clone)]
pub struct MatchOptions {
    /// Full rounds (cop half-move plus robber half-move) before the
    /// robber is declared the survivor. `None` picks 4 (n + k m).
    pub max_rounds: Option<u32>,
}

impl Default for MatchOptions {
    fn default() -> MatchOptions {
        MatchOptions { max_rounds: None }
    }
}

pub fn default_round_limit(spec: &GameSpec) -> u32 {
    let n = spec.graph().vertex_count() as u64;
    let m = spec.graph().edge_count() as u64;
    (4 * (n + spec.k() as u64 * m)).min(u32::MAX as u64) as u32
}

pub fn run_match(
    spec: &GameSpec,
    cops: &mut dyn CopController,
    robber: &mut dyn RobberController,
    opts: &MatchOptions,
) -> Result<Transcript, MatchError> {
    let domain = spec.cop_domain_size();
    let k = spec.k() as usize;
    let limit = opts.max_rounds.unwrap_or_else(|| default_round_limit(spec));

    let check_positions = |positions: &[u32]| -> Result<(), MatchError> {
        if positions.len() != k {
            return Err(MatchError::WrongCopCount {
                got: positions.len(),
                want: k,
            });
        }
        if let Some(&pos) = positions.iter().find(|&&p| p >= domain) {
            return Err(MatchError::PositionOutOfRange { pos, domain });
        }
        Ok(())
    };

    let initial_cops = cops.place();
    check_positions(&initial_cops)?;

    let mut transcript = Transcript {
        variant: spec.variant(),
        k: spec.k(),
        n: spec.graph().vertex_count(),
        cop_player: cops.name(),
        robber_player: robber.name(),
        initial_cops: initial_cops.clone(),
        initial_robber: None,
        moves: Vec::new(),
        winner: Winner::Robber,
        reason: String::new(),
        rounds: 0,
        notes: Vec::new(),
    };

    let placements = spec.robber_placements(&initial_cops);
    let r0 = match robber.place(&initial_cops) {
        Some(r) => {
            if !placements.contains(&r) {
                return Err(MatchError::IllegalPlacement(r));
            }
            r
        }
        None => {
            if !placements.is_empty() {
                return Err(MatchError::PlacementRefused);
            }
            transcript.winner = Winner::Cops;
            transcript.reason = "no legal robber placement".into();
            return Ok(transcript);
        }
    };
    transcript.initial_robber = Some(r0);

    let mut cur_cops = initial_cops;
    let mut r = r0;
    // A capture can already hold at placement (the robber is never forced
    // to place on a cop, so this only punishes bad placements).
    if spec.is_cop_win_terminal(&cur_cops, r, Side::CopsToMove) {
        transcript.winner = Winner::Cops;
        transcript.reason = "robber placed into capture".into();
        return Ok(transcript);
    }

    for round in 1..=limit {
        transcript.rounds = round;

        let next = cops.step(&cur_cops, r);
        check_positions(&next)?;
        for (i, (&from, &to)) in cur_cops.iter().zip(&next).enumerate() {
            if !spec.cop_move_legal(from, to) {
                return Err(MatchError::IllegalCopMove { index: i, from, to });
            }
        }
        cur_cops = next;
        transcript.moves.push(HalfMove {
            side: Side::CopsToMove,
            cops: cur_cops.clone(),
            robber: r,
        });
        if let Some(note) = cops.note() {
            transcript.notes.push(format!("round {round}: {note}"));
        }
        if spec.is_cop_win_terminal(&cur_cops, r, Side::RobberToMove) {
            transcript.winner = Winner::Cops;
            transcript.reason = if spec.variant() == Variant::Classical {
                "captured".into()
            } else {
                "surrounded".into()
            };
            return Ok(transcript);
        }

        let legal = spec.robber_moves(&cur_cops, r);
        if legal.is_empty() {
            // Unreachable under the current rule set, but a cop win by the
            // definitions if it ever triggers.
            transcript.winner = Winner::Cops;
            transcript.reason = "robber has no legal move".into();
            return Ok(transcript);
        }
        let to = robber.step(&cur_cops, r);
        if !legal.contains(&to) {
            return Err(MatchError::IllegalRobberMove { from: r, to });
        }
        r = to;
        transcript.moves.push(HalfMove {
            side: Side::RobberToMove,
            cops: cur_cops.clone(),
            robber: r,
        });
        if spec.is_cop_win_terminal(&cur_cops, r, Side::CopsToMove) {
            transcript.winner = Winner::Cops;
            transcript.reason = "robber walked into capture".into();
            return Ok(transcript);
        }
    }

    transcript.winner = Winner::Robber;
    transcript.reason = format!("robber survived {limit} rounds");
    Ok(transcript)
}
