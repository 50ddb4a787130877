//! Exact solver, construction lab, and strategy simulator for pursuit games
//! on graphs: the classical cops-and-robber capture game and four
//! surrounding variants (vertex / edge cops, each with an optional
//! restrictive movement rule for the robber).

#![forbid(unsafe_code)]

pub mod bits;
pub mod families;
pub mod graph;
pub mod latin;
pub mod rules;
pub mod solver;
pub mod strategy;
