//! Analysis of the Shannon vertex-switching game on graphs.

pub mod census;
pub mod detect;
pub mod error;
pub mod figures;
pub mod graph;
pub mod graph6;
pub mod hex;
pub mod multilink;
pub mod solver;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{graphs_equal, Graph, VertexSet, MAX_ORDER};
pub use solver::{
    dominates, is_captured, is_lost, solve, solve_multi, winner_of_colouring, Domination,
    MultiGame, MultiOutcome, Player, Position, Solver,
};
