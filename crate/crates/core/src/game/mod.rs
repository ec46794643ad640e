//! The triangle-placement game with a blocking maneuver.

mod board;
mod geometry;
mod naive;
mod solver;

pub(crate) use board::sha256_hex;
pub use board::Board;
pub use geometry::{window_anchors, windows, Span, Triangle, Window, WindowMode};
pub use naive::{outcome_naive, NAIVE_MAX_BLOCK, NAIVE_MAX_DELTA};
pub use solver::{terminal_window_win, Outcome, Solution, SolveRequest, Solver};
