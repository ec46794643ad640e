//! Blocking-window cellular automata `CA(gamma, left, right, block)`, the
//! triangle-placement game with a blocking maneuver whose outcomes they
//! encode, and the bit-doubling construction that produces their fractals.
//!
//! The crate is organised bottom-up:
//!
//! * [`ca`]: eventually-constant tapes, the window update rule and the
//!   packed sliding-window evolution kernel.
//! * [`game`]: play-triangle geometry and an exact memoized outcome solver,
//!   plus a literal subset-enumerating oracle.
//! * [`correspondence`]: the CA-safe predicate and sweeps that compare it
//!   with game outcomes.
//! * [`fractal`]: bit doubling, parameter-doubled runs, triangle scaling,
//!   newborn stars and their rescaled limits.
//! * [`render`]: PBM/PGM/PPM and CSV writers.
//! * [`cli`]: run configuration shared by the `blocking-ca` binary.

pub mod ca;
pub mod cli;
pub mod correspondence;
pub mod error;
pub mod fractal;
pub mod game;
pub mod render;

pub use ca::{evolve, step, Diagram, RuleParams, Tape, WindowCounts};
pub use error::{Error, Result};
pub use game::{Board, Outcome, Solver, Triangle, WindowMode};
