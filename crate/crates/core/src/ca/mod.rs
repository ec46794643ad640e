//! One-dimensional blocking-window automata.

mod bits;
mod evolve;
mod params;
mod rule;
mod tape;

pub use bits::BitRow;
pub use evolve::{evolve, step, step_naive, step_parallel, Diagram, WindowScan};
pub use params::RuleParams;
pub use rule::{
    rule_output, truth_table, update_cell, window_counts, WindowCounts, MAX_TABLE_DELTA,
};
pub use tape::Tape;
