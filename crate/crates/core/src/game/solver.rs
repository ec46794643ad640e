use std::borrow::Cow;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{windows, Board, Triangle, Window, WindowMode};
use crate::error::{Error, Result};

/// Normal-play outcome class of a position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Outcome {
    /// The player to move wins.
    N,
    /// The player who just moved wins.
    P,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::N => "N",
            Outcome::P => "P",
        })
    }
}

impl FromStr for Outcome {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "N" => Ok(Outcome::N),
            "P" => Ok(Outcome::P),
            _ => Err(Error::Parse(format!("unknown outcome `{s}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolveRequest {
    pub triangle: Triangle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution {
    pub outcome: Outcome,
    /// A window in which the mover keeps a P-placement whatever is blocked.
    pub witness_window: Option<[i64; 2]>,
    /// The good cells of that window.
    pub good_cells: Option<Vec<i64>>,
}

/// Exact outcome solver for one board.
///
/// The blocker sees the proposed window and removes up to `block` cells, so
/// a window wins for the mover exactly when it holds more than `block`
/// good cells (cells from which some legal P-triangle can be hung).
pub struct Solver<'b> {
    board: Cow<'b, Board>,
    mode: WindowMode,
    outcomes: HashMap<Triangle, Outcome>,
    tops: HashMap<(i64, i64), bool>,
}

impl<'b> Solver<'b> {
    pub fn new(board: &'b Board) -> Self {
        Solver::with_mode(board, WindowMode::Anchored)
    }

    pub fn with_mode(board: &'b Board, mode: WindowMode) -> Self {
        Solver {
            board: Cow::Borrowed(board),
            mode,
            outcomes: HashMap::new(),
            tops: HashMap::new(),
        }
    }

    /// A solver that keeps its own copy of the board.
    pub fn owned(board: Board, mode: WindowMode) -> Solver<'static> {
        Solver {
            board: Cow::Owned(board),
            mode,
            outcomes: HashMap::new(),
            tops: HashMap::new(),
        }
    }

    pub fn board(&self) -> &Board {
        &self.board
    }

    pub fn mode(&self) -> WindowMode {
        self.mode
    }

    pub fn outcome(&mut self, t: &Triangle) -> Result<Outcome> {
        self.board.check_legal(t)?;
        Ok(self.outcome_legal(t))
    }

    /// Outcome plus a witness window when the mover wins.
    pub fn solve(&mut self, t: &Triangle) -> Result<Solution> {
        self.board.check_legal(t)?;
        let block = self.board.params().block();
        for w in windows(t, self.board.params(), self.mode) {
            let good = self.good_cells(&w);
            if good.len() > block {
                return Ok(Solution {
                    outcome: Outcome::N,
                    witness_window: Some([w.lo, w.hi]),
                    good_cells: Some(good),
                });
            }
        }
        Ok(Solution {
            outcome: Outcome::P,
            witness_window: None,
            good_cells: None,
        })
    }

    /// Columns of `w` where the mover can place the top of a legal
    /// P-triangle.
    pub fn good_cells(&mut self, w: &Window) -> Vec<i64> {
        w.columns()
            .filter(|&c| self.has_p_top(c, w.level))
            .collect()
    }

    /// Whether some legal P-triangle has its top at `(c, level)`. Heights run
    /// from 1 down to the terminal level.
    pub fn has_p_top(&mut self, c: i64, level: i64) -> bool {
        if level < 0 {
            return false;
        }
        if let Some(&v) = self.tops.get(&(c, level)) {
            return v;
        }
        let found = (1..=level + 1).any(|h| {
            let t = Triangle {
                x: c,
                y: level - h + 1,
                h,
            };
            self.board.is_legal(&t) && self.outcome_legal(&t) == Outcome::P
        });
        self.tops.insert((c, level), found);
        found
    }

    fn outcome_legal(&mut self, t: &Triangle) -> Outcome {
        if t.y == 0 {
            return Outcome::P;
        }
        if let Some(&o) = self.outcomes.get(t) {
            return o;
        }
        let block = self.board.params().block();
        let mut result = Outcome::P;
        for w in windows(t, self.board.params(), self.mode) {
            let good = w.columns().filter(|&c| self.has_p_top(c, w.level)).count();
            if good > block {
                result = Outcome::N;
                break;
            }
        }
        self.outcomes.insert(*t, result);
        result
    }
}

/// Final-stage criterion for a window on the terminal level: the mover
/// survives every blocking exactly when `|W ∩ obstacles| + block < delta`.
pub fn terminal_window_win(w: &Window, board: &Board) -> Result<bool> {
    if w.level != 0 {
        return Err(Error::IllegalPosition(format!(
            "window at level {} is not terminal",
            w.level
        )));
    }
    let blocked = w.columns().filter(|&c| board.is_obstacle(c)).count();
    Ok(blocked + board.params().block() < board.params().delta())
}
