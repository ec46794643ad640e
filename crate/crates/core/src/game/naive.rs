//! Literal window–block–place protocol by explicit enumeration.
//!
//! Exists only as an oracle for [`super::Solver`]: it never counts good
//! cells, it tries every blocking set.

use std::collections::HashMap;

use super::{windows, Board, Outcome, Triangle, WindowMode};
use crate::error::{Error, Result};

pub const NAIVE_MAX_BLOCK: usize = 6;
pub const NAIVE_MAX_DELTA: usize = 10;

pub fn outcome_naive(t: &Triangle, board: &Board, mode: WindowMode) -> Result<Outcome> {
    let p = board.params();
    if p.block() > NAIVE_MAX_BLOCK || p.delta() > NAIVE_MAX_DELTA {
        return Err(Error::Guard(format!(
            "naive enumeration needs block <= {NAIVE_MAX_BLOCK} and delta <= {NAIVE_MAX_DELTA}"
        )));
    }
    board.check_legal(t)?;
    let mut game = Naive {
        board,
        mode,
        memo: HashMap::new(),
    };
    Ok(game.eval(t))
}

struct Naive<'b> {
    board: &'b Board,
    mode: WindowMode,
    memo: HashMap<Triangle, Outcome>,
}

impl Naive<'_> {
    fn eval(&mut self, t: &Triangle) -> Outcome {
        if let Some(&o) = self.memo.get(t) {
            return o;
        }
        let block = self.board.params().block();
        let mut result = Outcome::P;
        'windows: for w in windows(t, self.board.params(), self.mode) {
            let cols: Vec<i64> = w.columns().collect();
            for blocked in 0u32..1 << cols.len() {
                if blocked.count_ones() as usize > block {
                    continue;
                }
                let survives = cols
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| blocked & (1 << i) == 0)
                    .any(|(_, &c)| self.can_place_p(c, w.level));
                if !survives {
                    // this blocking kills the window
                    continue 'windows;
                }
            }
            result = Outcome::N;
            break;
        }
        self.memo.insert(*t, result);
        result
    }

    fn can_place_p(&mut self, c: i64, level: i64) -> bool {
        (1..=level + 1).any(|h| {
            let next = Triangle {
                x: c,
                y: level - h + 1,
                h,
            };
            self.board.is_legal(&next) && self.eval(&next) == Outcome::P
        })
    }
}
