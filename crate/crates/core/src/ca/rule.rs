use serde::Serialize;

use super::{RuleParams, Tape};
use crate::error::{Error, Result};

/// Largest full window for which [`truth_table`] will enumerate patterns.
pub const MAX_TABLE_DELTA: usize = 20;

/// Zero counts of the two update windows of a cell.
///
/// The inner window spans `x-gamma+1 ..= x` and the full window spans
/// `x-gamma+1-left ..= x+right`, both read from the previous row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WindowCounts {
    pub zeros_inner: usize,
    pub zeros_full: usize,
}

pub fn window_counts(tape: &Tape, x: i64, params: &RuleParams) -> WindowCounts {
    let g = params.gamma() as i64;
    let (l, r) = (params.left() as i64, params.right() as i64);
    WindowCounts {
        zeros_inner: tape.count_zeros(x - g + 1, x),
        zeros_full: tape.count_zeros(x - g + 1 - l, x + r),
    }
}

/// 0 when the inner window is all zeros or the full window holds at most
/// `block` zeros; 1 otherwise.
#[inline]
pub fn rule_output(counts: WindowCounts, params: &RuleParams) -> bool {
    !(counts.zeros_inner == params.gamma() || counts.zeros_full <= params.block())
}

/// The value of cell `x` one step after `tape`.
pub fn update_cell(tape: &Tape, x: i64, params: &RuleParams) -> bool {
    rule_output(window_counts(tape, x, params), params)
}

/// Output for every full-window pattern. Entry `p` is the new cell value
/// when the full window, read left to right, spells `p` in binary with the
/// leftmost cell as the most significant bit.
pub fn truth_table(params: &RuleParams) -> Result<Vec<bool>> {
    let delta = params.delta();
    if delta > MAX_TABLE_DELTA {
        return Err(Error::Guard(format!(
            "truth table needs 2^{delta} entries; limit is delta <= {MAX_TABLE_DELTA}"
        )));
    }
    let (g, l) = (params.gamma(), params.left());
    let table = (0u32..1 << delta)
        .map(|p| {
            // bit for window position i (0 = leftmost)
            let cell = |i: usize| (p >> (delta - 1 - i)) & 1 == 1;
            let zeros_full = (0..delta).filter(|&i| !cell(i)).count();
            let zeros_inner = (l..l + g).filter(|&i| !cell(i)).count();
            rule_output(
                WindowCounts {
                    zeros_inner,
                    zeros_full,
                },
                params,
            )
        })
        .collect();
    Ok(table)
}
