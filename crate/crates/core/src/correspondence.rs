//! The CA-safe predicate and sweeps comparing it with game outcomes.

use rayon::prelude::*;
use serde::Serialize;

use crate::ca::{evolve, Diagram, RuleParams};
use crate::error::{Error, Result};
use crate::game::{Board, Outcome, Solver, Triangle, WindowMode};

/// Every cell of `t` reads 0 in `d`, and every base cell above the terminal
/// level has at most `block` zeros in its full window.
///
/// Fails with [`Error::OutsideDiagram`] when the top of `t` lies beyond the
/// evolved rows; see [`ca_safe_extending`].
pub fn ca_safe(t: &Triangle, d: &Diagram) -> Result<bool> {
    let (_, top) = t.top();
    if t.y < 0 || top > d.steps() as i64 {
        return Err(Error::OutsideDiagram(format!(
            "{t} reaches row {top}; diagram holds 0..={}",
            d.steps()
        )));
    }
    let params = d.params();
    for span in t.rows(params) {
        let row = &d.rows()[span.level as usize];
        if row.count_zeros(span.lo, span.hi) != span.width() {
            return Ok(false);
        }
    }
    if t.y >= 1 {
        let block = params.block();
        for c in t.base(params).columns() {
            if d.window_counts(c, t.y)?.zeros_full > block {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// [`ca_safe`] after growing `d` to cover the top of `t`.
pub fn ca_safe_extending(t: &Triangle, d: &mut Diagram) -> Result<bool> {
    let (_, top) = t.top();
    if top >= 0 {
        d.extend_to(top as usize);
    }
    ca_safe(t, d)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Lemma1Check {
    pub cell: (i64, i64),
    pub value: bool,
    /// Smallest `h` for which `T(u, v-h+1, h)` is CA-safe.
    pub witness_h: Option<i64>,
    /// `value == 0` exactly when a witness exists.
    pub holds: bool,
}

/// Tests `CA(u,v) = 0 <=> some T(u, v-h+1, h) is CA-safe`.
///
/// The triangles grow by nesting, so the search stops at the first one
/// holding a 1.
pub fn lemma1_check(u: i64, v: i64, d: &Diagram) -> Result<Lemma1Check> {
    let value = d.cell(u, v)?;
    let mut witness_h = None;
    for h in 1..=v + 1 {
        let t = Triangle {
            x: u,
            y: v - h + 1,
            h,
        };
        let base = t.base(d.params());
        if d.rows()[t.y as usize].count_zeros(base.lo, base.hi) != base.width() {
            break;
        }
        if ca_safe(&t, d)? {
            witness_h = Some(h);
            break;
        }
    }
    Ok(Lemma1Check {
        cell: (u, v),
        value,
        witness_h,
        holds: value == witness_h.is_none(),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma1Report {
    pub params: RuleParams,
    pub cells_checked: usize,
    pub failure_count: usize,
    /// Failing cells ordered by `(t, x)`, at most `cap` of them.
    pub failures: Vec<Lemma1Check>,
    pub truncated: bool,
}

/// Runs [`lemma1_check`] at every cell with `xmin <= x <= xmax` and
/// `1 <= t <= t_max`.
pub fn lemma1_sweep(
    d: &Diagram,
    xmin: i64,
    xmax: i64,
    t_max: i64,
    cap: usize,
) -> Result<Lemma1Report> {
    let mut failures = Vec::new();
    let mut cells_checked = 0;
    let mut failure_count = 0;
    for v in 1..=t_max {
        for u in xmin..=xmax {
            let c = lemma1_check(u, v, d)?;
            cells_checked += 1;
            if !c.holds {
                failure_count += 1;
                if failures.len() < cap {
                    failures.push(c);
                }
            }
        }
    }
    Ok(Lemma1Report {
        params: *d.params(),
        cells_checked,
        failure_count,
        truncated: failure_count > failures.len(),
        failures,
    })
}

/// A triangle on which the two sides of an equivalence disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub triangle: Triangle,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub game_outcome: Option<Outcome>,
    pub ca_safe: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scaled: Option<Triangle>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scaled_ca_safe: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EquivalenceReport {
    pub relation: String,
    pub params: RuleParams,
    pub board_digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub window_mode: Option<WindowMode>,
    pub positions_checked: usize,
    pub mismatch_count: usize,
    /// The smallest mismatches in `(y, h, x)` order, at most `cap`.
    pub mismatches: Vec<Mismatch>,
    pub truncated: bool,
}

impl EquivalenceReport {
    pub fn holds(&self) -> bool {
        self.mismatch_count == 0
    }
}

/// Triangle region and bookkeeping shared by the sweeps.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepOptions {
    pub xmin: i64,
    pub xmax: i64,
    pub y_min: i64,
    pub y_max: i64,
    pub h_max: i64,
    pub mode: WindowMode,
    pub cap: usize,
    pub jobs: usize,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions {
            xmin: -8,
            xmax: 8,
            y_min: 1,
            y_max: 6,
            h_max: 3,
            mode: WindowMode::Anchored,
            cap: 16,
            jobs: 1,
        }
    }
}

impl SweepOptions {
    fn chunks(&self) -> Vec<(i64, i64)> {
        if self.xmax < self.xmin {
            return Vec::new();
        }
        let width = self.xmax - self.xmin + 1;
        let n = (self.jobs.max(1) as i64).min(width);
        let size = (width + n - 1) / n;
        (0..n)
            .map(|k| {
                (
                    self.xmin + k * size,
                    (self.xmin + (k + 1) * size - 1).min(self.xmax),
                )
            })
            .filter(|(a, b)| a <= b)
            .collect()
    }
}

/// Keeps the `cap` smallest mismatches while counting all of them.
pub(crate) struct MismatchLog {
    cap: usize,
    pub(crate) count: usize,
    pub(crate) items: Vec<Mismatch>,
}

impl MismatchLog {
    fn new(cap: usize) -> Self {
        MismatchLog {
            cap,
            count: 0,
            items: Vec::new(),
        }
    }

    pub(crate) fn push(&mut self, m: Mismatch) {
        self.count += 1;
        self.items.push(m);
        if self.items.len() > 2 * self.cap.max(1) {
            self.trim();
        }
    }

    fn trim(&mut self) {
        self.items.sort_by_key(|m| m.triangle.key());
        self.items.truncate(self.cap);
    }

    fn merge(mut self, other: MismatchLog) -> MismatchLog {
        self.count += other.count;
        self.items.extend(other.items);
        self.trim();
        self
    }
}

/// Splits the x-range of `opts` across workers and merges their logs.
pub(crate) fn run_chunks<F>(opts: &SweepOptions, work: F) -> Result<(usize, MismatchLog)>
where
    F: Fn(i64, i64, &mut MismatchLog) -> Result<usize> + Sync,
{
    let results: Vec<Result<(usize, MismatchLog)>> = opts
        .chunks()
        .into_par_iter()
        .map(|(lo, hi)| {
            let mut log = MismatchLog::new(opts.cap);
            work(lo, hi, &mut log).map(|n| (n, log))
        })
        .collect();
    let mut total = 0;
    let mut log = MismatchLog::new(opts.cap);
    for r in results {
        let (n, part) = r?;
        total += n;
        log = log.merge(part);
    }
    log.trim();
    Ok((total, log))
}

/// Compares game outcomes on `board` with CA-safety in the diagram grown
/// from the board's terminal level. A triangle counts as a mismatch when
/// exactly one of "outcome is P" and "CA-safe" holds.
pub fn theorem1_verify(board: &Board, opts: &SweepOptions) -> Result<EquivalenceReport> {
    let params = *board.params();
    let rows = (opts.y_max + opts.h_max - 1).max(0) as usize;
    let diagram = evolve(board.level0(), &params, rows);
    let (checked, log) = run_chunks(opts, |lo, hi, log| {
        let mut solver = Solver::with_mode(board, opts.mode);
        let mut checked = 0;
        for y in opts.y_min.max(0)..=opts.y_max {
            for h in 1..=opts.h_max {
                for x in lo..=hi {
                    let t = Triangle { x, y, h };
                    if !board.is_legal(&t) {
                        continue;
                    }
                    checked += 1;
                    let outcome = solver.outcome(&t)?;
                    let safe = ca_safe(&t, &diagram)?;
                    if (outcome == Outcome::P) != safe {
                        log.push(Mismatch {
                            triangle: t,
                            game_outcome: Some(outcome),
                            ca_safe: safe,
                            scaled: None,
                            scaled_ca_safe: None,
                        });
                    }
                }
            }
        }
        Ok(checked)
    })?;
    Ok(EquivalenceReport {
        relation: "game-outcome-P iff ca-safe".into(),
        params,
        board_digest: board.digest(),
        window_mode: Some(opts.mode),
        positions_checked: checked,
        mismatch_count: log.count,
        truncated: log.count > log.items.len(),
        mismatches: log.items,
    })
}
