use rayon::prelude::*;

use crate::ca::{evolve, BitRow, Diagram, RuleParams, Tape};
use crate::correspondence::{ca_safe, run_chunks, EquivalenceReport, Mismatch, SweepOptions};
use crate::error::{Error, Result};
use crate::game::{sha256_hex, Triangle};

/// `out(2x) = out(2x+1) = tape(x)`.
pub fn double_bits(tape: &Tape) -> Tape {
    let core = tape.core();
    let mut out = BitRow::with_capacity(2 * core.len());
    for b in core.iter() {
        out.push(b);
        out.push(b);
    }
    Tape::new(2 * tape.origin(), out, tape.left_fill(), tape.right_fill())
}

/// Reads the even (`odd = false`) or odd positions of `tape`, inverting
/// [`double_bits`].
pub fn undouble(tape: &Tape, odd: bool) -> Tape {
    let shift = i64::from(odd);
    let lo = tape.origin().div_euclid(2);
    let hi = (tape.core_end() - 1).div_euclid(2);
    let core = BitRow::from_bools((lo..=hi).map(|x| tape.get(2 * x + shift)));
    Tape::new(lo, core, tape.left_fill(), tape.right_fill())
}

/// The doubling sequence: level `n` evolves the `n`-fold doubled initial
/// row under `(2, 2^n L, 2^n R, 0)`.
#[derive(Debug, Clone)]
pub struct DoublingRun {
    base: RuleParams,
    initials: Vec<Tape>,
    levels: Vec<Diagram>,
}

impl DoublingRun {
    /// Levels `0..=n_max`, level `n` evolved for `steps * 2^n` rows.
    pub fn new(i0: &Tape, base: RuleParams, n_max: usize, steps: usize) -> Result<DoublingRun> {
        DoublingRun::with_steps(i0, base, n_max, |n| steps << n)
    }

    pub fn with_steps<F>(i0: &Tape, base: RuleParams, n_max: usize, steps: F) -> Result<DoublingRun>
    where
        F: Fn(usize) -> usize + Sync,
    {
        if base.gamma() != 2 || base.block() != 0 {
            return Err(Error::InvalidParams(format!(
                "doubling needs gamma=2 and block=0, got {base}"
            )));
        }
        if n_max > 20 {
            return Err(Error::Guard(format!("doubling depth {n_max} exceeds 20")));
        }
        let mut initials = vec![i0.clone()];
        for n in 0..n_max {
            initials.push(double_bits(&initials[n]));
        }
        let levels = initials
            .par_iter()
            .enumerate()
            .map(|(n, init)| evolve(init, &level_params(&base, n), steps(n)))
            .collect();
        Ok(DoublingRun {
            base,
            initials,
            levels,
        })
    }

    pub fn base_params(&self) -> &RuleParams {
        &self.base
    }

    pub fn n_max(&self) -> usize {
        self.levels.len() - 1
    }

    pub fn params_at(&self, n: usize) -> RuleParams {
        level_params(&self.base, n)
    }

    pub fn initial(&self, n: usize) -> Option<&Tape> {
        self.initials.get(n)
    }

    pub fn level(&self, n: usize) -> Option<&Diagram> {
        self.levels.get(n)
    }

    pub fn levels(&self) -> &[Diagram] {
        &self.levels
    }

    fn checked_level(&self, n: usize) -> Result<&Diagram> {
        self.level(n).ok_or_else(|| {
            Error::OutsideDiagram(format!(
                "level {n} not computed; run holds 0..={}",
                self.n_max()
            ))
        })
    }
}

fn level_params(base: &RuleParams, n: usize) -> RuleParams {
    RuleParams::new(2, base.left() << n, base.right() << n, 0)
        .expect("doubled parameters stay valid")
}

/// The image of `t` one doubling level up: `T(2u, 0, 2h-1)` on the
/// terminal level, `T(2u, 2v-1, 2h)` above it.
pub fn scale_triangle(t: &Triangle) -> Triangle {
    if t.y == 0 {
        Triangle {
            x: 2 * t.x,
            y: 0,
            h: 2 * t.h - 1,
        }
    } else {
        Triangle {
            x: 2 * t.x,
            y: 2 * t.y - 1,
            h: 2 * t.h,
        }
    }
}

/// Checks `ca_safe(T)` on level `n` against `ca_safe(scale_triangle(T))`
/// on level `n + 1` for every triangle in the region of `opts`.
pub fn theorem2_verify(
    run: &DoublingRun,
    n: usize,
    opts: &SweepOptions,
) -> Result<EquivalenceReport> {
    let mut lower = run.checked_level(n)?.clone();
    let mut upper = run.checked_level(n + 1)?.clone();
    let top = (opts.y_max + opts.h_max - 1).max(0) as usize;
    lower.extend_to(top);
    upper.extend_to(2 * top);
    let (checked, log) = run_chunks(opts, |lo, hi, log| {
        let mut checked = 0;
        for y in opts.y_min.max(0)..=opts.y_max {
            for h in 1..=opts.h_max {
                for x in lo..=hi {
                    let t = Triangle { x, y, h };
                    let scaled = scale_triangle(&t);
                    let a = ca_safe(&t, &lower)?;
                    let b = ca_safe(&scaled, &upper)?;
                    checked += 1;
                    if a != b {
                        log.push(Mismatch {
                            triangle: t,
                            game_outcome: None,
                            ca_safe: a,
                            scaled: Some(scaled),
                            scaled_ca_safe: Some(b),
                        });
                    }
                }
            }
        }
        Ok(checked)
    })?;
    let params = *lower.params();
    let text = format!("{params}\n{}\n", run.initials[n]);
    Ok(EquivalenceReport {
        relation: format!(
            "ca-safe at level {n} iff scaled triangle ca-safe at level {}",
            n + 1
        ),
        params,
        board_digest: sha256_hex(text.as_bytes()),
        window_mode: None,
        positions_checked: checked,
        mismatch_count: log.count,
        truncated: log.count > log.items.len(),
        mismatches: log.items,
    })
}
