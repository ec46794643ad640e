use rayon::prelude::*;

use super::{rule_output, window_counts, BitRow, RuleParams, Tape, WindowCounts};
use crate::error::{Error, Result};

/// Range of output cells that can differ from 0 after one step of `tape`,
/// plus the input range the sliding windows over it read.
fn step_bounds(tape: &Tape, params: &RuleParams) -> Option<(i64, i64)> {
    if tape.is_constant() {
        return None;
    }
    // both constant regions map to 0, so only the cone over the core matters
    let lo = tape.origin() - params.reach_right();
    let hi = tape.core_end() - 1 + params.reach_left();
    Some((lo, hi))
}

/// Sliding-window counts along a row, updated in O(1) per cell.
///
/// Starting from cell `x`, each call to [`WindowScan::advance`] drops the
/// cell leaving each window on the left and adds the one entering on the
/// right.
pub struct WindowScan<'a> {
    buf: BitRow,
    params: &'a RuleParams,
    pos: usize,
    ones_inner: usize,
    ones_full: usize,
    end: usize,
}

impl<'a> WindowScan<'a> {
    /// Prepares a scan over output cells `lo..=hi` of the row after `tape`.
    pub fn new(tape: &Tape, lo: i64, hi: i64, params: &'a RuleParams) -> Self {
        let (g, l, d) = (params.gamma(), params.left(), params.delta());
        let buf = tape.read_range(lo - params.reach_left(), hi + params.reach_right());
        let ones_full = buf.count_ones_in(0, d);
        let ones_inner = buf.count_ones_in(l, l + g);
        WindowScan {
            end: (hi - lo + 1) as usize,
            buf,
            params,
            pos: 0,
            ones_inner,
            ones_full,
        }
    }

    #[inline]
    pub fn counts(&self) -> WindowCounts {
        WindowCounts {
            zeros_inner: self.params.gamma() - self.ones_inner,
            zeros_full: self.params.delta() - self.ones_full,
        }
    }

    /// Moves one cell to the right. Returns false once past the last cell.
    #[inline]
    pub fn advance(&mut self) -> bool {
        let (g, l, d) = (self.params.gamma(), self.params.left(), self.params.delta());
        self.pos += 1;
        if self.pos >= self.end {
            return false;
        }
        let i = self.pos;
        let b = &self.buf;
        self.ones_full = self.ones_full + b.get(i + d - 1) as usize - b.get(i - 1) as usize;
        self.ones_inner =
            self.ones_inner + b.get(i + l + g - 1) as usize - b.get(i + l - 1) as usize;
        true
    }
}

/// Evaluates output cells `lo..=hi` into a packed row.
fn step_range(tape: &Tape, lo: i64, hi: i64, params: &RuleParams) -> BitRow {
    let width = (hi - lo + 1) as usize;
    let (g, l, d, block) = (
        params.gamma(),
        params.left(),
        params.delta(),
        params.block(),
    );
    let buf = tape.read_range(lo - params.reach_left(), hi + params.reach_right());
    let mut ones_full = buf.count_ones_in(0, d);
    let mut ones_inner = buf.count_ones_in(l, l + g);
    let mut words = Vec::with_capacity(width.div_ceil(64));
    let mut acc = 0u64;
    for i in 0..width {
        if i > 0 {
            ones_full = ones_full + buf.get(i + d - 1) as usize - buf.get(i - 1) as usize;
            ones_inner = ones_inner + buf.get(i + l + g - 1) as usize - buf.get(i + l - 1) as usize;
        }
        let bit = ones_inner > 0 && d - ones_full > block;
        acc |= (bit as u64) << (i % 64);
        if i % 64 == 63 {
            words.push(acc);
            acc = 0;
        }
    }
    if !width.is_multiple_of(64) {
        words.push(acc);
    }
    BitRow::from_words(words, width)
}

/// One time step. Runs the sliding-window kernel over the dependency cone
/// of the core; everything outside it becomes 0.
pub fn step(tape: &Tape, params: &RuleParams) -> Tape {
    match step_bounds(tape, params) {
        None => Tape::zeros(),
        Some((lo, hi)) => Tape::new(lo, step_range(tape, lo, hi, params), false, false),
    }
}

/// Reference kernel: recounts both windows from scratch for every cell.
pub fn step_naive(tape: &Tape, params: &RuleParams) -> Tape {
    match step_bounds(tape, params) {
        None => Tape::zeros(),
        Some((lo, hi)) => {
            let core = BitRow::from_bools(
                (lo..=hi).map(|x| rule_output(window_counts(tape, x, params), params)),
            );
            Tape::new(lo, core, false, false)
        }
    }
}

/// Same result as [`step`], with the output row split into `jobs` chunks
/// evaluated on the rayon pool.
pub fn step_parallel(tape: &Tape, params: &RuleParams, jobs: usize) -> Tape {
    let Some((lo, hi)) = step_bounds(tape, params) else {
        return Tape::zeros();
    };
    let width = (hi - lo + 1) as usize;
    if jobs <= 1 || width < 4096 {
        return Tape::new(lo, step_range(tape, lo, hi, params), false, false);
    }
    // chunk boundaries on word multiples so the pieces concatenate by words
    let chunk = (width.div_ceil(jobs)).div_ceil(64) * 64;
    let pieces: Vec<BitRow> = (0..width.div_ceil(chunk))
        .into_par_iter()
        .map(|k| {
            let a = lo + (k * chunk) as i64;
            let b = (a + chunk as i64 - 1).min(hi);
            step_range(tape, a, b, params)
        })
        .collect();
    let mut words = Vec::with_capacity(width.div_ceil(64));
    for p in &pieces {
        words.extend_from_slice(p.words());
    }
    Tape::new(lo, BitRow::from_words(words, width), false, false)
}

/// A space-time diagram: the initial row and `steps` successors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagram {
    params: RuleParams,
    rows: Vec<Tape>,
}

pub fn evolve(init: &Tape, params: &RuleParams, steps: usize) -> Diagram {
    let mut rows = Vec::with_capacity(steps + 1);
    rows.push(init.clone());
    for t in 0..steps {
        let next = step(&rows[t], params);
        rows.push(next);
    }
    Diagram {
        params: *params,
        rows,
    }
}

impl Diagram {
    /// Evolves with each row computed by [`step_parallel`].
    pub fn evolve_parallel(init: &Tape, params: &RuleParams, steps: usize, jobs: usize) -> Diagram {
        let mut rows = Vec::with_capacity(steps + 1);
        rows.push(init.clone());
        for t in 0..steps {
            let next = step_parallel(&rows[t], params, jobs);
            rows.push(next);
        }
        Diagram {
            params: *params,
            rows,
        }
    }

    pub fn params(&self) -> &RuleParams {
        &self.params
    }

    pub fn rows(&self) -> &[Tape] {
        &self.rows
    }

    /// The last time index held (`T`).
    pub fn steps(&self) -> usize {
        self.rows.len() - 1
    }

    pub fn row(&self, t: usize) -> Option<&Tape> {
        self.rows.get(t)
    }

    /// `CA(x, t)`, or an error when `t` lies beyond the evolved rows.
    pub fn cell(&self, x: i64, t: i64) -> Result<bool> {
        self.checked_row(t).map(|row| row.get(x))
    }

    /// Window counts of cell `(x, t)` read from row `t - 1`.
    pub fn window_counts(&self, x: i64, t: i64) -> Result<WindowCounts> {
        if t < 1 {
            return Err(Error::OutsideDiagram(format!(
                "row {t} has no previous row"
            )));
        }
        self.checked_row(t - 1)
            .map(|prev| window_counts(prev, x, &self.params))
    }

    /// Extends the diagram in place until it holds at least `steps` steps.
    pub fn extend_to(&mut self, steps: usize) {
        while self.steps() < steps {
            let next = step(self.rows.last().expect("diagram has a row"), &self.params);
            self.rows.push(next);
        }
    }

    /// Union of the active extents of all rows.
    pub fn active_extent(&self) -> Option<(i64, i64)> {
        self.rows
            .iter()
            .filter_map(Tape::active_extent)
            .reduce(|(a, b), (c, d)| (a.min(c), b.max(d)))
    }

    fn checked_row(&self, t: i64) -> Result<&Tape> {
        if t < 0 || t as usize >= self.rows.len() {
            return Err(Error::OutsideDiagram(format!(
                "row {t} requested; diagram holds rows 0..={}",
                self.steps()
            )));
        }
        Ok(&self.rows[t as usize])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(g: usize, l: usize, r: usize, b: usize) -> RuleParams {
        RuleParams::new(g, l, r, b).unwrap()
    }

    #[test]
    fn constant_rows_die() {
        let params = p(3, 1, 2, 2);
        assert_eq!(step(&Tape::zeros(), &params), Tape::zeros());
        assert_eq!(step(&Tape::constant(true), &params), Tape::zeros());
    }

    #[test]
    fn xor_from_single_one() {
        let params = p(2, 0, 0, 0);
        let d = evolve(&Tape::single_one(0), &params, 3);
        let ones: Vec<Vec<i64>> = d.rows().iter().map(|r| r.ones_in(-10, 10)).collect();
        assert_eq!(
            ones,
            vec![vec![0], vec![0, 1], vec![0, 2], vec![0, 1, 2, 3]]
        );
    }

    #[test]
    fn zero_init_stays_zero() {
        let d = evolve(&Tape::zeros(), &p(2, 4, 4, 5), 20);
        assert!(d.rows().iter().all(Tape::is_constant));
        assert_eq!(d.active_extent(), None);
    }

    #[test]
    fn cell_outside_rows_is_an_error() {
        let d = evolve(&Tape::single_one(0), &p(2, 0, 1, 1), 4);
        assert!(d.cell(0, 4).is_ok());
        assert!(matches!(d.cell(0, 5), Err(Error::OutsideDiagram(_))));
        assert!(matches!(
            d.window_counts(0, 0),
            Err(Error::OutsideDiagram(_))
        ));
    }

    #[test]
    fn extend_matches_fresh_evolution() {
        let params = p(3, 1, 1, 2);
        let init = Tape::random(3, -8, 20);
        let mut d = evolve(&init, &params, 5);
        d.extend_to(12);
        assert_eq!(d, evolve(&init, &params, 12));
    }

    #[test]
    fn parallel_matches_sequential() {
        let params = p(2, 1, 1, 1);
        let init = Tape::random(11, 0, 9000);
        let a = evolve(&init, &params, 6);
        let b = Diagram::evolve_parallel(&init, &params, 6, 4);
        assert_eq!(a, b);
    }

    fn arb_params() -> impl Strategy<Value = RuleParams> {
        (2usize..5, 0usize..4, 0usize..4)
            .prop_flat_map(|(g, l, r)| (Just(g), Just(l), Just(r), 0..g + l + r))
            .prop_map(|(g, l, r, b)| RuleParams::new(g, l, r, b).unwrap())
    }

    fn arb_tape() -> impl Strategy<Value = Tape> {
        (
            -40i64..40,
            prop::collection::vec(any::<bool>(), 0..64),
            any::<bool>(),
            any::<bool>(),
        )
            .prop_map(|(o, bits, l, r)| Tape::new(o, BitRow::from_bools(bits), l, r))
    }

    proptest! {
        #[test]
        fn packed_kernel_matches_naive(params in arb_params(), tape in arb_tape()) {
            prop_assert_eq!(step(&tape, &params), step_naive(&tape, &params));
        }

        #[test]
        fn step_agrees_with_update_cell_everywhere(params in arb_params(), tape in arb_tape()) {
            let next = step(&tape, &params);
            let pad = 3 * params.delta() as i64;
            let (lo, hi) = (tape.origin() - pad, tape.core_end() + pad);
            for x in lo..=hi {
                prop_assert_eq!(next.get(x), crate::ca::update_cell(&tape, x, &params));
            }
        }

        #[test]
        fn shift_equivariance(params in arb_params(), tape in arb_tape(), k in -30i64..30) {
            let a = evolve(&tape.translate(k), &params, 6);
            let b = evolve(&tape, &params, 6);
            for (ra, rb) in a.rows().iter().zip(b.rows()) {
                prop_assert_eq!(ra, &rb.translate(k));
            }
        }

        #[test]
        fn scan_matches_direct_counts(params in arb_params(), tape in arb_tape()) {
            let (lo, hi) = (tape.origin() - 5, tape.core_end() + 5);
            let mut scan = WindowScan::new(&tape, lo, hi, &params);
            let mut x = lo;
            loop {
                let c = scan.counts();
                prop_assert_eq!(c, window_counts(&tape, x, &params));
                prop_assert!(c.zeros_inner <= c.zeros_full);
                if !scan.advance() { break; }
                x += 1;
            }
            prop_assert_eq!(x, hi);
        }
    }
}
