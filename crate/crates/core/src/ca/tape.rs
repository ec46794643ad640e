use std::fmt;
use std::str::FromStr;

use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::BitRow;
use crate::error::{Error, Result};

/// An eventually-constant bi-infinite row of bits.
///
/// Cells left of `origin` read `left_fill`, cells at or right of
/// `origin + core.len()` read `right_fill`, and the finite core covers the
/// rest. Tapes are kept in normal form: the core never starts with
/// `left_fill` nor ends with `right_fill`, and a tape with an empty core and
/// equal fills has origin 0.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Tape {
    origin: i64,
    core: BitRow,
    left_fill: bool,
    right_fill: bool,
}

impl Tape {
    pub fn new(origin: i64, core: BitRow, left_fill: bool, right_fill: bool) -> Tape {
        let mut tape = Tape {
            origin,
            core,
            left_fill,
            right_fill,
        };
        tape.normalize();
        tape
    }

    pub fn constant(bit: bool) -> Tape {
        Tape::new(0, BitRow::new(), bit, bit)
    }

    pub fn zeros() -> Tape {
        Tape::constant(false)
    }

    pub fn single_one(x: i64) -> Tape {
        Tape::new(x, BitRow::from_bools([true]), false, false)
    }

    /// The step configuration: 1 exactly at `x >= threshold`.
    pub fn step_at(threshold: i64) -> Tape {
        Tape::new(threshold, BitRow::new(), false, true)
    }

    /// A tape that is 1 exactly on the given cells.
    pub fn from_ones<I: IntoIterator<Item = i64>>(ones: I) -> Tape {
        let mut xs: Vec<i64> = ones.into_iter().collect();
        if xs.is_empty() {
            return Tape::zeros();
        }
        xs.sort_unstable();
        xs.dedup();
        let lo = xs[0];
        let mut core = BitRow::zeros((xs[xs.len() - 1] - lo + 1) as usize);
        for x in xs {
            core.set((x - lo) as usize, true);
        }
        Tape::new(lo, core, false, false)
    }

    /// `width` cells starting at `start` drawn from ChaCha8 seeded with
    /// `seed`; bits are consumed least-significant first from successive
    /// 64-bit outputs. Everything else is 0.
    pub fn random(seed: u64, start: i64, width: usize) -> Tape {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let words = (0..width.div_ceil(64)).map(|_| rng.next_u64()).collect();
        Tape::new(start, BitRow::from_words(words, width), false, false)
    }

    pub fn origin(&self) -> i64 {
        self.origin
    }

    pub fn core(&self) -> &BitRow {
        &self.core
    }

    /// One past the last core cell.
    pub fn core_end(&self) -> i64 {
        self.origin + self.core.len() as i64
    }

    pub fn left_fill(&self) -> bool {
        self.left_fill
    }

    pub fn right_fill(&self) -> bool {
        self.right_fill
    }

    /// True when every cell of the tape reads the same bit.
    pub fn is_constant(&self) -> bool {
        self.core.is_empty() && self.left_fill == self.right_fill
    }

    #[inline]
    pub fn get(&self, x: i64) -> bool {
        if x < self.origin {
            self.left_fill
        } else if x >= self.core_end() {
            self.right_fill
        } else {
            self.core.get((x - self.origin) as usize)
        }
    }

    /// Cells `lo..=hi` packed into a row (index 0 is cell `lo`).
    pub fn read_range(&self, lo: i64, hi: i64) -> BitRow {
        if hi < lo {
            return BitRow::new();
        }
        let len = (hi - lo + 1) as usize;
        let (o, e) = (self.origin, self.core_end());
        // fast path: the requested range covers the whole core
        if lo <= o && hi >= e - 1 {
            let mut out = BitRow::with_capacity(len);
            for _ in lo..o {
                out.push(self.left_fill);
            }
            append(&mut out, &self.core);
            for _ in e..=hi {
                out.push(self.right_fill);
            }
            return out;
        }
        BitRow::from_bools((lo..=hi).map(|x| self.get(x)))
    }

    /// Number of zero cells in `lo..=hi`.
    pub fn count_zeros(&self, lo: i64, hi: i64) -> usize {
        (lo..=hi).filter(|&x| !self.get(x)).count()
    }

    /// Positions of 1-cells inside `lo..=hi`.
    pub fn ones_in(&self, lo: i64, hi: i64) -> Vec<i64> {
        (lo..=hi).filter(|&x| self.get(x)).collect()
    }

    /// Smallest interval outside of which the tape equals its fills.
    /// For a constant tape this is empty and `None` is returned.
    pub fn active_extent(&self) -> Option<(i64, i64)> {
        if self.is_constant() {
            None
        } else if self.core.is_empty() {
            Some((self.origin, self.origin))
        } else {
            Some((self.origin, self.core_end() - 1))
        }
    }

    pub fn translate(&self, k: i64) -> Tape {
        if self.is_constant() {
            return self.clone();
        }
        Tape {
            origin: self.origin + k,
            ..self.clone()
        }
    }

    fn normalize(&mut self) {
        let lead = self
            .core
            .first_index_of(!self.left_fill)
            .unwrap_or(self.core.len());
        if lead == self.core.len() {
            // the whole core equals the left fill
            self.origin += lead as i64;
            self.core = BitRow::new();
        } else {
            let trail_end = self
                .core
                .last_index_of(!self.right_fill)
                .map_or(lead, |i| (i + 1).max(lead));
            if lead > 0 || trail_end < self.core.len() {
                self.core = self.core.slice(lead, trail_end);
            }
            self.origin += lead as i64;
        }
        if self.core.is_empty() && self.left_fill == self.right_fill {
            self.origin = 0;
        }
    }
}

fn append(dst: &mut BitRow, src: &BitRow) {
    if dst.len().is_multiple_of(64) {
        let len = dst.len() + src.len();
        let mut words = dst.words().to_vec();
        words.extend_from_slice(src.words());
        *dst = BitRow::from_words(words, len);
    } else {
        for b in src.iter() {
            dst.push(b);
        }
    }
}

fn bit_char(b: bool) -> char {
    if b {
        '1'
    } else {
        '0'
    }
}

impl fmt::Display for Tape {
    /// `origin=<int> left=<0|1> right=<0|1> core=<bits>`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "origin={} left={} right={} core=",
            self.origin,
            bit_char(self.left_fill),
            bit_char(self.right_fill)
        )?;
        for b in self.core.iter() {
            write!(f, "{}", bit_char(b))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Tape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tape({self})")
    }
}

impl FromStr for Tape {
    type Err = Error;

    fn from_str(s: &str) -> Result<Tape> {
        let (mut origin, mut left, mut right, mut core) = (None, None, None, None);
        for tok in s.split_whitespace() {
            let (k, v) = tok
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value in tape, got `{tok}`")))?;
            match k {
                "origin" => {
                    origin = Some(
                        v.parse::<i64>()
                            .map_err(|_| Error::Parse(format!("bad origin `{v}`")))?,
                    )
                }
                "left" => left = Some(parse_bit(v)?),
                "right" => right = Some(parse_bit(v)?),
                "core" => {
                    let mut row = BitRow::with_capacity(v.len());
                    for c in v.chars() {
                        row.push(parse_bit(&c.to_string())?);
                    }
                    core = Some(row);
                }
                _ => return Err(Error::Parse(format!("unknown tape field `{k}`"))),
            }
        }
        // `core=` with nothing after it splits as an empty value, which is allowed
        let missing = |name: &str| Error::Parse(format!("tape is missing `{name}`"));
        Ok(Tape::new(
            origin.ok_or_else(|| missing("origin"))?,
            core.ok_or_else(|| missing("core"))?,
            left.ok_or_else(|| missing("left"))?,
            right.ok_or_else(|| missing("right"))?,
        ))
    }
}

fn parse_bit(v: &str) -> Result<bool> {
    match v {
        "0" => Ok(false),
        "1" => Ok(true),
        _ => Err(Error::Parse(format!("expected a bit, got `{v}`"))),
    }
}
