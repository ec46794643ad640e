use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::ca::RuleParams;
use crate::error::{Error, Result};

/// A play-triangle: lower-right cell `(x, y)`, height `h` cells.
///
/// Row `i` from the top (`i = 1..=h`) sits at level `y + h - i` and covers
/// columns `x - (i-1)(gamma-1) ..= x`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Triangle {
    pub x: i64,
    pub y: i64,
    pub h: i64,
}

/// A horizontal run of cells `lo..=hi` on one level.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Span {
    pub level: i64,
    pub lo: i64,
    pub hi: i64,
}

impl Span {
    pub fn width(&self) -> usize {
        (self.hi - self.lo + 1).max(0) as usize
    }

    pub fn columns(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }

    pub fn contains(&self, x: i64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

impl Triangle {
    pub fn new(x: i64, y: i64, h: i64) -> Result<Triangle> {
        if y < 0 || h < 1 {
            return Err(Error::IllegalPosition(format!(
                "triangle ({x},{y},{h}) needs y >= 0 and h >= 1"
            )));
        }
        Ok(Triangle { x, y, h })
    }

    pub fn top(&self) -> (i64, i64) {
        (self.x, self.y + self.h - 1)
    }

    pub fn base(&self, params: &RuleParams) -> Span {
        let g1 = params.gamma() as i64 - 1;
        Span {
            level: self.y,
            lo: self.x - (self.h - 1) * g1,
            hi: self.x,
        }
    }

    /// The row directly beneath the base, widened by `left` and `right`.
    pub fn support(&self, params: &RuleParams) -> Span {
        let g1 = params.gamma() as i64 - 1;
        Span {
            level: self.y - 1,
            lo: self.x - self.h * g1 - params.left() as i64,
            hi: self.x + params.right() as i64,
        }
    }

    /// Rows of the triangle from the base upward.
    pub fn rows(&self, params: &RuleParams) -> impl Iterator<Item = Span> + '_ {
        let g1 = params.gamma() as i64 - 1;
        let (x, y, h) = (self.x, self.y, self.h);
        (1..=h).rev().map(move |i| Span {
            level: h - i + y,
            lo: x - (i - 1) * g1,
            hi: x,
        })
    }

    pub fn cells(&self, params: &RuleParams) -> Vec<(i64, i64)> {
        self.rows(params)
            .flat_map(|s| s.columns().map(move |c| (c, s.level)))
            .collect()
    }

    pub fn cell_count(&self, params: &RuleParams) -> usize {
        let g1 = params.gamma() as i64 - 1;
        (1..=self.h).map(|i| ((i - 1) * g1 + 1) as usize).sum()
    }

    pub fn is_terminal(&self) -> bool {
        self.y == 0
    }

    pub fn translate(&self, k: i64) -> Triangle {
        Triangle {
            x: self.x + k,
            ..*self
        }
    }

    /// Sort key `(y, h, x)` used to pick minimal counterexamples.
    pub fn key(&self) -> (i64, i64, i64) {
        (self.y, self.h, self.x)
    }
}

impl fmt::Display for Triangle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "T({},{},{})", self.x, self.y, self.h)
    }
}

impl FromStr for Triangle {
    type Err = Error;

    /// `x,y,h`
    fn from_str(s: &str) -> Result<Triangle> {
        let parts: Vec<&str> = s.split(',').map(str::trim).collect();
        let [x, y, h] = parts.as_slice() else {
            return Err(Error::Parse(format!("expected x,y,h, got `{s}`")));
        };
        let num = |v: &str| {
            v.parse::<i64>()
                .map_err(|_| Error::Parse(format!("bad integer `{v}`")))
        };
        Triangle::new(num(x)?, num(y)?, num(h)?)
    }
}

/// Which play-windows the mover may propose.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WindowMode {
    /// One full-width window per base cell `c`: `c-(gamma-1)-left ..= c+right`.
    #[default]
    Anchored,
    /// Every contiguous run of `delta` cells inside the support.
    AnyContiguous,
}

impl fmt::Display for WindowMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WindowMode::Anchored => "anchored",
            WindowMode::AnyContiguous => "any-contiguous",
        })
    }
}

impl FromStr for WindowMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "anchored" => Ok(WindowMode::Anchored),
            "any-contiguous" => Ok(WindowMode::AnyContiguous),
            _ => Err(Error::Parse(format!("unknown window mode `{s}`"))),
        }
    }
}

/// A proposed play-window one level below a triangle's base.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Window {
    pub level: i64,
    pub lo: i64,
    pub hi: i64,
    /// The base cell the window hangs from (anchored mode only).
    pub anchor: Option<i64>,
}

impl Window {
    pub fn columns(&self) -> std::ops::RangeInclusive<i64> {
        self.lo..=self.hi
    }

    pub fn width(&self) -> usize {
        (self.hi - self.lo + 1) as usize
    }
}

/// Anchored windows of `t`, one per base cell, left to right. A terminal
/// triangle has none.
pub fn window_anchors(t: &Triangle, params: &RuleParams) -> Vec<Window> {
    windows(t, params, WindowMode::Anchored)
}

pub fn windows(t: &Triangle, params: &RuleParams, mode: WindowMode) -> Vec<Window> {
    if t.y < 1 {
        return Vec::new();
    }
    let level = t.y - 1;
    match mode {
        WindowMode::Anchored => {
            let (g1, l, r) = (
                params.gamma() as i64 - 1,
                params.left() as i64,
                params.right() as i64,
            );
            t.base(params)
                .columns()
                .map(|c| Window {
                    level,
                    lo: c - g1 - l,
                    hi: c + r,
                    anchor: Some(c),
                })
                .collect()
        }
        WindowMode::AnyContiguous => {
            let s = t.support(params);
            let d = params.delta() as i64;
            (s.lo..=s.hi - d + 1)
                .map(|lo| Window {
                    level,
                    lo,
                    hi: lo + d - 1,
                    anchor: None,
                })
                .collect()
        }
    }
}
