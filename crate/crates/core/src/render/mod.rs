//! Raster extraction and Netpbm/CSV writers.

mod pnm;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::ca::Diagram;
use crate::error::{Error, Result};

pub use pnm::{write_csv, write_pbm_ascii, write_pbm_binary, write_pgm, write_ppm, PBM_LINE_WIDTH};

/// Which end of the image holds the initial row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
pub enum Orientation {
    #[serde(rename = "t0-top")]
    T0Top,
    /// Initial row at the bottom, later rows above it.
    #[default]
    #[serde(rename = "t0-bottom")]
    T0Bottom,
}

impl fmt::Display for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Orientation::T0Top => "t0-top",
            Orientation::T0Bottom => "t0-bottom",
        })
    }
}

impl FromStr for Orientation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "t0-top" => Ok(Orientation::T0Top),
            "t0-bottom" => Ok(Orientation::T0Bottom),
            _ => Err(Error::Parse(format!("unknown orientation `{s}`"))),
        }
    }
}

/// A 1-bit image, rows top to bottom; `true` is black.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bitmap {
    pub width: usize,
    pub height: usize,
    pub rows: Vec<Vec<bool>>,
}

impl Bitmap {
    /// Columns `xmin..=xmax` of every row of `d`.
    pub fn from_diagram(d: &Diagram, xmin: i64, xmax: i64, orientation: Orientation) -> Bitmap {
        let mut rows: Vec<Vec<bool>> = d
            .rows()
            .iter()
            .map(|row| {
                if xmax < xmin {
                    Vec::new()
                } else {
                    row.read_range(xmin, xmax).iter().collect()
                }
            })
            .collect();
        if orientation == Orientation::T0Bottom {
            rows.reverse();
        }
        Bitmap {
            width: (xmax - xmin + 1).max(0) as usize,
            height: rows.len(),
            rows,
        }
    }

    pub fn flipped(&self) -> Bitmap {
        let mut rows = self.rows.clone();
        rows.reverse();
        Bitmap { rows, ..*self }
    }
}

/// An 8-bit RGB image, rows top to bottom.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Raster {
    pub width: usize,
    pub height: usize,
    pub pixels: Vec<[u8; 3]>,
}

impl Raster {
    pub fn filled(width: usize, height: usize, color: [u8; 3]) -> Raster {
        Raster {
            width,
            height,
            pixels: vec![color; width * height],
        }
    }

    pub fn get(&self, x: usize, y: usize) -> [u8; 3] {
        self.pixels[y * self.width + x]
    }

    pub fn set(&mut self, x: usize, y: usize, color: [u8; 3]) {
        self.pixels[y * self.width + x] = color;
    }

    pub fn flipped(&self) -> Raster {
        let mut pixels = Vec::with_capacity(self.pixels.len());
        for row in self.pixels.chunks(self.width.max(1)).rev() {
            pixels.extend_from_slice(row);
        }
        Raster { pixels, ..*self }
    }

    /// Rec. 601 luma, rounded.
    pub fn to_gray(&self) -> Vec<u8> {
        self.pixels
            .iter()
            .map(|&[r, g, b]| {
                ((299 * r as u32 + 587 * g as u32 + 114 * b as u32 + 500) / 1000) as u8
            })
            .collect()
    }
}
