use std::fmt;
use std::str::FromStr;

use sha2::{Digest, Sha256};

use super::Triangle;
use crate::ca::{RuleParams, Tape};
use crate::error::{Error, Result};

/// Rule parameters plus the terminal level. The 1-cells of `level0` are the
/// obstacles; the same row is the automaton's initial configuration.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Board {
    params: RuleParams,
    level0: Tape,
}

impl Board {
    /// Fails if the terminal level holds no obstacle at all.
    pub fn new(params: RuleParams, level0: Tape) -> Result<Board> {
        let has_obstacle =
            level0.left_fill() || level0.right_fill() || level0.core().count_ones() > 0;
        if !has_obstacle {
            return Err(Error::IllegalPosition(
                "terminal level must hold at least one obstacle".into(),
            ));
        }
        Ok(Board { params, level0 })
    }

    pub fn params(&self) -> &RuleParams {
        &self.params
    }

    pub fn level0(&self) -> &Tape {
        &self.level0
    }

    pub fn is_obstacle(&self, x: i64) -> bool {
        self.level0.get(x)
    }

    /// On the board and clear of every obstacle. Obstacles only live on
    /// level 0, so only triangles standing on it can touch one.
    pub fn is_legal(&self, t: &Triangle) -> bool {
        if t.y < 0 || t.h < 1 {
            return false;
        }
        t.y > 0 || !t.base(&self.params).columns().any(|c| self.is_obstacle(c))
    }

    pub fn check_legal(&self, t: &Triangle) -> Result<()> {
        if self.is_legal(t) {
            Ok(())
        } else {
            Err(Error::IllegalPosition(format!(
                "{t} is off the board or covers an obstacle"
            )))
        }
    }

    /// Hex SHA-256 of the canonical board text.
    pub fn digest(&self) -> String {
        sha256_hex(self.to_string().as_bytes())
    }

    pub fn translate(&self, k: i64) -> Board {
        Board {
            params: self.params,
            level0: self.level0.translate(k),
        }
    }
}

pub(crate) fn sha256_hex(bytes: &[u8]) -> String {
    Sha256::digest(bytes)
        .iter()
        .map(|b| format!("{b:02x}"))
        .collect()
}

impl fmt::Display for Board {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.params)?;
        writeln!(f, "{}", self.level0)
    }
}

impl FromStr for Board {
    type Err = Error;

    /// A params line then a tape line; blank lines and `#` comments are skipped.
    fn from_str(s: &str) -> Result<Board> {
        let mut lines = s
            .lines()
            .map(str::trim)
            .filter(|l| !l.is_empty() && !l.starts_with('#'));
        let params = lines
            .next()
            .ok_or_else(|| Error::Parse("board file has no params line".into()))?
            .parse()?;
        let level0 = lines
            .next()
            .ok_or_else(|| Error::Parse("board file has no tape line".into()))?
            .parse()?;
        if let Some(extra) = lines.next() {
            return Err(Error::Parse(format!(
                "unexpected trailing line in board file: `{extra}`"
            )));
        }
        Board::new(params, level0)
    }
}
