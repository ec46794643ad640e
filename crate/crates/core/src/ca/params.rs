use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// The quadruple `(gamma, left, right, block)` shared by the automaton and
/// the game. The full window width `delta = gamma + left + right` is derived
/// on demand and is always strictly greater than `block`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "ParamsRepr", into = "ParamsRepr")]
pub struct RuleParams {
    gamma: usize,
    left: usize,
    right: usize,
    block: usize,
}

#[derive(Serialize, Deserialize)]
struct ParamsRepr {
    gamma: usize,
    left: usize,
    right: usize,
    block: usize,
}

impl TryFrom<ParamsRepr> for RuleParams {
    type Error = Error;

    fn try_from(r: ParamsRepr) -> Result<Self> {
        RuleParams::new(r.gamma, r.left, r.right, r.block)
    }
}

impl From<RuleParams> for ParamsRepr {
    fn from(p: RuleParams) -> Self {
        ParamsRepr {
            gamma: p.gamma,
            left: p.left,
            right: p.right,
            block: p.block,
        }
    }
}

impl RuleParams {
    pub fn new(gamma: usize, left: usize, right: usize, block: usize) -> Result<Self> {
        if gamma < 2 {
            return Err(Error::InvalidParams(format!(
                "gamma must be at least 2, got {gamma}"
            )));
        }
        let delta = gamma + left + right;
        if delta <= block {
            return Err(Error::InvalidParams(format!(
                "gamma+left+right must exceed block ({delta} <= {block})"
            )));
        }
        Ok(RuleParams {
            gamma,
            left,
            right,
            block,
        })
    }

    pub fn gamma(&self) -> usize {
        self.gamma
    }

    pub fn left(&self) -> usize {
        self.left
    }

    pub fn right(&self) -> usize {
        self.right
    }

    pub fn block(&self) -> usize {
        self.block
    }

    pub fn delta(&self) -> usize {
        self.gamma + self.left + self.right
    }

    /// How far the dependency cone reaches leftward per time step.
    pub fn reach_left(&self) -> i64 {
        (self.gamma - 1 + self.left) as i64
    }

    /// How far the dependency cone reaches rightward per time step.
    pub fn reach_right(&self) -> i64 {
        self.right as i64
    }

    pub fn with_block(&self, block: usize) -> Result<Self> {
        RuleParams::new(self.gamma, self.left, self.right, block)
    }
}

impl fmt::Display for RuleParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "gamma={} left={} right={} block={}",
            self.gamma, self.left, self.right, self.block
        )
    }
}

impl FromStr for RuleParams {
    type Err = Error;

    /// Parses `gamma=.. left=.. right=.. block=..` in any order.
    fn from_str(s: &str) -> Result<Self> {
        let (mut gamma, mut left, mut right, mut block) = (None, None, None, None);
        for tok in s.split_whitespace() {
            let (key, val) = tok
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected key=value, got `{tok}`")))?;
            let val: usize = val.parse().map_err(|_| {
                Error::Parse(format!("`{key}` is not a non-negative integer: `{val}`"))
            })?;
            let slot = match key {
                "gamma" => &mut gamma,
                "left" => &mut left,
                "right" => &mut right,
                "block" => &mut block,
                _ => return Err(Error::Parse(format!("unknown parameter `{key}`"))),
            };
            if slot.replace(val).is_some() {
                return Err(Error::Parse(format!("duplicate parameter `{key}`")));
            }
        }
        let need =
            |v: Option<usize>, k: &str| v.ok_or_else(|| Error::Parse(format!("missing `{k}`")));
        RuleParams::new(
            need(gamma, "gamma")?,
            need(left, "left")?,
            need(right, "right")?,
            need(block, "block")?,
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_is_derived() {
        let p = RuleParams::new(3, 2, 1, 2).unwrap();
        assert_eq!(p.delta(), 6);
        assert_eq!(p.reach_left(), 4);
        assert_eq!(p.reach_right(), 1);
    }

    #[test]
    fn rejects_small_gamma_and_overblocking() {
        assert!(matches!(
            RuleParams::new(1, 0, 0, 0),
            Err(Error::InvalidParams(_))
        ));
        assert!(matches!(
            RuleParams::new(2, 0, 0, 2),
            Err(Error::InvalidParams(_))
        ));
        assert!(RuleParams::new(2, 0, 0, 1).is_ok());
    }

    #[test]
    fn text_round_trip() {
        let p = RuleParams::new(2, 4, 4, 5).unwrap();
        assert_eq!(p.to_string().parse::<RuleParams>().unwrap(), p);
        let q: RuleParams = "block=1 right=1 gamma=2 left=0".parse().unwrap();
        assert_eq!(q, RuleParams::new(2, 0, 1, 1).unwrap());
        assert!("gamma=2 left=0 right=1".parse::<RuleParams>().is_err());
        assert!("gamma=2 left=0 right=1 block=x"
            .parse::<RuleParams>()
            .is_err());
    }

    #[test]
    fn serde_validates() {
        let bad = r#"{"gamma":2,"left":0,"right":0,"block":5}"#;
        assert!(serde_json::from_str::<RuleParams>(bad).is_err());
        let p = RuleParams::new(3, 1, 0, 2).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(serde_json::from_str::<RuleParams>(&s).unwrap(), p);
    }
}
