use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use super::{double_bits, DoublingRun};
use crate::ca::{evolve, Diagram, RuleParams, Tape};
use crate::error::{Error, Result};

/// A point with exact dyadic coordinates. Serializes each coordinate as a
/// `"p/q"` string.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RationalPoint {
    pub x: Rational64,
    pub y: Rational64,
}

impl RationalPoint {
    pub fn new(x: Rational64, y: Rational64) -> Self {
        RationalPoint { x, y }
    }

    pub fn sub(&self, other: &RationalPoint) -> RationalPoint {
        RationalPoint {
            x: self.x - other.x,
            y: self.y - other.y,
        }
    }
}

pub fn ratio_string(r: &Rational64) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", ratio_string(&self.x), ratio_string(&self.y))
    }
}

impl Serialize for RationalPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        [ratio_string(&self.x), ratio_string(&self.y)].serialize(s)
    }
}

fn serialize_opt_ratio<S: Serializer>(
    r: &Option<Rational64>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    r.as_ref().map(ratio_string).serialize(s)
}

/// `2^-n` as a rational.
pub fn dyadic(n: usize) -> Rational64 {
    Rational64::new(1, 1 << n)
}

/// Level-`n` cell `(X, Y)` placed at its lower-right lattice corner
/// `((X+1)/2^n, Y/2^n)`.
pub fn rescale(raw: (i64, i64), n: usize) -> RationalPoint {
    let s = dyadic(n);
    RationalPoint::new(
        Rational64::from_integer(raw.0 + 1) * s,
        Rational64::from_integer(raw.1) * s,
    )
}

/// A single 0 flanked by 1s in its row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StarRecord {
    pub n: usize,
    pub raw: (i64, i64),
    pub position: RationalPoint,
}

impl StarRecord {
    pub fn new(n: usize, raw: (i64, i64)) -> Self {
        StarRecord {
            n,
            raw,
            position: rescale(raw, n),
        }
    }
}

/// Stars of row `t` of `d`, tagged with doubling level `n`.
pub fn find_stars(d: &Diagram, t: usize, n: usize) -> Vec<StarRecord> {
    let Some(row) = d.row(t) else {
        return Vec::new();
    };
    let (lo, hi) = (row.origin(), row.core_end() - 1);
    (lo..=hi)
        .filter(|&x| !row.get(x) && row.get(x - 1) && row.get(x + 1))
        .map(|x| StarRecord::new(n, (x, t as i64)))
        .collect()
}

/// Stars in every row, ordered by `(t, x)`.
pub fn find_all_stars(d: &Diagram, n: usize) -> Vec<StarRecord> {
    (0..=d.steps()).flat_map(|t| find_stars(d, t, n)).collect()
}

/// A run of `run_len` ones at `alpha+1 ..= alpha+run_len` with zeros
/// elsewhere.
pub fn claim1_configuration(alpha: i64, run_len: usize) -> Tape {
    Tape::from_ones((1..=run_len as i64).map(|i| alpha + i))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Claim1Probe {
    pub left: usize,
    pub right: usize,
    pub alpha: i64,
    pub run_len: usize,
    /// `2 alpha + 2 left + 4` on row 1.
    pub predicted: (i64, i64),
    pub stars: Vec<(i64, i64)>,
    pub star_at_predicted: bool,
}

/// Doubles [`claim1_configuration`] and steps it once under
/// `(2, 2L, 2R, 0)`, then lists the stars of row 1.
pub fn claim1_probe(left: usize, right: usize, alpha: i64, run_len: usize) -> Result<Claim1Probe> {
    let params = RuleParams::new(2, 2 * left, 2 * right, 0)?;
    let init = double_bits(&claim1_configuration(alpha, run_len));
    let d = evolve(&init, &params, 1);
    let stars: Vec<(i64, i64)> = find_stars(&d, 1, 1).into_iter().map(|s| s.raw).collect();
    let predicted = (2 * alpha + 2 * left as i64 + 4, 1);
    Ok(Claim1Probe {
        left,
        right,
        alpha,
        run_len,
        predicted,
        star_at_predicted: stars.contains(&predicted),
        stars,
    })
}

/// One doubling level of a tracked star lineage.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineageStep {
    pub n: usize,
    pub predicted: RationalPoint,
    pub predicted_raw: (i64, i64),
    pub detected: Option<StarRecord>,
    /// Stars found within one cell of the prediction.
    pub candidates: usize,
    pub matches: bool,
    /// Detected position minus the limit point.
    pub offset: Option<RationalPoint>,
    /// Componentwise ratio of this offset to the previous level's.
    pub ratio: Option<RationalPoint>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConvergenceReport {
    pub left: usize,
    pub seed: StarRecord,
    #[serde(serialize_with = "serialize_opt_ratio")]
    pub alpha: Option<Rational64>,
    #[serde(serialize_with = "serialize_opt_ratio")]
    pub y: Option<Rational64>,
    pub limit: RationalPoint,
    pub steps: Vec<LineageStep>,
    /// First level whose predicted cell held no star.
    pub lost_at: Option<usize>,
    pub ambiguous: Vec<usize>,
    /// Every level matched and every offset ratio is exactly `1/2`.
    pub converges: bool,
}

/// The closed-form lineage point `(alpha + 2L + 2/2^n, y - (3*2^n - 3)/2^n)`.
pub fn predicted_star(alpha: Rational64, y: Rational64, left: usize, n: usize) -> RationalPoint {
    let s = dyadic(n);
    let two_l = Rational64::from_integer(2 * left as i64);
    let p = Rational64::from_integer(1 << n);
    RationalPoint::new(
        alpha + two_l + Rational64::from_integer(2) * s,
        y - (Rational64::from_integer(3) * p - Rational64::from_integer(3)) * s,
    )
}

/// Fits `alpha` and `y` to `seed`, then follows the lineage through the
/// later levels of `run`, looking for each descendant within one cell of
/// the closed-form prediction.
pub fn star_limit_check(run: &DoublingRun, seed: &StarRecord) -> Result<ConvergenceReport> {
    if seed.n > run.n_max() {
        return Err(Error::OutsideDiagram(format!(
            "seed level {} beyond run depth {}",
            seed.n,
            run.n_max()
        )));
    }
    let left = run.base_params().left();
    let zero = predicted_star(Rational64::zero(), Rational64::zero(), left, seed.n);
    let alpha = seed.position.x - zero.x;
    let y = seed.position.y - zero.y;
    let limit = RationalPoint::new(
        alpha + Rational64::from_integer(2 * left as i64),
        y - Rational64::from_integer(3),
    );

    let mut steps = Vec::new();
    let mut lost_at = None;
    let mut ambiguous = Vec::new();
    let mut prev_offset = Some(seed.position.sub(&limit));
    let mut converges = true;
    steps.push(LineageStep {
        n: seed.n,
        predicted: seed.position,
        predicted_raw: seed.raw,
        detected: Some(*seed),
        candidates: 1,
        matches: true,
        offset: prev_offset,
        ratio: None,
    });
    for n in seed.n + 1..=run.n_max() {
        let predicted = predicted_star(alpha, y, left, n);
        let scale = Rational64::from_integer(1 << n);
        let (rx, ry) = (predicted.x * scale - Rational64::one(), predicted.y * scale);
        let predicted_raw = (rx.to_integer(), ry.to_integer());
        let exact = rx.is_integer() && ry.is_integer();
        let d = run.level(n).expect("level within n_max");
        let mut near = Vec::new();
        for t in predicted_raw.1 - 1..=predicted_raw.1 + 1 {
            if t < 0 {
                continue;
            }
            near.extend(
                find_stars(d, t as usize, n)
                    .into_iter()
                    .filter(|s| (s.raw.0 - predicted_raw.0).abs() <= 1),
            );
        }
        if near.len() > 1 {
            ambiguous.push(n);
        }
        let detected = near
            .iter()
            .find(|s| s.raw == predicted_raw)
            .or(near.first())
            .copied();
        let matches = exact && detected.map(|s| s.position == predicted).unwrap_or(false);
        let offset = detected.map(|s| s.position.sub(&limit));
        let ratio = match (offset, prev_offset) {
            (Some(o), Some(p)) if !p.x.is_zero() && !p.y.is_zero() => {
                Some(RationalPoint::new(o.x / p.x, o.y / p.y))
            }
            _ => None,
        };
        let half = RationalPoint::new(Rational64::new(1, 2), Rational64::new(1, 2));
        converges &= matches && ratio == Some(half);
        if detected.is_none() && lost_at.is_none() {
            lost_at = Some(n);
        }
        steps.push(LineageStep {
            n,
            predicted,
            predicted_raw,
            detected,
            candidates: near.len(),
            matches,
            offset,
            ratio,
        });
        prev_offset = offset;
    }
    Ok(ConvergenceReport {
        left,
        seed: *seed,
        alpha: Some(alpha),
        y: Some(y),
        limit,
        steps,
        lost_at,
        ambiguous,
        converges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ca::BitRow;

    fn r(p: i64, q: i64) -> Rational64 {
        Rational64::new(p, q)
    }

    #[test]
    fn closed_form_points() {
        let y = r(10, 1);
        assert_eq!(
            predicted_star(r(0, 1), y, 1, 1),
            RationalPoint::new(r(3, 1), y - r(3, 2))
        );
        assert_eq!(
            predicted_star(r(0, 1), y, 1, 2),
            RationalPoint::new(r(5, 2), y - r(9, 4))
        );
    }

    #[test]
    fn rescale_corner() {
        assert_eq!(rescale((9, 11), 3), RationalPoint::new(r(5, 4), r(11, 8)));
        assert_eq!(
            serde_json::to_string(&rescale((2, 4), 0)).unwrap(),
            r#"["3/1","4/1"]"#
        );
    }

    #[test]
    fn star_definition() {
        let row = Tape::new(
            0,
            BitRow::from_bools([true, true, false, true, true]),
            false,
            false,
        );
        let d = evolve(&row, &RuleParams::new(2, 0, 0, 0).unwrap(), 0);
        assert_eq!(
            find_stars(&d, 0, 0)
                .iter()
                .map(|s| s.raw)
                .collect::<Vec<_>>(),
            vec![(2, 0)]
        );
        let ones = evolve(
            &Tape::constant(true),
            &RuleParams::new(2, 0, 0, 0).unwrap(),
            0,
        );
        assert!(find_stars(&ones, 0, 0).is_empty());
    }

    #[test]
    fn fig5_lineage() {
        let i0 = Tape::from_ones([0, 5, 6, 7, 8, 9, 11]);
        let run = DoublingRun::new(&i0, RuleParams::new(2, 1, 1, 0).unwrap(), 3, 8).unwrap();
        let seed = StarRecord::new(0, (2, 4));
        assert!(find_stars(run.level(0).unwrap(), 4, 0).contains(&seed));
        let rep = star_limit_check(&run, &seed).unwrap();
        let raws: Vec<_> = rep
            .steps
            .iter()
            .map(|s| s.detected.map(|d| d.raw))
            .collect();
        assert_eq!(
            raws,
            vec![Some((2, 4)), Some((3, 5)), Some((5, 7)), Some((9, 11))]
        );
        assert!(rep.converges, "{rep:?}");
        assert_eq!(rep.limit, RationalPoint::new(r(1, 1), r(1, 1)));
    }
}
