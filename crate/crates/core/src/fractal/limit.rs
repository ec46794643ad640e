use num_rational::Rational64;
use serde::Serialize;

use super::scale_triangle;
use super::stars::{dyadic, rescale, RationalPoint};
use crate::game::Triangle;

/// A right-justified right-angle triangle in the plane.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RealTriangle {
    /// The right-angle corner.
    pub vertex: RationalPoint,
    #[serde(serialize_with = "ratio")]
    pub legs: Rational64,
}

fn ratio<S: serde::Serializer>(r: &Rational64, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&super::stars::ratio_string(r))
}

/// The stated limit of the rescaled doublings of `t`: right angle at
/// `(x, y-1)`, legs `h+1`.
pub fn limit_triangle(t: &Triangle) -> RealTriangle {
    RealTriangle {
        vertex: RationalPoint::new(
            Rational64::from_integer(t.x),
            Rational64::from_integer(t.y - 1),
        ),
        legs: Rational64::from_integer(t.h + 1),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RescaledIterate {
    pub n: usize,
    pub triangle: Triangle,
    pub shape: RealTriangle,
}

/// `t` scaled `n` times for `n = 0..=n_max`, each placed in level-0 units.
/// The vertex is the lower-right corner of the base's rightmost cell and
/// the legs are `h / 2^n`.
pub fn rescaled_iterates(t: &Triangle, n_max: usize) -> Vec<RescaledIterate> {
    let mut out = Vec::with_capacity(n_max + 1);
    let mut cur = *t;
    for n in 0..=n_max {
        out.push(RescaledIterate {
            n,
            triangle: cur,
            shape: RealTriangle {
                vertex: rescale((cur.x, cur.y), n),
                legs: Rational64::from_integer(cur.h) * dyadic(n),
            },
        });
        cur = scale_triangle(&cur);
    }
    out
}
