//! Verdicts and witnesses returned by the identity checks.

use serde::Serialize;

use crate::arith::{BigRational, Poly, RatFn};

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// A matrix entry where the two sides of a matrix identity differ.
    Entry { row: usize, col: usize, lhs: RatFn, rhs: RatFn },
    /// The two sides of a scalar identity.
    Sides { lhs: RatFn, rhs: RatFn },
    /// `lhs - rhs`, expanded.
    Difference { difference: Poly },
    /// A variable whose images differ under two maps.
    Image { var: String, lhs: RatFn, rhs: RatFn },
    /// A sample point where two maps differ.
    Point {
        #[serde(serialize_with = "ser_rats")]
        point: Vec<BigRational>,
    },
}

fn ser_rats<S: serde::Serializer>(v: &[BigRational], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

#[derive(Debug, Clone, Serialize)]
pub struct Verdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
}

impl Verdict {
    pub fn pass() -> Self {
        Verdict {
            holds: true,
            witness: None,
        }
    }

    pub fn fail(w: Witness) -> Self {
        Verdict {
            holds: false,
            witness: Some(w),
        }
    }

    pub fn from_bool(holds: bool) -> Self {
        Verdict {
            holds,
            witness: None,
        }
    }
}
