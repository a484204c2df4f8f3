//! Exact arithmetic: rationals, sparse polynomials in the `m * n` variables
//! `x_i^(j)`, and rational functions over them.
//!
//! Colors are stored 0-based and printed 1-based. Every constructor that takes
//! a color accepts any integer and reduces it modulo `n`.

mod json;
mod monomial;
mod poly;
mod ratfn;

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use monomial::Monomial;
pub use num_rational::BigRational;
pub use poly::Poly;
pub use ratfn::RatFn;

/// Build an exact rational from a pair of machine integers.
pub fn rat(num: i64, den: i64) -> BigRational {
    BigRational::new(num.into(), den.into())
}

/// Build an exact integer-valued rational.
pub fn int(v: i64) -> BigRational {
    BigRational::from_integer(v.into())
}

/// The variable universe: `m` flows, each carrying `n` colors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Ambient {
    pub m: usize,
    pub n: usize,
}

impl Ambient {
    pub fn new(m: usize, n: usize) -> Result<Self> {
        if m == 0 || n == 0 {
            return Err(Error::InvalidAmbient { m, n });
        }
        Ok(Ambient { m, n })
    }

    pub fn num_vars(&self) -> usize {
        self.m * self.n
    }

    /// Reduce a 1-based color superscript to its 0-based residue.
    pub fn color(&self, c: i64) -> usize {
        (c - 1).rem_euclid(self.n as i64) as usize
    }

    /// The variable `x_flow^(color)`, with `color` given as a superscript.
    pub fn var(&self, flow: usize, color: i64) -> Result<VarId> {
        if flow == 0 || flow > self.m {
            return Err(Error::FlowOutOfRange { flow, m: self.m });
        }
        Ok(VarId {
            flow,
            color: self.color(color),
        })
    }

    pub fn check_flow(&self, flow: usize) -> Result<()> {
        if flow == 0 || flow > self.m {
            Err(Error::FlowOutOfRange { flow, m: self.m })
        } else {
            Ok(())
        }
    }

    /// Position of a variable in a dense exponent vector.
    pub fn index(&self, v: VarId) -> usize {
        (v.flow - 1) * self.n + v.color
    }

    pub fn var_at(&self, index: usize) -> VarId {
        VarId {
            flow: index / self.n + 1,
            color: index % self.n,
        }
    }

    /// All variables in canonical order: by flow, then by color.
    pub fn vars(&self) -> impl Iterator<Item = VarId> + '_ {
        (0..self.num_vars()).map(|i| self.var_at(i))
    }

    pub(crate) fn ensure_same(&self, other: &Ambient) -> Result<()> {
        if self != other {
            Err(Error::AmbientMismatch(*self, *other))
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Ambient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m={}, n={})", self.m, self.n)
    }
}

/// The indeterminate `x_flow^(color + 1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VarId {
    /// 1-based flow index `i`.
    pub flow: usize,
    /// 0-based color residue.
    pub color: usize,
}

impl VarId {
    /// The color as printed (1..=n).
    pub fn superscript(&self) -> usize {
        self.color + 1
    }

    /// JSON key form `x:i:j`.
    pub fn key(&self) -> String {
        format!("x:{}:{}", self.flow, self.superscript())
    }
}

impl fmt::Display for VarId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}^({})", self.flow, self.superscript())
    }
}
