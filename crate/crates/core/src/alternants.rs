//! Loop alternants, the `H M = A` factorization behind the ratio of
//! alternants, and the loop Murnaghan-Nakayama check.

use serde::Serialize;

use crate::action::SubstitutionMap;
use crate::arith::{Ambient, Poly, RatFn};
use crate::det::det_ratfn;
use crate::error::{Error, Result};
use crate::generators::{loop_e, loop_h, loop_h_signed, power_sum, FlowSet};
use crate::strips::add_border_strips;
use crate::tableaux::{loop_schur, Partition};
use crate::verify::{Verdict, Witness};

/// `delta = (m-1, m-2, ..., 1, 0)`.
pub fn staircase(m: usize) -> Vec<usize> {
    (0..m).rev().collect()
}

/// `lambda + delta` for a partition with at most `m` parts.
pub fn shift_by_staircase(shape: &Partition, m: usize) -> Result<Vec<usize>> {
    if shape.length() > m {
        return Err(Error::InvalidArgument(format!("shape {shape} has more than m = {m} parts")));
    }
    Ok(shape
        .padded(m)
        .iter()
        .zip(staircase(m))
        .map(|(p, d)| p + d)
        .collect())
}

/// An exponent sequence, its color, and the alternant matrix
/// `A_ij = t_{j,m}(h_{alpha_i}^{(r - alpha_i + 1)}(x_m))`.
#[derive(Debug, Clone, Serialize)]
pub struct AlternantSpec {
    pub alpha: Vec<usize>,
    pub r: i64,
    pub matrix: Vec<Vec<RatFn>>,
}

/// Holds the transposition maps `t_{j,m}` for one ambient so that every
/// alternant in a sweep reuses them.
pub struct Alternants {
    amb: Ambient,
    to_last: Vec<SubstitutionMap>,
}

impl Alternants {
    pub fn new(amb: Ambient) -> Result<Self> {
        let to_last = (1..=amb.m)
            .map(|j| SubstitutionMap::transposition(amb, j, amb.m))
            .collect::<Result<Vec<_>>>()?;
        Ok(Alternants { amb, to_last })
    }

    pub fn ambient(&self) -> Ambient {
        self.amb
    }

    /// The flattened map `t_{j,m}` for 1-based `j`.
    pub fn transposition_to_last(&self, j: usize) -> &SubstitutionMap {
        &self.to_last[j - 1]
    }

    fn last_flow(&self) -> FlowSet {
        FlowSet::new(self.amb, vec![self.amb.m]).expect("m is a valid flow")
    }

    pub fn alternant_matrix(&self, alpha: &[usize], r: i64) -> Result<AlternantSpec> {
        let m = self.amb.m;
        if alpha.len() != m {
            return Err(Error::Shape(format!("alpha has length {}, expected m = {m}", alpha.len())));
        }
        let last = self.last_flow();
        let matrix = alpha
            .iter()
            .map(|&a| {
                let mono = loop_h(self.amb, a, r - a as i64 + 1, &last);
                self.to_last
                    .iter()
                    .map(|t| t.apply_poly(&mono))
                    .collect::<Result<Vec<_>>>()
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(AlternantSpec {
            alpha: alpha.to_vec(),
            r,
            matrix,
        })
    }

    pub fn alternant_det(&self, spec: &AlternantSpec) -> Result<RatFn> {
        det_ratfn(self.amb, &spec.matrix)
    }

    /// `a_alpha^(r)`.
    pub fn alternant(&self, alpha: &[usize], r: i64) -> Result<RatFn> {
        self.alternant_det(&self.alternant_matrix(alpha, r)?)
    }

    /// `M_ij = (-1)^{m-i} t_{j,m}(e_{m-i}^{(r+i+1-m)}(x_1, ..., x_{m-1}))`.
    pub fn m_matrix(&self, r: i64) -> Result<Vec<Vec<RatFn>>> {
        let m = self.amb.m;
        let rest = FlowSet::omitting(self.amb, m);
        (1..=m)
            .map(|i| {
                let e = loop_e(self.amb, m - i, r + i as i64 + 1 - m as i64, &rest);
                let e = if (m - i) % 2 == 1 { -e } else { e };
                self.to_last.iter().map(|t| t.apply_poly(&e)).collect()
            })
            .collect()
    }

    /// `H_ij = h_{alpha_i - m + j}^{(r - alpha_i + 1)}(x_1, ..., x_m)`.
    pub fn h_matrix(&self, alpha: &[usize], r: i64) -> Vec<Vec<Poly>> {
        let m = self.amb.m as i64;
        let all = FlowSet::all(self.amb);
        alpha
            .iter()
            .map(|&a| {
                let a = a as i64;
                (1..=m).map(|j| loop_h_signed(self.amb, a - m + j, r - a + 1, &all)).collect()
            })
            .collect()
    }

    /// Check `H_alpha^{(r-m+1)} M^(r) = A_alpha^(r)` entry by entry.
    pub fn verify_hma(&self, alpha: &[usize], r: i64) -> Result<Verdict> {
        if alpha.len() != self.amb.m {
            return Err(Error::Shape(format!("alpha has length {}, expected m = {}", alpha.len(), self.amb.m)));
        }
        if alpha.windows(2).any(|w| w[0] <= w[1]) {
            return Err(Error::InvalidArgument(format!(
                "alpha {alpha:?} is not lambda + delta for a partition lambda"
            )));
        }
        let h = self.h_matrix(alpha, r);
        let mm = self.m_matrix(r)?;
        let a = self.alternant_matrix(alpha, r)?;
        let m = self.amb.m;
        for i in 0..m {
            for j in 0..m {
                let terms: Vec<RatFn> = (0..m)
                    .filter(|&k| !h[i][k].is_zero())
                    .map(|k| RatFn::from_poly(&h[i][k]).try_mul(&mm[k][j]))
                    .collect::<Result<_>>()?;
                let lhs = RatFn::sum(self.amb, terms.iter());
                let rhs = &a.matrix[i][j];
                if !lhs.eq_cross(rhs)? {
                    return Ok(Verdict::fail(Witness::Entry {
                        row: i + 1,
                        col: j + 1,
                        lhs,
                        rhs: rhs.clone(),
                    }));
                }
            }
        }
        Ok(Verdict::pass())
    }

    /// Check `s_lambda^{(r-m+1)} a_delta^(r) = a_{lambda+delta}^(r)` in
    /// cross-multiplied form.
    pub fn verify_roa(&self, shape: &Partition, r: i64) -> Result<Verdict> {
        let m = self.amb.m;
        let alpha = shift_by_staircase(shape, m)?;
        let schur = loop_schur(self.amb, shape, r - m as i64 + 1);
        let a_delta = self.alternant(&staircase(m), r)?;
        let a_alpha = self.alternant(&alpha, r)?;
        let lhs = RatFn::from_poly(&schur).try_mul(&a_delta)?;
        if lhs.eq_cross(&a_alpha)? {
            Ok(Verdict::pass())
        } else {
            Ok(Verdict::fail(Witness::Sides { lhs, rhs: a_alpha }))
        }
    }
}

/// `pi_m^k * h_a^(b)(x_m) = h_{a + nk}^(b)(x_m)`.
pub fn shift_single_flow(amb: Ambient, a: usize, b: i64, k: usize) -> Result<(Poly, Poly)> {
    let last = FlowSet::new(amb, vec![amb.m])?;
    let lhs = crate::generators::pi(amb, amb.m)?.pow(k as u32) * loop_h(amb, a, b, &last);
    let rhs = loop_h(amb, a + amb.n * k, b, &last);
    Ok((lhs, rhs))
}

/// The loop Murnaghan-Nakayama identity
/// `p_k s_lambda^(r) = sum_mu (-1)^{ht(mu/lambda)} s_mu^(r)`, summed over
/// border strips of size `k n`, expanded as polynomials.
///
/// Requires `m >= l(lambda) + k n` unless `force` is set; a forced run only
/// reports whether the expansion agrees.
pub fn verify_mn(amb: Ambient, shape: &Partition, k: usize, r: i64, force: bool) -> Result<Verdict> {
    let size = k * amb.n;
    if k == 0 {
        return Err(Error::InvalidArgument("k must be positive".into()));
    }
    if amb.m < shape.length() + size && !force {
        return Err(Error::HypothesisNotMet(format!(
            "m = {} < l(lambda) + kn = {}",
            amb.m,
            shape.length() + size
        )));
    }
    let lhs = power_sum(amb, k)? * loop_schur(amb, shape, r);
    let mut rhs = Poly::zero(amb);
    for strip in add_border_strips(shape, size) {
        let s = loop_schur(amb, &strip.outer(), r);
        rhs = if strip.sign() > 0 { rhs + s } else { rhs - s };
    }
    let diff = &lhs - &rhs;
    if diff.is_zero() {
        Ok(Verdict::pass())
    } else {
        Ok(Verdict::fail(Witness::Difference { difference: diff }))
    }
}
