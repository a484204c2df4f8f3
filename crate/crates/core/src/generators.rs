//! Loop elementary and homogeneous functions by their closed monomial
//! formulas, the flow products `pi_i`, loop power sums and `kappa`.

use num_traits::One;

use crate::arith::{Ambient, BigRational, Monomial, Poly};
use crate::error::{Error, Result};

/// An ordered subset of the flows `1..=m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowSet {
    flows: Vec<usize>,
}

impl FlowSet {
    pub fn new(amb: Ambient, flows: Vec<usize>) -> Result<Self> {
        for &f in &flows {
            amb.check_flow(f)?;
        }
        if flows.windows(2).any(|w| w[0] >= w[1]) {
            return Err(Error::InvalidArgument(format!(
                "flows must be strictly increasing: {flows:?}"
            )));
        }
        Ok(FlowSet { flows })
    }

    pub fn all(amb: Ambient) -> Self {
        FlowSet {
            flows: (1..=amb.m).collect(),
        }
    }

    /// Every flow except `omit`.
    pub fn omitting(amb: Ambient, omit: usize) -> Self {
        FlowSet {
            flows: (1..=amb.m).filter(|&f| f != omit).collect(),
        }
    }

    pub fn empty() -> Self {
        FlowSet { flows: Vec::new() }
    }

    pub fn flows(&self) -> &[usize] {
        &self.flows
    }

    pub fn len(&self) -> usize {
        self.flows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.flows.is_empty()
    }
}

/// Monomial of a flow word where the `t`-th letter (0-based) carries color `r + t`.
///
/// Both closed formulas go through here: `e` feeds its increasing word,
/// `h` its decreasing word, so in `h` the largest flow receives color `r`.
pub fn colored_word(amb: Ambient, word: &[usize], r: i64) -> Monomial {
    let mut e = vec![0u16; amb.num_vars()];
    for (t, &flow) in word.iter().enumerate() {
        let v = amb.var(flow, r + t as i64).expect("flow validated");
        e[amb.index(v)] += 1;
    }
    Monomial::from_exps(e)
}

fn for_each_increasing(flows: &[usize], k: usize, strict: bool, f: &mut dyn FnMut(&[usize])) {
    fn go(
        flows: &[usize],
        k: usize,
        strict: bool,
        start: usize,
        word: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        if word.len() == k {
            f(word);
            return;
        }
        for idx in start..flows.len() {
            word.push(flows[idx]);
            go(flows, k, strict, if strict { idx + 1 } else { idx }, word, f);
            word.pop();
        }
    }
    let mut word = Vec::with_capacity(k);
    go(flows, k, strict, 0, &mut word, f);
}

/// `e_k^(r)` over `flows`: the sum over strictly increasing words
/// `i_1 < ... < i_k` of `x_{i_1}^(r) x_{i_2}^(r+1) ... x_{i_k}^(r+k-1)`.
pub fn loop_e(amb: Ambient, k: usize, r: i64, flows: &FlowSet) -> Poly {
    let mut terms = Vec::new();
    for_each_increasing(&flows.flows, k, true, &mut |w| {
        terms.push((colored_word(amb, w, r), BigRational::one()));
    });
    Poly::from_terms(amb, terms)
}

/// `h_k^(r)` over `flows`: the sum over weakly decreasing words
/// `i_k >= ... >= i_1` of `x_{i_k}^(r) x_{i_{k-1}}^(r+1) ... x_{i_1}^(r+k-1)`.
pub fn loop_h(amb: Ambient, k: usize, r: i64, flows: &FlowSet) -> Poly {
    let mut terms = Vec::new();
    let mut rev = Vec::with_capacity(k);
    for_each_increasing(&flows.flows, k, false, &mut |w| {
        rev.clear();
        rev.extend(w.iter().rev());
        terms.push((colored_word(amb, &rev, r), BigRational::one()));
    });
    Poly::from_terms(amb, terms)
}

/// `h_k^(r)` with a signed degree: zero for negative `k`.
pub fn loop_h_signed(amb: Ambient, k: i64, r: i64, flows: &FlowSet) -> Poly {
    if k < 0 {
        Poly::zero(amb)
    } else {
        loop_h(amb, k as usize, r, flows)
    }
}

/// `pi_i = x_i^(1) x_i^(2) ... x_i^(n)`.
pub fn pi(amb: Ambient, flow: usize) -> Result<Poly> {
    amb.check_flow(flow)?;
    let mut e = vec![0u16; amb.num_vars()];
    for c in 0..amb.n {
        e[(flow - 1) * amb.n + c] = 1;
    }
    Ok(Poly::monomial(amb, Monomial::from_exps(e), BigRational::one()))
}

/// Loop power sum `p_k = sum_i pi_i^k`, homogeneous of degree `k n`.
pub fn power_sum(amb: Ambient, k: usize) -> Result<Poly> {
    if k < 1 {
        return Err(Error::InvalidArgument("power sum index must be at least 1".into()));
    }
    let mut p = Poly::zero(amb);
    for i in 1..=amb.m {
        p = &p + &pi(amb, i)?.pow(k as u32);
    }
    Ok(p)
}

/// `kappa^(r)(x, y)`, written out as its telescoping sum
/// `sum_{t=0}^{n-1} y^(r+1)...y^(r+t) x^(r+t+1)...x^(r+n-1)`.
pub fn kappa(amb: Ambient, r: i64, x: usize, y: usize) -> Result<Poly> {
    amb.check_flow(x)?;
    amb.check_flow(y)?;
    if x == y {
        return Err(Error::InvalidArgument("kappa needs two distinct flows".into()));
    }
    let n = amb.n as i64;
    let mut terms = Vec::with_capacity(amb.n);
    for t in 0..n {
        let mut e = vec![0u16; amb.num_vars()];
        for s in 1..n {
            let flow = if s <= t { y } else { x };
            e[amb.index(amb.var(flow, r + s)?)] += 1;
        }
        terms.push((Monomial::from_exps(e), BigRational::one()));
    }
    Ok(Poly::from_terms(amb, terms))
}
