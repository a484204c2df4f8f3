//! A classical (single color) symmetric polynomial oracle over integer
//! exponent vectors, independent of the library's arithmetic.

#![allow(dead_code)]

use std::collections::BTreeMap;

use loopsym::{Ambient, Poly};
use num_traits::ToPrimitive;

/// Integer polynomial keyed by exponent vectors in `x_1, ..., x_m`.
pub type IPoly = BTreeMap<Vec<u32>, i64>;

fn clean(mut p: IPoly) -> IPoly {
    p.retain(|_, c| *c != 0);
    p
}

pub fn one(m: usize) -> IPoly {
    BTreeMap::from([(vec![0; m], 1)])
}

pub fn add(a: &IPoly, b: &IPoly, sign: i64) -> IPoly {
    let mut out = a.clone();
    for (e, c) in b {
        *out.entry(e.clone()).or_insert(0) += sign * c;
    }
    clean(out)
}

pub fn mul(a: &IPoly, b: &IPoly) -> IPoly {
    let mut out = IPoly::new();
    for (ea, ca) in a {
        for (eb, cb) in b {
            let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
            *out.entry(e).or_insert(0) += ca * cb;
        }
    }
    clean(out)
}

/// Every exponent vector of length `m` with entries summing to `k`.
pub fn compositions(m: usize, k: u32) -> Vec<Vec<u32>> {
    if m == 0 {
        return if k == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=k {
        for mut rest in compositions(m - 1, k - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn elementary(m: usize, k: u32) -> IPoly {
    compositions(m, k)
        .into_iter()
        .filter(|e| e.iter().all(|&x| x <= 1))
        .map(|e| (e, 1))
        .collect()
}

pub fn complete(m: usize, k: u32) -> IPoly {
    compositions(m, k).into_iter().map(|e| (e, 1)).collect()
}

fn perms(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in perms(n - 1) {
        for pos in 0..=p.len() {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            out.push(q);
        }
    }
    out
}

fn sign(p: &[usize]) -> i64 {
    let mut s = 1;
    for i in 0..p.len() {
        for j in i + 1..p.len() {
            if p[i] > p[j] {
                s = -s;
            }
        }
    }
    s
}

/// `det(x_j^{alpha_i})`.
pub fn alternant(m: usize, alpha: &[u32]) -> IPoly {
    let mut out = IPoly::new();
    for p in perms(m) {
        let mut e = vec![0; m];
        for (i, &j) in p.iter().enumerate() {
            e[j] = alpha[i];
        }
        *out.entry(e).or_insert(0) += sign(&p);
    }
    clean(out)
}

/// Exact division by lex-leading terms; panics on a nonzero remainder.
pub fn divide(num: &IPoly, den: &IPoly) -> IPoly {
    let (dl, dc) = den.iter().next_back().expect("nonzero divisor");
    let mut rem = num.clone();
    let mut q = IPoly::new();
    while let Some((rl, rc)) = rem.iter().next_back() {
        assert!(rl.iter().zip(dl).all(|(a, b)| a >= b), "inexact division");
        assert_eq!(rc % dc, 0, "inexact division");
        let e: Vec<u32> = rl.iter().zip(dl).map(|(a, b)| a - b).collect();
        let term = BTreeMap::from([(e, rc / dc)]);
        rem = add(&rem, &mul(&term, den), -1);
        q = add(&q, &term, 1);
    }
    q
}

/// `a_{lambda + delta} / a_delta`.
pub fn schur(m: usize, parts: &[usize]) -> IPoly {
    let delta: Vec<u32> = (0..m as u32).rev().collect();
    let alpha: Vec<u32> = (0..m)
        .map(|i| parts.get(i).copied().unwrap_or(0) as u32 + delta[i])
        .collect();
    divide(&alternant(m, &alpha), &alternant(m, &delta))
}

/// A single-color library polynomial as an oracle polynomial.
pub fn from_lib(p: &Poly) -> IPoly {
    let amb: Ambient = p.ambient();
    assert_eq!(amb.n, 1);
    p.terms()
        .map(|(mono, c)| {
            assert!(c.is_integer());
            (
                mono.exps().iter().map(|&e| e as u32).collect(),
                c.to_integer().to_i64().expect("small coefficient"),
            )
        })
        .collect()
}
