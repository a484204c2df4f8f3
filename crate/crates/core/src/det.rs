//! Determinants over polynomial and rational-function matrices.

use crate::arith::{Ambient, Poly, RatFn};
use crate::error::{Error, Result};

/// Largest size for which [`det_poly`] uses Leibniz expansion.
pub const LEIBNIZ_MAX: usize = 6;

/// All permutations of `0..n` in lexicographic order, with their signs.
pub fn permutations(n: usize) -> Vec<(Vec<usize>, i32)> {
    fn go(n: usize, used: &mut [bool], cur: &mut Vec<usize>, out: &mut Vec<(Vec<usize>, i32)>) {
        if cur.len() == n {
            out.push((cur.clone(), sign_of(cur)));
            return;
        }
        for v in 0..n {
            if !used[v] {
                used[v] = true;
                cur.push(v);
                go(n, used, cur, out);
                cur.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(n, &mut vec![false; n], &mut Vec::with_capacity(n), &mut out);
    out
}

/// Sign of a sequence of distinct integers, `(-1)^{inversions}`.
pub fn sign_of<T: Ord>(seq: &[T]) -> i32 {
    let inv = inversions(seq);
    if inv.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

pub fn inversions<T: Ord>(seq: &[T]) -> usize {
    let mut inv = 0;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inv += 1;
            }
        }
    }
    inv
}

fn check_square<T>(mat: &[Vec<T>]) -> Result<usize> {
    let n = mat.len();
    if mat.iter().any(|row| row.len() != n) {
        return Err(Error::Shape("determinant of a non-square matrix".into()));
    }
    Ok(n)
}

pub fn det_leibniz_poly(amb: Ambient, mat: &[Vec<Poly>]) -> Result<Poly> {
    let n = check_square(mat)?;
    let mut total = Poly::zero(amb);
    for (perm, sign) in permutations(n) {
        let mut term = Poly::one(amb);
        for (i, &j) in perm.iter().enumerate() {
            let e = &mat[i][j];
            if e.is_zero() {
                term = Poly::zero(amb);
                break;
            }
            term = &term * e;
        }
        total = if sign > 0 { &total + &term } else { &total - &term };
    }
    Ok(total)
}

/// Fraction-free Gaussian elimination; every division is exact.
pub fn det_bareiss_poly(amb: Ambient, mat: &[Vec<Poly>]) -> Result<Poly> {
    let n = check_square(mat)?;
    if n == 0 {
        return Ok(Poly::one(amb));
    }
    let mut a: Vec<Vec<Poly>> = mat.to_vec();
    let mut sign = 1;
    let mut prev = Poly::one(amb);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return Ok(Poly::zero(amb)),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[k][k] * &a[i][j]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num
                    .div_exact(&prev)
                    .expect("Bareiss step divides exactly");
            }
        }
        prev = a[k][k].clone();
    }
    let d = a[n - 1][n - 1].clone();
    Ok(if sign < 0 { -d } else { d })
}

pub fn det_poly(amb: Ambient, mat: &[Vec<Poly>]) -> Result<Poly> {
    if mat.len() <= LEIBNIZ_MAX {
        det_leibniz_poly(amb, mat)
    } else {
        det_bareiss_poly(amb, mat)
    }
}

/// Leibniz expansion over rational functions; the signed products are summed
/// in one pass over their common factored denominator.
pub fn det_ratfn(amb: Ambient, mat: &[Vec<RatFn>]) -> Result<RatFn> {
    let n = check_square(mat)?;
    let mut terms = Vec::new();
    for (perm, sign) in permutations(n) {
        let mut term = RatFn::one(amb);
        for (i, &j) in perm.iter().enumerate() {
            term = term.try_mul(&mat[i][j])?;
            if term.is_zero() {
                break;
            }
        }
        if !term.is_zero() {
            terms.push(if sign > 0 { term } else { -term });
        }
    }
    Ok(RatFn::sum(amb, terms.iter()))
}
