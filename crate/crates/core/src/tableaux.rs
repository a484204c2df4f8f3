//! Partitions, semistandard tableaux with colored weights, loop Schur
//! functions and their Jacobi-Trudi determinant.

use std::fmt;
use std::str::FromStr;

use num_traits::One;

use crate::arith::{Ambient, BigRational, Monomial, Poly};
use crate::det::det_poly;
use crate::error::{Error, Result};
use crate::generators::{loop_h_signed, FlowSet};

/// Integer partition; trailing zeros are trimmed.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidArgument(format!(
                "partition parts must be weakly decreasing: {parts:?}"
            )));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// `(1^k)`.
    pub fn column(k: usize) -> Self {
        Partition { parts: vec![1; k] }
    }

    /// `(k)`.
    pub fn row(k: usize) -> Self {
        Self::new(vec![k]).expect("single part")
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    /// `lambda_i` for 1-based `i`, zero past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i.wrapping_sub(1)).copied().unwrap_or(0)
    }

    /// Number of nonzero parts.
    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.length() <= self.length() && other.parts.iter().zip(&self.parts).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.part(1);
        Partition {
            parts: (1..=w).map(|j| self.parts.iter().filter(|&&p| p >= j).count()).collect(),
        }
    }

    /// The parts padded with zeros to length `len`.
    pub fn padded(&self, len: usize) -> Vec<usize> {
        let mut v = self.parts.clone();
        v.resize(len.max(v.len()), 0);
        v
    }

    /// All partitions of `size` with at most `max_len` parts, in
    /// reverse-lexicographic order.
    pub fn all_of_size(size: usize, max_len: usize) -> Vec<Partition> {
        fn go(rem: usize, cap: usize, max_len: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
            if rem == 0 {
                out.push(Partition { parts: cur.clone() });
                return;
            }
            if cur.len() == max_len {
                return;
            }
            for p in (1..=rem.min(cap)).rev() {
                cur.push(p);
                go(rem - p, p, max_len, cur, out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(size, size, max_len, &mut Vec::new(), &mut out);
        out
    }

    /// All partitions with `|lambda| <= max_size` and at most `max_len` parts.
    pub fn all_up_to(max_size: usize, max_len: usize) -> Vec<Partition> {
        (0..=max_size).flat_map(|s| Self::all_of_size(s, max_len)).collect()
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Comma-separated parts; `"0"` (or an empty string) is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad partition {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A filling of a partition shape, stored row by row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tableau {
    shape: Partition,
    rows: Vec<Vec<usize>>,
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self> {
        let shape = Partition::new(rows.iter().map(Vec::len).collect())?;
        let t = Tableau { shape, rows };
        if !t.is_semistandard() {
            return Err(Error::InvalidArgument("filling is not semistandard".into()));
        }
        Ok(t)
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn is_semistandard(&self) -> bool {
        let rows_ok = self.rows.iter().all(|r| r.windows(2).all(|w| w[0] <= w[1]));
        let cols_ok = self.rows.windows(2).all(|pair| {
            pair[1].iter().zip(&pair[0]).all(|(below, above)| below > above)
        });
        rows_ok && cols_ok && self.rows.iter().flatten().all(|&v| v >= 1)
    }

    /// `cwt_r(T)`: box `(i, j)` holding `k` contributes `x_k^(r + i - j)`.
    pub fn colored_weight(&self, amb: Ambient, r: i64) -> Result<Poly> {
        let mut e = vec![0u16; amb.num_vars()];
        for (i, row) in self.rows.iter().enumerate() {
            for (j, &k) in row.iter().enumerate() {
                let v = amb.var(k, r + i as i64 - j as i64)?;
                e[amb.index(v)] += 1;
            }
        }
        Ok(Poly::monomial(amb, Monomial::from_exps(e), BigRational::one()))
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "))
            .collect();
        write!(f, "{}", rows.join(" / "))
    }
}

/// Streaming enumeration of semistandard tableaux with entries in `1..=m`.
///
/// Boxes are filled in row-reading order with backtracking, so tableaux come
/// out in lexicographic order of their row-reading words.
pub struct SsytIter {
    shape: Partition,
    m: usize,
    cells: Vec<(usize, usize)>,
    col_len: Vec<usize>,
    offsets: Vec<usize>,
    vals: Vec<usize>,
    started: bool,
    done: bool,
}

impl SsytIter {
    pub fn new(shape: &Partition, m: usize) -> Self {
        let mut cells = Vec::with_capacity(shape.size());
        let mut offsets = Vec::with_capacity(shape.length());
        for (i, &len) in shape.parts().iter().enumerate() {
            offsets.push(cells.len());
            for j in 0..len {
                cells.push((i, j));
            }
        }
        let col_len = shape.conjugate().parts().to_vec();
        SsytIter {
            shape: shape.clone(),
            m,
            vals: vec![0; cells.len()],
            cells,
            col_len,
            offsets,
            started: false,
            done: false,
        }
    }

    fn lower(&self, p: usize) -> usize {
        let (i, j) = self.cells[p];
        let left = if j > 0 { self.vals[p - 1] } else { 1 };
        let above = if i > 0 { self.vals[self.offsets[i - 1] + j] + 1 } else { 1 };
        left.max(above)
    }

    fn upper(&self, p: usize) -> usize {
        let (i, j) = self.cells[p];
        // entries below in the same column must still fit strictly
        (self.m + i + 1).saturating_sub(self.col_len[j])
    }

    fn current(&self) -> Tableau {
        let rows = self
            .shape
            .parts()
            .iter()
            .enumerate()
            .map(|(i, &len)| self.vals[self.offsets[i]..self.offsets[i] + len].to_vec())
            .collect();
        Tableau {
            shape: self.shape.clone(),
            rows,
        }
    }
}

impl Iterator for SsytIter {
    type Item = Tableau;

    fn next(&mut self) -> Option<Tableau> {
        if self.done {
            return None;
        }
        let total = self.cells.len();
        let (mut p, mut bump) = if self.started {
            if total == 0 {
                self.done = true;
                return None;
            }
            (total - 1, true)
        } else {
            self.started = true;
            (0, false)
        };
        loop {
            if bump {
                self.vals[p] += 1;
                if self.vals[p] > self.upper(p) {
                    if p == 0 {
                        self.done = true;
                        return None;
                    }
                    p -= 1;
                    continue;
                }
                bump = false;
                p += 1;
            } else {
                if p == total {
                    return Some(self.current());
                }
                self.vals[p] = self.lower(p);
                if self.vals[p] > self.upper(p) {
                    if p == 0 {
                        self.done = true;
                        return None;
                    }
                    p -= 1;
                    bump = true;
                    continue;
                }
                p += 1;
            }
        }
    }
}

pub fn enumerate_ssyt(shape: &Partition, m: usize) -> SsytIter {
    SsytIter::new(shape, m)
}

/// `s_lambda^(r)` in the flows of `amb`, as a sum of colored tableau weights.
pub fn loop_schur(amb: Ambient, shape: &Partition, r: i64) -> Poly {
    let terms = enumerate_ssyt(shape, amb.m).map(|t| {
        let w = t.colored_weight(amb, r).expect("entries within 1..=m");
        let (mono, c) = w.terms().next().expect("monomial");
        (mono.clone(), c.clone())
    });
    Poly::from_terms(amb, terms)
}

/// The Jacobi-Trudi matrix `(h_{lambda_i - i + j}^{(r - lambda_i + i)})`.
pub fn jacobi_trudi_matrix(amb: Ambient, shape: &Partition, r: i64) -> Vec<Vec<Poly>> {
    let l = shape.length();
    let all = FlowSet::all(amb);
    (1..=l)
        .map(|i| {
            let li = shape.part(i) as i64;
            let i = i as i64;
            (1..=l as i64)
                .map(|j| loop_h_signed(amb, li - i + j, r - li + i, &all))
                .collect()
        })
        .collect()
}

/// `s_lambda^(r)` by the Jacobi-Trudi determinant.
pub fn jacobi_trudi(amb: Ambient, shape: &Partition, r: i64) -> Result<Poly> {
    if shape.length() > amb.m {
        return Err(Error::InvalidArgument(format!(
            "shape {shape} has more than m = {} rows",
            amb.m
        )));
    }
    det_poly(amb, &jacobi_trudi_matrix(amb, shape, r))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{loop_e, loop_h};

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn partition_parsing() {
        assert_eq!(p("3,2"), Partition::new(vec![3, 2]).unwrap());
        assert_eq!(p("0"), Partition::empty());
        assert_eq!(p("2,1,0,0").length(), 2);
        assert!("2,3".parse::<Partition>().is_err());
        assert!("a".parse::<Partition>().is_err());
        assert_eq!(p("3,1").conjugate(), p("2,1,1"));
        assert_eq!(Partition::all_of_size(4, 4).len(), 5);
        assert_eq!(Partition::all_of_size(4, 2).len(), 3);
        assert_eq!(Partition::all_up_to(3, 3).len(), 1 + 1 + 2 + 3);
    }

    #[test]
    fn tableaux_of_shape_3_2() {
        let ts: Vec<Tableau> = enumerate_ssyt(&p("3,2"), 2).collect();
        assert_eq!(ts.len(), 2);
        assert_eq!(ts[0].rows(), &[vec![1, 1, 1], vec![2, 2]]);
        assert_eq!(ts[1].rows(), &[vec![1, 1, 2], vec![2, 2]]);
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_ssyt(&p("1"), 3).count(), 3);
        assert_eq!(enumerate_ssyt(&p("2,2"), 3).count(), 6);
        assert_eq!(enumerate_ssyt(&p("0"), 3).count(), 1);
        assert_eq!(enumerate_ssyt(&p("1,1,1"), 2).count(), 0);
        assert_eq!(enumerate_ssyt(&p("2,1"), 3).count(), 8);
    }

    #[test]
    fn enumeration_yields_valid_distinct_tableaux_in_order() {
        let ts: Vec<Tableau> = enumerate_ssyt(&p("3,2,1"), 4).collect();
        assert!(ts.iter().all(Tableau::is_semistandard));
        let words: Vec<Vec<usize>> = ts.iter().map(|t| t.rows().concat()).collect();
        assert!(words.windows(2).all(|w| w[0] < w[1]));
        assert_eq!(ts.len(), 64);
    }

    #[test]
    fn colored_weight_m2_n3() {
        let amb = Ambient::new(2, 3).unwrap();
        let x = |i, j| Poly::x(amb, i, j).unwrap();
        let t = Tableau::new(vec![vec![1, 1, 1], vec![2, 2]]).unwrap();
        let w = t.colored_weight(amb, 1).unwrap();
        assert_eq!(w, x(1, 1) * x(1, 3) * x(1, 2) * x(2, 2) * x(2, 1));
        let single = Tableau::new(vec![vec![2]]).unwrap();
        assert_eq!(single.colored_weight(amb, 3).unwrap(), x(2, 3));
        assert!(Tableau::new(vec![vec![2, 1]]).is_err());
        assert!(Tableau::new(vec![vec![1, 2], vec![1]]).is_err());
    }

    #[test]
    fn loop_schur_3_2_m2_n3() {
        let amb = Ambient::new(2, 3).unwrap();
        let x = |i, j| Poly::x(amb, i, j).unwrap();
        let expected = x(1, 1) * x(1, 2) * x(1, 3) * x(2, 1) * x(2, 2)
            + x(1, 1) * x(1, 3) * x(2, 1) * x(2, 2).pow(2);
        assert_eq!(loop_schur(amb, &p("3,2"), 1), expected);
        assert_eq!(jacobi_trudi(amb, &p("3,2"), 1).unwrap(), expected);
    }

    #[test]
    fn rows_and_columns_reduce_to_generators() {
        for (m, n) in [(2, 3), (3, 2), (3, 3)] {
            let amb = Ambient::new(m, n).unwrap();
            let all = FlowSet::all(amb);
            for k in 0..=4 {
                for r in 1..=n as i64 {
                    assert_eq!(loop_schur(amb, &Partition::row(k), r), loop_h(amb, k, r - k as i64 + 1, &all));
                    assert_eq!(loop_schur(amb, &Partition::column(k), r), loop_e(amb, k, r, &all));
                    assert_eq!(jacobi_trudi(amb, &Partition::row(k), r).unwrap(), loop_h(amb, k, r - k as i64 + 1, &all));
                }
            }
        }
    }

    #[test]
    fn empty_and_too_long_shapes() {
        let amb = Ambient::new(2, 2).unwrap();
        assert!(loop_schur(amb, &Partition::empty(), 1).is_one());
        assert!(jacobi_trudi(amb, &Partition::empty(), 1).unwrap().is_one());
        assert!(loop_schur(amb, &p("1,1,1"), 1).is_zero());
        assert!(jacobi_trudi(amb, &p("1,1,1"), 1).is_err());
    }

    #[test]
    fn homogeneity() {
        let amb = Ambient::new(3, 2).unwrap();
        for lam in Partition::all_up_to(5, 3) {
            let s = loop_schur(amb, &lam, 2);
            assert!(s.is_homogeneous());
            if !s.is_zero() {
                assert_eq!(s.degree(), Some(lam.size() as u32));
            }
        }
    }
}
