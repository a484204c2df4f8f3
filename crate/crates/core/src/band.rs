//! Finite windows of infinite `n`-periodic upper-unitriangular matrices:
//! whirls, curls, the sign twist `c`, products and inverses.
//!
//! Every operation here is exact on the window because the matrices are
//! upper triangular: entry `(i, j)` of a product or inverse only involves
//! rows and columns between `i` and `j`.

use std::fmt;

use serde::Serialize;

use crate::arith::{Ambient, Poly};
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BandMatrix {
    amb: Ambient,
    size: usize,
    period: usize,
    entries: Vec<Poly>,
}

impl BandMatrix {
    pub fn identity(amb: Ambient, size: usize, period: usize) -> Result<Self> {
        if size < 1 {
            return Err(Error::Shape("window size must be at least 1".into()));
        }
        let mut entries = vec![Poly::zero(amb); size * size];
        for i in 0..size {
            entries[i * size + i] = Poly::one(amb);
        }
        Ok(BandMatrix {
            amb,
            size,
            period: period.max(1),
            entries,
        })
    }

    /// The whirl `M(a_1, ..., a_p)`: ones on the diagonal and `a_{i mod p}`
    /// on the superdiagonal of row `i`.
    pub fn whirl(vars: &[Poly], size: usize) -> Result<Self> {
        let first = vars
            .first()
            .ok_or_else(|| Error::InvalidArgument("whirl needs at least one parameter".into()))?;
        let amb = first.ambient();
        for v in vars {
            amb.ensure_same(&v.ambient())?;
        }
        let mut w = Self::identity(amb, size, vars.len())?;
        for i in 0..size.saturating_sub(1) {
            w.entries[i * size + i + 1] = vars[i % vars.len()].clone();
        }
        Ok(w)
    }

    /// The curl `N(a_1, ..., a_p) = M(a_1, ..., a_p)^{-c}`.
    pub fn curl(vars: &[Poly], size: usize) -> Result<Self> {
        Ok(Self::whirl(vars, size)?.inverse()?.c_transform())
    }

    pub fn ambient(&self) -> Ambient {
        self.amb
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn period(&self) -> usize {
        self.period
    }

    /// Entry at 1-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> &Poly {
        assert!(row >= 1 && col >= 1 && row <= self.size && col <= self.size);
        &self.entries[(row - 1) * self.size + (col - 1)]
    }

    pub fn row(&self, row: usize) -> &[Poly] {
        &self.entries[(row - 1) * self.size..row * self.size]
    }

    /// `a'_{ij} = (-1)^{i+j} a_{ij}`.
    pub fn c_transform(&self) -> Self {
        let mut out = self.clone();
        for i in 0..self.size {
            for j in 0..self.size {
                if (i + j) % 2 == 1 {
                    let e = &mut out.entries[i * self.size + j];
                    *e = -&*e;
                }
            }
        }
        out.debug_check();
        out
    }

    pub fn is_unitriangular(&self) -> bool {
        (0..self.size).all(|i| {
            (0..self.size).all(|j| {
                let e = &self.entries[i * self.size + j];
                if i == j {
                    e.is_one()
                } else if j < i {
                    e.is_zero()
                } else {
                    true
                }
            })
        })
    }

    /// Exact inverse of an upper-unitriangular window by back-substitution.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_unitriangular() {
            return Err(Error::Shape("inverse requires an upper-unitriangular window".into()));
        }
        let k = self.size;
        let mut inv = Self::identity(self.amb, k, self.period)?;
        for j in 0..k {
            for i in (0..j).rev() {
                let mut acc = Poly::zero(self.amb);
                for l in i + 1..=j {
                    let u = &self.entries[i * k + l];
                    if u.is_zero() {
                        continue;
                    }
                    let x = &inv.entries[l * k + j];
                    if x.is_zero() {
                        continue;
                    }
                    acc = &acc + &(u * x);
                }
                inv.entries[i * k + j] = -acc;
            }
        }
        inv.debug_check();
        Ok(inv)
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if self.size != other.size {
            return Err(Error::Shape(format!(
                "window sizes differ: {} vs {}",
                self.size, other.size
            )));
        }
        self.amb.ensure_same(&other.amb)?;
        let k = self.size;
        let mut out = Self::identity(self.amb, k, lcm(self.period, other.period))?;
        for i in 0..k {
            for j in i..k {
                let mut acc = Poly::zero(self.amb);
                for l in i..=j {
                    let a = &self.entries[i * k + l];
                    let b = &other.entries[l * k + j];
                    if a.is_zero() || b.is_zero() {
                        continue;
                    }
                    acc = &acc + &(a * b);
                }
                out.entries[i * k + j] = acc;
            }
        }
        out.debug_check();
        Ok(out)
    }

    /// Product of a sequence of windows; the identity for an empty sequence.
    pub fn product<'a, I>(amb: Ambient, size: usize, period: usize, factors: I) -> Result<Self>
    where
        I: IntoIterator<Item = &'a BandMatrix>,
    {
        let mut acc = Self::identity(amb, size, period)?;
        for f in factors {
            acc = acc.try_mul(f)?;
        }
        Ok(acc)
    }

    /// Leading `size x size` sub-window.
    pub fn restrict(&self, size: usize) -> Result<Self> {
        if size < 1 || size > self.size {
            return Err(Error::Shape(format!("cannot restrict {} to {size}", self.size)));
        }
        let mut entries = Vec::with_capacity(size * size);
        for i in 0..size {
            entries.extend_from_slice(&self.entries[i * self.size..i * self.size + size]);
        }
        Ok(BandMatrix {
            amb: self.amb,
            size,
            period: self.period,
            entries,
        })
    }

    /// Entries `(i, j)` and `(i + p, j + p)` agree wherever both are in the window.
    pub fn is_periodic(&self) -> bool {
        let (k, p) = (self.size, self.period);
        (0..k.saturating_sub(p)).all(|i| {
            (0..k - p).all(|j| self.entries[i * k + j] == self.entries[(i + p) * k + j + p])
        })
    }

    fn debug_check(&self) {
        debug_assert!(self.is_periodic(), "periodicity lost");
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Repr<'a> {
            size: usize,
            period: usize,
            entries: &'a [Poly],
        }
        serde_json::to_string(&Repr {
            size: self.size,
            period: self.period,
            entries: &self.entries,
        })
        .expect("band matrix serializes")
    }
}

fn lcm(a: usize, b: usize) -> usize {
    num_integer::lcm(a.max(1), b.max(1))
}

impl fmt::Display for BandMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries.iter().map(ToString::to_string).collect();
        let widths: Vec<usize> = (0..self.size)
            .map(|j| (0..self.size).map(|i| cells[i * self.size + j].len()).max().unwrap_or(1))
            .collect();
        for i in 0..self.size {
            let row: Vec<String> = (0..self.size)
                .map(|j| format!("{:>w$}", cells[i * self.size + j], w = widths[j]))
                .collect();
            writeln!(f, "[ {} ]", row.join("  "))?;
        }
        Ok(())
    }
}

/// Whirl parameters for flow `i`: `(x_i^(1), ..., x_i^(n))`.
pub fn flow_params(amb: Ambient, flow: usize) -> Result<Vec<Poly>> {
    (1..=amb.n as i64).map(|c| Poly::x(amb, flow, c)).collect()
}

/// Window size that exposes `e_k^(r)` / `h_k^(r)` for all `k <= k_max` and all colors.
pub fn window_for(amb: Ambient, k_max: usize) -> usize {
    k_max + amb.n + 1
}

/// `M(x_1) M(x_2) ... M(x_m)` on a window of the given size.
pub fn whirl_product(amb: Ambient, size: usize) -> Result<BandMatrix> {
    let factors = (1..=amb.m)
        .map(|i| BandMatrix::whirl(&flow_params(amb, i)?, size))
        .collect::<Result<Vec<_>>>()?;
    BandMatrix::product(amb, size, amb.n, &factors)
}

/// `N(x_m) N(x_{m-1}) ... N(x_1)` on a window of the given size.
pub fn curl_product(amb: Ambient, size: usize) -> Result<BandMatrix> {
    let factors = (1..=amb.m)
        .rev()
        .map(|i| BandMatrix::curl(&flow_params(amb, i)?, size))
        .collect::<Result<Vec<_>>>()?;
    BandMatrix::product(amb, size, amb.n, &factors)
}

/// Entry `(i, i + k)` with `i` the representative of color `r` in `1..=n`.
pub fn read_generator(mat: &BandMatrix, k: usize, r: i64) -> Poly {
    let amb = mat.ambient();
    let i = amb.color(r) + 1;
    mat.get(i, i + k).clone()
}
