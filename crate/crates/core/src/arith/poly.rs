use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::MonomialDisplay;
use super::{Ambient, Monomial, VarId};
use crate::error::{Error, Result};

/// Sparse polynomial with exact rational coefficients in the variables of an
/// [`Ambient`].
///
/// The term map never holds a zero coefficient, so structural equality is
/// polynomial equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Poly {
    amb: Ambient,
    terms: BTreeMap<Monomial, BigRational>,
}

impl Poly {
    pub fn zero(amb: Ambient) -> Self {
        Poly {
            amb,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(amb: Ambient) -> Self {
        Self::constant(amb, BigRational::one())
    }

    pub fn constant(amb: Ambient, c: BigRational) -> Self {
        let mut p = Self::zero(amb);
        if !c.is_zero() {
            p.terms.insert(Monomial::one(amb.num_vars()), c);
        }
        p
    }

    pub fn var(amb: Ambient, v: VarId) -> Self {
        Self::monomial(amb, Monomial::var(amb.num_vars(), amb.index(v)), BigRational::one())
    }

    /// `x_flow^(color)`; the color is a superscript reduced modulo `n`.
    pub fn x(amb: Ambient, flow: usize, color: i64) -> Result<Self> {
        Ok(Self::var(amb, amb.var(flow, color)?))
    }

    pub fn monomial(amb: Ambient, mono: Monomial, c: BigRational) -> Self {
        assert_eq!(mono.exps().len(), amb.num_vars(), "monomial length");
        let mut p = Self::zero(amb);
        if !c.is_zero() {
            p.terms.insert(mono, c);
        }
        p
    }

    /// Build from raw terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(amb: Ambient, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, BigRational)>,
    {
        let mut map: BTreeMap<Monomial, BigRational> = BTreeMap::new();
        for (mono, c) in terms {
            assert_eq!(mono.exps().len(), amb.num_vars(), "monomial length");
            *map.entry(mono).or_insert_with(BigRational::zero) += c;
        }
        map.retain(|_, c| !c.is_zero());
        Poly { amb, terms: map }
    }

    pub fn ambient(&self) -> Ambient {
        self.amb
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .next()
                .is_some_and(|(m, c)| m.is_one() && c.is_one())
    }

    /// The value if this is a constant polynomial.
    pub fn as_constant(&self) -> Option<BigRational> {
        match self.terms.len() {
            0 => Some(BigRational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next()?;
                m.is_one().then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn constant_term(&self) -> BigRational {
        self.terms
            .get(&Monomial::one(self.amb.num_vars()))
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in ascending canonical order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, mono: &Monomial) -> BigRational {
        self.terms.get(mono).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Greatest term under the monomial order.
    pub fn leading(&self) -> Option<(&Monomial, &BigRational)> {
        self.terms.iter().next_back()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.amb.ensure_same(&other.amb)?;
        let mut out = self.clone();
        out.add_assign_ref(other);
        Ok(out)
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.amb.ensure_same(&other.amb)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.amb.ensure_same(&other.amb)?;
        Ok(self.mul_unchecked(other))
    }

    fn add_assign_ref(&mut self, other: &Poly) {
        for (m, c) in &other.terms {
            self.add_term(m.clone(), c.clone());
        }
    }

    pub(crate) fn add_term(&mut self, mono: Monomial, c: BigRational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(mono) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn mul_unchecked(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.amb);
        }
        if let Some(c) = self.as_constant() {
            return other.scale(&c);
        }
        if let Some(c) = other.as_constant() {
            return self.scale(&c);
        }
        let mut acc: HashMap<Monomial, BigRational> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let prod = ca * cb;
                match acc.entry(ma.mul(mb)) {
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(prod);
                    }
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        *e.get_mut() += prod;
                    }
                }
            }
        }
        Poly {
            amb: self.amb,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.amb);
        }
        Poly {
            amb: self.amb,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn mul_monomial(&self, mono: &Monomial) -> Poly {
        Poly {
            amb: self.amb,
            terms: self.terms.iter().map(|(m, c)| (m.mul(mono), c.clone())).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut result = Poly::one(self.amb);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.mul_unchecked(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        result
    }

    /// Exact evaluation at a point given as a variable assignment.
    pub fn eval<F>(&self, point: F) -> Result<BigRational>
    where
        F: Fn(VarId) -> Option<BigRational>,
    {
        let mut values: Vec<Option<BigRational>> = vec![None; self.amb.num_vars()];
        let mut total = BigRational::zero();
        for (mono, c) in &self.terms {
            let mut t = c.clone();
            for (i, e) in mono.support() {
                if values[i].is_none() {
                    let v = self.amb.var_at(i);
                    values[i] = Some(point(v).ok_or_else(|| Error::UnboundVariable(v.to_string()))?);
                }
                let x = values[i].as_ref().expect("filled above");
                t *= num_traits::pow(x.clone(), e as usize);
            }
            total += t;
        }
        Ok(total)
    }

    /// Evaluate at a dense point indexed like the exponent vectors.
    pub fn eval_dense(&self, point: &[BigRational]) -> BigRational {
        assert_eq!(point.len(), self.amb.num_vars());
        let mut total = BigRational::zero();
        for (mono, c) in &self.terms {
            let mut t = c.clone();
            for (i, e) in mono.support() {
                t *= num_traits::pow(point[i].clone(), e as usize);
            }
            total += t;
        }
        total
    }

    /// Exact quotient `self / divisor` if the division leaves no remainder.
    ///
    /// Uses the multivariate division algorithm under the monomial order; for
    /// an exact quotient the leading term of every intermediate remainder is
    /// divisible by the leading term of the divisor, so a single failed step
    /// proves non-divisibility.
    pub fn div_exact(&self, divisor: &Poly) -> Option<Poly> {
        if self.amb != divisor.amb {
            return None;
        }
        let (dm, dc) = divisor.leading()?;
        let (dm, dc) = (dm.clone(), dc.clone());
        if let Some(c) = divisor.as_constant() {
            return Some(self.scale(&c.recip()));
        }
        let mut rem = self.clone();
        let mut quot = Poly::zero(self.amb);
        while let Some((lm, lc)) = rem.leading() {
            if !dm.divides(lm) {
                return None;
            }
            let qm = dm.quotient_of(lm);
            let qc = lc / &dc;
            for (m, c) in &divisor.terms {
                rem.add_term(m.mul(&qm), -(c * &qc));
            }
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Largest monomial dividing every term (the constant monomial for zero).
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.keys();
        match it.next() {
            None => Monomial::one(self.amb.num_vars()),
            Some(first) => it.fold(first.clone(), |acc, m| acc.meet(m)),
        }
    }

    /// Divide every term by a monomial known to divide all of them.
    pub fn div_monomial(&self, mono: &Monomial) -> Poly {
        Poly {
            amb: self.amb,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (mono.quotient_of(m), c.clone()))
                .collect(),
        }
    }

    /// Split into `unit * primitive` where the primitive part has coprime
    /// integer coefficients and a positive leading coefficient.
    pub fn primitive_split(&self) -> (BigRational, Poly) {
        if self.is_zero() {
            return (BigRational::zero(), self.clone());
        }
        let mut den_lcm = BigInt::one();
        for c in self.terms.values() {
            den_lcm = den_lcm.lcm(c.denom());
        }
        let mut num_gcd = BigInt::zero();
        for c in self.terms.values() {
            let scaled = c.numer() * (&den_lcm / c.denom());
            num_gcd = num_gcd.gcd(&scaled);
        }
        let lead_negative = self.leading().is_some_and(|(_, c)| c.is_negative());
        if lead_negative {
            num_gcd = -num_gcd;
        }
        let unit = BigRational::new(num_gcd, den_lcm);
        let inv = unit.recip();
        (unit, self.scale(&inv))
    }

    /// Rewrite every variable through `f` (used for relabelling flows).
    pub fn map_vars<F>(&self, amb: Ambient, f: F) -> Poly
    where
        F: Fn(VarId) -> VarId,
    {
        Poly::from_terms(
            amb,
            self.terms.iter().map(|(m, c)| {
                let mut e = vec![0u16; amb.num_vars()];
                for (i, k) in m.support() {
                    e[amb.index(f(self.amb.var_at(i)))] += k;
                }
                (Monomial::from_exps(e), c.clone())
            }),
        )
    }

    /// Variables occurring in this polynomial.
    pub fn vars(&self) -> Vec<VarId> {
        let mut seen = vec![false; self.amb.num_vars()];
        for m in self.terms.keys() {
            for (i, _) in m.support() {
                seen[i] = true;
            }
        }
        seen.iter()
            .enumerate()
            .filter(|(_, &s)| s)
            .map(|(i, _)| self.amb.var_at(i))
            .collect()
    }
}

impl fmt::Display for Poly {
    /// Terms from the leading monomial down, e.g. `x1^(1)*x2^(2) - 3/2*x3^(1)^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (mono, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (k, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let md = MonomialDisplay {
                mono,
                n: self.amb.n,
            };
            if mono.is_one() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{md}")?;
            } else {
                write!(f, "{abs}*{md}")?;
            }
        }
        Ok(())
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                self.$inner(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                (&self).$inner(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<&Poly> for Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                (&self).$inner(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<Poly> for &Poly {
            type Output = Poly;
            fn $method(self, rhs: Poly) -> Poly {
                self.$inner(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly {
            amb: self.amb,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}
