use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{Ambient, Poly};
use crate::error::{Error, Result};

/// Rational function, kept as a scalar times a product of polynomial factors
/// with signed multiplicities.
///
/// Factors are normalized (integer coprime coefficients, positive leading
/// coefficient, no monomial content unless the factor is a single variable),
/// so identical factors meet syntactically and cancel under multiplication.
/// No polynomial GCD is ever computed: sums are put over the factor-wise
/// common denominator and only denominators already present are tried by
/// exact division. The value is therefore not necessarily in lowest terms;
/// equality is decided by cross-multiplication.
///
/// [`RatFn::num`] and [`RatFn::den`] expand to a plain numerator/denominator
/// pair with joint integer content 1 and a positive leading coefficient in the
/// denominator.
#[derive(Debug, Clone)]
pub struct RatFn {
    amb: Ambient,
    scalar: BigRational,
    factors: BTreeMap<Poly, i32>,
}

/// Split a nonzero polynomial into a unit and normalized atoms.
fn atoms(p: &Poly) -> (BigRational, Vec<(Poly, i32)>) {
    let amb = p.ambient();
    let content = p.monomial_content();
    let mut out = Vec::new();
    for (i, e) in content.support() {
        out.push((Poly::var(amb, amb.var_at(i)), e as i32));
    }
    let rest = if content.is_one() {
        p.clone()
    } else {
        p.div_monomial(&content)
    };
    let (unit, prim) = rest.primitive_split();
    if prim.as_constant().is_none() {
        out.push((prim, 1));
    }
    (unit, out)
}

impl RatFn {
    pub fn zero(amb: Ambient) -> Self {
        RatFn {
            amb,
            scalar: BigRational::zero(),
            factors: BTreeMap::new(),
        }
    }

    pub fn one(amb: Ambient) -> Self {
        Self::constant(amb, BigRational::one())
    }

    pub fn constant(amb: Ambient, c: BigRational) -> Self {
        RatFn {
            amb,
            scalar: c,
            factors: BTreeMap::new(),
        }
    }

    pub fn from_poly(p: &Poly) -> Self {
        if p.is_zero() {
            return Self::zero(p.ambient());
        }
        let (unit, list) = atoms(p);
        let mut r = Self::constant(p.ambient(), unit);
        for (f, e) in list {
            r.push_factor(f, e);
        }
        r
    }

    /// `num / den`.
    pub fn ratio(num: &Poly, den: &Poly) -> Result<Self> {
        num.ambient().ensure_same(&den.ambient())?;
        Self::from_poly(den).inv().map(|d| Self::from_poly(num).mul_unchecked(&d))
    }

    pub fn ambient(&self) -> Ambient {
        self.amb
    }

    pub fn is_zero(&self) -> bool {
        self.scalar.is_zero()
    }

    fn push_factor(&mut self, f: Poly, e: i32) {
        if e == 0 {
            return;
        }
        let entry = self.factors.entry(f).or_insert(0);
        *entry += e;
        if *entry == 0 {
            self.factors.retain(|_, v| *v != 0);
        }
    }

    /// Numerator: the scalar's numerator times the positive-multiplicity factors.
    pub fn num(&self) -> Poly {
        let mut p = Poly::constant(self.amb, BigRational::from_integer(self.scalar.numer().clone()));
        for (f, &e) in &self.factors {
            if e > 0 {
                p = &p * &f.pow(e as u32);
            }
        }
        p
    }

    /// Denominator: the scalar's denominator times the negative-multiplicity factors.
    pub fn den(&self) -> Poly {
        let mut p = Poly::constant(self.amb, BigRational::from_integer(self.scalar.denom().clone()));
        for (f, &e) in &self.factors {
            if e < 0 {
                p = &p * &f.pow((-e) as u32);
            }
        }
        p
    }

    /// The factor table: normalized polynomial factors with signed multiplicities.
    pub fn factors(&self) -> impl Iterator<Item = (&Poly, i32)> {
        self.factors.iter().map(|(f, &e)| (f, e))
    }

    pub fn scalar(&self) -> &BigRational {
        &self.scalar
    }

    pub fn has_denominator(&self) -> bool {
        self.factors.values().any(|&e| e < 0)
    }

    /// The polynomial this function equals, if the denominator divides exactly.
    pub fn to_poly(&self) -> Option<Poly> {
        let num = self.num();
        let den = self.den();
        if let Some(c) = den.as_constant() {
            return Some(num.scale(&c.recip()));
        }
        num.div_exact(&den)
    }

    fn mul_unchecked(&self, other: &RatFn) -> RatFn {
        if self.is_zero() || other.is_zero() {
            return RatFn::zero(self.amb);
        }
        let mut out = self.clone();
        out.scalar *= &other.scalar;
        for (f, &e) in &other.factors {
            out.push_factor(f.clone(), e);
        }
        out
    }

    pub fn try_mul(&self, other: &RatFn) -> Result<RatFn> {
        self.amb.ensure_same(&other.amb)?;
        Ok(self.mul_unchecked(other))
    }

    pub fn inv(&self) -> Result<RatFn> {
        if self.is_zero() {
            return Err(Error::DivideByZero);
        }
        Ok(RatFn {
            amb: self.amb,
            scalar: self.scalar.recip(),
            factors: self.factors.iter().map(|(f, &e)| (f.clone(), -e)).collect(),
        })
    }

    pub fn try_div(&self, other: &RatFn) -> Result<RatFn> {
        self.amb.ensure_same(&other.amb)?;
        Ok(self.mul_unchecked(&other.inv()?))
    }

    pub fn pow(&self, k: i32) -> Result<RatFn> {
        if k == 0 {
            return Ok(RatFn::one(self.amb));
        }
        if self.is_zero() {
            return if k > 0 {
                Ok(self.clone())
            } else {
                Err(Error::DivideByZero)
            };
        }
        let base = if k < 0 { self.inv()? } else { self.clone() };
        let k = k.unsigned_abs();
        Ok(RatFn {
            amb: self.amb,
            scalar: num_traits::pow(base.scalar.clone(), k as usize),
            factors: base.factors.iter().map(|(f, &e)| (f.clone(), e * k as i32)).collect(),
        })
    }

    pub fn scale(&self, c: &BigRational) -> RatFn {
        if c.is_zero() {
            return RatFn::zero(self.amb);
        }
        let mut out = self.clone();
        out.scalar *= c;
        out
    }

    pub fn try_add(&self, other: &RatFn) -> Result<RatFn> {
        self.amb.ensure_same(&other.amb)?;
        Ok(Self::sum(self.amb, [self, other]))
    }

    pub fn try_sub(&self, other: &RatFn) -> Result<RatFn> {
        self.amb.ensure_same(&other.amb)?;
        Ok(Self::sum(self.amb, [self, &-other]))
    }

    /// Sum of many rational functions over their factor-wise common part.
    ///
    /// The common part takes, for every factor, the minimum multiplicity over
    /// all summands (absent = 0). Each summand divided by it is a polynomial;
    /// those are expanded and added, then the common denominator factors are
    /// tried against the result by exact division.
    pub fn sum<'a, I>(amb: Ambient, items: I) -> RatFn
    where
        I: IntoIterator<Item = &'a RatFn>,
    {
        let items: Vec<&RatFn> = items.into_iter().filter(|r| !r.is_zero()).collect();
        for r in &items {
            assert_eq!(r.amb, amb, "ambient mismatch in sum");
        }
        match items.len() {
            0 => return RatFn::zero(amb),
            1 => return items[0].clone(),
            _ => {}
        }
        let mut common: BTreeMap<&Poly, i32> = BTreeMap::new();
        for (idx, r) in items.iter().enumerate() {
            if idx == 0 {
                for (f, &e) in &r.factors {
                    common.insert(f, e.min(0));
                }
                continue;
            }
            for (f, c) in common.iter_mut() {
                let e = r.factors.get(*f).copied().unwrap_or(0);
                *c = (*c).min(e);
            }
            for (f, &e) in &r.factors {
                if e < 0 {
                    let c = common.entry(f).or_insert(0);
                    *c = (*c).min(e);
                }
            }
        }
        // Positive parts shared by every summand stay factored too.
        let first = items[0];
        for (f, &e) in &first.factors {
            if e > 0 {
                let shared = items
                    .iter()
                    .map(|r| r.factors.get(f).copied().unwrap_or(0))
                    .min()
                    .unwrap_or(0);
                if shared > 0 {
                    common.insert(f, shared);
                }
            }
        }
        common.retain(|_, e| *e != 0);

        let mut powers: HashMap<(&Poly, u32), Poly> = HashMap::new();
        let mut total = Poly::zero(amb);
        for r in &items {
            let mut term = Poly::constant(amb, r.scalar.clone());
            let mut keys: Vec<(&Poly, u32)> = Vec::new();
            for (f, &e) in &r.factors {
                let rest = e - common.get(f).copied().unwrap_or(0);
                debug_assert!(rest >= 0);
                if rest > 0 {
                    keys.push((f, rest as u32));
                }
            }
            for (f, &c) in &common {
                if !r.factors.contains_key(*f) && c < 0 {
                    keys.push((f, (-c) as u32));
                }
            }
            for key in keys {
                let pw = powers.entry(key).or_insert_with(|| key.0.pow(key.1));
                term = &term * &*pw;
            }
            total = &total + &term;
        }
        if total.is_zero() {
            return RatFn::zero(amb);
        }
        let mut out = RatFn::one(amb);
        for (f, e) in &common {
            out.push_factor((*f).clone(), *e);
        }
        let (unit, list) = atoms(&total);
        out.scalar = unit;
        for (mut p, e) in list {
            // Cancel denominators that divide exactly.
            let dens: Vec<Poly> = out
                .factors
                .iter()
                .filter(|(_, &k)| k < 0)
                .map(|(f, _)| f.clone())
                .collect();
            for d in dens {
                let d_deg = d.degree().unwrap_or(0);
                while out.factors.get(&d).copied().unwrap_or(0) < 0
                    && p.degree().unwrap_or(0) >= d_deg
                    && p.as_constant().is_none()
                {
                    match p.div_exact(&d) {
                        Some(q) => {
                            // the atom stands for p^e
                            p = q;
                            out.push_factor(d.clone(), e);
                        }
                        None => break,
                    }
                }
            }
            if let Some(c) = p.as_constant() {
                out.scalar *= num_traits::pow(c, e as usize);
            } else {
                let (u, sub) = atoms(&p);
                out.scalar *= num_traits::pow(u, e as usize);
                for (g, k) in sub {
                    out.push_factor(g, k * e);
                }
            }
        }
        out
    }

    /// Field equality by cross-multiplication: `a.num * b.den == b.num * a.den`.
    ///
    /// Factors common to both sides are cancelled syntactically first; that
    /// is multiplication of both sides by the same nonzero polynomial.
    pub fn eq_cross(&self, other: &RatFn) -> Result<bool> {
        self.amb.ensure_same(&other.amb)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.is_zero() && other.is_zero());
        }
        let q = self.mul_unchecked(&other.inv()?);
        Ok(q.num() == q.den())
    }

    /// `self - other`, written as a single cleared numerator over a denominator.
    pub fn difference_numerator(&self, other: &RatFn) -> Result<Poly> {
        let d = self.try_sub(other)?;
        Ok(d.num())
    }

    /// Exact evaluation at a dense point.
    pub fn eval_dense(&self, point: &[BigRational]) -> Result<BigRational> {
        let mut v = self.scalar.clone();
        if v.is_zero() {
            return Ok(v);
        }
        let mut vanishes = false;
        for (f, &e) in &self.factors {
            let fv = f.eval_dense(point);
            if fv.is_zero() {
                if e < 0 {
                    return Err(Error::DivideByZero);
                }
                vanishes = true;
                continue;
            }
            if !vanishes {
                let fv = if e < 0 { fv.recip() } else { fv };
                v *= num_traits::pow(fv, e.unsigned_abs() as usize);
            }
        }
        Ok(if vanishes { BigRational::zero() } else { v })
    }

    /// Image of a polynomial under the homomorphism sending variable index `i`
    /// to `images[i]`.
    pub fn substitute_poly(p: &Poly, images: &[RatFn]) -> RatFn {
        let amb = images.first().map(|r| r.amb).unwrap_or(p.ambient());
        assert_eq!(images.len(), p.ambient().num_vars(), "image table size");
        let mut pow_cache: HashMap<(usize, u16), RatFn> = HashMap::new();
        let mut terms = Vec::with_capacity(p.num_terms());
        for (mono, c) in p.terms() {
            let mut t = RatFn::constant(amb, c.clone());
            for (i, e) in mono.support() {
                let pw = pow_cache
                    .entry((i, e))
                    .or_insert_with(|| images[i].pow(e as i32).expect("variable image is nonzero"));
                t = t.mul_unchecked(pw);
            }
            terms.push(t);
        }
        RatFn::sum(amb, terms.iter())
    }

    /// Image under the variable-substitution homomorphism `images`.
    pub fn substitute(&self, images: &[RatFn]) -> Result<RatFn> {
        let amb = images.first().map(|r| r.amb).unwrap_or(self.amb);
        let mut out = RatFn::constant(amb, self.scalar.clone());
        if out.is_zero() {
            return Ok(out);
        }
        for (f, &e) in &self.factors {
            let img = Self::substitute_poly(f, images);
            if img.is_zero() && e < 0 {
                return Err(Error::DivideByZero);
            }
            out = out.mul_unchecked(&img.pow(e)?);
        }
        Ok(out)
    }
}

impl PartialEq for RatFn {
    fn eq(&self, other: &Self) -> bool {
        self.eq_cross(other).unwrap_or(false)
    }
}

impl From<Poly> for RatFn {
    fn from(p: Poly) -> Self {
        RatFn::from_poly(&p)
    }
}

impl From<&Poly> for RatFn {
    fn from(p: &Poly) -> Self {
        RatFn::from_poly(p)
    }
}

impl fmt::Display for RatFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let den = self.den();
        if den.is_one() {
            write!(f, "{}", self.num())
        } else {
            write!(f, "({}) / ({})", self.num(), den)
        }
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident, $inner:ident) => {
        impl $tr<&RatFn> for &RatFn {
            type Output = RatFn;
            fn $method(self, rhs: &RatFn) -> RatFn {
                self.$inner(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $tr<RatFn> for RatFn {
            type Output = RatFn;
            fn $method(self, rhs: RatFn) -> RatFn {
                (&self).$inner(&rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);
forward_binop!(Div, div, try_div);

impl Neg for &RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        let mut out = self.clone();
        out.scalar = -out.scalar;
        out
    }
}

impl Neg for RatFn {
    type Output = RatFn;
    fn neg(self) -> RatFn {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::int;

    fn amb() -> Ambient {
        Ambient::new(2, 2).unwrap()
    }

    fn x(i: usize, j: i64) -> Poly {
        Poly::x(amb(), i, j).unwrap()
    }

    fn kappa(r: i64) -> Poly {
        // n = 2: kappa^(r)(x_1, x_2) = x_1^(r+1) + x_2^(r+1)
        x(1, r + 1) + x(2, r + 1)
    }

    #[test]
    fn same_element_different_forms() {
        let a = RatFn::from_poly(&x(1, 1));
        let b = RatFn::ratio(&x(1, 1).pow(2), &x(1, 1)).unwrap();
        assert_eq!(a, b);
        assert_ne!(a, RatFn::from_poly(&x(2, 1)));
    }

    #[test]
    fn kappa_ratio_product_is_one() {
        let a = RatFn::ratio(&kappa(1), &kappa(2)).unwrap();
        let b = RatFn::ratio(&kappa(2), &kappa(1)).unwrap();
        assert_eq!(&a * &b, RatFn::one(amb()));
        // and with no syntactic help: cross-multiplied raw forms
        let raw = RatFn::ratio(&(kappa(1) * kappa(2)), &(kappa(2) * kappa(1))).unwrap();
        assert!(raw.eq_cross(&RatFn::one(amb())).unwrap());
    }

    #[test]
    fn additive_identity_and_inverses() {
        let ab = RatFn::ratio(&(x(1, 1) + x(2, 2)), &(x(1, 2) - x(2, 1))).unwrap();
        assert_eq!(&ab + &RatFn::zero(amb()), ab);
        let ba = ab.inv().unwrap();
        assert_eq!(&ab * &ba, RatFn::one(amb()));
        let xr = RatFn::from_poly(&x(1, 1));
        let inv_inv = RatFn::one(amb()) / (RatFn::one(amb()) / xr.clone());
        assert_eq!(inv_inv, xr);
    }

    #[test]
    fn divide_by_zero() {
        let z = RatFn::zero(amb());
        assert!(matches!(z.inv(), Err(Error::DivideByZero)));
        assert!(RatFn::ratio(&x(1, 1), &Poly::zero(amb())).is_err());
        assert!(RatFn::one(amb()).try_div(&z).is_err());
    }

    #[test]
    fn sum_cancels_known_denominator() {
        // (x + y) * kappa / kappa  + 0 collapses back to a polynomial
        let k = RatFn::from_poly(&kappa(1));
        let s = RatFn::from_poly(&(x(1, 1) + x(2, 1)));
        let a = &(&s * &k) / &k;
        let b = RatFn::ratio(&(x(1, 1) * kappa(1)), &kappa(1)).unwrap();
        let c = RatFn::ratio(&(x(2, 1) * kappa(1)), &kappa(1)).unwrap();
        let total = &b + &c;
        assert!(!total.has_denominator());
        assert_eq!(total, a);
        assert_eq!(total.to_poly().unwrap(), x(1, 1) + x(2, 1));
    }

    #[test]
    fn pole_is_reported_even_when_numerator_vanishes() {
        let a = amb();
        let f = RatFn::ratio(&x(2, 2), &x(1, 1)).unwrap();
        let origin = vec![BigRational::zero(); a.num_vars()];
        assert!(matches!(f.eval_dense(&origin), Err(Error::DivideByZero)));
    }

    #[test]
    fn cancelled_power_keeps_its_multiplicity() {
        let a = amb();
        let y = RatFn::from_poly(&x(2, 2));
        let g = RatFn::one(a) / (&y * &y);
        assert_eq!(&(&RatFn::one(a) + &g) - &g, RatFn::one(a));
        let h = (&y + &RatFn::one(a)).pow(-2).unwrap();
        let s = &(&(&y + &RatFn::one(a)).pow(2).unwrap() + &h) - &h;
        assert_eq!(s.to_poly(), Some((x(2, 2) + Poly::one(a)).pow(2)));
    }

    #[test]
    fn num_den_normalization() {
        let r = RatFn::ratio(&x(1, 1).scale(&int(6)), &(x(2, 1).scale(&int(-4)) + x(1, 2).scale(&int(2))))
            .unwrap();
        let den = r.den();
        assert!(num_traits::Signed::is_positive(den.leading().unwrap().1));
        let (u1, _) = r.num().primitive_split();
        let (u2, _) = den.primitive_split();
        assert!(u1.is_integer() && u2.is_integer());
        assert_eq!(num_integer::Integer::gcd(u1.numer(), u2.numer()), int(1).to_integer());
    }

    #[test]
    fn evaluation_detects_poles() {
        let r = RatFn::ratio(&x(1, 1), &(x(1, 2) - x(2, 2))).unwrap();
        let mut pt = vec![int(1); 4];
        assert!(r.eval_dense(&pt).is_err());
        pt[1] = int(3);
        assert_eq!(r.eval_dense(&pt).unwrap(), crate::arith::rat(1, 2));
    }
}
