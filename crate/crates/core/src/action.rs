//! The birational `S_m` action on rational functions in the `x_i^(j)`.
//!
//! A word `(w_1, ..., w_k)` denotes the composition
//! `s_{w_1} ∘ s_{w_2} ∘ ... ∘ s_{w_k}` of algebra homomorphisms, so
//! `s_{w_k}` acts on an expression first. Composed maps are flattened into a
//! single variable-to-image table.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::arith::{Ambient, BigRational, Poly, RatFn};
use crate::error::{Error, Result};
use crate::generators::kappa;

/// Default seed for every randomized check.
pub const DEFAULT_SEED: u64 = 0x5eed_1005;

/// A sequence of generator indices in `1..m`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct PermutationWord(Vec<usize>);

impl PermutationWord {
    pub fn new(amb: Ambient, word: Vec<usize>) -> Result<Self> {
        for &i in &word {
            if i == 0 || i >= amb.m {
                return Err(Error::InvalidArgument(format!(
                    "generator s_{i} does not exist for m = {}",
                    amb.m
                )));
            }
        }
        Ok(PermutationWord(word))
    }

    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    /// Reduced word for the transposition `t_{a,b}`:
    /// `s_a s_{a+1} ... s_{b-1} ... s_{a+1} s_a` for `a < b`.
    pub fn transposition(amb: Ambient, a: usize, b: usize) -> Result<Self> {
        amb.check_flow(a)?;
        amb.check_flow(b)?;
        let (lo, hi) = (a.min(b), a.max(b));
        let mut w: Vec<usize> = (lo..hi).collect();
        w.extend((lo..hi.saturating_sub(1)).rev());
        Self::new(amb, w)
    }

    /// The permutation of flows this word induces: `sigma(c)` is obtained by
    /// applying `s_{w_k}` first.
    pub fn permutation(&self, m: usize) -> Vec<usize> {
        (1..=m)
            .map(|c| {
                self.0.iter().rev().fold(c, |c, &i| {
                    if c == i {
                        i + 1
                    } else if c == i + 1 {
                        i
                    } else {
                        c
                    }
                })
            })
            .collect()
    }
}

impl FromStr for PermutationWord {
    type Err = Error;

    /// Comma-separated generator indices (not validated against `m`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(PermutationWord(Vec::new()));
        }
        s.split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|_| Error::Parse(format!("bad word {s:?}"))))
            .collect::<Result<Vec<_>>>()
            .map(PermutationWord)
    }
}

impl fmt::Display for PermutationWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let l: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", l.join(","))
    }
}

/// An algebra homomorphism given by the images of all variables.
#[derive(Debug, Clone)]
pub struct SubstitutionMap {
    amb: Ambient,
    images: Vec<RatFn>,
}

impl SubstitutionMap {
    pub fn identity(amb: Ambient) -> Self {
        SubstitutionMap {
            amb,
            images: amb.vars().map(|v| RatFn::from_poly(&Poly::var(amb, v))).collect(),
        }
    }

    /// The generator `s_i`:
    /// `x_i^(j) -> x_{i+1}^(j+1) kappa_i^(j+1) / kappa_i^(j)` and
    /// `x_{i+1}^(j) -> x_i^(j-1) kappa_i^(j-1) / kappa_i^(j)`.
    pub fn generator(amb: Ambient, i: usize) -> Result<Self> {
        if i == 0 || i >= amb.m {
            return Err(Error::InvalidArgument(format!(
                "generator s_{i} does not exist for m = {}",
                amb.m
            )));
        }
        let n = amb.n as i64;
        let kap: Vec<RatFn> = (0..n)
            .map(|c| kappa(amb, c + 1, i, i + 1).map(|k| RatFn::from_poly(&k)))
            .collect::<Result<_>>()?;
        let k = |c: i64| &kap[(c - 1).rem_euclid(n) as usize];
        let mut map = Self::identity(amb);
        for j in 1..=n {
            let lo = amb.index(amb.var(i, j)?);
            let hi = amb.index(amb.var(i + 1, j)?);
            let up = RatFn::from_poly(&Poly::x(amb, i + 1, j + 1)?);
            map.images[lo] = &(&up * k(j + 1)) / k(j);
            let down = RatFn::from_poly(&Poly::x(amb, i, j - 1)?);
            map.images[hi] = &(&down * k(j - 1)) / k(j);
        }
        Ok(map)
    }

    /// Flattened `s_{w_1} ∘ ... ∘ s_{w_k}`.
    pub fn compose(amb: Ambient, word: &PermutationWord) -> Result<Self> {
        let mut acc = Self::identity(amb);
        for &i in word.letters() {
            acc = acc.then(&Self::generator(amb, i)?)?;
        }
        Ok(acc)
    }

    /// The flattened action of the transposition `t_{a,b}`; identity when `a == b`.
    pub fn transposition(amb: Ambient, a: usize, b: usize) -> Result<Self> {
        Self::compose(amb, &PermutationWord::transposition(amb, a, b)?)
    }

    pub fn ambient(&self) -> Ambient {
        self.amb
    }

    pub fn images(&self) -> &[RatFn] {
        &self.images
    }

    /// `self ∘ inner`: first `inner`, then `self`.
    pub fn then(&self, inner: &SubstitutionMap) -> Result<Self> {
        self.amb.ensure_same(&inner.amb)?;
        let images = inner
            .images
            .iter()
            .map(|img| img.substitute(&self.images))
            .collect::<Result<Vec<_>>>()?;
        Ok(SubstitutionMap {
            amb: self.amb,
            images,
        })
    }

    pub fn apply_poly(&self, p: &Poly) -> Result<RatFn> {
        self.amb.ensure_same(&p.ambient())?;
        Ok(RatFn::substitute_poly(p, &self.images))
    }

    pub fn apply(&self, f: &RatFn) -> Result<RatFn> {
        self.amb.ensure_same(&f.ambient())?;
        f.substitute(&self.images)
    }

    /// Every variable is sent to itself.
    pub fn is_identity(&self) -> bool {
        self.images
            .iter()
            .enumerate()
            .all(|(i, img)| *img == RatFn::from_poly(&Poly::var(self.amb, self.amb.var_at(i))))
    }

    /// Same image for every variable.
    pub fn same_as(&self, other: &SubstitutionMap) -> bool {
        self.amb == other.amb && self.images.iter().zip(&other.images).all(|(a, b)| a == b)
    }

    /// The point `(phi(x_u)(p))_u`. Applying `phi ∘ psi` to a point is
    /// `point_map(psi, point_map(phi, p))`.
    pub fn point_map(&self, point: &[BigRational]) -> Result<Vec<BigRational>> {
        self.images.iter().map(|img| img.eval_dense(point)).collect()
    }
}

/// Apply `s_i` to a numeric point, failing if some `kappa_i^(j)` vanishes there.
pub fn generator_at_point(amb: Ambient, i: usize, point: &[BigRational]) -> Result<Vec<BigRational>> {
    let n = amb.n as i64;
    let kv: Vec<BigRational> = (1..=n)
        .map(|c| kappa(amb, c, i, i + 1).map(|k| k.eval_dense(point)))
        .collect::<Result<_>>()?;
    if kv.iter().any(Zero::is_zero) {
        return Err(Error::DivideByZero);
    }
    let k = |c: i64| &kv[(c - 1).rem_euclid(n) as usize];
    let mut out = point.to_vec();
    for j in 1..=n {
        let lo = amb.index(amb.var(i, j)?);
        let hi = amb.index(amb.var(i + 1, j)?);
        let up = &point[amb.index(amb.var(i + 1, j + 1)?)];
        let down = &point[amb.index(amb.var(i, j - 1)?)];
        out[lo] = up * k(j + 1) / k(j);
        out[hi] = down * k(j - 1) / k(j);
    }
    Ok(out)
}

/// The word's action on a point: `s_{w_1}` is applied to the point first.
pub fn word_at_point(amb: Ambient, word: &PermutationWord, point: &[BigRational]) -> Result<Vec<BigRational>> {
    let mut p = point.to_vec();
    for &i in word.letters() {
        p = generator_at_point(amb, i, &p)?;
    }
    Ok(p)
}

/// A random rational in `[-bound, bound]` with denominator in `1..=bound`, nonzero.
pub fn random_rational(rng: &mut StdRng, bound: i64) -> BigRational {
    loop {
        let num = rng.random_range(-bound..=bound);
        if num != 0 {
            let den = rng.random_range(1..=bound);
            return BigRational::new(num.into(), den.into());
        }
    }
}

/// Outcome of a randomized relation check.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RandomCheck {
    pub points_tested: usize,
    pub points_rejected: usize,
    /// The first point where the two sides disagree.
    pub counterexample: Option<Vec<BigRational>>,
}

/// Compare two words as maps at `points` random rational points, resampling
/// any point where a denominator vanishes along either side.
pub fn compare_words_at_random_points(
    amb: Ambient,
    lhs: &PermutationWord,
    rhs: &PermutationWord,
    points: usize,
    seed: u64,
) -> Result<RandomCheck> {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut tested = 0;
    let mut rejected = 0;
    while tested < points {
        if rejected > 100 * points.max(1) {
            return Err(Error::InvalidArgument("too many rejected sample points".into()));
        }
        let p: Vec<BigRational> = (0..amb.num_vars()).map(|_| random_rational(&mut rng, 9)).collect();
        let (a, b) = match (word_at_point(amb, lhs, &p), word_at_point(amb, rhs, &p)) {
            (Ok(a), Ok(b)) => (a, b),
            (Err(Error::DivideByZero), _) | (_, Err(Error::DivideByZero)) => {
                rejected += 1;
                continue;
            }
            (Err(e), _) | (_, Err(e)) => return Err(e),
        };
        tested += 1;
        if a != b {
            return Ok(RandomCheck {
                points_tested: tested,
                points_rejected: rejected,
                counterexample: Some(p),
            });
        }
    }
    Ok(RandomCheck {
        points_tested: tested,
        points_rejected: rejected,
        counterexample: None,
    })
}

/// `s_i s_{i+1} s_i` and `s_{i+1} s_i s_{i+1}` as words.
pub fn braid_words(amb: Ambient, i: usize) -> Result<(PermutationWord, PermutationWord)> {
    Ok((
        PermutationWord::new(amb, vec![i, i + 1, i])?,
        PermutationWord::new(amb, vec![i + 1, i, i + 1])?,
    ))
}

/// Symbolic braid relation for the pair `(s_i, s_{i+1})`.
pub fn braid_holds_symbolically(amb: Ambient, i: usize) -> Result<bool> {
    let (l, r) = braid_words(amb, i)?;
    Ok(SubstitutionMap::compose(amb, &l)?.same_as(&SubstitutionMap::compose(amb, &r)?))
}

/// Symbolic `s_i^2 = 1`.
pub fn involution_holds(amb: Ambient, i: usize) -> Result<bool> {
    Ok(SubstitutionMap::compose(amb, &PermutationWord::new(amb, vec![i, i])?)?.is_identity())
}

/// Symbolic `s_i s_j = s_j s_i`.
pub fn commutation_holds(amb: Ambient, i: usize, j: usize) -> Result<bool> {
    let a = SubstitutionMap::compose(amb, &PermutationWord::new(amb, vec![i, j])?)?;
    let b = SubstitutionMap::compose(amb, &PermutationWord::new(amb, vec![j, i])?)?;
    Ok(a.same_as(&b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{loop_e, loop_h, pi, power_sum, FlowSet};

    fn amb(m: usize, n: usize) -> Ambient {
        Ambient::new(m, n).unwrap()
    }

    fn var(a: Ambient, i: usize, j: i64) -> RatFn {
        RatFn::from_poly(&Poly::x(a, i, j).unwrap())
    }

    #[test]
    fn single_color_swaps_variables() {
        let a = amb(3, 1);
        let s = SubstitutionMap::generator(a, 2).unwrap();
        assert_eq!(s.apply(&var(a, 2, 1)).unwrap(), var(a, 3, 1));
        assert_eq!(s.apply(&var(a, 3, 1)).unwrap(), var(a, 2, 1));
        assert_eq!(s.apply(&var(a, 1, 1)).unwrap(), var(a, 1, 1));
        assert!(!s.images()[a.index(a.var(3, 1).unwrap())].has_denominator());
    }

    #[test]
    fn generator_range() {
        let a = amb(3, 2);
        assert!(SubstitutionMap::generator(a, 0).is_err());
        assert!(SubstitutionMap::generator(a, 3).is_err());
        assert!(PermutationWord::new(a, vec![1, 3]).is_err());
        assert!(SubstitutionMap::transposition(a, 1, 4).is_err());
    }

    #[test]
    fn pi_moves_to_next_flow() {
        for n in 1..=4 {
            let a = amb(3, n);
            let s = SubstitutionMap::generator(a, 1).unwrap();
            let img = s.apply_poly(&pi(a, 1).unwrap()).unwrap();
            assert_eq!(img, RatFn::from_poly(&pi(a, 2).unwrap()), "n={n}");
            assert!(!img.has_denominator());
            assert_eq!(s.apply_poly(&pi(a, 2).unwrap()).unwrap(), RatFn::from_poly(&pi(a, 1).unwrap()));
            assert_eq!(s.apply_poly(&pi(a, 3).unwrap()).unwrap(), RatFn::from_poly(&pi(a, 3).unwrap()));
        }
    }

    #[test]
    fn adjacent_color_product_is_fixed() {
        let a = amb(2, 3);
        let s = SubstitutionMap::generator(a, 1).unwrap();
        for j in 1..=3 {
            let p = Poly::x(a, 1, j).unwrap() * Poly::x(a, 2, j + 1).unwrap();
            assert_eq!(s.apply_poly(&p).unwrap(), RatFn::from_poly(&p));
        }
    }

    #[test]
    fn constants_are_fixed() {
        let a = amb(2, 2);
        let s = SubstitutionMap::generator(a, 1).unwrap();
        let c = RatFn::constant(a, crate::arith::rat(-7, 3));
        assert_eq!(s.apply(&c).unwrap(), c);
    }

    #[test]
    fn involution_on_variables() {
        let a = amb(3, 3);
        let s = SubstitutionMap::generator(a, 1).unwrap();
        for j in 1..=3 {
            let v = var(a, 1, j);
            assert_eq!(s.apply(&s.apply(&v).unwrap()).unwrap(), v);
        }
        assert!(involution_holds(a, 1).unwrap());
        assert!(involution_holds(a, 2).unwrap());
    }

    #[test]
    fn empty_word_and_trivial_transposition() {
        let a = amb(3, 2);
        assert!(SubstitutionMap::compose(a, &PermutationWord::default()).unwrap().is_identity());
        assert!(SubstitutionMap::transposition(a, 2, 2).unwrap().is_identity());
        assert!(!SubstitutionMap::generator(a, 1).unwrap().is_identity());
    }

    #[test]
    fn two_flow_transposition_is_the_generator() {
        let a = amb(2, 3);
        let t = SubstitutionMap::transposition(a, 1, 2).unwrap();
        assert!(t.same_as(&SubstitutionMap::generator(a, 1).unwrap()));
        assert!(SubstitutionMap::transposition(a, 2, 1).unwrap().same_as(&t));
    }

    #[test]
    fn transposition_words() {
        let a = amb(5, 1);
        assert_eq!(PermutationWord::transposition(a, 1, 4).unwrap().letters(), &[1, 2, 3, 2, 1]);
        assert_eq!(PermutationWord::transposition(a, 2, 3).unwrap().letters(), &[2]);
        let w = PermutationWord::transposition(a, 2, 5).unwrap();
        assert_eq!(w.permutation(5), vec![1, 5, 3, 4, 2]);
    }

    #[test]
    fn composition_convention() {
        // (s_1 ∘ s_2)(x_3) = s_1(x_2 ...) involves flow 1; (s_2 ∘ s_1)(x_3) does not.
        let a = amb(3, 1);
        let w12 = SubstitutionMap::compose(a, &"1,2".parse().unwrap()).unwrap();
        let w21 = SubstitutionMap::compose(a, &"2,1".parse().unwrap()).unwrap();
        assert_eq!(w12.apply(&var(a, 3, 1)).unwrap(), var(a, 1, 1));
        assert_eq!(w21.apply(&var(a, 3, 1)).unwrap(), var(a, 2, 1));
        assert_eq!(PermutationWord::new(a, vec![1, 2]).unwrap().permutation(3), vec![2, 3, 1]);
    }

    #[test]
    fn kappa_is_fixed() {
        for n in 1..=4 {
            let a = amb(3, n);
            let s = SubstitutionMap::generator(a, 2).unwrap();
            for r in 1..=n as i64 {
                let k = kappa(a, r, 2, 3).unwrap();
                assert_eq!(s.apply_poly(&k).unwrap(), RatFn::from_poly(&k));
            }
        }
    }

    #[test]
    fn generators_are_invariant() {
        for (m, n) in [(2, 2), (3, 2), (2, 3), (3, 3)] {
            let a = amb(m, n);
            let all = FlowSet::all(a);
            for i in 1..m {
                let s = SubstitutionMap::generator(a, i).unwrap();
                for k in 1..=3 {
                    for r in 1..=n as i64 {
                        for g in [loop_e(a, k, r, &all), loop_h(a, k, r, &all)] {
                            let img = s.apply_poly(&g).unwrap();
                            assert_eq!(img, RatFn::from_poly(&g), "m={m} n={n} i={i} k={k} r={r}");
                        }
                    }
                    let p = power_sum(a, k).unwrap();
                    assert_eq!(s.apply_poly(&p).unwrap(), RatFn::from_poly(&p));
                }
            }
        }
    }

    #[test]
    fn small_braid_and_commutation() {
        assert!(braid_holds_symbolically(amb(3, 2), 1).unwrap());
        assert!(commutation_holds(amb(4, 2), 1, 3).unwrap());
    }

    #[test]
    fn random_points_agree_with_symbolic_maps() {
        let a = amb(3, 2);
        let w: PermutationWord = "1,2".parse().unwrap();
        let map = SubstitutionMap::compose(a, &w).unwrap();
        let mut rng = StdRng::seed_from_u64(3);
        let p: Vec<BigRational> = (0..a.num_vars()).map(|_| random_rational(&mut rng, 9)).collect();
        assert_eq!(map.point_map(&p).unwrap(), word_at_point(a, &w, &p).unwrap());
    }

    #[test]
    fn random_check_finds_a_difference() {
        let a = amb(3, 2);
        let res = compare_words_at_random_points(a, &"1,2".parse().unwrap(), &"2,1".parse().unwrap(), 5, 7).unwrap();
        assert!(res.counterexample.is_some());
        let (l, r) = braid_words(a, 1).unwrap();
        let res = compare_words_at_random_points(a, &l, &r, 20, DEFAULT_SEED).unwrap();
        assert_eq!(res.counterexample, None);
        assert_eq!(res.points_tested, 20);
    }
}
