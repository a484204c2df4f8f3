//! JSON wire format.
//!
//! ```text
//! {"m":M,"n":N,"terms":[{"coeff":"p/q","exps":{"x:i:j":e,...}},...]}
//! ```
//!
//! Terms are listed leading monomial first, variables inside a term by
//! (flow, color). A rational function is `{"num":Poly,"den":Poly}`.

use std::str::FromStr;

use num_rational::BigRational;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::{Map, Value};

use super::{Ambient, Monomial, Poly, RatFn};
use crate::error::{Error, Result};

#[derive(Serialize, Deserialize)]
struct TermRepr {
    coeff: String,
    exps: Map<String, Value>,
}

#[derive(Serialize, Deserialize)]
struct PolyRepr {
    m: usize,
    n: usize,
    terms: Vec<TermRepr>,
}

#[derive(Serialize, Deserialize)]
struct RatFnRepr {
    num: Poly,
    den: Poly,
}

fn parse_key(amb: Ambient, key: &str) -> Result<usize> {
    let bad = || Error::Parse(format!("bad variable key {key:?}"));
    let mut parts = key.split(':');
    if parts.next() != Some("x") {
        return Err(bad());
    }
    let flow: usize = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    let color: usize = parts.next().ok_or_else(bad)?.parse().map_err(|_| bad())?;
    if parts.next().is_some() || color == 0 || color > amb.n {
        return Err(bad());
    }
    Ok(amb.index(amb.var(flow, color as i64)?))
}

impl PolyRepr {
    fn from_poly(p: &Poly) -> Self {
        let amb = p.ambient();
        let terms = p
            .terms()
            .rev()
            .map(|(mono, c)| {
                let mut exps = Map::new();
                for (i, e) in mono.support() {
                    exps.insert(amb.var_at(i).key(), Value::from(e));
                }
                TermRepr {
                    coeff: c.to_string(),
                    exps,
                }
            })
            .collect();
        PolyRepr {
            m: amb.m,
            n: amb.n,
            terms,
        }
    }

    fn into_poly(self) -> Result<Poly> {
        let amb = Ambient::new(self.m, self.n)?;
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in self.terms {
            let c = BigRational::from_str(t.coeff.trim())
                .map_err(|_| Error::Parse(format!("bad coefficient {:?}", t.coeff)))?;
            let mut e = vec![0u16; amb.num_vars()];
            for (k, v) in &t.exps {
                let idx = parse_key(amb, k)?;
                let k_exp = v
                    .as_u64()
                    .and_then(|x| u16::try_from(x).ok())
                    .ok_or_else(|| Error::Parse(format!("bad exponent for {k}")))?;
                e[idx] += k_exp;
            }
            terms.push((Monomial::from_exps(e), c));
        }
        Ok(Poly::from_terms(amb, terms))
    }
}

impl Serialize for Poly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRepr::from_poly(self).serialize(s)
    }
}

impl<'de> Deserialize<'de> for Poly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        PolyRepr::deserialize(d)?.into_poly().map_err(D::Error::custom)
    }
}

impl Serialize for RatFn {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RatFnRepr {
            num: self.num(),
            den: self.den(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for RatFn {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = RatFnRepr::deserialize(d)?;
        RatFn::ratio(&r.num, &r.den).map_err(D::Error::custom)
    }
}

impl Poly {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("poly serializes")
    }

    pub fn from_json(s: &str) -> Result<Poly> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl RatFn {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("ratfn serializes")
    }

    pub fn from_json(s: &str) -> Result<RatFn> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::rat;

    #[test]
    fn exact_wire_form() {
        let amb = Ambient::new(2, 3).unwrap();
        let p = Poly::x(amb, 1, 1).unwrap() * Poly::x(amb, 2, 3).unwrap().pow(2)
            - Poly::constant(amb, rat(3, 2));
        assert_eq!(
            p.to_json(),
            r#"{"m":2,"n":3,"terms":[{"coeff":"1","exps":{"x:1:1":1,"x:2:3":2}},{"coeff":"-3/2","exps":{}}]}"#
        );
        assert_eq!(Poly::from_json(&p.to_json()).unwrap(), p);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(Poly::from_json(r#"{"m":2,"n":3,"terms":[{"coeff":"1.5","exps":{}}]}"#).is_err());
        assert!(Poly::from_json(r#"{"m":2,"n":3,"terms":[{"coeff":"1","exps":{"x:3:1":1}}]}"#).is_err());
        assert!(Poly::from_json(r#"{"m":2,"n":3,"terms":[{"coeff":"1","exps":{"x:1:4":1}}]}"#).is_err());
        assert!(Poly::from_json(r#"{"m":0,"n":3,"terms":[]}"#).is_err());
    }

    #[test]
    fn ratfn_round_trip() {
        let amb = Ambient::new(2, 2).unwrap();
        let r = RatFn::ratio(
            &(Poly::x(amb, 1, 1).unwrap() + Poly::x(amb, 2, 2).unwrap()),
            &Poly::x(amb, 1, 2).unwrap().scale(&rat(-2, 1)),
        )
        .unwrap();
        let back = RatFn::from_json(&r.to_json()).unwrap();
        assert_eq!(back, r);
        assert!(r.to_json().starts_with(r#"{"num":{"m":2"#));
    }
}
