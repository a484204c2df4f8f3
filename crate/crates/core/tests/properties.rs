//! Property tests for the arithmetic layer and the action.

use loopsym::action::{PermutationWord, SubstitutionMap};
use loopsym::arith::rat;
use loopsym::generators::{loop_e, loop_h, FlowSet};
use loopsym::tableaux::{loop_schur, Partition};
use loopsym::{Ambient, BigRational, Monomial, Poly, RatFn};
use proptest::prelude::*;

const AMB: Ambient = Ambient { m: 2, n: 2 };

fn poly_strategy() -> impl Strategy<Value = Poly> {
    prop::collection::vec((prop::collection::vec(0u16..3, 4), -5i64..=5, 1i64..=3), 0..5).prop_map(|terms| {
        Poly::from_terms(
            AMB,
            terms.into_iter().map(|(e, p, q)| (Monomial::from_exps(e), rat(p, q))),
        )
    })
}

fn nonzero_poly() -> impl Strategy<Value = Poly> {
    poly_strategy().prop_filter("nonzero", |p| !p.is_zero())
}

fn point_strategy() -> impl Strategy<Value = Vec<BigRational>> {
    prop::collection::vec((-7i64..=7, 1i64..=5), 4).prop_map(|v| v.into_iter().map(|(p, q)| rat(p, q)).collect())
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms(a in poly_strategy(), b in poly_strategy(), c in poly_strategy()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &Poly::zero(AMB), a.clone());
        prop_assert_eq!(&a * &Poly::one(AMB), a.clone());
        prop_assert!((&a - &a).is_zero());
    }

    #[test]
    fn json_round_trip(a in poly_strategy()) {
        prop_assert_eq!(Poly::from_json(&a.to_json()).unwrap(), a.clone());
        let text = a.to_json();
        prop_assert_eq!(Poly::from_json(&text).unwrap().to_json(), text);
    }

    #[test]
    fn ratfn_json_round_trip(a in poly_strategy(), b in nonzero_poly()) {
        let f = RatFn::ratio(&a, &b).unwrap();
        prop_assert_eq!(RatFn::from_json(&f.to_json()).unwrap(), f);
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in poly_strategy(), b in poly_strategy(), pt in point_strategy()) {
        prop_assert_eq!((&a + &b).eval_dense(&pt), a.eval_dense(&pt) + b.eval_dense(&pt));
        prop_assert_eq!((&a * &b).eval_dense(&pt), a.eval_dense(&pt) * b.eval_dense(&pt));
    }

    #[test]
    fn exact_division_recovers_factor(a in nonzero_poly(), b in nonzero_poly()) {
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn ratfn_equality_is_an_equivalence(
        a in poly_strategy(), b in nonzero_poly(), c in nonzero_poly(), d in nonzero_poly()
    ) {
        let f = RatFn::ratio(&a, &b).unwrap();
        let g = RatFn::ratio(&(&a * &c), &(&b * &c)).unwrap();
        let h = RatFn::ratio(&(&a * &d), &(&b * &d)).unwrap();
        prop_assert!(f == f.clone());
        prop_assert!(f == g && g == f);
        prop_assert!(g == h && f == h);
    }

    #[test]
    fn ratfn_field_operations(a in poly_strategy(), b in nonzero_poly(), c in nonzero_poly(), pt in point_strategy()) {
        let f = RatFn::ratio(&a, &b).unwrap();
        let g = RatFn::ratio(&b, &c).unwrap();
        prop_assert_eq!(&(&f + &g) - &g, f.clone());
        prop_assert_eq!(&(&f * &g) / &g, f.clone());
        if let (Ok(fv), Ok(gv)) = (f.eval_dense(&pt), g.eval_dense(&pt)) {
            if let Ok(sv) = (&f + &g).eval_dense(&pt) {
                prop_assert_eq!(sv, fv.clone() + gv.clone());
            }
            if let Ok(pv) = (&f * &g).eval_dense(&pt) {
                prop_assert_eq!(pv, fv * gv);
            }
        }
    }

    #[test]
    fn action_is_a_ring_map(a in poly_strategy(), b in poly_strategy(), w in prop::collection::vec(1usize..2, 0..3)) {
        let map = SubstitutionMap::compose(AMB, &PermutationWord::new(AMB, w).unwrap()).unwrap();
        let fa = map.apply_poly(&a).unwrap();
        let fb = map.apply_poly(&b).unwrap();
        prop_assert_eq!(map.apply_poly(&(&a * &b)).unwrap(), &fa * &fb);
        prop_assert_eq!(map.apply_poly(&(&a + &b)).unwrap(), &fa + &fb);
    }

    #[test]
    fn symmetric_functions_are_fixed(word in prop::collection::vec(1usize..3, 1..4), k in 1usize..3, r in 1i64..=2) {
        let amb = Ambient::new(3, 2).unwrap();
        let map = SubstitutionMap::compose(amb, &PermutationWord::new(amb, word).unwrap()).unwrap();
        let all = FlowSet::all(amb);
        for f in [loop_e(amb, k, r, &all), loop_h(amb, k, r, &all), loop_schur(amb, &Partition::new(vec![k, 1]).unwrap(), r)] {
            prop_assert_eq!(map.apply_poly(&f).unwrap(), RatFn::from_poly(&f));
        }
    }
}
