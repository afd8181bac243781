mod common;

use cesaro_core::ratfun::{kratfun_shift, ratfun_equal};
use cesaro_core::scalar::{format_rational, parse_rational, rat, Rational};
use cesaro_core::{AlphaPoly, AlphaRatFun, Poly, RatFun};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=20).prop_map(|(n, d)| rat(n, d))
}

fn poly(max_len: usize) -> impl Strategy<Value = AlphaPoly> {
    prop::collection::vec(rational(), 0..=max_len).prop_map(AlphaPoly::new)
}

fn nonzero_poly(max_len: usize) -> impl Strategy<Value = AlphaPoly> {
    poly(max_len).prop_filter("nonzero", |p| !p.is_zero())
}

fn ratfun() -> impl Strategy<Value = AlphaRatFun> {
    (poly(4), nonzero_poly(4)).prop_map(|(n, d)| AlphaRatFun::new(n, d))
}

proptest! {
    #[test]
    fn field_axioms(a in rational(), b in rational(), c in rational()) {
        prop_assert_eq!((a.clone() + b.clone()) + c.clone(), a.clone() + (b.clone() + c.clone()));
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c);
        if !a.is_zero() {
            prop_assert_eq!(a.clone() * a.recip(), Rational::one());
        }
    }

    #[test]
    fn rational_canonical_and_round_trip(n in -1000i64..1000, d in prop::num::i64::ANY.prop_filter("nonzero", |d| *d != 0)) {
        let r = Rational::new(BigInt::from(n), BigInt::from(d % 1000 + if d % 1000 == 0 { 1 } else { 0 }));
        prop_assert!(r.denom() > &BigInt::from(0));
        prop_assert_eq!(num_integer::Integer::gcd(r.numer(), r.denom()) <= BigInt::from(1) || r.numer().is_zero(), true);
        prop_assert_eq!(parse_rational(&format_rational(&r)).unwrap(), r);
    }

    #[test]
    fn eval_is_multiplicative(p in poly(5), q in poly(5), a in rational()) {
        prop_assert_eq!((p.clone() * q.clone()).eval(&a), p.eval(&a) * q.eval(&a));
        prop_assert_eq!((p.clone() + q.clone()).eval(&a), p.eval(&a) + q.eval(&a));
    }

    #[test]
    fn horner_matches_power_sum(p in poly(6), a in rational()) {
        let direct = p.coeffs().iter().enumerate().fold(Rational::zero(), |acc, (i, c)| {
            acc + c.clone() * num_traits::pow(a.clone(), i)
        });
        prop_assert_eq!(p.eval(&a), direct);
    }

    #[test]
    fn division_identity(p in poly(6), d in nonzero_poly(4)) {
        let (q, r) = p.div_rem(&d);
        prop_assert_eq!(q * d.clone() + r.clone(), p);
        prop_assert!(r.degree().is_none_or(|rd| rd < d.degree().unwrap()));
    }

    #[test]
    fn canonicalization_idempotent(f in ratfun()) {
        let again = AlphaRatFun::new(f.num().clone(), f.den().clone());
        prop_assert_eq!(again.num(), f.num());
        prop_assert_eq!(again.den(), f.den());
        prop_assert_eq!(f.den().leading(), Some(&Rational::one()));
        prop_assert_eq!(f.num().gcd(f.den()).degree().unwrap_or(0), 0);
        let p = AlphaPoly::new(f.num().coeffs().to_vec());
        prop_assert_eq!(AlphaPoly::new(p.coeffs().to_vec()), p);
        let k: RatFun<AlphaRatFun> = RatFun::new(Poly::new(vec![f.clone(), AlphaRatFun::one()]), Poly::linear(AlphaRatFun::from_poly(AlphaPoly::from_i64s(&[2, 1]))));
        let k2 = RatFun::new(k.num().clone(), k.den().clone());
        prop_assert_eq!(k2.num(), k.num());
        prop_assert_eq!(k2.den(), k.den());
    }

    #[test]
    fn ratfun_equal_matches_pointwise(f in ratfun(), g in ratfun()) {
        let symbolic = ratfun_equal(&f, &g);
        let bound = (f.num().clone() * g.den().clone()).degree().unwrap_or(0)
            .max((g.num().clone() * f.den().clone()).degree().unwrap_or(0)) + 1;
        let mut samples = Vec::new();
        let mut x = 0i64;
        while samples.len() < bound {
            let a = rat(x, 7);
            x += 1;
            if let (Ok(u), Ok(v)) = (f.eval(&a), g.eval(&a)) {
                samples.push(u == v);
            }
        }
        prop_assert_eq!(symbolic, samples.iter().all(|&b| b));
        let scaled = AlphaRatFun::new(f.num().clone() * g.den().clone(), f.den().clone() * g.den().clone());
        prop_assert!(ratfun_equal(&f, &scaled) || g.den().is_zero());
    }

    #[test]
    fn shift_commutes_with_evaluation(f in ratfun(), k in 0i64..20) {
        let shifted = kratfun_shift(&f);
        if let (Ok(a), Ok(b)) = (shifted.eval(&rat(k, 1)), f.eval(&rat(k + 1, 1))) {
            prop_assert_eq!(a, b);
        }
    }
}
