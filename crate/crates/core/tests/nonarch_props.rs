use std::cmp::Ordering;

use limitless::nonarch::{derivative_at, BigRational, Poly, RatFunc};
use num_bigint::BigInt;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngSeed};

fn config(cases: u32) -> Config {
    let seed = std::env::var("LIMITLESS_SEED")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(0x5eed);
    Config {
        cases,
        rng_seed: RngSeed::Fixed(seed),
        failure_persistence: None,
        ..Config::default()
    }
}

fn rational() -> impl Strategy<Value = BigRational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
}

fn poly(max_len: usize) -> impl Strategy<Value = Poly> {
    prop::collection::vec(rational(), 0..=max_len).prop_map(Poly::new)
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (poly(3), poly(3).prop_filter("nonzero denominator", |p| !p.is_zero()))
        .prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

fn nonzero() -> impl Strategy<Value = RatFunc> {
    ratfunc().prop_filter("nonzero", |r| !r.is_zero())
}

/// Coefficient rule, written independently of the order-counting path.
fn power_rule_at(p: &Poly, x0: &BigRational) -> BigRational {
    let mut acc = BigRational::from_integer(0.into());
    let mut x_pow = BigRational::from_integer(1.into());
    for (i, c) in p.coeffs().iter().enumerate().skip(1) {
        acc += c * BigRational::from_integer(BigInt::from(i)) * &x_pow;
        x_pow *= x0;
    }
    acc
}

proptest! {
    #![proptest_config(config(256))]

    #[test]
    fn addition_is_a_commutative_group(a in ratfunc(), b in ratfunc(), c in ratfunc()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&a + &RatFunc::zero(), a.clone());
        prop_assert_eq!(&a + &(-&a), RatFunc::zero());
    }

    #[test]
    fn multiplication_axioms(a in ratfunc(), b in ratfunc(), c in ratfunc(), d in nonzero()) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&d * &d.inv().unwrap(), RatFunc::one());
        prop_assert_eq!(a.checked_div(&d).unwrap(), &a * &d.inv().unwrap());
    }

    #[test]
    fn order_is_compatible(a in nonzero(), b in nonzero(), c in ratfunc()) {
        // exactly one of a > 0, a < 0
        prop_assert_ne!(a.signum(), Ordering::Equal);
        let (pa, pb) = (a.abs_like(), b.abs_like());
        prop_assert!(pa > RatFunc::zero() && pb > RatFunc::zero());
        prop_assert!(&pa + &pb > RatFunc::zero());
        prop_assert!(&pa * &pb > RatFunc::zero());
        // translation invariance
        prop_assert_eq!(a.cmp(&b), (&a + &c).cmp(&(&b + &c)));
    }

    #[test]
    fn standard_part_is_a_homomorphism(a in ratfunc(), b in ratfunc()) {
        if let (Ok(sa), Ok(sb)) = (a.standard_part(), b.standard_part()) {
            prop_assert_eq!((&a + &b).standard_part().unwrap(), &sa + &sb);
            prop_assert_eq!((&a * &b).standard_part().unwrap(), &sa * &sb);
        }
    }

    #[test]
    fn derivative_of_polynomials(p in poly(9), x0 in rational()) {
        let f = RatFunc::from_poly(p.clone());
        prop_assert_eq!(derivative_at(&f, &x0).unwrap(), power_rule_at(&p, &x0));
    }

    #[test]
    fn quotient_rule_agrees(p in poly(4), q in poly(3), x0 in rational()) {
        prop_assume!(!q.is_zero() && !q.eval(&x0).is_zero_value());
        let f = RatFunc::new(p.clone(), q.clone()).unwrap();
        let (pv, qv) = (p.eval(&x0), q.eval(&x0));
        let expect = (power_rule_at(&p, &x0) * &qv - &pv * power_rule_at(&q, &x0)) / (&qv * &qv);
        prop_assert_eq!(derivative_at(&f, &x0).unwrap(), expect);
    }
}

trait TestExt {
    fn abs_like(&self) -> RatFunc;
}

impl TestExt for RatFunc {
    fn abs_like(&self) -> RatFunc {
        if self.signum() == Ordering::Less {
            -self
        } else {
            self.clone()
        }
    }
}

trait IsZero {
    fn is_zero_value(&self) -> bool;
}

impl IsZero for BigRational {
    fn is_zero_value(&self) -> bool {
        *self.numer() == BigInt::from(0)
    }
}

#[test]
fn eps_is_below_every_unit_fraction() {
    let one = RatFunc::one();
    let eps = RatFunc::eps();
    for n in (1..=1_000_000i64).step_by(997).chain([1_000_000]) {
        assert!(&RatFunc::from_integer(n) * &eps < one, "n = {n}");
    }
}
