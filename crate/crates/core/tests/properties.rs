//! Randomized property suites for the coefficient rings, the series
//! engine, and the bilateral sum specifications.

use proptest::prelude::*;

use qcrank::series::{CoefRing, DualRational, QSeries, Rational, ZLaurent};
use qcrank::verify::registry_bilateral_specs;

fn rat_strategy() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(n, d))
}

fn dual_strategy() -> impl Strategy<Value = DualRational> {
    (rat_strategy(), rat_strategy()).prop_map(|(v, d)| DualRational::new(v, d))
}

fn zlaurent_strategy() -> impl Strategy<Value = ZLaurent<Rational>> {
    proptest::collection::vec((rat_strategy(), -4i64..=4), 0..4).prop_map(|terms| {
        let mut z = ZLaurent::constant(Rational::zero());
        for (c, e) in terms {
            z = z.add(&ZLaurent::monomial(c, e));
        }
        z
    })
}

fn series_strategy(order: i64) -> impl Strategy<Value = QSeries<Rational>> {
    let len = (order + 4) as usize;
    (proptest::collection::vec(rat_strategy(), len..=len), -3i64..=0).prop_map(
        move |(coefs, lower)| {
            let mut s = QSeries::zero(lower, order);
            for (i, c) in coefs.into_iter().enumerate() {
                let e = lower + i as i64;
                if e > order {
                    break;
                }
                s.set_coeff(e, c);
            }
            s
        },
    )
}

fn unit_series_strategy(order: i64) -> impl Strategy<Value = QSeries<Rational>> {
    (series_strategy(order), 1i64..=9, prop::bool::ANY).prop_map(|(mut s, head, negate)| {
        let lower = s.lower();
        let head = if negate { -head } else { head };
        s.set_coeff(lower, Rational::new(head, 1));
        s
    })
}

fn assert_series_eq(a: &QSeries<Rational>, b: &QSeries<Rational>) {
    let upto = a.order().min(b.order());
    let lower = a.lower().min(b.lower());
    if let Some((e, l, r)) = a.first_mismatch(b, lower, upto) {
        panic!("series differ at q^{e}: {l} vs {r}");
    }
}

macro_rules! ring_law_suite {
    ($name:ident, $strategy:expr) => {
        mod $name {
            use super::*;

            proptest! {
                #![proptest_config(ProptestConfig::with_cases(128))]

                #[test]
                fn add_commutes(a in $strategy, b in $strategy) {
                    prop_assert_eq!(a.add(&b), b.add(&a));
                }

                #[test]
                fn mul_commutes(a in $strategy, b in $strategy) {
                    prop_assert_eq!(a.mul(&b), b.mul(&a));
                }

                #[test]
                fn mul_associates(a in $strategy, b in $strategy, c in $strategy) {
                    prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
                }

                #[test]
                fn distributes(a in $strategy, b in $strategy, c in $strategy) {
                    prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
                }

                #[test]
                fn identities(a in $strategy) {
                    prop_assert_eq!(a.add(&CoefRing::zero()), a.clone());
                    prop_assert_eq!(a.mul(&CoefRing::one()), a.clone());
                    prop_assert!(CoefRing::is_zero(&a.add(&a.neg())));
                }

                #[test]
                fn inverse_roundtrip(a in $strategy) {
                    if let Some(inv) = a.inv() {
                        prop_assert_eq!(a.mul(&inv), CoefRing::one());
                    }
                }
            }
        }
    };
}

ring_law_suite!(rational_ring, rat_strategy());
ring_law_suite!(dual_ring, dual_strategy());
ring_law_suite!(zlaurent_ring, zlaurent_strategy());

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn series_invert_two_sided(s in unit_series_strategy(14)) {
        let inv = s.invert().unwrap();
        let left = s.mul(&inv);
        let right = inv.mul(&s);
        let one = QSeries::<Rational>::one(left.order());
        prop_assert!(left.first_mismatch(&one, 0, left.order()).is_none());
        prop_assert!(right.first_mismatch(&one, 0, right.order()).is_none());
        // the inverse of a series with lowest exponent L is valid to N - 2L
        prop_assert_eq!(inv.order(), s.order() - 2 * s.lower());
    }

    #[test]
    fn dissect_reassembles_and_is_disjoint(s in series_strategy(20), m in 2i64..=7) {
        let parts = s.dissect(m);
        prop_assert_eq!(parts.len(), m as usize);
        let mut total = QSeries::zero(s.lower(), s.order());
        for (r, p) in parts.iter().enumerate() {
            for e in p.lower()..=p.order() {
                if !CoefRing::is_zero(&p.coeff(e)) {
                    prop_assert_eq!(e.rem_euclid(m), r as i64);
                }
            }
            total = total.add(p);
        }
        assert_series_eq(&total, &s);
    }

    #[test]
    fn dilate_composes(s in series_strategy(10), j in 2i64..=3, k in 2i64..=3) {
        assert_series_eq(&s.dilate(j).dilate(k), &s.dilate(j * k));
    }

    #[test]
    fn dilate_moves_coefficients(s in series_strategy(10), k in 2i64..=4) {
        let d = s.dilate(k);
        for e in s.lower()..=s.order() {
            prop_assert_eq!(d.coeff(k * e), s.coeff(e));
        }
    }

    #[test]
    fn product_validity_bound(a in series_strategy(12), b in series_strategy(9)) {
        let prod = a.mul(&b);
        prop_assert_eq!(
            prod.order(),
            (a.order() + b.lower()).min(b.order() + a.lower())
        );
        prop_assert_eq!(prod.lower(), a.lower() + b.lower());
    }

    #[test]
    fn dual_series_product_rule(
        v1 in series_strategy(10), d1 in series_strategy(10),
        v2 in series_strategy(10), d2 in series_strategy(10),
    ) {
        let build = |v: &QSeries<Rational>, d: &QSeries<Rational>| {
            let lower = v.lower().min(d.lower());
            let order = v.order().min(d.order());
            let mut s = QSeries::zero(lower, order);
            for e in lower..=order {
                s.set_coeff(e, DualRational::new(v.coeff(e), d.coeff(e)));
            }
            s
        };
        let a = build(&v1, &d1);
        let b = build(&v2, &d2);
        let prod = a.mul(&b);
        let lhs = prod.deriv_at_one();
        let rhs = a.deriv_at_one().mul(&b.value_at_one())
            .add(&a.value_at_one().mul(&b.deriv_at_one()))
            .truncated(lhs.order());
        assert_series_eq(&lhs, &rhs);
    }

    #[test]
    fn reduce_mod_is_idempotent_and_zeroes_multiples(s in series_strategy(15), m in 2i64..=7) {
        // clear denominators so reduction is defined, then scale by m
        let mut cleared = QSeries::zero(s.lower(), s.order());
        for e in s.lower()..=s.order() {
            cleared.set_coeff(e, Rational::from_bigint(s.coeff(e).numer().clone()));
        }
        let scaled = cleared.scale(&Rational::from(m));
        let reduced = scaled.reduce_mod(m).unwrap();
        prop_assert!(reduced.is_zero());
        let once = cleared.reduce_mod(m).unwrap();
        let twice = once.reduce_mod(m).unwrap();
        assert_series_eq(&once, &twice);
    }
}

#[test]
fn bilateral_specs_parity_invariant() {
    let specs = registry_bilateral_specs();
    assert!(specs.len() >= 50, "expected a substantial spec inventory");
    for spec in &specs {
        assert!(spec.a > 0);
        assert_eq!((spec.a + spec.b) % 2, 0, "A + B must be even for {spec:?}");
        for m in -50..=50 {
            // the numerator exponent (Am^2 + Bm)/2 + C must be an integer
            assert_eq!(
                (spec.a * m * m + spec.b * m) % 2,
                0,
                "odd numerator exponent at m = {m} for {spec:?}"
            );
            assert_eq!(spec.num_exp(m), (spec.a * m * m + spec.b * m) / 2 + spec.c);
            assert_eq!(spec.den_exp(m), spec.d * m + spec.e);
        }
    }
}

#[test]
fn zlaurent_class_sum_partitions_support() {
    let mut z = ZLaurent::constant(Rational::zero());
    for e in -7i64..=7 {
        z = z.add(&ZLaurent::monomial(Rational::from(e * e + 1), e));
    }
    let m = 5i64;
    let mut total = Rational::zero();
    for r in 0..m {
        total = total.add(&z.class_sum(m, r));
    }
    assert_eq!(total, z.eval_at_one());
}
