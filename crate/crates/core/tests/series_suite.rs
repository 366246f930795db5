//! Order-theoretic properties of the positivity order and exact identities
//! behind the relation-count certificates.

use gs_forge_core::scalar::{rat, rat_int, Rat};
use gs_forge_core::series::{golod_bound, golod_certificate, TruncatedSeries};
use num_traits::Zero;
use proptest::prelude::*;

const ORDER: usize = 10;

fn arb_series() -> impl Strategy<Value = TruncatedSeries> {
    proptest::collection::vec((-6i64..=6, 1i64..=3), ORDER + 1).prop_map(|cs| {
        TruncatedSeries::from_coeffs(cs.into_iter().map(|(n, d)| rat(n, d)).collect())
    })
}

fn arb_nonneg_series() -> impl Strategy<Value = TruncatedSeries> {
    proptest::collection::vec((0i64..=6, 1i64..=3), ORDER + 1).prop_map(|cs| {
        TruncatedSeries::from_coeffs(cs.into_iter().map(|(n, d)| rat(n, d)).collect())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn positivity_is_a_partial_order(a in arb_series(), b in arb_series(), c in arb_series()) {
        prop_assert!(a.succeq(&a));
        if a.succeq(&b) && b.succeq(&a) {
            prop_assert_eq!(a.clone(), b.clone());
        }
        if a.succeq(&b) && b.succeq(&c) {
            prop_assert!(a.succeq(&c));
        }
    }

    #[test]
    fn order_respects_addition_and_nonnegative_multiplication(
        a in arb_series(), b in arb_series(), p in arb_nonneg_series()
    ) {
        if a.succeq(&b) {
            // adding any series preserves the order
            prop_assert!(a.add(&p).succeq(&b.add(&p)));
            // multiplying by a coefficientwise-nonnegative series too
            prop_assert!(a.mul(&p).succeq(&b.mul(&p)));
        }
        // the nonnegative cone is closed under + and *
        let q = p.mul(&p);
        prop_assert!(q.is_nonnegative());
        prop_assert!(p.add(&q).is_nonnegative());
    }

    #[test]
    fn inverse_is_a_two_sided_unit(a in arb_series()) {
        prop_assume!(!a.coeff(0).is_zero());
        let inv = a.inverse().unwrap();
        prop_assert_eq!(a.mul(&inv), TruncatedSeries::one(ORDER));
        prop_assert_eq!(inv.mul(&a), TruncatedSeries::one(ORDER));
    }
}

#[test]
fn golod_certificates_for_the_parameter_grid() {
    let order = 20;
    for k in 2u64..=5 {
        let eps_choices: Vec<Rat> = vec![rat(1, 2), rat_int(1), rat((k as i64) - 1, 2)];
        for eps in eps_choices {
            if eps.is_zero() || eps > rat(k as i64, 2) {
                continue;
            }
            let cert = golod_certificate(k, &eps, order)
                .unwrap_or_else(|e| panic!("k={k} eps={eps}: {e}"));
            assert!(cert.product_identity, "product identity k={k} eps={eps}");
            assert!(cert.inverse_identity, "inverse identity k={k} eps={eps}");
            assert!(cert.inverse_nonnegative, "positivity k={k} eps={eps}");
            assert!(cert.tail_nonzero, "tail k={k} eps={eps}");
            // gamma is exactly the generating function of the bounds
            for n in 2..=order {
                assert_eq!(
                    cert.gamma.coeff(n),
                    golod_bound(k, &eps, n as u32).unwrap(),
                    "gamma coefficient {n} for k={k} eps={eps}"
                );
            }
        }
    }
}

#[test]
fn golod_certificate_matches_known_expansion() {
    // k = 2, eps = 1: alpha = 1 - t, inverse = sum (n+1) t^n
    let cert = golod_certificate(2, &rat_int(1), 16).unwrap();
    for n in 0..=16 {
        assert_eq!(cert.inverse.coeff(n), rat_int(n as i64 + 1));
    }
}
