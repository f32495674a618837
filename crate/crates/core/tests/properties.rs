use num_bigint::BigUint;
use proptest::prelude::*;

use sumrank::bounds::{gv_max_k, singleton_max_k, sp_max_k, sp_simplified_max_k};
use sumrank::combinatorics::q_binomial;
use sumrank::genericity::{msrd_prob_lb_A, msrd_prob_lb_U, UVariant};
use sumrank::volumes::{sphere_volume, sphere_volume_direct, CodeParams, VolumeTable};

fn params() -> impl Strategy<Value = CodeParams> {
    (prop::sample::select(vec![2u64, 3, 4, 5, 7, 8, 9]), 1u64..=6, 1u64..=6, 1u64..=8)
        .prop_map(|(q, m, eta, ell)| CodeParams::new(q, m, eta, ell).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn spheres_partition_the_space(p in params()) {
        let t = VolumeTable::full(p).unwrap();
        let total: BigUint = t.spheres().iter().sum();
        prop_assert_eq!(&total, &p.space_size());
        prop_assert_eq!(t.ball(p.max_weight()).unwrap(), &total);
    }

    #[test]
    fn dp_matches_partition_sum(p in params(), frac in 0.0f64..=1.0) {
        let t = (frac * p.max_weight() as f64).round() as u64;
        prop_assert_eq!(sphere_volume(&p, t).unwrap(), sphere_volume_direct(&p, t).unwrap());
    }

    #[test]
    fn max_dimensions_ordered(p in params(), frac in 0.0f64..=1.0) {
        let d = 1 + (frac * (p.max_weight() - 1) as f64).round() as u64;
        let t = VolumeTable::full(p).unwrap();
        let sp = sp_max_k(&t, d).unwrap();
        let gv = gv_max_k(&t, d).unwrap();
        prop_assert!(gv <= sp);
        prop_assert!(sp <= sp_simplified_max_k(&p, d).unwrap());
        prop_assert!(gv <= singleton_max_k(&p, d).unwrap());
    }

    #[test]
    fn q_binomial_symmetric_and_pascal(n in 1i64..12, k in 0i64..12, q in 2u64..6) {
        let k = k.min(n);
        prop_assert_eq!(q_binomial(n, k, q), q_binomial(n, n - k, q));
        if k >= 1 {
            // [n, k] = [n-1, k-1] + q^k [n-1, k]
            let rhs = q_binomial(n - 1, k - 1, q) + BigUint::from(q).pow(k as u32) * q_binomial(n - 1, k, q);
            prop_assert_eq!(q_binomial(n, k, q), rhs);
        }
    }

    #[test]
    fn genericity_lower_bounds_monotone_in_m(q in 2u64..5, m in 1u64..30, eta in 1u64..4, ell in 1u64..4, k in 1u64..4) {
        prop_assume!(k <= ell * eta.min(m));
        let a0 = msrd_prob_lb_A(q, m, eta, ell, k).unwrap().raw_lower;
        let a1 = msrd_prob_lb_A(q, m + 1, eta, ell, k).unwrap().raw_lower;
        prop_assert!(a1 >= a0);
        let u0 = msrd_prob_lb_U(q, m, eta, ell, k, UVariant::Lemma).unwrap().raw_lower;
        let u1 = msrd_prob_lb_U(q, m + 1, eta, ell, k, UVariant::Lemma).unwrap().raw_lower;
        prop_assert!(u0 <= 1.0 && a0 <= 1.0 && u1 >= u0 - 1e-12);
    }
}
