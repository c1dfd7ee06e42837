//! Invariants as properties over seeded random data and small integer inputs.

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use freeboson::algebra::{d_coeff, d_coeff_closed_form, rescale, theta, PlainCombination, WickCombination};
use freeboson::amplitude::{amplitude_entry, Disc, DiscConfiguration};
use freeboson::cli::report::{parse_scalar, scalar};
use freeboson::correlator::{expect_combo, kernel};
use freeboson::fock::{fock_inner, ladder, FockVector};
use freeboson::hilbert::state_inner;
use freeboson::random;
use freeboson::{ComplexScalar, ExactComplex, QSqrt2};

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn qsqrt2() -> impl Strategy<Value = QSqrt2> {
    (-50i64..50, 1i64..20, -50i64..50, 1i64..20).prop_map(|(a, b, c, d)| QSqrt2::new(ratio(a, b), ratio(c, d)))
}

fn exact() -> impl Strategy<Value = ComplexScalar> {
    (qsqrt2(), qsqrt2()).prop_map(|(re, im)| ComplexScalar::Exact(ExactComplex::new(re, im)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn d_recursion_matches_closed_form(m in 1u32..=24, a in -2i64..=26) {
        prop_assert_eq!(d_coeff(m as i64, a).unwrap(), d_coeff_closed_form(m, a));
    }

    #[test]
    fn field_operations_are_exact(a in exact(), b in exact()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!(&(&a * &b) / &b, a.clone());
        prop_assert_eq!(&(&a + &b) - &b, a.clone());
        prop_assert_eq!((&a * &b).conj(), &a.conj() * &b.conj());
    }

    #[test]
    fn exact_serialization_round_trips(a in exact()) {
        let text = serde_json::to_string(&scalar(&a)).unwrap();
        prop_assert_eq!(parse_scalar(&serde_json::from_str(&text).unwrap()).unwrap(), a);
    }

    #[test]
    fn qsqrt2_display_round_trips(x in qsqrt2()) {
        prop_assert_eq!(x.to_string().parse::<QSqrt2>().unwrap(), x);
    }

    #[test]
    fn kernel_is_symmetric(seed in any::<u64>(), m1 in 1u32..=5, m2 in 1u32..=5) {
        let mut rng = random::rng(seed);
        let z1 = random::gaussian(&mut rng, 6, 3);
        let z2 = random::gaussian(&mut rng, 6, 3);
        prop_assume!(z1 != z2);
        prop_assert_eq!(kernel(m1, &z1, m2, &z2).unwrap(), kernel(m2, &z2, m1, &z1).unwrap());
    }

    #[test]
    fn expectation_is_linear(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let f = random::wick_combination(&mut rng, 2, 4, 2);
        let g = random::wick_combination(&mut rng, 2, 4, 2);
        let (a, b) = (random::coefficient(&mut rng), random::coefficient(&mut rng));
        let lhs = expect_combo(&(&f.scale(&a) + &g.scale(&b))).unwrap();
        let rhs = &a * &expect_combo(&f).unwrap() + &b * &expect_combo(&g).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn theta_is_an_involution(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let f = random::plain_combination(&mut rng, 2, 4, 3);
        prop_assert_eq!(theta(&theta(&f).unwrap()).unwrap(), f);
    }

    #[test]
    fn affine_rescaling_preserves_expectations(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let w = random::plain_word(&mut rng, 4, 2);
        let f = PlainCombination::word(w);
        let a = random::gaussian(&mut rng, 4, 2);
        let q = random::coefficient(&mut rng);
        prop_assert_eq!(expect_combo(&rescale(&f, &a, &q).unwrap()).unwrap(), expect_combo(&f).unwrap());
    }

    #[test]
    fn inner_product_is_hermitian_and_positive(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let f: WickCombination = random::wick_combination(&mut rng, 2, 3, 2);
        let g: WickCombination = random::wick_combination(&mut rng, 2, 3, 2);
        prop_assert_eq!(state_inner(&f, &g).unwrap(), state_inner(&g, &f).unwrap().conj());
        let norm = state_inner(&f, &f).unwrap();
        prop_assert!(norm.is_real());
        prop_assert!(norm.real_cmp(&ComplexScalar::zero()) != Some(std::cmp::Ordering::Less));
    }

    #[test]
    fn ladder_commutator_and_adjoint(seed in any::<u64>(), m in -6i64..=6, n in -6i64..=6) {
        let mut rng = random::rng(seed);
        let v = random::fock_vector(&mut rng, 3, 8);
        let w = random::fock_vector(&mut rng, 3, 8);
        let lhs = &ladder(&ladder(&v, n), m) - &ladder(&ladder(&v, m), n);
        let rhs = if m + n == 0 { v.scale(&ComplexScalar::integer(m)) } else { FockVector::zero() };
        prop_assert_eq!(lhs, rhs);
        prop_assert_eq!(fock_inner(&ladder(&v, -m), &w), fock_inner(&v, &ladder(&w, m)));
    }

    #[test]
    fn basis_norms_match_the_fock_inner_product(seed in any::<u64>()) {
        let mut rng = random::rng(seed);
        let idx = random::fock_index(&mut rng, 10);
        let v = FockVector::basis(idx.clone());
        prop_assert_eq!(fock_inner(&v, &v), ComplexScalar::from_bigint(&idx.norm_sq()));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn odd_particle_counts_give_zero_amplitudes(seed in any::<u64>(), sep in 6i64..20) {
        let mut rng = random::rng(seed);
        let config = DiscConfiguration::new(vec![
            Disc::new(ComplexScalar::zero(), ComplexScalar::one()).unwrap(),
            Disc::new(ComplexScalar::integer(sep), ComplexScalar::rational(1, 2)).unwrap(),
        ])
        .unwrap();
        let a = random::fock_index(&mut rng, 5);
        let b = random::fock_index(&mut rng, 5);
        let value = amplitude_entry(&config, &[a.clone(), b.clone()]).unwrap();
        if (a.particles() + b.particles()) % 2 == 1 {
            prop_assert!(value.is_zero());
        }
        // swapping the discs and the indices together leaves |A|^2 unchanged
        let flipped = DiscConfiguration::new(config.discs().iter().rev().cloned().collect()).unwrap();
        let swapped = amplitude_entry(&flipped, &[b, a]).unwrap();
        prop_assert_eq!(swapped.abs_sq(), value.abs_sq());
    }
}
