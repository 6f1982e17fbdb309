//! Property-based invariants spanning the whole library, driven by random
//! draws from the small-prime pool where exhaustive sweeps would be slow.

use proptest::prelude::*;

use cubecurve::curve::primes_one_mod_six;
use cubecurve::{
    abscissa_sums, add, count_cubic_sum, count_enumeration, count_quadratic_sum, count_rho,
    cube_roots, cube_solution_count, enumerate_points, is_on_curve, legendre_symbol, negate,
    scalar_mul, sqrt_mod, twist_relation_check, CurveParams, Point, PrimeModulus, QuadChar,
    ZetaData, DEFAULT_ENUMERATION_CAP,
};

fn prime_pool() -> Vec<u64> {
    primes_one_mod_six(7, 500)
}

fn arb_prime() -> impl Strategy<Value = u64> {
    proptest::sample::select(prime_pool())
}

fn arb_curve() -> impl Strategy<Value = CurveParams> {
    arb_prime()
        .prop_flat_map(|p| (Just(p), 1..p))
        .prop_map(|(p, a)| CurveParams::new(p, a).unwrap())
}

proptest! {
    #[test]
    fn pow_matches_iterated_product(p in arb_prime(), v in 0u64..500, exp in 0u64..40) {
        let m = PrimeModulus::new(p).unwrap();
        let x = m.element(v);
        let mut acc = m.element(1);
        for _ in 0..exp {
            acc = acc * x;
        }
        prop_assert_eq!(x.pow(exp), acc);
    }

    #[test]
    fn legendre_is_multiplicative(p in arb_prime(), u in 1u64..500, v in 1u64..500) {
        let m = PrimeModulus::new(p).unwrap();
        let (a, b) = (m.element(u), m.element(v));
        prop_assume!(!a.is_zero() && !b.is_zero());
        prop_assert_eq!(
            legendre_symbol(a * b).value(),
            legendre_symbol(a).value() * legendre_symbol(b).value()
        );
    }

    #[test]
    fn sqrt_count_follows_character(p in arb_prime(), v in 0u64..1000) {
        let m = PrimeModulus::new(p).unwrap();
        let t = m.element(v);
        let roots = sqrt_mod(t);
        let expected = match legendre_symbol(t) {
            QuadChar::NonResidue => 0,
            QuadChar::Zero => 1,
            QuadChar::Residue => 2,
        };
        prop_assert_eq!(roots.len(), expected);
        for r in roots {
            prop_assert_eq!(r.square(), t);
        }
    }

    #[test]
    fn cube_roots_consistent(p in arb_prime(), v in 0u64..1000) {
        let m = PrimeModulus::new(p).unwrap();
        let t = m.element(v);
        let roots = cube_roots(t);
        prop_assert_eq!(roots.len() as u64, cube_solution_count(t));
        let mut sum = m.element(0);
        for r in &roots {
            prop_assert_eq!(r.cube(), t);
            sum = sum + *r;
        }
        if !t.is_zero() {
            prop_assert!(sum.is_zero());
        }
    }

    #[test]
    fn group_laws_on_random_points(c in arb_curve(), seed in any::<u64>()) {
        let set = enumerate_points(&c, DEFAULT_ENUMERATION_CAP).unwrap();
        let pick = |s: u64| set.points()[(s % set.len() as u64) as usize];
        let (p, q, r) = (pick(seed), pick(seed >> 17), pick(seed >> 34));
        let pq = add(&c, &p, &q);
        prop_assert!(is_on_curve(&c, &pq));
        prop_assert_eq!(pq, add(&c, &q, &p));
        prop_assert_eq!(add(&c, &pq, &r), add(&c, &p, &add(&c, &q, &r)));
        prop_assert_eq!(add(&c, &p, &negate(&c, &p)), Point::Infinity);
        prop_assert_eq!(scalar_mul(&c, set.len() as u64, &p), Point::Infinity);
    }

    #[test]
    fn counting_methods_agree(c in arb_curve()) {
        let n = count_quadratic_sum(&c);
        prop_assert_eq!(count_rho(&c), n);
        prop_assert_eq!(count_cubic_sum(&c), n);
        prop_assert_eq!(count_enumeration(&c, DEFAULT_ENUMERATION_CAP).unwrap(), n);
        prop_assert!(n <= 2 * c.p() + 1);
        let delta = n as i128 - c.p() as i128 - 1;
        prop_assert!(delta * delta < 4 * c.p() as i128);
    }

    #[test]
    fn abscissa_divisibility(c in arb_curve()) {
        let sums = abscissa_sums(c.p(), c.a().value()).unwrap();
        prop_assert!(sums.j_div_p);
        prop_assert!(sums.s_div_p);
        let p = c.p() as i128;
        prop_assert_eq!(sums.j, sums.s + p * (p - 1) / 2);
    }

    #[test]
    fn twist_relation(c in arb_curve()) {
        prop_assert!(twist_relation_check(c.p(), c.a().value()).unwrap());
    }

    #[test]
    fn zeta_lift_consistent(c in arb_curve()) {
        let n1 = count_quadratic_sum(&c);
        let z = ZetaData::from_count(c.p(), n1).unwrap();
        let lifted = z.lift_counts(4).unwrap();
        prop_assert_eq!(lifted[0], n1);
        // Duplication identity.
        prop_assert_eq!(
            lifted[1] as u128,
            n1 as u128 * (2 * (c.p() as u128 + 1) - n1 as u128)
        );
        // Hasse at every lifted level.
        for (i, n) in lifted.iter().enumerate() {
            let q_r = (c.p() as i128).pow(i as u32 + 1);
            let delta = *n as i128 - q_r - 1;
            prop_assert!(delta * delta < 4 * q_r);
        }
    }
}
