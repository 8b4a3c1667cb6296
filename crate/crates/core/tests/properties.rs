//! Randomized algebraic identities over small rational inputs.

use e8_core::e8::{E8Element, E8_DIM};
use e8_core::f4::{F4Element, F4_DIM};
use e8_core::octoct::{OctOct, SoPair};
use e8_core::octonion::Octonion;
use e8_core::rational::{ratio, Rational};
use e8_core::so8::{Skew8, SO8_DIM};
use proptest::prelude::*;

fn rat() -> impl Strategy<Value = Rational> {
    (-5i64..=5, 1i64..=4).prop_map(|(p, q)| ratio(p, q))
}

fn coords(n: usize) -> impl Strategy<Value = Vec<Rational>> {
    proptest::collection::vec(rat(), n)
}

fn oct() -> impl Strategy<Value = Octonion> {
    coords(8).prop_map(|c| Octonion::new(std::array::from_fn(|i| c[i].clone())))
}

fn skew() -> impl Strategy<Value = Skew8> {
    coords(SO8_DIM).prop_map(|c| Skew8::from_coords(&c))
}

fn f4() -> impl Strategy<Value = F4Element> {
    coords(F4_DIM).prop_map(|c| F4Element::from_coords(&c).unwrap())
}

fn e8() -> impl Strategy<Value = E8Element> {
    coords(E8_DIM).prop_map(|c| E8Element::from_coords(&c).unwrap())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn octonion_alternative_laws(x in oct(), y in oct()) {
        prop_assert_eq!(&x * &(&x * &y), &(&x * &x) * &y);
        prop_assert_eq!(&(&y * &x) * &x, &y * &(&x * &x));
        prop_assert_eq!(&(&x * &y) * &x, &x * &(&y * &x));
    }

    #[test]
    fn octonion_moufang(x in oct(), y in oct(), z in oct()) {
        // z(x(zy)) = ((zx)z)y
        prop_assert_eq!(&z * &(&x * &(&z * &y)), &(&(&z * &x) * &z) * &y);
    }

    #[test]
    fn octonion_norm_is_multiplicative(x in oct(), y in oct()) {
        prop_assert_eq!((&x * &y).norm_sq(), x.norm_sq() * y.norm_sq());
        prop_assert_eq!((&x * &y).conj(), &y.conj() * &x.conj());
    }

    #[test]
    fn octonion_no_zero_divisors(x in oct(), y in oct()) {
        prop_assume!(!x.is_zero() && !y.is_zero());
        prop_assert!(!(&x * &y).is_zero());
    }

    #[test]
    fn triality_on_random_elements(a in skew(), b in skew(), u in oct(), v in oct()) {
        let la = a.lambda();
        prop_assert_eq!(la.lambda().lambda(), a.clone());
        prop_assert_eq!(a.lambda2(), la.lambda());
        prop_assert_eq!(a.commutator(&b).lambda(), la.commutator(&b.lambda()));
        let lhs = &(&a.apply(&u) * &v) + &(&u * &la.apply(&v));
        prop_assert_eq!(lhs, a.lambda2().kappa().apply(&(&u * &v)));
    }

    #[test]
    fn oct_oct_conjugation_reverses_products(x in coords(64), y in coords(64)) {
        let (x, y) = (OctOct::from_coords(&x), OctOct::from_coords(&y));
        prop_assert_eq!(x.oo_mul(&y).conj(), y.conj().oo_mul(&x.conj()));
    }

    #[test]
    fn so_pair_action_is_a_representation(a in coords(56), b in coords(56), x in coords(64)) {
        let (a, b, x) = (SoPair::from_coords(&a), SoPair::from_coords(&b), OctOct::from_coords(&x));
        let lhs = a.bracket(&b).act(&x);
        let rhs = &a.act(&b.act(&x)) - &b.act(&a.act(&x));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn f4_bracket_is_a_lie_bracket(x in f4(), y in f4(), z in f4(), c in rat()) {
        prop_assert_eq!(x.bracket(&y), -&y.bracket(&x));
        prop_assert_eq!(x.scale(&c).bracket(&y), x.bracket(&y).scale(&c));
        prop_assert_eq!(x.bracket(&(&y + &z)), &x.bracket(&y) + &x.bracket(&z));
        let j = &(&x.bracket(&y.bracket(&z)) + &y.bracket(&z.bracket(&x))) + &z.bracket(&x.bracket(&y));
        prop_assert!(j.is_zero());
        prop_assert_eq!(x.tau().bracket(&y.tau()), x.bracket(&y).tau());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(16))]

    #[test]
    fn e8_bracket_is_skew_and_bilinear(x in e8(), y in e8(), z in e8(), c in rat()) {
        prop_assert_eq!(x.bracket(&y), -&y.bracket(&x));
        prop_assert_eq!(x.split_bracket(&y), -&y.split_bracket(&x));
        prop_assert_eq!(x.scale(&c).bracket(&y), x.bracket(&y).scale(&c));
        prop_assert_eq!(x.bracket(&(&y + &z)), &x.bracket(&y) + &x.bracket(&z));
    }

    #[test]
    fn e8_symmetries_preserve_the_scalar_product(x in e8(), y in e8()) {
        let g = x.scalar_product(&y);
        prop_assert_eq!(&g, &y.scalar_product(&x));
        prop_assert_eq!(&g, &x.tau().scalar_product(&y.tau()));
        prop_assert_eq!(&g, &x.cartan_involution().scalar_product(&y.cartan_involution()));
        prop_assert_eq!(x.tau().tau().tau(), x.clone());
    }

    #[test]
    fn e8_scalar_product_is_positive(x in e8()) {
        prop_assume!(!x.is_zero());
        prop_assert!(x.scalar_product(&x) > ratio(0, 1));
    }
}
