use proptest::prelude::*;

use symvoa::fock::{act, degree_basis, homogeneous_degree, Monomial, State, Weight};
use symvoa::liealg::{bracket_r, canonicalize, Generator, LieElement};
use symvoa::scalar::{ratio, Rational, Scalar};

fn rational() -> impl Strategy<Value = Rational> {
    (-50i64..=50, 1i64..=20).prop_map(|(n, d)| ratio(n, d))
}

fn scalar() -> impl Strategy<Value = Scalar> {
    prop::collection::vec(rational(), 0..5).prop_map(Scalar::from_coeffs)
}

fn generator(d: u32, bound: i64) -> impl Strategy<Value = Generator> {
    (1..=d, 1..=d, -bound..=bound, -bound..=bound).prop_map(move |(i, j, m, n)| {
        let x = canonicalize(i, j, m, n, d).unwrap();
        let g = *x.terms().next().unwrap().0;
        g
    })
}

fn element(d: u32, bound: i64) -> impl Strategy<Value = LieElement> {
    prop::collection::vec((generator(d, bound), -3i64..=3), 1..3).prop_map(|terms| {
        let mut x = LieElement::zero();
        for (g, c) in terms {
            x.add_term(g, Scalar::int(c));
        }
        x
    })
}

fn basis_state(d: u32, max_degree: u64) -> impl Strategy<Value = State> {
    let all: Vec<Monomial> = (0..=max_degree).flat_map(|k| degree_basis(d, k)).collect();
    prop::sample::select(all).prop_map(State::monomial)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 256, ..ProptestConfig::default() })]

    #[test]
    fn ring_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a - &a), &Scalar::zero());
        prop_assert_eq!(&a * &Scalar::one(), a.clone());
    }

    #[test]
    fn evaluation_is_a_homomorphism(a in scalar(), b in scalar(), r0 in rational()) {
        prop_assert_eq!((&a * &b).evaluate(&r0), a.evaluate(&r0) * b.evaluate(&r0));
        prop_assert_eq!((&a + &b).evaluate(&r0), a.evaluate(&r0) + b.evaluate(&r0));
    }

    #[test]
    fn scalar_text_round_trip(a in scalar()) {
        prop_assert_eq!(a.to_string().parse::<Scalar>().unwrap(), a);
    }

    #[test]
    fn exact_division(a in scalar(), b in scalar()) {
        prop_assume!(!b.is_zero());
        prop_assert_eq!((&a * &b).div_exact(&b), Some(a));
    }

    #[test]
    fn generator_text_round_trip(x in generator(3, 6)) {
        prop_assert_eq!(x.to_string().parse::<Generator>().unwrap(), x);
        prop_assert!(x.is_canonical());
    }

    #[test]
    fn antisymmetry(x in element(3, 6), y in element(3, 6)) {
        prop_assert_eq!(bracket_r(&x, &y), bracket_r(&y, &x).scale(&Scalar::int(-1)));
    }

    #[test]
    fn jacobi(x in element(3, 6), y in element(3, 6), z in element(3, 6)) {
        let j = &(&bracket_r(&x, &bracket_r(&y, &z)) + &bracket_r(&y, &bracket_r(&z, &x)))
            + &bracket_r(&z, &bracket_r(&x, &y));
        prop_assert!(j.is_zero(), "{}", j);
    }

    #[test]
    fn representation(x in element(2, 4), y in element(2, 4), u in basis_state(2, 4)) {
        let lhs = &act(&x, &act(&y, &u)) - &act(&y, &act(&x, &u));
        prop_assert_eq!(lhs, act(&bracket_r(&x, &y), &u));
    }

    #[test]
    fn degree_shift(x in generator(2, 5), u in basis_state(2, 5)) {
        let out = act(&LieElement::generator(x), &u);
        if !out.is_zero() {
            let du = homogeneous_degree(&u).unwrap() as i64;
            prop_assert_eq!(homogeneous_degree(&out).unwrap() as i64, du + x.degree_shift());
        }
    }

    #[test]
    fn monomial_and_weight_text_round_trip(u in basis_state(3, 6)) {
        let m = u.support().next().unwrap().clone();
        prop_assert_eq!(m.to_string().parse::<Monomial>().unwrap(), m.clone());
        let w = m.weight();
        prop_assert_eq!(w.to_string().parse::<Weight>().unwrap(), w);
    }

    #[test]
    fn state_json_round_trip(u in basis_state(2, 4), x in element(2, 4)) {
        let v = act(&x, &u);
        prop_assert_eq!(State::from_json(&v.to_json()).unwrap(), v);
    }
}
