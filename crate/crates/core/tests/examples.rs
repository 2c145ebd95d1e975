//! Worked examples for each public operation, with hand-derived expectations.

use symvoa::fock::{act, act_word, degree_of, theta, weight_of, weight_space_basis, Graded, Monomial, State, Weight};
use symvoa::griess::{griess_product, jordan_verify, omega, GriessTable};
use symvoa::liealg::{bracket, bracket_r, canonicalize, Generator, LieElement};
use symvoa::linalg::kernel_basis;
use symvoa::scalar::{rat, ratio, RParam, Scalar};
use symvoa::singular::{det_power_state, det_state, is_singular, singular_search};
use symvoa::virops::{act_l, binomial_matrix_det, virasoro_bracket_probe};

fn v(m: i64, n: i64) -> Generator {
    Generator::v(m, n)
}

fn g(i: u32, j: u32, m: i64, n: i64) -> Generator {
    Generator::new(i, j, m, n)
}

fn el(x: Generator) -> LieElement {
    LieElement::generator(x)
}

fn st(factors: &[Generator]) -> State {
    State::from_factors(factors.to_vec()).unwrap()
}

fn r() -> Scalar {
    Scalar::r()
}

#[test]
fn scalar_arithmetic() {
    let one = Scalar::one();
    assert_eq!(&(&r() + &one) * &(&r() - &one), "r^2 - 1".parse().unwrap());
    let p: Scalar = "3/2*r^2 - 1".parse().unwrap();
    assert_eq!(&Scalar::zero() + &p, p);
    assert_eq!(&Scalar::monomial(1, rat(2)) * &Scalar::constant(ratio(1, 2)), r());
    assert_eq!(p.to_string(), "3/2*r^2 - 1");
    assert_eq!((-&p).to_string(), "-3/2*r^2 + 1");
}

#[test]
fn evaluation() {
    // r + 2 nu - 2 at nu = 1
    assert_eq!(r().evaluate(&rat(0)), rat(0));
    assert_eq!(r().evaluate(&ratio(1, 2)), ratio(1, 2));
    assert_eq!(Scalar::monomial(1, rat(2)).evaluate(&rat(3)), rat(6));
}

#[test]
fn canonical_forms() {
    let x = canonicalize(2, 1, -1, -2, 2).unwrap();
    assert_eq!(x, el(g(1, 2, -2, -1)));
    let y = canonicalize(1, 1, 3, -3, 1).unwrap();
    let mut want = el(v(-3, 3));
    want.constant = Scalar::int(3);
    assert_eq!(y, want);
    assert_eq!(canonicalize(1, 2, 0, 5, 2).unwrap(), el(g(1, 2, 0, 5)));
    assert!(canonicalize(1, 3, 0, 5, 2).is_err());
}

#[test]
fn undeformed_and_deformed_brackets() {
    let x = el(v(1, 2));
    let y = el(v(-2, -1));
    let mut want = LieElement::constant(Scalar::int(2));
    want.add_term(v(-1, 1), Scalar::int(2));
    want.add_term(v(-2, 2), Scalar::int(1));
    assert_eq!(bracket(&x, &y), want);
    want.constant = Scalar::monomial(1, rat(2));
    assert_eq!(bracket_r(&x, &y), want);
    assert_eq!(bracket_r(&x, &y).to_string(), "2*v[1,1](-1,1) + v[1,1](-2,2) + 2*r");
    assert!(bracket_r(&x, &x).is_zero());
    assert!(bracket(&el(v(-1, -1)), &el(g(2, 2, -1, -1))).is_zero());

    // n delta_{n,s} v(-m,-t) with m=1, n=2, s=2, t=3
    let b = bracket_r(&el(v(-1, 2)), &el(v(-3, -2)));
    let mut want = LieElement::zero();
    want.add_term(v(-3, -1), Scalar::int(2));
    assert_eq!(b, want);
    // 2m delta_{m,s} v(-t,m) with m=2, s=2, t=3
    let b = bracket_r(&el(v(2, 2)), &el(v(-3, -2)));
    let mut want = LieElement::zero();
    want.add_term(v(-3, 2), Scalar::int(4));
    assert_eq!(b, want);
}

#[test]
fn module_action() {
    let u = st(&[v(-1, -1)]);
    assert_eq!(act(&el(v(1, 1)), &u), State::vacuum().scale(&Scalar::monomial(1, rat(2))));
    assert!(act(&el(g(1, 2, 0, 5)), &State::vacuum()).is_zero());
    // 2 m^2 nu (r + 2 nu - 2) at m = 2, nu = 2
    let got = act(&el(v(2, 2)), &st(&[v(-2, -2), v(-2, -2)]));
    let want = st(&[v(-2, -2)]).scale(&"16*r + 32".parse().unwrap());
    assert_eq!(got, want);
    assert_eq!(act_word(&[], &u), u);
    assert_eq!(act_word(&[el(v(1, 1))], &u), State::vacuum().scale(&Scalar::monomial(1, rat(2))));
}

#[test]
fn gradings() {
    assert_eq!(degree_of(&State::vacuum()).unwrap(), Graded::Homogeneous(0));
    assert_eq!(degree_of(&st(&[g(1, 2, -2, -1)])).unwrap(), Graded::Homogeneous(3));
    let mixed = &st(&[v(-1, -1)]) + &State::vacuum();
    assert!(matches!(degree_of(&mixed).unwrap(), Graded::Mixed));
    assert!(degree_of(&State::zero()).is_err());

    let w = weight_of(&st(&[v(-1, -1)])).unwrap().homogeneous().unwrap();
    assert_eq!(w, Weight::from_counts([((1, -1), 2)]));
    let w = weight_of(&st(&[g(1, 2, -2, -1)])).unwrap().homogeneous().unwrap();
    assert_eq!(w, Weight::from_counts([((1, -2), 1), ((2, -1), 1)]));
    assert!(weight_of(&State::vacuum()).unwrap().homogeneous().unwrap().is_zero());
}

#[test]
fn weight_space_bases() {
    let b = weight_space_basis(&Weight::from_counts([((1, -1), 2)]), true);
    assert_eq!(b, vec![Monomial::new(vec![v(-1, -1)]).unwrap()]);
    let b = weight_space_basis(&Weight::from_counts([((1, -1), 2), ((1, -2), 2)]), true);
    let mut want = vec![
        Monomial::new(vec![v(-1, -1), v(-2, -2)]).unwrap(),
        Monomial::new(vec![v(-2, -1), v(-2, -1)]).unwrap(),
    ];
    want.sort();
    assert_eq!(b, want);
    assert_eq!(weight_space_basis(&Weight::zero(), false), vec![Monomial::vacuum()]);
}

#[test]
fn theta_counts_higher_indices() {
    assert_eq!(theta(&Weight::from_counts([((1, -1), 2)])), 0);
    assert_eq!(theta(&Weight::from_counts([((1, -2), 1), ((2, -1), 1)])), 1);
    assert_eq!(theta(&Weight::from_counts([((2, -1), 2), ((3, -2), 1)])), 3);
}

#[test]
fn l_operators_on_vacuum() {
    for (i, j) in [(1, 1), (1, 2), (2, 2)] {
        let want = st(&[g(i, j, -1, -1)]).scale(&Scalar::constant(ratio(1, 2)));
        assert_eq!(act_l(i, j, -2, &State::vacuum()), want);
        assert!(act_l(i, j, -1, &State::vacuum()).is_zero());
    }
    assert!(act_l(1, 1, 0, &State::vacuum()).is_zero());
}

#[test]
fn binomial_determinants() {
    for l in -3..=3 {
        assert_eq!(binomial_matrix_det(l, 1), rat(1));
        // det [[1, 1], [l+1, l]] by cofactors
        let want = rat(l) - rat(l + 1);
        assert_eq!(binomial_matrix_det(l, 2), want);
    }
}

#[test]
fn virasoro_probes() {
    for d in [1, 2, 3] {
        let got = virasoro_bracket_probe(d, 2, -2, &State::vacuum());
        assert_eq!(got, State::vacuum().scale(&Scalar::monomial(1, ratio(d as i64, 2))));
        assert!(virasoro_bracket_probe(d, 1, -1, &State::vacuum()).is_zero());
        assert!(virasoro_bracket_probe(d, 1, 1, &State::vacuum()).is_zero());
    }
}

#[test]
fn determinant_states() {
    assert_eq!(det_power_state(1, 1), st(&[v(-1, -1)]));
    let want = &st(&[v(-1, -1), v(-2, -2)]) - &st(&[v(-2, -1), v(-2, -1)]);
    assert_eq!(det_power_state(2, 1), want);
    assert_eq!(det_state(2), want);
    assert_eq!(det_power_state(1, 3), st(&[v(-1, -1), v(-1, -1), v(-1, -1)]));
}

#[test]
fn singularity_examples() {
    let verdict = is_singular(&det_power_state(2, 1), &RParam::value(1), false, 1, None).unwrap();
    assert!(verdict.singular && verdict.witness.is_none());
    let u = st(&[v(-1, -1)]);
    let verdict = is_singular(&u, &RParam::value(1), false, 1, None).unwrap();
    let (w, out) = verdict.witness.unwrap();
    assert_eq!(w, v(1, 1));
    assert_eq!(out, State::vacuum().scale(&Scalar::int(2)));
    assert!(is_singular(&u, &RParam::value(0), false, 1, None).unwrap().singular);
}

#[test]
fn kernels() {
    assert!(kernel_basis(&[vec![rat(1), rat(0), rat(0)], vec![rat(0), rat(1), rat(0)], vec![rat(0), rat(0), rat(1)]], 3).is_empty());
    assert_eq!(kernel_basis(&[vec![rat(0); 3], vec![rat(0); 3]], 3).len(), 3);
    // v(1,1) on weight 2L[1,-1] is multiplication by 2r, zero at r = 0
    let entry = Scalar::monomial(1, rat(2)).evaluate(&rat(0));
    assert_eq!(kernel_basis(&[vec![entry]], 1).len(), 1);

    let w = Weight::from_counts([((1, -1), 2)]);
    assert_eq!(singular_search(&w, &RParam::Value(ratio(1, 2)), None).unwrap().kernel_dim, 0);
    let rep = singular_search(&w, &RParam::value(0), None).unwrap();
    assert_eq!(rep.kernel_dim, 1);
    assert!(rep.kernel_vectors[0].proportionality(&st(&[v(-1, -1)])).is_some());
    let w = Weight::from_counts([((1, -1), 2), ((1, -2), 2)]);
    let rep = singular_search(&w, &RParam::value(1), None).unwrap();
    assert_eq!((rep.basis_dim, rep.kernel_dim), (2, 1));
    assert!(rep.kernel_vectors[0].proportionality(&det_power_state(2, 1)).is_some());
}

#[test]
fn determinant_commutes_with_raising() {
    // [v(-1,2), det V_2] 1 = v(-1,2) det V_2 1, since v(-1,2) kills the vacuum
    assert!(act(&el(v(-1, 2)), &det_state(2)).is_zero());
}

#[test]
fn griess_products() {
    let half = Scalar::constant(ratio(1, 2));
    assert!(griess_product(1, 1, 2, 2).is_zero());
    assert_eq!(griess_product(1, 1, 1, 1), omega(1, 1).scale(&Scalar::int(2)));
    assert_eq!(griess_product(1, 2, 1, 2), (&omega(1, 1) + &omega(2, 2)).scale(&half));
    let t = GriessTable::build(2).unwrap();
    assert_eq!(t.dim(), 3);
    t.check_commutative().unwrap();
    t.check_jordan().unwrap();
    assert!(jordan_verify(2).unwrap().passed());
    let rep = jordan_verify(3).unwrap();
    assert!(rep.passed() && rep.scaling.is_some());
    assert_eq!(rep.dim, 6);
}
