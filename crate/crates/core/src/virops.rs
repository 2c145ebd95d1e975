//! The operators `L^ij(m)`, closed-form vertex modes of `v^ij(m,n) 1`, and
//! Virasoro probes.
//!
//! `L^ij(m)` is an infinite sum of quadratic generators. On a state whose
//! support has degree at most `D`, every summand `v^ij(a,b)` with `a > D` or
//! `b > D` acts by zero, so only `h` in `[m - D, D]` contributes. The default
//! window `[-(D+|m|+2), D+|m|+2]` contains that range.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::fock::{act, State};
use crate::liealg::LieElement;
use crate::scalar::{rat, ratio, Rational, Scalar};
use crate::{Error, Result};

pub type Window = (i64, i64);

/// Window for the summation index that is sufficient on states of degree
/// at most `degree`.
pub fn sufficient_window(m: i64, degree: u64) -> Window {
    let b = degree as i64 + m.abs() + 2;
    (-b, b)
}

/// `L^ij(m)` truncated to `h` in `window`.
pub fn l_operator(i: u32, j: u32, m: i64, window: Window) -> LieElement {
    let mut out = LieElement::zero();
    let half = Scalar::constant(ratio(1, 2));
    if i == j && m == 0 {
        out.add_raw(i, i, 0, 0, &half);
        for h in window.0.max(1)..=window.1 {
            out.add_raw(i, i, -h, h, &Scalar::one());
        }
    } else {
        for h in window.0..=window.1 {
            out.add_raw(i, j, m - h, h, &half);
        }
    }
    out
}

/// `L^ij(m) u` using the default window for `u`.
pub fn act_l(i: u32, j: u32, m: i64, u: &State) -> State {
    act_l_window(i, j, m, u, sufficient_window(m, u.max_degree()))
}

pub fn act_l_window(i: u32, j: u32, m: i64, u: &State, window: Window) -> State {
    if u.is_zero() {
        return State::zero();
    }
    act(&l_operator(i, j, m, window), u)
}

/// Applies `L^{i_1 j_1}(m_1) ... L^{i_p j_p}(m_p)` to `u`, rightmost first.
pub fn act_l_word(word: &[(u32, u32, i64)], u: &State) -> State {
    word.iter().rev().fold(u.clone(), |acc, &(i, j, m)| act_l(i, j, m, &acc))
}

/// `sum_i L^ii(m) u` over `1..=d`.
pub fn act_l_total(d: u32, m: i64, u: &State) -> State {
    let mut out = State::zero();
    for i in 1..=d {
        out.add_scaled(&act_l(i, i, m, u), &Scalar::one());
    }
    out
}

/// Generalized binomial `a (a-1) ... (a-k+1) / k!`, zero for `k < 0`.
pub fn binomial(a: i64, k: i64) -> BigInt {
    if k < 0 {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for t in 0..k {
        num *= BigInt::from(a - t);
        den *= BigInt::from(t + 1);
    }
    num / den
}

fn check_vertex_args(i: u32, j: u32, m: i64, n: i64) -> Result<()> {
    if i == j {
        return Err(Error::DiagonalVertexMode(i));
    }
    if m >= 0 || n >= 0 {
        return Err(Error::NonNegativeMode { m, n });
    }
    Ok(())
}

/// The `l`-th mode of `v^ij(m,n) 1` as an element of the Lie algebra,
/// truncated to `k` in `window`.
pub fn vertex_mode_operator(i: u32, j: u32, m: i64, n: i64, l: i64, window: Window) -> Result<LieElement> {
    check_vertex_args(i, j, m, n)?;
    let sign = if (-m - n) % 2 == 0 { rat(1) } else { rat(-1) };
    let mut out = LieElement::zero();
    for k in window.0..=window.1 {
        let c = binomial(l + n - k, -m - 1) * binomial(k - n - 1, -n - 1);
        if c.is_zero() {
            continue;
        }
        let c = Scalar::constant(&sign * Rational::from_integer(c));
        out.add_raw(i, j, l + m + n + 1 - k, k, &c);
    }
    Ok(out)
}

/// `k` range outside of which `v^ij(l+m+n+1-k, k)` kills states of degree
/// at most `degree`, padded like [`sufficient_window`].
pub fn vertex_window(m: i64, n: i64, l: i64, degree: u64) -> Window {
    let d = degree as i64;
    (l + m + n + 1 - d - 2, d + 2)
}

/// `(v^ij(m,n) 1)_l u` via the closed binomial formula.
pub fn vertex_mode(i: u32, j: u32, m: i64, n: i64, l: i64, u: &State) -> Result<State> {
    vertex_mode_window(i, j, m, n, l, u, vertex_window(m, n, l, u.max_degree()))
}

#[allow(clippy::too_many_arguments)]
pub fn vertex_mode_window(i: u32, j: u32, m: i64, n: i64, l: i64, u: &State, window: Window) -> Result<State> {
    Ok(act(&vertex_mode_operator(i, j, m, n, l, window)?, u))
}

/// The same mode built by induction on `-m-n`: the base case is
/// `2 L^ij(l-1)`, and lowering the first mode is the commutator with
/// `L^ii(-1)` divided by `-m-1`.
pub fn vertex_mode_recursive(i: u32, j: u32, m: i64, n: i64, l: i64, u: &State) -> Result<State> {
    check_vertex_args(i, j, m, n)?;
    if m == -1 && n == -1 {
        return Ok(act_l(i, j, l - 1, u).scale(&Scalar::int(2)));
    }
    if m == -1 {
        return vertex_mode_recursive(j, i, n, m, l, u);
    }
    let inner_after = vertex_mode_recursive(i, j, m + 1, n, l, u)?;
    let lhs = act_l(i, i, -1, &inner_after);
    let rhs = vertex_mode_recursive(i, j, m + 1, n, l, &act_l(i, i, -1, u))?;
    Ok((&lhs - &rhs).scale(&Scalar::constant(ratio(1, -m - 1))))
}

/// `det (C(L+p-N, p-1))_{1 <= p,N <= M}` by exact elimination.
pub fn binomial_matrix_det(l: i64, size: usize) -> Rational {
    let mut a: Vec<Vec<Rational>> = (1..=size as i64)
        .map(|p| (1..=size as i64).map(|nn| Rational::from_integer(binomial(l + p - nn, p - 1))).collect())
        .collect();
    let mut det = rat(1);
    for col in 0..size {
        let Some(piv) = (col..size).find(|&r| !a[r][col].is_zero()) else {
            return rat(0);
        };
        if piv != col {
            a.swap(piv, col);
            det = -det;
        }
        let p = a[col][col].clone();
        det *= &p;
        for r in col + 1..size {
            if a[r][col].is_zero() {
                continue;
            }
            let f = &a[r][col] / &p;
            for c in col..size {
                let t = &f * &a[col][c];
                a[r][c] -= t;
            }
        }
    }
    det
}

/// `[L(m), L(n)] u - (m-n) L(m+n) u` for the total `L = sum_i L^ii`.
pub fn virasoro_bracket_probe(d: u32, m: i64, n: i64, u: &State) -> State {
    let mn = act_l_total(d, m, &act_l_total(d, n, u));
    let nm = act_l_total(d, n, &act_l_total(d, m, u));
    let diag = act_l_total(d, m + n, u).scale(&Scalar::int(m - n));
    &(&mn - &nm) - &diag
}

/// `delta_{m+n,0} (m^3-m)/12 d r u`.
pub fn virasoro_central_term(d: u32, m: i64, n: i64, u: &State) -> State {
    if m + n != 0 {
        return State::zero();
    }
    let c = Scalar::monomial(1, ratio((m * m * m - m) * d as i64, 12));
    u.scale(&c)
}

/// Checks the probe against the central term for `|m|,|n| <= bound` on `u`.
pub fn check_virasoro(d: u32, bound: i64, u: &State) -> std::result::Result<(), String> {
    for m in -bound..=bound {
        for n in -bound..=bound {
            let got = virasoro_bracket_probe(d, m, n, u);
            let want = virasoro_central_term(d, m, n, u);
            if got != want {
                return Err(format!("d={d} (m,n)=({m},{n}) on {u}: got {got}, expected {want}"));
            }
        }
    }
    Ok(())
}

/// `v^i(m) v^j(n) 1` for raw (not necessarily canonical) indices.
pub fn raw_state(i: u32, j: u32, m: i64, n: i64) -> State {
    let mut x = LieElement::zero();
    x.add_raw(i, j, m, n, &Scalar::one());
    act(&x, &State::vacuum())
}

type Check = std::result::Result<(), String>;

fn ordered_pairs(d: u32, distinct: bool) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for i in 1..=d {
        for j in 1..=d {
            if !distinct || i != j {
                out.push((i, j));
            }
        }
    }
    out
}

/// `v^ij(-1,-1) 1 = 2 L^ij(-2) 1` for every index pair.
pub fn check_omega_from_l(d: u32) -> Check {
    for (i, j) in ordered_pairs(d, false) {
        let lhs = raw_state(i, j, -1, -1);
        let rhs = act_l(i, j, -2, &State::vacuum()).scale(&Scalar::int(2));
        if lhs != rhs {
            return Err(format!("(i,j)=({i},{j}): {lhs} != {rhs}"));
        }
    }
    Ok(())
}

/// `L^ij(-1) 1 = 0`.
pub fn check_l_minus_one_vacuum(d: u32) -> Check {
    for (i, j) in ordered_pairs(d, false) {
        let out = act_l(i, j, -1, &State::vacuum());
        if !out.is_zero() {
            return Err(format!("L[{i},{j}](-1) 1 = {out}"));
        }
    }
    Ok(())
}

/// `v^ij(m-1,n) 1 = -(1/m) L^ii(-1) v^ij(m,n) 1` for `i != j`.
pub fn check_first_mode_lowering(d: u32, lo: i64) -> Check {
    for (i, j) in ordered_pairs(d, true) {
        for m in lo..=-1 {
            for n in lo..=-1 {
                let lhs = raw_state(i, j, m - 1, n);
                let rhs = act_l(i, i, -1, &raw_state(i, j, m, n)).scale(&Scalar::constant(ratio(-1, m)));
                if lhs != rhs {
                    return Err(format!("(i,j,m,n)=({i},{j},{m},{n}): {lhs} != {rhs}"));
                }
            }
        }
    }
    Ok(())
}

/// Coefficient in `v^ii(m-1,n) 1 = c L^ii(0) L^ij(-1) v^ij(n,m) 1`, derived
/// by carrying out the commutators: `c = 2 / (m (m+n-1))`.
pub fn diagonal_from_offdiag_coeff(m: i64, n: i64) -> Rational {
    ratio(2, m * (m + n - 1))
}

/// `v^ii(m-1,n) 1 = c(m,n) L^ii(0) L^ij(-1) v^ij(n,m) 1` for `i != j`, with
/// the coefficient supplied by `coeff` (`None` means undefined there).
pub fn check_diagonal_from_offdiag(
    d: u32,
    lo: i64,
    coeff: impl Fn(i64, i64) -> Option<Rational>,
) -> Check {
    for (i, j) in ordered_pairs(d, true) {
        for m in lo..=-1 {
            for n in lo..=-1 {
                let lhs = raw_state(i, i, m - 1, n);
                let core = act_l(i, i, 0, &act_l(i, j, -1, &raw_state(i, j, n, m)));
                let Some(c) = coeff(m, n) else {
                    return Err(format!("(i,j,m,n)=({i},{j},{m},{n}): coefficient undefined"));
                };
                let rhs = core.scale(&Scalar::constant(c));
                if lhs != rhs {
                    return Err(format!("(i,j,m,n)=({i},{j},{m},{n}): {lhs} != {rhs}"));
                }
            }
        }
    }
    Ok(())
}

/// Nonzero rational `c` with `lhs = c * rhs`, when `lhs` is a single monomial.
fn nonzero_constant_ratio(lhs: &State, rhs: &State) -> Option<Rational> {
    let (a, b) = lhs.proportionality(rhs)?;
    let (a, b) = (a.as_constant()?, b.as_constant()?);
    if a.is_zero() || b.is_zero() {
        return None;
    }
    Some(a / b)
}

fn l_power(i: u32, k: i64) -> impl Iterator<Item = (u32, u32, i64)> {
    std::iter::repeat_n((i, i, -1), k.max(0) as usize)
}

/// `v^ij(m,n) 1` is a nonzero multiple of
/// `L^ii(-1)^{-m-1} L^jj(-1)^{-n-1} L^ij(-2) 1` for `i != j`.
pub fn check_offdiag_l_word(d: u32, lo: i64) -> Check {
    for (i, j) in ordered_pairs(d, true) {
        for m in lo..=-1 {
            for n in lo..=-1 {
                let mut word: Vec<_> = l_power(i, -m - 1).chain(l_power(j, -n - 1)).collect();
                word.push((i, j, -2));
                let rhs = act_l_word(&word, &State::vacuum());
                let lhs = raw_state(i, j, m, n);
                if nonzero_constant_ratio(&lhs, &rhs).is_none() {
                    return Err(format!("(i,j,m,n)=({i},{j},{m},{n}): {lhs} vs {rhs}"));
                }
            }
        }
    }
    Ok(())
}

/// `v^ii(m,n) 1` is a nonzero multiple of
/// `L^ii(0) L^ij(-1) L^ii(-1)^{-n-1} L^jj(-1)^{-m-2} L^ij(-2) 1` for `m <= -2`.
pub fn check_diag_l_word(d: u32, lo: i64) -> Check {
    for (i, j) in ordered_pairs(d, true) {
        for m in lo..=-2 {
            for n in lo..=-1 {
                let mut word = vec![(i, i, 0), (i, j, -1)];
                word.extend(l_power(i, -n - 1).chain(l_power(j, -m - 2)));
                word.push((i, j, -2));
                let rhs = act_l_word(&word, &State::vacuum());
                let lhs = raw_state(i, i, m, n);
                if nonzero_constant_ratio(&lhs, &rhs).is_none() {
                    return Err(format!("(i,j,m,n)=({i},{j},{m},{n}): {lhs} vs {rhs}"));
                }
            }
        }
    }
    Ok(())
}

/// Closed-form modes against the recursive construction on every state in
/// `states`, for `m,n` in `[lo,-1]` and `|l| <= lmax`.
pub fn check_vertex_modes(pairs: &[(u32, u32)], lo: i64, lmax: i64, states: &[State]) -> Check {
    for &(i, j) in pairs {
        for m in lo..=-1 {
            for n in lo..=-1 {
                for l in -lmax..=lmax {
                    for u in states {
                        let a = vertex_mode(i, j, m, n, l, u).map_err(|e| e.to_string())?;
                        let b = vertex_mode_recursive(i, j, m, n, l, u).map_err(|e| e.to_string())?;
                        if a != b {
                            return Err(format!("(i,j,m,n,l)=({i},{j},{m},{n},{l}) on {u}: {a} != {b}"));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

/// `det != 0` for every `size <= max_size`, `L` in `[-lbound, lbound]`.
pub fn check_binomial_dets(max_size: usize, lbound: i64) -> Check {
    for size in 1..=max_size {
        for l in -lbound..=lbound {
            let det = binomial_matrix_det(l, size);
            if det.is_zero() {
                return Err(format!("det vanishes at L={l}, M={size}"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fock::degree_basis;
    use crate::liealg::Generator;

    fn vac() -> State {
        State::vacuum()
    }

    #[test]
    fn l_on_vacuum() {
        let half = Scalar::constant(ratio(1, 2));
        for (i, j) in [(1, 2), (2, 1), (1, 1)] {
            let (a, b) = if i <= j { (i, j) } else { (j, i) };
            let expect = State::from_factors(vec![Generator::new(a, b, -1, -1)]).unwrap().scale(&half);
            assert_eq!(act_l(i, j, -2, &vac()), expect);
            assert!(act_l(i, j, -1, &vac()).is_zero());
        }
        assert!(act_l(1, 1, 0, &vac()).is_zero());
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(-1, 3), BigInt::from(-1));
        assert_eq!(binomial(-2, 2), BigInt::from(3));
        assert_eq!(binomial(7, 0), BigInt::from(1));
        assert_eq!(binomial(3, -1), BigInt::from(0));
        assert_eq!(binomial(2, 5), BigInt::from(0));
    }

    fn leibniz(l: i64, size: usize) -> Rational {
        use itertools::Itertools;
        let mut total = rat(0);
        for perm in (0..size).permutations(size) {
            let mut inversions = 0;
            for a in 0..size {
                for b in a + 1..size {
                    if perm[a] > perm[b] {
                        inversions += 1;
                    }
                }
            }
            let mut prod = rat(if inversions % 2 == 0 { 1 } else { -1 });
            for (p, &nn) in perm.iter().enumerate() {
                prod *= Rational::from_integer(binomial(l + p as i64 + 1 - (nn as i64 + 1), p as i64));
            }
            total += prod;
        }
        total
    }

    #[test]
    fn binomial_determinants() {
        assert_eq!(binomial_matrix_det(7, 1), rat(1));
        assert_eq!(binomial_matrix_det(0, 2), rat(-1));
        for size in 1..=5 {
            for l in -3..=3 {
                assert_eq!(binomial_matrix_det(l, size), leibniz(l, size), "L={l} M={size}");
            }
        }
        assert!(check_binomial_dets(6, 3).is_ok());
    }

    #[test]
    fn virasoro_examples() {
        for d in [2u32, 3] {
            let probe = virasoro_bracket_probe(d, 2, -2, &vac());
            assert_eq!(probe, vac().scale(&Scalar::monomial(1, ratio(d as i64, 2))));
            assert!(virasoro_bracket_probe(d, 1, -1, &vac()).is_zero());
            assert!(virasoro_bracket_probe(d, 1, 1, &vac()).is_zero());
        }
    }

    #[test]
    fn virasoro_on_small_states() {
        for u in degree_basis(2, 2) {
            check_virasoro(2, 2, &State::monomial(u)).unwrap();
        }
    }

    #[test]
    fn lemma_recursions_small() {
        check_omega_from_l(2).unwrap();
        check_l_minus_one_vacuum(2).unwrap();
        check_first_mode_lowering(2, -2).unwrap();
        check_diagonal_from_offdiag(2, -2, |m, n| Some(diagonal_from_offdiag_coeff(m, n))).unwrap();
        check_offdiag_l_word(2, -2).unwrap();
        check_diag_l_word(2, -3).unwrap();
    }

    #[test]
    fn transposed_diagonal_coefficient_fails() {
        // 2/(m(m-n+1)) instead of 2/(m(m+n-1))
        let transposed = |m: i64, n: i64| {
            let den = m * (m - n + 1);
            (den != 0).then(|| ratio(2, den))
        };
        assert!(check_diagonal_from_offdiag(2, -1, transposed).is_err());
    }

    #[test]
    fn vertex_mode_examples() {
        let base = vertex_mode(1, 2, -1, -1, 0, &vac()).unwrap();
        assert_eq!(base, act_l(1, 2, -1, &vac()).scale(&Scalar::int(2)));
        for l in -4..=4 {
            let a = vertex_mode(1, 2, -1, -1, l, &vac()).unwrap();
            assert_eq!(a, act_l(1, 2, l - 1, &vac()).scale(&Scalar::int(2)));
        }
        assert!(vertex_mode(1, 2, -2, -1, 2, &vac()).unwrap().is_zero());
        assert_eq!(vertex_mode(1, 1, -1, -1, 0, &vac()), Err(Error::DiagonalVertexMode(1)));
        assert_eq!(vertex_mode(1, 2, 0, -1, 0, &vac()), Err(Error::NonNegativeMode { m: 0, n: -1 }));
    }

    #[test]
    fn vertex_mode_commutator_step() {
        // (v^12(-2,-1) 1)_0 = [L^11(-1), (v^12(-1,-1) 1)_0] on a degree-2 state
        let u = State::from_factors(vec![Generator::new(1, 2, -1, -1)]).unwrap();
        let lhs = vertex_mode(1, 2, -2, -1, 0, &u).unwrap();
        let inner = |s: &State| vertex_mode(1, 2, -1, -1, 0, s).unwrap();
        let rhs = &act_l(1, 1, -1, &inner(&u)) - &inner(&act_l(1, 1, -1, &u));
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn window_independence() {
        for mono in degree_basis(2, 3) {
            let u = State::monomial(mono);
            for m in -3..=3 {
                let (a, b) = sufficient_window(m, 3);
                for (i, j) in [(1, 1), (1, 2), (2, 2)] {
                    assert_eq!(act_l(i, j, m, &u), act_l_window(i, j, m, &u, (2 * a, 2 * b)));
                }
            }
            let (a, b) = vertex_window(-2, -1, 1, 3);
            let wide = vertex_mode_window(1, 2, -2, -1, 1, &u, (2 * a - 5, 2 * b + 5)).unwrap();
            assert_eq!(vertex_mode(1, 2, -2, -1, 1, &u).unwrap(), wide);
        }
    }
}
