//! Determinant vectors `(det V_p)^nu 1`, singularity certification and
//! exhaustive kernel searches in restricted weight spaces.

use std::collections::BTreeMap;

use itertools::Itertools;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::Serialize;

use crate::fock::{act_generator, homogeneous_degree, restricted_weights, weight_of, weight_space_basis, Monomial, State, Weight};
use crate::liealg::Generator;
use crate::linalg::{kernel_basis, rank_over_polynomials};
use crate::scalar::{rat, Rational, RParam, Scalar};
use crate::suite::Check;
use crate::{Error, Result};

/// Size `p`, power `nu`, and the parameter value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DetSpec {
    pub p: usize,
    pub nu: u32,
    pub r0: RParam,
}

impl DetSpec {
    /// Determinant data at the parameter value where the vector is singular.
    pub fn certified(p: usize, nu: u32) -> Self {
        DetSpec { p, nu, r0: RParam::Value(singular_r(p, nu)) }
    }

    pub fn is_certifiable(&self) -> bool {
        matches!(&self.r0, RParam::Value(x) if *x == singular_r(self.p, self.nu))
    }
}

/// `1 - 2 nu + p`.
pub fn singular_r(p: usize, nu: u32) -> Rational {
    rat(1 - 2 * nu as i64 + p as i64)
}

/// Entry `v(-s,-t)` of the determinant matrix, in canonical form.
pub fn det_entry(s: usize, t: usize) -> Generator {
    let (a, b) = (s.max(t) as i64, s.min(t) as i64);
    Generator::v(-a, -b)
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let mut inversions = 0;
    for a in 0..perm.len() {
        for b in a + 1..perm.len() {
            if perm[a] > perm[b] {
                inversions += 1;
            }
        }
    }
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Determinant of the matrix `(v(-s,-t))` over the given row/column labels,
/// applied to the vacuum.
fn det_over(labels: &[usize]) -> State {
    let mut out = State::zero();
    let k = labels.len();
    for perm in (0..k).permutations(k) {
        let factors: Vec<Generator> = (0..k).map(|q| det_entry(labels[q], labels[perm[q]])).collect();
        let mono = Monomial::new(factors).expect("negative entries");
        out.add_term(mono, Scalar::int(permutation_sign(&perm)));
    }
    out
}

/// `(det V_p) 1`.
pub fn det_state(p: usize) -> State {
    det_over(&(1..=p).collect::<Vec<_>>())
}

/// `det(V_p^(m)) 1`: row and column `m` removed.
pub fn det_minor_state(p: usize, m: usize) -> State {
    det_over(&(1..=p).filter(|&q| q != m).collect::<Vec<_>>())
}

/// `(det V_p)^nu 1`.
pub fn det_power_state(p: usize, nu: u32) -> State {
    det_state(p).pow(nu)
}

/// Canonical raising generators `v^ij(m,n)` with `m+n > 0`, `|m|,|n| <= bound`;
/// only `(1,1)` unless `full_algebra`, else all `1 <= i <= j <= d`.
pub fn raising_generators(bound: i64, full_algebra: bool, d: u32) -> Vec<Generator> {
    let pairs: Vec<(u32, u32)> = if full_algebra {
        (1..=d).flat_map(|i| (i..=d).map(move |j| (i, j))).collect()
    } else {
        vec![(1, 1)]
    };
    let mut out = Vec::new();
    for (i, j) in pairs {
        for m in -bound..=bound {
            for n in -bound..=bound {
                if m + n > 0 && (i < j || m <= n) {
                    out.push(Generator::new(i, j, m, n));
                }
            }
        }
    }
    out.sort();
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SingularVerdict {
    pub singular: bool,
    /// First violating generator and its (specialized) action.
    pub witness: Option<(Generator, State)>,
    pub generators_checked: usize,
}

/// Whether every raising generator annihilates `u` at `r0`.
pub fn is_singular(u: &State, r0: &RParam, full_algebra: bool, d: u32, bound: Option<i64>) -> Result<SingularVerdict> {
    let deg = homogeneous_degree(u)?;
    if deg == 0 {
        return Err(Error::InvalidArgument("singularity needs degree >= 1".into()));
    }
    let gens = raising_generators(bound.unwrap_or(deg as i64), full_algebra, d);
    let results: Vec<Option<State>> = gens
        .par_iter()
        .map(|g| {
            let out = act_generator(g, u).specialize(r0);
            (!out.is_zero()).then_some(out)
        })
        .collect();
    let witness = gens.iter().zip(results).find_map(|(g, o)| o.map(|s| (*g, s)));
    Ok(SingularVerdict { singular: witness.is_none(), witness, generators_checked: gens.len() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelReport {
    pub weight: Weight,
    pub basis_dim: usize,
    pub kernel_dim: usize,
    pub kernel_vectors: Vec<State>,
}

/// Coefficient matrix of `u -> (v(m,n) u)_{m+n>0}` on the restricted basis
/// of weight `w`, with symbolic entries. Rows are indexed by
/// (generator, target monomial).
fn raising_matrix(basis: &[Monomial], bound: i64) -> Vec<Vec<Scalar>> {
    let gens = raising_generators(bound, false, 1);
    let images: Vec<Vec<State>> = gens
        .par_iter()
        .map(|g| basis.iter().map(|b| act_generator(g, &State::monomial(b.clone()))).collect())
        .collect();
    let mut rows: BTreeMap<(Generator, Monomial), Vec<Scalar>> = BTreeMap::new();
    for (g, imgs) in gens.iter().zip(&images) {
        for (col, img) in imgs.iter().enumerate() {
            for (mono, c) in img.terms() {
                rows.entry((*g, mono.clone())).or_insert_with(|| vec![Scalar::zero(); basis.len()])[col] = c.clone();
            }
        }
    }
    rows.into_values().collect()
}

/// Scales `u` so the smallest monomial in its support has coefficient 1.
pub fn normalize_smallest(u: &State) -> State {
    match u.terms().next() {
        Some((_, c)) => {
            let c = c.as_constant().expect("specialized vector");
            u.scale(&Scalar::constant(Rational::one() / c))
        }
        None => u.clone(),
    }
}

/// Exact kernel of the raising map on the restricted weight space `w`.
pub fn singular_search(w: &Weight, r0: &RParam, bound: Option<i64>) -> Result<KernelReport> {
    if w.is_zero() {
        return Err(Error::InvalidArgument("weight must be nonzero".into()));
    }
    if !w.is_restricted() {
        return Err(Error::InvalidArgument(format!("weight {w} is not supported on index 1")));
    }
    let basis = weight_space_basis(w, true);
    let n = basis.len();
    let rows = raising_matrix(&basis, bound.unwrap_or(w.degree() as i64));
    let (kernel_dim, kernel_vectors) = match r0 {
        RParam::Generic => {
            let dim = n - rank_over_polynomials(&rows, n);
            if dim > 0 {
                return Err(Error::GenericKernel(dim));
            }
            (0, Vec::new())
        }
        RParam::Value(x) => {
            let numeric: Vec<Vec<Rational>> = rows.iter().map(|r| r.iter().map(|c| c.evaluate(x)).collect()).collect();
            let vectors: Vec<State> = kernel_basis(&numeric, n)
                .into_iter()
                .map(|v| {
                    let mut s = State::zero();
                    for (b, c) in basis.iter().zip(v) {
                        s.add_term(b.clone(), Scalar::constant(c));
                    }
                    normalize_smallest(&s)
                })
                .collect();
            (vectors.len(), vectors)
        }
    };
    Ok(KernelReport { weight: w.clone(), basis_dim: n, kernel_dim, kernel_vectors })
}

/// Weights `2 nu (L_{-1} + ... + L_{-p})` of degree `<= max_degree`, with the
/// parameter value at which they carry a singular vector.
pub fn determinant_weights(max_degree: u64) -> Vec<(usize, u32, Weight)> {
    let mut out = Vec::new();
    for p in 1usize.. {
        if (p * (p + 1)) as u64 > max_degree {
            break;
        }
        for nu in 1u32.. {
            if nu as u64 * (p * (p + 1)) as u64 > max_degree {
                break;
            }
            let parts: Vec<(i64, u32)> = (1..=p as i64).map(|q| (-q, 2 * nu)).collect();
            out.push((p, nu, Weight::restricted(&parts)));
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct SweepRow {
    pub r0: String,
    pub weight: String,
    pub basis_dim: usize,
    pub kernel_dim: usize,
    #[serde(skip)]
    pub vectors: Vec<State>,
    #[serde(skip)]
    pub weight_value: Weight,
    #[serde(skip)]
    pub r_value: RParam,
}

/// Runs [`singular_search`] on every restricted weight of degree
/// `1..=max_degree` for every value in `rs`, on a pool of `workers` threads
/// (0 lets rayon decide). Rows come back in input order.
pub fn sweep(rs: &[RParam], max_degree: u64, workers: usize) -> Result<Vec<SweepRow>> {
    let tasks: Vec<(RParam, Weight)> = rs
        .iter()
        .flat_map(|r| restricted_weights(max_degree).into_iter().map(move |w| (r.clone(), w)))
        .collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| Error::InvalidArgument(e.to_string()))?;
    pool.install(|| {
        tasks
            .par_iter()
            .map(|(r, w)| {
                let report = singular_search(w, r, None)?;
                Ok(SweepRow {
                    r0: r.to_string(),
                    weight: w.to_string(),
                    basis_dim: report.basis_dim,
                    kernel_dim: report.kernel_dim,
                    vectors: report.kernel_vectors,
                    weight_value: w.clone(),
                    r_value: r.clone(),
                })
            })
            .collect()
    })
}

/// Reads `(p, nu)` off a weight of the form `2 nu (L_{-1} + ... + L_{-p})`.
pub fn determinant_shape(w: &Weight) -> Option<(usize, u32)> {
    let counts: Vec<(i64, u32)> = w.counts().map(|((_, l), c)| (*l, *c)).collect();
    if !w.is_restricted() || counts.is_empty() {
        return None;
    }
    let p = counts.len();
    let c0 = counts[0].1;
    let consecutive = (1..=p as i64).all(|q| counts.iter().any(|&(l, _)| l == -q));
    if !consecutive || c0 % 2 == 1 || counts.iter().any(|&(_, c)| c != c0) {
        return None;
    }
    Some((p, c0 / 2))
}

/// Structure of a kernel vector found at `r0` on weight `w`: support on
/// consecutive modes, equal multiplicities, coefficient `-nu` on every
/// `x^{s,t}` after putting 1 on `prod v(-q,-q)^nu`, the relation
/// `r + 2 nu - 1 - p = 0`, and proportionality to `(det V_p)^nu 1`.
pub fn check_kernel_vector(u: &State, w: &Weight, r0: &Rational) -> std::result::Result<(), String> {
    let support: Vec<i64> = w.counts().map(|((_, l), _)| *l).collect();
    let p = support.len();
    if !(1..=p as i64).all(|q| support.contains(&-q)) {
        return Err(format!("support of {w} is not {{-p,...,-1}}"));
    }
    let (p, nu) = determinant_shape(w).ok_or_else(|| format!("multiplicities of {w} are not all equal and even"))?;
    let top = Monomial::new((1..=p).flat_map(|q| std::iter::repeat_n(det_entry(q, q), nu as usize)).collect())
        .expect("negative");
    let c = u.coeff(&top).as_constant().unwrap_or_default();
    if c.is_zero() {
        return Err(format!("diagonal monomial {top} missing"));
    }
    let u = u.scale(&Scalar::constant(Rational::one() / c));
    for s in 1..=p {
        for t in 1..s {
            let mut factors = Vec::new();
            for q in 1..=p {
                let k = if q == s || q == t { nu - 1 } else { nu };
                factors.extend(std::iter::repeat_n(det_entry(q, q), k as usize));
            }
            factors.push(det_entry(s, t));
            factors.push(det_entry(s, t));
            let mono = Monomial::new(factors).expect("negative");
            let got = u.coeff(&mono);
            if got != Scalar::int(-(nu as i64)) {
                return Err(format!("coefficient of {mono} is {got}, expected -{nu}"));
            }
        }
    }
    if r0 + rat(2 * nu as i64 - 1 - p as i64) != Rational::zero() {
        return Err(format!("r + 2nu - 1 - p = {} at r = {r0}", r0 + rat(2 * nu as i64 - 1 - p as i64)));
    }
    let det = det_power_state(p, nu);
    if u.proportionality(&det).is_none() {
        return Err(format!("not proportional to (det V_{p})^{nu} 1"));
    }
    Ok(())
}

/// Compares sweep rows against the expected kernel pattern: dimension 1
/// exactly at determinant weights with matching `r0`, 0 elsewhere, plus the
/// structural checks on every vector found.
pub fn check_sweep(rows: &[SweepRow]) -> std::result::Result<(), String> {
    for row in rows {
        let expected = match (&row.r_value, determinant_shape(&row.weight_value)) {
            (RParam::Value(x), Some((p, nu))) if *x == singular_r(p, nu) => 1,
            _ => 0,
        };
        if row.kernel_dim != expected {
            return Err(format!(
                "r = {}, weight {}: kernel_dim {} (expected {expected})",
                row.r0, row.weight, row.kernel_dim
            ));
        }
        if let RParam::Value(x) = &row.r_value {
            for u in &row.vectors {
                check_kernel_vector(u, &row.weight_value, x).map_err(|e| format!("r = {}: {e}", row.r0))?;
                let v = is_singular(u, &row.r_value, false, 1, None).map_err(|e| e.to_string())?;
                if !v.singular {
                    return Err(format!("r = {}: kernel vector fails the singularity check", row.r0));
                }
                if weight_of(u).ok().and_then(|g| g.homogeneous()).as_ref() != Some(&row.weight_value) {
                    return Err(format!("r = {}: kernel vector has the wrong weight", row.r0));
                }
            }
        }
    }
    Ok(())
}

/// Checks `[v(-m,n), det V_p] = 0` as operators on every restricted basis
/// state of degree `<= state_degree`, for `1 <= m <= p`, `0 <= n <= index_bound`,
/// `n != m`.
pub fn check_det_commutation(p: usize, index_bound: i64, state_degree: u64) -> std::result::Result<(), String> {
    let det = det_state(p);
    let mut states = vec![State::vacuum()];
    for w in restricted_weights(state_degree) {
        states.extend(weight_space_basis(&w, true).into_iter().map(State::monomial));
    }
    for m in 1..=p as i64 {
        for n in 0..=index_bound {
            if n == m {
                continue;
            }
            let g = Generator::v(-m, n);
            for u in &states {
                let lhs = act_generator(&g, &det.mul(u));
                let rhs = det.mul(&act_generator(&g, u));
                if lhs != rhs {
                    return Err(format!("[{g}, det V_{p}] on {u}: {lhs} != {rhs}"));
                }
            }
        }
    }
    Ok(())
}

/// `v(m,m) (det V_p) u = 2 m^2 (2 alpha + r - p + 1) det(V_p^(m)) u + (det V_p) v(m,m) u`
/// for `u = (det V_p)^{nu1} 1`, `alpha = 2 nu1`, after confirming the
/// hypotheses on `u`.
pub fn check_det_lowering(p: usize, max_nu1: u32) -> std::result::Result<(), String> {
    let det = det_state(p);
    for nu1 in 0..=max_nu1 {
        let u = det_power_state(p, nu1);
        let alpha = 2 * nu1 as i64;
        for m in 1..=p {
            let mi = m as i64;
            for t in 1..=p as i64 {
                let out = act_generator(&Generator::v(-t, mi), &u);
                let want = if t == mi { u.scale(&Scalar::int(alpha * mi)) } else { State::zero() };
                if out != want {
                    return Err(format!("hypothesis fails: v(-{t},{m}) on (det V_{p})^{nu1} 1"));
                }
            }
            let g = Generator::v(mi, mi);
            let lhs = act_generator(&g, &det.mul(&u));
            let c = &Scalar::r() + &Scalar::int(2 * alpha - p as i64 + 1);
            let first = det_minor_state(p, m).mul(&u).scale(&c.scale(&rat(2 * mi * mi)));
            let rhs = &first + &det.mul(&act_generator(&g, &u));
            if lhs != rhs {
                return Err(format!("p={p} m={m} nu1={nu1}: {lhs} != {rhs}"));
            }
        }
    }
    Ok(())
}

/// Iterated form: `v(m,m) (det V_p)^nu 1 = 2 m^2 nu (2 nu - 1 + r - p) det(V_p^(m)) (det V_p)^{nu-1} 1`.
pub fn check_det_power_lowering(p: usize, max_nu: u32) -> std::result::Result<(), String> {
    for nu in 1..=max_nu {
        for m in 1..=p {
            let mi = m as i64;
            let lhs = act_generator(&Generator::v(mi, mi), &det_power_state(p, nu));
            let c = (&Scalar::r() + &Scalar::int(2 * nu as i64 - 1 - p as i64)).scale(&rat(2 * mi * mi * nu as i64));
            let rhs = det_minor_state(p, m).mul(&det_power_state(p, nu - 1)).scale(&c);
            if lhs != rhs {
                return Err(format!("p={p} m={m} nu={nu}: {lhs} != {rhs}"));
            }
        }
    }
    Ok(())
}

/// `v(m,m) v(-m,-m)^nu 1 = 2 m^2 nu (r + 2 nu - 2) v(-m,-m)^{nu-1} 1`.
pub fn check_power_lowering(max_m: i64, max_nu: u32) -> std::result::Result<(), String> {
    for m in 1..=max_m {
        let x = Generator::v(-m, -m);
        for nu in 1..=max_nu {
            let u = State::monomial(Monomial::new(vec![x; nu as usize]).expect("negative"));
            let lhs = act_generator(&Generator::v(m, m), &u);
            let c = (&Scalar::r() + &Scalar::int(2 * nu as i64 - 2)).scale(&rat(2 * m * m * nu as i64));
            let rhs = State::monomial(Monomial::new(vec![x; nu as usize - 1]).expect("negative")).scale(&c);
            if lhs != rhs {
                return Err(format!("m={m} nu={nu}: {lhs} != {rhs}"));
            }
        }
    }
    Ok(())
}

/// All determinant identities for size `p`.
pub fn verify_det_lemmas(p: usize, index_bound: i64) -> Vec<Check> {
    let state_degree = index_bound.clamp(1, 4) as u64;
    vec![
        Check::from_result(
            format!("det commutation p={p}"),
            check_det_commutation(p, index_bound, state_degree),
        ),
        Check::from_result(format!("det lowering p={p}"), check_det_lowering(p, 2)),
        Check::from_result(format!("det power lowering p={p}"), check_det_power_lowering(p, 2)),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::ratio;

    fn v(m: i64, n: i64) -> Generator {
        Generator::v(m, n)
    }

    fn st(f: &[Generator]) -> State {
        State::from_factors(f.to_vec()).unwrap()
    }

    #[test]
    fn det_states() {
        assert_eq!(det_power_state(1, 1), st(&[v(-1, -1)]));
        let expect = &st(&[v(-1, -1), v(-2, -2)]) - &st(&[v(-2, -1), v(-2, -1)]);
        assert_eq!(det_power_state(2, 1), expect);
        assert_eq!(det_power_state(1, 3), st(&[v(-1, -1); 3]));
        assert_eq!(det_minor_state(1, 1), State::vacuum());
    }

    #[test]
    fn singularity_examples() {
        let r1 = RParam::value(1);
        let verdict = is_singular(&det_power_state(2, 1), &r1, false, 1, None).unwrap();
        assert!(verdict.singular);
        let verdict = is_singular(&st(&[v(-1, -1)]), &r1, false, 1, None).unwrap();
        assert!(!verdict.singular);
        let (g, val) = verdict.witness.unwrap();
        assert_eq!(g, v(1, 1));
        assert_eq!(val, State::vacuum().scale(&Scalar::int(2)));
        assert!(is_singular(&st(&[v(-1, -1)]), &RParam::value(0), false, 1, None).unwrap().singular);
        let mixed = &st(&[v(-1, -1)]) + &State::vacuum();
        assert_eq!(is_singular(&mixed, &r1, false, 1, None), Err(Error::Inhomogeneous));
    }

    #[test]
    fn search_examples() {
        let w = Weight::restricted(&[(-1, 2)]);
        assert_eq!(singular_search(&w, &RParam::Value(ratio(1, 2)), None).unwrap().kernel_dim, 0);
        let rep = singular_search(&w, &RParam::value(0), None).unwrap();
        assert_eq!(rep.kernel_dim, 1);
        assert_eq!(rep.kernel_vectors[0], st(&[v(-1, -1)]));
        let w2 = Weight::restricted(&[(-1, 2), (-2, 2)]);
        let rep = singular_search(&w2, &RParam::value(1), None).unwrap();
        assert_eq!(rep.kernel_dim, 1);
        assert!(rep.kernel_vectors[0].proportionality(&det_power_state(2, 1)).is_some());
        assert_eq!(singular_search(&w2, &RParam::Generic, None).unwrap().kernel_dim, 0);
    }

    #[test]
    fn determinant_identities() {
        check_det_commutation(2, 3, 2).unwrap();
        check_det_lowering(2, 1).unwrap();
        check_det_power_lowering(2, 2).unwrap();
        check_power_lowering(2, 3).unwrap();
        // p=1, m=1, u=1: 2r 1
        let out = act_generator(&v(1, 1), &det_state(1));
        assert_eq!(out, State::vacuum().scale(&Scalar::monomial(1, rat(2))));
        // p=2, m=2, u=1: 8(r-1) v(-1,-1) 1
        let out = act_generator(&v(2, 2), &det_state(2));
        assert_eq!(out, st(&[v(-1, -1)]).scale(&"8*r - 8".parse().unwrap()));
    }

    #[test]
    fn shapes() {
        let w = Weight::restricted(&[(-1, 4), (-2, 4)]);
        assert_eq!(determinant_shape(&w), Some((2, 2)));
        assert_eq!(determinant_shape(&Weight::restricted(&[(-1, 2), (-3, 2)])), None);
        assert_eq!(determinant_shape(&Weight::restricted(&[(-1, 2), (-2, 4)])), None);
        let ws = determinant_weights(6);
        let shapes: Vec<(usize, u32)> = ws.iter().map(|(p, nu, _)| (*p, *nu)).collect();
        assert_eq!(shapes, vec![(1, 1), (1, 2), (1, 3), (2, 1)]);
    }
}
