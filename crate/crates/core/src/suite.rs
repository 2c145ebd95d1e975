//! Named pass/fail checks and the aggregated verification run.
//!
//! Each numbered criterion bundles one or more [`Check`]s. The run is
//! deterministic for a given [`SuiteConfig`].

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::fock::{act, act_generator, degree_basis, h_element, homogeneous_degree, weight_of, weight_space_basis, Monomial, State, Weight};
use crate::griess::jordan_verify;
use crate::liealg::{
    bracket_generators, bracket_generators_generic, bracket_r, canonical_parts, generators_in_box, Generator, LieElement,
};
use crate::scalar::{rat, ratio, RParam, Rational, Scalar};
use crate::singular::{check_power_lowering, check_sweep, det_power_state, determinant_weights, is_singular, singular_r, sweep, verify_det_lemmas};
use crate::virops::{
    act_l, act_l_window, check_binomial_dets, check_diag_l_word, check_diagonal_from_offdiag, check_first_mode_lowering,
    check_l_minus_one_vacuum, check_offdiag_l_word, check_omega_from_l, check_vertex_modes, check_virasoro,
    diagonal_from_offdiag_coeff, sufficient_window, virasoro_bracket_probe,
};

/// Outcome of one named verification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn from_result(name: impl Into<String>, r: std::result::Result<(), String>) -> Self {
        let name = name.into();
        match r {
            Ok(()) => Check { name, passed: true, detail: String::new() },
            Err(detail) => Check { name, passed: false, detail },
        }
    }
}

type Outcome = std::result::Result<(), String>;

#[derive(Debug, Clone)]
pub struct SuiteConfig {
    pub d: u32,
    pub max_degree: u64,
    pub seed: u64,
    pub samples: usize,
    pub workers: usize,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig { d: 2, max_degree: 6, seed: 0, samples: 10_000, workers: 0 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Criterion {
    pub id: u8,
    pub title: &'static str,
    pub checks: Vec<Check>,
    pub seconds: f64,
}

impl Criterion {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

pub const TITLES: [&str; 11] = [
    "Lie structure of the deformed bracket",
    "two-mode bracket formula",
    "representation property of the module action",
    "recursions for v^ij(m,n) 1 through L operators",
    "closed-form vertex modes",
    "binomial determinant nonvanishing",
    "lowering v(m,m) on powers of v(-m,-m)",
    "determinant vectors singular for the full algebra",
    "singular-vector sweep of restricted weight spaces",
    "Virasoro relation with central charge d r",
    "Griess algebra is Sym_d",
];

/// Runs one numbered criterion (1 to 11).
pub fn criterion(id: u8, cfg: &SuiteConfig) -> Criterion {
    let start = Instant::now();
    let checks = match id {
        1 => lie_structure(cfg),
        2 => two_mode_formulas(),
        3 => vec![Check::from_result(
            "representation property",
            check_representation(cfg.d, 4, cfg.max_degree.min(5)),
        )],
        4 => lemma_recursions(cfg.d.max(2)),
        5 => vec![Check::from_result("closed form vs recursive construction", vertex_modes(cfg))],
        6 => vec![Check::from_result("binomial determinants M<=6, |L|<=3", check_binomial_dets(6, 3))],
        7 => vec![Check::from_result("power lowering m<=3, nu<=4", check_power_lowering(3, 4))],
        8 => determinant_singularity(cfg),
        9 => singular_sweep_checks(cfg),
        10 => virasoro_checks(cfg),
        11 => griess_checks(),
        _ => vec![Check::from_result(format!("criterion {id}"), Err("no such criterion".into()))],
    };
    Criterion {
        id,
        title: TITLES.get(id as usize - 1).copied().unwrap_or("unknown"),
        checks,
        seconds: start.elapsed().as_secs_f64(),
    }
}

/// Every criterion, then the module-level invariants as criterion 0.
pub fn run_all(cfg: &SuiteConfig) -> Vec<Criterion> {
    let mut out: Vec<Criterion> = (1..=11).map(|id| criterion(id, cfg)).collect();
    let start = Instant::now();
    out.push(Criterion {
        id: 0,
        title: "module invariants",
        checks: module_invariants(cfg),
        seconds: start.elapsed().as_secs_f64(),
    });
    out
}

// ---- Lie structure ----

/// Integer form of a deformed-bracket result: generator coefficients and
/// the coefficient of `r`.
type IntElement = (Vec<(Generator, i64)>, i64);

fn int_bracket(x: &Generator, y: &Generator) -> IntElement {
    bracket_generators(x, y)
}

/// `[x, e]_r` for an integer element; its constant part is central.
fn int_outer(x: &Generator, e: &IntElement, acc: &mut HashMap<Generator, i64>, constant: &mut i64) {
    for (g, c) in &e.0 {
        let (terms, k) = bracket_generators(x, g);
        for (h, d) in terms {
            *acc.entry(h).or_insert(0) += c * d;
        }
        *constant += c * k;
    }
}

fn jacobi_vanishes(x: &Generator, y: &Generator, z: &Generator, yz: &IntElement, zx: &IntElement, xy: &IntElement) -> bool {
    let mut acc = HashMap::new();
    let mut constant = 0;
    int_outer(x, yz, &mut acc, &mut constant);
    int_outer(y, zx, &mut acc, &mut constant);
    int_outer(z, xy, &mut acc, &mut constant);
    constant == 0 && acc.values().all(|c| *c == 0)
}

fn negated(e: &IntElement) -> IntElement {
    (e.0.iter().map(|(g, c)| (*g, -c)).collect(), -e.1)
}

fn same_element(a: &IntElement, b: &IntElement) -> bool {
    let collect = |e: &IntElement| {
        let mut m: BTreeMap<Generator, i64> = BTreeMap::new();
        for (g, c) in &e.0 {
            *m.entry(*g).or_insert(0) += c;
        }
        m.retain(|_, c| *c != 0);
        (m, e.1)
    };
    collect(a) == collect(b)
}

/// Antisymmetry on all ordered pairs and Jacobi on all unordered triples of
/// canonical generators with indices `<= d` and modes in `[-bound, bound]`.
pub fn check_lie_exhaustive(d: u32, bound: i64) -> Outcome {
    let gens = generators_in_box(d, bound);
    let n = gens.len();
    let table: Vec<Vec<IntElement>> =
        gens.iter().map(|x| gens.iter().map(|y| int_bracket(x, y)).collect()).collect();
    for a in 0..n {
        for b in 0..n {
            if !same_element(&table[a][b], &negated(&table[b][a])) {
                return Err(format!("antisymmetry fails for {}, {}", gens[a], gens[b]));
            }
        }
    }
    (0..n).into_par_iter().try_for_each(|a| {
        for b in a..n {
            for c in b..n {
                if !jacobi_vanishes(&gens[a], &gens[b], &gens[c], &table[b][c], &table[c][a], &table[a][b]) {
                    return Err(format!("Jacobi fails for {}, {}, {}", gens[a], gens[b], gens[c]));
                }
            }
        }
        Ok(())
    })
}

/// A uniformly drawn canonical generator with indices `<= d` and modes in
/// `[-bound, bound]`.
pub fn random_generator(rng: &mut ChaCha8Rng, d: u32, bound: i64) -> Generator {
    let i = rng.gen_range(1..=d);
    let j = rng.gen_range(1..=d);
    let m = rng.gen_range(-bound..=bound);
    let n = rng.gen_range(-bound..=bound);
    canonical_parts(i, j, m, n).0
}

/// Antisymmetry and Jacobi for the polynomial-valued bracket on `samples`
/// random triples.
pub fn check_lie_sampled(d: u32, bound: i64, samples: usize, seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let [x, y, z] = [0; 3].map(|_| LieElement::generator(random_generator(&mut rng, d, bound)));
        let xy = bracket_r(&x, &y);
        if xy != bracket_r(&y, &x).scale(&Scalar::int(-1)) {
            return Err(format!("antisymmetry fails for {x}, {y}"));
        }
        let j = &(&bracket_r(&x, &bracket_r(&y, &z)) + &bracket_r(&y, &bracket_r(&z, &x))) + &bracket_r(&z, &xy);
        if !j.is_zero() {
            return Err(format!("Jacobi fails for {x}, {y}, {z}: {j}"));
        }
    }
    Ok(())
}

/// Four-contraction bracket against full normal ordering of the words.
pub fn check_bracket_routes(d: u32, bound: i64) -> Outcome {
    let gens = generators_in_box(d, bound);
    for x in &gens {
        for y in &gens {
            let (fast, k) = bracket_generators(x, y);
            let (slow, k2) = bracket_generators_generic(x, y);
            let mut a: BTreeMap<Generator, Rational> = BTreeMap::new();
            for (g, c) in fast {
                *a.entry(g).or_insert_with(|| rat(0)) += rat(c);
            }
            a.retain(|_, c| *c != rat(0));
            let b: BTreeMap<Generator, Rational> = slow.into_iter().filter(|(_, c)| *c != rat(0)).collect();
            if a != b || rat(k) != k2 {
                return Err(format!("routes disagree on [{x}, {y}]"));
            }
        }
    }
    Ok(())
}

/// `[x, y] = 0` for all negative generators in the box.
pub fn check_negative_commute(d: u32, bound: i64) -> Outcome {
    let neg: Vec<Generator> = generators_in_box(d, bound).into_iter().filter(Generator::is_negative).collect();
    for x in &neg {
        for y in &neg {
            let (t, k) = bracket_generators(x, y);
            if k != 0 || t.iter().any(|(_, c)| *c != 0) {
                return Err(format!("[{x}, {y}] != 0"));
            }
        }
    }
    Ok(())
}

fn lie_structure(cfg: &SuiteConfig) -> Vec<Check> {
    vec![
        Check::from_result("exhaustive antisymmetry and Jacobi, d=3, |m|,|n|<=3", check_lie_exhaustive(3, 3)),
        Check::from_result(
            format!("sampled antisymmetry and Jacobi, {} triples, |m|,|n|<=6", cfg.samples),
            check_lie_sampled(3, 6, cfg.samples, cfg.seed),
        ),
        Check::from_result("four-contraction vs word route, |m|,|n|<=5", check_bracket_routes(2, 5)),
        Check::from_result("negative generators commute", check_negative_commute(3, 6)),
    ]
}

// ---- bracket formulas ----

/// `[v(m,n), v(-n,-m)]_r = n(1+δ) v(-m,m) + m(1+δ) v(-n,n) + r m n (1+δ)`.
pub fn check_two_mode_formula(max: i64) -> Outcome {
    for m in 1..=max {
        for n in m..=max {
            let k = if m == n { 2 } else { 1 };
            let got = bracket_r(&LieElement::generator(Generator::v(m, n)), &LieElement::generator(Generator::v(-n, -m)));
            let mut want = LieElement::constant(Scalar::monomial(1, rat(m * n * k)));
            want.add_term(Generator::v(-m, m), Scalar::int(n * k));
            want.add_term(Generator::v(-n, n), Scalar::int(m * k));
            if got != want {
                return Err(format!("(m,n)=({m},{n}): {got} != {want}"));
            }
        }
    }
    Ok(())
}

fn add_raw_v(e: &mut LieElement, m: i64, n: i64, c: i64) {
    e.add_raw(1, 1, m, n, &Scalar::int(c));
}

/// `[v(-m,n), v(-s,-t)]_r = n (δ_{n,s} v(-m,-t) + δ_{n,t} v(-s,-m))` and
/// `[v(m,m), v(-s,-t)]_r = 2m (δ_{m,s} v(-t,m) + δ_{m,t} v(-s,m))`, `s != t`.
pub fn check_mixed_formulas(max: i64) -> Outcome {
    let g = |m: i64, n: i64| {
        let mut e = LieElement::zero();
        add_raw_v(&mut e, m, n, 1);
        e
    };
    for m in 1..=max {
        for s in 1..=max {
            for t in 1..=max {
                for n in 1..=max {
                    let got = bracket_r(&g(-m, n), &g(-s, -t));
                    let mut want = LieElement::zero();
                    if n == s {
                        add_raw_v(&mut want, -m, -t, n);
                    }
                    if n == t {
                        add_raw_v(&mut want, -s, -m, n);
                    }
                    if got != want {
                        return Err(format!("[v(-{m},{n}), v(-{s},-{t})]: {got} != {want}"));
                    }
                }
                if s != t {
                    let got = bracket_r(&g(m, m), &g(-s, -t));
                    let mut want = LieElement::zero();
                    if m == s {
                        add_raw_v(&mut want, -t, m, 2 * m);
                    }
                    if m == t {
                        add_raw_v(&mut want, -s, m, 2 * m);
                    }
                    if got != want {
                        return Err(format!("[v({m},{m}), v(-{s},-{t})]: {got} != {want}"));
                    }
                }
            }
        }
    }
    Ok(())
}

fn two_mode_formulas() -> Vec<Check> {
    vec![
        Check::from_result("two-mode bracket, 1<=m<=n<=5", check_two_mode_formula(5)),
        Check::from_result("mixed-sign brackets, indices<=5", check_mixed_formulas(5)),
    ]
}

// ---- module action ----

/// All PBW monomials with indices `<= d` and degree `<= max_degree`.
pub fn basis_states(d: u32, max_degree: u64) -> Vec<State> {
    (0..=max_degree).flat_map(|k| degree_basis(d, k)).map(State::monomial).collect()
}

/// `x.(y.u) - y.(x.u) = [x,y]_r . u` for all generator pairs in the box and
/// basis states of degree `<= max_degree`.
pub fn check_representation(d: u32, bound: i64, max_degree: u64) -> Outcome {
    let gens: Vec<LieElement> = generators_in_box(d, bound).into_iter().map(LieElement::generator).collect();
    let states = basis_states(d, max_degree);
    let n = gens.len();
    (0..n).into_par_iter().try_for_each(|a| {
        let x = &gens[a];
        let xs: Vec<State> = states.iter().map(|u| act(x, u)).collect();
        for y in &gens[a + 1..] {
            let xy = bracket_r(x, y);
            for (u, xu) in states.iter().zip(&xs) {
                let lhs = &act(x, &act(y, u)) - &act(y, xu);
                if lhs != act(&xy, u) {
                    return Err(format!("fails for x = {x}, y = {y}, u = {u}"));
                }
            }
        }
        Ok(())
    })
}

/// `h_{k,l} w = lambda(h_{k,l}) w` for all basis monomials of degree `<= max_degree`.
pub fn check_h_eigenvalues(d: u32, max_degree: u64) -> Outcome {
    for k in 0..=max_degree {
        for mono in degree_basis(d, k) {
            let w = mono.weight();
            let u = State::monomial(mono);
            for i in 1..=d {
                for l in -(max_degree as i64).max(1)..=-1 {
                    let got = act(&h_element(i, l), &u);
                    if got != u.scale(&Scalar::int(w.count(i, l) as i64)) {
                        return Err(format!("h_{{{i},{l}}} on {u}: {got}"));
                    }
                }
            }
        }
    }
    Ok(())
}

/// Degree and weight shifts of single generators on basis states.
pub fn check_grading(d: u32, bound: i64, max_degree: u64) -> Outcome {
    let states = basis_states(d, max_degree);
    for g in generators_in_box(d, bound) {
        for u in &states {
            let out = act_generator(&g, u);
            if out.is_zero() {
                continue;
            }
            let du = homogeneous_degree(u).map_err(|e| e.to_string())? as i64;
            let dout = homogeneous_degree(&out).map_err(|e| format!("{g} on {u}: {e}"))? as i64;
            if dout != du + g.degree_shift() {
                return Err(format!("{g} on {u}: degree {dout}, expected {}", du + g.degree_shift()));
            }
            let wu = weight_of(u).map_err(|e| e.to_string())?.homogeneous().expect("basis state");
            let wout = weight_of(&out).map_err(|e| e.to_string())?.homogeneous();
            if wout.is_none() || wout != wu.shifted_by(&g) {
                return Err(format!("{g} on {u}: weight {wout:?}"));
            }
        }
    }
    Ok(())
}

/// `v^1j(m,n)` with `n >= 0`, `j >= 2`, and raising `v^ij` with `2 <= i <= j`
/// kill every restricted basis state of degree `<= max_degree`.
pub fn check_cross_index_zero(d: u32, bound: i64, max_degree: u64) -> Outcome {
    let states: Vec<State> = (0..=max_degree)
        .flat_map(|k| degree_basis(1, k))
        .map(State::monomial)
        .collect();
    for g in generators_in_box(d, bound) {
        let covered = (g.i == 1 && g.j >= 2 && g.n >= 0) || (g.i >= 2 && g.is_raising());
        if !covered {
            continue;
        }
        for u in &states {
            let out = act_generator(&g, u);
            if !out.is_zero() {
                return Err(format!("{g} on {u}: {out}"));
            }
        }
    }
    Ok(())
}

/// Weight-space enumeration by pairing against brute-force enumeration by
/// degree, both unrestricted and restricted.
pub fn check_weight_spaces(d: u32, max_degree: u64) -> Outcome {
    for k in 0..=max_degree {
        let mut by_weight: BTreeMap<Weight, Vec<Monomial>> = BTreeMap::new();
        for mono in degree_basis(d, k) {
            by_weight.entry(mono.weight()).or_default().push(mono);
        }
        for (w, mut monos) in by_weight {
            monos.sort();
            if weight_space_basis(&w, false) != monos {
                return Err(format!("basis of weight {w} differs"));
            }
            let restricted: Vec<Monomial> = monos.into_iter().filter(Monomial::is_restricted).collect();
            if weight_space_basis(&w, true) != restricted {
                return Err(format!("restricted basis of weight {w} differs"));
            }
        }
    }
    let vac = degree_basis(d, 0);
    if vac != vec![Monomial::vacuum()] || !degree_basis(d, 1).is_empty() {
        return Err("low-degree dimensions are not 1, 0".into());
    }
    Ok(())
}

// ---- L operators and vertex modes ----

fn lemma_recursions(d: u32) -> Vec<Check> {
    vec![
        Check::from_result("v^ij(-1,-1) 1 = 2 L^ij(-2) 1", check_omega_from_l(d)),
        Check::from_result("L^ij(-1) 1 = 0", check_l_minus_one_vacuum(d)),
        Check::from_result("first-mode lowering by L^ii(-1), m,n in [-4,-1]", check_first_mode_lowering(d, -4)),
        Check::from_result(
            "diagonal from off-diagonal via L^ii(0) L^ij(-1), m,n in [-4,-1]",
            check_diagonal_from_offdiag(d, -4, |m, n| Some(diagonal_from_offdiag_coeff(m, n))),
        ),
        Check::from_result("off-diagonal L-word, m,n in [-4,-1]", check_offdiag_l_word(d, -4)),
        Check::from_result("diagonal L-word, m,n in [-4,-1]", check_diag_l_word(d, -4)),
    ]
}

fn vertex_modes(cfg: &SuiteConfig) -> Outcome {
    let states = basis_states(cfg.d.max(2), cfg.max_degree.min(4));
    check_vertex_modes(&[(1, 2), (2, 1)], -3, 4, &states)
}

/// Doubling the summation window leaves `L^ij(m) u` unchanged.
pub fn check_window_independence(d: u32, max_degree: u64) -> Outcome {
    for u in basis_states(d, max_degree) {
        let deg = u.max_degree();
        for m in -3..=3 {
            let (a, b) = sufficient_window(m, deg);
            for i in 1..=d {
                for j in i..=d {
                    if act_l(i, j, m, &u) != act_l_window(i, j, m, &u, (2 * a, 2 * b)) {
                        return Err(format!("L[{i},{j}]({m}) on {u}"));
                    }
                }
            }
        }
    }
    Ok(())
}

// ---- singular vectors ----

pub const DET_CASES: [(usize, u32); 6] = [(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 1)];

fn singular_at(p: usize, nu: u32, full: bool, d: u32) -> Outcome {
    let u = det_power_state(p, nu);
    let r0 = RParam::Value(singular_r(p, nu));
    let v = is_singular(&u, &r0, full, d, None).map_err(|e| e.to_string())?;
    match v.witness {
        None => Ok(()),
        Some((g, out)) => Err(format!("(p,nu)=({p},{nu}) at r={r0}: {g} gives {out}")),
    }
}

fn determinant_singularity(cfg: &SuiteConfig) -> Vec<Check> {
    let d = cfg.d.max(2);
    let mut checks: Vec<Check> = DET_CASES
        .iter()
        .map(|&(p, nu)| Check::from_result(format!("full algebra d={d}, (p,nu)=({p},{nu})"), singular_at(p, nu, true, d)))
        .collect();
    checks.extend(
        DET_CASES
            .iter()
            .map(|&(p, nu)| Check::from_result(format!("index-1 algebra, (p,nu)=({p},{nu})"), singular_at(p, nu, false, 1))),
    );
    checks
}

/// `(det V_p)^nu 1` is not singular at integer `r0` in `[-3,3]` other than
/// `1 - 2 nu + p`.
pub fn check_certify_exclusive(max_degree: u64) -> Outcome {
    for (p, nu, _) in determinant_weights(max_degree) {
        let u = det_power_state(p, nu);
        for r in -3..=3 {
            if rat(r) == singular_r(p, nu) {
                continue;
            }
            let v = is_singular(&u, &RParam::value(r), false, 1, None).map_err(|e| e.to_string())?;
            if v.singular {
                return Err(format!("(p,nu)=({p},{nu}) singular at r={r}"));
            }
        }
    }
    Ok(())
}

pub fn sweep_values() -> Vec<RParam> {
    let mut rs = vec![
        RParam::Value(ratio(1, 2)),
        RParam::Value(ratio(-1, 2)),
        RParam::Value(ratio(1, 3)),
        RParam::Generic,
    ];
    rs.extend((-2..=3).map(RParam::value));
    rs
}

fn singular_sweep_checks(cfg: &SuiteConfig) -> Vec<Check> {
    let rows = sweep(&sweep_values(), cfg.max_degree, cfg.workers);
    let sweep_check = match rows {
        Ok(rows) => check_sweep(&rows),
        Err(e) => Err(e.to_string()),
    };
    let mut checks = vec![
        Check::from_result(format!("kernel pattern and vector structure, degree<={}", cfg.max_degree), sweep_check),
        Check::from_result("determinant vectors singular only at r=1-2nu+p", check_certify_exclusive(cfg.max_degree)),
    ];
    checks.extend((1..=3).flat_map(|p| verify_det_lemmas(p, p as i64 + 1)));
    checks
}

// ---- Virasoro ----

fn virasoro_checks(cfg: &SuiteConfig) -> Vec<Check> {
    let mut checks = Vec::new();
    for d in [2u32, 3] {
        let probe = virasoro_bracket_probe(d, 2, -2, &State::vacuum());
        let want = State::vacuum().scale(&Scalar::monomial(1, ratio(d as i64, 2)));
        let first = if probe == want { Ok(()) } else { Err(format!("probe (2,-2) on 1 = {probe}")) };
        checks.push(Check::from_result(format!("probe (2,-2) on vacuum, d={d}"), first));
        let states = basis_states(d, cfg.max_degree.min(4));
        let all = states.iter().try_for_each(|u| check_virasoro(d, 3, u));
        checks.push(Check::from_result(format!("full relation |m|,|n|<=3, degree<=4, d={d}"), all));
    }
    checks
}

// ---- Griess ----

fn griess_checks() -> Vec<Check> {
    let mut checks = Vec::new();
    for d in [2u32, 3] {
        match jordan_verify(d) {
            Ok(rep) => {
                checks.extend(rep.checks);
            }
            Err(e) => checks.push(Check::from_result(format!("griess d={d}"), Err(e.to_string()))),
        }
    }
    checks
}

// ---- scalars and module invariants ----

fn random_poly(rng: &mut ChaCha8Rng) -> Scalar {
    let deg = rng.gen_range(0..=4);
    Scalar::from_coeffs((0..=deg).map(|_| ratio(rng.gen_range(-100..=100), rng.gen_range(1..=100))))
}

/// Ring axioms and evaluation as a homomorphism on random polynomials.
pub fn check_scalar_ring(samples: usize, seed: u64) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..samples {
        let (a, b, c) = (random_poly(&mut rng), random_poly(&mut rng), random_poly(&mut rng));
        if &(&a * &b) * &c != &a * &(&b * &c) {
            return Err(format!("associativity: {a}, {b}, {c}"));
        }
        if &a * &(&b + &c) != &(&a * &b) + &(&a * &c) {
            return Err(format!("distributivity: {a}, {b}, {c}"));
        }
        if &a * &b != &b * &a || &a + &b != &b + &a {
            return Err(format!("commutativity: {a}, {b}"));
        }
        let r0 = ratio(rng.gen_range(-100..=100), rng.gen_range(1..=100));
        if (&a * &b).evaluate(&r0) != a.evaluate(&r0) * b.evaluate(&r0) {
            return Err(format!("evaluation at {r0}: {a}, {b}"));
        }
    }
    Ok(())
}

pub fn module_invariants(cfg: &SuiteConfig) -> Vec<Check> {
    let d = cfg.d;
    let deg = cfg.max_degree.min(6);
    vec![
        Check::from_result("scalar ring axioms", check_scalar_ring(500, cfg.seed)),
        Check::from_result(format!("h eigenvalues, degree<={deg}"), check_h_eigenvalues(d, deg)),
        Check::from_result("degree and weight shifts", check_grading(d, 3, deg.min(4))),
        Check::from_result(format!("cross-index annihilation of M^(1), degree<={deg}"), check_cross_index_zero(d.max(2), 6, deg)),
        Check::from_result("weight spaces by pairing vs brute force", check_weight_spaces(d, deg.min(5))),
        Check::from_result("L window independence, degree<=5", check_window_independence(d, deg.min(5))),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_exhaustive_lie() {
        check_lie_exhaustive(2, 2).unwrap();
        check_lie_sampled(3, 6, 200, 7).unwrap();
    }

    #[test]
    fn formulas() {
        check_two_mode_formula(3).unwrap();
        check_mixed_formulas(3).unwrap();
    }

    #[test]
    fn small_module_checks() {
        check_representation(2, 2, 3).unwrap();
        check_h_eigenvalues(2, 4).unwrap();
        check_grading(2, 2, 3).unwrap();
        check_cross_index_zero(2, 3, 4).unwrap();
        check_weight_spaces(2, 4).unwrap();
        check_scalar_ring(50, 1).unwrap();
    }

    #[test]
    fn broken_formula_is_caught() {
        // dropping the (1+δ) factor must fail at m = n
        let got = bracket_r(&LieElement::generator(Generator::v(1, 1)), &LieElement::generator(Generator::v(-1, -1)));
        let mut wrong = LieElement::constant(Scalar::r());
        wrong.add_term(Generator::v(-1, 1), Scalar::int(2));
        assert_ne!(got, wrong);
    }
}
