//! The induced module `M_r` with its PBW basis.
//!
//! A basis vector `w(x) = x_p ... x_1 1` is a [`Monomial`]: a multiset of
//! negative generators kept sorted in descending lexicographic order. Negative
//! generators commute with each other, so acting by one is just insertion.
//! A raising generator is commuted to the right through the factors with
//! `[.,.]_r` until it hits the vacuum, which it annihilates.

use std::cell::RefCell;
use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::liealg::{
    bracket_r_generators, canonical_parts, parse_raw_generator, write_coeff_term, Generator, LieElement,
};
use crate::scalar::{rat, RParam, Scalar};
use crate::{Error, Result};

/// Sorted (descending) multiset of generators from `B_-`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(Vec<Generator>);

impl Monomial {
    pub fn vacuum() -> Self {
        Monomial(Vec::new())
    }

    /// Sorts the factors; every factor must lie in `B_-`.
    pub fn new(mut factors: Vec<Generator>) -> Result<Self> {
        if let Some(g) = factors.iter().find(|g| !g.is_negative() || !g.is_canonical()) {
            return Err(Error::InvalidArgument(format!("{g} is not in B_-")));
        }
        factors.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Monomial(factors))
    }

    pub fn factors(&self) -> &[Generator] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_vacuum(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u64 {
        self.0.iter().map(|g| g.degree_shift() as u64).sum()
    }

    pub fn weight(&self) -> Weight {
        let mut w = Weight::zero();
        for g in &self.0 {
            w.add(g.i, g.m, 1);
            w.add(g.j, g.n, 1);
        }
        w
    }

    /// All factors are `v^11`.
    pub fn is_restricted(&self) -> bool {
        self.0.iter().all(|g| g.i == 1 && g.j == 1)
    }

    pub fn with(&self, g: Generator) -> Monomial {
        debug_assert!(g.is_negative());
        let pos = self.0.partition_point(|x| *x > g);
        let mut v = Vec::with_capacity(self.0.len() + 1);
        v.extend_from_slice(&self.0[..pos]);
        v.push(g);
        v.extend_from_slice(&self.0[pos..]);
        Monomial(v)
    }

    pub fn times(&self, other: &Monomial) -> Monomial {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        v.sort_unstable_by(|a, b| b.cmp(a));
        Monomial(v)
    }

    fn split_first(&self) -> Option<(Generator, Monomial)> {
        self.0.split_first().map(|(g, rest)| (*g, Monomial(rest.to_vec())))
    }

    /// Counts of each distinct factor, in storage order.
    pub fn powers(&self) -> Vec<(Generator, usize)> {
        let mut out: Vec<(Generator, usize)> = Vec::new();
        for g in &self.0 {
            match out.last_mut() {
                Some((h, k)) if h == g => *k += 1,
                _ => out.push((*g, 1)),
            }
        }
        out
    }

    pub fn count(&self, g: &Generator) -> usize {
        self.0.iter().filter(|x| *x == g).count()
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (g, e)) in self.powers().into_iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{g}")?;
            } else {
                write!(f, "{g}^{e}")?;
            }
        }
        Ok(())
    }
}

impl std::str::FromStr for Monomial {
    type Err = Error;
    /// `1`, or `*`-separated generator literals with optional `^k` powers.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if t == "1" || t.is_empty() {
            return Ok(Monomial::vacuum());
        }
        let mut factors = Vec::new();
        for part in t.split('*') {
            let (lit, pow) = match part.rsplit_once(")^") {
                Some((l, p)) => (
                    format!("{l})"),
                    p.parse::<usize>().map_err(|_| Error::Parse(format!("bad power in `{part}`")))?,
                ),
                None => (part.to_string(), 1),
            };
            let (i, j, m, n) = parse_raw_generator(&lit)?;
            let (g, c) = canonical_parts(i, j, m, n);
            if c != 0 || !g.is_negative() {
                return Err(Error::Parse(format!("`{lit}` is not in B_-")));
            }
            factors.extend(std::iter::repeat_n(g, pow));
        }
        Monomial::new(factors)
    }
}

/// A finite `Q[r]`-combination of PBW monomials.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct State {
    terms: BTreeMap<Monomial, Scalar>,
}

impl State {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The vacuum `1`.
    pub fn vacuum() -> Self {
        State::monomial(Monomial::vacuum())
    }

    pub fn monomial(m: Monomial) -> Self {
        let mut s = State::zero();
        s.add_term(m, Scalar::one());
        s
    }

    /// Product of negative generators applied to the vacuum.
    pub fn from_factors(factors: Vec<Generator>) -> Result<Self> {
        Ok(State::monomial(Monomial::new(factors)?))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    pub fn support(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &State, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (m, x) in &other.terms {
            self.add_term(m.clone(), x * c);
        }
    }

    pub fn scale(&self, c: &Scalar) -> State {
        let mut out = State::zero();
        out.add_scaled(self, c);
        out
    }

    /// Acts by a negative generator: inserts it into every monomial.
    pub fn mul_generator(&self, g: Generator) -> State {
        State {
            terms: self.terms.iter().map(|(m, c)| (m.with(g), c.clone())).collect(),
        }
    }

    /// Product of two states whose monomials are commuting words in `B_-`;
    /// for `self = P(x) 1` this is `P(x) other`.
    pub fn mul(&self, other: &State) -> State {
        let mut out = State::zero();
        for (a, x) in &self.terms {
            for (b, y) in &other.terms {
                out.add_term(a.times(b), x * y);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> State {
        let mut out = State::vacuum();
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Specializes every coefficient at `r0`.
    pub fn specialize(&self, r: &RParam) -> State {
        match r {
            RParam::Generic => self.clone(),
            RParam::Value(_) => {
                let mut out = State::zero();
                for (m, c) in &self.terms {
                    out.add_term(m.clone(), r.specialize(c));
                }
                out
            }
        }
    }

    /// Largest degree in the support (0 for the zero state).
    pub fn max_degree(&self) -> u64 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    /// Largest generator index in the support.
    pub fn max_index(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|m| m.factors().iter().map(|g| g.j.max(g.i)))
            .max()
            .unwrap_or(0)
    }

    /// `Some(c)` when `self = c * other` for a constant-in-`r` or polynomial
    /// ratio `c`; compares supports and cross-multiplies.
    pub fn proportionality(&self, other: &State) -> Option<(Scalar, Scalar)> {
        let (m0, b0) = other.terms.iter().next()?;
        let a0 = self.coeff(m0);
        if self.terms.len() != other.terms.len() {
            return None;
        }
        for (m, b) in &other.terms {
            let a = self.terms.get(m)?;
            if a * b0 != &a0 * b {
                return None;
            }
        }
        Some((a0, b0.clone()))
    }

    pub fn to_json(&self) -> serde_json::Value {
        let terms: Vec<TermJson> = self
            .terms
            .iter()
            .map(|(m, c)| TermJson {
                monomial: m.factors().iter().map(|g| [g.i as i64, g.j as i64, g.m, g.n]).collect(),
                coeff: c.to_string(),
            })
            .collect();
        serde_json::to_value(terms).expect("state serializes")
    }

    pub fn from_json(v: &serde_json::Value) -> Result<State> {
        let terms: Vec<TermJson> =
            serde_json::from_value(v.clone()).map_err(|e| Error::Parse(e.to_string()))?;
        let mut out = State::zero();
        for t in terms {
            let mut factors = Vec::with_capacity(t.monomial.len());
            for [i, j, m, n] in t.monomial {
                if i < 1 || j < 1 || i > u32::MAX as i64 || j > u32::MAX as i64 {
                    return Err(Error::Parse(format!("bad generator indices [{i},{j}]")));
                }
                let (g, c) = canonical_parts(i as u32, j as u32, m, n);
                if c != 0 || !g.is_negative() {
                    return Err(Error::Parse(format!("{g} is not in B_-")));
                }
                factors.push(g);
            }
            out.add_term(Monomial::new(factors)?, t.coeff.parse()?);
        }
        Ok(out)
    }
}

#[derive(Debug, Serialize, Deserialize)]
struct TermJson {
    monomial: Vec<[i64; 4]>,
    coeff: String,
}

impl fmt::Display for State {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let body = if m.is_vacuum() { String::new() } else { m.to_string() };
            if body.is_empty() && c.is_one() {
                f.write_str(if k == 0 { "1" } else { " + 1" })?;
            } else {
                write_coeff_term(f, k == 0, c, &body)?;
            }
        }
        Ok(())
    }
}

impl std::ops::Add<&State> for &State {
    type Output = State;
    fn add(self, rhs: &State) -> State {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl std::ops::Sub<&State> for &State {
    type Output = State;
    fn sub(self, rhs: &State) -> State {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::int(-1));
        out
    }
}

const MEMO_LIMIT: usize = 1 << 20;

thread_local! {
    static MEMO: RefCell<HashMap<(Generator, Monomial), State>> = RefCell::new(HashMap::new());
}

/// Drops the calling thread's cache of single-generator actions.
pub fn clear_action_cache() {
    MEMO.with(|m| m.borrow_mut().clear());
}

/// `g . w(x)` for a single canonical generator and a basis monomial.
pub fn act_on_monomial(g: &Generator, mono: &Monomial) -> State {
    if g.is_negative() {
        return State::monomial(mono.with(*g));
    }
    if mono.is_vacuum() || mono.weight().shifted_by(g).is_none() {
        return State::zero();
    }
    let key = (*g, mono.clone());
    if let Some(hit) = MEMO.with(|m| m.borrow().get(&key).cloned()) {
        return hit;
    }
    let (x, rest) = mono.split_first().expect("non-vacuum");
    // g x rest = x (g rest) + [g, x]_r rest
    let mut out = act_on_monomial(g, &rest).mul_generator(x);
    let comm = bracket_r_generators(g, &x);
    if !comm.constant.is_zero() {
        out.add_term(rest.clone(), comm.constant.clone());
    }
    for (h, c) in comm.terms() {
        out.add_scaled(&act_on_monomial(h, &rest), c);
    }
    MEMO.with(|m| {
        let mut m = m.borrow_mut();
        if m.len() >= MEMO_LIMIT {
            m.clear();
        }
        m.insert(key, out.clone());
    });
    out
}

/// Action of one generator on a state.
pub fn act_generator(g: &Generator, u: &State) -> State {
    let mut out = State::zero();
    for (m, c) in u.terms() {
        out.add_scaled(&act_on_monomial(g, m), c);
    }
    out
}

/// The module action of `L_r` on `M_r`.
pub fn act(x: &LieElement, u: &State) -> State {
    let mut out = u.scale(&x.constant);
    for (g, c) in x.terms() {
        out.add_scaled(&act_generator(g, u), c);
    }
    out
}

/// `gs[0] . (gs[1] . ( ... gs[last] . u))`.
pub fn act_word(gs: &[LieElement], u: &State) -> State {
    gs.iter().rev().fold(u.clone(), |acc, g| act(g, &acc))
}

/// Either a common value over the support, or a mix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Graded<T> {
    Homogeneous(T),
    Mixed,
}

impl<T> Graded<T> {
    pub fn homogeneous(self) -> Option<T> {
        match self {
            Graded::Homogeneous(t) => Some(t),
            Graded::Mixed => None,
        }
    }
}

fn common<T: PartialEq>(u: &State, f: impl Fn(&Monomial) -> T) -> Result<Graded<T>> {
    let mut it = u.support();
    let first = f(it.next().ok_or(Error::ZeroState)?);
    for m in it {
        if f(m) != first {
            return Ok(Graded::Mixed);
        }
    }
    Ok(Graded::Homogeneous(first))
}

pub fn degree_of(u: &State) -> Result<Graded<u64>> {
    common(u, Monomial::degree)
}

pub fn weight_of(u: &State) -> Result<Graded<Weight>> {
    common(u, Monomial::weight)
}

/// Homogeneous degree, or the matching error.
pub fn homogeneous_degree(u: &State) -> Result<u64> {
    degree_of(u)?.homogeneous().ok_or(Error::Inhomogeneous)
}

/// Element of `Q_+`: nonnegative counts of the symbols `v^k(l)`, `l < 0`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Weight {
    counts: BTreeMap<(u32, i64), u32>,
}

impl Weight {
    pub fn zero() -> Self {
        Self::default()
    }

    /// `sum_l count_l * Lambda_{1,l}` from `(l, count)` pairs.
    pub fn restricted(parts: &[(i64, u32)]) -> Self {
        let mut w = Weight::zero();
        for &(l, c) in parts {
            w.add(1, l, c);
        }
        w
    }

    pub fn from_counts<I: IntoIterator<Item = ((u32, i64), u32)>>(it: I) -> Self {
        let mut w = Weight::zero();
        for ((k, l), c) in it {
            w.add(k, l, c);
        }
        w
    }

    /// Adds `c * Lambda_{k,l}`; nonnegative `l` contributes nothing.
    pub fn add(&mut self, k: u32, l: i64, c: u32) {
        if l < 0 && c > 0 {
            *self.counts.entry((k, l)).or_insert(0) += c;
        }
    }

    /// Subtracts `Lambda_{k,l}`; `false` if the result would leave `Q_+`.
    pub fn remove(&mut self, k: u32, l: i64) -> bool {
        if l >= 0 {
            return true;
        }
        match self.counts.get_mut(&(k, l)) {
            Some(c) if *c > 1 => {
                *c -= 1;
                true
            }
            Some(_) => {
                self.counts.remove(&(k, l));
                true
            }
            None => false,
        }
    }

    /// `lambda(h_{k,l})`.
    pub fn count(&self, k: u32, l: i64) -> u32 {
        self.counts.get(&(k, l)).copied().unwrap_or(0)
    }

    pub fn counts(&self) -> impl Iterator<Item = (&(u32, i64), &u32)> {
        self.counts.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.counts.is_empty()
    }

    pub fn total(&self) -> u32 {
        self.counts.values().sum()
    }

    pub fn degree(&self) -> u64 {
        self.counts.iter().map(|((_, l), c)| (-l) as u64 * *c as u64).sum()
    }

    pub fn is_restricted(&self) -> bool {
        self.counts.keys().all(|(k, _)| *k == 1)
    }

    /// Weight after applying a homogeneous operator `v^ij(m,n)`:
    /// each negative mode adds its symbol, each positive mode removes
    /// `Lambda_{k,-mode}`. `None` when the result is outside `Q_+`.
    pub fn shifted_by(&self, g: &Generator) -> Option<Weight> {
        let mut w = self.clone();
        for (k, mode) in [(g.i, g.m), (g.j, g.n)] {
            if mode > 0 && !w.remove(k, -mode) {
                return None;
            }
        }
        for (k, mode) in [(g.i, g.m), (g.j, g.n)] {
            if mode < 0 {
                w.add(k, mode, 1);
            }
        }
        Some(w)
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.counts.is_empty() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .counts
            .iter()
            .map(|((k, l), c)| if *c == 1 { format!("L[{k},{l}]") } else { format!("{c}L[{k},{l}]") })
            .collect();
        f.write_str(&parts.join("+"))
    }
}

impl std::str::FromStr for Weight {
    type Err = Error;
    /// Inverse of `Display`: `2L[1,-1]+L[1,-2]`, or `0`.
    fn from_str(s: &str) -> Result<Self> {
        let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut w = Weight::zero();
        if t == "0" {
            return Ok(w);
        }
        let bad = || Error::Parse(format!("expected weight like `2L[1,-1]+L[1,-2]`, got `{s}`"));
        for part in t.split('+') {
            let (c, rest) = part.split_once("L[").ok_or_else(bad)?;
            let c: u32 = if c.is_empty() { 1 } else { c.parse().map_err(|_| bad())? };
            let (k, l) = rest.strip_suffix(']').and_then(|r| r.split_once(',')).ok_or_else(bad)?;
            let k: u32 = k.parse().map_err(|_| bad())?;
            let l: i64 = l.parse().map_err(|_| bad())?;
            if l >= 0 || k == 0 {
                return Err(bad());
            }
            w.add(k, l, c);
        }
        Ok(w)
    }
}

/// `h_{k,l} = -(1/l) v^kk(l,-l)` for `l < 0`.
pub fn h_element(k: u32, l: i64) -> LieElement {
    assert!(l < 0, "h_{{k,l}} needs l < 0");
    LieElement::generator(Generator::new(k, k, l, -l)).scale(&Scalar::constant(crate::scalar::ratio(-1, l)))
}

/// Number of `v^k(l)` symbols with `k >= 2`.
pub fn theta(w: &Weight) -> u32 {
    w.counts().filter(|((k, _), _)| *k >= 2).map(|(_, c)| *c).sum()
}

/// Every PBW monomial of weight exactly `w`, by pairing the multiset of
/// required symbols into quadratic factors. With `restrict_to_v11`, only
/// factors `v^11` are allowed.
pub fn weight_space_basis(w: &Weight, restrict_to_v11: bool) -> Vec<Monomial> {
    if restrict_to_v11 && !w.is_restricted() {
        return Vec::new();
    }
    if w.total() % 2 == 1 {
        return Vec::new();
    }
    let mut symbols: Vec<((u32, i64), u32)> = w.counts().map(|(s, c)| (*s, *c)).collect();
    let mut found = BTreeSet::new();
    let mut current = Vec::new();
    pair_up(&mut symbols, &mut current, &mut found);
    found.into_iter().collect()
}

fn pair_up(symbols: &mut [((u32, i64), u32)], current: &mut Vec<Generator>, found: &mut BTreeSet<Monomial>) {
    let Some(first) = symbols.iter().position(|(_, c)| *c > 0) else {
        found.insert(Monomial::new(current.clone()).expect("pairs of negative symbols"));
        return;
    };
    let (a, _) = symbols[first];
    symbols[first].1 -= 1;
    for partner in first..symbols.len() {
        if symbols[partner].1 == 0 {
            continue;
        }
        let (b, _) = symbols[partner];
        symbols[partner].1 -= 1;
        let (g, _) = canonical_parts(a.0, b.0, a.1, b.1);
        current.push(g);
        pair_up(symbols, current, found);
        current.pop();
        symbols[partner].1 += 1;
    }
    symbols[first].1 += 1;
}

/// All nonzero weights in `Q_+^(1)` of degree `1..=max_degree` whose basis is
/// nonempty (an even number of symbols), i.e. partitions with an even number
/// of parts.
pub fn restricted_weights(max_degree: u64) -> Vec<Weight> {
    let mut out = Vec::new();
    for deg in 1..=max_degree {
        let mut parts = Vec::new();
        partitions(deg, deg, &mut parts, &mut |p: &[u64]| {
            if p.len().is_multiple_of(2) {
                let mut w = Weight::zero();
                for &x in p {
                    w.add(1, -(x as i64), 1);
                }
                out.push(w);
            }
        });
    }
    out
}

fn partitions(rem: u64, max_part: u64, cur: &mut Vec<u64>, emit: &mut dyn FnMut(&[u64])) {
    if rem == 0 {
        emit(cur);
        return;
    }
    for part in (1..=rem.min(max_part)).rev() {
        cur.push(part);
        partitions(rem - part, part, cur, emit);
        cur.pop();
    }
}

/// Every PBW monomial of degree `deg` with indices in `1..=d`.
pub fn degree_basis(d: u32, deg: u64) -> Vec<Monomial> {
    let mut gens: Vec<Generator> = Vec::new();
    for i in 1..=d {
        for j in i..=d {
            for m in -(deg as i64)..0 {
                for n in -(deg as i64)..0 {
                    if (i < j || m <= n) && ((-(m + n)) as u64) <= deg {
                        gens.push(Generator::new(i, j, m, n));
                    }
                }
            }
        }
    }
    gens.sort();
    let mut out = Vec::new();
    let mut cur = Vec::new();
    multisets(&gens, 0, deg, &mut cur, &mut out);
    out
}

fn multisets(gens: &[Generator], start: usize, rem: u64, cur: &mut Vec<Generator>, out: &mut Vec<Monomial>) {
    if rem == 0 {
        out.push(Monomial::new(cur.clone()).expect("negative generators"));
        return;
    }
    for k in start..gens.len() {
        let d = gens[k].degree_shift() as u64;
        if d <= rem {
            cur.push(gens[k]);
            multisets(gens, k, rem - d, cur, out);
            cur.pop();
        }
    }
}

/// Integer multiple of a state, for terse call sites.
pub fn times(u: &State, k: i64) -> State {
    u.scale(&Scalar::constant(rat(k)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::liealg::canonicalize;

    fn v(m: i64, n: i64) -> Generator {
        Generator::v(m, n)
    }

    fn lie(i: u32, j: u32, m: i64, n: i64) -> LieElement {
        canonicalize(i, j, m, n, 3).unwrap()
    }

    fn st(factors: &[Generator]) -> State {
        State::from_factors(factors.to_vec()).unwrap()
    }

    #[test]
    fn lowering_on_single_factor() {
        let out = act(&lie(1, 1, 1, 1), &st(&[v(-1, -1)]));
        assert_eq!(out, State::vacuum().scale(&Scalar::monomial(1, rat(2))));
    }

    #[test]
    fn raising_annihilates_vacuum() {
        assert!(act(&lie(1, 2, 0, 5), &State::vacuum()).is_zero());
        // constants act as scalars: v^11(1,-1) = v^11(-1,1) + 1
        assert_eq!(act(&lie(1, 1, 1, -1), &State::vacuum()), State::vacuum());
    }

    #[test]
    fn lowering_on_square() {
        // v(2,2) v(-2,-2)^2 1 = 8 (r + 2) v(-2,-2) 1
        let out = act(&lie(1, 1, 2, 2), &st(&[v(-2, -2), v(-2, -2)]));
        // 2 m^2 nu (r + 2 nu - 2) with m = 2, nu = 2
        let expect = st(&[v(-2, -2)]).scale(&"16*r + 32".parse().unwrap());
        assert_eq!(out, expect);
    }

    #[test]
    fn act_word_examples() {
        let u = st(&[v(-1, -1)]);
        assert_eq!(act_word(&[], &u), u);
        assert_eq!(act_word(&[lie(1, 1, 1, 1)], &u), State::vacuum().scale(&Scalar::monomial(1, rat(2))));
        let (a, b) = (lie(1, 1, 1, 2), lie(1, 1, -2, -1));
        let vac = State::vacuum();
        let lhs = &act_word(&[a.clone(), b.clone()], &vac) - &act_word(&[b.clone(), a.clone()], &vac);
        assert_eq!(lhs, act(&crate::liealg::bracket_r(&a, &b), &vac));
    }

    #[test]
    fn degrees() {
        assert_eq!(degree_of(&State::vacuum()).unwrap(), Graded::Homogeneous(0));
        let u = st(&[Generator::new(1, 2, -2, -1)]);
        assert_eq!(degree_of(&u).unwrap(), Graded::Homogeneous(3));
        let mixed = &st(&[v(-1, -1)]) + &State::vacuum();
        assert_eq!(degree_of(&mixed).unwrap(), Graded::Mixed);
        assert_eq!(degree_of(&State::zero()), Err(Error::ZeroState));
    }

    #[test]
    fn weights() {
        let w = weight_of(&st(&[v(-1, -1)])).unwrap().homogeneous().unwrap();
        assert_eq!(w, Weight::restricted(&[(-1, 2)]));
        let w = weight_of(&st(&[Generator::new(1, 2, -2, -1)])).unwrap().homogeneous().unwrap();
        assert_eq!(w, Weight::from_counts([((1, -2), 1), ((2, -1), 1)]));
        assert_eq!(weight_of(&State::vacuum()).unwrap(), Graded::Homogeneous(Weight::zero()));
        assert_eq!(weight_of(&State::zero()), Err(Error::ZeroState));
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&Weight::restricted(&[(-1, 2)])), 0);
        assert_eq!(theta(&Weight::from_counts([((1, -2), 1), ((2, -1), 1)])), 1);
        assert_eq!(theta(&Weight::from_counts([((2, -1), 2), ((3, -2), 1)])), 3);
    }

    #[test]
    fn small_weight_spaces() {
        let b = weight_space_basis(&Weight::restricted(&[(-1, 2)]), true);
        assert_eq!(b, vec![Monomial::new(vec![v(-1, -1)]).unwrap()]);
        let b = weight_space_basis(&Weight::restricted(&[(-1, 2), (-2, 2)]), true);
        let mut expect = vec![
            Monomial::new(vec![v(-1, -1), v(-2, -2)]).unwrap(),
            Monomial::new(vec![v(-2, -1), v(-2, -1)]).unwrap(),
        ];
        expect.sort();
        assert_eq!(b, expect);
        assert_eq!(weight_space_basis(&Weight::zero(), false), vec![Monomial::vacuum()]);
        assert!(weight_space_basis(&Weight::restricted(&[(-1, 1)]), true).is_empty());
        assert!(weight_space_basis(&Weight::from_counts([((2, -1), 2)]), true).is_empty());
    }

    #[test]
    fn low_degree_dimensions() {
        assert_eq!(degree_basis(2, 0), vec![Monomial::vacuum()]);
        assert!(degree_basis(2, 1).is_empty());
        assert!(degree_basis(3, 1).is_empty());
        assert_eq!(degree_basis(2, 2).len(), 3);
    }

    #[test]
    fn h_eigenvalue_on_basis() {
        let u = st(&[v(-1, -1), Generator::new(1, 2, -2, -1)]);
        let w = weight_of(&u).unwrap().homogeneous().unwrap();
        for (k, l) in [(1, -1), (1, -2), (2, -1), (2, -2), (1, -3)] {
            let expect = u.scale(&Scalar::int(w.count(k, l) as i64));
            assert_eq!(act(&h_element(k, l), &u), expect, "h_{{{k},{l}}}");
        }
    }

    #[test]
    fn json_round_trip() {
        let u = &st(&[v(-1, -1), v(-2, -2)]) - &st(&[v(-2, -1), v(-2, -1)]).scale(&Scalar::r());
        let j = u.to_json();
        assert_eq!(State::from_json(&j).unwrap(), u);
        let bad = serde_json::json!([{"monomial": [[1, 1, 1, 1]], "coeff": "1"}]);
        assert!(State::from_json(&bad).is_err());
    }

    #[test]
    fn monomial_literal() {
        let m: Monomial = "v[1,1](-2,-1)^2*v[1,1](-1,-1)".parse().unwrap();
        assert_eq!(m.len(), 3);
        assert_eq!(m.to_string(), "v[1,1](-1,-1)*v[1,1](-2,-1)^2");
        assert_eq!("1".parse::<Monomial>().unwrap(), Monomial::vacuum());
        assert!("v[1,1](1,-1)".parse::<Monomial>().is_err());
    }

    #[test]
    fn weight_literal() {
        let w: Weight = "2L[1,-1]+L[1,-2]".parse().unwrap();
        assert_eq!(w, Weight::restricted(&[(-1, 2), (-2, 1)]));
        assert_eq!(w.to_string().parse::<Weight>().unwrap(), w);
        assert!("L[1,2]".parse::<Weight>().is_err());
    }
}
