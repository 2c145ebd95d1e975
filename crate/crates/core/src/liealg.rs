//! Canonical quadratic generators `v^ij(m,n)` and the brackets `[.,.]` and
//! `[.,.]_r` on `L = span(B) + C`.
//!
//! A generator is stored in canonical form: `i < j`, or `i == j` with
//! `m <= n`. Raw quadruples are brought into this form by [`canonicalize`],
//! which may split off a constant (`v^ii(m,-m) = v^ii(-m,m) + m` for `m > 0`).

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::heisenberg::{contraction, Letter, WordSum};
use crate::scalar::{rat, RParam, Rational, Scalar};
use crate::{Error, Result};

/// A canonical element `v^ij(m,n)` of the basis `B`. Field order gives the
/// lexicographic total order on `(i, j, m, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Generator {
    pub i: u32,
    pub j: u32,
    pub m: i64,
    pub n: i64,
}

impl Generator {
    /// Builds a generator that must already be canonical.
    pub fn new(i: u32, j: u32, m: i64, n: i64) -> Self {
        let g = Generator { i, j, m, n };
        debug_assert!(g.is_canonical(), "non-canonical generator {g}");
        g
    }

    /// Shorthand for `v^11(m,n)` with `m <= n` enforced by swapping.
    pub fn v(m: i64, n: i64) -> Self {
        Generator::new(1, 1, m.min(n), m.max(n))
    }

    pub fn is_canonical(&self) -> bool {
        self.i >= 1
            && self.j >= 1
            && (self.i < self.j || (self.i == self.j && self.m <= self.n))
    }

    /// Member of `B_-`: both modes negative.
    pub fn is_negative(&self) -> bool {
        self.m < 0 && self.n < 0
    }

    /// Member of `B_+`.
    pub fn is_raising(&self) -> bool {
        !self.is_negative()
    }

    /// Change in degree when acting: `-(m + n)`.
    pub fn degree_shift(&self) -> i64 {
        -(self.m + self.n)
    }

    pub fn letters(&self) -> (Letter, Letter) {
        (Letter::new(self.i, self.m), Letter::new(self.j, self.n))
    }

    pub fn check_range(&self, d: u32) -> Result<()> {
        for index in [self.i, self.j] {
            if index < 1 || index > d {
                return Err(Error::IndexOutOfRange { index, d });
            }
        }
        Ok(())
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "v[{},{}]({},{})", self.i, self.j, self.m, self.n)
    }
}

/// Parses `v[i,j](m,n)` into a raw quadruple (not yet canonical).
pub fn parse_raw_generator(s: &str) -> Result<(u32, u32, i64, i64)> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || Error::Parse(format!("expected `v[i,j](m,n)`, got `{s}`"));
    let rest = t.strip_prefix("v[").ok_or_else(bad)?;
    let (idx, rest) = rest.split_once(']').ok_or_else(bad)?;
    let modes = rest.strip_prefix('(').and_then(|r| r.strip_suffix(')')).ok_or_else(bad)?;
    let (i, j) = idx.split_once(',').ok_or_else(bad)?;
    let (m, n) = modes.split_once(',').ok_or_else(bad)?;
    Ok((
        i.parse().map_err(|_| bad())?,
        j.parse().map_err(|_| bad())?,
        m.parse().map_err(|_| bad())?,
        n.parse().map_err(|_| bad())?,
    ))
}

impl FromStr for Generator {
    type Err = Error;
    /// Parses a literal that is already canonical and carries no constant.
    fn from_str(s: &str) -> Result<Self> {
        let (i, j, m, n) = parse_raw_generator(s)?;
        let (g, c) = canonical_parts(i, j, m, n);
        if c != 0 {
            return Err(Error::Parse(format!("`{s}` rewrites to {g} + {c}; use canonicalize")));
        }
        Ok(g)
    }
}

/// Canonical generator and integer constant equal to the raw `v^i(m) v^j(n)`.
pub(crate) fn canonical_parts(i: u32, j: u32, m: i64, n: i64) -> (Generator, i64) {
    use std::cmp::Ordering::*;
    match i.cmp(&j) {
        Less => (Generator { i, j, m, n }, 0),
        Greater => (Generator { i: j, j: i, m: n, n: m }, 0),
        Equal if m <= n => (Generator { i, j, m, n }, 0),
        Equal if m == -n => (Generator { i, j, m: n, n: m }, m),
        Equal => (Generator { i, j, m: n, n: m }, 0),
    }
}

/// Canonical form of the raw quadruple `v^ij(m,n)`.
pub fn canonicalize(i: u32, j: u32, m: i64, n: i64, d: u32) -> Result<LieElement> {
    for index in [i, j] {
        if index < 1 || index > d {
            return Err(Error::IndexOutOfRange { index, d });
        }
    }
    let (g, c) = canonical_parts(i, j, m, n);
    let mut x = LieElement::generator(g);
    x.constant = Scalar::int(c);
    Ok(x)
}

/// Element of `L`: a finite combination of canonical generators plus a
/// constant.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct LieElement {
    terms: BTreeMap<Generator, Scalar>,
    pub constant: Scalar,
}

impl LieElement {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn generator(g: Generator) -> Self {
        let mut x = Self::zero();
        x.add_term(g, Scalar::one());
        x
    }

    pub fn constant(c: Scalar) -> Self {
        LieElement { terms: BTreeMap::new(), constant: c }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty() && self.constant.is_zero()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Generator, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, g: &Generator) -> Scalar {
        self.terms.get(g).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, g: Generator, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(g) {
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

    /// Adds `c` times the raw quadratic `v^i(m) v^j(n)`.
    pub fn add_raw(&mut self, i: u32, j: u32, m: i64, n: i64, c: &Scalar) {
        let (g, k) = canonical_parts(i, j, m, n);
        self.add_term(g, c.clone());
        if k != 0 {
            self.constant += c.scale(&rat(k));
        }
    }

    pub fn add_scaled(&mut self, other: &LieElement, c: &Scalar) {
        for (g, x) in &other.terms {
            self.add_term(*g, x * c);
        }
        self.constant += &other.constant * c;
    }

    pub fn scale(&self, c: &Scalar) -> LieElement {
        let mut out = LieElement::zero();
        out.add_scaled(self, c);
        out
    }

    /// Substitutes `r = r0` into every coefficient; generic `r` is a no-op.
    pub fn specialize(&self, r: &RParam) -> LieElement {
        let mut out = LieElement::constant(r.specialize(&self.constant));
        for (g, c) in &self.terms {
            out.add_term(*g, r.specialize(c));
        }
        out
    }

    /// Largest index appearing in any generator.
    pub fn max_index(&self) -> u32 {
        self.terms.keys().map(|g| g.j.max(g.i)).max().unwrap_or(0)
    }
}

impl std::ops::Add<&LieElement> for &LieElement {
    type Output = LieElement;
    fn add(self, rhs: &LieElement) -> LieElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::one());
        out
    }
}

impl std::ops::Sub<&LieElement> for &LieElement {
    type Output = LieElement;
    fn sub(self, rhs: &LieElement) -> LieElement {
        let mut out = self.clone();
        out.add_scaled(rhs, &Scalar::int(-1));
        out
    }
}

pub(crate) fn write_coeff_term(f: &mut fmt::Formatter<'_>, first: bool, c: &Scalar, body: &str) -> fmt::Result {
    let single = c.terms().count() == 1;
    let (neg, mag) = match c.leading_coeff() {
        Some(k) if single && *k < Rational::zero() => (true, -c),
        _ => (false, c.clone()),
    };
    let sep = match (first, neg) {
        (true, true) => "-",
        (true, false) => "",
        (false, true) => " - ",
        (false, false) => " + ",
    };
    f.write_str(sep)?;
    if body.is_empty() {
        return if single || first { write!(f, "{mag}") } else { write!(f, "({mag})") };
    }
    if mag.is_one() {
        f.write_str(body)
    } else if single {
        write!(f, "{mag}*{body}")
    } else {
        write!(f, "({mag})*{body}")
    }
}

impl fmt::Display for LieElement {
    /// Generators in descending order, then the constant.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (g, c) in self.terms.iter().rev() {
            write_coeff_term(f, first, c, &g.to_string())?;
            first = false;
        }
        if !self.constant.is_zero() {
            write_coeff_term(f, first, &self.constant, "")?;
        }
        Ok(())
    }
}

/// Four-contraction commutator of two generators in `U(h)/<c-1>`.
///
/// With `x = AB`, `y = CD`:
/// `[AB, CD] = [B,C] AD + [B,D] AC + [A,C] DB + [A,D] CB`.
/// Returns the generator part with rational coefficients and the constant.
pub fn bracket_generators(x: &Generator, y: &Generator) -> (Vec<(Generator, i64)>, i64) {
    let (a, b) = x.letters();
    let (c, d) = y.letters();
    let mut out: Vec<(Generator, i64)> = Vec::with_capacity(4);
    let mut constant = 0i64;
    for (z, p, q) in [
        (contraction(b, c), a, d),
        (contraction(b, d), a, c),
        (contraction(a, c), d, b),
        (contraction(a, d), c, b),
    ] {
        if z == 0 {
            continue;
        }
        let (g, k) = canonical_parts(p.i, q.i, p.m, q.m);
        constant += z * k;
        match out.iter_mut().find(|(h, _)| *h == g) {
            Some(slot) => slot.1 += z,
            None => out.push((g, z)),
        }
    }
    out.retain(|(_, c)| *c != 0);
    (out, constant)
}

/// `[x, y]_r` for two generators: the commutator with its constant scaled by `r`.
pub fn bracket_r_generators(x: &Generator, y: &Generator) -> LieElement {
    let (terms, k) = bracket_generators(x, y);
    let mut out = LieElement::zero();
    for (g, c) in terms {
        out.add_term(g, Scalar::int(c));
    }
    out.constant = Scalar::monomial(1, rat(k));
    out
}

/// The same commutator computed by expanding into Heisenberg words and
/// normal-ordering both products.
pub fn bracket_generators_generic(x: &Generator, y: &Generator) -> (Vec<(Generator, Rational)>, Rational) {
    let word = |g: &Generator| {
        let (a, b) = g.letters();
        let mut s = WordSum::new();
        s.add_word(&[a, b], rat(1));
        s
    };
    let comm = word(x).commutator(&word(y));
    let mut terms = Vec::new();
    let mut constant = Rational::zero();
    for (w, c) in comm.terms() {
        match w.as_slice() {
            [] => constant += c,
            [p, q] => terms.push((Generator::new(p.i, q.i, p.m, q.m), c.clone())),
            other => panic!("commutator left L: word of length {}", other.len()),
        }
    }
    (terms, constant)
}

fn bilinear(x: &LieElement, y: &LieElement, deform: bool, generic: bool) -> LieElement {
    let mut out = LieElement::zero();
    let scale_const = |k: Rational| {
        if deform {
            Scalar::monomial(1, k)
        } else {
            Scalar::constant(k)
        }
    };
    for (g, cg) in &x.terms {
        for (h, ch) in &y.terms {
            let c = cg * ch;
            if generic {
                let (terms, k) = bracket_generators_generic(g, h);
                for (t, ct) in terms {
                    out.add_term(t, c.scale(&ct));
                }
                out.constant += &c * &scale_const(k);
            } else {
                let (terms, k) = bracket_generators(g, h);
                for (t, ct) in terms {
                    out.add_term(t, c.scale(&rat(ct)));
                }
                out.constant += &c * &scale_const(rat(k));
            }
        }
    }
    out
}

/// The commutator `[x, y] = xy - yx` in `U(h)/<c-1>`. Constants are central.
pub fn bracket(x: &LieElement, y: &LieElement) -> LieElement {
    bilinear(x, y, false, false)
}

/// The deformed bracket: `pi_1([x,y]) + r pi_2([x,y])`.
pub fn bracket_r(x: &LieElement, y: &LieElement) -> LieElement {
    bilinear(x, y, true, false)
}

/// [`bracket_r`] computed through generic word reordering.
pub fn bracket_r_generic(x: &LieElement, y: &LieElement) -> LieElement {
    bilinear(x, y, true, true)
}

/// All canonical generators with indices in `1..=d` and modes in
/// `[-bound, bound]`.
pub fn generators_in_box(d: u32, bound: i64) -> Vec<Generator> {
    let mut out = Vec::new();
    for i in 1..=d {
        for j in i..=d {
            for m in -bound..=bound {
                for n in -bound..=bound {
                    if i < j || m <= n {
                        out.push(Generator { i, j, m, n });
                    }
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(i: u32, j: u32, m: i64, n: i64) -> LieElement {
        canonicalize(i, j, m, n, 3).unwrap()
    }

    #[test]
    fn canonicalize_examples() {
        let x = g(2, 1, -1, -2);
        assert_eq!(x, LieElement::generator(Generator::new(1, 2, -2, -1)));
        let y = g(1, 1, 3, -3);
        assert_eq!(y.coeff(&Generator::new(1, 1, -3, 3)), Scalar::one());
        assert_eq!(y.constant, Scalar::int(3));
        assert_eq!(g(1, 2, 0, 5), LieElement::generator(Generator::new(1, 2, 0, 5)));
        assert_eq!(g(1, 1, 4, 2), LieElement::generator(Generator::new(1, 1, 2, 4)));
        assert_eq!(g(1, 1, -3, 3).constant, Scalar::zero());
    }

    #[test]
    fn canonicalize_rejects_bad_index() {
        assert_eq!(canonicalize(0, 1, 1, 1, 2), Err(Error::IndexOutOfRange { index: 0, d: 2 }));
        assert_eq!(canonicalize(1, 3, 1, 1, 2), Err(Error::IndexOutOfRange { index: 3, d: 2 }));
    }

    #[test]
    fn two_mode_bracket_example() {
        let x = g(1, 1, 1, 2);
        let y = g(1, 1, -2, -1);
        let plain = bracket(&x, &y);
        assert_eq!(plain.coeff(&Generator::v(-1, 1)), Scalar::int(2));
        assert_eq!(plain.coeff(&Generator::v(-2, 2)), Scalar::int(1));
        assert_eq!(plain.constant, Scalar::int(2));
        let deformed = bracket_r(&x, &y);
        assert_eq!(deformed.constant, Scalar::monomial(1, rat(2)));
        assert_eq!(deformed.to_string(), "2*v[1,1](-1,1) + v[1,1](-2,2) + 2*r");
    }

    #[test]
    fn mixed_sign_brackets() {
        // [v(-1,2), v(-2,-3)]_r = 2 v(-1,-3)
        let b = bracket_r(&g(1, 1, -1, 2), &g(1, 1, -2, -3));
        assert_eq!(b, LieElement::generator(Generator::v(-3, -1)).scale(&Scalar::int(2)));
        // [v(2,2), v(-2,-3)]_r = 4 v(-3,2)
        let b = bracket_r(&g(1, 1, 2, 2), &g(1, 1, -2, -3));
        assert_eq!(b, LieElement::generator(Generator::v(-3, 2)).scale(&Scalar::int(4)));
    }

    #[test]
    fn disjoint_indices_commute() {
        assert!(bracket_r(&g(1, 1, -1, -1), &g(2, 2, -1, -1)).is_zero());
        assert!(bracket_r(&g(1, 1, 1, 1), &g(2, 2, -1, -1)).is_zero());
    }

    #[test]
    fn fast_path_matches_word_reordering() {
        let gens = generators_in_box(2, 3);
        for x in &gens {
            for y in &gens {
                let (fast, k) = bracket_generators(x, y);
                let (slow, k2) = bracket_generators_generic(x, y);
                assert_eq!(rat(k), k2, "{x} {y}");
                let mut a: Vec<_> = fast.into_iter().map(|(g, c)| (g, rat(c))).collect();
                let mut b = slow;
                a.sort();
                b.sort();
                assert_eq!(a, b, "{x} {y}");
            }
        }
    }

    #[test]
    fn generator_literal_round_trip() {
        let g: Generator = "v[1,2](-3, 4)".parse().unwrap();
        assert_eq!(g, Generator::new(1, 2, -3, 4));
        assert_eq!(g.to_string(), "v[1,2](-3,4)");
        assert!("v[1,1](3,-3)".parse::<Generator>().is_err());
        assert!("w[1,1](1,1)".parse::<Generator>().is_err());
    }
}
