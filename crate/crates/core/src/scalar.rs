//! Exact arithmetic in `Q[r]`, polynomials in the central-charge parameter `r`
//! with arbitrary-precision rational coefficients.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// Exact rational number.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `"3"`, `"-7/2"`.
pub fn parse_rational(s: &str) -> Result<Rational, Error> {
    let s = s.trim();
    let bad = || Error::Parse(format!("invalid rational literal `{s}`"));
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::Parse(format!("zero denominator in `{s}`")));
            }
            Ok(Rational::new(n, d))
        }
        None => Ok(Rational::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

/// The value of the parameter `r`: either left symbolic or specialized to a
/// rational number.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum RParam {
    Generic,
    Value(Rational),
}

impl RParam {
    pub fn value(n: i64) -> Self {
        RParam::Value(rat(n))
    }

    pub fn is_generic(&self) -> bool {
        matches!(self, RParam::Generic)
    }

    /// Specializes `p`; the generic parameter leaves it untouched.
    pub fn specialize(&self, p: &Scalar) -> Scalar {
        match self {
            RParam::Generic => p.clone(),
            RParam::Value(r0) => Scalar::constant(p.evaluate(r0)),
        }
    }
}

impl FromStr for RParam {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        if s.trim().eq_ignore_ascii_case("generic") {
            Ok(RParam::Generic)
        } else {
            parse_rational(s).map(RParam::Value)
        }
    }
}

impl fmt::Display for RParam {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RParam::Generic => f.write_str("generic"),
            RParam::Value(v) => write!(f, "{v}"),
        }
    }
}

/// A polynomial in `r` over `Q`, stored sparsely by ascending degree with no
/// zero coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Scalar {
    terms: Vec<(u32, Rational)>,
}

impl Scalar {
    pub fn zero() -> Self {
        Scalar { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Scalar::constant(Rational::one())
    }

    /// The indeterminate `r`.
    pub fn r() -> Self {
        Scalar::monomial(1, Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Scalar::monomial(0, c)
    }

    pub fn int(n: i64) -> Self {
        Scalar::constant(rat(n))
    }

    pub fn monomial(deg: u32, c: Rational) -> Self {
        if c.is_zero() {
            Scalar::zero()
        } else {
            Scalar { terms: vec![(deg, c)] }
        }
    }

    /// Builds from dense coefficients `c0 + c1 r + c2 r^2 + ...`.
    pub fn from_coeffs<I: IntoIterator<Item = Rational>>(coeffs: I) -> Self {
        let terms = coeffs
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as u32, c))
            .collect();
        Scalar { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0].0 == 0 && self.terms[0].1.is_one()
    }

    /// Degree in `r`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.last().map(|(d, _)| *d)
    }

    /// Returns the constant value when the polynomial has degree <= 0.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(0, c)] => Some(c.clone()),
            _ => None,
        }
    }

    pub fn coeff(&self, deg: u32) -> Rational {
        self.terms
            .binary_search_by_key(&deg, |(d, _)| *d)
            .map(|k| self.terms[k].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    pub fn leading_coeff(&self) -> Option<&Rational> {
        self.terms.last().map(|(_, c)| c)
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.terms.iter().map(|(d, c)| (*d, c))
    }

    pub fn evaluate(&self, r0: &Rational) -> Rational {
        // Horner over the sparse representation.
        let mut acc = Rational::zero();
        let mut prev = match self.degree() {
            Some(d) => d,
            None => return acc,
        };
        for (d, c) in self.terms.iter().rev() {
            for _ in *d..prev {
                acc *= r0;
            }
            acc += c;
            prev = *d;
        }
        for _ in 0..prev {
            acc *= r0;
        }
        acc
    }

    pub fn scale(&self, c: &Rational) -> Scalar {
        if c.is_zero() {
            return Scalar::zero();
        }
        Scalar {
            terms: self.terms.iter().map(|(d, x)| (*d, x * c)).collect(),
        }
    }

    /// Exact division; `None` when `divisor` is zero or does not divide `self`.
    pub fn div_exact(&self, divisor: &Scalar) -> Option<Scalar> {
        let (q, rem) = self.div_rem(divisor)?;
        rem.is_zero().then_some(q)
    }

    /// Euclidean division in `Q[r]`.
    pub fn div_rem(&self, divisor: &Scalar) -> Option<(Scalar, Scalar)> {
        let dd = divisor.degree()?;
        let lc = divisor.leading_coeff()?.clone();
        let mut rem = self.clone();
        let mut quot = Scalar::zero();
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let t = Scalar::monomial(rd - dd, rem.leading_coeff().unwrap() / &lc);
            rem = &rem - &(&t * divisor);
            quot += &t;
        }
        Some((quot, rem))
    }

    fn merge(a: &[(u32, Rational)], b: &[(u32, Rational)], negate_b: bool) -> Scalar {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let (mut x, mut y) = (0, 0);
        while x < a.len() || y < b.len() {
            let take_a = y >= b.len() || (x < a.len() && a[x].0 < b[y].0);
            let take_b = x >= a.len() || (y < b.len() && b[y].0 < a[x].0);
            if take_a {
                out.push(a[x].clone());
                x += 1;
            } else if take_b {
                let c = if negate_b { -&b[y].1 } else { b[y].1.clone() };
                out.push((b[y].0, c));
                y += 1;
            } else {
                let c = if negate_b { &a[x].1 - &b[y].1 } else { &a[x].1 + &b[y].1 };
                if !c.is_zero() {
                    out.push((a[x].0, c));
                }
                x += 1;
                y += 1;
            }
        }
        Scalar { terms: out }
    }
}

impl From<Rational> for Scalar {
    fn from(c: Rational) -> Self {
        Scalar::constant(c)
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::int(n)
    }
}

impl Add<&Scalar> for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        Scalar::merge(&self.terms, &rhs.terms, false)
    }
}

impl Sub<&Scalar> for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        Scalar::merge(&self.terms, &rhs.terms, true)
    }
}

impl Mul<&Scalar> for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        if self.is_zero() || rhs.is_zero() {
            return Scalar::zero();
        }
        if let [(0, c)] = self.terms.as_slice() {
            return rhs.scale(c);
        }
        if let [(0, c)] = rhs.terms.as_slice() {
            return self.scale(c);
        }
        let deg = (self.degree().unwrap() + rhs.degree().unwrap()) as usize;
        let mut dense = vec![Rational::zero(); deg + 1];
        for (da, ca) in &self.terms {
            for (db, cb) in &rhs.terms {
                dense[(da + db) as usize] += ca * cb;
            }
        }
        Scalar::from_coeffs(dense)
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar {
            terms: self.terms.iter().map(|(d, c)| (*d, -c)).collect(),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(mut self) -> Scalar {
        for (_, c) in &mut self.terms {
            *c = -c.clone();
        }
        self
    }
}

macro_rules! forward_binop {
    ($tr:ident, $f:ident) => {
        impl $tr<Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: Scalar) -> Scalar {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $f(self, rhs: &Scalar) -> Scalar {
                (&self).$f(rhs)
            }
        }
        impl $tr<Scalar> for &Scalar {
            type Output = Scalar;
            fn $f(self, rhs: Scalar) -> Scalar {
                self.$f(&rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl AddAssign<Scalar> for Scalar {
    fn add_assign(&mut self, rhs: Scalar) {
        *self = &*self + &rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (deg, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if k == 0 {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            let var = match deg {
                0 => String::new(),
                1 => "r".to_string(),
                d => format!("r^{d}"),
            };
            match (var.is_empty(), abs.is_one()) {
                (true, _) => write!(f, "{abs}")?,
                (false, true) => f.write_str(&var)?,
                (false, false) => write!(f, "{abs}*{var}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for Scalar {
    type Err = Error;

    /// Accepts sums of terms like `3/2*r^2`, `-r`, `7`, `2 r`.
    fn from_str(s: &str) -> Result<Self, Error> {
        let src = s;
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial literal".into()));
        }
        let mut pieces = Vec::new();
        let mut start = 0;
        let bytes = s.as_bytes();
        for (k, &b) in bytes.iter().enumerate() {
            if (b == b'+' || b == b'-') && k > start && bytes[k - 1] != b'^' {
                pieces.push(&s[start..k]);
                start = k;
            }
        }
        pieces.push(&s[start..]);

        let mut acc = Scalar::zero();
        for piece in pieces {
            let (sign, body) = match piece.as_bytes().first() {
                Some(b'+') => (Rational::one(), &piece[1..]),
                Some(b'-') => (-Rational::one(), &piece[1..]),
                _ => (Rational::one(), piece),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("dangling sign in `{src}`")));
            }
            let (coef, var) = match body.find('r') {
                None => (parse_rational(body)?, None),
                Some(pos) => {
                    let c = body[..pos].trim_end_matches('*');
                    let c = if c.is_empty() { Rational::one() } else { parse_rational(c)? };
                    (c, Some(&body[pos + 1..]))
                }
            };
            let deg = match var {
                None => 0,
                Some("") => 1,
                Some(e) => e
                    .strip_prefix('^')
                    .and_then(|e| e.parse::<u32>().ok())
                    .ok_or_else(|| Error::Parse(format!("bad exponent in `{src}`")))?,
            };
            acc += Scalar::monomial(deg, sign * coef);
        }
        Ok(acc)
    }
}
