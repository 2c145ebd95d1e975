//! The degree-two product `a . b = a_1 b` on `span{omega^ij}` and its
//! identification with symmetric matrices under `A.B = (AB+BA)/2`.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::fock::{degree_basis, weight_space_basis, Monomial, State, Weight};
use crate::liealg::Generator;
use crate::scalar::{rat, ratio, Rational, Scalar};
use crate::suite::Check;
use crate::virops::act_l;
use crate::{Error, Result};

/// `omega^kl = (1/2) v^kl(-1,-1) 1`.
pub fn omega(k: u32, l: u32) -> State {
    let (a, b) = (k.min(l), k.max(l));
    State::monomial(Monomial::new(vec![Generator::new(a, b, -1, -1)]).expect("negative"))
        .scale(&Scalar::constant(ratio(1, 2)))
}

/// `omega^ij . omega^kl = L^ij(0) omega^kl`.
pub fn griess_product(i: u32, j: u32, k: u32, l: u32) -> State {
    act_l(i, j, 0, &omega(k, l))
}

/// Basis labels `(i,j)`, `i <= j`, in lexicographic order.
pub fn omega_basis(d: u32) -> Vec<(u32, u32)> {
    (1..=d).flat_map(|i| (i..=d).map(move |j| (i, j))).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GriessTable {
    pub d: u32,
    pub basis: Vec<(u32, u32)>,
    /// `(a, b) -> coordinates of basis[a] . basis[b]` in the omega basis.
    pub products: BTreeMap<(usize, usize), Vec<Scalar>>,
}

/// Coordinates of a degree-two state in the omega basis, or `None` if it
/// leaves the span.
fn omega_coords(u: &State, basis: &[(u32, u32)]) -> Option<Vec<Scalar>> {
    let mut out = vec![Scalar::zero(); basis.len()];
    for (mono, c) in u.terms() {
        let [g] = mono.factors() else { return None };
        if g.m != -1 || g.n != -1 {
            return None;
        }
        let pos = basis.iter().position(|&(i, j)| (i, j) == (g.i, g.j))?;
        out[pos] = c.scale(&rat(2));
    }
    Some(out)
}

impl GriessTable {
    pub fn build(d: u32) -> Result<Self> {
        let basis = omega_basis(d);
        let mut products = BTreeMap::new();
        for (a, &(i, j)) in basis.iter().enumerate() {
            for (b, &(k, l)) in basis.iter().enumerate() {
                let prod = griess_product(i, j, k, l);
                let coords = omega_coords(&prod, &basis).ok_or_else(|| {
                    Error::InvalidArgument(format!("omega^{i}{j} . omega^{k}{l} = {prod} leaves the omega span"))
                })?;
                products.insert((a, b), coords);
            }
        }
        Ok(GriessTable { d, basis, products })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn product(&self, a: usize, b: usize) -> &[Scalar] {
        &self.products[&(a, b)]
    }

    /// Bilinear extension to coordinate vectors.
    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        let mut out = vec![Scalar::zero(); self.dim()];
        for (a, xa) in x.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (b, yb) in y.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let w = xa * yb;
                for (o, t) in out.iter_mut().zip(self.product(a, b)) {
                    *o += t * &w;
                }
            }
        }
        out
    }

    pub fn unit(&self, a: usize) -> Vec<Scalar> {
        let mut v = vec![Scalar::zero(); self.dim()];
        v[a] = Scalar::one();
        v
    }

    pub fn check_commutative(&self) -> std::result::Result<(), String> {
        for a in 0..self.dim() {
            for b in 0..self.dim() {
                if self.product(a, b) != self.product(b, a) {
                    return Err(format!("{:?} . {:?} is not symmetric", self.basis[a], self.basis[b]));
                }
            }
        }
        Ok(())
    }

    pub fn check_r_independent(&self) -> std::result::Result<(), String> {
        for ((a, b), v) in &self.products {
            if v.iter().any(|c| c.as_constant().is_none()) {
                return Err(format!("{:?} . {:?} depends on r", self.basis[*a], self.basis[*b]));
            }
        }
        Ok(())
    }

    /// Linearized Jordan identity on every basis quadruple:
    /// `((xy)w)z + ((yz)w)x + ((zx)w)y = (xy)(wz) + (yz)(wx) + (zx)(wy)`.
    pub fn check_jordan(&self) -> std::result::Result<(), String> {
        let n = self.dim();
        let e: Vec<Vec<Scalar>> = (0..n).map(|a| self.unit(a)).collect();
        let add3 = |p: Vec<Scalar>, q: Vec<Scalar>, s: Vec<Scalar>| -> Vec<Scalar> {
            p.iter().zip(&q).zip(&s).map(|((a, b), c)| &(a + b) + c).collect()
        };
        for x in 0..n {
            for y in 0..n {
                let xy = self.mul(&e[x], &e[y]);
                for z in 0..n {
                    let yz = self.mul(&e[y], &e[z]);
                    let zx = self.mul(&e[z], &e[x]);
                    for w in 0..n {
                        let lhs = add3(
                            self.mul(&self.mul(&xy, &e[w]), &e[z]),
                            self.mul(&self.mul(&yz, &e[w]), &e[x]),
                            self.mul(&self.mul(&zx, &e[w]), &e[y]),
                        );
                        let rhs = add3(
                            self.mul(&xy, &self.mul(&e[w], &e[z])),
                            self.mul(&yz, &self.mul(&e[w], &e[x])),
                            self.mul(&zx, &self.mul(&e[w], &e[y])),
                        );
                        if lhs != rhs {
                            let b = &self.basis;
                            return Err(format!("fails at ({:?},{:?},{:?},{:?})", b[x], b[y], b[z], b[w]));
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `x^2 . (y . x) = (x^2 . y) . x` on the given vectors.
    pub fn jordan_holds_on(&self, x: &[Scalar], y: &[Scalar]) -> bool {
        let x2 = self.mul(x, x);
        self.mul(&x2, &self.mul(y, x)) == self.mul(&self.mul(&x2, y), x)
    }
}

type Matrix = Vec<Vec<Rational>>;

fn sym_unit(d: usize, i: usize, j: usize) -> Matrix {
    let mut m = vec![vec![Rational::zero(); d]; d];
    m[i][j] = rat(1);
    m[j][i] = rat(1);
    m
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let d = a.len();
    (0..d).map(|i| (0..d).map(|j| (0..d).map(|k| &a[i][k] * &b[k][j]).sum()).collect()).collect()
}

/// `(AB + BA) / 2`.
pub fn jordan_product(a: &Matrix, b: &Matrix) -> Matrix {
    let ab = mat_mul(a, b);
    let ba = mat_mul(b, a);
    ab.iter().zip(&ba).map(|(x, y)| x.iter().zip(y).map(|(p, q)| (p + q) * ratio(1, 2)).collect()).collect()
}

fn rational_sqrt(x: &Rational) -> Option<Rational> {
    if x.is_negative() {
        return None;
    }
    let (n, d) = (x.numer().sqrt(), x.denom().sqrt());
    let root = Rational::new(n, d);
    (&root * &root == *x).then_some(root)
}

/// The diagonal rescaling `omega^ii -> a E_ii`, `omega^ij -> b (E_ij + E_ji)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Scaling {
    pub diagonal: String,
    pub off_diagonal: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct JordanReport {
    pub d: u32,
    pub dim: usize,
    pub checks: Vec<Check>,
    pub scaling: Option<Scaling>,
}

impl JordanReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed) && self.scaling.is_some()
    }
}

/// Finds `(a, b)` from `omega^11 . omega^11 = a omega^11` and
/// `omega^12 . omega^12 = k (omega^11 + omega^22)` with `b^2 = k a`, then
/// checks that the map is a homomorphism on every basis pair.
pub fn find_isomorphism(t: &GriessTable) -> Result<(Rational, Rational)> {
    let d = t.d as usize;
    let idx = |i: u32, j: u32| t.basis.iter().position(|&p| p == (i, j)).expect("basis label");
    let constant = |c: &Scalar| c.as_constant().ok_or_else(|| Error::NoIsomorphism("r-dependent constants".into()));
    let a = constant(&t.product(idx(1, 1), idx(1, 1))[idx(1, 1)])?;
    if a.is_zero() {
        return Err(Error::NoIsomorphism("omega^11 squares to zero".into()));
    }
    let b = if d >= 2 {
        let k = constant(&t.product(idx(1, 2), idx(1, 2))[idx(1, 1)])?;
        rational_sqrt(&(&k * &a)).ok_or_else(|| Error::NoIsomorphism(format!("b^2 = {} has no rational root", &k * &a)))?
    } else {
        rat(1)
    };
    let image = |pos: usize| -> Matrix {
        let (i, j) = t.basis[pos];
        let (i, j) = (i as usize - 1, j as usize - 1);
        let mut m = sym_unit(d, i, j);
        let s = if i == j { &a } else { &b };
        for row in m.iter_mut() {
            for x in row.iter_mut() {
                *x *= s;
            }
        }
        m
    };
    let images: Vec<Matrix> = (0..t.dim()).map(image).collect();
    for x in 0..t.dim() {
        for y in 0..t.dim() {
            let lhs = jordan_product(&images[x], &images[y]);
            let mut rhs = vec![vec![Rational::zero(); d]; d];
            for (z, c) in t.product(x, y).iter().enumerate() {
                let c = constant(c)?;
                for (row, img_row) in rhs.iter_mut().zip(&images[z]) {
                    for (o, v) in row.iter_mut().zip(img_row) {
                        *o += &c * v;
                    }
                }
            }
            if lhs != rhs {
                return Err(Error::NoIsomorphism(format!(
                    "a = {a}, b = {b}: fails on {:?} . {:?}",
                    t.basis[x], t.basis[y]
                )));
            }
        }
    }
    Ok((a, b))
}

/// `dim (V_J)_2`, counted both from the degree-two PBW basis and by summing
/// weight spaces of degree two.
pub fn degree_two_dims(d: u32) -> (usize, usize) {
    let direct = degree_basis(d, 2).len();
    let mut by_weight = 0;
    for k in 1..=d {
        for l in k..=d {
            let w = Weight::from_counts([((k, -1), 1), ((l, -1), 1)]);
            by_weight += weight_space_basis(&w, false).len();
        }
        by_weight += weight_space_basis(&Weight::from_counts([((k, -2), 1)]), false).len();
    }
    (direct, by_weight)
}

/// Full verification for one `d`.
pub fn jordan_verify(d: u32) -> Result<JordanReport> {
    if d < 1 {
        return Err(Error::InvalidArgument("d must be positive".into()));
    }
    let table = GriessTable::build(d)?;
    let expected = (d * (d + 1) / 2) as usize;
    let (direct, by_weight) = degree_two_dims(d);
    let dims = if direct == expected && by_weight == expected && table.dim() == expected {
        Ok(())
    } else {
        Err(format!("dims {direct}, {by_weight}, {} vs d(d+1)/2 = {expected}", table.dim()))
    };
    let mut checks = vec![
        Check::from_result(format!("degree-two dimension d={d}"), dims),
        Check::from_result(format!("commutativity d={d}"), table.check_commutative()),
        Check::from_result(format!("r-independence d={d}"), table.check_r_independent()),
        Check::from_result(format!("jordan identity d={d}"), table.check_jordan()),
    ];
    let (scaling, iso) = match find_isomorphism(&table) {
        Ok((a, b)) => (Some(Scaling { diagonal: a.to_string(), off_diagonal: b.to_string() }), Ok(())),
        Err(e) => (None, Err(e.to_string())),
    };
    checks.push(Check::from_result(format!("isomorphism onto Sym_{d}"), iso));
    Ok(JordanReport { d, dim: table.dim(), checks, scaling })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn big(n: i64) -> BigInt {
        BigInt::from(n)
    }

    fn coords(t: &GriessTable, u: &State) -> Vec<Scalar> {
        omega_coords(u, &t.basis).unwrap()
    }

    #[test]
    fn products_by_hand() {
        let t = GriessTable::build(2).unwrap();
        assert!(griess_product(1, 1, 2, 2).is_zero());
        assert_eq!(griess_product(1, 1, 1, 1), omega(1, 1).scale(&Scalar::int(2)));
        let sq = griess_product(1, 2, 1, 2);
        let half = Scalar::constant(ratio(1, 2));
        assert_eq!(sq, (&omega(1, 1) + &omega(2, 2)).scale(&half));
        assert_eq!(coords(&t, &sq), vec![half.clone(), Scalar::zero(), half]);
    }

    #[test]
    fn table_properties() {
        for d in [2, 3] {
            let t = GriessTable::build(d).unwrap();
            assert_eq!(t.dim(), (d * (d + 1) / 2) as usize);
            t.check_commutative().unwrap();
            t.check_r_independent().unwrap();
            t.check_jordan().unwrap();
            let (a, b) = find_isomorphism(&t).unwrap();
            assert_eq!((a, b.abs()), (rat(2), rat(1)));
        }
    }

    #[test]
    fn verify_report() {
        let rep = jordan_verify(2).unwrap();
        assert!(rep.passed(), "{:?}", rep.checks);
        assert_eq!(rep.scaling.unwrap().diagonal, "2");
    }

    #[test]
    fn square_roots() {
        assert_eq!(rational_sqrt(&ratio(9, 4)), Some(ratio(3, 2)));
        assert_eq!(rational_sqrt(&rat(2)), None);
        assert_eq!(rational_sqrt(&rat(-1)), None);
        assert_eq!(rational_sqrt(&Rational::from_integer(big(1) << 80)), Some(Rational::from_integer(big(1) << 40)));
    }

    #[test]
    fn wrong_scaling_is_rejected() {
        let t = GriessTable::build(2).unwrap();
        let x = t.unit(0);
        let y = t.unit(1);
        assert!(t.jordan_holds_on(&x, &y));
        let mut bad = t.clone();
        bad.products.insert((1, 1), vec![Scalar::one(), Scalar::zero(), Scalar::zero()]);
        assert!(find_isomorphism(&bad).is_err());
    }
}
