//! Exact linear algebra over `Q` and `Q[r]`.

use num_traits::{One, Zero};

use crate::scalar::{Rational, Scalar};

/// Basis of the right nullspace of `rows` (each of length `ncols`), from the
/// reduced row echelon form. Free variables get coefficient 1 in turn.
pub fn kernel_basis(rows: &[Vec<Rational>], ncols: usize) -> Vec<Vec<Rational>> {
    let mut a: Vec<Vec<Rational>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        let Some(p) = (row..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(row, p);
        let inv = Rational::one() / &a[row][col];
        for x in a[row].iter_mut() {
            *x *= &inv;
        }
        for r in 0..a.len() {
            if r == row || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for c in col..ncols {
                let t = &f * &a[row][c];
                a[r][c] -= t;
            }
        }
        pivots.push(col);
        row += 1;
        if row == a.len() {
            break;
        }
    }
    let mut basis = Vec::new();
    for free in (0..ncols).filter(|c| !pivots.contains(c)) {
        let mut v = vec![Rational::zero(); ncols];
        v[free] = Rational::one();
        for (k, &pc) in pivots.iter().enumerate() {
            v[pc] = -a[k][free].clone();
        }
        basis.push(v);
    }
    basis
}

/// Rank over `Q(r)` of a matrix with entries in `Q[r]`, by fraction-free
/// (Bareiss) elimination so every division is exact in `Q[r]`.
pub fn rank_over_polynomials(rows: &[Vec<Scalar>], ncols: usize) -> usize {
    let mut a: Vec<Vec<Scalar>> = rows.iter().filter(|r| r.iter().any(|x| !x.is_zero())).cloned().collect();
    let mut prev = Scalar::one();
    let mut rank = 0;
    for col in 0..ncols {
        if rank == a.len() {
            break;
        }
        let Some(p) = (rank..a.len()).find(|&r| !a[r][col].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let piv = a[rank][col].clone();
        for r in rank + 1..a.len() {
            let lead = a[r][col].clone();
            for c in col..ncols {
                let num = &(&piv * &a[r][c]) - &(&lead * &a[rank][c]);
                a[r][c] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = piv;
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&x| rat(x)).collect()).collect()
    }

    fn apply(a: &[Vec<Rational>], v: &[Rational]) -> Vec<Rational> {
        a.iter().map(|r| r.iter().zip(v).map(|(x, y)| x * y).sum()).collect()
    }

    #[test]
    fn identity_has_trivial_kernel() {
        assert!(kernel_basis(&m(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]), 3).is_empty());
    }

    #[test]
    fn zero_matrix_has_full_kernel() {
        assert_eq!(kernel_basis(&m(&[&[0, 0, 0], &[0, 0, 0]]), 3).len(), 3);
        assert_eq!(kernel_basis(&m(&[&[0]]), 1).len(), 1);
        assert_eq!(kernel_basis(&[], 2).len(), 2);
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let a = m(&[&[1, 2, 3, 4], &[2, 4, 6, 8], &[0, 1, -1, 2]]);
        let k = kernel_basis(&a, 4);
        assert_eq!(k.len(), 2);
        for v in &k {
            assert!(apply(&a, v).iter().all(Zero::is_zero));
        }
    }

    #[test]
    fn polynomial_rank() {
        let r = Scalar::r();
        let one = Scalar::one();
        // [[r, 1], [1, r]] has rank 2 over Q(r), but drops at r = +-1
        let a = vec![vec![r.clone(), one.clone()], vec![one.clone(), r.clone()]];
        assert_eq!(rank_over_polynomials(&a, 2), 2);
        let b = vec![vec![r.clone(), &r * &r], vec![one.clone(), r.clone()]];
        assert_eq!(rank_over_polynomials(&b, 2), 1);
        assert_eq!(rank_over_polynomials(&[vec![Scalar::zero(); 3]], 3), 0);
        let c = vec![
            vec![Scalar::zero(), r.clone(), one.clone()],
            vec![Scalar::zero(), &r * &r, r.clone()],
            vec![one.clone(), Scalar::zero(), r.clone()],
        ];
        assert_eq!(rank_over_polynomials(&c, 3), 2);
    }
}
