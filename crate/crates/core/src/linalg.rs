//! Exact dense linear algebra over a field.
//!
//! Zero tests are exact (`is_zero`), so these routines are meant for exact
//! fields such as Q or Q(i). Floating linear algebra goes through nalgebra.

use num_traits::{Num, Signed};

/// A dense row-major matrix.
pub type Matrix<T> = Vec<Vec<T>>;

/// Reduced row echelon form. Returns the reduced matrix and pivot columns.
pub fn rref<T: Clone + Num>(mut m: Matrix<T>) -> (Matrix<T>, Vec<usize>) {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = T::one() / m[r][c].clone();
        for x in m[r].iter_mut() {
            *x = x.clone() * inv.clone();
        }
        for i in 0..rows {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                for j in 0..cols {
                    let v = m[r][j].clone() * f.clone();
                    m[i][j] = m[i][j].clone() - v;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (m, pivots)
}

pub fn rank<T: Clone + Num>(m: &Matrix<T>) -> usize {
    rref(m.clone()).1.len()
}

/// Basis of the right kernel `{v : m v = 0}`.
pub fn kernel<T: Clone + Num>(m: &Matrix<T>, cols: usize) -> Vec<Vec<T>> {
    let (red, pivots) = rref(m.clone());
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![T::zero(); cols];
            v[f] = T::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = T::zero() - red[row][f].clone();
            }
            v
        })
        .collect()
}

/// Determinant by Gaussian elimination.
pub fn determinant<T: Clone + Num>(m: &Matrix<T>) -> T {
    let n = m.len();
    let mut a = m.clone();
    let mut det = T::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return T::zero();
        };
        if p != c {
            a.swap(p, c);
            det = T::zero() - det;
        }
        let pivot = a[c][c].clone();
        det = det * pivot.clone();
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].clone() / pivot.clone();
            for j in c..n {
                let v = a[c][j].clone() * f.clone();
                a[i][j] = a[i][j].clone() - v;
            }
        }
    }
    det
}

/// Inertia `(positive, negative, zero)` of a symmetric matrix over an ordered
/// field, by symmetric Gaussian elimination (congruence only, so Sylvester's
/// law applies).
pub fn inertia<T: Clone + Num + Signed + PartialOrd>(m: &Matrix<T>) -> (usize, usize, usize) {
    let mut a = m.clone();
    let mut active: Vec<usize> = (0..a.len()).collect();
    let (mut pos, mut neg, mut zero) = (0, 0, 0);
    while !active.is_empty() {
        let pivot = active.iter().copied().find(|&i| !a[i][i].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                // All remaining diagonal entries vanish. Either some
                // off-diagonal entry is nonzero, and adding row/col j to i
                // makes a_ii = 2 a_ij nonzero, or the block is zero.
                let pair = active.iter().copied().find_map(|i| {
                    active
                        .iter()
                        .copied()
                        .find(|&j| j != i && !a[i][j].is_zero())
                        .map(|j| (i, j))
                });
                match pair {
                    Some((i, j)) => {
                        let n = a.len();
                        for k in 0..n {
                            let v = a[j][k].clone();
                            a[i][k] = a[i][k].clone() + v;
                        }
                        for k in 0..n {
                            let v = a[k][j].clone();
                            a[k][i] = a[k][i].clone() + v;
                        }
                        i
                    }
                    None => {
                        zero += active.len();
                        break;
                    }
                }
            }
        };
        let d = a[p][p].clone();
        if d.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        active.retain(|&i| i != p);
        for &i in &active {
            if a[i][p].is_zero() {
                continue;
            }
            let f = a[i][p].clone() / d.clone();
            for &j in &active {
                let v = a[p][j].clone() * f.clone();
                a[i][j] = a[i][j].clone() - v;
            }
        }
        for &i in &active {
            a[i][p] = T::zero();
            a[p][i] = T::zero();
        }
    }
    (pos, neg, zero)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use num_rational::BigRational;

    fn m(rows: &[&[i64]]) -> Matrix<BigRational> {
        rows.iter()
            .map(|r| r.iter().map(|&x| rat(x, 1)).collect())
            .collect()
    }

    #[test]
    fn kernel_of_rank_deficient_matrix() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6]]);
        assert_eq!(rank(&a), 1);
        let k = kernel(&a, 3);
        assert_eq!(k.len(), 2);
        for v in &k {
            for row in &a {
                let s: BigRational = row.iter().zip(v).map(|(x, y)| x * y).sum();
                assert_eq!(s, rat(0, 1));
            }
        }
    }

    #[test]
    fn determinant_small() {
        assert_eq!(
            determinant(&m(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]])),
            rat(2, 1)
        );
        assert_eq!(determinant(&m(&[&[-2, -1], &[-1, -2]])), rat(3, 1));
        assert_eq!(determinant(&m(&[&[1, 2], &[2, 4]])), rat(0, 1));
    }

    #[test]
    fn inertia_with_zero_diagonal() {
        assert_eq!(inertia(&m(&[&[0, 1], &[1, 0]])), (1, 1, 0));
        assert_eq!(inertia(&m(&[&[0, 0], &[0, 0]])), (0, 0, 2));
        assert_eq!(
            inertia(&m(&[&[0, 1, 1], &[1, 0, 1], &[1, 1, 0]])),
            (1, 2, 0)
        );
        assert_eq!(inertia(&m(&[&[-2, 2], &[2, -2]])), (0, 1, 1));
    }
}
